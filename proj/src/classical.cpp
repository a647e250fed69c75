// Copyright 2026 The streamift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <streamift/classical.hpp>

#include <algorithm>
#include <sstream>

namespace streamift
{

namespace
{

PolyMatrix classical_jacobian(const PolySystem &sys)
{
    PolyMatrix jac;
    for (const auto &p : sys.equations) {
        std::vector<Polynomial> row;
        for (std::size_t j = 0; j < sys.n(); ++j) {
            row.push_back(classical_partial(p, var_y(static_cast<std::uint32_t>(j + 1))));
        }
        jac.push_back(std::move(row));
    }
    return jac;
}

Point origin(const std::vector<Rational> &r0)
{
    Point pt;
    pt[var_x] = 0;
    for (std::size_t i = 0; i < r0.size(); ++i) {
        pt[var_y(static_cast<std::uint32_t>(i + 1))] = r0[i];
    }
    return pt;
}

} // namespace

HypothesisReport check_classical_hypotheses(const PolySystem &sys)
{
    sys.validate();
    HypothesisReport r;
    const Point pt = origin(sys.r0);
    for (const auto &p : sys.equations) {
        r.e_at_origin.push_back(eval(p, pt));
    }
    for (const auto &row : classical_jacobian(sys)) {
        std::vector<Rational> vals;
        for (const auto &entry : row) {
            vals.push_back(eval(entry, pt));
        }
        r.jacobian_at_origin.push_back(std::move(vals));
    }
    r.determinant = determinant(r.jacobian_at_origin);
    r.ok = r.determinant != 0
           && std::all_of(r.e_at_origin.begin(), r.e_at_origin.end(), [](const Rational &v) { return v == 0; });
    return r;
}

RationalOde build_rational_ode(const PolySystem &sys)
{
    HypothesisReport report = check_classical_hypotheses(sys);
    if (!report.ok) {
        throw hypothesis_failure(std::move(report));
    }
    const PolyMatrix jac = classical_jacobian(sys);
    std::vector<Polynomial> rhs;
    for (const auto &p : sys.equations) {
        rhs.push_back(-classical_partial(p, var_x));
    }
    const Polynomial g = determinant_bareiss(jac);
    const Rational inv = 1 / content(g);
    RationalOde out;
    out.names = sys.names;
    out.r0 = sys.r0;
    out.g = g * inv;
    for (auto &fi : cramer_numerators(jac, rhs)) {
        out.f.push_back(fi * inv);
    }
    return out;
}

OdeSystem build_classical_ode(const PolySystem &sys)
{
    const RationalOde rode = build_rational_ode(sys);
    const std::size_t n = rode.f.size();
    OdeSystem ode;
    ode.names = rode.names;
    ode.init = rode.r0;
    for (std::size_t i = 0; i < n; ++i) {
        ode.vars.push_back(var_y(static_cast<std::uint32_t>(i + 1)));
    }
    if (rode.g.is_constant()) {
        const Rational inv = 1 / rode.g.constant_term();
        for (const auto &fi : rode.f) {
            ode.rhs.push_back(fi * inv);
        }
        ode.validate();
        return ode;
    }
    const Polynomial w(var_w);
    Polynomial dg = classical_partial(rode.g, var_x);
    for (std::size_t i = 0; i < n; ++i) {
        const auto y = var_y(static_cast<std::uint32_t>(i + 1));
        ode.rhs.push_back(rode.f[i] * w);
        dg += classical_partial(rode.g, y) * rode.f[i] * w;
    }
    ode.rhs.push_back(-(w * w * dg));
    ode.vars.push_back(var_w);
    ode.names.push_back(fresh_inverse_name(rode.names));
    ode.init.push_back(1 / eval(rode.g, origin(rode.r0)));
    ode.validate();
    return ode;
}

std::vector<Coeffs> taylor_solve(const OdeSystem &ode, std::size_t k)
{
    return solve_streams(ode, k, SolveMode::Taylor);
}

ComparisonReport compare_methods(const PolySystem &sys, std::size_t k)
{
    const auto sde = solve_streams(derive_pipeline(sys), k);
    const auto ode = taylor_solve(build_classical_ode(sys), k);
    ComparisonReport r;
    r.k = k;
    for (std::size_t j = 0; j <= k && !r.first_disagreement; ++j) {
        for (std::size_t i = 0; i < sys.n(); ++i) {
            if (sde[i][j] != ode[i][j]) {
                r.first_disagreement = Disagreement{i, j, sde[i][j], ode[i][j]};
                break;
            }
        }
    }
    return r;
}

std::string format_comparison(const ComparisonReport &r, const std::vector<std::string> &names)
{
    std::ostringstream out;
    if (r.agree()) {
        out << "agree through k=" << r.k << '\n';
    } else {
        const auto &d = *r.first_disagreement;
        out << "disagree at " << names.at(d.unknown) << "(" << d.index << "): sde " << format_rational(d.stream_value)
            << ", ode " << format_rational(d.series_value) << '\n';
    }
    return out.str();
}

DerivativeSizeMetric derivative_size_metric(const PolySystem &sys)
{
    DerivativeSizeMetric m;
    for (std::size_t i = 0; i < sys.equations.size(); ++i) {
        const Polynomial d = stream_derivative(sys.equations[i], sys.order.for_equation(i));
        m.stream_monomials_unbound += d.size();
        m.stream_monomials += bind_initial(d, sys.r0).size();
        m.classical_monomials += classical_total_x_derivative(sys.equations[i]).size();
    }
    if (check_hypotheses(sys).ok) {
        m.derivable = true;
        const auto sg = build_term_graph(derive_pipeline(sys));
        const auto cg = build_term_graph(build_classical_ode(sys));
        m.stream_products = sg->products();
        m.stream_sums = sg->sums();
        m.classical_products = cg->products();
        m.classical_sums = cg->sums();
    }
    return m;
}

std::string format_metric(const DerivativeSizeMetric &m)
{
    std::ostringstream out;
    out << "stream_derivative_monomials=" << m.stream_monomials << '\n'
        << "stream_derivative_monomials_unbound=" << m.stream_monomials_unbound << '\n'
        << "classical_derivative_monomials=" << m.classical_monomials << '\n'
        << "derivable=" << (m.derivable ? "true" : "false") << '\n'
        << "stream_P=" << m.stream_products << '\n'
        << "stream_S=" << m.stream_sums << '\n'
        << "classical_P=" << m.classical_products << '\n'
        << "classical_S=" << m.classical_sums << '\n';
    return out.str();
}

} // namespace streamift

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


#include <streamift/ift.hpp>

#include <algorithm>
#include <sstream>

namespace streamift
{

hypothesis_failure::hypothesis_failure(HypothesisReport report)
    : std::runtime_error("stream IFT hypotheses fail:\n" + format_report(report)), report_(std::move(report))
{
}

std::string format_report(const HypothesisReport &r)
{
    std::ostringstream out;
    out << "E(0,r0):";
    for (const auto &v : r.e_at_origin) {
        out << ' ' << format_rational(v);
    }
    out << "\njacobian(0,r0,r0):\n";
    for (const auto &row : r.jacobian_at_origin) {
        out << " ";
        for (const auto &v : row) {
            out << ' ' << format_rational(v);
        }
        out << '\n';
    }
    out << "det: " << format_rational(r.determinant) << '\n';
    out << "status: " << (r.ok ? "ok" : "fail") << '\n';
    return out.str();
}

Rational determinant(RationalMatrix m)
{
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k] == 0) {
            ++p;
        }
        if (p == n) {
            return 0;
        }
        if (p != k) {
            std::swap(m[p], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) {
                continue;
            }
            const Rational factor = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) {
                m[i][j] -= factor * m[k][j];
            }
        }
    }
    return det;
}

Polynomial determinant_bareiss(PolyMatrix m)
{
    const std::size_t n = m.size();
    if (n == 0) {
        return Polynomial(1);
    }
    bool negate = false;
    Polynomial prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) {
                ++p;
            }
            if (p == n) {
                return Polynomial();
            }
            std::swap(m[p], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            }
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

Polynomial determinant_cofactor(const PolyMatrix &m)
{
    const std::size_t n = m.size();
    if (n == 0) {
        return Polynomial(1);
    }
    if (n == 1) {
        return m[0][0];
    }
    Polynomial det;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) {
            continue;
        }
        PolyMatrix minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Polynomial> row;
            for (std::size_t c = 0; c < n; ++c) {
                if (c != j) {
                    row.push_back(m[i][c]);
                }
            }
            minor.push_back(std::move(row));
        }
        Polynomial term = m[0][j] * determinant_cofactor(minor);
        if (j % 2 == 0) {
            det += term;
        } else {
            det -= term;
        }
    }
    return det;
}

std::vector<Polynomial> cramer_numerators(const PolyMatrix &m, const std::vector<Polynomial> &rhs)
{
    std::vector<Polynomial> out;
    for (std::size_t col = 0; col < m.size(); ++col) {
        PolyMatrix a = m;
        for (std::size_t i = 0; i < a.size(); ++i) {
            a[i][col] = rhs[i];
        }
        out.push_back(determinant_bareiss(std::move(a)));
    }
    return out;
}

namespace
{

Point origin_point(const std::vector<Rational> &r0)
{
    Point pt;
    pt[var_x] = 0;
    for (std::size_t i = 0; i < r0.size(); ++i) {
        const auto idx = static_cast<std::uint32_t>(i + 1);
        pt[var_y(idx)] = r0[i];
        pt[var_y0(idx)] = r0[i];
    }
    return pt;
}

} // namespace

HypothesisReport check_hypotheses(const PolySystem &sys, const DerivationOrder &order)
{
    sys.validate();
    HypothesisReport r;
    const Point pt = origin_point(sys.r0);
    for (const auto &p : sys.equations) {
        r.e_at_origin.push_back(eval(p, pt));
    }
    for (const auto &row : stream_jacobian(sys, order)) {
        std::vector<Rational> vals;
        for (const auto &entry : row) {
            vals.push_back(eval(entry, pt));
        }
        r.jacobian_at_origin.push_back(std::move(vals));
    }
    r.determinant = determinant(r.jacobian_at_origin);
    r.ok = r.determinant != 0 && std::all_of(r.e_at_origin.begin(), r.e_at_origin.end(), [](const Rational &v) {
               return v == 0;
           });
    return r;
}

HypothesisReport check_hypotheses(const PolySystem &sys)
{
    return check_hypotheses(sys, sys.order);
}

Rational RationalSde::g_at_origin() const
{
    return eval(g, origin_point(r0));
}

RationalSde build_rational_sde(const PolySystem &sys, const DerivationOrder &order)
{
    HypothesisReport report = check_hypotheses(sys, order);
    if (!report.ok) {
        throw hypothesis_failure(std::move(report));
    }
    const StreamPartials partials = stream_partials(sys, order);
    PolyMatrix jac;
    for (const auto &row : partials.jacobian) {
        std::vector<Polynomial> bound;
        for (const auto &entry : row) {
            bound.push_back(bind_initial(entry, sys.r0));
        }
        jac.push_back(std::move(bound));
    }
    std::vector<Polynomial> rhs;
    for (const auto &q0 : partials.x_partial) {
        rhs.push_back(-bind_initial(q0, sys.r0));
    }

    RationalSde out;
    out.names = sys.names;
    out.r0 = sys.r0;
    Polynomial g = determinant_bareiss(jac);
    std::vector<Polynomial> f = cramer_numerators(jac, rhs);
    out.scale = content(g);
    if (g.leading_term().second < 0) {
        out.scale = -out.scale;
    }
    const Rational inv = 1 / out.scale;
    out.g = g * inv;
    for (auto &fi : f) {
        out.f.push_back(fi * inv);
    }
    return out;
}

RationalSde build_rational_sde(const PolySystem &sys)
{
    return build_rational_sde(sys, sys.order);
}

std::string fresh_inverse_name(const std::vector<std::string> &names)
{
    auto taken = [&](const std::string &s) { return std::find(names.begin(), names.end(), s) != names.end(); };
    if (!taken("w")) {
        return "w";
    }
    for (std::size_t i = 1;; ++i) {
        std::string s = "w" + std::to_string(i);
        if (!taken(s)) {
            return s;
        }
    }
}

SdeSystem rational_to_polynomial(const RationalSde &rsde, const VarOrder &order)
{
    const std::size_t n = rsde.f.size();
    const Rational g0 = rsde.g_at_origin();
    if (g0 == 0) {
        throw std::domain_error("g vanishes at the origin");
    }
    SdeSystem sys;
    sys.names = rsde.names;
    for (std::size_t i = 0; i < n; ++i) {
        sys.vars.push_back(var_y(static_cast<std::uint32_t>(i + 1)));
    }
    sys.init = rsde.r0;

    if (rsde.g.is_constant()) {
        const Rational inv = 1 / rsde.g.constant_term();
        for (const auto &fi : rsde.f) {
            sys.rhs.push_back(fi * inv);
        }
        sys.validate();
        return sys;
    }

    const Polynomial w(var_w);
    std::map<VarId, Polynomial> primes;
    for (std::size_t i = 0; i < n; ++i) {
        primes.emplace(var_yp(static_cast<std::uint32_t>(i + 1)), rsde.f[i] * w);
        sys.rhs.push_back(rsde.f[i] * w);
    }
    const Polynomial dg = bind_initial(stream_derivative(rsde.g, order), rsde.r0);
    const Polynomial h = substitute(dg, primes);
    sys.rhs.push_back(h * w * Rational(-1 / g0));
    sys.vars.push_back(var_w);
    sys.names.push_back(fresh_inverse_name(rsde.names));
    sys.init.push_back(1 / g0);
    sys.validate();
    return sys;
}

SdeSystem derive_pipeline(const PolySystem &sys, const DerivationOrder &order)
{
    return rational_to_polynomial(build_rational_sde(sys, order), order.global);
}

SdeSystem derive_pipeline(const PolySystem &sys)
{
    return derive_pipeline(sys, sys.order);
}

} // namespace streamift

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


#include <streamift/stream_deriv.hpp>

#include <algorithm>

namespace streamift
{

namespace
{

void require_plain(const Polynomial &p)
{
    for (const auto &v : p.variables()) {
        if (v.kind != VarKind::X && v.kind != VarKind::Y) {
            throw malformed_polynomial("stream derivative expects a polynomial in x and y only");
        }
    }
}

} // namespace

Polynomial stream_derivative(const Polynomial &p, const VarOrder &order)
{
    require_plain(p);
    Polynomial out;
    std::vector<std::uint32_t> seq;
    for (const auto &[m, c] : p.terms()) {
        if (m.is_one()) {
            continue;
        }
        if (m.contains(var_x)) {
            out.add_term(c, m.without(var_x));
            continue;
        }
        seq.clear();
        for (const auto &[v, e] : m.factors()) {
            seq.insert(seq.end(), e, v.index);
        }
        std::stable_sort(seq.begin(), seq.end(),
                         [&](std::uint32_t a, std::uint32_t b) { return order.rank(a) < order.rank(b); });
        // sum over j of y0_{s_1..s_{j-1}} * y'_{s_j} * y_{s_{j+1}..s_d}
        for (std::size_t j = 0; j < seq.size(); ++j) {
            std::vector<Monomial::Factor> f;
            f.reserve(seq.size());
            for (std::size_t i = 0; i < j; ++i) {
                f.emplace_back(var_y0(seq[i]), 1);
            }
            f.emplace_back(var_yp(seq[j]), 1);
            for (std::size_t i = j + 1; i < seq.size(); ++i) {
                f.emplace_back(var_y(seq[i]), 1);
            }
            out.add_term(c, Monomial::from_factors(std::move(f)));
        }
    }
    return out;
}

Polynomial DerivDecomposition::reconstruct() const
{
    Polynomial r = q0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        r += q[i] * Polynomial(var_yp(static_cast<std::uint32_t>(i + 1)));
    }
    return r;
}

DerivDecomposition decompose(const Polynomial &dp, std::size_t n)
{
    DerivDecomposition d;
    d.q.resize(n);
    for (const auto &[m, c] : dp.terms()) {
        const Monomial::Factor *primed = nullptr;
        for (const auto &f : m.factors()) {
            if (f.first.kind != VarKind::YPrime) {
                continue;
            }
            if (primed != nullptr || f.second != 1) {
                throw decomposition_error("primed variable occurs nonlinearly");
            }
            primed = &f;
        }
        if (primed == nullptr) {
            d.q0.add_term(c, m);
            continue;
        }
        const auto i = primed->first.index;
        if (i < 1 || i > n) {
            throw decomposition_error("primed variable index out of range");
        }
        d.q[i - 1].add_term(c, m.without(primed->first));
    }
    return d;
}

StreamPartials stream_partials(const PolySystem &sys, const DerivationOrder &order)
{
    StreamPartials out;
    const std::size_t n = sys.n();
    for (std::size_t i = 0; i < sys.equations.size(); ++i) {
        auto d = decompose(stream_derivative(sys.equations[i], order.for_equation(i)), n);
        out.x_partial.push_back(std::move(d.q0));
        out.jacobian.push_back(std::move(d.q));
    }
    return out;
}

PolyMatrix stream_jacobian(const PolySystem &sys, const DerivationOrder &order)
{
    return stream_partials(sys, order).jacobian;
}

std::vector<Polynomial> stream_x_partial(const PolySystem &sys, const DerivationOrder &order)
{
    return stream_partials(sys, order).x_partial;
}

Polynomial bind_initial(const Polynomial &p, const std::vector<Rational> &r0)
{
    std::map<VarId, Polynomial> b;
    for (std::size_t i = 0; i < r0.size(); ++i) {
        b.emplace(var_y0(static_cast<std::uint32_t>(i + 1)), Polynomial(r0[i]));
    }
    return substitute(p, b);
}

Polynomial classical_partial(const Polynomial &p, VarId v)
{
    Polynomial out;
    for (const auto &[m, c] : p.terms()) {
        const Exponent e = m.exponent(v);
        if (e != 0) {
            out.add_term(c * e, m.without(v));
        }
    }
    return out;
}

Polynomial classical_total_x_derivative(const Polynomial &p)
{
    require_plain(p);
    Polynomial out = classical_partial(p, var_x);
    for (const auto &v : p.variables()) {
        if (v.kind == VarKind::Y) {
            out += classical_partial(p, v) * Polynomial(var_yp(v.index));
        }
    }
    return out;
}

} // namespace streamift

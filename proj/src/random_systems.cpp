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


#include <streamift/random_systems.hpp>

#include <algorithm>
#include <numeric>

namespace streamift
{

namespace
{

long uniform(std::mt19937_64 &rng, long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

} // namespace

Polynomial random_polynomial(std::mt19937_64 &rng, const RandomPolyShape &shape)
{
    std::vector<VarId> vars;
    if (shape.with_x) {
        vars.push_back(var_x);
    }
    for (std::uint32_t i = 1; i <= shape.n; ++i) {
        vars.push_back(var_y(i));
    }
    Polynomial p;
    const auto terms = uniform(rng, 1, static_cast<long>(shape.max_terms));
    for (long t = 0; t < terms; ++t) {
        const auto degree = uniform(rng, 0, shape.max_degree);
        std::vector<Monomial::Factor> f;
        for (long d = 0; d < degree && !vars.empty(); ++d) {
            f.emplace_back(vars[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(vars.size()) - 1))], 1);
        }
        long c = uniform(rng, 1, shape.coeff_bound);
        if (uniform(rng, 0, 1) == 1) {
            c = -c;
        }
        p.add_term(Rational(c), Monomial::from_factors(std::move(f)));
    }
    return p;
}

PolySystem random_guarded_system(std::mt19937_64 &rng, const RandomPolyShape &shape, long init_bound)
{
    PolySystem sys;
    for (std::uint32_t i = 1; i <= shape.n; ++i) {
        sys.names.push_back("y" + std::to_string(i));
        const Rational c(uniform(rng, -init_bound, init_bound));
        const Polynomial guard = Polynomial(var_x) * random_polynomial(rng, shape);
        sys.equations.push_back(Polynomial(var_y(i)) - (Polynomial(c) + guard));
        sys.r0.push_back(c);
    }
    sys.order = VarOrder::identity(shape.n);
    sys.validate();
    return sys;
}

VarOrder random_order(std::mt19937_64 &rng, std::size_t n)
{
    std::vector<std::uint32_t> seq(n);
    std::iota(seq.begin(), seq.end(), 1u);
    std::shuffle(seq.begin(), seq.end(), rng);
    return VarOrder::from_sequence(std::move(seq));
}

} // namespace streamift

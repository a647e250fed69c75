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


#ifndef STREAMIFT_CLASSICAL_HPP
#define STREAMIFT_CLASSICAL_HPP

#include <streamift/ift.hpp>
#include <streamift/stream_engine.hpp>

#include <optional>
#include <string>

namespace streamift
{

// dy/dx = f / g from the ordinary Jacobian, g = det up to a positive constant.
struct RationalOde {
    std::vector<std::string> names;
    std::vector<Polynomial> f;
    Polynomial g;
    std::vector<Rational> r0;
};

// Hypotheses on the ordinary Jacobian at (0, r0).
HypothesisReport check_classical_hypotheses(const PolySystem &sys);

RationalOde build_rational_ode(const PolySystem &sys);

// Polynomial form with w = 1/g, dw/dx = -w^2 * dg/dx; w is elided when g is
// constant.
OdeSystem build_classical_ode(const PolySystem &sys);

// Power series coefficients 0..k of every variable.
std::vector<Coeffs> taylor_solve(const OdeSystem &ode, std::size_t k);

struct Disagreement {
    std::size_t unknown; // 0-based
    std::size_t index;
    Rational stream_value;
    Rational series_value;
};

struct ComparisonReport {
    std::size_t k = 0;
    std::optional<Disagreement> first_disagreement;

    bool agree() const
    {
        return !first_disagreement;
    }
};

ComparisonReport compare_methods(const PolySystem &sys, std::size_t k);
std::string format_comparison(const ComparisonReport &r, const std::vector<std::string> &names);

struct DerivativeSizeMetric {
    std::size_t stream_monomials = 0;         // E' with y0 bound to r0
    std::size_t stream_monomials_unbound = 0; // E' with symbolic y0
    std::size_t classical_monomials = 0;
    bool derivable = false;
    std::size_t stream_products = 0;
    std::size_t stream_sums = 0;
    std::size_t classical_products = 0;
    std::size_t classical_sums = 0;
};

// Monomial counts of E' (as used by the derivation, y0 = r0) against
// (d/dx)E, and the P, S counts of both derived
// systems (zero when the hypotheses fail).
DerivativeSizeMetric derivative_size_metric(const PolySystem &sys);
std::string format_metric(const DerivativeSizeMetric &m);

} // namespace streamift

#endif

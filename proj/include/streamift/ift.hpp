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


#ifndef STREAMIFT_IFT_HPP
#define STREAMIFT_IFT_HPP

#include <streamift/stream_deriv.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace streamift
{

using RationalMatrix = std::vector<std::vector<Rational>>;

struct HypothesisReport {
    std::vector<Rational> e_at_origin;
    RationalMatrix jacobian_at_origin;
    Rational determinant;
    bool ok = false;
};

std::string format_report(const HypothesisReport &r);

class hypothesis_failure : public std::runtime_error
{
public:
    explicit hypothesis_failure(HypothesisReport report);

    const HypothesisReport &report() const
    {
        return report_;
    }

private:
    HypothesisReport report_;
};

// Gaussian elimination over the rationals.
Rational determinant(RationalMatrix m);

// Fraction-free elimination over the polynomial ring.
Polynomial determinant_bareiss(PolyMatrix m);

// Laplace expansion along the first row; exponential, meant for small n.
Polynomial determinant_cofactor(const PolyMatrix &m);

// Cramer numerators: det of m with column i replaced by rhs.
std::vector<Polynomial> cramer_numerators(const PolyMatrix &m, const std::vector<Polynomial> &rhs);

HypothesisReport check_hypotheses(const PolySystem &sys, const DerivationOrder &order);
HypothesisReport check_hypotheses(const PolySystem &sys);

// y_i' = f_i / g with y0 bound to r0. g is scaled to coprime integer
// coefficients with a positive leading term; raw_det = scale * g where raw_det
// is the stream Jacobian determinant.
struct RationalSde {
    std::vector<std::string> names;
    std::vector<Polynomial> f;
    Polynomial g;
    std::vector<Rational> r0;
    Rational scale;

    // g(0, r0).
    Rational g_at_origin() const;
};

RationalSde build_rational_sde(const PolySystem &sys, const DerivationOrder &order);
RationalSde build_rational_sde(const PolySystem &sys);

// Adjoins w = 1/g, or divides through when g is constant. g' is taken with
// respect to order.
SdeSystem rational_to_polynomial(const RationalSde &rsde, const VarOrder &order);

SdeSystem derive_pipeline(const PolySystem &sys, const DerivationOrder &order);
SdeSystem derive_pipeline(const PolySystem &sys);

// Name for the adjoined inverse variable that clashes with none of names.
std::string fresh_inverse_name(const std::vector<std::string> &names);

} // namespace streamift

#endif

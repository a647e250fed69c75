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


#ifndef STREAMIFT_STREAM_DERIV_HPP
#define STREAMIFT_STREAM_DERIV_HPP

#include <streamift/system.hpp>

#include <stdexcept>
#include <vector>

namespace streamift
{

// Input polynomial outside the expected variable set.
class malformed_polynomial : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// A primed variable occurs nonlinearly, so the input is no stream derivative.
class decomposition_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Syntactic stream derivative of a polynomial in x and y_1..y_n. The result
// lives in x, y0, y, y'.
Polynomial stream_derivative(const Polynomial &p, const VarOrder &order);

// dp = q0 + sum_i q[i-1] * y'_i.
struct DerivDecomposition {
    Polynomial q0;
    std::vector<Polynomial> q;

    Polynomial reconstruct() const;
};

// Splits dp by its linear y' occurrences; n fixes the length of q.
DerivDecomposition decompose(const Polynomial &dp, std::size_t n);

// Stream partials of every equation: x_partial[i] and jacobian[i][j].
struct StreamPartials {
    std::vector<Polynomial> x_partial;
    PolyMatrix jacobian;
};

StreamPartials stream_partials(const PolySystem &sys, const DerivationOrder &order);
PolyMatrix stream_jacobian(const PolySystem &sys, const DerivationOrder &order);
std::vector<Polynomial> stream_x_partial(const PolySystem &sys, const DerivationOrder &order);

// Replaces y0_i by r0[i-1].
Polynomial bind_initial(const Polynomial &p, const std::vector<Rational> &r0);

// Ordinary partial derivative.
Polynomial classical_partial(const Polynomial &p, VarId v);

// dp/dx + sum_i dp/dy_i * y'_i for p in x and y_1..y_n.
Polynomial classical_total_x_derivative(const Polynomial &p);

} // namespace streamift

#endif

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


#ifndef STREAMIFT_RANDOM_SYSTEMS_HPP
#define STREAMIFT_RANDOM_SYSTEMS_HPP

#include <streamift/system.hpp>

#include <random>

namespace streamift
{

struct RandomPolyShape {
    std::size_t n = 2;          // unknowns y_1..y_n
    unsigned max_degree = 3;
    std::size_t max_terms = 4;
    long coeff_bound = 9;       // nonzero coefficients in [-b, b]
    bool with_x = true;
};

// Random polynomial in x (if shape.with_x) and y_1..y_n.
Polynomial random_polynomial(std::mt19937_64 &rng, const RandomPolyShape &shape);

// y_i - (c_i + x * p_i) with random integer c_i in [-init_bound, init_bound]
// and random p_i; r0 = c.
PolySystem random_guarded_system(std::mt19937_64 &rng, const RandomPolyShape &shape, long init_bound = 2);

// Uniformly random permutation order on n unknowns.
VarOrder random_order(std::mt19937_64 &rng, std::size_t n);

} // namespace streamift

#endif

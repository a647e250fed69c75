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

#ifndef STREAMIFT_SYSTEM_HPP
#define STREAMIFT_SYSTEM_HPP

#include <streamift/polynomial.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace streamift
{

// Total order on the unknowns y_1..y_n used by the syntactic stream
// derivative. x is always the least variable.
class VarOrder
{
public:
    VarOrder() = default;
    // Identity order on n unknowns.
    static VarOrder identity(std::size_t n);
    // sequence lists the 1-based unknown indices from least to greatest and
    // must be a permutation of 1..n.
    static VarOrder from_sequence(std::vector<std::uint32_t> sequence);

    std::size_t size() const
    {
        return sequence_.size();
    }
    const std::vector<std::uint32_t> &sequence() const
    {
        return sequence_;
    }
    // Position of y_i in the order, 0 = least. Indices beyond size() rank
    // after every ordered unknown, by index.
    std::size_t rank(std::uint32_t i) const;

    friend bool operator==(const VarOrder &, const VarOrder &) = default;

private:
    std::vector<std::uint32_t> sequence_;
    std::vector<std::size_t> rank_;
};

// Orders used while differentiating a system: one global order plus optional
// per-equation overrides.
struct DerivationOrder {
    VarOrder global;
    std::vector<std::optional<VarOrder>> per_equation;

    DerivationOrder() = default;
    DerivationOrder(VarOrder g) : global(std::move(g)) {}

    const VarOrder &for_equation(std::size_t i) const;
};

// n polynomial equations p_i(x, y_1..y_n) = 0 and the initial tuple r0.
struct PolySystem {
    std::vector<std::string> names;
    std::vector<Polynomial> equations;
    std::vector<Rational> r0;
    DerivationOrder order;

    std::size_t n() const
    {
        return names.size();
    }
    VarNames var_names() const;
    // Throws std::invalid_argument when sizes disagree, n = 0, an equation is
    // zero or mentions anything but x and y_1..y_n.
    void validate() const;
};

// Polynomial initial value problem y_i' = rhs_i, y_i(0) = init_i over the
// variables vars (Y kinds and at most one W), with x as the independent
// variable.
struct IvpSystem {
    std::vector<VarId> vars;
    std::vector<std::string> names;
    std::vector<Polynomial> rhs;
    std::vector<Rational> init;

    std::size_t size() const
    {
        return vars.size();
    }
    VarNames var_names() const;
    // Index of v in vars, or size() if absent.
    std::size_t index_of(VarId v) const;
    void validate() const;
};

// Stream differential equations: y' is the stream derivative (tail).
struct SdeSystem : IvpSystem {
};

// Ordinary differential equations d/dx solved as formal power series.
struct OdeSystem : IvpSystem {
};

} // namespace streamift

#endif

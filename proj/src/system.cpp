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

#include <streamift/system.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace streamift
{

VarOrder VarOrder::identity(std::size_t n)
{
    std::vector<std::uint32_t> seq(n);
    std::iota(seq.begin(), seq.end(), 1u);
    return from_sequence(std::move(seq));
}

VarOrder VarOrder::from_sequence(std::vector<std::uint32_t> sequence)
{
    const std::size_t n = sequence.size();
    VarOrder o;
    o.rank_.assign(n, n);
    for (std::size_t pos = 0; pos < n; ++pos) {
        const auto i = sequence[pos];
        if (i < 1 || i > n || o.rank_[i - 1] != n) {
            throw std::invalid_argument("variable order is not a permutation of 1.." + std::to_string(n));
        }
        o.rank_[i - 1] = pos;
    }
    o.sequence_ = std::move(sequence);
    return o;
}

std::size_t VarOrder::rank(std::uint32_t i) const
{
    if (i >= 1 && i <= rank_.size()) {
        return rank_[i - 1];
    }
    return rank_.size() + i;
}

const VarOrder &DerivationOrder::for_equation(std::size_t i) const
{
    if (i < per_equation.size() && per_equation[i]) {
        return *per_equation[i];
    }
    return global;
}

VarNames PolySystem::var_names() const
{
    VarNames v;
    v.y = names;
    return v;
}

void PolySystem::validate() const
{
    const std::size_t n = names.size();
    if (n == 0) {
        throw std::invalid_argument("system has no unknowns");
    }
    if (equations.size() != n) {
        throw std::invalid_argument("system declares " + std::to_string(n) + " unknowns but "
                                    + std::to_string(equations.size()) + " equations");
    }
    if (r0.size() != n) {
        throw std::invalid_argument("system declares " + std::to_string(n) + " unknowns but "
                                    + std::to_string(r0.size()) + " initial values");
    }
    std::set<std::string> seen;
    for (const auto &nm : names) {
        if (nm == "x" || !seen.insert(nm).second) {
            throw std::invalid_argument("invalid or duplicate unknown name '" + nm + "'");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (equations[i].is_zero()) {
            throw std::invalid_argument("equation " + std::to_string(i + 1) + " is zero");
        }
        for (const auto &v : equations[i].variables()) {
            if (v.kind != VarKind::X && !(v.kind == VarKind::Y && v.index >= 1 && v.index <= n)) {
                throw std::invalid_argument("equation " + std::to_string(i + 1) + " mentions a variable outside x, y");
            }
        }
    }
    if (order.global.size() != 0 && order.global.size() != n) {
        throw std::invalid_argument("variable order size mismatch");
    }
    for (const auto &o : order.per_equation) {
        if (o && o->size() != n) {
            throw std::invalid_argument("per-equation variable order size mismatch");
        }
    }
}

VarNames IvpSystem::var_names() const
{
    VarNames v;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i].kind == VarKind::W) {
            v.w = names[i];
        } else {
            if (v.y.size() < vars[i].index) {
                v.y.resize(vars[i].index);
            }
            v.y[vars[i].index - 1] = names[i];
        }
    }
    return v;
}

std::size_t IvpSystem::index_of(VarId v) const
{
    return static_cast<std::size_t>(std::find(vars.begin(), vars.end(), v) - vars.begin());
}

void IvpSystem::validate() const
{
    const std::size_t m = vars.size();
    if (names.size() != m || rhs.size() != m || init.size() != m) {
        throw std::invalid_argument("initial value problem has mismatched vars/rhs/init sizes");
    }
    std::set<VarId> declared(vars.begin(), vars.end());
    if (declared.size() != m) {
        throw std::invalid_argument("duplicate variable in initial value problem");
    }
    for (const auto &v : vars) {
        if (v.kind != VarKind::Y && v.kind != VarKind::W) {
            throw std::invalid_argument("initial value problem variables must be unknowns or w");
        }
    }
    for (const auto &p : rhs) {
        for (const auto &v : p.variables()) {
            if (v.kind != VarKind::X && declared.count(v) == 0) {
                throw std::invalid_argument("right-hand side mentions an undeclared variable");
            }
        }
    }
}

} // namespace streamift

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


#ifndef STREAMIFT_STREAM_ENGINE_HPP
#define STREAMIFT_STREAM_ENGINE_HPP

#include <streamift/system.hpp>

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <tuple>
#include <stdexcept>
#include <vector>

namespace streamift
{

class not_invertible : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Truncated Cauchy product through index k; a and b need k + 1 entries.
Coeffs convolve(const Coeffs &a, const Coeffs &b, std::size_t k);

// Convolution inverse through index k; throws not_invertible if a[0] = 0.
Coeffs stream_inverse(const Coeffs &a, std::size_t k);

// X as a coefficient vector of length k + 1.
Coeffs x_stream(std::size_t k);

// Streams bound to variables, each with at least k + 1 entries.
using StreamBinding = std::map<VarId, Coeffs>;

// p(X, streams) through index k by repeated convolution. X is bound
// implicitly unless present in streams.
Coeffs evaluate_on_streams(const Polynomial &p, const StreamBinding &streams, std::size_t k);

enum class NodeKind : std::uint8_t { Const, Var, Sum, Product, Scale };

struct TermNode {
    NodeKind kind;
    Rational value;         // Const value, Scale factor
    VarId var;              // Var
    std::size_t lhs = 0;    // Sum, Product, Scale operand
    std::size_t rhs = 0;    // Sum, Product
};

// Shared subterm DAG of a polynomial initial value problem. Nodes are in
// topological order, children first.
class TermGraph
{
public:
    // Horner factoring: with an explicit variable list, always split on the
    // first listed variable present; with an empty list, split on the
    // variable occurring in the most terms.
    explicit TermGraph(const IvpSystem &sys, std::vector<VarId> horner = {});

    const std::vector<TermNode> &nodes() const
    {
        return nodes_;
    }
    const IvpSystem &system() const
    {
        return system_;
    }
    // Node of the i-th system variable and of its right-hand side.
    std::size_t var_node(std::size_t i) const
    {
        return var_nodes_[i];
    }
    std::size_t root(std::size_t i) const
    {
        return roots_[i];
    }
    std::size_t x_node() const
    {
        return x_node_;
    }
    std::size_t one_node() const
    {
        return one_node_;
    }
    std::size_t products() const;
    std::size_t sums() const;

private:
    std::size_t intern(TermNode node);
    std::size_t constant(const Rational &c);
    std::size_t sum(std::size_t a, std::size_t b);
    std::size_t product(std::size_t a, std::size_t b);
    std::size_t scale(const Rational &c, std::size_t a);
    std::size_t build(const Polynomial &p);

    IvpSystem system_;
    std::vector<VarId> horner_;
    bool greedy_;
    std::map<VarId, std::size_t> var_index_;
    std::vector<TermNode> nodes_;
    std::map<std::tuple<NodeKind, Rational, VarId, std::size_t, std::size_t>, std::size_t> interned_;
    std::vector<std::size_t> var_nodes_;
    std::vector<std::size_t> roots_;
    std::size_t x_node_ = 0;
    std::size_t one_node_ = 0;
};

std::shared_ptr<const TermGraph> build_term_graph(const IvpSystem &sys, std::vector<VarId> horner = {});

// Stream: a variable's next coefficient is its right-hand side's current one.
// Taylor: the same divided by the new index, giving power series solutions of
// the ODE reading.
enum class SolveMode { Stream, Taylor };

// Lazily extended coefficient table over a term graph.
class StreamSolution
{
public:
    explicit StreamSolution(std::shared_ptr<const TermGraph> graph, SolveMode mode = SolveMode::Stream);

    // Populates every row through index k; never rewrites earlier entries.
    void extend(std::size_t k);
    // Highest fully populated index, or nullopt before the first extend.
    std::optional<std::size_t> computed_upto() const
    {
        return computed_;
    }
    const Coeffs &stream(std::size_t i) const;
    const Coeffs &row(std::size_t node) const
    {
        return rows_[node];
    }
    const TermGraph &graph() const
    {
        return *graph_;
    }
    SolveMode mode() const
    {
        return mode_;
    }

private:
    void compute(std::size_t node, std::size_t k);

    std::shared_ptr<const TermGraph> graph_;
    SolveMode mode_;
    std::vector<Coeffs> rows_;
    std::vector<char> integral_;
    std::optional<std::size_t> computed_;
};

// Convenience: solve sys through index k; one vector per system variable.
std::vector<Coeffs> solve_streams(const IvpSystem &sys, std::size_t k, SolveMode mode = SolveMode::Stream);

// Reference solver re-evaluating every right-hand side on the truncated
// streams at each step.
std::vector<Coeffs> naive_coefficients(const IvpSystem &sys, std::size_t k, SolveMode mode = SolveMode::Stream);

// Each equation of sys evaluated on the solution streams y_1..y_n through k.
std::vector<Coeffs> residual(const PolySystem &sys, const StreamSolution &sol, std::size_t k);
std::vector<Coeffs> residual(const PolySystem &sys, const std::vector<Coeffs> &streams, std::size_t k);

} // namespace streamift

#endif

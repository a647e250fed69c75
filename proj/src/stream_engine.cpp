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


#include <streamift/stream_engine.hpp>

#include <algorithm>

namespace streamift
{

namespace
{

bool integral(const Rational &q)
{
    return mpz_cmp_ui(mpq_denref(q.get_mpq_t()), 1) == 0;
}

bool all_integral(const Coeffs &a, std::size_t upto)
{
    for (std::size_t i = 0; i <= upto; ++i) {
        if (!integral(a[i])) {
            return false;
        }
    }
    return true;
}

// sum_{j=0..k} a[j] * b[k-j]
Rational dot(const Coeffs &a, const Coeffs &b, std::size_t k, bool ints, bool square)
{
    if (ints) {
        mpz_class acc;
        mpz_ptr out = acc.get_mpz_t();
        auto num = [](const Rational &q) { return mpq_numref(q.get_mpq_t()); };
        if (square) {
            for (std::size_t j = 0; 2 * j < k; ++j) {
                mpz_addmul(out, num(a[j]), num(a[k - j]));
            }
            acc *= 2;
            if (k % 2 == 0) {
                mpz_addmul(out, num(a[k / 2]), num(a[k / 2]));
            }
        } else {
            for (std::size_t j = 0; j <= k; ++j) {
                mpz_addmul(out, num(a[j]), num(b[k - j]));
            }
        }
        return Rational(acc);
    }
    Rational acc;
    Rational t;
    if (square) {
        for (std::size_t j = 0; 2 * j < k; ++j) {
            mpq_mul(t.get_mpq_t(), a[j].get_mpq_t(), a[k - j].get_mpq_t());
            acc += t;
        }
        acc *= 2;
        if (k % 2 == 0) {
            acc += a[k / 2] * a[k / 2];
        }
    } else {
        for (std::size_t j = 0; j <= k; ++j) {
            mpq_mul(t.get_mpq_t(), a[j].get_mpq_t(), b[k - j].get_mpq_t());
            acc += t;
        }
    }
    return acc;
}

void require_length(const Coeffs &a, std::size_t k, const char *what)
{
    if (a.size() <= k) {
        throw std::invalid_argument(std::string(what) + ": stream shorter than k + 1 coefficients");
    }
}

} // namespace

Coeffs convolve(const Coeffs &a, const Coeffs &b, std::size_t k)
{
    require_length(a, k, "convolve");
    require_length(b, k, "convolve");
    const bool ints = all_integral(a, k) && all_integral(b, k);
    Coeffs out(k + 1);
    for (std::size_t i = 0; i <= k; ++i) {
        out[i] = dot(a, b, i, ints, false);
    }
    return out;
}

Coeffs stream_inverse(const Coeffs &a, std::size_t k)
{
    require_length(a, k, "stream_inverse");
    if (a[0] == 0) {
        throw not_invertible("stream with zero constant term has no inverse");
    }
    const Rational inv0 = 1 / a[0];
    Coeffs out(k + 1);
    out[0] = inv0;
    for (std::size_t j = 1; j <= k; ++j) {
        Rational acc;
        for (std::size_t i = 1; i <= j; ++i) {
            acc += a[i] * out[j - i];
        }
        out[j] = -inv0 * acc;
    }
    return out;
}

Coeffs x_stream(std::size_t k)
{
    Coeffs x(k + 1);
    if (k >= 1) {
        x[1] = 1;
    }
    return x;
}

Coeffs evaluate_on_streams(const Polynomial &p, const StreamBinding &streams, std::size_t k)
{
    const Coeffs x = x_stream(k);
    std::map<std::pair<VarId, Exponent>, Coeffs> powers;
    auto power = [&](VarId v, Exponent e) -> const Coeffs & {
        auto it = powers.find({v, e});
        if (it != powers.end()) {
            return it->second;
        }
        const Coeffs *base = nullptr;
        if (auto s = streams.find(v); s != streams.end()) {
            base = &s->second;
        } else if (v == var_x) {
            base = &x;
        } else {
            throw unbound_variable("no stream bound to a variable of the polynomial");
        }
        require_length(*base, k, "evaluate_on_streams");
        Coeffs r(base->begin(), base->begin() + static_cast<std::ptrdiff_t>(k + 1));
        for (Exponent i = 1; i < e; ++i) {
            r = convolve(r, *base, k);
        }
        return powers.emplace(std::make_pair(v, e), std::move(r)).first->second;
    };

    Coeffs out(k + 1);
    for (const auto &[m, c] : p.terms()) {
        Coeffs acc(k + 1);
        acc[0] = 1;
        for (const auto &[v, e] : m.factors()) {
            acc = convolve(acc, power(v, e), k);
        }
        for (std::size_t i = 0; i <= k; ++i) {
            out[i] += c * acc[i];
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// TermGraph

TermGraph::TermGraph(const IvpSystem &sys, std::vector<VarId> horner)
    : system_(sys), horner_(std::move(horner)), greedy_(horner_.empty())
{
    system_.validate();
    if (horner_.empty()) {
        horner_.push_back(var_x);
        horner_.insert(horner_.end(), system_.vars.begin(), system_.vars.end());
    }
    for (const auto &v : system_.vars) {
        if (std::find(horner_.begin(), horner_.end(), v) == horner_.end()) {
            horner_.push_back(v);
        }
    }
    if (std::find(horner_.begin(), horner_.end(), var_x) == horner_.end()) {
        horner_.push_back(var_x);
    }
    one_node_ = constant(1);
    x_node_ = intern({NodeKind::Var, 0, var_x});
    var_index_[var_x] = x_node_;
    for (const auto &v : system_.vars) {
        const auto id = intern({NodeKind::Var, 0, v});
        var_nodes_.push_back(id);
        var_index_[v] = id;
    }
    for (const auto &p : system_.rhs) {
        roots_.push_back(build(p));
    }
}

std::size_t TermGraph::intern(TermNode node)
{
    auto key = std::make_tuple(node.kind, node.value, node.var, node.lhs, node.rhs);
    auto it = interned_.find(key);
    if (it != interned_.end()) {
        return it->second;
    }
    const std::size_t id = nodes_.size();
    nodes_.push_back(std::move(node));
    interned_.emplace(std::move(key), id);
    return id;
}

std::size_t TermGraph::constant(const Rational &c)
{
    return intern({NodeKind::Const, c, var_x});
}

std::size_t TermGraph::sum(std::size_t a, std::size_t b)
{
    const auto &na = nodes_[a];
    const auto &nb = nodes_[b];
    if (na.kind == NodeKind::Const && nb.kind == NodeKind::Const) {
        return constant(na.value + nb.value);
    }
    if (na.kind == NodeKind::Const && na.value == 0) {
        return b;
    }
    if (nb.kind == NodeKind::Const && nb.value == 0) {
        return a;
    }
    return intern({NodeKind::Sum, 0, var_x, std::min(a, b), std::max(a, b)});
}

std::size_t TermGraph::scale(const Rational &c, std::size_t a)
{
    const auto &na = nodes_[a];
    if (c == 0) {
        return constant(0);
    }
    if (c == 1) {
        return a;
    }
    if (na.kind == NodeKind::Const) {
        return constant(c * na.value);
    }
    if (na.kind == NodeKind::Scale) {
        return scale(c * na.value, na.lhs);
    }
    return intern({NodeKind::Scale, c, var_x, a});
}

std::size_t TermGraph::product(std::size_t a, std::size_t b)
{
    if (nodes_[a].kind == NodeKind::Const) {
        return scale(nodes_[a].value, b);
    }
    if (nodes_[b].kind == NodeKind::Const) {
        return scale(nodes_[b].value, a);
    }
    return intern({NodeKind::Product, 0, var_x, std::min(a, b), std::max(a, b)});
}

// Recursive Horner split p = p0 + v * p1.
std::size_t TermGraph::build(const Polynomial &p)
{
    if (p.is_constant()) {
        return constant(p.constant_term());
    }
    VarId v = var_x;
    if (greedy_) {
        // the variable occurring in most terms; ties go to the earlier one
        std::map<VarId, std::size_t> freq;
        for (const auto &[m, c] : p.terms()) {
            for (const auto &f : m.factors()) {
                ++freq[f.first];
            }
        }
        std::size_t best = 0;
        for (const auto &u : horner_) {
            auto it = freq.find(u);
            if (it != freq.end() && it->second > best) {
                best = it->second;
                v = u;
            }
        }
    } else {
        const auto vars = p.variables();
        v = *std::find_if(horner_.begin(), horner_.end(), [&](VarId u) { return vars.count(u) != 0; });
    }
    Polynomial p0;
    Polynomial p1;
    for (const auto &[m, c] : p.terms()) {
        if (m.contains(v)) {
            p1.add_term(c, m.without(v));
        } else {
            p0.add_term(c, m);
        }
    }
    const std::size_t head = product(var_index_.at(v), build(p1));
    return p0.is_zero() ? head : sum(build(p0), head);
}

std::size_t TermGraph::products() const
{
    return static_cast<std::size_t>(
        std::count_if(nodes_.begin(), nodes_.end(), [](const TermNode &n) { return n.kind == NodeKind::Product; }));
}

std::size_t TermGraph::sums() const
{
    return static_cast<std::size_t>(
        std::count_if(nodes_.begin(), nodes_.end(), [](const TermNode &n) { return n.kind == NodeKind::Sum; }));
}

std::shared_ptr<const TermGraph> build_term_graph(const IvpSystem &sys, std::vector<VarId> horner)
{
    return std::make_shared<const TermGraph>(sys, std::move(horner));
}

// ---------------------------------------------------------------------------
// StreamSolution

StreamSolution::StreamSolution(std::shared_ptr<const TermGraph> graph, SolveMode mode)
    : graph_(std::move(graph)), mode_(mode), rows_(graph_->nodes().size()), integral_(rows_.size(), 1)
{
}

const Coeffs &StreamSolution::stream(std::size_t i) const
{
    return rows_[graph_->var_node(i)];
}

void StreamSolution::compute(std::size_t id, std::size_t k)
{
    const TermNode &node = graph_->nodes()[id];
    Rational value;
    switch (node.kind) {
    case NodeKind::Const:
        if (k == 0) {
            value = node.value;
        }
        break;
    case NodeKind::Var:
        if (k == 0) {
            if (node.var != var_x) {
                value = graph_->system().init[graph_->system().index_of(node.var)];
            }
        } else {
            const std::size_t root =
                node.var == var_x ? graph_->one_node() : graph_->root(graph_->system().index_of(node.var));
            value = rows_[root][k - 1];
            if (mode_ == SolveMode::Taylor) {
                value /= static_cast<unsigned long>(k);
            }
        }
        break;
    case NodeKind::Sum:
        value = rows_[node.lhs][k] + rows_[node.rhs][k];
        break;
    case NodeKind::Scale:
        value = node.value * rows_[node.lhs][k];
        break;
    case NodeKind::Product:
        value = dot(rows_[node.lhs], rows_[node.rhs], k, integral_[node.lhs] && integral_[node.rhs],
                    node.lhs == node.rhs);
        break;
    }
    if (!integral(value)) {
        integral_[id] = 0;
    }
    rows_[id].push_back(std::move(value));
}

void StreamSolution::extend(std::size_t k)
{
    const auto &nodes = graph_->nodes();
    for (std::size_t j = computed_ ? *computed_ + 1 : 0; j <= k; ++j) {
        for (std::size_t id = 0; id < nodes.size(); ++id) {
            if (nodes[id].kind == NodeKind::Var) {
                compute(id, j);
            }
        }
        for (std::size_t id = 0; id < nodes.size(); ++id) {
            if (nodes[id].kind != NodeKind::Var) {
                compute(id, j);
            }
        }
        computed_ = j;
    }
}

std::vector<Coeffs> solve_streams(const IvpSystem &sys, std::size_t k, SolveMode mode)
{
    StreamSolution sol(build_term_graph(sys), mode);
    sol.extend(k);
    std::vector<Coeffs> out;
    for (std::size_t i = 0; i < sys.size(); ++i) {
        out.push_back(sol.stream(i));
    }
    return out;
}

std::vector<Coeffs> naive_coefficients(const IvpSystem &sys, std::size_t k, SolveMode mode)
{
    sys.validate();
    const std::size_t m = sys.size();
    std::vector<Coeffs> out(m);
    for (std::size_t i = 0; i < m; ++i) {
        out[i].push_back(sys.init[i]);
    }
    for (std::size_t j = 0; j < k; ++j) {
        StreamBinding binding;
        for (std::size_t i = 0; i < m; ++i) {
            binding.emplace(sys.vars[i], out[i]);
        }
        std::vector<Rational> next;
        for (std::size_t i = 0; i < m; ++i) {
            Rational v = evaluate_on_streams(sys.rhs[i], binding, j)[j];
            if (mode == SolveMode::Taylor) {
                v /= static_cast<unsigned long>(j + 1);
            }
            next.push_back(std::move(v));
        }
        for (std::size_t i = 0; i < m; ++i) {
            out[i].push_back(std::move(next[i]));
        }
    }
    return out;
}

std::vector<Coeffs> residual(const PolySystem &sys, const std::vector<Coeffs> &streams, std::size_t k)
{
    if (streams.size() < sys.n()) {
        throw std::invalid_argument("residual: fewer streams than unknowns");
    }
    StreamBinding binding;
    for (std::size_t i = 0; i < sys.n(); ++i) {
        binding.emplace(var_y(static_cast<std::uint32_t>(i + 1)), streams[i]);
    }
    std::vector<Coeffs> out;
    for (const auto &p : sys.equations) {
        out.push_back(evaluate_on_streams(p, binding, k));
    }
    return out;
}

std::vector<Coeffs> residual(const PolySystem &sys, const StreamSolution &sol, std::size_t k)
{
    if (!sol.computed_upto() || *sol.computed_upto() < k) {
        throw std::invalid_argument("residual: solution does not cover index k");
    }
    const IvpSystem &ivp = sol.graph().system();
    std::vector<Coeffs> streams;
    for (std::size_t i = 0; i < sys.n(); ++i) {
        const auto idx = ivp.index_of(var_y(static_cast<std::uint32_t>(i + 1)));
        if (idx == ivp.size()) {
            throw std::invalid_argument("residual: solution lacks an unknown of the system");
        }
        streams.push_back(sol.stream(idx));
    }
    return residual(sys, streams, k);
}

} // namespace streamift

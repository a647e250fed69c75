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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <algorithm>

using namespace streamift;
using testing_support::ints;
using testing_support::P;
using testing_support::Q;

namespace
{

IvpSystem ivp(const std::vector<std::string> &rhs, std::vector<Rational> init)
{
    IvpSystem s;
    for (std::uint32_t i = 1; i <= rhs.size(); ++i) {
        s.vars.push_back(var_y(i));
        s.names.push_back("y" + std::to_string(i));
    }
    for (const auto &r : rhs) {
        s.rhs.push_back(P(r));
    }
    s.init = std::move(init);
    return s;
}

std::size_t count(const TermGraph &g, NodeKind k)
{
    return static_cast<std::size_t>(
        std::count_if(g.nodes().begin(), g.nodes().end(), [k](const TermNode &n) { return n.kind == k; }));
}

IvpSystem random_ivp(std::mt19937_64 &rng, std::size_t n)
{
    RandomPolyShape shape;
    shape.n = n;
    shape.max_degree = 3;
    shape.max_terms = 4;
    shape.coeff_bound = 3;
    std::uniform_int_distribution<long> init(-2, 2);
    IvpSystem s;
    for (std::uint32_t i = 1; i <= n; ++i) {
        s.vars.push_back(var_y(i));
        s.names.push_back("y" + std::to_string(i));
        s.rhs.push_back(random_polynomial(rng, shape));
        s.init.emplace_back(init(rng));
    }
    return s;
}

bool all_zero(const Coeffs &c)
{
    return std::all_of(c.begin(), c.end(), [](const Rational &q) { return q == 0; });
}

} // namespace

TEST_CASE("convolution and inverse")
{
    CHECK(convolve(ints({1, 1}), ints({1, 1}), 1) == ints({1, 2}));
    CHECK(convolve(ints({1, 1, 1, 1}), ints({1, 1, 1, 1}), 3) == ints({1, 2, 3, 4}));
    CHECK(convolve(ints({0, 1, 0}), ints({5, 6, 7}), 2) == ints({0, 5, 6}));
    CHECK(stream_inverse(ints({1, -1, 0, 0}), 3) == ints({1, 1, 1, 1}));
    CHECK(stream_inverse(ints({2}), 0) == Coeffs{Rational(1, 2)});
    CHECK(convolve(stream_inverse(ints({3, 1, 4, 1, 5}), 4), ints({3, 1, 4, 1, 5}), 4) == ints({1, 0, 0, 0, 0}));
    CHECK_THROWS_AS(stream_inverse(ints({0, 1}), 1), not_invertible);
    CHECK_THROWS_AS(stream_inverse(ints({1}), 3), std::invalid_argument);
    CHECK_THROWS_AS(convolve(ints({1, 2}), ints({1}), 1), std::invalid_argument);
    CHECK(x_stream(3) == ints({0, 1, 0, 0}));
    CHECK(x_stream(0) == ints({0}));
}

TEST_CASE("polynomials evaluated on streams")
{
    const StreamBinding geo{{var_y(1), ints({1, 1, 1, 1})}};
    CHECK(evaluate_on_streams(P("y1^2"), geo, 3) == ints({1, 2, 3, 4}));
    CHECK(evaluate_on_streams(P("x*y1 - 2"), geo, 3) == ints({-2, 1, 1, 1}));
    CHECK(evaluate_on_streams(Polynomial(), geo, 2) == ints({0, 0, 0}));
    CHECK_THROWS(evaluate_on_streams(P("y2"), geo, 3));
}

TEST_CASE("term graph structure")
{
    const TermGraph sq(ivp({"y1^2"}, {1}));
    CHECK(sq.products() == 1);
    CHECK(sq.sums() == 0);
    // 1, x, y and y*y
    CHECK(sq.nodes().size() == 4);
    CHECK(count(sq, NodeKind::Var) == 2);
    CHECK(sq.nodes()[sq.x_node()].var == var_x);
    CHECK(sq.nodes()[sq.root(0)].kind == NodeKind::Product);
    CHECK(sq.nodes()[sq.one_node()].kind == NodeKind::Const);

    const TermGraph zero(ivp({"0"}, {3}));
    CHECK(zero.nodes()[zero.root(0)].kind == NodeKind::Const);
    CHECK(zero.nodes()[zero.root(0)].value == 0);
    CHECK(zero.products() == 0);
    CHECK(zero.sums() == 0);

    IvpSystem tree_sde;
    tree_sde.vars = {var_y(1), var_y(2), var_y(3), var_w};
    tree_sde.names = {"y1", "y2", "y3", "w"};
    tree_sde.rhs = {Q("(2*y1*y2 + y2*y3 - 1)*w"), Polynomial(), Polynomial(), Polynomial()};
    tree_sde.init = {0, 0, 0, -1};
    const TermGraph g(tree_sde);
    CHECK(g.sums() == 2);
    CHECK(g.products() == 2);

    // shared subterms are interned once
    const TermGraph shared(ivp({"(y1 + y2)^2", "(y1 + y2)^2 + y1"}, {0, 0}));
    CHECK(shared.root(0) != shared.root(1));
    CHECK(shared.nodes()[shared.root(1)].kind == NodeKind::Sum);
    const TermGraph twice(ivp({"y1*y2 + 1", "y1*y2 + 1"}, {0, 0}));
    CHECK(twice.root(0) == twice.root(1));

    for (std::size_t i = 0; i < g.nodes().size(); ++i) {
        const TermNode &n = g.nodes()[i];
        if (n.kind == NodeKind::Sum || n.kind == NodeKind::Product) {
            CHECK(n.lhs < i);
            CHECK(n.rhs < i);
        }
        if (n.kind == NodeKind::Scale) {
            CHECK(n.lhs < i);
        }
    }
}

TEST_CASE("explicit horner order")
{
    const IvpSystem s = ivp({"y1*y2 + y1*y3 + y2*y3 + 1", "y1 - y3", "x*y2"}, {1, 0, 2});
    const TermGraph a(s, {var_y(1), var_y(2), var_y(3)});
    const TermGraph b(s, {var_y(3), var_y(2), var_y(1)});
    const auto sa = solve_streams(s, 10);
    StreamSolution ra(std::make_shared<TermGraph>(a));
    StreamSolution rb(std::make_shared<TermGraph>(b));
    ra.extend(10);
    rb.extend(10);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(ra.stream(i) == sa[i]);
        CHECK(rb.stream(i) == sa[i]);
    }
}

TEST_CASE("solutions of small equations")
{
    CHECK(solve_streams(ivp({"y1^2"}, {1}), 9)[0] == ints({1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862}));
    CHECK(solve_streams(ivp({"y1^2"}, {1}), 5, SolveMode::Taylor)[0] == ints({1, 1, 1, 1, 1, 1}));
    CHECK(solve_streams(ivp({"y1"}, {1}), 4)[0] == ints({1, 1, 1, 1, 1}));
    CHECK(solve_streams(ivp({"y1"}, {1}), 4, SolveMode::Taylor)[0]
          == Coeffs{1, 1, Rational(1, 2), Rational(1, 6), Rational(1, 24)});
    CHECK(solve_streams(ivp({"x"}, {0}), 4)[0] == ints({0, 0, 1, 0, 0}));
    CHECK(solve_streams(ivp({"0"}, {7}), 3)[0] == ints({7, 0, 0, 0}));
    CHECK(solve_streams(ivp({"y2", "-y1"}, {0, 1}), 6, SolveMode::Taylor)[0]
          == Coeffs{0, 1, 0, Rational(-1, 6), 0, Rational(1, 120), 0});
    CHECK(solve_streams(ivp({"1/2*y1^2"}, {2}), 3)[0] == ints({2, 2, 4, 10}));
}

TEST_CASE("lazy extension")
{
    const IvpSystem s = ivp({"y1*y2 + x", "y1^2 - 1"}, {1, 2});
    StreamSolution sol(build_term_graph(s));
    CHECK_FALSE(sol.computed_upto().has_value());
    sol.extend(0);
    REQUIRE(sol.computed_upto() == 0u);
    CHECK(sol.stream(0) == ints({1}));
    CHECK(sol.stream(1) == ints({2}));
    sol.extend(10);
    const Coeffs first = sol.stream(0);
    sol.extend(25);
    sol.extend(7);
    CHECK(sol.computed_upto() == 25u);
    CHECK(testing_support::prefix(sol.stream(0), 11) == first);
    CHECK(sol.stream(0) == solve_streams(s, 25)[0]);
    CHECK(solve_streams(s, 25) == solve_streams(s, 25));
}

TEST_CASE("term graph solver agrees with naive re-evaluation")
{
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 40; ++trial) {
        const IvpSystem s = random_ivp(rng, 1 + static_cast<std::size_t>(trial % 3));
        for (const auto mode : {SolveMode::Stream, SolveMode::Taylor}) {
            CHECK(solve_streams(s, 15, mode) == naive_coefficients(s, 15, mode));
        }
    }
}

TEST_CASE("next coefficient equals the right-hand side")
{
    std::mt19937_64 rng(52);
    const std::size_t k = 20;
    for (int trial = 0; trial < 30; ++trial) {
        const IvpSystem s = random_ivp(rng, 1 + static_cast<std::size_t>(trial % 3));
        const auto sol = solve_streams(s, k);
        StreamBinding b;
        for (std::size_t i = 0; i < s.size(); ++i) {
            b[s.vars[i]] = sol[i];
            CHECK(sol[i][0] == s.init[i]);
        }
        for (std::size_t i = 0; i < s.size(); ++i) {
            const Coeffs tail(sol[i].begin() + 1, sol[i].end());
            CHECK(evaluate_on_streams(s.rhs[i], b, k - 1) == tail);
        }
    }
}

TEST_CASE("residuals")
{
    PolySystem cat = testing_support::bundled("catalan");
    const auto y = solve_streams(ivp({"y1^2"}, {1}), 30);
    CHECK(all_zero(residual(cat, y, 30)[0]));

    cat.r0 = {Rational(2)};
    const std::vector<Coeffs> two{ints({2, 0, 0, 0})};
    const auto r = residual(cat, two, 3);
    CHECK_FALSE(all_zero(r[0]));
    CHECK(r[0] == ints({1, -4, 0, 0}));

    const SdeSystem sde = derive_pipeline(testing_support::bundled("nonzerod"));
    StreamSolution sol(build_term_graph(sde));
    sol.extend(60);
    for (const auto &row : residual(testing_support::bundled("nonzerod"), sol, 60)) {
        CHECK(all_zero(row));
    }
}

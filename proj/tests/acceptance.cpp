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


#include <streamift/classical.hpp>
#include <streamift/parser.hpp>
#include <streamift/random_systems.hpp>

#include <gmpxx.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace streamift;

namespace
{

class failed : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string &what)
{
    if (!cond) {
        throw failed(what);
    }
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

PolySystem bundled(const std::string &name)
{
    return parse_system(read_file(std::string(STREAMIFT_SYSTEMS_DIR) + "/" + name + ".sys"));
}

const std::vector<std::string> corpus{"catalan",    "circle",     "circle_neg", "trees",      "nonzerod",
                                      "guarded_01", "guarded_02", "guarded_03", "guarded_04", "guarded_05",
                                      "guarded_06", "guarded_07", "guarded_08", "guarded_09", "guarded_10"};

Coeffs ints(std::initializer_list<long> v)
{
    Coeffs c;
    for (long x : v) {
        c.emplace_back(x);
    }
    return c;
}

Coeffs head(const Coeffs &c, std::size_t n)
{
    return Coeffs(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n));
}

bool all_zero(const std::vector<Coeffs> &rows)
{
    return std::all_of(rows.begin(), rows.end(), [](const Coeffs &r) {
        return std::all_of(r.begin(), r.end(), [](const Rational &q) { return q == 0; });
    });
}

std::vector<Coeffs> sde_coeffs(const PolySystem &sys, std::size_t k)
{
    auto rows = solve_streams(derive_pipeline(sys), k);
    rows.resize(sys.n());
    return rows;
}

RandomPolyShape guarded_shape(std::size_t n)
{
    RandomPolyShape s;
    s.n = n;
    s.max_degree = 3;
    s.max_terms = 4;
    s.coeff_bound = 3;
    return s;
}

void catalan()
{
    const auto t0 = Clock::now();
    const Coeffs c = sde_coeffs(bundled("catalan"), 9)[0];
    expect(head(c, 6) == ints({1, 1, 2, 5, 14, 42}), "indices 0..5");
    for (unsigned long n = 6; n <= 9; ++n) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), 2 * n, n);
        expect(c[n] == Rational(binom / (n + 1)), "index " + std::to_string(n));
    }
    expect(seconds_since(t0) < 1.0, "time budget");
}

void circle()
{
    const PolySystem sys = bundled("circle");
    const Coeffs s = sde_coeffs(sys, 100)[0];
    expect(head(s, 7) == Coeffs{1, 0, Rational(-1, 2), 0, Rational(-1, 8), 0, Rational(-1, 16)}, "indices 0..6");
    Coeffs target(101);
    target[0] = 1;
    target[2] = -1;
    expect(convolve(s, s, 100) == target, "square is 1 - x^2");
    const Coeffs neg = sde_coeffs(bundled("circle_neg"), 100)[0];
    for (std::size_t i = 0; i <= 100; ++i) {
        expect(neg[i] == -s[i], "negated initial value");
    }
}

void trees()
{
    const auto t0 = Clock::now();
    const PolySystem sys = bundled("trees");
    const SdeSystem sde = derive_pipeline(sys);
    const std::string expected = "vars: y1 y2 y3 w\n"
                                 "inverse: w\n"
                                 "sde:\n"
                                 "  y1' = (2*y1*y2 + y2*y3 - 1)*w\n"
                                 "  y2' = (-2*y1^2 - 4*y1*y2 - y1*y3 - y1 - 2*y2*y3)*w\n"
                                 "  y3' = (-y1*y2 - y1 - 2*y2)*w\n"
                                 "  w' = 4*w^2*y1^2*y2^2 + 4*w^2*y1^2*y2*y3 - 8*w^2*y1^2*y3^2 - 6*w^2*y1^2*y3"
                                 " + 8*w^2*y1*y2^3 + 14*w^2*y1*y2^2*y3 + 6*w^2*y1*y2^2 - 10*w^2*y1*y2*y3^2"
                                 " - 8*w^2*y1*y2*y3 - 2*w^2*y1*y2 - 4*w^2*y1*y3^3 - 7*w^2*y1*y3^2 - 7*w^2*y1*y3"
                                 " + 4*w^2*y2^3*y3 + 6*w^2*y2^2*y3^2 + 3*w^2*y2^2*y3 - 4*w^2*y2^2 - 6*w^2*y2*y3^3"
                                 " - 3*w^2*y2*y3^2 - 10*w^2*y2*y3 - 3*w^2*y2 - 2*w^2*y3^2 - 3*w^2*y3\n"
                                 "init: 0 0 0 -1\n";
    const SdeSystem reference = parse_sde(expected);
    expect(reference.vars == sde.vars, "variables");
    expect(reference.rhs == sde.rhs, "polynomial SDE");
    expect(reference.init == sde.init, "initial values");
    const Coeffs s = solve_streams(sde, 8)[0];
    expect(s == ints({0, 1, 0, 0, 4, 16, 56, 256, 1236}), "sigma_1 through 8");
    const Coeffs o = taylor_solve(build_classical_ode(sys), 9)[0];
    expect(o == ints({0, 1, 0, 0, 4, 16, 56, 256, 1236, 5808}), "series through 9");
    expect(seconds_since(t0) < 5.0, "time budget");
}

void nonzerod()
{
    const PolySystem sys = bundled("nonzerod");
    expect(sys.r0 == std::vector<Rational>{1, 1, 1}, "r0 = (1,1,1)");
    const HypothesisReport r = check_hypotheses(sys);
    expect(r.ok && r.determinant == 12, "determinant 12");
    StreamSolution sol(build_term_graph(derive_pipeline(sys)));
    sol.extend(50);
    expect(all_zero(residual(sys, sol, 50)), "residual zero through 50");
}

void equivalence()
{
    const auto t0 = Clock::now();
    for (const auto &name : corpus) {
        const ComparisonReport r = compare_methods(bundled(name), 100);
        expect(r.agree(), name + ": " + format_comparison(r, bundled(name).names));
    }
    expect(seconds_since(t0) < 30.0, "time budget");
}

void partial_agreement()
{
    std::mt19937_64 rng(20260601);
    std::uniform_int_distribution<long> value(-5, 5);
    std::uniform_int_distribution<std::size_t> size(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
        RandomPolyShape shape;
        shape.n = size(rng);
        shape.max_degree = 5;
        shape.max_terms = 6;
        shape.coeff_bound = 9;
        const std::size_t n = shape.n;
        const Polynomial p = random_polynomial(rng, shape);
        const VarOrder order = random_order(rng, n);
        const auto d = decompose(stream_derivative(p, order), n);
        for (int point = 0; point < 5; ++point) {
            Point at{{var_x, 0}};
            for (std::uint32_t i = 1; i <= n; ++i) {
                const Rational r(value(rng));
                at[var_y(i)] = r;
                at[var_y0(i)] = r;
            }
            for (std::uint32_t i = 1; i <= n; ++i) {
                expect(eval(classical_partial(p, var_y(i)), at) == eval(d.q[i - 1], at),
                       "trial " + std::to_string(trial));
            }
        }
    }
}

void order_invariance()
{
    std::mt19937_64 rng(20260602);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
        const PolySystem sys = random_guarded_system(rng, guarded_shape(n));
        const DerivationOrder a(random_order(rng, n));
        const DerivationOrder b(random_order(rng, n));
        auto sa = solve_streams(derive_pipeline(sys, a), 30);
        auto sb = solve_streams(derive_pipeline(sys, b), 30);
        sa.resize(n);
        sb.resize(n);
        expect(sa == sb, "trial " + std::to_string(trial));
    }
}

void oracle()
{
    std::vector<SdeSystem> systems;
    for (const auto &name : corpus) {
        systems.push_back(derive_pipeline(bundled(name)));
    }
    std::mt19937_64 rng(20260603);
    for (int trial = 0; trial < 50; ++trial) {
        systems.push_back(derive_pipeline(random_guarded_system(rng, guarded_shape(1 + static_cast<std::size_t>(trial % 3)))));
    }
    for (std::size_t i = 0; i < systems.size(); ++i) {
        expect(solve_streams(systems[i], 50) == naive_coefficients(systems[i], 50), "system " + std::to_string(i));
    }
}

double median(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 == 1 ? v[m] : (v[m - 1] + v[m]) / 2;
}

double time_once(const IvpSystem &ivp, SolveMode mode, std::size_t k)
{
    const auto t0 = Clock::now();
    StreamSolution sol(build_term_graph(ivp), mode);
    sol.extend(k);
    return seconds_since(t0);
}

void figure()
{
    const PolySystem sys = bundled("trees");
    const SdeSystem sde = derive_pipeline(sys);
    const OdeSystem ode = build_classical_ode(sys);
    const std::vector<std::size_t> ks{100, 200, 300, 400, 500};
    const std::size_t repeat = 5;
    std::vector<double> sde_median;
    std::vector<double> ode_median;
    for (const auto k : ks) {
        std::vector<double> s;
        std::vector<double> o;
        for (std::size_t r = 0; r < repeat; ++r) {
            s.push_back(time_once(sde, SolveMode::Stream, k));
            o.push_back(time_once(ode, SolveMode::Taylor, k));
        }
        sde_median.push_back(median(s));
        ode_median.push_back(median(o));
    }
    double mx = 0;
    double my = 0;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        mx += std::log(static_cast<double>(ks[i]));
        my += std::log(sde_median[i]);
    }
    mx /= static_cast<double>(ks.size());
    my /= static_cast<double>(ks.size());
    double sxy = 0;
    double sxx = 0;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        const double dx = std::log(static_cast<double>(ks[i])) - mx;
        sxy += dx * (std::log(sde_median[i]) - my);
        sxx += dx * dx;
    }
    const double slope = sxy / sxx;
    std::ostringstream detail;
    detail << "sde " << sde_median.back() << "s vs ode " << ode_median.back() << "s at k=500, slope " << slope;
    std::cout << "  " << detail.str() << '\n';
    expect(sde_median.back() <= ode_median.back(), detail.str());
    expect(slope >= 1.3 && slope <= 2.7, detail.str());
}

void metric()
{
    const DerivativeSizeMetric m = derivative_size_metric(bundled("trees"));
    expect(m.stream_monomials < m.classical_monomials, "monomials of E' vs dE/dx");
    expect(m.stream_products < m.classical_products, "P_stream vs P_classical");
    expect(m.stream_monomials == 13 && m.classical_monomials == 16, "frozen monomial counts 13/16");
    expect(m.stream_products == 19 && m.classical_products == 24, "frozen product counts 19/24");
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void()>>> criteria{
        {"catalan golden coefficients", catalan},
        {"circle golden coefficients", circle},
        {"three-coloured trees", trees},
        {"positive-dimensional system", nonzerod},
        {"method equivalence on the corpus", equivalence},
        {"partial derivative agreement", partial_agreement},
        {"variable order invariance", order_invariance},
        {"memoized vs naive recurrence", oracle},
        {"benchmark ordering and scaling", figure},
        {"derivative size metric", metric},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = Clock::now();
        std::string verdict = "PASS";
        std::string why;
        try {
            criteria[i].second();
        } catch (const std::exception &e) {
            verdict = "FAIL";
            why = std::string(" (") + e.what() + ")";
            ++failures;
        }
        std::cout << verdict << " criterion " << i + 1 << ": " << criteria[i].first << why << " ["
                  << seconds_since(t0) << " s]" << std::endl;
    }
    return failures == 0 ? 0 : 1;
}

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

#ifndef STREAMIFT_POLYNOMIAL_HPP
#define STREAMIFT_POLYNOMIAL_HPP

#include <streamift/rational.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace streamift
{

// Variable kinds, declared in the fixed global variable order
// x < y_1..y_n < y0_1..y0_n < y'_1..y'_n < w.
enum class VarKind : std::uint8_t { X, Y, Y0, YPrime, W };

struct VarId {
    VarKind kind = VarKind::X;
    // 1-based for Y, Y0 and YPrime; always 0 for X and W.
    std::uint32_t index = 0;

    friend auto operator<=>(const VarId &, const VarId &) = default;
};

inline constexpr VarId var_x{VarKind::X, 0};
inline constexpr VarId var_w{VarKind::W, 0};
inline constexpr VarId var_y(std::uint32_t i)
{
    return {VarKind::Y, i};
}
inline constexpr VarId var_y0(std::uint32_t i)
{
    return {VarKind::Y0, i};
}
inline constexpr VarId var_yp(std::uint32_t i)
{
    return {VarKind::YPrime, i};
}

class unbound_variable : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class exponent_overflow : public std::overflow_error
{
public:
    using std::overflow_error::overflow_error;
};

using Exponent = std::uint32_t;

// Product of variables with positive exponents, sorted by VarId. The empty
// monomial is 1.
class Monomial
{
public:
    using Factor = std::pair<VarId, Exponent>;

    Monomial() = default;
    explicit Monomial(VarId v, Exponent e = 1);
    // Factors may be unsorted and contain repeats or zero exponents.
    static Monomial from_factors(std::vector<Factor> factors);

    const std::vector<Factor> &factors() const
    {
        return factors_;
    }
    bool is_one() const
    {
        return factors_.empty();
    }
    std::uint64_t degree() const;
    Exponent exponent(VarId v) const;
    bool contains(VarId v) const
    {
        return exponent(v) != 0;
    }

    // Removes one power of v; v must occur.
    Monomial without(VarId v, Exponent e = 1) const;

    friend Monomial operator*(const Monomial &a, const Monomial &b);
    friend bool operator==(const Monomial &, const Monomial &) = default;

private:
    std::vector<Factor> factors_;
};

// Graded lexicographic order, largest monomial first: higher total degree
// first, ties broken by the exponent of the smallest variable (x, then y_1,
// ...), larger exponent first.
struct GrlexDescending {
    bool operator()(const Monomial &a, const Monomial &b) const;
};

using Point = std::map<VarId, Rational>;

// Sparse multivariate polynomial over the rationals in canonical form: no
// zero coefficients, terms kept in graded lexicographic order.
class Polynomial
{
public:
    using TermMap = std::map<Monomial, Rational, GrlexDescending>;

    Polynomial() = default;
    Polynomial(const Rational &c);
    Polynomial(long c) : Polynomial(Rational(c)) {}
    explicit Polynomial(VarId v);
    Polynomial(const Rational &c, Monomial m);

    const TermMap &terms() const
    {
        return terms_;
    }
    std::size_t size() const
    {
        return terms_.size();
    }
    bool is_zero() const
    {
        return terms_.empty();
    }
    bool is_constant() const;
    Rational constant_term() const;
    Rational coefficient(const Monomial &m) const;
    std::uint64_t total_degree() const;
    std::set<VarId> variables() const;
    bool contains_kind(VarKind k) const;

    // Leading term in the canonical order. Requires a nonzero polynomial.
    const std::pair<const Monomial, Rational> &leading_term() const;

    Polynomial &operator+=(const Polynomial &q);
    Polynomial &operator-=(const Polynomial &q);
    Polynomial &operator*=(const Polynomial &q);
    Polynomial &operator*=(const Rational &c);

    friend Polynomial operator+(Polynomial p, const Polynomial &q)
    {
        return p += q;
    }
    friend Polynomial operator-(Polynomial p, const Polynomial &q)
    {
        return p -= q;
    }
    friend Polynomial operator*(const Polynomial &p, const Polynomial &q);
    friend Polynomial operator*(Polynomial p, const Rational &c)
    {
        return p *= c;
    }
    friend Polynomial operator*(const Rational &c, Polynomial p)
    {
        return p *= c;
    }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial &, const Polynomial &) = default;

    // Adds c*m in place.
    void add_term(const Rational &c, const Monomial &m);

private:
    TermMap terms_;
};

Polynomial pow(const Polynomial &p, unsigned e);

// Exact value at a point; throws unbound_variable if a variable of p is not
// assigned.
Rational eval(const Polynomial &p, const Point &point);

// Homomorphic substitution; unbound variables are kept.
Polynomial substitute(const Polynomial &p, const std::map<VarId, Polynomial> &bindings);

// Exact quotient p / d. Throws std::domain_error if d is zero or does not
// divide p.
Polynomial exact_divide(const Polynomial &p, const Polynomial &d);

// Positive rational c such that p / c has coprime integer coefficients.
Rational content(const Polynomial &p);

// Names used when rendering variables.
struct VarNames {
    std::vector<std::string> y;   // names of y_1..y_n
    std::string w = "w";

    // y1..yn.
    static VarNames defaults(std::size_t n);
    std::string name(VarId v) const;
};

// Canonical text form, e.g. "2*x*y1^2 - 1/2*y2 + 3". Y0 variables print as
// "<y>_0" and primed ones as "<y>'".
std::string to_string(const Polynomial &p, const VarNames &names);
std::string to_string(const Polynomial &p);

} // namespace streamift

#endif

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

#include <streamift/polynomial.hpp>

#include <algorithm>
#include <limits>

namespace streamift
{

namespace
{

Exponent checked_add(Exponent a, Exponent b)
{
    if (a > std::numeric_limits<Exponent>::max() - b) {
        throw exponent_overflow("monomial exponent overflow");
    }
    return a + b;
}

} // namespace

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(VarId v, Exponent e)
{
    if (e != 0) {
        factors_.emplace_back(v, e);
    }
}

Monomial Monomial::from_factors(std::vector<Factor> factors)
{
    std::sort(factors.begin(), factors.end(), [](const Factor &a, const Factor &b) { return a.first < b.first; });
    Monomial m;
    for (const auto &[v, e] : factors) {
        if (e == 0) {
            continue;
        }
        if (!m.factors_.empty() && m.factors_.back().first == v) {
            m.factors_.back().second = checked_add(m.factors_.back().second, e);
        } else {
            m.factors_.emplace_back(v, e);
        }
    }
    return m;
}

std::uint64_t Monomial::degree() const
{
    std::uint64_t d = 0;
    for (const auto &f : factors_) {
        d += f.second;
    }
    return d;
}

Exponent Monomial::exponent(VarId v) const
{
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const Factor &f, const VarId &key) { return f.first < key; });
    return it != factors_.end() && it->first == v ? it->second : 0;
}

Monomial Monomial::without(VarId v, Exponent e) const
{
    Monomial m;
    m.factors_.reserve(factors_.size());
    bool found = false;
    for (const auto &[u, k] : factors_) {
        if (u == v) {
            if (k < e) {
                throw std::logic_error("Monomial::without: exponent too small");
            }
            found = true;
            if (k > e) {
                m.factors_.emplace_back(u, k - e);
            }
        } else {
            m.factors_.emplace_back(u, k);
        }
    }
    if (!found && e != 0) {
        throw std::logic_error("Monomial::without: variable not present");
    }
    return m;
}

Monomial operator*(const Monomial &a, const Monomial &b)
{
    Monomial m;
    m.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
        if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
            m.factors_.push_back(*i++);
        } else if (i == a.factors_.end() || j->first < i->first) {
            m.factors_.push_back(*j++);
        } else {
            m.factors_.emplace_back(i->first, checked_add(i->second, j->second));
            ++i;
            ++j;
        }
    }
    return m;
}

bool GrlexDescending::operator()(const Monomial &a, const Monomial &b) const
{
    const auto da = a.degree();
    const auto db = b.degree();
    if (da != db) {
        return da > db;
    }
    // Walk both factor lists from the smallest variable; the first difference
    // decides. A missing variable counts as exponent 0.
    const auto &fa = a.factors();
    const auto &fb = b.factors();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < fa.size() && j < fb.size()) {
        if (fa[i].first != fb[j].first) {
            // The one holding the smaller variable has a larger exponent there.
            return fa[i].first < fb[j].first;
        }
        if (fa[i].second != fb[j].second) {
            return fa[i].second > fb[j].second;
        }
        ++i;
        ++j;
    }
    return i < fa.size() && j == fb.size();
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(const Rational &c)
{
    if (c != 0) {
        terms_.emplace(Monomial{}, c);
    }
}

Polynomial::Polynomial(VarId v)
{
    terms_.emplace(Monomial(v), Rational(1));
}

Polynomial::Polynomial(const Rational &c, Monomial m)
{
    if (c != 0) {
        terms_.emplace(std::move(m), c);
    }
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_term() const
{
    return coefficient(Monomial{});
}

Rational Polynomial::coefficient(const Monomial &m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::uint64_t Polynomial::total_degree() const
{
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

std::set<VarId> Polynomial::variables() const
{
    std::set<VarId> vs;
    for (const auto &[m, c] : terms_) {
        for (const auto &f : m.factors()) {
            vs.insert(f.first);
        }
    }
    return vs;
}

bool Polynomial::contains_kind(VarKind k) const
{
    for (const auto &[m, c] : terms_) {
        for (const auto &f : m.factors()) {
            if (f.first.kind == k) {
                return true;
            }
        }
    }
    return false;
}

const std::pair<const Monomial, Rational> &Polynomial::leading_term() const
{
    if (terms_.empty()) {
        throw std::domain_error("leading term of the zero polynomial");
    }
    return *terms_.begin();
}

void Polynomial::add_term(const Rational &c, const Monomial &m)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

Polynomial &Polynomial::operator+=(const Polynomial &q)
{
    for (const auto &[m, c] : q.terms_) {
        add_term(c, m);
    }
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &q)
{
    for (const auto &[m, c] : q.terms_) {
        add_term(-c, m);
    }
    return *this;
}

Polynomial operator*(const Polynomial &p, const Polynomial &q)
{
    Polynomial r;
    for (const auto &[mp, cp] : p.terms_) {
        for (const auto &[mq, cq] : q.terms_) {
            r.add_term(cp * cq, mp * mq);
        }
    }
    return r;
}

Polynomial &Polynomial::operator*=(const Polynomial &q)
{
    *this = *this * q;
    return *this;
}

Polynomial &Polynomial::operator*=(const Rational &c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[m, coeff] : terms_) {
        coeff *= c;
    }
    return *this;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r(*this);
    for (auto &[m, c] : r.terms_) {
        c = -c;
    }
    return r;
}

Polynomial pow(const Polynomial &p, unsigned e)
{
    Polynomial result(1);
    Polynomial base = p;
    while (e != 0) {
        if (e & 1u) {
            result *= base;
        }
        e >>= 1;
        if (e != 0) {
            base *= base;
        }
    }
    return result;
}

namespace
{

Rational rational_pow(const Rational &base, Exponent e)
{
    Rational r(1);
    Rational b = base;
    while (e != 0) {
        if (e & 1u) {
            r *= b;
        }
        e >>= 1;
        if (e != 0) {
            b *= b;
        }
    }
    return r;
}

} // namespace

Rational eval(const Polynomial &p, const Point &point)
{
    Rational total(0);
    for (const auto &[m, c] : p.terms()) {
        Rational t = c;
        for (const auto &[v, e] : m.factors()) {
            auto it = point.find(v);
            if (it == point.end()) {
                throw unbound_variable("no value for variable " + VarNames{}.name(v));
            }
            t *= rational_pow(it->second, e);
        }
        total += t;
    }
    return total;
}

Polynomial substitute(const Polynomial &p, const std::map<VarId, Polynomial> &bindings)
{
    if (bindings.empty()) {
        return p;
    }
    // Powers of bound variables are shared across terms.
    std::map<std::pair<VarId, Exponent>, Polynomial> power_cache;
    auto power = [&](VarId v, Exponent e) -> const Polynomial & {
        auto key = std::make_pair(v, e);
        auto it = power_cache.find(key);
        if (it == power_cache.end()) {
            it = power_cache.emplace(key, pow(bindings.at(v), e)).first;
        }
        return it->second;
    };
    Polynomial result;
    for (const auto &[m, c] : p.terms()) {
        std::vector<Monomial::Factor> kept;
        Polynomial term(c);
        for (const auto &[v, e] : m.factors()) {
            if (bindings.count(v) != 0) {
                term *= power(v, e);
                if (term.is_zero()) {
                    break;
                }
            } else {
                kept.emplace_back(v, e);
            }
        }
        if (term.is_zero()) {
            continue;
        }
        if (!kept.empty()) {
            term *= Polynomial(Rational(1), Monomial::from_factors(std::move(kept)));
        }
        result += term;
    }
    return result;
}

namespace
{

// a / b when b divides a as monomials.
bool monomial_divide(const Monomial &a, const Monomial &b, Monomial &out)
{
    std::vector<Monomial::Factor> f;
    for (const auto &[v, e] : a.factors()) {
        f.emplace_back(v, e);
    }
    for (const auto &[v, e] : b.factors()) {
        auto it = std::find_if(f.begin(), f.end(), [&](const Monomial::Factor &x) { return x.first == v; });
        if (it == f.end() || it->second < e) {
            return false;
        }
        it->second -= e;
    }
    out = Monomial::from_factors(std::move(f));
    return true;
}

} // namespace

Polynomial exact_divide(const Polynomial &p, const Polynomial &d)
{
    if (d.is_zero()) {
        throw std::domain_error("division by the zero polynomial");
    }
    const auto &[dm, dc] = d.leading_term();
    Polynomial quotient;
    Polynomial rest = p;
    while (!rest.is_zero()) {
        const auto &[rm, rc] = rest.leading_term();
        Monomial qm;
        if (!monomial_divide(rm, dm, qm)) {
            throw std::domain_error("polynomial division is not exact");
        }
        Polynomial t(rc / dc, qm);
        quotient += t;
        rest -= t * d;
    }
    return quotient;
}

Rational content(const Polynomial &p)
{
    if (p.is_zero()) {
        return Rational(1);
    }
    Integer g(0);
    Integer l(1);
    for (const auto &[m, c] : p.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    Rational r(g, l);
    r.canonicalize();
    return r;
}

// ---------------------------------------------------------------------------
// Printing

VarNames VarNames::defaults(std::size_t n)
{
    VarNames names;
    for (std::size_t i = 1; i <= n; ++i) {
        names.y.push_back("y" + std::to_string(i));
    }
    return names;
}

std::string VarNames::name(VarId v) const
{
    auto yname = [&](std::uint32_t i) {
        return i >= 1 && i <= y.size() ? y[i - 1] : "y" + std::to_string(i);
    };
    switch (v.kind) {
    case VarKind::X:
        return "x";
    case VarKind::Y:
        return yname(v.index);
    case VarKind::Y0:
        return yname(v.index) + "_0";
    case VarKind::YPrime:
        return yname(v.index) + "'";
    case VarKind::W:
        return w;
    }
    return "?";
}

std::string to_string(const Polynomial &p, const VarNames &names)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[m, c] : p.terms()) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) {
                out += '-';
            }
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string factors;
        for (const auto &[v, e] : m.factors()) {
            if (!factors.empty()) {
                factors += '*';
            }
            factors += names.name(v);
            if (e != 1) {
                factors += '^' + std::to_string(e);
            }
        }
        if (factors.empty()) {
            out += format_rational(mag);
        } else if (mag == 1) {
            out += factors;
        } else {
            out += format_rational(mag) + '*' + factors;
        }
    }
    return out;
}

std::string to_string(const Polynomial &p)
{
    std::uint32_t n = 0;
    for (const auto &v : p.variables()) {
        n = std::max(n, v.index);
    }
    return to_string(p, VarNames::defaults(n));
}

} // namespace streamift

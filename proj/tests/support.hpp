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


#ifndef STREAMIFT_TESTS_SUPPORT_HPP
#define STREAMIFT_TESTS_SUPPORT_HPP

#include <streamift/classical.hpp>
#include <streamift/parser.hpp>
#include <streamift/random_systems.hpp>

#include <doctest.h>

#include <string>
#include <vector>

namespace doctest
{
template <> struct StringMaker<streamift::Polynomial> {
    static String convert(const streamift::Polynomial &p)
    {
        return streamift::to_string(p).c_str();
    }
};
template <> struct StringMaker<streamift::Rational> {
    static String convert(const streamift::Rational &q)
    {
        return streamift::format_rational(q).c_str();
    }
};
template <> struct StringMaker<streamift::Coeffs> {
    static String convert(const streamift::Coeffs &c)
    {
        return ("[" + streamift::format_coeffs(c) + "]").c_str();
    }
};
} // namespace doctest

namespace testing_support
{

using namespace streamift;

inline std::string system_path(const std::string &name)
{
    return std::string(STREAMIFT_SYSTEMS_DIR) + "/" + name + ".sys";
}

inline PolySystem bundled(const std::string &name)
{
    return parse_system(read_file(system_path(name)));
}

inline std::vector<std::string> bundled_names()
{
    return {"catalan",    "circle",     "circle_neg", "trees",      "nonzerod",   "guarded_01", "guarded_02", "guarded_03",
            "guarded_04", "guarded_05", "guarded_06", "guarded_07", "guarded_08", "guarded_09", "guarded_10"};
}

// Polynomial in x and the given unknowns.
inline Polynomial P(const std::string &text, const std::vector<std::string> &names = {"y1", "y2", "y3"})
{
    return parse_expr(text, names);
}

// Polynomial over every variable kind: y1.., a1.. for y0, d1.. for y', w.
inline Polynomial Q(const std::string &text, std::size_t n = 3)
{
    SymbolTable t;
    t.emplace("x", var_x);
    t.emplace("w", var_w);
    for (std::uint32_t i = 1; i <= n; ++i) {
        t.emplace("y" + std::to_string(i), var_y(i));
        t.emplace("a" + std::to_string(i), var_y0(i));
        t.emplace("d" + std::to_string(i), var_yp(i));
    }
    return parse_expr(text, t);
}

inline Coeffs ints(std::initializer_list<long> values)
{
    Coeffs c;
    for (long v : values) {
        c.emplace_back(v);
    }
    return c;
}

inline Coeffs prefix(const Coeffs &c, std::size_t len)
{
    return Coeffs(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(std::min(len, c.size())));
}

// Random truncated stream with small rational entries.
inline Coeffs random_stream(std::mt19937_64 &rng, std::size_t len)
{
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 3);
    Coeffs c;
    for (std::size_t i = 0; i < len; ++i) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        c.push_back(q);
    }
    return c;
}

} // namespace testing_support

#endif

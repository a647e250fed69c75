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

#include <streamift/parser.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>

namespace streamift
{

parse_error::parse_error(const std::string &msg, std::size_t line, std::size_t column)
    : std::runtime_error(line == 0 ? msg
                                   : std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
      line_(line), column_(column)
{
}

namespace
{

struct Location {
    std::size_t line = 0;
    std::size_t column = 0;
};

// Text with a source location for every character; equations may be joined
// from several physical lines.
struct SourceText {
    std::string text;
    std::vector<Location> where;

    void append(std::string_view s, std::size_t line, std::size_t first_column)
    {
        for (std::size_t i = 0; i < s.size(); ++i) {
            text.push_back(s[i]);
            where.push_back({line, first_column + i});
        }
    }
    Location at(std::size_t pos) const
    {
        if (where.empty()) {
            return {1, pos + 1};
        }
        if (pos < where.size()) {
            return where[pos];
        }
        auto last = where.back();
        return {last.line, last.column + 1 + (pos - where.size())};
    }
};

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, Equals, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

bool is_ident_start(char c)
{
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_digit(char c)
{
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

std::vector<Token> tokenize(const SourceText &src)
{
    const std::string &s = src.text;
    std::vector<Token> out;
    std::size_t i = 0;
    auto fail = [&](const std::string &msg, std::size_t pos) {
        auto loc = src.at(pos);
        throw parse_error(msg, loc.line, loc.column);
    };
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (is_digit(c)) {
            while (i < s.size() && is_digit(s[i])) {
                ++i;
            }
            if (i < s.size() && s[i] == '/') {
                ++i;
                if (i >= s.size() || !is_digit(s[i])) {
                    fail("expected digits after '/' in rational literal", i);
                }
                while (i < s.size() && is_digit(s[i])) {
                    ++i;
                }
            }
            if (i < s.size() && is_ident_start(s[i])) {
                fail("missing '*' between number and identifier", i);
            }
            out.push_back({Tok::Number, s.substr(start, i - start), start});
            continue;
        }
        if (is_ident_start(c)) {
            while (i < s.size() && is_ident_char(s[i])) {
                ++i;
            }
            out.push_back({Tok::Ident, s.substr(start, i - start), start});
            continue;
        }
        Tok k;
        switch (c) {
        case '+':
            k = Tok::Plus;
            break;
        case '-':
            k = Tok::Minus;
            break;
        case '*':
            k = Tok::Star;
            break;
        case '^':
            k = Tok::Caret;
            break;
        case '(':
            k = Tok::LParen;
            break;
        case ')':
            k = Tok::RParen;
            break;
        case '=':
            k = Tok::Equals;
            break;
        case '/':
            fail("'/' is only allowed inside rational literals such as 1/2", i);
            break;
        default:
            fail(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({k, std::string(1, c), start});
        ++i;
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

// Pratt parser building polynomials directly.
class ExprParser
{
public:
    ExprParser(const SourceText &src, const SymbolTable &symbols)
        : src_(src), symbols_(symbols), tokens_(tokenize(src))
    {
    }

    // expression, or `lhs = rhs` when allow_equation is set.
    Polynomial parse_top(bool allow_equation)
    {
        if (peek().kind == Tok::End) {
            fail("empty expression", peek().pos);
        }
        Polynomial lhs = parse(0);
        if (allow_equation && peek().kind == Tok::Equals) {
            advance();
            if (peek().kind == Tok::End) {
                fail("missing right-hand side after '='", peek().pos);
            }
            Polynomial rhs = parse(0);
            lhs -= rhs;
        }
        if (peek().kind != Tok::End) {
            fail("unexpected '" + peek().text + "'", peek().pos);
        }
        return lhs;
    }

private:
    static constexpr int prefix_minus_power = 25;

    static int infix_power(Tok k)
    {
        switch (k) {
        case Tok::Plus:
        case Tok::Minus:
            return 10;
        case Tok::Star:
            return 20;
        case Tok::Caret:
            return 30;
        default:
            return -1;
        }
    }

    Polynomial parse(int min_power)
    {
        Polynomial lhs = parse_prefix();
        for (;;) {
            const Token &op = peek();
            const int power = infix_power(op.kind);
            if (power < 0 || power <= min_power) {
                break;
            }
            advance();
            if (op.kind == Tok::Caret) {
                lhs = pow(lhs, parse_exponent());
                continue;
            }
            Polynomial rhs = parse(power);
            switch (op.kind) {
            case Tok::Plus:
                lhs += rhs;
                break;
            case Tok::Minus:
                lhs -= rhs;
                break;
            default:
                lhs *= rhs;
                break;
            }
        }
        return lhs;
    }

    Polynomial parse_prefix()
    {
        const Token tok = advance();
        switch (tok.kind) {
        case Tok::Number:
            try {
                return Polynomial(parse_rational(tok.text));
            } catch (const std::invalid_argument &e) {
                fail(e.what(), tok.pos);
            }
        case Tok::Ident: {
            auto it = symbols_.find(tok.text);
            if (it == symbols_.end()) {
                fail("unknown identifier '" + tok.text + "'", tok.pos);
            }
            return Polynomial(it->second);
        }
        case Tok::Minus:
            return -parse(prefix_minus_power);
        case Tok::LParen: {
            Polynomial inner = parse(0);
            if (peek().kind != Tok::RParen) {
                fail("expected ')'", peek().pos);
            }
            advance();
            return inner;
        }
        case Tok::End:
            fail("unexpected end of expression", tok.pos);
        default:
            fail("unexpected '" + tok.text + "'", tok.pos);
        }
    }

    unsigned parse_exponent()
    {
        const Token tok = advance();
        if (tok.kind != Tok::Number || tok.text.find('/') != std::string::npos) {
            fail("exponent must be a nonnegative integer literal", tok.pos);
        }
        if (tok.text.size() > 9) {
            fail("exponent too large", tok.pos);
        }
        return static_cast<unsigned>(std::stoul(tok.text));
    }

    const Token &peek() const
    {
        return tokens_[index_];
    }
    Token advance()
    {
        Token t = tokens_[index_];
        if (index_ + 1 < tokens_.size()) {
            ++index_;
        }
        return t;
    }
    [[noreturn]] void fail(const std::string &msg, std::size_t pos) const
    {
        auto loc = src_.at(pos);
        throw parse_error(msg, loc.line, loc.column);
    }

    const SourceText &src_;
    const SymbolTable &symbols_;
    std::vector<Token> tokens_;
    std::size_t index_ = 0;
};

SymbolTable make_symbols(const std::vector<std::string> &names)
{
    SymbolTable symbols;
    symbols.emplace("x", var_x);
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == "x") {
            throw parse_error("'x' is reserved for the distinguished variable", 0, 0);
        }
        if (!symbols.emplace(names[i], var_y(static_cast<std::uint32_t>(i + 1))).second) {
            throw parse_error("duplicate identifier '" + names[i] + "'", 0, 0);
        }
    }
    return symbols;
}

// ---------------------------------------------------------------------------
// Documents

struct Line {
    std::size_t number;
    std::string text; // comment stripped
};

std::vector<Line> split_lines(std::string_view doc)
{
    std::vector<Line> lines;
    std::size_t number = 1;
    std::size_t start = 0;
    while (start <= doc.size()) {
        auto end = doc.find('\n', start);
        if (end == std::string_view::npos) {
            end = doc.size();
        }
        std::string text(doc.substr(start, end - start));
        if (!text.empty() && text.back() == '\r') {
            text.pop_back();
        }
        if (auto hash = text.find('#'); hash != std::string::npos) {
            text.erase(hash);
        }
        lines.push_back({number++, std::move(text)});
        if (end == doc.size()) {
            break;
        }
        start = end + 1;
    }
    return lines;
}

bool is_blank(std::string_view s)
{
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

std::string trim(std::string_view s)
{
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
    }
    return std::string(s.substr(b, e - b));
}

std::size_t leading_spaces(std::string_view s)
{
    std::size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
        ++i;
    }
    return i;
}

struct Word {
    std::string text;
    std::size_t column;
};

std::vector<Word> split_words(std::string_view s, std::size_t first_column)
{
    std::vector<Word> out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
            continue;
        }
        const std::size_t b = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
        }
        out.push_back({std::string(s.substr(b, i - b)), first_column + b});
    }
    return out;
}

bool is_identifier(std::string_view s)
{
    if (s.empty() || !is_ident_start(s.front())) {
        return false;
    }
    for (char c : s) {
        if (!is_ident_char(c)) {
            return false;
        }
    }
    return true;
}

// Does the physical line leave the expression open?
bool continues(std::string_view text, int &depth)
{
    for (char c : text) {
        if (c == '(') {
            ++depth;
        } else if (c == ')') {
            --depth;
        }
    }
    const std::string t = trim(text);
    if (depth > 0) {
        return true;
    }
    if (t.empty()) {
        return false;
    }
    const char last = t.back();
    return last == '+' || last == '-' || last == '*' || last == '^' || last == '=' || last == '(';
}

enum class Section { None, Eqs, Sde, Init };

struct Directive {
    std::string key;                 // vars, order, eqs, init, sde, inverse
    std::optional<std::size_t> slot; // k in `order k:`
    std::string body;
    std::size_t body_column;
};

std::optional<Directive> match_directive(const Line &line)
{
    const auto colon = line.text.find(':');
    if (colon == std::string::npos) {
        return std::nullopt;
    }
    const auto head = split_words(std::string_view(line.text).substr(0, colon), 1);
    Directive d;
    d.body = line.text.substr(colon + 1);
    d.body_column = colon + 2;
    auto fail = [&](const std::string &msg) { throw parse_error(msg, line.number, head.empty() ? 1 : head[0].column); };
    if (head.empty()) {
        fail("missing directive name before ':'");
    }
    d.key = head[0].text;
    static const std::set<std::string> known = {"vars", "order", "eqs", "init", "sde", "inverse"};
    if (known.count(d.key) == 0) {
        fail("unknown directive '" + d.key + "'");
    }
    if (head.size() == 2 && d.key == "order") {
        const auto &k = head[1].text;
        if (k.empty() || k.size() > 6 || !std::all_of(k.begin(), k.end(), is_digit)) {
            throw parse_error("expected equation number after 'order'", line.number, head[1].column);
        }
        d.slot = std::stoul(k);
    } else if (head.size() != 1) {
        fail("malformed directive");
    }
    return d;
}

struct PendingExpr {
    SourceText src;
    std::size_t line = 0;
};

struct RawDocument {
    std::size_t end_line = 1; // position reported for missing sections
    std::size_t eqs_line = 0;
    std::size_t sde_line = 0;
    std::vector<Word> vars;
    std::size_t vars_line = 0;
    std::optional<std::vector<Word>> order;
    std::size_t order_line = 0;
    std::vector<std::tuple<std::size_t, std::vector<Word>, std::size_t>> slot_orders; // slot, words, line
    std::optional<Word> inverse;
    std::size_t inverse_line = 0;
    bool has_eqs = false;
    bool has_sde = false;
    bool has_init = false;
    std::vector<PendingExpr> eqs;
    std::vector<PendingExpr> sde;
    std::vector<Word> init_list;
    std::size_t init_line = 0;
    std::vector<PendingExpr> init_eqs;
};

RawDocument scan(std::string_view document)
{
    RawDocument raw;
    Section section = Section::None;
    std::optional<PendingExpr> open;
    int depth = 0;
    std::vector<PendingExpr> *target = nullptr;

    auto flush = [&]() {
        if (open && target != nullptr) {
            target->push_back(std::move(*open));
        }
        open.reset();
        depth = 0;
    };

    auto feed = [&](std::string_view text, std::size_t line, std::size_t column) {
        if (is_blank(text) && !open) {
            return;
        }
        if (!open) {
            open.emplace();
            open->line = line;
        } else {
            open->src.append(" ", line, column);
        }
        open->src.append(text, line, column);
        if (!continues(text, depth)) {
            flush();
        }
    };

    const auto lines = split_lines(document);
    raw.end_line = lines.empty() ? 1 : lines.back().number;
    for (const Line &line : lines) {
        if (open) {
            // Inside a multi-line expression every line belongs to it.
            feed(line.text, line.number, 1);
            continue;
        }
        if (is_blank(line.text)) {
            continue;
        }
        // Lines of the form `name(0) = r` contain no ':' and are handled as
        // section content.
        auto directive = match_directive(line);
        if (!directive) {
            switch (section) {
            case Section::Eqs:
            case Section::Sde:
                feed(line.text, line.number, 1);
                break;
            case Section::Init:
                if (!raw.init_list.empty()) {
                    throw parse_error("unexpected content after init list", line.number, leading_spaces(line.text) + 1);
                }
                feed(line.text, line.number, 1);
                break;
            case Section::None:
                throw parse_error("content outside of a section", line.number, leading_spaces(line.text) + 1);
            }
            continue;
        }
        flush();
        const Directive &d = *directive;
        auto words = split_words(d.body, d.body_column);
        auto once = [&](bool &flag, const char *what) {
            if (flag) {
                throw parse_error(std::string("duplicate '") + what + ":' section", line.number, 1);
            }
            flag = true;
        };
        if (d.key == "vars") {
            if (!raw.vars.empty()) {
                throw parse_error("duplicate 'vars:' directive", line.number, 1);
            }
            raw.vars = std::move(words);
            raw.vars_line = line.number;
            if (raw.vars.empty()) {
                throw parse_error("'vars:' lists no unknowns", line.number, d.body_column);
            }
            section = Section::None;
        } else if (d.key == "order") {
            if (d.slot) {
                raw.slot_orders.emplace_back(*d.slot, std::move(words), line.number);
            } else {
                if (raw.order) {
                    throw parse_error("duplicate 'order:' directive", line.number, 1);
                }
                raw.order = std::move(words);
                raw.order_line = line.number;
            }
            section = Section::None;
        } else if (d.key == "inverse") {
            if (words.size() != 1) {
                throw parse_error("'inverse:' takes exactly one name", line.number, d.body_column);
            }
            raw.inverse = words[0];
            raw.inverse_line = line.number;
            section = Section::None;
        } else if (d.key == "eqs") {
            once(raw.has_eqs, "eqs");
            raw.eqs_line = line.number;
            section = Section::Eqs;
            target = &raw.eqs;
            feed(d.body, line.number, d.body_column);
        } else if (d.key == "sde") {
            once(raw.has_sde, "sde");
            raw.sde_line = line.number;
            section = Section::Sde;
            target = &raw.sde;
            feed(d.body, line.number, d.body_column);
        } else if (d.key == "init") {
            once(raw.has_init, "init");
            section = Section::Init;
            target = &raw.init_eqs;
            raw.init_list = std::move(words);
            raw.init_line = line.number;
        }
    }
    if (open) {
        auto loc = open->src.at(open->src.text.size());
        throw parse_error("unterminated expression (unbalanced parentheses or trailing operator)", loc.line, loc.column);
    }
    return raw;
}

std::vector<std::string> declared_names(const RawDocument &raw)
{
    if (raw.vars.empty()) {
        throw parse_error("missing 'vars:' directive", raw.end_line, 1);
    }
    std::vector<std::string> names;
    std::set<std::string> seen;
    for (const auto &w : raw.vars) {
        if (!is_identifier(w.text)) {
            throw parse_error("invalid identifier '" + w.text + "'", raw.vars_line, w.column);
        }
        if (w.text == "x") {
            throw parse_error("'x' is reserved for the distinguished variable", raw.vars_line, w.column);
        }
        if (!seen.insert(w.text).second) {
            throw parse_error("duplicate identifier '" + w.text + "'", raw.vars_line, w.column);
        }
        names.push_back(w.text);
    }
    return names;
}

VarOrder order_from_words(const std::vector<Word> &words, const std::vector<std::string> &names, std::size_t line)
{
    if (words.size() != names.size()) {
        throw parse_error("order lists " + std::to_string(words.size()) + " unknowns, expected "
                              + std::to_string(names.size()),
                          line, words.empty() ? 1 : words[0].column);
    }
    std::vector<std::uint32_t> seq;
    std::set<std::string> seen;
    for (const auto &w : words) {
        auto it = std::find(names.begin(), names.end(), w.text);
        if (it == names.end()) {
            throw parse_error("unknown identifier '" + w.text + "' in order", line, w.column);
        }
        if (!seen.insert(w.text).second) {
            throw parse_error("duplicate identifier '" + w.text + "' in order", line, w.column);
        }
        seq.push_back(static_cast<std::uint32_t>(it - names.begin() + 1));
    }
    return VarOrder::from_sequence(std::move(seq));
}

std::vector<Rational> init_values(const RawDocument &raw, std::size_t n)
{
    if (!raw.has_init) {
        throw parse_error("missing 'init:' directive", raw.end_line, 1);
    }
    std::vector<Rational> r0;
    for (const auto &w : raw.init_list) {
        try {
            r0.push_back(parse_rational(w.text));
        } catch (const std::invalid_argument &) {
            throw parse_error("malformed rational '" + w.text + "'", raw.init_line, w.column);
        }
    }
    if (r0.size() != n) {
        throw parse_error("'init:' lists " + std::to_string(r0.size()) + " values for " + std::to_string(n)
                              + " unknowns",
                          raw.init_line, 1);
    }
    return r0;
}

// Splits "name' = rhs" or "name(0) = r" at the first '='.
struct LabeledLine {
    std::string label;
    std::size_t label_pos;
    SourceText rhs;
};

LabeledLine split_label(const PendingExpr &e)
{
    const auto eq = e.src.text.find('=');
    if (eq == std::string::npos) {
        auto loc = e.src.at(0);
        throw parse_error("expected '='", loc.line, loc.column);
    }
    LabeledLine out;
    const std::string head = e.src.text.substr(0, eq);
    out.label_pos = leading_spaces(head);
    out.label = trim(head);
    for (std::size_t i = eq + 1; i < e.src.text.size(); ++i) {
        out.rhs.text.push_back(e.src.text[i]);
        out.rhs.where.push_back(e.src.at(i));
    }
    return out;
}

} // namespace

Polynomial parse_expr(std::string_view text, const SymbolTable &symbols)
{
    SourceText src;
    src.append(text, 1, 1);
    return ExprParser(src, symbols).parse_top(false);
}

Polynomial parse_expr(std::string_view text, const std::vector<std::string> &names)
{
    return parse_expr(text, make_symbols(names));
}

PolySystem parse_system(std::string_view document)
{
    const RawDocument raw = scan(document);
    if (raw.has_sde) {
        throw parse_error("document is an SDE file, not a polynomial system", raw.sde_line, 1);
    }
    if (raw.inverse) {
        throw parse_error("'inverse:' is only valid in SDE files", raw.inverse_line, 1);
    }
    PolySystem sys;
    sys.names = declared_names(raw);
    const std::size_t n = sys.names.size();
    if (!raw.has_eqs) {
        throw parse_error("missing 'eqs:' directive", raw.end_line, 1);
    }
    const SymbolTable symbols = make_symbols(sys.names);
    for (const auto &e : raw.eqs) {
        Polynomial p = ExprParser(e.src, symbols).parse_top(true);
        if (p.is_zero()) {
            throw parse_error("equation is identically zero", e.line, 1);
        }
        sys.equations.push_back(std::move(p));
    }
    if (sys.equations.size() != n) {
        throw parse_error("'vars:' declares " + std::to_string(n) + " unknowns but 'eqs:' has "
                              + std::to_string(sys.equations.size()) + " equations",
                          raw.eqs.empty() ? raw.eqs_line : raw.eqs.back().line, 1);
    }
    if (!raw.init_eqs.empty()) {
        throw parse_error("system files take 'init:' as a list of rationals", raw.init_eqs.front().line, 1);
    }
    sys.r0 = init_values(raw, n);
    sys.order.global = raw.order ? order_from_words(*raw.order, sys.names, raw.order_line) : VarOrder::identity(n);
    for (const auto &[slot, words, line] : raw.slot_orders) {
        if (slot < 1 || slot > n) {
            throw parse_error("order override for nonexistent equation " + std::to_string(slot), line, 1);
        }
        if (sys.order.per_equation.size() < n) {
            sys.order.per_equation.resize(n);
        }
        if (sys.order.per_equation[slot - 1]) {
            throw parse_error("duplicate order override for equation " + std::to_string(slot), line, 1);
        }
        sys.order.per_equation[slot - 1] = order_from_words(words, sys.names, line);
    }
    sys.validate();
    return sys;
}

SdeSystem parse_sde(std::string_view document)
{
    const RawDocument raw = scan(document);
    if (!raw.has_sde) {
        throw parse_error("missing 'sde:' section", raw.end_line, 1);
    }
    if (raw.has_eqs || raw.order || !raw.slot_orders.empty()) {
        throw parse_error("'eqs:' and 'order:' are not valid in SDE files",
                          raw.has_eqs ? raw.eqs_line : raw.order ? raw.order_line : std::get<2>(raw.slot_orders.front()), 1);
    }
    const std::vector<std::string> names = declared_names(raw);
    const std::size_t m = names.size();

    SdeSystem sys;
    sys.names = names;
    SymbolTable symbols;
    symbols.emplace("x", var_x);
    std::uint32_t next_y = 1;
    bool has_inverse = false;
    for (const auto &nm : names) {
        VarId v;
        if (raw.inverse && raw.inverse->text == nm) {
            v = var_w;
            has_inverse = true;
        } else {
            v = var_y(next_y++);
        }
        sys.vars.push_back(v);
        symbols.emplace(nm, v);
    }
    if (raw.inverse && !has_inverse) {
        throw parse_error("'inverse:' names an undeclared variable", raw.inverse_line, raw.inverse->column);
    }

    std::vector<std::optional<Polynomial>> rhs(m);
    for (const auto &e : raw.sde) {
        LabeledLine l = split_label(e);
        const auto loc = e.src.at(l.label_pos);
        if (l.label.size() < 2 || l.label.back() != '\'') {
            throw parse_error("expected \"name' = ...\"", loc.line, loc.column);
        }
        const std::string nm = trim(std::string_view(l.label).substr(0, l.label.size() - 1));
        auto it = std::find(names.begin(), names.end(), nm);
        if (it == names.end()) {
            throw parse_error("unknown identifier '" + nm + "'", loc.line, loc.column);
        }
        auto &slot = rhs[static_cast<std::size_t>(it - names.begin())];
        if (slot) {
            throw parse_error("duplicate equation for '" + nm + "'", loc.line, loc.column);
        }
        slot = ExprParser(l.rhs, symbols).parse_top(false);
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (!rhs[i]) {
            throw parse_error("no equation for '" + names[i] + "'", raw.vars_line, raw.vars[i].column);
        }
        sys.rhs.push_back(std::move(*rhs[i]));
    }

    if (!raw.init_eqs.empty()) {
        std::vector<std::optional<Rational>> init(m);
        for (const auto &e : raw.init_eqs) {
            LabeledLine l = split_label(e);
            const auto loc = e.src.at(l.label_pos);
            const std::string suffix = "(0)";
            std::string label;
            for (char c : l.label) {
                if (!std::isspace(static_cast<unsigned char>(c))) {
                    label.push_back(c);
                }
            }
            if (label.size() <= suffix.size() || label.compare(label.size() - suffix.size(), suffix.size(), suffix) != 0) {
                throw parse_error("expected \"name(0) = value\"", loc.line, loc.column);
            }
            const std::string nm = label.substr(0, label.size() - suffix.size());
            auto it = std::find(names.begin(), names.end(), nm);
            if (it == names.end()) {
                throw parse_error("unknown identifier '" + nm + "'", loc.line, loc.column);
            }
            const std::string value = trim(l.rhs.text);
            auto &slot = init[static_cast<std::size_t>(it - names.begin())];
            if (slot) {
                throw parse_error("duplicate initial value for '" + nm + "'", loc.line, loc.column);
            }
            try {
                slot = parse_rational(value);
            } catch (const std::invalid_argument &) {
                const auto vloc = l.rhs.at(leading_spaces(l.rhs.text));
                throw parse_error("malformed rational '" + value + "'", vloc.line, vloc.column);
            }
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (!init[i]) {
                throw parse_error("no initial value for '" + names[i] + "'", raw.init_line, 1);
            }
            sys.init.push_back(*init[i]);
        }
    } else {
        sys.init = init_values(raw, m);
    }
    sys.validate();
    return sys;
}

bool is_sde_document(std::string_view document)
{
    for (const Line &line : split_lines(document)) {
        const auto t = trim(line.text);
        if (t.rfind("sde", 0) == 0) {
            const auto rest = trim(std::string_view(t).substr(3));
            if (!rest.empty() && rest.front() == ':') {
                return true;
            }
        }
    }
    return false;
}

std::variant<PolySystem, SdeSystem> parse_document(std::string_view document)
{
    if (is_sde_document(document)) {
        return parse_sde(document);
    }
    return parse_system(document);
}

std::string format_system(const PolySystem &sys)
{
    const VarNames vn = sys.var_names();
    auto order_line = [&](const VarOrder &o) {
        std::string s;
        for (auto i : o.sequence()) {
            s += ' ' + sys.names[i - 1];
        }
        return s;
    };
    std::ostringstream out;
    out << "vars:";
    for (const auto &n : sys.names) {
        out << ' ' << n;
    }
    out << '\n';
    if (sys.order.global.size() != 0 && sys.order.global != VarOrder::identity(sys.n())) {
        out << "order:" << order_line(sys.order.global) << '\n';
    }
    for (std::size_t i = 0; i < sys.order.per_equation.size(); ++i) {
        if (sys.order.per_equation[i]) {
            out << "order " << (i + 1) << ':' << order_line(*sys.order.per_equation[i]) << '\n';
        }
    }
    out << "eqs:\n";
    for (const auto &p : sys.equations) {
        out << "  " << to_string(p, vn) << '\n';
    }
    out << "init:";
    for (const auto &r : sys.r0) {
        out << ' ' << format_rational(r);
    }
    out << '\n';
    return out.str();
}

std::string format_sde(const SdeSystem &sys)
{
    const VarNames vn = sys.var_names();
    std::ostringstream out;
    out << "vars:";
    for (const auto &n : sys.names) {
        out << ' ' << n;
    }
    out << '\n';
    for (std::size_t i = 0; i < sys.size(); ++i) {
        if (sys.vars[i].kind == VarKind::W) {
            out << "inverse: " << sys.names[i] << '\n';
        }
    }
    out << "sde:\n";
    for (std::size_t i = 0; i < sys.size(); ++i) {
        out << "  " << sys.names[i] << "' = " << to_string(sys.rhs[i], vn) << '\n';
    }
    out << "init:\n";
    for (std::size_t i = 0; i < sys.size(); ++i) {
        out << "  " << sys.names[i] << "(0) = " << format_rational(sys.init[i]) << '\n';
    }
    return out.str();
}

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace streamift

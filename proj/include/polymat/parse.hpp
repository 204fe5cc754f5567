#pragma once

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "polymat/ideal.hpp"

namespace polymat {

/// Syntax error with position and expectation info.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

struct ParseResult {
    MonomialIdeal ideal;
    bool implied_vars;  // true when no `vars` header was given
};

/// Parses the ideal text grammar:
///   input  ::= ('vars' ident (',' ident)*)? '(' mono (',' mono)* ')'
///   mono   ::= factor ('*' factor)*
///   factor ::= var ('^' uint)?
/// Without a `vars` header the variables must be named x1..xn and n is the
/// largest index that occurs.
class IdealParser {
public:
    explicit IdealParser(std::string_view text) : text_(text) {}

    ParseResult parse() {
        skip_ws();
        std::optional<std::vector<std::string>> declared;
        if (peek_word("vars")) {
            consume_word("vars");
            declared = parse_name_list();
        }
        auto raw = parse_generator_list();
        if (declared) {
            VariableSet vars(*declared);
            return {build(vars, raw), false};
        }
        // Implied x<k> naming: every variable must look like x<digits>.
        int n = 0;
        for (const auto& mono : raw) {
            for (const auto& [name, exp, line, col] : mono) {
                std::optional<int> k = implied_index(name);
                if (!k)
                    throw ParseError(line, col,
                                     "unknown variable '" + name +
                                         "' (no vars declaration; expected x<k>)");
                n = std::max(n, *k);
            }
        }
        VariableSet vars = VariableSet::numbered(n);
        return {build(vars, raw), true};
    }

private:
    struct Factor {
        std::string name;
        int exponent;
        int line;
        int column;
    };
    using RawMonomial = std::vector<Factor>;

    static std::optional<int> implied_index(const std::string& name) {
        if (name.size() < 2 || name[0] != 'x') return std::nullopt;
        int k = 0;
        for (std::size_t i = 1; i < name.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
            k = k * 10 + (name[i] - '0');
        }
        return k >= 1 ? std::optional<int>(k) : std::nullopt;
    }

    MonomialIdeal build(const VariableSet& vars, const std::vector<RawMonomial>& raw) {
        std::vector<Monomial> gens;
        gens.reserve(raw.size());
        for (const auto& mono : raw) {
            std::vector<int> e(static_cast<std::size_t>(vars.size()), 0);
            for (const auto& f : mono) {
                auto idx = vars.index(f.name);
                if (!idx)
                    throw ParseError(f.line, f.column, "unknown variable '" + f.name + "'");
                e[static_cast<std::size_t>(*idx)] += f.exponent;
            }
            gens.emplace_back(std::move(e));
        }
        return MonomialIdeal(vars, std::move(gens));
    }

    std::vector<std::string> parse_name_list() {
        std::vector<std::string> names;
        names.push_back(expect_ident("variable name"));
        while (try_consume(',')) names.push_back(expect_ident("variable name"));
        return names;
    }

    std::vector<RawMonomial> parse_generator_list() {
        expect('(');
        skip_ws();
        if (peek() == ')')
            throw ParseError(line_, col_, "empty generator list");
        std::vector<RawMonomial> monos;
        monos.push_back(parse_monomial());
        while (try_consume(',')) monos.push_back(parse_monomial());
        expect(')');
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError(line_, col_, "trailing input after ideal");
        return monos;
    }

    RawMonomial parse_monomial() {
        RawMonomial factors;
        factors.push_back(parse_factor());
        while (try_consume('*')) factors.push_back(parse_factor());
        return factors;
    }

    Factor parse_factor() {
        skip_ws();
        int line = line_, col = col_;
        std::string name = expect_ident("variable");
        int exp = 1;
        if (try_consume('^')) {
            skip_ws();
            int eline = line_, ecol = col_;
            exp = expect_uint();
            if (exp == 0)
                throw ParseError(eline, ecol, "zero exponent literal");
        }
        return {std::move(name), exp, line, col};
    }

    // --- lexer ---

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void advance() {
        if (pos_ < text_.size()) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            advance();
    }

    bool try_consume(char c) {
        skip_ws();
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c)
            throw ParseError(line_, col_,
                             std::string("expected '") + c + "', found " + found_token());
        advance();
    }

    bool peek_word(std::string_view word) {
        skip_ws();
        if (text_.substr(pos_, word.size()) != word) return false;
        std::size_t after = pos_ + word.size();
        if (after < text_.size()) {
            char c = text_[after];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') return false;
        }
        return true;
    }

    void consume_word(std::string_view word) {
        for (std::size_t i = 0; i < word.size(); ++i) advance();
    }

    std::string expect_ident(const std::string& what) {
        skip_ws();
        if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_')
            throw ParseError(line_, col_, "expected " + what + ", found " + found_token());
        std::string out;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' ||
               peek() == '#') {
            out.push_back(peek());
            advance();
        }
        return out;
    }

    int expect_uint() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError(line_, col_, "expected integer, found " + found_token());
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            if (v > 1'000'000) throw ParseError(line_, col_, "exponent too large");
            advance();
        }
        return static_cast<int>(v);
    }

    std::string found_token() const {
        if (pos_ >= text_.size()) return "end of input";
        return std::string("'") + text_[pos_] + "'";
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

inline ParseResult parse_ideal_text(std::string_view text) { return IdealParser(text).parse(); }

inline MonomialIdeal parse_ideal(std::string_view text) {
    return IdealParser(text).parse().ideal;
}

inline std::string render(const Monomial& m, const VariableSet& vars) {
    if (m.is_unit()) return "1";
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < m.size(); ++i) {
        int e = m.degree_in(i);
        if (e == 0) continue;
        if (!first) out << '*';
        out << vars.name(i);
        if (e > 1) out << '^' << e;
        first = false;
    }
    return out.str();
}

/// Canonical rendering; reparses to an equal ideal. The `vars` header is
/// emitted only when the names are not the implied x1..xn.
inline std::string render(const MonomialIdeal& ideal) {
    const VariableSet& vars = ideal.vars();
    bool implied = vars == VariableSet::numbered(vars.size());
    std::ostringstream out;
    if (!implied) {
        out << "vars ";
        for (int i = 0; i < vars.size(); ++i) {
            if (i) out << ',';
            out << vars.name(i);
        }
        out << ' ';
    }
    out << '(';
    bool first = true;
    for (const Monomial& g : ideal.gens()) {
        if (!first) out << ", ";
        out << render(g, vars);
        first = false;
    }
    out << ')';
    return out.str();
}

}  // namespace polymat

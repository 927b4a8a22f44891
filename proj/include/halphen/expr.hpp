/*
   Copyright 2026 The Halphen Library Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef HALPHEN_EXPR_HPP
#define HALPHEN_EXPR_HPP

#include <cctype>

#include "invariant_poly.hpp"

namespace halphen {

class ParseError : public Error {
   public:
    ParseError(std::size_t column, const std::string& message)
        : Error("PARSE", message + " at column " + std::to_string(column + 1)),
          column_(column) {}

    std::size_t column() const { return column_; }

   private:
    std::size_t column_;
};

/*
 * Invariant-expression grammar, bidegree-checked while parsing:
 *
 *   expr   := ['-'] term (('+' | '-') term)*
 *   term   := factor ('*' factor)*
 *   factor := atom ['^' integer]
 *   atom   := rational | utoken | '(' expr ')'
 *   utoken := 'U' ['_' digit+]        digits are single parts, e.g. U_21
 *
 * Sums must agree in reduced bidegree; a bare rational has bidegree (0, 0).
 */
class ExprParser {
   public:
    ExprParser(std::string text, int n) : text_(std::move(text)), n_(n) {}

    InvariantPoly parse() {
        InvariantPoly value = parse_expr();
        skip_space();
        if (pos_ != text_.size()) throw ParseError(pos_, "unexpected character");
        return value;
    }

   private:
    InvariantPoly parse_expr() {
        skip_space();
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos_;
        }
        InvariantPoly value = parse_term();
        if (negate) value = -value;
        for (;;) {
            skip_space();
            char c = peek();
            if (c != '+' && c != '-') return value;
            std::size_t at = pos_;
            ++pos_;
            InvariantPoly rhs = parse_term();
            try {
                value = (c == '+') ? value + rhs : value - rhs;
            } catch (const Error& e) {
                throw ParseError(at, e.what());
            }
        }
    }

    InvariantPoly parse_term() {
        InvariantPoly value = parse_factor();
        for (;;) {
            skip_space();
            if (peek() != '*') return value;
            ++pos_;
            value = value * parse_factor();
        }
    }

    InvariantPoly parse_factor() {
        InvariantPoly base = parse_atom();
        skip_space();
        if (peek() != '^') return base;
        ++pos_;
        skip_space();
        std::size_t at = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError(pos_, "expected a non-negative integer exponent");
        long e = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            e = e * 10 + (peek() - '0');
            if (e > 64) throw ParseError(at, "exponent too large");
            ++pos_;
        }
        return base.pow(static_cast<int>(e));
    }

    InvariantPoly parse_atom() {
        skip_space();
        char c = peek();
        if (c == '(') {
            ++pos_;
            InvariantPoly value = parse_expr();
            skip_space();
            if (peek() != ')') throw ParseError(pos_, "expected ')'");
            ++pos_;
            return value;
        }
        if (c == 'U') return parse_utoken();
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational_atom();
        throw ParseError(pos_, "expected a rational, 'U' token or '('");
    }

    InvariantPoly parse_utoken() {
        std::size_t at = pos_;
        ++pos_;  // 'U'
        if (peek() != '_') return InvariantPoly::coordinate(n_, Partition{});
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError(pos_, "expected partition digits after 'U_'");
        std::vector<int> parts;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            parts.push_back(peek() - '0');
            ++pos_;
        }
        try {
            Partition lambda(std::move(parts));
            check_partition_fits(lambda, n_);
            return InvariantPoly::coordinate(n_, lambda);
        } catch (const Error& e) {
            throw ParseError(at, e.what());
        }
    }

    InvariantPoly parse_rational_atom() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (peek() == '/') {
            ++pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError(pos_, "expected denominator digits");
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        }
        return InvariantPoly::scalar(n_, parse_rational(text_.substr(start, pos_ - start)));
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    std::string text_;
    std::size_t pos_ = 0;
    int n_;
};

inline InvariantPoly parse_invariant(const std::string& text, int n) {
    return ExprParser(text, n).parse();
}

}  // namespace halphen

#endif

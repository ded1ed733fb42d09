/*
   Copyright 2026 The heights Authors

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

#include "heights/parse.hpp"

#include <cctype>
#include <string>

#include "heights/errors.hpp"

namespace heights {
namespace {

class Parser {
  public:
    Parser(std::string_view text, const PrimeField& field) : text_(text), field_(field) {}

    RatFunc run() {
        RatFunc r = expr();
        skip_ws();
        if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
        return r;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, pos_ + 1); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    RatFunc expr() {
        RatFunc acc = term();
        for (;;) {
            const char c = peek();
            if (c == '+') {
                ++pos_;
                acc += term();
            } else if (c == '-') {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    static bool starts_factor(char c) {
        return c == '(' || c == 't' || std::isdigit(static_cast<unsigned char>(c));
    }

    RatFunc term() {
        RatFunc acc = unary();
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                acc *= unary();
            } else if (c == '/') {
                if (++divisions_ > 1) fail("at most one '/' is allowed");
                ++pos_;
                const auto at = pos_;
                RatFunc d = unary();
                if (d.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                acc /= d;
            } else if (starts_factor(c)) {
                acc *= power();
            } else {
                return acc;
            }
        }
    }

    RatFunc unary() {
        if (peek() == '-') {
            ++pos_;
            return -unary();
        }
        if (peek() == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    RatFunc power() {
        RatFunc base = atom();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("expected a nonnegative integer exponent");
            std::uint64_t e = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                e = e * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
                if (e > 100000) fail("exponent too large");
            }
            return base.pow(static_cast<std::int64_t>(e));
        }
        return base;
    }

    RatFunc atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            RatFunc r = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return r;
        }
        if (c == 't') {
            ++pos_;
            return RatFunc::variable(field_);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::uint64_t v = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                v = (v * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0')) % field_.p();
            return RatFunc(Poly(field_, {v}));
        }
        if (c == '\0') fail("unexpected end of input");
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    const PrimeField& field_;
    std::size_t pos_ = 0;
    int divisions_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(std::string_view text, const PrimeField& field) { return Parser(text, field).run(); }

}  // namespace heights

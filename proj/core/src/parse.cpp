// Copyright 2026 The laurent-duality Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ldual/parse.hpp"

#include <cctype>

#include "ldual/errors.hpp"

namespace ldual {

namespace {

class Parser {
  public:
    Parser(std::string_view text, Field field, std::span<const std::string> vars)
        : text_(text), field_(field), vars_(vars) {}

    TermMap run() {
        TermMap r = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return r;
    }

  private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError(why + " at offset " + std::to_string(pos_) + " in \"" +
                         std::string(text_) + "\"");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Exponent zero_exp() const { return Exponent(vars_.size(), 0); }

    TermMap constant(const Scalar& s) const {
        TermMap t;
        if (!s.is_zero()) t.emplace(zero_exp(), s);
        return t;
    }

    static void add_into(TermMap& acc, const Exponent& e, const Scalar& c) {
        auto [it, inserted] = acc.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) acc.erase(it);
        }
    }

    static TermMap mul(const TermMap& a, const TermMap& b) {
        TermMap r;
        for (const auto& [ea, ca] : a)
            for (const auto& [eb, cb] : b) add_into(r, add_exponents(ea, eb), ca * cb);
        return r;
    }

    TermMap inverse_of(const TermMap& a) {
        if (a.size() != 1) fail("can only invert a single nonzero term");
        const auto& [e, c] = *a.begin();
        TermMap r;
        r.emplace(negate(e), c.inverse());
        return r;
    }

    TermMap power(const TermMap& base, std::int64_t e) {
        if (e < 0) return power(inverse_of(base), -e);
        TermMap r = constant(field_.one());
        for (std::int64_t i = 0; i < e; ++i) r = mul(r, base);
        return r;
    }

    TermMap expr() {
        TermMap acc;
        bool negate_next = false;
        skip_ws();
        if (accept('-')) negate_next = true;
        else accept('+');
        while (true) {
            TermMap t = term();
            for (const auto& [e, c] : t) add_into(acc, e, negate_next ? -c : c);
            if (accept('+')) negate_next = false;
            else if (accept('-')) negate_next = true;
            else break;
        }
        return acc;
    }

    TermMap term() {
        TermMap acc = unary();
        while (true) {
            if (accept('*')) acc = mul(acc, unary());
            else if (accept('/')) acc = mul(acc, inverse_of(unary()));
            else break;
        }
        return acc;
    }

    TermMap unary() {
        if (accept('-')) {
            TermMap t = unary();
            for (auto& [e, c] : t) c = -c;
            return t;
        }
        return power_expr();
    }

    std::int64_t integer_exponent() {
        skip_ws();
        bool neg = false;
        if (accept('-')) neg = true;
        else if (accept('(')) {
            std::int64_t v = integer_exponent();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        skip_ws();
        const std::size_t start = pos_;
        std::int64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = checked_add(checked_mul(v, 10), text_[pos_] - '0');
            ++pos_;
        }
        if (pos_ == start) fail("expected integer exponent");
        return neg ? -v : v;
    }

    TermMap power_expr() {
        TermMap base = atom();
        if (accept('^')) return power(base, integer_exponent());
        return base;
    }

    TermMap atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            TermMap r = expr();
            if (!accept(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            mpz_class v(std::string(text_.substr(start, pos_ - start)));
            return constant(field_.from_rational(mpq_class(v)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const std::string name(text_.substr(start, pos_ - start));
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (vars_[i] != name) continue;
                Exponent e = zero_exp();
                e[i] = 1;
                TermMap t;
                t.emplace(std::move(e), field_.one());
                return t;
            }
            if (name == "z") return constant(field_.generator());
            fail("unknown symbol '" + name + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    Field field_;
    std::span<const std::string> vars_;
    std::size_t pos_ = 0;
};

}  // namespace

TermMap parse_expression(std::string_view text, Field field, std::span<const std::string> variables) {
    return Parser(text, field, variables).run();
}

Scalar parse_scalar(std::string_view text, Field field) {
    const TermMap t = parse_expression(text, field, {});
    if (t.empty()) return field.zero();
    return t.begin()->second;
}

}  // namespace ldual

/*
   Copyright 2026 The lehmer-ff Authors

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

// Recursive-descent parser for the "+ - * ^ ( )" term grammar shared by
// field elements (variable t) and polynomials (variables x and t).
//
//   sum    := ['-'] term (('+' | '-') term)*
//   term   := power ('*' power)*
//   power  := atom ['^' integer]
//   atom   := integer | name | '(' sum ')'
//
// The algebra supplies the value type and its ring operations.

#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

#include "lehmer_ff/errors.hpp"

namespace lehmer_ff::detail {

template <class Algebra>
class ExprParser {
public:
    using Value = typename Algebra::Value;

    ExprParser(std::string_view text, const Algebra& algebra) : algebra_(algebra)
    {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c)))
                text_.push_back(c);
    }

    Value parse()
    {
        if (text_.empty())
            fail("empty expression");
        Value v = sum();
        if (pos_ != text_.size())
            fail("unexpected character");
        return v;
    }

private:
    [[noreturn]] void fail(const char* what) const
    {
        throw ParseError(std::string(what) + " at offset " + std::to_string(pos_) + " in '" + text_ + "'");
    }

    bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

    bool accept(char c)
    {
        if (!peek(c))
            return false;
        ++pos_;
        return true;
    }

    Value sum()
    {
        const bool negate = accept('-');
        Value acc = term();
        if (negate)
            acc = algebra_.neg(acc);
        for (;;) {
            if (accept('+'))
                acc = algebra_.add(acc, term());
            else if (accept('-'))
                acc = algebra_.sub(acc, term());
            else
                return acc;
        }
    }

    Value term()
    {
        Value acc = power();
        while (accept('*'))
            acc = algebra_.mul(acc, power());
        return acc;
    }

    Value power()
    {
        Value base = atom();
        if (accept('^'))
            return algebra_.pow(base, integer());
        return base;
    }

    Value atom()
    {
        if (accept('(')) {
            Value v = sum();
            if (!accept(')'))
                fail("missing ')'");
            return v;
        }
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            return algebra_.integer(integer());
        if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            const char name = text_[pos_++];
            if (!algebra_.has_variable(name)) {
                --pos_;
                fail("unknown variable");
            }
            return algebra_.variable(name);
        }
        fail("expected a number, a variable or '('");
    }

    std::uint64_t integer()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected an integer");
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
        if (ec != std::errc())
            fail("integer out of range");
        return v;
    }

    const Algebra& algebra_;
    std::string text_;
    std::size_t pos_ = 0;
};

}  // namespace lehmer_ff::detail

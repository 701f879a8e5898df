/*
   Copyright 2026 The frobtest Authors

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

#ifndef FROBTEST_PARSER_HPP
#define FROBTEST_PARSER_HPP

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frobtest/errors.hpp"
#include "frobtest/polynomial.hpp"
#include "frobtest/ring.hpp"

namespace frobtest {

namespace detail {

// Recursive-descent parser for
//   expr := term (('+'|'-') term)* ;  term := factor ('*' factor)* ;
//   factor := coeff | var ('^' uint)? | '(' expr ')' ('^' uint)? ;
// A leading '-' is accepted. An identifier that is not a declared variable is split
// into declared names when that is possible unambiguously, so "xy" reads as x*y.
class PolyParser {
   public:
    PolyParser(const Ring& ring, std::string_view src) : ring_(ring), s_(src) {}

    Polynomial parse() {
        Polynomial f = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return f;
    }

   private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw InvalidInput("cannot parse polynomial \"" + std::string(s_) + "\" at offset " +
                           std::to_string(pos_) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::uint64_t uint() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer");
        std::uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0');
            if (v > (std::uint64_t{1} << 40)) fail("integer too large");
        }
        return v;
    }

    Polynomial expr() {
        Polynomial acc(ring_);
        bool neg = accept('-');
        Polynomial t = term();
        acc = neg ? -t : t;
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (accept('*')) acc *= factor();
        return acc;
    }

    Polynomial power_suffix(Polynomial base) {
        if (!accept('^')) return base;
        std::uint64_t n = uint();
        if (n > kMaxExponent) fail("exponent too large");
        return base.pow(n);
    }

    Polynomial factor() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!accept(')')) fail("expected ')'");
            return power_suffix(std::move(inner));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::uint64_t v = uint();
            return Polynomial::constant(ring_, static_cast<std::int64_t>(v % ring_.p()));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            auto vars = split_identifier(name);
            if (!vars) fail("unknown variable '" + name + "'");
            Polynomial f = Polynomial::constant(ring_, 1);
            // The exponent binds to the last variable of a split identifier only.
            for (std::size_t k = 0; k + 1 < vars->size(); ++k) f *= Polynomial::variable(ring_, (*vars)[k]);
            return f * power_suffix(Polynomial::variable(ring_, vars->back()));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::optional<std::vector<std::size_t>> split_identifier(const std::string& name) const {
        if (auto i = ring_.var_index(name)) return std::vector<std::size_t>{*i};
        // ways[k] counts splits of name[k..] (saturating at 2); only a unique split is accepted.
        const std::size_t n = name.size();
        std::vector<int> ways(n + 1, 0);
        std::vector<std::size_t> next(n + 1, 0), var(n + 1, 0);
        ways[n] = 1;
        for (std::size_t k = n; k-- > 0;) {
            for (std::size_t v = 0; v < ring_.nvars(); ++v) {
                const std::string& vn = ring_.vars()[v];
                if (name.compare(k, vn.size(), vn) != 0 || ways[k + vn.size()] == 0) continue;
                ways[k] = std::min(2, ways[k] + ways[k + vn.size()]);
                next[k] = k + vn.size();
                var[k] = v;
            }
        }
        if (ways[0] != 1) return std::nullopt;
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < n; k = next[k]) out.push_back(var[k]);
        return out;
    }

    const Ring& ring_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(const Ring& ring, std::string_view text) {
    return detail::PolyParser(ring, text).parse();
}

/// Comma-separated variable list, e.g. "x,y,z".
inline std::vector<std::string> parse_var_list(std::string_view text) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw InvalidInput("empty variable name in list \"" + std::string(text) + "\"");
        out.push_back(cur);
        cur.clear();
    };
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == ',')
            flush();
        else
            cur += c;
    }
    flush();
    return out;
}

/// Splits at top-level commas (commas inside parentheses are kept).
inline std::vector<std::string> split_top_level(std::string_view text) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty() || !out.empty()) out.push_back(cur);
    return out;
}

}  // namespace frobtest

#endif

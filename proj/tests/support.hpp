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

// Small constructors shared by the test binaries.

#ifndef FROBTEST_TESTS_SUPPORT_HPP
#define FROBTEST_TESTS_SUPPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "frobtest/request.hpp"

namespace ft = frobtest;

inline ft::Ring ring(std::uint32_t p, std::vector<std::string> vars) { return ft::Ring(ft::Prime(p), std::move(vars)); }
inline ft::Ring rxy(std::uint32_t p) { return ring(p, {"x", "y"}); }

inline ft::Polynomial P(const ft::Ring& r, const std::string& s) { return ft::parse_polynomial(r, s); }
inline ft::Ideal I(const ft::Ring& r, const std::vector<std::string>& g) { return ft::Ideal::parse(r, g); }
inline ft::Rational Q(std::int64_t n, std::int64_t d = 1) { return ft::Rational(n, d); }

inline ft::Boundary B(const ft::Ring& r, const std::vector<std::pair<std::string, ft::Rational>>& comps) {
    ft::Boundary b(r);
    for (const auto& [f, d] : comps) b.add(P(r, f), d);
    return b;
}

#endif

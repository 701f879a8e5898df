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

#ifndef FROBTEST_SQUAREFREE_HPP
#define FROBTEST_SQUAREFREE_HPP

#include <string_view>

#include "frobtest/errors.hpp"
#include "frobtest/groebner.hpp"
#include "frobtest/ideal.hpp"
#include "frobtest/polynomial.hpp"

namespace frobtest {

/// Monic gcd, computed as a*b / lcm(a, b) with the lcm read off (a) cap (b).
inline Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b) {
    a.require_same_ring(b);
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Polynomial::constant(a.ring(), 1);
    if (a.is_monomial() && b.is_monomial())
        return Polynomial::monomial(a.ring(), Monomial::gcd(a.leading_monomial(), b.leading_monomial()));
    Ideal meet = Ideal(a.ring(), {a}).intersection(Ideal(a.ring(), {b}));
    const auto& gb = meet.groebner();
    if (gb.size() != 1) throw Error("internal: intersection of principal ideals is not principal");
    auto q = exact_divide(a * b, gb[0]);
    if (!q) throw Error("internal: lcm does not divide the product");
    return q->monic();
}

enum class Tristate { yes, no, unknown };

inline std::string_view to_string(Tristate t) {
    switch (t) {
        case Tristate::yes:
            return "true";
        case Tristate::no:
            return "false";
        default:
            return "unknown";
    }
}

/// f is squarefree iff gcd(f, df/dx_1, ..., df/dx_d) is a unit. When every partial
/// vanishes f lies in F_p[x^p] and the answer is reported as unknown.
inline Tristate squarefree_check(const Polynomial& f) {
    if (f.is_zero()) throw InvalidInput("squarefree check of the zero polynomial");
    if (f.is_constant()) return Tristate::yes;
    if (f.is_monomial()) {
        bool all_p = true;
        for (std::size_t i = 0; i < f.ring().nvars(); ++i)
            if (f.leading_monomial()[i] % f.ring().p() != 0) all_p = false;
        if (all_p) return Tristate::unknown;
        for (std::size_t i = 0; i < f.ring().nvars(); ++i)
            if (f.leading_monomial()[i] > 1) return Tristate::no;
        return Tristate::yes;
    }
    Polynomial g = f;
    bool any = false;
    for (std::size_t i = 0; i < f.ring().nvars(); ++i) {
        Polynomial d = f.derivative(i);
        if (d.is_zero()) continue;
        any = true;
        g = polynomial_gcd(g, d);
        if (g.is_constant()) return Tristate::yes;
    }
    if (!any) return Tristate::unknown;
    return Tristate::no;
}

}  // namespace frobtest

#endif

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

#ifndef FROBTEST_FROBENIUS_HPP
#define FROBTEST_FROBENIUS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "frobtest/errors.hpp"
#include "frobtest/ideal.hpp"
#include "frobtest/polynomial.hpp"

namespace frobtest {

inline constexpr std::uint64_t kMaxFrobeniusQ = std::uint64_t{1} << 20;

/// q = p^e with e >= 1 (e = 0 is allowed for plumbing and gives q = 1).
class FrobeniusLevel {
   public:
    FrobeniusLevel(Prime p, unsigned e) : p_(p), e_(e), q_(1) {
        for (unsigned i = 0; i < e; ++i) {
            q_ *= p.value();
            if (q_ > kMaxFrobeniusQ)
                throw ExponentOverflow("p^e = " + std::to_string(p.value()) + "^" + std::to_string(e) +
                                       " exceeds the cap 2^20");
        }
    }
    Prime prime() const noexcept { return p_; }
    unsigned e() const noexcept { return e_; }
    std::uint64_t q() const noexcept { return q_; }

   private:
    Prime p_;
    unsigned e_;
    std::uint64_t q_;
};

struct LexLess {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept { return lex_less(a, b); }
};

/// f = sum over mu of g_mu^q * mu, mu ranging over monomials with exponents < q.
inline std::map<Monomial, Polynomial, LexLess> frobenius_decompose(const Polynomial& f, const FrobeniusLevel& lv) {
    if (!(f.ring().prime() == lv.prime())) throw RingMismatch("level characteristic differs from ring");
    const auto q = static_cast<Exponent>(lv.q());
    std::map<Monomial, std::vector<Term>, LexLess> parts;
    for (const auto& t : f.terms()) parts[t.mono.mod(q)].push_back({t.mono.floor_div(q), t.coeff});
    std::map<Monomial, Polynomial, LexLess> out;
    for (auto& [mu, terms] : parts) out.emplace(mu, Polynomial::from_terms(f.ring(), std::move(terms)));
    return out;
}

namespace detail {

// Accumulates root generators, deduplicated up to scalars.
class RootCollector {
   public:
    explicit RootCollector(Ring r) : ring_(std::move(r)) {}

    void add_root_of(const Polynomial& f, const FrobeniusLevel& lv, const Monomial& shift = Monomial{}) {
        if (f.is_zero() || unit_) return;
        for (auto& [mu, g] : frobenius_decompose(f, lv)) add(shift.is_one() ? g : g.mul_term(shift, 1));
    }

    void add(const Polynomial& g) {
        if (g.is_zero() || unit_) return;
        if (g.is_unit()) {
            unit_ = true;
            return;
        }
        if (g.is_monomial()) {
            monos_.push_back(g.leading_monomial());
            return;
        }
        Polynomial m = g.monic();
        if (seen_.insert(m).second) polys_.push_back(std::move(m));
    }

    Ideal finish() {
        if (unit_) return Ideal::unit(ring_);
        std::vector<Polynomial> gens = minimal_monomial_generators(ring_, std::move(monos_));
        // A polynomial already divisible termwise by the monomial part adds nothing.
        for (auto& f : polys_) {
            bool inside = true;
            for (const auto& t : f.terms()) {
                bool hit = false;
                for (const auto& g : gens)
                    if (g.is_monomial() && g.leading_monomial().divides(t.mono)) {
                        hit = true;
                        break;
                    }
                if (!hit) {
                    inside = false;
                    break;
                }
            }
            if (!inside) gens.push_back(std::move(f));
        }
        return Ideal(ring_, std::move(gens));
    }

   private:
    Ring ring_;
    bool unit_ = false;
    std::vector<Monomial> monos_;
    std::vector<Polynomial> polys_;
    std::unordered_set<Polynomial, PolynomialHash> seen_;
};

}  // namespace detail

/// I^[1/q]: the smallest ideal J with I inside J^[q]. Over a polynomial ring this is
/// generated by the coefficient polynomials of any generating set of I.
inline Ideal frobenius_root(const Ideal& I, const FrobeniusLevel& lv) {
    detail::RootCollector acc(I.ring());
    for (const auto& g : I.compact_generators()) acc.add_root_of(g, lv);
    return acc.finish();
}

inline Ideal frobenius_root(const Ideal& I, unsigned e) { return frobenius_root(I, FrobeniusLevel(I.ring().prime(), e)); }

/// (P * A)^[1/q] for a polynomial P and an ideal A. Monomial generators x^(q b + r) of A
/// are handled as x^b * (P x^r)^[1/q], sharing work across equal residues r.
inline Ideal frobenius_root_of_product(const Polynomial& P, const Ideal& A, const FrobeniusLevel& lv) {
    if (!(P.ring() == A.ring())) throw RingMismatch();
    detail::RootCollector acc(A.ring());
    if (P.is_zero()) return acc.finish();
    const auto q = static_cast<Exponent>(lv.q());
    std::unordered_map<Monomial, std::vector<Polynomial>, MonomialHash> by_residue;
    for (const auto& a : A.compact_generators()) {
        if (!a.is_monomial()) {
            acc.add_root_of(P * a, lv);
            continue;
        }
        const Monomial& m = a.leading_monomial();
        Monomial r = m.mod(q), b = m.floor_div(q);
        auto it = by_residue.find(r);
        if (it == by_residue.end()) {
            std::vector<Polynomial> roots;
            for (auto& [mu, g] : frobenius_decompose(P.mul_term(r, 1), lv)) roots.push_back(std::move(g));
            it = by_residue.emplace(r, std::move(roots)).first;
        }
        for (const auto& g : it->second) acc.add(b.is_one() ? g : g.mul_term(b, 1));
    }
    return acc.finish();
}

/// (P * A_1 * ... * A_k * m^n)^[1/q] with m the ideal of the origin. For monomial data
/// the product is enumerated without minimalizing it, and m^n is never expanded:
/// (x^w m^n)^[1/q] = x^floor(w/q) m^k, k = max(0, ceil((n - sum_i (q - 1 - w_i mod q)) / q)).
inline Ideal frobenius_root_of_product(const Polynomial& P, const std::vector<Ideal>& factors,
                                       const FrobeniusLevel& lv, std::uint64_t max_ideal_power = 0) {
    const Ring& r = P.ring();
    bool monomial = P.is_monomial();
    for (const auto& f : factors) {
        if (!(f.ring() == r)) throw RingMismatch();
        for (const auto& g : f.compact_generators()) monomial = monomial && g.is_monomial();
    }
    if (!monomial) {
        Ideal acc = max_ideal_power ? Ideal::maximal(r).ordinary_power(max_ideal_power) : Ideal::unit(r);
        for (const auto& f : factors) acc = acc * f;
        return frobenius_root_of_product(P, acc, lv);
    }
    if (P.is_zero()) return Ideal::zero(r);
    std::vector<Monomial> ms{P.leading_monomial()};
    for (const auto& f : factors) {
        std::vector<Monomial> next;
        next.reserve(ms.size() * f.compact_generators().size());
        for (const auto& m : ms)
            for (const auto& g : f.compact_generators()) next.push_back(m * g.leading_monomial());
        std::sort(next.begin(), next.end(), [](const Monomial& x, const Monomial& y) { return lex_less(x, y); });
        next.erase(std::unique(next.begin(), next.end()), next.end());
        ms = std::move(next);
    }
    const std::uint64_t q = lv.q();
    std::vector<Monomial> out;
    std::vector<Monomial> mk;  // generators of m^k, built on demand
    std::uint64_t mk_power = 0;
    mk.push_back(Monomial{});
    for (const auto& w : ms) {
        std::uint64_t slack = 0;
        for (std::size_t i = 0; i < r.nvars(); ++i) slack += q - 1 - (w[i] % q);
        std::uint64_t k = max_ideal_power > slack ? (max_ideal_power - slack + q - 1) / q : 0;
        if (k != mk_power) {
            mk.clear();
            const Ideal mpow = Ideal::maximal(r).ordinary_power(k);
            for (const auto& g : mpow.compact_generators()) mk.push_back(g.leading_monomial());
            mk_power = k;
        }
        Monomial base = w.floor_div(static_cast<Exponent>(q));
        for (const auto& g : mk) out.push_back(base * g);
    }
    return Ideal::from_monomials(r, out);
}

struct ChainReport {
    Ideal result;
    std::vector<std::pair<unsigned, Ideal>> chain;  // (E, partial sum up to E)
    bool stable = false;
    unsigned stable_at = 0;  // least E with three equal consecutive partial sums
};

/// Partial sums P_E = sum_{e <= E} level(e), stopping at the least E with
/// P_E = P_{E+1} = P_{E+2}. Without such E within e_max the last sum is returned
/// with stable = false. A window is only accepted once it reaches e_min.
inline ChainReport root_chain_levels(const Ring& ring, const std::function<Ideal(unsigned)>& level, unsigned e_max,
                                     unsigned e_min = 0) {
    ChainReport rep{Ideal::zero(ring), {}, false, 0};
    Ideal partial = Ideal::zero(ring);
    unsigned run = 0;  // number of consecutive equal partial sums ending at the current E
    for (unsigned e = 1; e <= e_max; ++e) {
        Ideal next = partial + level(e);
        // Force the basis so later comparisons and copies share it.
        (void)next.groebner();
        run = (e > 1 && next == partial) ? run + 1 : 1;
        partial = next;
        rep.chain.emplace_back(e, partial);
        if (run >= 3 && e >= e_min) {
            rep.stable = true;
            rep.stable_at = e - 2;
            break;
        }
        if (partial.is_unit()) {
            // Nothing can grow past (1); the chain is constant from here.
            rep.stable = true;
            rep.stable_at = e;
            break;
        }
    }
    rep.result = partial;
    return rep;
}

/// root_chain for a seed family e -> seed(e), taking I^[1/q] levelwise.
inline ChainReport root_chain(const Ring& ring, const std::function<Ideal(unsigned)>& seed, unsigned e_max) {
    return root_chain_levels(
        ring, [&](unsigned e) { return frobenius_root(seed(e), FrobeniusLevel(ring.prime(), e)); }, e_max);
}

}  // namespace frobtest

#endif

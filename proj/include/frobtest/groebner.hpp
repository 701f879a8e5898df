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

#ifndef FROBTEST_GROEBNER_HPP
#define FROBTEST_GROEBNER_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frobtest/errors.hpp"
#include "frobtest/polynomial.hpp"

namespace frobtest {

inline constexpr std::uint64_t kDefaultGbCap = 1'000'000;

namespace detail {
inline thread_local std::uint64_t gb_cap = kDefaultGbCap;
}

/// Cap on S-pair reductions per Groebner basis computation for the current thread.
inline std::uint64_t current_gb_cap() noexcept { return detail::gb_cap; }

/// Installs a gb cap for the lifetime of the scope.
class GbCapScope {
   public:
    explicit GbCapScope(std::uint64_t cap) noexcept : saved_(detail::gb_cap) { detail::gb_cap = cap; }
    ~GbCapScope() { detail::gb_cap = saved_; }
    GbCapScope(const GbCapScope&) = delete;
    GbCapScope& operator=(const GbCapScope&) = delete;

   private:
    std::uint64_t saved_;
};

namespace detail {

inline const Polynomial* find_reducer(const Monomial& m, const std::vector<Polynomial>& basis) {
    for (const auto& g : basis)
        if (g.leading_monomial().divides(m)) return &g;
    return nullptr;
}

// out = a[from..] - c * m * g, all in descending order.
inline void sub_multiple(const Ring& r, const std::vector<Term>& a, std::size_t from, std::uint32_t c,
                         const Monomial& m, const Polynomial& g, std::vector<Term>& out) {
    const std::uint32_t p = r.p();
    out.clear();
    auto gt = g.terms();
    std::size_t i = from, j = 0;
    while (i < a.size() || j < gt.size()) {
        if (j == gt.size()) {
            out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
            break;
        }
        Monomial gm = gt[j].mono * m;
        int cmp = i == a.size() ? -1 : r.compare(a[i].mono, gm);
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            out.push_back({gm, fp::neg(fp::mul(c, gt[j].coeff, p), p)});
            ++j;
        } else {
            std::uint32_t v = fp::sub(a[i].coeff, fp::mul(c, gt[j].coeff, p), p);
            if (v) out.push_back({gm, v});
            ++i;
            ++j;
        }
    }
}

}  // namespace detail

/// Full normal form of f modulo basis (leading terms and tails). The basis need not be a
/// Groebner basis; the remainder is then one possible division remainder.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
    const Ring& r = f.ring();
    const std::uint32_t p = r.p();
    std::vector<Term> cur(f.terms().begin(), f.terms().end()), tmp, rem;
    std::size_t head = 0;
    while (head < cur.size()) {
        const Term lt = cur[head];
        const Polynomial* g = detail::find_reducer(lt.mono, basis);
        if (!g) {
            rem.push_back(lt);
            ++head;
            continue;
        }
        std::uint32_t c = fp::mul(lt.coeff, fp::inv(g->leading_coeff(), p), p);
        detail::sub_multiple(r, cur, head, c, lt.mono / g->leading_monomial(), *g, tmp);
        std::swap(cur, tmp);
        head = 0;
    }
    return Polynomial::from_sorted(r, std::move(rem));
}

/// Exact quotient f / g, or nullopt when g does not divide f.
inline std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g) {
    f.require_same_ring(g);
    if (g.is_zero()) throw InvalidInput("division by zero polynomial");
    const Ring& r = f.ring();
    const std::uint32_t p = r.p();
    const std::uint32_t inv_lc = fp::inv(g.leading_coeff(), p);
    std::vector<Term> cur(f.terms().begin(), f.terms().end()), tmp, quot;
    while (!cur.empty()) {
        const Term lt = cur.front();
        if (!g.leading_monomial().divides(lt.mono)) return std::nullopt;
        Monomial m = lt.mono / g.leading_monomial();
        std::uint32_t c = fp::mul(lt.coeff, inv_lc, p);
        quot.push_back({m, c});
        detail::sub_multiple(r, cur, 0, c, m, g, tmp);
        std::swap(cur, tmp);
    }
    return Polynomial::from_sorted(r, std::move(quot));
}

namespace detail {

struct CriticalPair {
    std::size_t i, j;
    Monomial lcm;
};

// Gebauer-Moeller update: add basis element k, prune the pair set and mark redundant
// basis elements.
inline void gm_update(const Ring& r, std::vector<Polynomial>& basis, std::vector<bool>& live,
                      std::vector<CriticalPair>& pairs, std::size_t k) {
    const Monomial& hk = basis[k].leading_monomial();
    std::vector<CriticalPair> fresh;
    for (std::size_t i = 0; i < k; ++i)
        if (live[i]) fresh.push_back({i, k, Monomial::lcm(basis[i].leading_monomial(), hk)});

    // Chain criterion on the new pairs, then the product criterion.
    std::vector<bool> keep(fresh.size(), true);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
        const Monomial& la = fresh[a].lcm;
        for (std::size_t b = 0; b < fresh.size() && keep[a]; ++b) {
            if (a == b || !keep[b]) continue;
            const Monomial& lb = fresh[b].lcm;
            if (lb.divides(la) && !(lb == la)) keep[a] = false;
        }
    }
    // Among pairs with equal lcm keep one; drop the group entirely if any is coprime.
    std::vector<CriticalPair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
        if (!keep[a]) continue;
        bool first = true, coprime = false;
        for (std::size_t b = 0; b < fresh.size(); ++b) {
            if (!keep[b] || !(fresh[b].lcm == fresh[a].lcm)) continue;
            if (b < a) first = false;
            if (Monomial::coprime(basis[fresh[b].i].leading_monomial(), hk)) coprime = true;
        }
        if (first && !coprime) kept.push_back(fresh[a]);
    }

    // Old pairs (i,j) whose lcm is strictly divisible by hk's lcms with both ends.
    std::vector<CriticalPair> old;
    old.reserve(pairs.size());
    for (const auto& pr : pairs) {
        bool drop = hk.divides(pr.lcm) &&
                    !(Monomial::lcm(basis[pr.i].leading_monomial(), hk) == pr.lcm) &&
                    !(Monomial::lcm(basis[pr.j].leading_monomial(), hk) == pr.lcm);
        if (!drop) old.push_back(pr);
    }
    old.insert(old.end(), kept.begin(), kept.end());
    pairs = std::move(old);

    for (std::size_t i = 0; i < k; ++i)
        if (live[i] && hk.divides(basis[i].leading_monomial())) live[i] = false;
    live.push_back(true);
    (void)r;
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const Monomial& lcm) {
    const std::uint32_t p = f.ring().p();
    Polynomial a = f.mul_term(lcm / f.leading_monomial(), fp::inv(f.leading_coeff(), p));
    Polynomial b = g.mul_term(lcm / g.leading_monomial(), fp::inv(g.leading_coeff(), p));
    return a - b;
}

inline bool all_monomial(const std::vector<Polynomial>& gens) {
    for (const auto& g : gens)
        if (!g.is_monomial()) return false;
    return true;
}

}  // namespace detail

/// Minimal generators of a monomial ideal, each with coefficient 1, in descending order.
inline std::vector<Polynomial> minimal_monomial_generators(const Ring& r, std::vector<Monomial> ms) {
    std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
        return a.degree() != b.degree() ? a.degree() < b.degree() : lex_less(a, b);
    });
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    std::vector<Monomial> kept;
    for (const auto& m : ms) {
        bool redundant = false;
        for (const auto& k : kept) {
            if (k.degree() >= m.degree()) break;  // equal degree divisibility means equality
            if (k.divides(m)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(m);
    }
    // Keep `kept` sorted by degree during the scan; the final order is the ring order.
    std::vector<Polynomial> out;
    out.reserve(kept.size());
    for (const auto& m : kept) out.push_back(Polynomial::monomial(r, m));
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
        return r.compare(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    return out;
}

/// Reduced Groebner basis (monic, sorted descending by leading monomial) of the ideal
/// generated by gens, under the order of their ring. Buchberger with normal selection
/// and Gebauer-Moeller pruning. Throws BudgetExceeded past current_gb_cap() reductions.
inline std::vector<Polynomial> groebner_basis(const Ring& r, const std::vector<Polynomial>& gens) {
    std::vector<Polynomial> input;
    for (const auto& g : gens) {
        if (!(g.ring() == r)) throw RingMismatch();
        if (g.is_zero()) continue;
        if (g.is_unit()) return {Polynomial::constant(r, 1)};
        input.push_back(g.monic());
    }
    if (input.empty()) return {};
    if (detail::all_monomial(input)) {
        std::vector<Monomial> ms;
        for (const auto& g : input) ms.push_back(g.leading_monomial());
        return minimal_monomial_generators(r, std::move(ms));
    }

    // Smallest leading terms first gives a better starting basis.
    std::sort(input.begin(), input.end(), [&](const Polynomial& a, const Polynomial& b) {
        int c = r.compare(a.leading_monomial(), b.leading_monomial());
        if (c != 0) return c < 0;
        return a.to_string() < b.to_string();
    });

    std::vector<Polynomial> basis;
    std::vector<bool> live;
    std::vector<detail::CriticalPair> pairs;
    auto add = [&](Polynomial h) {
        basis.push_back(h.monic());
        detail::gm_update(r, basis, live, pairs, basis.size() - 1);
    };
    for (auto& g : input) {
        std::vector<Polynomial> active;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (live[i]) active.push_back(basis[i]);
        Polynomial h = normal_form(g, active);
        if (h.is_zero()) continue;
        if (h.is_unit()) return {Polynomial::constant(r, 1)};
        add(std::move(h));
    }

    const std::uint64_t cap = current_gb_cap();
    std::uint64_t reductions = 0;
    while (!pairs.empty()) {
        // Normal selection: smallest lcm; ties by index for determinism.
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            int c = r.compare(pairs[k].lcm, pairs[best].lcm);
            if (c < 0 || (c == 0 && std::pair(pairs[k].j, pairs[k].i) < std::pair(pairs[best].j, pairs[best].i)))
                best = k;
        }
        detail::CriticalPair pr = pairs[best];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
        if (++reductions > cap)
            throw BudgetExceeded("Groebner basis exceeded the cap of " + std::to_string(cap) + " S-pair reductions");
        Polynomial s = detail::s_polynomial(basis[pr.i], basis[pr.j], pr.lcm);
        std::vector<Polynomial> active;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (live[i]) active.push_back(basis[i]);
        Polynomial h = normal_form(s, active);
        if (h.is_zero()) continue;
        if (h.is_unit()) return {Polynomial::constant(r, 1)};
        add(std::move(h));
    }

    // Minimal basis, then interreduce tails.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!live[i]) continue;
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (j == i || !live[j]) continue;
            const Monomial& a = basis[j].leading_monomial();
            const Monomial& b = basis[i].leading_monomial();
            if (a.divides(b) && (!(a == b) || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        const Term lt = minimal[i].leading_term();
        Polynomial tail = Polynomial::from_sorted(
            r, std::vector<Term>(minimal[i].terms().begin() + 1, minimal[i].terms().end()));
        reduced.push_back((Polynomial::monomial(r, lt.mono, lt.coeff) + normal_form(tail, others)).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return r.compare(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    return reduced;
}

}  // namespace frobtest

#endif

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

#ifndef FROBTEST_IDEAL_HPP
#define FROBTEST_IDEAL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <ostream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "frobtest/errors.hpp"
#include "frobtest/groebner.hpp"
#include "frobtest/parser.hpp"
#include "frobtest/polynomial.hpp"
#include "frobtest/ring.hpp"

namespace frobtest {

/// Finitely generated ideal of a polynomial ring. The reduced Groebner basis under the
/// ring's order is computed on first use and shared by all copies.
class Ideal {
   public:
    explicit Ideal(Ring ring) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {}

    Ideal(Ring ring, std::vector<Polynomial> gens) : Ideal(std::move(ring)) {
        for (auto& g : gens) {
            if (!(g.ring() == ring_)) throw RingMismatch();
            if (!g.is_zero()) gens_.push_back(std::move(g));
        }
    }

    static Ideal unit(const Ring& r) { return Ideal(r, {Polynomial::constant(r, 1)}); }
    static Ideal zero(const Ring& r) { return Ideal(r); }
    /// The homogeneous maximal ideal (x_1, ..., x_d).
    static Ideal maximal(const Ring& r) {
        std::vector<Polynomial> g;
        for (std::size_t i = 0; i < r.nvars(); ++i) g.push_back(Polynomial::variable(r, i));
        return Ideal(r, std::move(g));
    }
    static Ideal from_monomials(const Ring& r, const std::vector<Monomial>& ms) {
        return Ideal(r, minimal_monomial_generators(r, ms));
    }
    static Ideal parse(const Ring& r, const std::vector<std::string>& exprs) {
        std::vector<Polynomial> g;
        for (const auto& s : exprs) g.push_back(parse_polynomial(r, s));
        return Ideal(r, std::move(g));
    }

    const Ring& ring() const noexcept { return ring_; }
    const std::vector<Polynomial>& generators() const noexcept { return gens_; }

    /// Reduced Groebner basis under the ring order; empty for the zero ideal.
    const std::vector<Polynomial>& groebner() const {
        std::call_once(cache_->once, [&] {
            cache_->gb = groebner_basis(ring_, gens_);
            cache_->ready.store(true, std::memory_order_release);
#ifdef FROBTEST_DEBUG_CHECKS
            for (const auto& g : gens_)
                if (!normal_form(g, cache_->gb).is_zero()) throw Error("internal: GB misses a generator");
#endif
        });
        return cache_->gb;
    }

    /// Reduced Groebner basis under another order, as polynomials of the reordered ring.
    std::vector<Polynomial> groebner(const MonomialOrder& order) const {
        Ring r = ring_.with_order(order);
        std::vector<Polynomial> g;
        for (const auto& f : gens_) g.push_back(f.in_ring(r));
        return groebner_basis(r, g);
    }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const {
        const auto& gb = groebner();
        return gb.size() == 1 && gb[0].is_unit();
    }
    /// Generated by monomials (decided on the reduced basis).
    bool is_monomial() const {
        if (detail::all_monomial(gens_)) return true;
        return detail::all_monomial(groebner());
    }

    /// Minimal monomial generators; requires is_monomial().
    std::vector<Monomial> monomial_generators() const {
        if (!is_monomial()) throw InvalidInput("ideal is not monomial");
        std::vector<Monomial> ms;
        if (detail::all_monomial(gens_)) {
            for (const auto& g : gens_) ms.push_back(g.leading_monomial());
            std::vector<Monomial> out;
            for (const auto& g : minimal_monomial_generators(ring_, ms)) out.push_back(g.leading_monomial());
            return out;
        }
        for (const auto& g : groebner()) ms.push_back(g.leading_monomial());
        return ms;
    }

    bool contains(const Polynomial& f) const {
        if (!(f.ring() == ring_)) throw RingMismatch();
        if (f.is_zero()) return true;
        if (f.is_monomial() && detail::all_monomial(gens_)) {
            for (const auto& g : gens_)
                if (g.leading_monomial().divides(f.leading_monomial())) return true;
            return false;
        }
        return normal_form(f, groebner()).is_zero();
    }
    bool contains(const Ideal& J) const {
        require_same_ring(J);
        for (const auto& g : J.gens_)
            if (!contains(g)) return false;
        return true;
    }

    friend bool operator==(const Ideal& a, const Ideal& b) {
        a.require_same_ring(b);
        return a.groebner() == b.groebner();
    }
    friend bool operator!=(const Ideal& a, const Ideal& b) { return !(a == b); }

    friend Ideal operator+(const Ideal& a, const Ideal& b) {
        a.require_same_ring(b);
        std::vector<Polynomial> g = a.gens_;
        g.insert(g.end(), b.gens_.begin(), b.gens_.end());
        if (detail::all_monomial(g)) return from_leading(a.ring_, g);
        return Ideal(a.ring_, std::move(g));
    }

    friend Ideal operator*(const Ideal& a, const Ideal& b) {
        a.require_same_ring(b);
        const auto& ga = a.compact_generators();
        const auto& gb = b.compact_generators();
        if (detail::all_monomial(ga) && detail::all_monomial(gb)) {
            std::vector<Monomial> ms;
            ms.reserve(ga.size() * gb.size());
            for (const auto& f : ga)
                for (const auto& g : gb) ms.push_back(f.leading_monomial() * g.leading_monomial());
            return from_monomials(a.ring_, ms);
        }
        std::vector<Polynomial> g;
        g.reserve(ga.size() * gb.size());
        for (const auto& f : ga)
            for (const auto& h : gb) g.push_back(f * h);
        return Ideal(a.ring_, std::move(g));
    }

    /// Multiplies every generator by f.
    Ideal scaled_by(const Polynomial& f) const {
        std::vector<Polynomial> g;
        g.reserve(gens_.size());
        for (const auto& h : gens_) g.push_back(h * f);
        return Ideal(ring_, std::move(g));
    }

    Ideal intersection(const Ideal& b) const {
        require_same_ring(b);
        if (is_zero() || b.is_zero()) return zero(ring_);
        if (is_unit()) return b;
        if (b.is_unit()) return *this;
        if (is_monomial() && b.is_monomial()) {
            std::vector<Monomial> ms;
            for (const auto& u : monomial_generators())
                for (const auto& v : b.monomial_generators()) ms.push_back(Monomial::lcm(u, v));
            return from_monomials(ring_, ms);
        }
        // I cap J = (t I + (1 - t) J) cap R under an elimination order for t.
        std::string t = "t";
        while (ring_.var_index(t)) t += "_";
        Ring big = ring_.with_leading_vars({t}, MonomialOrder::block_grevlex(1));
        Polynomial tv = Polynomial::variable(big, 0);
        Polynomial one_minus_t = Polynomial::constant(big, 1) - tv;
        std::vector<Polynomial> g;
        for (const auto& f : compact_generators()) g.push_back(tv * f.in_ring(big));
        for (const auto& f : b.compact_generators()) g.push_back(one_minus_t * f.in_ring(big));
        std::vector<Polynomial> out;
        for (const auto& f : groebner_basis(big, g))
            if (f.leading_monomial()[0] == 0) out.push_back(f.in_ring(ring_));
        return Ideal(ring_, std::move(out));
    }

    /// Ideal quotient (I : J) = intersection over generators g of J of (I cap (g)) / g.
    Ideal quotient(const Ideal& b) const {
        require_same_ring(b);
        if (b.is_zero()) return unit(ring_);
        if (is_monomial() && b.is_monomial()) {
            Ideal acc = unit(ring_);
            for (const auto& v : b.monomial_generators()) {
                std::vector<Monomial> ms;
                for (const auto& u : monomial_generators()) {
                    Monomial m;
                    for (std::size_t i = 0; i < ring_.nvars(); ++i) m.set(i, u[i] > v[i] ? u[i] - v[i] : 0);
                    ms.push_back(m);
                }
                acc = acc.intersection(from_monomials(ring_, ms));
            }
            return acc;
        }
        Ideal acc = unit(ring_);
        for (const auto& g : b.compact_generators()) {
            Ideal both = intersection(Ideal(ring_, {g}));
            std::vector<Polynomial> q;
            for (const auto& h : both.compact_generators()) {
                auto d = exact_divide(h, g);
                if (!d) throw Error("internal: intersection element not divisible by generator");
                q.push_back(*d);
            }
            acc = acc.intersection(Ideal(ring_, std::move(q)));
        }
        return acc;
    }

    /// I^[q] with q = p^e: generated by q-th powers of generators.
    Ideal bracket_power(unsigned e) const {
        std::vector<Polynomial> g;
        for (const auto& f : compact_generators()) g.push_back(f.frobenius_power(e));
        return Ideal(ring_, std::move(g));
    }

    /// n-fold product; I^0 = (1).
    Ideal ordinary_power(std::uint64_t n) const {
        Ideal result = unit(ring_);
        Ideal base = *this;
        // Non-monomial products are compacted to their reduced basis as they grow.
        auto compact = [](Ideal& J) {
            if (!detail::all_monomial(J.gens_) && J.gens_.size() > 4) (void)J.groebner();
        };
        while (n) {
            if (n & 1) {
                result = result * base;
                compact(result);
            }
            n >>= 1;
            if (n) {
                base = base * base;
                compact(base);
            }
        }
        return result;
    }

    /// Canonical text form: reduced basis elements, sorted descending by their lex-ordered
    /// term sequence (so x^2, x*y, y^2).
    std::vector<std::string> to_strings() const {
        std::vector<Polynomial> gb = groebner();
        std::sort(gb.begin(), gb.end(), lex_greater);
        std::vector<std::string> out;
        for (const auto& g : gb) out.push_back(g.to_string());
        return out;
    }

    std::string to_string() const {
        auto s = to_strings();
        std::string out = "(";
        for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + s[i];
        return out + ")";
    }
    friend std::ostream& operator<<(std::ostream& os, const Ideal& I) { return os << I.to_string(); }

    /// Image in a ring sharing the variable names that occur.
    Ideal in_ring(const Ring& target) const {
        std::vector<Polynomial> g;
        for (const auto& f : gens_) g.push_back(f.in_ring(target));
        return Ideal(target, std::move(g));
    }

    /// Image modulo x_i in the ring without x_i.
    Ideal restrict_to_hyperplane(std::size_t i, const Ring& target) const {
        std::vector<Polynomial> g;
        for (const auto& f : gens_) g.push_back(f.restrict_to_hyperplane(i, target));
        return Ideal(target, std::move(g));
    }

    /// The reduced basis when it is already cached, else the raw generators.
    const std::vector<Polynomial>& compact_generators() const {
        if (cache_->computed()) return cache_->gb;
        return gens_;
    }

    void require_same_ring(const Ideal& o) const {
        if (!(ring_ == o.ring_)) throw RingMismatch();
    }

   private:
    struct Cache {
        std::once_flag once;
        std::vector<Polynomial> gb;
        std::atomic<bool> ready{false};
        bool computed() const { return ready.load(std::memory_order_acquire); }
    };

    static bool lex_greater(const Polynomial& a, const Polynomial& b) {
        auto ta = sorted_lex(a), tb = sorted_lex(b);
        for (std::size_t k = 0; k < ta.size() && k < tb.size(); ++k) {
            if (!(ta[k] == tb[k])) return lex_less(tb[k], ta[k]);
        }
        return ta.size() > tb.size();
    }
    static std::vector<Monomial> sorted_lex(const Polynomial& f) {
        std::vector<Monomial> ms;
        for (const auto& t : f.terms()) ms.push_back(t.mono);
        std::sort(ms.begin(), ms.end(), [](const Monomial& x, const Monomial& y) { return lex_less(y, x); });
        return ms;
    }

    static Ideal from_leading(const Ring& r, const std::vector<Polynomial>& monos) {
        std::vector<Monomial> ms;
        for (const auto& g : monos) ms.push_back(g.leading_monomial());
        return from_monomials(r, ms);
    }

    Ring ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

}  // namespace frobtest

#endif

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

#ifndef FROBTEST_POLYNOMIAL_HPP
#define FROBTEST_POLYNOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "frobtest/errors.hpp"
#include "frobtest/monomial.hpp"
#include "frobtest/prime_field.hpp"
#include "frobtest/ring.hpp"

namespace frobtest {

struct Term {
    Monomial mono;
    std::uint32_t coeff;

    friend bool operator==(const Term& a, const Term& b) noexcept {
        return a.coeff == b.coeff && a.mono == b.mono;
    }
};

/// Sparse polynomial over F_p. Terms are nonzero and sorted strictly descending in the
/// ring's monomial order, so the leading term is terms().front().
class Polynomial {
   public:
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

    static Polynomial constant(const Ring& r, std::int64_t c) {
        Polynomial f(r);
        std::uint32_t v = fp::reduce(c, r.p());
        if (v) f.terms_.push_back({Monomial{}, v});
        return f;
    }
    static Polynomial monomial(const Ring& r, const Monomial& m, std::uint32_t c = 1) {
        Polynomial f(r);
        c %= r.p();
        if (c) f.terms_.push_back({m, c});
        return f;
    }
    static Polynomial variable(const Ring& r, std::size_t i) {
        if (i >= r.nvars()) throw InvalidInput("variable index out of range");
        return monomial(r, Monomial::variable(i));
    }
    /// Arbitrary term list: like terms are combined, zeros dropped, result sorted.
    static Polynomial from_terms(const Ring& r, std::vector<Term> terms) {
        Polynomial f(r);
        const std::uint32_t p = r.p();
        std::sort(terms.begin(), terms.end(),
                  [&](const Term& a, const Term& b) { return r.compare(a.mono, b.mono) > 0; });
        for (auto& t : terms) {
            std::uint32_t c = t.coeff % p;
            if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
                f.terms_.back().coeff = fp::add(f.terms_.back().coeff, c, p);
                if (f.terms_.back().coeff == 0) f.terms_.pop_back();
            } else if (c) {
                f.terms_.push_back({t.mono, c});
            }
        }
        return f;
    }

    /// Terms already reduced, nonzero and strictly descending in the ring order.
    static Polynomial from_sorted(const Ring& r, std::vector<Term> terms) {
        Polynomial f(r);
        f.terms_ = std::move(terms);
        return f;
    }

    const Ring& ring() const noexcept { return ring_; }
    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    bool is_unit() const noexcept { return terms_.size() == 1 && terms_[0].mono.is_one(); }
    bool is_one() const noexcept { return is_unit() && terms_[0].coeff == 1; }
    /// A single term (a scalar multiple of a monomial).
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    const Term& leading_term() const {
        if (terms_.empty()) throw InvalidInput("leading term of zero polynomial");
        return terms_.front();
    }
    const Monomial& leading_monomial() const { return leading_term().mono; }
    std::uint32_t leading_coeff() const { return leading_term().coeff; }

    std::uint64_t degree() const noexcept {
        std::uint64_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& t : r.terms_) t.coeff = fp::neg(t.coeff, ring_.p());
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return a.merge(b, false); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a.merge(b, true); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.require_same_ring(b);
        if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
        if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].mono, b.terms_[0].coeff);
        if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].mono, a.terms_[0].coeff);
        const std::uint32_t p = a.ring_.p();
        std::unordered_map<Monomial, std::uint32_t, MonomialHash> acc;
        acc.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& s : a.terms_)
            for (const auto& t : b.terms_) {
                auto& c = acc[s.mono * t.mono];
                c = fp::add(c, fp::mul(s.coeff, t.coeff, p), p);
            }
        Polynomial r(a.ring_);
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (c) r.terms_.push_back({m, c});
        r.sort_terms();
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scale(std::uint32_t c) const { return mul_term(Monomial{}, c); }

    /// Multiplication by c*m. Multiplicativity of the order keeps terms sorted.
    Polynomial mul_term(const Monomial& m, std::uint32_t c) const {
        Polynomial r(ring_);
        c %= ring_.p();
        if (c == 0) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono * m, fp::mul(t.coeff, c, ring_.p())});
        return r;
    }

    /// f^n. Exponents >= p are split into base-p digits and the digit powers are
    /// raised with the Frobenius map, which is far cheaper than repeated squaring.
    Polynomial pow(std::uint64_t n) const {
        const std::uint32_t p = ring_.p();
        if (n < p || is_monomial()) return small_pow(n);
        Polynomial result = constant(ring_, 1);
        std::uint64_t q = 1;
        while (n) {
            std::uint64_t digit = n % p;
            if (digit) result *= small_pow(digit).frobenius_q(q);
            n /= p;
            if (n) {
                if (q > kMaxExponent / p) throw ExponentOverflow("power exceeds exponent cap");
                q *= p;
            }
        }
        return result;
    }

    /// f^(p^e), computed by scaling exponents (coefficients are fixed by Frobenius on F_p).
    Polynomial frobenius_power(unsigned e) const {
        std::uint64_t q = 1;
        for (unsigned i = 0; i < e; ++i) {
            q *= ring_.p();
            if (q > kMaxExponent) throw ExponentOverflow("p^e exceeds exponent cap");
        }
        return frobenius_q(q);
    }

    Polynomial derivative(std::size_t i) const {
        if (i >= ring_.nvars()) throw InvalidInput("variable index out of range");
        const std::uint32_t p = ring_.p();
        std::vector<Term> out;
        for (const auto& t : terms_) {
            Exponent k = t.mono[i];
            if (k == 0) continue;
            std::uint32_t c = fp::mul(t.coeff, k % p, p);
            if (c == 0) continue;
            Monomial m = t.mono;
            m.set(i, k - 1);
            out.push_back({m, c});
        }
        // Lowering one exponent can reorder terms under grevlex ties, so re-sort.
        return from_terms(ring_, std::move(out));
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return scale(fp::inv(leading_coeff(), ring_.p()));
    }

    /// Re-express in another ring over the same prime, matching variables by name.
    /// Variables absent from the target must not occur in this polynomial.
    Polynomial in_ring(const Ring& target) const {
        if (!(target.prime() == ring_.prime())) throw RingMismatch("different characteristic");
        if (target == ring_) return *this;
        std::vector<int> map(ring_.nvars(), -1);
        for (std::size_t i = 0; i < ring_.nvars(); ++i) {
            auto j = target.var_index(ring_.vars()[i]);
            if (j) map[i] = static_cast<int>(*j);
        }
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            Monomial m;
            for (std::size_t i = 0; i < ring_.nvars(); ++i) {
                if (t.mono[i] == 0) continue;
                if (map[i] < 0) throw RingMismatch("variable '" + ring_.vars()[i] + "' missing in target ring");
                m.set(static_cast<std::size_t>(map[i]), t.mono[i]);
            }
            out.push_back({m, t.coeff});
        }
        return from_terms(target, std::move(out));
    }

    /// Set variable i to zero and drop it: the image in target = ring without x_i.
    Polynomial restrict_to_hyperplane(std::size_t i, const Ring& target) const {
        std::vector<Term> out;
        for (const auto& t : terms_) {
            if (t.mono[i] != 0) continue;
            Monomial m;
            std::size_t k = 0;
            for (std::size_t j = 0; j < ring_.nvars(); ++j) {
                if (j == i) continue;
                m.set(k++, t.mono[j]);
            }
            out.push_back({m, t.coeff});
        }
        return from_terms(target, std::move(out));
    }

    /// Canonical text: terms in descending lex order, coefficients in [0, p),
    /// e.g. "x^2*y+2*x+1". Parses back under the expression grammar.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::vector<const Term*> ts;
        ts.reserve(terms_.size());
        for (const auto& t : terms_) ts.push_back(&t);
        std::sort(ts.begin(), ts.end(), [](const Term* a, const Term* b) { return lex_less(b->mono, a->mono); });
        std::string s;
        for (std::size_t k = 0; k < ts.size(); ++k) {
            if (k) s += '+';
            const Term& t = *ts[k];
            bool first = true;
            if (t.coeff != 1 || t.mono.is_one()) {
                s += std::to_string(t.coeff);
                first = false;
            }
            for (std::size_t i = 0; i < ring_.nvars(); ++i) {
                if (t.mono[i] == 0) continue;
                if (!first) s += '*';
                first = false;
                s += ring_.vars()[i];
                if (t.mono[i] > 1) s += "^" + std::to_string(t.mono[i]);
            }
        }
        return s;
    }

    std::size_t hash() const noexcept {
        std::size_t h = terms_.size();
        for (const auto& t : terms_) h = (h * 1000003u) ^ (t.mono.hash() + t.coeff);
        return h;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }
    friend std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << f.to_string(); }

    void require_same_ring(const Polynomial& o) const {
        if (!(ring_ == o.ring_)) throw RingMismatch();
    }

   private:
    void sort_terms() {
        std::sort(terms_.begin(), terms_.end(),
                  [&](const Term& a, const Term& b) { return ring_.compare(a.mono, b.mono) > 0; });
    }

    Polynomial merge(const Polynomial& b, bool subtract) const {
        require_same_ring(b);
        const std::uint32_t p = ring_.p();
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < b.terms_.size()) {
            int c;
            if (i == terms_.size())
                c = -1;
            else if (j == b.terms_.size())
                c = 1;
            else
                c = ring_.compare(terms_[i].mono, b.terms_[j].mono);
            if (c > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (c < 0) {
                std::uint32_t v = subtract ? fp::neg(b.terms_[j].coeff, p) : b.terms_[j].coeff;
                r.terms_.push_back({b.terms_[j++].mono, v});
            } else {
                std::uint32_t v = subtract ? fp::sub(terms_[i].coeff, b.terms_[j].coeff, p)
                                           : fp::add(terms_[i].coeff, b.terms_[j].coeff, p);
                if (v) r.terms_.push_back({terms_[i].mono, v});
                ++i;
                ++j;
            }
        }
        return r;
    }

    Polynomial small_pow(std::uint64_t n) const {
        Polynomial result = constant(ring_, 1);
        Polynomial base = *this;
        while (n) {
            if (n & 1) result *= base;
            n >>= 1;
            if (n) base *= base;
        }
        return result;
    }

    Polynomial frobenius_q(std::uint64_t q) const {
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono.scaled(q), t.coeff});
        return r;
    }

    Ring ring_;
    std::vector<Term> terms_;
};

struct PolynomialHash {
    std::size_t operator()(const Polynomial& f) const noexcept { return f.hash(); }
};

inline Polynomial frobenius_power(const Polynomial& f, unsigned e) { return f.frobenius_power(e); }
inline Polynomial partial_derivative(const Polynomial& f, std::size_t i) { return f.derivative(i); }

}  // namespace frobtest

#endif

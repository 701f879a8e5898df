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

#ifndef FROBTEST_PAIRS_HPP
#define FROBTEST_PAIRS_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frobtest/errors.hpp"
#include "frobtest/frobenius.hpp"
#include "frobtest/ideal.hpp"
#include "frobtest/polynomial.hpp"
#include "frobtest/squarefree.hpp"

namespace frobtest {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// ceil(t * q) by integer arithmetic.
inline std::uint64_t ceil_exponent(const Rational& t, std::uint64_t q) {
    if (t <= Rational(0)) throw InvalidInput("exponent t must be positive");
    auto num = static_cast<unsigned __int128>(t.numerator()) * q;
    auto den = static_cast<unsigned __int128>(t.denominator());
    auto c = (num + den - 1) / den;
    if (c > kMaxExponent) throw ExponentOverflow("ceil(t*q) exceeds the exponent cap");
    return static_cast<std::uint64_t>(c);
}
inline std::uint64_t ceil_exponent(const Rational& t, const FrobeniusLevel& lv) { return ceil_exponent(t, lv.q()); }

struct BoundaryComponent {
    Polynomial f;
    Rational d;
    Tristate squarefree = Tristate::yes;
};

/// Effective divisor sum d_i div(f_i) with 0 <= d_i <= 1. Zero coefficients are dropped.
class Boundary {
   public:
    explicit Boundary(Ring ring) : ring_(std::move(ring)) {}

    Boundary(Ring ring, std::vector<std::pair<Polynomial, Rational>> comps) : Boundary(std::move(ring)) {
        for (auto& [f, d] : comps) add(std::move(f), d);
    }

    void add(Polynomial f, Rational d) {
        if (!(f.ring() == ring_)) throw RingMismatch();
        if (d < Rational(0)) throw InvalidInput("boundary coefficient is negative");
        if (d > Rational(1)) throw InvalidInput("boundary coefficient exceeds 1");
        if (f.is_constant()) throw InvalidInput("boundary component must be a nonconstant polynomial");
        Tristate sq = squarefree_check(f);
        if (sq == Tristate::no) throw InvalidInput("boundary component " + f.to_string() + " is not squarefree");
        Polynomial m = f.monic();
        for (const auto& c : comps_)
            if (c.f == m) throw InvalidInput("boundary components " + f.to_string() + " repeat (associate)");
        if (d == Rational(0)) return;
        comps_.push_back({std::move(m), d, sq});
    }

    const Ring& ring() const noexcept { return ring_; }
    const std::vector<BoundaryComponent>& components() const noexcept { return comps_; }
    bool empty() const noexcept { return comps_.empty(); }

    /// Smallest n with n * d_i integral for all i.
    std::int64_t period() const {
        std::int64_t n = 1;
        for (const auto& c : comps_) n = std::lcm(n, c.d.denominator());
        return n;
    }

    bool has_unknown_squarefree() const {
        for (const auto& c : comps_)
            if (c.squarefree == Tristate::unknown) return true;
        return false;
    }

    /// Product of the components with coefficient 1 (1 if none).
    Polynomial floor_product() const {
        Polynomial F = Polynomial::constant(ring_, 1);
        for (const auto& c : comps_)
            if (c.d == Rational(1)) F *= c.f;
        return F;
    }
    /// Product of the components with coefficient < 1.
    Polynomial fractional_product() const {
        Polynomial h = Polynomial::constant(ring_, 1);
        for (const auto& c : comps_)
            if (c.d < Rational(1)) h *= c.f;
        return h;
    }
    bool floor_empty() const {
        for (const auto& c : comps_)
            if (c.d == Rational(1)) return false;
        return true;
    }

    /// Componentwise sum; fails if a coefficient would exceed 1.
    friend Boundary operator+(const Boundary& a, const Boundary& b) {
        if (!(a.ring_ == b.ring_)) throw RingMismatch();
        Boundary out(a.ring_);
        out.comps_ = a.comps_;
        for (const auto& c : b.comps_) {
            bool merged = false;
            for (auto& o : out.comps_)
                if (o.f == c.f) {
                    o.d += c.d;
                    if (o.d > Rational(1)) throw InvalidInput("boundary coefficient exceeds 1");
                    merged = true;
                }
            if (!merged) out.comps_.push_back(c);
        }
        return out;
    }

    /// Componentwise comparison d'_i <= d_i on the same component list.
    bool dominated_by(const Boundary& o) const {
        for (const auto& c : comps_) {
            bool ok = false;
            for (const auto& d : o.comps_)
                if (d.f == c.f && c.d <= d.d) ok = true;
            if (!ok) return false;
        }
        return true;
    }

    std::string to_string() const {
        if (comps_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            if (i) s += " + ";
            s += frobtest::to_string(comps_[i].d) + "*div(" + comps_[i].f.to_string() + ")";
        }
        return s;
    }

   private:
    Ring ring_;
    std::vector<BoundaryComponent> comps_;
};

/// The round-down: components with coefficient 1.
inline Boundary floor_part(const Boundary& delta) {
    Boundary out(delta.ring());
    for (const auto& c : delta.components())
        if (c.d == Rational(1)) out.add(c.f, 1);
    return out;
}

enum class MultiplierMode { ceil_minus_floor, qminus1 };

inline std::string_view to_string(MultiplierMode m) {
    return m == MultiplierMode::ceil_minus_floor ? "CEIL_MINUS_FLOOR" : "QMINUS1";
}

/// Exponent of f_i in the level-q multiplier.
inline std::uint64_t multiplier_exponent(const Rational& d, std::uint64_t q, MultiplierMode mode) {
    auto num = static_cast<__int128>(d.numerator());
    auto den = static_cast<__int128>(d.denominator());
    __int128 m;
    if (mode == MultiplierMode::ceil_minus_floor) {
        __int128 ceil_qd = (num * static_cast<__int128>(q) + den - 1) / den;
        m = ceil_qd - num / den;
    } else {
        m = (num * static_cast<__int128>(q - 1)) / den;
    }
    if (m > static_cast<__int128>(kMaxExponent)) throw ExponentOverflow("multiplier exponent exceeds cap");
    return static_cast<std::uint64_t>(m);
}

/// g_q = prod f_i^{m_i}, m_i = ceil(q d_i) - floor(d_i) or floor((q-1) d_i).
inline Polynomial div_multiplier(const Boundary& delta, const FrobeniusLevel& lv, MultiplierMode mode) {
    Polynomial g = Polynomial::constant(delta.ring(), 1);
    for (const auto& c : delta.components()) g *= c.f.pow(multiplier_exponent(c.d, lv.q(), mode));
    return g;
}

struct Budget {
    unsigned e_max = 4;
    std::uint64_t gb_cap = kDefaultGbCap;
    unsigned e_min = 0;  // least level a stability window must reach

    static Budget defaults_for(std::uint32_t p) { return {p <= 3 ? 4u : 3u, kDefaultGbCap, 0}; }
    friend bool operator==(const Budget&, const Budget&) = default;
};

/// One factor a^t of the coefficient ideal.
struct IdealPower {
    Ideal a;
    Rational t;
};

/// The triple ((R, Delta); a_1^{t_1} ... a_k^{t_k}) plus a computation budget.
class PairSpec {
   public:
    PairSpec(Boundary delta, std::vector<IdealPower> factors, Budget budget)
        : delta_(std::move(delta)), factors_(std::move(factors)), budget_(budget) {
        validate();
    }
    PairSpec(Boundary delta, Ideal a, Rational t, Budget budget)
        : PairSpec(std::move(delta), std::vector<IdealPower>{{std::move(a), t}}, budget) {}
    PairSpec(const Boundary& delta, Ideal a, Rational t)
        : PairSpec(delta, std::move(a), t, Budget::defaults_for(delta.ring().p())) {}
    /// ((R, Delta); (1)^1).
    explicit PairSpec(const Boundary& delta) : PairSpec(delta, Ideal::unit(delta.ring()), Rational(1)) {}

    const Ring& ring() const noexcept { return delta_.ring(); }
    const Boundary& delta() const noexcept { return delta_; }
    const std::vector<IdealPower>& factors() const noexcept { return factors_; }
    const Budget& budget() const noexcept { return budget_; }
    const Ideal& a() const { return factors_.front().a; }
    const Rational& t() const { return factors_.front().t; }

    PairSpec with_delta(Boundary d) const { return PairSpec(std::move(d), factors_, budget_); }
    PairSpec with_factors(std::vector<IdealPower> f) const { return PairSpec(delta_, std::move(f), budget_); }
    PairSpec with_budget(Budget b) const { return PairSpec(delta_, factors_, b); }

    /// prod a_k^{ceil(t_k q)}.
    Ideal coefficient_ideal(const FrobeniusLevel& lv) const {
        Ideal acc = Ideal::unit(ring());
        for (const auto& f : factors_) acc = acc * f.a.ordinary_power(ceil_exponent(f.t, lv));
        return acc;
    }

    /// The factor powers a_i^{ceil(t_i q)} without multiplying them out. Powers of the
    /// ideal of the origin are returned as a total exponent instead.
    std::pair<std::vector<Ideal>, std::uint64_t> coefficient_factors(const FrobeniusLevel& lv) const {
        std::vector<Ideal> out;
        std::uint64_t n = 0;
        const Ideal m = Ideal::maximal(ring());
        for (const auto& f : factors_) {
            std::uint64_t k = ceil_exponent(f.t, lv);
            if (ring().nvars() > 0 && f.a.is_monomial() && f.a == m)
                n += k;
            else
                out.push_back(f.a.ordinary_power(k));
        }
        return {std::move(out), n};
    }

    bool coefficient_is_unit() const {
        for (const auto& f : factors_)
            if (!f.a.is_unit()) return false;
        return true;
    }

   private:
    void validate() const {
        if (factors_.empty()) throw InvalidInput("at least one coefficient ideal is required");
        Polynomial F = delta_.floor_product();
        for (const auto& f : factors_) {
            if (!(f.a.ring() == ring())) throw RingMismatch();
            if (f.t <= Rational(0)) throw InvalidInput("exponent t must be positive");
            if (f.a.is_zero()) throw InvalidInput("coefficient ideal must be nonzero");
            if (F.is_constant()) continue;
            // a meets R^{o,Delta} iff no prime factor of F divides every generator of a.
            Polynomial g = F;
            for (const auto& h : f.a.compact_generators()) {
                g = polynomial_gcd(g, h);
                if (g.is_constant()) break;
            }
            if (!g.is_constant())
                throw InvalidInput("coefficient ideal lies in a component of the round-down (divisible by " +
                                   g.to_string() + ")");
        }
        if (budget_.e_max < 1) throw InvalidInput("budget e_max must be at least 1");
        if (budget_.e_min > budget_.e_max) throw InvalidInput("budget e_min exceeds e_max");
    }

    Boundary delta_;
    std::vector<IdealPower> factors_;
    Budget budget_;
};

enum class Evidence { user_asserted, jacobian_candidate, stabilized };

inline std::string_view to_string(Evidence e) {
    switch (e) {
        case Evidence::user_asserted:
            return "USER_ASSERTED";
        case Evidence::jacobian_candidate:
            return "JACOBIAN_CANDIDATE";
        default:
            return "STABILIZED";
    }
}

/// c lies in R^{o,Delta}: it vanishes identically on no component of the round-down,
/// i.e. gcd(c, F) = 1 for F the (squarefree) product of coefficient-1 components.
inline bool avoids_round_down(const Polynomial& c, const Boundary& delta) {
    if (c.is_zero()) return false;
    Polynomial F = delta.floor_product();
    if (F.is_constant()) return true;
    return polynomial_gcd(c, F).is_constant();
}

struct TestElementCertificate {
    Polynomial c;
    unsigned n = 1;
    Evidence evidence = Evidence::user_asserted;

    void validate(const Boundary& delta) const {
        if (!(c.ring() == delta.ring())) throw RingMismatch();
        if (n < 1) throw InvalidInput("test element power must be positive");
        if (!avoids_round_down(c, delta))
            throw InvalidInput("test element " + c.to_string() + " vanishes on a component of the round-down");
    }
};

namespace detail {

// c vanishes on V(J) iff 1 is in J + (1 - s c).
inline bool in_radical(const Polynomial& c, const std::vector<Polynomial>& J) {
    const Ring& r = c.ring();
    std::string s = "s";
    while (r.var_index(s)) s += "_";
    Ring big = r.with_leading_vars({s}, MonomialOrder::grevlex());
    std::vector<Polynomial> g;
    for (const auto& f : J) g.push_back(f.in_ring(big));
    g.push_back(Polynomial::constant(big, 1) - Polynomial::variable(big, 0) * c.in_ring(big));
    auto gb = groebner_basis(big, g);
    return gb.size() == 1 && gb[0].is_unit();
}

}  // namespace detail

/// Candidate divisorial test elements: elements of R^{o,Delta} that vanish on the
/// singular locus of the round-down F, so that inverting them leaves a smooth reduced
/// boundary. Order: 1 (empty round-down), single partials of F, generic combinations
/// of the partials, linear forms in the radical of the Jacobian ideal, products.
inline std::vector<Polynomial> default_test_candidates(const Boundary& delta) {
    const Ring& r = delta.ring();
    std::vector<Polynomial> out;
    auto push = [&](const Polynomial& c) {
        if (c.is_zero()) return;
        Polynomial m = c.monic();
        for (const auto& o : out)
            if (o == m) return;
        if (avoids_round_down(m, delta)) out.push_back(m);
    };
    if (delta.floor_empty()) {
        out.push_back(Polynomial::constant(r, 1));
        return out;
    }
    const Polynomial F = delta.floor_product();
    std::vector<Polynomial> partials;
    for (std::size_t i = 0; i < r.nvars(); ++i) {
        Polynomial d = F.derivative(i);
        if (!d.is_zero()) partials.push_back(d);
    }
    for (const auto& d : partials) push(d);

    // Small coefficient sweeps of sum lambda_i dF/dx_i, lambda_i in {1, 2, ...}.
    const std::uint32_t p = r.p();
    if (partials.size() > 1) {
        std::vector<std::uint32_t> lam(partials.size(), 1);
        for (int round = 0; round < 4; ++round) {
            Polynomial c(r);
            for (std::size_t i = 0; i < partials.size(); ++i) c += partials[i].scale(lam[i]);
            push(c);
            lam[round % lam.size()] = lam[round % lam.size()] % (p - 1) + 1;
            if (p == 2) break;
        }
    }

    std::vector<Polynomial> jac = partials;
    jac.push_back(F);
    if (out.size() < 2) {
        for (std::size_t i = 0; i < r.nvars(); ++i) {
            for (std::size_t j = i + 1; j <= r.nvars(); ++j) {
                Polynomial c = Polynomial::variable(r, i);
                if (j < r.nvars()) c += Polynomial::variable(r, j);
                if (avoids_round_down(c, delta) && detail::in_radical(c, jac)) push(c);
            }
        }
    }
    // A second certified element for cross-checks: products and powers of the first.
    if (out.size() == 1 && !out[0].is_constant()) push(out[0] * out[0]);
    return out;
}

}  // namespace frobtest

#endif

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

#ifndef FROBTEST_CLOSURE_HPP
#define FROBTEST_CLOSURE_HPP

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
#include "frobtest/pairs.hpp"

namespace frobtest {

enum class Status { in, out, undetermined };

inline std::string_view to_string(Status s) {
    switch (s) {
        case Status::in:
            return "IN";
        case Status::out:
            return "OUT";
        default:
            return "UNDETERMINED";
    }
}

struct Witness {
    unsigned e_first = 1;
    unsigned e_last = 0;  // levels checked
    Polynomial c;
    unsigned n = 1;
    std::optional<std::uint64_t> failing_q;  // set for OUT
    std::string certified_by;                // "ideal", "monomial-oracle", "periodicity"
};

struct Verdict {
    Status status = Status::undetermined;
    std::optional<Witness> witness;
    std::string note;
};

/// Multiplicative order of p modulo the prime-to-p part of n (1 when that part is 1).
inline unsigned frobenius_period(std::uint32_t p, std::int64_t n) {
    while (n % p == 0) n /= p;
    if (n == 1) return 1;
    std::int64_t x = p % n;
    unsigned k = 1;
    while (x != 1) {
        x = (x * p) % n;
        ++k;
    }
    return k;
}

namespace detail {

// Exponent data of a pair whose components, coefficient ideals and target are monomial.
struct MonomialPair {
    std::vector<Rational> delta;  // per variable
    std::vector<bool> floor;      // delta_j == 1
    std::vector<std::pair<Ideal, Rational>> factors;
    std::int64_t lcm_den = 1;
};

inline std::optional<MonomialPair> monomial_pair(const Boundary& delta, const std::vector<IdealPower>& factors,
                                                 bool throw_on_failure) {
    const Ring& r = delta.ring();
    MonomialPair mp;
    mp.delta.assign(r.nvars(), Rational(0));
    mp.floor.assign(r.nvars(), false);
    auto fail = [&](const std::string& why) -> std::optional<MonomialPair> {
        if (throw_on_failure) throw InvalidInput("monomial closure oracle: " + why);
        return std::nullopt;
    };
    for (const auto& c : delta.components()) {
        if (!c.f.is_monomial()) return fail("boundary component " + c.f.to_string() + " is not a monomial");
        const Monomial& m = c.f.leading_monomial();
        for (std::size_t j = 0; j < r.nvars(); ++j) {
            if (m[j] == 0) continue;
            if (m[j] > 1) return fail("boundary component is not squarefree");
            if (mp.delta[j] != Rational(0)) return fail("boundary components share a variable");
            mp.delta[j] = c.d;
        }
        mp.lcm_den = std::lcm(mp.lcm_den, c.d.denominator());
    }
    for (std::size_t j = 0; j < r.nvars(); ++j) mp.floor[j] = mp.delta[j] == Rational(1);
    for (const auto& f : factors) {
        if (!f.a.is_monomial()) return fail("coefficient ideal is not monomial");
        mp.factors.emplace_back(f.a, f.t);
        mp.lcm_den = std::lcm(mp.lcm_den, f.t.denominator());
    }
    return mp;
}

inline constexpr std::size_t kOraclePointCap = 200'000;

// Decides x^u in the closure for every u in `cands` at one level q.
class OracleLevel {
   public:
    OracleLevel(const Ring& r, const MonomialPair& mp, const std::vector<Monomial>& gens_I, std::uint64_t q)
        : gens_(gens_I), q_(q), d_(r.nvars()) {
        const std::size_t nvars = d_;
        w_.resize(nvars);
        for (std::size_t j = 0; j < nvars; ++j) {
            // floor((q - 1) delta_j)
            auto num = static_cast<__int128>(mp.delta[j].numerator()) * static_cast<__int128>(q - 1);
            w_[j] = static_cast<std::uint64_t>(num / mp.delta[j].denominator());
        }
        std::vector<Monomial> pts{Monomial{}};
        for (const auto& [A, t] : mp.factors) {
            std::uint64_t N = ceil_exponent(t, q);
            Ideal P = power_capped(A, N);
            std::vector<Monomial> next;
            for (const auto& a : pts)
                for (const auto& b : P.monomial_generators()) {
                    next.push_back(a * b);
                    if (next.size() > kOraclePointCap) throw BudgetExceeded("monomial oracle point set too large");
                }
            std::vector<Monomial> mins;
            for (const auto& g : minimal_monomial_generators(r, next)) mins.push_back(g.leading_monomial());
            pts = std::move(mins);
        }
        points_ = std::move(pts);
    }

    // k + w + a + q u >= q v for some generator v, for every point a.
    bool holds(const Monomial& u, const std::vector<std::uint64_t>& k) const {
        for (const auto& a : points_) {
            bool some = false;
            for (const auto& v : gens_) {
                bool ok = true;
                for (std::size_t i = 0; i < d_ && ok; ++i)
                    ok = k[i] + w_[i] + a[i] + q_ * u[i] >= q_ * v[i];
                if (ok) {
                    some = true;
                    break;
                }
            }
            if (!some) return false;
        }
        return true;
    }

   private:
    static Ideal power_capped(const Ideal& A, std::uint64_t N) {
        Ideal result = Ideal::unit(A.ring());
        Ideal base = A;
        while (N) {
            if (N & 1) result = result * base;
            if (result.generators().size() > kOraclePointCap)
                throw BudgetExceeded("monomial oracle point set too large");
            N >>= 1;
            if (N) base = base * base;
        }
        return result;
    }

    std::vector<Monomial> gens_;
    std::uint64_t q_;
    std::size_t d_;
    std::vector<std::uint64_t> w_;
    std::vector<Monomial> points_;
};

}  // namespace detail

/// Exact divisorial tight closure of a monomial ideal for monomial data: the boundary
/// components must be squarefree monomials with disjoint supports, so the boundary is
/// sum delta_j div(x_j). A multiplier c in R^{o,Delta} only needs, for every j with
/// delta_j = 1, a term free of x_j; the largest useful such term is K(1 - e_j).
/// Membership is then tested on a window of levels past the point where a deficiency
/// that grows with q must exceed K.
inline Ideal tc_closure_monomial(const Ideal& I, const Boundary& delta, const std::vector<IdealPower>& factors) {
    const Ring& r = I.ring();
    const std::size_t d = r.nvars();
    if (!(delta.ring() == r)) throw RingMismatch();
    if (I.is_zero()) return I;
    if (!I.is_monomial()) throw InvalidInput("monomial closure oracle: ideal is not monomial");
    if (I.is_unit()) return I;
    auto mp = *detail::monomial_pair(delta, factors, true);
    std::vector<Monomial> gens = I.monomial_generators();

    std::vector<Exponent> top(d, 0);
    std::uint64_t K = 2;
    for (std::size_t i = 0; i < d; ++i) {
        for (const auto& v : gens) top[i] = std::max(top[i], v[i]);
        K += top[i];
    }
    std::vector<std::vector<std::uint64_t>> ks;
    for (std::size_t j = 0; j < d; ++j) {
        if (!mp.floor[j]) continue;
        std::vector<std::uint64_t> k(d, K);
        k[j] = 0;
        ks.push_back(std::move(k));
    }
    if (ks.empty()) ks.push_back(std::vector<std::uint64_t>(d, K));

    const std::uint32_t p = r.p();
    const std::uint64_t threshold = (K + 2) * static_cast<std::uint64_t>(mp.lcm_den);
    unsigned e0 = 1;
    std::uint64_t q0 = p;
    while (q0 < threshold) {
        q0 *= p;
        ++e0;
    }
    const unsigned window = frobenius_period(p, mp.lcm_den);

    // Candidate exponents: the box below the generator maxima.
    std::vector<Monomial> cands;
    Monomial u;
    for (;;) {
        cands.push_back(u);
        std::size_t i = 0;
        for (; i < d; ++i) {
            if (u[i] < top[i]) {
                u.set(i, u[i] + 1);
                break;
            }
            u.set(i, 0);
        }
        if (i == d) break;
    }
    std::vector<bool> alive(cands.size(), true);
    for (unsigned e = e0; e < e0 + window; ++e) {
        detail::OracleLevel lvl(r, mp, gens, FrobeniusLevel(r.prime(), e).q());
        for (std::size_t c = 0; c < cands.size(); ++c) {
            if (!alive[c]) continue;
            for (const auto& k : ks)
                if (!lvl.holds(cands[c], k)) {
                    alive[c] = false;
                    break;
                }
        }
    }
    std::vector<Monomial> ms = gens;
    for (std::size_t c = 0; c < cands.size(); ++c)
        if (alive[c]) ms.push_back(cands[c]);
    return Ideal::from_monomials(r, ms);
}

inline Ideal tc_closure_monomial(const Ideal& I, const PairSpec& spec) {
    return tc_closure_monomial(I, spec.delta(), spec.factors());
}

namespace detail {

// P * A * x^q inside J^[q], with G a Groebner basis of J.
inline bool level_holds(const Polynomial& P, const Ideal& A, const Polynomial& xq, const std::vector<Polynomial>& Gq) {
    Polynomial base = P * xq;
    for (const auto& a : A.compact_generators())
        if (!normal_form(base * a, Gq).is_zero()) return false;
    return true;
}

inline std::vector<Polynomial> bracket_basis(const Ideal& I, unsigned e) {
    // The q-th powers of a Groebner basis form a Groebner basis of I^[q].
    std::vector<Polynomial> out;
    for (const auto& g : I.groebner()) out.push_back(g.frobenius_power(e));
    return out;
}

}  // namespace detail

/// Divisorial tight closure membership with a fixed test element: checks
/// c^n g_q a^ceil(tq) x^q inside I^[q] for e = 1..E_max. A failing level proves OUT.
/// Passing every level gives IN only when the monomial oracle agrees or the levels
/// cover two periods of the boundary beyond the first; otherwise UNDETERMINED.
inline Verdict tc_member(const Polynomial& x, const Ideal& I, const PairSpec& spec, const TestElementCertificate& cert) {
    const Ring& r = spec.ring();
    if (!(x.ring() == r) || !(I.ring() == r)) throw RingMismatch();
    cert.validate(spec.delta());
    Verdict v;
    Witness w{1, 0, cert.c, cert.n, std::nullopt, ""};
    GbCapScope cap(spec.budget().gb_cap);
    try {
        if (I.contains(x)) {
            w.certified_by = "ideal";
            v.status = Status::in;
            v.witness = w;
            return v;
        }
        const Polynomial cn = cert.c.pow(cert.n);
        for (unsigned e = 1; e <= spec.budget().e_max; ++e) {
            FrobeniusLevel lv(r.prime(), e);
            Polynomial P = cn * div_multiplier(spec.delta(), lv, MultiplierMode::ceil_minus_floor);
            bool ok = detail::level_holds(P, spec.coefficient_ideal(lv), x.frobenius_power(e),
                                          detail::bracket_basis(I, e));
            w.e_last = e;
            if (!ok) {
                w.failing_q = lv.q();
                v.status = Status::out;
                v.witness = w;
                return v;
            }
        }
    } catch (const BudgetExceeded& ex) {
        v.status = Status::undetermined;
        v.note = std::string("budget exhausted: ") + ex.what();
        return v;
    }

    // Every level passed: certify.
    auto mp = detail::monomial_pair(spec.delta(), spec.factors(), false);
    if (mp && I.is_monomial()) {
        try {
            Ideal K = tc_closure_monomial(I, spec);
            bool inside = true;
            for (const auto& t : x.terms())
                if (!K.contains(Polynomial::monomial(r, t.mono))) inside = false;
            if (inside) {
                w.certified_by = "monomial-oracle";
                v.status = Status::in;
                v.witness = w;
            } else {
                v.status = Status::undetermined;
                v.note = "all levels up to e_max pass but the monomial oracle rejects membership";
            }
            return v;
        } catch (const BudgetExceeded&) {
            // fall through to the periodicity certificate
        }
    }
    const unsigned period = frobenius_period(r.p(), spec.delta().period());
    if (spec.budget().e_max >= 1 + 2 * period) {
        w.certified_by = "periodicity";
        v.status = Status::in;
        v.witness = w;
    } else {
        v.status = Status::undetermined;
        v.note = "levels 1.." + std::to_string(spec.budget().e_max) + " pass; no certificate available";
    }
    return v;
}

/// Classical tight closure (empty boundary) with c = 1; over a polynomial ring this is
/// plain ideal membership.
inline Verdict classical_tc_member(const Polynomial& x, const Ideal& I, const PairSpec& spec) {
    if (!spec.delta().empty()) throw InvalidInput("classical tight closure requires an empty boundary");
    return tc_member(x, I, spec, TestElementCertificate{Polynomial::constant(spec.ring(), 1), 1, Evidence::user_asserted});
}

/// The part of the closure visible from monomials: I plus every monomial in the box of
/// I's generator exponents (or of total degree <= bound) that tc_member accepts.
inline Ideal closure_monomial_part(const Ideal& I, const PairSpec& spec, const TestElementCertificate& cert,
                                   Exponent box) {
    const Ring& r = spec.ring();
    std::vector<Polynomial> gens = I.generators();
    Monomial u;
    const std::size_t d = r.nvars();
    for (;;) {
        Polynomial m = Polynomial::monomial(r, u);
        if (!I.contains(m) && tc_member(m, I, spec, cert).status == Status::in) gens.push_back(m);
        std::size_t i = 0;
        for (; i < d; ++i) {
            if (u[i] < box) {
                u.set(i, u[i] + 1);
                break;
            }
            u.set(i, 0);
        }
        if (i == d) break;
    }
    return Ideal(r, std::move(gens));
}

}  // namespace frobtest

#endif

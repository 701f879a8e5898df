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

#ifndef FROBTEST_PROPERTY_SUITE_HPP
#define FROBTEST_PROPERTY_SUITE_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frobtest/errors.hpp"
#include "frobtest/ideal.hpp"
#include "frobtest/pairs.hpp"
#include "frobtest/parallel.hpp"
#include "frobtest/test_ideal.hpp"

namespace frobtest {

enum class Relation { equal, subset };
enum class Outcome { pass, fail, skip };

inline std::string_view to_string(Relation r) { return r == Relation::equal ? "EQUAL" : "SUBSET"; }
inline std::string_view to_string(Outcome o) {
    switch (o) {
        case Outcome::pass:
            return "PASS";
        case Outcome::fail:
            return "FAIL";
        default:
            return "SKIP";
    }
}

/// Which hypothesis of the checked statement an instance violates.
enum class SkipReason {
    none,
    not_a_boundary,           // a summed coefficient exceeds 1
    r_divisible_by_p,         // index r of K + Delta (or Delta_i) divisible by p
    component_overlap,        // supports share a component where they must not
    coefficient_in_round_down,  // a (or b) has no element of R^{o,Delta}
    not_in_ideal,             // f not in b
    hyperplane_not_round_down,  // restriction needs floor(Delta) = div(x_j)
    divisible_by_hyperplane,  // B or a has a generator divisible by x_j
    restricted_not_reduced,   // B restricted to x_j = 0 is not a reduced boundary
    budget,                   // computation exceeded its budget
};

inline std::string_view to_string(SkipReason r) {
    switch (r) {
        case SkipReason::none:
            return "";
        case SkipReason::not_a_boundary:
            return "sum of boundaries has a coefficient above 1";
        case SkipReason::r_divisible_by_p:
            return "the index r is divisible by p";
        case SkipReason::component_overlap:
            return "boundary supports share a component";
        case SkipReason::coefficient_in_round_down:
            return "coefficient ideal lies in a component of the round-down";
        case SkipReason::not_in_ideal:
            return "f does not lie in b";
        case SkipReason::hyperplane_not_round_down:
            return "round-down is not the single hyperplane x_j";
        case SkipReason::divisible_by_hyperplane:
            return "a boundary component or generator of a is divisible by x_j";
        case SkipReason::restricted_not_reduced:
            return "restricted boundary is not a reduced boundary";
        default:
            return "budget exhausted";
    }
}

/// Everything needed to recompute a case. Field use depends on kind:
///   monotonicity       tau^div(delta; a^t) in tau^div(delta2; b^s), delta2 <= delta
///   basic2             R(-delta2) tau^div(delta; a^t) b in tau^div(delta + delta2; a^t b)
///   test-cor4          tau^div(delta + delta2; a^t) in tau^div(delta; a^t b), delta2 = div(f)
///   subadditivity-div  tau^div(delta + delta2; a^s b^t) in tau^div(delta; a^s) tau^div(delta2; b^t)
///   subadditivity-m    tau(a^s b^t) in sum tau(a^s m^l) tau(b^t m^(d-l))
///   restriction        tau(S, B|S; (aS)^t) = tau^div(delta; a^t) S, S = R/(x_j)
struct PropertyInstance {
    std::string kind;
    Boundary delta;
    Boundary delta2;
    Ideal a;
    Ideal b;
    Rational s{1};
    Rational t{1};
    std::size_t j = 0;
    Budget budget;
};

struct PropertyCase {
    std::string name;
    PropertyInstance instance;
    Relation relation = Relation::subset;
    Outcome outcome = Outcome::skip;
    SkipReason reason = SkipReason::none;
    std::optional<Ideal> lhs, rhs;
    std::vector<std::string> notes;
    double seconds = 0;
};

namespace detail {

inline TauOptions suite_options() {
    TauOptions o;
    o.spot_check = false;
    return o;
}

// Raises E_max while the chain is unstable and q stays below kSuiteMaxQ.
inline constexpr std::uint64_t kSuiteMaxQ = 4096;

inline TestIdealReport escalate(const PairSpec& spec, bool divisorial) {
    Budget b = spec.budget();
    for (;;) {
        PairSpec sp = spec.with_budget(b);
        TestIdealReport rep = divisorial ? tau_div(sp, suite_options()) : tau(sp, suite_options());
        std::uint64_t next = 1;
        for (unsigned e = 0; e <= b.e_max; ++e) next *= spec.ring().p();
        if (rep.stable || next > kSuiteMaxQ) return rep;
        ++b.e_max;
    }
}

inline Ideal tau_div_of(const Boundary& delta, std::vector<IdealPower> factors, const Budget& budget,
                        std::vector<std::string>& notes) {
    TestIdealReport rep = escalate(PairSpec(delta, std::move(factors), budget), true);
    if (!rep.stable) notes.push_back("unstable: tau^div(" + delta.to_string() + ")");
    return rep.result;
}

inline Ideal tau_of(const Boundary& delta, std::vector<IdealPower> factors, const Budget& budget,
                    std::vector<std::string>& notes) {
    TestIdealReport rep = escalate(PairSpec(delta, std::move(factors), budget), false);
    if (!rep.stable) notes.push_back("unstable: tau(" + delta.to_string() + ")");
    return rep.result;
}

inline bool pair_valid(const Boundary& delta, const std::vector<IdealPower>& f, const Budget& b) {
    try {
        PairSpec(delta, f, b);
        return true;
    } catch (const InvalidInput&) {
        return false;
    }
}

inline bool shares_component(const Boundary& x, const Boundary& y) {
    for (const auto& c : x.components())
        for (const auto& d : y.components())
            if (!polynomial_gcd(c.f, d.f).is_constant()) return true;
    return false;
}

inline void decide(PropertyCase& pc, const Ideal& lhs, const Ideal& rhs) {
    pc.lhs = lhs;
    pc.rhs = rhs;
    bool ok = pc.relation == Relation::equal ? lhs == rhs : rhs.contains(lhs);
    pc.outcome = ok ? Outcome::pass : Outcome::fail;
}

inline PropertyCase skip(PropertyCase pc, SkipReason r) {
    pc.outcome = Outcome::skip;
    pc.reason = r;
    return pc;
}

}  // namespace detail

inline PropertyCase monotonicity_check(const PropertyInstance& in) {
    PropertyCase pc{"monotonicity", in, Relation::subset, Outcome::skip, SkipReason::none, {}, {}, {}, 0};
    if (!in.delta2.dominated_by(in.delta) || !in.b.contains(in.a) || in.t < in.s)
        throw InvalidInput("monotonicity instance is not ordered");
    if (!detail::pair_valid(in.delta, {{in.a, in.t}}, in.budget) ||
        !detail::pair_valid(in.delta2, {{in.b, in.s}}, in.budget))
        return detail::skip(pc, SkipReason::coefficient_in_round_down);
    Ideal lhs = detail::tau_div_of(in.delta, {{in.a, in.t}}, in.budget, pc.notes);
    Ideal rhs = detail::tau_div_of(in.delta2, {{in.b, in.s}}, in.budget, pc.notes);
    detail::decide(pc, lhs, rhs);
    return pc;
}

/// delta2 = 1 * div(g) is the added boundary, so R(-delta2) = (g).
inline PropertyCase basic2_check(const PropertyInstance& in) {
    PropertyCase pc{"basic2", in, Relation::subset, Outcome::skip, SkipReason::none, {}, {}, {}, 0};
    const Ring& r = in.delta.ring();
    std::optional<Boundary> sum;
    try {
        sum = in.delta + in.delta2;
    } catch (const InvalidInput&) {
        return detail::skip(pc, SkipReason::not_a_boundary);
    }
    if (!detail::pair_valid(in.delta, {{in.a, in.t}}, in.budget) ||
        !detail::pair_valid(in.delta2, {{in.a, in.t}}, in.budget) ||
        !detail::pair_valid(*sum, {{in.b, Rational(1)}}, in.budget) ||
        !detail::pair_valid(*sum, {{in.a, in.t}, {in.b, Rational(1)}}, in.budget))
        return detail::skip(pc, SkipReason::coefficient_in_round_down);
    Polynomial g = Polynomial::constant(r, 1);
    for (const auto& c : in.delta2.components()) {
        if (c.d != Rational(1)) throw InvalidInput("basic2 expects an integral added boundary");
        g *= c.f;
    }
    Ideal tau0 = detail::tau_div_of(in.delta, {{in.a, in.t}}, in.budget, pc.notes);
    Ideal lhs = (tau0 * in.b).scaled_by(g);
    Ideal rhs = detail::tau_div_of(*sum, {{in.a, in.t}, {in.b, Rational(1)}}, in.budget, pc.notes);
    detail::decide(pc, lhs, rhs);
    return pc;
}

/// delta2 = 1 * div(f) with f in b.
inline PropertyCase test_cor4_check(const PropertyInstance& in) {
    PropertyCase pc{"test-cor4", in, Relation::subset, Outcome::skip, SkipReason::none, {}, {}, {}, 0};
    if (in.delta2.components().size() != 1 || in.delta2.components()[0].d != Rational(1))
        throw InvalidInput("test-cor4 expects D = 1 * div(f)");
    const Polynomial& f = in.delta2.components()[0].f;
    if (detail::shares_component(in.delta, in.delta2)) return detail::skip(pc, SkipReason::component_overlap);
    if (!in.b.contains(f)) return detail::skip(pc, SkipReason::not_in_ideal);
    Boundary sum = in.delta + in.delta2;
    if (!detail::pair_valid(sum, {{in.a, in.t}}, in.budget) || !detail::pair_valid(sum, {{in.b, Rational(1)}}, in.budget))
        return detail::skip(pc, SkipReason::coefficient_in_round_down);
    Ideal lhs = detail::tau_div_of(sum, {{in.a, in.t}}, in.budget, pc.notes);
    Ideal rhs = detail::tau_div_of(in.delta, {{in.a, in.t}, {in.b, Rational(1)}}, in.budget, pc.notes);
    detail::decide(pc, lhs, rhs);
    return pc;
}

/// Jacobian ideal of a polynomial ring is (1).
inline PropertyCase subadditivity_div_check(const PropertyInstance& in) {
    PropertyCase pc{"subadditivity-div", in, Relation::subset, Outcome::skip, SkipReason::none, {}, {}, {}, 0};
    const std::uint32_t p = in.delta.ring().p();
    std::optional<Boundary> sum;
    try {
        sum = in.delta + in.delta2;
    } catch (const InvalidInput&) {
        return detail::skip(pc, SkipReason::not_a_boundary);
    }
    if (in.delta.period() % p == 0 && in.delta2.period() % p == 0)
        return detail::skip(pc, SkipReason::r_divisible_by_p);
    if (!detail::pair_valid(*sum, {{in.a, in.s}, {in.b, in.t}}, in.budget) ||
        !detail::pair_valid(in.delta, {{in.a, in.s}}, in.budget) ||
        !detail::pair_valid(in.delta2, {{in.b, in.t}}, in.budget))
        return detail::skip(pc, SkipReason::coefficient_in_round_down);
    Ideal lhs = detail::tau_div_of(*sum, {{in.a, in.s}, {in.b, in.t}}, in.budget, pc.notes);
    Ideal rhs = detail::tau_div_of(in.delta, {{in.a, in.s}}, in.budget, pc.notes) *
                detail::tau_div_of(in.delta2, {{in.b, in.t}}, in.budget, pc.notes);
    detail::decide(pc, lhs, rhs);
    return pc;
}

/// m is the ideal of the origin; boundaries are empty. lambda and mu range over
/// nonnegative reals; the sum is taken over the grid lambda = k / p^E of [0, d], which
/// keeps ceil(lambda q) exact. Extra summands only enlarge the right side.
inline constexpr std::uint64_t kLambdaGrid = 5;

inline PropertyCase subadditivity_m_check(const PropertyInstance& in) {
    PropertyCase pc{"subadditivity-m", in, Relation::subset, Outcome::skip, SkipReason::none, {}, {}, {}, 0};
    const Ring& r = in.a.ring();
    if (in.a.is_zero() || in.b.is_zero()) throw InvalidInput("subadditivity needs nonzero ideals");
    const Boundary empty(r);
    const Ideal m = Ideal::maximal(r);
    const auto d = static_cast<std::int64_t>(r.nvars());
    std::int64_t den = 1;
    while (den < static_cast<std::int64_t>(kLambdaGrid)) den *= r.p();
    auto with_m = [&](const Ideal& x, const Rational& e, std::int64_t k) {
        std::vector<IdealPower> f{{x, e}};
        if (k > 0) f.push_back({m, Rational(k, den)});
        return detail::tau_of(empty, std::move(f), in.budget, pc.notes);
    };
    Ideal lhs = detail::tau_of(empty, {{in.a, in.s}, {in.b, in.t}}, in.budget, pc.notes);
    const Ideal b_top = with_m(in.b, in.t, 0);
    Ideal rhs = Ideal::zero(r);
    for (std::int64_t k = 0; k <= d * den; ++k) {
        Ideal left = with_m(in.a, in.s, k);
        if (rhs.contains(left * b_top))
            continue;  // the second factor only grows with k, so this term is already covered
        rhs = rhs + left * with_m(in.b, in.t, d * den - k);
        if (rhs.contains(lhs)) break;
    }
    detail::decide(pc, lhs, rhs);
    return pc;
}

/// Restriction to the coordinate hyperplane x_j = 0 with floor(Delta) = div(x_j).
inline PropertyCase restriction_check(const PropertyInstance& in) {
    PropertyCase pc{"restriction", in, Relation::equal, Outcome::skip, SkipReason::none, {}, {}, {}, 0};
    const Ring& R = in.delta.ring();
    const std::size_t j = in.j;
    if (j >= R.nvars()) throw InvalidInput("restriction index out of range");
    const Polynomial xj = Polynomial::variable(R, j);
    bool has_hyperplane = false;
    for (const auto& c : in.delta.components()) {
        if (c.d == Rational(1)) {
            if (!(c.f == xj)) return detail::skip(pc, SkipReason::hyperplane_not_round_down);
            has_hyperplane = true;
        } else if (c.f.restrict_to_hyperplane(j, R.without_var(j)).is_zero()) {
            return detail::skip(pc, SkipReason::divisible_by_hyperplane);
        }
    }
    if (!has_hyperplane) return detail::skip(pc, SkipReason::hyperplane_not_round_down);
    if (in.delta.period() % R.p() == 0) return detail::skip(pc, SkipReason::r_divisible_by_p);
    // aS = 0 means a lies in (x_j); single generators may vanish on the hyperplane.
    if (in.a.restrict_to_hyperplane(j, R.without_var(j)).is_zero())
        return detail::skip(pc, SkipReason::divisible_by_hyperplane);
    if (!detail::pair_valid(in.delta, {{in.a, in.t}}, in.budget))
        return detail::skip(pc, SkipReason::coefficient_in_round_down);

    const Ring S = R.without_var(j);
    Boundary B(S);
    try {
        for (const auto& c : in.delta.components()) {
            if (c.d == Rational(1)) continue;
            Polynomial fs = c.f.restrict_to_hyperplane(j, S);
            if (fs.is_constant()) continue;  // the component misses the hyperplane
            B.add(fs, c.d);
        }
    } catch (const InvalidInput&) {
        return detail::skip(pc, SkipReason::restricted_not_reduced);
    }
    Ideal aS = in.a.restrict_to_hyperplane(j, S);
    Ideal lhs = detail::tau_of(B, {{aS, in.t}}, in.budget, pc.notes);
    Ideal rhs = detail::tau_div_of(in.delta, {{in.a, in.t}}, in.budget, pc.notes).restrict_to_hyperplane(j, S);
    detail::decide(pc, lhs, rhs);
    return pc;
}

/// Recomputes a case from its instance.
inline PropertyCase run_case(const PropertyInstance& in) {
    auto t0 = std::chrono::steady_clock::now();
    PropertyCase pc{in.kind, in, Relation::subset, Outcome::skip, SkipReason::none, {}, {}, {}, 0};
    try {
        if (in.kind == "monotonicity")
            pc = monotonicity_check(in);
        else if (in.kind == "basic2")
            pc = basic2_check(in);
        else if (in.kind == "test-cor4")
            pc = test_cor4_check(in);
        else if (in.kind == "subadditivity-div")
            pc = subadditivity_div_check(in);
        else if (in.kind == "subadditivity-m")
            pc = subadditivity_m_check(in);
        else if (in.kind == "restriction")
            pc = restriction_check(in);
        else
            throw InvalidInput("unknown property kind '" + in.kind + "'");
    } catch (const BudgetExceeded& e) {
        pc = detail::skip(pc, SkipReason::budget);
        pc.notes.push_back(e.what());
    } catch (const ExponentOverflow& e) {
        pc = detail::skip(pc, SkipReason::budget);
        pc.notes.push_back(e.what());
    }
    pc.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return pc;
}

namespace detail {

class InstanceGenerator {
   public:
    explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t pick(std::uint64_t n) { return rng_() % n; }

    Ring ring() {
        static const std::uint32_t primes[] = {2, 3, 5};
        std::uint32_t p = primes[pick(3)];
        std::size_t d = (p == 2 && pick(2) == 0) ? 3 : 2;
        static const char* names[] = {"x", "y", "z"};
        std::vector<std::string> v(names, names + d);
        return Ring(Prime(p), v);
    }

    Rational coefficient() {
        static const Rational cs[] = {Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(1)};
        return cs[pick(4)];
    }
    Rational exponent() {
        static const Rational ts[] = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(1, 3),
                                      Rational(2, 3)};
        return ts[pick(6)];
    }

    Monomial monomial(const Ring& r, Exponent max_e, bool allow_one) {
        for (;;) {
            Monomial m;
            for (std::size_t i = 0; i < r.nvars(); ++i) m.set(i, static_cast<Exponent>(pick(max_e + 1)));
            if (allow_one || !m.is_one()) return m;
        }
    }

    // The first generator avoids the variables flagged in `avoid`.
    Ideal monomial_ideal(const Ring& r, const std::vector<bool>& avoid = {}) {
        std::vector<Monomial> ms;
        std::size_t k = 1 + pick(3);
        for (std::size_t i = 0; i < k; ++i) ms.push_back(monomial(r, 3, false));
        for (std::size_t v = 0; v < avoid.size(); ++v)
            if (avoid[v]) ms[0].set(v, 0);
        return Ideal::from_monomials(r, ms);
    }

    static std::vector<bool> floor_vars(const Boundary& b) {
        std::vector<bool> out(b.ring().nvars(), false);
        for (const auto& c : b.components())
            if (c.d == Rational(1))
                for (std::size_t i = 0; i < out.size(); ++i)
                    if (c.f.leading_monomial()[i] > 0) out[i] = true;
        return out;
    }

    // Components are single variables (or the product of two) on disjoint supports.
    Boundary boundary(const Ring& r, std::vector<bool>& used, bool allow_floor = true) {
        Boundary b(r);
        for (std::size_t i = 0; i < r.nvars(); ++i) {
            if (used[i] || pick(2) == 0) continue;
            Monomial m = Monomial::variable(i);
            used[i] = true;
            if (i + 1 < r.nvars() && !used[i + 1] && pick(3) == 0) {
                m = m * Monomial::variable(i + 1);
                used[i + 1] = true;
            }
            Rational d = coefficient();
            if (!allow_floor && d == Rational(1)) d = Rational(1, 2);
            b.add(Polynomial::monomial(r, m), d);
        }
        return b;
    }

    Budget budget(const Ring& r) { return Budget::defaults_for(r.p()); }

   private:
    std::mt19937_64 rng_;
};

}  // namespace detail

inline const std::vector<std::string>& property_kinds() {
    static const std::vector<std::string> k{"monotonicity",      "basic2",          "test-cor4",
                                            "subadditivity-div", "subadditivity-m", "restriction"};
    return k;
}

/// Deterministic random instance number `index` of the stream for `seed`.
inline PropertyInstance generate_instance(std::uint64_t seed, std::size_t index, std::string kind = "") {
    detail::InstanceGenerator g(seed * 0x9E3779B97F4A7C15ULL + index);
    if (kind.empty()) kind = property_kinds()[index % property_kinds().size()];
    Ring r = g.ring();
    std::vector<bool> used(r.nvars(), false);
    PropertyInstance in{kind, Boundary(r), Boundary(r), Ideal::unit(r), Ideal::unit(r), Rational(1), Rational(1), 0,
                        g.budget(r)};
    using G = detail::InstanceGenerator;
    if (kind == "monotonicity") {
        in.delta = g.boundary(r, used);
        Boundary smaller(r);
        for (const auto& c : in.delta.components()) {
            std::uint64_t k = g.pick(3);
            if (k == 0) continue;
            smaller.add(c.f, k == 1 ? c.d : c.d / 2);
        }
        in.delta2 = smaller;
        in.a = g.monomial_ideal(r, G::floor_vars(in.delta));
        in.b = in.a + g.monomial_ideal(r);
        in.t = g.exponent();
        in.s = in.t * Rational(1 + static_cast<std::int64_t>(g.pick(2)), 2);
    } else if (kind == "basic2" || kind == "test-cor4") {
        // One variable is reserved for the added divisor div(x_k).
        const std::size_t k = static_cast<std::size_t>(g.pick(r.nvars()));
        used[k] = true;
        in.delta = g.boundary(r, used);
        const Polynomial xk = Polynomial::variable(r, k);
        in.delta2.add(xk, Rational(1));
        std::vector<bool> avoid = G::floor_vars(in.delta);
        avoid[k] = true;
        in.a = g.monomial_ideal(r, avoid);
        in.b = g.monomial_ideal(r, avoid);
        if (kind == "test-cor4") in.b = in.b + Ideal(r, {xk});
        in.t = g.exponent();
    } else if (kind == "subadditivity-div") {
        in.delta = g.boundary(r, used);
        in.delta2 = g.boundary(r, used);
        std::vector<bool> avoid = G::floor_vars(in.delta + in.delta2);
        in.a = g.monomial_ideal(r, avoid);
        in.b = g.monomial_ideal(r, avoid);
        in.s = g.exponent();
        in.t = g.exponent();
    } else if (kind == "subadditivity-m") {
        in.a = g.monomial_ideal(r);
        in.b = g.monomial_ideal(r);
        in.s = g.exponent();
        in.t = g.exponent();
    } else if (kind == "restriction") {
        in.j = static_cast<std::size_t>(g.pick(r.nvars()));
        used[in.j] = true;
        // Denominators prime to p keep the index r of K + Delta prime to p.
        Boundary frac = g.boundary(r, used, false);
        for (const auto& c : frac.components()) {
            Rational d = c.d;
            if (d.denominator() % static_cast<std::int64_t>(r.p()) == 0) d = r.p() == 3 ? Rational(1, 2) : Rational(1, 3);
            in.delta.add(c.f, d);
        }
        in.delta.add(Polynomial::variable(r, in.j), Rational(1));
        std::vector<Monomial> ms;
        for (std::size_t k = 0; k < 1 + g.pick(2); ++k) {
            Monomial m = g.monomial(r, 3, false);
            m.set(in.j, 0);
            if (m.is_one()) m = Monomial::variable((in.j + 1) % r.nvars());
            ms.push_back(m);
        }
        if (g.pick(4) == 0) ms.push_back(Monomial{});
        in.a = Ideal::from_monomials(r, ms);
        in.t = g.exponent();
    } else {
        throw InvalidInput("unknown property kind '" + kind + "'");
    }
    return in;
}

/// Summary counts of a suite run.
struct SuiteSummary {
    std::size_t pass = 0, fail = 0, skip = 0;
};

inline SuiteSummary summarize(const std::vector<PropertyCase>& cases) {
    SuiteSummary s;
    for (const auto& c : cases) {
        if (c.outcome == Outcome::pass) ++s.pass;
        if (c.outcome == Outcome::fail) ++s.fail;
        if (c.outcome == Outcome::skip) ++s.skip;
    }
    return s;
}

/// Seeded random instances cycling through all property kinds; evaluated concurrently,
/// returned in index order.
inline std::vector<PropertyCase> run_suite(std::uint64_t seed, std::size_t count, unsigned workers = 0) {
    std::vector<std::size_t> idx(count);
    for (std::size_t i = 0; i < count; ++i) idx[i] = i;
    return ordered_map(
        idx,
        [&](std::size_t i) {
            PropertyCase pc = run_case(generate_instance(seed, i));
            pc.name = pc.instance.kind + "#" + std::to_string(i);
            return pc;
        },
        workers);
}

}  // namespace frobtest

#endif

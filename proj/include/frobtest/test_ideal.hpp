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

#ifndef FROBTEST_TEST_IDEAL_HPP
#define FROBTEST_TEST_IDEAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frobtest/closure.hpp"
#include "frobtest/errors.hpp"
#include "frobtest/frobenius.hpp"
#include "frobtest/ideal.hpp"
#include "frobtest/pairs.hpp"

namespace frobtest {

enum class TauMode { divisorial, generalized };

inline std::string_view to_string(TauMode m) { return m == TauMode::divisorial ? "DIVISORIAL" : "GENERALIZED"; }

enum class SpotCheck { passed, failed, skipped };

inline std::string_view to_string(SpotCheck s) {
    switch (s) {
        case SpotCheck::passed:
            return "passed";
        case SpotCheck::failed:
            return "failed";
        default:
            return "skipped";
    }
}

struct TestIdealReport {
    Ideal result;
    std::vector<std::pair<unsigned, Ideal>> chain;  // (E, partial sum) for the certified power
    TestElementCertificate test_element;
    bool stable = false;
    unsigned stable_at = 0;
    TauMode mode = TauMode::divisorial;
    MultiplierMode multiplier = MultiplierMode::ceil_minus_floor;
    SpotCheck spot_check = SpotCheck::skipped;
    std::vector<std::string> notes;
};

struct TauOptions {
    std::optional<TestElementCertificate> cert;    // overrides the default candidates
    std::size_t candidate = 0;                     // index into default_test_candidates
    MultiplierMode multiplier = MultiplierMode::ceil_minus_floor;
    bool spot_check = true;
    unsigned max_power = 4;
};

/// The chain of partial sums of (d * g_q * a^ceil(tq))^[1/q] for a fixed multiplier d.
/// CEIL_MINUS_FLOOR uses d = c^n; QMINUS1 uses d = (c h)^n with h the product of the
/// fractional components, which makes d vanish on the non-integral part of Delta as the
/// restriction argument requires of R(-ceil(B)).
inline ChainReport tau_chain(const PairSpec& spec, const Polynomial& c, unsigned n, MultiplierMode mode) {
    const Ring& r = spec.ring();
    Polynomial base = mode == MultiplierMode::qminus1 ? c * spec.delta().fractional_product() : c;
    const Polynomial d = base.pow(n);
    GbCapScope cap(spec.budget().gb_cap);
    return root_chain_levels(
        r,
        [&](unsigned e) {
            FrobeniusLevel lv(r.prime(), e);
            Polynomial P = d * div_multiplier(spec.delta(), lv, mode);
            auto [factors, m_power] = spec.coefficient_factors(lv);
            return frobenius_root_of_product(P, factors, lv, m_power);
        },
        spec.budget().e_max, spec.budget().e_min);
}

/// Ideals used for the containment spot-check tau * closure(I) inside I.
inline std::vector<Ideal> spot_check_ideals(const Ring& r) {
    std::vector<Monomial> sq, cube;
    for (std::size_t i = 0; i < r.nvars(); ++i) {
        sq.push_back(Monomial::variable(i, 2));
        cube.push_back(Monomial::variable(i, 3));
    }
    Ideal m = Ideal::maximal(r);
    return {Ideal::from_monomials(r, sq), m * m, Ideal::from_monomials(r, cube)};
}

/// tau * closure(I) inside I for the spot-check ideals. The closure is exact for
/// monomial data and otherwise the monomial part accepted by tc_member.
inline SpotCheck containment_spot_check(const PairSpec& spec, const Ideal& tau, const TestElementCertificate& cert,
                                        std::vector<std::string>* notes = nullptr) {
    const Ring& r = spec.ring();
    if (r.nvars() == 0) return SpotCheck::skipped;
    bool monomial = detail::monomial_pair(spec.delta(), spec.factors(), false).has_value();
    try {
        for (const auto& I : spot_check_ideals(r)) {
            Ideal K = monomial ? tc_closure_monomial(I, spec) : closure_monomial_part(I, spec, cert, 3);
            if (!I.contains(tau * K)) {
                if (notes) notes->push_back("spot-check failed on " + I.to_string() + " with closure " + K.to_string());
                return SpotCheck::failed;
            }
        }
    } catch (const BudgetExceeded&) {
        if (notes) notes->push_back("spot-check skipped: budget exhausted");
        return SpotCheck::skipped;
    }
    return SpotCheck::passed;
}

/// Divisorial test ideal over the polynomial ring as a stabilized sum of Frobenius roots.
/// The test element power is raised from n until two consecutive powers agree.
inline TestIdealReport tau_div(const PairSpec& spec, const TauOptions& opt = {}) {
    const Ring& r = spec.ring();
    GbCapScope cap(spec.budget().gb_cap);
    TestElementCertificate cert{Polynomial::constant(r, 1), 1, Evidence::jacobian_candidate};
    if (opt.cert) {
        cert = *opt.cert;
        cert.validate(spec.delta());
    } else {
        auto cands = default_test_candidates(spec.delta());
        if (cands.empty())
            throw InvalidInput("no valid test element candidate for this boundary; supply one explicitly");
        if (opt.candidate >= cands.size())
            throw InvalidInput("test element candidate index " + std::to_string(opt.candidate) + " out of range (" +
                               std::to_string(cands.size()) + " candidates)");
        cert.c = cands[opt.candidate];
    }

    TestIdealReport rep{Ideal::zero(r), {}, cert, false, 0, TauMode::divisorial, opt.multiplier, SpotCheck::skipped, {}};
    if (spec.delta().has_unknown_squarefree())
        rep.notes.push_back("a boundary component has unknown squarefreeness; R^{o,Delta} membership is a proxy");

    const bool constant_multiplier =
        cert.c.is_constant() &&
        (opt.multiplier == MultiplierMode::ceil_minus_floor || spec.delta().fractional_product().is_constant());
    std::optional<ChainReport> prev;
    unsigned n = cert.n;
    for (;; ++n) {
        ChainReport ch = tau_chain(spec, cert.c, n, opt.multiplier);
        if (constant_multiplier) {
            prev = std::move(ch);
            rep.test_element.n = n;
            rep.test_element.evidence = Evidence::stabilized;
            break;
        }
        if (prev && prev->result == ch.result) {
            rep.test_element.n = n - 1;
            rep.test_element.evidence = Evidence::stabilized;
            break;
        }
        if (n >= opt.max_power) {
            rep.notes.push_back("test element power did not stabilize by n = " + std::to_string(n));
            prev = std::move(ch);
            rep.test_element.n = n;
            break;
        }
        prev = std::move(ch);
    }
    rep.result = prev->result;
    rep.chain = prev->chain;
    rep.stable = prev->stable && rep.test_element.evidence == Evidence::stabilized;
    rep.stable_at = prev->stable_at;
    if (!prev->stable) rep.notes.push_back("root chain did not stabilize within e_max");
    if (opt.spot_check) rep.spot_check = containment_spot_check(spec, rep.result, rep.test_element, &rep.notes);
    return rep;
}

/// Generalized test ideal for a boundary with every coefficient below 1, using c = 1.
inline TestIdealReport tau(const PairSpec& spec, const TauOptions& opt = {}) {
    if (!spec.delta().floor_empty())
        throw InvalidInput("tau requires every boundary coefficient below 1 (round-down must be empty)");
    const Ring& r = spec.ring();
    GbCapScope cap(spec.budget().gb_cap);
    ChainReport ch = tau_chain(spec, Polynomial::constant(r, 1), 1, MultiplierMode::ceil_minus_floor);
    TestIdealReport rep{ch.result,
                        ch.chain,
                        TestElementCertificate{Polynomial::constant(r, 1), 1, Evidence::stabilized},
                        ch.stable,
                        ch.stable_at,
                        TauMode::generalized,
                        MultiplierMode::ceil_minus_floor,
                        SpotCheck::skipped,
                        {}};
    if (!ch.stable) rep.notes.push_back("root chain did not stabilize within e_max");
    if (opt.spot_check) rep.spot_check = containment_spot_check(spec, rep.result, rep.test_element, &rep.notes);
    return rep;
}

/// tau^div((R, Delta)) = R, with unknown when the chain is not stable.
inline Tristate is_divisorially_f_regular(const Boundary& delta, Budget budget) {
    PairSpec spec(delta, Ideal::unit(delta.ring()), Rational(1), budget);
    TauOptions opt;
    opt.spot_check = false;
    TestIdealReport rep = tau_div(spec, opt);
    if (rep.result.is_unit()) return Tristate::yes;
    return rep.stable ? Tristate::no : Tristate::unknown;
}
inline Tristate is_divisorially_f_regular(const Boundary& delta) {
    return is_divisorially_f_regular(delta, Budget::defaults_for(delta.ring().p()));
}

/// tau((R, Delta)) = R; false at once when some coefficient equals 1.
inline Tristate is_strongly_f_regular(const Boundary& delta, Budget budget) {
    if (!delta.floor_empty()) return Tristate::no;
    PairSpec spec(delta, Ideal::unit(delta.ring()), Rational(1), budget);
    TauOptions opt;
    opt.spot_check = false;
    TestIdealReport rep = tau(spec, opt);
    if (rep.result.is_unit()) return Tristate::yes;
    return rep.stable ? Tristate::no : Tristate::unknown;
}
inline Tristate is_strongly_f_regular(const Boundary& delta) {
    return is_strongly_f_regular(delta, Budget::defaults_for(delta.ring().p()));
}

struct JumpPoint {
    Rational t;
    Ideal ideal;
};

/// Distinct tau^div ideals over t in [t_min, t_max] (t > 0) with the least probed t
/// attaining each. Grid neighbours with different ideals are refined by scanning the
/// rationals of denominator <= den_cap in the bracketing interval in increasing order.
/// Small denominators keep probes away from thresholds; a changed probe is confirmed
/// with E_max + 4 before it is accepted.
inline std::vector<JumpPoint> jump_search(const PairSpec& templ, Rational t_min, Rational t_max, unsigned resolution,
                                          std::int64_t den_cap = 16) {
    if (resolution == 0) throw InvalidInput("resolution must be positive");
    if (t_max <= Rational(0) || t_max < t_min) throw InvalidInput("invalid t range");
    TauOptions opt;
    opt.spot_check = false;
    auto eval = [&](const Rational& t, unsigned extra_e = 0) {
        std::vector<IdealPower> f = templ.factors();
        f.front().t = t;
        Budget b = templ.budget();
        b.e_max += extra_e;
        if (extra_e) b.e_min = b.e_max;
        return tau_div(PairSpec(templ.delta(), std::move(f), b), opt).result;
    };
    std::vector<std::pair<Rational, Ideal>> grid;
    for (unsigned k = 0; k <= resolution; ++k) {
        Rational t = t_min + (t_max - t_min) * Rational(k, resolution);
        if (t <= Rational(0)) continue;
        grid.emplace_back(t, eval(t));
    }
    std::vector<JumpPoint> out;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        if (k == 0) {
            out.push_back({grid[0].first, grid[0].second});
            continue;
        }
        if (grid[k].second == grid[k - 1].second) continue;
        const Rational lo = grid[k - 1].first;
        std::vector<Rational> probes;
        for (std::int64_t den = 1; den <= den_cap; ++den) {
            std::int64_t num = lo.numerator() * den / lo.denominator() + 1;
            for (Rational c(num, den); c < grid[k].first; c = Rational(++num, den)) probes.push_back(c);
        }
        std::sort(probes.begin(), probes.end());
        probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
        Ideal current = grid[k - 1].second;
        auto record = [&](const Rational& t, const Ideal& I) {
            current = I;
            for (const auto& o : out)
                if (o.ideal == I) return;
            out.push_back({t, I});
        };
        for (const auto& c : probes) {
            Ideal m = eval(c);
            // A probe just below a threshold can look changed at small q; confirm deeper.
            if (!(m == current)) m = eval(c, 4);
            if (!(m == current)) record(c, m);
        }
        if (!(grid[k].second == current)) record(grid[k].first, grid[k].second);
    }
    return out;
}

}  // namespace frobtest

#endif

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

#ifndef FROBTEST_JSON_IO_HPP
#define FROBTEST_JSON_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "frobtest/closure.hpp"
#include "frobtest/errors.hpp"
#include "frobtest/ideal.hpp"
#include "frobtest/pairs.hpp"
#include "frobtest/parser.hpp"
#include "frobtest/property_suite.hpp"
#include "frobtest/test_ideal.hpp"

namespace frobtest::io {

// nlohmann::json keeps object keys in a std::map, so dumps are key-sorted.
using Json = nlohmann::json;

namespace detail {

inline const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
    return j.at(key);
}

template <class T>
T get(const Json& j, const char* key) {
    try {
        return field(j, key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw InvalidInput(std::string("field '") + key + "' has the wrong type");
    }
}

}  // namespace detail

// Rationals: {"num": n, "den": d}; "n/d" and bare integers are accepted on input.
inline Json to_json(const Rational& r) { return Json{{"num", r.numerator()}, {"den", r.denominator()}}; }

inline Rational rational_from_json(const Json& j) {
    try {
        if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
        if (j.is_string()) {
            std::string s = j.get<std::string>();
            auto slash = s.find('/');
            if (slash == std::string::npos) return Rational(std::stoll(s));
            return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
        }
        return Rational(detail::get<std::int64_t>(j, "num"), detail::get<std::int64_t>(j, "den"));
    } catch (const boost::bad_rational&) {
        throw InvalidInput("rational with zero denominator");
    } catch (const std::logic_error&) {
        throw InvalidInput("malformed rational '" + j.dump() + "'");
    }
}

inline Json to_json(const Ideal& I) { return I.to_strings(); }

inline Ideal ideal_from_json(const Ring& r, const Json& j) {
    if (!j.is_array()) throw InvalidInput("an ideal is a JSON array of polynomial strings");
    std::vector<std::string> g;
    for (const auto& e : j) {
        if (!e.is_string()) throw InvalidInput("ideal generators must be strings");
        g.push_back(e.get<std::string>());
    }
    return Ideal::parse(r, g);
}

inline Json to_json(const Ring& r) { return Json{{"p", r.p()}, {"vars", r.vars()}}; }

inline Ring ring_from_json(const Json& j) {
    auto p = detail::get<std::int64_t>(j, "p");
    if (p < 2) throw InvalidInput("p must be prime, got " + std::to_string(p));
    return Ring(Prime(static_cast<std::uint64_t>(p)), detail::get<std::vector<std::string>>(j, "vars"));
}

inline Json to_json(const Boundary& b) {
    Json out = Json::array();
    for (const auto& c : b.components())
        out.push_back(Json{{"f", c.f.to_string()}, {"num", c.d.numerator()}, {"den", c.d.denominator()}});
    return out;
}

inline Boundary boundary_from_json(const Ring& r, const Json& j) {
    if (!j.is_array()) throw InvalidInput("a boundary is a JSON array of {f, num, den}");
    Boundary b(r);
    for (const auto& c : j) b.add(parse_polynomial(r, detail::get<std::string>(c, "f")), rational_from_json(c));
    return b;
}

inline Json to_json(const Budget& b) {
    Json j{{"e_max", b.e_max}, {"gb_cap", b.gb_cap}};
    if (b.e_min) j["e_min"] = b.e_min;
    return j;
}

inline Budget budget_from_json(const Json& j, Budget base) {
    if (j.contains("e_max")) base.e_max = detail::get<unsigned>(j, "e_max");
    if (j.contains("gb_cap")) base.gb_cap = detail::get<std::uint64_t>(j, "gb_cap");
    if (j.contains("e_min")) base.e_min = detail::get<unsigned>(j, "e_min");
    return base;
}

/// {"p", "vars", "delta", "a", "t", "budget"}; several factors go to "factors": [{"a", "t"}].
inline Json to_json(const PairSpec& s) {
    Json j = to_json(s.ring());
    j["delta"] = to_json(s.delta());
    j["budget"] = to_json(s.budget());
    if (s.factors().size() == 1) {
        j["a"] = to_json(s.a());
        j["t"] = to_json(s.t());
    } else {
        Json f = Json::array();
        for (const auto& x : s.factors()) f.push_back(Json{{"a", to_json(x.a)}, {"t", to_json(x.t)}});
        j["factors"] = f;
    }
    return j;
}

/// Missing delta, a, t and budget default to 0, (1), 1 and the per-prime defaults.
inline PairSpec pair_from_json(const Json& j, std::optional<Budget> budget_override = std::nullopt) {
    Ring r = ring_from_json(j);
    Boundary delta = j.contains("delta") ? boundary_from_json(r, j.at("delta")) : Boundary(r);
    Budget budget = Budget::defaults_for(r.p());
    if (j.contains("budget")) budget = budget_from_json(j.at("budget"), budget);
    if (budget_override) budget = *budget_override;
    std::vector<IdealPower> factors;
    if (j.contains("factors")) {
        for (const auto& f : j.at("factors"))
            factors.push_back({ideal_from_json(r, detail::field(f, "a")), rational_from_json(detail::field(f, "t"))});
    } else {
        Ideal a = j.contains("a") ? ideal_from_json(r, j.at("a")) : Ideal::unit(r);
        Rational t = j.contains("t") ? rational_from_json(j.at("t")) : Rational(1);
        factors.push_back({std::move(a), t});
    }
    return PairSpec(std::move(delta), std::move(factors), budget);
}

inline Json to_json(const TestElementCertificate& c) {
    return Json{{"c", c.c.to_string()}, {"n", c.n}, {"evidence", std::string(to_string(c.evidence))}};
}

inline Json to_json(const TestIdealReport& rep) {
    Json chain = Json::array();
    for (const auto& [e, I] : rep.chain) chain.push_back(Json{{"e", e}, {"ideal", to_json(I)}});
    return Json{{"result", to_json(rep.result)},
                {"stable", rep.stable},
                {"stable_at", rep.stable_at},
                {"chain", chain},
                {"test_element", to_json(rep.test_element)},
                {"mode", std::string(to_string(rep.mode))},
                {"multiplier", std::string(to_string(rep.multiplier))},
                {"spot_check", std::string(to_string(rep.spot_check))},
                {"notes", rep.notes}};
}

inline Json to_json(const Verdict& v) {
    Json j{{"status", std::string(to_string(v.status))}};
    if (v.witness) {
        const Witness& w = *v.witness;
        Json wj{{"e_first", w.e_first},
                {"e_last", w.e_last},
                {"c", w.c.to_string()},
                {"n", w.n},
                {"certified_by", w.certified_by}};
        if (w.failing_q) wj["q"] = *w.failing_q;
        j["witness"] = wj;
    }
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

inline Json to_json(const std::vector<JumpPoint>& jumps) {
    Json out = Json::array();
    for (const auto& jp : jumps) out.push_back(Json{{"t", to_string(jp.t)}, {"ideal", to_json(jp.ideal)}});
    return out;
}

inline Json to_json(const PropertyInstance& in) {
    Json j = to_json(in.delta.ring());
    j["kind"] = in.kind;
    j["delta"] = to_json(in.delta);
    j["delta2"] = to_json(in.delta2);
    j["a"] = to_json(in.a);
    j["b"] = to_json(in.b);
    j["s"] = to_json(in.s);
    j["t"] = to_json(in.t);
    j["j"] = in.j;
    j["budget"] = to_json(in.budget);
    return j;
}

inline PropertyInstance instance_from_json(const Json& j) {
    Ring r = ring_from_json(j);
    PropertyInstance in{detail::get<std::string>(j, "kind"),
                        boundary_from_json(r, detail::field(j, "delta")),
                        boundary_from_json(r, detail::field(j, "delta2")),
                        ideal_from_json(r, detail::field(j, "a")),
                        ideal_from_json(r, detail::field(j, "b")),
                        rational_from_json(detail::field(j, "s")),
                        rational_from_json(detail::field(j, "t")),
                        detail::get<std::size_t>(j, "j"),
                        budget_from_json(detail::field(j, "budget"), Budget::defaults_for(r.p()))};
    return in;
}

/// FAIL cases carry both ideals; the instance recomputes them.
inline Json to_json(const PropertyCase& c) {
    Json j{{"name", c.name},
           {"kind", c.instance.kind},
           {"relation", std::string(to_string(c.relation))},
           {"outcome", std::string(to_string(c.outcome))},
           {"instance", to_json(c.instance)},
           {"notes", c.notes}};
    if (c.outcome == Outcome::skip) j["reason"] = std::string(to_string(c.reason));
    if (c.lhs) j["lhs"] = to_json(*c.lhs);
    if (c.rhs) j["rhs"] = to_json(*c.rhs);
    return j;
}

/// {"payload": ..., "meta": ...}; only the payload is byte-deterministic.
inline Json envelope(Json payload, Json meta) { return Json{{"payload", std::move(payload)}, {"meta", std::move(meta)}}; }

}  // namespace frobtest::io

#endif

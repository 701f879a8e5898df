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

#ifndef FROBTEST_REQUEST_HPP
#define FROBTEST_REQUEST_HPP

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "frobtest/json_io.hpp"
#include "frobtest/property_suite.hpp"
#include "frobtest/test_ideal.hpp"

namespace frobtest {

inline constexpr const char* kVersion = "1.0.0";

/// Exit codes of a run.
enum ExitCode : int { kOk = 0, kInconclusive = 1, kInvalidInput = 2, kBudget = 3 };

inline const std::vector<std::string>& commands() {
    static const std::vector<std::string> c{"tau", "tau-div", "tc-member", "fregular", "jumps", "check", "examples"};
    return c;
}

/// One CLI invocation. `spec` holds a canonical PairSpec JSON; `extras` holds the
/// command-specific fields (x, ideal, cert, cert_power, multiplier, candidate,
/// t_min, t_max, resolution, seed, count, corpus, filter).
struct Request {
    std::string command;
    io::Json spec;  // null when the command takes no pair
    io::Json extras = io::Json::object();
    std::string output = "json";

    io::Json to_json() const {
        return io::Json{{"command", command}, {"spec", spec}, {"extras", extras}, {"output", output}};
    }
    static Request from_json(const io::Json& j) {
        Request r;
        r.command = io::detail::get<std::string>(j, "command");
        if (j.contains("spec")) r.spec = j.at("spec");
        if (j.contains("extras")) r.extras = j.at("extras");
        if (j.contains("output")) r.output = io::detail::get<std::string>(j, "output");
        r.validate();
        return r;
    }
    friend bool operator==(const Request& a, const Request& b) { return a.to_json() == b.to_json(); }

    /// Checks the command and canonicalizes the pair; PairSpec invariants raise InvalidInput.
    void validate() {
        if (std::find(commands().begin(), commands().end(), command) == commands().end())
            throw InvalidInput("unknown command '" + command + "'");
        if (output != "json" && output != "plain") throw InvalidInput("output must be json or plain");
        if (!spec.is_null()) spec = io::to_json(io::pair_from_json(spec));
    }
};

/// Parses FROBTEST_BUDGET-style text "emax=3,gbcap=100000" over a base budget.
inline Budget parse_budget_text(const std::string& text, Budget base) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw InvalidInput("budget entry '" + item + "' is not key=value");
        std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        try {
            if (key == "emax" || key == "e_max")
                base.e_max = static_cast<unsigned>(std::stoul(val));
            else if (key == "gbcap" || key == "gb_cap")
                base.gb_cap = std::stoull(val);
            else
                throw InvalidInput("unknown budget key '" + key + "'");
        } catch (const std::logic_error&) {
            throw InvalidInput("budget value '" + val + "' is not a number");
        }
    }
    return base;
}

struct Response {
    int exit_code = kOk;
    io::Json payload;
    std::vector<std::string> warnings;
    double seconds = 0;
};

namespace detail {

inline TestElementCertificate cert_from_extras(const PairSpec& spec, const io::Json& ex) {
    const Ring& r = spec.ring();
    unsigned n = ex.contains("cert_power") ? ex.at("cert_power").get<unsigned>() : 1;
    if (ex.contains("cert")) {
        TestElementCertificate c{parse_polynomial(r, ex.at("cert").get<std::string>()), n, Evidence::user_asserted};
        c.validate(spec.delta());
        return c;
    }
    auto cands = default_test_candidates(spec.delta());
    if (cands.empty()) throw InvalidInput("no valid test element candidate for this boundary; pass --cert");
    return {cands.front(), n, Evidence::jacobian_candidate};
}

inline TauOptions tau_options(const PairSpec& spec, const io::Json& ex) {
    TauOptions o;
    if (ex.contains("cert")) o.cert = cert_from_extras(spec, ex);
    if (ex.contains("candidate")) o.candidate = ex.at("candidate").get<std::size_t>();
    if (ex.contains("multiplier")) {
        std::string m = ex.at("multiplier").get<std::string>();
        if (m == "CEIL_MINUS_FLOOR")
            o.multiplier = MultiplierMode::ceil_minus_floor;
        else if (m == "QMINUS1")
            o.multiplier = MultiplierMode::qminus1;
        else
            throw InvalidInput("multiplier must be CEIL_MINUS_FLOOR or QMINUS1");
    }
    if (ex.contains("spot_check")) o.spot_check = ex.at("spot_check").get<bool>();
    return o;
}

inline Rational rational_extra(const io::Json& ex, const char* key, Rational dflt) {
    return ex.contains(key) ? io::rational_from_json(ex.at(key)) : dflt;
}

inline const PairSpec require_spec(const Request& req) {
    if (req.spec.is_null()) throw InvalidInput("command '" + req.command + "' needs a pair specification");
    return io::pair_from_json(req.spec);
}

}  // namespace detail

struct CorpusEntry;
struct CorpusResult;
inline std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir);
inline CorpusResult replay(const CorpusEntry& e);

/// Dispatches a validated request. Errors map to exit codes 2 (invalid input) and 3
/// (budget); an unstable or undetermined result gives 1.
inline Response run(const Request& req);

// ---- golden corpus ----

struct CorpusEntry {
    std::string id;
    Request request;
    io::Json expected;
    std::string provenance;  // published, trivial or derived
    std::string citation;
    std::filesystem::path path;
};

struct CorpusResult {
    std::string id;
    std::string provenance;
    bool passed = false;
    std::string message;
    double seconds = 0;
};

inline CorpusEntry corpus_entry_from_json(const io::Json& j) {
    CorpusEntry e;
    e.id = io::detail::get<std::string>(j, "id");
    e.request = Request::from_json(io::detail::field(j, "request"));
    e.expected = io::detail::field(j, "expected");
    e.provenance = io::detail::get<std::string>(j, "provenance");
    if (e.provenance != "published" && e.provenance != "trivial" && e.provenance != "derived")
        throw InvalidInput("corpus entry " + e.id + ": provenance must be published, trivial or derived");
    e.citation = j.contains("citation") ? j.at("citation").get<std::string>() : "";
    if (e.provenance == "published" && e.citation.empty())
        throw InvalidInput("corpus entry " + e.id + ": published entries must cite their source");
    return e;
}

inline io::Json to_json(const CorpusEntry& e) {
    return io::Json{{"id", e.id},
                    {"request", e.request.to_json()},
                    {"expected", e.expected},
                    {"provenance", e.provenance},
                    {"citation", e.citation}};
}

/// Entries sorted by file name; a missing directory is an empty corpus.
inline std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir) {
    std::vector<CorpusEntry> out;
    if (!std::filesystem::is_directory(dir)) return out;
    std::vector<std::filesystem::path> files;
    for (const auto& f : std::filesystem::directory_iterator(dir))
        if (f.path().extension() == ".json") files.push_back(f.path());
    std::sort(files.begin(), files.end());
    for (const auto& p : files) {
        std::ifstream in(p);
        io::Json j;
        try {
            j = io::Json::parse(in);
        } catch (const nlohmann::json::exception& ex) {
            throw InvalidInput("corpus file " + p.string() + ": " + ex.what());
        }
        CorpusEntry e = corpus_entry_from_json(j);
        e.path = p;
        out.push_back(std::move(e));
    }
    return out;
}

/// expected matches actual when every key of an expected object matches recursively;
/// arrays and scalars must be equal.
inline bool json_subset(const io::Json& expected, const io::Json& actual) {
    if (expected.is_object()) {
        if (!actual.is_object()) return false;
        for (auto it = expected.begin(); it != expected.end(); ++it)
            if (!actual.contains(it.key()) || !json_subset(it.value(), actual.at(it.key()))) return false;
        return true;
    }
    return expected == actual;
}

/// Runs the entry and compares: an expected array is the "result" field, an expected
/// object is matched as a subset of the payload.
inline CorpusResult replay(const CorpusEntry& e) {
    CorpusResult r{e.id, e.provenance, false, "", 0};
    Response resp = run(e.request);
    r.seconds = resp.seconds;
    if (resp.exit_code == kInvalidInput || resp.exit_code == kBudget) {
        r.message = "exit " + std::to_string(resp.exit_code) + ": " + resp.payload.value("error", std::string());
        return r;
    }
    const io::Json& got = e.expected.is_array() ? resp.payload["result"] : resp.payload;
    r.passed = json_subset(e.expected, got);
    if (!r.passed) r.message = "expected " + e.expected.dump() + ", got " + got.dump();
    return r;
}

inline Response run(const Request& req) {
    auto t0 = std::chrono::steady_clock::now();
    Response resp;
    const io::Json& ex = req.extras;
    try {
        if (req.command == "tau-div" || req.command == "tau") {
            PairSpec spec = detail::require_spec(req);
            TauOptions opt = detail::tau_options(spec, ex);
            TestIdealReport rep = req.command == "tau" ? tau(spec, opt) : tau_div(spec, opt);
            resp.payload = io::to_json(rep);
            if (!rep.stable || rep.spot_check == SpotCheck::failed) resp.exit_code = kInconclusive;
        } else if (req.command == "tc-member") {
            PairSpec spec = detail::require_spec(req);
            const Ring& r = spec.ring();
            if (!ex.contains("x") || !ex.contains("ideal")) throw InvalidInput("tc-member needs x and ideal");
            Polynomial x = parse_polynomial(r, ex.at("x").get<std::string>());
            Ideal I = io::ideal_from_json(r, ex.at("ideal"));
            Verdict v = tc_member(x, I, spec, detail::cert_from_extras(spec, ex));
            resp.payload = io::to_json(v);
            if (v.status == Status::undetermined) resp.exit_code = kInconclusive;
        } else if (req.command == "fregular") {
            PairSpec spec = detail::require_spec(req);
            TauOptions opt;
            opt.spot_check = false;
            TestIdealReport rep = tau_div(spec.with_factors({{Ideal::unit(spec.ring()), Rational(1)}}), opt);
            Tristate div = rep.stable ? (rep.result.is_unit() ? Tristate::yes : Tristate::no) : Tristate::unknown;
            Tristate strong = is_strongly_f_regular(spec.delta(), spec.budget());
            resp.payload = io::Json{{"divisorially_f_regular", std::string(to_string(div))},
                                    {"strongly_f_regular", std::string(to_string(strong))},
                                    {"result", io::to_json(rep.result)}};
            if (div == Tristate::unknown || strong == Tristate::unknown) resp.exit_code = kInconclusive;
        } else if (req.command == "jumps") {
            PairSpec spec = detail::require_spec(req);
            Rational lo = detail::rational_extra(ex, "t_min", Rational(0));
            Rational hi = detail::rational_extra(ex, "t_max", Rational(2));
            unsigned res = ex.contains("resolution") ? ex.at("resolution").get<unsigned>() : 8;
            resp.payload = io::Json{{"result", io::to_json(jump_search(spec, lo, hi, res))}};
        } else if (req.command == "check") {
            std::uint64_t seed = ex.contains("seed") ? ex.at("seed").get<std::uint64_t>() : 0;
            std::size_t count = ex.contains("count") ? ex.at("count").get<std::size_t>() : 50;
            std::vector<PropertyCase> cases = run_suite(seed, count);
            io::Json arr = io::Json::array();
            for (const auto& c : cases) arr.push_back(io::to_json(c));
            SuiteSummary s = summarize(cases);
            resp.payload = io::Json{{"cases", arr}, {"pass", s.pass}, {"fail", s.fail}, {"skip", s.skip}};
            if (ex.contains("corpus")) {
                io::Json rows = io::Json::array();
                std::size_t bad = 0;
                for (const auto& e : load_corpus(ex.at("corpus").get<std::string>())) {
                    if (e.provenance != "published") continue;
                    CorpusResult cr = replay(e);
                    if (!cr.passed) ++bad;
                    rows.push_back(io::Json{{"id", cr.id}, {"passed", cr.passed}, {"message", cr.message}});
                }
                resp.payload["corpus"] = rows;
                resp.payload["corpus_fail"] = bad;
                if (bad) resp.exit_code = kInconclusive;
            }
            if (s.fail) resp.exit_code = kInconclusive;
        } else if (req.command == "examples") {
            std::string dir = ex.contains("corpus") ? ex.at("corpus").get<std::string>() : "corpus/v1";
            std::string filter = ex.contains("filter") ? ex.at("filter").get<std::string>() : "";
            std::vector<CorpusEntry> entries = load_corpus(dir);
            if (entries.empty()) resp.warnings.push_back("corpus at " + dir + " is empty");
            io::Json rows = io::Json::array();
            std::size_t bad = 0;
            for (const auto& e : entries) {
                if (!filter.empty() && e.provenance != filter) continue;
                CorpusResult cr = replay(e);
                if (!cr.passed) ++bad;
                rows.push_back(io::Json{{"id", cr.id},
                                        {"provenance", cr.provenance},
                                        {"passed", cr.passed},
                                        {"message", cr.message}});
            }
            resp.payload = io::Json{{"entries", rows}, {"fail", bad}};
            if (bad) resp.exit_code = kInconclusive;
        } else {
            throw InvalidInput("unknown command '" + req.command + "'");
        }
    } catch (const BudgetExceeded& e) {
        resp.exit_code = kBudget;
        resp.payload = io::Json{{"error", e.what()}};
    } catch (const ExponentOverflow& e) {
        resp.exit_code = kBudget;
        resp.payload = io::Json{{"error", e.what()}};
    } catch (const InvalidInput& e) {
        resp.exit_code = kInvalidInput;
        resp.payload = io::Json{{"error", e.what()}};
    } catch (const RingMismatch& e) {
        resp.exit_code = kInvalidInput;
        resp.payload = io::Json{{"error", e.what()}};
    } catch (const nlohmann::json::exception& e) {
        resp.exit_code = kInvalidInput;
        resp.payload = io::Json{{"error", std::string("malformed request: ") + e.what()}};
    }
    resp.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return resp;
}

}  // namespace frobtest

#endif

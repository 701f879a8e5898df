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

// frobtest: command-line frontend. Every subcommand prints {"payload", "meta"} JSON
// (or a plain summary with --format plain) and exits 0 ok, 1 unstable/undetermined/
// mismatch, 2 invalid input, 3 budget exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "frobtest/request.hpp"

#ifndef FROBTEST_CORPUS_DIR
#define FROBTEST_CORPUS_DIR "corpus/v1"
#endif

namespace {

using frobtest::io::Json;

struct PairFlags {
    std::optional<std::uint64_t> p;
    std::string vars, delta, a, t, spec_file;
    std::optional<unsigned> emax;
    std::optional<std::uint64_t> gb_cap;

    void attach(CLI::App* app) {
        app->add_option("-p,--prime", p, "characteristic");
        app->add_option("--vars", vars, "comma-separated variable names");
        app->add_option("--delta", delta, "boundary as f:num/den,... (e.g. \"xy:1/1\")");
        app->add_option("--a", a, "coefficient ideal generators, comma-separated (default 1)");
        app->add_option("--t", t, "exponent t as n/d (default 1)");
        app->add_option("--spec", spec_file, "PairSpec JSON file; flags override its fields");
        app->add_option("--emax", emax, "E_max budget");
        app->add_option("--gb-cap", gb_cap, "S-pair reduction cap per Groebner basis");
    }

    // Assembles the PairSpec JSON; Request::validate enforces its invariants.
    Json build() const {
        Json j = Json::object();
        bool budget_given = false;
        if (!spec_file.empty()) {
            std::ifstream in(spec_file);
            if (!in) throw frobtest::InvalidInput("cannot read spec file " + spec_file);
            try {
                j = Json::parse(in);
            } catch (const Json::exception& e) {
                throw frobtest::InvalidInput("spec file " + spec_file + ": " + e.what());
            }
            budget_given = j.contains("budget");
        }
        if (p) j["p"] = *p;
        if (!vars.empty()) j["vars"] = frobtest::parse_var_list(vars);
        if (!j.contains("p")) throw frobtest::InvalidInput("missing -p");
        if (!j.contains("vars")) throw frobtest::InvalidInput("missing --vars");
        if (!delta.empty()) {
            Json d = Json::array();
            for (const auto& item : frobtest::split_top_level(delta)) {
                auto colon = item.rfind(':');
                if (colon == std::string::npos) throw frobtest::InvalidInput("delta entry '" + item + "' lacks :num/den");
                Json c = Json::object();
                c["f"] = item.substr(0, colon);
                frobtest::Rational r = frobtest::io::rational_from_json(Json(item.substr(colon + 1)));
                c["num"] = r.numerator();
                c["den"] = r.denominator();
                d.push_back(c);
            }
            j["delta"] = d;
        }
        if (!a.empty()) j["a"] = frobtest::split_top_level(a);
        if (!t.empty()) j["t"] = t;

        auto p_val = j.at("p").get<std::int64_t>();
        frobtest::Budget b = frobtest::Budget::defaults_for(static_cast<std::uint32_t>(p_val));
        if (budget_given) b = frobtest::io::budget_from_json(j.at("budget"), b);
        else if (const char* env = std::getenv("FROBTEST_BUDGET")) b = frobtest::parse_budget_text(env, b);
        if (emax) b.e_max = *emax;
        if (gb_cap) b.gb_cap = *gb_cap;
        j["budget"] = frobtest::io::to_json(b);
        return j;
    }
};

std::string plain(const frobtest::Request& req, const frobtest::Response& resp) {
    const Json& p = resp.payload;
    std::string out;
    auto ideal = [](const Json& a) {
        std::string s = "(";
        for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + a[i].get<std::string>();
        return s + ")";
    };
    if (p.contains("error")) return "";  // already on stderr
    if (req.command == "tau" || req.command == "tau-div") {
        out += "result: " + ideal(p.at("result")) + "\n";
        out += std::string("stable: ") + (p.at("stable").get<bool>() ? "yes" : "no") +
               " (E = " + std::to_string(p.at("stable_at").get<unsigned>()) + ")\n";
        const Json& te = p.at("test_element");
        out += "test element: (" + te.at("c").get<std::string>() + ")^" + std::to_string(te.at("n").get<unsigned>()) +
               " [" + te.at("evidence").get<std::string>() + "]\n";
        out += "spot-check: " + p.at("spot_check").get<std::string>() + "\n";
        for (const auto& n : p.at("notes")) out += "note: " + n.get<std::string>() + "\n";
    } else if (req.command == "tc-member") {
        out += p.at("status").get<std::string>();
        if (p.contains("witness") && p.at("witness").contains("q"))
            out += " (fails at q = " + std::to_string(p.at("witness").at("q").get<std::uint64_t>()) + ")";
        else if (p.contains("witness"))
            out += " (" + p.at("witness").at("certified_by").get<std::string>() + ")";
        out += "\n";
        if (p.contains("note")) out += "note: " + p.at("note").get<std::string>() + "\n";
    } else if (req.command == "fregular") {
        out += "divisorially F-regular: " + p.at("divisorially_f_regular").get<std::string>() + "\n";
        out += "strongly F-regular: " + p.at("strongly_f_regular").get<std::string>() + "\n";
        out += "tau^div: " + ideal(p.at("result")) + "\n";
    } else if (req.command == "jumps") {
        for (const auto& jp : p.at("result")) out += "t = " + jp.at("t").get<std::string>() + ": " + ideal(jp.at("ideal")) + "\n";
    } else if (req.command == "check") {
        for (const auto& c : p.at("cases")) {
            out += c.at("name").get<std::string>() + " " + c.at("outcome").get<std::string>();
            if (c.contains("reason")) out += " (" + c.at("reason").get<std::string>() + ")";
            if (c.at("outcome") == "FAIL") out += " lhs=" + ideal(c.at("lhs")) + " rhs=" + ideal(c.at("rhs"));
            out += "\n";
        }
        out += "pass " + std::to_string(p.at("pass").get<std::size_t>()) + ", fail " +
               std::to_string(p.at("fail").get<std::size_t>()) + ", skip " + std::to_string(p.at("skip").get<std::size_t>()) + "\n";
        if (p.contains("corpus"))
            for (const auto& r : p.at("corpus"))
                out += "corpus " + r.at("id").get<std::string>() + " " + (r.at("passed").get<bool>() ? "PASS" : "FAIL") + "\n";
    } else if (req.command == "examples") {
        for (const auto& r : p.at("entries")) {
            out += (r.at("passed").get<bool>() ? "PASS " : "FAIL ") + r.at("id").get<std::string>() + " [" +
                   r.at("provenance").get<std::string>() + "]";
            if (!r.at("message").get<std::string>().empty()) out += " " + r.at("message").get<std::string>();
            out += "\n";
        }
    }
    return out;
}

std::string xml_escape(const std::string& s) {
    std::string o;
    for (char c : s) {
        switch (c) {
            case '<': o += "&lt;"; break;
            case '>': o += "&gt;"; break;
            case '&': o += "&amp;"; break;
            case '"': o += "&quot;"; break;
            default: o += c;
        }
    }
    return o;
}

void write_junit(const std::string& path, const Json& payload) {
    std::ofstream out(path);
    const Json& cases = payload.at("cases");
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<testsuite name=\"frobtest-properties\" tests=\"" << cases.size() << "\" failures=\""
        << payload.at("fail").get<std::size_t>() << "\" skipped=\"" << payload.at("skip").get<std::size_t>() << "\">\n";
    for (const auto& c : cases) {
        out << "  <testcase classname=\"" << xml_escape(c.at("kind").get<std::string>()) << "\" name=\""
            << xml_escape(c.at("name").get<std::string>()) << "\">";
        std::string o = c.at("outcome").get<std::string>();
        if (o == "FAIL")
            out << "<failure message=\"" << xml_escape(c.at("lhs").dump() + " not " + c.at("relation").get<std::string>() +
                                                       " " + c.at("rhs").dump())
                << "\"/>";
        else if (o == "SKIP")
            out << "<skipped message=\"" << xml_escape(c.at("reason").get<std::string>()) << "\"/>";
        out << "</testcase>\n";
    }
    out << "</testsuite>\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"frobtest: Frobenius roots, divisorial tight closure and test ideals over F_p[x_1..x_d]"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "json or plain")->check(CLI::IsMember({"json", "plain"}));

    PairFlags pf;
    std::string x, ideal, cert, multiplier, t_min, t_max, corpus = FROBTEST_CORPUS_DIR, filter, junit;
    std::optional<unsigned> cert_power, resolution;
    std::optional<std::size_t> candidate, count;
    std::optional<std::uint64_t> seed;
    bool no_spot_check = false;

    auto* tau = app.add_subcommand("tau", "generalized test ideal tau((R, Delta); a^t), round-down empty");
    auto* tau_div = app.add_subcommand("tau-div", "divisorial test ideal tau^div((R, Delta); a^t)");
    auto* tcm = app.add_subcommand("tc-member", "decide x in I^{div*Delta, a^t}");
    auto* freg = app.add_subcommand("fregular", "divisorial and strong F-regularity of (R, Delta)");
    auto* jumps = app.add_subcommand("jumps", "jumping numbers of t -> tau^div(a^t)");
    auto* check = app.add_subcommand("check", "randomized theorem suite");
    auto* examples = app.add_subcommand("examples", "replay the golden corpus");

    for (auto* sc : {tau, tau_div, tcm, freg, jumps}) pf.attach(sc);
    for (auto* sc : {tau, tau_div}) {
        sc->add_option("--cert", cert, "test element c");
        sc->add_option("--cert-power", cert_power, "starting power n of c");
        sc->add_option("--multiplier", multiplier, "CEIL_MINUS_FLOOR or QMINUS1");
        sc->add_option("--candidate", candidate, "index of the default test element candidate");
        sc->add_flag("--no-spot-check", no_spot_check, "skip the containment spot-check");
    }
    tcm->add_option("--x", x, "element x")->required();
    tcm->add_option("--ideal", ideal, "generators of I, comma-separated")->required();
    tcm->add_option("--cert", cert, "test element c (default: first Jacobian candidate)");
    tcm->add_option("--cert-power", cert_power, "power n of c");
    jumps->add_option("--t-min", t_min, "lower end of the t range (default 0)");
    jumps->add_option("--t-max", t_max, "upper end of the t range (default 2)");
    jumps->add_option("--resolution", resolution, "grid steps (default 8)");
    check->add_option("--seed", seed, "random seed (default 0)");
    check->add_option("--count", count, "number of random instances (default 50)");
    check->add_option("--corpus", corpus, "also replay published corpus entries from this directory");
    check->add_option("--junit", junit, "write a JUnit XML report");
    examples->add_option("--corpus", corpus, "corpus directory");
    examples->add_option("--filter", filter, "provenance filter: published, trivial or derived");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : frobtest::kInvalidInput;
    }

    frobtest::Request req;
    req.output = format;
    Json& ex = req.extras;
    frobtest::Response resp;
    try {
        CLI::App* sc = app.get_subcommands().front();
        req.command = sc->get_name();
        if (sc != check && sc != examples) req.spec = pf.build();
        if (!x.empty()) ex["x"] = x;
        if (!ideal.empty()) ex["ideal"] = frobtest::split_top_level(ideal);
        if (!cert.empty()) ex["cert"] = cert;
        if (cert_power) ex["cert_power"] = *cert_power;
        if (!multiplier.empty()) ex["multiplier"] = multiplier;
        if (candidate) ex["candidate"] = *candidate;
        if (no_spot_check) ex["spot_check"] = false;
        if (!t_min.empty()) ex["t_min"] = t_min;
        if (!t_max.empty()) ex["t_max"] = t_max;
        if (resolution) ex["resolution"] = *resolution;
        if (seed) ex["seed"] = *seed;
        if (count) ex["count"] = *count;
        if (sc == examples || (sc == check && check->count("--corpus"))) ex["corpus"] = corpus;
        if (!filter.empty()) ex["filter"] = filter;
        req.validate();
        resp = frobtest::run(req);
    } catch (const frobtest::Error& e) {
        resp.exit_code = frobtest::kInvalidInput;
        resp.payload = Json{{"error", e.what()}};
    } catch (const Json::exception& e) {
        resp.exit_code = frobtest::kInvalidInput;
        resp.payload = Json{{"error", e.what()}};
    }

    for (const auto& w : resp.warnings) std::cerr << "warning: " << w << "\n";
    if (resp.payload.contains("error")) std::cerr << "error: " << resp.payload.at("error").get<std::string>() << "\n";
    if (!junit.empty() && resp.payload.contains("cases")) write_junit(junit, resp.payload);
    if (format == "plain") {
        std::cout << plain(req, resp);
    } else {
        Json meta{{"version", frobtest::kVersion}, {"command", req.command}, {"seconds", resp.seconds},
                  {"exit_code", resp.exit_code}};
        std::cout << frobtest::io::envelope(resp.payload, meta).dump(2) << "\n";
    }
    return resp.exit_code;
}

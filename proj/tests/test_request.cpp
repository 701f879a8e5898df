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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <random>

#include "support.hpp"

using namespace frobtest;
using io::Json;

namespace {

struct CliResult {
    int code;
    std::string out;
};

CliResult cli(const std::string& args) {
    std::string cmd = std::string(FROBTEST_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Json pair_json(std::uint32_t p, Json vars, Json delta) { return Json{{"p", p}, {"vars", vars}, {"delta", delta}}; }

Request request(const std::string& cmd, Json spec, Json extras = Json::object()) {
    return Request::from_json(Json{{"command", cmd}, {"spec", spec}, {"extras", extras}});
}

}  // namespace

TEST(Json, RationalForms) {
    EXPECT_EQ(io::rational_from_json(Json(3)), Q(3));
    EXPECT_EQ(io::rational_from_json(Json("6/4")), Q(3, 2));
    EXPECT_EQ(io::rational_from_json(Json{{"num", 1}, {"den", 3}}), Q(1, 3));
    EXPECT_THROW(io::rational_from_json(Json("1/0")), InvalidInput);
    EXPECT_THROW(io::rational_from_json(Json{{"num", 1}}), InvalidInput);
}

TEST(Json, PairSpecRoundTrip) {
    Ring r = ring(5, {"x", "y", "z"});
    PairSpec s(B(r, {{"x*y", Q(1)}, {"x+z", Q(2, 5)}}), {{I(r, {"x+y", "z^2"}), Q(3, 4)}, {Ideal::maximal(r), Q(1, 2)}},
               Budget{3, 5000, 1});
    Json j = io::to_json(s);
    PairSpec back = io::pair_from_json(j);
    EXPECT_EQ(io::to_json(back), j);
    EXPECT_EQ(back.factors().size(), 2u);
    EXPECT_EQ(back.budget(), s.budget());
}

TEST(Json, RandomRequestRoundTrip) {
    std::mt19937_64 rng(17);
    const std::vector<std::string> polys{"x", "y", "x+y", "x*y", "x^2+y^3", "x-y"};
    const std::vector<std::string> cmds{"tau", "tau-div", "jumps", "fregular"};
    std::uniform_int_distribution<std::size_t> pick(0, polys.size() - 1), cmd(0, cmds.size() - 1);
    std::uniform_int_distribution<int> den(1, 4), pr(0, 2);
    for (int k = 0; k < 100; ++k) {
        std::uint32_t p = std::array<std::uint32_t, 3>{2, 3, 5}[static_cast<std::size_t>(pr(rng))];
        Json spec = pair_json(p, {"x", "y"}, Json::array());
        int dd = den(rng);
        spec["delta"].push_back(Json{{"f", polys[pick(rng)]}, {"num", 1}, {"den", dd}});
        spec["a"] = Json::array({polys[pick(rng)], "x^2"});
        spec["t"] = std::to_string(den(rng)) + "/" + std::to_string(den(rng));
        Request req;
        try {
            req = request(cmds[cmd(rng)], spec);
        } catch (const InvalidInput&) {
            continue;  // random draws may violate pair invariants
        }
        Request back = Request::from_json(Json::parse(req.to_json().dump()));
        EXPECT_EQ(back, req);
    }
}

TEST(Request, Validation) {
    EXPECT_THROW(request("frobnicate", Json()), InvalidInput);
    EXPECT_THROW(request("tau-div", pair_json(4, {"x"}, Json::array())), InvalidInput);
    EXPECT_THROW(request("tau-div", pair_json(2, {"x", "y"}, Json::array({{{"f", "xy"}, {"num", 3}, {"den", 2}}}))),
                 InvalidInput);
    Request ok = request("tau-div", pair_json(2, {"x", "y"}, Json::array({{{"f", "xy"}, {"num", 1}, {"den", 1}}})));
    PairSpec s = io::pair_from_json(ok.spec);
    EXPECT_EQ(s.a(), Ideal::unit(s.ring()));
    EXPECT_EQ(s.t(), Q(1));
    EXPECT_EQ(s.budget(), Budget::defaults_for(2));
}

TEST(Request, BudgetText) {
    Budget b = parse_budget_text("emax=2,gbcap=100", Budget::defaults_for(3));
    EXPECT_EQ(b.e_max, 2u);
    EXPECT_EQ(b.gb_cap, 100u);
    EXPECT_THROW(parse_budget_text("emax", b), InvalidInput);
    EXPECT_THROW(parse_budget_text("speed=3", b), InvalidInput);
}

TEST(Run, SpecExamples) {
    Json dxy = Json::array({{{"f", "x*y"}, {"num", 1}, {"den", 1}}});
    Response a = run(request("tau-div", pair_json(2, {"x", "y"}, dxy)));
    EXPECT_EQ(a.exit_code, kOk);
    EXPECT_EQ(a.payload["result"], Json::array({"x", "y"}));

    Response b = run(request("tc-member", pair_json(2, {"x", "y"}, dxy), {{"x", "x"}, {"ideal", {"x^2", "y^2"}}}));
    EXPECT_EQ(b.exit_code, kOk);
    EXPECT_EQ(b.payload["status"], "OUT");
    EXPECT_EQ(b.payload["witness"]["q"], 2);

    Json spec = pair_json(3, {"x", "y"}, Json::array());
    spec["a"] = Json::array({"x^2+y^3", "x*y+y^2"});
    spec["t"] = "1/2";
    spec["budget"] = Json{{"gb_cap", 1}};
    Response c = run(request("tau", spec));
    EXPECT_EQ(c.exit_code, kBudget);
    EXPECT_NE(c.payload["error"].get<std::string>().find("cap"), std::string::npos);
}

TEST(Run, UnstableIsExitOne) {
    Json spec = pair_json(7, {"x", "y", "z"}, Json::array({{{"f", "x^3+y^3+z^3"}, {"num", 1}, {"den", 1}}}));
    spec["budget"] = Json{{"e_max", 2}};
    Response r = run(request("tau-div", spec));
    EXPECT_EQ(r.exit_code, kInconclusive);
    EXPECT_EQ(r.payload["stable"], false);
}

TEST(Run, Deterministic) {
    Json spec = pair_json(3, {"x", "y"}, Json::array({{{"f", "x*y"}, {"num", 1}, {"den", 1}}}));
    spec["a"] = Json::array({"x^2", "y"});
    spec["t"] = "2/3";
    Request req = request("tau-div", spec);
    EXPECT_EQ(run(req).payload.dump(), run(req).payload.dump());
    Request jumps = request("jumps", pair_json(5, {"x", "y"}, Json::array()), {{"t_max", "2"}, {"resolution", 4}});
    EXPECT_EQ(run(jumps).payload.dump(), run(jumps).payload.dump());
}

TEST(Corpus, AllEntriesReplay) {
    auto entries = load_corpus(FROBTEST_CORPUS_DIR);
    ASSERT_FALSE(entries.empty());
    std::size_t published = 0;
    for (const auto& e : entries) {
        if (e.provenance == "published") {
            ++published;
            EXPECT_FALSE(e.citation.empty()) << e.id;
        }
        CorpusResult r = replay(e);
        EXPECT_TRUE(r.passed) << e.id << ": " << r.message;
        // Entries round-trip through their JSON form.
        EXPECT_EQ(corpus_entry_from_json(to_json(e)).request, e.request);
    }
    EXPECT_GT(published, 0u);
}

TEST(Corpus, FilterAndEmpty) {
    Response pub = run(Request::from_json(
        Json{{"command", "examples"}, {"extras", {{"corpus", FROBTEST_CORPUS_DIR}, {"filter", "published"}}}}));
    EXPECT_EQ(pub.exit_code, kOk);
    for (const auto& row : pub.payload["entries"]) EXPECT_EQ(row["provenance"], "published");

    auto dir = std::filesystem::temp_directory_path() / "frobtest-empty-corpus";
    std::filesystem::create_directories(dir);
    Response empty =
        run(Request::from_json(Json{{"command", "examples"}, {"extras", {{"corpus", dir.string()}}}}));
    EXPECT_EQ(empty.exit_code, kOk);
    EXPECT_FALSE(empty.warnings.empty());
}

TEST(Corpus, RejectsUncitedPublishedEntry) {
    Json j{{"id", "x"},
           {"request", {{"command", "tau"}, {"spec", pair_json(2, {"x"}, Json::array())}}},
           {"expected", Json::array({"1"})},
           {"provenance", "published"}};
    EXPECT_THROW(corpus_entry_from_json(j), InvalidInput);
    j["provenance"] = "folklore";
    EXPECT_THROW(corpus_entry_from_json(j), InvalidInput);
}

TEST(Cli, ExitCodes) {
    CliResult ok = cli("tau-div -p 2 --vars x,y --delta 'xy:1/1'");
    EXPECT_EQ(ok.code, 0);
    Json j = Json::parse(ok.out);
    EXPECT_EQ(j["payload"]["result"], Json::array({"x", "y"}));
    EXPECT_EQ(j["meta"]["exit_code"], 0);

    EXPECT_EQ(cli("tau-div -p 2 --vars x,y --delta 'xy:3/2'").code, 2);
    EXPECT_EQ(cli("tau-div -p 4 --vars x,y").code, 2);
    EXPECT_EQ(cli("tau-div -p 2 --vars x,y --delta 'x^2:1/1'").code, 2);
    EXPECT_EQ(cli("tau-div -p 2 --vars x,y --a x --t 0").code, 2);
    EXPECT_EQ(cli("bogus").code, 2);
    EXPECT_EQ(cli("tau -p 3 --vars x,y --a 'x^2+y^3,x*y+y^2' --t 1/2 --gb-cap 1").code, 3);
    EXPECT_EQ(cli("tau-div -p 7 --vars x,y,z --delta 'x^3+y^3+z^3:1/1' --emax 2").code, 1);
}

TEST(Cli, TcMemberAndPlainFormat) {
    CliResult out = cli("tc-member -p 2 --vars x,y --delta 'xy:1/1' --x x --ideal 'x^2,y^2'");
    EXPECT_EQ(out.code, 0);
    Json j = Json::parse(out.out);
    EXPECT_EQ(j["payload"]["status"], "OUT");
    EXPECT_EQ(j["payload"]["witness"]["q"], 2);

    CliResult plain = cli("--format plain fregular -p 3 --vars x,y --delta 'xy:1/2'");
    EXPECT_EQ(plain.code, 0);
    EXPECT_NE(plain.out.find("true"), std::string::npos);
}

TEST(Cli, ByteDeterministicPayload) {
    std::string args = "jumps -p 5 --vars x,y --a x,y --t-max 2 --resolution 4";
    Json a = Json::parse(cli(args).out), b = Json::parse(cli(args).out);
    EXPECT_EQ(a["payload"].dump(), b["payload"].dump());
}

TEST(Cli, SpecFileWithFlagOverride) {
    auto path = std::filesystem::temp_directory_path() / "frobtest-spec.json";
    {
        std::ofstream f(path);
        f << pair_json(3, {"x", "y"}, Json::array({{{"f", "x*y"}, {"num", 1}, {"den", 1}}})).dump();
    }
    CliResult a = cli("tau-div --spec " + path.string());
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(Json::parse(a.out)["payload"]["result"], Json::array({"x", "y"}));
    CliResult b = cli("tau-div --spec " + path.string() + " --delta 'x:1/1'");
    EXPECT_EQ(Json::parse(b.out)["payload"]["result"], Json::array({"1"}));
}

TEST(Cli, ExamplesCommand) {
    CliResult r = cli(std::string("examples --corpus ") + FROBTEST_CORPUS_DIR + " --filter published");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(Json::parse(r.out)["payload"]["fail"], 0);
}

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

#include "comtop/components.hpp"
#include "comtop/rotations.hpp"
#include "comtop/tuple_io.hpp"

using namespace comtop;
using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string("\"") + COMTOP_CLI_PATH + "\" " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_tuple(const std::string& name, const TupleRecord& t) {
    std::string path = "/tmp/comtop_cli_" + name + ".json";
    std::ofstream(path) << tuple_to_json_string(t);
    return path;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("classify command") {
    std::string plus = write_tuple("plus2", {2, sample_plus(2, 31)});
    RunResult r = run_cli("classify --input " + plus);
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("subcommand") == "classify");
    CHECK(j.at("input") == plus);
    CHECK(j.at("component") == "plus");
    CHECK_FALSE(j.contains("pattern"));
    CHECK(j.contains("elapsed_seconds"));

    std::string minus = write_tuple("minus3", {3, sample_minus("XYZ", 8)});
    r = run_cli("classify --input " + minus + " --tol 1e-7");
    CHECK(r.code == 0);
    j = json::parse(r.out);
    CHECK(j.at("component") == "minus");
    CHECK(j.at("pattern") == "XYZ");

    TupleRecord bad{2, {involution_about(Vec3{1, 0, 0}), rotation_about(Vec3{0, 0, 1}, 0.7)}};
    std::string badf = write_tuple("noncomm", bad);
    CHECK(run_cli("classify --input " + badf).code == 2);
    CHECK(run_cli("classify --input /tmp/comtop_cli_missing.json").code == 2);

    r = run_cli("classify --input " + plus + " --output text");
    CHECK(r.code == 0);
    CHECK(r.out.find("component: plus\n") != std::string::npos);
}

TEST_CASE("count and enumerate commands") {
    RunResult r = run_cli("count --n 3");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("closed_form") == 7);
    CHECK(j.at("recurrence") == 7);
    CHECK(j.at("enumerate") == 7);
    CHECK(j.at("agree") == true);

    r = run_cli("count --n 40");
    CHECK(r.code == 0);
    j = json::parse(r.out);
    CHECK_FALSE(j.contains("enumerate")); // exhaustive route capped at n = 12
    CHECK(j.at("closed_form").is_string());
    CHECK(j.at("agree") == true);

    r = run_cli("count --n 4 --method enumerate");
    CHECK(json::parse(r.out).at("enumerate") == 35);

    CHECK(run_cli("count --n 0").code == 2);
    CHECK(run_cli("count --n 13 --method enumerate").code == 2);

    r = run_cli("enumerate --n 2");
    CHECK(r.code == 0);
    j = json::parse(r.out);
    CHECK(j.at("count") == 2);
    CHECK(j.at("components")[1] == json{{"component", "minus"}, {"pattern", "XY"}});
}

TEST_CASE("pi1 command") {
    RunResult r = run_cli("pi1 --n 3");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("order") == 8);
    CHECK(j.at("elementary_abelian_2") == true);
    CHECK(j.at("verified") == true);
    CHECK(j.at("presentation").at("gens").size() == 4);

    j = json::parse(run_cli("pi1 --n 1").out);
    CHECK(j.at("order") == 2);

    j = json::parse(run_cli("pi1 --q8").out);
    CHECK(j.at("order") == 8);
    CHECK(j.at("elementary_abelian_2") == false);
    CHECK(j.at("verified") == true);

    j = json::parse(run_cli("pi1 --u2 --n 3").out);
    CHECK(j.at("free_rank") == 3);
    CHECK(j.at("torsion").empty());
    CHECK(j.at("verified") == true);

    j = json::parse(run_cli("pi1 --punctured --n 2").out);
    CHECK(j.at("torsion") == json{2, 2, 2});

    j = json::parse(run_cli("pi1 --from-cell-model --n 2").out);
    CHECK(j.at("order") == 4);
    CHECK(j.at("verified") == true);

    std::ofstream("/tmp/comtop_cli_pres.txt") << "gens: a\nrels: a^5\n";
    r = run_cli("pi1 --presentation /tmp/comtop_cli_pres.txt");
    CHECK(r.code == 0);
    j = json::parse(r.out);
    CHECK(j.at("order") == 5);
    CHECK_FALSE(j.contains("verified"));

    CHECK(run_cli("pi1 --n 3 --max-cosets 2").code == 1);      // budget, not bad input
    CHECK(run_cli("pi1 --from-cell-model --n 4").code == 2);   // no attaching words
}

TEST_CASE("homology and euler commands") {
    json j = json::parse(run_cli("homology --n 2").out);
    CHECK(j.at("betti") == json{1, 2, 3, 3, 1});
    CHECK(j.at("euler") == 0);
    CHECK(j.at("source") == "cell_model");

    j = json::parse(run_cli("homology --n 4 --formula").out);
    CHECK(j.at("betti") == json{1, 4, 10, 14, 11, 5, 1});
    CHECK(j.at("source") == "formula");

    RunResult r = run_cli("homology --n 4 --formula --compare-euler");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).at("discrepancy") == false);

    r = run_cli("homology --n 6 --formula --compare-euler"); // discrepancy always exits 1
    CHECK(r.code == 1);
    j = json::parse(r.out);
    CHECK(j.at("discrepancy") == true);
    CHECK(j.at("euler") == 0);
    CHECK(j.at("euler_binomial_even") == -18);

    j = json::parse(run_cli("homology --n 2 --cell-model").out);
    CHECK(j.at("source") == "cell_model");
    CHECK(run_cli("homology --n 2 --cell-model --formula").code == 2);

    r = run_cli("euler --n 3");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).at("euler") == 0);

    CHECK(run_cli("euler --n 4 --formula").code == 0);
    CHECK(run_cli("euler --n 6 --formula").code == 1);
}

TEST_CASE("lift command") {
    std::string minus = write_tuple("liftminus", {2, sample_minus("XY", 12)});
    json j = json::parse(run_cli("lift --input " + minus + " --tol 1e-7").out);
    CHECK(j.at("commuting_lifts") == 0);
    CHECK(j.at("commutator_signs") == json{json{1, 2, -1}});

    std::string plus = write_tuple("liftplus", {2, sample_plus(2, 12)});
    j = json::parse(run_cli("lift --input " + plus + " --tol 1e-7").out);
    CHECK(j.at("commuting_lifts") == 4);
    CHECK(j.at("commutator_signs") == json{json{1, 2, 1}});
}

TEST_CASE("sample command") {
    RunResult a = run_cli("sample --n 2 --seed 9");
    RunResult b = run_cli("sample --n 2 --seed 9");
    CHECK(a.code == 0);
    json ja = json::parse(a.out), jb = json::parse(b.out);
    ja.erase("elapsed_seconds");
    jb.erase("elapsed_seconds");
    CHECK(ja == jb); // same seed, same tuple
    TupleRecord t = tuple_from_json(ja.at("tuple"), 1e-7);
    CHECK(t.n == 2);
    CHECK(classify(t.elements, 1e-7).plus);

    RunResult m = run_cli("sample --n 3 --pattern EXY --seed 4");
    TupleRecord mt = tuple_from_json(json::parse(m.out).at("tuple"), 1e-7);
    CHECK(classify(mt.elements, 1e-7) == ComponentLabel{false, "EXY"});

    CHECK(run_cli("sample --n 2 --pattern EXY").code == 2);
    CHECK(run_cli("sample --n 2 --pattern QQ").code == 2);
}

TEST_CASE("verify-all command") {
    RunResult r = run_cli("verify-all --max-n 2");
    CHECK(r.code == 1); // the even-rank mismatch must be allow-listed explicitly
    json j = json::parse(r.out);
    CHECK(j.at("pass") == false);
    CHECK(j.at("discrepancy") == true);
    CHECK(j.at("discrepancies") == json{"euler-even"});
    for (const auto& c : j.at("checks")) CHECK(c.at("pass") == true);

    r = run_cli("verify-all --max-n 2 --expect-discrepancy euler-even");
    CHECK(r.code == 0);
    j = json::parse(r.out);
    CHECK(j.at("pass") == true);
    CHECK(j.at("discrepancy") == false);
}

TEST_CASE("usage errors") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("count").code == 2);
    CHECK(run_cli("count --n 3 --output yaml").code == 2);
    CHECK(run_cli("--help").code == 0);
}

} // TEST_SUITE

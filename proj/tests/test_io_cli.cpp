#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "semistab/families.hpp"
#include "semistab/io.hpp"

using namespace semistab;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(SEMISTAB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

struct TempFile {
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path = "io_cli_tmp_" + std::to_string(counter++) + ".json";
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
    std::string path;
};

}  // namespace

TEST_CASE("serialize/parse round trip is byte identical") {
    for (const RepInput& input :
         {RepInput(family2()), RepInput(family3(4, 0)), RepInput(family4(3, 2)),
          mainthm_witness(1, 1, 5), mainthm_witness(0, 3, 6)}) {
        const std::string once = serialize_representation(input);
        const std::string twice = serialize_representation(parse_representation_text(once));
        CHECK(once == twice);
    }
}

TEST_CASE("parser accepts bare matrices and integer entries") {
    const std::string text = R"({
      "genus": 0, "punctures": 1, "rank": 2,
      "A": [], "B": [],
      "C": [[[1, 0], ["0", "1"]]]
    })";
    const RepInput input = parse_representation_text(text);
    const auto& rep = std::get<SurfaceRepresentation>(input);
    CHECK(rep.C[0].is_identity());
}

TEST_CASE("parser rejects malformed input with ParseError") {
    CHECK_THROWS_AS(parse_representation_text("not json at all"), ParseError);
    CHECK_THROWS_AS(parse_representation_text("[1,2,3]"), ParseError);
    CHECK_THROWS_AS(parse_representation_text(R"({"genus": 0})"), ParseError);
    // wrong matrix size vs rank
    CHECK_THROWS_AS(parse_representation_text(R"({
      "genus": 0, "punctures": 1, "rank": 3,
      "A": [], "B": [], "C": [[["1","0"],["0","1"]]]
    })"),
                    ParseError);
    // floats are not exact
    CHECK_THROWS_AS(parse_representation_text(R"({
      "genus": 0, "punctures": 1, "rank": 1,
      "A": [], "B": [], "C": [[[0.5]]]
    })"),
                    ParseError);
    // wrong nu of handle matrices
    CHECK_THROWS_AS(parse_representation_text(R"({
      "genus": 1, "punctures": 1, "rank": 1,
      "A": [], "B": [], "C": [[["1"]]]
    })"),
                    ParseError);
    // direct sums must share the shape
    CHECK_THROWS_AS(parse_representation_text(R"({"sum": [
      {"genus": 0, "punctures": 1, "rank": 1, "A": [], "B": [], "C": [[["1"]]]},
      {"genus": 0, "punctures": 2, "rank": 1, "A": [], "B": [],
       "C": [[["1"]], [["1"]]]}
    ]})"),
                    ParseError);
}

TEST_CASE("cyclotomic entries factor into twisted matrices") {
    // C1 = zeta_4, C2 = zeta_4^{-1} as 1x1 cyclotomic matrices
    const std::string text = R"({
      "genus": 0, "punctures": 2, "rank": 1, "conductor": 4,
      "A": [], "B": [],
      "C": [[[["0", "1"]]], [[["0", "-1"]]]]
    })";
    const RepInput input = parse_representation_text(text);
    const auto& rep = std::get<SurfaceRepresentation>(input);
    CHECK(rep.C[0].twist() == UnityRoot(1, 4));
    // zeta_4^{-1} = zeta(3,4) lands in the canonical form zeta(1,4) * (-1)
    CHECK(rep.C[1].twist() == UnityRoot(1, 4));
    CHECK(rep.C[1].body().at(0, 0) == Rational(-1));
    CHECK(rep.C[1] == TwistedMatrix(UnityRoot(3, 4), RationalMatrix::identity(1)));
    CHECK(is_valid(rep));

    // 1 + zeta_4 is not (root of unity) x rational
    CHECK_THROWS_AS(parse_representation_text(R"({
      "genus": 0, "punctures": 1, "rank": 1, "conductor": 4,
      "A": [], "B": [], "C": [[[["1", "1"]]]]
    })"),
                    UnsupportedMatrix);

    // coefficient lists need phi(conductor) entries
    CHECK_THROWS_AS(parse_representation_text(R"({
      "genus": 0, "punctures": 1, "rank": 1, "conductor": 4,
      "A": [], "B": [], "C": [[[["1", "0", "0"]]]]
    })"),
                    ParseError);
}

TEST_CASE("twisted serialization keeps exact values") {
    const RepInput input = family5(4, 2, 1);
    const json j = representation_json(input);
    CHECK(j.at("C")[0].at("twist").at("k") == 1);
    CHECK(j.at("C")[0].at("twist").at("n") == 4);
    const RepInput back = parse_representation_text(j.dump());
    CHECK(std::get<SurfaceRepresentation>(back).C[0] ==
          std::get<SurfaceRepresentation>(input).C[0]);
}

TEST_CASE("cli: generate then verify is exit 0 and valid") {
    const RunResult gen = run_cli("generate --family f2");
    REQUIRE(gen.exit_code == 0);
    TempFile file(gen.out);
    const RunResult ver = run_cli("verify " + file.path);
    CHECK(ver.exit_code == 0);
    CHECK(ver.out == "valid: true\n");
}

TEST_CASE("cli: generated file round trips byte for byte") {
    const RunResult gen = run_cli("generate --family main --genus 1 --punctures 1 --rank 5");
    REQUIRE(gen.exit_code == 0);
    const std::string again = serialize_representation(parse_representation_text(gen.out));
    CHECK(gen.out == again);
}

TEST_CASE("cli: generate f2 reproduces the printed matrices verbatim") {
    const RunResult gen = run_cli("generate --family f2");
    REQUIRE(gen.exit_code == 0);
    const json j = json::parse(gen.out);
    CHECK(j.at("C")[0].at("body")[0] == json::array({"1", "1", "0", "0"}));
    CHECK(j.at("C")[1].at("body")[1] == json::array({"-4", "-1", "1", "2"}));
    CHECK(j.at("C")[2].at("body")[0] == json::array({"-1", "0", "2", "-1"}));
    for (const auto& c : j.at("C")) {
        CHECK(c.at("twist").at("k") == 0);
        CHECK(c.at("twist").at("n") == 1);
    }
    CHECK(j.at("genus") == 0);
    CHECK(j.at("punctures") == 3);
    CHECK(j.at("rank") == 4);
}

TEST_CASE("cli: obstruct --json emits the stable schema") {
    const RunResult gen = run_cli("generate --family f2");
    TempFile file(gen.out);
    const RunResult obs = run_cli("obstruct " + file.path + " --json");
    REQUIRE(obs.exit_code == 0);
    const json j = json::parse(obs.out);
    CHECK(j.at("valid") == true);
    CHECK(j.at("reducible") == true);
    CHECK(j.at("verdict").at("kind") == "NoSemistableRealization");
    CHECK(j.at("verdict").at("degrees").is_null());
    REQUIRE(j.at("punctures").size() == 3);
    CHECK(j.at("punctures")[0].at("lambda").at("k") == 0);
    CHECK(j.at("punctures")[0].at("lambda").at("n") == 1);
    CHECK(j.at("punctures")[2].at("lambda").at("k") == 1);
    CHECK(j.at("punctures")[2].at("lambda").at("n") == 2);
    CHECK(j.at("punctures")[0].at("jordan") == json::array({4}));
    CHECK(j.at("punctures")[0].at("single_block") == true);
    const auto reasons = j.at("reasons");
    CHECK(std::find(reasons.begin(), reasons.end(), "thm-1.1") != reasons.end());
}

TEST_CASE("cli: constrained verdict reports the degree progression") {
    const RunResult gen = run_cli("generate --family f5 --rank 4 --punctures 1 --genus 1");
    TempFile file(gen.out);
    const RunResult obs = run_cli("obstruct " + file.path + " --json");
    REQUIRE(obs.exit_code == 0);
    const json j = json::parse(obs.out);
    CHECK(j.at("verdict").at("kind") == "Constrained");
    CHECK(j.at("verdict").at("degrees").at("start") == 2);
    CHECK(j.at("verdict").at("degrees").at("step") == 4);
}

TEST_CASE("cli: analyze --json on a twisted family") {
    const RunResult gen = run_cli("generate --family f5 --rank 4 --punctures 1 --genus 1");
    TempFile file(gen.out);
    const RunResult ana = run_cli("analyze " + file.path + " --json");
    REQUIRE(ana.exit_code == 0);
    const json j = json::parse(ana.out);
    CHECK(j.at("valid") == true);
    CHECK(j.at("punctures")[0].at("lambda").at("k") == 1);
    CHECK(j.at("punctures")[0].at("lambda").at("n") == 2);
    CHECK(j.at("punctures")[0].at("single_block") == true);
    CHECK(j.at("reducible") == true);
}

TEST_CASE("cli: verdict-negative inputs still exit 0") {
    // family4 with one puncture matrix corrupted to the identity
    json j = representation_json(RepInput(family4(2, 1)));
    j["C"][0]["body"] = json::array({json::array({"1", "0"}), json::array({"0", "1"})});
    TempFile file(j.dump(2) + "\n");
    const RunResult ver = run_cli("verify " + file.path);
    CHECK(ver.exit_code == 0);
    CHECK(ver.out.find("valid: false") != std::string::npos);
    CHECK(ver.out.find("defect:") != std::string::npos);
}

TEST_CASE("cli: parse failures exit 2") {
    TempFile garbage("this is { not json");
    CHECK(run_cli("verify " + garbage.path).exit_code == 2);
    CHECK(run_cli("obstruct " + garbage.path).exit_code == 2);
    CHECK(run_cli("verify no_such_file.json").exit_code == 2);

    TempFile bad_dims(R"({"genus": 0, "punctures": 1, "rank": 3,
                          "A": [], "B": [], "C": [[["1","0"],["0","1"]]]})");
    CHECK(run_cli("verify " + bad_dims.path).exit_code == 2);
}

TEST_CASE("cli: range violations exit 3") {
    CHECK(run_cli("generate --family f3 --punctures 2").exit_code == 3);
    CHECK(run_cli("generate --family main --genus 0 --punctures 2 --rank 4").exit_code == 3);
    CHECK(run_cli("generate --family f1 --rank 2 --punctures 2 --nu 1,1").exit_code == 3);
    CHECK(run_cli("generate --family nope").exit_code == 3);
    CHECK(run_cli("balance --lambdas-sub 1 --lambdas-quot -1").exit_code == 3);
}

TEST_CASE("cli: balance trace on the worked example") {
    const RunResult r = run_cli("balance --lambdas-sub 1,1 --lambdas-quot -1,-1");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("move 1: quot at p1 -> degrees (0, 0)") != std::string::npos);
    CHECK(r.out.find("final degrees: sub 0, quot 0, total 0") != std::string::npos);
    CHECK(r.out.find("moves: 1") != std::string::npos);

    const RunResult zero = run_cli("balance --lambdas-sub 1/3,2/3 --lambdas-quot 1/3,2/3");
    REQUIRE(zero.exit_code == 0);
    CHECK(zero.out.find("moves: 0") != std::string::npos);

    const RunResult js = run_cli("balance --lambdas-sub 1,1 --lambdas-quot -1,-1 --json");
    const json j = json::parse(js.out);
    CHECK(j.at("moves")[0].at("side") == "quot");
    CHECK(j.at("final").at("total_degree") == "0");
}

TEST_CASE("cli: flatten verifies direct sums through cyclotomic arithmetic") {
    const RunResult gen = run_cli("generate --family main --genus 0 --punctures 4 --rank 8");
    REQUIRE(gen.exit_code == 0);
    TempFile file(gen.out);
    const RunResult ver = run_cli("verify " + file.path + " --flatten");
    REQUIRE(ver.exit_code == 0);
    CHECK(ver.out.find("flattened conductor: 4") != std::string::npos);
    CHECK(ver.out.find("valid: true") != std::string::npos);
}

TEST_CASE("cli: genus defaults keep f1/f3 generation usable") {
    CHECK(run_cli("generate --family f1 --rank 3 --punctures 2 --nu 1/2,-1/2").exit_code == 0);
    CHECK(run_cli("generate --family f3 --punctures 4").exit_code == 0);
}

TEST_CASE("cli: direct sums verify per summand and obstruct via the sum criterion") {
    const RunResult gen = run_cli("generate --family main --genus 1 --punctures 1 --rank 5");
    REQUIRE(gen.exit_code == 0);
    TempFile file(gen.out);

    const RunResult ver = run_cli("verify " + file.path);
    REQUIRE(ver.exit_code == 0);
    CHECK(ver.out.find("summand 1 valid: true") != std::string::npos);
    CHECK(ver.out.find("summand 2 valid: true") != std::string::npos);
    CHECK(ver.out.find("valid: true") != std::string::npos);

    const RunResult obs = run_cli("obstruct " + file.path + " --json");
    REQUIRE(obs.exit_code == 0);
    const json j = json::parse(obs.out);
    CHECK(j.at("verdict").at("kind") == "NoSemistableRealization");
    REQUIRE(j.at("summands").size() == 2);
    CHECK(j.at("summands")[0].at("reducible") == false);  // rank 1
    CHECK(j.at("summands")[1].at("reducible") == true);
    const auto reasons = j.at("reasons");
    CHECK(std::find(reasons.begin(), reasons.end(), "thm-3.1") != reasons.end());
}

TEST_CASE("cli: r52 generation is reproducible from the seed") {
    const RunResult a = run_cli("generate --family r52 --punctures 2 --seed 7");
    const RunResult b = run_cli("generate --family r52 --punctures 2 --seed 7");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    TempFile file(a.out);
    const RunResult obs = run_cli("analyze " + file.path + " --json");
    const json j = json::parse(obs.out);
    CHECK(j.at("valid") == true);
    for (const auto& p : j.at("punctures")) CHECK(p.at("single_block") == true);
}


#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>

#include "symf/cli.hpp"

using symf::cli::run_command;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/symfunc_test_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("mul json output") {
    auto r = run_command({"mul", "--basis", "schur", "--mu", "2,1", "--nu", "2,1", "--format",
                          "json"});
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["basis"] == "schur");
    CHECK(j["terms"].size() == 7);
    bool found = false;
    for (const auto& term : j["terms"])
        if (term["key"] == nlohmann::json::array({3, 2, 1})) {
            found = true;
            CHECK(term["coeff"] == nlohmann::json::array({2}));
        }
    CHECK(found);
}

TEST_CASE("straighten hl json output is byte exact") {
    auto r = run_command({"straighten", "--basis", "hl", "--alpha", "2,3", "--format", "json"});
    CHECK(r.exit_code == 0);
    CHECK(r.output == "{\"basis\":\"hl\",\"terms\":[{\"key\":[3,2],\"coeff\":[0,1]}]}\n");
}

TEST_CASE("malformed operand names the flag") {
    auto r = run_command({"mul", "--basis", "schur", "--mu", "2,x"});
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("--mu") != std::string::npos);
}

TEST_CASE("non-partition operand is a usage error") {
    auto r = run_command({"mul", "--basis", "schur", "--mu", "1,2"});
    CHECK(r.exit_code == 2);
    auto r2 = run_command({"straighten", "--basis", "schur", "--alpha", "1,2"});
    CHECK(r2.exit_code == 0);  // straighten accepts arbitrary integer vectors
}

TEST_CASE("output is deterministic") {
    std::vector<std::string> argv{"mul", "--basis", "hl", "--mu", "2,1", "--nu", "1,1",
                                  "--format", "json"};
    auto a = run_command(argv), b = run_command(argv);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("json round trip is the identity") {
    auto r = run_command({"mul", "--basis", "uc", "--mu", "2,1", "--eta", "3,1", "--tau", "1",
                          "--nu2", "1", "--format", "json"});
    CHECK(r.exit_code == 0);
    auto j = nlohmann::ordered_json::parse(r.output);
    CHECK(j.dump() + "\n" == r.output);
}

TEST_CASE("t-eval 0 on hl equals the schur result") {
    auto hl = run_command({"mul", "--basis", "hl", "--mu", "3,1", "--nu", "2", "--t-eval", "0",
                           "--format", "json"});
    auto schur = run_command({"mul", "--basis", "schur", "--mu", "3,1", "--nu", "2", "--format",
                              "json"});
    CHECK(hl.exit_code == 0);
    auto jh = nlohmann::json::parse(hl.output), js = nlohmann::json::parse(schur.output);
    CHECK(jh["terms"] == js["terms"]);
}

TEST_CASE("coeff command") {
    auto r = run_command({"coeff", "--basis", "hl", "--mu", "2,1", "--nu", "2,1", "--la", "3,2,1",
                          "--format", "json"});
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["coeff"] == nlohmann::json::array({2, -1, -2, 1}));
    auto zero = run_command({"coeff", "--basis", "schur", "--mu", "1", "--nu", "1", "--la", "3",
                             "--format", "json"});
    CHECK(nlohmann::json::parse(zero.output)["coeff"].empty());
}

TEST_CASE("corpus: empty file passes") {
    auto path = write_temp("empty.jsonl", "");
    auto r = run_command({"corpus", "--corpus", path});
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("0/0") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("corpus: passing and failing cases") {
    std::string good = R"({"command":"straighten","basis":"hl","alpha":[2,3],)"
                       R"("expected":{"terms":[{"key":[3,2],"coeff":[0,1]}]}})";
    std::string bad = R"({"command":"straighten","basis":"hl","alpha":[2,3],)"
                      R"("expected":{"terms":[{"key":[3,2],"coeff":[0,7]}]}})";
    auto ok_path = write_temp("ok.jsonl", good + "\n");
    auto r_ok = run_command({"corpus", "--corpus", ok_path});
    CHECK(r_ok.exit_code == 0);
    CHECK(r_ok.output.find("1/1") != std::string::npos);

    auto bad_path = write_temp("bad.jsonl", good + "\n" + bad + "\n");
    auto r_bad = run_command({"corpus", "--corpus", bad_path});
    CHECK(r_bad.exit_code == 1);
    CHECK(r_bad.output.find("FAIL") != std::string::npos);
    CHECK(r_bad.output.find("[3,2]") != std::string::npos);  // diff names the key

    auto garbled = write_temp("garbled.jsonl", "not json\n");
    CHECK(run_command({"corpus", "--corpus", garbled}).exit_code == 2);

    CHECK(run_command({"corpus", "--corpus", "/nonexistent/x.jsonl"}).exit_code == 2);
    std::remove(ok_path.c_str());
    std::remove(bad_path.c_str());
    std::remove(garbled.c_str());
}

TEST_CASE("usage errors") {
    CHECK(run_command({"mul", "--basis", "nope", "--mu", "1"}).exit_code == 2);
    CHECK(run_command({"straighten", "--basis", "uc", "--alpha", "1"}).exit_code == 2);
    CHECK(run_command({"pieri", "--mu", "2,1"}).exit_code == 2);      // missing --r
    CHECK(run_command({"frobnicate"}).exit_code == 2);
    CHECK(run_command({"oracle-check", "--basis", "schur", "--bound", "99"}).exit_code == 2);
    CHECK(run_command({"mul", "--basis", "uc", "--mu", "1", "--nu", "1"}).exit_code == 2);
}

TEST_CASE("oracle-check at a small bound") {
    auto r = run_command({"oracle-check", "--basis", "schur", "--bound", "4"});
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("0 mismatches") != std::string::npos);
}

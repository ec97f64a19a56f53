#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "yso5/report.hpp"

using namespace yso5;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run_cli(const std::string& args) {
    const char* cli = std::getenv("YSO5_CLI");
    REQUIRE_MESSAGE(cli, "YSO5_CLI must point at the yso5 binary");
    std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

fs::path scratch() {
    fs::path d = fs::temp_directory_path() / ("yso5_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
}

CheckResult result(std::string suite, std::string check, Status s) {
    return CheckResult{std::move(suite), std::move(check), "r", s, std::nullopt, {}};
}

}  // namespace

TEST_CASE("report ordering and summary") {
    RunReport rep;
    rep.command = "verify t";
    rep.config = {{"x", "1/1"}, {"L", "2"}};
    rep.results = {result("b", "z", Status::Pass), result("a", "y", Status::Measured), result("b", "a", Status::Fail),
                   result("a", "b", Status::Pass)};
    rep.results[2].witness = CheckWitness{"(1,2)", "3/1"};
    rep.results[1].metrics = {{"k2", "v2"}, {"k1", "v1"}};
    rep.sort();
    CHECK(rep.results[0].check == "b");
    CHECK(rep.results[1].check == "y");
    CHECK(rep.results[2].check == "a");
    CHECK(rep.results[3].check == "z");
    CHECK(rep.any_failed());
    CHECK(rep.count(Status::Pass) == 2);

    auto j = rep.to_json();
    CHECK(j["schema"] == "yso5-report/1");
    CHECK(j["tool_version"] == "1.0.0");
    CHECK(j.begin().key() == "schema");
    CHECK(j["config"].begin().key() == "x");
    CHECK(j["summary"]["total"] == 4);
    CHECK(j["summary"]["fail"] == 1);
    CHECK(j["summary"]["suites"]["a"]["measured"] == 1);
    CHECK(j["results"][2]["witness"]["entry"] == "(1,2)");
    CHECK(j["results"][1]["metrics"].begin().key() == "k2");
    CHECK_FALSE(j["results"][0].contains("witness"));

    std::string md = rep.to_markdown();
    CHECK(md.find("| a | 1 | 0 | 1 |") != std::string::npos);
    CHECK(md.find("[fail] b / a (r) at (1,2) = 3/1") != std::string::npos);
    CHECK(md.find("k2=v2; k1=v1") != std::string::npos);
    CHECK(md.find("/ z") == std::string::npos);

    rep.results[0].status = Status::Pass;
    rep.results = {result("a", "b", Status::Measured)};
    CHECK_FALSE(rep.any_failed());
}

TEST_CASE("json helpers") {
    CHECK(std::string(status_name(Status::Measured)) == "measured");
    Matrix m(2, 2);
    m(0, 1) = Scalar::i();
    m(1, 0) = Scalar(Rational(-1, 2));
    auto j = matrix_to_json(m);
    CHECK(j.dump() == R"([["0/1","0/1+1/1 i"],["-1/2","0/1"]])");
    CHECK(sparse_to_json(SparseOp::from_matrix(m)) == j);
    SurdOp s = SurdOp::over_sqrt2(SparseOp::identity(2));
    CheckResult r = residual_result("t", "c", "r", s);
    REQUIRE(r.witness);
    CHECK(r.witness->coords == "(0,0) sqrt2");
    CHECK(r.witness->value == "1/2");
}

TEST_CASE("exit codes") {
    CHECK(run_cli("verify so5").code == 0);
    CHECK(run_cli("verify so5 --bogus").code == 2);
    CHECK(run_cli("verify nothing").code == 2);
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("verify so5 --x 1/0").code == 2);
    CHECK(run_cli("verify ybe --N 4").code == 2);
    CHECK(run_cli("verify so5 --tables nope").code == 2);
    CHECK(run_cli("verify fock --L 9").code == 3);
    CHECK(run_cli("verify fock --L 4").code == 3);
    CHECK(run_cli("verify fock --L 2 --weights 1").code == 2);
    CHECK(run_cli("--help").code == 0);
}

TEST_CASE("json report from the command line") {
    Run r = run_cli("verify so5 --format json");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == "yso5-report/1");
    CHECK(j["command"] == "verify so5");
    CHECK(j["config"]["x"] == "1/1");
    CHECK(j["summary"]["fail"] == 0);
    CHECK(j["summary"]["total"] == j["results"].size());
    std::string prev;
    for (const auto& res : j["results"]) {
        std::string key = res["suite"].get<std::string>() + "\n" + res["check"].get<std::string>();
        CHECK(prev <= key);
        prev = key;
    }
    Run md = run_cli("verify so5");
    CHECK(md.out.rfind("# yso5 report", 0) == 0);
}

TEST_CASE("reports are byte-identical across runs") {
    fs::path d = scratch();
    Run a = run_cli("verify ybe --x 2 --out " + (d / "a.json").string());
    Run b = run_cli("verify ybe --x 2 --out " + (d / "b.json").string());
    CHECK(a.code == 0);
    CHECK(b.code == 0);
    std::string ja = slurp(d / "a.json"), jb = slurp(d / "b.json");
    CHECK_FALSE(ja.empty());
    CHECK(ja == jb);
    CHECK(a.out == b.out);
    fs::remove_all(d);
}

TEST_CASE("dump commands") {
    Run g = run_cli("dump gens --rep vector --format json");
    REQUIRE(g.code == 0);
    auto j = nlohmann::json::parse(g.out);
    CHECK(j["dim"] == 5);
    CHECK(j["generators"].size() == 10);
    CHECK(j["generators"]["I12"].size() == 5);
    CHECK(j["generators"]["I12"][0][1] == "0/1+1/1 i");
    CHECK(j["generators"]["I12"][1][0] == "0/1-1/1 i");

    Run s = run_cli("dump gens --format json");
    CHECK(nlohmann::json::parse(s.out)["dim"] == 4);

    Run rel = run_cli("dump relations --imax 1 --jmax 1 --format json");
    REQUIRE(rel.code == 0);
    auto jr = nlohmann::json::parse(rel.out);
    CHECK(jr["relations"].size() == 3691);
    const auto& first = jr["relations"][0];
    CHECK(first.contains("order"));
    CHECK(first.contains("entry"));
    CHECK(first["terms"].size() > 0);
    CHECK(run_cli("dump relations --imax 0").code == 2);
}

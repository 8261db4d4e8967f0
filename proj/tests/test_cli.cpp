#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "p1p1/cli/claims.hpp"
#include "p1p1/cli/commands.hpp"
#include "p1p1/cli/run_config.hpp"
#include "p1p1/error.hpp"

using namespace p1p1;
using namespace p1p1::cli;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code = -1;
    std::string out;
    std::string err;
    nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Outcome invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "p1p1");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Outcome o;
    o.code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    o.out = out.str();
    o.err = err.str();
    return o;
}

fs::path scratch_file(const std::string& name, const std::string& contents)
{
    const auto path = fs::temp_directory_path() / ("p1p1_test_" + name);
    std::ofstream(path) << contents;
    return path;
}

} // namespace

TEST_CASE("gamma")
{
    const auto o = invoke({"gamma", "--s", "6"});
    REQUIRE(o.code == exit_ok);
    const auto j = o.json();
    CHECK(j["schema"] == 1);
    CHECK(j["command"] == "gamma");
    CHECK(j["result"]["value"] == "24/7");
    for (const char* key : {"params", "field", "seed", "result", "certificates", "timing"}) CHECK(j.contains(key));
    const auto b = invoke({"gamma", "--s", "9"}).json();
    CHECK(b["result"]["bounds"]["upper"]["value"] == "17/4");
}

TEST_CASE("certificate round trip")
{
    const auto path = scratch_file("c7.json", invoke({"gamma", "--s", "7"}).out);
    const auto ok = invoke({"gamma", "--verify-cert", path.string()});
    CHECK(ok.code == exit_ok);
    auto tampered = nlohmann::json::parse(invoke({"gamma", "--s", "7"}).out);
    tampered["certificates"][0]["gamma_value"] = "4";
    const auto bad_path = scratch_file("bad.json", tampered.dump());
    const auto bad = invoke({"gamma", "--verify-cert", bad_path.string()});
    CHECK(bad.code == exit_invalid_input);
    CHECK(bad.err.find("56/15") != std::string::npos);
    fs::remove(path);
    fs::remove(bad_path);
}

TEST_CASE("dimension queries")
{
    const auto j = invoke({"dim", "--s", "5", "--m", "3", "--i", "5", "--j", "5"}).json();
    CHECK(j["result"]["dim"] == 6);
    const auto r = invoke({"dim", "--s", "6", "--r", "2", "--i", "3", "--j", "4"}).json();
    CHECK(r["result"]["dim"] == 0);
    CHECK(invoke({"hf", "--s", "7", "--i", "1", "--j", "3"}).json()["result"]["hilbert_function"] == 7);
    CHECK(invoke({"dim", "--s", "5", "--i", "1", "--j", "1", "--mults", "1,1"}).code == exit_invalid_input);
}

TEST_CASE("hilbert basis")
{
    const auto j = invoke({"hilbert-basis", "--paper-cone", "--bound", "10", "--member", "9,8,5"}).json();
    CHECK(j["result"]["generators"] ==
          nlohmann::json::parse("[[1,0,0],[1,1,0],[2,2,1],[3,1,1],[4,3,2],[5,5,3]]"));
    CHECK(j["result"]["membership"]["member"] == true);
    const auto i = invoke({"hilbert-basis", "--ineq", "1,-1;0,1", "--bound", "5"}).json();
    CHECK(i["result"]["generators"] == nlohmann::json::parse("[[1,0],[1,1]]"));
    CHECK(invoke({"hilbert-basis", "--ineq", "1,0", "--bound", "5"}).code == exit_invalid_input);
}

TEST_CASE("usage errors")
{
    CHECK(invoke({"gamma", "--bogus"}).code == exit_invalid_input);
    CHECK(invoke({}).code == exit_invalid_input);
    CHECK(invoke({"gamma", "--s", "6", "--output", "csv"}).code == exit_invalid_input);
    CHECK(invoke({"gamma", "--s", "6", "--field", "prime:8"}).code == exit_invalid_input);
    CHECK(invoke({"paper", "--only", "6", "--field", "prime:7"}).code == exit_invalid_input);
    CHECK(invoke({"witness", "--kind", "seven-plus", "--s", "6"}).code == exit_invalid_input);
}

TEST_CASE("output formats")
{
    const auto csv = invoke({"equality", "--s", "6", "--m", "2", "--window-i", "3", "--window-j", "4", "--output", "csv"});
    REQUIRE(csv.code == exit_ok);
    CHECK(csv.out.rfind("i,j,", 0) == 0);
    CHECK(csv.out.find("3,4,2,0,") != std::string::npos);
    const auto text = invoke({"gamma", "--s", "6", "--output", "text"});
    CHECK(text.out.find("value: 24/7") != std::string::npos);
}

TEST_CASE("reports are deterministic apart from timing")
{
    auto a = invoke({"equality", "--s", "5", "--m", "2", "--window-i", "4", "--window-j", "4", "--seed", "3"}).json();
    auto b = invoke({"equality", "--s", "5", "--m", "2", "--window-i", "4", "--window-j", "4", "--seed", "3",
                     "--threads", "3"})
                 .json();
    a.erase("timing");
    b.erase("timing");
    a["params"].erase("threads");
    b["params"].erase("threads");
    CHECK(a == b);
}

TEST_CASE("settings precedence")
{
    ::setenv(field_env_var, "prime:101", 1);
    CHECK(invoke({"hf", "--s", "3", "--i", "1", "--j", "1"}).json()["field"] == "prime:101");
    const auto config = scratch_file("settings.conf", "# comment\nfield = prime:103\nseed=4\n");
    const auto from_file = invoke({"hf", "--s", "3", "--i", "1", "--j", "1", "--config", config.string()}).json();
    CHECK(from_file["field"] == "prime:103");
    CHECK(from_file["seed"] == 4);
    const auto from_flag = invoke({"hf", "--s", "3", "--i", "1", "--j", "1", "--config", config.string(), "--field",
                                   "rationals"})
                               .json();
    CHECK(from_flag["field"] == "rationals");
    ::unsetenv(field_env_var);
    CHECK(invoke({"hf", "--s", "3", "--i", "1", "--j", "1"}).json()["field"] == "rationals");
    const auto bad = scratch_file("bad.conf", "colour=blue\n");
    CHECK(invoke({"hf", "--s", "3", "--i", "1", "--j", "1", "--config", bad.string()}).code == exit_invalid_input);
    fs::remove(config);
    fs::remove(bad);

    RunConfig rc;
    apply_setting(rc, "window_i", "5");
    CHECK(rc.window.i == 5);
    CHECK_THROWS_AS(apply_setting(rc, "threads", "zero"), InvalidInput);
}

TEST_CASE("claims")
{
    ClaimOptions options;
    options.only = {1, 8};
    const auto results = run_claims(options);
    REQUIRE(results.size() == 2);
    for (const auto& r : results) CHECK(r.passed);
    CHECK(max_multiplicity(ClaimOptions{}) == 9);
    options.only = {6};
    options.field = exact::FieldSpec::prime(7);
    CHECK_THROWS_AS(run_claims(options), InvalidInput);
    const auto j = to_json(results.front());
    CHECK(j["criterion"] == 1);
    CHECK(j["passed"] == true);
}

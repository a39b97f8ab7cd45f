#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "rigidity/cli/commands.hpp"

using namespace rigidity;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    args.insert(args.begin(), "rigidity");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) { return (std::filesystem::temp_directory_path() / name).string(); }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int shell_exit(const std::string& cmd) {
    const int status = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("verify passes and writes a complete report") {
    const std::string path = tmp("rigidity_verify.json");
    const Result r = call({"verify", "--n", "4,5,6", "--samples", "40", "--seed", "42", "--out", path, "--threads", "2"});
    CHECK(r.code == cli::kExitPass);
    const json j = json::parse(slurp(path));
    CHECK(j.at("passed") == true);
    CHECK(j.at("version") == RIGIDITY_VERSION);
    CHECK(j.at("tolerances").contains("holds"));
    CHECK(j.at("checks").size() == 8);
    for (const auto& c : j.at("checks")) {
        CHECK(c.at("passed") == true);
        CHECK(c.at("evaluations").get<long>() > 0);
    }
    std::remove(path.c_str());
}

TEST_CASE("verify configuration errors exit 2") {
    const Result r = call({"verify", "--samples", "0", "--seed", "1"});
    CHECK(r.code == cli::kExitUsage);
    CHECK(r.err.find("samples must be ≥ 1") != std::string::npos);
    CHECK(call({"verify", "--samples", "5"}).code == cli::kExitUsage);
    CHECK(call({"verify", "--samples", "5", "--seed", "1", "--n", "4,x"}).code == cli::kExitUsage);
    CHECK(call({"verify", "--samples", "5", "--seed", "1", "--n", "2"}).code == cli::kExitUsage);
    CHECK(call({"frobnicate"}).code == cli::kExitUsage);
    CHECK(call({}).code == cli::kExitUsage);
}

TEST_CASE("verify is reproducible") {
    const Result a = call({"verify", "--n", "4,7", "--samples", "30", "--seed", "9", "--threads", "1"});
    const Result b = call({"verify", "--n", "4,7", "--samples", "30", "--seed", "9", "--threads", "3"});
    CHECK(a.out == b.out);
    const Result c = call({"verify", "--n", "4,7", "--samples", "30", "--seed", "10"});
    CHECK(a.out != c.out);
}

TEST_CASE("run_verify reports failures with a first failing sample") {
    cli::VerifyConfig cfg;
    cfg.dims = {4};
    cfg.samples = 20;
    cfg.seed = 1;
    cfg.tol.holds = -1.0;  // demands a strictly negative defect, so every inequality "fails"
    const auto outcome = cli::run_verify(cfg);
    CHECK_FALSE(outcome.passed);
    const auto& first = outcome.report.at("checks").at(0);
    CHECK(first.at("passed") == false);
    CHECK(first.at("first_failure").at("sample") == 0);
}

TEST_CASE("catalog and analyze") {
    const std::string cat = tmp("rigidity_cat.json"), rep = tmp("rigidity_cat_report.json"), csv = tmp("rigidity_cat.csv");
    CHECK(call({"catalog", "--surface", "catenoid", "--n", "4", "--grid", "32x16", "--out", cat}).code == 0);
    const Result r = call({"analyze", "--field", cat, "--out", rep, "--csv", csv, "--assert-zero", "1e-6"});
    CHECK(r.code == cli::kExitPass);
    const json j = json::parse(slurp(rep));
    CHECK(j.at("energy").at("classification") == "CatenoidCandidate");
    CHECK(j.at("version") == RIGIDITY_VERSION);
    CHECK(slurp(csv).rfind("coord0,coord1,norm_sq", 0) == 0);

    CHECK(call({"catalog", "--surface", "ellipsoid", "--n", "4", "--grid", "4", "--out", cat}).code == 0);
    CHECK(call({"analyze", "--field", cat}).code == cli::kExitPass);
    CHECK(call({"analyze", "--field", cat, "--assert-zero", "1e-6"}).code == cli::kExitCheckFailure);

    CHECK(call({"catalog", "--surface", "cylinder", "--r", "2", "--out", cat}).code == 0);
    const json cyl = json::parse(call({"analyze", "--field", cat}).out);
    CHECK(cyl.at("energy").at("classification") == "RotationCandidate");

    for (const auto& p : {cat, rep, csv}) std::remove(p.c_str());
}

TEST_CASE("catalog parameter errors exit 2") {
    const Result r = call({"catalog", "--surface", "torus", "--out", tmp("x.json")});
    CHECK(r.code == cli::kExitUsage);
    CHECK(r.err.find("sphere, cylinder, catenoid") != std::string::npos);
    CHECK(call({"catalog", "--surface", "sphere", "--r", "-1", "--out", tmp("x.json")}).code == cli::kExitUsage);
    CHECK(call({"catalog", "--surface", "sphere", "--grid", "8xz", "--out", tmp("x.json")}).code == cli::kExitUsage);
    CHECK(call({"catalog", "--surface", "ellipsoid", "--n", "4", "--axes", "1,2", "--out", tmp("x.json")}).code ==
          cli::kExitUsage);
}

TEST_CASE("analyze schema errors exit 2 with the sample index") {
    const std::string path = tmp("rigidity_bad_field.json");
    REQUIRE(call({"catalog", "--surface", "sphere", "--grid", "2x2", "--out", path}).code == 0);
    json j = json::parse(slurp(path));
    j["samples"][3]["shape_operator"][0][2] = 7.0;
    std::ofstream(path) << j.dump();
    const Result r = call({"analyze", "--field", path});
    CHECK(r.code == cli::kExitUsage);
    CHECK(r.err.find("sample 3") != std::string::npos);
    CHECK(call({"analyze", "--field", tmp("rigidity_no_such_field.json")}).code == cli::kExitUsage);
    std::remove(path.c_str());
}

TEST_CASE("the installed binary honours the exit-code contract") {
    const std::string bin = RIGIDITY_BINARY;
    const std::string field = tmp("rigidity_bin_field.json");
    CHECK(shell_exit(bin + " verify --samples 0 --seed 1") == 2);
    CHECK(shell_exit(bin + " verify --samples 10 --seed 1") == 0);
    CHECK(shell_exit(bin + " catalog --surface nothing --out " + field) == 2);
    CHECK(shell_exit(bin + " catalog --surface ellipsoid --n 4 --grid 4 --out " + field) == 0);
    CHECK(shell_exit(bin + " analyze --field " + field + " --assert-zero 1e-6") == 1);
    CHECK(shell_exit("RIGIDITY_THREADS=3 " + bin + " analyze --field " + field) == 0);
    std::remove(field.c_str());
}

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "xychain/cli.hpp"
#include "xychain/config.hpp"

using namespace xychain;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path temp_dir() {
    const auto dir = fs::temp_directory_path() / "xychain_cli_test";
    fs::create_directories(dir);
    return dir;
}

std::string write_file(const std::string& name, const std::string& body) {
    const auto path = temp_dir() / name;
    std::ofstream(path) << body;
    return path.string();
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("no arguments prints usage and exits 2") {
    const auto r = run({});
    CHECK(r.code == 2);
    CHECK(r.err.find("Usage") != std::string::npos);
}

TEST_CASE("unknown flags exit 2") {
    CHECK(run({"gen-disorder", "--bogus"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("gen-disorder emits n,value CSV") {
    const auto r = run({"gen-disorder", "--alpha", "2", "--length", "8", "--seed", "3", "--kind", "coupling"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "n,value");
    int rows = 0;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 8);
}

TEST_CASE("sweep-alpha writes CSV and manifest") {
    const auto cfg = write_file("sweep.json", R"({"n_sites": [12], "alpha": [0, 3], "realizations": 5, "base_seed": 1})");
    const auto out = (temp_dir() / "sweep.csv").string();
    const auto r = run({"sweep-alpha", "--config", cfg, "--out", out, "--threads", "2"});
    REQUIRE(r.code == 0);
    const auto csv = read_file(out);
    CHECK(csv.rfind("n_sites,alpha,mean_c,std_c,stderr_c,n,resonance_fraction\n", 0) == 0);
    const auto manifest = json::parse(read_file(out + ".manifest.json"));
    CHECK(manifest["command"] == "sweep-alpha");
    CHECK(manifest["config"]["realizations"] == 5);
    CHECK(manifest["base_seed"] == 1);
    CHECK(manifest.contains("version"));
    CHECK(manifest.contains("wall_clock_seconds"));

    // the manifest's config alone reproduces the CSV
    const auto replay_cfg = write_file("replay.json", manifest["config"].dump());
    const auto replay = run({"sweep-alpha", "--config", replay_cfg});
    CHECK(replay.out == csv);

    // flags override the config
    const auto more = run({"sweep-alpha", "--config", cfg, "--realizations", "7"});
    CHECK(more.out.find(",7,") != std::string::npos);
}

TEST_CASE("grid-omega-alpha CSV header") {
    const auto cfg = write_file("grid.json", R"({"n_sites": [12], "alpha": [1], "omega": {"start": -1, "stop": 1, "step": 1}, "realizations": 3})");
    const auto r = run({"grid-omega-alpha", "--config", cfg});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("alpha,omega,mean_c,stderr_c,n\n", 0) == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);
}

TEST_CASE("invalid config names the failing field") {
    const auto bad = write_file("bad.json", R"({"n_sites": [12], "realizations": 0})");
    auto r = run({"sweep-alpha", "--config", bad});
    CHECK(r.code == 1);
    CHECK(r.err.find("realizations") != std::string::npos);

    const auto typo = write_file("typo.json", R"({"n_site": [12]})");
    r = run({"sweep-alpha", "--config", typo});
    CHECK(r.code == 1);
    CHECK(r.err.find("n_site") != std::string::npos);

    r = run({"sweep-alpha", "--config", (temp_dir() / "missing.json").string()});
    CHECK(r.code == 1);
}

TEST_CASE("wavefunction CSV") {
    const auto r = run({"wavefunction", "--alpha", "2", "--n", "21", "--kind", "onsite", "--seed", "4"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("n,prob\n", 0) == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 22);
}

TEST_CASE("dynamics CSV") {
    const auto cfg = write_file("system.json", R"({"n_sites": 4, "g_s": 0.05, "g_r": 0.05})");
    const auto r = run({"dynamics", "--config", cfg, "--tmax", "10", "--samples", "6"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("t,re_ds,im_ds,re_dr,im_dr,c_sr,leak\n0,", 0) == 0);
    std::istringstream lines(r.out);
    std::string header, first;
    std::getline(lines, header);
    std::getline(lines, first);
    const double re_ds0 = std::stod(first.substr(2, first.find(',', 2) - 2));
    CHECK(re_ds0 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 7);
}

TEST_CASE("validate --quick") {
    const auto r = run({"validate", "--quick"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("validation passed") != std::string::npos);
}

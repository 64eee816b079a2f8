#include "doctest.h"

#include "cli.hpp"

#include "json.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run in_process(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = itx::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

// Spawns the real binary through the shell; stdout captured, stderr dropped.
Run spawn(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + ITX_BINARY + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    for (size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, ""};
}

fs::path temp_file(const std::string& name) { return fs::temp_directory_path() / ("itx_test_" + name); }

}  // namespace

TEST_CASE("list prints every family") {
    const auto r = in_process({"list"});
    CHECK(r.code == 0);
    CHECK(r.out.find("16 families") != std::string::npos);
    for (const char* fam : {"LEMMA1", "GL-POWER", "PG", "EX3", "REM-NUPH"}) CHECK(r.out.find(fam) != std::string::npos);
    const auto j = json::parse(in_process({"list", "--format", "json"}).out);
    CHECK(j.size() >= 24);
}

TEST_CASE("eval of the Glasser transform of sin(zx)") {
    using big = boost::multiprecision::cpp_bin_float_50;
    // (pi/2) (I0(1) - L0(1))
    big l0 = 0;
    for (int k = 0; k < 60; ++k) l0 += pow(big(0.5), 2 * k + 1) / pow(boost::math::tgamma(big(k) + big(1.5)), 2);
    const double want = std::numbers::pi / 2 * static_cast<double>(boost::math::cyl_bessel_i(0, big(1)) - l0);

    const auto r = in_process({"eval", "--transform", "glasser", "--function", "sin_z", "--z", "1", "--points", "1",
                               "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    const double got = j["results"][0]["value"];
    CHECK(std::abs(got - want) / want < 1e-8);

    const auto text = in_process({"eval", "-t", "glasser", "-f", "sin_z", "--z", "1", "-p", "1,2"});
    CHECK(text.code == 0);
    CHECK(text.out.find("0.873084242") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(in_process({}).code == 2);
    CHECK(in_process({"eval", "-t", "l2", "-f", "nope", "-p", "1"}).code == 2);
    CHECK(in_process({"eval", "-t", "mellin", "-f", "gauss", "-p", "1"}).code == 2);
    CHECK(in_process({"eval", "-t", "l2", "-f", "gauss", "-p", "-1"}).code == 2);
    CHECK(in_process({"verify", "--id", "NOPE"}).code == 2);
    CHECK(in_process({"verify", "--profile", "lax"}).code == 2);
    CHECK(in_process({"verify", "--format", "xml"}).code == 2);
    CHECK(in_process({"bogus"}).code == 2);
    CHECK(in_process({"--help"}).code == 0);
}

TEST_CASE("report re-renders and carries the verification status") {
    const auto path = temp_file("report.json");
    const auto r = in_process({"verify", "--id", "GL-POWER", "--format", "json", "-o", path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());

    const auto csv = in_process({"report", path.string(), "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("id,point,lhs,rhs,rel_residual,pass\n", 0) == 0);

    // a report with a failing point exits 1
    json j = json::parse(std::ifstream(path));
    j["points"][0]["pass"] = false;
    j["summary"]["n_fail"] = 1;
    std::ofstream(path) << j.dump();
    CHECK(in_process({"report", path.string()}).code == 1);
    fs::remove(path);

    CHECK(in_process({"report", "/nonexistent/report.json"}).code == 2);
}

TEST_CASE("spawned binary: exit codes and environment") {
    CHECK(spawn("list").code == 0);
    CHECK(spawn("eval -t glasser -f not_a_function -p 1").code == 2);
    CHECK(spawn("verify --id NOPE").code == 2);

    const auto strict = spawn("verify --id EX3-B --format json", "ITX_PROFILE=strict");
    REQUIRE(strict.code == 0);
    CHECK(json::parse(strict.out)["profile"] == "strict");
    CHECK(spawn("verify --id EX3-B", "ITX_PROFILE=bogus").code == 2);
}

TEST_CASE("spawned binary: JSON is byte-identical across worker counts") {
    const std::string ids = "--id GL-JNU,KHG-2,LEMMA1-GAUSS,EX1-A --format json";
    const auto one = spawn("verify " + ids + " --workers 1");
    const auto four = spawn("verify " + ids + " --workers 4");
    REQUIRE(one.code == 0);
    CHECK(one.out == four.out);
}

TEST_CASE("spawned binary: verify --all passes") {
    const auto r = spawn("verify --all --profile default --format json");
    CHECK(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["summary"]["n_fail"] == 0);
}

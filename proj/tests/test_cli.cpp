// End-to-end checks of the installed binary: exit codes, output formats,
// determinism under different worker-pool caps.
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <string>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(CGLAB_CLI_BIN) + " " + args + " 2>/dev/null";
    CliResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("constants table") {
    const CliResult res = run_cli("constants --n-min 2 --n-max 4 --c 1");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("n,r,a,b,d,threshold,K(c=1)") == 0);
    CHECK(res.out.find("-0.828427124746") != std::string::npos);  // 2(1-sqrt 2)
    CHECK(res.out.find("-2.38516480713") != std::string::npos);   // C_3
    CHECK(res.out.find("-3.7082039325") != std::string::npos);    // C_4
}

TEST_CASE("constants rejects bad ranges") {
    CHECK(run_cli("constants --n-min 5 --n-max 3").exit_code == 2);
    CHECK(run_cli("constants --n-min 1 --n-max 3").exit_code == 2);
}

TEST_CASE("scalar: flat atiyah closed form 18") {
    const CliResult res = run_cli("scalar --model atiyah --n 2 --c 0 --k 1 --p 1 --q 1");
    CHECK(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.out);
    CHECK(j["closed_form"].get<double>() == doctest::Approx(18.0));
    CHECK(j["oracle"].get<double>() == doctest::Approx(18.0).epsilon(1e-9));
    CHECK(j["rel_diff"].get<double>() < 1e-5);
}

TEST_CASE("scalar: varpi = 0 gives 20 at the origin") {
    const CliResult res = run_cli("scalar --model atiyah --n 2 --c 1 --k 2");
    CHECK(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.out);
    CHECK(j["closed_form"].get<double>() == doctest::Approx(20.0).epsilon(1e-12));
    CHECK(j["rel_diff"].get<double>() < 1e-9);

    // away from the zero section the closed form still tracks the oracle
    const CliResult res2 =
        run_cli("scalar --model atiyah --n 2 --c 1 --k 2 --point 0.2,0.1/0.3,0,0.4");
    CHECK(res2.exit_code == 0);
    CHECK(nlohmann::json::parse(res2.out)["rel_diff"].get<double>() < 1e-9);
}

TEST_CASE("scalar: flat tangent bundle is scalar-flat for the Sasaki pair") {
    const CliResult res =
        run_cli("scalar --model tm --n 2 --c 0 --p 0 --q 0 --point 0.5,0.5/1,2");
    CHECK(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.out);
    CHECK(j["closed_form"].get<double>() == 0.0);
    CHECK(std::abs(j["oracle"].get<double>()) < 1e-12);
}

TEST_CASE("scalar: closed form null off the (1,1) family") {
    const CliResult res = run_cli("scalar --model atiyah --n 2 --c 1 --k 1 --p 0 --q 0");
    CHECK(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.out);
    CHECK(j["closed_form"].is_null());
    CHECK(j["oracle"].is_number());
}

TEST_CASE("scalar: domain exit code") {
    // H^2 chart ball has radius 2
    const CliResult res = run_cli("scalar --model tm --n 2 --c -1 --point 2.5,0/0,0");
    CHECK(res.exit_code == 3);
}

TEST_CASE("scalar: malformed point is a usage error") {
    CHECK(run_cli("scalar --model tm --n 2 --c 1 --point 1,2,3/0,0").exit_code == 2);
    CHECK(run_cli("scalar --model tm --n 2 --c 1 --point abc").exit_code == 2);
}

TEST_CASE("verify: pass and fail exit codes") {
    const CliResult ok = run_cli("verify --case sasaki-flat --n 2 --samples 10 --format json");
    CHECK(ok.exit_code == 0);
    const auto j = nlohmann::json::parse(ok.out);
    CHECK(j["pass"].get<bool>());
    CHECK(j["max_rel_err"].get<double>() <= j["tolerance"].get<double>());

    CHECK(run_cli("verify --case no-such-case").exit_code == 2);

    // absurd tolerance forces a reported failure
    const CliResult bad = run_cli("verify --case atiyah --n 2 --c 1 --k 1 --samples 2 --tol 1e-18");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("verify: atiyah defaults pass at 1e-5") {
    const CliResult res = run_cli("verify --case atiyah --n 2 --c 1 --k 1 --samples 5");
    CHECK(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.out);
    CHECK(j["tolerance"].get<double>() == 1e-5);
    CHECK(j["pass"].get<bool>());
}

TEST_CASE("--out writes the report to a file") {
    const std::string path = "/tmp/cglab_test_out.csv";
    std::remove(path.c_str());
    const CliResult res = run_cli("constants --n-min 2 --n-max 3 --out " + path);
    CHECK(res.exit_code == 0);
    CHECK(res.out.empty());
    FILE* f = std::fopen(path.c_str(), "rb");
    REQUIRE(f != nullptr);
    char buf[64] = {0};
    REQUIRE(std::fread(buf, 1, 10, f) == 10);
    std::fclose(f);
    CHECK(std::string(buf, 10) == "n,r,a,b,d,");
    std::remove(path.c_str());
}

TEST_CASE("verify: csv format") {
    const CliResult res = run_cli("verify --case fiber --format csv");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("case_name,samples,max_abs_err,max_rel_err,tolerance,pass") == 0);
    CHECK(res.out.find("fiber,") != std::string::npos);
    CHECK(res.out.find(",true") != std::string::npos);
}

TEST_CASE("region: csv, determinism, thread cap") {
    const std::string args =
        "region --n 2 --c-range -1:1:5 --k-range 0.5:8:6 --mode both --samples 64 --seed 3";
    const CliResult a = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out.find("c,k,closed_positive,empirical_min,disagree") == 0);
    const CliResult b = run_cli(args);
    CHECK(a.out == b.out);

    ::setenv("CG_LAB_THREADS", "1", 1);
    const CliResult c = run_cli(args);
    ::unsetenv("CG_LAB_THREADS");
    CHECK(a.out == c.out);
}

TEST_CASE("forced scalar kernels produce identical bytes") {
    const std::string args = "scalar --model atiyah --n 3 --c 1 --k 1 --point 0.2,0.1,-0.3/0.5,0.7,-0.2,0.3,-0.1,0.4";
    const CliResult a = run_cli(args);
    ::setenv("CG_LAB_SIMD", "scalar", 1);
    const CliResult b = run_cli(args);
    ::unsetenv("CG_LAB_SIMD");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("region: oversized grid rejected") {
    CHECK(run_cli("region --n 2 --c-range -1:1:2000 --k-range 0.5:8:2000").exit_code == 2);
    CHECK(run_cli("region --n 2 --c-range nope").exit_code == 2);
}

TEST_CASE("no subcommand is a usage error") {
    CHECK(run_cli("").exit_code == 2);
}

} // TEST_SUITE

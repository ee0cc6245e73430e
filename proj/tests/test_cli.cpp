#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(OSCATOM_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), out};
}

std::string data_path(const char* rel) { return std::string(OSCATOM_DATA_DIR "/") + rel; }

}  // namespace

TEST_CASE("map subcommand") {
    const RunResult r = run("map --family ks 1 0 0 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("x = 1 0 0") != std::string::npos);
    CHECK(r.out.find("|x| = 1") != std::string::npos);
    CHECK(r.out.find("|u|^2 = 1") != std::string::npos);

    const RunResult lc = run("map --family lc 1 1");
    CHECK(lc.exit_code == 0);
    CHECK(lc.out.find("x = 0 2") != std::string::npos);

    const RunResult ks2 = run("map --family ks 1 1 0 0");
    CHECK(ks2.out.find("x = 0 2 0") != std::string::npos);

    const RunResult bad = run("map --family ks 1 0 0");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("spectrum subcommand") {
    const RunResult csv = run("spectrum --family ks --nmax 2 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.find("N,epsilon,E,physical_dual") != std::string::npos);
    CHECK(csv.out.find("0,2,-0.5,true") != std::string::npos);
    CHECK(csv.out.find("2,4,-0.125,true") != std::string::npos);

    const RunResult h16 = run("spectrum --family hurwitz16 --nmax 0 --format csv");
    CHECK(h16.out.find("0,8,-0.03125,true") != std::string::npos);

    const RunResult js = run("spectrum --family lc --nmax 1 --format json");
    CHECK(js.exit_code == 0);
    const auto parsed = nlohmann::json::parse(js.out);
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0]["N"] == 0);
    CHECK(parsed[0]["physical_dual"] == true);
    CHECK(parsed[1]["physical_dual"] == false);

    const RunResult bad = run("spectrum --family ks --nmax -2");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("verify subcommand exit codes") {
    const RunResult ok = run("verify --family ks --samples 200 --seed 7");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("FAIL") == std::string::npos);

    const RunResult lit =
        run("verify --family ks --samples 100 --matrix-file " + data_path("ks_misprint.txt"));
    CHECK(lit.exit_code == 1);
    CHECK(lit.out.find("orthogonality") != std::string::npos);
    CHECK(lit.out.find("FAIL") != std::string::npos);

    // known-impossible phi sector reported but non-gating for hurwitz16
    const RunResult h16 = run("verify --family hurwitz16 --samples 40 --seed 3");
    CHECK(h16.exit_code == 0);
    CHECK(h16.out.find("FAIL*") != std::string::npos);

    const RunResult strict = run("verify --family hurwitz16 --samples 40 --strict");
    CHECK(strict.exit_code == 1);

    const RunResult bad = run("verify --family nosuch");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("verify output is byte-identical for a fixed seed") {
    const std::string args = "verify --family ks --samples 150 --seed 42 --format json";
    const RunResult a = run(args);
    const RunResult b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("emit-matrix matches the golden files") {
    for (const char* fam : {"lc", "ks", "hurwitz8", "hurwitz16"}) {
        const RunResult r = run(std::string("emit-matrix --family ") + fam);
        CHECK(r.exit_code == 0);
        std::ifstream in(data_path((std::string("golden/") + fam + ".txt").c_str()));
        std::string frozen((std::istreambuf_iterator<char>(in)),
                           std::istreambuf_iterator<char>());
        CHECK(r.out == frozen);
    }
}

TEST_CASE("duality subcommand") {
    const RunResult ok = run("duality --family ks --levels 2 --format json");
    CHECK(ok.exit_code == 0);
    const auto parsed = nlohmann::json::parse(ok.out);
    CHECK(parsed["flagged"] == false);
    REQUIRE(parsed["levels"].size() == 2);
    for (const auto& row : parsed["levels"]) {
        CHECK(row.contains("E_numeric"));
        CHECK(row.contains("E_closed_form"));
        CHECK(row.contains("omega_dual"));
        CHECK(row.contains("epsilon_numeric"));
        CHECK(row.contains("epsilon_closed_form"));
        CHECK(row.contains("rel_err_atom"));
        CHECK(row.contains("rel_err_osc"));
    }

    const RunResult coarse = run("duality --family ks --levels 3 --points 200");
    CHECK(coarse.exit_code == 1);
    CHECK(coarse.out.find("under-resolved") != std::string::npos);
}

TEST_CASE("solve subcommand") {
    const RunResult r = run("solve --system coulomb --dim 3 --l 0 --levels 2 --format json");
    CHECK(r.exit_code == 0);
    const auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed[0]["closed_form"] == doctest::Approx(-0.5));
    CHECK(parsed[0]["rel_err"].get<double>() < 1e-3);
}

TEST_CASE("config file supplies defaults, flags override") {
    const std::string cfg = "/tmp/oscatom_test_config.ini";
    {
        std::ofstream f(cfg);
        f << "[spectrum]\nfamily=hurwitz16\nnmax=1\nformat=csv\n";
    }
    const RunResult from_file = run("spectrum --config " + cfg);
    CHECK(from_file.exit_code == 0);
    CHECK(from_file.out.find("0,8,-0.03125,true") != std::string::npos);

    const RunResult overridden = run("spectrum --config " + cfg + " --family ks");
    CHECK(overridden.exit_code == 0);
    CHECK(overridden.out.find("0,2,-0.5,true") != std::string::npos);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "qde/haar.hpp"
#include "qde/io.hpp"

#ifndef QDE_CLI_PATH
#define QDE_CLI_PATH "qde"
#endif

using nlohmann::json;

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    const std::string cmd = std::string(QDE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult r;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WEXITSTATUS(status);
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = "/tmp/qde_cli_test_" + name;
    std::ofstream f(path);
    f << content;
    return path;
}

const char* kFourier2 =
    R"({"dim": 2, "rows": [[[0.7071067811865476, 0], [0.7071067811865476, 0]],
                           [[0.7071067811865476, 0], [-0.7071067811865476, 0]]]})";
const char* kComp2 =
    R"({"dim": 2, "rows": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]})";
const char* kComp3 =
    R"({"dim": 3, "rows": [[[1,0],[0,0],[0,0]], [[0,0],[1,0],[0,0]], [[0,0],[0,0],[1,0]]]})";
// tetrahedral SIC in the POVM schema: |1> plus three vectors at Bloch z = 1/3
const char* kTetSic =
    R"({"dim": 2, "vectors": [
        [[0, 0], [1, 0]],
        [[0.816496580927726, 0], [0.5773502691896258, 0]],
        [[0.816496580927726, 0], [-0.2886751345948129, 0.5]],
        [[0.816496580927726, 0], [-0.2886751345948129, -0.5]]]})";

}  // namespace

TEST_CASE("cli entropy on Fourier-2") {
    const std::string u = write_temp("f2.json", kFourier2);
    const std::string p = write_temp("comp2.json", kComp2);
    const CmdResult r = run_cli("entropy --unitary " + u + " --povm " + p);
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["rate"].get<double>() == doctest::Approx(0.693147).epsilon(1e-6));
    CHECK(j["measurement"].get<double>() == doctest::Approx(0.0));
}

TEST_CASE("cli entropy with a POVM file: identity + tetrahedral SIC") {
    const std::string p = write_temp("tet.json", kTetSic);
    const std::string u = write_temp("id2.json",
                                     R"({"dim": 2, "rows": [[[1,0],[0,0]],[[0,0],[1,0]]]})");
    const CmdResult r = run_cli("entropy --unitary " + u + " --povm " + p);
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["rate"].get<double>() == doctest::Approx(1.242453).epsilon(1e-6));
    CHECK(j["dynamical"].get<double>() == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("cli weyl mean-hdyn2 and haar mean-maxent") {
    const CmdResult w = run_cli("weyl --dim 2 --stat mean-hdyn2");
    REQUIRE(w.exit_code == 0);
    CHECK(json::parse(w.out)["value"].get<double>() == doctest::Approx(0.672127).epsilon(1e-5));

    const CmdResult h =
        run_cli("haar --dim 2 --stat mean-maxent --samples 50 --seed 2 --starts 4 --workers 2");
    REQUIRE(h.exit_code == 0);
    const double mean = json::parse(h.out)["mean"].get<double>();
    CHECK(mean > 0.5);
    CHECK(mean <= std::log(2.0) + 1e-9);
}

TEST_CASE("cli entropy dimension mismatch exits 2") {
    const std::string u = write_temp("f2b.json", kFourier2);
    const std::string p = write_temp("comp3.json", kComp3);
    const CmdResult r = run_cli("entropy --unitary " + u + " --povm " + p);
    CHECK(r.exit_code == 2);
}

TEST_CASE("cli rejects malformed input files with exit 2") {
    const std::string bad = write_temp("bad.json", "{\"dim\": 2, \"rows\": [[[1,0]]]}");
    CHECK(run_cli("classify --unitary " + bad).exit_code == 2);
    const std::string nonunitary = write_temp(
        "nonu.json", R"({"dim": 2, "rows": [[[2,0],[0,0]],[[0,0],[1,0]]]})");
    CHECK(run_cli("classify --unitary " + nonunitary).exit_code == 2);
}

TEST_CASE("cli maxent round-trips its basis and is seed-deterministic") {
    const CmdResult a = run_cli("maxent --gate S --seed 5");
    REQUIRE(a.exit_code == 0);
    const json ja = json::parse(a.out);
    CHECK(ja["value"].get<double>() == doctest::Approx(std::log(2.0)).epsilon(1e-7));
    CHECK(ja["certified_chaotic"].get<bool>());

    // emitted basis re-parses and re-validates as a unitary
    const qde::ComplexMatrix basis = qde::io::matrix_from_json(ja["basis"]);
    CHECK(qde::is_unitary(basis, 1e-8).passed);

    const CmdResult b = run_cli("maxent --gate S --seed 5");
    CHECK(json::parse(b.out)["value"] == ja["value"]);
}

TEST_CASE("cli classify named gates") {
    const CmdResult y = run_cli("classify --gate Y");
    REQUIRE(y.exit_code == 0);
    CHECK(json::parse(y.out)["status"] == "Chaotic");

    const CmdResult t = run_cli("classify --gate TOFFOLI");
    REQUIRE(t.exit_code == 0);
    const json jt = json::parse(t.out);
    CHECK(jt["status"] == "NotChaotic");
    CHECK(jt["method"] == "TraceNecessary");
    CHECK(jt["detail"].get<double>() == doctest::Approx(6.0));

    CHECK(run_cli("classify --gate 'FOURIER(5)'").exit_code == 0);
}

TEST_CASE("cli curve fig 1 contains the ln 2 plateau row") {
    const CmdResult r = run_cli("curve --fig 1 --samples 1000");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("theta,hdyn") == 0);
    // theta = pi/2 lands on the grid at i = 500
    CHECK(r.out.find("1.57079633,0.693147181") != std::string::npos);
}

TEST_CASE("cli curve figs 3 and 4 emit the right polyline counts") {
    const CmdResult f3 = run_cli("curve --fig 3 --samples 128");
    REQUIRE(f3.exit_code == 0);
    int max_region = -1;
    for (size_t pos = f3.out.find('\n'); pos != std::string::npos;
         pos = f3.out.find('\n', pos + 1)) {
        if (pos + 1 < f3.out.size() && f3.out[pos + 1] >= '0' && f3.out[pos + 1] <= '9')
            max_region = std::max(max_region, f3.out[pos + 1] - '0');
    }
    CHECK(max_region == 2);  // T_3 plus two lobes

    const CmdResult f4 = run_cli("curve --fig 4 --samples 128");
    REQUIRE(f4.exit_code == 0);
    max_region = -1;
    for (size_t pos = f4.out.find('\n'); pos != std::string::npos;
         pos = f4.out.find('\n', pos + 1)) {
        if (pos + 1 < f4.out.size() && f4.out[pos + 1] >= '0' && f4.out[pos + 1] <= '9')
            max_region = std::max(max_region, f4.out[pos + 1] - '0');
    }
    CHECK(max_region == 6);  // T_5 plus six lobes

    CHECK(run_cli("curve --fig 9").exit_code == 2);
}

TEST_CASE("cli haar is deterministic and rejects unsupported pairs") {
    const CmdResult a = run_cli("haar --dim 2 --stat volume --samples 5000 --seed 3 --workers 2");
    REQUIRE(a.exit_code == 0);
    const CmdResult b = run_cli("haar --dim 2 --stat volume --samples 5000 --seed 3 --workers 2");
    CHECK(json::parse(a.out)["mean"] == json::parse(b.out)["mean"]);
    CHECK(json::parse(a.out)["worker_count"] == 2);

    CHECK(run_cli("haar --dim 4 --stat volume --samples 1000").exit_code == 2);
    CHECK(run_cli("haar --dim 3 --stat mean-hdyn2 --samples 1000").exit_code == 2);
}

TEST_CASE("cli weyl values") {
    const CmdResult v = run_cli("weyl --dim 2 --stat volume");
    REQUIRE(v.exit_code == 0);
    CHECK(json::parse(v.out)["value"].get<double>() ==
          doctest::Approx(0.818310).epsilon(2e-6));

    const CmdResult n = run_cli("weyl --dim 2 --stat normalization");
    CHECK(json::parse(n.out)["value"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));

    CHECK(run_cli("weyl --dim 4 --stat volume").exit_code == 2);
    CHECK(run_cli("weyl --dim 3 --stat mean-hdyn2").exit_code == 2);
}

TEST_CASE("cli simulate converges on Fourier-2" * doctest::timeout(120)) {
    const std::string u = write_temp("f2c.json", kFourier2);
    const std::string p = write_temp("comp2c.json", kComp2);
    const CmdResult r =
        run_cli("simulate --unitary " + u + " --povm " + p + " --steps 1000000 --seed 1");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out)["abs_error"].get<double>() <= 5e-3);

    CHECK(run_cli("simulate --unitary " + u + " --povm " + p + " --steps 10").exit_code == 2);
}

TEST_CASE("cli gates exits 0 with full agreement" * doctest::timeout(600)) {
    const CmdResult r = run_cli("gates");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("name,dim,paper_claim,verdict,method,detail") == 0);
    CHECK(r.out.find("SQRT_CNOT,4,NotChaotic,NotChaotic") != std::string::npos);
    CHECK(r.out.find("ISWAP,4,Chaotic,Chaotic,OptimizerCertificate") != std::string::npos);
}

TEST_CASE("matrix JSON round-trips at 12 significant digits") {
    qde::SplitMix64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const qde::ComplexMatrix u = qde::random_unitary(4, rng);
        const qde::ComplexMatrix back = qde::io::matrix_from_json(qde::io::matrix_to_json(u));
        CHECK((back - u).max_abs() < 1e-11);
        CHECK(qde::is_unitary(back, 1e-9).passed);
    }
}

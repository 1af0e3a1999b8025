#include <catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "ccsurf/config.hpp"
#include "ccsurf/json.hpp"
#include "ccsurf/mesh.hpp"
#include "ccsurf/revolution.hpp"

using namespace ccsurf;
using Catch::Approx;
namespace fs = std::filesystem;

namespace {

struct CliRun {
    int exit_code = -1;
    std::string out;
    std::string err;
};

fs::path work_dir() {
    const fs::path dir = fs::temp_directory_path() / "ccsurf_io_tests";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CliRun run_cli(const std::string& args) {
    const fs::path dir = work_dir();
    const fs::path out = dir / "stdout.txt", err = dir / "stderr.txt";
    const std::string cmd = std::string(CCSURF_CLI_PATH) + " " + args + " > " +
                            out.string() + " 2> " + err.string();
    const int rc = std::system(cmd.c_str());
    CliRun r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

}  // namespace

TEST_CASE("JSON writer emits sorted keys and fixed-format numbers", "[io]") {
    Json j = Json::object();
    j.set("zeta", Json::num(1.0));
    j.set("alpha", Json::boolean(true));
    j.set("mid", Json::str("a \"quoted\" value"));
    Json arr = Json::array();
    arr.push(Json::integer(3));
    arr.push(Json::num(0.5));
    j.set("list", std::move(arr));
    CHECK(Json::num(std::numeric_limits<double>::infinity()).dump() == "null\n");
    CHECK(Json::num(std::nan("")).dump() == "null\n");
    CHECK(j.dump() ==
          "{\n"
          "  \"alpha\": true,\n"
          "  \"list\": [\n"
          "    3,\n"
          "    5.000000000000e-01\n"
          "  ],\n"
          "  \"mid\": \"a \\\"quoted\\\" value\",\n"
          "  \"zeta\": 1.000000000000e+00\n"
          "}\n");
}

TEST_CASE("config files parse with comments and reject unknown keys", "[io]") {
    const fs::path p = work_dir() / "cfg.txt";
    {
        std::ofstream f(p);
        f << "# comment line\n"
          << "grid = 17\n"
          << "tol_fd = 2e-4   # trailing comment\n"
          << "\n"
          << "radius=0.75\n";
    }
    const RunConfig cfg = load_config(p.string());
    CHECK(cfg.grid == 17);
    CHECK(cfg.tol_fd == Approx(2e-4));
    CHECK(cfg.radius == Approx(0.75));
    CHECK(cfg.step == Approx(1e-3));  // untouched default

    {
        std::ofstream f(p);
        f << "gird = 17\n";
    }
    CHECK_THROWS_WITH(load_config(p.string()),
                      Catch::Matchers::ContainsSubstring("unknown config key: gird"));
}

TEST_CASE("closed sphere meshes have Euler characteristic two", "[io]") {
    const ImmersionChart chart = immersion_from_profile(Space::H2R, profile(Space::H2R, 1.0));
    const Mesh m = mesh_from_chart(chart, 24, 24, projection_by_name("poincare"), true);
    CHECK(euler_characteristic(m) == 2);
    CHECK(m.vertices.size() == 23u * 24u + 2u);

    const Mesh open_mesh =
        mesh_from_chart(immersion_from_profile(
                            Space::H2R, profile(Space::H2R, 0.0, FamilyTag::H2R_FlatCylinder)),
                        10, 12, projection_by_name("poincare"), false);
    CHECK(euler_characteristic(open_mesh) == 0);
}

TEST_CASE("OBJ output uses 1-based v and f records", "[io]") {
    Mesh m;
    m.vertices = {{0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}};
    m.faces = {{0, 1, 2}};
    std::ostringstream ss;
    write_obj(ss, m);
    CHECK(ss.str() ==
          "v 0.000000000000e+00 0.000000000000e+00 0.000000000000e+00\n"
          "v 1.000000000000e+00 0.000000000000e+00 0.000000000000e+00\n"
          "v 0.000000000000e+00 1.000000000000e+00 0.000000000000e+00\n"
          "f 1 2 3\n");
}

TEST_CASE("north stereographic projection hits the sphere pole", "[io]") {
    const ImmersionChart chart = immersion_from_profile(Space::S2R, profile(Space::S2R, 4.0));
    CHECK_THROWS_WITH(mesh_from_chart(chart, 16, 16, projection_by_name("stereographic"), true),
                      Catch::Matchers::ContainsSubstring("stereographic-south"));
    const Mesh m =
        mesh_from_chart(chart, 16, 16, projection_by_name("stereographic-south"), true);
    CHECK(euler_characteristic(m) == 2);
    CHECK_THROWS_AS(projection_by_name("mercator"), std::invalid_argument);
}

TEST_CASE("classify subcommand prints the verdict", "[io]") {
    const CliRun r = run_cli("classify --space h2r --k 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "UniqueComplete (Theorem 2)\n");

    const CliRun lemma = run_cli("classify --space s2r --k 0.5");
    CHECK(lemma.exit_code == 0);
    CHECK(lemma.out ==
          "OpenProblem (+ Lemma 3 conditional)\n"
          "  note: no compact or complete immersion exists with sup ||grad h||^2 < 1 - K "
          "(Lemma 3)\n");
}

TEST_CASE("usage errors exit with code two", "[io]") {
    CHECK(run_cli("classify --space h2r").exit_code == 2);          // missing --k
    CHECK(run_cli("classify --space moon --k 1").exit_code == 2);   // bad space
    CHECK(run_cli("frobnicate --k 1").exit_code == 2);              // bad subcommand
    CHECK(run_cli("generate --space h2r --k 2").exit_code == 2);    // missing --out
    CHECK(run_cli("verify --space s2r --k 2 --family negk-axis").exit_code == 2);
}

TEST_CASE("out-of-range curvature for a family exits with code one", "[io]") {
    // the family name is valid for h2r, but no member of it has K = 2
    CHECK(run_cli("verify --space h2r --k 2 --family negk-axis").exit_code == 1);
}

TEST_CASE("bound violations exit with code one", "[io]") {
    const CliRun r = run_cli("generate --space h2r --k -2 --out " +
                             (work_dir() / "never.obj").string());
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("no such profile (completeness bound violated)") != std::string::npos);
    CHECK(r.err.find("NoCompleteSurface (Theorem 3)") != std::string::npos);
}

TEST_CASE("generate writes meshes and raw point clouds", "[io]") {
    const fs::path obj = work_dir() / "sphere.obj";
    const CliRun r = run_cli("generate --space s2r --k 4 --grid 12 --projection "
                             "stereographic-south --out " + obj.string());
    CHECK(r.exit_code == 0);
    const std::string body = slurp(obj);
    CHECK(body.rfind("v ", 0) == 0);
    CHECK(body.find("\nf ") != std::string::npos);

    // the default north projection hits the axis pole of this surface
    CHECK(run_cli("generate --space s2r --k 4 --grid 12 --out " + obj.string()).exit_code == 1);

    const fs::path csv = work_dir() / "cloud.csv";
    const CliRun raw = run_cli("generate --space h2r --k 2 --grid 8 --projection raw --out " +
                               csv.string());
    CHECK(raw.exit_code == 0);
    CHECK(slurp(csv).rfind("x1,x2,x3,x4\n", 0) == 0);
}

TEST_CASE("verify reports are byte-identical across runs", "[io]") {
    const fs::path a = work_dir() / "rep_a.json", b = work_dir() / "rep_b.json";
    const CliRun r1 = run_cli("verify --space h2r --k 2 --grid 8 --out " + a.string());
    const CliRun r2 = run_cli("verify --space h2r --k 2 --grid 8 --out " + b.string());
    CHECK(r1.exit_code == 0);
    CHECK(r2.exit_code == 0);
    const std::string body = slurp(a);
    CHECK(body == slurp(b));
    CHECK(body.find("\"overall\": \"pass\"") != std::string::npos);
    CHECK(body.find("\"version\": \"ccsurf 1.0.0\"") != std::string::npos);
}

TEST_CASE("verify marks the predicted degeneracy as expected", "[io]") {
    const CliRun r = run_cli("verify --space s2r --k 0 --grid 8");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"A degenerate (Lemma 2)\"") != std::string::npos);
    CHECK(r.out.find("\"expected\"") != std::string::npos);
    CHECK(r.out.find("\"overall\": \"pass\"") != std::string::npos);
}

TEST_CASE("verify passes on the slab and on negative-curvature families", "[io]") {
    const CliRun slab = run_cli("verify --space s2r --k 1 --grid 8");
    CHECK(slab.exit_code == 0);
    CHECK(slab.out.find("second form vanishes on the totally geodesic slab") != std::string::npos);
    CHECK(slab.out.find("\"overall\": \"pass\"") != std::string::npos);
    const CliRun neg = run_cli("verify --space h2r --k -0.5 --family negk-exp --grid 8");
    CHECK(neg.exit_code == 0);
    CHECK(neg.out.find("\"overall\": \"pass\"") != std::string::npos);
}

TEST_CASE("verify honors config files and rejects bad ones", "[io]") {
    const fs::path cfg = work_dir() / "verify.cfg";
    {
        std::ofstream f(cfg);
        f << "grid = 8\n";
    }
    CHECK(run_cli("verify --space h2r --k 1 --config " + cfg.string()).exit_code == 0);
    {
        std::ofstream f(cfg);
        f << "grid = 8\nwhat = 1\n";
    }
    CHECK(run_cli("verify --space h2r --k 1 --config " + cfg.string()).exit_code == 2);
}

TEST_CASE("reconstruct writes the height field and a summary", "[io]") {
    const fs::path csv = work_dir() / "disk.csv";
    const CliRun r = run_cli("reconstruct --space h2r --k 2 --radius 0.2 --step 0.002 --out " +
                             csv.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("radius reached: 0.2") != std::string::npos);
    CHECK(r.out.find("branch exited: no") != std::string::npos);
    CHECK(r.out.find("max height error vs rotational sphere:") != std::string::npos);
    CHECK(slurp(csv).rfind("u,v,rho,theta,h,h_u,h_v\n", 0) == 0);

    // nu-law has no branch here
    CHECK(run_cli("reconstruct --space h2r --k -0.5 --radius 0.2 --step 0.002").exit_code == 1);
}

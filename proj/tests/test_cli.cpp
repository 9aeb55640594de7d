#include <catch2/catch_amalgamated.hpp>
#include <sys/wait.h>

#include <cstdio>
#include <json.hpp>
#include <string>

#ifndef LIEFOL_CLI_PATH
#error "LIEFOL_CLI_PATH must be defined"
#endif
#ifndef LIEFOL_DATA_DIR
#error "LIEFOL_DATA_DIR must be defined"
#endif

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(LIEFOL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult res;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof(buf), pipe)) res.out.append(buf, n);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string data(const std::string& name) { return std::string(LIEFOL_DATA_DIR) + "/" + name; }

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("validate accepts sl2 and rejects the perturbed table") {
  const auto good = run_cli("validate " + data("sl2.json"));
  CHECK(good.exit_code == 0);
  CHECK(contains(good.out, "valid: true"));
  CHECK(contains(good.out, "subalgebra_closed: true"));

  const auto bad = run_cli("validate " + data("sl2_perturbed.json"));
  CHECK(bad.exit_code == 1);
  CHECK(contains(bad.out, "valid: false"));
  CHECK(contains(bad.out, "jacobi"));
  CHECK(contains(bad.out, "(h, e, f)"));
  CHECK(contains(bad.out, "2*e"));
}

TEST_CASE("rigidity on a structure file with a subalgebra") {
  const auto res = run_cli("rigidity " + data("sl2.json"));
  CHECK(res.exit_code == 0);
  CHECK(contains(res.out, "dim_Z1: 1"));
  CHECK(contains(res.out, "dim_B1: 1"));
  CHECK(contains(res.out, "rigid: true"));

  const auto flag = run_cli("rigidity " + data("sl2.json") + " --subalgebra 1");
  CHECK(flag.exit_code == 0);
  CHECK(contains(flag.out, "dim_g: 1"));
}

TEST_CASE("rigidity of the familia1 fiber from a fields file") {
  const auto res = run_cli("rigidity " + data("familia1_p5.json") + " --t 1");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.out, "dim_L: 35"));
  CHECK(contains(res.out, "dim_Z1: 32"));
  CHECK(contains(res.out, "dim_B1: 28"));
  CHECK(contains(res.out, "rigid: false"));

  const auto missing_t = run_cli("rigidity " + data("familia1_p5.json"));
  CHECK(missing_t.exit_code == 2);
}

TEST_CASE("subalgebras given as coefficient rows over the fields") {
  const std::string tmp = "/tmp/liefol_rows_test.json";
  {
    FILE* f = fopen(tmp.c_str(), "w");
    REQUIRE(f != nullptr);
    fputs(R"({
      "kind": "fields",
      "ambient": {"type": "projective", "n": 4},
      "fields": [
        {"name": "H", "components": ["4*x0", "2*x1", "0", "-2*x3", "-4*x4"]},
        {"name": "E", "components": ["x1", "2*x2", "3*x3", "4*x4", "0"]},
        {"name": "F", "components": ["0", "4*x0", "3*x1", "2*x2", "x3"]}
      ],
      "subalgebra": [[1, 0, 0], [0, 1, 0]]
    })", f);
    fclose(f);
  }
  const auto res = run_cli("rigidity " + tmp);
  CHECK(res.exit_code == 0);
  CHECK(contains(res.out, "dim_g: 2"));
  CHECK(contains(res.out, "dim_L: 24"));
}

TEST_CASE("cohomology in degree 2") {
  const auto res = run_cli("cohomology " + data("sl2.json") + " --degree 2");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.out, "degree: 2"));
  CHECK(contains(res.out, "dim_Z: 1"));
  CHECK(contains(res.out, "dim_B: 1"));
  CHECK(contains(res.out, "dim_H: 0"));
}

TEST_CASE("rigidity on a quadric ambient") {
  const auto res = run_cli("rigidity " + data("quadric_aff.json"));
  CHECK(res.exit_code == 0);
  CHECK(contains(res.out, "dim_L: 10"));
  CHECK(contains(res.out, "dim_Z1: 8"));
  CHECK(contains(res.out, "dim_B1: 8"));
  CHECK(contains(res.out, "rigid: true"));
}

TEST_CASE("cohomology degrees") {
  const auto adj = run_cli("cohomology " + data("sl2_perturbed.json") + " --degree 1");
  // no subalgebra: adjoint module; the perturbed table breaks the Jacobi
  // identity, so the module law fails and the run is rejected as input
  CHECK(adj.exit_code == 2);

  const auto good = run_cli("cohomology " + data("sl2.json") + " --degree 1");
  CHECK(good.exit_code == 0);
  CHECK(contains(good.out, "module: L/g"));
  CHECK(contains(good.out, "dim_H: 0"));
}

TEST_CASE("orbit dimension sampling") {
  const auto res = run_cli("orbit-dim " + data("sl2sym4_p4.json") + " --samples 5 --seed 0");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.out, "generic_orbit_dim: 3"));
  CHECK(contains(res.out, "tangent_rank: 3"));

  const auto quad = run_cli("orbit-dim " + data("quadric_aff.json") + " --samples 5 --seed 0");
  CHECK(quad.exit_code == 0);
  CHECK(contains(quad.out, "generic_orbit_dim: 2"));
}

TEST_CASE("maximality verdict") {
  const auto res = run_cli("maximality " + data("sl2sym4_p4.json") + " --samples 25 --seed 0");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.out, "maximal: true"));
  CHECK(contains(res.out, "dim_tangent_algebra: 3"));
  CHECK(contains(res.out, "probabilistic"));
}

TEST_CASE("family closure over Q(t)") {
  const auto res = run_cli("family-check " + data("familia1_p5.json"));
  CHECK(res.exit_code == 0);
  CHECK(contains(res.out, "closed: true"));
  CHECK(contains(res.out, "[X1, X2]"));
  CHECK(contains(res.out, "value: -X2"));
  CHECK(contains(res.out, "value: -t*X2 - X3"));
  CHECK(contains(res.out, "[X2, X3]"));
}

TEST_CASE("defining form with Frobenius and Kupka options") {
  const auto res = run_cli("form " + data("exceptional_p3.json") +
                           " --frobenius --kupka 1:0:0:0,0:0:0:1");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.out, "coefficient_degree: 3"));
  CHECK(contains(res.out, "euler_contraction_zero: true"));
  CHECK(contains(res.out, "frobenius_integrable: true"));
  CHECK(contains(res.out, "class:"));
}

TEST_CASE("catalog list and run") {
  const auto list = run_cli("catalog list");
  CHECK(list.exit_code == 0);
  CHECK(contains(list.out, "familia1"));
  CHECK(contains(list.out, "aff-so5-quadric"));

  const auto run = run_cli("catalog run familia1 --n 5 --t 1");
  CHECK(run.exit_code == 0);
  CHECK(contains(run.out, "status: pass"));
  CHECK(contains(run.out, "dim_Z1"));
  CHECK(contains(run.out, "expected: 32"));
}

TEST_CASE("reports are byte-identical across runs") {
  const std::string cmd = "catalog run aff-so5-quadric --samples 10";
  const auto a = run_cli(cmd);
  const auto b = run_cli(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("json output is machine readable and stable") {
  const auto res = run_cli("rigidity " + data("sl2.json") + " --json");
  CHECK(res.exit_code == 0);
  const auto j = nlohmann::json::parse(res.out);
  CHECK(j.at("report_version") == 1);
  CHECK(j.at("rigidity").at("dim_Z1") == 1);
  CHECK(j.at("rigidity").at("rigid") == true);
}

TEST_CASE("input errors exit with code 2") {
  CHECK(run_cli("validate /nonexistent/file.json").exit_code == 2);
  CHECK(run_cli("rigidity " + data("sl2.json") + " --subalgebra 7").exit_code == 2);
  CHECK(run_cli("catalog run familia1 --n 4").exit_code == 2);
  CHECK(run_cli("orbit-dim " + data("sl2.json")).exit_code == 2);  // structure, not fields
}

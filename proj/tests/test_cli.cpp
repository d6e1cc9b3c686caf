#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "kirchhoff/cli.hpp"

using namespace kirchhoff;
using nlohmann::json;

namespace {

json results_of(const CliResult& r) { return json::parse(r.output).at("results"); }

// Writes a triangle edge-list file and removes it on scope exit.
struct TempGraphFile {
  std::filesystem::path path;
  explicit TempGraphFile(const std::string& content) {
    path = std::filesystem::temp_directory_path() / "kirchhoff_cli_test_graph.txt";
    std::ofstream out(path);
    out << content;
  }
  ~TempGraphFile() { std::filesystem::remove(path); }
  std::string descriptor() const { return "file:" + path.string(); }
};

}  // namespace

TEST_CASE("trees count") {
  CliResult r = run_cli({"trees", "count", "--graph", "Kmn:2,3"});
  REQUIRE(r.exit_code == 0);
  json res = results_of(r);
  CHECK(res.at("count") == "12");
  CHECK(res.at("vertex_count") == 5);
  CHECK(res.at("edge_count") == 6);
  CHECK(json::parse(r.output).at("status") == "ok");

  CliResult e = run_cli({"trees", "count", "--graph", "Kn:4", "--enumerate"});
  REQUIRE(e.exit_code == 0);
  json eres = results_of(e);
  CHECK(eres.at("count") == "16");
  CHECK(eres.at("enumerated_count") == "16");
  CHECK(eres.at("match") == true);
  CHECK(eres.at("trees").size() == 16);
  CHECK(eres.at("trees")[0] == json::array({0, 1, 2}));
}

TEST_CASE("trees containing") {
  auto count_for = [](const std::string& csv) {
    CliResult r = run_cli({"trees", "containing", "--graph", "Kmn:2,3", "--edges", csv});
    REQUIRE(r.exit_code == 0);
    return results_of(r).at("count").get<std::string>();
  };
  CHECK(count_for("0,1") == "5");
  CHECK(count_for("0,3") == "4");
  CHECK(count_for("0,4") == "5");
  CHECK(count_for("") == "12");  // empty list: all spanning trees

  // Contracting a full triangle is a cycle: usage error.
  CliResult bad = run_cli({"trees", "containing", "--graph", "Kn:3", "--edges", "0,1,2"});
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("error") != std::string::npos);
}

TEST_CASE("hessian with determinant and spectrum") {
  CliResult r = run_cli({"hessian", "--graph", "Kn:4", "--det"});
  REQUIRE(r.exit_code == 0);
  json res = results_of(r);
  CHECK(res.at("det") == "-4096");
  CHECK(res.at("size") == 6);
  CHECK(res.at("matrix")[0][1] == "3");
  CHECK(res.at("matrix")[0][0] == "0");

  CliResult s = run_cli({"hessian", "--graph", "Kn:4", "--spectrum"});
  REQUIRE(s.exit_code == 0);
  json cf = results_of(s).at("closed_form");
  CHECK(cf.at("char_poly_match") == true);
  CHECK(cf.at("diagonalizable") == true);
  CHECK(cf.at("computed_det") == "-4096");
  CHECK(cf.at("formula_det") == "-4096");
  CHECK(cf.at("inertia") == json({{"positive", 1}, {"negative", 5}, {"zero", 0}}));
}

TEST_CASE("hessian spectrum reports the bipartite determinant mismatch without failing") {
  CliResult r = run_cli({"hessian", "--graph", "Kmn:2,3", "--spectrum"});
  // The spectrum verifies; the printed determinant disagreeing is data, not
  // a verification failure, so the exit code stays 0.
  REQUIRE(r.exit_code == 0);
  json cf = results_of(r).at("closed_form");
  CHECK(cf.at("char_poly_match") == true);
  CHECK(cf.at("diagonalizable") == true);
  CHECK(cf.at("paper_det") == "-27648");
  CHECK(cf.at("computed_det") == "-55296");
  CHECK(cf.at("agrees") == false);
  CHECK(json::parse(r.output).at("status") == "ok");
}

TEST_CASE("hessian dump of the generating polynomial") {
  CliResult r = run_cli({"hessian", "--graph", "Kn:3", "--dump-poly"});
  REQUIRE(r.exit_code == 0);
  CHECK(results_of(r).at("polynomial") == "1: e_0 e_1\n1: e_0 e_2\n1: e_1 e_2\n");
}

TEST_CASE("edge-list files work everywhere a descriptor does") {
  TempGraphFile f("vertices 3\n0 1\n0 2\n1 2\n");
  CliResult r = run_cli({"trees", "count", "--graph", f.descriptor()});
  REQUIRE(r.exit_code == 0);
  CHECK(results_of(r).at("count") == "3");

  CliResult h = run_cli({"hessian", "--graph", f.descriptor(), "--det"});
  REQUIRE(h.exit_code == 0);
  CHECK(results_of(h).at("det") == "2");

  // No closed form is defined for ad-hoc graphs.
  CliResult s = run_cli({"hessian", "--graph", f.descriptor(), "--spectrum"});
  CHECK(s.exit_code == 2);

  CliResult missing = run_cli({"trees", "count", "--graph", "file:/nonexistent/graph.txt"});
  CHECK(missing.exit_code == 2);
}

TEST_CASE("verify subcommands succeed on their default ranges") {
  CliResult kn = run_cli({"verify", "kn", "--from", "3", "--to", "5"});
  REQUIRE(kn.exit_code == 0);
  json knres = results_of(kn);
  CHECK(knres.at("all_verified") == true);
  CHECK(knres.at("cases").size() == 3);
  for (const auto& c : knres.at("cases")) {
    CHECK(c.at("det_match") == true);
    CHECK(c.at("trace_zero") == true);
  }

  CliResult kmn = run_cli({"verify", "kmn", "--max-sum", "5"});
  REQUIRE(kmn.exit_code == 0);
  json kmnres = results_of(kmn);
  CHECK(kmnres.at("all_verified") == true);
  // Ordered pairs (m,n) with m+n in 3..5: 2 + 3 + 4.
  CHECK(kmnres.at("cases").size() == 9);
  bool saw_disagreement = false;
  for (const auto& c : kmnres.at("cases"))
    if (c.at("agrees") == false) saw_disagreement = true;
  CHECK(saw_disagreement);

  CliResult blocks = run_cli({"verify", "blocks", "--trials", "5", "--seed", "42",
                              "--size-cap", "3"});
  REQUIRE(blocks.exit_code == 0);
  json bres = results_of(blocks);
  CHECK(bres.at("all_verified") == true);
  CHECK(bres.at("cyclic").at("failures") == 0);
  CHECK(bres.at("mixed").at("failures") == 0);
  CHECK(bres.at("structured").at("failures") == 0);
}

TEST_CASE("slp reports") {
  CliResult r = run_cli({"slp", "--graph", "Kn:4"});
  REQUIRE(r.exit_code == 0);
  json res = results_of(r);
  CHECK(res.at("verdict") == true);
  CHECK(res.at("hilbert") == json::array({1, 6, 6, 1}));
  CHECK(res.at("s") == 3);
  REQUIRE(res.at("per_k").size() == 2);
  CHECK(res.at("per_k")[0].at("det_numerator") == "16");
  CHECK(res.at("per_k")[1].at("det_numerator") == "-4096");
  CHECK(res.at("per_k")[0].at("det_denominator") == "1");
  CHECK(res.at("per_k")[1].at("det_denominator") == "1");
  CHECK(res.at("per_k")[1].at("dim") == 6);
  CHECK(res.at("L") == json::array({"1", "1", "1", "1", "1", "1"}));

  // Zero point: the k = 0 Hessian vanishes, so the verdict fails (exit 1).
  CliResult zero = run_cli({"slp", "--graph", "Kn:3", "--point", "0,0,0"});
  CHECK(zero.exit_code == 1);
  json zres = results_of(zero);
  CHECK(zres.at("verdict") == false);
  CHECK(json::parse(zero.output).at("status") == "verification_failed");

  // General point on the triangle: only k = 0 depends on it (the quadric's
  // Hessian matrix is constant).
  CliResult pt = run_cli({"slp", "--graph", "Kn:3", "--point", "1,2,3"});
  REQUIRE(pt.exit_code == 0);
  json pres = results_of(pt);
  CHECK(pres.at("per_k")[0].at("det_numerator") == "11");
  CHECK(pres.at("per_k")[1].at("det_numerator") == "2");
  CHECK(pres.at("L") == json::array({"1", "2", "3"}));

  // Rational coefficients are accepted exactly.
  CliResult rat = run_cli({"slp", "--graph", "Kn:3", "--point", "1/2,1,1"});
  REQUIRE(rat.exit_code == 0);
  CHECK(results_of(rat).at("per_k")[0].at("det_numerator") == "2");  // F = 1/2+1/2+1 = 2
  CHECK(results_of(rat).at("per_k")[0].at("det_denominator") == "1");

  CliResult rev = run_cli({"slp", "--graph", "Kmn:2,3", "--basis-order", "reverse"});
  REQUIRE(rev.exit_code == 0);
  CHECK(results_of(rev).at("verdict") == true);
  CHECK(results_of(rev).at("hilbert") == json::array({1, 6, 12, 6, 1}));
}

TEST_CASE("byte-identical reruns") {
  std::vector<std::string> args{"verify", "blocks", "--trials", "4", "--seed", "7"};
  CliResult a = run_cli(args);
  CliResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);

  CliResult c = run_cli({"slp", "--graph", "Kn:4"});
  CliResult d = run_cli({"slp", "--graph", "Kn:4"});
  CHECK(c.output == d.output);
}

TEST_CASE("table format") {
  CliResult r = run_cli({"--format", "table", "hessian", "--graph", "Kn:3", "--det"});
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find('{') == std::string::npos);
  CHECK(r.output.find("command: hessian") != std::string::npos);
  CHECK(r.output.find("det: 2") != std::string::npos);
  CHECK(r.output.find("status: ok") != std::string::npos);

  // --format may also trail the subcommand (it falls through to the parent).
  CliResult t = run_cli({"verify", "kn", "--to", "4", "--format", "table"});
  REQUIRE(t.exit_code == 0);
  CHECK(t.output.find("all_verified: true") != std::string::npos);
  CHECK(t.output.find('{') == std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli({}).exit_code == 2);
  CHECK(run_cli({"bogus"}).exit_code == 2);
  CHECK(run_cli({"trees", "count"}).exit_code == 2);               // missing --graph
  CHECK(run_cli({"trees", "count", "--graph", "Qn:3"}).exit_code == 2);
  CHECK(run_cli({"trees", "count", "--graph", "Kn:x"}).exit_code == 2);
  CHECK(run_cli({"trees", "count", "--graph", "Kmn:2"}).exit_code == 2);
  CHECK(run_cli({"trees", "count", "--graph", "Kn:2,3"}).exit_code == 2);
  CHECK(run_cli({"verify", "kn", "--from", "9", "--to", "3"}).exit_code == 2);
  CHECK(run_cli({"slp", "--graph", "Kn:3", "--point", "1,2"}).exit_code == 2);
  CHECK(run_cli({"slp", "--graph", "Kn:3", "--basis-order", "sideways"}).exit_code == 2);

  CliResult help = run_cli({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.output.find("kirchhoff") != std::string::npos);
}

TEST_CASE("edge cap environment override") {
  setenv("KIRCHHOFF_EDGE_CAP", "3", 1);
  CliResult r = run_cli({"trees", "count", "--graph", "Kn:4", "--enumerate"});
  unsetenv("KIRCHHOFF_EDGE_CAP");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("error") != std::string::npos);

  CliResult ok = run_cli({"trees", "count", "--graph", "Kn:4", "--enumerate"});
  CHECK(ok.exit_code == 0);
}

// End-to-end tests of the latticeq CLI: spec'd invocations, report schema,
// exit codes, and determinism.  The binary path arrives as the first
// non-flag program argument (ctest passes $<TARGET_FILE:latticeq_cli>).

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "spawn.hpp"

using json = nlohmann::json;

namespace {

std::string g_bin;

RunResult run_cli(const std::string& args, const std::string& env = "") {
  std::string cmd = env.empty() ? g_bin : env + " " + g_bin;
  return run_command(cmd + " " + args + " 2>/dev/null");
}

json parse_report(const RunResult& r) {
  REQUIRE_FALSE(r.out.empty());
  return json::parse(r.out);
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("quad triangle corner reports exact densities") {
  const RunResult r = run_cli("quad --x 0.5 --y 0.5");
  CHECK(r.exit_code == 0);
  const json j = parse_report(r);
  CHECK(j["command"] == "quad");
  CHECK(j["version"] == "latticeq 0.1.0");
  const json& res = j["results"];
  CHECK(res["delta_exact"] == "2/3");
  CHECK(res["theta_exact"] == "3/2");
  CHECK(res["delta"].get<double>() == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(res["theta"].get<double>() == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(res["region"]["degenerate_triangle"] == true);
}

TEST_CASE("quad accepts rational flags") {
  const RunResult r = run_cli("quad --x 2/3 --y 5/6");
  CHECK(r.exit_code == 0);
  const json res = parse_report(r)["results"];
  CHECK(res["delta_exact"] == "5/6");
  CHECK(res["region"]["covering_case"] == "E2");
}

TEST_CASE("quad square corner reports continuum families") {
  const RunResult r = run_cli("quad --x 1 --y 1 --samples 4");
  CHECK(r.exit_code == 0);
  const json res = parse_report(r)["results"];
  CHECK(res["delta_exact"] == "1");
  CHECK(res["theta_exact"] == "1");
  for (const char* fam : {"packing_lattices", "covering_lattices"}) {
    CHECK(res[fam]["cardinality_class"] == "continuum");
    CHECK(res[fam]["branches"].size() == 2);
    CHECK(res[fam]["branches"][0]["sampled"].size() == 4);
  }
  CHECK(res["packing_cuts"]["interval"] == json::array({0.0, 1.0}));
}

TEST_CASE("quad vertices mode canonicalizes the triangle example") {
  const RunResult r = run_cli("quad --vertices \"0,1;0,0;1,0;0.5,0.5\"");
  CHECK(r.exit_code == 0);
  const json j = parse_report(r);
  CHECK(j["inputs"]["x"].get<double>() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(j["inputs"]["y"].get<double>() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(j["results"]["delta"].get<double>() == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(j["results"]["theta"].get<double>() == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("quad certify validates the generic point") {
  const RunResult r = run_cli("quad --x 0.6 --y 0.8 --certify");
  CHECK(r.exit_code == 0);
  const json res = parse_report(r)["results"];
  CHECK(res["delta_exact"] == "4/5");
  CHECK(res["theta_exact"] == "5/4");
  const json& pm = res["packing_lattices"]["members"];
  const json& cm = res["covering_lattices"]["members"];
  CHECK(pm.size() == 1);
  CHECK(cm.size() == 1);
  CHECK(pm[0]["certificate"]["ok"] == true);
  CHECK(cm[0]["certificate"]["ok"] == true);
  CHECK(pm[0]["certificate"]["density"].get<double>() ==
        doctest::Approx(0.8).epsilon(1e-12));
  CHECK(res["table_matches_construction"]["covering"] == true);
}

TEST_CASE("quad reports the covering-table mismatch on the low-y branch") {
  const RunResult r = run_cli("quad --x 0.55 --y 0.6 --certify");
  CHECK(r.exit_code == 0);  // construction certifies, so the report succeeds
  const json res = parse_report(r)["results"];
  CHECK(res["table_matches_construction"]["covering"] == false);
  REQUIRE(res.contains("table_mismatch"));
  const json& mm = res["table_mismatch"];
  CHECK(mm["literal_certificate"]["ok"] == true);  // covers, but too densely
  CHECK(mm["construction_certificate"]["ok"] == true);
  const double lit = mm["literal_density"].get<double>();
  const double con = mm["construction_density"].get<double>();
  CHECK(con == doctest::Approx(res["theta"].get<double>()).epsilon(1e-12));
  CHECK(lit > con + 1e-3);
}

TEST_CASE("quad rejects invalid input with exit 2") {
  CHECK(run_cli("quad --x 0.9 --y 0.3").exit_code == 2);   // outside D
  CHECK(run_cli("quad --x 0.5").exit_code == 2);           // missing --y
  CHECK(run_cli("quad --x abc --y 0.9").exit_code == 2);   // unparsable
  CHECK(run_cli("quad --vertices \"0,0;1,0;0.2,0.2;0,1\"").exit_code == 2);
  CHECK(run_cli("quad --x 0.5 --y 0.5 --vertices \"0,0;1,0;1,1;0,1\"").exit_code == 2);
  CHECK(run_cli("bogus").exit_code == 2);
}

TEST_CASE("kf reproduces the cubic profile numbers") {
  const RunResult r = run_cli("kf --f poly:1,0,0,-1 --certify");
  CHECK(r.exit_code == 0);
  const json res = parse_report(r)["results"];
  CHECK(res["delta"].get<double>() == doctest::Approx(0.8384279476).epsilon(1e-6));
  CHECK(res["theta"].get<double>() == doctest::Approx(1.282632608).epsilon(1e-6));
  CHECK(res["harmonic_sum"].get<double>() == doctest::Approx(1.972354815).epsilon(1e-6));
  CHECK(res["packing_certificate"]["ok"] == true);
  CHECK(res["covering_certificate"]["ok"] == true);
}

TEST_CASE("kf handles the triangle and the square profiles") {
  const json tri = parse_report(run_cli("kf --f poly:1,-1"))["results"];
  CHECK(tri["delta"].get<double>() == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
  CHECK(tri["theta"].get<double>() == doctest::Approx(1.5).epsilon(1e-9));

  const json sq = parse_report(run_cli("kf --f poly:1"))["results"];
  CHECK(sq["delta"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(sq["theta"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(sq["covering_cuts"]["flat"] == true);
  REQUIRE(sq["packing_cuts"]["flat_runs"].size() == 1);
  CHECK(sq["packing_cuts"]["flat_runs"][0][0].get<double>() ==
        doctest::Approx(0.0).epsilon(1e-9).scale(1.0));
  CHECK(sq["packing_cuts"]["flat_runs"][0][1].get<double>() ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("kf accepts pwl profiles and rejects invalid ones") {
  const RunResult r = run_cli("kf --f pwl:0:1,0.5:0.8,1:0.2");
  CHECK(r.exit_code == 0);
  const json res = parse_report(r)["results"];
  CHECK(res["delta"].get<double>() > 2.0 / 3.0 - 1e-9);
  CHECK(res["theta"].get<double>() < 1.5 + 1e-9);
  CHECK(run_cli("kf --f poly:1,2").exit_code == 2);       // increasing profile
  CHECK(run_cli("kf --f nonsense").exit_code == 2);
  CHECK(run_cli("kf --f poly:1,-1 --grid 9").exit_code != 0);  // below range
}

TEST_CASE("verify certifies the unit-square tiling") {
  const RunResult r =
      run_cli("verify --polygon \"0,0;1,0;1,1;0,1\" --lattice \"0,1;1,0\" --mode tiling");
  CHECK(r.exit_code == 0);
  const json cert = parse_report(r)["results"]["certificate"];
  CHECK(cert["ok"] == true);
  CHECK(cert["density"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("verify flags the sparse covering with exit 1") {
  const RunResult r = run_cli(
      "verify --polygon \"0,0;1,0;1,1;0,1\" --lattice \"0,1.1;1,0\" --mode covering");
  CHECK(r.exit_code == 1);
  const json cert = parse_report(r)["results"]["certificate"];
  CHECK(cert["ok"] == false);
  // true uncovered fraction is 1/11 of the fundamental domain
  CHECK(std::abs(cert["uncovered_fraction"].get<double>() - 1.0 / 11.0) < 5e-3);
}

TEST_CASE("verify reads polygon files") {
  const std::filesystem::path path = temp_path("latticeq_cli_square.txt");
  {
    std::ofstream out(path);
    out << "0,0\n1,0\n1,1\n0,1\n";
  }
  const RunResult r = run_cli("verify --polygon " + path.string() +
                              " --lattice \"0,1;1,0\" --mode packing");
  CHECK(r.exit_code == 0);
  std::filesystem::remove(path);
}

TEST_CASE("verify rejects malformed requests with exit 2") {
  CHECK(run_cli("verify --polygon \"0,0;1,0;1,1;0,1\" --lattice \"0,1;1,0\" "
                "--mode nonsense").exit_code == 2);
  CHECK(run_cli("verify --polygon \"0,0;1,0\" --lattice \"0,1;1,0\" "
                "--mode packing").exit_code == 2);
  CHECK(run_cli("verify --polygon \"0,0;1,0;1,1;0,1\" --lattice \"0,1\" "
                "--mode packing").exit_code == 2);
  CHECK(run_cli("verify --polygon /nonexistent/file.txt --lattice \"0,1;1,0\" "
                "--mode packing").exit_code == 2);
}

TEST_CASE("scan inequalities writes the CSV and a margin summary") {
  const std::filesystem::path csv = temp_path("latticeq_cli_ineq.csv");
  const RunResult r =
      run_cli("scan inequalities --grid 120 --out " + csv.string());
  CHECK(r.exit_code == 0);
  const json res = parse_report(r)["results"];
  CHECK(res["min_product_margin"].get<double>() >= -1e-9);
  CHECK(res["min_harmonic_margin"].get<double>() >= -1e-9);
  CHECK(res["min_ismailescu_margin"].get<double>() >= -1e-9);
  CHECK(res["bounds"]["ok"] == true);

  std::ifstream in(csv);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header ==
        "x,y,region,delta,theta,product_margin,harmonic_margin,sum_margin,"
        "ismailescu_margin");
  size_t lines = 0;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) ++lines;
  CHECK(lines == res["rows"].get<size_t>());
  std::filesystem::remove(csv);
}

TEST_CASE("scan omega emits the density cloud per region") {
  const std::filesystem::path csv = temp_path("latticeq_cli_omega.csv");
  const RunResult r =
      run_cli("scan omega --region B1 --grid 50 --out " + csv.string());
  CHECK(r.exit_code == 0);
  const json res = parse_report(r)["results"];
  CHECK(res["min_product_margin"].get<double>() >= -1e-9);

  // the B1 cloud contains the triangle corner (2/3, 3/2)
  std::ifstream in(csv);
  REQUIRE(in.good());
  std::string line;
  std::getline(in, line);  // header
  bool corner = false;
  while (std::getline(in, line)) {
    const auto c1 = line.find(',', line.find(',', line.find(',') + 1) + 1);
    const auto c2 = line.find(',', c1 + 1);
    const double delta = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
    const double theta = std::stod(line.substr(c2 + 1));
    if (std::abs(delta - 2.0 / 3.0) < 1e-12 && std::abs(theta - 1.5) < 1e-12)
      corner = true;
  }
  CHECK(corner);
  std::filesystem::remove(csv);

  CHECK(run_cli("scan omega --region B9 --grid 50 --out " + csv.string())
            .exit_code == 2);
}

TEST_CASE("reports are byte-identical across runs") {
  const RunResult a = run_cli("quad --x 0.55 --y 0.6 --certify");
  const RunResult b = run_cli("quad --x 0.55 --y 0.6 --certify");
  CHECK(a.out == b.out);
  const RunResult c = run_cli("kf --f poly:1,0,0,-1");
  const RunResult d = run_cli("kf --f poly:1,0,0,-1");
  CHECK(c.out == d.out);
}

TEST_CASE("LATTICEQ_TOL overrides the certification tolerance") {
  // tolerance 0.2 softens the containment test past the 0.1-wide gap
  const RunResult loose = run_cli(
      "verify --polygon \"0,0;1,0;1,1;0,1\" --lattice \"0,1.1;1,0\" --mode covering",
      "LATTICEQ_TOL=0.2");
  CHECK(loose.exit_code == 0);
  CHECK(parse_report(loose)["tolerance"].get<double>() == doctest::Approx(0.2));
  CHECK(run_cli("quad --x 0.5 --y 0.5", "LATTICEQ_TOL=abc").exit_code == 2);
}

TEST_SUITE_END();

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    if (argv[i][0] != '-') {
      g_bin = argv[i];
      break;
    }
  }
  if (g_bin.empty()) {
    std::fprintf(stderr, "usage: cli_tests <path-to-latticeq-binary> [doctest args]\n");
    return 1;
  }
  doctest::Context ctx;
  ctx.applyCommandLine(1, argv);
  return ctx.run();
}

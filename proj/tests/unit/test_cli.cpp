#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "systole/cli.hpp"
#include "systole/report_io.hpp"

using namespace systole;
using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

double real_field(const json& j) { return std::stod(j.get<std::string>()); }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("systole_test_" + name);
}

}  // namespace

TEST_CASE("bound closed-link") {
  const auto r = run_cli({"--format", "json", "bound", "closed-link", "--volume", "0"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(std::abs(real_field(j["bound"]) - 7.35663) < 1e-4);
  CHECK(j["profile"]["cusped_bound"].is_null());

  const auto r2 = run_cli({"--format", "json", "bound", "closed-link", "--volume", "2.5"});
  REQUIRE(r2.code == 0);
  CHECK(real_field(json::parse(r2.out)["bound"]) > 7.35663);
}

TEST_CASE("bound cusped") {
  const auto r = run_cli({"--format", "json", "bound", "cusped", "--volume", "1"});
  REQUIRE(r.code == 0);
  CHECK(std::abs(real_field(json::parse(r.out)["bound"]) - 7.35534) < 1e-5);
  CHECK(run_cli({"bound", "cusped", "--volume", "0"}).code == 2);
  CHECK(run_cli({"bound", "closed-link", "--volume", "-1"}).code == 2);
  CHECK(run_cli({"bound", "cusped", "--volume", "abc"}).code == 2);
  CHECK(run_cli({"bound", "cusped"}).code == 2);
}

TEST_CASE("bound csv and human") {
  const auto csv = run_cli({"--format", "csv", "bound", "cusped", "--volume", "1e6"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("kind,volume,bound,Vc,ell_max,cusped_bound,link_bound,crossing\n", 0) == 0);
  const auto human = run_cli({"bound", "cusped", "--volume", "1e6"});
  REQUIRE(human.code == 0);
  CHECK(human.out.find("cusped systole bound") != std::string::npos);
}

TEST_CASE("element subcommands") {
  auto r = run_cli({"--format", "json", "element", "classify", "--matrix", "[[1,0],[1,0],[0,0],[1,0]]"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["class"] == "parabolic");

  r = run_cli({"--format", "json", "element", "length", "--matrix", "[[2,0],[0,0],[0,0],[0.5,0]]"});
  REQUIRE(r.code == 0);
  CHECK(real_field(json::parse(r.out)["translation_length"]) == doctest::Approx(2 * std::log(2.0)));

  r = run_cli({"element", "length", "--matrix", "[[1,0],[1,0],[0,0],[1,0]]"});
  CHECK(r.code == 1);
  CHECK_FALSE(r.err.empty());

  r = run_cli({"--format", "json", "element", "sphere", "--matrix", "[[1,0],[0,0],[2,0],[1,0]]"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(real_field(j["center"][0]) == doctest::Approx(-0.5));
  CHECK(real_field(j["radius"]) == doctest::Approx(0.5));

  CHECK(run_cli({"element", "sphere", "--matrix", "[[1,0],[1,0],[0,0],[1,0]]"}).code == 1);
  CHECK(run_cli({"element", "classify", "--matrix", "[[1,0],[2,0],[2,0],[4,0]]"}).code == 2);
  CHECK(run_cli({"element", "classify", "--matrix", "[[1,0],[2,0]]"}).code == 2);
  CHECK(run_cli({"element", "classify", "--matrix", "not json"}).code == 2);
}

TEST_CASE("verify subcommands") {
  auto r = run_cli({"--format", "json", "verify", "techlem2", "--vc-points", "10", "--ell-points", "500"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["status"] == "pass");

  r = run_cli({"verify", "techlem2", "--vc-min", "1", "--vc-max", "1", "--vc-points", "1"});
  CHECK(r.code == 2);
  r = run_cli({"--format", "json", "verify", "techlem2", "--vc-min", "1", "--vc-max", "1", "--vc-points", "1",
               "--probe"});
  CHECK(r.code == 1);
  CHECK(real_field(json::parse(r.out)["worst_margin"]) < 0);

  r = run_cli({"verify", "techlem2", "--vc-points", "10", "--ell-points", "500", "--perturb", "0.5"});
  CHECK(r.code == 1);

  r = run_cli({"--format", "csv", "verify", "crossing", "--points", "10"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("claim_id,status,worst_margin,worst_point,points_checked\n", 0) == 0);

  r = run_cli({"--format", "csv", "--seed", "5", "verify", "length-lemma", "--samples", "200"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("claim_id,status,worst_margin,worst_point,points_checked,seed\n", 0) == 0);
  CHECK(r.out.find(",5\n") != std::string::npos);

  r = run_cli({"verify", "cubic", "--vc-points", "20"});
  CHECK(r.code == 0);

  CHECK(run_cli({"verify", "crossing", "--v-min", "5", "--v-max", "1"}).code == 2);
  CHECK(run_cli({"verify", "crossing", "--scale", "cubic"}).code == 2);
}

TEST_CASE("margins csv") {
  const auto path = temp_file("margins.csv");
  const auto r = run_cli({"verify", "techlem2", "--vc-points", "5", "--ell-points", "100", "--margins-csv",
                          path.string()});
  REQUIRE(r.code == 0);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "index,point,margin");
  int lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  CHECK(lines == 5);
  std::filesystem::remove(path);
}

TEST_CASE("outputs are byte stable") {
  const std::vector<std::string> args{"--format", "json", "--jobs", "3", "verify", "techlem2",
                                      "--vc-points", "20", "--ell-points", "300"};
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  CHECK(a.out == b.out);
  std::vector<std::string> one = args;
  one[3] = "1";
  CHECK(run_cli(one).out == a.out);

  const auto l1 = run_cli({"--format", "json", "verify", "length-lemma", "--samples", "300"});
  const auto l2 = run_cli({"--format", "json", "verify", "length-lemma", "--samples", "300"});
  CHECK(l1.out == l2.out);
}

TEST_CASE("bianchi subcommands") {
  auto r = run_cli({"bianchi", "split", "--p", "11", "--d", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "3+√-2\n");
  CHECK(run_cli({"bianchi", "split", "--p", "5", "--d", "2"}).code == 0);
  CHECK(run_cli({"bianchi", "split", "--p", "5", "--d", "2", "--require-split"}).code == 1);
  CHECK(run_cli({"bianchi", "split", "--p", "12"}).code == 2);

  r = run_cli({"bianchi", "index", "--pi", "3,1", "--n", "1"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "660\n");
  CHECK(run_cli({"bianchi", "index", "--pi", "0,1", "--n", "1"}).code == 2);
  CHECK(run_cli({"bianchi", "index", "--pi", "3"}).code == 2);

  r = run_cli({"--format", "csv", "bianchi", "census", "--n-max", "3"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("n,index,volume,trace_lb,systole_lb,ratio\n1,660,", 0) == 0);

  r = run_cli({"--format", "json", "bianchi", "census", "--n-max", "1", "--height", "2"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["enumeration"][0]["elements"].get<int>() > 0);
  CHECK(run_cli({"bianchi", "census", "--d", "5"}).code == 2);

  r = run_cli({"--format", "json", "bianchi", "ideals", "--d", "2", "--bound", "2"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["count"] == 10);
}

TEST_CASE("config file presets defaults and yields to flags") {
  const auto path = temp_file("config.txt");
  {
    std::ofstream f(path);
    f << "# preset\nformat = json\nvolume = 2.5\n";
  }
  auto r = run_cli({"--config", path.string(), "bound", "closed-link"});
  REQUIRE(r.code == 0);
  const auto from_config = json::parse(r.out);
  CHECK(real_field(from_config["volume"]) == 2.5);

  r = run_cli({"--config", path.string(), "bound", "closed-link", "--volume", "0"});
  REQUIRE(r.code == 0);
  CHECK(real_field(json::parse(r.out)["volume"]) == 0.0);

  r = run_cli({"--config", path.string(), "--format", "csv", "bound", "closed-link"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("kind,", 0) == 0);

  {
    std::ofstream f(path);
    f << "volume = banana\n";
  }
  CHECK(run_cli({"--config", path.string(), "bound", "closed-link"}).code == 2);
  CHECK(run_cli({"--config", "/nonexistent/systole.cfg", "bound", "closed-link", "--volume", "1"}).code == 2);
  std::filesystem::remove(path);
}

TEST_CASE("global flags may follow the subcommand") {
  const auto before = run_cli({"--format", "json", "--seed", "9", "verify", "length-lemma", "--samples", "100"});
  const auto after = run_cli({"verify", "length-lemma", "--samples", "100", "--seed", "9", "--format", "json"});
  REQUIRE(after.code == 0);
  CHECK(after.out == before.out);
  CHECK(json::parse(after.out)["seed"] == 9);
}

TEST_CASE("usage errors and help") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"--format", "xml", "bound", "cusped", "--volume", "1"}).code == 2);
  CHECK(run_cli({"--jobs", "0", "bound", "cusped", "--volume", "1"}).code == 2);
  const auto h = run_cli({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("verify") != std::string::npos);
}

TEST_CASE("report rendering") {
  CertificateReport rep{"demo", CertificateStatus::Fail, -0.25, {1.5, 2}, 7, std::nullopt};
  CHECK(to_csv(rep) == "claim_id,status,worst_margin,worst_point,points_checked\ndemo,fail,-0.25,1.5;2,7\n");
  const auto j = json::parse(render(rep, OutputFormat::Json));
  CHECK(j["status"] == "fail");
  CHECK(j["worst_point"][0] == "1.5");
  CHECK_FALSE(j.contains("seed"));
  CHECK(format_real(0.1) == "0.10000000000000001");
}

#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "resurgentia/error.hpp"
#include "resurgentia/tools/cli.hpp"
#include "resurgentia/tools/config.hpp"
#include "resurgentia/tools/verify.hpp"

using namespace resurgentia;
using namespace resurgentia::tools;
using nlohmann::json;

namespace {

struct Run {
  int status = 0;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "resurgentia");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.status = dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("free-energy coefficients") {
  const auto r = run({"coeffs", "--ag", "--max-g", "4"});
  REQUIRE(r.status == 0);
  CHECK(json::parse(r.out) == json::parse(R"(["5/24","5/16","1105/1152"])"));
}

TEST_CASE("large-radius polynomials") {
  const auto r = run({"large-radius", "pols", "--n", "1", "--gmax", "2"});
  REQUIRE(r.status == 0);
  const auto j = json::parse(r.out);
  CHECK(j["pols"][0]["coeffs"] == json::parse(R"({"0":"1","2":"5/12"})"));
  CHECK(j["pols"][1]["coeffs"] == json::parse(R"({"0":"-1/2","1":"1/3","2":"-5/12","3":"5/4","4":"-25/288"})"));
  CHECK(j["pols"][1]["degree"] == 4);
  CHECK(j.contains("convention"));
}

TEST_CASE("connection record") {
  const auto r = run({"connect", "right", "--z", "3", "--sigma2", "1"});
  REQUIRE(r.status == 0);
  const auto j = json::parse(r.out);
  CHECK(j["residual"].get<double>() <= 1e-6);
  CHECK(j["pass"] == true);
}

TEST_CASE("exit codes") {
  CHECK(run({}).status == 2);
  CHECK(run({"no-such-command"}).status == 2);
  CHECK(run({"coeffs", "--no-such-flag"}).status == 2);
  CHECK(run({"--format", "xml", "coeffs", "--ag"}).status == 2);
  const auto r = run({"connect", "left", "--polar", "0.9,-pi", "--sigma2", "5"});
  CHECK(r.status == 1);
  const auto j = json::parse(r.out);
  CHECK(j["error"]["kind"] == "domain empty");
  CHECK(j["error"]["message"].is_string());
}

TEST_CASE("csv output") {
  const auto r = run({"--format", "csv", "--order", "3", "coeffs", "--family", "c"});
  REQUIRE(r.status == 0);
  CHECK(r.out == "k,coeff\n0,1\n1,5/72\n2,385/10368\n3,85085/2239488\n");
}

TEST_CASE("exact output is reproducible") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"alien", "bridge"}, {"large-radius", "h0", "--order", "6"}, {"coeffs", "--family", "Gn", "--n", "3"}}) {
    const auto a = run(args), b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
  }
  const std::vector<std::string> numeric{"sum", "--family", "g", "--interval", "Iplus", "--z", "3"};
  CHECK(run(numeric).out == run(numeric).out);
}

TEST_CASE("symbolic subcommands") {
  const auto b = json::parse(run({"--k-sigma", "4", "--k-e", "4", "alien", "bridge"}).out);
  CHECK(b["zero"] == true);
  CHECK(run({"ode-check", "--family", "H0", "--order", "12"}).status == 0);
  CHECK(run({"alien", "stokes", "--dir", "left"}).status == 0);
  const auto pert = run({"large-radius", "uresidual", "--perturb", "--order", "6"});
  CHECK(pert.status == 0);
  CHECK(json::parse(pert.out)["zero_through"].get<int>() < 5);
}

TEST_CASE("complex and angle parsing") {
  CHECK(parse_complex("3") == std::complex<long double>(3, 0));
  CHECK(parse_complex("0.05i") == std::complex<long double>(0, 0.05L));
  CHECK(parse_complex("-i") == std::complex<long double>(0, -1));
  CHECK(parse_complex("1-2.5i") == std::complex<long double>(1, -2.5L));
  CHECK(parse_complex("1,-2.5") == std::complex<long double>(1, -2.5L));
  CHECK(parse_angle("-pi") == doctest::Approx(-M_PI));
  CHECK(parse_angle("0.25pi") == doctest::Approx(M_PI / 4));
  CHECK(parse_angle("1.2") == doctest::Approx(1.2));
  CHECK_THROWS(parse_complex("x"));
}

TEST_CASE("config precedence") {
  std::istringstream file("# run settings\norder = 32\ntol = 1e-12\nformat = csv\n\nk_sigma = 4\n");
  const auto layer = parse_config(file);
  ConfigLayer flags;
  flags.order = 16;
  const auto cfg = resolve(layer, flags);
  CHECK(cfg.order == 16);
  CHECK(cfg.tol == 1e-12);
  CHECK(cfg.format == Format::csv);
  CHECK(cfg.k_sigma == 4);
  CHECK(cfg.k_e == 6);
  CHECK(cfg.ray_margin == 0.05);

  std::istringstream bad("ordr = 3\n");
  CHECK_THROWS_AS(parse_config(bad), Error);
  std::istringstream neg("tol = -1\n");
  CHECK_THROWS_AS(resolve(parse_config(neg), {}), Error);

  const std::string path = "resurgentia_test_config.txt";
  {
    std::ofstream f(path);
    f << "format = csv\norder = 2\n";
  }
  const auto r = run({"--config", path, "coeffs", "--family", "c"});
  CHECK(r.out == "k,coeff\n0,1\n1,5/72\n2,385/10368\n");
  const auto flag_wins = run({"--config", path, "--order", "1", "coeffs", "--family", "c"});
  CHECK(flag_wins.out == "k,coeff\n0,1\n1,5/72\n");
  std::remove(path.c_str());
}

TEST_CASE("acceptance criteria are registered") {
  CHECK(criterion_count() == 9);
  const auto c1 = run_criterion(1);
  CHECK(c1.pass);
  CHECK(c1.id == 1);
}

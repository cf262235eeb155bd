#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_runner.hpp"
#include "eulerdiff/bernoulli.hpp"
#include "eulerdiff/format.hpp"
#include "json.hpp"

using namespace eulerdiff;

namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

// "key value" plain lines to a map.
std::map<std::string, std::string> fields(const std::string& s) {
  std::map<std::string, std::string> out;
  for (const auto& line : lines(s)) {
    const auto sp = line.find(' ');
    out[line.substr(0, sp)] = line.substr(sp + 1);
  }
  return out;
}

}  // namespace

TEST_CASE("documented examples") {
  auto b = run_cli("bernoulli 12");
  CHECK(b.exit_code == 0);
  CHECK(b.out == "-691/2730\n");

  auto z = fields(run_cli("zeta --j 1").out);
  CHECK(z["coefficient"] == "1/6");
  CHECK(z["pi_power"] == "2");
  CHECK(std::abs(parse_real(z["value"]) - 1.6449340668) < 1e-10);

  CHECK(run_cli("euler-gap --g \"x\" --x 3 --K 10").out == "1.5\n");
}

TEST_CASE("plain output parses back through the textual grammar") {
  CHECK(Rational::parse(lines(run_cli("bernoulli 20").out)[0]) == bernoulli(20));
  CHECK(Polynomial::parse(lines(run_cli("faulhaber 5").out)[0]) == faulhaber(5));
  const auto g = Polynomial::parse("3/2*x^3 - x + 1/7");
  CHECK(Polynomial::parse(lines(run_cli("antidiff --g \"3/2*x^3 - x + 1/7\"").out)[0]) ==
        antidifference_polynomial(g));
  const auto spectral = lines(run_cli("spectral --g x^2 --K 50").out)[0];
  CHECK(Polynomial::parse(spectral).to_string().size() > 0);
  CHECK(Polynomial::parse(spectral).degree() == 3);
  auto pfd = fields(run_cli("pfd --z 0.5+0.5i --K 100").out);
  CHECK_NOTHROW(parse_complex(pfd["value"]));
  CHECK_NOTHROW(parse_complex(pfd["direct"]));
  auto zeta = fields(run_cli("zeta --j 3").out);
  CHECK(Rational::parse(zeta["coefficient"]) == Rational(1, 945));
}

TEST_CASE("json and plain agree") {
  using nlohmann::json;
  const auto gap_plain = lines(run_cli("euler-gap --g x^2 --x 0.7 --K 25").out)[0];
  const auto gap_json = json::parse(run_cli("euler-gap --g x^2 --x 0.7 --K 25 --format json").out);
  CHECK(gap_json["command"] == "euler-gap");
  CHECK(gap_json["meta"]["K"] == 25);
  CHECK(gap_json["result"]["gap"].get<double>() == parse_real(gap_plain));

  auto zp = fields(run_cli("zeta --j 4 --oracle-N 1000").out);
  const auto zj = json::parse(run_cli("--format json zeta --j 4 --oracle-N 1000").out);
  CHECK(zj["result"]["coefficient"] == zp["coefficient"]);
  CHECK(zj["result"]["value"].get<double>() == parse_real(zp["value"]));
  CHECK(zj["result"]["lower"].get<double>() == parse_real(zp["lower"]));
  CHECK(zj["result"]["contains"] == true);
  CHECK(zp["contains"] == "true");
  CHECK(zj["meta"]["K"].is_null());

  const auto pj = json::parse(run_cli("pfd --z 1 --K 1000 --format json").out);
  auto pp = fields(run_cli("pfd --z 1 --K 1000").out);
  CHECK(pj["result"]["value"] == pp["value"]);
  CHECK(pj["result"]["abs_error"].get<double>() == parse_real(pp["abs_error"]));

  // Field order is fixed.
  const auto raw = run_cli("bernoulli 4 --format json").out;
  CHECK(raw.find("\"command\"") < raw.find("\"inputs\""));
  CHECK(raw.find("\"inputs\"") < raw.find("\"result\""));
  CHECK(raw.find("\"result\"") < raw.find("\"meta\""));
}

TEST_CASE("byte-identical across repeats and thread counts") {
  for (const std::string args : {"spectral --g \"x^4 - x\" --K 3000", "pfd --z 0.5+0.5i --K 20000",
                                 "euler-gap --g x^3 --x 1.25 --K 500 --format json", "ode --coeffs 2,-1,-2,1 --g x^2"}) {
    const auto first = run_cli(args).out;
    CHECK(run_cli(args).out == first);
    CHECK(run_cli("--threads 1 " + args).out == first);
    CHECK(run_cli("--threads 4 " + args).out == first);
  }
}

TEST_CASE("ode subcommand") {
  const auto out = lines(run_cli("ode --coeffs -1,0,1 --g 1").out);
  REQUIRE(out.size() == 3);
  CHECK(out[0] == "root -1");
  CHECK(out[1] == "root 1");
  CHECK(out[2] == "solution -1");
  CHECK(lines(run_cli("ode --coeffs 0,1 --g 1").out).back() == "solution x");
}

TEST_CASE("exit codes") {
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("antidiff --g \"x^^2\"").exit_code == 2);
  CHECK(run_cli("antidiff --g \"1/0*x\"").exit_code == 2);
  CHECK(run_cli("spectral --g x --K 0").exit_code == 2);
  CHECK(run_cli("pfd --z 1+i --K").exit_code == 2);
  CHECK(run_cli("pfd --z 0 --K 10").exit_code == 1);
  CHECK(run_cli("ode --coeffs 1,-2,1 --g 1").exit_code == 1);
  CHECK(run_cli("spectral --g x^31 --K 2").exit_code == 1);
  CHECK(run_cli("report nonsense --out /tmp/x.csv").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("report studies write CSV") {
  const auto dir = std::filesystem::temp_directory_path() / "eulerdiff_cli_test";
  std::filesystem::create_directories(dir);
  struct Study {
    std::string name;
    std::string header;
    std::size_t rows;
  };
  for (const Study& s : {Study{"residual-decay", "g,K,median_residual,max_residual", 21},
                         Study{"pfd-convergence", "z,K,abs_error,bound", 20},
                         Study{"ab-comparison", "n,K,j,A_real,A_imag,B,abs_diff", 60}}) {
    const auto path = (dir / (s.name + ".csv")).string();
    const auto r = run_cli("report " + s.name + " --out " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "wrote " + std::to_string(s.rows) + " rows to " + path + "\n");
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == s.header);
    std::size_t count = 0;
    for (std::string line; std::getline(in, line);) ++count;
    CHECK(count == s.rows);
  }
}

// eulerdiff: command-line front end for the difference-equation library.
//
// Exit codes: 0 success, 1 domain error (pole proximity, multiple roots,
// degree overflow, root-finder failure), 2 usage error.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "eulerdiff/bernoulli.hpp"
#include "eulerdiff/format.hpp"
#include "eulerdiff/kernels.hpp"
#include "eulerdiff/ode.hpp"
#include "eulerdiff/pfd.hpp"
#include "eulerdiff/polynomial.hpp"
#include "eulerdiff/spectral.hpp"
#include "eulerdiff/zeta.hpp"

namespace {

using nlohmann::ordered_json;
using namespace eulerdiff;

struct Output {
  std::string command;
  ordered_json inputs = ordered_json::object();
  ordered_json result = ordered_json::object();
  std::optional<long> K;
  std::vector<std::string> plain;
};

// JSON numbers carry exactly the digits the plain output shows.
double printed(double v) { return std::stod(format_real(v)); }

constexpr double kPi = 3.141592653589793238462643383279502884;

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 == 1 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

std::vector<double> unit_grid(std::size_t points) {
  std::vector<double> xs(points);
  for (std::size_t i = 0; i < points; ++i) xs[i] = static_cast<double>(i) / static_cast<double>(points - 1);
  return xs;
}

std::vector<std::complex<double>> parse_complex_list(const std::string& text) {
  std::vector<std::complex<double>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    out.push_back(parse_complex(item));
  }
  if (out.empty()) throw ParseError("empty coefficient list");
  return out;
}

// ---------------------------------------------------------------------------
// Report studies

std::size_t report_residual_decay(std::ostream& csv, const std::vector<Polynomial>& forcings) {
  const std::vector<long> ks{10, 30, 100, 300, 1000, 3000, 10000};
  const auto xs = unit_grid(21);
  csv << "g,K,median_residual,max_residual\n";
  std::size_t rows = 0;
  for (const auto& g : forcings) {
    for (long K : ks) {
      SpectralConfig config;
      config.truncation_order = K;
      const auto residual = difference_residual(spectral_solve(g, config), g, xs);
      csv << g.to_string() << ',' << K << ',' << format_real(median(residual)) << ','
          << format_real(*std::max_element(residual.begin(), residual.end())) << '\n';
      ++rows;
    }
  }
  return rows;
}

std::size_t report_pfd_convergence(std::ostream& csv) {
  const std::vector<std::complex<double>> zs{{1.0, 0.0}, {-1.0, 0.0}, {0.5, 0.5}, {0.0, kPi}, {2.7, 0.0}};
  const std::vector<long> ks{100, 1000, 10000, 100000};
  csv << "z,K,abs_error,bound\n";
  std::size_t rows = 0;
  for (const auto& z : zs) {
    const auto direct = reciprocal_exp_minus_one(z);
    for (long K : ks) {
      const double err = std::abs(pfd_eval(z, K) - direct);
      const double bound = 2.0 * std::abs(z) / (kPi * kPi * static_cast<double>(K));
      csv << format_complex(z) << ',' << K << ',' << format_real(err) << ',' << format_real(bound) << '\n';
      ++rows;
    }
  }
  return rows;
}

std::size_t report_ab_comparison(std::ostream& csv) {
  const std::vector<long> ks{100, 1000, 10000, 100000};
  csv << "n,K,j,A_real,A_imag,B,abs_diff\n";
  std::size_t rows = 0;
  for (unsigned n = 2; n <= 6; ++n) {
    for (long K : ks) {
      const auto t = coefficient_tables(n, K);
      for (unsigned j = 2; j <= n; ++j) {
        const auto a = t.a[n + 1 - j];
        csv << n << ',' << K << ',' << j << ',' << format_real(a.real()) << ',' << format_real(a.imag())
            << ',' << t.b[j] << ',' << format_real(std::abs(a - t.b[j].to_double())) << '\n';
        ++rows;
      }
    }
  }
  return rows;
}

// ---------------------------------------------------------------------------

void emit(const Output& out, bool json) {
  if (json) {
    ordered_json doc;
    doc["command"] = out.command;
    doc["inputs"] = out.inputs;
    doc["result"] = out.result;
    doc["meta"] = ordered_json::object();
    doc["meta"]["K"] = out.K ? ordered_json(*out.K) : ordered_json(nullptr);
    std::cout << doc.dump(2) << '\n';
  } else {
    for (const auto& line : out.plain) std::cout << line << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solve f(x+1) - f(x) = g(x) exactly and by mode sums; even zeta values."};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "plain";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"plain", "json"}));
  std::optional<int> threads;
  app.add_option("--threads", threads, "OpenMP thread count")->check(CLI::PositiveNumber);

  Output out;
  std::function<void()> run;

  // bernoulli N
  unsigned bern_n = 0;
  auto* bern = app.add_subcommand("bernoulli", "Exact Bernoulli number B_N (B_1 = -1/2)");
  bern->add_option("N", bern_n, "Index")->required()->check(CLI::Range(0u, 2000u));
  bern->callback([&] {
    run = [&] {
      out.command = "bernoulli";
      out.inputs["N"] = bern_n;
      const auto b = bernoulli(bern_n).to_string();
      out.result["value"] = b;
      out.plain = {b};
    };
  });

  // faulhaber N
  unsigned faul_n = 0;
  auto* faul = app.add_subcommand("faulhaber", "Polynomial for 1^N + 2^N + ... + x^N");
  faul->add_option("N", faul_n, "Power")->required()->check(CLI::Range(0u, 500u));
  faul->callback([&] {
    run = [&] {
      out.command = "faulhaber";
      out.inputs["N"] = faul_n;
      const auto p = faulhaber(faul_n).to_string();
      out.result["polynomial"] = p;
      out.plain = {p};
    };
  });

  // antidiff --g
  std::string anti_g;
  auto* anti = app.add_subcommand("antidiff", "Exact antidifference f with f(x+1) - f(x) = g, f(0) = 0");
  anti->add_option("--g", anti_g, "Polynomial g, e.g. \"1/2*x^2 - x + 3\"")->required();
  anti->callback([&] {
    run = [&] {
      out.command = "antidiff";
      const auto g = Polynomial::parse(anti_g);
      out.inputs["g"] = g.to_string();
      const auto f = antidifference_polynomial(g).to_string();
      out.result["polynomial"] = f;
      out.plain = {f};
    };
  });

  // spectral --g --K [--uncorrected]
  std::string spec_g;
  long spec_k = 100;
  bool spec_uncorrected = false;
  auto* spec = app.add_subcommand("spectral", "Mode-sum solution truncated at |k| <= K (real parts printed)");
  spec->add_option("--g", spec_g, "Polynomial g")->required();
  spec->add_option("--K", spec_k, "Truncation order")->required()->check(CLI::PositiveNumber);
  spec->add_flag("--uncorrected", spec_uncorrected, "Omit the -g/2 term");
  spec->callback([&] {
    run = [&] {
      out.command = "spectral";
      const auto g = Polynomial::parse(spec_g);
      out.inputs["g"] = g.to_string();
      out.inputs["K"] = spec_k;
      out.inputs["uncorrected"] = spec_uncorrected;
      out.K = spec_k;
      SpectralConfig config;
      config.truncation_order = spec_k;
      config.include_correction = !spec_uncorrected;
      const auto s = spectral_solve(g, config);
      const auto p = s.polynomial_part.real_part_string();
      out.result["polynomial"] = p;
      out.result["max_imag"] = printed(s.polynomial_part.max_imag());
      out.plain = {p};
    };
  });

  // euler-gap --g --x --K
  std::string gap_g;
  double gap_x = 0.0;
  long gap_k = 10;
  auto* gap = app.add_subcommand("euler-gap", "Uncorrected minus corrected mode-sum solution at x");
  gap->add_option("--g", gap_g, "Polynomial g")->required();
  gap->add_option("--x", gap_x, "Evaluation point")->required();
  gap->add_option("--K", gap_k, "Truncation order")->required()->check(CLI::PositiveNumber);
  gap->callback([&] {
    run = [&] {
      out.command = "euler-gap";
      const auto g = Polynomial::parse(gap_g);
      out.inputs["g"] = g.to_string();
      out.inputs["x"] = printed(gap_x);
      out.inputs["K"] = gap_k;
      out.K = gap_k;
      const double v = euler_gap(g, gap_x, gap_k);
      out.result["gap"] = printed(v);
      out.plain = {format_real(v)};
    };
  });

  // pfd --z --K
  std::string pfd_z;
  long pfd_k = 1000;
  auto* pfd = app.add_subcommand("pfd", "Truncated partial fraction expansion of 1/(e^z - 1)");
  pfd->add_option("--z", pfd_z, "Complex point, e.g. 0.5+0.5i")->required();
  pfd->add_option("--K", pfd_k, "Truncation order")->required()->check(CLI::PositiveNumber);
  pfd->callback([&] {
    run = [&] {
      out.command = "pfd";
      const auto z = parse_complex(pfd_z);
      out.inputs["z"] = format_complex(z);
      out.inputs["K"] = pfd_k;
      out.K = pfd_k;
      const auto v = pfd_eval(z, pfd_k);
      const auto direct = reciprocal_exp_minus_one(z);
      const double err = std::abs(v - direct);
      const double bound = 2.0 * std::abs(z) / (kPi * kPi * static_cast<double>(pfd_k));
      out.result["value"] = format_complex(v);
      out.result["direct"] = format_complex(direct);
      out.result["abs_error"] = printed(err);
      out.result["bound"] = printed(bound);
      out.plain = {"value " + format_complex(v), "direct " + format_complex(direct),
                   "abs_error " + format_real(err), "bound " + format_real(bound)};
    };
  });

  // zeta --j [--oracle-N]
  unsigned zeta_j = 1;
  std::optional<long> zeta_n;
  auto* zeta = app.add_subcommand("zeta", "Closed form of zeta(2j), optionally bracketed by partial sums");
  zeta->add_option("--j", zeta_j, "Index j >= 1")->required()->check(CLI::Range(1u, 500u));
  zeta->add_option("--oracle-N", zeta_n, "Partial-sum length for the integral-test bracket")
      ->check(CLI::Range(2L, 100000000L));
  zeta->callback([&] {
    run = [&] {
      out.command = "zeta";
      out.inputs["j"] = zeta_j;
      out.inputs["oracle_N"] = zeta_n ? ordered_json(*zeta_n) : ordered_json(nullptr);
      const auto cf = zeta_even_closed_form(zeta_j);
      const double v = cf.value();
      out.result["closed_form"] = cf.to_string();
      out.result["coefficient"] = cf.coefficient.to_string();
      out.result["pi_power"] = cf.pi_power;
      out.result["value"] = printed(v);
      out.plain = {"closed_form " + cf.to_string(), "coefficient " + cf.coefficient.to_string(),
                   "pi_power " + std::to_string(cf.pi_power), "value " + format_real(v)};
      if (zeta_n) {
        const auto br = zeta_partial_sum(zeta_j, *zeta_n);
        const bool inside = br.contains(v);
        out.result["lower"] = printed(br.lower);
        out.result["upper"] = printed(br.upper);
        out.result["contains"] = inside;
        out.plain.push_back("lower " + format_real(br.lower));
        out.plain.push_back("upper " + format_real(br.upper));
        out.plain.push_back(std::string("contains ") + (inside ? "true" : "false"));
      }
    };
  });

  // ode --coeffs --g
  std::string ode_coeffs;
  std::string ode_g;
  auto* ode = app.add_subcommand("ode", "Solve (a_0 + a_1 D + ... + a_n D^n) f = g for simple roots");
  ode->add_option("--coeffs", ode_coeffs, "Comma-separated complex a_0,...,a_n (ascending)")->required();
  ode->add_option("--g", ode_g, "Polynomial g")->required();
  ode->callback([&] {
    run = [&] {
      out.command = "ode";
      const CharacteristicPolynomial p(parse_complex_list(ode_coeffs));
      const auto g = Polynomial::parse(ode_g);
      ordered_json coeffs = ordered_json::array();
      for (const auto& c : p.coefficients()) coeffs.push_back(format_complex(c));
      out.inputs["coeffs"] = coeffs;
      out.inputs["g"] = g.to_string();
      const auto roots = find_roots(p);
      const auto f = solve_linear_ode(p, g);
      ordered_json rj = ordered_json::array();
      for (const auto& r : roots) {
        rj.push_back(format_complex(r));
        out.plain.push_back("root " + format_complex(r));
      }
      out.result["roots"] = rj;
      out.result["solution"] = f.to_string();
      out.plain.push_back("solution " + f.to_string());
    };
  });

  // report <study> --out
  std::string study;
  std::string report_path;
  std::vector<std::string> report_g;
  auto* report = app.add_subcommand("report", "Write a convergence study as CSV");
  report->add_option("study", study, "residual-decay | pfd-convergence | ab-comparison")
      ->required()
      ->check(CLI::IsMember({"residual-decay", "pfd-convergence", "ab-comparison"}));
  report->add_option("--out", report_path, "CSV output path")->required();
  report->add_option("--g", report_g, "Forcings for residual-decay (default x^2, x^3, x^4)");
  report->footer(
      "CSV columns:\n"
      "  residual-decay:  g,K,median_residual,max_residual  (21-point grid on [0,1])\n"
      "  pfd-convergence: z,K,abs_error,bound\n"
      "  ab-comparison:   n,K,j,A_real,A_imag,B,abs_diff   (A = A(n, n+1-j), B = B(n, j))");
  report->callback([&] {
    run = [&] {
      out.command = "report";
      out.inputs["study"] = study;
      out.inputs["out"] = report_path;
      std::ostringstream csv;
      std::size_t rows = 0;
      if (study == "residual-decay") {
        std::vector<Polynomial> forcings;
        for (const auto& g : report_g) forcings.push_back(Polynomial::parse(g));
        if (forcings.empty()) {
          for (unsigned n = 2; n <= 4; ++n) forcings.push_back(Polynomial::monomial(n));
        }
        rows = report_residual_decay(csv, forcings);
      } else if (study == "pfd-convergence") {
        rows = report_pfd_convergence(csv);
      } else {
        rows = report_ab_comparison(csv);
      }
      std::ofstream file(report_path, std::ios::binary);
      if (!file) throw std::invalid_argument("cannot open '" + report_path + "' for writing");
      file << csv.str();
      out.result["rows"] = rows;
      out.plain = {"wrote " + std::to_string(rows) + " rows to " + report_path};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (threads) kernels::set_threads(*threads);
    run();
    emit(out, format == "json");
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

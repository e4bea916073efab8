#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cayley/errors.hpp"
#include "cayley/group_algebra.hpp"
#include "cayley/report.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitVerify = 4;
constexpr int kExitIo = 5;

long long env_or(const char* name, long long fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  try {
    return std::stoll(v);
  } catch (const std::exception&) {
    return fallback;
  }
}

void write_json(const cayley::json& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::ios_base::failure("cannot open " + path + " for writing");
  out << doc.dump(2) << "\n";
  if (!out) throw std::ios_base::failure("write to " + path + " failed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integrality analysis of Cayley graphs of finite permutation groups"};
  app.require_subcommand(1);

  // caps: CLI flag > environment variable > default
  long long order_cap = env_or("CAYLEY_ORDER_CAP", cayley::kDefaultOrderCap);
  long long oracle_cap = env_or("CAYLEY_ORACLE_CAP", 1500);

  std::string group_spec, set_spec, json_path;
  double tol = 1e-6;
  bool no_oracle = false, expect_integral = false;
  int max_blocks = 20;
  int cor5_n = 4;

  auto* analyze = app.add_subcommand("analyze", "Analyze one (group, set) pair");
  analyze->add_option("--group", group_spec, "Group spec: sym:N|alt:N|dih:N|cyc:N|gens:...[@degree]")
      ->required();
  analyze->add_option("--set", set_spec, "Set spec, e.g. transpositions, star, classof:(1 2), union[A;B]")
      ->required();
  analyze->add_option("--json", json_path, "Write the JSON report to this path");
  analyze->add_flag("--no-oracle", no_oracle, "Skip the dense-eigensolver cross-check");
  analyze->add_option("--tol", tol, "Absolute eigenvalue tolerance (default 1e-6)");
  analyze->add_option("--order-cap", order_cap, "Group enumeration cap");
  analyze->add_option("--oracle-cap", oracle_cap, "Largest |G| for the dense oracle");
  analyze->add_flag("--expect-integral", expect_integral,
                    "Exit 1 when the verdict is non-integral (for CI)");

  auto* census = app.add_subcommand("census", "Certify every inversion-closed class union");
  census->add_option("--group", group_spec, "Group spec")->required();
  census->add_option("--json", json_path, "Write the JSON table to this path");
  census->add_option("--max-blocks", max_blocks, "Largest allowed number of class blocks");
  census->add_option("--order-cap", order_cap, "Group enumeration cap");
  census->add_option("--tol", tol, "Absolute eigenvalue tolerance");

  auto* cor5 = app.add_subcommand("verify-cor5", "Exact group-algebra identity check in sym:n");
  cor5->add_option("--n", cor5_n, "Degree of the symmetric group (n >= 3)")->required();
  cor5->add_option("--order-cap", order_cap, "Group enumeration cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    cayley::AnalysisOptions opts;
    opts.order_cap = order_cap;
    opts.spectrum.tol = tol;
    opts.spectrum.oracle_cap = oracle_cap;
    opts.run_oracle = !no_oracle;

    if (analyze->parsed()) {
      cayley::AnalysisReport report = cayley::run_analysis(group_spec, set_spec, opts);
      std::cout << cayley::analysis_to_text(report);
      if (!json_path.empty()) write_json(cayley::analysis_to_json(report), json_path);
      return (expect_integral && !report.spectrum.integral) ? 1 : 0;
    }
    if (census->parsed()) {
      cayley::CensusResult result = cayley::run_census(group_spec, opts, max_blocks);
      std::cout << cayley::census_to_text(result);
      if (!json_path.empty()) write_json(cayley::census_to_json(result), json_path);
      return 0;
    }
    if (cor5->parsed()) {
      bool ok = cayley::verify_cor5_identity(cor5_n, order_cap);
      std::cout << "cor5 identity in sym:" << cor5_n << ": " << (ok ? "holds exactly" : "FAILS")
                << "\n";
      return ok ? 0 : kExitVerify;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const cayley::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const cayley::VerificationError& e) {
    std::cerr << "internal verification failure: " << e.what() << "\n";
    return kExitVerify;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerify;
  }
  return 0;
}

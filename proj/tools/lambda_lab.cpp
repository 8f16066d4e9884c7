// lambda_lab: verify the lambda-series identities from the command line.
//
//   lambda_lab verify [--digits N] [--max-m M] [--max-p P] [--format text|json|csv]
//                     [--checks id,...] [--eisenstein-k A..B] [--no-timing] [--list]
//   lambda_lab table <family> [--digits N] [--max-m M] [--max-p P] [--format ...]
//   lambda_lab eisenstein --k K --terms N [--tau-im T] [--digits N] [--format ...]
//
// Exit codes: 0 success, 1 a check failed, 2 bad usage.

#include "lambda_lab/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int default_digits() {
  const char* env = std::getenv("LAMBDA_LAB_DIGITS");
  if (env == nullptr || *env == '\0') {
    return 50;
  }
  try {
    std::size_t used = 0;
    int d = std::stoi(env, &used);
    if (used != std::string(env).size()) {
      throw std::invalid_argument(env);
    }
    return d;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("LAMBDA_LAB_DIGITS is not an integer: ") + env);
  }
}

// "2..4" or "3"
void parse_k_range(const std::string& s, lambda_lab::RunConfig& cfg) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      cfg.eisenstein_k_min = cfg.eisenstein_k_max = std::stoi(s);
    } else {
      cfg.eisenstein_k_min = std::stoi(s.substr(0, dots));
      cfg.eisenstein_k_max = std::stoi(s.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("--eisenstein-k expects K or A..B, got " + s);
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace lambda_lab;

  RunConfig cfg;
  std::string format = "text";
  std::string k_range = "2..4";
  std::string family;
  bool list_only = false;
  int eis_k = 2;
  int eis_terms = 10;
  double eis_tau_im = 1.0;

  try {
    cfg.digits = default_digits();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App app{"High-precision checks of Dirichlet lambda series identities"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--digits", cfg.digits, "Decimal digits of precision (>= 10)");
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };

  CLI::App* verify = app.add_subcommand("verify", "Run the verification matrix");
  add_common(verify);
  verify->add_option("--max-m", cfg.max_m, "Largest shift parameter m");
  verify->add_option("--max-p", cfg.max_p, "Largest power / binomial parameter p");
  verify->add_option("--checks", cfg.checks, "Check ids or groups to run")->delimiter(',');
  verify->add_option("--eisenstein-k", k_range, "Eisenstein weights k as K or A..B");
  verify->add_flag("--no-timing", "Report zero timings (byte-reproducible output)")
      ->each([&](const std::string&) { cfg.timing = false; });
  verify->add_flag("--list", list_only, "Print the selected check ids and exit");

  CLI::App* table = app.add_subcommand("table", "Tabulate a series family against its closed form");
  add_common(table);
  table->add_option("family", family, "Family name (lambda-shift-n, taylor, ...)")->required();
  table->add_option("--max-m", cfg.max_m, "Largest shift parameter m");
  table->add_option("--max-p", cfg.max_p, "Largest power / binomial parameter p");

  CLI::App* eis = app.add_subcommand("eisenstein", "Exact q-expansion and lattice comparison");
  add_common(eis);
  eis->add_option("--k", eis_k, "Half the weight (weight is 2k)")->required();
  eis->add_option("--terms", eis_terms, "Number of q-expansion coefficients")->required();
  eis->add_option("--tau-im", eis_tau_im, "Imaginary part of tau for the comparison");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    cfg.format = *parse_format(format);
    parse_k_range(k_range, cfg);
    cfg.validate();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (verify->parsed()) {
      if (list_only) {
        for (const auto& id : planned_checks(cfg)) {
          std::cout << id << "\n";
        }
        return 0;
      }
      const RunReport report = cmd_verify(cfg);
      std::cout << render_report(report, cfg.format);
      return exit_code(report);
    }
    if (table->parsed()) {
      const auto names = table_names();
      if (std::find(names.begin(), names.end(), family) == names.end()) {
        std::cerr << "error: unknown family '" << family << "'; known:";
        for (const auto& n : names) {
          std::cerr << " " << n;
        }
        std::cerr << "\n";
        return kExitUsage;
      }
      std::cout << render_table(cmd_table(family, cfg), cfg.format);
      return 0;
    }
    if (eis->parsed()) {
      if (eis_k < 1 || eis_terms < 1 || !(eis_tau_im > 0)) {
        std::cerr << "error: need --k >= 1, --terms >= 1 and --tau-im > 0\n";
        return kExitUsage;
      }
      const EisensteinReport report = cmd_eisenstein(eis_k, eis_terms, eis_tau_im, cfg);
      std::cout << render_eisenstein(report, cfg.format);
      return !report.compared || report.pass ? 0 : kExitFail;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}

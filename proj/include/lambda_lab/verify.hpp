// The verification matrix behind the command-line tool: every identity is
// turned into a named check comparing two independently computed values.

#ifndef LAMBDA_LAB_VERIFY_HPP
#define LAMBDA_LAB_VERIFY_HPP

#include "lambda_lab/closedform.hpp"
#include "lambda_lab/series.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace lambda_lab {

enum class OutputFormat { Text, Json, Csv };

std::optional<OutputFormat> parse_format(const std::string& s);
std::string format_name(OutputFormat f);

struct RunConfig {
  int digits = 50;
  int max_m = 10;
  int max_p = 8;
  int eisenstein_k_min = 2;
  int eisenstein_k_max = 4;
  OutputFormat format = OutputFormat::Text;
  /// Check ids or groups ("thm4.7" selects "thm4.7/p=1", ...). Empty = all.
  std::vector<std::string> checks;
  /// Off: elapsed times are reported as 0 so reports are byte-reproducible.
  bool timing = true;

  /// Throws std::invalid_argument for digits < 10 or non-positive ranges.
  void validate() const;
};

struct CheckResult {
  std::string check_id;
  std::string lhs;
  std::string rhs;
  std::string abs_diff;
  std::string bound;
  bool pass = false;
  long elapsed_ms = 0;
  std::string closed_form;  // symbolic right-hand side where one exists
};

struct RunReport {
  RunConfig config;
  std::vector<CheckResult> results;
  long wall_ms = 0;

  int passed() const;
  int failed() const;
};

/// Group of a check id: the part before '/'.
std::string check_group(const std::string& id);
/// True when the filter is empty or names the id or its group.
bool check_selected(const RunConfig& config, const std::string& id);
/// All check ids the configuration would run, in report order.
std::vector<std::string> planned_checks(const RunConfig& config);

/// Runs the selected checks in their fixed order.
RunReport cmd_verify(const RunConfig& config);
/// 0 when every check passed, 1 otherwise.
int exit_code(const RunReport& report);

nlohmann::json report_json(const RunReport& report);
std::string render_report(const RunReport& report, OutputFormat format);

/// Closed form matching a series family.
ClosedForm closed_form_for(const SeriesFamily& f);

struct TableRow {
  int index = 0;
  std::string closed_form;
  std::string closed_value;
  std::string direct_value;
  std::string abs_diff;
};

struct TableReport {
  std::string family;
  std::vector<TableRow> rows;
};

/// Rows for a series family name ("lambda-shift-n", ...) or "taylor".
/// Throws std::invalid_argument for unknown names.
TableReport cmd_table(const std::string& family, const RunConfig& config);
std::vector<std::string> table_names();
std::string render_table(const TableReport& table, OutputFormat format);

struct EisensteinReport {
  int k = 1;
  std::vector<std::string> coefficient_forms;  // index 0 is the constant term
  std::vector<std::string> rational_parts;
  bool compared = false;
  std::string notice;  // set when the lattice comparison is unavailable
  std::string lattice_value;
  std::string expansion_value;
  std::string abs_diff;
  std::string bound;
  bool pass = false;
};

/// Exact coefficients for weight 2k and, for k >= 2, the lattice sum against
/// the expansion at tau = i tau_im. Throws std::invalid_argument for k < 1.
EisensteinReport cmd_eisenstein(int k, int n_terms, double tau_im, const RunConfig& config);
std::string render_eisenstein(const EisensteinReport& report, OutputFormat format);

}  // namespace lambda_lab

#endif  // LAMBDA_LAB_VERIFY_HPP

#include "lambda_lab/verify.hpp"

#include <iomanip>
#include <sstream>

namespace lambda_lab {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  return out + "\"";
}

std::string csv_line(std::initializer_list<std::string> fields) {
  std::string out;
  bool first = true;
  for (const auto& f : fields) {
    if (!first) {
      out += ',';
    }
    out += csv_field(f);
    first = false;
  }
  return out + "\n";
}

}  // namespace

nlohmann::json report_json(const RunReport& report) {
  using nlohmann::json;
  const RunConfig& c = report.config;
  json ks = json::array();
  for (int k = c.eisenstein_k_min; k <= c.eisenstein_k_max; ++k) {
    ks.push_back(k);
  }
  json config = {{"digits", c.digits},
                 {"max_m", c.max_m},
                 {"max_p", c.max_p},
                 {"eisenstein_k", ks},
                 {"format", format_name(c.format)},
                 {"checks", c.checks}};
  json results = json::array();
  for (const auto& r : report.results) {
    results.push_back({{"check_id", r.check_id},
                       {"lhs", r.lhs},
                       {"rhs", r.rhs},
                       {"abs_diff", r.abs_diff},
                       {"bound", r.bound},
                       {"status", r.pass ? "pass" : "fail"},
                       {"elapsed_ms", r.elapsed_ms},
                       {"closed_form", r.closed_form}});
  }
  return {{"config", config},
          {"results", results},
          {"summary",
           {{"passed", report.passed()}, {"failed", report.failed()}, {"wall_ms", report.wall_ms}}}};
}

std::string render_report(const RunReport& report, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Json:
      os << report_json(report).dump(2) << "\n";
      break;
    case OutputFormat::Csv:
      os << "check_id,status,lhs,rhs,abs_diff,bound,elapsed_ms,closed_form\n";
      for (const auto& r : report.results) {
        os << csv_line({r.check_id, r.pass ? "pass" : "fail", r.lhs, r.rhs, r.abs_diff, r.bound,
                        std::to_string(r.elapsed_ms), r.closed_form});
      }
      break;
    case OutputFormat::Text:
      for (const auto& r : report.results) {
        os << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(28) << r.check_id
           << " |diff| " << r.abs_diff << " <= " << r.bound;
        if (!r.closed_form.empty()) {
          os << "   " << r.closed_form;
        }
        os << "\n";
        if (!r.pass) {
          os << "     lhs " << r.lhs << "\n     rhs " << r.rhs << "\n";
        }
      }
      os << report.passed() << " passed, " << report.failed() << " failed";
      if (report.config.timing) {
        os << " in " << report.wall_ms << " ms";
      }
      os << "\n";
      break;
  }
  return os.str();
}

std::string render_table(const TableReport& table, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Json: {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& r : table.rows) {
        rows.push_back({{"index", r.index},
                        {"closed_form", r.closed_form},
                        {"closed_value", r.closed_value},
                        {"direct_value", r.direct_value},
                        {"abs_diff", r.abs_diff}});
      }
      os << nlohmann::json{{"family", table.family}, {"rows", rows}}.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv:
      os << "index,closed_form,closed_value,direct_value,abs_diff\n";
      for (const auto& r : table.rows) {
        os << csv_line({std::to_string(r.index), r.closed_form, r.closed_value, r.direct_value,
                        r.abs_diff});
      }
      break;
    case OutputFormat::Text:
      os << table.family << "\n";
      for (const auto& r : table.rows) {
        os << std::setw(3) << r.index << "  " << r.closed_form << "\n"
           << "     closed " << r.closed_value << "\n"
           << "     direct " << r.direct_value << "   |diff| " << r.abs_diff << "\n";
      }
      break;
  }
  return os.str();
}

std::string render_eisenstein(const EisensteinReport& report, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Json: {
      nlohmann::json coeffs = nlohmann::json::array();
      for (std::size_t n = 0; n < report.coefficient_forms.size(); ++n) {
        coeffs.push_back({{"n", n},
                          {"closed_form", report.coefficient_forms[n]},
                          {"rational_part", report.rational_parts[n]}});
      }
      nlohmann::json j = {{"k", report.k}, {"weight", 2 * report.k}, {"coefficients", coeffs}};
      if (report.compared) {
        j["comparison"] = {{"lattice", report.lattice_value},
                           {"expansion", report.expansion_value},
                           {"abs_diff", report.abs_diff},
                           {"bound", report.bound},
                           {"status", report.pass ? "pass" : "fail"}};
      }
      if (!report.notice.empty()) {
        j["notice"] = report.notice;
      }
      os << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv:
      os << "n,closed_form,rational_part\n";
      for (std::size_t n = 0; n < report.coefficient_forms.size(); ++n) {
        os << csv_line({std::to_string(n), report.coefficient_forms[n], report.rational_parts[n]});
      }
      if (report.compared) {
        os << csv_line({"lattice", report.lattice_value, ""});
        os << csv_line({"expansion", report.expansion_value, ""});
        os << csv_line({"abs_diff", report.abs_diff, report.bound});
      }
      if (!report.notice.empty()) {
        os << csv_line({"notice", report.notice, ""});
      }
      break;
    case OutputFormat::Text:
      os << "weight " << 2 * report.k << " q-expansion coefficients\n";
      for (std::size_t n = 0; n < report.coefficient_forms.size(); ++n) {
        os << "  q^" << std::left << std::setw(4) << n << report.coefficient_forms[n]
           << "   (rational part " << report.rational_parts[n] << ")\n";
      }
      if (report.compared) {
        os << "lattice   " << report.lattice_value << "\n"
           << "expansion " << report.expansion_value << "\n"
           << (report.pass ? "PASS" : "FAIL") << " |diff| " << report.abs_diff
           << " <= " << report.bound << "\n";
      }
      if (!report.notice.empty()) {
        os << report.notice << "\n";
      }
      break;
  }
  return os.str();
}

}  // namespace lambda_lab

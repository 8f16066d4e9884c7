#include "lambda_lab/verify.hpp"

#include "lambda_lab/analysis.hpp"
#include "lambda_lab/eisenstein.hpp"
#include "lambda_lab/specfun.hpp"

#include <chrono>
#include <functional>
#include <sstream>

namespace lambda_lab {

namespace mp = boost::multiprecision;

namespace {

using Clock = std::chrono::steady_clock;

BigRational q(long n, long d = 1) { return BigRational(BigInt(n), BigInt(d)); }

ClosedForm pi_term(const BigRational& c, int e) { return ClosedForm(c, Monomial{e, 0, 0, 0}); }

ClosedForm lam(const BigRational& c, int k, int pi_exp) {
  return c * from_lambda(k).times_pi_power(pi_exp);
}

const ClosedForm kLog2 = ClosedForm::log2();
const ClosedForm kLogPi = ClosedForm::logpi();

// Hand-entered statements of the worked special cases.
ClosedForm stated_nm(int m) {
  switch (m) {
    case 1:
      return kLog2 - kLogPi + ClosedForm(q(1)) - lam(q(4), 3, -2);
    case 2:
      return kLog2 - kLogPi + ClosedForm(q(3, 2)) - lam(q(96, 7), 3, -2) + lam(q(48), 5, -4);
    case 3:
      return kLog2 - kLogPi + ClosedForm(q(11, 6)) - lam(q(240, 7), 3, -2) +
             lam(q(11520, 31), 5, -4) - lam(q(1440), 7, -6);
  }
  throw std::invalid_argument("stated_nm: m must be 1, 2 or 3");
}

ClosedForm stated_2nm(int m) {
  const ClosedForm half_log_2pi = q(1, 2) * (kLog2 + kLogPi);
  switch (m) {
    case 1:
      return ClosedForm(q(1)) - half_log_2pi;
    case 2:
      return q(1, 2) * (kLog2 - kLogPi) + ClosedForm(q(1, 2)) - lam(q(2), 3, -2);
    case 3:
      return ClosedForm(q(4, 3)) - half_log_2pi - lam(q(24, 7), 3, -2);
  }
  throw std::invalid_argument("stated_2nm: m must be 1, 2 or 3");
}

ClosedForm stated_binom_falling(int p) {
  switch (p) {
    case 1:
      return ClosedForm(q(1, 16)) + pi_term(q(1, 48), 2);
    case 2:
      return ClosedForm(q(-1, 16)) + pi_term(q(1, 24), 2);
    case 3:
      return ClosedForm(q(3, 32)) + pi_term(q(1, 480), 4);
  }
  throw std::invalid_argument("stated_binom_falling: p must be 1, 2 or 3");
}

ClosedForm stated_npow(int p) {
  switch (p) {
    case 1:
      return ClosedForm(q(1, 16)) + pi_term(q(1, 48), 2);
    case 2:
      return pi_term(q(1, 32), 2);
    case 3:
      return ClosedForm(q(-1, 128)) + pi_term(q(7, 192), 2) + pi_term(q(1, 1920), 4);
  }
  throw std::invalid_argument("stated_npow: p must be 1, 2 or 3");
}

ClosedForm stated_zeta_binom_falling(int p) {
  switch (p) {
    case 1:
      return pi_term(q(1, 16), 2);
    case 2:
      return pi_term(q(1, 8), 2);
    case 3:
      return pi_term(q(1, 32), 4);
  }
  throw std::invalid_argument("stated_zeta_binom_falling: p must be 1, 2 or 3");
}

struct Outcome {
  Real lhs;
  Real rhs;
  Real diff;
  Real bound;
  bool pass = false;
  std::string closed_form;
};

using CheckFn = std::function<Outcome(const PrecisionContext&)>;

struct CheckSpec {
  std::string id;
  CheckFn run;
};

Outcome compare(const Real& lhs, const Real& rhs, const Real& bound, std::string form) {
  Outcome o;
  o.lhs = lhs;
  o.rhs = rhs;
  o.diff = mp::abs(lhs - rhs);
  o.bound = bound;
  o.pass = o.diff <= bound;
  o.closed_form = std::move(form);
  return o;
}

Outcome exact(const ClosedForm& derived, const ClosedForm& stated, const PrecisionContext& ctx) {
  Outcome o;
  o.lhs = cf_eval(derived, ctx);
  o.rhs = cf_eval(stated, ctx);
  o.diff = mp::abs(cf_eval(derived - stated, ctx));
  o.bound = 0;
  o.pass = derived == stated;
  o.closed_form = to_string(stated);
  return o;
}

Real series_bound(const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  return mp::pow(Real(10), -(ctx.decimal_digits() - 10));
}

Real power_bound(const PrecisionContext& ctx, int num, int den) {
  PrecisionScope scope(ctx);
  return mp::pow(Real(10), -(ctx.decimal_digits() * num / den));
}

CheckFn series_check(SeriesFamily f, ClosedForm form) {
  return [f, form](const PrecisionContext& ctx) {
    SumResult s = sum_family(f, ctx);
    return compare(s.value, cf_eval(form, ctx), series_bound(ctx), to_string(form));
  };
}

std::string tau_label(const char* text) { return std::string("tau=") + text; }

std::vector<CheckSpec> build_checks(const RunConfig& c) {
  std::vector<CheckSpec> v;
  auto add = [&](std::string id, CheckFn fn) { v.push_back({std::move(id), std::move(fn)}); };
  auto m_id = [](const char* g, int m) { return std::string(g) + "/m=" + std::to_string(m); };
  auto p_id = [](const char* g, int p) { return std::string(g) + "/p=" + std::to_string(p); };

  add("prop2.1/plain", series_check({FamilyTag::LambdaPlain, 0}, closed_lambda_plain()));
  add("prop2.1/over-n", series_check({FamilyTag::LambdaOverN, 0}, closed_lambda_over_n()));
  for (int m = 1; m <= c.max_m; ++m) {
    add(m_id("thm1.3", m), series_check({FamilyTag::LambdaShiftN, m}, closed_nm(m)));
  }
  for (int m = 1; m <= c.max_m; ++m) {
    add(m_id("thm1.4", m), series_check({FamilyTag::LambdaShift2N, m}, closed_2nm(m)));
  }
  for (int m = 1; m <= 3; ++m) {
    add(m_id("cor1.5", m),
        [m](const PrecisionContext& ctx) { return exact(closed_nm(m), stated_nm(m), ctx); });
  }
  for (int m = 1; m <= 3; ++m) {
    add(m_id("cor1.6", m),
        [m](const PrecisionContext& ctx) { return exact(closed_2nm(m), stated_2nm(m), ctx); });
  }
  for (int m = 1; m <= c.max_m; ++m) {
    add(m_id("thm1.1", m), series_check({FamilyTag::ZetaShiftN, m}, closed_zeta_nm(m)));
  }
  for (int m = 1; m <= c.max_m; ++m) {
    add(m_id("thm1.2", m), series_check({FamilyTag::ZetaShift2N, m}, closed_zeta_2nm(m)));
  }
  add("eq1.2", series_check({FamilyTag::ZetaPlain, 0}, ClosedForm(q(3, 4))));
  add("eq1.3", series_check({FamilyTag::ZetaOverN, 0}, kLog2));
  add("eq1.4", series_check({FamilyTag::ZetaShiftN, 1}, ClosedForm(q(3, 2)) - kLogPi));
  for (int r = 1; r <= 2; ++r) {
    add("rem1.7/variant=" + std::to_string(r),
        series_check({FamilyTag::ZetaQuarterShift, r}, closed_remark_sums(r)));
  }
  add("rem1.7/exact", [](const PrecisionContext& ctx) {
    return exact(closed_zeta_nm(1) - closed_nm(1), closed_remark_sums(1), ctx);
  });
  for (int n = 0; n <= c.max_p; ++n) {
    add("thm4.1/n=" + std::to_string(n), [n](const PrecisionContext& ctx) {
      const ClosedForm form = closed_taylor_coeff(n);
      PrecisionScope scope(ctx);
      const Real lhs = n == 0 ? f_eval(Real(1) / 2, ctx) : taylor_coeff_numeric(n, ctx);
      return compare(lhs, cf_eval(form, ctx), series_bound(ctx), to_string(form));
    });
  }
  for (int n = 1; n <= c.max_p; ++n) {
    add("thm4.1-forms/n=" + std::to_string(n), [n](const PrecisionContext& ctx) {
      return exact(closed_taylor_coeff_lambda_form(n), closed_taylor_coeff(n), ctx);
    });
  }
  for (int p = 1; p <= c.max_p; ++p) {
    add(p_id("thm4.3", p), series_check({FamilyTag::LambdaBinom, p}, closed_binom(p)));
  }
  for (int p = 1; p <= std::min(3, c.max_p); ++p) {
    add(p_id("ex4.4", p), [p](const PrecisionContext& ctx) {
      return exact(closed_binom_falling(p), stated_binom_falling(p), ctx);
    });
  }
  for (int p = 1; p <= c.max_p; ++p) {
    add(p_id("thm4.7", p), series_check({FamilyTag::LambdaNPow, p}, closed_npow(p)));
  }
  for (int p = 1; p <= std::min(3, c.max_p); ++p) {
    add(p_id("ex4.8", p),
        [p](const PrecisionContext& ctx) { return exact(closed_npow(p), stated_npow(p), ctx); });
  }
  for (int p = 1; p <= c.max_p; ++p) {
    add(p_id("cor4.5", p), series_check({FamilyTag::ZetaBinomQuarter, p}, closed_zeta_binom(p)));
  }
  for (int p = 1; p <= std::min(3, c.max_p); ++p) {
    add(p_id("ex4.6", p), [p](const PrecisionContext& ctx) {
      return exact(closed_zeta_binom_falling(p), stated_zeta_binom_falling(p), ctx);
    });
  }
  for (int m = 1; m <= 5; ++m) {
    for (int k = 1; k <= 5; ++k) {
      add("lem2.5/m=" + std::to_string(m) + ",k=" + std::to_string(k),
          [m, k](const PrecisionContext& ctx) {
            const ClosedForm form = integral_cos_form(m, k);
            return compare(integral_cos_quad(m, k, ctx), cf_eval(form, ctx),
                           power_bound(ctx, 1, 2), to_string(form));
          });
    }
  }
  for (int m = 1; m <= 6; ++m) {
    add(m_id("eq1.17", m), [m](const PrecisionContext& ctx) {
      const ClosedForm form = integral_logcos_form(m);
      return compare(integral_logcos_quad(m, ctx), cf_eval(form, ctx), power_bound(ctx, 2, 5),
                     to_string(form));
    });
  }
  for (int m = 0; m <= 8; ++m) {
    add(m_id("lem2.7", m), [m](const PrecisionContext& ctx) {
      const ClosedForm form = integral_rational_form(m);
      return compare(integral_rational_quad(m, ctx), cf_eval(form, ctx), power_bound(ctx, 1, 2),
                     to_string(form));
    });
  }
  for (int m : {0, 1, 3}) {
    add(m_id("lem2.6", m), [m](const PrecisionContext& ctx) {
      LimitCheck l = limit_logcos_check(m, ctx);
      PrecisionScope scope(ctx);
      return compare(l.extrapolated, l.target, Real(1) / 100000,
                     to_string(q(2) * kLog2 - kLogPi));
    });
  }
  const std::vector<std::pair<const char*, std::pair<long, long>>> xs = {
      {"0.1", {1, 10}}, {"0.25", {1, 4}}, {"0.4", {2, 5}}};
  for (const auto& [label, frac] : xs) {
    const long num = frac.first;
    const long den = frac.second;
    add(std::string("prop2.2a/x=") + label, [num, den](const PrecisionContext& ctx) {
      PrecisionScope scope(ctx);
      PointwiseCheck p = tan_pf_check(Real(num) / den, 100000, ctx);
      return compare(p.lhs, p.rhs, 2 * mp::abs(p.tail_estimate), "-pi tan(pi x)");
    });
  }
  for (const auto& [label, frac] : xs) {
    const long num = frac.first;
    const long den = frac.second;
    add(std::string("prop2.2b/x=") + label, [num, den](const PrecisionContext& ctx) {
      PrecisionScope scope(ctx);
      PointwiseCheck p = cos_product_check(Real(num) / den, 100000, ctx);
      return compare(p.lhs, p.rhs, 2 * mp::abs(p.tail_estimate), "cos(pi x)");
    });
  }
  const std::vector<std::pair<const char*, std::pair<long, long>>> taus = {
      {"0.8i", {4, 5}}, {"i", {1, 1}}, {"1.5i", {3, 2}}};
  for (int k = c.eisenstein_k_min; k <= c.eisenstein_k_max; ++k) {
    if (k < 2) {
      continue;  // the weight-2 lattice sum is not absolutely convergent
    }
    for (const auto& [label, frac] : taus) {
      const long num = frac.first;
      const long den = frac.second;
      add("prop2.4/k=" + std::to_string(k) + "," + tau_label(label),
          [k, num, den](const PrecisionContext& ctx) {
            PrecisionScope scope(ctx);
            const Complex tau(Real(0), Real(num) / den);
            const QExpansion e = qexpansion(k, 40);
            ComplexEstimate lat = lattice_sum(k, tau, 200, ctx);
            ComplexEstimate ser = qexpansion_eval(e, tau, ctx);
            Outcome o = compare(lat.value.re, ser.value.re, lat.bound + ser.bound,
                                to_string(e.constant_exact) + " + ...");
            o.diff = abs(lat.value - ser.value);
            o.pass = o.diff <= o.bound;
            return o;
          });
    }
  }
  for (int kk : {2, 3}) {
    add("cor2.3/kk=" + std::to_string(kk) + ",tau=i", [kk](const PrecisionContext& ctx) {
      PrecisionScope scope(ctx);
      FourierCheck f = odd_fourier_check(kk, Complex(Real(0), Real(1)), 100000, 40, ctx);
      // For tau = i both sides are real when kk is even and imaginary when odd.
      const Real& l = kk % 2 == 0 ? f.lhs.re : f.lhs.im;
      const Real& r = kk % 2 == 0 ? f.rhs.re : f.rhs.im;
      Outcome o = compare(l, r, f.lhs_tail + f.rhs_tail, "(-2 pi i)^kk/(kk-1)! sum (-1)^m m^(kk-1) q^m");
      o.diff = abs(f.lhs - f.rhs);
      o.pass = o.diff <= o.bound;
      return o;
    });
  }
  return v;
}

}  // namespace

std::optional<OutputFormat> parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  return std::nullopt;
}

std::string format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::Text:
      return "text";
    case OutputFormat::Json:
      return "json";
    case OutputFormat::Csv:
      return "csv";
  }
  return "text";
}

void RunConfig::validate() const {
  if (digits < PrecisionContext::kMinDigits) {
    throw std::invalid_argument("digits must be >= " + std::to_string(PrecisionContext::kMinDigits));
  }
  if (max_m < 1 || max_p < 1) {
    throw std::invalid_argument("max-m and max-p must be >= 1");
  }
  if (eisenstein_k_min < 1 || eisenstein_k_max < eisenstein_k_min) {
    throw std::invalid_argument("invalid Eisenstein weight range");
  }
}

int RunReport::passed() const {
  int n = 0;
  for (const auto& r : results) {
    n += r.pass ? 1 : 0;
  }
  return n;
}

int RunReport::failed() const { return static_cast<int>(results.size()) - passed(); }

std::string check_group(const std::string& id) { return id.substr(0, id.find('/')); }

bool check_selected(const RunConfig& config, const std::string& id) {
  if (config.checks.empty()) {
    return true;
  }
  const std::string group = check_group(id);
  for (const auto& c : config.checks) {
    if (c == id || c == group) {
      return true;
    }
  }
  return false;
}

std::vector<std::string> planned_checks(const RunConfig& config) {
  std::vector<std::string> ids;
  for (const auto& spec : build_checks(config)) {
    if (check_selected(config, spec.id)) {
      ids.push_back(spec.id);
    }
  }
  return ids;
}

RunReport cmd_verify(const RunConfig& config) {
  config.validate();
  const auto start = Clock::now();
  PrecisionContext ctx(config.digits);
  RunReport report;
  report.config = config;
  for (const auto& spec : build_checks(config)) {
    if (!check_selected(config, spec.id)) {
      continue;
    }
    CheckResult r;
    r.check_id = spec.id;
    const auto t0 = Clock::now();
    try {
      Outcome o = spec.run(ctx);
      PrecisionScope scope(ctx);
      r.lhs = to_decimal(o.lhs, config.digits);
      r.rhs = to_decimal(o.rhs, config.digits);
      r.abs_diff = to_decimal(o.diff, 3);
      r.bound = to_decimal(o.bound, 3);
      r.pass = o.pass;
      r.closed_form = o.closed_form;
    } catch (const std::exception& e) {
      r.lhs = r.rhs = r.abs_diff = r.bound = "nan";
      r.pass = false;
      r.closed_form = std::string("error: ") + e.what();
    }
    if (config.timing) {
      r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    }
    report.results.push_back(std::move(r));
  }
  if (config.timing) {
    report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  }
  return report;
}

int exit_code(const RunReport& report) { return report.failed() == 0 ? 0 : 1; }

ClosedForm closed_form_for(const SeriesFamily& f) {
  f.validate();
  switch (f.tag) {
    case FamilyTag::LambdaPlain:
      return closed_lambda_plain();
    case FamilyTag::LambdaOverN:
      return closed_lambda_over_n();
    case FamilyTag::LambdaShiftN:
      return closed_nm(f.param);
    case FamilyTag::LambdaShift2N:
      return closed_2nm(f.param);
    case FamilyTag::LambdaBinom:
      return closed_binom(f.param);
    case FamilyTag::LambdaNPow:
      return closed_npow(f.param);
    case FamilyTag::ZetaPlain:
      return closed_zeta_plain();
    case FamilyTag::ZetaOverN:
      return closed_zeta_over_n();
    case FamilyTag::ZetaShiftN:
      return closed_zeta_nm(f.param);
    case FamilyTag::ZetaShift2N:
      return closed_zeta_2nm(f.param);
    case FamilyTag::ZetaQuarterShift:
      return closed_remark_sums(f.param);
    case FamilyTag::ZetaBinomQuarter:
      return closed_zeta_binom(f.param);
  }
  throw std::logic_error("closed_form_for: unknown family");
}

std::vector<std::string> table_names() {
  std::vector<std::string> names;
  for (FamilyTag t : all_family_tags()) {
    names.push_back(family_tag_name(t));
  }
  names.emplace_back("taylor");
  return names;
}

TableReport cmd_table(const std::string& family, const RunConfig& config) {
  config.validate();
  PrecisionContext ctx(config.digits);
  PrecisionScope scope(ctx);
  TableReport t;
  t.family = family;
  auto row = [&](int index, const ClosedForm& form, const Real& direct) {
    TableRow r;
    r.index = index;
    r.closed_form = to_string(form);
    const Real closed = cf_eval(form, ctx);
    r.closed_value = to_decimal(closed, config.digits);
    r.direct_value = to_decimal(direct, config.digits);
    r.abs_diff = to_decimal(Real(mp::abs(closed - direct)), 3);
    t.rows.push_back(std::move(r));
  };
  if (family == "taylor") {
    for (int n = 0; n <= config.max_p; ++n) {
      const Real direct = n == 0 ? f_eval(Real(1) / 2, ctx) : taylor_coeff_numeric(n, ctx);
      row(n, closed_taylor_coeff(n), direct);
    }
    return t;
  }
  const auto tag = parse_family_tag(family);
  if (!tag) {
    throw std::invalid_argument("unknown family: " + family);
  }
  if (!family_has_param(*tag)) {
    SeriesFamily f{*tag, 0};
    row(0, closed_form_for(f), sum_family(f, ctx).value);
    return t;
  }
  int last = config.max_m;
  if (*tag == FamilyTag::LambdaBinom || *tag == FamilyTag::LambdaNPow ||
      *tag == FamilyTag::ZetaBinomQuarter) {
    last = config.max_p;
  } else if (*tag == FamilyTag::ZetaQuarterShift) {
    last = 2;
  }
  for (int i = 1; i <= last; ++i) {
    SeriesFamily f{*tag, i};
    row(i, closed_form_for(f), sum_family(f, ctx).value);
  }
  return t;
}

EisensteinReport cmd_eisenstein(int k, int n_terms, double tau_im, const RunConfig& config) {
  if (k < 1) {
    throw std::invalid_argument("k must be >= 1");
  }
  if (n_terms < 1) {
    throw std::invalid_argument("terms must be >= 1");
  }
  if (!(tau_im > 0)) {
    throw std::invalid_argument("tau-im must be positive");
  }
  config.validate();
  PrecisionContext ctx(config.digits);
  PrecisionScope scope(ctx);
  EisensteinReport r;
  r.k = k;
  const QExpansion e = qexpansion(k, n_terms);
  r.coefficient_forms.push_back(to_string(e.constant_exact));
  r.rational_parts.push_back(e.constant_exact.coeff(Monomial{2 * k, 0, 0, 0}).str());
  for (const auto& c : e.coeff_exact) {
    r.coefficient_forms.push_back(to_string(c));
    r.rational_parts.push_back(c.coeff(Monomial{2 * k, 0, 0, 0}).str());
  }
  if (k == 1) {
    r.notice = "lattice comparison unsupported (weight 2): the lattice sum is only conditionally convergent";
    return r;
  }
  const Complex tau(Real(0), Real(tau_im));
  // The comparison needs enough expansion terms for a tail below tolerance.
  int n_cmp = std::max(n_terms, 8);
  ComplexEstimate ser;
  for (;;) {
    try {
      ser = qexpansion_eval(qexpansion(k, n_cmp), tau, ctx);
      break;
    } catch (const DomainError&) {
      if (n_cmp > 100000) {
        throw;
      }
      n_cmp *= 2;
    }
  }
  ComplexEstimate lat = lattice_sum(k, tau, 200, ctx);
  r.compared = true;
  r.lattice_value = to_decimal(lat.value.re, config.digits);
  r.expansion_value = to_decimal(ser.value.re, config.digits);
  const Real diff = abs(lat.value - ser.value);
  const Real bound = lat.bound + ser.bound;
  r.abs_diff = to_decimal(diff, 3);
  r.bound = to_decimal(bound, 3);
  r.pass = diff <= bound;
  return r;
}

}  // namespace lambda_lab

// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.
// Criteria are checked as stated; a failure here is reported, not masked.

#include "lambda_lab/analysis.hpp"
#include "lambda_lab/closedform.hpp"
#include "lambda_lab/eisenstein.hpp"
#include "lambda_lab/series.hpp"
#include "lambda_lab/specfun.hpp"
#include "lambda_lab/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace lambda_lab;
namespace mp = boost::multiprecision;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Real ten(int e) { return mp::pow(Real(10), e); }

std::string sci(const Real& x) { return to_decimal(x, 3); }

// Collects failures of one criterion with a short note for each.
struct Tally {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

BigRational q(long n, long d = 1) { return BigRational(BigInt(n), BigInt(d)); }
ClosedForm c(long n, long d = 1) { return ClosedForm(q(n, d)); }
ClosedForm pi_term(long n, long d, int e) { return ClosedForm(q(n, d), Monomial{e, 0, 0, 0}); }
ClosedForm zeta_term(long n, long d, int s, int e) {
  return ClosedForm(q(n, d), Monomial{e, 0, 0, s});
}
ClosedForm lambda_over_pi(long n, long d, int s, int e) {
  const long two_s = 1L << s;
  return zeta_term(n * (two_s - 1), d * two_s, s, -e);
}

const Real& tol40() {
  static const Real t = [] {
    PrecisionScope s(80);
    return ten(-40);
  }();
  return t;
}

// |sum_family(f) - cf_eval(form)| < 1e-40 at 50 digits, optionally timed.
void series_vs_form(Tally& t, const SeriesFamily& f, const ClosedForm& form,
                    const PrecisionContext& ctx, double time_limit = 0) {
  const auto t0 = Clock::now();
  const SumResult s = sum_family(f, ctx);
  const Real diff = mp::abs(s.value - cf_eval(form, ctx));
  const double secs = seconds_since(t0);
  t.expect(diff < tol40(), to_string(f) + " diff " + sci(diff));
  if (time_limit > 0) {
    t.expect(secs < time_limit, to_string(f) + " took " + std::to_string(secs) + " s");
  }
}

Tally criterion1(const PrecisionContext& ctx) {
  Tally t;
  series_vs_form(t, {FamilyTag::LambdaPlain, 0}, c(1, 4), ctx, 5);
  series_vs_form(t, {FamilyTag::LambdaOverN, 0}, q(2) * ClosedForm::log2() - ClosedForm::logpi(),
                 ctx, 5);
  return t;
}

Tally criterion2(const PrecisionContext& ctx) {
  Tally t;
  for (int m = 1; m <= 10; ++m) {
    series_vs_form(t, {FamilyTag::LambdaShiftN, m}, closed_nm(m), ctx, 10);
  }
  return t;
}

Tally criterion3(const PrecisionContext& ctx) {
  Tally t;
  for (int m = 1; m <= 10; ++m) {
    series_vs_form(t, {FamilyTag::LambdaShift2N, m}, closed_2nm(m), ctx, 10);
  }
  return t;
}

Tally criterion4() {
  Tally t;
  const ClosedForm l2 = ClosedForm::log2();
  const ClosedForm lpi = ClosedForm::logpi();
  const ClosedForm log2pi = l2 - lpi;
  const ClosedForm nm[3] = {
      log2pi + c(1) - lambda_over_pi(4, 1, 3, 2),
      log2pi + c(3, 2) - lambda_over_pi(96, 7, 3, 2) + lambda_over_pi(48, 1, 5, 4),
      log2pi + c(11, 6) - lambda_over_pi(240, 7, 3, 2) + lambda_over_pi(11520, 31, 5, 4) -
          lambda_over_pi(1440, 1, 7, 6)};
  const ClosedForm two_nm[3] = {
      c(1) - q(1, 2) * l2 - q(1, 2) * lpi,
      q(1, 2) * log2pi + c(1, 2) - lambda_over_pi(2, 1, 3, 2),
      c(4, 3) - q(1, 2) * l2 - q(1, 2) * lpi - lambda_over_pi(24, 7, 3, 2)};
  for (int m = 1; m <= 3; ++m) {
    t.expect(closed_nm(m) == nm[m - 1], "shift n+" + std::to_string(m) + " differs");
    t.expect(closed_2nm(m) == two_nm[m - 1], "shift 2n+" + std::to_string(m) + " differs");
  }
  return t;
}

Tally criterion5(const PrecisionContext& ctx) {
  Tally t;
  for (int m = 1; m <= 10; ++m) {
    series_vs_form(t, {FamilyTag::ZetaShiftN, m}, closed_zeta_nm(m), ctx);
    series_vs_form(t, {FamilyTag::ZetaShift2N, m}, closed_zeta_2nm(m), ctx);
  }
  // spot values as stated
  struct Spot {
    SeriesFamily f;
    ClosedForm value;
    const char* label;
  };
  const std::vector<Spot> spots = {
      {{FamilyTag::ZetaPlain, 0}, c(3, 4), "sum (zeta(2n)-1) = 3/4"},
      {{FamilyTag::ZetaOverN, 0}, ClosedForm::log2(), "sum (zeta(2n)-1)/n = log 2"},
      {{FamilyTag::ZetaShiftN, 1}, c(3, 2) - ClosedForm::logpi(),
       "sum (zeta(2n)-1)/(n+1) = 3/2 - log pi"},
      {{FamilyTag::ZetaShiftN, 2}, c(7, 4), "sum (zeta(2n)-1)/(n+2) = 7/4"},
  };
  for (const Spot& s : spots) {
    const SumResult r = sum_family(s.f, ctx);
    const Real diff = mp::abs(r.value - cf_eval(s.value, ctx));
    t.expect(diff < tol40(), std::string(s.label) + ": direct sum " + to_decimal(r.value, 20) +
                                 ", |diff| " + sci(diff));
  }
  return t;
}

Tally criterion6(const PrecisionContext& ctx) {
  Tally t;
  const ClosedForm v1 = c(1, 2) - ClosedForm::log2() + zeta_term(7, 2, 3, -2);
  const ClosedForm v2 =
      c(1, 4) - ClosedForm::log2() + zeta_term(9, 1, 3, -2) - zeta_term(93, 2, 5, -4);
  series_vs_form(t, {FamilyTag::ZetaQuarterShift, 1}, v1, ctx);
  series_vs_form(t, {FamilyTag::ZetaQuarterShift, 2}, v2, ctx);
  t.expect(closed_zeta_nm(1) - closed_nm(1) == v1, "symbolic difference is not the n+1 sum");
  return t;
}

Tally criterion7(const PrecisionContext& ctx) {
  Tally t;
  for (int p = 1; p <= 8; ++p) {
    const Real diff = mp::abs(taylor_coeff_numeric(p, ctx) - cf_eval(closed_taylor_coeff(p), ctx));
    t.expect(diff < tol40(), "c_" + std::to_string(p) + " diff " + sci(diff));
    t.expect(closed_taylor_coeff(p) == closed_taylor_coeff_lambda_form(p),
             "c_" + std::to_string(p) + " forms differ");
  }
  return t;
}

Tally criterion8(const PrecisionContext& ctx) {
  Tally t;
  for (int p = 1; p <= 8; ++p) {
    series_vs_form(t, {FamilyTag::LambdaBinom, p}, closed_binom(p), ctx);
    series_vs_form(t, {FamilyTag::LambdaNPow, p}, closed_npow(p), ctx);
  }
  // falling weights n(2n-1)...(2n-p+1) = (p!/2) C(2n, p)
  t.expect(closed_binom_falling(1) == c(1, 16) + pi_term(1, 48, 2), "1/16 + pi^2/48");
  t.expect(closed_binom_falling(2) == c(-1, 16) + pi_term(1, 24, 2), "-1/16 + pi^2/24");
  t.expect(closed_binom_falling(3) == c(3, 32) + pi_term(1, 480, 4), "3/32 + pi^4/480");
  t.expect(closed_npow(1) == c(1, 16) + pi_term(1, 48, 2), "1/16 + pi^2/48 (n weights)");
  t.expect(closed_npow(2) == pi_term(1, 32, 2), "pi^2/32");
  t.expect(closed_npow(3) == c(-1, 128) + pi_term(7, 192, 2) + pi_term(1, 1920, 4),
           "-1/128 + 7pi^2/192 + pi^4/1920");
  return t;
}

Tally criterion9(const PrecisionContext& ctx) {
  Tally t;
  for (int p = 1; p <= 8; ++p) {
    series_vs_form(t, {FamilyTag::ZetaBinomQuarter, p}, closed_zeta_binom(p), ctx);
  }
  t.expect(closed_zeta_binom_falling(1) == pi_term(1, 16, 2), "pi^2/16");
  t.expect(closed_zeta_binom_falling(2) == pi_term(1, 8, 2), "pi^2/8");
  t.expect(closed_zeta_binom_falling(3) == pi_term(1, 32, 4), "pi^4/32");
  return t;
}

Tally criterion10(const PrecisionContext& ctx) {
  Tally t;
  auto timed = [&](const std::string& label, const std::function<Real()>& closed,
                   const std::function<Real()>& numeric, int exp10) {
    const auto t0 = Clock::now();
    const Real diff = mp::abs(closed() - numeric());
    const double secs = seconds_since(t0);
    t.expect(diff < ten(exp10), label + " diff " + sci(diff));
    t.expect(secs < 5, label + " took " + std::to_string(secs) + " s");
  };
  for (int m = 1; m <= 5; ++m) {
    for (int k = 1; k <= 5; ++k) {
      timed("cos m=" + std::to_string(m) + " k=" + std::to_string(k),
            [&] { return integral_cos_closed(m, k, ctx); },
            [&] { return integral_cos_quad(m, k, ctx); }, -25);
    }
  }
  for (int m = 1; m <= 6; ++m) {
    timed("logcos m=" + std::to_string(m), [&] { return integral_logcos_closed(m, ctx); },
          [&] { return integral_logcos_quad(m, ctx); }, -20);
  }
  for (int m = 0; m <= 8; ++m) {
    timed("rational m=" + std::to_string(m), [&] { return integral_rational_closed(m, ctx); },
          [&] { return integral_rational_quad(m, ctx); }, -25);
  }
  return t;
}

Tally criterion11(const PrecisionContext& ctx) {
  Tally t;
  for (int m : {0, 1, 3}) {
    const LimitCheck l = limit_logcos_check(m, ctx);
    const Real err = mp::abs(l.value - l.target);
    const Real ext = mp::abs(l.extrapolated - l.target);
    const std::string label = "m=" + std::to_string(m) + " error at t=7 " + sci(err) +
                              " (extrapolated " + sci(ext) + ")";
    t.expect(err < ten(-5), label);
    if (err < ten(-5)) {
      t.note(label);
    }
  }
  return t;
}

Tally criterion12() {
  Tally t;
  PrecisionContext ctx(30);
  PrecisionScope scope(ctx);
  for (const char* xs : {"0.1", "0.25", "0.4"}) {
    const Real x(xs);
    const PointwiseCheck a = tan_pf_check(x, 100000, ctx);
    const PointwiseCheck a10 = tan_pf_check(x, 1000000, ctx);
    const PointwiseCheck b = cos_product_check(x, 100000, ctx);
    const PointwiseCheck b10 = cos_product_check(x, 1000000, ctx);
    const std::string at = std::string(" at x=") + xs;
    t.expect(a.residual() < ten(-4), "tan residual " + sci(a.residual()) + at);
    t.expect(b.residual() < ten(-4), "cos residual " + sci(b.residual()) + at);
    const Real ra = a.residual() / a10.residual();
    const Real rb = b.residual() / b10.residual();
    t.expect(ra > 5 && ra < 20, "tan shrink factor " + sci(ra) + at);
    t.expect(rb > 5 && rb < 20, "cos shrink factor " + sci(rb) + at);
  }
  return t;
}

Tally criterion13(const PrecisionContext& ctx) {
  Tally t;
  const auto t0 = Clock::now();
  const char* labels[] = {"0.8i", "i", "1.5i"};
  const Real ims[] = {Real(4) / 5, Real(1), Real(3) / 2};
  for (int k = 2; k <= 4; ++k) {
    for (int i = 0; i < 3; ++i) {
      const Complex tau(Real(0), ims[i]);
      const ComplexEstimate lat = lattice_sum(k, tau, 200, ctx);
      const ComplexEstimate ser = qexpansion_eval(qexpansion(k, 40), tau, ctx);
      const Real diff = abs(lat.value - ser.value);
      const Real bound = lat.bound + ser.bound;
      const std::string at = "k=" + std::to_string(k) + " tau=" + labels[i];
      t.expect(diff <= bound, at + " diff " + sci(diff) + " > bound " + sci(bound));
      t.expect(bound <= ten(-8), at + " bound " + sci(bound));
    }
  }
  for (int kk : {2, 3}) {
    const FourierCheck f = odd_fourier_check(kk, Complex(Real(0), Real(1)), 100000, 40, ctx);
    const Real diff = abs(f.lhs - f.rhs);
    t.expect(diff < ten(-4), "odd shifts kk=" + std::to_string(kk) + " diff " + sci(diff));
  }
  const double secs = seconds_since(t0);
  t.expect(secs < 60, "suite took " + std::to_string(secs) + " s");
  return t;
}

Tally criterion14() {
  Tally t;
  {
    PrecisionContext ctx(40);
    PrecisionScope scope(ctx);
    int checked = 0;
    for (FamilyTag tag : all_family_tags()) {
      std::vector<int> params = {0};
      if (tag == FamilyTag::ZetaQuarterShift) {
        params = {1, 2};
      } else if (family_has_param(tag)) {
        params = {1, 2, 3, 5, 8, 10};
      }
      for (int p : params) {
        const SeriesFamily f{tag, p};
        for (long n : {3L, 8L, 20L, 50L}) {
          const SumResult a = partial_sum(f, n, ctx);
          const SumResult b = partial_sum(f, 2 * n, ctx);
          ++checked;
          t.expect(mp::abs(b.value - a.value) <= a.tail_bound,
                   to_string(f) + " n=" + std::to_string(n) + " moved past its bound");
        }
        const SumResult full = sum_family(f, ctx);
        const SumResult twice = partial_sum(f, 2 * full.terms_used, ctx);
        t.expect(mp::abs(twice.value - full.value) <= full.tail_bound,
                 to_string(f) + " full sum moved past its bound");
      }
    }
    t.note(std::to_string(checked) + " doubling checks");
  }
  RunConfig lo;
  lo.digits = 30;
  lo.timing = false;
  RunConfig hi = lo;
  hi.digits = 50;
  const RunReport a = cmd_verify(lo);
  const RunReport b = cmd_verify(hi);
  t.expect(a.results.size() == b.results.size(), "different check lists");
  PrecisionScope scope(80);
  int worst = 1000;
  std::string worst_id;
  for (std::size_t i = 0; i < a.results.size() && i < b.results.size(); ++i) {
    const CheckResult& ra = a.results[i];
    const CheckResult& rb = b.results[i];
    for (const auto& [sa, sb] : {std::pair{ra.lhs, rb.lhs}, std::pair{ra.rhs, rb.rhs}}) {
      const int d = agreeing_digits(Real(sa), Real(sb));
      if (d < worst) {
        worst = d;
        worst_id = ra.check_id;
      }
    }
  }
  t.expect(worst >= 28, "30 vs 50 digits: " + worst_id + " agrees to " + std::to_string(worst));
  t.note("30 vs 50 digits: worst agreement " + std::to_string(worst) + " digits (" + worst_id +
         ")");
  return t;
}

}  // namespace

int main() {
  PrecisionContext ctx(50);
  PrecisionScope scope(ctx);

  struct Criterion {
    int id;
    const char* title;
    std::function<Tally()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "plain and 1/n lambda sums", [&] { return criterion1(ctx); }},
      {2, "lambda sums with 1/(n+m), m=1..10", [&] { return criterion2(ctx); }},
      {3, "lambda sums with 1/(2n+m), m=1..10", [&] { return criterion3(ctx); }},
      {4, "hand-entered shift forms, exact", [] { return criterion4(); }},
      {5, "zeta background sums and spot values", [&] { return criterion5(ctx); }},
      {6, "zeta(2n)/4^n shift sums", [&] { return criterion6(ctx); }},
      {7, "taylor coefficients about 1/2", [&] { return criterion7(ctx); }},
      {8, "binomial and n^p weighted sums", [&] { return criterion8(ctx); }},
      {9, "binomial zeta(2n)/4^n sums", [&] { return criterion9(ctx); }},
      {10, "trigonometric integrals vs quadrature", [&] { return criterion10(ctx); }},
      {11, "log cosine limit at 1/2 - 1e-7", [&] { return criterion11(ctx); }},
      {12, "tan partial fractions and cos product", [] { return criterion12(); }},
      {13, "level-2 Eisenstein series", [&] { return criterion13(ctx); }},
      {14, "tail soundness and precision stability", [] { return criterion14(); }},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = Clock::now();
    Tally t;
    try {
      t = c.run();
    } catch (const std::exception& e) {
      t.ok = false;
      t.note(std::string("exception: ") + e.what());
    }
    const double secs = seconds_since(t0);
    char head[160];
    std::snprintf(head, sizeof head, "criterion %2d %s  %-42s %7.2f s", c.id,
                  t.ok ? "PASS" : "FAIL", c.title, secs);
    std::cout << head << "\n";
    for (const auto& n : t.notes) {
      std::cout << "               " << n << "\n";
    }
    failed += t.ok ? 0 : 1;
  }
  std::cout << (14 - failed) << "/14 criteria passed\n";
  return failed == 0 ? 0 : 1;
}

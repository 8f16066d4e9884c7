#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lambda_lab/closedform.hpp"
#include "lambda_lab/series.hpp"
#include "lambda_lab/specfun.hpp"
#include "oracles.hpp"

using namespace lambda_lab;
namespace mp = boost::multiprecision;

namespace {

std::vector<SeriesFamily> sample_families() {
  std::vector<SeriesFamily> out;
  for (FamilyTag t : all_family_tags()) {
    if (!family_has_param(t)) {
      out.push_back({t, 0});
    } else if (t == FamilyTag::ZetaQuarterShift) {
      out.push_back({t, 1});
      out.push_back({t, 2});
    } else {
      for (int p : {1, 3, 8}) {
        out.push_back({t, p});
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("lambda(2n) - 1 by direct summation") {
  PrecisionContext ctx(50);
  PrecisionScope s(ctx);
  const Real frozen("0.233700550136169827354311374984518891914212425905098828301669");
  CHECK(mp::abs(lambda_minus_one(1, ctx) - frozen) < ctx.tolerance());
  CHECK(mp::abs(lambda_minus_one(1, ctx) - (ctx.pi() * ctx.pi() / 8 - 1)) < ctx.tolerance());
  // Brute odd sums for moderate n: terms past k = 4001 are below 4001^-19.
  for (int n : {10, 15}) {
    const Real brute = oracle::odd_power_partial(2 * n, 4001);
    CHECK(mp::abs(lambda_minus_one(n, ctx) - brute) < ctx.tolerance());
  }
  CHECK(lambda_minus_one(20, ctx) < 4 * mp::pow(Real(3), -40));
  for (int n = 1; n <= 60; ++n) {
    const Real v = lambda_minus_one(n, ctx);
    CHECK(v > 0);
    CHECK(v < 4 * mp::pow(Real(9), -n));
  }
  for (int n = 5; n <= 30; ++n) {
    const Real scaled = lambda_minus_one(n, ctx) * mp::pow(Real(9), n);
    CHECK(scaled >= Real("0.9"));
    CHECK(scaled <= Real("1.4"));
  }
}

TEST_CASE("zeta(2n) - 1 by direct summation") {
  PrecisionContext ctx(50);
  PrecisionScope s(ctx);
  for (int n : {1, 2, 7, 25}) {
    CHECK(mp::abs(zeta_minus_one(n, ctx) - (zeta_int(2 * n, ctx) - 1)) < ctx.tolerance());
  }
}

TEST_CASE("family names") {
  CHECK(to_string(SeriesFamily{FamilyTag::LambdaShiftN, 3}) == "LambdaShiftN{3}");
  CHECK(to_string(SeriesFamily{FamilyTag::LambdaPlain, 0}) == "LambdaPlain");
  for (FamilyTag t : all_family_tags()) {
    CHECK(parse_family_tag(family_tag_name(t)) == t);
  }
  CHECK(parse_family_tag("lambda-shift-n") == FamilyTag::LambdaShiftN);
  CHECK_FALSE(parse_family_tag("no-such-family").has_value());
  CHECK_THROWS_AS(SeriesFamily({FamilyTag::LambdaShiftN, 0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(SeriesFamily({FamilyTag::ZetaQuarterShift, 3}).validate(),
                  std::invalid_argument);
}

TEST_CASE("plain sums") {
  PrecisionContext ctx(50);
  PrecisionScope s(ctx);
  const SumResult plain = sum_family({FamilyTag::LambdaPlain, 0}, ctx);
  CHECK(mp::abs(plain.value - Real(1) / 4) < ctx.tolerance());
  const SumResult over_n = sum_family({FamilyTag::LambdaOverN, 0}, ctx);
  CHECK(mp::abs(over_n.value - (2 * ctx.log2() - ctx.logpi())) < ctx.tolerance());
  const Real frozen("0.241564475270490444691036891563294424503705455805198936727737");
  CHECK(mp::abs(over_n.value - frozen) < ctx.tolerance());
  CHECK(mp::abs(sum_family({FamilyTag::ZetaPlain, 0}, ctx).value - Real(3) / 4) < ctx.tolerance());
  CHECK(mp::abs(sum_family({FamilyTag::ZetaOverN, 0}, ctx).value - ctx.log2()) < ctx.tolerance());
}

TEST_CASE("binomial weight vanishes below p") {
  PrecisionContext ctx(30);
  PrecisionScope s(ctx);
  CHECK(partial_sum({FamilyTag::LambdaBinom, 3}, 1, ctx).value == 0);
  CHECK(family_term({FamilyTag::LambdaBinom, 3}, 1, ctx) == 0);
}

TEST_CASE("every family agrees with its closed form") {
  PrecisionContext ctx(50);
  PrecisionScope s(ctx);
  for (const SeriesFamily& f : sample_families()) {
    CAPTURE(to_string(f));
    ClosedForm form;
    switch (f.tag) {
      case FamilyTag::LambdaPlain: form = closed_lambda_plain(); break;
      case FamilyTag::LambdaOverN: form = closed_lambda_over_n(); break;
      case FamilyTag::LambdaShiftN: form = closed_nm(f.param); break;
      case FamilyTag::LambdaShift2N: form = closed_2nm(f.param); break;
      case FamilyTag::LambdaBinom: form = closed_binom(f.param); break;
      case FamilyTag::LambdaNPow: form = closed_npow(f.param); break;
      case FamilyTag::ZetaPlain: form = closed_zeta_plain(); break;
      case FamilyTag::ZetaOverN: form = closed_zeta_over_n(); break;
      case FamilyTag::ZetaShiftN: form = closed_zeta_nm(f.param); break;
      case FamilyTag::ZetaShift2N: form = closed_zeta_2nm(f.param); break;
      case FamilyTag::ZetaQuarterShift: form = closed_remark_sums(f.param); break;
      case FamilyTag::ZetaBinomQuarter: form = closed_zeta_binom(f.param); break;
    }
    const SumResult r = sum_family(f, ctx);
    CHECK(r.tail_bound >= 0);
    CHECK(r.tail_bound < ctx.tolerance());
    const Real allowed = r.tail_bound * 2 > ctx.tolerance() * 10 ? Real(r.tail_bound * 2)
                                                                  : Real(ctx.tolerance() * 10);
    CHECK(mp::abs(r.value - cf_eval(form, ctx)) < allowed);
  }
}

TEST_CASE("tail bounds are sound") {
  PrecisionContext ctx(40);
  PrecisionScope s(ctx);
  for (const SeriesFamily& f : sample_families()) {
    CAPTURE(to_string(f));
    for (long n : {4L, 10L, 25L}) {
      const SumResult a = partial_sum(f, n, ctx);
      const SumResult b = partial_sum(f, 2 * n, ctx);
      CHECK(mp::abs(b.value - a.value) <= a.tail_bound);
    }
  }
}

TEST_CASE("partial sums of positive families increase") {
  PrecisionContext ctx(30);
  PrecisionScope s(ctx);
  for (const SeriesFamily& f : sample_families()) {
    CAPTURE(to_string(f));
    Real prev = partial_sum(f, 1, ctx).value;
    for (long n = 2; n <= 20; ++n) {
      const Real cur = partial_sum(f, n, ctx).value;
      CHECK(cur >= prev);
      prev = cur;
    }
  }
}

TEST_CASE("generating function") {
  PrecisionContext ctx(50);
  PrecisionScope s(ctx);
  CHECK(mp::abs(f_eval(Real(1) / 2, ctx) - Real(1) / 4) < ctx.tolerance());
  CHECK(mp::abs(f_eval(Real(-1) / 2, ctx) - Real(1) / 4) < ctx.tolerance());
  CHECK(mp::abs(f_eval(Real(0), ctx)) < ctx.tolerance());
  for (const char* xs : {"0.25", "0.1", "-0.7", "1.2", "0.5000000001"}) {
    CAPTURE(xs);
    const Real x(xs);
    const SumResult ser = f_series(x, ctx);
    CHECK(mp::abs(f_eval(x, ctx) - ser.value) < 10 * ctx.tolerance() + ser.tail_bound);
  }
  CHECK_THROWS_AS(f_eval(Real(3) / 2, ctx), DomainError);
  CHECK_THROWS_AS(f_eval(Real(-2), ctx), DomainError);
}

TEST_CASE("taylor coefficients by summation") {
  PrecisionContext ctx(50);
  PrecisionScope s(ctx);
  CHECK(mp::abs(taylor_coeff_numeric(1, ctx) - cf_eval(closed_taylor_coeff(1), ctx)) <
        ctx.tolerance());
  CHECK(mp::abs(taylor_coeff_numeric(2, ctx) - (zeta_int(2, ctx) - Real(1) / 4)) <
        ctx.tolerance());
  CHECK(mp::abs(taylor_coeff_numeric(4, ctx) - (zeta_int(4, ctx) - Real(1) / 4)) <
        ctx.tolerance());
}

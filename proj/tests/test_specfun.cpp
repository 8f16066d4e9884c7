#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lambda_lab/specfun.hpp"
#include "oracles.hpp"

using namespace lambda_lab;
namespace mp = boost::multiprecision;

namespace {
BigRational r(long n, long d = 1) { return BigRational(BigInt(n), BigInt(d)); }
}  // namespace

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == r(1));
  CHECK(bernoulli(2) == r(1, 6));
  CHECK(bernoulli(4) == r(-1, 30));
  CHECK(bernoulli(12) == r(-691, 2730));
  CHECK(bernoulli(20) == r(-174611, 330));
  CHECK_THROWS_AS(bernoulli(3), std::invalid_argument);
  CHECK_THROWS_AS(bernoulli(-2), std::invalid_argument);
  // The defining recurrence holds for a large index too.
  const int n = 60;
  BigRational acc(0);
  for (int j = 0; j < n; ++j) {
    if (j == 1) {
      acc += BigRational(binom(n + 1, 1)) * r(-1, 2);
    } else if (j % 2 == 0) {
      acc += BigRational(binom(n + 1, j)) * bernoulli(j);
    }
  }
  acc += BigRational(binom(n + 1, n)) * bernoulli(n);
  CHECK(acc == 0);
}

TEST_CASE("combinatorics") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(binom(6, 3) == 20);
  CHECK(binom(2, 3) == 0);
  CHECK(binom(5, -1) == 0);
  CHECK(harmonic(0) == 0);
  CHECK(harmonic(3) == r(11, 6));
  CHECK(alt_harmonic(0) == 0);
  CHECK(alt_harmonic(3) == r(5, 6));
  for (int p = 1; p <= 8; ++p) {
    for (int k = 1; k <= p; ++k) {
      CHECK(stirling2(p, k) == oracle::count_partitions(p, k));
    }
  }
  CHECK_THROWS_AS(stirling2(3, 4), std::invalid_argument);
}

TEST_CASE("zeta at odd arguments against independent series") {
  PrecisionContext ctx(50);
  PrecisionScope s(ctx);
  const Real apery(oracle::apery_zeta3(120));
  CHECK(mp::abs(zeta_int(3, ctx) - apery) < ctx.tolerance());
  const Real frozen("1.20205690315959428539973816151144999076498629234049888179227");
  CHECK(mp::abs(zeta_int(3, ctx) - frozen) < ctx.tolerance());
}

TEST_CASE("summed and Bernoulli routes agree at even arguments") {
  PrecisionContext ctx(60);
  PrecisionScope s(ctx);
  for (int n : {2, 4, 6, 10, 20, 40}) {
    CHECK(mp::abs(zeta_summed(n, ctx) - zeta_int(n, ctx)) < ctx.tolerance());
  }
  CHECK(mp::abs(zeta_int(2, ctx) - ctx.pi() * ctx.pi() / 6) < ctx.tolerance());
}

TEST_CASE("arithmetic power sum against a brute-force partial sum") {
  PrecisionContext ctx(20);
  PrecisionScope s(ctx);
  // sum_{k>=1} (3k+1)^-6: direct to k = 20000, the rest is below 1e-24.
  Real brute(0);
  for (long k = 20000; k >= 1; --k) {
    brute += mp::pow(Real(3 * k + 1), -6);
  }
  PowerSum ps = arithmetic_power_sum(1, 3, 1, 6, ctx.epsilon(), ctx);
  CHECK(mp::abs(ps.value - brute) < ctx.tolerance());
  CHECK(ps.remainder_bound < ctx.epsilon());
}

TEST_CASE("eta, lambda, beta and the spectral zeta") {
  PrecisionContext ctx(50);
  PrecisionScope s(ctx);
  const Real pi2 = ctx.pi() * ctx.pi();
  CHECK(mp::abs(lambda(2, ctx) - pi2 / 8) < ctx.tolerance());
  CHECK(mp::abs(eta(2, ctx) - pi2 / 12) < ctx.tolerance());
  CHECK(mp::abs(spectral_zeta(2, ctx) - pi2 / 2) < ctx.tolerance());
  const Real g = oracle::ramanujan_catalan(200, ctx.pi());
  CHECK(mp::abs(beta_catalan(2, ctx) - g) < ctx.tolerance());
  const Real frozen("0.915965594177219015054603514932384110774149374281672134266498");
  CHECK(mp::abs(beta_catalan(2, ctx) - frozen) < ctx.tolerance());
  // beta(3) = pi^3/32
  CHECK(mp::abs(beta_catalan(3, ctx) - pi2 * ctx.pi() / 32) < ctx.tolerance());
  // Alternating partial sums bracket the limit within the next term.
  const long n = 1000;
  const Real partial = beta_partial(2, n, ctx);
  CHECK(mp::abs(partial - beta_catalan(2, ctx)) < mp::pow(Real(2 * n + 1), -2));
  CHECK_THROWS_AS(zeta_int(1, ctx), std::invalid_argument);
  CHECK_THROWS_AS(lambda(1, ctx), std::invalid_argument);
}

TEST_CASE("lambda - 1 stays below 4 * 3^-2n") {
  PrecisionContext ctx(50);
  PrecisionScope s(ctx);
  const Real v = lambda(40, ctx) - 1;
  CHECK(v > 0);
  CHECK(v < 4 * mp::pow(Real(3), -40));
}

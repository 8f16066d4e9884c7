#include "lambda_lab/analysis.hpp"

#include "lambda_lab/specfun.hpp"

namespace lambda_lab {

namespace mp = boost::multiprecision;

namespace {

BigRational rat(const BigInt& num, const BigInt& den = BigInt(1)) { return BigRational(num, den); }

BigInt pow2(int k) { return BigInt(1) << k; }

void require_min(int v, int lo, const char* what) {
  if (v < lo) {
    throw std::invalid_argument(std::string(what) + ": argument must be >= " + std::to_string(lo));
  }
}

QuadratureSpec half_interval(std::string label, Integrand f, bool singular,
                             const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  return QuadratureSpec{std::move(label), std::move(f), Real(0), Real(1) / 2, ctx.tolerance(),
                        singular};
}

}  // namespace

// ---------------------------------------------------------------------------
// int_0^(1/2) x^(2m-1) cos(2 k pi x) dx

ClosedForm integral_cos_form(int m, int k) {
  require_min(m, 1, "integral_cos_form");
  require_min(k, 1, "integral_cos_form");
  ClosedForm sum;
  for (int j = 1; j <= m - 1; ++j) {
    // (-1)^(j-1) C(2m-1, 2j-1) (2j-1)! (k pi)^(-2j)
    BigInt num = binom(2 * m - 1, 2 * j - 1) * factorial(2 * j - 1);
    if (j % 2 == 0) {
      num = -num;
    }
    BigInt den = 1;
    for (int i = 0; i < 2 * j; ++i) {
      den *= k;
    }
    sum += ClosedForm(rat(num, den), Monomial{-2 * j, 0, 0, 0});
  }
  BigRational lead(BigInt(1), pow2(2 * m));
  if (k % 2 == 1) {
    lead = -lead;
  }
  ClosedForm out = lead * sum;
  if (k % 2 == 1) {
    // 2 (-1)^m (2m-1)! (2 k pi)^(-2m)
    BigInt den = pow2(2 * m);
    for (int i = 0; i < 2 * m; ++i) {
      den *= k;
    }
    BigInt num = 2 * factorial(2 * m - 1);
    if (m % 2 == 1) {
      num = -num;
    }
    out += ClosedForm(rat(num, den), Monomial{-2 * m, 0, 0, 0});
  }
  return out;
}

Real integral_cos_closed(int m, int k, const PrecisionContext& ctx) {
  return cf_eval(integral_cos_form(m, k), ctx);
}

Real integral_cos_quad(int m, int k, const PrecisionContext& ctx) {
  require_min(m, 1, "integral_cos_quad");
  require_min(k, 1, "integral_cos_quad");
  const Real w = 2 * k * ctx.pi();
  auto f = [m, w](const Real& x, const Real&, const Real&) {
    return mp::pow(x, 2 * m - 1) * mp::cos(w * x);
  };
  return quad(half_interval("x^(2m-1) cos(2k pi x)", f, false, ctx), ctx);
}

// ---------------------------------------------------------------------------
// int_0^(1/2) x^(m-1) log cos(pi x) dx

ClosedForm integral_logcos_form(int m) {
  require_min(m, 1, "integral_logcos_form");
  // -log 2/(m 2^m)
  ClosedForm out(rat(BigInt(-1), BigInt(m) * pow2(m)), Monomial{0, 1, 0, 0});
  // -2^-m sum_{j odd < m} j! C(m-1, j) (-1)^((j-1)/2) pi^-(j+1) zeta(j+2)
  for (int j = 1; j <= m - 1; j += 2) {
    BigInt num = factorial(j) * binom(m - 1, j);
    if ((j / 2) % 2 == 1) {
      num = -num;
    }
    out -= rat(num, pow2(m)) * from_zeta(j + 2).times_pi_power(-(j + 1));
  }
  if (m % 2 == 0) {
    // -(m-1)! (2 pi)^-m eta(m+1) (-1)^(m/2+1)
    BigInt num = factorial(m - 1);
    if ((m / 2) % 2 == 0) {
      num = -num;
    }
    out -= rat(num, pow2(m)) * from_eta(m + 1).times_pi_power(-m);
  }
  return out;
}

Real integral_logcos_closed(int m, const PrecisionContext& ctx) {
  return cf_eval(integral_logcos_form(m), ctx);
}

Real integral_logcos_quad(int m, const PrecisionContext& ctx) {
  require_min(m, 1, "integral_logcos_quad");
  const Real pi = ctx.pi();
  // cos(pi x) = sin(pi (1/2 - x)), evaluated from the distance to 1/2.
  auto f = [m, pi](const Real& x, const Real&, const Real& to_b) {
    Real v = mp::log(mp::sin(pi * to_b));
    return m == 1 ? v : mp::pow(x, m - 1) * v;
  };
  return quad(half_interval("x^(m-1) log cos(pi x)", f, true, ctx), ctx);
}

// ---------------------------------------------------------------------------
// int_0^(1/2) ((2x)^(m+1) - 2x)/(1 - (2x)^2) dx

ClosedForm integral_rational_form(int m) {
  require_min(m, 0, "integral_rational_form");
  if (m % 2 == 0) {
    return ClosedForm(-harmonic(m / 2) / 4);
  }
  return ClosedForm(-harmonic((m - 1) / 2) / 4 - alt_harmonic(m) / 2) +
         BigRational(1, 2) * ClosedForm::log2();
}

Real integral_rational_closed(int m, const PrecisionContext& ctx) {
  return cf_eval(integral_rational_form(m), ctx);
}

Real integral_rational_quad(int m, const PrecisionContext& ctx) {
  require_min(m, 0, "integral_rational_quad");
  // With u = 2x: (u^(m+1) - u)/(1 - u^2) = -u (1 + u + ... + u^(m-1))/(1 + u),
  // which removes the 0/0 at u = 1 before any rounding happens.
  auto f = [m](const Real& x, const Real&, const Real&) {
    const Real u = 2 * x;
    Real geometric(0);
    Real p(1);
    for (int i = 0; i < m; ++i) {
      geometric += p;
      p *= u;
    }
    return -u * geometric / (1 + u);
  };
  return quad(half_interval("((2x)^(m+1) - 2x)/(1 - (2x)^2)", f, false, ctx), ctx);
}

// ---------------------------------------------------------------------------
// Limit of g near x = 1/2

Real limit_logcos_g(int m, const Real& x, const PrecisionContext& ctx) {
  require_min(m, 0, "limit_logcos_g");
  PrecisionScope scope(ctx);
  const Real e = Real(1) / 2 - x;  // distance to 1/2
  if (mp::abs(x) >= Real(1) / 2) {
    throw DomainError("limit_logcos_g: requires |x| < 1/2");
  }
  const Real log_cos = mp::log(mp::sin(ctx.pi() * e));
  // 1 - (2x)^2 = (1 - 2x)(1 + 2x) = 2e (2 - 2e)
  const Real log_rat = mp::log(2 * e * (2 - 2 * e));
  return -mp::pow(2 * x, 2 * m) * log_cos + log_rat;
}

LimitCheck limit_logcos_check(int m, const PrecisionContext& ctx) {
  require_min(m, 0, "limit_logcos_check");
  PrecisionScope scope(ctx);
  LimitCheck out;
  out.target = mp::log(Real(4) / ctx.pi());
  std::array<Real, 3> eps;
  for (std::size_t i = 0; i < 3; ++i) {
    eps[i] = mp::pow(Real(10), -out.t[i]);
    out.samples[i] = limit_logcos_g(m, Real(1) / 2 - eps[i], ctx);
    out.errors[i] = mp::abs(out.samples[i] - out.target);
  }
  if (!(out.errors[1] < out.errors[0] && out.errors[2] < out.errors[1])) {
    throw ConvergenceError("limit_logcos_check: samples do not approach log(4/pi)");
  }
  // Solve L + a e log e + b e = g at the three samples (Cramer's rule).
  auto det3 = [](const std::array<std::array<Real, 3>, 3>& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  };
  std::array<std::array<Real, 3>, 3> a;
  for (std::size_t i = 0; i < 3; ++i) {
    a[i] = {Real(1), eps[i] * mp::log(eps[i]), eps[i]};
  }
  auto a0 = a;
  for (std::size_t i = 0; i < 3; ++i) {
    a0[i][0] = out.samples[i];
  }
  out.extrapolated = det3(a0) / det3(a);
  out.value = out.samples[2];
  return out;
}

// ---------------------------------------------------------------------------
// Partial fractions and product

PointwiseCheck tan_pf_check(const Real& x, long n_max, const PrecisionContext& ctx) {
  if (n_max < 1) {
    throw std::invalid_argument("tan_pf_check: N must be >= 1");
  }
  PrecisionScope scope(ctx);
  PointwiseCheck out;
  out.lhs = -ctx.pi() * elem::tan(ctx.pi() * x, ctx);
  const Real c = 4 * x * x;
  out.partial = 0;
  for (long n = 1; n <= n_max; n += 2) {
    out.partial += 8 * x / (c - Real(n) * Real(n));
  }
  // Remaining odd n >= N': sum 8x/(n^2 - c) ~ (8x/2) int_{N'-1}^inf dn/(n^2 - c)
  // (midpoint rule with spacing 2) = 4x atanh(sqrt(c)/A)/sqrt(c), A = N' - 1.
  const long first_omitted = n_max % 2 == 0 ? n_max + 1 : n_max + 2;
  const Real a(first_omitted - 1);
  if (x == 0) {
    out.tail_estimate = 0;
  } else {
    const Real sc = 2 * mp::abs(x);
    if (sc >= a) {
      throw std::invalid_argument("tan_pf_check: N too small for x");
    }
    out.tail_estimate = -4 * x * mp::atanh(sc / a) / sc;
  }
  out.rhs = out.partial + out.tail_estimate;
  return out;
}

PointwiseCheck cos_product_check(const Real& x, long n_max, const PrecisionContext& ctx) {
  if (n_max < 1) {
    throw std::invalid_argument("cos_product_check: N must be >= 1");
  }
  PrecisionScope scope(ctx);
  PointwiseCheck out;
  out.lhs = mp::cos(ctx.pi() * x);
  const Real c = 4 * x * x;
  out.partial = 1;
  for (long n = 1; n <= n_max; n += 2) {
    out.partial *= 1 - c / (Real(n) * Real(n));
  }
  // log of the omitted factors ~ -c sum_{n odd >= N'} n^-2 ~ -c/(2A).
  const long first_omitted = n_max % 2 == 0 ? n_max + 1 : n_max + 2;
  const Real a(first_omitted - 1);
  out.tail_estimate = out.partial * (mp::exp(-c / (2 * a)) - 1);
  out.rhs = out.partial + out.tail_estimate;
  return out;
}

Real fourier_logcos_partial(const Real& x, long n_terms, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real w = 2 * ctx.pi() * x;
  Real acc = -ctx.log2();
  for (long k = 1; k <= n_terms; ++k) {
    const Real t = mp::cos(k * w) / k;
    if (k % 2 == 1) {
      acc += t;
    } else {
      acc -= t;
    }
  }
  return acc;
}

}  // namespace lambda_lab

#include "lambda_lab/specfun.hpp"

#include "context_state.hpp"

#include <mutex>
#include <string>
#include <vector>

namespace lambda_lab {

namespace mp = boost::multiprecision;

namespace {

std::mutex g_bernoulli_mutex;
std::vector<BigRational> g_bernoulli{BigRational(1), BigRational(BigInt(-1), BigInt(2))};

// Extends the shared cache to hold B_0..B_n. Caller holds the mutex.
void extend_bernoulli(std::size_t n) {
  if (g_bernoulli.size() > n) {
    return;
  }
  std::size_t target = std::max(n + 1, 2 * g_bernoulli.size());
  g_bernoulli.reserve(target);
  for (std::size_t m = g_bernoulli.size(); m < target; ++m) {
    if (m % 2 == 1) {
      g_bernoulli.emplace_back(0);
      continue;
    }
    // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
    BigRational acc(0);
    BigInt c(1);  // C(m+1, j), starting at j = 0
    for (std::size_t j = 0; j < m; ++j) {
      if (j == 1 || j % 2 == 0) {
        acc += BigRational(c) * g_bernoulli[j];
      }
      c = c * BigInt(static_cast<long>(m + 1 - j)) / BigInt(static_cast<long>(j + 1));
    }
    g_bernoulli.push_back(-acc / BigRational(static_cast<long>(m + 1)));
  }
}

void require_s(int s, const char* what) {
  if (s < 2) {
    throw std::invalid_argument(std::string(what) + ": argument must be an integer >= 2");
  }
}

}  // namespace

BigRational bernoulli(int n) {
  if (n < 0 || n % 2 != 0) {
    throw std::invalid_argument("bernoulli: index must be even and non-negative");
  }
  std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
  extend_bernoulli(static_cast<std::size_t>(n));
  return g_bernoulli[static_cast<std::size_t>(n)];
}

BigInt factorial(int n) {
  if (n < 0) {
    throw std::invalid_argument("factorial: negative argument");
  }
  BigInt r(1);
  for (int i = 2; i <= n; ++i) {
    r *= i;
  }
  return r;
}

BigInt binom(int n, int k) {
  if (n < 0) {
    throw std::invalid_argument("binom: negative n");
  }
  if (k < 0 || k > n) {
    return BigInt(0);
  }
  k = std::min(k, n - k);
  BigInt r(1);
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

BigInt stirling2(int p, int k) {
  if (p < 1 || k < 1 || k > p) {
    throw std::invalid_argument("stirling2: requires 1 <= k <= p");
  }
  // row[j] holds {i brace j} for the current i.
  std::vector<BigInt> row(static_cast<std::size_t>(p) + 1, BigInt(0));
  row[0] = 1;
  for (int i = 1; i <= p; ++i) {
    for (int j = i; j >= 1; --j) {
      row[j] = row[j - 1] + BigInt(j) * row[j];
    }
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(k)];
}

BigRational harmonic(int m) {
  if (m < 0) {
    throw std::invalid_argument("harmonic: negative index");
  }
  BigRational h(0);
  for (int k = 1; k <= m; ++k) {
    h += BigRational(BigInt(1), BigInt(k));
  }
  return h;
}

BigRational alt_harmonic(int m) {
  if (m < 0) {
    throw std::invalid_argument("alt_harmonic: negative index");
  }
  BigRational h(0);
  for (int k = 1; k <= m; ++k) {
    h += BigRational(BigInt(k % 2 == 1 ? 1 : -1), BigInt(k));
  }
  return h;
}

PowerSum arithmetic_power_sum(long offset, long step, long start, int s, const Real& target,
                              const PrecisionContext& ctx) {
  if (s < 2 || step < 1 || offset + step * start < 1) {
    throw std::invalid_argument("arithmetic_power_sum: need s >= 2 and positive bases");
  }
  PrecisionScope scope(ctx);
  const Real d(step);

  // Switch index: make the tail base X = offset + step*N comparable to the
  // working digit count so the Bernoulli corrections shrink quickly.
  long n_switch = std::max(start, static_cast<long>(0.8 * ctx.working_digits()) + 2);
  constexpr int kMaxCorrections = 400;

  for (int attempt = 0; attempt < 8; ++attempt, n_switch *= 2) {
    Real direct(0);
    for (long j = start; j < n_switch; ++j) {
      direct += mp::pow(Real(offset + step * j), -s);
    }
    const Real x(offset + step * n_switch);
    const Real x_pow = mp::pow(x, -s);  // f(N)
    const Real inv_x2 = 1 / (x * x);

    PowerSum out;
    out.direct_terms = n_switch - start;
    Real tail = x * x_pow / (d * (s - 1)) + x_pow / 2;
    if (x_pow / 2 < target) {
      out.value = direct + tail;
      out.remainder_bound = x_pow / 2;
      return out;
    }

    // term_k = B_2k/(2k)! * d^(2k-1) * (s)_(2k-1) * X^(-s-2k+1)
    Real growth = d * s * x_pow / x;  // d^(2k-1) (s)_(2k-1) X^(-s-2k+1) at k = 1
    Real previous_magnitude;
    for (int k = 1; k <= kMaxCorrections; ++k) {
      if (k > 1) {
        growth *= d * d * Real(s + 2 * k - 3) * Real(s + 2 * k - 2) * inv_x2;
      }
      const BigRational coeff = bernoulli(2 * k) / BigRational(factorial(2 * k));
      const Real term = Real(coeff) * growth;
      const Real magnitude = mp::abs(term);
      tail += term;
      if (magnitude < target) {
        out.value = direct + tail;
        out.remainder_bound = magnitude;
        out.correction_terms = k;
        return out;
      }
      if (k > 1 && magnitude > previous_magnitude) {
        break;  // asymptotic series started to diverge; move N out
      }
      previous_magnitude = magnitude;
    }
  }
  throw ConvergenceError("arithmetic_power_sum: target accuracy not reached");
}

Real zeta_summed(int s, const PrecisionContext& ctx) {
  require_s(s, "zeta_summed");
  PrecisionScope scope(ctx);
  return arithmetic_power_sum(0, 1, 1, s, ctx.epsilon() / 10, ctx).value;
}

Real zeta_int(int s, const PrecisionContext& ctx) {
  require_s(s, "zeta_int");
  PrecisionScope scope(ctx);
  if (s % 2 == 0) {
    // zeta(2n) = (-1)^(n+1) B_2n (2 pi)^(2n) / (2 (2n)!)
    const int n = s / 2;
    BigRational q = bernoulli(s) / (BigRational(2) * BigRational(factorial(s)));
    if (n % 2 == 0) {
      q = -q;
    }
    return Real(q) * mp::pow(2 * ctx.pi(), s);
  }
  auto& st = ctx.state();
  {
    std::lock_guard<std::mutex> lock(st.memo_mutex);
    if (auto it = st.zeta_odd.find(s); it != st.zeta_odd.end()) {
      return it->second;
    }
  }
  Real value = zeta_summed(s, ctx);
  std::lock_guard<std::mutex> lock(st.memo_mutex);
  st.zeta_odd.emplace(s, value);
  return value;
}

Real eta(int s, const PrecisionContext& ctx) {
  require_s(s, "eta");
  PrecisionScope scope(ctx);
  return (1 - mp::pow(Real(2), 1 - s)) * zeta_int(s, ctx);
}

Real lambda(int s, const PrecisionContext& ctx) {
  require_s(s, "lambda");
  PrecisionScope scope(ctx);
  return (1 - mp::pow(Real(2), -s)) * zeta_int(s, ctx);
}

Real beta_catalan(int s, const PrecisionContext& ctx) {
  require_s(s, "beta_catalan");
  PrecisionScope scope(ctx);
  // Group by residue mod 4: sum (4n+1)^-s - sum (4n+3)^-s, each summed with a
  // proven Euler-Maclaurin remainder.
  const Real target = ctx.epsilon() / 20;
  return arithmetic_power_sum(1, 4, 0, s, target, ctx).value -
         arithmetic_power_sum(3, 4, 0, s, target, ctx).value;
}

Real beta_partial(int s, long terms, const PrecisionContext& ctx) {
  require_s(s, "beta_partial");
  PrecisionScope scope(ctx);
  Real acc(0);
  for (long n = 0; n < terms; ++n) {
    Real t = mp::pow(Real(2 * n + 1), -s);
    if (n % 2 == 0) {
      acc += t;
    } else {
      acc -= t;
    }
  }
  return acc;
}

Real spectral_zeta(int s, const PrecisionContext& ctx) {
  require_s(s, "spectral_zeta");
  PrecisionScope scope(ctx);
  return mp::pow(Real(2), s) * lambda(s, ctx);
}

}  // namespace lambda_lab

#include "lambda_lab/analysis.hpp"

#include "context_state.hpp"

namespace lambda_lab {

namespace mp = boost::multiprecision;

namespace {

constexpr int kMaxLevel = 14;

// Abscissa t -> fraction of the interval to the nearer endpoint,
//   e(t) = 1/(exp(2u) + 1),  u = (pi/2) sinh|t|,
// and weight (pi/4) cosh t / cosh^2 u, so that for an interval of length L
//   integral ~= L h sum_t w(t) f(...).
void node(const Real& t, const Real& half_pi, Real& offset, Real& weight) {
  const Real u = half_pi * mp::sinh(t);
  const Real e2u = mp::exp(2 * u);
  offset = 1 / (e2u + 1);
  const Real ch = mp::cosh(u);
  weight = half_pi / 2 * mp::cosh(t) / (ch * ch);
}

Real t_max(const PrecisionContext& ctx, const Real& half_pi) {
  // Stop where the weight drops below 10^-(working + 10); beyond that even a
  // logarithmically growing integrand contributes nothing.
  const Real cutoff = ctx.epsilon() * mp::pow(Real(10), -10);
  Real t(0);
  Real offset;
  Real weight;
  for (;;) {
    t += Real(1) / 8;
    node(t, half_pi, offset, weight);
    if (weight < cutoff || offset == 0) {
      return t;
    }
  }
}

const detail::QuadratureLevel& level_nodes(int level, const PrecisionContext& ctx) {
  auto& st = ctx.state();
  std::lock_guard<std::mutex> lock(st.quad_mutex);
  PrecisionScope scope(ctx);
  const Real half_pi = ctx.pi() / 2;
  if (!st.quad_t_max) {
    st.quad_t_max = t_max(ctx, half_pi);
  }
  while (static_cast<int>(st.quad_levels.size()) <= level) {
    const int l = static_cast<int>(st.quad_levels.size());
    const Real h = mp::ldexp(Real(1), -l);
    detail::QuadratureLevel lv;
    // Level 0 holds t = h, 2h, ...; later levels only the new odd multiples.
    // The node t = 0 is handled separately by the caller.
    const long stride = l == 0 ? 1 : 2;
    for (long k = 1;; k += stride) {
      const Real t = h * k;
      if (t > *st.quad_t_max) {
        break;
      }
      Real offset;
      Real weight;
      node(t, half_pi, offset, weight);
      lv.offset.push_back(offset);
      lv.weight.push_back(weight);
    }
    st.quad_levels.push_back(std::move(lv));
  }
  return st.quad_levels[static_cast<std::size_t>(level)];
}

}  // namespace

QuadratureResult quad_detail(const QuadratureSpec& spec, const PrecisionContext& ctx) {
  if (!spec.f) {
    throw std::invalid_argument("quad: empty integrand");
  }
  PrecisionScope scope(ctx);
  if (!(spec.a < spec.b)) {
    throw std::invalid_argument("quad: requires a < b");
  }
  const Real tol = spec.tolerance > 0 ? spec.tolerance : ctx.tolerance();
  const Real len = spec.b - spec.a;

  QuadratureResult out;
  // Running sum of w f over all nodes so far; the estimate at level l is
  // len * 2^-l * sum.
  Real sum = ctx.pi() / 4 * spec.f(spec.a + len / 2, len / 2, len / 2);
  out.evaluations = 1;
  Real previous;
  for (int l = 0; l <= kMaxLevel; ++l) {
    const auto& lv = level_nodes(l, ctx);
    for (std::size_t i = 0; i < lv.offset.size(); ++i) {
      const Real near = len * lv.offset[i];
      const Real far = len - near;
      const Real left = spec.f(spec.a + near, near, far);
      const Real right = spec.f(spec.b - near, far, near);
      sum += lv.weight[i] * (left + right);
    }
    out.evaluations += 2 * static_cast<long>(lv.offset.size());
    const Real estimate = len * mp::ldexp(sum, -l);
    require_finite(estimate, "quad");
    if (l > 0) {
      out.last_difference = mp::abs(estimate - previous);
      if (out.last_difference < tol) {
        out.value = estimate;
        out.levels = l;
        return out;
      }
    }
    previous = estimate;
  }
  throw ConvergenceError("quad: no convergence for " + spec.label);
}

Real quad(const QuadratureSpec& spec, const PrecisionContext& ctx) {
  return quad_detail(spec, ctx).value;
}

}  // namespace lambda_lab

// Tanh-sinh quadrature, closed forms of the trigonometric integrals, the
// log-cosine limit, and pointwise checks of the partial fractions of
// pi tan(pi x) and the product for cos(pi x).

#ifndef LAMBDA_LAB_ANALYSIS_HPP
#define LAMBDA_LAB_ANALYSIS_HPP

#include "lambda_lab/closedform.hpp"
#include "lambda_lab/precision.hpp"

#include <array>
#include <functional>
#include <string>

namespace lambda_lab {

/// Integrand called as f(x, x - a, b - x). The two distances are computed
/// without cancellation, so integrands singular at an endpoint should use
/// them instead of x.
using Integrand = std::function<Real(const Real& x, const Real& from_a, const Real& to_b)>;

struct QuadratureSpec {
  std::string label;
  Integrand f;
  Real a;
  Real b;
  Real tolerance;                  // zero means ctx.tolerance()
  bool endpoint_singular = false;  // informational; tanh-sinh handles both
};

struct QuadratureResult {
  Real value;
  Real last_difference;  // |S_L - S_{L-1}| at acceptance
  int levels = 0;
  long evaluations = 0;
};

/// Refines the step h = 2^-L until two successive estimates agree within the
/// tolerance. Throws std::invalid_argument for a >= b, ConvergenceError after
/// the maximum level.
QuadratureResult quad_detail(const QuadratureSpec& spec, const PrecisionContext& ctx);
Real quad(const QuadratureSpec& spec, const PrecisionContext& ctx);

/// int_0^(1/2) x^(2m-1) cos(2 k pi x) dx.
ClosedForm integral_cos_form(int m, int k);
Real integral_cos_closed(int m, int k, const PrecisionContext& ctx);
Real integral_cos_quad(int m, int k, const PrecisionContext& ctx);

/// int_0^(1/2) x^(m-1) log cos(pi x) dx.
ClosedForm integral_logcos_form(int m);
Real integral_logcos_closed(int m, const PrecisionContext& ctx);
Real integral_logcos_quad(int m, const PrecisionContext& ctx);

/// int_0^(1/2) ((2x)^(m+1) - 2x)/(1 - (2x)^2) dx.
ClosedForm integral_rational_form(int m);
Real integral_rational_closed(int m, const PrecisionContext& ctx);
Real integral_rational_quad(int m, const PrecisionContext& ctx);

/// g(x) = -(2x)^(2m) log cos(pi x) + log(1 - (2x)^2) sampled at
/// x = 1/2 - 10^-t for t = 3, 5, 7, plus the limit extrapolated from the model
/// g = L + a e log e + b e (e = 10^-t).
struct LimitCheck {
  std::array<int, 3> t{3, 5, 7};
  std::array<Real, 3> samples;
  std::array<Real, 3> errors;  // |sample - log(4/pi)|
  Real target;                 // log(4/pi)
  Real extrapolated;
  Real value;                  // the t = 7 sample
};
/// Throws ConvergenceError if the errors do not decrease with t.
LimitCheck limit_logcos_check(int m, const PrecisionContext& ctx);
Real limit_logcos_g(int m, const Real& x, const PrecisionContext& ctx);

/// One side evaluated directly, the other as a truncated series plus an
/// estimate of the omitted part.
struct PointwiseCheck {
  Real lhs;
  Real partial;        // truncated series / product
  Real tail_estimate;  // signed correction added to partial
  Real rhs;            // partial + tail_estimate
  Real residual() const { return boost::multiprecision::abs(lhs - partial); }
  Real corrected_residual() const { return boost::multiprecision::abs(lhs - rhs); }
};

/// lhs = -pi tan(pi x); partial = sum over odd n <= N of 8x/((2x)^2 - n^2).
/// Throws PoleError when 2x is an odd integer.
PointwiseCheck tan_pf_check(const Real& x, long n_max, const PrecisionContext& ctx);
/// lhs = cos(pi x); partial = product over odd n <= N of (1 - x^2/(n/2)^2).
PointwiseCheck cos_product_check(const Real& x, long n_max, const PrecisionContext& ctx);

/// -log 2 + sum_{k<=N} (-1)^(k-1) cos(2 k pi x)/k.
Real fourier_logcos_partial(const Real& x, long n_terms, const PrecisionContext& ctx);

}  // namespace lambda_lab

#endif  // LAMBDA_LAB_ANALYSIS_HPP

// Exact combinatorics and the zeta / eta / lambda / beta family at integer
// arguments s >= 2.

#ifndef LAMBDA_LAB_SPECFUN_HPP
#define LAMBDA_LAB_SPECFUN_HPP

#include "lambda_lab/precision.hpp"

namespace lambda_lab {

/// B_n for even n >= 0 (B_2 = 1/6). Odd or negative n throws
/// std::invalid_argument. Values come from a shared cache that is extended
/// with the recurrence sum_{j=0}^{n} C(n+1, j) B_j = 0.
BigRational bernoulli(int n);

BigInt factorial(int n);
/// Zero for k < 0 or k > n.
BigInt binom(int n, int k);
/// Stirling number of the second kind {p brace k}, 1 <= k <= p.
BigInt stirling2(int p, int k);

/// H_m = sum_{k<=m} 1/k, H_0 = 0.
BigRational harmonic(int m);
/// Alternating harmonic number sum_{k<=m} (-1)^(k-1)/k, with value 0 at m = 0.
BigRational alt_harmonic(int m);

/// Result of summing sum_{j >= start} (offset + step*j)^(-s).
struct PowerSum {
  Real value;
  Real remainder_bound;  // proven bound on |true sum - value|
  long direct_terms = 0;
  int correction_terms = 0;
};

/// sum_{j >= start} (offset + step*j)^(-s) for s >= 2. Direct summation up to
/// a switch index, then the Euler-Maclaurin tail with as many Bernoulli
/// corrections as needed. The remainder after q corrections is bounded by
/// |B_2q|/(2q)! |f^(2q-1)(N)|, valid because f^(2q) has constant sign.
/// The result's remainder_bound is below `target`.
PowerSum arithmetic_power_sum(long offset, long step, long start, int s, const Real& target,
                              const PrecisionContext& ctx);

/// Riemann zeta at integer s >= 2. Even s uses the Bernoulli closed form,
/// odd s the Euler-Maclaurin summation (cached per context).
Real zeta_int(int s, const PrecisionContext& ctx);
/// zeta(2n) through the Euler-Maclaurin route regardless of parity; used to
/// cross-check the Bernoulli formula.
Real zeta_summed(int s, const PrecisionContext& ctx);

/// Alternating zeta (1 - 2^(1-s)) zeta(s).
Real eta(int s, const PrecisionContext& ctx);
/// Dirichlet lambda: sum over all odd k >= 1 of k^-s = (1 - 2^-s) zeta(s).
Real lambda(int s, const PrecisionContext& ctx);
/// Dirichlet beta sum_{n>=0} (-1)^n (2n+1)^-s (beta(2) = Catalan's constant).
Real beta_catalan(int s, const PrecisionContext& ctx);
/// Partial sum sum_{n=0}^{terms-1} (-1)^n (2n+1)^-s of the beta series.
Real beta_partial(int s, long terms, const PrecisionContext& ctx);
/// Spectral zeta of the half-integer ladder, 2^s lambda(s).
Real spectral_zeta(int s, const PrecisionContext& ctx);

}  // namespace lambda_lab

#endif  // LAMBDA_LAB_SPECFUN_HPP

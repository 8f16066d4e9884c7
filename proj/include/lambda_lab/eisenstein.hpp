// Level-2 Eisenstein series
//   G*_k(tau) = sum over m, n in Z with n odd of (2 m tau + n)^(-2k):
// alternating divisor sums, the exact q-expansion, a truncated lattice sum
// with a proven remainder, and the odd-shift Fourier identity.

#ifndef LAMBDA_LAB_EISENSTEIN_HPP
#define LAMBDA_LAB_EISENSTEIN_HPP

#include "lambda_lab/closedform.hpp"
#include "lambda_lab/precision.hpp"

#include <vector>

namespace lambda_lab {

/// sigma*_k(n) = sum_{d | n} (-1)^d d^k, by trial division.
BigInt sigma_star(long n, int k);

struct QExpansion {
  int k = 1;  // weight 2k
  int n_terms = 0;
  ClosedForm constant_exact;            // 2 lambda(2k)
  std::vector<ClosedForm> coeff_exact;  // coefficient of q^n at index n-1
};

/// G*_k = 2 lambda(2k) + 2 (-1)^k pi^(2k)/(2k-1)! sum_{n<=N} sigma*_(2k-1)(n) q^n.
QExpansion qexpansion(int k, int n_terms);

struct ComplexEstimate {
  Complex value;
  Real bound;  // proven bound on |exact - value|
};

/// Sums the expansion at tau (Im tau > 0). The dropped terms are bounded with
/// |sigma*_(2k-1)(n)| <= n^(2k); throws DomainError if that bound is not below
/// the context tolerance.
ComplexEstimate qexpansion_eval(const QExpansion& e, const Complex& tau,
                                const PrecisionContext& ctx);

/// Box sum over |m| <= M, |n| <= 2M+1 (n odd), completed by the integral of
/// (2 m tau + n)^(-2k) over the plane outside the box (lattice density 1/2).
/// The bound covers the midpoint-rule error of that completion. Requires k >= 2
/// (the weight-2 sum is only conditionally convergent) and Im tau > 0.
ComplexEstimate lattice_sum(int k, const Complex& tau, long cutoff, const PrecisionContext& ctx);
/// The plain box sum without the completion term.
Complex lattice_box_sum(int k, const Complex& tau, long cutoff, const PrecisionContext& ctx);

struct FourierCheck {
  Complex lhs;      // sum over odd |n| <= M of (tau + n/2)^(-kk)
  Real lhs_tail;    // bound on the omitted odd n
  Complex rhs;      // ((-2 pi i)^kk/(kk-1)!) sum_{m=1}^L (-1)^m m^(kk-1) e^(2 pi i m tau)
  Real rhs_tail;    // bound on the omitted m > L
};
FourierCheck odd_fourier_check(int kk, const Complex& tau, long m_cut, long l_cut,
                               const PrecisionContext& ctx);

}  // namespace lambda_lab

#endif  // LAMBDA_LAB_EISENSTEIN_HPP

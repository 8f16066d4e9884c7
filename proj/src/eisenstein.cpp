#include "lambda_lab/eisenstein.hpp"

#include "lambda_lab/specfun.hpp"

#include <limits>

namespace lambda_lab {

namespace mp = boost::multiprecision;

namespace {

void require_upper_half(const Complex& tau) {
  if (!(tau.im > 0)) {
    throw DomainError("tau must lie in the upper half-plane");
  }
}

// sum_{n > N} n^p r^n <= (N+1)^p r^(N+1) / (1 - ((N+2)/(N+1))^p r), using that
// the term ratio ((n+1)/n)^p r decreases in n. Infinite if the ratio is >= 1.
Real poly_geometric_tail(int p, const Real& r, long n_last) {
  const Real n1(n_last + 1);
  const Real ratio = mp::pow((n1 + 1) / n1, p) * r;
  if (ratio >= 1) {
    return Real(std::numeric_limits<double>::infinity());
  }
  return mp::pow(n1, p) * mp::pow(r, n_last + 1) / (1 - ratio);
}

Complex q_of(const Complex& tau, const PrecisionContext& ctx) {
  // e^(2 pi i tau)
  const Real two_pi = 2 * ctx.pi();
  return elem::exp(Complex(-two_pi * tau.im, two_pi * tau.re), ctx);
}

}  // namespace

BigInt sigma_star(long n, int k) {
  if (n < 1) {
    throw std::invalid_argument("sigma_star: n must be >= 1");
  }
  if (k < 0) {
    throw std::invalid_argument("sigma_star: k must be >= 0");
  }
  BigInt acc(0);
  auto add = [&](long d) {
    BigInt t = mp::pow(BigInt(d), static_cast<unsigned>(k));
    if (d % 2 == 1) {
      acc -= t;
    } else {
      acc += t;
    }
  };
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      add(d);
      if (d != n / d) {
        add(n / d);
      }
    }
  }
  return acc;
}

QExpansion qexpansion(int k, int n_terms) {
  if (k < 1) {
    throw std::invalid_argument("qexpansion: k must be >= 1");
  }
  if (n_terms < 1) {
    throw std::invalid_argument("qexpansion: need at least one term");
  }
  QExpansion e;
  e.k = k;
  e.n_terms = n_terms;
  e.constant_exact = cf_scale(BigRational(2), from_lambda(2 * k));
  // (pi i)^(2k) = (-1)^k pi^(2k)
  BigRational scale(BigInt(k % 2 == 0 ? 2 : -2), factorial(2 * k - 1));
  e.coeff_exact.reserve(static_cast<std::size_t>(n_terms));
  for (int n = 1; n <= n_terms; ++n) {
    e.coeff_exact.emplace_back(scale * BigRational(sigma_star(n, 2 * k - 1)),
                               Monomial{2 * k, 0, 0, 0});
  }
  return e;
}

ComplexEstimate qexpansion_eval(const QExpansion& e, const Complex& tau,
                                const PrecisionContext& ctx) {
  require_upper_half(tau);
  PrecisionScope scope(ctx);
  const Complex q = q_of(tau, ctx);
  ComplexEstimate out;
  out.value = Complex(cf_eval(e.constant_exact, ctx), Real(0));
  Complex qn(Real(1), Real(0));
  for (const auto& c : e.coeff_exact) {
    qn *= q;
    out.value += qn * cf_eval(c, ctx);
  }
  // |coeff_n| <= 2 pi^(2k) n^(2k) / (2k-1)!
  const Real scale = 2 * mp::pow(ctx.pi(), 2 * e.k) / Real(factorial(2 * e.k - 1));
  out.bound = scale * poly_geometric_tail(2 * e.k, abs(q), e.n_terms);
  if (!(out.bound < ctx.tolerance())) {
    throw DomainError("qexpansion_eval: Im(tau) too small for the requested tolerance with " +
                      std::to_string(e.n_terms) + " terms");
  }
  return out;
}

Complex lattice_box_sum(int k, const Complex& tau, long cutoff, const PrecisionContext& ctx) {
  if (k < 2) {
    throw std::invalid_argument("lattice_sum: weight 2 (k = 1) is not absolutely convergent");
  }
  require_upper_half(tau);
  if (cutoff < 1) {
    throw std::invalid_argument("lattice_sum: cutoff must be >= 1");
  }
  PrecisionScope scope(ctx);
  const long n_max = 2 * cutoff + 1;
  const int p = 2 * k;
  // (m, n) and (-m, -n) give the same term; sum m >= 0 and double. For m = 0
  // the pairing is n <-> -n.
  Complex total(Real(0), Real(0));
  Real row0(0);
  for (long n = 1; n <= n_max; n += 2) {
    row0 += mp::pow(Real(n), -p);
  }
  total.re = 2 * row0;
  for (long m = 1; m <= cutoff; ++m) {
    const Complex z0 = Real(2 * m) * tau;
    Complex row(Real(0), Real(0));
    for (long n = -n_max; n <= n_max; n += 2) {
      row += pow(z0 + Complex(Real(n), Real(0)), -p);
    }
    total += Real(2) * row;
  }
  return total;
}

ComplexEstimate lattice_sum(int k, const Complex& tau, long cutoff, const PrecisionContext& ctx) {
  Complex box = lattice_box_sum(k, tau, cutoff, ctx);
  PrecisionScope scope(ctx);
  const int p = 2 * k;
  // Each lattice point is the centre of a 1 x 2 cell, so the sum over the
  // points outside the box is approximated by half the integral over the
  // plane outside [-A, A] x [-B, B]. The strips |m| > A integrate to zero
  // (each line integral in n vanishes). What remains is
  //   (1/2)/(2k-1) [G(B) - G(-B)],
  //   G(b) = [(2 m tau + b)^(2-2k) / ((2-2k) 2 tau)]_{m=-A}^{A}.
  const Real a = Real(cutoff) + Real(1) / 2;
  const Real b(2 * cutoff + 2);
  const Complex two_tau = Real(2) * tau;
  auto g = [&](const Real& bb) {
    const Complex hi = pow(Real(2) * a * tau + Complex(bb, Real(0)), 2 - p);
    const Complex lo = pow(Real(-2) * a * tau + Complex(bb, Real(0)), 2 - p);
    return (hi - lo) / (Real(2 - p) * two_tau);
  };
  Complex complement = (g(b) - g(-b)) * (Real(1) / (2 * (p - 1)));

  // Midpoint error per outside cell C with centre c:
  //   |f(c) - (1/2) int_C f| <= (1/24)(4|tau|^2 + 4) 2k(2k+1) max_C |z|^(-2k-2),
  // and |2 m tau + n| >= s |(m, n)| with s^2 the smallest eigenvalue of
  // [[4|tau|^2, 2 Re tau], [2 Re tau, 1]]. Every point of C is within
  // d = sqrt(5)/2 of c, and all outside cells lie beyond R = A from the
  // origin, so summing over cells is bounded by
  //   (1/2) 2 pi int_R^inf r (r - 2d)^(-2k-2) dr.
  const Real t2 = norm(tau);
  const Real g11 = 4 * t2;
  const Real g12 = 2 * tau.re;
  const Real half_trace = (g11 + 1) / 2;
  const Real s2 = half_trace - mp::sqrt((g11 - 1) * (g11 - 1) / 4 + g12 * g12);
  const Real d = mp::sqrt(Real(5)) / 2;
  const Real r0 = a - 2 * d;
  if (!(r0 > 0) || !(s2 > 0)) {
    throw std::invalid_argument("lattice_sum: cutoff too small for a remainder bound");
  }
  const Real radial = mp::pow(r0, -p) / p + 2 * d * mp::pow(r0, -p - 1) / (p + 1);
  const Real per_cell = (4 * t2 + 4) / 24 * Real(p) * Real(p + 1) * mp::pow(s2, -(k + 1));
  ComplexEstimate out;
  out.value = box + complement;
  out.bound = per_cell * ctx.pi() * radial;
  // rounding in the box sum
  out.bound += Real(4 * (cutoff + 1) * (2 * cutoff + 2)) * ctx.epsilon() * abs(out.value);
  return out;
}

FourierCheck odd_fourier_check(int kk, const Complex& tau, long m_cut, long l_cut,
                               const PrecisionContext& ctx) {
  if (kk < 2) {
    throw std::invalid_argument("odd_fourier_check: kk must be >= 2");
  }
  require_upper_half(tau);
  if (m_cut < 1 || l_cut < 1) {
    throw std::invalid_argument("odd_fourier_check: cutoffs must be >= 1");
  }
  PrecisionScope scope(ctx);
  FourierCheck out;
  out.lhs = Complex(Real(0), Real(0));
  for (long n = 1; n <= m_cut; n += 2) {
    const Real h = Real(n) / 2;
    out.lhs += pow(tau + Complex(h, Real(0)), -kk);
    out.lhs += pow(tau - Complex(h, Real(0)), -kk);
  }
  // |tau + n/2| >= (|n| - 2|Re tau|)/2; the omitted odd |n| >= M+1 contribute
  // at most 2^kk (M - 1 - 2|Re tau|)^(1-kk)/(kk-1).
  const Real base = Real(m_cut - 1) - 2 * mp::abs(tau.re);
  if (!(base > 0)) {
    throw std::invalid_argument("odd_fourier_check: M too small for Re(tau)");
  }
  out.lhs_tail = mp::pow(Real(2), kk) * mp::pow(base, 1 - kk) / (kk - 1);

  const Complex q = q_of(tau, ctx);
  // (-2 pi i)^kk
  const Complex c = pow(Complex(Real(0), -2 * ctx.pi()), kk) *
                    (Real(1) / Real(factorial(kk - 1)));
  Complex acc(Real(0), Real(0));
  Complex qm(Real(1), Real(0));
  for (long m = 1; m <= l_cut; ++m) {
    qm *= q;
    Complex t = qm * mp::pow(Real(m), kk - 1);
    if (m % 2 == 1) {
      acc -= t;
    } else {
      acc += t;
    }
  }
  out.rhs = c * acc;
  out.rhs_tail = abs(c) * poly_geometric_tail(kk - 1, abs(q), l_cut);
  return out;
}

}  // namespace lambda_lab

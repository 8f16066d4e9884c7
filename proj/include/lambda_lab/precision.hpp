// Extended-precision arithmetic and the precision context every computation
// in lambda_lab runs under.
//
// Real is an MPFR float whose precision is taken from the active
// PrecisionScope at construction time. Exact integers and rationals are GMP
// backed. A PrecisionContext owns the constants and memo tables for one
// working precision; constructing a PrecisionScope from it makes that
// precision the default for newly created Real values.
//
// Boost.Multiprecision keeps the default MPFR precision in a process-wide
// variable, so computations under different contexts must not interleave
// across threads. Caches inside a context are mutex protected.

#ifndef LAMBDA_LAB_PRECISION_HPP
#define LAMBDA_LAB_PRECISION_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <memory>
#include <stdexcept>
#include <string>

namespace lambda_lab {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;

/// Argument outside the mathematical domain of an operation (log of a
/// non-positive number, a pole of tan, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An iterative method (quadrature, summation) did not reach its target.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A NaN or infinity was produced where a finite value is required.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {
struct ContextState;
}

/// Requested output precision plus guard digits. All values computed under a
/// context are expected to carry absolute error well below 10^-decimal_digits
/// for well-conditioned inputs.
class PrecisionContext {
 public:
  static constexpr int kMinDigits = 10;
  static constexpr int kMinGuardDigits = 5;

  explicit PrecisionContext(int decimal_digits, int guard_digits = 15);

  int decimal_digits() const noexcept { return decimal_digits_; }
  int guard_digits() const noexcept { return guard_digits_; }
  int working_digits() const noexcept { return decimal_digits_ + guard_digits_; }

  /// 10^-decimal_digits.
  Real tolerance() const;
  /// 10^-working_digits; the target for internal truncation errors.
  Real epsilon() const;

  const Real& pi() const;
  const Real& log2() const;
  const Real& logpi() const;

  detail::ContextState& state() const { return *state_; }

 private:
  int decimal_digits_;
  int guard_digits_;
  std::shared_ptr<detail::ContextState> state_;
};

/// Makes the context's working precision the default for new Real values for
/// the lifetime of the scope. Scopes nest.
class PrecisionScope {
 public:
  explicit PrecisionScope(const PrecisionContext& ctx);
  explicit PrecisionScope(int working_digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

Real const_pi(const PrecisionContext& ctx);
Real const_log2(const PrecisionContext& ctx);
Real const_logpi(const PrecisionContext& ctx);

/// Exact rational to Real at the context precision.
Real to_real(const BigRational& q, const PrecisionContext& ctx);
Real to_real(const BigInt& n, const PrecisionContext& ctx);

/// Throws NumericError when x is NaN or infinite; returns x otherwise.
const Real& require_finite(const Real& x, const char* what);

/// Complex number as a pair of Reals with schoolbook arithmetic.
struct Complex {
  Real re;
  Real im;

  Complex() = default;
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(Real r) : re(std::move(r)), im(0) {}

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Real& s);
};

Complex operator+(Complex a, const Complex& b);
Complex operator-(Complex a, const Complex& b);
Complex operator-(const Complex& a);
Complex operator*(Complex a, const Complex& b);
Complex operator*(Complex a, const Real& s);
Complex operator*(const Real& s, Complex a);
Complex operator/(Complex a, const Complex& b);
Real abs(const Complex& z);
Real norm(const Complex& z);
Complex conj(const Complex& z);
/// z^n for any integer n (n < 0 inverts); binary powering.
Complex pow(const Complex& z, long n);

/// Elementary functions evaluated at the context precision with domain
/// checks. These are the only entry points that throw DomainError/PoleError.
namespace elem {
Real exp(const Real& x, const PrecisionContext& ctx);
Real log(const Real& x, const PrecisionContext& ctx);
Real sin(const Real& x, const PrecisionContext& ctx);
Real cos(const Real& x, const PrecisionContext& ctx);
/// Rejects |cos x| below the context tolerance.
Real tan(const Real& x, const PrecisionContext& ctx);
/// x^y for x > 0, or any x when y is integral.
Real pow(const Real& x, const Real& y, const PrecisionContext& ctx);
Complex exp(const Complex& z, const PrecisionContext& ctx);
}  // namespace elem

/// Round-to-nearest decimal in scientific notation with `significant` digits,
/// e.g. "3.1416e+00". Stable across platforms.
std::string to_decimal(const Real& x, int significant);

/// Number of leading decimal digits on which a and b agree, relative to
/// max(1, |a|); capped at `cap`.
int agreeing_digits(const Real& a, const Real& b, int cap = 1000);

}  // namespace lambda_lab

#endif  // LAMBDA_LAB_PRECISION_HPP

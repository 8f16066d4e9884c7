#include "lambda_lab/precision.hpp"

#include "context_state.hpp"

#include <algorithm>
#include <cmath>

namespace lambda_lab {

PrecisionContext::PrecisionContext(int decimal_digits, int guard_digits)
    : decimal_digits_(decimal_digits),
      guard_digits_(guard_digits),
      state_(std::make_shared<detail::ContextState>()) {
  if (decimal_digits < kMinDigits) {
    throw std::invalid_argument("PrecisionContext: decimal_digits must be >= " +
                                std::to_string(kMinDigits));
  }
  if (guard_digits < kMinGuardDigits) {
    throw std::invalid_argument("PrecisionContext: guard_digits must be >= " +
                                std::to_string(kMinGuardDigits));
  }
}

Real PrecisionContext::tolerance() const {
  PrecisionScope scope(*this);
  return boost::multiprecision::pow(Real(10), -decimal_digits_);
}

Real PrecisionContext::epsilon() const {
  PrecisionScope scope(*this);
  return boost::multiprecision::pow(Real(10), -working_digits());
}

namespace {

void fill_constants(const PrecisionContext& ctx, detail::ContextState& st) {
  std::call_once(st.constants_once, [&] {
    PrecisionScope scope(ctx);
    Real pi;
    Real log2;
    mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
    mpfr_const_log2(log2.backend().data(), MPFR_RNDN);
    st.pi = pi;
    st.log2 = log2;
    st.logpi = boost::multiprecision::log(pi);
  });
}

}  // namespace

const Real& PrecisionContext::pi() const {
  fill_constants(*this, *state_);
  return state_->pi;
}

const Real& PrecisionContext::log2() const {
  fill_constants(*this, *state_);
  return state_->log2;
}

const Real& PrecisionContext::logpi() const {
  fill_constants(*this, *state_);
  return state_->logpi;
}

PrecisionScope::PrecisionScope(const PrecisionContext& ctx)
    : PrecisionScope(ctx.working_digits()) {}

PrecisionScope::PrecisionScope(int working_digits) : saved_(Real::default_precision()) {
  Real::default_precision(static_cast<unsigned>(working_digits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

Real const_pi(const PrecisionContext& ctx) { return ctx.pi(); }
Real const_log2(const PrecisionContext& ctx) { return ctx.log2(); }
Real const_logpi(const PrecisionContext& ctx) { return ctx.logpi(); }

Real to_real(const BigRational& q, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  return Real(q);
}

Real to_real(const BigInt& n, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  return Real(n);
}

const Real& require_finite(const Real& x, const char* what) {
  if (!boost::multiprecision::isfinite(x)) {
    throw NumericError(std::string(what) + ": non-finite result");
  }
  return x;
}

// ---------------------------------------------------------------------------
// Complex

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  Real d = o.re * o.re + o.im * o.im;
  if (d == 0) {
    throw DomainError("Complex division by zero");
  }
  Real r = (re * o.re + im * o.im) / d;
  im = (im * o.re - re * o.im) / d;
  re = std::move(r);
  return *this;
}

Complex& Complex::operator*=(const Real& s) {
  re *= s;
  im *= s;
  return *this;
}

Complex operator+(Complex a, const Complex& b) { return a += b; }
Complex operator-(Complex a, const Complex& b) { return a -= b; }
Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
Complex operator*(Complex a, const Complex& b) { return a *= b; }
Complex operator*(Complex a, const Real& s) { return a *= s; }
Complex operator*(const Real& s, Complex a) { return a *= s; }
Complex operator/(Complex a, const Complex& b) { return a /= b; }

Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
Real abs(const Complex& z) { return boost::multiprecision::sqrt(norm(z)); }
Complex conj(const Complex& z) { return Complex(z.re, -z.im); }

Complex pow(const Complex& z, long n) {
  if (n < 0) {
    return Complex(Real(1), Real(0)) / pow(z, -n);
  }
  Complex result(Real(1), Real(0));
  Complex base = z;
  while (n > 0) {
    if (n & 1) {
      result *= base;
    }
    n >>= 1;
    if (n > 0) {
      base *= base;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Elementary functions

namespace elem {

Real exp(const Real& x, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  return require_finite(boost::multiprecision::exp(x), "exp");
}

Real log(const Real& x, const PrecisionContext& ctx) {
  if (x <= 0) {
    throw DomainError("log: argument must be positive");
  }
  PrecisionScope scope(ctx);
  return boost::multiprecision::log(x);
}

Real sin(const Real& x, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  return require_finite(boost::multiprecision::sin(x), "sin");
}

Real cos(const Real& x, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  return require_finite(boost::multiprecision::cos(x), "cos");
}

Real tan(const Real& x, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  Real c = boost::multiprecision::cos(x);
  if (boost::multiprecision::abs(c) < ctx.tolerance()) {
    throw PoleError("tan: argument too close to an odd multiple of pi/2");
  }
  return boost::multiprecision::sin(x) / c;
}

Real pow(const Real& x, const Real& y, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (x < 0 && boost::multiprecision::trunc(y) != y) {
    throw DomainError("pow: negative base with non-integral exponent");
  }
  if (x == 0 && y < 0) {
    throw PoleError("pow: zero to a negative power");
  }
  return require_finite(boost::multiprecision::pow(x, y), "pow");
}

Complex exp(const Complex& z, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  Real r = boost::multiprecision::exp(z.re);
  require_finite(r, "exp");
  return Complex(r * boost::multiprecision::cos(z.im), r * boost::multiprecision::sin(z.im));
}

}  // namespace elem

std::string to_decimal(const Real& x, int significant) {
  significant = std::max(significant, 1);
  if (x == 0) {
    std::string s = "0";
    if (significant > 1) {
      s += "." + std::string(static_cast<std::size_t>(significant - 1), '0');
    }
    return s + "e+00";
  }
  return x.str(significant - 1, std::ios_base::scientific);
}

int agreeing_digits(const Real& a, const Real& b, int cap) {
  Real scale = boost::multiprecision::abs(a);
  if (scale < 1) {
    scale = 1;
  }
  Real d = boost::multiprecision::abs(a - b) / scale;
  if (d == 0) {
    return cap;
  }
  Real digits = -boost::multiprecision::log10(d);
  long v = digits.convert_to<long>();
  return static_cast<int>(std::clamp<long>(v, 0, cap));
}

}  // namespace lambda_lab

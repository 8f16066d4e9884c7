// Exact linear combinations over the basis
//   pi^e * (log 2)^a * (log pi)^b * zeta(odd m >= 3)
// with rational coefficients. lambda, eta and even zeta values are rewritten
// into this basis on construction, so two forms describe the same number
// (modulo the unknown algebraic relations between odd zeta values) exactly
// when their term maps are identical.

#ifndef LAMBDA_LAB_CLOSEDFORM_HPP
#define LAMBDA_LAB_CLOSEDFORM_HPP

#include "lambda_lab/precision.hpp"

#include <json.hpp>

#include <compare>
#include <map>
#include <string>

namespace lambda_lab {

struct Monomial {
  int pi_exp = 0;
  int log2_deg = 0;   // 0 or 1
  int logpi_deg = 0;  // 0 or 1
  int zeta_arg = 0;   // 0 for none, otherwise odd >= 3

  auto operator<=>(const Monomial&) const = default;
};

class ClosedForm {
 public:
  using TermMap = std::map<Monomial, BigRational>;

  ClosedForm() = default;
  /// A rational constant.
  explicit ClosedForm(const BigRational& q);
  /// A single term; validates the monomial invariants.
  ClosedForm(const BigRational& coeff, const Monomial& m);

  static ClosedForm pi_power(int e);
  static ClosedForm log2();
  static ClosedForm logpi();

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Coefficient of a monomial, zero when absent.
  BigRational coeff(const Monomial& m) const;

  ClosedForm& operator+=(const ClosedForm& o);
  ClosedForm& operator-=(const ClosedForm& o);
  ClosedForm& operator*=(const BigRational& q);

  /// Multiplies every term by pi^e.
  ClosedForm times_pi_power(int e) const;

  bool operator==(const ClosedForm& o) const = default;

 private:
  void add_term(const Monomial& m, const BigRational& c);
  TermMap terms_;
};

ClosedForm operator+(ClosedForm a, const ClosedForm& b);
ClosedForm operator-(ClosedForm a, const ClosedForm& b);
ClosedForm operator-(ClosedForm a);
ClosedForm operator*(const BigRational& q, ClosedForm a);

inline ClosedForm cf_add(const ClosedForm& a, const ClosedForm& b) { return a + b; }
inline ClosedForm cf_scale(const BigRational& q, const ClosedForm& a) { return q * a; }
inline bool cf_eq(const ClosedForm& a, const ClosedForm& b) { return a == b; }
Real cf_eval(const ClosedForm& a, const PrecisionContext& ctx);

/// Canonical forms of zeta(k), eta(k), lambda(k) for k >= 2: even k becomes
/// rational * pi^k, odd k rational * zeta(k).
ClosedForm from_zeta(int k);
ClosedForm from_eta(int k);
ClosedForm from_lambda(int k);

/// Human readable, e.g. "log(2) - log(pi) + 1 - 7ζ(3)/(2π²)".
std::string to_string(const ClosedForm& a);
/// [{coeff_num, coeff_den, pi_exp, log2, logpi, zeta}, ...] in map order;
/// numerator and denominator are decimal strings, zeta is null when absent.
nlohmann::json to_json(const ClosedForm& a);
ClosedForm closed_form_from_json(const nlohmann::json& j);

// ---------------------------------------------------------------------------
// Right-hand sides of the series identities.

/// sum_{n>=1} (lambda(2n) - 1) = 1/4.
ClosedForm closed_lambda_plain();
/// sum_{n>=1} (lambda(2n) - 1)/n = log 4 - log pi.
ClosedForm closed_lambda_over_n();
/// sum_{n>=1} (zeta(2n) - 1) = 3/4.
ClosedForm closed_zeta_plain();
/// sum_{n>=1} (zeta(2n) - 1)/n = log 2.
ClosedForm closed_zeta_over_n();

/// sum_{n>=1} (lambda(2n) - 1)/(n + m), m >= 1.
ClosedForm closed_nm(int m);
/// sum_{n>=1} (lambda(2n) - 1)/(2n + m), m >= 1.
ClosedForm closed_2nm(int m);
/// sum_{n>=1} (zeta(2n) - 1)/(n + m), m >= 1.
ClosedForm closed_zeta_nm(int m);
/// sum_{n>=1} (zeta(2n) - 1)/(2n + m), m >= 1.
ClosedForm closed_zeta_2nm(int m);

/// Variant 1: sum zeta(2n)/(4^n (n+1)); variant 2: sum zeta(2n)/(4^n (n+2)).
ClosedForm closed_remark_sums(int variant);

/// Taylor coefficient c_n of f(x) = (pi x/2) tan(pi x) - (2x)^2/(1-(2x)^2)
/// about x = 1/2 in its zeta form. Also builds the lambda form
/// 2^(-delta_n) 2^(2c)/(2^(2c)-1) lambda(2c) - (-1)^n/4, c = ceil(n/2), and
/// throws std::logic_error if the two disagree.
ClosedForm closed_taylor_coeff(int n);
/// The lambda form of c_n on its own (n >= 1).
ClosedForm closed_taylor_coeff_lambda_form(int n);

/// sum_{n>=1} C(2n, p) (lambda(2n) - 1)
///   = lambda(2c)/(2^(2c) - 1) - (-1)^p/2^(p+2),  c = ceil(p/2).
ClosedForm closed_binom(int p);
/// sum_{n>=1} n^p (lambda(2n) - 1)
///   = 2^-p sum_k {p brace k} k! closed_binom(k).
ClosedForm closed_npow(int p);
/// sum_{n>=1} C(2n, p) zeta(2n)/4^n = (1 - 2^(-2c)) zeta(2c).
ClosedForm closed_zeta_binom(int p);
/// sum_{n>=1} n(2n-1)...(2n-p+1) (lambda(2n) - 1) = (p!/2) closed_binom(p):
/// the falling-factorial normalization used by the worked examples.
ClosedForm closed_binom_falling(int p);
/// sum_{n>=1} n(2n-1)...(2n-p+1) zeta(2n)/4^n = (p!/2) closed_zeta_binom(p).
ClosedForm closed_zeta_binom_falling(int p);

}  // namespace lambda_lab

#endif  // LAMBDA_LAB_CLOSEDFORM_HPP

// Direct summation of the lambda(2n) - 1 and zeta(2n) series families with
// proven truncation bounds, and the generating function
//   f(x) = sum_{n>=1} (lambda(2n) - 1) (2x)^(2n),  |x| < 3/2.

#ifndef LAMBDA_LAB_SERIES_HPP
#define LAMBDA_LAB_SERIES_HPP

#include "lambda_lab/precision.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lambda_lab {

/// lambda(2n) - 1 = sum over odd k >= 3 of k^(-2n), summed directly (no
/// cancellation). Always 0 < value < 4 * 9^-n. Cached per context.
Real lambda_minus_one(int n, const PrecisionContext& ctx);
/// zeta(2n) - 1 = sum_{k>=2} k^(-2n), summed directly. Cached per context.
Real zeta_minus_one(int n, const PrecisionContext& ctx);

enum class FamilyTag {
  LambdaPlain,       // sum (lambda(2n) - 1)
  LambdaOverN,       // sum (lambda(2n) - 1)/n
  LambdaShiftN,      // sum (lambda(2n) - 1)/(n + m)
  LambdaShift2N,     // sum (lambda(2n) - 1)/(2n + m)
  LambdaBinom,       // sum C(2n, p) (lambda(2n) - 1)
  LambdaNPow,        // sum n^p (lambda(2n) - 1)
  ZetaPlain,         // sum (zeta(2n) - 1)
  ZetaOverN,         // sum (zeta(2n) - 1)/n
  ZetaShiftN,        // sum (zeta(2n) - 1)/(n + m)
  ZetaShift2N,       // sum (zeta(2n) - 1)/(2n + m)
  ZetaQuarterShift,  // sum zeta(2n)/(4^n (n + r)), r in {1, 2}
  ZetaBinomQuarter,  // sum C(2n, p) zeta(2n)/4^n
};

struct SeriesFamily {
  FamilyTag tag = FamilyTag::LambdaPlain;
  int param = 0;  // m, p or r; unused (0) for the parameterless families

  /// Throws std::invalid_argument when the parameter is out of range.
  void validate() const;
  bool operator==(const SeriesFamily&) const = default;
};

/// "LambdaShiftN{3}", "LambdaPlain", ...
std::string to_string(const SeriesFamily& f);
/// Table names as used on the command line: "lambda-shift-n", ...
/// Returns nullopt for unknown names. The parameter is supplied separately.
std::optional<FamilyTag> parse_family_tag(const std::string& name);
std::string family_tag_name(FamilyTag tag);
bool family_has_param(FamilyTag tag);
std::vector<FamilyTag> all_family_tags();

struct SumResult {
  Real value;
  Real tail_bound;  // proven bound on |exact sum - value|
  long terms_used = 0;
};

/// Sums until the proven bound (outer tail plus accumulated inner errors)
/// falls below tolerance/100. Throws ConvergenceError after max_terms.
SumResult sum_family(const SeriesFamily& f, const PrecisionContext& ctx, long max_terms = 100000);
/// The first `terms` terms, with the proven bound on the omitted remainder.
SumResult partial_sum(const SeriesFamily& f, long terms, const PrecisionContext& ctx);
/// The n-th term of the family (n >= 1).
Real family_term(const SeriesFamily& f, int n, const PrecisionContext& ctx);

/// Closed formula for f(x). Within 10^(-digits/2) of 0 or +-1/2 the series is
/// used instead. |x| >= 3/2 throws DomainError.
Real f_eval(const Real& x, const PrecisionContext& ctx);
/// f(x) through its power series in (2x)^2 with a proven tail.
SumResult f_series(const Real& x, const PrecisionContext& ctx);

/// Taylor coefficient c_p of f about x = 1/2, as 2^p sum C(2n, p)(lambda(2n) - 1).
Real taylor_coeff_numeric(int p, const PrecisionContext& ctx);

}  // namespace lambda_lab

#endif  // LAMBDA_LAB_SERIES_HPP

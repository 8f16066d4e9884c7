#include "lambda_lab/series.hpp"

#include "lambda_lab/specfun.hpp"

#include "context_state.hpp"

#include <array>
#include <limits>
#include <mutex>

namespace lambda_lab {

namespace mp = boost::multiprecision;

namespace {

struct Cached {
  Real value;
  Real bound;
};

// Sums k^(-2n) over k = offset, offset + step, ... to relative accuracy
// epsilon/1000 against the leading term, memoized in the given maps.
Cached cached_tail_sum(int n, long offset, long step, std::map<int, Real>& values,
                       std::map<int, Real>& bounds, const PrecisionContext& ctx) {
  if (n < 1) {
    throw std::invalid_argument("series: index n must be >= 1");
  }
  auto& st = ctx.state();
  {
    std::lock_guard<std::mutex> lock(st.memo_mutex);
    if (auto it = values.find(n); it != values.end()) {
      return {it->second, bounds.at(n)};
    }
  }
  PrecisionScope scope(ctx);
  const Real leading = mp::pow(Real(offset), -2 * n);
  PowerSum s = arithmetic_power_sum(offset, step, 0, 2 * n, leading * ctx.epsilon() / 1000, ctx);
  std::lock_guard<std::mutex> lock(st.memo_mutex);
  values.emplace(n, s.value);
  bounds.emplace(n, s.remainder_bound);
  return {s.value, s.remainder_bound};
}

Cached lambda_minus_one_cached(int n, const PrecisionContext& ctx) {
  auto& st = ctx.state();
  return cached_tail_sum(n, 3, 2, st.lambda_minus_one, st.lambda_minus_one_bound, ctx);
}

Cached zeta_minus_one_cached(int n, const PrecisionContext& ctx) {
  auto& st = ctx.state();
  return cached_tail_sum(n, 2, 1, st.zeta_minus_one, st.zeta_minus_one_bound, ctx);
}

enum class Base { Lambda, Zeta, ZetaQuarter };

Base base_of(FamilyTag t) {
  switch (t) {
    case FamilyTag::LambdaPlain:
    case FamilyTag::LambdaOverN:
    case FamilyTag::LambdaShiftN:
    case FamilyTag::LambdaShift2N:
    case FamilyTag::LambdaBinom:
    case FamilyTag::LambdaNPow:
      return Base::Lambda;
    case FamilyTag::ZetaPlain:
    case FamilyTag::ZetaOverN:
    case FamilyTag::ZetaShiftN:
    case FamilyTag::ZetaShift2N:
      return Base::Zeta;
    case FamilyTag::ZetaQuarterShift:
    case FamilyTag::ZetaBinomQuarter:
      return Base::ZetaQuarter;
  }
  throw std::logic_error("unknown family");
}

// Base value v(n) with its computation error.
Cached base_value(Base b, int n, const PrecisionContext& ctx) {
  switch (b) {
    case Base::Lambda:
      return lambda_minus_one_cached(n, ctx);
    case Base::Zeta:
      return zeta_minus_one_cached(n, ctx);
    case Base::ZetaQuarter: {
      // zeta(2n)/4^n = 4^-n (1 + (zeta(2n) - 1))
      Cached z = zeta_minus_one_cached(n, ctx);
      const Real q = mp::pow(Real(4), -n);
      return {q * (1 + z.value), q * z.bound};
    }
  }
  throw std::logic_error("unknown base");
}

// v(n) <= K(n) r^n with K nonincreasing in n:
//   lambda(2n) - 1 <= 9^-n (1 + 3/(2(2n-1)))    (first term + integral test)
//   zeta(2n) - 1   <= 4^-n (1 + 2/(2n-1))
//   zeta(2n)/4^n   <= 4^-n zeta(2n) <= 4^-n (1 + 4^-n (1 + 2/(2n-1)))
void base_majorant(Base b, int n, Real& k, Real& r) {
  const Real tn(2 * n - 1);
  switch (b) {
    case Base::Lambda:
      k = 1 + Real(3) / (2 * tn);
      r = Real(1) / 9;
      return;
    case Base::Zeta:
      k = 1 + 2 / tn;
      r = Real(1) / 4;
      return;
    case Base::ZetaQuarter:
      k = 1 + mp::pow(Real(4), -n) * (1 + 2 / tn);
      r = Real(1) / 4;
      return;
  }
}

// Weight w(n) >= 0 for every family.
Real weight(const SeriesFamily& f, long n) {
  const long m = f.param;
  switch (f.tag) {
    case FamilyTag::LambdaPlain:
    case FamilyTag::ZetaPlain:
      return Real(1);
    case FamilyTag::LambdaOverN:
    case FamilyTag::ZetaOverN:
      return Real(1) / n;
    case FamilyTag::LambdaShiftN:
    case FamilyTag::ZetaShiftN:
    case FamilyTag::ZetaQuarterShift:
      return Real(1) / (n + m);
    case FamilyTag::LambdaShift2N:
    case FamilyTag::ZetaShift2N:
      return Real(1) / (2 * n + m);
    case FamilyTag::LambdaBinom:
    case FamilyTag::ZetaBinomQuarter:
      return Real(binom(static_cast<int>(2 * n), static_cast<int>(m)));
    case FamilyTag::LambdaNPow:
      return mp::pow(Real(n), m);
  }
  throw std::logic_error("unknown family");
}

// Bound on sum_{n > terms} w(n) v(n).
//
// For n >= N+1 = terms+1: v(n) <= K(N+1) r^n and w(n+1)/w(n) <= rho where
// rho = max(1, w(N+2)/w(N+1)). The weight ratios C(2n+2,p)/C(2n,p) and
// ((n+1)/n)^p decrease in n, and all other weights decrease, so the tail is
// at most K(N+1) w(N+1) r^(N+1) / (1 - rho r). Requires rho r < 1 and, for
// the binomial weights, 2(N+1) >= p so the ratio is defined.
Real outer_tail(const SeriesFamily& f, long terms, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Base b = base_of(f.tag);
  const long n1 = terms + 1;
  Real k;
  Real r;
  base_majorant(b, static_cast<int>(n1), k, r);
  const Real w1 = weight(f, n1);
  const Real w2 = weight(f, n1 + 1);
  Real rho(1);
  if (w1 > 0 && w2 > w1) {
    rho = w2 / w1;
  } else if (w1 == 0) {
    // C(2n, p) still zero at n = N+1: bound the weight by (2n)^p / p! instead,
    // whose ratio is ((n+1)/n)^p.
    const long p = f.param;
    rho = mp::pow(Real(n1 + 1) / n1, p);
    Real wm = mp::pow(Real(2 * n1), p) / Real(factorial(static_cast<int>(p)));
    if (rho * r >= 1) {
      return Real(std::numeric_limits<double>::infinity());
    }
    return k * wm * mp::pow(r, n1) / (1 - rho * r);
  }
  if (rho * r >= 1) {
    return Real(std::numeric_limits<double>::infinity());
  }
  return k * w1 * mp::pow(r, n1) / (1 - rho * r);
}

}  // namespace

Real lambda_minus_one(int n, const PrecisionContext& ctx) {
  return lambda_minus_one_cached(n, ctx).value;
}

Real zeta_minus_one(int n, const PrecisionContext& ctx) {
  return zeta_minus_one_cached(n, ctx).value;
}

void SeriesFamily::validate() const {
  if (family_has_param(tag)) {
    if (param < 1) {
      throw std::invalid_argument("SeriesFamily: parameter must be >= 1");
    }
    if (tag == FamilyTag::ZetaQuarterShift && param > 2) {
      throw std::invalid_argument("SeriesFamily: ZetaQuarterShift needs r in {1, 2}");
    }
  } else if (param != 0) {
    throw std::invalid_argument("SeriesFamily: family takes no parameter");
  }
}

namespace {

struct TagInfo {
  FamilyTag tag;
  const char* ident;
  const char* cli_name;
  bool has_param;
};

constexpr std::array<TagInfo, 12> kTags{{
    {FamilyTag::LambdaPlain, "LambdaPlain", "lambda-plain", false},
    {FamilyTag::LambdaOverN, "LambdaOverN", "lambda-over-n", false},
    {FamilyTag::LambdaShiftN, "LambdaShiftN", "lambda-shift-n", true},
    {FamilyTag::LambdaShift2N, "LambdaShift2N", "lambda-shift-2n", true},
    {FamilyTag::LambdaBinom, "LambdaBinom", "lambda-binom", true},
    {FamilyTag::LambdaNPow, "LambdaNPow", "lambda-npow", true},
    {FamilyTag::ZetaPlain, "ZetaPlain", "zeta-plain", false},
    {FamilyTag::ZetaOverN, "ZetaOverN", "zeta-over-n", false},
    {FamilyTag::ZetaShiftN, "ZetaShiftN", "zeta-shift-n", true},
    {FamilyTag::ZetaShift2N, "ZetaShift2N", "zeta-shift-2n", true},
    {FamilyTag::ZetaQuarterShift, "ZetaQuarterShift", "zeta-quarter-shift", true},
    {FamilyTag::ZetaBinomQuarter, "ZetaBinomQuarter", "zeta-binom-quarter", true},
}};

const TagInfo& info(FamilyTag t) {
  for (const auto& i : kTags) {
    if (i.tag == t) {
      return i;
    }
  }
  throw std::logic_error("unknown family");
}

}  // namespace

std::string to_string(const SeriesFamily& f) {
  const auto& i = info(f.tag);
  return i.has_param ? std::string(i.ident) + "{" + std::to_string(f.param) + "}" : i.ident;
}

std::optional<FamilyTag> parse_family_tag(const std::string& name) {
  for (const auto& i : kTags) {
    if (name == i.cli_name || name == i.ident) {
      return i.tag;
    }
  }
  return std::nullopt;
}

std::string family_tag_name(FamilyTag tag) { return info(tag).cli_name; }
bool family_has_param(FamilyTag tag) { return info(tag).has_param; }

std::vector<FamilyTag> all_family_tags() {
  std::vector<FamilyTag> out;
  for (const auto& i : kTags) {
    out.push_back(i.tag);
  }
  return out;
}

Real family_term(const SeriesFamily& f, int n, const PrecisionContext& ctx) {
  f.validate();
  PrecisionScope scope(ctx);
  return weight(f, n) * base_value(base_of(f.tag), n, ctx).value;
}

SumResult partial_sum(const SeriesFamily& f, long terms, const PrecisionContext& ctx) {
  f.validate();
  if (terms < 0) {
    throw std::invalid_argument("partial_sum: negative term count");
  }
  PrecisionScope scope(ctx);
  const Base b = base_of(f.tag);
  SumResult out;
  out.value = 0;
  Real inner(0);
  for (long n = 1; n <= terms; ++n) {
    const Real w = weight(f, n);
    if (w == 0) {
      continue;
    }
    Cached v = base_value(b, static_cast<int>(n), ctx);
    out.value += w * v.value;
    inner += w * v.bound;
  }
  out.tail_bound = outer_tail(f, terms, ctx) + inner;
  out.terms_used = terms;
  return out;
}

SumResult sum_family(const SeriesFamily& f, const PrecisionContext& ctx, long max_terms) {
  f.validate();
  PrecisionScope scope(ctx);
  const Real target = ctx.tolerance() / 100;
  const Base b = base_of(f.tag);
  SumResult out;
  out.value = 0;
  Real inner(0);
  for (long n = 1; n <= max_terms; ++n) {
    const Real w = weight(f, n);
    if (w != 0) {
      Cached v = base_value(b, static_cast<int>(n), ctx);
      out.value += w * v.value;
      inner += w * v.bound;
    }
    const Real tail = outer_tail(f, n, ctx);
    if (tail + inner < target) {
      out.tail_bound = tail + inner;
      out.terms_used = n;
      return out;
    }
  }
  throw ConvergenceError("sum_family: " + to_string(f) + " did not reach the tolerance within " +
                         std::to_string(max_terms) + " terms");
}

SumResult f_series(const Real& x, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (mp::abs(x) >= Real(3) / 2) {
    throw DomainError("f: the series diverges for |x| >= 3/2");
  }
  const Real target = ctx.tolerance() / 100;
  const Real y = 4 * x * x;  // (2x)^2
  const Real q = y / 9;
  SumResult out;
  out.value = 0;
  Real inner(0);
  Real y_pow(1);
  constexpr long kMaxTerms = 200000;
  for (long n = 1; n <= kMaxTerms; ++n) {
    y_pow *= y;
    Cached v = lambda_minus_one_cached(static_cast<int>(n), ctx);
    out.value += y_pow * v.value;
    inner += y_pow * v.bound;
    // remaining terms: (lambda(2k) - 1) y^k <= K(n+1) q^k, geometric in q
    Real k;
    Real r;
    base_majorant(Base::Lambda, static_cast<int>(n + 1), k, r);
    const Real tail = k * mp::pow(q, n + 1) / (1 - q);
    if (tail + inner < target) {
      out.tail_bound = tail + inner;
      out.terms_used = n;
      return out;
    }
  }
  throw ConvergenceError("f_series: too close to |x| = 3/2 for the term budget");
}

Real f_eval(const Real& x, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real ax = mp::abs(x);
  if (ax >= Real(3) / 2) {
    throw DomainError("f: diverges for |x| >= 3/2");
  }
  const Real guard = mp::pow(Real(10), -(ctx.decimal_digits() / 2));
  if (ax < guard || mp::abs(ax - Real(1) / 2) < guard) {
    return f_series(x, ctx).value;
  }
  const Real& pi = ctx.pi();
  const Real u = ax - Real(1) / 2;  // exact
  if (mp::abs(u) >= Real(1) / 10) {
    const Real y = 4 * x * x;
    return pi * x / 2 * elem::tan(pi * x, ctx) - y / (1 - y);
  }
  // Near +-1/2 both terms grow like 1/|u| and cancel, so add log10(1/|u|)
  // digits and use tan(pi |x|) = -cot(pi u), 1 - 4x^2 = -4u(1 + u).
  const int extra = static_cast<int>(mp::ceil(-mp::log10(mp::abs(u))).convert_to<long>()) + 5;
  Real out;
  {
    PrecisionContext hi(ctx.decimal_digits() + extra, ctx.guard_digits());
    PrecisionScope hs(hi);
    const Real uh(u);
    const Real axh(ax);
    const Real t = -mp::cos(hi.pi() * uh) / mp::sin(hi.pi() * uh);
    const Real y = 4 * axh * axh;
    out = hi.pi() * axh / 2 * t - y / (-4 * uh * (1 + uh));
  }
  return Real(out);
}

Real taylor_coeff_numeric(int p, const PrecisionContext& ctx) {
  if (p < 1) {
    throw std::invalid_argument("taylor_coeff_numeric: p must be >= 1");
  }
  PrecisionScope scope(ctx);
  return mp::pow(Real(2), p) * sum_family({FamilyTag::LambdaBinom, p}, ctx).value;
}

}  // namespace lambda_lab

#include "lambda_lab/closedform.hpp"

#include "lambda_lab/specfun.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace lambda_lab {

namespace mp = boost::multiprecision;

namespace {

BigRational rat(long num, long den = 1) { return BigRational(BigInt(num), BigInt(den)); }

BigInt pow2(int k) { return BigInt(1) << k; }

BigRational sign(int exponent) { return exponent % 2 == 0 ? rat(1) : rat(-1); }

int ceil_half(int n) { return (n + 1) / 2; }

void validate(const Monomial& m) {
  if (m.log2_deg < 0 || m.log2_deg > 1 || m.logpi_deg < 0 || m.logpi_deg > 1) {
    throw std::invalid_argument("Monomial: log degrees must be 0 or 1");
  }
  if (m.zeta_arg != 0 && (m.zeta_arg < 3 || m.zeta_arg % 2 == 0)) {
    throw std::invalid_argument("Monomial: zeta argument must be odd and >= 3");
  }
}

void require_at_least(int value, int lower, const char* what) {
  if (value < lower) {
    throw std::invalid_argument(std::string(what) + ": argument must be >= " +
                                std::to_string(lower));
  }
}

}  // namespace

ClosedForm::ClosedForm(const BigRational& q) { add_term(Monomial{}, q); }

ClosedForm::ClosedForm(const BigRational& coeff, const Monomial& m) {
  validate(m);
  add_term(m, coeff);
}

ClosedForm ClosedForm::pi_power(int e) { return ClosedForm(rat(1), Monomial{e, 0, 0, 0}); }
ClosedForm ClosedForm::log2() { return ClosedForm(rat(1), Monomial{0, 1, 0, 0}); }
ClosedForm ClosedForm::logpi() { return ClosedForm(rat(1), Monomial{0, 0, 1, 0}); }

BigRational ClosedForm::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? rat(0) : it->second;
}

void ClosedForm::add_term(const Monomial& m, const BigRational& c) {
  if (c == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

ClosedForm& ClosedForm::operator+=(const ClosedForm& o) {
  for (const auto& [m, c] : o.terms_) {
    add_term(m, c);
  }
  return *this;
}

ClosedForm& ClosedForm::operator-=(const ClosedForm& o) {
  for (const auto& [m, c] : o.terms_) {
    add_term(m, -c);
  }
  return *this;
}

ClosedForm& ClosedForm::operator*=(const BigRational& q) {
  if (q == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) {
    c *= q;
  }
  return *this;
}

ClosedForm ClosedForm::times_pi_power(int e) const {
  ClosedForm out;
  for (const auto& [m, c] : terms_) {
    Monomial shifted = m;
    shifted.pi_exp += e;
    out.add_term(shifted, c);
  }
  return out;
}

ClosedForm operator+(ClosedForm a, const ClosedForm& b) { return a += b; }
ClosedForm operator-(ClosedForm a, const ClosedForm& b) { return a -= b; }
ClosedForm operator-(ClosedForm a) { return a *= rat(-1); }
ClosedForm operator*(const BigRational& q, ClosedForm a) { return a *= q; }

Real cf_eval(const ClosedForm& a, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  Real acc(0);
  for (const auto& [m, c] : a.terms()) {
    Real t(c);
    if (m.pi_exp != 0) {
      t *= mp::pow(ctx.pi(), m.pi_exp);
    }
    if (m.log2_deg) {
      t *= ctx.log2();
    }
    if (m.logpi_deg) {
      t *= ctx.logpi();
    }
    if (m.zeta_arg) {
      t *= zeta_int(m.zeta_arg, ctx);
    }
    acc += t;
  }
  return acc;
}

ClosedForm from_zeta(int k) {
  require_at_least(k, 2, "from_zeta");
  if (k % 2 == 1) {
    return ClosedForm(rat(1), Monomial{0, 0, 0, k});
  }
  // zeta(2n) = (-1)^(n+1) B_2n 2^(2n) / (2 (2n)!) * pi^(2n)
  BigRational q = bernoulli(k) * BigRational(pow2(k)) / (BigRational(2) * BigRational(factorial(k)));
  if ((k / 2) % 2 == 0) {
    q = -q;
  }
  return ClosedForm(q, Monomial{k, 0, 0, 0});
}

ClosedForm from_lambda(int k) {
  require_at_least(k, 2, "from_lambda");
  return (rat(1) - BigRational(BigInt(1), pow2(k))) * from_zeta(k);
}

ClosedForm from_eta(int k) {
  require_at_least(k, 2, "from_eta");
  return (rat(1) - BigRational(BigInt(1), pow2(k - 1))) * from_zeta(k);
}

// ---------------------------------------------------------------------------
// Formatting

namespace {

std::string superscript(int e) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s;
  for (char c : std::to_string(e)) {
    s += digits[c - '0'];
  }
  return s;
}

std::string pi_factor(int e) { return e == 1 ? "π" : "π" + superscript(e); }

// Display order: logs, then rational * pi^e with e ascending from 0, then
// odd zeta values.
int display_group(const Monomial& m) {
  if (m.log2_deg || m.logpi_deg) {
    return 0;
  }
  return m.zeta_arg ? 2 : 1;
}

bool display_less(const Monomial& a, const Monomial& b) {
  auto key = [](const Monomial& m) {
    int pi_key = m.pi_exp >= 0 ? m.pi_exp : 1000 - m.pi_exp;
    return std::make_tuple(display_group(m), -m.log2_deg, m.zeta_arg, pi_key, m.logpi_deg);
  };
  return key(a) < key(b);
}

std::string format_term(const Monomial& m, const BigRational& magnitude) {
  const BigInt num = mp::numerator(magnitude);
  const BigInt den = mp::denominator(magnitude);

  std::string factors;
  if (m.pi_exp > 0) {
    factors += pi_factor(m.pi_exp);
  }
  if (m.log2_deg) {
    factors += "log(2)";
  }
  if (m.logpi_deg) {
    factors += "log(π)";
  }
  if (m.zeta_arg) {
    factors += "ζ(" + std::to_string(m.zeta_arg) + ")";
  }
  std::string top = (num == 1 && !factors.empty()) ? factors : num.str() + factors;

  std::string bottom;
  const bool has_den = den != 1;
  if (m.pi_exp < 0) {
    bottom = has_den ? "(" + den.str() + pi_factor(-m.pi_exp) + ")" : pi_factor(-m.pi_exp);
  } else if (has_den) {
    bottom = den.str();
  }
  return bottom.empty() ? top : top + "/" + bottom;
}

}  // namespace

std::string to_string(const ClosedForm& a) {
  if (a.is_zero()) {
    return "0";
  }
  std::vector<std::pair<Monomial, BigRational>> items(a.terms().begin(), a.terms().end());
  std::stable_sort(items.begin(), items.end(),
                   [](const auto& x, const auto& y) { return display_less(x.first, y.first); });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : items) {
    const bool negative = c < 0;
    const std::string body = format_term(m, negative ? BigRational(-c) : c);
    if (first) {
      out = negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

nlohmann::json to_json(const ClosedForm& a) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : a.terms()) {
    arr.push_back({{"coeff_num", mp::numerator(c).str()},
                   {"coeff_den", mp::denominator(c).str()},
                   {"pi_exp", m.pi_exp},
                   {"log2", m.log2_deg},
                   {"logpi", m.logpi_deg},
                   {"zeta", m.zeta_arg ? nlohmann::json(m.zeta_arg) : nlohmann::json(nullptr)}});
  }
  return arr;
}

ClosedForm closed_form_from_json(const nlohmann::json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("closed_form_from_json: expected an array");
  }
  ClosedForm out;
  for (const auto& t : j) {
    Monomial m{t.at("pi_exp").get<int>(), t.at("log2").get<int>(), t.at("logpi").get<int>(),
               t.at("zeta").is_null() ? 0 : t.at("zeta").get<int>()};
    BigRational c(BigInt(t.at("coeff_num").get<std::string>()),
                  BigInt(t.at("coeff_den").get<std::string>()));
    out += ClosedForm(c, m);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Identity right-hand sides

ClosedForm closed_lambda_plain() { return ClosedForm(rat(1, 4)); }

ClosedForm closed_lambda_over_n() {
  return rat(2) * ClosedForm::log2() - ClosedForm::logpi();
}

ClosedForm closed_zeta_plain() { return ClosedForm(rat(3, 4)); }

ClosedForm closed_zeta_over_n() { return ClosedForm::log2(); }

ClosedForm closed_nm(int m) {
  require_at_least(m, 1, "closed_nm");
  ClosedForm out = ClosedForm::log2() - ClosedForm::logpi() + ClosedForm(harmonic(m));
  out += (BigRational(2 * factorial(2 * m)) * sign(m)) *
         from_lambda(2 * m + 1).times_pi_power(-2 * m);
  for (int j = 1; j <= m - 1; ++j) {
    const BigInt p = pow2(2 * j + 1);
    BigRational c = BigRational(BigInt(2 * m) * binom(2 * m - 1, 2 * j - 1) * factorial(2 * j - 1) * p,
                                p - 1) *
                    sign(j);
    out += c * from_lambda(2 * j + 1).times_pi_power(-2 * j);
  }
  return out;
}

ClosedForm closed_2nm(int m) {
  require_at_least(m, 1, "closed_2nm");
  ClosedForm out = rat(1, 2) * (ClosedForm::log2() - ClosedForm::logpi());
  for (int j = 1; j <= ceil_half(m - 1); ++j) {
    const BigInt p = pow2(2 * j + 1);
    BigRational c =
        BigRational(BigInt(m) * binom(m - 1, 2 * j - 1) * factorial(2 * j - 1) * p, BigInt(2) * (p - 1)) *
        sign(j);
    out += c * from_lambda(2 * j + 1).times_pi_power(-2 * j);
  }
  if (m % 2 == 0) {
    const BigInt p = pow2(m + 1);
    // - m! (2^(m+1) - 2) / (2 (2^(m+1) - 1)) * (-1)^(m/2+1) * lambda(m+1) / pi^m
    BigRational c = -BigRational(factorial(m) * (p - 2), BigInt(2) * (p - 1)) * sign(m / 2 + 1);
    out += c * from_lambda(m + 1).times_pi_power(-m);
    out += ClosedForm(harmonic(m / 2) / 2);
  } else {
    out += ClosedForm(harmonic((m - 1) / 2) / 2 + alt_harmonic(m));
    out -= ClosedForm::log2();
  }
  return out;
}

ClosedForm closed_zeta_nm(int m) {
  require_at_least(m, 1, "closed_zeta_nm");
  ClosedForm out(rat(1, 2 * m) + harmonic(m));
  out -= ClosedForm::logpi();
  for (int j = 1; j <= m - 1; ++j) {
    // -2m (-1)^(j+1) C(2m-1, 2j-1) (2j-1)! / (2 pi)^(2j) zeta(2j+1)
    BigRational c = -BigRational(BigInt(2 * m) * binom(2 * m - 1, 2 * j - 1) * factorial(2 * j - 1),
                                 pow2(2 * j)) *
                    sign(j + 1);
    out += c * from_zeta(2 * j + 1).times_pi_power(-2 * j);
  }
  return out;
}

ClosedForm closed_zeta_2nm(int m) {
  require_at_least(m, 1, "closed_zeta_2nm");
  // R(m) = 2 int_0^1 (x^(m+1) - x)/(1 - x^2) dx
  ClosedForm r;
  if (m % 2 == 0) {
    r = ClosedForm(-harmonic(m / 2));
  } else {
    r = ClosedForm(-harmonic((m - 1) / 2) - BigRational(2) * alt_harmonic(m)) +
        rat(2) * ClosedForm::log2();
  }
  ClosedForm inner = ClosedForm(rat(1, m)) - r - ClosedForm::logpi();
  for (int j = 1; j <= ceil_half(m) - 1; ++j) {
    BigRational c =
        BigRational(BigInt(m) * binom(m - 1, 2 * j - 1) * factorial(2 * j - 1), pow2(2 * j)) *
        sign(j + 1);
    inner -= c * from_zeta(2 * j + 1).times_pi_power(-2 * j);
  }
  return rat(1, 2) * inner;
}

ClosedForm closed_remark_sums(int variant) {
  const Monomial zeta3{-2, 0, 0, 3};
  const Monomial zeta5{-4, 0, 0, 5};
  switch (variant) {
    case 1:
      return ClosedForm(rat(1, 2)) - ClosedForm::log2() + ClosedForm(rat(7, 2), zeta3);
    case 2:
      return ClosedForm(rat(1, 4)) - ClosedForm::log2() + ClosedForm(rat(9), zeta3) +
             ClosedForm(rat(-93, 2), zeta5);
    default:
      throw std::invalid_argument("closed_remark_sums: variant must be 1 or 2");
  }
}

ClosedForm closed_taylor_coeff_lambda_form(int n) {
  require_at_least(n, 1, "closed_taylor_coeff_lambda_form");
  const int c = ceil_half(n);
  const BigInt p = pow2(2 * c);
  BigRational scale(p, p - 1);
  if (n % 2 == 1) {
    scale /= 2;
  }
  return scale * from_lambda(2 * c) - ClosedForm(sign(n) / 4);
}

ClosedForm closed_taylor_coeff(int n) {
  require_at_least(n, 0, "closed_taylor_coeff");
  if (n == 0) {
    return ClosedForm(rat(1, 4));
  }
  ClosedForm zeta_form = n % 2 == 1 ? rat(1, 2) * from_zeta(n + 1) + ClosedForm(rat(1, 4))
                                    : from_zeta(n) - ClosedForm(rat(1, 4));
  if (zeta_form != closed_taylor_coeff_lambda_form(n)) {
    throw std::logic_error("closed_taylor_coeff: zeta and lambda forms disagree at n = " +
                           std::to_string(n));
  }
  return zeta_form;
}

ClosedForm closed_binom(int p) {
  require_at_least(p, 1, "closed_binom");
  const int c = ceil_half(p);
  return BigRational(BigInt(1), pow2(2 * c) - 1) * from_lambda(2 * c) -
         ClosedForm(sign(p) * BigRational(BigInt(1), pow2(p + 2)));
}

ClosedForm closed_npow(int p) {
  require_at_least(p, 1, "closed_npow");
  ClosedForm out;
  for (int k = 1; k <= p; ++k) {
    out += BigRational(stirling2(p, k) * factorial(k)) * closed_binom(k);
  }
  return BigRational(BigInt(1), pow2(p)) * out;
}

ClosedForm closed_zeta_binom(int p) {
  require_at_least(p, 1, "closed_zeta_binom");
  return from_lambda(2 * ceil_half(p));
}

ClosedForm closed_binom_falling(int p) {
  return BigRational(factorial(p), BigInt(2)) * closed_binom(p);
}

ClosedForm closed_zeta_binom_falling(int p) {
  return BigRational(factorial(p), BigInt(2)) * closed_zeta_binom(p);
}

}  // namespace lambda_lab

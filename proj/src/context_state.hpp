// Per-context memo tables. Private to the library.

#ifndef LAMBDA_LAB_CONTEXT_STATE_HPP
#define LAMBDA_LAB_CONTEXT_STATE_HPP

#include "lambda_lab/precision.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <vector>

namespace lambda_lab::detail {

struct QuadratureLevel {
  // Fraction of the interval between each abscissa and the nearer endpoint,
  // and the matching tanh-sinh weight (already multiplied by dx/dt).
  std::vector<Real> offset;
  std::vector<Real> weight;
};

struct ContextState {
  std::once_flag constants_once;
  Real pi;
  Real log2;
  Real logpi;

  std::mutex memo_mutex;
  std::map<int, Real> zeta_odd;          // zeta(s), s odd >= 3
  std::map<int, Real> lambda_minus_one;  // lambda(2n) - 1, keyed by n
  std::map<int, Real> lambda_minus_one_bound;
  std::map<int, Real> zeta_minus_one;    // zeta(2n) - 1, keyed by n
  std::map<int, Real> zeta_minus_one_bound;

  std::mutex quad_mutex;
  std::vector<QuadratureLevel> quad_levels;  // index = level
  std::optional<Real> quad_t_max;
};

}  // namespace lambda_lab::detail

#endif  // LAMBDA_LAB_CONTEXT_STATE_HPP

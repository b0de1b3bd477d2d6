#pragma once

#include "kva/lie_elt.hpp"

namespace kva {

// log(exp(x) exp(y)) through degree N, in Lyndon coordinates. Computed in the
// word algebra and projected degreewise (each component is primitive, so the
// projection is exact); components are cached process-wide.
LieElt bch_series(int N);

// log(exp(y) exp(x)) = the series with generators swapped.
LieElt bch_reversed(int N);

// Degree bookkeeping for the scaled series: replacing the generators by
// t-multiples makes the degree-n component carry t^n. Consumers that need the
// t-grading read it off the degree instead of substituting symbolically.
struct ScaledBch {
  LieElt z;
  static int t_power(int degree) { return degree; }
  LieElt at_t(const Rational& t) const;
};

ScaledBch bch_scaled(int N);

}  // namespace kva

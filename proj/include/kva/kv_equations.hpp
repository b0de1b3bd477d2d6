#pragma once

#include "kva/assoc_poly.hpp"
#include "kva/bch.hpp"
#include "kva/lie_elt.hpp"

namespace kva {

// Candidate pair for the two defining equations; symmetric pairs satisfy
// g = f(-y,-x).
struct KvPair {
  LieElt f;
  LieElt g;
  int max_degree;
};

// Integral kernel series: apply psi of the adjoint of the scaled series to
// x + y, left-compose with the t-ratio of the adjoint of x, integrate the
// t-polynomials over [0,1]. The t-grading of the scaled series makes the
// degree-d part of the psi stage carry t^{d-1}.
LieElt f1_series(int N);

// (f1 + e^{ad x} f1(-x,-y))/2 + (z - x)/4.
LieElt f0_series(int N);

// f0(-y,-x).
LieElt g0_series(int N);

KvPair solvable_pair(int N);

// Keeps monomials whose last letter equals `letter` and strips it; the
// degree-1 monomial maps to the unit word.
AssocPoly partial_strip(const AssocPoly& a, int letter);

// Projection of x * strip_1(expansion(a)) + y * strip_2(expansion(b)) onto the
// cyclic quotient. Homogeneous degree-n inputs land in degree-n necklaces.
CyclicVec divergence(const LieElt& a, const LieElt& b);

// Divergence of the degree-N components of (f0, g0).
CyclicVec kv2_lhs(int N);

// Degree-N part of (Ber(x) + Ber(y) - Ber(z) - 1)/2 in the cyclic quotient,
// with Ber the Bernoulli-type series u/(e^u - 1) and z the degree-N truncated
// composition series; the constant terms cancel exactly.
CyclicVec kv2_rhs(int N);

// (x + y - log(exp y exp x)) - (1 - e^{-ad x}) f - (e^{ad y} - 1) g.
LieElt kv1_residual(const KvPair& pair, int N);

// kv2_rhs(N) - kv2_lhs(N).
CyclicVec trace_defect(int N);

}  // namespace kva

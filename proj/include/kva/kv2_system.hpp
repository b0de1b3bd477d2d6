#pragma once

#include <array>
#include <utility>
#include <vector>

#include "kva/lie_elt.hpp"
#include "kva/sparse_mat.hpp"

namespace kva {

enum class KernelMethod { exact, modular };

struct KernelReport {
  int degree = 0;  // 0 when computed from a raw matrix
  long long rows = 0;
  long long cols = 0;
  unsigned long long nullity = 0;
  KernelMethod method = KernelMethod::exact;
  unsigned long long modulus = 0;         // set when method == modular
  bool nullity_is_upper_bound = false;    // modular ranks can only drop
  std::vector<std::vector<Rational>> basis;  // exact method, on request
};

// Linear system for degree-N pairs (A, B): unknowns are the Lyndon
// coordinates of A (first columns) then B, both in lexicographic order.
// The first witt_dim(N+1) rows express [x,A] + [y,B] = 0 in degree-(N+1)
// Lyndon coordinates; the remaining necklace_dim(N) rows express
// divergence(A, B) = 0 over necklace_basis(N).
SparseMatQ assemble_system(int N);

// (witt_dim(N+1) + necklace_dim(N), 2 * witt_dim(N)); no assembly performed.
std::pair<unsigned long long, unsigned long long> kv2_system_shape(int N);

// Nullity over the rationals by fraction-free sparse elimination with
// Markowitz-style pivoting; with_basis also extracts an exact kernel basis,
// re-verified against the input by exact multiplication.
KernelReport kernel_dim_exact(const SparseMatQ& m, bool with_basis = false);

std::vector<std::vector<Rational>> kernel_basis(const SparseMatQ& m);

// Nullity over the prime field; rejects p dividing a stored denominator.
// The reported nullity is only an upper bound on the exact one.
KernelReport rank_mod_p(const SparseMatQ& m, unsigned long long p);

// Degree-level conveniences: assemble, solve, stamp the degree.
KernelReport kv2_kernel_report(int N, bool with_basis = false);
KernelReport kv2_kernel_report_mod(int N, unsigned long long p);

// Primes near 2^31 used when no modulus is requested explicitly.
inline constexpr std::array<unsigned long long, 3> kDefaultModularPrimes{
    2147483647ULL, 2147483629ULL, 2147483587ULL};

// Splits a kernel vector of assemble_system(N) into its (A, B) halves.
std::pair<LieElt, LieElt> decode_pair(const std::vector<Rational>& coords, int N);

}  // namespace kva

#include "kva/kv2_system.hpp"

#include <algorithm>
#include <stdexcept>

#include "kva/kv_equations.hpp"
#include "kva/lyndon.hpp"
#include "kva/parallel.hpp"

namespace kva {

namespace {

using ZEntries = std::vector<std::pair<long long, mpz_class>>;

void divide_by_content(ZEntries& e) {
  if (e.empty()) return;
  mpz_class g = 0;
  for (const auto& [c, v] : e) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& [c, v] : e) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// pv * target - tv * pivot, merged by column, content-normalized.
ZEntries combine_rows(const ZEntries& target, const mpz_class& tv, const ZEntries& pivot,
                      const mpz_class& pv) {
  ZEntries out;
  out.reserve(target.size() + pivot.size());
  std::size_t i = 0, j = 0;
  mpz_class tmp;
  while (i < target.size() || j < pivot.size()) {
    if (j == pivot.size() ||
        (i < target.size() && target[i].first < pivot[j].first)) {
      out.emplace_back(target[i].first, pv * target[i].second);
      ++i;
    } else if (i == target.size() || pivot[j].first < target[i].first) {
      out.emplace_back(pivot[j].first, -tv * pivot[j].second);
      ++j;
    } else {
      tmp = pv * target[i].second - tv * pivot[j].second;
      if (tmp != 0) out.emplace_back(target[i].first, tmp);
      ++i;
      ++j;
    }
  }
  divide_by_content(out);
  return out;
}

struct Echelon {
  struct Retired {
    long long pivot_col;
    ZEntries entries;  // state at retirement time
  };
  long long rows = 0;
  long long cols = 0;
  long long rank = 0;
  std::vector<Retired> retired;  // in elimination order
};

Echelon eliminate_exact(const SparseMatQ& m) {
  // Scale every row to integers; row scalings do not change the kernel.
  std::vector<ZEntries> rows(static_cast<std::size_t>(m.rows()));
  for (const auto& e : m.entries())
    rows[static_cast<std::size_t>(e.row - 1)].emplace_back(e.col, 0);
  {
    std::vector<mpz_class> lcm(static_cast<std::size_t>(m.rows()), 1);
    for (const auto& e : m.entries()) {
      auto& l = lcm[static_cast<std::size_t>(e.row - 1)];
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.value.den().get_mpz_t());
    }
    std::vector<std::size_t> fill(static_cast<std::size_t>(m.rows()), 0);
    for (const auto& e : m.entries()) {
      const auto r = static_cast<std::size_t>(e.row - 1);
      rows[r][fill[r]++] = {e.col, e.value.num() * (lcm[r] / e.value.den())};
    }
  }
  for (auto& row : rows) {
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    divide_by_content(row);
  }

  Echelon ech;
  ech.rows = m.rows();
  ech.cols = m.cols();
  std::vector<bool> alive(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) alive[r] = !rows[r].empty();
  std::vector<long long> colcount(static_cast<std::size_t>(m.cols()) + 1, 0);

  while (true) {
    std::fill(colcount.begin(), colcount.end(), 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!alive[r]) continue;
      for (const auto& [c, v] : rows[r]) ++colcount[static_cast<std::size_t>(c)];
    }
    // Markowitz cost, then fewer row entries, then smaller pivot magnitude,
    // then column and row index: fully deterministic.
    std::size_t best_row = rows.size();
    long long best_col = -1;
    const mpz_class* best_val = nullptr;
    unsigned long long best_cost = 0;
    std::size_t best_nnz = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!alive[r]) continue;
      const auto nnz = rows[r].size();
      for (const auto& [c, v] : rows[r]) {
        const unsigned long long cost =
            static_cast<unsigned long long>(nnz - 1) *
            static_cast<unsigned long long>(colcount[static_cast<std::size_t>(c)] - 1);
        bool better = false;
        if (best_row == rows.size()) {
          better = true;
        } else if (cost != best_cost) {
          better = cost < best_cost;
        } else if (nnz != best_nnz) {
          better = nnz < best_nnz;
        } else {
          const int cmp = mpz_cmpabs(v.get_mpz_t(), best_val->get_mpz_t());
          if (cmp != 0) {
            better = cmp < 0;
          } else if (c != best_col) {
            better = c < best_col;
          } else {
            better = r < best_row;
          }
        }
        if (better) {
          best_row = r;
          best_col = c;
          best_val = &v;
          best_cost = cost;
          best_nnz = nnz;
        }
      }
    }
    if (best_row == rows.size()) break;

    ZEntries pivot_row = std::move(rows[best_row]);
    alive[best_row] = false;
    mpz_class pv;
    for (const auto& [c, v] : pivot_row)
      if (c == best_col) pv = v;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!alive[r]) continue;
      const auto it = std::lower_bound(
          rows[r].begin(), rows[r].end(), best_col,
          [](const auto& entry, long long col) { return entry.first < col; });
      if (it == rows[r].end() || it->first != best_col) continue;
      rows[r] = combine_rows(rows[r], it->second, pivot_row, pv);
      if (rows[r].empty()) alive[r] = false;
    }
    ech.retired.push_back(Echelon::Retired{best_col, std::move(pivot_row)});
    ++ech.rank;
  }
  return ech;
}

std::vector<std::vector<Rational>> back_substitute(const Echelon& ech) {
  std::vector<bool> is_pivot(static_cast<std::size_t>(ech.cols) + 1, false);
  for (const auto& ret : ech.retired) is_pivot[static_cast<std::size_t>(ret.pivot_col)] = true;

  std::vector<std::vector<Rational>> basis;
  for (long long f = 1; f <= ech.cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<Rational> v(static_cast<std::size_t>(ech.cols));
    v[static_cast<std::size_t>(f - 1)] = Rational(1);
    // A retired row only involves its own pivot, free columns, and pivots of
    // rows retired later, so the reverse sweep is a pure back substitution.
    for (auto it = ech.retired.rbegin(); it != ech.retired.rend(); ++it) {
      Rational acc(0);
      Rational pivot_value(0);
      for (const auto& [c, val] : it->entries) {
        if (c == it->pivot_col) {
          pivot_value = Rational(val);
        } else {
          const auto& x = v[static_cast<std::size_t>(c - 1)];
          if (!x.is_zero()) acc += Rational(val) * x;
        }
      }
      v[static_cast<std::size_t>(it->pivot_col - 1)] = -acc / pivot_value;
    }
    // Canonical integer form: clear denominators, remove content, make the
    // first nonzero entry positive.
    mpz_class lcm = 1;
    for (const auto& x : v)
      if (!x.is_zero()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.den().get_mpz_t());
    mpz_class content = 0;
    for (auto& x : v) {
      x *= Rational(lcm);
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.num().get_mpz_t());
    }
    int sign = 0;
    for (auto& x : v) {
      if (!x.is_zero() && sign == 0) sign = x.sign();
    }
    const Rational scale(mpz_class(sign), content);
    for (auto& x : v) x *= scale;
    basis.push_back(std::move(v));
  }
  return basis;
}

void verify_kernel(const SparseMatQ& m, const std::vector<std::vector<Rational>>& basis) {
  for (const auto& v : basis) {
    std::vector<Rational> acc(static_cast<std::size_t>(m.rows()));
    for (const auto& e : m.entries()) {
      const auto& x = v[static_cast<std::size_t>(e.col - 1)];
      if (!x.is_zero()) acc[static_cast<std::size_t>(e.row - 1)] += e.value * x;
    }
    for (const auto& r : acc)
      if (!r.is_zero())
        throw std::logic_error("kernel_basis: vector fails exact re-verification");
  }
}

unsigned long long mulmod(unsigned long long a, unsigned long long b,
                          unsigned long long p) {
  return (a * b) % p;  // p < 2^31 keeps the product below 2^62
}

unsigned long long powmod(unsigned long long a, unsigned long long e,
                          unsigned long long p) {
  unsigned long long r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1ULL) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

SparseMatQ assemble_system(int N) {
  if (N < 1 || N + 1 > Word::kMaxLen)
    throw std::invalid_argument("assemble_system: bad degree");
  const auto& basis_n = lyndon_basis(N);
  const auto& basis_n1 = lyndon_basis(N + 1);
  const auto& necks = necklace_basis(N);
  const long long dn = static_cast<long long>(basis_n.size());
  const long long dn1 = static_cast<long long>(basis_n1.size());
  const long long cn = static_cast<long long>(necks.size());

  std::vector<std::vector<SparseMatQ::Entry>> columns(static_cast<std::size_t>(2 * dn));
  parallel_for(columns.size(), [&](std::size_t j) {
    const bool a_side = static_cast<long long>(j) < dn;
    const int letter = a_side ? 1 : 2;
    const LyndonWord& lw = basis_n[a_side ? j : j - static_cast<std::size_t>(dn)];
    auto& out = columns[j];

    LieElt elt(N);
    elt.add_term(lw.word, Rational(1));
    const LieElt bracket = lie_bracket(LieElt::generator(letter, 1), elt, N + 1);
    for (const auto& [deg, terms] : bracket.components())
      for (const auto& [w, c] : terms)
        out.push_back({1 + lyndon_index(w), static_cast<long long>(j) + 1, c});

    AssocPoly expansion(N);
    if (lw.word.size() == 1) {
      expansion.add_term(lw.word, Rational(1));
    } else {
      LieElt left(N), right(N);
      left.add_term(lw.left, Rational(1));
      right.add_term(lw.right, Rational(1));
      const AssocPoly le = lie_to_assoc(left);
      const AssocPoly re = lie_to_assoc(right);
      expansion = assoc_mul(le, re, N) - assoc_mul(re, le, N);
    }
    const AssocPoly stripped = partial_strip(expansion, letter);
    const AssocPoly prefixed = assoc_mul(
        AssocPoly::monomial(Word::single(letter), Rational(1), 1), stripped, N);
    const CyclicVec projected = cyclic_project(prefixed);
    for (const auto& [neck, c] : projected.terms())
      out.push_back({1 + dn1 + necklace_index(neck), static_cast<long long>(j) + 1, c});
  });

  SparseMatQ m(dn1 + cn, 2 * dn);
  for (const auto& col : columns)
    for (const auto& e : col) m.add(e.row, e.col, e.value);
  m.finalize();
  return m;
}

std::pair<unsigned long long, unsigned long long> kv2_system_shape(int N) {
  if (N < 1) throw std::invalid_argument("kv2_system_shape: bad degree");
  return {witt_dim(N + 1) + necklace_dim(N), 2 * witt_dim(N)};
}

KernelReport kernel_dim_exact(const SparseMatQ& m, bool with_basis) {
  const Echelon ech = eliminate_exact(m);
  KernelReport report;
  report.rows = m.rows();
  report.cols = m.cols();
  report.nullity = static_cast<unsigned long long>(ech.cols - ech.rank);
  report.method = KernelMethod::exact;
  if (with_basis) {
    report.basis = back_substitute(ech);
    verify_kernel(m, report.basis);
  }
  return report;
}

std::vector<std::vector<Rational>> kernel_basis(const SparseMatQ& m) {
  return kernel_dim_exact(m, true).basis;
}

KernelReport rank_mod_p(const SparseMatQ& m, unsigned long long p) {
  if (p < 2 || p >= (1ULL << 31))
    throw std::invalid_argument("rank_mod_p: modulus must lie in [2, 2^31)");
  std::vector<std::vector<std::pair<long long, unsigned long long>>> rows(
      static_cast<std::size_t>(m.rows()));
  for (const auto& e : m.entries()) {
    mpz_class den_mod = e.value.den() % static_cast<unsigned long>(p);
    if (den_mod == 0)
      throw std::invalid_argument("rank_mod_p: modulus divides denominator of entry (" +
                                  std::to_string(e.row) + ", " + std::to_string(e.col) +
                                  ") = " + e.value.str());
    mpz_class num_mod = e.value.num() % static_cast<unsigned long>(p);
    if (num_mod < 0) num_mod += static_cast<unsigned long>(p);
    const unsigned long long value =
        mulmod(num_mod.get_ui(), powmod(den_mod.get_ui(), p - 2, p), p);
    if (value != 0)
      rows[static_cast<std::size_t>(e.row - 1)].emplace_back(e.col, value);
  }
  for (auto& row : rows)
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<bool> alive(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) alive[r] = !rows[r].empty();
  std::vector<long long> colcount(static_cast<std::size_t>(m.cols()) + 1, 0);
  long long rank = 0;
  while (true) {
    std::fill(colcount.begin(), colcount.end(), 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!alive[r]) continue;
      for (const auto& [c, v] : rows[r]) ++colcount[static_cast<std::size_t>(c)];
    }
    std::size_t best_row = rows.size();
    long long best_col = -1;
    unsigned long long best_cost = 0;
    std::size_t best_nnz = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!alive[r]) continue;
      const auto nnz = rows[r].size();
      for (const auto& [c, v] : rows[r]) {
        const unsigned long long cost =
            static_cast<unsigned long long>(nnz - 1) *
            static_cast<unsigned long long>(colcount[static_cast<std::size_t>(c)] - 1);
        const bool better =
            best_row == rows.size() || cost < best_cost ||
            (cost == best_cost &&
             (nnz < best_nnz ||
              (nnz == best_nnz &&
               (c < best_col || (c == best_col && r < best_row)))));
        if (better) {
          best_row = r;
          best_col = c;
          best_cost = cost;
          best_nnz = nnz;
        }
      }
    }
    if (best_row == rows.size()) break;

    auto pivot_row = std::move(rows[best_row]);
    alive[best_row] = false;
    unsigned long long pv = 0;
    for (const auto& [c, v] : pivot_row)
      if (c == best_col) pv = v;
    const unsigned long long pv_inv = powmod(pv, p - 2, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!alive[r]) continue;
      const auto it = std::lower_bound(
          rows[r].begin(), rows[r].end(), best_col,
          [](const auto& entry, long long col) { return entry.first < col; });
      if (it == rows[r].end() || it->first != best_col) continue;
      const unsigned long long factor = mulmod(it->second, pv_inv, p);
      std::vector<std::pair<long long, unsigned long long>> merged;
      merged.reserve(rows[r].size() + pivot_row.size());
      std::size_t i = 0, k = 0;
      while (i < rows[r].size() || k < pivot_row.size()) {
        if (k == pivot_row.size() ||
            (i < rows[r].size() && rows[r][i].first < pivot_row[k].first)) {
          merged.push_back(rows[r][i++]);
        } else if (i == rows[r].size() || pivot_row[k].first < rows[r][i].first) {
          merged.emplace_back(pivot_row[k].first,
                              p - mulmod(factor, pivot_row[k].second, p));
          ++k;
        } else {
          const unsigned long long sub = mulmod(factor, pivot_row[k].second, p);
          const unsigned long long val = (rows[r][i].second + p - sub) % p;
          if (val != 0) merged.emplace_back(rows[r][i].first, val);
          ++i;
          ++k;
        }
      }
      rows[r] = std::move(merged);
      if (rows[r].empty()) alive[r] = false;
    }
    ++rank;
  }

  KernelReport report;
  report.rows = m.rows();
  report.cols = m.cols();
  report.nullity = static_cast<unsigned long long>(m.cols() - rank);
  report.method = KernelMethod::modular;
  report.modulus = p;
  report.nullity_is_upper_bound = true;
  return report;
}

KernelReport kv2_kernel_report(int N, bool with_basis) {
  KernelReport report = kernel_dim_exact(assemble_system(N), with_basis);
  report.degree = N;
  return report;
}

KernelReport kv2_kernel_report_mod(int N, unsigned long long p) {
  KernelReport report = rank_mod_p(assemble_system(N), p);
  report.degree = N;
  return report;
}

std::pair<LieElt, LieElt> decode_pair(const std::vector<Rational>& coords, int N) {
  const auto& basis = lyndon_basis(N);
  if (coords.size() != 2 * basis.size())
    throw std::invalid_argument("decode_pair: coordinate count mismatch");
  LieElt a(N), b(N);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    a.add_term(basis[i].word, coords[i]);
    b.add_term(basis[i].word, coords[basis.size() + i]);
  }
  return {a, b};
}

}  // namespace kva

// Acceptance suite: runs every gating criterion end to end and prints one
// PASS/FAIL line per criterion. Exit status is the number of failures.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "kva/bracket_expr.hpp"
#include "kva/kv2_system.hpp"
#include "kva/kv_equations.hpp"
#include "kva/matrix_eval.hpp"
#include "kva/lyndon.hpp"

using namespace kva;
namespace fx = kva_fixtures;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
  double budget_seconds = 0;  // 0 = no runtime bound
};

bool check(bool condition, std::string& detail, const std::string& message) {
  if (!condition && detail.empty()) detail = message;
  return condition;
}

LieElt scaled_fixture(const char* text, long scale) {
  LieElt e = parse_bracket(text);
  e *= Rational(1, scale);
  return e;
}

CyclicVec cyclic_fixture(const char* const* words, const long* coeffs, std::size_t count,
                         long scale) {
  CyclicVec v;
  for (std::size_t i = 0; i < count; ++i)
    v.add_term(necklace_canon(Word::parse(words[i])), Rational(coeffs[i], scale));
  return v;
}

bool criterion_bch(std::string& detail) {
  const LieElt z = bch_series(4);
  bool ok = true;
  ok &= check(lie_to_assoc(z.degree_part(1)) == lie_to_assoc(parse_bracket("x + y")),
              detail, "degree 1 mismatch");
  ok &= check(lie_to_assoc(z.degree_part(2)) == lie_to_assoc(parse_bracket("1/2*[x,y]")),
              detail, "degree 2 mismatch");
  ok &= check(lie_to_assoc(z.degree_part(3)) ==
                  lie_to_assoc(parse_bracket("1/12*[x,[x,y]] + 1/12*[y,[y,x]]")),
              detail, "degree 3 mismatch");
  ok &= check(lie_to_assoc(z.degree_part(4)) ==
                  lie_to_assoc(parse_bracket("1/48*[y,[x,[y,x]]] - 1/48*[x,[y,[x,y]]]")),
              detail, "degree 4 mismatch");
  return ok;
}

bool criterion_f0(std::string& detail) {
  const LieElt f0 = f0_series(8);
  bool ok = check(lie_to_assoc(f0.truncated(4)) ==
                      lie_to_assoc(parse_bracket(fx::kF0LowDegrees)),
                  detail, "degrees 1-4 mismatch");
  const struct {
    int degree;
    const char* text;
    long scale;
  } cases[] = {{5, fx::kF0Degree5, fx::kF0Scale5},
               {6, fx::kF0Degree6, fx::kF0Scale6},
               {7, fx::kF0Degree7, fx::kF0Scale7},
               {8, fx::kF0Degree8, fx::kF0Scale8}};
  for (const auto& c : cases) {
    ok &= check(lie_to_assoc(f0.degree_part(c.degree)) ==
                    lie_to_assoc(scaled_fixture(c.text, c.scale)),
                detail, "degree " + std::to_string(c.degree) + " mismatch");
  }
  return ok;
}

bool criterion_kv1(std::string& detail) {
  const KvPair pair = solvable_pair(8);
  bool ok = true;
  for (int n = 1; n <= 8; ++n)
    ok &= check(kv1_residual(pair, n).is_zero(), detail,
                "nonzero residual at degree " + std::to_string(n));
  return ok;
}

bool criterion_kv2_equality(std::string& detail) {
  bool ok = true;
  for (int n = 2; n <= 7; ++n)
    ok &= check(kv2_lhs(n) == kv2_rhs(n), detail,
                "sides differ at degree " + std::to_string(n));
  ok &= check(kv2_lhs(5).is_zero(), detail, "degree 5 left side nonzero");
  ok &= check(kv2_lhs(7).is_zero(), detail, "degree 7 left side nonzero");
  ok &= check(kv2_lhs(6) == cyclic_fixture(fx::kCyclic6Words, fx::kTrace6Vector, 14,
                                           fx::kTraceScale6),
              detail, "degree 6 map mismatch");
  return ok;
}

bool criterion_defect(std::string& detail) {
  const CyclicVec defect = trace_defect(8);
  CyclicVec expected;
  for (const auto& [word, coeff] : fx::kDefect8)
    expected.add_term(necklace_canon(Word::parse(word)), Rational(coeff, fx::kTraceScale8));
  bool ok = check(defect == expected, detail, "eight-term difference mismatch");
  ok &= check(defect.coeff(necklace_canon(Word::parse("11112212"))) ==
                  Rational(8, fx::kTraceScale8),
              detail, "orientation check failed at 11112212");
  return ok;
}

bool criterion_dimension_table(std::string& detail) {
  bool ok = true;
  const auto start = std::chrono::steady_clock::now();
  for (int n = 1; n <= 12; ++n) {
    const auto report = kv2_kernel_report(n);
    ok &= check(report.nullity == fx::kKernelDims[n - 1], detail,
                "kernel dimension mismatch at degree " + std::to_string(n) + " (got " +
                    std::to_string(report.nullity) + ")");
    if (n == 10) {
      const double through_ten =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      ok &= check(through_ten < 120.0, detail,
                  "degrees 1-10 took " + std::to_string(through_ten) + "s");
    }
  }
  return ok;
}

bool criterion_kernel8(std::string& detail) {
  const auto report = kernel_dim_exact(assemble_system(8), true);
  if (!check(report.nullity == 1 && report.basis.size() == 1, detail,
             "nullity is not 1"))
    return false;
  const auto [a, b] = decode_pair(report.basis[0], 8);
  const AssocPoly ea = lie_to_assoc(a);
  const AssocPoly eb = lie_to_assoc(b);
  const AssocPoly pa = lie_to_assoc(parse_bracket(fx::kKernel8A));
  const AssocPoly pb = lie_to_assoc(parse_bracket(fx::kKernel8B));
  if (ea.is_zero()) {
    detail = "kernel pair has zero first component";
    return false;
  }
  const Word w0 = ea.parts().begin()->second.begin()->first;
  const Rational lambda = pa.coeff(w0) / ea.coeff(w0);
  AssocPoly sa = ea;
  sa *= lambda;
  AssocPoly sb = eb;
  sb *= lambda;
  bool ok = check(!lambda.is_zero(), detail, "zero proportionality factor");
  ok &= check(sa == pa && sb == pb, detail,
              "pair not proportional by a common scalar (lambda = " + lambda.str() + ")");
  return ok;
}

bool criterion_kernel1(std::string& detail) {
  const auto basis = kernel_basis(assemble_system(1));
  if (!check(basis.size() == 1, detail, "nullity is not 1")) return false;
  const auto [a, b] = decode_pair(basis[0], 1);
  const Rational scale = a.coeff(Word::single(2));
  bool ok = check(!scale.is_zero(), detail, "missing y component");
  LieElt ey = LieElt::generator(2, 1);
  ey *= scale;
  LieElt ex = LieElt::generator(1, 1);
  ex *= scale;
  ok &= check(a == ey && b == ex, detail, "kernel is not spanned by (y, x)");
  return ok;
}

bool criterion_counterexample(std::string& detail) {
  const IntMat X = counterexample_x();
  const IntMat Y = counterexample_y();
  const struct {
    const char* word;
    long trace;
  } traces[] = {{"11112212", -1}, {"11112122", 1}, {"11121122", -1}, {"11122112", -1}};
  bool ok = true;
  for (const auto& t : traces)
    ok &= check(word_trace(Word::parse(t.word), X, Y) == t.trace, detail,
                std::string("trace mismatch for ") + t.word);
  const CyclicVec filtered = filter_by_letter_degree(trace_defect(8), 2, 3);
  const Rational value = eval_cyclic(filtered, X, Y);
  ok &= check(value == Rational(-16, 21772800), detail,
              "filtered value is " + value.str());
  ok &= check(value != Rational(0), detail, "filtered value vanishes");
  return ok;
}

bool criterion_dimension_formulas(std::string& detail) {
  bool ok = true;
  for (int n = 1; n <= 16; ++n) {
    ok &= check(witt_dim(n) == fx::kLieDims[n - 1], detail,
                "free-Lie dimension mismatch at degree " + std::to_string(n));
    ok &= check(necklace_dim(n) == fx::kCyclicDims[n - 1], detail,
                "cyclic dimension mismatch at degree " + std::to_string(n));
    const auto [rows, cols] = kv2_system_shape(n);
    if (n <= 15)
      ok &= check(rows == fx::kLieDims[n] + fx::kCyclicDims[n - 1], detail,
                  "shape mismatch at degree " + std::to_string(n));
    ok &= check(cols == 2 * fx::kLieDims[n - 1], detail,
                "column count mismatch at degree " + std::to_string(n));
  }
  ok &= check(kv2_system_shape(16) == std::make_pair(11826ULL, 8160ULL), detail,
              "degree-16 shape mismatch");
  return ok;
}

bool criterion_properties(std::string& detail) {
  std::mt19937_64 rng(20260810);
  bool ok = true;

  // Jacobi and antisymmetry on random basis triples.
  std::uniform_int_distribution<int> deg(1, 3);
  auto pick = [&](int d) {
    const auto& basis = lyndon_basis(d);
    std::uniform_int_distribution<std::size_t> idx(0, basis.size() - 1);
    LieElt e(d);
    e.add_term(basis[idx(rng)].word, Rational(1));
    return e;
  };
  for (int trial = 0; trial < 25 && ok; ++trial) {
    const LieElt a = pick(deg(rng)), b = pick(deg(rng)), c = pick(deg(rng));
    ok &= check((lie_bracket(a, b, 9) + lie_bracket(b, a, 9)).is_zero(), detail,
                "antisymmetry failed");
    LieElt jac = lie_bracket(a, lie_bracket(b, c, 9), 9);
    jac += lie_bracket(b, lie_bracket(c, a, 9), 9);
    jac += lie_bracket(c, lie_bracket(a, b, 9), 9);
    ok &= check(jac.is_zero(), detail, "Jacobi failed");
  }

  // Projection round trip on random Lie elements.
  std::uniform_int_distribution<long> coeff(-5, 5);
  for (int trial = 0; trial < 10 && ok; ++trial) {
    LieElt e(6);
    for (int d = 1; d <= 6; ++d) {
      const auto& basis = lyndon_basis(d);
      std::uniform_int_distribution<std::size_t> idx(0, basis.size() - 1);
      e.add_term(basis[idx(rng)].word, Rational(coeff(rng), 2));
    }
    ok &= check(dynkin_to_lie(lie_to_assoc(e)) == e, detail,
                "projection round trip failed");
  }

  // psi symmetry.
  const USeries psi = psi_series(12);
  const USeries folded = psi + psi.alternated();
  ok &= check(folded.coeff(0) == Rational(1), detail, "psi symmetry constant");
  for (int k = 1; k <= 12; ++k)
    ok &= check(folded.coeff(k) == Rational(0), detail, "psi symmetry failed");

  // Cyclic projection kills commutators.
  std::uniform_int_distribution<std::uint32_t> bits;
  for (int trial = 0; trial < 20 && ok; ++trial) {
    AssocPoly a(3), b(3);
    for (int i = 0; i < 6; ++i) {
      const int d = 1 + static_cast<int>(bits(rng) % 3);
      a.add_term(Word::from_bits(bits(rng) & ((1u << d) - 1u), d), Rational(coeff(rng)));
      b.add_term(Word::from_bits(bits(rng) & ((1u << d) - 1u), d), Rational(coeff(rng)));
    }
    const AssocPoly comm = assoc_mul(a, b, 6) - assoc_mul(b, a, 6);
    ok &= check(cyclic_project(comm).is_zero(), detail, "commutator projection nonzero");
  }

  // Word-algebra exp/log round trip.
  for (int trial = 0; trial < 10 && ok; ++trial) {
    AssocPoly a(4);
    for (int i = 0; i < 6; ++i) {
      const int d = 1 + static_cast<int>(bits(rng) % 4);
      a.add_term(Word::from_bits(bits(rng) & ((1u << d) - 1u), d),
                 Rational(coeff(rng), 1 + i % 3));
    }
    ok &= check(assoc_log(assoc_exp(a, 5), 5) == a.truncated(5), detail,
                "exp/log round trip failed");
  }

  // Matrix export/import round trip.
  const SparseMatQ m4 = assemble_system(4);
  std::stringstream io;
  export_sparse(m4, io);
  ok &= check(import_sparse(io) == m4, detail, "matrix round trip failed");

  // Modular nullity dominates the exact nullity.
  for (int trial = 0; trial < 10 && ok; ++trial) {
    SparseMatQ m(5, 6);
    std::set<std::pair<long long, long long>> used;
    for (int k = 0; k < 12; ++k) {
      const long long i = 1 + static_cast<long long>(bits(rng) % 5);
      const long long j = 1 + static_cast<long long>(bits(rng) % 6);
      if (!used.insert({i, j}).second) continue;
      const long v = coeff(rng);
      if (v != 0) m.add(i, j, Rational(v, 1 + k % 4));
    }
    m.finalize();
    const auto exact = kernel_dim_exact(m).nullity;
    for (const auto p : kDefaultModularPrimes)
      ok &= check(rank_mod_p(m, p).nullity >= exact, detail,
                  "modular nullity fell below the exact nullity");
  }

  // Nilpotent-matrix oracle on 50 random pairs of sizes 3..6.
  std::uniform_int_distribution<long> entry(-3, 3);
  for (int trial = 0; trial < 50 && ok; ++trial) {
    const int n = 3 + trial % 4;
    IntMat X = IntMat::zero(n), Y = IntMat::zero(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        X.at(i, j) = entry(rng);
        Y.at(i, j) = entry(rng);
      }
    ok &= check(bch_matrix_oracle(X, Y), detail,
                "matrix oracle failed at trial " + std::to_string(trial));
  }
  return ok;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"composition series degrees 1-4", criterion_bch, 1.0},
      {"solvable series printed expansions through degree 8", criterion_f0, 120.0},
      {"first equation residual vanishes for degrees 1-8", criterion_kv1, 0},
      {"trace identity holds for degrees 2-7 with the degree-6 vector",
       criterion_kv2_equality, 0},
      {"degree-8 trace defect matches the eight-term difference", criterion_defect, 0},
      {"kernel dimension table for degrees 1-12", criterion_dimension_table, 1800.0},
      {"degree-8 kernel is the published pair up to one scalar", criterion_kernel8, 0},
      {"degree-1 kernel is spanned by (y, x)", criterion_kernel1, 0},
      {"counterexample traces and filtered defect value", criterion_counterexample, 1.0},
      {"dimension formulas and system shapes through degree 16",
       criterion_dimension_formulas, 0},
      {"property suites", criterion_properties, 0},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && criteria[i].budget_seconds > 0 && seconds > criteria[i].budget_seconds) {
      ok = false;
      detail = "runtime " + std::to_string(seconds) + "s exceeds the " +
               std::to_string(criteria[i].budget_seconds) + "s budget";
    }
    std::ostringstream line;
    line << (ok ? "[PASS] " : "[FAIL] ") << (i + 1) << ". " << criteria[i].name << " ("
         << seconds << "s)";
    if (!ok && !detail.empty()) line << " -- " << detail;
    std::cout << line.str() << "\n";
    if (!ok) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criterion(s) failed")
            << "\n";
  return failures;
}

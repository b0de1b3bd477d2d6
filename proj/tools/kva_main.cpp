// Command-line front end: exact computations around the two-generator
// Campbell-Hausdorff series, the solvable pair, the trace identity in the
// cyclic-word quotient, and the graded kernel systems.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kva/bracket_expr.hpp"
#include "kva/kv2_system.hpp"
#include "kva/kv_equations.hpp"
#include "kva/lyndon.hpp"
#include "kva/matrix_eval.hpp"

using json = nlohmann::json;
using namespace kva;

namespace {

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

mpz_class lcm_with_denominators(mpz_class lcm, const std::map<Word, Rational>& terms) {
  for (const auto& [w, c] : terms)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
  return lcm;
}

// Integer coordinates at an explicit common scale 1/L; the scale is never
// folded into the values.
json scaled_coords(const std::vector<const std::map<Word, Rational>*>& parts,
                   json& scale_out) {
  mpz_class lcm = 1;
  for (const auto* terms : parts) lcm = lcm_with_denominators(lcm, *terms);
  scale_out = (lcm == 1) ? "1" : ("1/" + lcm.get_str());
  json coords = json::object();
  for (const auto* terms : parts)
    for (const auto& [w, c] : *terms)
      coords[w.str()] = (c * Rational(lcm)).str();
  return coords;
}

json lie_payload(const LieElt& e) {
  std::vector<const std::map<Word, Rational>*> parts;
  for (const auto& [deg, terms] : e.components()) parts.push_back(&terms);
  json scale;
  json coords = scaled_coords(parts, scale);
  return json{{"scale", scale}, {"coords", coords}, {"pretty", print_bracket(e)}};
}

json cyclic_coords(const CyclicVec& v, const mpz_class& lcm) {
  json coords = json::object();
  for (const auto& [neck, c] : v.terms()) coords[neck.str()] = (c * Rational(lcm)).str();
  return coords;
}

void emit(const json& payload, bool as_json, const std::string& text) {
  if (as_json) {
    std::cout << payload.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

void check_guard(int degree, int guard, bool force, const std::string& what) {
  if (degree > guard && !force)
    throw usage_error(what + " above degree " + std::to_string(guard) +
                      " needs --force (exponential cost)");
}

struct CommonFlags {
  bool json_out = false;
  bool quiet = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_flag("--json", flags.json_out, "emit JSON instead of text");
  cmd->add_flag("--quiet", flags.quiet, "suppress progress notes on stderr");
}

void note(const CommonFlags& flags, const std::string& message) {
  if (!flags.quiet) std::cerr << message << "\n";
}

int run_dims(int max, const CommonFlags& flags) {
  json rows = json::array();
  std::string text = "degree  lie  cyclic\n";
  for (int n = 1; n <= max; ++n) {
    const auto lie = witt_dim(n);
    const auto cyc = necklace_dim(n);
    rows.push_back({{"degree", n}, {"lie", lie}, {"cyclic", cyc}});
    text += std::to_string(n) + "  " + std::to_string(lie) + "  " + std::to_string(cyc) + "\n";
  }
  emit(json{{"max", max}, {"rows", rows}}, flags.json_out, text);
  return 0;
}

int run_bch(int degree, const CommonFlags& flags) {
  const LieElt z = bch_series(degree);
  const json payload = lie_payload(z);
  emit(json{{"degree", degree}, {"z", payload}}, flags.json_out,
       "z through degree " + std::to_string(degree) + ":\n  " +
           payload["pretty"].get<std::string>() + "\n");
  return 0;
}

int run_kv_solution(int degree, const CommonFlags& flags) {
  const KvPair pair = solvable_pair(degree);
  const json f = lie_payload(pair.f);
  const json g = lie_payload(pair.g);
  emit(json{{"degree", degree}, {"f0", f}, {"g0", g}}, flags.json_out,
       "f0 through degree " + std::to_string(degree) + ":\n  " +
           f["pretty"].get<std::string>() + "\ng0:\n  " + g["pretty"].get<std::string>() +
           "\n");
  return 0;
}

int run_trace_check(int degree, const CommonFlags& flags) {
  const CyclicVec lhs = kv2_lhs(degree);
  const CyclicVec rhs = kv2_rhs(degree);
  const CyclicVec defect = rhs - lhs;
  mpz_class lcm = 1;
  for (const auto* v : {&lhs, &rhs, &defect})
    for (const auto& [neck, c] : v->terms())
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
  const std::string scale = (lcm == 1) ? "1" : ("1/" + lcm.get_str());
  const bool zero = defect.is_zero();
  const json payload{{"degree", degree},
                     {"scale", scale},
                     {"lhs", cyclic_coords(lhs, lcm)},
                     {"rhs", cyclic_coords(rhs, lcm)},
                     {"defect", cyclic_coords(defect, lcm)},
                     {"defect_zero", zero}};
  std::string text = "degree " + std::to_string(degree) + ", scale " + scale + "\n";
  text += "defect_zero: " + std::string(zero ? "true" : "false") + "\n";
  if (!zero) {
    text += "defect:\n";
    for (const auto& [neck, c] : defect.terms())
      text += "  " + neck.str() + ": " + (c * Rational(lcm)).str() + "\n";
  }
  emit(payload, flags.json_out, text);
  return 0;
}

int run_kv1_check(int degree, const CommonFlags& flags) {
  const LieElt residual = kv1_residual(solvable_pair(degree), degree);
  const json payload{{"degree", degree},
                     {"residual", lie_payload(residual)},
                     {"residual_zero", residual.is_zero()}};
  emit(payload, flags.json_out,
       "degree " + std::to_string(degree) + "\nresidual_zero: " +
           (residual.is_zero() ? "true" : "false") + "\nresidual: " +
           print_bracket(residual) + "\n");
  return 0;
}

int run_kv2(int degree, const std::vector<unsigned long long>& moduli, bool use_modular,
            bool with_basis, const std::string& export_path, int guard_exact,
            int guard_modular, bool force, const CommonFlags& flags) {
  const bool modular = use_modular || !moduli.empty();
  check_guard(degree, modular ? guard_modular : guard_exact, force,
              modular ? "modular elimination" : "exact elimination");
  if (modular && with_basis)
    throw usage_error("--basis requires the exact method (drop --mod/--modular)");

  std::vector<unsigned long long> primes = moduli;
  if (modular && primes.empty())
    primes.assign(kDefaultModularPrimes.begin(), kDefaultModularPrimes.end());
  for (const auto p : primes) {
    mpz_class z(static_cast<unsigned long>(p));
    if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
      throw usage_error("--mod " + std::to_string(p) + " is not prime");
  }

  note(flags, "assembling the degree-" + std::to_string(degree) + " system");
  const SparseMatQ m = assemble_system(degree);
  json payload{{"degree", degree},
               {"rows", m.rows()},
               {"cols", m.cols()},
               {"nnz", m.nnz()}};
  std::string text = "degree " + std::to_string(degree) + ": " + std::to_string(m.rows()) +
                     " x " + std::to_string(m.cols()) + ", " + std::to_string(m.nnz()) +
                     " entries\n";
  if (!export_path.empty()) {
    export_sparse(m, export_path);
    payload["export"] = export_path;
    text += "exported to " + export_path + "\n";
  }

  if (modular) {
    note(flags, "eliminating modulo " + std::to_string(primes.size()) + " prime(s)");
    json runs = json::array();
    unsigned long long best = static_cast<unsigned long long>(m.cols()) + 1ULL;
    bool agree = true;
    unsigned long long first = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const auto report = rank_mod_p(m, primes[i]);
      runs.push_back({{"modulus", primes[i]}, {"nullity", report.nullity}});
      text += "mod " + std::to_string(primes[i]) + ": nullity " +
              std::to_string(report.nullity) + "\n";
      if (i == 0) first = report.nullity;
      agree = agree && report.nullity == first;
      best = std::min(best, report.nullity);
    }
    payload["method"] = "modular";
    payload["runs"] = runs;
    payload["agree"] = agree;
    payload["nullity"] = best;
    payload["upper_bound_only"] = true;
    text += std::string("agree: ") + (agree ? "true" : "false") +
            " (modular nullity only upper-bounds the exact value)\n";
  } else {
    note(flags, "eliminating exactly");
    const KernelReport report = kernel_dim_exact(m, with_basis);
    payload["method"] = "exact";
    payload["nullity"] = report.nullity;
    text += "nullity " + std::to_string(report.nullity) + " (exact)\n";
    if (with_basis) {
      json basis = json::array();
      for (const auto& vec : report.basis) {
        const auto [a, b] = decode_pair(vec, degree);
        basis.push_back({{"a", print_bracket(a)}, {"b", print_bracket(b)}});
        text += "a: " + print_bracket(a) + "\nb: " + print_bracket(b) + "\n";
      }
      payload["basis"] = basis;
    }
  }
  emit(payload, flags.json_out, text);
  return 0;
}

// {"X": [[...], ...], "Y": [[...], ...]} with integer entries, given either as
// JSON numbers or as decimal strings for values beyond 64 bits.
IntMat matrix_from_json(const json& rows, const std::string& name) {
  if (!rows.is_array() || rows.empty())
    throw usage_error("matrix " + name + " must be a non-empty array of rows");
  const int n = static_cast<int>(rows.size());
  IntMat m = IntMat::zero(n);
  for (int i = 0; i < n; ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n)
      throw usage_error("matrix " + name + " must be square");
    for (int j = 0; j < n; ++j) {
      const json& cell = rows[i][j];
      if (cell.is_number_integer()) {
        m.at(i, j) = mpz_class(cell.get<long>());
      } else if (cell.is_string()) {
        m.at(i, j) = mpz_class(cell.get<std::string>());
      } else {
        throw usage_error("matrix " + name + " entries must be integers");
      }
    }
  }
  return m;
}

int run_counterexample(const CommonFlags& flags, const std::string& matrices_path) {
  IntMat X = counterexample_x();
  IntMat Y = counterexample_y();
  if (!matrices_path.empty()) {
    std::ifstream in(matrices_path);
    if (!in) throw std::runtime_error("cannot open " + matrices_path);
    json doc;
    in >> doc;
    X = matrix_from_json(doc.at("X"), "X");
    Y = matrix_from_json(doc.at("Y"), "Y");
    if (X.n != Y.n) throw usage_error("matrices X and Y must have equal size");
  }
  json traces = json::object();
  std::string text;
  for (const char* w : {"11112212", "11112122", "11121122", "11122112"}) {
    const mpz_class t = word_trace(Word::parse(w), X, Y);
    traces[w] = t.get_str();
    text += std::string("trace ") + w + ": " + t.get_str() + "\n";
  }
  note(flags, "computing the degree-8 defect");
  const CyclicVec defect = trace_defect(8);
  const CyclicVec filtered = filter_by_letter_degree(defect, 2, 3);
  const Rational y3 = eval_cyclic(filtered, X, Y);
  const Rational full = eval_cyclic(defect, X, Y);
  const json payload{{"traces", traces},
                     {"y3_filtered_value", y3.str()},
                     {"y3_nonzero", !y3.is_zero()},
                     {"full_defect_value", full.str()}};
  text += "y3 filtered defect value: " + y3.str() + (y3.is_zero() ? " (zero)" : " (nonzero)") +
          "\nfull defect value: " + full.str() + "\n";
  emit(payload, flags.json_out, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for the two-generator composition series, the solvable "
               "pair, and the cyclic trace identity"};
  app.require_subcommand(1);

  struct {
    CommonFlags common;
    int max = 12;
  } dims;
  auto* dims_cmd = app.add_subcommand("dims", "graded dimension table");
  dims_cmd->add_option("--max", dims.max, "largest degree")->check(CLI::Range(1, 32));
  add_common(dims_cmd, dims.common);

  struct DegreeCmd {
    CommonFlags common;
    int degree = 1;
    int guard = 12;
    bool force = false;
  };
  auto add_degree_cmd = [&](const char* name, const char* help, DegreeCmd& state) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("--degree", state.degree, "homogeneous degree")
        ->required()
        ->check(CLI::Range(1, 31));
    cmd->add_option("--guard", state.guard, "largest degree allowed without --force");
    cmd->add_flag("--force", state.force, "override the degree guard");
    add_common(cmd, state.common);
    return cmd;
  };

  DegreeCmd bch_state, solution_state, trace_state, kv1_state;
  auto* bch_cmd = add_degree_cmd("bch", "composition series in bracket form", bch_state);
  auto* solution_cmd =
      add_degree_cmd("kv-solution", "solvable pair (f0, g0)", solution_state);
  auto* trace_cmd = add_degree_cmd(
      "trace-check", "both sides of the trace identity and their defect", trace_state);
  auto* kv1_cmd =
      add_degree_cmd("kv1-check", "residual of the first equation", kv1_state);

  struct {
    CommonFlags common;
    int degree = 1;
    std::vector<unsigned long long> moduli;
    bool modular = false;
    bool basis = false;
    std::string export_path;
    int guard_exact = 12;
    int guard_modular = 14;
    bool force = false;
  } kv2;
  auto* kv2_cmd = app.add_subcommand("kv2", "kernel dimension of the graded pair system");
  kv2_cmd->add_option("--degree", kv2.degree, "homogeneous degree")
      ->required()
      ->check(CLI::Range(1, 31));
  kv2_cmd->add_option("--mod", kv2.moduli, "prime modulus (repeatable)");
  kv2_cmd->add_flag("--modular", kv2.modular, "use the default prime list");
  kv2_cmd->add_flag("--basis", kv2.basis, "also print an exact kernel basis");
  kv2_cmd->add_option("--export", kv2.export_path, "write the assembled matrix to a file");
  kv2_cmd->add_option("--guard-exact", kv2.guard_exact,
                      "largest exact degree allowed without --force");
  kv2_cmd->add_option("--guard-modular", kv2.guard_modular,
                      "largest modular degree allowed without --force");
  kv2_cmd->add_flag("--force", kv2.force, "override the degree guards");
  add_common(kv2_cmd, kv2.common);

  struct {
    CommonFlags common;
    std::string matrices_path;
  } counter;
  auto* counter_cmd =
      app.add_subcommand("counterexample", "built-in matrix traces and the filtered defect");
  counter_cmd->add_option("--matrices", counter.matrices_path,
                          "JSON file with integer matrices {\"X\": [[..]], \"Y\": [[..]]}");
  add_common(counter_cmd, counter.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (dims_cmd->parsed()) return run_dims(dims.max, dims.common);
    if (bch_cmd->parsed()) {
      check_guard(bch_state.degree, bch_state.guard, bch_state.force, "series expansion");
      return run_bch(bch_state.degree, bch_state.common);
    }
    if (solution_cmd->parsed()) {
      check_guard(solution_state.degree, solution_state.guard, solution_state.force,
                  "series expansion");
      return run_kv_solution(solution_state.degree, solution_state.common);
    }
    if (trace_cmd->parsed()) {
      check_guard(trace_state.degree, trace_state.guard, trace_state.force, "trace check");
      return run_trace_check(trace_state.degree, trace_state.common);
    }
    if (kv1_cmd->parsed()) {
      check_guard(kv1_state.degree, kv1_state.guard, kv1_state.force, "residual check");
      return run_kv1_check(kv1_state.degree, kv1_state.common);
    }
    if (kv2_cmd->parsed())
      return run_kv2(kv2.degree, kv2.moduli, kv2.modular, kv2.basis, kv2.export_path,
                     kv2.guard_exact, kv2.guard_modular, kv2.force, kv2.common);
    if (counter_cmd->parsed())
      return run_counterexample(counter.common, counter.matrices_path);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

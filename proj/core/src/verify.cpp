#include "maxdet/verify.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "maxdet/bounds.hpp"
#include "maxdet/constructions.hpp"
#include "maxdet/exact.hpp"
#include "maxdet/schedule.hpp"
#include "maxdet/search.hpp"

namespace maxdet {

namespace {

// Printed reference values with d significant figures are accepted at
// relative error <= 5 * 10^(1-d).
double sigfig_tolerance(int sigfigs) { return 5.0 * std::pow(10.0, 1 - sigfigs); }

class Criterion {
 public:
  explicit Criterion(std::string name) : result_{std::move(name), true, 0.0, {}} {
    start_ = std::chrono::steady_clock::now();
  }

  void check(const std::string& name, bool ok, const std::string& expected,
             const std::string& actual) {
    result_.checks.push_back({name, ok, expected, actual});
    result_.pass = result_.pass && ok;
  }

  void check_value(const std::string& name, const LogMagnitude& actual,
                   double ref_mantissa, long long ref_exp, int sigfigs) {
    const double ref_l10 = std::log10(ref_mantissa) + double(ref_exp);
    bool ok = false;
    if (!actual.is_zero()) {
      const double rel = std::abs(std::pow(10.0, actual.log10() - ref_l10) - 1.0);
      ok = rel <= sigfig_tolerance(sigfigs);
    }
    std::ostringstream ref;
    ref << ref_mantissa << "e" << ref_exp;
    check(name, ok, ref.str(), actual.str());
  }

  void check_value(const std::string& name, const LogMagnitude& actual,
                   double reference, int sigfigs) {
    bool ok = false;
    if (!actual.is_zero() && reference > 0.0) {
      const double rel = std::abs(actual.value() / reference - 1.0);
      ok = rel <= sigfig_tolerance(sigfigs);
    }
    check(name, ok, std::to_string(reference), actual.str(8));
  }

  void check_exact(const std::string& name, const BigInt& actual,
                   const BigInt& expected) {
    check(name, actual == expected, expected.str(), actual.str());
  }

  void check_runtime(double limit_seconds) {
    const double elapsed = seconds();
    std::ostringstream a;
    a << elapsed << " s";
    std::ostringstream e;
    e << "< " << limit_seconds << " s";
    check("runtime", elapsed < limit_seconds, e.str(), a.str());
  }

  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

  CriterionResult finish() {
    result_.elapsed_seconds = seconds();
    return result_;
  }

 private:
  CriterionResult result_;
  std::chrono::steady_clock::time_point start_;
};

std::string fmt(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

CriterionResult criterion_bound_triple() {
  Criterion c("bound_triple_n1000_k3");
  c.check_value("hadamard", hadamard_bound(1000, 3), 3.64, 238, 3);
  const RyserBound ryser = ryser_bound(1000, 3);
  c.check("ryser_lambda", ryser.lambda == Rational(2, 333), "2/333",
          ryser.lambda.str());
  c.check_value("ryser", ryser.value, 2.31, 238, 3);
  c.check_value("pair", pair_bound(1000, 1000, 3), 1.08, 230, 3);
  c.check_runtime(1.0);
  return c.finish();
}

CriterionResult criterion_group_constants() {
  Criterion c("group_constants");
  c.check_value("c_pair_3", c_pair(3), 1.6984, 5);
  c.check_value("c_pair_17", c_pair(17), 4.1197, 5);
  c.check_value("c_q_8_17", c_q(8, 17), 4.1111, 5);
  const OptimalGroup g17 = optimal_q(17);
  c.check("optimal_q_17", g17.q == 8, "8", std::to_string(g17.q));
  c.check_value("c_q_23_49", c_q(23, 49), 6.9931, 5);
  const OptimalGroup g49 = optimal_q(49);
  c.check("optimal_q_49", g49.q == 23, "23", std::to_string(g49.q));
  return c.finish();
}

CriterionResult criterion_growth_constant_table() {
  Criterion c("growth_constant_table");
  struct Row {
    std::int64_t k;
    double c2;
    std::int64_t q_star;
    double c_q_star;
    double alpha;
    int alpha_sigfigs;
    double beta;
  };
  // Five-column reference table for k = 3..10.
  static const Row kRows[] = {
      {3, 1.6984, 2, 1.6984, 21.91, 4, 1.6977},
      {4, 1.9759, 3, 1.9719, 782.53, 5, 1.9702},
      {5, 2.2179, 3, 2.2116, 1.2591e5, 5, 2.2097},
      {6, 2.4352, 4, 2.4279, 1.0075e8, 5, 2.4257},
      {7, 2.6341, 4, 2.6258, 4.3557e11, 5, 2.6240},
      {8, 2.8187, 5, 2.8103, 1.0925e16, 5, 2.8083},
      {9, 2.9917, 5, 2.9828, 1.6920e21, 5, 2.9812},
      {10, 3.1551, 5, 3.1462, 1.7105e27, 5, 3.1447},
  };
  for (const Row& row : kRows) {
    const std::string suffix = "_k" + std::to_string(row.k);
    c.check_value("sqrt_k" + suffix, c_q(1, row.k), std::sqrt(double(row.k)), 5);
    c.check_value("c2" + suffix, c_q(2, row.k), row.c2, 5);
    const OptimalGroup g = optimal_q(row.k);
    c.check("q_star" + suffix, g.q == row.q_star, std::to_string(row.q_star),
            std::to_string(g.q));
    c.check_value("c_q_star" + suffix, g.c, row.c_q_star, 5);
    c.check_value("alpha" + suffix, greedy_alpha(row.k), row.alpha, row.alpha_sigfigs);
    c.check_value("beta" + suffix, greedy_beta(row.k), row.beta, 5);
  }
  c.check_runtime(1.0);
  return c.finish();
}

CriterionResult criterion_greedy_schedules() {
  Criterion c("greedy_schedules");
  const RemovalSchedule q100 = make_schedule(100, 200, 17);
  const std::vector<std::int64_t> expected_q = {9, 8, 8, 7, 6, 6, 5, 5, 4, 4, 4,
                                                3, 3, 3, 3, 2, 2, 2, 2, 2, 2, 1,
                                                1, 1, 1, 1, 1, 1, 1, 1, 1};
  {
    std::ostringstream a;
    for (auto v : q100.removals) a << v << ' ';
    c.check("removal_sequence_100_200_17", q100.removals == expected_q,
            "31-entry reference sequence", a.str());
  }

  const RemovalSchedule q1000 = make_schedule(1000, 1000, 17);
  static const std::pair<std::int64_t, std::int64_t> kCounts[] = {
      {17, 4}, {16, 4}, {15, 3}, {14, 5}, {13, 4}, {12, 5}, {11, 5}, {10, 6},
      {9, 7},  {8, 7},  {7, 8},  {6, 10}, {5, 12}, {4, 14}, {3, 20}, {2, 29},
      {1, 57}};
  bool counts_ok = true;
  for (const auto& [i, ai] : kCounts) {
    counts_ok = counts_ok && q1000.counts.at(i) == ai;
  }
  c.check("counts_1000_1000_17", counts_ok, "17 reference counts",
          counts_ok ? "all match" : "mismatch");

  c.check_value("schedule_bound_1000_1000_17", schedule_bound(q1000), 9.3551, 612, 5);
  c.check_value("greedy_closed_1000_1000_17", greedy_closed_bound(1000, 1000, 17),
                3.7674, 707, 5);
  c.check_value("alpha_17", greedy_alpha(17), 4.8887, 93, 5);
  c.check_value("beta_17", greedy_beta(17), 4.1104, 5);
  c.check_value("alpha_3", greedy_alpha(3), 21.91, 4);
  c.check_value("beta_3", greedy_beta(3), 1.6977, 5);
  return c.finish();
}

CriterionResult criterion_exact_determinants() {
  Criterion c("exact_determinants");
  const BigInt det_r7 = det_exact(named_matrix(NamedMatrix::R7_K2));
  c.check_exact("abs_det_r7_k2", abs(det_r7), 4);
  c.check_exact("det_b10", det_exact(named_matrix(NamedMatrix::B10)), 48);

  const ZeroOneMatrix a10 = named_matrix(NamedMatrix::A10);
  c.check_exact("det_a10", det_exact(a10), 15);
  bool off_ok = true;
  for (const IntMatrix& g : {gram(a10), gram(transpose(a10))}) {
    for (std::size_t i = 0; i < g.rows(); ++i) {
      for (std::size_t j = 0; j < g.cols(); ++j) {
        if (i != j && g(i, j) != 0 && g(i, j) != 1) off_ok = false;
      }
    }
  }
  c.check("a10_gram_offdiagonals", off_ok, "subset of {0,1}",
          off_ok ? "subset of {0,1}" : "value outside {0,1}");

  c.check_exact("abs_det_plane_order2", abs(det_exact(projective_plane(2))), 24);
  c.check_exact("abs_det_biplane", abs(det_exact(biplane_11())), 1215);

  bool formula_ok = true;
  for (std::int64_t n = 2; n <= 8 && formula_ok; ++n) {
    for (std::int64_t k = 1; k <= 6 && formula_ok; ++k) {
      for (std::int64_t a = 0; a < k && formula_ok; ++a) {
        formula_ok = det_exact(s_matrix(n, a, k)) == det_s_formula(n, a, k);
      }
    }
  }
  c.check("closed_form_overlap_dets", formula_ok,
          "Bareiss equals closed form for 2<=n<=8, 0<=a<k<=6",
          formula_ok ? "all equal" : "mismatch");

  const CounterexampleReport cx = verify_counterexample();
  c.check("counterexample_conditions", cx.all_pass, "all five conditions",
          cx.all_pass ? "all pass" : "a condition failed");
  c.check_runtime(10.0);
  return c.finish();
}

CriterionResult criterion_search_certification(const VerificationOptions& options) {
  Criterion c("search_certification");
  SearchOptions opts;
  opts.threads = options.search_threads;

  static const std::pair<std::int64_t, std::int64_t> kFallat[] = {
      {3, 2}, {4, 2}, {5, 2}, {6, 4}, {7, 2}};
  for (const auto& [n, expected] : kFallat) {
    const auto t0 = std::chrono::steady_clock::now();
    const SearchResult res = search_max_det(MatrixClass::S, n, 2, opts);
    const double dt = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    const bool ok = res.exhaustive && res.max_abs_det == expected && dt < 60.0;
    c.check("max_det_S_" + std::to_string(n) + "_2", ok, std::to_string(expected),
            res.max_abs_det.str() + (res.exhaustive ? "" : " (not exhaustive)"));
  }

  {
    const auto t0 = std::chrono::steady_clock::now();
    const SearchResult r72 = search_max_det(MatrixClass::R, 7, 2, opts);
    const double dt = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    c.check("max_det_R_7_2", r72.exhaustive && r72.max_abs_det == 4 && dt < 60.0,
            "4", r72.max_abs_det.str());
  }

  const auto t0 = std::chrono::steady_clock::now();
  const SearchResult s73 = search_max_det(MatrixClass::S, 7, 3, opts);
  const double dt =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.check("max_det_S_7_3", s73.exhaustive && s73.max_abs_det == 24 && dt < 60.0,
          "24", s73.max_abs_det.str());
  // The maximum is attained exactly at a plane incidence matrix: the witness
  // must be in class with |det| 24 and pairwise row overlaps all 1.
  const ClassFlags witness_flags = class_membership(s73.witness, 3);
  const bool is_design = gram(s73.witness) == s_matrix(7, 1, 3);
  c.check("witness_S_7_3_is_plane",
          witness_flags.in_s && is_design && abs(det_exact(s73.witness)) == 24,
          "plane incidence witness with |det| 24",
          !witness_flags.in_s ? "outside class"
                              : (is_design ? "plane incidence" : "not a design"));
  return c.finish();
}

CriterionResult criterion_bound_dominance(const VerificationOptions& options) {
  Criterion c("bound_dominance");
  SearchOptions opts;
  opts.threads = options.search_threads;

  struct Case {
    MatrixClass cls;
    std::int64_t n, k;
  };
  static const Case kCases[] = {
      {MatrixClass::R, 4, 2}, {MatrixClass::R, 5, 2}, {MatrixClass::R, 6, 2},
      {MatrixClass::R, 7, 2}, {MatrixClass::R, 5, 3}, {MatrixClass::R, 6, 3},
      {MatrixClass::S, 4, 2}, {MatrixClass::S, 5, 2}, {MatrixClass::S, 6, 2},
      {MatrixClass::S, 7, 2}, {MatrixClass::S, 6, 3}, {MatrixClass::S, 7, 3},
      {MatrixClass::T, 3, 2}, {MatrixClass::T, 4, 2}, {MatrixClass::T, 5, 2},
      {MatrixClass::T, 6, 2}, {MatrixClass::T, 4, 3}, {MatrixClass::T, 5, 3},
      {MatrixClass::T, 6, 3},
  };
  for (const Case& cs : kCases) {
    const CertifyReport report = certify_bounds(cs.cls, cs.n, cs.k, opts);
    std::string failed;
    for (const auto& chk : report.checks) {
      if (!chk.ok) failed += chk.name + " ";
    }
    const std::string label = std::string("certify_") + to_string(cs.cls) + "_" +
                              std::to_string(cs.n) + "_" + std::to_string(cs.k);
    c.check(label, report.all_ok && report.search.exhaustive,
            "max within all bounds",
            report.all_ok ? "max = " + report.search.max_abs_det.str()
                          : "violated: " + failed);
  }

  static const Case kPruneCases[] = {
      {MatrixClass::R, 4, 2}, {MatrixClass::R, 5, 2}, {MatrixClass::R, 5, 3},
      {MatrixClass::S, 5, 2}, {MatrixClass::T, 4, 2}, {MatrixClass::T, 5, 2},
      {MatrixClass::T, 5, 3},
  };
  for (const Case& cs : kPruneCases) {
    SearchOptions pruned = opts;
    pruned.prune = true;
    SearchOptions unpruned = opts;
    unpruned.prune = false;
    const SearchResult with_bounds = search_max_det(cs.cls, cs.n, cs.k, pruned);
    const SearchResult plain = search_max_det(cs.cls, cs.n, cs.k, unpruned);
    const std::string label = std::string("prune_soundness_") + to_string(cs.cls) +
                              "_" + std::to_string(cs.n) + "_" +
                              std::to_string(cs.k);
    c.check(label, with_bounds.max_abs_det == plain.max_abs_det,
            plain.max_abs_det.str(), with_bounds.max_abs_det.str());
  }
  return c.finish();
}

CriterionResult criterion_root_and_inequalities() {
  Criterion c("root_and_inequalities");
  const double root = s_star(1e-12);
  const double residual =
      root * root * root + root - std::log1p(root) * (root + 1.0);
  c.check("s_star_value", std::abs(root - 0.4395) < 5e-5, "0.4395 (4 decimals)",
          fmt(root));
  c.check("s_star_residual", std::abs(residual) < 1e-10, "|f(s)| < 1e-10",
          fmt(residual));

  bool chain_ok = true;
  for (std::int64_t k = 3; k <= 200 && chain_ok; ++k) {
    chain_ok = greedy_beta(k).ln() < c_pair(k).ln() &&
               c_pair(k).ln() < 0.5 * std::log(double(k));
  }
  c.check("beta_below_pair_below_sqrt", chain_ok, "beta_k < c_k < sqrt(k), k=3..200",
          chain_ok ? "holds" : "violated");

  bool greedy_ok = true;
  for (std::int64_t k = 3; k <= 27 && greedy_ok; ++k) {
    greedy_ok = greedy_beta(k).ln() < optimal_q(k).c.ln();
  }
  c.check("beta_below_best_group", greedy_ok, "beta_k < c_{q*,k}, k=3..27",
          greedy_ok ? "holds" : "violated");

  const LogMagnitude d = perturbed_bound(4, 0.01);
  c.check_value("perturbed_4_0.01", d, 1.9892, 5);
  c.check("perturbed_below_hadamard", d.value() < 2.02, "< 2.02", fmt(d.value()));

  bool collapse_ok = true;
  for (std::int64_t k = 2; k <= 200 && collapse_ok; ++k) {
    const double rel =
        std::abs(std::exp(perturbed_bound(k, 0.0).ln() - c_pair(k).ln()) - 1.0);
    collapse_ok = rel <= 1e-12;
  }
  c.check("perturbed_delta0_is_pair", collapse_ok, "relative gap <= 1e-12",
          collapse_ok ? "holds" : "violated");
  return c.finish();
}

CriterionResult criterion_monotonicity_consistency() {
  Criterion c("monotonicity_consistency");

  bool decreasing = true;
  for (std::int64_t n = 2; n <= 8 && decreasing; ++n) {
    for (std::int64_t k = 2; k <= 6 && decreasing; ++k) {
      double prev = det_s_formula(n, 0.0, k).ln();
      for (double x = 0.1; x < double(k) - 0.05; x += 0.1) {
        const double cur = det_s_formula(n, x, k).ln();
        if (!(cur < prev)) {
          decreasing = false;
          break;
        }
        prev = cur;
      }
    }
  }
  c.check("overlap_det_strictly_decreasing", decreasing,
          "decreasing in x on all grids", decreasing ? "holds" : "violated");

  c.check_value("design_rate_k3", design_lower_bound(3), 1.5746, 5);
  c.check("design_rate_below_beta3",
          design_lower_bound(3).ln() < greedy_beta(3).ln(), "rate < beta_3",
          design_lower_bound(3).ln() < greedy_beta(3).ln() ? "holds" : "violated");

  // Every group of q <= 3 rows sharing a column of ones has squared volume at
  // most the closed-form overlap determinant, exhaustively for k <= 3, n <= 6.
  bool dominance = true;
  for (int n = 2; n <= 6 && dominance; ++n) {
    for (int k = 1; k <= 3 && dominance; ++k) {
      if (k > n) continue;
      std::vector<std::vector<int>> subsets;
      std::vector<int> pick;
      auto gen = [&](auto&& self, int start) -> void {
        if (int(pick.size()) == k) {
          subsets.push_back(pick);
          return;
        }
        for (int c = start; c < n; ++c) {
          pick.push_back(c);
          self(self, c + 1);
          pick.pop_back();
        }
      };
      gen(gen, 0);
      const int count = int(subsets.size());
      for (int q = 1; q <= 3 && dominance; ++q) {
        if (q > n) continue;  // vol is defined for rows <= cols
        std::vector<int> rows(q, 0);
        auto iterate = [&](auto&& self, int depth, int start) -> void {
          if (!dominance) return;
          if (depth == q) {
            ZeroOneMatrix a(q, n);
            for (int r = 0; r < q; ++r) {
              for (int col : subsets[rows[r]]) a.set(r, col, 1);
            }
            bool shared = false;
            for (int col = 0; col < n && !shared; ++col) {
              int ones = 0;
              for (int r = 0; r < q; ++r) ones += a(r, col);
              shared = ones == q;
            }
            if (shared) {
              dominance = vol_squared(a) <= det_s_formula(q, std::int64_t(1), k);
            }
            return;
          }
          for (int i = start; i < count; ++i) {
            rows[depth] = i;
            self(self, depth + 1, i);  // multisets: repeats allowed
            if (!dominance) return;
          }
        };
        iterate(iterate, 0, 0);
      }
    }
  }
  c.check("shared_column_volume_dominance", dominance,
          "vol^2 <= closed form for q<=3, k<=3, n<=6",
          dominance ? "holds" : "violated");
  return c.finish();
}

}  // namespace

std::vector<CriterionResult> run_verification(const VerificationOptions& options) {
  std::vector<CriterionResult> results;
  results.push_back(criterion_bound_triple());
  results.push_back(criterion_group_constants());
  results.push_back(criterion_growth_constant_table());
  results.push_back(criterion_greedy_schedules());
  results.push_back(criterion_exact_determinants());
  results.push_back(criterion_search_certification(options));
  results.push_back(criterion_bound_dominance(options));
  results.push_back(criterion_root_and_inequalities());
  results.push_back(criterion_monotonicity_consistency());
  return results;
}

void print_verification(const std::vector<CriterionResult>& results,
                        std::ostream& out, bool verbose) {
  for (const CriterionResult& r : results) {
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " ("
        << r.elapsed_seconds << " s)\n";
    for (const CheckLine& line : r.checks) {
      if (verbose || !line.pass) {
        out << "    " << (line.pass ? "ok   " : "FAIL ") << line.name
            << ": expected " << line.expected << ", got " << line.actual << "\n";
      }
    }
  }
  std::size_t failed = 0;
  for (const auto& r : results) {
    if (!r.pass) ++failed;
  }
  if (failed == 0) {
    out << "all criteria passed\n";
  } else {
    out << failed << " criteria failed\n";
  }
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results) {
    if (!r.pass) return false;
  }
  return true;
}

std::string verification_to_json(const std::vector<CriterionResult>& results) {
  nlohmann::json j;
  nlohmann::json arr = nlohmann::json::array();
  std::size_t failed = 0;
  for (const auto& r : results) {
    nlohmann::json cj;
    cj["name"] = r.name;
    cj["pass"] = r.pass;
    cj["elapsed_seconds"] = r.elapsed_seconds;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& line : r.checks) {
      checks.push_back({{"name", line.name},
                        {"pass", line.pass},
                        {"expected", line.expected},
                        {"actual", line.actual}});
    }
    cj["checks"] = checks;
    arr.push_back(cj);
    if (!r.pass) ++failed;
  }
  j["criteria"] = arr;
  j["failed"] = failed;
  j["passed"] = results.size() - failed;
  return j.dump(2);
}

}  // namespace maxdet

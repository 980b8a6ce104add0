// Command-line front end: determinant bounds, greedy removal schedules,
// reference matrix constructions, exhaustive max-determinant search, figure
// data series and the self-verification suite.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "maxdet/bounds.hpp"
#include "maxdet/constructions.hpp"
#include "maxdet/exact.hpp"
#include "maxdet/report.hpp"
#include "maxdet/schedule.hpp"
#include "maxdet/search.hpp"
#include "maxdet/verify.hpp"

namespace {

using namespace maxdet;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

std::string format_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

struct BoundArgs {
  std::int64_t k = 0;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> m;
  std::optional<std::int64_t> q;
  std::optional<double> delta;
  std::optional<double> k_tilde;
  std::string out;
};

std::vector<BoundReport> collect_bounds(const BoundArgs& args) {
  std::vector<BoundReport> reports;
  const std::int64_t k = args.k;

  auto base_params = [&](std::optional<std::int64_t> m, std::optional<std::int64_t> n) {
    BoundParams p;
    p.m = m;
    p.n = n;
    p.k = k;
    return p;
  };

  if (args.n) {
    const std::int64_t n = *args.n;
    const std::int64_t m = args.m.value_or(n);
    const bool square = m == n;

    reports.push_back({"hadamard", base_params(m, n), hadamard_bound(m, k),
                       BoundKind::upper});
    if (square && n >= 2) {
      reports.push_back(
          {"ryser", base_params(m, n), ryser_bound(n, k).value, BoundKind::upper});
    }
    if (m >= 2) {
      reports.push_back({"ryser_rect", base_params(m, n),
                         ryser_gen_bound(m, n, k).value, BoundKind::upper});
    }
    reports.push_back(
        {"pair", base_params(m, n), pair_bound(m, n, k), BoundKind::upper});
    if (args.q) {
      BoundParams p = base_params(m, n);
      p.q = *args.q;
      reports.push_back(
          {"q_row", p, q_row_bound(m, n, k, *args.q), BoundKind::upper});
    }
    {
      const OptimalGroup best = optimal_q(k);
      BoundParams p = base_params(m, n);
      p.q = best.q;
      reports.push_back(
          {"q_row_optimal", p, q_row_bound(m, n, k, best.q), BoundKind::upper});
    }
    reports.push_back({"schedule", base_params(m, n),
                       schedule_bound(make_schedule(m, n, k)), BoundKind::upper});
    if (k >= 2 && m <= n) {
      reports.push_back({"greedy_closed", base_params(m, n),
                         greedy_closed_bound(m, n, k), BoundKind::upper});
    }
    // Constructed lower bounds, emitted only where the construction exists.
    if (square) {
      if (k == 2 && n % 3 == 0) {
        reports.push_back({"triangle_blocks", base_params(m, n),
                           LogMagnitude::from_ln(double(n / 3) * std::log(2.0)),
                           BoundKind::lower});
      }
      const std::int64_t p = k - 1;
      const std::int64_t block = p * p + p + 1;
      if (p >= 2 && is_prime(p) && n % block == 0) {
        const double block_ln =
            std::log(double(k)) + 0.5 * double(block - 1) * std::log(double(p));
        reports.push_back({"plane_blocks", base_params(m, n),
                           LogMagnitude::from_ln(double(n / block) * block_ln),
                           BoundKind::lower});
      }
      if (k == 5 && n % 11 == 0) {
        reports.push_back({"biplane_blocks", base_params(m, n),
                           LogMagnitude::from_ln(double(n / 11) * std::log(1215.0)),
                           BoundKind::lower});
      }
    }
  } else {
    // Rate-only mode: per-n growth constants for the requested k.
    reports.push_back(
        {"pair_rate", base_params({}, {}), c_pair(k), BoundKind::upper});
    if (args.q) {
      BoundParams p = base_params({}, {});
      p.q = *args.q;
      reports.push_back({"q_row_rate", p, c_q(*args.q, k), BoundKind::upper});
    }
    const OptimalGroup best = optimal_q(k);
    BoundParams p = base_params({}, {});
    p.q = best.q;
    reports.push_back({"q_row_rate_optimal", p, best.c, BoundKind::upper});
    if (k >= 2) {
      reports.push_back({"greedy_rate", base_params({}, {}), greedy_beta(k),
                         BoundKind::upper});
      reports.push_back({"design_replication_rate", base_params({}, {}),
                         design_lower_bound(k), BoundKind::lower});
    }
  }

  if (args.delta) {
    BoundParams p = base_params({}, {});
    p.delta = *args.delta;
    reports.push_back(
        {"perturbed_rate", p, perturbed_bound(k, *args.delta), BoundKind::upper});
  }
  if (args.k_tilde) {
    BoundParams p = base_params({}, {});
    p.k_tilde = *args.k_tilde;
    reports.push_back({"total_ones_rate", p, conjectured_dtilde(*args.k_tilde),
                       BoundKind::conjectural_upper});
  }
  return reports;
}

int cmd_bound(const BoundArgs& args) {
  write_output(to_json_string(collect_bounds(args)) + "\n", args.out);
  return 0;
}

struct ScheduleArgs {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::string csv;
  std::string out;
};

int cmd_schedule(const ScheduleArgs& args) {
  const RemovalSchedule s = make_schedule(args.m, args.n, args.k);
  nlohmann::json j;
  j["m"] = s.m;
  j["n"] = s.n;
  j["k"] = s.k;
  j["r"] = s.r;
  j["Q"] = s.removals;
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [i, a] : s.counts) counts[std::to_string(i)] = a;
  j["counts"] = counts;
  j["log10_bound"] = schedule_bound(s).log10();
  write_output(j.dump() + "\n", args.out);

  if (!args.csv.empty()) {
    std::ofstream csv(args.csv);
    if (!csv) throw std::runtime_error("cannot open CSV file: " + args.csv);
    csv << "i,a_i\n";
    for (const auto& [i, a] : s.counts) csv << i << ',' << a << '\n';
  }
  return 0;
}

struct ConstructArgs {
  std::string id;
  std::int64_t p = 2;
  std::int64_t n = 3;
  std::int64_t a = 1;
  std::int64_t k = 3;
  std::int64_t t = 1;
  std::string out;
};

int cmd_construct(const ConstructArgs& args) {
  ZeroOneMatrix m(1, 1);
  if (args.id == "R7_K2") {
    m = named_matrix(NamedMatrix::R7_K2);
  } else if (args.id == "A10") {
    m = named_matrix(NamedMatrix::A10);
  } else if (args.id == "B10") {
    m = named_matrix(NamedMatrix::B10);
  } else if (args.id == "plane") {
    m = projective_plane(args.p);
  } else if (args.id == "fano") {
    m = projective_plane(2);
  } else if (args.id == "biplane") {
    m = biplane_11();
  } else if (args.id == "smatrix") {
    // Same text layout; entries are exact integers in decimal.
    const IntMatrix sm = s_matrix(args.n, args.a, args.k);
    std::ostringstream text;
    text << sm.rows() << ' ' << sm.cols() << '\n';
    for (std::size_t r = 0; r < sm.rows(); ++r) {
      for (std::size_t c = 0; c < sm.cols(); ++c) {
        if (c) text << ' ';
        text << sm(r, c);
      }
      text << '\n';
    }
    write_output(text.str(), args.out);
    return 0;
  } else {
    std::cerr << "unknown construction id: " << args.id << "\n";
    return 2;
  }
  if (args.t > 1) m = block_diag_power(m, args.t);
  write_output(to_text(m), args.out);
  return 0;
}

struct SearchArgs {
  std::string cls = "S";
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::uint64_t budget = 100'000'000;
  int threads = 1;
  bool no_prune = false;
  std::int64_t limit = 0;  // 0: keep defaults
  std::string out;
};

int cmd_search(const SearchArgs& args) {
  SearchOptions opts;
  opts.budget = args.budget;
  opts.threads = args.threads;
  opts.prune = !args.no_prune;
  if (args.limit > 0) {
    opts.size_limit_rs = args.limit;
    opts.size_limit_t = args.limit;
  }
  const SearchResult res =
      search_max_det(matrix_class_from_string(args.cls), args.n, args.k, opts);
  nlohmann::json j;
  j["class"] = to_string(res.cls);
  j["n"] = res.n;
  j["k"] = res.k;
  j["max_abs_det"] = res.max_abs_det.str();
  j["nodes_explored"] = res.nodes_explored;
  j["exhaustive"] = res.exhaustive;
  j["budget"] = args.budget;
  j["witness"] = to_text(res.witness);
  write_output(j.dump() + "\n", args.out);
  return 0;
}

struct FigureArgs {
  std::int64_t k = 0;
  bool with_beta = false;
  std::string out;
};

int cmd_figure(const FigureArgs& args) {
  const double sqrt_k = std::sqrt(double(args.k));
  std::ostringstream csv;
  csv << "q,gap\n";
  for (std::int64_t q = 1; q <= args.k; ++q) {
    csv << q << ',' << format_fixed(sqrt_k - c_q(q, args.k).value(), 12) << '\n';
  }
  const OptimalGroup best = optimal_q(args.k);
  csv << "# optimal_q," << best.q << '\n';
  csv << "# c_optimal," << format_fixed(best.c.value(), 4) << '\n';
  if (args.with_beta && args.k >= 2) {
    csv << "# beta_gap," << format_fixed(sqrt_k - greedy_beta(args.k).value(), 12)
        << '\n';
  }
  write_output(csv.str(), args.out);
  return 0;
}

struct VerifyArgs {
  bool json = false;
  bool verbose = false;
  int threads = 1;
};

int cmd_verify(const VerifyArgs& args) {
  VerificationOptions opts;
  opts.search_threads = args.threads;
  const std::vector<CriterionResult> results = run_verification(opts);
  if (args.json) {
    std::cout << verification_to_json(results) << "\n";
  } else {
    print_verification(results, std::cout, args.verbose);
  }
  return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Determinant bounds and certified searches for sparse zero-one matrices"};
  app.require_subcommand(1);

  BoundArgs bound_args;
  auto* bound = app.add_subcommand(
      "bound", "Evaluate all applicable determinant bounds as JSON");
  bound->add_option("--k", bound_args.k, "row sum k")->required();
  std::int64_t opt_n = 0, opt_m = 0, opt_q = 0;
  double opt_delta = 0.0, opt_ktilde = 0.0;
  auto* n_opt = bound->add_option("--n", opt_n, "columns (and rows unless --m)");
  auto* m_opt = bound->add_option("--m", opt_m, "rows");
  auto* q_opt = bound->add_option("--q", opt_q, "group size for the q-row bound");
  auto* d_opt = bound->add_option("--delta", opt_delta, "perturbation radius in [0,1)");
  auto* kt_opt =
      bound->add_option("--ktilde", opt_ktilde, "real total-ones ratio (> 1)");
  bound->add_option("--out", bound_args.out, "output file (default stdout)");

  ScheduleArgs schedule_args;
  auto* schedule = app.add_subcommand(
      "schedule", "Greedy row-removal schedule and its volume bound");
  schedule->add_option("--m", schedule_args.m, "rows (default n)");
  schedule->add_option("--n", schedule_args.n, "columns")->required();
  schedule->add_option("--k", schedule_args.k, "row sum k")->required();
  schedule->add_option("--csv", schedule_args.csv, "also write (i, a_i) CSV here");
  schedule->add_option("--out", schedule_args.out, "output file (default stdout)");

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand(
      "construct", "Emit a reference matrix in the shared text format");
  construct
      ->add_option("--id", construct_args.id,
                   "one of R7_K2, A10, B10, fano, plane, biplane, smatrix")
      ->required();
  construct->add_option("--p", construct_args.p, "plane order (prime)");
  construct->add_option("--size", construct_args.n, "smatrix dimension n");
  construct->add_option("--a", construct_args.a, "smatrix off-diagonal value");
  construct->add_option("--k", construct_args.k, "smatrix diagonal value");
  construct->add_option("--t", construct_args.t, "block-diagonal copies");
  construct->add_option("--out", construct_args.out, "output file (default stdout)");

  SearchArgs search_args;
  auto* search = app.add_subcommand(
      "search", "Certified maximum |det| over a matrix class");
  search->add_option("--class", search_args.cls, "matrix class R, S or T")
      ->required();
  search->add_option("--n", search_args.n, "matrix size")->required();
  search->add_option("--k", search_args.k, "row sum / density k")->required();
  search->add_option("--budget", search_args.budget, "node budget");
  search->add_option("--threads", search_args.threads, "worker threads");
  search->add_flag("--no-prune", search_args.no_prune,
                   "disable bound pruning (full enumeration)");
  search->add_option("--limit", search_args.limit, "raise the size limit");
  search->add_option("--out", search_args.out, "output file (default stdout)");

  FigureArgs figure_args;
  auto* figure = app.add_subcommand(
      "figure", "CSV series of q versus sqrt(k) - c_{q,k} for q = 1..k");
  figure->add_option("--k", figure_args.k, "row sum k")->required();
  figure->add_flag("--beta", figure_args.with_beta,
                   "append the greedy-rate reference gap");
  figure->add_option("--out", figure_args.out, "output file (default stdout)");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand(
      "verify", "Run the full reproduction suite; nonzero exit on failure");
  verify->add_flag("--json", verify_args.json, "machine-readable summary");
  verify->add_flag("--verbose", verify_args.verbose, "print every check line");
  verify->add_option("--threads", verify_args.threads, "search worker threads");

  CLI11_PARSE(app, argc, argv);

  try {
    if (bound->parsed()) {
      if (*n_opt) bound_args.n = opt_n;
      if (*m_opt) bound_args.m = opt_m;
      if (*q_opt) bound_args.q = opt_q;
      if (*d_opt) bound_args.delta = opt_delta;
      if (*kt_opt) bound_args.k_tilde = opt_ktilde;
      return cmd_bound(bound_args);
    }
    if (schedule->parsed()) {
      if (schedule_args.m == 0) schedule_args.m = schedule_args.n;
      return cmd_schedule(schedule_args);
    }
    if (construct->parsed()) return cmd_construct(construct_args);
    if (search->parsed()) return cmd_search(search_args);
    if (figure->parsed()) return cmd_figure(figure_args);
    if (verify->parsed()) return cmd_verify(verify_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

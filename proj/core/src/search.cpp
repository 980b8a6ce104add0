#include "maxdet/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "maxdet/bounds.hpp"
#include "maxdet/constructions.hpp"
#include "maxdet/exact.hpp"
#include "maxdet/schedule.hpp"

namespace maxdet {

namespace {

constexpr std::int64_t kHardSizeCap = 10;  // int128 headroom in the Gram pivots
constexpr double kLogSlack = 1e-9;

using Mask = std::uint32_t;

int popcount(Mask m) { return std::popcount(m); }

// Rows are bitmasks with column 0 in the highest used bit, so numeric order
// on masks equals lexicographic order on row vectors.
std::vector<Mask> masks_of_weight(int n, int weight) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask(1) << n); ++m) {
    if (popcount(m) == weight) out.push_back(m);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

Mask top_mask(int n, int weight) {
  return ((Mask(1) << weight) - 1) << (n - weight);
}

// Exact |det| of the 0/1 matrix given by row masks. Bareiss with int128
// intermediates; minors stay far below the int128 range for n <= 10.
std::int64_t abs_det_masks(const std::vector<Mask>& rows, int n) {
  __int128 a[kHardSizeCap][kHardSizeCap];
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = (rows[i] >> (n - 1 - j)) & 1;
  }
  __int128 prev = 1;
  int sign = 1;
  for (int col = 0; col + 1 < n; ++col) {
    int pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a[pivot][j], a[col][j]);
      sign = -sign;
    }
    for (int i = col + 1; i < n; ++i) {
      for (int j = col + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[col][col] - a[i][col] * a[col][j]) / prev;
      }
    }
    prev = a[col][col];
  }
  __int128 d = a[n - 1][n - 1];
  if (sign < 0) d = -d;
  return static_cast<std::int64_t>(d < 0 ? -d : d);
}

// Exact Gram determinant of the first `count` placed rows (zero iff they are
// linearly dependent).
std::int64_t gram_det_prefix(const std::vector<Mask>& rows, int count) {
  __int128 g[kHardSizeCap][kHardSizeCap];
  for (int i = 0; i < count; ++i) {
    for (int j = i; j < count; ++j) {
      g[i][j] = g[j][i] = popcount(rows[i] & rows[j]);
    }
  }
  __int128 prev = 1;
  for (int col = 0; col + 1 < count; ++col) {
    int pivot = col;
    while (pivot < count && g[pivot][col] == 0) ++pivot;
    if (pivot == count) return 0;
    if (pivot != col) {
      for (int j = 0; j < count; ++j) std::swap(g[pivot][j], g[col][j]);
      // Gram matrices are PSD; a sign flip here can only happen on the way
      // to a zero determinant, and |result| is all we use.
    }
    for (int i = col + 1; i < count; ++i) {
      for (int j = col + 1; j < count; ++j) {
        g[i][j] = (g[i][j] * g[col][col] - g[i][col] * g[col][j]) / prev;
      }
    }
    prev = g[col][col];
  }
  __int128 d = g[count - 1][count - 1];
  return static_cast<std::int64_t>(d < 0 ? -d : d);
}

// Row sums per depth (nonincreasing) for one enumeration pass.
struct Profile {
  std::vector<int> sums;
  std::vector<double> rest_ln;  // bound on ln(vol) of rows at depth >= d
};

// Nonincreasing compositions of k*n into n parts within [1, n].
std::vector<std::vector<int>> t_partitions(std::int64_t n, std::int64_t k) {
  std::vector<std::vector<int>> out;
  std::vector<int> parts;
  const std::int64_t total = n * k;
  auto rec = [&](auto&& self, std::int64_t remaining, int depth, int cap) -> void {
    if (depth == n) {
      if (remaining == 0) out.push_back(parts);
      return;
    }
    const std::int64_t slots_after = n - depth - 1;
    for (int part = std::min<std::int64_t>(cap, remaining - slots_after);
         part >= 1; --part) {
      if (remaining - part > slots_after * std::int64_t(part)) break;
      parts.push_back(part);
      self(self, remaining - part, depth + 1, part);
      parts.pop_back();
    }
  };
  rec(rec, total, 0, int(n));
  return out;
}

class Searcher {
 public:
  Searcher(MatrixClass cls, std::int64_t n, std::int64_t k, const SearchOptions& opts)
      : cls_(cls), n_(int(n)), k_(k), opts_(opts) {
    for (int w = 0; w <= n_; ++w) cands_by_weight_.push_back(masks_of_weight(n_, w));
    if (cls == MatrixClass::T) {
      for (auto& parts : t_partitions(n, k)) profiles_.push_back(make_profile(parts));
    } else {
      profiles_.push_back(make_profile(std::vector<int>(n_, int(k))));
    }
  }

  SearchResult run() {
    SearchResult result;
    result.cls = cls_;
    result.n = n_;
    result.k = k_;

    run_value_phase();
    result.nodes_explored = nodes_.load();
    result.exhaustive = !aborted_.load();
    result.max_abs_det = best_value_;

    if (best_value_ == 0) {
      result.witness = circulant_witness();
    } else if (result.exhaustive) {
      result.witness = find_canonical_witness();
    } else {
      result.witness = masks_to_matrix(best_rows_);
    }
    return result;
  }

 private:
  Profile make_profile(const std::vector<int>& sums) const {
    Profile p;
    p.sums = sums;
    p.rest_ln.assign(n_ + 1, 0.0);
    for (int d = n_ - 1; d >= 0; --d) {
      p.rest_ln[d] = p.rest_ln[d + 1] + 0.5 * std::log(double(sums[d]));
    }
    if (cls_ != MatrixClass::T) {
      // Uniform row sums: the rectangular Ryser bound may beat Hadamard.
      for (int d = 0; d < n_; ++d) {
        const std::int64_t rest = n_ - d;
        if (rest >= 2) {
          const double rg = ryser_gen_bound(rest, n_, k_).value.ln();
          p.rest_ln[d] = std::min(p.rest_ln[d], rg);
        }
      }
    }
    return p;
  }

  ZeroOneMatrix masks_to_matrix(const std::vector<Mask>& rows) const {
    ZeroOneMatrix m(n_, n_);
    for (int r = 0; r < int(rows.size()); ++r) {
      for (int c = 0; c < n_; ++c) m.set(r, c, int((rows[r] >> (n_ - 1 - c)) & 1));
    }
    return m;
  }

  ZeroOneMatrix circulant_witness() const {
    ZeroOneMatrix m(n_, n_);
    for (int r = 0; r < n_; ++r) {
      for (int j = 0; j < k_; ++j) m.set(r, (r + j) % n_, 1);
    }
    return m;
  }

  struct WorkerState {
    std::vector<Mask> rows;
    std::vector<int> col_sums;
    std::int64_t best = 0;
    std::vector<Mask> best_rows;
  };

  bool col_feasible_s(WorkerState& st, Mask mask, int depth) const {
    for (int c = 0; c < n_; ++c) {
      const int bit = int((mask >> (n_ - 1 - c)) & 1);
      const int sum = st.col_sums[c] + bit;
      if (sum > k_) return false;
      // Each remaining row contributes at most one to this column.
      if (k_ - sum > n_ - depth - 1) return false;
    }
    return true;
  }

  void place(WorkerState& st, Mask mask) {
    st.rows.push_back(mask);
    if (cls_ == MatrixClass::S) {
      for (int c = 0; c < n_; ++c) st.col_sums[c] += int((mask >> (n_ - 1 - c)) & 1);
    }
  }

  void unplace(WorkerState& st) {
    const Mask mask = st.rows.back();
    st.rows.pop_back();
    if (cls_ == MatrixClass::S) {
      for (int c = 0; c < n_; ++c) st.col_sums[c] -= int((mask >> (n_ - 1 - c)) & 1);
    }
  }

  bool count_node() {
    if (aborted_.load(std::memory_order_relaxed)) return false;
    if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > opts_.budget) {
      aborted_.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }

  void record_leaf(WorkerState& st) {
    const std::int64_t d = abs_det_masks(st.rows, n_);
    if (d > st.best || (d == st.best && d > 0 && st.best_rows.empty())) {
      st.best = d;
      st.best_rows = st.rows;
    }
    std::int64_t cur = incumbent_.load(std::memory_order_relaxed);
    while (d > cur &&
           !incumbent_.compare_exchange_weak(cur, d, std::memory_order_relaxed)) {
    }
  }

  // Bound pruning: the subtree maximum is at most vol(prefix) times the
  // suffix bound; integers below incumbent+1 cannot improve.
  bool prune_subtree(const WorkerState& st, const Profile& prof, int depth) const {
    if (!opts_.prune) return false;
    const std::int64_t g = gram_det_prefix(st.rows, depth);
    if (g == 0) return true;  // all completions are singular
    const double bound_ln = 0.5 * std::log(double(g)) + prof.rest_ln[depth];
    const double target_ln =
        std::log(double(incumbent_.load(std::memory_order_relaxed)) + 1.0);
    return bound_ln + kLogSlack < target_ln;
  }

  void dfs(WorkerState& st, const Profile& prof, int depth, int min_index) {
    const auto& cands = cands_by_weight_[prof.sums[depth]];
    for (int idx = min_index; idx < int(cands.size()); ++idx) {
      const Mask mask = cands[idx];
      if (cls_ == MatrixClass::S && !col_feasible_s(st, mask, depth)) continue;
      if (!count_node()) return;
      place(st, mask);
      if (!prune_subtree(st, prof, depth + 1)) {
        if (depth + 1 == n_) {
          record_leaf(st);
        } else {
          dfs(st, prof, depth + 1, next_min_index(prof, depth + 1, idx));
        }
      }
      unplace(st);
      if (aborted_.load(std::memory_order_relaxed)) return;
    }
  }

  // Strictly decreasing masks within a run of equal row sums; a new sum
  // starts a fresh candidate range. Equal rows are never useful: they force
  // determinant zero, which the fallback witness already covers.
  int next_min_index(const Profile& prof, int depth, int prev_idx) const {
    if (depth > 0 && prof.sums[depth] == prof.sums[depth - 1]) return prev_idx + 1;
    return 0;
  }

  struct Task {
    int profile = 0;
    int second_index = -1;  // depth-1 candidate; -1 means "single-row root"
  };

  std::vector<Task> make_tasks() const {
    std::vector<Task> tasks;
    for (int pi = 0; pi < int(profiles_.size()); ++pi) {
      const Profile& prof = profiles_[pi];
      if (n_ == 1) {
        tasks.push_back({pi, -1});
        continue;
      }
      const int first_weight = prof.sums[0];
      const int start =
          prof.sums[1] == first_weight ? 1 : 0;  // first row is candidate 0
      const int count = int(cands_by_weight_[prof.sums[1]].size());
      for (int idx = start; idx < count; ++idx) tasks.push_back({pi, idx});
    }
    return tasks;
  }

  void run_task(WorkerState& st, const Task& task) {
    const Profile& prof = profiles_[task.profile];
    st.rows.clear();
    if (cls_ == MatrixClass::S) st.col_sums.assign(n_, 0);

    const Mask first = top_mask(n_, prof.sums[0]);
    if (cls_ == MatrixClass::S && !col_feasible_s(st, first, 0)) return;
    if (!count_node()) return;
    place(st, first);
    if (n_ == 1) {
      record_leaf(st);
      unplace(st);
      return;
    }
    if (!prune_subtree(st, prof, 1)) {
      const auto& cands = cands_by_weight_[prof.sums[1]];
      const Mask mask = cands[task.second_index];
      if (cls_ != MatrixClass::S || col_feasible_s(st, mask, 1)) {
        if (count_node()) {
          place(st, mask);
          if (!prune_subtree(st, prof, 2)) {
            if (n_ == 2) {
              record_leaf(st);
            } else {
              dfs(st, prof, 2, next_min_index(prof, 2, task.second_index));
            }
          }
          unplace(st);
        }
      }
    }
    unplace(st);
  }

  void run_value_phase() {
    const std::vector<Task> tasks = make_tasks();
    const int threads = std::max(1, std::min(opts_.threads, int(tasks.size())));
    std::atomic<std::size_t> next_task{0};
    std::vector<WorkerState> states(threads);
    auto work = [&](int wi) {
      WorkerState& st = states[wi];
      for (;;) {
        const std::size_t t = next_task.fetch_add(1);
        if (t >= tasks.size()) break;
        run_task(st, tasks[t]);
        if (aborted_.load(std::memory_order_relaxed)) break;
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int wi = 0; wi < threads; ++wi) pool.emplace_back(work, wi);
      for (auto& th : pool) th.join();
    }
    best_value_ = incumbent_.load();
    // Deterministic merge of the per-worker witnesses: highest value first,
    // then the canonically smallest row sequence.
    for (const WorkerState& st : states) {
      if (st.best != best_value_ || st.best_rows.empty()) continue;
      if (best_rows_.empty() || lex_less(st.best_rows, best_rows_)) {
        best_rows_ = st.best_rows;
      }
    }
  }

  static bool lex_less(const std::vector<Mask>& a, const std::vector<Mask>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        std::greater<Mask>());
  }

  // Serial pass that returns the first leaf in canonical order attaining the
  // known maximum; independent of phase-one scheduling.
  ZeroOneMatrix find_canonical_witness() {
    const double target_ln = std::log(double(best_value_));
    std::vector<Mask> found;
    WorkerState st;
    if (cls_ == MatrixClass::S) st.col_sums.assign(n_, 0);
    auto rec = [&](auto&& self, const Profile& prof, int depth, int min_index) -> bool {
      const auto& cands = cands_by_weight_[prof.sums[depth]];
      for (int idx = (depth == 0 ? 0 : min_index); idx < int(cands.size()); ++idx) {
        const Mask mask = depth == 0 ? top_mask(n_, prof.sums[0]) : cands[idx];
        if (cls_ == MatrixClass::S && !col_feasible_s(st, mask, depth)) {
          if (depth == 0) return false;
          continue;
        }
        place(st, mask);
        const std::int64_t g = gram_det_prefix(st.rows, depth + 1);
        bool ok = g != 0;
        if (ok) {
          const double bound_ln = 0.5 * std::log(double(g)) + prof.rest_ln[depth + 1];
          ok = bound_ln + kLogSlack >= target_ln;
        }
        if (ok) {
          if (depth + 1 == n_) {
            if (abs_det_masks(st.rows, n_) == best_value_) {
              found = st.rows;
              unplace(st);
              return true;
            }
          } else if (self(self, prof, depth + 1, next_min_index(prof, depth + 1, idx))) {
            unplace(st);
            return true;
          }
        }
        unplace(st);
        if (depth == 0) return false;  // the first row is forced
      }
      return false;
    };
    for (const Profile& prof : profiles_) {
      st.rows.clear();
      if (cls_ == MatrixClass::S) st.col_sums.assign(n_, 0);
      if (rec(rec, prof, 0, 0)) return masks_to_matrix(found);
    }
    // Unreachable for an exhaustive search with best_value_ > 0.
    return circulant_witness();
  }

  MatrixClass cls_;
  int n_;
  std::int64_t k_;
  SearchOptions opts_;
  std::vector<std::vector<Mask>> cands_by_weight_;
  std::vector<Profile> profiles_;

  std::atomic<std::int64_t> incumbent_{0};
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> aborted_{false};
  std::int64_t best_value_ = 0;
  std::vector<Mask> best_rows_;
};

}  // namespace

const char* to_string(MatrixClass cls) {
  switch (cls) {
    case MatrixClass::R: return "R";
    case MatrixClass::S: return "S";
    case MatrixClass::T: return "T";
  }
  return "?";
}

MatrixClass matrix_class_from_string(const std::string& s) {
  if (s == "R" || s == "r") return MatrixClass::R;
  if (s == "S" || s == "s") return MatrixClass::S;
  if (s == "T" || s == "t") return MatrixClass::T;
  throw std::invalid_argument("matrix class must be R, S or T");
}

SearchResult search_max_det(MatrixClass cls, std::int64_t n, std::int64_t k,
                            const SearchOptions& options) {
  if (n < 1 || k < 1 || k > n) {
    throw std::invalid_argument("search_max_det: need 1 <= k <= n");
  }
  const std::int64_t limit =
      cls == MatrixClass::T ? options.size_limit_t : options.size_limit_rs;
  if (n > std::min(limit, kHardSizeCap)) {
    throw std::invalid_argument("search_max_det: n exceeds the size limit");
  }
  Searcher searcher(cls, n, k, options);
  return searcher.run();
}

CounterexampleReport verify_counterexample() {
  CounterexampleReport report;
  const ZeroOneMatrix a = named_matrix(NamedMatrix::A10);
  const ZeroOneMatrix b = named_matrix(NamedMatrix::B10);

  const BigInt det_b = det_exact(b);
  report.conditions.push_back(
      {"det_b_equals_48", det_b == 48, "det(B) = " + det_b.str()});

  const ClassFlags b_flags = class_membership(b, 3);
  report.conditions.push_back({"b_in_s_10_3", b_flags.in_s,
                               b_flags.in_s ? "row and column sums all 3"
                                            : "line-sum check failed"});

  const BigInt det_a = det_exact(a);
  report.conditions.push_back(
      {"det_a_equals_15", det_a == 15, "det(A) = " + det_a.str()});

  const ClassFlags a_flags = class_membership(a, 3);
  report.conditions.push_back({"a_in_s_10_3", a_flags.in_s,
                               a_flags.in_s ? "row and column sums all 3"
                                            : "line-sum check failed"});

  bool off_ok = true;
  std::string seen;
  for (const IntMatrix& g : {gram(a), gram(transpose(a))}) {
    for (std::size_t i = 0; i < g.rows(); ++i) {
      for (std::size_t j = 0; j < g.cols(); ++j) {
        if (i == j) continue;
        const BigInt& x = g(i, j);
        if (x != 0 && x != 1) off_ok = false;
        // |x - 2/3| < 1  <=>  x in {0, 1} for integers.
      }
    }
  }
  seen = off_ok ? "all off-diagonals in {0,1}, so |x - 2/3| < 1"
                : "off-diagonal outside {0,1} found";
  report.conditions.push_back({"gram_offdiagonals_within_window", off_ok, seen});

  report.all_pass = true;
  for (const auto& c : report.conditions) report.all_pass = report.all_pass && c.pass;
  return report;
}

namespace {

// Constructed matrices in S(n,k) give certified lower bounds for all three
// classes at matching (n,k).
std::vector<BoundCheck> lower_bound_checks(std::int64_t n, std::int64_t k) {
  std::vector<BoundCheck> lowers;
  if (k == 2 && n % 3 == 0) {
    lowers.push_back({"triangle_blocks", false,
                      LogMagnitude::from_ln(double(n / 3) * std::log(2.0)), 0.0,
                      false});
  }
  if (k == 3 && n % 7 == 0) {
    lowers.push_back({"plane_order2_blocks", false,
                      LogMagnitude::from_ln(double(n / 7) * std::log(24.0)), 0.0,
                      false});
  }
  const std::int64_t p = k - 1;
  if (p >= 2 && n == p * p + p + 1) {
    bool prime = true;
    for (std::int64_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) prime = false;
    }
    if (prime) {
      lowers.push_back({"projective_plane", false,
                        LogMagnitude::from_ln(std::log(double(k)) +
                                              0.5 * double(n - 1) * std::log(double(p))),
                        0.0, false});
    }
  }
  if (n == 11 && k == 5) {
    lowers.push_back(
        {"biplane", false, LogMagnitude::from_value(1215.0), 0.0, false});
  }
  return lowers;
}

}  // namespace

CertifyReport certify_bounds(MatrixClass cls, std::int64_t n, std::int64_t k,
                             const SearchOptions& options) {
  CertifyReport report;
  report.search = search_max_det(cls, n, k, options);
  const LogMagnitude max_mag = LogMagnitude::from_integer(report.search.max_abs_det);

  std::vector<BoundCheck> checks;
  auto add_upper = [&](const std::string& name, const LogMagnitude& bound) {
    BoundCheck c{name, true, bound, 0.0, false};
    c.ok = max_mag.ln() <= bound.ln() + kLogSlack;
    c.log10_margin = bound.log10() - max_mag.log10();
    checks.push_back(c);
  };

  add_upper("hadamard", hadamard_bound(n, k));
  if (n >= 2) add_upper("ryser", ryser_bound(n, k).value);
  if (cls == MatrixClass::R || cls == MatrixClass::S) {
    add_upper("pair", pair_bound(n, n, k));
    for (std::int64_t q = 1; q <= k; ++q) {
      add_upper("q_row_q" + std::to_string(q), q_row_bound(n, n, k, q));
    }
    add_upper("schedule", schedule_bound(make_schedule(n, n, k)));
    if (k >= 2) add_upper("greedy_closed", greedy_closed_bound(n, n, k));
  } else {
    if (k >= 2) add_upper("pair", pow(c_pair(k), double(n)));
    if (k == 2) add_upper("t2", t2_bound(n));
  }

  for (BoundCheck lower : lower_bound_checks(n, k)) {
    lower.ok = lower.bound.ln() <= max_mag.ln() + kLogSlack;
    lower.log10_margin = max_mag.log10() - lower.bound.log10();
    checks.push_back(lower);
  }

  report.checks = std::move(checks);
  report.all_ok = true;
  for (const auto& c : report.checks) report.all_ok = report.all_ok && c.ok;
  return report;
}

}  // namespace maxdet

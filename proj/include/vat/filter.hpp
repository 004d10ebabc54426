#pragma once

// Variance-aware test-set filtering.
//
// For each segment, mu and sigma are the mean and population standard
// deviation (divisor k) of its row of metric scores across systems.  The
// filter drops the floor(lambda*N/100) segments with the LOWEST sigma —
// low cross-system variance means the metric barely separates systems on
// that segment — and keeps the rest.
//
// Determinism guarantees:
//   * row values are accumulated in sorted order, so column permutations
//     of the score matrix yield bit-identical statistics;
//   * sigma ties are broken toward the smaller segment id;
//   * increasing lambda yields nested subsets (one shared ranking, prefix
//     cuts), which sweep_lambda exploits.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "vat/corpus.hpp"
#include "vat/detail/strings.hpp"
#include "vat/error.hpp"

namespace vat {

struct InstanceStats {
  std::size_t id = 0;
  double mu = 0.0;
  double sigma = 0.0;
};

struct FilterConfig {
  double lambda_percent = 60.0;  // share of segments to drop, in [0, 100)
  int min_systems = 2;           // sigma over fewer systems is meaningless
};

inline void validate(const FilterConfig& cfg) {
  if (!(cfg.lambda_percent >= 0.0 && cfg.lambda_percent < 100.0))
    fail("filter: lambda must be in [0, 100)");
  if (cfg.min_systems < 2) fail("filter: min_systems must be at least 2");
}

// ---------------------------------------------------------------------------
// Per-segment statistics

inline std::vector<InstanceStats> instance_stats(const ScoreMatrix& matrix,
                                                 int min_systems = 2) {
  validate(matrix);
  if (static_cast<int>(matrix.n_systems()) < min_systems)
    fail("instance stats: need at least " + std::to_string(min_systems) +
         " systems, have " + std::to_string(matrix.n_systems()));

  std::vector<InstanceStats> stats;
  stats.reserve(matrix.n_segments());
  std::vector<double> row;
  for (std::size_t r = 0; r < matrix.n_segments(); ++r) {
    row = matrix.scores[r];
    // Sorting first makes the accumulation order (and thus the floating
    // point result) independent of system column order.
    std::sort(row.begin(), row.end());
    double mean = 0.0;
    double m2 = 0.0;
    std::size_t count = 0;
    for (double v : row) {
      ++count;
      const double delta = v - mean;
      mean += delta / static_cast<double>(count);
      m2 += delta * (v - mean);
    }
    stats.push_back({matrix.segment_ids[r], mean,
                     std::sqrt(m2 / static_cast<double>(count))});
  }
  return stats;
}

// ---------------------------------------------------------------------------
// Filtering

namespace detail {

// Number of segments kept after dropping floor(lambda*N/100).
inline std::size_t keep_count(std::size_t n, double lambda_percent) {
  const double integral = std::floor(lambda_percent);
  std::size_t dropped;
  if (lambda_percent == integral) {
    // Exact integer arithmetic for integral lambda (no floating rounding).
    dropped = n * static_cast<std::size_t>(integral) / 100;
  } else {
    dropped = static_cast<std::size_t>(
        std::floor(static_cast<long double>(lambda_percent) *
                   static_cast<long double>(n) / 100.0L));
  }
  return n - dropped;
}

// Segment ids ordered by descending sigma, ties toward the smaller id.
// Every lambda cut is a prefix of this one ranking.
inline std::vector<std::size_t> variance_ranking(std::span<const InstanceStats> stats) {
  std::vector<std::size_t> order(stats.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&stats](std::size_t a, std::size_t b) {
    if (stats[a].sigma != stats[b].sigma) return stats[a].sigma > stats[b].sigma;
    return stats[a].id < stats[b].id;
  });
  std::vector<std::size_t> ids(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) ids[i] = stats[order[i]].id;
  return ids;
}

inline SubsetIndex take_prefix(std::span<const std::size_t> ranking,
                               std::size_t parent_size, std::size_t count) {
  if (count == 0) fail("filter: produced an empty subset");
  SubsetIndex subset;
  subset.parent_size = parent_size;
  subset.kept.assign(ranking.begin(), ranking.begin() + count);
  std::sort(subset.kept.begin(), subset.kept.end());
  validate(subset);
  return subset;
}

inline std::size_t stats_parent_size(std::span<const InstanceStats> stats) {
  if (stats.empty()) fail("filter: no instance statistics");
  for (std::size_t i = 0; i < stats.size(); ++i)
    if (stats[i].id != i) fail("filter: instance stats ids must be 0..N-1");
  return stats.size();
}

}  // namespace detail

inline SubsetIndex filter_by_variance(std::span<const InstanceStats> stats,
                                      const FilterConfig& cfg = {}) {
  validate(cfg);
  const std::size_t n = detail::stats_parent_size(stats);
  const auto ranking = detail::variance_ranking(stats);
  return detail::take_prefix(ranking, n, detail::keep_count(n, cfg.lambda_percent));
}

inline std::map<double, SubsetIndex> sweep_lambda(std::span<const InstanceStats> stats,
                                                  std::span<const double> lambdas) {
  if (lambdas.empty()) fail("sweep: no lambda values");
  const std::size_t n = detail::stats_parent_size(stats);
  const auto ranking = detail::variance_ranking(stats);
  std::map<double, SubsetIndex> out;
  for (double lambda : lambdas) {
    FilterConfig cfg;
    cfg.lambda_percent = lambda;
    validate(cfg);
    out[lambda] = detail::take_prefix(ranking, n, detail::keep_count(n, lambda));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Holdout split (robustness protocol)
//
// Systems are shuffled deterministically (seeded, independent of input
// column order) and split in half; the filter is computed from half A only,
// so half B can serve as unseen systems for meta-evaluation.

struct HoldoutSplit {
  std::vector<std::string> half_a;  // filter-selection systems
  std::vector<std::string> half_b;  // held-out systems
  SubsetIndex subset;               // variance filter computed on half_a
};

namespace detail {

// Fixed Fisher-Yates with rejection sampling on top of mt19937_64: the
// engine is pinned by the standard, and avoiding std::shuffle /
// uniform_int_distribution keeps results identical across libraries.
class SplitMix {
 public:
  explicit SplitMix(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bounded(std::uint64_t n) {  // uniform in [0, n)
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[bounded(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace detail

inline HoldoutSplit holdout_split_filter(const ScoreMatrix& matrix, std::uint64_t seed,
                                         const FilterConfig& cfg = {}) {
  validate(matrix);
  validate(cfg);
  const std::size_t k = matrix.n_systems();
  if (k < 4) fail("holdout: need at least 4 systems");

  // Canonical start order so the split depends only on names and seed.
  std::vector<std::string> names = matrix.system_names;
  std::sort(names.begin(), names.end());
  detail::SplitMix rng(seed);
  rng.shuffle(names);

  HoldoutSplit split;
  const std::size_t half = (k + 1) / 2;
  split.half_a.assign(names.begin(), names.begin() + half);
  split.half_b.assign(names.begin() + half, names.end());

  // Column lookup for the selected half.
  std::vector<std::size_t> cols;
  for (const auto& name : split.half_a) {
    const auto it =
        std::find(matrix.system_names.begin(), matrix.system_names.end(), name);
    cols.push_back(static_cast<std::size_t>(it - matrix.system_names.begin()));
  }

  ScoreMatrix sub;
  sub.metric_name = matrix.metric_name;
  sub.system_names = split.half_a;
  sub.segment_ids = matrix.segment_ids;
  sub.scores.reserve(matrix.n_segments());
  for (const auto& row : matrix.scores) {
    std::vector<double> sel;
    sel.reserve(cols.size());
    for (std::size_t c : cols) sel.push_back(row[c]);
    sub.scores.push_back(std::move(sel));
  }
  split.subset = filter_by_variance(instance_stats(sub, cfg.min_systems), cfg);
  return split;
}

// ---------------------------------------------------------------------------
// Instance-stats TSV (audit output: "segment_id<TAB>mu<TAB>sigma")

inline void save_instance_stats(std::span<const InstanceStats> stats,
                                const std::filesystem::path& path,
                                std::span<const std::string> comments = {}) {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  out += "segment_id\tmu\tsigma\n";
  for (const auto& s : stats) {
    out += std::to_string(s.id);
    out += '\t';
    out += detail::format_fixed(s.mu, 6);
    out += '\t';
    out += detail::format_fixed(s.sigma, 6);
    out += '\n';
  }
  detail::write_file(path, out);
}

}  // namespace vat

#pragma once

// System-level meta-evaluation: does a metric rank systems like humans do?
//
// Segment scores are aggregated to one score per system (arithmetic mean of
// segment scores, or pooled corpus BLEU), inner-joined with human ratings by
// system name, and compared via Pearson r, Kendall tau-b and Spearman rho.
// The join is processed in sorted name order so results are independent of
// input column order.  Signs are preserved; absolute values are reported
// alongside for "is the metric informative at all" reading.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "vat/corpus.hpp"
#include "vat/filter.hpp"
#include "vat/metrics.hpp"
#include "vat/error.hpp"

namespace vat {

// ---------------------------------------------------------------------------
// Correlation coefficients

inline double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) fail("pearson: length mismatch");
  const std::size_t n = x.size();
  if (n < 2) fail("pearson: need at least 2 points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) fail("pearson: constant vector has no correlation");
  return sxy / (std::sqrt(sxx) * std::sqrt(syy));
}

// Kendall tau-b: (C - D) / sqrt((C + D + Tx)(C + D + Ty)) where Tx/Ty count
// pairs tied only in x / only in y.  Equivalently (n0-n1)(n0-n2) under the
// root with n1/n2 the tie-pair counts, which is what we compute.
inline double kendall_tau_b(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) fail("kendall: length mismatch");
  const std::size_t n = x.size();
  if (n < 2) fail("kendall: need at least 2 points");

  std::int64_t concordant = 0, discordant = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const int sx = x[i] < x[j] ? -1 : (x[i] > x[j] ? 1 : 0);
      const int sy = y[i] < y[j] ? -1 : (y[i] > y[j] ? 1 : 0);
      if (sx * sy > 0) ++concordant;
      if (sx * sy < 0) ++discordant;
    }
  }

  const auto tie_pairs = [n](std::span<const double> v) {
    std::vector<double> sorted(v.begin(), v.end());
    std::sort(sorted.begin(), sorted.end());
    std::int64_t pairs = 0;
    std::size_t run = 1;
    for (std::size_t i = 1; i <= n; ++i) {
      if (i < n && sorted[i] == sorted[i - 1]) {
        ++run;
      } else {
        pairs += static_cast<std::int64_t>(run) * static_cast<std::int64_t>(run - 1) / 2;
        run = 1;
      }
    }
    return pairs;
  };

  const std::int64_t n0 = static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n - 1) / 2;
  const std::int64_t n1 = tie_pairs(x);
  const std::int64_t n2 = tie_pairs(y);
  if (n0 == n1 || n0 == n2) fail("kendall: constant vector has no correlation");
  return static_cast<double>(concordant - discordant) /
         (std::sqrt(static_cast<double>(n0 - n1)) * std::sqrt(static_cast<double>(n0 - n2)));
}

namespace detail {

// Fractional ranks: ties get the average of the ranks they span (1-based).
inline std::vector<double> fractional_ranks(std::span<const double> v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&v](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
    const double rank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

}  // namespace detail

inline double spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) fail("spearman: length mismatch");
  const auto rx = detail::fractional_ranks(x);
  const auto ry = detail::fractional_ranks(y);
  return pearson(rx, ry);
}

// ---------------------------------------------------------------------------
// Aggregation to system level

struct SystemScores {
  std::string metric_name;
  std::string subset_tag;  // "original", "vat", or caller-chosen
  std::string mode;        // "mean" or "corpus_bleu"
  std::vector<std::string> system_names;
  std::vector<double> scores;
};

inline SystemScores aggregate_mean(const ScoreMatrix& matrix, const SubsetIndex& subset,
                                   std::string subset_tag) {
  validate(matrix);
  validate(subset);
  if (subset.parent_size != matrix.n_segments())
    fail("aggregate: subset parent_size does not match matrix");
  SystemScores out;
  out.metric_name = matrix.metric_name;
  out.subset_tag = std::move(subset_tag);
  out.mode = "mean";
  out.system_names = matrix.system_names;
  out.scores.assign(matrix.n_systems(), 0.0);
  for (std::size_t id : subset.kept)
    for (std::size_t s = 0; s < matrix.n_systems(); ++s)
      out.scores[s] += matrix.scores[id][s];
  for (double& v : out.scores) v /= static_cast<double>(subset.kept.size());
  return out;
}

inline SystemScores aggregate_corpus_bleu(const TestSet& testset,
                                          const HypothesisSet& hypotheses,
                                          const SubsetIndex& subset,
                                          std::string subset_tag, int max_order = 4) {
  validate(subset);
  if (subset.parent_size != testset.size())
    fail("aggregate: subset parent_size does not match test set");
  if (hypotheses.n_segments() != testset.size())
    fail("aggregate: hypothesis set does not match test set");
  SystemScores out;
  out.metric_name = "bleu";
  out.subset_tag = std::move(subset_tag);
  out.mode = "corpus_bleu";
  out.system_names = hypotheses.system_names;

  std::vector<TokenizedSegment> ref_tokens(subset.kept.size());
  for (std::size_t i = 0; i < subset.kept.size(); ++i)
    ref_tokens[i] = tokenize_intl(testset.references[subset.kept[i]]);

  const BleuConfig cfg{.max_order = max_order, .effective_order = false};
  for (std::size_t s = 0; s < hypotheses.n_systems(); ++s) {
    BleuStats pooled(cfg.max_order);
    for (std::size_t i = 0; i < subset.kept.size(); ++i)
      pooled += bleu_stats(tokenize_intl(hypotheses.hypotheses[s][subset.kept[i]]),
                           ref_tokens[i], cfg);
    out.scores.push_back(bleu_from_stats(pooled, cfg));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reports

struct MetaEvalReport {
  std::string metric;
  std::string subset_tag;
  std::string mode;
  std::size_t n_systems = 0;
  double pearson_r = 0.0;
  double kendall_tau_b = 0.0;
  double spearman_rho = 0.0;
  std::vector<std::string> dropped_systems;  // present in only one input
};

// Inner join on system name (sorted), then the three correlations.
inline MetaEvalReport meta_eval(const SystemScores& metric_scores,
                                const HumanScores& human) {
  std::vector<std::string> joint;
  for (const auto& name : metric_scores.system_names)
    if (human.find(name) != nullptr) joint.push_back(name);
  std::sort(joint.begin(), joint.end());

  MetaEvalReport report;
  report.metric = metric_scores.metric_name;
  report.subset_tag = metric_scores.subset_tag;
  report.mode = metric_scores.mode;
  for (const auto& name : metric_scores.system_names)
    if (human.find(name) == nullptr) report.dropped_systems.push_back(name);
  for (const auto& name : human.system_names)
    if (std::find(metric_scores.system_names.begin(), metric_scores.system_names.end(),
                  name) == metric_scores.system_names.end())
      report.dropped_systems.push_back(name);
  std::sort(report.dropped_systems.begin(), report.dropped_systems.end());

  if (joint.size() < 2)
    fail("meta-eval: need at least 2 systems shared with human ratings, have " +
         std::to_string(joint.size()));

  std::vector<double> xs, ys;
  for (const auto& name : joint) {
    const auto it = std::find(metric_scores.system_names.begin(),
                              metric_scores.system_names.end(), name);
    xs.push_back(
        metric_scores.scores[static_cast<std::size_t>(it - metric_scores.system_names.begin())]);
    ys.push_back(*human.find(name));
  }
  report.n_systems = joint.size();
  report.pearson_r = pearson(xs, ys);
  report.kendall_tau_b = kendall_tau_b(xs, ys);
  report.spearman_rho = spearman(xs, ys);
  return report;
}

struct ComparisonResult {
  MetaEvalReport original;
  MetaEvalReport filtered;
};

// Original test set vs variance-filtered subset, mean aggregation.
inline ComparisonResult compare_original_vs_vat(const ScoreMatrix& matrix,
                                                const SubsetIndex& subset,
                                                const HumanScores& human) {
  ComparisonResult result;
  result.original =
      meta_eval(aggregate_mean(matrix, full_subset(matrix.n_segments()), "original"), human);
  result.filtered = meta_eval(aggregate_mean(matrix, subset, "vat"), human);
  return result;
}

// Holdout robustness: filter chosen on half A, correlations measured on the
// held-out half B only.  Human ratings must cover every held-out system.
struct RobustnessResult {
  HoldoutSplit split;
  MetaEvalReport original;
  MetaEvalReport filtered;
};

inline RobustnessResult robustness_report(const ScoreMatrix& matrix,
                                          const HumanScores& human, std::uint64_t seed,
                                          const FilterConfig& cfg = {}) {
  RobustnessResult result;
  result.split = holdout_split_filter(matrix, seed, cfg);

  for (const auto& name : result.split.half_b)
    if (human.find(name) == nullptr)
      fail("robustness: no human rating for held-out system '" + name + "'");

  std::vector<std::size_t> cols;
  for (const auto& name : result.split.half_b) {
    const auto it =
        std::find(matrix.system_names.begin(), matrix.system_names.end(), name);
    cols.push_back(static_cast<std::size_t>(it - matrix.system_names.begin()));
  }
  ScoreMatrix held;
  held.metric_name = matrix.metric_name;
  held.system_names = result.split.half_b;
  held.segment_ids = matrix.segment_ids;
  held.scores.reserve(matrix.n_segments());
  for (const auto& row : matrix.scores) {
    std::vector<double> sel;
    sel.reserve(cols.size());
    for (std::size_t c : cols) sel.push_back(row[c]);
    held.scores.push_back(std::move(sel));
  }

  result.original =
      meta_eval(aggregate_mean(held, full_subset(held.n_segments()), "original"), human);
  result.filtered = meta_eval(aggregate_mean(held, result.split.subset, "vat-half"), human);
  return result;
}

// ---------------------------------------------------------------------------
// Report serialization: "key: value" lines, one block per report, blank line
// between blocks, '#' comments at the top.

inline void append_report(const MetaEvalReport& r, std::string& out) {
  if (!r.dropped_systems.empty()) {
    out += "# dropped (no counterpart):";
    for (const auto& name : r.dropped_systems) out += " " + name;
    out += '\n';
  }
  out += "metric: " + r.metric + "\n";
  out += "subset_tag: " + r.subset_tag + "\n";
  out += "mode: " + r.mode + "\n";
  out += "n_systems: " + std::to_string(r.n_systems) + "\n";
  out += "pearson: " + detail::format_fixed(r.pearson_r, 6) + "\n";
  out += "kendall_tau_b: " + detail::format_fixed(r.kendall_tau_b, 6) + "\n";
  out += "spearman: " + detail::format_fixed(r.spearman_rho, 6) + "\n";
  out += "abs_pearson: " + detail::format_fixed(std::fabs(r.pearson_r), 6) + "\n";
  out += "abs_kendall_tau_b: " + detail::format_fixed(std::fabs(r.kendall_tau_b), 6) + "\n";
  out += "abs_spearman: " + detail::format_fixed(std::fabs(r.spearman_rho), 6) + "\n";
}

inline void write_meta_eval_reports(std::span<const MetaEvalReport> reports,
                                    const std::filesystem::path& path,
                                    std::span<const std::string> comments = {}) {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i > 0) out += '\n';
    append_report(reports[i], out);
  }
  detail::write_file(path, out);
}

}  // namespace vat

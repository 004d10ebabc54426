#pragma once

// What does variance filtering remove?  These reports compare how the
// preserved subset is constituted against the original test set along
// several axes:
//   * sentence length (rank tertiles: Short / Medium / Long)
//   * word frequency (Rare / Middle / Frequent by corpus-frequency position)
//   * part-of-speech tags (from an aligned token/TAG corpus)
//   * edit distance to paraphrased references (are kept segments the ones
//     whose references were easy or hard to paraphrase?)
//   * per-segment mean-score histograms (preserved vs filtered-out)
// Fractions always sum to 1 per view, and a full subset produces all-zero
// deltas — both are invariants the tests pin down.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vat/corpus.hpp"
#include "vat/detail/strings.hpp"
#include "vat/detail/unicode_categories.hpp"
#include "vat/detail/utf8.hpp"
#include "vat/error.hpp"
#include "vat/filter.hpp"

namespace vat {

namespace detail {

// Plain whitespace tokenization (no rewrite rules) for the analysis views.
inline std::vector<std::string> whitespace_tokens(std::string_view segment) {
  std::vector<std::string> tokens;
  std::u32string tok;
  const std::u32string cps = decode_utf8(segment);
  for (char32_t cp : cps) {
    if (is_whitespace(cp)) {
      if (!tok.empty()) {
        tokens.push_back(encode_utf8(tok));
        tok.clear();
      }
    } else {
      tok += cp;
    }
  }
  if (!tok.empty()) tokens.push_back(encode_utf8(tok));
  return tokens;
}

inline std::vector<bool> kept_mask(const SubsetIndex& subset) {
  std::vector<bool> mask(subset.parent_size, false);
  for (std::size_t id : subset.kept) mask[id] = true;
  return mask;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Constitution reports

struct ConstitutionReport {
  std::string scheme;  // "length", "frequency" or "pos"
  std::vector<std::string> categories;
  std::vector<double> original_fraction;   // over the full test set
  std::vector<double> preserved_fraction;  // over the kept subset
  std::vector<double> delta;               // preserved - original
};

namespace detail {

inline ConstitutionReport constitution_from_counts(
    std::string scheme, std::vector<std::string> categories,
    std::span<const double> original_counts, std::span<const double> preserved_counts) {
  const double original_total =
      std::accumulate(original_counts.begin(), original_counts.end(), 0.0);
  const double preserved_total =
      std::accumulate(preserved_counts.begin(), preserved_counts.end(), 0.0);
  if (original_total == 0.0) fail(scheme + " constitution: empty test set view");
  if (preserved_total == 0.0) fail(scheme + " constitution: empty subset view");

  ConstitutionReport report;
  report.scheme = std::move(scheme);
  report.categories = std::move(categories);
  for (std::size_t c = 0; c < report.categories.size(); ++c) {
    report.original_fraction.push_back(original_counts[c] / original_total);
    report.preserved_fraction.push_back(preserved_counts[c] / preserved_total);
    report.delta.push_back(report.preserved_fraction[c] - report.original_fraction[c]);
  }
  return report;
}

}  // namespace detail

// Length tertiles by rank: segments sorted by (token count, id); the first
// floor(N/3) ranks are Short, the next block Medium, the rest Long.
inline ConstitutionReport length_constitution(const TestSet& testset,
                                              const SubsetIndex& subset) {
  validate(subset);
  if (subset.parent_size != testset.size())
    fail("length constitution: subset does not match test set");
  const std::size_t n = testset.size();

  std::vector<std::size_t> lengths(n);
  for (std::size_t i = 0; i < n; ++i)
    lengths[i] = detail::whitespace_tokens(testset.references[i]).size();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&lengths](std::size_t a, std::size_t b) {
    if (lengths[a] != lengths[b]) return lengths[a] < lengths[b];
    return a < b;
  });

  std::vector<int> category(n);
  for (std::size_t rank = 0; rank < n; ++rank) {
    const int cat = rank < n / 3 ? 0 : (rank < 2 * n / 3 ? 1 : 2);
    category[order[rank]] = cat;
  }

  std::vector<double> original(3, 0.0), preserved(3, 0.0);
  const auto mask = detail::kept_mask(subset);
  for (std::size_t i = 0; i < n; ++i) {
    original[static_cast<std::size_t>(category[i])] += 1.0;
    if (mask[i]) preserved[static_cast<std::size_t>(category[i])] += 1.0;
  }
  return detail::constitution_from_counts("length", {"Short", "Medium", "Long"},
                                          original, preserved);
}

// ---------------------------------------------------------------------------
// Word-frequency constitution

struct FrequencyTable {
  std::unordered_map<std::string, std::uint64_t> counts;
};

// TSV "word<TAB>count"; '#' comments and blank lines are skipped.
inline FrequencyTable load_frequency_table(const std::filesystem::path& path) {
  const std::string content = detail::read_file(path);
  const auto lines = detail::split_lines(content, path.string());
  FrequencyTable table;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    std::string_view line = lines[li];
    if (line.empty() || detail::is_comment_line(line)) continue;
    const std::string origin = path.string() + ":" + std::to_string(li + 1);
    const auto cells = detail::split(line, '\t');
    if (cells.size() != 2) fail(origin + ": expected 'word<TAB>count'");
    if (cells[0].empty()) fail(origin + ": empty word");
    const std::uint64_t count =
        static_cast<std::uint64_t>(detail::parse_index(cells[1], origin));
    if (!table.counts.emplace(std::string(cells[0]), count).second)
      fail(origin + ": duplicate word '" + std::string(cells[0]) + "'");
  }
  if (table.counts.empty()) fail(path.string() + ": empty frequency table");
  return table;
}

// Frequency categories: vocabulary sorted by (count, word) ascending; a word
// at 0-based position p of V is Rare when 100*(p+1) <= 20*V, Middle when
// 100*(p+1) <= 60*V, Frequent otherwise.  Words missing from the table are
// treated as Rare.  Fractions weigh token occurrences, not types.
inline ConstitutionReport frequency_constitution(const TestSet& testset,
                                                 const SubsetIndex& subset,
                                                 const FrequencyTable& table) {
  validate(subset);
  if (subset.parent_size != testset.size())
    fail("frequency constitution: subset does not match test set");

  std::vector<std::pair<std::uint64_t, std::string_view>> vocab;
  vocab.reserve(table.counts.size());
  for (const auto& [word, count] : table.counts) vocab.emplace_back(count, word);
  std::sort(vocab.begin(), vocab.end());

  std::unordered_map<std::string_view, int> category;
  const std::uint64_t v = vocab.size();
  for (std::uint64_t p = 0; p < v; ++p) {
    const std::uint64_t scaled = 100 * (p + 1);
    category[vocab[p].second] = scaled <= 20 * v ? 0 : (scaled <= 60 * v ? 1 : 2);
  }

  std::vector<double> original(3, 0.0), preserved(3, 0.0);
  const auto mask = detail::kept_mask(subset);
  for (std::size_t i = 0; i < testset.size(); ++i) {
    for (const auto& token : detail::whitespace_tokens(testset.references[i])) {
      const auto it = category.find(token);
      const auto cat = static_cast<std::size_t>(it == category.end() ? 0 : it->second);
      original[cat] += 1.0;
      if (mask[i]) preserved[cat] += 1.0;
    }
  }
  return detail::constitution_from_counts("frequency", {"Rare", "Middle", "Frequent"},
                                          original, preserved);
}

// ---------------------------------------------------------------------------
// Part-of-speech constitution

// All tags are reported, ordered by |delta| descending (ties: tag ascending).
inline ConstitutionReport pos_constitution(const TaggedCorpus& corpus,
                                           const SubsetIndex& subset) {
  validate(subset);
  if (subset.parent_size != corpus.size())
    fail("pos constitution: tagged corpus does not match subset parent size");

  std::vector<std::string> tags;
  std::unordered_map<std::string, std::size_t> tag_index;
  std::vector<double> original, preserved;
  const auto mask = detail::kept_mask(subset);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (const auto& [token, tag] : corpus.sentences[i]) {
      auto [it, inserted] = tag_index.emplace(tag, tags.size());
      if (inserted) {
        tags.push_back(tag);
        original.push_back(0.0);
        preserved.push_back(0.0);
      }
      original[it->second] += 1.0;
      if (mask[i]) preserved[it->second] += 1.0;
    }
  }
  if (tags.empty()) fail("pos constitution: tagged corpus has no tokens");

  // Deterministic accumulation order first (sorted tags), then |delta| order.
  std::vector<std::size_t> by_tag(tags.size());
  std::iota(by_tag.begin(), by_tag.end(), std::size_t{0});
  std::sort(by_tag.begin(), by_tag.end(),
            [&tags](std::size_t a, std::size_t b) { return tags[a] < tags[b]; });
  std::vector<std::string> sorted_tags;
  std::vector<double> sorted_original, sorted_preserved;
  for (std::size_t idx : by_tag) {
    sorted_tags.push_back(tags[idx]);
    sorted_original.push_back(original[idx]);
    sorted_preserved.push_back(preserved[idx]);
  }
  auto report = detail::constitution_from_counts("pos", std::move(sorted_tags),
                                                 sorted_original, sorted_preserved);

  std::vector<std::size_t> by_delta(report.categories.size());
  std::iota(by_delta.begin(), by_delta.end(), std::size_t{0});
  std::sort(by_delta.begin(), by_delta.end(), [&report](std::size_t a, std::size_t b) {
    const double da = std::fabs(report.delta[a]);
    const double db = std::fabs(report.delta[b]);
    if (da != db) return da > db;
    return report.categories[a] < report.categories[b];
  });
  ConstitutionReport ordered;
  ordered.scheme = report.scheme;
  for (std::size_t idx : by_delta) {
    ordered.categories.push_back(report.categories[idx]);
    ordered.original_fraction.push_back(report.original_fraction[idx]);
    ordered.preserved_fraction.push_back(report.preserved_fraction[idx]);
    ordered.delta.push_back(report.delta[idx]);
  }
  return ordered;
}

// ---------------------------------------------------------------------------
// Edit distance to paraphrased references

enum class EditUnit { kToken, kChar };

namespace detail {

template <class T>
std::size_t levenshtein(std::span<const T> a, std::span<const T> b) {
  if (a.size() < b.size()) return levenshtein(b, a);  // keep the row short
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t subst = diag + (a[i - 1] == b[j - 1] ? 0 : 1);
      diag = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, subst});
    }
  }
  return row[b.size()];
}

inline std::size_t edit_distance(std::string_view a, std::string_view b, EditUnit unit) {
  if (unit == EditUnit::kToken) {
    const auto ta = whitespace_tokens(a);
    const auto tb = whitespace_tokens(b);
    return levenshtein(std::span<const std::string>(ta), std::span<const std::string>(tb));
  }
  const std::u32string ca = decode_utf8(a);
  const std::u32string cb = decode_utf8(b);
  return levenshtein(std::span<const char32_t>(ca.data(), ca.size()),
                     std::span<const char32_t>(cb.data(), cb.size()));
}

}  // namespace detail

struct EditDistanceReport {
  std::string unit;  // "token" or "char"
  std::size_t n_all = 0, n_preserved = 0, n_filtered_out = 0;
  double mean_all = 0.0, mean_preserved = 0.0, mean_filtered_out = 0.0;
};

inline EditDistanceReport edit_distance_report(std::span<const std::string> references,
                                               std::span<const std::string> paraphrased,
                                               const SubsetIndex& subset,
                                               EditUnit unit = EditUnit::kToken) {
  validate(subset);
  if (references.size() != subset.parent_size)
    fail("edit distance: reference count does not match subset parent size");
  if (paraphrased.size() != references.size())
    fail("edit distance: paraphrased count does not match references");

  EditDistanceReport report;
  report.unit = unit == EditUnit::kToken ? "token" : "char";
  const auto mask = detail::kept_mask(subset);
  double sum_all = 0.0, sum_kept = 0.0, sum_dropped = 0.0;
  for (std::size_t i = 0; i < references.size(); ++i) {
    const auto d =
        static_cast<double>(detail::edit_distance(references[i], paraphrased[i], unit));
    sum_all += d;
    ++report.n_all;
    if (mask[i]) {
      sum_kept += d;
      ++report.n_preserved;
    } else {
      sum_dropped += d;
      ++report.n_filtered_out;
    }
  }
  report.mean_all = sum_all / static_cast<double>(report.n_all);
  report.mean_preserved =
      report.n_preserved ? sum_kept / static_cast<double>(report.n_preserved) : 0.0;
  report.mean_filtered_out =
      report.n_filtered_out ? sum_dropped / static_cast<double>(report.n_filtered_out) : 0.0;
  return report;
}

// ---------------------------------------------------------------------------
// Score histogram (per-segment mean score, preserved vs filtered out)

struct Histogram {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<std::size_t> preserved;     // one count per bin
  std::vector<std::size_t> filtered_out;  // one count per bin
};

inline Histogram score_histogram(std::span<const InstanceStats> stats,
                                 const SubsetIndex& subset, std::size_t bins) {
  validate(subset);
  if (bins < 2) fail("histogram: need at least 2 bins");
  if (stats.size() != subset.parent_size)
    fail("histogram: stats count does not match subset parent size");
  if (subset.kept.size() == subset.parent_size)
    fail("histogram: filtered-out group is empty");

  Histogram h;
  h.lo = stats[0].mu;
  h.hi = stats[0].mu;
  for (const auto& s : stats) {
    h.lo = std::min(h.lo, s.mu);
    h.hi = std::max(h.hi, s.mu);
  }
  h.preserved.assign(bins, 0);
  h.filtered_out.assign(bins, 0);

  const double width = (h.hi - h.lo) / static_cast<double>(bins);
  const auto mask = detail::kept_mask(subset);
  for (std::size_t i = 0; i < stats.size(); ++i) {
    std::size_t bin = 0;
    if (width > 0.0) {
      bin = static_cast<std::size_t>((stats[i].mu - h.lo) / width);
      if (bin >= bins) bin = bins - 1;  // v == hi lands in the top bin
    }
    if (mask[stats[i].id]) {
      ++h.preserved[bin];
    } else {
      ++h.filtered_out[bin];
    }
  }
  return h;
}

// ---------------------------------------------------------------------------
// Report serialization

inline void write_constitution_report(const ConstitutionReport& report,
                                      const std::filesystem::path& path,
                                      std::span<const std::string> comments = {}) {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  out += "scheme: " + report.scheme + "\n";
  out += "categories: " + std::to_string(report.categories.size()) + "\n";
  for (std::size_t c = 0; c < report.categories.size(); ++c) {
    out += "\ncategory: " + report.categories[c] + "\n";
    out += "original_fraction: " + detail::format_fixed(report.original_fraction[c], 6) + "\n";
    out += "preserved_fraction: " + detail::format_fixed(report.preserved_fraction[c], 6) + "\n";
    out += "delta: " + detail::format_fixed(report.delta[c], 6) + "\n";
  }
  detail::write_file(path, out);
}

inline void write_edit_distance_report(const EditDistanceReport& report,
                                       const std::filesystem::path& path,
                                       std::span<const std::string> comments = {}) {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  out += "unit: " + report.unit + "\n";
  out += "n_all: " + std::to_string(report.n_all) + "\n";
  out += "mean_all: " + detail::format_fixed(report.mean_all, 6) + "\n";
  out += "n_preserved: " + std::to_string(report.n_preserved) + "\n";
  out += "mean_preserved: " + detail::format_fixed(report.mean_preserved, 6) + "\n";
  out += "n_filtered_out: " + std::to_string(report.n_filtered_out) + "\n";
  out += "mean_filtered_out: " + detail::format_fixed(report.mean_filtered_out, 6) + "\n";
  detail::write_file(path, out);
}

inline void write_histogram(const Histogram& histogram,
                            const std::filesystem::path& path,
                            std::span<const std::string> comments = {}) {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  out += "bins: " + std::to_string(histogram.preserved.size()) + "\n";
  out += "lo: " + detail::format_fixed(histogram.lo, 6) + "\n";
  out += "hi: " + detail::format_fixed(histogram.hi, 6) + "\n";
  out += "# bin\tpreserved\tfiltered_out\n";
  for (std::size_t b = 0; b < histogram.preserved.size(); ++b)
    out += std::to_string(b) + "\t" + std::to_string(histogram.preserved[b]) + "\t" +
           std::to_string(histogram.filtered_out[b]) + "\n";
  detail::write_file(path, out);
}

}  // namespace vat

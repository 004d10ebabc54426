#pragma once

// International tokenization and BLEU.
//
// tokenize_intl applies, in order, the three classic mteval-v14 rewrite
// rules and then splits on Unicode whitespace:
//   1. non-number followed by punctuation   -> "x p "   (pad after pair)
//   2. punctuation followed by non-number   -> " p x"   (pad before pair)
//   3. any symbol                           -> " s "
// Each rule is one left-to-right pass over code points; two-character
// matches consume both characters, exactly like non-overlapping regex
// substitution.  Category data lives in detail/unicode_categories.hpp.
//
// BLEU uses exponential smoothing for zero n-gram matches (the smoothing
// denominator doubles each time) and the standard brevity penalty
// exp(1 - ref_len/hyp_len) capped at 1.  Sentence scoring uses effective
// order: only n-gram orders with at least one hypothesis n-gram count.
// Scores are in [0, 1].  Case is preserved throughout.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "vat/corpus.hpp"
#include "vat/detail/unicode_categories.hpp"
#include "vat/detail/utf8.hpp"
#include "vat/error.hpp"

namespace vat {

// ---------------------------------------------------------------------------
// Tokenizer

using TokenizedSegment = std::vector<std::string>;

inline TokenizedSegment tokenize_intl(std::string_view segment) {
  using detail::CharClass;
  using detail::char_class;

  std::u32string cur = detail::decode_utf8(segment);
  std::u32string next;

  // Rule 1: (non-number)(punctuation) -> "\1 \2 "
  next.reserve(cur.size() * 2);
  for (std::size_t i = 0; i < cur.size();) {
    if (i + 1 < cur.size() && char_class(cur[i]) != CharClass::kNumber &&
        char_class(cur[i + 1]) == CharClass::kPunctuation) {
      next += cur[i];
      next += U' ';
      next += cur[i + 1];
      next += U' ';
      i += 2;
    } else {
      next += cur[i++];
    }
  }
  cur.swap(next);
  next.clear();

  // Rule 2: (punctuation)(non-number) -> " \1 \2"
  for (std::size_t i = 0; i < cur.size();) {
    if (i + 1 < cur.size() && char_class(cur[i]) == CharClass::kPunctuation &&
        char_class(cur[i + 1]) != CharClass::kNumber) {
      next += U' ';
      next += cur[i];
      next += U' ';
      next += cur[i + 1];
      i += 2;
    } else {
      next += cur[i++];
    }
  }
  cur.swap(next);
  next.clear();

  // Rule 3: (symbol) -> " \1 "
  for (char32_t cp : cur) {
    if (char_class(cp) == CharClass::kSymbol) {
      next += U' ';
      next += cp;
      next += U' ';
    } else {
      next += cp;
    }
  }

  TokenizedSegment tokens;
  std::u32string tok;
  for (char32_t cp : next) {
    if (char_class(cp) == CharClass::kWhitespace) {
      if (!tok.empty()) {
        tokens.push_back(detail::encode_utf8(tok));
        tok.clear();
      }
    } else {
      tok += cp;
    }
  }
  if (!tok.empty()) tokens.push_back(detail::encode_utf8(tok));
  return tokens;
}

// ---------------------------------------------------------------------------
// BLEU

struct BleuConfig {
  int max_order = 4;
  bool effective_order = true;  // sentence scoring; corpus scoring turns it off
};

inline void validate(const BleuConfig& cfg) {
  if (cfg.max_order < 1 || cfg.max_order > 9) fail("bleu: max_order must be in [1, 9]");
}

// Sufficient statistics; additive across segments for corpus scoring.
struct BleuStats {
  std::vector<std::int64_t> matches;  // per order 1..max_order
  std::vector<std::int64_t> totals;
  std::int64_t hyp_len = 0;
  std::int64_t ref_len = 0;

  explicit BleuStats(int max_order = 4)
      : matches(static_cast<std::size_t>(max_order), 0),
        totals(static_cast<std::size_t>(max_order), 0) {}

  BleuStats& operator+=(const BleuStats& other) {
    if (matches.size() != other.matches.size()) fail("bleu: mixing different max_order stats");
    for (std::size_t n = 0; n < matches.size(); ++n) {
      matches[n] += other.matches[n];
      totals[n] += other.totals[n];
    }
    hyp_len += other.hyp_len;
    ref_len += other.ref_len;
    return *this;
  }
};

namespace detail {

// N-grams are joined with U+001F, a control character that the tokenizer's
// whitespace split guarantees never appears inside a token.
inline std::unordered_map<std::string, std::int64_t> ngram_counts(
    const TokenizedSegment& tokens, std::size_t n) {
  std::unordered_map<std::string, std::int64_t> counts;
  if (tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (std::size_t k = 1; k < n; ++k) {
      key += '\x1F';
      key += tokens[i + k];
    }
    ++counts[key];
  }
  return counts;
}

}  // namespace detail

inline BleuStats bleu_stats(const TokenizedSegment& hyp, const TokenizedSegment& ref,
                            const BleuConfig& cfg = {}) {
  validate(cfg);
  BleuStats stats(cfg.max_order);
  stats.hyp_len = static_cast<std::int64_t>(hyp.size());
  stats.ref_len = static_cast<std::int64_t>(ref.size());
  for (int n = 1; n <= cfg.max_order; ++n) {
    const std::size_t idx = static_cast<std::size_t>(n - 1);
    if (hyp.size() < static_cast<std::size_t>(n)) break;
    stats.totals[idx] = static_cast<std::int64_t>(hyp.size() - n + 1);
    const auto ref_counts = detail::ngram_counts(ref, static_cast<std::size_t>(n));
    if (ref_counts.empty()) continue;
    for (const auto& [gram, count] : detail::ngram_counts(hyp, static_cast<std::size_t>(n))) {
      const auto it = ref_counts.find(gram);
      if (it != ref_counts.end()) stats.matches[idx] += std::min(count, it->second);
    }
  }
  return stats;
}

inline double bleu_from_stats(const BleuStats& stats, const BleuConfig& cfg = {}) {
  validate(cfg);
  if (static_cast<int>(stats.totals.size()) < cfg.max_order)
    fail("bleu: stats carry fewer orders than requested");
  if (stats.hyp_len == 0) return 0.0;
  if (stats.ref_len == 0) return 0.0;

  double smooth = 1.0;
  double log_sum = 0.0;
  int n_orders = 0;
  for (int n = 1; n <= cfg.max_order; ++n) {
    const std::size_t idx = static_cast<std::size_t>(n - 1);
    if (cfg.effective_order && stats.totals[idx] == 0) continue;
    if (stats.totals[idx] == 0) return 0.0;  // fixed-order mode: missing order zeroes the score
    double precision;
    if (stats.matches[idx] == 0) {
      smooth *= 2.0;
      precision = 1.0 / (smooth * static_cast<double>(stats.totals[idx]));
    } else {
      precision = static_cast<double>(stats.matches[idx]) /
                  static_cast<double>(stats.totals[idx]);
    }
    log_sum += std::log(precision);
    ++n_orders;
  }
  if (n_orders == 0) return 0.0;

  const double brevity =
      stats.hyp_len < stats.ref_len
          ? std::exp(1.0 - static_cast<double>(stats.ref_len) /
                               static_cast<double>(stats.hyp_len))
          : 1.0;
  return brevity * std::exp(log_sum / n_orders);
}

inline double sentence_bleu(std::string_view hyp, std::string_view ref,
                            const BleuConfig& cfg = {}) {
  return bleu_from_stats(bleu_stats(tokenize_intl(hyp), tokenize_intl(ref), cfg), cfg);
}

inline double corpus_bleu(std::span<const std::string> hyps,
                          std::span<const std::string> refs, int max_order = 4) {
  if (hyps.size() != refs.size()) fail("bleu: hypothesis/reference count mismatch");
  if (hyps.empty()) fail("bleu: empty corpus");
  const BleuConfig cfg{.max_order = max_order, .effective_order = false};
  BleuStats pooled(cfg.max_order);
  for (std::size_t i = 0; i < hyps.size(); ++i)
    pooled += bleu_stats(tokenize_intl(hyps[i]), tokenize_intl(refs[i]), cfg);
  return bleu_from_stats(pooled, cfg);
}

// ---------------------------------------------------------------------------
// Segment-level score matrix

inline ScoreMatrix score_matrix_bleu(const TestSet& testset,
                                     const HypothesisSet& hypotheses,
                                     const BleuConfig& cfg = {}) {
  validate(cfg);
  if (hypotheses.n_systems() == 0) fail("score matrix: no systems");
  if (hypotheses.n_segments() != testset.size())
    fail("score matrix: hypothesis set does not match test set size");

  std::vector<TokenizedSegment> ref_tokens;
  ref_tokens.reserve(testset.size());
  for (const auto& ref : testset.references) ref_tokens.push_back(tokenize_intl(ref));

  ScoreMatrix m;
  m.metric_name = "bleu";
  m.system_names = hypotheses.system_names;
  m.segment_ids = testset.ids;
  m.scores.assign(testset.size(), std::vector<double>(hypotheses.n_systems(), 0.0));
  for (std::size_t s = 0; s < hypotheses.n_systems(); ++s) {
    for (std::size_t i = 0; i < testset.size(); ++i) {
      const auto hyp_tokens = tokenize_intl(hypotheses.hypotheses[s][i]);
      m.scores[i][s] = bleu_from_stats(bleu_stats(hyp_tokens, ref_tokens[i], cfg), cfg);
    }
  }
  validate(m);
  return m;
}

}  // namespace vat

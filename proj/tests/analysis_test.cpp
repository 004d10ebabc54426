#include "vat/analysis.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "testutil.hpp"
#include "vat/corpus.hpp"
#include "vat/filter.hpp"

namespace {

vat::TestSet testset_with_lengths(const std::vector<std::size_t>& lengths) {
  vat::TestSet ts;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    ts.ids.push_back(i);
    std::string seg;
    for (std::size_t t = 0; t < lengths[i]; ++t) {
      if (t) seg += ' ';
      seg += "w" + std::to_string(t);
    }
    ts.references.push_back(seg);
  }
  return ts;
}

vat::SubsetIndex subset_of(std::size_t parent, std::vector<std::size_t> kept) {
  vat::SubsetIndex s;
  s.parent_size = parent;
  s.kept = std::move(kept);
  return s;
}

double fraction_of(const vat::ConstitutionReport& r, const std::string& category,
                   bool preserved) {
  for (std::size_t i = 0; i < r.categories.size(); ++i)
    if (r.categories[i] == category)
      return preserved ? r.preserved_fraction[i] : r.original_fraction[i];
  ADD_FAILURE() << "category not found: " << category;
  return -1.0;
}

double delta_of(const vat::ConstitutionReport& r, const std::string& category) {
  for (std::size_t i = 0; i < r.categories.size(); ++i)
    if (r.categories[i] == category) return r.delta[i];
  ADD_FAILURE() << "category not found: " << category;
  return -1.0;
}

void expect_fractions_sum_to_one(const vat::ConstitutionReport& r) {
  const double orig =
      std::accumulate(r.original_fraction.begin(), r.original_fraction.end(), 0.0);
  const double pres =
      std::accumulate(r.preserved_fraction.begin(), r.preserved_fraction.end(), 0.0);
  EXPECT_NEAR(orig, 1.0, 1e-9);
  EXPECT_NEAR(pres, 1.0, 1e-9);
}

TEST(LengthConstitution, KeepingTheLongTertileShiftsLongByTwoThirds) {
  const auto ts = testset_with_lengths({1, 2, 3, 4, 5, 6, 7, 8, 9});
  const auto report = vat::length_constitution(ts, subset_of(9, {6, 7, 8}));
  EXPECT_EQ(report.scheme, "length");
  EXPECT_EQ(report.categories, (std::vector<std::string>{"Short", "Medium", "Long"}));
  EXPECT_NEAR(fraction_of(report, "Long", false), 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(fraction_of(report, "Long", true), 1.0, 1e-12);
  EXPECT_NEAR(delta_of(report, "Long"), 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(delta_of(report, "Short"), -1.0 / 3.0, 1e-12);
  expect_fractions_sum_to_one(report);
}

TEST(LengthConstitution, FullSubsetHasExactlyZeroDeltas) {
  const auto ts = testset_with_lengths({3, 1, 4, 1, 5, 9, 2, 6});
  const auto report = vat::length_constitution(ts, vat::full_subset(8));
  for (double d : report.delta) EXPECT_EQ(d, 0.0);
  expect_fractions_sum_to_one(report);
}

TEST(LengthConstitution, ThreeSegmentsSplitOnePerTertile) {
  const auto ts = testset_with_lengths({5, 1, 3});
  const auto report = vat::length_constitution(ts, subset_of(3, {0}));
  // Ranks: id1 (len 1) Short, id2 (len 3) Medium, id0 (len 5) Long.
  EXPECT_NEAR(fraction_of(report, "Long", true), 1.0, 1e-12);
  EXPECT_NEAR(fraction_of(report, "Short", true), 0.0, 1e-12);
  EXPECT_NEAR(fraction_of(report, "Short", false), 1.0 / 3.0, 1e-12);
}

TEST(LengthConstitution, LengthTiesBreakTowardSmallerId) {
  // All lengths equal: tertiles are decided purely by id.
  const auto ts = testset_with_lengths({2, 2, 2});
  const auto report = vat::length_constitution(ts, subset_of(3, {0}));
  EXPECT_NEAR(fraction_of(report, "Short", true), 1.0, 1e-12);
}

TEST(FrequencyConstitution, TokensBinnedByVocabularyPosition) {
  testutil::ScopedTempDir tmp;
  testutil::write_text(tmp.path() / "freq.tsv",
                       "a\t1\nb\t10\nc\t100\nd\t1000\ne\t10000\n");
  const auto table = vat::load_frequency_table(tmp.path() / "freq.tsv");
  // Vocabulary positions (count-ascending): a Rare; b, c Middle; d, e Frequent.
  vat::TestSet ts;
  ts.ids = {0, 1};
  ts.references = {"a e", "c d"};
  const auto report = vat::frequency_constitution(ts, subset_of(2, {0}), table);
  EXPECT_EQ(report.scheme, "frequency");
  EXPECT_EQ(report.categories, (std::vector<std::string>{"Rare", "Middle", "Frequent"}));
  // Original tokens: a(R), e(F), c(M), d(F); preserved: a(R), e(F).
  EXPECT_NEAR(fraction_of(report, "Rare", false), 0.25, 1e-12);
  EXPECT_NEAR(fraction_of(report, "Middle", false), 0.25, 1e-12);
  EXPECT_NEAR(fraction_of(report, "Frequent", false), 0.5, 1e-12);
  EXPECT_NEAR(fraction_of(report, "Rare", true), 0.5, 1e-12);
  EXPECT_NEAR(fraction_of(report, "Middle", true), 0.0, 1e-12);
  EXPECT_NEAR(fraction_of(report, "Frequent", true), 0.5, 1e-12);
  expect_fractions_sum_to_one(report);
}

TEST(FrequencyConstitution, UnseenWordsCountAsRare) {
  testutil::ScopedTempDir tmp;
  testutil::write_text(tmp.path() / "freq.tsv", "known\t5\n");
  const auto table = vat::load_frequency_table(tmp.path() / "freq.tsv");
  vat::TestSet ts;
  ts.ids = {0, 1};
  ts.references = {"mystery words only", "more mystery"};
  const auto report = vat::frequency_constitution(ts, subset_of(2, {1}), table);
  EXPECT_NEAR(fraction_of(report, "Rare", false), 1.0, 1e-12);
  EXPECT_NEAR(fraction_of(report, "Rare", true), 1.0, 1e-12);
  EXPECT_EQ(delta_of(report, "Rare"), 0.0);
}

TEST(FrequencyTable, LoaderRejectsDuplicatesAndGarbage) {
  testutil::ScopedTempDir tmp;
  testutil::write_text(tmp.path() / "dup.tsv", "w\t1\nw\t2\n");
  EXPECT_THROW(vat::load_frequency_table(tmp.path() / "dup.tsv"), vat::Error);
  testutil::write_text(tmp.path() / "bad.tsv", "w\n");
  EXPECT_THROW(vat::load_frequency_table(tmp.path() / "bad.tsv"), vat::Error);
  testutil::write_text(tmp.path() / "ok.tsv", "# comment\n\nw\t3\n");
  EXPECT_EQ(vat::load_frequency_table(tmp.path() / "ok.tsv").counts.at("w"), 3u);
}

vat::TaggedCorpus tagged_two_sentences() {
  vat::TaggedCorpus corpus;
  corpus.sentences = {
      {{"Rome", "NNP"}, {"falls", "VBZ"}},
      {{"it", "PRP"}, {"rains", "VBZ"}},
  };
  return corpus;
}

TEST(PosConstitution, KeepingFirstSentenceShiftsProperNouns) {
  const auto report = vat::pos_constitution(tagged_two_sentences(), subset_of(2, {0}));
  EXPECT_EQ(report.scheme, "pos");
  EXPECT_NEAR(delta_of(report, "NNP"), 0.25, 1e-12);
  EXPECT_NEAR(delta_of(report, "PRP"), -0.25, 1e-12);
  EXPECT_NEAR(delta_of(report, "VBZ"), 0.0, 1e-12);
  // Ordered by |delta| descending, ties by tag name: NNP, PRP, then VBZ.
  EXPECT_EQ(report.categories, (std::vector<std::string>{"NNP", "PRP", "VBZ"}));
  expect_fractions_sum_to_one(report);
}

TEST(PosConstitution, FullSubsetHasExactlyZeroDeltas) {
  const auto report = vat::pos_constitution(tagged_two_sentences(), vat::full_subset(2));
  for (double d : report.delta) EXPECT_EQ(d, 0.0);
}

TEST(PosConstitution, SizeMismatchRejected) {
  EXPECT_THROW(vat::pos_constitution(tagged_two_sentences(), subset_of(3, {0})), vat::Error);
}

TEST(EditDistance, HandComputedExamples) {
  using vat::detail::edit_distance;
  EXPECT_EQ(edit_distance("kitten", "sitting", vat::EditUnit::kChar), 3u);
  EXPECT_EQ(edit_distance("a b c", "a c", vat::EditUnit::kToken), 1u);
  EXPECT_EQ(edit_distance("same here", "same here", vat::EditUnit::kToken), 0u);
  EXPECT_EQ(edit_distance("", "abc", vat::EditUnit::kChar), 3u);
  EXPECT_EQ(edit_distance("", "a b c", vat::EditUnit::kToken), 3u);
}

TEST(EditDistance, MatchesRecursiveReferenceAndMetricAxioms) {
  testutil::TestRng rng(55);
  const std::vector<std::string> pool = {"a", "b", "c"};
  auto random_sentence = [&](std::size_t max_tokens) {
    std::string s;
    const std::size_t n = rng.bounded(max_tokens + 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (i) s += ' ';
      s += pool[rng.bounded(pool.size())];
    }
    return s;
  };
  for (int iter = 0; iter < 200; ++iter) {
    const auto a = random_sentence(6), b = random_sentence(6), c = random_sentence(6);
    const auto ta = vat::detail::whitespace_tokens(a);
    const auto tb = vat::detail::whitespace_tokens(b);
    const std::size_t dab = vat::detail::edit_distance(a, b, vat::EditUnit::kToken);
    EXPECT_EQ(dab, testutil::levenshtein_recursive(ta, tb));
    EXPECT_EQ(dab, vat::detail::edit_distance(b, a, vat::EditUnit::kToken));  // symmetry
    EXPECT_EQ(vat::detail::edit_distance(a, a, vat::EditUnit::kToken), 0u);
    const std::size_t dac = vat::detail::edit_distance(a, c, vat::EditUnit::kToken);
    const std::size_t dcb = vat::detail::edit_distance(c, b, vat::EditUnit::kToken);
    EXPECT_LE(dab, dac + dcb);  // triangle inequality
  }
}

TEST(EditDistanceReport, SplitsMeansByGroup) {
  const std::vector<std::string> refs = {"a b c", "d e f", "g h i"};
  const std::vector<std::string> para = {"a b c", "d x f", "x y z"};  // d = 0, 1, 3
  const auto report =
      vat::edit_distance_report(refs, para, subset_of(3, {0, 1}), vat::EditUnit::kToken);
  EXPECT_EQ(report.unit, "token");
  EXPECT_EQ(report.n_all, 3u);
  EXPECT_EQ(report.n_preserved, 2u);
  EXPECT_EQ(report.n_filtered_out, 1u);
  EXPECT_NEAR(report.mean_all, 4.0 / 3.0, 1e-12);
  EXPECT_NEAR(report.mean_preserved, 0.5, 1e-12);
  EXPECT_NEAR(report.mean_filtered_out, 3.0, 1e-12);
}

TEST(EditDistanceReport, CharUnitCountsCodePoints) {
  const std::vector<std::string> refs = {"abc"};
  const std::vector<std::string> para = {"axc"};
  vat::SubsetIndex subset = subset_of(2, {0});
  EXPECT_THROW(vat::edit_distance_report(refs, para, subset, vat::EditUnit::kChar),
               vat::Error);  // parent size mismatch
  const auto report =
      vat::edit_distance_report(refs, para, subset_of(1, {0}), vat::EditUnit::kChar);
  EXPECT_EQ(report.unit, "char");
  EXPECT_DOUBLE_EQ(report.mean_all, 1.0);
  EXPECT_EQ(report.n_filtered_out, 0u);
  EXPECT_DOUBLE_EQ(report.mean_filtered_out, 0.0);  // empty group reports 0
}

std::vector<vat::InstanceStats> stats_with_means(const std::vector<double>& mus) {
  std::vector<vat::InstanceStats> stats;
  for (std::size_t i = 0; i < mus.size(); ++i) stats.push_back({i, mus[i], 0.0});
  return stats;
}

TEST(ScoreHistogram, TwoBinExample) {
  const auto stats = stats_with_means({0.1, 0.9});
  const auto h = vat::score_histogram(stats, subset_of(2, {0}), 2);
  EXPECT_DOUBLE_EQ(h.lo, 0.1);
  EXPECT_DOUBLE_EQ(h.hi, 0.9);
  EXPECT_EQ(h.preserved, (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(h.filtered_out, (std::vector<std::size_t>{0, 1}));
}

TEST(ScoreHistogram, CountsConservedAcrossBinWidths) {
  testutil::TestRng rng(66);
  std::vector<double> mus(100);
  for (auto& v : mus) v = rng.uniform01();
  const auto stats = stats_with_means(mus);
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < 100; i += 3) kept.push_back(i);
  const auto subset = subset_of(100, kept);
  for (std::size_t bins = 2; bins <= 64; ++bins) {
    const auto h = vat::score_histogram(stats, subset, bins);
    const auto sum = [](const std::vector<std::size_t>& v) {
      return std::accumulate(v.begin(), v.end(), std::size_t{0});
    };
    EXPECT_EQ(sum(h.preserved), kept.size());
    EXPECT_EQ(sum(h.preserved) + sum(h.filtered_out), 100u);
    EXPECT_EQ(h.preserved.size(), bins);
  }
}

TEST(ScoreHistogram, ConstantScoresLandInBinZero) {
  const auto stats = stats_with_means({0.5, 0.5, 0.5});
  const auto h = vat::score_histogram(stats, subset_of(3, {1}), 4);
  EXPECT_DOUBLE_EQ(h.lo, h.hi);
  EXPECT_EQ(h.preserved, (std::vector<std::size_t>{1, 0, 0, 0}));
  EXPECT_EQ(h.filtered_out, (std::vector<std::size_t>{2, 0, 0, 0}));
}

TEST(ScoreHistogram, MaximumScoreLandsInTopBin) {
  const auto stats = stats_with_means({0.0, 0.25, 0.5, 1.0});
  const auto h = vat::score_histogram(stats, subset_of(4, {3}), 4);
  EXPECT_EQ(h.preserved, (std::vector<std::size_t>{0, 0, 0, 1}));
}

TEST(ScoreHistogram, DegenerateRequestsRejected) {
  const auto stats = stats_with_means({0.1, 0.9});
  EXPECT_THROW(vat::score_histogram(stats, subset_of(2, {0}), 1), vat::Error);
  EXPECT_THROW(vat::score_histogram(stats, vat::full_subset(2), 2), vat::Error);
  EXPECT_THROW(vat::score_histogram(stats, subset_of(3, {0}), 2), vat::Error);
}

TEST(ScoreHistogram, PolarizedMatrixSeparatesGroups) {
  // Rows with extreme disagreement (high sigma) survive the filter; their
  // means sit mid-range, while dropped unanimous rows sit at the edges.
  std::vector<std::vector<double>> rows;
  for (int i = 0; i < 10; ++i) rows.push_back({0.0, 0.0});    // unanimous low
  for (int i = 0; i < 10; ++i) rows.push_back({1.0, 1.0});    // unanimous high
  for (int i = 0; i < 10; ++i) rows.push_back({0.0, 1.0});    // split decision
  vat::ScoreMatrix m;
  m.metric_name = "m";
  m.system_names = {"s0", "s1"};
  for (std::size_t i = 0; i < rows.size(); ++i) m.segment_ids.push_back(i);
  m.scores = rows;
  const auto stats = vat::instance_stats(m);
  const auto subset = vat::filter_by_variance(stats, {.lambda_percent = 60.0});
  ASSERT_EQ(subset.kept.size(), 12u);
  const auto h = vat::score_histogram(stats, subset, 4);
  // All split-decision rows (mean 0.5) land in an interior bin as preserved.
  EXPECT_EQ(h.preserved[1] + h.preserved[2], 10u);
  // The unanimous rows (means 0.0 and 1.0) dominate the edge bins.
  EXPECT_GE(h.filtered_out[0], 8u);
  EXPECT_GE(h.filtered_out[3], 8u);
}

TEST(ReportWriters, ConstitutionRoundTripContainsAllCategories) {
  testutil::ScopedTempDir tmp;
  const auto report = vat::pos_constitution(tagged_two_sentences(), subset_of(2, {0}));
  const auto path = tmp.path() / "pos.txt";
  const std::vector<std::string> comments = {"ctx"};
  vat::write_constitution_report(report, path, comments);
  const auto content = testutil::read_text(path);
  EXPECT_NE(content.find("# ctx\n"), std::string::npos);
  EXPECT_NE(content.find("scheme: pos\n"), std::string::npos);
  EXPECT_NE(content.find("categories: 3\n"), std::string::npos);
  EXPECT_NE(content.find("category: NNP\noriginal_fraction: 0.250000\n"
                         "preserved_fraction: 0.500000\ndelta: 0.250000\n"),
            std::string::npos);
  EXPECT_NE(content.find("delta: -0.250000\n"), std::string::npos);
}

TEST(ReportWriters, EditDistanceAndHistogramFormats) {
  testutil::ScopedTempDir tmp;
  vat::EditDistanceReport er;
  er.unit = "token";
  er.n_all = 3;
  er.n_preserved = 2;
  er.n_filtered_out = 1;
  er.mean_all = 4.0 / 3.0;
  er.mean_preserved = 0.5;
  er.mean_filtered_out = 3.0;
  vat::write_edit_distance_report(er, tmp.path() / "ed.txt");
  const auto ed = testutil::read_text(tmp.path() / "ed.txt");
  EXPECT_NE(ed.find("unit: token\n"), std::string::npos);
  EXPECT_NE(ed.find("mean_all: 1.333333\n"), std::string::npos);
  EXPECT_NE(ed.find("n_filtered_out: 1\n"), std::string::npos);

  vat::Histogram h;
  h.lo = 0.0;
  h.hi = 1.0;
  h.preserved = {1, 2};
  h.filtered_out = {3, 4};
  vat::write_histogram(h, tmp.path() / "hist.txt");
  const auto hist = testutil::read_text(tmp.path() / "hist.txt");
  EXPECT_NE(hist.find("bins: 2\n"), std::string::npos);
  EXPECT_NE(hist.find("lo: 0.000000\n"), std::string::npos);
  EXPECT_NE(hist.find("hi: 1.000000\n"), std::string::npos);
  EXPECT_NE(hist.find("# bin\tpreserved\tfiltered_out\n"), std::string::npos);
  EXPECT_NE(hist.find("0\t1\t3\n"), std::string::npos);
  EXPECT_NE(hist.find("1\t2\t4\n"), std::string::npos);
}

}  // namespace

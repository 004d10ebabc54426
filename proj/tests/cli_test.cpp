#include <gtest/gtest.h>

#include <filesystem>
#include <string>
#include <vector>

#include "testutil.hpp"
#include "vat/corpus.hpp"
#include "vat/filter.hpp"

namespace fs = std::filesystem;

namespace {

// End-to-end tests drive the real binary via a shell, always from inside a
// temp directory with relative paths, so output files are byte-reproducible
// across runs (the provenance header echoes the exact flags).

void setup_corpus(const fs::path& dir) {
  testutil::write_text(dir / "refs.txt",
                       "the cat sat on the mat\n"
                       "it rains a lot in autumn\n"
                       "numbers like 3.5 are kept intact\n"
                       "short one\n");
  fs::create_directories(dir / "sys");
  testutil::write_text(dir / "sys" / "copy.txt",
                       "the cat sat on the mat\n"
                       "it rains a lot in autumn\n"
                       "numbers like 3.5 are kept intact\n"
                       "short one\n");
  testutil::write_text(dir / "sys" / "perturbed.txt",
                       "the cat sat on a mat\n"
                       "it rains very often in autumn\n"
                       "numbers like 3.5 are kept\n"
                       "short two\n");
}

void write_fixture_files(const fs::path& dir, const testutil::Fixture& fx) {
  vat::save_score_matrix(fx.matrix, dir / "scores.tsv");
  std::string human;
  for (std::size_t i = 0; i < fx.human.system_names.size(); ++i)
    human += fx.human.system_names[i] + "\t" +
             vat::detail::format_fixed(fx.human.ratings[i], 6) + "\n";
  testutil::write_text(dir / "human.tsv", human);
}

TEST(CliScore, NativeBleuGivesIdentitySystemAPerfectColumn) {
  testutil::ScopedTempDir tmp;
  setup_corpus(tmp.path());
  ASSERT_EQ(testutil::run_cli("score --refs refs.txt --sys-dir sys --out-dir out",
                              tmp.path()),
            0);
  const auto matrix = vat::load_score_matrix(tmp.path() / "out" / "score_matrix.tsv");
  EXPECT_EQ(matrix.metric_name, "bleu");
  ASSERT_EQ(matrix.system_names, (std::vector<std::string>{"copy", "perturbed"}));
  ASSERT_EQ(matrix.n_segments(), 4u);
  for (const auto& row : matrix.scores) {
    EXPECT_DOUBLE_EQ(row[0], 1.0);  // identity hypothesis
    EXPECT_LT(row[1], 1.0);
  }
  const auto content = testutil::read_text(tmp.path() / "out" / "score_matrix.tsv");
  EXPECT_NE(content.find("# command: score --refs refs.txt --sys-dir sys "
                         "--metric bleu --out-dir out\n"),
            std::string::npos);
}

TEST(CliScore, RerunsAreByteIdentical) {
  testutil::ScopedTempDir a, b;
  for (const auto* dir : {&a, &b}) {
    setup_corpus(dir->path());
    ASSERT_EQ(testutil::run_cli("score --refs refs.txt --sys-dir sys --out-dir out",
                                dir->path()),
              0);
  }
  EXPECT_TRUE(testutil::same_tree(a.path() / "out", b.path() / "out"));
}

TEST(CliScore, FileModeRejectsMismatchedSegmentCount) {
  testutil::ScopedTempDir tmp;
  setup_corpus(tmp.path());  // 4 reference segments
  const auto fx = testutil::make_fixture(1, 4, 1, 1);  // 2-segment matrix
  vat::save_score_matrix(fx.matrix, tmp.path() / "external.tsv");
  ASSERT_NE(testutil::run_cli("score --refs refs.txt --metric file "
                              "--scores external.tsv --out-dir out",
                              tmp.path()),
            0);
  const auto err = testutil::read_text(tmp.path() / "cli_stderr.log");
  EXPECT_NE(err.find("matrix has 2 segments but test set has 4"), std::string::npos);
  EXPECT_FALSE(fs::exists(tmp.path() / "out" / "score_matrix.tsv"));  // cleaned up
}

TEST(CliScore, FileModeReEmitsExternalMatrix) {
  testutil::ScopedTempDir tmp;
  setup_corpus(tmp.path());
  const auto fx = testutil::make_fixture(2, 5, 2, 2);  // 4 segments, 5 systems
  vat::save_score_matrix(fx.matrix, tmp.path() / "external.tsv");
  ASSERT_EQ(testutil::run_cli("score --refs refs.txt --metric file "
                              "--scores external.tsv --out-dir out",
                              tmp.path()),
            0);
  const auto matrix = vat::load_score_matrix(tmp.path() / "out" / "score_matrix.tsv");
  EXPECT_EQ(matrix.metric_name, fx.matrix.metric_name);
  EXPECT_EQ(matrix.system_names, fx.matrix.system_names);
  EXPECT_EQ(matrix.n_segments(), 4u);
}

TEST(CliFilter, KeepsFourHundredOfAThousandSegments) {
  testutil::ScopedTempDir tmp;
  const auto fx = testutil::make_fixture(3, 4, 500, 500);  // N=1000
  write_fixture_files(tmp.path(), fx);
  ASSERT_EQ(testutil::run_cli("filter --scores scores.tsv --lambda 60 --out-dir out",
                              tmp.path()),
            0);
  const auto subset = vat::load_subset_index(tmp.path() / "out" / "subset.index");
  EXPECT_EQ(subset.parent_size, 1000u);
  EXPECT_EQ(subset.kept.size(), 400u);
  EXPECT_TRUE(fs::exists(tmp.path() / "out" / "instance_stats.tsv"));
  EXPECT_FALSE(fs::exists(tmp.path() / "out" / "references.txt"));  // no --refs

  const auto index_text = testutil::read_text(tmp.path() / "out" / "subset.index");
  EXPECT_EQ(index_text.rfind("#parent_size=1000\n", 0), 0u);
  EXPECT_NE(index_text.find("# metric=synthetic\n"), std::string::npos);
  EXPECT_NE(index_text.find("# lambda=60\n"), std::string::npos);
  EXPECT_NE(index_text.find("# keep_rule=keep the N - floor(lambda*N/100) "
                            "highest-sigma segments\n"),
            std::string::npos);
  EXPECT_NE(index_text.find("# tie_rule=equal sigma keeps the smaller segment id\n"),
            std::string::npos);
}

TEST(CliFilter, LambdaZeroMaterializesTheFullTestSet) {
  testutil::ScopedTempDir tmp;
  setup_corpus(tmp.path());
  ASSERT_EQ(testutil::run_cli(
                "filter --refs refs.txt --sys-dir sys --lambda 0 --out-dir out",
                tmp.path()),
            0);
  EXPECT_EQ(testutil::read_text(tmp.path() / "out" / "references.txt"),
            testutil::read_text(tmp.path() / "refs.txt"));
  EXPECT_EQ(testutil::read_text(tmp.path() / "out" / "systems" / "copy.txt"),
            testutil::read_text(tmp.path() / "sys" / "copy.txt"));
  EXPECT_EQ(testutil::read_text(tmp.path() / "out" / "systems" / "perturbed.txt"),
            testutil::read_text(tmp.path() / "sys" / "perturbed.txt"));
  const auto subset = vat::load_subset_index(tmp.path() / "out" / "subset.index");
  EXPECT_EQ(subset.kept, (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(CliFilter, MaterializedSubsetKeepsOnlySelectedSegments) {
  testutil::ScopedTempDir tmp;
  setup_corpus(tmp.path());
  ASSERT_EQ(testutil::run_cli(
                "filter --refs refs.txt --sys-dir sys --lambda 50 --out-dir out",
                tmp.path()),
            0);
  const auto subset = vat::load_subset_index(tmp.path() / "out" / "subset.index");
  EXPECT_EQ(subset.kept.size(), 2u);
  const auto original = vat::load_testset(tmp.path() / "refs.txt");
  const auto filtered = vat::load_testset(tmp.path() / "out" / "references.txt");
  ASSERT_EQ(filtered.size(), 2u);
  for (std::size_t i = 0; i < subset.kept.size(); ++i)
    EXPECT_EQ(filtered.references[i], original.references[subset.kept[i]]);
}

TEST(CliFilter, RerunsAreByteIdentical) {
  testutil::ScopedTempDir a, b;
  for (const auto* dir : {&a, &b}) {
    const auto fx = testutil::make_fixture(4, 6, 40, 60);
    write_fixture_files(dir->path(), fx);
    ASSERT_EQ(testutil::run_cli("filter --scores scores.tsv --lambda 60 --out-dir out",
                                dir->path()),
              0);
  }
  EXPECT_TRUE(testutil::same_tree(a.path() / "out", b.path() / "out"));
}

TEST(CliFilter, WithoutAnyScoreSourceFails) {
  testutil::ScopedTempDir tmp;
  ASSERT_NE(testutil::run_cli("filter --lambda 60 --out-dir out", tmp.path()), 0);
  const auto err = testutil::read_text(tmp.path() / "cli_stderr.log");
  EXPECT_NE(err.find("need --scores"), std::string::npos);
  EXPECT_FALSE(fs::exists(tmp.path() / "out" / "subset.index"));
}

TEST(CliMetaeval, GoldenReportBytesOnExactCase) {
  testutil::ScopedTempDir tmp;
  vat::ScoreMatrix m;
  m.metric_name = "test";
  m.system_names = {"a", "b", "c"};
  m.segment_ids = {0, 1};
  m.scores = {{0.1, 0.2, 0.3}, {0.3, 0.4, 0.5}};
  vat::save_score_matrix(m, tmp.path() / "scores.tsv");
  testutil::write_text(tmp.path() / "human.tsv", "a\t1\nb\t2\nc\t3\n");
  ASSERT_EQ(testutil::run_cli(
                "metaeval --scores scores.tsv --human human.tsv --out-dir out",
                tmp.path()),
            0);
  EXPECT_EQ(testutil::read_text(tmp.path() / "out" / "metaeval_report.txt"),
            "# vatkit 0.1.0\n"
            "# command: metaeval --scores scores.tsv --human human.tsv "
            "--agg mean --out-dir out\n"
            "metric: test\n"
            "subset_tag: original\n"
            "mode: mean\n"
            "n_systems: 3\n"
            "pearson: 1.000000\n"
            "kendall_tau_b: 1.000000\n"
            "spearman: 1.000000\n"
            "abs_pearson: 1.000000\n"
            "abs_kendall_tau_b: 1.000000\n"
            "abs_spearman: 1.000000\n");
}

TEST(CliMetaeval, SubsetAddsSecondBlockAndImprovesFixtureCorrelation) {
  testutil::ScopedTempDir tmp;
  const auto fx = testutil::make_fixture(5);
  write_fixture_files(tmp.path(), fx);
  ASSERT_EQ(testutil::run_cli("filter --scores scores.tsv --lambda 60 --out-dir fsel",
                              tmp.path()),
            0);
  ASSERT_EQ(testutil::run_cli("metaeval --scores scores.tsv --human human.tsv "
                              "--subset fsel/subset.index --out-dir out",
                              tmp.path()),
            0);
  const auto report = testutil::read_text(tmp.path() / "out" / "metaeval_report.txt");
  const auto orig_pos = report.find("subset_tag: original\n");
  const auto vat_pos = report.find("subset_tag: vat\n");
  ASSERT_NE(orig_pos, std::string::npos);
  ASSERT_NE(vat_pos, std::string::npos);
  EXPECT_LT(orig_pos, vat_pos);

  // Pull the two pearson values out and check the filtered one is higher.
  auto pearson_after = [&report](std::size_t pos) {
    const auto key = report.find("pearson: ", pos);
    return std::stod(report.substr(key + 9));
  };
  EXPECT_GT(pearson_after(vat_pos), pearson_after(orig_pos));
}

TEST(CliMetaeval, CorpusBleuAggregationRanksIdentityHighest) {
  testutil::ScopedTempDir tmp;
  setup_corpus(tmp.path());
  testutil::write_text(tmp.path() / "human.tsv", "copy\t0.9\nperturbed\t0.2\n");
  ASSERT_EQ(testutil::run_cli("metaeval --refs refs.txt --sys-dir sys "
                              "--human human.tsv --agg corpus-bleu --out-dir out",
                              tmp.path()),
            0);
  const auto report = testutil::read_text(tmp.path() / "out" / "metaeval_report.txt");
  EXPECT_NE(report.find("mode: corpus_bleu\n"), std::string::npos);
  EXPECT_NE(report.find("metric: bleu\n"), std::string::npos);
  EXPECT_NE(report.find("pearson: 1.000000\n"), std::string::npos);  // 2 systems
}

TEST(CliMetaeval, UnmatchedSystemsAreDroppedWithWarning) {
  testutil::ScopedTempDir tmp;
  const auto fx = testutil::make_fixture(6, 5, 10, 10);
  write_fixture_files(tmp.path(), fx);
  std::string human = testutil::read_text(tmp.path() / "human.tsv");
  human += "ghost\t0.5\n";
  testutil::write_text(tmp.path() / "human.tsv", human);
  ASSERT_EQ(testutil::run_cli(
                "metaeval --scores scores.tsv --human human.tsv --out-dir out",
                tmp.path()),
            0);
  const auto err = testutil::read_text(tmp.path() / "cli_stderr.log");
  EXPECT_NE(err.find("dropped from join: ghost"), std::string::npos);
  const auto report = testutil::read_text(tmp.path() / "out" / "metaeval_report.txt");
  EXPECT_NE(report.find("# dropped (no counterpart): ghost\n"), std::string::npos);
  EXPECT_NE(report.find("n_systems: 5\n"), std::string::npos);
}

TEST(CliSweep, DefaultGridWritesTenReportsAndASummary) {
  testutil::ScopedTempDir tmp;
  const auto fx = testutil::make_fixture(7, 8, 50, 50);  // N=100
  write_fixture_files(tmp.path(), fx);
  ASSERT_EQ(testutil::run_cli("sweep --scores scores.tsv --human human.tsv --out-dir out",
                              tmp.path()),
            0);
  for (int l = 0; l <= 90; l += 10) {
    EXPECT_TRUE(fs::exists(tmp.path() / "out" /
                           ("sweep_lambda" + std::to_string(l) + ".txt")))
        << "lambda " << l;
  }
  const auto summary = testutil::read_text(tmp.path() / "out" / "sweep_summary.tsv");
  EXPECT_NE(summary.find("lambda\tkept\tpearson\tkendall_tau_b\tspearman\t"
                         "abs_pearson\tabs_kendall_tau_b\tabs_spearman\n"),
            std::string::npos);
  // N=100: lambda 60 keeps 40 segments, lambda 0 keeps all 100.
  EXPECT_NE(summary.find("\n60\t40\t"), std::string::npos);
  EXPECT_NE(summary.find("\n0\t100\t"), std::string::npos);
  EXPECT_NE(summary.find("\n90\t10\t"), std::string::npos);

  // The per-lambda report tags the subset with its lambda value.
  const auto r60 = testutil::read_text(tmp.path() / "out" / "sweep_lambda60.txt");
  EXPECT_NE(r60.find("subset_tag: lambda60\n"), std::string::npos);
  EXPECT_NE(r60.find("# lambda=60\n"), std::string::npos);
}

TEST(CliSweep, ExplicitLambdaListIsHonored) {
  testutil::ScopedTempDir tmp;
  const auto fx = testutil::make_fixture(8, 5, 20, 20);
  write_fixture_files(tmp.path(), fx);
  ASSERT_EQ(testutil::run_cli("sweep --scores scores.tsv --human human.tsv "
                              "--lambda 25 --lambda 62.5 --out-dir out",
                              tmp.path()),
            0);
  EXPECT_TRUE(fs::exists(tmp.path() / "out" / "sweep_lambda25.txt"));
  EXPECT_TRUE(fs::exists(tmp.path() / "out" / "sweep_lambda62.5.txt"));
  EXPECT_FALSE(fs::exists(tmp.path() / "out" / "sweep_lambda0.txt"));
  const auto summary = testutil::read_text(tmp.path() / "out" / "sweep_summary.tsv");
  EXPECT_NE(summary.find("\n25\t30\t"), std::string::npos);  // N=40
  EXPECT_NE(summary.find("\n62.5\t15\t"), std::string::npos);
}

TEST(CliSweep, RerunsAreByteIdentical) {
  testutil::ScopedTempDir a, b;
  for (const auto* dir : {&a, &b}) {
    const auto fx = testutil::make_fixture(9, 6, 30, 30);
    write_fixture_files(dir->path(), fx);
    ASSERT_EQ(testutil::run_cli(
                  "sweep --scores scores.tsv --human human.tsv --out-dir out",
                  dir->path()),
              0);
  }
  EXPECT_TRUE(testutil::same_tree(a.path() / "out", b.path() / "out"));
}

void setup_analysis_inputs(const fs::path& dir) {
  setup_corpus(dir);  // refs.txt with 4 segments
  testutil::write_text(dir / "para.txt",
                       "the cat sat on the mat\n"
                       "it rains a lot in the autumn\n"
                       "numbers such as 3.5 are kept intact\n"
                       "a short one\n");
  testutil::write_text(dir / "freq.tsv",
                       "the\t1000\ncat\t20\nsat\t30\non\t800\nmat\t15\n"
                       "it\t900\nrains\t5\na\t950\nlot\t40\nin\t970\nautumn\t8\n");
  testutil::write_text(dir / "pos.txt",
                       "the/DT cat/NN sat/VBD on/IN the/DT mat/NN\n"
                       "it/PRP rains/VBZ a/DT lot/NN in/IN autumn/NN\n"
                       "numbers/NNS like/IN 3.5/CD are/VBP kept/VBN intact/JJ\n"
                       "short/JJ one/CD\n");
  vat::SubsetIndex subset;
  subset.parent_size = 4;
  subset.kept = {0, 2};
  vat::save_subset_index(subset, dir / "subset.index");
}

TEST(CliAnalyze, WritesEveryRequestedReport) {
  testutil::ScopedTempDir tmp;
  setup_analysis_inputs(tmp.path());
  const auto fx = testutil::make_fixture(10, 4, 2, 2);  // 4-segment matrix
  vat::save_score_matrix(fx.matrix, tmp.path() / "scores.tsv");
  ASSERT_EQ(testutil::run_cli("analyze --refs refs.txt --subset subset.index "
                              "--scores scores.tsv --bins 4 --freq-table freq.tsv "
                              "--pos-file pos.txt --paraphrased para.txt "
                              "--edit-unit token --out-dir out",
                              tmp.path()),
            0);
  for (const char* name :
       {"length_constitution.txt", "frequency_constitution.txt", "pos_constitution.txt",
        "edit_distance.txt", "score_histogram.txt"}) {
    EXPECT_TRUE(fs::exists(tmp.path() / "out" / name)) << name;
  }
  const auto freq = testutil::read_text(tmp.path() / "out" / "frequency_constitution.txt");
  EXPECT_NE(freq.find("scheme: frequency\n"), std::string::npos);
  EXPECT_NE(freq.find("# percentile base: vocabulary types (count-ascending); "
                      "unseen words count as Rare\n"),
            std::string::npos);
  const auto hist = testutil::read_text(tmp.path() / "out" / "score_histogram.txt");
  EXPECT_NE(hist.find("bins: 4\n"), std::string::npos);
  const auto ed = testutil::read_text(tmp.path() / "out" / "edit_distance.txt");
  EXPECT_NE(ed.find("unit: token\n"), std::string::npos);
  EXPECT_NE(ed.find("n_preserved: 2\n"), std::string::npos);
}

TEST(CliAnalyze, FullSubsetYieldsExactlyZeroDeltas) {
  testutil::ScopedTempDir tmp;
  setup_analysis_inputs(tmp.path());
  vat::save_subset_index(vat::full_subset(4), tmp.path() / "full.index");
  ASSERT_EQ(testutil::run_cli("analyze --refs refs.txt --subset full.index "
                              "--freq-table freq.tsv --pos-file pos.txt --out-dir out",
                              tmp.path()),
            0);
  for (const char* name :
       {"length_constitution.txt", "frequency_constitution.txt", "pos_constitution.txt"}) {
    const auto content = testutil::read_text(tmp.path() / "out" / name);
    EXPECT_EQ(content.find("delta: -"), std::string::npos) << name;
    EXPECT_NE(content.find("delta: 0.000000\n"), std::string::npos) << name;
  }
}

TEST(CliAnalyze, HistogramOnFullSubsetFailsAndRemovesAllOutputs) {
  testutil::ScopedTempDir tmp;
  setup_analysis_inputs(tmp.path());
  vat::save_subset_index(vat::full_subset(4), tmp.path() / "full.index");
  const auto fx = testutil::make_fixture(11, 4, 2, 2);
  vat::save_score_matrix(fx.matrix, tmp.path() / "scores.tsv");
  ASSERT_NE(testutil::run_cli("analyze --refs refs.txt --subset full.index "
                              "--scores scores.tsv --out-dir out",
                              tmp.path()),
            0);
  const auto err = testutil::read_text(tmp.path() / "cli_stderr.log");
  EXPECT_NE(err.find("filtered-out group is empty"), std::string::npos);
  // The length report was written before the histogram failed; it must be gone.
  EXPECT_FALSE(fs::exists(tmp.path() / "out" / "length_constitution.txt"));
  EXPECT_FALSE(fs::exists(tmp.path() / "out" / "score_histogram.txt"));
}

TEST(CliRobustness, RerunsWithSameSeedAreByteIdentical) {
  testutil::ScopedTempDir a, b;
  for (const auto* dir : {&a, &b}) {
    const auto fx = testutil::make_fixture(12, 16, 40, 60);
    write_fixture_files(dir->path(), fx);
    ASSERT_EQ(testutil::run_cli("robustness --scores scores.tsv --human human.tsv "
                                "--seed 7 --out-dir out",
                                dir->path()),
              0);
  }
  EXPECT_TRUE(testutil::same_tree(a.path() / "out", b.path() / "out"));
  const auto report = testutil::read_text(a.path() / "out" / "robustness_report.txt");
  EXPECT_NE(report.find("# seed=7\n"), std::string::npos);
  EXPECT_NE(report.find("# lambda=60\n"), std::string::npos);
  EXPECT_NE(report.find("# filter_half= "), std::string::npos);
  EXPECT_NE(report.find("# heldout_half= "), std::string::npos);
  EXPECT_NE(report.find("subset_tag: original\n"), std::string::npos);
  EXPECT_NE(report.find("subset_tag: vat-half\n"), std::string::npos);
  EXPECT_NE(report.find("n_systems: 8\n"), std::string::npos);
}

TEST(CliRobustness, DifferentSeedsSplitDifferently) {
  testutil::ScopedTempDir tmp;
  const auto fx = testutil::make_fixture(13, 16, 30, 30);
  write_fixture_files(tmp.path(), fx);
  ASSERT_EQ(testutil::run_cli("robustness --scores scores.tsv --human human.tsv "
                              "--seed 1 --out-dir o1",
                              tmp.path()),
            0);
  ASSERT_EQ(testutil::run_cli("robustness --scores scores.tsv --human human.tsv "
                              "--seed 2 --out-dir o2",
                              tmp.path()),
            0);
  const auto r1 = testutil::read_text(tmp.path() / "o1" / "robustness_report.txt");
  const auto r2 = testutil::read_text(tmp.path() / "o2" / "robustness_report.txt");
  const auto half = [](const std::string& r) {
    const auto from = r.find("# filter_half=");
    return r.substr(from, r.find('\n', from) - from);
  };
  EXPECT_NE(half(r1), half(r2));
}

TEST(CliErrors, CorruptHumanFileFailsWithLocationAndNoOutputs) {
  testutil::ScopedTempDir tmp;
  const auto fx = testutil::make_fixture(14, 5, 10, 10);
  write_fixture_files(tmp.path(), fx);
  testutil::write_text(tmp.path() / "human.tsv", "sys00\t0.5\nsys00\t0.7\n");
  ASSERT_NE(testutil::run_cli(
                "metaeval --scores scores.tsv --human human.tsv --out-dir out",
                tmp.path()),
            0);
  const auto err = testutil::read_text(tmp.path() / "cli_stderr.log");
  EXPECT_NE(err.find("vatkit: error:"), std::string::npos);
  EXPECT_NE(err.find("human.tsv:2"), std::string::npos);
  EXPECT_NE(err.find("duplicate system"), std::string::npos);
  EXPECT_FALSE(fs::exists(tmp.path() / "out" / "metaeval_report.txt"));
}

TEST(CliErrors, UnknownFlagsAndMissingSubcommandAreParseErrors) {
  testutil::ScopedTempDir tmp;
  EXPECT_NE(testutil::run_cli("", tmp.path()), 0);
  EXPECT_NE(testutil::run_cli("score --no-such-flag x", tmp.path()), 0);
  EXPECT_NE(testutil::run_cli("filter --scores s.tsv --lambda 101 --out-dir out",
                              tmp.path()),
            0);
}

}  // namespace

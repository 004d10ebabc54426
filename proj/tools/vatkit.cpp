// vatkit: variance-aware test set toolkit.
//
// Pipeline: score a test set (or ingest an external score matrix), filter it
// by cross-system score variance, meta-evaluate metric/human correlation on
// original vs filtered sets, sweep the filtering percentage, analyze what the
// filter removed, and run the held-out-systems robustness protocol.
//
// Every subcommand is deterministic given its flags (randomness, used only by
// `robustness`, flows from --seed) and removes its outputs again if it fails.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vat/vat.hpp"

namespace fs = std::filesystem;

namespace {

std::string fmt_g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

// Paths this run intends to write; discarded again when the run fails.
std::vector<fs::path> g_outputs;

void track(const fs::path& path) { g_outputs.push_back(path); }

void discard_outputs() {
  for (const auto& path : g_outputs) {
    std::error_code ec;
    fs::remove(path, ec);
  }
}

struct Args {
  std::string refs, src, sys_dir, scores, human, subset, freq_table, pos_file,
      paraphrased, out_dir;
  std::string metric = "bleu";
  std::string agg = "mean";
  std::string edit_unit = "token";
  double lambda = 60.0;
  std::vector<double> lambdas;  // sweep only; empty -> {0,10,...,90}
  std::uint64_t seed = 0;
  std::size_t bins = 16;
};

// Canonical config echo for provenance headers: fixed flag order, so rerunning
// the same config (flags in any order) yields byte-identical outputs.
class Echo {
 public:
  explicit Echo(std::string subcommand) : echo_(std::move(subcommand)) {}
  Echo& arg(const char* flag, const std::string& value) {
    if (!value.empty()) echo_ += std::string(" ") + flag + " " + value;
    return *this;
  }
  std::vector<std::string> provenance() const {
    return {"vatkit " + std::string(vat::kVersion), "command: " + echo_};
  }

 private:
  std::string echo_;
};

void warn_dropped(const vat::MetaEvalReport& report) {
  if (report.dropped_systems.empty()) return;
  std::cerr << "vatkit: warning: systems without counterpart dropped from join:";
  for (const auto& name : report.dropped_systems) std::cerr << " " << name;
  std::cerr << "\n";
}

std::optional<vat::TestSet> load_testset_if(const Args& a) {
  if (a.refs.empty()) return std::nullopt;
  return vat::load_testset(a.refs, a.src.empty()
                                       ? std::nullopt
                                       : std::optional<fs::path>(a.src));
}

// ---------------------------------------------------------------------------

void run_score(const Args& a) {
  const auto prov = Echo("score")
                        .arg("--refs", a.refs)
                        .arg("--src", a.src)
                        .arg("--sys-dir", a.sys_dir)
                        .arg("--scores", a.scores)
                        .arg("--metric", a.metric)
                        .arg("--out-dir", a.out_dir)
                        .provenance();

  const auto testset = vat::load_testset(
      a.refs, a.src.empty() ? std::nullopt : std::optional<fs::path>(a.src));
  vat::ScoreMatrix matrix;
  if (a.metric == "bleu") {
    if (a.sys_dir.empty()) vat::fail("score: --metric bleu requires --sys-dir");
    matrix = vat::score_matrix_bleu(testset,
                                    vat::load_hypotheses_dir(a.sys_dir, testset));
  } else {  // "file": validate and re-emit an externally computed matrix
    if (a.scores.empty()) vat::fail("score: --metric file requires --scores");
    matrix = vat::load_score_matrix(a.scores);
    if (matrix.n_segments() != testset.size())
      vat::fail("score: matrix has " + std::to_string(matrix.n_segments()) +
                " segments but test set has " + std::to_string(testset.size()));
  }

  const fs::path out = fs::path(a.out_dir) / "score_matrix.tsv";
  track(out);
  vat::save_score_matrix(matrix, out, prov);
}

void run_filter(const Args& a) {
  const auto echo = Echo("filter")
                        .arg("--refs", a.refs)
                        .arg("--src", a.src)
                        .arg("--sys-dir", a.sys_dir)
                        .arg("--scores", a.scores)
                        .arg("--lambda", fmt_g(a.lambda))
                        .arg("--out-dir", a.out_dir);
  const auto prov = echo.provenance();

  const auto testset = load_testset_if(a);
  std::optional<vat::HypothesisSet> hypotheses;
  if (!a.sys_dir.empty()) {
    if (!testset) vat::fail("filter: --sys-dir requires --refs");
    hypotheses = vat::load_hypotheses_dir(a.sys_dir, *testset);
  }

  vat::ScoreMatrix matrix;
  if (!a.scores.empty()) {
    matrix = vat::load_score_matrix(a.scores);
  } else if (testset && hypotheses) {
    matrix = vat::score_matrix_bleu(*testset, *hypotheses);
  } else {
    vat::fail("filter: need --scores, or --refs with --sys-dir for native BLEU");
  }
  if (testset && matrix.n_segments() != testset->size())
    vat::fail("filter: matrix has " + std::to_string(matrix.n_segments()) +
              " segments but test set has " + std::to_string(testset->size()));

  const auto stats = vat::instance_stats(matrix);
  vat::FilterConfig cfg;
  cfg.lambda_percent = a.lambda;
  const auto subset = vat::filter_by_variance(stats, cfg);

  std::vector<std::string> index_comments = prov;
  index_comments.push_back("metric=" + matrix.metric_name);
  index_comments.push_back("lambda=" + fmt_g(a.lambda));
  index_comments.push_back("keep_rule=keep the N - floor(lambda*N/100) highest-sigma segments");
  index_comments.push_back("tie_rule=equal sigma keeps the smaller segment id");

  std::vector<std::string> stats_comments = prov;
  stats_comments.push_back("metric=" + matrix.metric_name);
  const fs::path stats_path = fs::path(a.out_dir) / "instance_stats.tsv";
  track(stats_path);
  vat::save_instance_stats(stats, stats_path, stats_comments);

  if (testset) {
    vat::materialize_subset(*testset, hypotheses ? &*hypotheses : nullptr, subset,
                            a.out_dir, index_comments, &g_outputs);
  } else {
    const fs::path index_path = fs::path(a.out_dir) / "subset.index";
    track(index_path);
    vat::save_subset_index(subset, index_path, index_comments);
  }
}

void run_metaeval(const Args& a) {
  const auto prov = Echo("metaeval")
                        .arg("--refs", a.refs)
                        .arg("--sys-dir", a.sys_dir)
                        .arg("--scores", a.scores)
                        .arg("--human", a.human)
                        .arg("--subset", a.subset)
                        .arg("--agg", a.agg)
                        .arg("--out-dir", a.out_dir)
                        .provenance();

  const auto human = vat::load_human_scores(a.human);
  std::optional<vat::SubsetIndex> subset;
  if (!a.subset.empty()) subset = vat::load_subset_index(a.subset);

  std::vector<vat::MetaEvalReport> reports;
  if (a.agg == "mean") {
    if (a.scores.empty()) vat::fail("metaeval: --agg mean requires --scores");
    const auto matrix = vat::load_score_matrix(a.scores);
    reports.push_back(vat::meta_eval(
        vat::aggregate_mean(matrix, vat::full_subset(matrix.n_segments()), "original"),
        human));
    if (subset)
      reports.push_back(vat::meta_eval(vat::aggregate_mean(matrix, *subset, "vat"), human));
  } else {  // corpus-bleu
    if (a.refs.empty() || a.sys_dir.empty())
      vat::fail("metaeval: --agg corpus-bleu requires --refs and --sys-dir");
    const auto testset = vat::load_testset(
        a.refs, a.src.empty() ? std::nullopt : std::optional<fs::path>(a.src));
    const auto hypotheses = vat::load_hypotheses_dir(a.sys_dir, testset);
    reports.push_back(vat::meta_eval(
        vat::aggregate_corpus_bleu(testset, hypotheses,
                                   vat::full_subset(testset.size()), "original"),
        human));
    if (subset)
      reports.push_back(vat::meta_eval(
          vat::aggregate_corpus_bleu(testset, hypotheses, *subset, "vat"), human));
  }
  warn_dropped(reports.front());

  const fs::path out = fs::path(a.out_dir) / "metaeval_report.txt";
  track(out);
  vat::write_meta_eval_reports(reports, out, prov);
}

void run_sweep(const Args& a) {
  std::vector<double> lambdas = a.lambdas;
  if (lambdas.empty())
    for (int l = 0; l <= 90; l += 10) lambdas.push_back(l);

  auto echo = Echo("sweep").arg("--scores", a.scores).arg("--human", a.human);
  for (double l : lambdas) echo.arg("--lambda", fmt_g(l));
  const auto prov = echo.arg("--out-dir", a.out_dir).provenance();

  const auto matrix = vat::load_score_matrix(a.scores);
  const auto human = vat::load_human_scores(a.human);
  const auto stats = vat::instance_stats(matrix);
  const auto subsets = vat::sweep_lambda(stats, lambdas);

  std::string summary;
  for (const auto& c : prov) summary += "# " + c + "\n";
  summary +=
      "lambda\tkept\tpearson\tkendall_tau_b\tspearman\tabs_pearson\tabs_kendall_tau_b\tabs_spearman\n";

  bool warned = false;
  for (const auto& [lambda, subset] : subsets) {
    const auto report = vat::meta_eval(
        vat::aggregate_mean(matrix, subset, "lambda" + fmt_g(lambda)), human);
    if (!warned) {
      warn_dropped(report);
      warned = true;
    }

    std::vector<std::string> comments = prov;
    comments.push_back("lambda=" + fmt_g(lambda));
    const fs::path report_path =
        fs::path(a.out_dir) / ("sweep_lambda" + fmt_g(lambda) + ".txt");
    track(report_path);
    vat::write_meta_eval_reports({&report, 1}, report_path, comments);

    summary += fmt_g(lambda);
    summary += '\t' + std::to_string(subset.kept.size());
    summary += '\t' + vat::detail::format_fixed(report.pearson_r, 6);
    summary += '\t' + vat::detail::format_fixed(report.kendall_tau_b, 6);
    summary += '\t' + vat::detail::format_fixed(report.spearman_rho, 6);
    summary += '\t' + vat::detail::format_fixed(std::fabs(report.pearson_r), 6);
    summary += '\t' + vat::detail::format_fixed(std::fabs(report.kendall_tau_b), 6);
    summary += '\t' + vat::detail::format_fixed(std::fabs(report.spearman_rho), 6);
    summary += '\n';
  }

  const fs::path summary_path = fs::path(a.out_dir) / "sweep_summary.tsv";
  track(summary_path);
  vat::detail::write_file(summary_path, summary);
}

void run_analyze(const Args& a) {
  const auto prov = Echo("analyze")
                        .arg("--refs", a.refs)
                        .arg("--subset", a.subset)
                        .arg("--scores", a.scores)
                        .arg("--bins", a.scores.empty() ? "" : std::to_string(a.bins))
                        .arg("--freq-table", a.freq_table)
                        .arg("--pos-file", a.pos_file)
                        .arg("--paraphrased", a.paraphrased)
                        .arg("--edit-unit", a.paraphrased.empty() ? "" : a.edit_unit)
                        .arg("--out-dir", a.out_dir)
                        .provenance();

  const auto testset = vat::load_testset(a.refs);
  const auto subset = vat::load_subset_index(a.subset);
  const fs::path out_dir(a.out_dir);

  {
    const fs::path path = out_dir / "length_constitution.txt";
    track(path);
    vat::write_constitution_report(vat::length_constitution(testset, subset), path, prov);
  }
  if (!a.freq_table.empty()) {
    const auto table = vat::load_frequency_table(a.freq_table);
    std::vector<std::string> comments = prov;
    comments.push_back(
        "percentile base: vocabulary types (count-ascending); unseen words count as Rare");
    const fs::path path = out_dir / "frequency_constitution.txt";
    track(path);
    vat::write_constitution_report(vat::frequency_constitution(testset, subset, table),
                                   path, comments);
  }
  if (!a.pos_file.empty()) {
    const auto tagged = vat::load_tagged_corpus(a.pos_file);
    const fs::path path = out_dir / "pos_constitution.txt";
    track(path);
    vat::write_constitution_report(vat::pos_constitution(tagged, subset), path, prov);
  }
  if (!a.paraphrased.empty()) {
    const auto paraphrased = vat::load_testset(a.paraphrased);
    const auto unit =
        a.edit_unit == "char" ? vat::EditUnit::kChar : vat::EditUnit::kToken;
    const fs::path path = out_dir / "edit_distance.txt";
    track(path);
    vat::write_edit_distance_report(
        vat::edit_distance_report(testset.references, paraphrased.references, subset, unit),
        path, prov);
  }
  if (!a.scores.empty()) {
    const auto matrix = vat::load_score_matrix(a.scores);
    const auto stats = vat::instance_stats(matrix);
    const fs::path path = out_dir / "score_histogram.txt";
    track(path);
    vat::write_histogram(vat::score_histogram(stats, subset, a.bins), path, prov);
  }
}

void run_robustness(const Args& a) {
  const auto prov = Echo("robustness")
                        .arg("--scores", a.scores)
                        .arg("--human", a.human)
                        .arg("--lambda", fmt_g(a.lambda))
                        .arg("--seed", std::to_string(a.seed))
                        .arg("--out-dir", a.out_dir)
                        .provenance();

  const auto matrix = vat::load_score_matrix(a.scores);
  const auto human = vat::load_human_scores(a.human);
  vat::FilterConfig cfg;
  cfg.lambda_percent = a.lambda;
  const auto result = vat::robustness_report(matrix, human, a.seed, cfg);
  warn_dropped(result.original);

  std::vector<std::string> comments = prov;
  comments.push_back("seed=" + std::to_string(a.seed));
  comments.push_back("lambda=" + fmt_g(a.lambda));
  std::string half_a = "filter_half=";
  for (const auto& name : result.split.half_a) half_a += " " + name;
  std::string half_b = "heldout_half=";
  for (const auto& name : result.split.half_b) half_b += " " + name;
  comments.push_back(half_a);
  comments.push_back(half_b);

  const std::vector<vat::MetaEvalReport> reports = {result.original, result.filtered};
  const fs::path out = fs::path(a.out_dir) / "robustness_report.txt";
  track(out);
  vat::write_meta_eval_reports(reports, out, comments);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"variance-aware MT test set toolkit"};
  app.require_subcommand(1);
  Args a;

  auto* score = app.add_subcommand(
      "score", "Score hypotheses against references into a score matrix TSV");
  score->add_option("--refs", a.refs, "reference file, one segment per line")->required();
  score->add_option("--src", a.src, "source file (alignment check only)");
  score->add_option("--sys-dir", a.sys_dir, "directory of system hypothesis files");
  score->add_option("--scores", a.scores, "external score matrix (with --metric file)");
  score->add_option("--metric", a.metric, "bleu: native sentence BLEU; file: ingest --scores")
      ->check(CLI::IsMember({"bleu", "file"}));
  score->add_option("--out-dir", a.out_dir, "output directory")->required();

  auto* filter = app.add_subcommand(
      "filter", "Keep the segments with the highest cross-system score variance");
  filter->add_option("--scores", a.scores, "score matrix TSV (preferred filtering input)");
  filter->add_option("--refs", a.refs, "reference file (enables materialized output)");
  filter->add_option("--src", a.src, "source file");
  filter->add_option("--sys-dir", a.sys_dir, "directory of system hypothesis files");
  filter->add_option("--lambda", a.lambda, "percentage of segments to filter out")
      ->check(CLI::Range(0.0, 100.0));
  filter->add_option("--out-dir", a.out_dir, "output directory")->required();

  auto* metaeval = app.add_subcommand(
      "metaeval", "Correlate system-level metric scores with human ratings");
  metaeval->add_option("--scores", a.scores, "score matrix TSV (--agg mean)");
  metaeval->add_option("--refs", a.refs, "reference file (--agg corpus-bleu)");
  metaeval->add_option("--src", a.src, "source file");
  metaeval->add_option("--sys-dir", a.sys_dir, "hypothesis directory (--agg corpus-bleu)");
  metaeval->add_option("--human", a.human, "human ratings TSV")->required();
  metaeval->add_option("--subset", a.subset, "subset index file for the filtered block");
  metaeval->add_option("--agg", a.agg, "system-level aggregation")
      ->check(CLI::IsMember({"mean", "corpus-bleu"}));
  metaeval->add_option("--out-dir", a.out_dir, "output directory")->required();

  auto* sweep = app.add_subcommand(
      "sweep", "Meta-evaluate a range of filtering percentages");
  sweep->add_option("--scores", a.scores, "score matrix TSV")->required();
  sweep->add_option("--human", a.human, "human ratings TSV")->required();
  sweep->add_option("--lambda", a.lambdas,
                    "lambda values (repeatable; default 0 10 ... 90)")
      ->check(CLI::Range(0.0, 100.0));
  sweep->add_option("--out-dir", a.out_dir, "output directory")->required();

  auto* analyze = app.add_subcommand(
      "analyze", "Constitution, edit-distance and score-histogram reports");
  analyze->add_option("--refs", a.refs, "reference file")->required();
  analyze->add_option("--subset", a.subset, "subset index file")->required();
  analyze->add_option("--scores", a.scores, "score matrix TSV (enables histogram)");
  analyze->add_option("--bins", a.bins, "histogram bin count")->check(CLI::Range(2, 4096));
  analyze->add_option("--freq-table", a.freq_table, "word<TAB>count frequency table");
  analyze->add_option("--pos-file", a.pos_file, "token/TAG corpus aligned to --refs");
  analyze->add_option("--paraphrased", a.paraphrased,
                      "paraphrased reference file (enables edit-distance report)");
  analyze->add_option("--edit-unit", a.edit_unit, "edit distance unit")
      ->check(CLI::IsMember({"token", "char"}));
  analyze->add_option("--out-dir", a.out_dir, "output directory")->required();

  auto* robustness = app.add_subcommand(
      "robustness", "Filter on half the systems, evaluate the held-out half");
  robustness->add_option("--scores", a.scores, "score matrix TSV")->required();
  robustness->add_option("--human", a.human, "human ratings TSV")->required();
  robustness->add_option("--lambda", a.lambda, "percentage of segments to filter out")
      ->check(CLI::Range(0.0, 100.0));
  robustness->add_option("--seed", a.seed, "seed for the system split");
  robustness->add_option("--out-dir", a.out_dir, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (score->parsed()) run_score(a);
    if (filter->parsed()) run_filter(a);
    if (metaeval->parsed()) run_metaeval(a);
    if (sweep->parsed()) run_sweep(a);
    if (analyze->parsed()) run_analyze(a);
    if (robustness->parsed()) run_robustness(a);
  } catch (const std::exception& e) {
    discard_outputs();
    std::cerr << "vatkit: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

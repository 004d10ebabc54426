#pragma once

// Test-set, hypothesis, score and index containers plus their file formats.
//
// All text formats are UTF-8 with LF line endings:
//   segment files   one segment per line, aligned by line number
//   score matrix    TSV, header "segment_id<TAB><system>...", 6-decimal scores
//   human scores    TSV "system<TAB>rating", no header
//   subset index    "#parent_size=N" first, then kept ids ascending, one per line
//   tagged corpus   space-separated "token/TAG" entries, aligned by line
// Lines starting with '#' are comments in the TSV/index formats (never in
// segment files, whose lines are payload bytes).

#include <algorithm>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vat/detail/io.hpp"
#include "vat/detail/strings.hpp"
#include "vat/detail/utf8.hpp"
#include "vat/error.hpp"

namespace vat {

// ---------------------------------------------------------------------------
// Types

struct TestSet {
  std::vector<std::size_t> ids;          // always 0..N-1
  std::vector<std::string> references;   // N segments
  std::vector<std::string> sources;      // empty or N segments
  std::string direction;                 // informational tag, e.g. "zh-en"

  std::size_t size() const { return references.size(); }
  bool has_sources() const { return !sources.empty(); }
};

struct HypothesisSet {
  std::vector<std::string> system_names;              // sorted ascending
  std::vector<std::vector<std::string>> hypotheses;   // [system][segment]

  std::size_t n_systems() const { return system_names.size(); }
  std::size_t n_segments() const {
    return hypotheses.empty() ? 0 : hypotheses.front().size();
  }
};

struct ScoreMatrix {
  std::string metric_name;
  std::vector<std::string> system_names;     // column order of `scores`
  std::vector<std::size_t> segment_ids;      // 0..N-1, row order of `scores`
  std::vector<std::vector<double>> scores;   // [segment][system], finite

  std::size_t n_segments() const { return segment_ids.size(); }
  std::size_t n_systems() const { return system_names.size(); }
};

struct HumanScores {
  std::vector<std::string> system_names;  // unique, file order
  std::vector<double> ratings;

  const double* find(std::string_view name) const {
    for (std::size_t i = 0; i < system_names.size(); ++i)
      if (system_names[i] == name) return &ratings[i];
    return nullptr;
  }
};

struct SubsetIndex {
  std::size_t parent_size = 0;
  std::vector<std::size_t> kept;  // strictly increasing, each < parent_size

  bool operator==(const SubsetIndex&) const = default;
};

// One sentence as (token, tag) pairs; sentence order mirrors the reference file.
struct TaggedCorpus {
  std::vector<std::vector<std::pair<std::string, std::string>>> sentences;

  std::size_t size() const { return sentences.size(); }
};

// ---------------------------------------------------------------------------
// Validation

inline void validate(const SubsetIndex& subset) {
  if (subset.kept.empty()) fail("subset index: empty subset");
  for (std::size_t i = 0; i < subset.kept.size(); ++i) {
    if (subset.kept[i] >= subset.parent_size)
      fail("subset index: id " + std::to_string(subset.kept[i]) +
           " out of range for parent_size " + std::to_string(subset.parent_size));
    if (i > 0 && subset.kept[i - 1] >= subset.kept[i])
      fail("subset index: ids must be strictly increasing");
  }
}

inline void validate(const ScoreMatrix& matrix) {
  if (matrix.system_names.empty()) fail("score matrix: no systems");
  if (matrix.segment_ids.empty()) fail("score matrix: no segments");
  if (matrix.scores.size() != matrix.segment_ids.size())
    fail("score matrix: row count mismatch");
  for (std::size_t r = 0; r < matrix.scores.size(); ++r) {
    if (matrix.segment_ids[r] != r)
      fail("score matrix: segment ids must be 0..N-1 in order");
    if (matrix.scores[r].size() != matrix.system_names.size())
      fail("score matrix: row " + std::to_string(r) + " has wrong width");
    for (double v : matrix.scores[r])
      if (!std::isfinite(v)) fail("score matrix: non-finite score in row " + std::to_string(r));
  }
}

// ---------------------------------------------------------------------------
// Segment files

namespace detail {

inline std::vector<std::string> load_segments(const std::filesystem::path& path) {
  const std::string content = read_file(path);
  const auto lines = split_lines(content, path.string());
  std::vector<std::string> segments;
  segments.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (!valid_utf8(lines[i]))
      fail(path.string() + ":" + std::to_string(i + 1) + ": invalid UTF-8");
    segments.emplace_back(lines[i]);
  }
  return segments;
}

inline void save_segments(std::span<const std::string> segments,
                          const std::filesystem::path& path) {
  std::string content;
  for (const auto& s : segments) {
    content += s;
    content += '\n';
  }
  write_file(path, content);
}

}  // namespace detail

inline TestSet load_testset(const std::filesystem::path& ref_path,
                            const std::optional<std::filesystem::path>& src_path = {},
                            std::string direction = {}) {
  TestSet ts;
  ts.references = detail::load_segments(ref_path);
  if (ts.references.empty()) fail(ref_path.string() + ": empty test set");
  if (src_path) {
    ts.sources = detail::load_segments(*src_path);
    if (ts.sources.size() != ts.references.size())
      fail("source/reference length mismatch: " + std::to_string(ts.sources.size()) +
           " vs " + std::to_string(ts.references.size()));
  }
  ts.ids.resize(ts.references.size());
  for (std::size_t i = 0; i < ts.ids.size(); ++i) ts.ids[i] = i;
  ts.direction = std::move(direction);
  return ts;
}

// Loads one hypothesis file per system.  System name = file stem; systems are
// kept sorted by name so downstream results never depend on directory order.
inline HypothesisSet load_hypotheses(
    const std::vector<std::pair<std::string, std::filesystem::path>>& files,
    const TestSet& testset) {
  if (files.empty()) fail("no hypothesis files given");
  std::vector<std::pair<std::string, std::filesystem::path>> sorted = files;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i - 1].first == sorted[i].first)
      fail("duplicate system name '" + sorted[i].first + "'");

  HypothesisSet hs;
  for (const auto& [name, path] : sorted) {
    auto segments = detail::load_segments(path);
    if (segments.size() != testset.size())
      fail("system '" + name + "' (" + path.string() + "): " +
           std::to_string(segments.size()) + " segments, expected " +
           std::to_string(testset.size()));
    hs.system_names.push_back(name);
    hs.hypotheses.push_back(std::move(segments));
  }
  return hs;
}

inline HypothesisSet load_hypotheses_dir(const std::filesystem::path& dir,
                                         const TestSet& testset) {
  if (!std::filesystem::is_directory(dir)) fail(dir.string() + " is not a directory");
  std::vector<std::pair<std::string, std::filesystem::path>> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    files.emplace_back(entry.path().stem().string(), entry.path());
  }
  if (files.empty()) fail(dir.string() + ": no hypothesis files");
  return load_hypotheses(files, testset);
}

// ---------------------------------------------------------------------------
// Score matrix TSV

inline ScoreMatrix load_score_matrix(const std::filesystem::path& path) {
  const std::string content = detail::read_file(path);
  const auto lines = detail::split_lines(content, path.string());

  ScoreMatrix m;
  m.metric_name = "unknown";
  bool header_seen = false;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::string origin = path.string() + ":" + std::to_string(li + 1);
    std::string_view line = lines[li];
    if (line.empty()) continue;
    if (detail::is_comment_line(line)) {
      // "# metric=NAME" records which metric produced the matrix.
      constexpr std::string_view kTag = "# metric=";
      if (line.substr(0, kTag.size()) == kTag && line.size() > kTag.size())
        m.metric_name = std::string(line.substr(kTag.size()));
      continue;
    }
    const auto cells = detail::split(line, '\t');
    if (!header_seen) {
      if (cells.size() < 2 || cells[0] != "segment_id")
        fail(origin + ": expected header 'segment_id<TAB><system>...'");
      for (std::size_t c = 1; c < cells.size(); ++c) {
        if (cells[c].empty()) fail(origin + ": empty system name");
        m.system_names.emplace_back(cells[c]);
      }
      header_seen = true;
      continue;
    }
    if (cells.size() != m.system_names.size() + 1)
      fail(origin + ": expected " + std::to_string(m.system_names.size() + 1) +
           " columns, found " + std::to_string(cells.size()));
    const std::size_t data_row = m.segment_ids.size() + 1;  // 1-based, header excluded
    m.segment_ids.push_back(detail::parse_index(cells[0], origin));
    std::vector<double> row;
    row.reserve(m.system_names.size());
    for (std::size_t c = 1; c < cells.size(); ++c)
      row.push_back(detail::parse_double(
          cells[c], origin + " (row " + std::to_string(data_row) + ", col " +
                        std::to_string(c) + ")"));
    m.scores.push_back(std::move(row));
  }
  if (!header_seen) fail(path.string() + ": missing header");
  validate(m);
  return m;
}

inline void save_score_matrix(const ScoreMatrix& matrix,
                              const std::filesystem::path& path,
                              std::span<const std::string> comments = {}) {
  validate(matrix);
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  out += "# metric=" + matrix.metric_name + "\n";
  out += "segment_id";
  for (const auto& name : matrix.system_names) {
    out += '\t';
    out += name;
  }
  out += '\n';
  for (std::size_t r = 0; r < matrix.n_segments(); ++r) {
    out += std::to_string(matrix.segment_ids[r]);
    for (double v : matrix.scores[r]) {
      out += '\t';
      out += detail::format_fixed(v, 6);
    }
    out += '\n';
  }
  detail::write_file(path, out);
}

// ---------------------------------------------------------------------------
// Human scores TSV

inline HumanScores load_human_scores(const std::filesystem::path& path) {
  const std::string content = detail::read_file(path);
  const auto lines = detail::split_lines(content, path.string());
  HumanScores hs;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    std::string_view line = lines[li];
    if (line.empty() || detail::is_comment_line(line)) continue;
    const std::string origin = path.string() + ":" + std::to_string(li + 1);
    const auto cells = detail::split(line, '\t');
    if (cells.size() != 2) fail(origin + ": expected 'system<TAB>rating'");
    if (cells[0].empty()) fail(origin + ": empty system name");
    for (const auto& existing : hs.system_names)
      if (existing == cells[0]) fail(origin + ": duplicate system '" + std::string(cells[0]) + "'");
    hs.system_names.emplace_back(cells[0]);
    hs.ratings.push_back(detail::parse_double(cells[1], origin));
  }
  if (hs.system_names.empty()) fail(path.string() + ": no ratings");
  return hs;
}

// ---------------------------------------------------------------------------
// Subset index

inline SubsetIndex load_subset_index(const std::filesystem::path& path) {
  const std::string content = detail::read_file(path);
  const auto lines = detail::split_lines(content, path.string());
  if (lines.empty()) fail(path.string() + ": empty index file");

  constexpr std::string_view kHeader = "#parent_size=";
  if (lines[0].substr(0, kHeader.size()) != kHeader)
    fail(path.string() + ":1: expected '#parent_size=N'");
  SubsetIndex subset;
  subset.parent_size =
      detail::parse_index(lines[0].substr(kHeader.size()), path.string() + ":1");

  for (std::size_t li = 1; li < lines.size(); ++li) {
    std::string_view line = lines[li];
    if (line.empty() || detail::is_comment_line(line)) continue;
    subset.kept.push_back(
        detail::parse_index(line, path.string() + ":" + std::to_string(li + 1)));
  }
  validate(subset);
  return subset;
}

inline void save_subset_index(const SubsetIndex& subset,
                              const std::filesystem::path& path,
                              std::span<const std::string> comments = {}) {
  validate(subset);
  std::string out = "#parent_size=" + std::to_string(subset.parent_size) + "\n";
  for (const auto& c : comments) out += "# " + c + "\n";
  for (std::size_t id : subset.kept) out += std::to_string(id) + "\n";
  detail::write_file(path, out);
}

inline SubsetIndex full_subset(std::size_t parent_size) {
  SubsetIndex subset;
  subset.parent_size = parent_size;
  subset.kept.resize(parent_size);
  for (std::size_t i = 0; i < parent_size; ++i) subset.kept[i] = i;
  validate(subset);
  return subset;
}

// ---------------------------------------------------------------------------
// Tagged corpus ("token/TAG token/TAG ...")

inline TaggedCorpus load_tagged_corpus(const std::filesystem::path& path) {
  const std::string content = detail::read_file(path);
  const auto lines = detail::split_lines(content, path.string());
  TaggedCorpus corpus;
  corpus.sentences.reserve(lines.size());
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::string origin = path.string() + ":" + std::to_string(li + 1);
    if (!detail::valid_utf8(lines[li])) fail(origin + ": invalid UTF-8");
    std::vector<std::pair<std::string, std::string>> sent;
    for (std::string_view item : detail::split(lines[li], ' ')) {
      if (item.empty()) continue;  // tolerate doubled spaces
      // The tag starts after the LAST '/', so tokens may contain slashes.
      const std::size_t pos = item.rfind('/');
      if (pos == std::string_view::npos || pos + 1 == item.size())
        fail(origin + ": malformed entry '" + std::string(item) + "' (want token/TAG)");
      sent.emplace_back(std::string(item.substr(0, pos)),
                        std::string(item.substr(pos + 1)));
    }
    corpus.sentences.push_back(std::move(sent));
  }
  if (corpus.sentences.empty()) fail(path.string() + ": empty tagged corpus");
  return corpus;
}

// ---------------------------------------------------------------------------
// Subset materialization

// Writes the filtered test set (and hypotheses, if given) under out_dir:
//   references.txt, sources.txt, systems/<name>.txt, subset.index
// Segment files carry no comments: their bytes are the payload, so filtering
// with a full subset reproduces the canonical input files exactly.
// `intent_log`, when given, records every path before it is written so a
// caller can clean up after a failure that leaves files half-materialized.
inline std::vector<std::filesystem::path> materialize_subset(
    const TestSet& testset, const HypothesisSet* hypotheses,
    const SubsetIndex& subset, const std::filesystem::path& out_dir,
    std::span<const std::string> index_comments = {},
    std::vector<std::filesystem::path>* intent_log = nullptr) {
  validate(subset);
  if (subset.parent_size != testset.size())
    fail("subset parent_size " + std::to_string(subset.parent_size) +
         " does not match test set size " + std::to_string(testset.size()));
  if (hypotheses && hypotheses->n_segments() != testset.size())
    fail("hypothesis set does not match test set size");

  const auto select = [&subset](const std::vector<std::string>& all) {
    std::vector<std::string> out;
    out.reserve(subset.kept.size());
    for (std::size_t id : subset.kept) out.push_back(all[id]);
    return out;
  };

  std::vector<std::filesystem::path> written;
  const auto emit = [&written, intent_log](std::span<const std::string> segments,
                                           const std::filesystem::path& path) {
    if (intent_log) intent_log->push_back(path);
    detail::save_segments(segments, path);
    written.push_back(path);
  };

  emit(select(testset.references), out_dir / "references.txt");
  if (testset.has_sources()) emit(select(testset.sources), out_dir / "sources.txt");
  if (hypotheses)
    for (std::size_t s = 0; s < hypotheses->n_systems(); ++s)
      emit(select(hypotheses->hypotheses[s]),
           out_dir / "systems" / (hypotheses->system_names[s] + ".txt"));
  const auto index_path = out_dir / "subset.index";
  if (intent_log) intent_log->push_back(index_path);
  save_subset_index(subset, index_path, index_comments);
  written.push_back(index_path);
  return written;
}

}  // namespace vat

#ifndef COO_IO_HPP
#define COO_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coo/decoders.hpp"
#include "coo/eval.hpp"
#include "coo/marginals.hpp"
#include "coo/reachability.hpp"

namespace coo {

inline constexpr const char* kToolVersion = "0.1.0";

// One score vector per line, whitespace-separated decimals.  A gap-score
// file is the same format with n-1 values per sentence.  Lines starting
// with '#' are artifact headers and are skipped.  A blank line or a
// non-numeric token is an error reported with line (and column) numbers.
std::vector<ScoreVector> parse_scores_text(std::string_view text);
std::vector<ScoreVector> read_scores_file(const std::string& path);

// Canonical trees, one per line, '#' lines skipped.
std::vector<BinaryTree> parse_predictions_text(std::string_view text);
std::vector<BinaryTree> read_predictions(const std::string& path);

struct CorpusSentence {
  std::vector<std::string> tokens;  // after punctuation stripping
  GoldTree gold;                    // stripped, positions re-indexed
};

struct Corpus {
  std::vector<CorpusSentence> sentences;
  std::string source;
  std::size_t dropped_all_punct = 0;  // sentences with no tokens left
};

// S-expression treebank; trees may span lines (bracket balancing decides
// where one ends).  Terminals whose tag is in strip_punct_tags are
// removed, re-indexing the remaining tokens.
Corpus parse_treebank_text(std::string_view text,
                           const std::set<std::string>& strip_punct_tags,
                           std::string_view source = "<string>");
Corpus read_treebank(const std::string& path,
                     const std::set<std::string>& strip_punct_tags);

// WSJ10-style corpus filter: keep sentences with at most max_len tokens
// after stripping (no-op when max_len <= 0).  Paired predictions, when
// given, are filtered in lockstep.
void filter_corpus_by_length(Corpus& corpus, std::vector<BinaryTree>* paired_predictions,
                             int max_len);

// Span score tables as JSON {"i,j": score, ...}; the table must cover
// the full upper triangle of the inferred n.
SpanScoreTable parse_span_table_json(std::string_view text);
SpanScoreTable read_span_table_json(const std::string& path);

// Everything needed to reproduce a run; serialized into every artifact.
struct RunConfig {
  std::uint64_t seed = 1;
  Variant variant = Variant::R;
  TieRule tie = TieRule::leftmost;
  EvalConfig eval;
  std::string format = "csv";  // csv | json | table
};

// JSON echo of the config (with tool version and the subcommand name).
std::string config_json(const RunConfig& config, std::string_view command);

// `# cooparse <version> <command> config=<json>`: the header line carried
// by line-oriented artifacts (readers here skip '#' lines).
std::string config_comment_line(const RunConfig& config, std::string_view command);

// CSV emitters.  ',' delimiter, '.' decimal point, no locale dependence;
// probabilities and ratios are decimal renderings of exact rationals.
void write_reachability_csv(std::ostream& out, const std::vector<ReachabilityRow>& rows,
                            const RunConfig& config);
void write_marginals_csv(std::ostream& out, const MarginalTable& table,
                         const RunConfig& config);

// JSON artifacts (byte-stable for fixed inputs).
std::string f1_result_json(const F1Result& result, const RunConfig& config,
                           std::size_t num_sentences, bool include_per_sentence);
std::string mc_f1_json(const McF1Result& result, const RunConfig& config,
                       TreeDistribution dist, std::uint64_t samples_per_sentence,
                       int replicates);

// Human-readable tables for the same results.
std::string f1_result_table(const F1Result& result, std::size_t num_sentences);
std::string mc_f1_table(const McF1Result& result, TreeDistribution dist);

// Coverage report for `complete` (text, one key=value pair per line).
std::string completeness_text(const CompletenessReport& report, const RunConfig& config);

}  // namespace coo

#endif  // COO_IO_HPP

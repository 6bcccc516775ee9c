#ifndef COO_EVAL_HPP
#define COO_EVAL_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "coo/parser.hpp"
#include "coo/rng.hpp"
#include "coo/tree.hpp"

namespace coo {

// Tags whose terminals are dropped before evaluation.  Bracketing
// conventions vary across evaluation setups, so they are configurable
std::set<std::string> default_punctuation_tags();

struct EvalConfig {
  enum class Aggregation { macro_sentence_mean, micro_corpus };

  bool include_single_word_spans = false;
  bool include_whole_sentence_span = true;
  std::set<std::string> punctuation_tags = default_punctuation_tags();
  Aggregation aggregation = Aggregation::macro_sentence_mean;
};

const char* to_string(EvalConfig::Aggregation a);

// Under macro aggregation precision/recall/f1 are per-sentence means (the
// harmonic identity holds within each sentence); under micro they are
// corpus-level counts and f1 is the harmonic mean of the two.
struct F1Result {
  double precision = 1.0;
  double recall = 1.0;
  double f1 = 1.0;
  std::vector<double> per_sentence;  // per-sentence F1, corpus level only
};

// Span retrieval: P = |P&G|/|P|, R = |P&G|/|G|, F1 = 2PR/(P+R).
// Conventions: both sides empty is vacuous agreement (all three 1.0);
// exactly one side empty scores 0.
F1Result bracket_f1(const SpanSet& predicted, const SpanSet& gold);

// Per-sentence bracket F1 aggregated per config.  Gold trees are
// punctuation-stripped per config first; a pred/gold length mismatch
// throws with the sentence index.
F1Result corpus_f1(const std::vector<BinaryTree>& predicted,
                   const std::vector<GoldTree>& gold, const EvalConfig& config);

// Elementwise coo_parse; a bad line reports its line number.
std::vector<BinaryTree> decode_corpus(const std::vector<ScoreVector>& score_lines,
                                      Variant variant, TieRule tie);

// uniform_binary draws uniformly from all binary trees; right_skew and
// left_skew decode i.i.d. uniform scores with the R- and L-variant
// parser respectively.
enum class TreeDistribution { uniform_binary, left_skew, right_skew };

const char* to_string(TreeDistribution d);

BinaryTree sample_skew_tree(int n, TreeDistribution dist, Rng& rng);

struct McF1Result {
  double mean = 0.0;
  double sigma = 0.0;  // sample standard deviation across replicates (ddof 1)
  std::vector<double> replicate_scores;
};

// Monte Carlo expected corpus F1 under a tree distribution: per
// replicate, draw samples_per_sentence trees for every sentence and
// average the per-sample corpus score.  Substreams derive from
// (seed, replicate, sentence), so the result is identical across thread
// counts.  OpenMP-parallel over sentences.
McF1Result expected_f1_mc(const std::vector<GoldTree>& gold, TreeDistribution dist,
                          std::uint64_t samples_per_sentence, int replicates,
                          std::uint64_t seed, const EvalConfig& config);

// Serial reference: same substreams, but samples go through tree
// construction and spans() instead of the fused kernel.  Byte-identical
// results.
McF1Result expected_f1_mc_serial(const std::vector<GoldTree>& gold,
                                 TreeDistribution dist,
                                 std::uint64_t samples_per_sentence, int replicates,
                                 std::uint64_t seed, const EvalConfig& config);

}  // namespace coo

#endif  // COO_EVAL_HPP

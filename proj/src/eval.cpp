#include "coo/eval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace coo {

std::set<std::string> default_punctuation_tags() {
  return {"''", "``", ".", ",", ":", ";", "-LRB-", "-RRB-", "-NONE-"};
}

const char* to_string(EvalConfig::Aggregation a) {
  return a == EvalConfig::Aggregation::macro_sentence_mean ? "macro_sentence_mean"
                                                           : "micro_corpus";
}

const char* to_string(TreeDistribution d) {
  switch (d) {
    case TreeDistribution::uniform_binary: return "uniform_binary";
    case TreeDistribution::left_skew: return "left_skew";
    case TreeDistribution::right_skew: return "right_skew";
  }
  return "?";
}

namespace {

struct PRF {
  double precision;
  double recall;
  double f1;
};

PRF prf_from_counts(std::uint64_t match, std::uint64_t predicted, std::uint64_t gold) {
  if (predicted == 0 && gold == 0) return {1.0, 1.0, 1.0};  // vacuous agreement
  const double p = predicted == 0 ? 0.0 : static_cast<double>(match) / predicted;
  const double r = gold == 0 ? 0.0 : static_cast<double>(match) / gold;
  const double f = (p + r) == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
  return {p, r, f};
}

// Gold side of one sentence, precomputed for the sampling loops.
struct GoldSentence {
  int length = 0;
  std::size_t span_count = 0;
  std::vector<char> member;  // n*n membership matrix
  bool contains(int i, int j) const {
    return member[static_cast<std::size_t>(i - 1) * length + (j - 1)] != 0;
  }
};

GoldSentence make_gold_sentence(const GoldTree& gold, const EvalConfig& cfg) {
  GoldSentence out;
  out.length = gold_leaf_count(gold);
  const SpanSet set = spans(gold, cfg.include_single_word_spans, cfg.include_whole_sentence_span);
  out.span_count = set.size();
  out.member.assign(static_cast<std::size_t>(out.length) * out.length, 0);
  for (const Span& s : set) {
    out.member[static_cast<std::size_t>(s.start - 1) * out.length + (s.end - 1)] = 1;
  }
  return out;
}

GoldTree strip_for_eval(const GoldTree& gold, const EvalConfig& cfg, std::size_t index) {
  if (cfg.punctuation_tags.empty()) return gold;
  auto stripped = strip_terminals_by_tag(gold, cfg.punctuation_tags);
  if (!stripped) {
    throw std::runtime_error("corpus_f1: sentence " + std::to_string(index + 1) +
                             " has no tokens left after punctuation stripping");
  }
  return *stripped;
}

double mean(const std::vector<double>& xs) {
  double sum = 0.0;
  for (double x : xs) sum += x;
  return xs.empty() ? 0.0 : sum / static_cast<double>(xs.size());
}

double sample_stddev(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  const double m = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

}  // namespace

F1Result bracket_f1(const SpanSet& predicted, const SpanSet& gold) {
  std::uint64_t match = 0;
  for (const Span& s : predicted) match += gold.count(s);
  const PRF prf = prf_from_counts(match, predicted.size(), gold.size());
  return F1Result{prf.precision, prf.recall, prf.f1, {}};
}

F1Result corpus_f1(const std::vector<BinaryTree>& predicted,
                   const std::vector<GoldTree>& gold, const EvalConfig& config) {
  if (predicted.size() != gold.size()) {
    throw std::runtime_error("corpus_f1: " + std::to_string(predicted.size()) +
                             " predictions vs " + std::to_string(gold.size()) +
                             " gold trees");
  }
  std::vector<double> per_sentence;
  per_sentence.reserve(gold.size());
  std::vector<double> per_p(gold.size()), per_r(gold.size());
  std::uint64_t total_match = 0, total_pred = 0, total_gold = 0;
  for (std::size_t s = 0; s < gold.size(); ++s) {
    const GoldTree stripped = strip_for_eval(gold[s], config, s);
    const int gold_len = gold_leaf_count(stripped);
    if (predicted[s].leaf_count() != gold_len) {
      throw std::runtime_error("corpus_f1: sentence " + std::to_string(s + 1) +
                               ": predicted length " + std::to_string(predicted[s].leaf_count()) +
                               " vs gold length " + std::to_string(gold_len));
    }
    const SpanSet pred_spans = spans(predicted[s], config.include_single_word_spans,
                                     config.include_whole_sentence_span);
    const SpanSet gold_spans = spans(stripped, config.include_single_word_spans,
                                     config.include_whole_sentence_span);
    std::uint64_t match = 0;
    for (const Span& sp : pred_spans) match += gold_spans.count(sp);
    total_match += match;
    total_pred += pred_spans.size();
    total_gold += gold_spans.size();
    const PRF prf = prf_from_counts(match, pred_spans.size(), gold_spans.size());
    per_p[s] = prf.precision;
    per_r[s] = prf.recall;
    per_sentence.push_back(prf.f1);
  }

  F1Result result;
  result.per_sentence = per_sentence;
  if (config.aggregation == EvalConfig::Aggregation::micro_corpus) {
    const PRF prf = prf_from_counts(total_match, total_pred, total_gold);
    result.precision = prf.precision;
    result.recall = prf.recall;
    result.f1 = prf.f1;
  } else {
    result.precision = mean(per_p);
    result.recall = mean(per_r);
    result.f1 = mean(per_sentence);
  }
  return result;
}

std::vector<BinaryTree> decode_corpus(const std::vector<ScoreVector>& score_lines,
                                      Variant variant, TieRule tie) {
  std::vector<BinaryTree> out;
  out.reserve(score_lines.size());
  for (std::size_t line = 0; line < score_lines.size(); ++line) {
    try {
      out.push_back(coo_parse(score_lines[line], variant, tie));
    } catch (const std::exception& e) {
      throw std::runtime_error("decode_corpus: line " + std::to_string(line + 1) + ": " +
                               e.what());
    }
  }
  return out;
}

BinaryTree sample_skew_tree(int n, TreeDistribution dist, Rng& rng) {
  if (n < 1) throw std::invalid_argument("sample_skew_tree: n must be positive");
  if (dist == TreeDistribution::uniform_binary) return sample_uniform_tree(n, rng);
  std::vector<double> scores(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) scores[p] = rng.uniform();
  return coo_parse(scores, dist == TreeDistribution::right_skew ? Variant::R : Variant::L);
}

namespace {

// One (replicate, sentence) cell.  All sampling for a cell consumes only
// its own substream, so thread scheduling cannot change any value.
struct CellResult {
  double f1_sum = 0.0;
  std::vector<std::uint64_t> match, pred;  // indexed by sample
};

CellResult run_cell(const GoldSentence& gold, TreeDistribution dist,
                    const UniformTreeSampler& sampler, std::uint64_t samples, Rng rng,
                    const EvalConfig& cfg, bool fused) {
  CellResult cell;
  cell.match.assign(samples, 0);
  cell.pred.assign(samples, 0);
  const int n = gold.length;
  std::vector<double> scores(static_cast<std::size_t>(n));
  for (std::uint64_t k = 0; k < samples; ++k) {
    std::uint64_t match = 0, pred = 0;
    if (fused && dist != TreeDistribution::uniform_binary) {
      // Fused decode; only valid under the default filters (no single-word
      // spans, whole-sentence span kept), which the caller guarantees.
      for (int p = 0; p < n; ++p) scores[p] = rng.uniform();
      const Variant variant = dist == TreeDistribution::right_skew ? Variant::R : Variant::L;
      coo_parse_spans(scores, variant, TieRule::leftmost, [&](int i, int j) {
        if (i == j) return;
        ++pred;
        if (gold.contains(i, j)) ++match;
      });
    } else {
      const BinaryTree tree = dist == TreeDistribution::uniform_binary
                                  ? sampler.sample(n, rng)
                                  : sample_skew_tree(n, dist, rng);
      for (const Span& sp :
           spans(tree, cfg.include_single_word_spans, cfg.include_whole_sentence_span)) {
        ++pred;
        if (gold.contains(sp.start, sp.end)) ++match;
      }
    }
    cell.match[k] = match;
    cell.pred[k] = pred;
    const PRF prf = prf_from_counts(match, pred, gold.span_count);
    cell.f1_sum += prf.f1;
  }
  return cell;
}

McF1Result expected_f1_mc_impl(const std::vector<GoldTree>& gold, TreeDistribution dist,
                               std::uint64_t samples_per_sentence, int replicates,
                               std::uint64_t seed, const EvalConfig& config, bool parallel) {
  if (gold.empty()) throw std::invalid_argument("expected_f1_mc: empty gold corpus");
  if (samples_per_sentence == 0) {
    throw std::invalid_argument("expected_f1_mc: samples_per_sentence must be positive");
  }
  if (replicates < 1) throw std::invalid_argument("expected_f1_mc: replicates must be >= 1");

  // The fused kernel hard-codes the default span filters; anything else
  // takes the compositional path.
  const bool default_filters =
      !config.include_single_word_spans && config.include_whole_sentence_span;

  std::vector<GoldSentence> sentences;
  sentences.reserve(gold.size());
  int max_len = 1;
  for (std::size_t s = 0; s < gold.size(); ++s) {
    sentences.push_back(make_gold_sentence(strip_for_eval(gold[s], config, s), config));
    max_len = std::max(max_len, sentences.back().length);
  }
  const UniformTreeSampler sampler(max_len);
  const Rng root(seed);
  const std::size_t num_sentences = sentences.size();
  const std::uint64_t samples = samples_per_sentence;

  McF1Result result;
  for (int rep = 0; rep < replicates; ++rep) {
    std::vector<double> sentence_f1_sum(num_sentences, 0.0);
    std::vector<std::uint64_t> match_by_sample(samples, 0), pred_by_sample(samples, 0);
    std::uint64_t gold_total = 0;
    for (const GoldSentence& s : sentences) gold_total += s.span_count;

    auto run_sentence = [&](std::size_t s, std::vector<std::uint64_t>& m,
                            std::vector<std::uint64_t>& p) {
      const Rng rng = root.substream(static_cast<std::uint64_t>(rep),
                                     static_cast<std::uint64_t>(s));
      const CellResult cell = run_cell(sentences[s], dist, sampler, samples, rng, config,
                                       /*fused=*/parallel && default_filters);
      sentence_f1_sum[s] = cell.f1_sum;
      for (std::uint64_t k = 0; k < samples; ++k) {
        m[k] += cell.match[k];
        p[k] += cell.pred[k];
      }
    };

    if (!parallel) {
      for (std::size_t s = 0; s < num_sentences; ++s) {
        run_sentence(s, match_by_sample, pred_by_sample);
      }
    } else {
#ifdef _OPENMP
#pragma omp parallel
      {
        std::vector<std::uint64_t> m(samples, 0), p(samples, 0);
#pragma omp for schedule(dynamic)
        for (std::int64_t s = 0; s < static_cast<std::int64_t>(num_sentences); ++s) {
          run_sentence(static_cast<std::size_t>(s), m, p);
        }
#pragma omp critical
        for (std::uint64_t k = 0; k < samples; ++k) {
          match_by_sample[k] += m[k];
          pred_by_sample[k] += p[k];
        }
      }
#else
      for (std::size_t s = 0; s < num_sentences; ++s) {
        run_sentence(s, match_by_sample, pred_by_sample);
      }
#endif
    }

    double score = 0.0;
    if (config.aggregation == EvalConfig::Aggregation::macro_sentence_mean) {
      // Mean over samples of the macro mean equals the mean of
      // per-sentence sample means; reduce in sentence order.
      double total = 0.0;
      for (std::size_t s = 0; s < num_sentences; ++s) {
        total += sentence_f1_sum[s] / static_cast<double>(samples);
      }
      score = total / static_cast<double>(num_sentences);
    } else {
      double total = 0.0;
      for (std::uint64_t k = 0; k < samples; ++k) {
        const PRF prf = prf_from_counts(match_by_sample[k], pred_by_sample[k], gold_total);
        total += prf.f1;
      }
      score = total / static_cast<double>(samples);
    }
    result.replicate_scores.push_back(score);
  }

  result.mean = mean(result.replicate_scores);
  result.sigma = sample_stddev(result.replicate_scores);
  return result;
}

}  // namespace

McF1Result expected_f1_mc(const std::vector<GoldTree>& gold, TreeDistribution dist,
                          std::uint64_t samples_per_sentence, int replicates,
                          std::uint64_t seed, const EvalConfig& config) {
  return expected_f1_mc_impl(gold, dist, samples_per_sentence, replicates, seed, config,
                             /*parallel=*/true);
}

McF1Result expected_f1_mc_serial(const std::vector<GoldTree>& gold, TreeDistribution dist,
                                 std::uint64_t samples_per_sentence, int replicates,
                                 std::uint64_t seed, const EvalConfig& config) {
  return expected_f1_mc_impl(gold, dist, samples_per_sentence, replicates, seed, config,
                             /*parallel=*/false);
}

}  // namespace coo

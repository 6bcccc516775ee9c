// cooparse: greedy top-down decoding, coverage and bias analysis, and
// bracket-F1 evaluation for score-driven constituency parsers.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "coo/io.hpp"

namespace {

using namespace coo;

Variant parse_variant(const std::string& s) {
  if (s == "r" || s == "R") return Variant::R;
  if (s == "l" || s == "L") return Variant::L;
  throw CLI::ValidationError("--variant", "expected r or l");
}

TieRule parse_tie(const std::string& s) {
  if (s == "leftmost") return TieRule::leftmost;
  if (s == "rightmost") return TieRule::rightmost;
  throw CLI::ValidationError("--tie", "expected leftmost or rightmost");
}

void write_artifact(const std::optional<std::string>& out_path, const std::string& content) {
  if (!out_path) {
    std::cout << content;
    return;
  }
  std::ofstream out(*out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + *out_path);
  out << content;
}

struct EvalFlags {
  bool include_single = false;
  bool exclude_whole = false;
  bool keep_punct = false;
  std::vector<std::string> punct_tags;
  std::string aggregation = "macro";

  EvalConfig to_config() const {
    EvalConfig cfg;
    cfg.include_single_word_spans = include_single;
    cfg.include_whole_sentence_span = !exclude_whole;
    if (keep_punct) {
      cfg.punctuation_tags.clear();
    } else if (!punct_tags.empty()) {
      cfg.punctuation_tags = std::set<std::string>(punct_tags.begin(), punct_tags.end());
    }
    if (aggregation == "macro") {
      cfg.aggregation = EvalConfig::Aggregation::macro_sentence_mean;
    } else if (aggregation == "micro") {
      cfg.aggregation = EvalConfig::Aggregation::micro_corpus;
    } else {
      throw CLI::ValidationError("--aggregation", "expected macro or micro");
    }
    return cfg;
  }
};

void add_eval_flags(CLI::App* cmd, EvalFlags& flags) {
  cmd->add_flag("--include-single-word-spans", flags.include_single,
                "count single-word spans (default: off)");
  cmd->add_flag("--exclude-whole-sentence-span", flags.exclude_whole,
                "drop the whole-sentence span (default: kept)");
  cmd->add_flag("--keep-punct", flags.keep_punct, "do not strip punctuation terminals");
  cmd->add_option("--punct-tags", flags.punct_tags,
                  "POS tags to strip (default: standard treebank punctuation set)");
  cmd->add_option("--aggregation", flags.aggregation, "macro (sentence mean) or micro (corpus)")
      ->default_val("macro");
}

int run(int argc, char** argv) {
  CLI::App app{"greedy top-down parser analysis toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  // parse
  auto* parse_cmd = app.add_subcommand("parse", "decode score vectors into bracketed trees");
  std::string scores_path, variant_str = "r", tie_str = "leftmost";
  std::optional<std::string> out_path;
  parse_cmd->add_option("--scores", scores_path, "score file, one sentence per line")->required();
  parse_cmd->add_option("--variant", variant_str, "r or l")->default_val("r");
  parse_cmd->add_option("--tie", tie_str, "leftmost or rightmost")->default_val("leftmost");
  parse_cmd->add_option("--out", out_path, "output path (default stdout)");

  // reach
  auto* reach_cmd = app.add_subcommand("reach", "coverage report as CSV");
  int max_n = 20, enum_max = 10;
  reach_cmd->add_option("--max-n", max_n, "largest sentence length")->default_val(20);
  reach_cmd->add_option("--enum-max", enum_max, "largest n for the enumerated column")
      ->default_val(10);
  reach_cmd->add_option("--out", out_path, "output path (default stdout)");

  // check
  auto* check_cmd = app.add_subcommand("check", "is a tree recoverable, and by which scores");
  std::string tree_text;
  check_cmd->add_option("--tree", tree_text, "tree in canonical bracket form")->required();
  check_cmd->add_option("--variant", variant_str, "r or l")->default_val("r");

  // marginals
  auto* marg_cmd = app.add_subcommand("marginals", "span-constituency probabilities as CSV");
  int marg_n = 8;
  std::string mode = "uniform";
  std::uint64_t samples = 100000, seed = 1;
  marg_cmd->add_option("--n", marg_n, "sentence length")->required();
  marg_cmd->add_option("--mode", mode, "uniform, coo-exact or coo-mc")->required();
  marg_cmd->add_option("--variant", variant_str, "r or l")->default_val("r");
  marg_cmd->add_option("--samples", samples, "Monte Carlo samples")->default_val(100000);
  marg_cmd->add_option("--seed", seed, "random seed")->default_val(1);
  marg_cmd->add_option("--out", out_path, "output path (default stdout)");

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "bracket F1 of predictions against a treebank");
  std::string pred_path, gold_path, format = "json";
  EvalFlags eval_flags;
  int eval_max_len = 0;
  bool per_sentence = false;
  eval_cmd->add_option("--pred", pred_path, "predicted trees, canonical form")->required();
  eval_cmd->add_option("--gold", gold_path, "gold treebank (S-expressions)")->required();
  add_eval_flags(eval_cmd, eval_flags);
  eval_cmd->add_option("--max-len", eval_max_len,
                       "keep sentences of at most this many tokens after stripping");
  eval_cmd->add_flag("--per-sentence", per_sentence, "include per-sentence F1 in the JSON");
  eval_cmd->add_option("--format", format, "json or table")->default_val("json");
  eval_cmd->add_option("--out", out_path, "output path (default stdout)");

  // mc-f1
  auto* mc_cmd = app.add_subcommand("mc-f1", "expected F1 under a tree distribution");
  std::string dist_str = "uniform";
  std::uint64_t mc_samples = 100;
  int replicates = 4, mc_max_len = 0;
  EvalFlags mc_flags;
  mc_cmd->add_option("--gold", gold_path, "gold treebank (S-expressions)")->required();
  mc_cmd->add_option("--dist", dist_str, "left, uniform or right")->required();
  mc_cmd->add_option("--samples", mc_samples, "samples per sentence")->default_val(100);
  mc_cmd->add_option("--replicates", replicates, "independent replicates")->default_val(4);
  mc_cmd->add_option("--seed", seed, "random seed")->default_val(1);
  add_eval_flags(mc_cmd, mc_flags);
  mc_cmd->add_option("--max-len", mc_max_len,
                     "keep sentences of at most this many tokens after stripping");
  mc_cmd->add_option("--format", format, "json or table")->default_val("json");
  mc_cmd->add_option("--out", out_path, "output path (default stdout)");

  // complete
  auto* complete_cmd = app.add_subcommand("complete", "decoder coverage over all binary trees");
  std::string decoder_str;
  int complete_n = 5;
  complete_cmd->add_option("--decoder", decoder_str, "coo-r, coo-l, gap or span")->required();
  complete_cmd->add_option("--n", complete_n, "sentence length")->default_val(5);
  complete_cmd->add_option("--out", out_path, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  RunConfig config;
  config.seed = seed;

  if (parse_cmd->parsed()) {
    config.variant = parse_variant(variant_str);
    config.tie = parse_tie(tie_str);
    const auto scores = read_scores_file(scores_path);
    const auto trees = decode_corpus(scores, config.variant, config.tie);
    std::ostringstream out;
    out << config_comment_line(config, "parse") << "\n";
    for (const BinaryTree& tree : trees) out << to_bracket_string(tree) << "\n";
    write_artifact(out_path, out.str());
    return 0;
  }

  if (reach_cmd->parsed()) {
    const auto rows = reachability_report(max_n, enum_max);
    std::ostringstream out;
    write_reachability_csv(out, rows, config);
    write_artifact(out_path, out.str());
    return 0;
  }

  if (check_cmd->parsed()) {
    config.variant = parse_variant(variant_str);
    const BinaryTree tree = parse_canonical(tree_text);
    const char* tag = config.variant == Variant::R ? "R-variant" : "L-variant";
    if (!is_recoverable(tree, config.variant)) {
      std::cout << "unreachable (" << tag << ")\n";
      return 0;
    }
    std::cout << "reachable (" << tag << ")\n";
    if (const auto witness = witness_scores(tree, config.variant)) {
      std::cout << "witness:";
      for (const double s : *witness) std::cout << ' ' << static_cast<long long>(s);
      std::cout << "\n";
    }
    return 0;
  }

  if (marg_cmd->parsed()) {
    config.variant = parse_variant(variant_str);
    MarginalTable table = [&] {
      if (mode == "uniform") return uniform_tree_marginals(marg_n);
      if (mode == "coo-exact") return coo_marginals_exact(marg_n, config.variant);
      if (mode == "coo-mc") return coo_marginals_mc(marg_n, config.variant, samples, seed);
      throw CLI::ValidationError("--mode", "expected uniform, coo-exact or coo-mc");
    }();
    std::ostringstream out;
    write_marginals_csv(out, table, config);
    write_artifact(out_path, out.str());
    return 0;
  }

  if (eval_cmd->parsed()) {
    config.eval = eval_flags.to_config();
    config.format = format;
    auto predictions = read_predictions(pred_path);
    Corpus corpus = read_treebank(gold_path, config.eval.punctuation_tags);
    if (predictions.size() != corpus.sentences.size()) {
      throw std::runtime_error("eval: " + std::to_string(predictions.size()) +
                               " predictions vs " + std::to_string(corpus.sentences.size()) +
                               " gold sentences (line pairing is positional)");
    }
    filter_corpus_by_length(corpus, &predictions, eval_max_len);
    std::vector<GoldTree> gold;
    gold.reserve(corpus.sentences.size());
    for (auto& sentence : corpus.sentences) gold.push_back(sentence.gold);
    const F1Result result = corpus_f1(predictions, gold, config.eval);
    write_artifact(out_path, format == "table"
                                 ? f1_result_table(result, gold.size())
                                 : f1_result_json(result, config, gold.size(), per_sentence));
    return 0;
  }

  if (mc_cmd->parsed()) {
    config.eval = mc_flags.to_config();
    config.format = format;
    const TreeDistribution dist = [&] {
      if (dist_str == "left") return TreeDistribution::left_skew;
      if (dist_str == "uniform") return TreeDistribution::uniform_binary;
      if (dist_str == "right") return TreeDistribution::right_skew;
      throw CLI::ValidationError("--dist", "expected left, uniform or right");
    }();
    Corpus corpus = read_treebank(gold_path, config.eval.punctuation_tags);
    filter_corpus_by_length(corpus, nullptr, mc_max_len);
    if (corpus.sentences.empty()) throw std::runtime_error("mc-f1: no sentences left");
    std::vector<GoldTree> gold;
    gold.reserve(corpus.sentences.size());
    for (auto& sentence : corpus.sentences) gold.push_back(sentence.gold);
    const McF1Result result =
        expected_f1_mc(gold, dist, mc_samples, replicates, seed, config.eval);
    write_artifact(out_path, format == "table"
                                 ? mc_f1_table(result, dist)
                                 : mc_f1_json(result, config, dist, mc_samples, replicates));
    return 0;
  }

  if (complete_cmd->parsed()) {
    const DecoderKind decoder = [&] {
      if (decoder_str == "coo-r") return DecoderKind::coo_r;
      if (decoder_str == "coo-l") return DecoderKind::coo_l;
      if (decoder_str == "gap") return DecoderKind::gap;
      if (decoder_str == "span") return DecoderKind::span;
      throw CLI::ValidationError("--decoder", "expected coo-r, coo-l, gap or span");
    }();
    const CompletenessReport report = completeness_image(decoder, complete_n);
    write_artifact(out_path, completeness_text(report, config));
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

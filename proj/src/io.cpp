#include "coo/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace coo {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool comment_line(std::string_view line) { return !line.empty() && line[0] == '#'; }

bool blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(),
                     [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

// Splits into lines; a trailing newline does not produce a final line.
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) {
      if (begin < text.size()) lines.push_back(text.substr(begin));
      break;
    }
    lines.push_back(text.substr(begin, end - begin));
    begin = end + 1;
  }
  return lines;
}

json eval_config_json(const EvalConfig& eval) {
  json tags = json::array();
  for (const std::string& tag : eval.punctuation_tags) tags.push_back(tag);
  return json{{"include_single_word_spans", eval.include_single_word_spans},
              {"include_whole_sentence_span", eval.include_whole_sentence_span},
              {"punctuation_tags", tags},
              {"aggregation", to_string(eval.aggregation)}};
}

json run_config_json(const RunConfig& config, std::string_view command) {
  return json{{"version", kToolVersion},
              {"command", std::string(command)},
              {"seed", config.seed},
              {"variant", to_string(config.variant)},
              {"tie", to_string(config.tie)},
              {"eval", eval_config_json(config.eval)},
              {"format", config.format}};
}

}  // namespace

std::vector<ScoreVector> parse_scores_text(std::string_view text) {
  std::vector<ScoreVector> out;
  const auto lines = split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::string_view line = lines[ln];
    if (comment_line(line)) continue;
    if (blank(line)) {
      throw std::runtime_error("scores: line " + std::to_string(ln + 1) + ": empty line");
    }
    ScoreVector scores;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos >= line.size()) break;
      const std::size_t begin = pos;
      while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      const std::string token(line.substr(begin, pos - begin));
      try {
        std::size_t used = 0;
        const double value = std::stod(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        if (!std::isfinite(value)) throw std::invalid_argument(token);
        scores.push_back(value);
      } catch (const std::exception&) {
        throw std::runtime_error("scores: line " + std::to_string(ln + 1) + ", column " +
                                 std::to_string(begin + 1) + ": not a number: '" + token + "'");
      }
    }
    out.push_back(std::move(scores));
  }
  return out;
}

std::vector<ScoreVector> read_scores_file(const std::string& path) {
  try {
    return parse_scores_text(read_file(path));
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::vector<BinaryTree> parse_predictions_text(std::string_view text) {
  std::vector<BinaryTree> out;
  const auto lines = split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::string_view line = lines[ln];
    if (comment_line(line) || blank(line)) continue;
    try {
      out.push_back(parse_canonical(line));
    } catch (const std::exception& e) {
      throw std::runtime_error("line " + std::to_string(ln + 1) + ": " + e.what());
    }
  }
  return out;
}

std::vector<BinaryTree> read_predictions(const std::string& path) {
  try {
    return parse_predictions_text(read_file(path));
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

Corpus parse_treebank_text(std::string_view text, const std::set<std::string>& strip_punct_tags,
                           std::string_view source) {
  Corpus corpus;
  corpus.source = std::string(source);

  // Cut the stream into balanced top-level S-expressions; trees may span
  // lines.
  std::size_t pos = 0;
  int tree_index = 0;
  while (pos < text.size()) {
    while (pos < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '\n')) {
      ++pos;
    }
    if (pos >= text.size()) break;
    if (text[pos] == '#') {  // artifact header
      const std::size_t end = text.find('\n', pos);
      pos = end == std::string_view::npos ? text.size() : end + 1;
      continue;
    }
    if (text[pos] != '(') {
      throw std::runtime_error("treebank: tree " + std::to_string(tree_index + 1) +
                               ": expected '('");
    }
    int depth = 0;
    std::size_t end = pos;
    for (; end < text.size(); ++end) {
      if (text[end] == '(') ++depth;
      if (text[end] == ')') {
        --depth;
        if (depth == 0) {
          ++end;
          break;
        }
      }
    }
    if (depth != 0) {
      throw std::runtime_error("treebank: tree " + std::to_string(tree_index + 1) +
                               ": unbalanced brackets at end of input");
    }
    ++tree_index;
    GoldTree tree;
    try {
      tree = parse_treebank_tree(text.substr(pos, end - pos));
    } catch (const std::exception& e) {
      throw std::runtime_error("treebank: tree " + std::to_string(tree_index) + ": " + e.what());
    }
    pos = end;

    auto stripped = strip_terminals_by_tag(tree, strip_punct_tags);
    if (!stripped) {
      ++corpus.dropped_all_punct;
      continue;
    }
    CorpusSentence sentence;
    sentence.gold = std::move(*stripped);
    for (const auto& terminal : gold_terminals(sentence.gold)) sentence.tokens.push_back(terminal.first);
    corpus.sentences.push_back(std::move(sentence));
  }
  return corpus;
}

Corpus read_treebank(const std::string& path, const std::set<std::string>& strip_punct_tags) {
  try {
    return parse_treebank_text(read_file(path), strip_punct_tags, path);
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void filter_corpus_by_length(Corpus& corpus, std::vector<BinaryTree>* paired_predictions,
                             int max_len) {
  if (max_len <= 0) return;
  if (paired_predictions && paired_predictions->size() != corpus.sentences.size()) {
    throw std::runtime_error("filter_corpus_by_length: prediction/sentence count mismatch");
  }
  std::vector<CorpusSentence> kept;
  std::vector<BinaryTree> kept_pred;
  for (std::size_t i = 0; i < corpus.sentences.size(); ++i) {
    if (static_cast<int>(corpus.sentences[i].tokens.size()) > max_len) continue;
    kept.push_back(std::move(corpus.sentences[i]));
    if (paired_predictions) kept_pred.push_back(std::move((*paired_predictions)[i]));
  }
  corpus.sentences = std::move(kept);
  if (paired_predictions) *paired_predictions = std::move(kept_pred);
}

SpanScoreTable parse_span_table_json(std::string_view text) {
  json parsed;
  try {
    parsed = json::parse(text);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("span table: bad JSON: ") + e.what());
  }
  if (!parsed.is_object() || parsed.empty()) {
    throw std::runtime_error("span table: expected a non-empty JSON object");
  }
  int n = 0;
  std::vector<std::pair<Span, double>> entries;
  for (const auto& [key, value] : parsed.items()) {
    const std::size_t comma = key.find(',');
    if (comma == std::string::npos) {
      throw std::runtime_error("span table: bad key '" + key + "' (want \"i,j\")");
    }
    Span s;
    try {
      s.start = std::stoi(key.substr(0, comma));
      s.end = std::stoi(key.substr(comma + 1));
    } catch (const std::exception&) {
      throw std::runtime_error("span table: bad key '" + key + "' (want \"i,j\")");
    }
    if (s.start < 1 || s.end < s.start) {
      throw std::runtime_error("span table: bad span '" + key + "'");
    }
    if (!value.is_number()) {
      throw std::runtime_error("span table: score for '" + key + "' is not a number");
    }
    entries.emplace_back(s, value.get<double>());
    n = std::max(n, s.end);
  }
  SpanScoreTable table(n);
  std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
  for (const auto& [s, score] : entries) {
    table.set(s.start, s.end, score);
    seen[static_cast<std::size_t>(s.start - 1) * n + (s.end - 1)] = 1;
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      if (!seen[static_cast<std::size_t>(i - 1) * n + (j - 1)]) {
        throw std::runtime_error("span table: missing entry \"" + std::to_string(i) + "," +
                                 std::to_string(j) + "\"");
      }
    }
  }
  return table;
}

SpanScoreTable read_span_table_json(const std::string& path) {
  try {
    return parse_span_table_json(read_file(path));
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::string config_json(const RunConfig& config, std::string_view command) {
  return run_config_json(config, command).dump();
}

std::string config_comment_line(const RunConfig& config, std::string_view command) {
  return "# cooparse " + std::string(kToolVersion) + " " + std::string(command) +
         " config=" + config_json(config, command);
}

void write_reachability_csv(std::ostream& out, const std::vector<ReachabilityRow>& rows,
                            const RunConfig& config) {
  out << config_comment_line(config, "reach") << "\n";
  out << "n,catalan,reachable_dp,reachable_enum,recurrence_a,derivations,ratio\n";
  for (const ReachabilityRow& row : rows) {
    out << row.n << ',' << row.catalan_count.str() << ',' << row.reachable_dp.str() << ',';
    if (row.reachable_enumerated) out << row.reachable_enumerated->str();
    out << ',' << row.recurrence.str() << ',';
    if (row.derivations) out << row.derivations->str();
    out << ',' << decimal_string(row.ratio, 12) << "\n";
  }
  for (const std::string& note : report_notes(rows)) out << "# note: " << note << "\n";
}

void write_marginals_csv(std::ostream& out, const MarginalTable& table,
                         const RunConfig& config) {
  out << config_comment_line(config, "marginals") << "\n";
  out << "# method=" << to_string(table.method());
  if (table.method() == MarginalMethod::monte_carlo) {
    out << " samples=" << table.samples << " seed=" << table.seed;
  }
  out << "\n";
  out << "n,i,j,probability\n";
  const int n = table.size();
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      out << n << ',' << i << ',' << j << ',' << decimal_string(table.at(i, j), 12) << "\n";
    }
  }
}

std::string f1_result_json(const F1Result& result, const RunConfig& config,
                           std::size_t num_sentences, bool include_per_sentence) {
  json j{{"config", run_config_json(config, "eval")},
         {"num_sentences", num_sentences},
         {"precision", result.precision},
         {"recall", result.recall},
         {"f1", result.f1}};
  if (include_per_sentence) j["per_sentence"] = result.per_sentence;
  return j.dump(2) + "\n";
}

std::string mc_f1_json(const McF1Result& result, const RunConfig& config,
                       TreeDistribution dist, std::uint64_t samples_per_sentence,
                       int replicates) {
  json j{{"config", run_config_json(config, "mc-f1")},
         {"distribution", to_string(dist)},
         {"samples_per_sentence", samples_per_sentence},
         {"replicates", replicates},
         {"mean", result.mean},
         {"sigma", result.sigma},
         {"replicate_scores", result.replicate_scores}};
  return j.dump(2) + "\n";
}

namespace {
std::string fixed6(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6f", x);
  return buffer;
}
}  // namespace

std::string f1_result_table(const F1Result& result, std::size_t num_sentences) {
  std::ostringstream out;
  out << "sentences  " << num_sentences << "\n";
  out << "precision  " << fixed6(result.precision) << "\n";
  out << "recall     " << fixed6(result.recall) << "\n";
  out << "f1         " << fixed6(result.f1) << "\n";
  return out.str();
}

std::string mc_f1_table(const McF1Result& result, TreeDistribution dist) {
  std::ostringstream out;
  out << "distribution  " << to_string(dist) << "\n";
  out << "mean f1       " << fixed6(result.mean) << "\n";
  out << "sigma         " << fixed6(result.sigma) << "\n";
  out << "replicates   ";
  for (double score : result.replicate_scores) out << ' ' << fixed6(score);
  out << "\n";
  return out.str();
}

std::string completeness_text(const CompletenessReport& report, const RunConfig& config) {
  std::ostringstream out;
  out << config_comment_line(config, "complete") << "\n";
  out << "decoder=" << to_string(report.decoder) << "\n";
  out << "n=" << report.n << "\n";
  out << "image_size=" << report.image.size() << "\n";
  out << "total_trees=" << report.total.str() << "\n";
  out << "coverage=" << rational_string(report.coverage) << " ("
      << decimal_string(report.coverage, 12) << ")\n";
  return out.str();
}

}  // namespace coo

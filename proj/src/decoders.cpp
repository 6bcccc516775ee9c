#include "coo/decoders.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "coo/reachability.hpp"

namespace coo {

SpanScoreTable::SpanScoreTable(int n, double fill) : n_(n) {
  if (n < 1) throw std::invalid_argument("SpanScoreTable: n must be positive");
  v_.assign(static_cast<std::size_t>(n) * n, fill);
}

std::size_t SpanScoreTable::index(int i, int j) const {
  if (i < 1 || j < i || j > n_) throw std::out_of_range("SpanScoreTable: bad span");
  return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
}

const char* to_string(DecoderKind d) {
  switch (d) {
    case DecoderKind::coo_r: return "coo-r";
    case DecoderKind::coo_l: return "coo-l";
    case DecoderKind::gap: return "gap";
    case DecoderKind::span: return "span";
  }
  return "?";
}

namespace {

BinaryTree gap_split_range(std::span<const double> gaps, int i, int j, TieRule tie) {
  if (i == j) return BinaryTree::leaf();
  // Boundary b separates words b and b+1; candidates are i..j-1.
  int best = i;
  for (int b = i + 1; b <= j - 1; ++b) {
    const double s = gaps[b - 1];
    const double cur = gaps[best - 1];
    if (tie == TieRule::leftmost ? s > cur : s >= cur) best = b;
  }
  return BinaryTree::branch(gap_split_range(gaps, i, best, tie),
                            gap_split_range(gaps, best + 1, j, tie));
}

BinaryTree span_split_range(const SpanScoreTable& table, int i, int j, TieRule tie) {
  if (i == j) return BinaryTree::leaf();
  int best = i;
  double best_score = table.at(i, i) + table.at(i + 1, j);
  for (int k = i + 1; k <= j - 1; ++k) {
    const double s = table.at(i, k) + table.at(k + 1, j);
    if (tie == TieRule::leftmost ? s > best_score : s >= best_score) {
      best = k;
      best_score = s;
    }
  }
  return BinaryTree::branch(span_split_range(table, i, best, tie),
                            span_split_range(table, best + 1, j, tie));
}

void insert_tree(std::set<std::string>& image, const BinaryTree& tree) {
  image.insert(to_bracket_string(tree));
}

}  // namespace

BinaryTree gap_split_parse(std::span<const double> gaps, TieRule tie) {
  const int n = static_cast<int>(gaps.size()) + 1;
  return gap_split_range(gaps, 1, n, tie);
}

BinaryTree span_split_parse(const SpanScoreTable& table, TieRule tie) {
  return span_split_range(table, 1, table.size(), tie);
}

SpanScoreTable indicator_table(const BinaryTree& tree) {
  SpanScoreTable table(tree.leaf_count(), 0.0);
  for (const Span& s : spans(tree, /*include_trivial=*/true, /*include_whole=*/true)) {
    table.set(s.start, s.end, 1.0);
  }
  return table;
}

CompletenessReport completeness_image(DecoderKind decoder, int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("completeness_image: n must be in [1, 8]");
  CompletenessReport report;
  report.decoder = decoder;
  report.n = n;
  report.total = catalan(n - 1);

  std::set<std::string> image;
  switch (decoder) {
    case DecoderKind::coo_r:
    case DecoderKind::coo_l: {
      const Variant variant = decoder == DecoderKind::coo_r ? Variant::R : Variant::L;
      for (const BinaryTree& t : enumerate_reachable(n, variant)) insert_tree(image, t);
      break;
    }
    case DecoderKind::gap: {
      if (n == 1) {
        insert_tree(image, BinaryTree::leaf());
        break;
      }
      std::vector<double> gaps(static_cast<std::size_t>(n) - 1);
      std::iota(gaps.begin(), gaps.end(), 1.0);
      do {
        insert_tree(image, gap_split_parse(gaps));
      } while (std::next_permutation(gaps.begin(), gaps.end()));
      break;
    }
    case DecoderKind::span: {
      for (const BinaryTree& t : enumerate_binary_trees(n)) {
        insert_tree(image, span_split_parse(indicator_table(t)));
      }
      break;
    }
  }

  for (const std::string& s : image) report.image.push_back(parse_canonical(s));
  report.coverage = BigRational(BigInt(report.image.size()), report.total);
  return report;
}

}  // namespace coo

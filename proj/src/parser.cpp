#include "coo/parser.hpp"

#include <cassert>

namespace coo {

const char* to_string(Variant v) { return v == Variant::R ? "R" : "L"; }

const char* to_string(TieRule t) {
  return t == TieRule::leftmost ? "leftmost" : "rightmost";
}

namespace {

BinaryTree parse_range(std::span<const double> scores, int i, int j, Variant variant,
                       TieRule tie) {
  if (i == j) return BinaryTree::leaf();
  if (j - i == 1) return BinaryTree::branch(BinaryTree::leaf(), BinaryTree::leaf());
  const int k = argmax_position(scores, i, j, tie);
  if (k == i) {
    return BinaryTree::branch(BinaryTree::leaf(), parse_range(scores, i + 1, j, variant, tie));
  }
  if (k == j) {
    return BinaryTree::branch(parse_range(scores, i, j - 1, variant, tie), BinaryTree::leaf());
  }
  if (variant == Variant::R) {
    BinaryTree right = parse_range(scores, k, j, variant, tie);
    // k is still maximal in [k,j], so the daughter must split it off at once.
    assert(right.root()->left->is_leaf());
    return BinaryTree::branch(parse_range(scores, i, k - 1, variant, tie), right);
  }
  BinaryTree left = parse_range(scores, i, k, variant, tie);
  assert(left.root()->right->is_leaf());
  return BinaryTree::branch(left, parse_range(scores, k + 1, j, variant, tie));
}

BinaryTree parse_range_ternary(std::span<const double> scores, int i, int j, Variant variant,
                               TieRule tie) {
  if (i == j) return BinaryTree::leaf();
  if (j - i == 1) return BinaryTree::branch(BinaryTree::leaf(), BinaryTree::leaf());
  const int k = argmax_position(scores, i, j, tie);
  if (k == i) {
    return BinaryTree::branch(BinaryTree::leaf(),
                              parse_range_ternary(scores, i + 1, j, variant, tie));
  }
  if (k == j) {
    return BinaryTree::branch(parse_range_ternary(scores, i, j - 1, variant, tie),
                              BinaryTree::leaf());
  }
  // [i,j] -> [i,k-1] [k,k] [k+1,j] in one step.
  BinaryTree outer_left = parse_range_ternary(scores, i, k - 1, variant, tie);
  BinaryTree outer_right = parse_range_ternary(scores, k + 1, j, variant, tie);
  if (variant == Variant::R) {
    return BinaryTree::branch(outer_left,
                              BinaryTree::branch(BinaryTree::leaf(), outer_right));
  }
  return BinaryTree::branch(BinaryTree::branch(outer_left, BinaryTree::leaf()), outer_right);
}

}  // namespace

BinaryTree coo_parse(std::span<const double> scores, Variant variant, TieRule tie) {
  if (scores.empty()) throw std::invalid_argument("coo_parse: empty score vector");
  return parse_range(scores, 1, static_cast<int>(scores.size()), variant, tie);
}

BinaryTree coo_parse_ternary(std::span<const double> scores, Variant variant, TieRule tie) {
  if (scores.empty()) throw std::invalid_argument("coo_parse_ternary: empty score vector");
  return parse_range_ternary(scores, 1, static_cast<int>(scores.size()), variant, tie);
}

BigInt count_derivations(int n) {
  if (n < 1 || n > 200) throw std::invalid_argument("count_derivations: n must be in [1, 200]");
  if (n <= 2) return BigInt(1);
  // chart[i][j], 1-based; only j >= i used.
  std::vector<std::vector<BigInt>> chart(static_cast<std::size_t>(n) + 1,
                                         std::vector<BigInt>(static_cast<std::size_t>(n) + 1));
  for (int i = 1; i <= n; ++i) chart[i][i] = 1;
  for (int i = 1; i + 1 <= n; ++i) chart[i][i + 1] = 1;
  for (int len = 3; len <= n; ++len) {
    for (int i = 1; i + len - 1 <= n; ++i) {
      const int j = i + len - 1;
      BigInt total = chart[i + 1][j] + chart[i][j - 1];
      for (int k = i + 1; k <= j - 1; ++k) {
        total += chart[i][k - 1] * chart[k + 1][j];
      }
      chart[i][j] = total;
    }
  }
  return chart[1][n];
}

}  // namespace coo

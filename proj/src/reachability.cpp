#include "coo/reachability.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace coo {

namespace {

using Node = BinaryTree::Node;
using NodePtr = BinaryTree::NodePtr;

bool structural_ok(const Node* node) {
  if (node->is_leaf()) return true;
  if (!node->left->is_leaf() && !node->right->is_leaf() && !node->right->left->is_leaf()) {
    return false;
  }
  return structural_ok(node->left.get()) && structural_ok(node->right.get());
}

void sort_by_bracket_string(std::vector<BinaryTree>& trees) {
  std::sort(trees.begin(), trees.end(), [](const BinaryTree& a, const BinaryTree& b) {
    return to_bracket_string(a) < to_bracket_string(b);
  });
}

std::vector<BinaryTree> image_from_strings(const std::set<std::string>& strings) {
  std::vector<BinaryTree> out;
  out.reserve(strings.size());
  for (const std::string& s : strings) out.push_back(parse_canonical(s));
  return out;
}

// Decode image over the permutations of 1..n that fix value `lead` at
// position 1 (all permutations when lead == 0).
std::set<std::string> decode_image_block(int n, Variant variant, int lead) {
  std::vector<double> scores(static_cast<std::size_t>(n));
  std::vector<int> rest;
  for (int v = 1; v <= n; ++v) {
    if (v != lead) rest.push_back(v);
  }
  std::set<std::string> image;
  if (lead != 0) scores[0] = lead;
  const int offset = lead == 0 ? 0 : 1;
  do {
    for (std::size_t p = 0; p < rest.size(); ++p) scores[offset + p] = rest[p];
    image.insert(to_bracket_string(coo_parse(scores, variant)));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return image;
}

struct WitnessBuilder {
  std::vector<double> scores;

  // Assign ranks in [lo, hi] to the leaves of `node`, whose span starts
  // at `start`, such that the R-variant decode of the span reproduces it.
  bool assign(const Node* node, int start, int lo, int hi) {
    if (node->is_leaf()) {
      scores[start - 1] = hi;
      return true;
    }
    const Node* left = node->left.get();
    const Node* right = node->right.get();
    const int right_start = start + left->leaves;
    if (left->is_leaf() && right->is_leaf()) {
      scores[start - 1] = hi;
      scores[start] = lo;
      return true;
    }
    if (left->is_leaf()) {
      scores[start - 1] = hi;  // forces the left terminal off
      return assign(right, right_start, lo, hi - 1);
    }
    if (right->is_leaf()) {
      scores[start + node->leaves - 2] = hi;  // forces the right terminal off
      return assign(left, start, lo, hi - 1);
    }
    // Interior split: the maximum must sit at the right daughter's first
    // leaf, which must be split off immediately.
    if (!right->left->is_leaf()) return false;
    scores[right_start - 1] = hi;
    const int left_hi = lo + left->leaves - 1;
    return assign(left, start, lo, left_hi) &&
           assign(right->right.get(), right_start + 1, left_hi + 1, hi - 1);
  }
};

}  // namespace

bool is_recoverable(const BinaryTree& tree, Variant variant) {
  const BinaryTree& probe = variant == Variant::R ? tree : mirror(tree);
  return to_bracket_string(probe).find(")((") == std::string::npos;
}

bool is_recoverable_structural(const BinaryTree& tree) {
  return structural_ok(tree.root().get());
}

std::vector<BinaryTree> enumerate_reachable(int n, Variant variant) {
  if (n < 1 || n > 10) throw std::invalid_argument("enumerate_reachable: n must be in [1, 10]");
  // Image by interval length: sub-intervals of a split realize their own
  // images independently, so the image factorizes over the recursion.
  std::vector<std::vector<NodePtr>> by_size(static_cast<std::size_t>(n) + 1);
  by_size[1] = {BinaryTree::make_leaf()};
  for (int m = 2; m <= n; ++m) {
    std::unordered_set<std::string> seen;
    auto add = [&](NodePtr node) {
      std::string key = to_bracket_string(BinaryTree::from_root(node));
      if (seen.insert(std::move(key)).second) by_size[m].push_back(std::move(node));
    };
    for (const NodePtr& t : by_size[m - 1]) {
      add(BinaryTree::make_branch(BinaryTree::make_leaf(), t));  // argmax at left end
      add(BinaryTree::make_branch(t, BinaryTree::make_leaf()));  // argmax at right end
    }
    for (int r = 2; r <= m - 1; ++r) {  // interior argmax at relative position r
      for (const NodePtr& a : by_size[r - 1]) {
        for (const NodePtr& b : by_size[m - r]) {
          if (variant == Variant::R) {
            add(BinaryTree::make_branch(
                a, BinaryTree::make_branch(BinaryTree::make_leaf(), b)));
          } else {
            add(BinaryTree::make_branch(
                BinaryTree::make_branch(a, BinaryTree::make_leaf()), b));
          }
        }
      }
    }
  }
  std::vector<BinaryTree> out;
  out.reserve(by_size[n].size());
  for (NodePtr& node : by_size[n]) out.push_back(BinaryTree::from_root(std::move(node)));
  sort_by_bracket_string(out);
  return out;
}

std::vector<BinaryTree> enumerate_reachable_bruteforce(int n, Variant variant, bool parallel) {
  if (n < 1 || n > 10) {
    throw std::invalid_argument("enumerate_reachable_bruteforce: n must be in [1, 10]");
  }
  if (n == 1) return {BinaryTree::leaf()};
  std::set<std::string> image;
  if (!parallel) {
    image = decode_image_block(n, variant, 0);
  } else {
    std::vector<std::set<std::string>> blocks(static_cast<std::size_t>(n));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int lead = 1; lead <= n; ++lead) {
      blocks[lead - 1] = decode_image_block(n, variant, lead);
    }
    for (const auto& block : blocks) image.insert(block.begin(), block.end());
  }
  return image_from_strings(image);
}

BigInt count_recoverable_dp(int n) {
  if (n < 1 || n > 2000) throw std::invalid_argument("count_recoverable_dp: n must be in [1, 2000]");
  std::vector<BigInt> t(static_cast<std::size_t>(n) + 1);
  t[1] = 1;
  if (n >= 2) t[2] = 1;
  for (int m = 3; m <= n; ++m) {
    // Roots with a terminal child contribute 2 t_{m-1}; roots with both
    // children internal force the right child's first leaf off, leaving
    // t_a t_{m-1-a} choices.
    BigInt total = 2 * t[m - 1];
    for (int a = 2; a <= m - 2; ++a) total += t[a] * t[m - 1 - a];
    t[m] = total;
  }
  return t[n];
}

BigInt recurrence_a(int n) {
  if (n < 1 || n > 2000) throw std::invalid_argument("recurrence_a: n must be in [1, 2000]");
  std::vector<BigInt> a(static_cast<std::size_t>(n) + 1);
  a[1] = 1;
  if (n >= 2) a[2] = 1;
  for (int m = 3; m <= n; ++m) {
    BigInt total = 2 * a[m - 1];
    for (int k = 2; k <= m - 1; ++k) total += a[k - 1] * a[m - k];
    a[m] = total;
  }
  return a[n];
}

std::optional<ScoreVector> witness_scores(const BinaryTree& tree, Variant variant) {
  if (variant == Variant::L) {
    auto mirrored = witness_scores(mirror(tree), Variant::R);
    if (!mirrored) return std::nullopt;
    std::reverse(mirrored->begin(), mirrored->end());
    return mirrored;
  }
  const int n = tree.leaf_count();
  WitnessBuilder builder;
  builder.scores.assign(static_cast<std::size_t>(n), 0.0);
  if (!builder.assign(tree.root().get(), 1, 1, n)) return std::nullopt;
  return builder.scores;
}

std::vector<ReachabilityRow> reachability_report(int n_max, int enum_cap) {
  if (n_max < 1 || n_max > 2000) {
    throw std::invalid_argument("reachability_report: n_max must be in [1, 2000]");
  }
  enum_cap = std::min(enum_cap, 10);
  const int derivation_cap = std::min(n_max, 200);

  const std::vector<BigInt> cats = catalan_table(n_max);
  std::vector<BigInt> t(static_cast<std::size_t>(n_max) + 1), a(t.size());
  t[1] = a[1] = 1;
  if (n_max >= 2) t[2] = a[2] = 1;
  for (int m = 3; m <= n_max; ++m) {
    t[m] = 2 * t[m - 1];
    for (int x = 2; x <= m - 2; ++x) t[m] += t[x] * t[m - 1 - x];
    a[m] = 2 * a[m - 1];
    for (int k = 2; k <= m - 1; ++k) a[m] += a[k - 1] * a[m - k];
  }

  // One inside chart gives derivation counts for every length at once.
  std::vector<BigInt> derivations(static_cast<std::size_t>(derivation_cap) + 1);
  for (int m = 1; m <= derivation_cap; ++m) derivations[m] = count_derivations(m);

  std::vector<ReachabilityRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    ReachabilityRow row;
    row.n = n;
    row.catalan_count = cats[n - 1];
    row.reachable_dp = t[n];
    row.recurrence = a[n];
    if (n <= enum_cap) {
      row.reachable_enumerated = BigInt(enumerate_reachable(n, Variant::R).size());
    }
    if (n <= derivation_cap) row.derivations = derivations[n];
    row.ratio = BigRational(t[n], cats[n - 1]);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::string> report_notes(const std::vector<ReachabilityRow>& rows) {
  std::vector<std::string> notes;
  const ReachabilityRow* first_gap = nullptr;
  for (const ReachabilityRow& row : rows) {
    if (!row.dp_equals_enumerated()) {
      notes.push_back("n=" + std::to_string(row.n) + ": recoverable-count DP (" +
                      row.reachable_dp.str() + ") disagrees with the enumerated image (" +
                      row.reachable_enumerated->str() + ")");
    }
    if (!row.recurrence_equals_derivations()) {
      notes.push_back("n=" + std::to_string(row.n) + ": closed recurrence (" +
                      row.recurrence.str() + ") disagrees with the inside-chart count (" +
                      row.derivations->str() + ")");
    }
    if (!first_gap && !row.recurrence_equals_dp()) first_gap = &row;
  }
  if (first_gap) {
    notes.push_back("recurrence counts derivations, not distinct trees; first divergence at n=" +
                    std::to_string(first_gap->n) + " (" + first_gap->recurrence.str() + " vs " +
                    first_gap->reachable_dp.str() + " distinct reachable trees)");
  }
  return notes;
}

}  // namespace coo

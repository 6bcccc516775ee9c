#ifndef COO_TREE_HPP
#define COO_TREE_HPP

#include <compare>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coo/numeric.hpp"
#include "coo/rng.hpp"

namespace coo {

// Word-position interval [start, end], 1-based, both ends inclusive.
struct Span {
  int start = 1;
  int end = 1;

  bool trivial() const { return start == end; }  // single terminal
  int length() const { return end - start + 1; }

  friend auto operator<=>(const Span&, const Span&) = default;
};

using SpanSet = std::set<Span>;

// Strictly binary tree over leaves 1..n; leaf positions are implicit
// (left-to-right order).  Immutable after construction; subtrees are
// shared freely, so copies are cheap and thread safe.
class BinaryTree {
 public:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  struct Node {
    NodePtr left;
    NodePtr right;
    int leaves = 1;
    bool is_leaf() const { return left == nullptr; }
  };

  BinaryTree() : root_(make_leaf()) {}

  static BinaryTree leaf() { return BinaryTree(); }
  static BinaryTree branch(const BinaryTree& l, const BinaryTree& r) {
    return BinaryTree(make_branch(l.root_, r.root_));
  }

  int leaf_count() const { return root_->leaves; }
  const NodePtr& root() const { return root_; }

  static NodePtr make_leaf();
  static NodePtr make_branch(NodePtr l, NodePtr r);
  static BinaryTree from_root(NodePtr root) { return BinaryTree(std::move(root)); }

  friend bool operator==(const BinaryTree& a, const BinaryTree& b) {
    return compare(a.root_.get(), b.root_.get()) == 0;
  }
  friend bool operator<(const BinaryTree& a, const BinaryTree& b) {
    return compare(a.root_.get(), b.root_.get()) < 0;
  }

 private:
  explicit BinaryTree(NodePtr root) : root_(std::move(root)) {}
  static int compare(const Node* a, const Node* b);

  NodePtr root_;
};

// Canonical form: every leaf is the terminal `x`, no brackets around
// single terminals, each internal node is `(` left right `)`.
// n=1 serializes as the bare terminal `x`.
std::string to_bracket_string(const BinaryTree& tree);

// Inverse of to_bracket_string.  Accepts arbitrary terminal tokens and
// normalizes them structurally (positions are implicit); a token made
// only of `x` characters stands for that many single terminals, so the
// compact form (xx) and the spelled-out form (some trees) both parse.
// Errors: unbalanced brackets, non-binary nodes (unary chains), empty
// input.
BinaryTree parse_canonical(std::string_view text);

// Left-right reflection; leaf i maps to n+1-i.
BinaryTree mirror(const BinaryTree& tree);

// Node spans.  Single-terminal spans kept iff include_trivial, the
// whole-sentence span kept iff include_whole ([1,1] at n=1 counts as
// trivial).
SpanSet spans(const BinaryTree& tree, bool include_trivial, bool include_whole);

// All C_{n-1} binary trees over n leaves, each once, ordered by
// recursive split position (leftmost split first).  Guarded to n <= 16.
std::vector<BinaryTree> enumerate_binary_trees(int n);

// Exactly uniform draw from the C_{n-1} trees: the top-level left size
// k is chosen with probability C_{k-1} C_{n-k-1} / C_{n-1} using exact
// integer weights, recursively.
BinaryTree sample_uniform_tree(int n, Rng& rng);

// Same sampler with the Catalan table precomputed once, for hot loops.
class UniformTreeSampler {
 public:
  explicit UniformTreeSampler(int max_n);
  BinaryTree sample(int n, Rng& rng) const;

 private:
  BinaryTree::NodePtr sample_node(int n, Rng& rng) const;
  std::vector<BigInt> catalan_;
};

// General treebank tree: arbitrary arity, labeled, with (tag word)
// terminals.  Used only as a source of gold spans.
struct GoldTree {
  std::string label;               // phrase label, or the POS tag at a terminal
  std::string token;               // nonempty iff this node is a terminal
  std::vector<GoldTree> children;

  bool is_terminal() const { return children.empty(); }
};

// Labeled S-expression, e.g. (S (NP (DT the) (NN cat)) (VP (VBD sat))).
// A node with an empty label and a single subtree child (the PTB outer
// wrapper) is unwrapped.
GoldTree parse_treebank_tree(std::string_view text);

// Labeled S-expression form; inverse of parse_treebank_tree up to
// whitespace.
std::string to_treebank_string(const GoldTree& tree);

// (token, tag) pairs in sentence order.
std::vector<std::pair<std::string, std::string>> gold_terminals(const GoldTree& tree);

int gold_leaf_count(const GoldTree& tree);

// Remove terminals whose tag is in `tags`, dropping nodes emptied by the
// removal; remaining positions re-index to 1..n.  Returns nothing when
// every terminal is removed.
std::optional<GoldTree> strip_terminals_by_tag(const GoldTree& tree,
                                               const std::set<std::string>& tags);

// Node spans over terminal positions, same filters as the binary overload.
SpanSet spans(const GoldTree& tree, bool include_trivial, bool include_whole);

// Wrap a binary tree as a gold tree (synthetic corpora and tests).
GoldTree gold_from_binary(const BinaryTree& tree, std::string_view phrase_label = "X",
                          std::string_view tag = "T");

}  // namespace coo

#endif  // COO_TREE_HPP

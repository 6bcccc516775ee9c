#include "coo/tree.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace coo {

namespace {

using Node = BinaryTree::Node;
using NodePtr = BinaryTree::NodePtr;

void append_bracket_string(const Node* node, std::string& out) {
  if (node->is_leaf()) {
    out.push_back('x');
    return;
  }
  out.push_back('(');
  append_bracket_string(node->left.get(), out);
  append_bracket_string(node->right.get(), out);
  out.push_back(')');
}

NodePtr mirror_node(const NodePtr& node) {
  if (node->is_leaf()) return node;
  return BinaryTree::make_branch(mirror_node(node->right), mirror_node(node->left));
}

void collect_spans(const Node* node, int start, SpanSet& out) {
  out.insert(Span{start, start + node->leaves - 1});
  if (node->is_leaf()) return;
  collect_spans(node->left.get(), start, out);
  collect_spans(node->right.get(), start + node->left->leaves, out);
}

SpanSet filter_spans(SpanSet all, int n, bool include_trivial, bool include_whole) {
  SpanSet out;
  for (const Span& s : all) {
    if (s.trivial() && !include_trivial) continue;
    if (s.start == 1 && s.end == n && !include_whole) continue;
    out.insert(s);
  }
  return out;
}

// --- canonical format -------------------------------------------------

struct CanonicalLexer {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return text[pos];
  }
  // Terminal token: maximal run of non-bracket non-space characters.
  std::string_view term() {
    skip_ws();
    const std::size_t begin = pos;
    while (pos < text.size()) {
      const char c = text[pos];
      if (c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c))) break;
      ++pos;
    }
    return text.substr(begin, pos - begin);
  }
};

bool all_x(std::string_view token) {
  return std::all_of(token.begin(), token.end(), [](char c) { return c == 'x'; });
}

// Parses one node, pushing one subtree per terminal for all-x tokens.
void parse_canonical_children(CanonicalLexer& lex, std::vector<NodePtr>& out);

NodePtr parse_canonical_node(CanonicalLexer& lex) {
  if (lex.done()) throw std::runtime_error("canonical tree: unexpected end of input");
  if (lex.peek() != '(') {
    throw std::runtime_error("canonical tree: expected '(' or terminal");
  }
  ++lex.pos;  // consume '('
  std::vector<NodePtr> children;
  while (!lex.done() && lex.peek() != ')') {
    parse_canonical_children(lex, children);
  }
  if (lex.done()) throw std::runtime_error("canonical tree: unbalanced brackets (missing ')')");
  ++lex.pos;  // consume ')'
  if (children.size() < 2) {
    throw std::runtime_error("canonical tree: unary chain (every bracket needs two children)");
  }
  if (children.size() > 2) {
    throw std::runtime_error("canonical tree: node with more than two children");
  }
  return BinaryTree::make_branch(children[0], children[1]);
}

void parse_canonical_children(CanonicalLexer& lex, std::vector<NodePtr>& out) {
  if (lex.peek() == '(') {
    out.push_back(parse_canonical_node(lex));
    return;
  }
  const std::string_view token = lex.term();
  if (token.empty()) throw std::runtime_error("canonical tree: stray ')'");
  if (all_x(token)) {
    for (std::size_t i = 0; i < token.size(); ++i) out.push_back(BinaryTree::make_leaf());
  } else {
    out.push_back(BinaryTree::make_leaf());
  }
}

// --- treebank format --------------------------------------------------

GoldTree parse_gold_node(CanonicalLexer& lex) {
  if (lex.done()) throw std::runtime_error("treebank tree: unexpected end of input");
  if (lex.peek() != '(') {
    GoldTree terminal;
    terminal.token = std::string(lex.term());
    return terminal;  // bare token, no tag
  }
  ++lex.pos;  // consume '('
  GoldTree node;
  if (!lex.done() && lex.peek() != '(' && lex.peek() != ')') {
    node.label = std::string(lex.term());
  }
  std::vector<GoldTree> children;
  while (!lex.done() && lex.peek() != ')') {
    children.push_back(parse_gold_node(lex));
  }
  if (lex.done()) throw std::runtime_error("treebank tree: unbalanced brackets (missing ')')");
  ++lex.pos;  // consume ')'
  if (children.empty()) {
    throw std::runtime_error("treebank tree: empty node (" + node.label + ")");
  }
  if (children.size() == 1 && children[0].is_terminal() && !children[0].token.empty() &&
      children[0].label.empty()) {
    // (TAG word): a preterminal
    node.token = children[0].token;
    return node;
  }
  if (node.label.empty() && children.size() == 1) {
    return children[0];  // outer wrapper, e.g. ( (S ...) )
  }
  node.children = std::move(children);
  return node;
}

void collect_gold_terminals(const GoldTree& node,
                            std::vector<std::pair<std::string, std::string>>& out) {
  if (node.is_terminal()) {
    out.emplace_back(node.token, node.label);
    return;
  }
  for (const GoldTree& child : node.children) collect_gold_terminals(child, out);
}

// Span of each node over a running terminal counter.
int collect_gold_spans(const GoldTree& node, int next_position, SpanSet& out) {
  if (node.is_terminal()) {
    out.insert(Span{next_position, next_position});
    return next_position + 1;
  }
  const int start = next_position;
  int position = next_position;
  for (const GoldTree& child : node.children) {
    position = collect_gold_spans(child, position, out);
  }
  out.insert(Span{start, position - 1});
  return position;
}

std::optional<GoldTree> strip_node(const GoldTree& node, const std::set<std::string>& tags) {
  if (node.is_terminal()) {
    if (tags.count(node.label)) return std::nullopt;
    return node;
  }
  GoldTree kept;
  kept.label = node.label;
  for (const GoldTree& child : node.children) {
    if (auto stripped = strip_node(child, tags)) kept.children.push_back(std::move(*stripped));
  }
  if (kept.children.empty()) return std::nullopt;
  return kept;
}

}  // namespace

NodePtr BinaryTree::make_leaf() {
  // Leaves are interchangeable; share one.
  static const NodePtr kLeaf = std::make_shared<const Node>();
  return kLeaf;
}

NodePtr BinaryTree::make_branch(NodePtr l, NodePtr r) {
  auto node = std::make_shared<Node>();
  node->leaves = l->leaves + r->leaves;
  node->left = std::move(l);
  node->right = std::move(r);
  return node;
}

int BinaryTree::compare(const Node* a, const Node* b) {
  if (a == b) return 0;
  if (a->is_leaf() != b->is_leaf()) return a->is_leaf() ? -1 : 1;
  if (a->is_leaf()) return 0;
  if (const int c = compare(a->left.get(), b->left.get())) return c;
  return compare(a->right.get(), b->right.get());
}

std::string to_bracket_string(const BinaryTree& tree) {
  std::string out;
  append_bracket_string(tree.root().get(), out);
  return out;
}

BinaryTree parse_canonical(std::string_view text) {
  CanonicalLexer lex{text};
  if (lex.done()) throw std::runtime_error("canonical tree: empty sentence");
  std::vector<NodePtr> roots;
  parse_canonical_children(lex, roots);
  if (!lex.done()) {
    throw std::runtime_error(lex.peek() == ')'
                                 ? "canonical tree: unbalanced brackets (extra ')')"
                                 : "canonical tree: expected a single tree");
  }
  if (roots.size() != 1) throw std::runtime_error("canonical tree: expected a single tree");
  return BinaryTree::from_root(roots[0]);
}

BinaryTree mirror(const BinaryTree& tree) {
  return BinaryTree::from_root(mirror_node(tree.root()));
}

SpanSet spans(const BinaryTree& tree, bool include_trivial, bool include_whole) {
  SpanSet all;
  collect_spans(tree.root().get(), 1, all);
  return filter_spans(std::move(all), tree.leaf_count(), include_trivial, include_whole);
}

std::vector<BinaryTree> enumerate_binary_trees(int n) {
  if (n < 1 || n > 16) {
    throw std::invalid_argument("enumerate_binary_trees: n must be in [1, 16]");
  }
  std::vector<std::vector<NodePtr>> by_size(static_cast<std::size_t>(n) + 1);
  by_size[1] = {BinaryTree::make_leaf()};
  for (int m = 2; m <= n; ++m) {
    for (int k = 1; k <= m - 1; ++k) {  // leftmost split first
      for (const NodePtr& left : by_size[k]) {
        for (const NodePtr& right : by_size[m - k]) {
          by_size[m].push_back(BinaryTree::make_branch(left, right));
        }
      }
    }
  }
  std::vector<BinaryTree> out;
  out.reserve(by_size[n].size());
  for (NodePtr& node : by_size[n]) out.push_back(BinaryTree::from_root(std::move(node)));
  return out;
}

UniformTreeSampler::UniformTreeSampler(int max_n) {
  if (max_n < 1) throw std::invalid_argument("UniformTreeSampler: max_n must be positive");
  catalan_ = catalan_table(max_n);
}

NodePtr UniformTreeSampler::sample_node(int n, Rng& rng) const {
  if (n == 1) return BinaryTree::make_leaf();
  // Left size k has exact weight C_{k-1} C_{n-k-1}; the weights sum to C_{n-1}.
  BigInt draw = rng.below_big(catalan_[n - 1]);
  int k = 1;
  for (; k < n - 1; ++k) {
    const BigInt weight = catalan_[k - 1] * catalan_[n - k - 1];
    if (draw < weight) break;
    draw -= weight;
  }
  return BinaryTree::make_branch(sample_node(k, rng), sample_node(n - k, rng));
}

BinaryTree UniformTreeSampler::sample(int n, Rng& rng) const {
  if (n < 1 || static_cast<std::size_t>(n) > catalan_.size()) {
    throw std::invalid_argument("UniformTreeSampler: n out of range");
  }
  return BinaryTree::from_root(sample_node(n, rng));
}

BinaryTree sample_uniform_tree(int n, Rng& rng) {
  return UniformTreeSampler(n).sample(n, rng);
}

GoldTree parse_treebank_tree(std::string_view text) {
  CanonicalLexer lex{text};
  if (lex.done()) throw std::runtime_error("treebank tree: empty input");
  GoldTree tree = parse_gold_node(lex);
  if (!lex.done()) throw std::runtime_error("treebank tree: trailing input after tree");
  if (tree.is_terminal() && tree.token.empty()) {
    throw std::runtime_error("treebank tree: no terminals");
  }
  return tree;
}

namespace {
void append_treebank_string(const GoldTree& node, std::string& out) {
  out.push_back('(');
  out += node.label;
  if (node.is_terminal()) {
    out.push_back(' ');
    out += node.token;
  } else {
    for (const GoldTree& child : node.children) {
      out.push_back(' ');
      append_treebank_string(child, out);
    }
  }
  out.push_back(')');
}
}  // namespace

std::string to_treebank_string(const GoldTree& tree) {
  std::string out;
  append_treebank_string(tree, out);
  return out;
}

std::vector<std::pair<std::string, std::string>> gold_terminals(const GoldTree& tree) {
  std::vector<std::pair<std::string, std::string>> out;
  collect_gold_terminals(tree, out);
  return out;
}

int gold_leaf_count(const GoldTree& tree) {
  if (tree.is_terminal()) return 1;
  int n = 0;
  for (const GoldTree& child : tree.children) n += gold_leaf_count(child);
  return n;
}

std::optional<GoldTree> strip_terminals_by_tag(const GoldTree& tree,
                                               const std::set<std::string>& tags) {
  return strip_node(tree, tags);
}

SpanSet spans(const GoldTree& tree, bool include_trivial, bool include_whole) {
  SpanSet all;
  const int n = collect_gold_spans(tree, 1, all) - 1;
  return filter_spans(std::move(all), n, include_trivial, include_whole);
}

namespace {
GoldTree gold_from_node(const Node* node, int& next_position, std::string_view phrase_label,
                        std::string_view tag) {
  GoldTree out;
  if (node->is_leaf()) {
    out.label = std::string(tag);
    out.token = "w" + std::to_string(next_position++);
    return out;
  }
  out.label = std::string(phrase_label);
  out.children.push_back(gold_from_node(node->left.get(), next_position, phrase_label, tag));
  out.children.push_back(gold_from_node(node->right.get(), next_position, phrase_label, tag));
  return out;
}
}  // namespace

GoldTree gold_from_binary(const BinaryTree& tree, std::string_view phrase_label,
                          std::string_view tag) {
  int next_position = 1;
  return gold_from_node(tree.root().get(), next_position, phrase_label, tag);
}

}  // namespace coo

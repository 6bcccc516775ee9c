#ifndef COO_DECODERS_HPP
#define COO_DECODERS_HPP

#include <span>
#include <vector>

#include "coo/numeric.hpp"
#include "coo/parser.hpp"
#include "coo/tree.hpp"

namespace coo {

// Scores on the n-1 boundaries between adjacent words; boundary b sits
// between words b and b+1.
using GapScoreVector = std::vector<double>;

// Complete upper-triangular table of span scores.
class SpanScoreTable {
 public:
  explicit SpanScoreTable(int n, double fill = 0.0);

  int size() const { return n_; }
  double at(int i, int j) const { return v_[index(i, j)]; }
  void set(int i, int j, double score) { v_[index(i, j)] = score; }

 private:
  std::size_t index(int i, int j) const;
  int n_;
  std::vector<double> v_;
};

// Recursively split [i,j] at the highest-scoring boundary inside it.
// The chosen boundary lies outside both daughters, so every binary tree
// is reachable (no directional bias).
BinaryTree gap_split_parse(std::span<const double> gaps, TieRule tie = TieRule::leftmost);

inline BinaryTree gap_split_parse(const GapScoreVector& gaps,
                                  TieRule tie = TieRule::leftmost) {
  return gap_split_parse(std::span<const double>(gaps), tie);
}

// Recursively split [i,j] at the k maximizing table[i,k] + table[k+1,j].
// With the indicator table of a tree's constituents this recovers exactly
// that tree: the true split scores 2 while overlapping non-nested spans
// cannot both be constituents, capping competitors at 1.
BinaryTree span_split_parse(const SpanScoreTable& table, TieRule tie = TieRule::leftmost);

// Indicator table of a tree's constituents (single terminals and the
// whole span included).
SpanScoreTable indicator_table(const BinaryTree& tree);

enum class DecoderKind { coo_r, coo_l, gap, span };

const char* to_string(DecoderKind d);

struct CompletenessReport {
  DecoderKind decoder;
  int n = 1;
  std::vector<BinaryTree> image;  // sorted by bracket string
  BigInt total;                   // C_{n-1}
  BigRational coverage;           // |image| / C_{n-1}
};

// Reachable set of a decoder: word and gap scorers enumerate all score
// orderings; the span scorer decodes the indicator table of every tree.
// Guarded to n <= 8.
CompletenessReport completeness_image(DecoderKind decoder, int n);

}  // namespace coo

#endif  // COO_DECODERS_HPP

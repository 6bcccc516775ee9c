#ifndef COO_PARSER_HPP
#define COO_PARSER_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "coo/numeric.hpp"
#include "coo/tree.hpp"

namespace coo {

// Per-word "syntactic depth" scores; only relative order matters.
using ScoreVector = std::vector<double>;

// Where the word triggering a middle split lands: R puts it in the right
// daughter ([i,k-1][k,j]), L in the left one ([i,k][k+1,j]).
enum class Variant { R, L };

// Deterministic choice among equal maxima.  Scores compare as exact
// binary floating values, no epsilon; callers wanting fuzzy ties
// pre-round.
enum class TieRule { leftmost, rightmost };

const char* to_string(Variant v);
const char* to_string(TieRule t);

// Greedy top-down parse.  Recursion on [i,j]: length 1 is a leaf,
// length 2 splits into the two terminals, otherwise the argmax position
// k decides: k=i splits off the left terminal, k=j the right one, and an
// interior k splits per the variant.  Throws on an empty score vector.
BinaryTree coo_parse(std::span<const double> scores, Variant variant,
                     TieRule tie = TieRule::leftmost);

inline BinaryTree coo_parse(const ScoreVector& scores, Variant variant,
                            TieRule tie = TieRule::leftmost) {
  return coo_parse(std::span<const double>(scores), variant, tie);
}

// Same parser with the interior split fused with the forced follow-up
// split of the daughter containing the maximum ([i,j] -> [i,k-1] [k,k]
// [k+1,j]).  Output is identical to coo_parse for every input.
BinaryTree coo_parse_ternary(std::span<const double> scores, Variant variant,
                             TieRule tie = TieRule::leftmost);

inline BinaryTree coo_parse_ternary(const ScoreVector& scores, Variant variant,
                                    TieRule tie = TieRule::leftmost) {
  return coo_parse_ternary(std::span<const double>(scores), variant, tie);
}

// Number of derivations of the score-unconstrained bottom-up inference
// system, via an inside chart over spans: c[i,i] = 1, length-2 spans
// have exactly one derivation, and longer spans sum the left, right and
// ternary-middle ways of building them.  Exact; guarded to n <= 200.
// This counts decision sequences, not distinct bracketings.
BigInt count_derivations(int n);

// Argmax position in [i,j] (1-based inclusive) under the tie rule.
inline int argmax_position(std::span<const double> scores, int i, int j, TieRule tie) {
  int best = i;
  for (int p = i + 1; p <= j; ++p) {
    const double s = scores[p - 1];
    const double b = scores[best - 1];
    if (tie == TieRule::leftmost ? s > b : s >= b) best = p;
  }
  return best;
}

// Fused decode that emits every constituent [i,j] encountered during
// parsing (including single terminals and the whole sentence) without
// building a tree.  Hot path for the Monte Carlo kernels; must stay
// equivalent to coo_parse + spans, which the tests enforce.
template <typename Emit>
void coo_parse_spans(std::span<const double> scores, Variant variant, TieRule tie,
                     Emit&& emit) {
  const int n = static_cast<int>(scores.size());
  if (n == 0) throw std::invalid_argument("coo_parse_spans: empty score vector");
  std::vector<std::pair<int, int>> agenda;
  agenda.reserve(2 * n);
  agenda.emplace_back(1, n);
  while (!agenda.empty()) {
    const auto [i, j] = agenda.back();
    agenda.pop_back();
    emit(i, j);
    if (i == j) continue;
    if (j - i == 1) {
      agenda.emplace_back(i, i);
      agenda.emplace_back(j, j);
      continue;
    }
    const int k = argmax_position(scores, i, j, tie);
    if (k == i) {
      agenda.emplace_back(i, i);
      agenda.emplace_back(i + 1, j);
    } else if (k == j) {
      agenda.emplace_back(i, j - 1);
      agenda.emplace_back(j, j);
    } else if (variant == Variant::R) {
      agenda.emplace_back(i, k - 1);
      agenda.emplace_back(k, j);
    } else {
      agenda.emplace_back(i, k);
      agenda.emplace_back(k + 1, j);
    }
  }
}

}  // namespace coo

#endif  // COO_PARSER_HPP

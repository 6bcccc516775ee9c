#ifndef COO_REACHABILITY_HPP
#define COO_REACHABILITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "coo/numeric.hpp"
#include "coo/parser.hpp"
#include "coo/tree.hpp"

namespace coo {

// R-variant: true iff the canonical bracket string avoids the contiguous
// substring `)((`.  L-variant is the test on the mirrored tree.
bool is_recoverable(const BinaryTree& tree, Variant variant);

// Node-level restatement for the R-variant: no internal node may have
// both children internal with the right child's left child internal.
// Equals the substring test on every tree.
bool is_recoverable_structural(const BinaryTree& tree);

// The exact image of coo_parse over all relative score orderings,
// deduplicated and sorted by bracket string.  Computed by recursion on
// the argmax position (sub-intervals realize their images independently);
// must equal the literal n! loop, which tests check.  Guarded to n <= 10.
std::vector<BinaryTree> enumerate_reachable(int n, Variant variant);

// The literal n! loop over permutations of 1..n, kept as the reference
// for enumerate_reachable.  `parallel` splits the permutations by their
// leading value; results are identical to the serial run.
std::vector<BinaryTree> enumerate_reachable_bruteforce(int n, Variant variant,
                                                       bool parallel = false);

// Count of binary trees over n leaves passing is_recoverable_structural:
// t_1 = t_2 = 1, t_n = 2 t_{n-1} + sum_{a=2}^{n-2} t_a t_{n-1-a}.
// Validated against the enumerated image for n <= 10.  Guarded to 2000.
BigInt count_recoverable_dp(int n);

// Verbatim evaluation of a_1 = a_2 = 1,
// a_n = 2 a_{n-1} + sum_{k=2}^{n-1} a_{k-1} a_{n-k}.
// Matches count_derivations, i.e. it counts derivations, not distinct
// trees (a_5 = 23 while only 13 distinct trees are reachable).
BigInt recurrence_a(int n);

// A score ordering (permutation of 1..n, as doubles) whose decode equals
// the tree, or nothing when the tree is unreachable.  Constructive: the
// triggering position of each split gets the largest rank in its
// interval, so no search is needed and any n is accepted.
std::optional<ScoreVector> witness_scores(const BinaryTree& tree, Variant variant);

struct ReachabilityRow {
  int n = 0;
  BigInt catalan_count;                       // C_{n-1}
  BigInt reachable_dp;                        // t_n
  std::optional<BigInt> reachable_enumerated; // |image|, only for small n
  BigInt recurrence;                          // a_n
  std::optional<BigInt> derivations;          // inside chart, n <= 200
  BigRational ratio;                          // t_n / C_{n-1}

  bool dp_equals_enumerated() const {
    return !reachable_enumerated || *reachable_enumerated == reachable_dp;
  }
  bool recurrence_equals_derivations() const {
    return !derivations || *derivations == recurrence;
  }
  bool recurrence_equals_dp() const { return recurrence == reachable_dp; }
};

// One row per n in 1..n_max.  Disagreements are carried in the rows, not
// suppressed; recurrence/derivation counts diverge from distinct-tree
// counts from n = 5 on.  enumerated column filled for n <= enum_cap.
std::vector<ReachabilityRow> reachability_report(int n_max, int enum_cap = 10);

// Human-readable notes about disagreements in a computed report.
std::vector<std::string> report_notes(const std::vector<ReachabilityRow>& rows);

}  // namespace coo

#endif  // COO_REACHABILITY_HPP

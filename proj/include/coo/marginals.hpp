#ifndef COO_MARGINALS_HPP
#define COO_MARGINALS_HPP

#include <cstdint>
#include <vector>

#include "coo/numeric.hpp"
#include "coo/parser.hpp"

namespace coo {

enum class MarginalMethod { closed_form, exact_enumeration, monte_carlo };

const char* to_string(MarginalMethod m);

// Upper-triangular table of P([i,j] is a constituent).  Values are exact
// rationals for every method (Monte Carlo cells are count/samples);
// P([i,i]) = P([1,n]) = 1 always.
class MarginalTable {
 public:
  MarginalTable(int n, MarginalMethod method);

  int size() const { return n_; }
  MarginalMethod method() const { return method_; }

  const BigRational& at(int i, int j) const { return cells_[index(i, j)]; }
  void set(int i, int j, BigRational v) { cells_[index(i, j)] = std::move(v); }
  double value(int i, int j) const { return to_double(at(i, j)); }

  // Monte Carlo provenance; zero for exact methods.
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

 private:
  std::size_t index(int i, int j) const;
  int n_;
  MarginalMethod method_;
  std::vector<BigRational> cells_;
};

// P([i,j]) when all binary trees are equiprobable: with l = j-i+1,
// C_{l-1} C_{n-l} / C_{n-1} (contract the span to a leaf and count inner
// times outer trees).  Depends only on l, so rows are position-constant.
// Guarded to n <= 500.
MarginalTable uniform_tree_marginals(int n);

// P([i,j]) under uniform relative score orderings decoded greedily.
// Exact rationals via recursion on the argmax position (the relative
// order inside each recursion interval stays uniform, so no n! loop is
// needed).  Guarded to n <= 10.
MarginalTable coo_marginals_exact(int n, Variant variant);

// The literal n!-permutation enumeration, kept as the reference for
// coo_marginals_exact.  Practical to about n = 8.
MarginalTable coo_marginals_exact_bruteforce(int n, Variant variant);

// Monte Carlo estimate from i.i.d. standard-uniform score vectors (ties
// have probability zero).  The sample budget is split into fixed-size
// blocks with substreams derived from (seed, block), so the result is
// identical across thread counts.  OpenMP-parallel over blocks.
MarginalTable coo_marginals_mc(int n, Variant variant, std::uint64_t samples,
                               std::uint64_t seed);

// Serial reference for coo_marginals_mc: same block substreams, but each
// sample goes through coo_parse and spans() instead of the fused kernel.
// Byte-identical tables to the parallel version.
MarginalTable coo_marginals_mc_serial(int n, Variant variant, std::uint64_t samples,
                                      std::uint64_t seed);

}  // namespace coo

#endif  // COO_MARGINALS_HPP

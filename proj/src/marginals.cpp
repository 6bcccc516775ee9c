#include "coo/marginals.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "coo/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace coo {

const char* to_string(MarginalMethod m) {
  switch (m) {
    case MarginalMethod::closed_form: return "closed_form";
    case MarginalMethod::exact_enumeration: return "exact_enumeration";
    case MarginalMethod::monte_carlo: return "monte_carlo";
  }
  return "?";
}

MarginalTable::MarginalTable(int n, MarginalMethod method) : n_(n), method_(method) {
  if (n < 1) throw std::invalid_argument("MarginalTable: n must be positive");
  cells_.assign(static_cast<std::size_t>(n) * n, BigRational(0));
}

std::size_t MarginalTable::index(int i, int j) const {
  if (i < 1 || j < i || j > n_) throw std::out_of_range("MarginalTable: bad span");
  return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
}

MarginalTable uniform_tree_marginals(int n) {
  if (n < 1 || n > 500) {
    throw std::invalid_argument("uniform_tree_marginals: n must be in [1, 500]");
  }
  const std::vector<BigInt> cats = catalan_table(n);
  MarginalTable table(n, MarginalMethod::closed_form);
  for (int len = 1; len <= n; ++len) {
    const BigRational p(cats[len - 1] * cats[n - len], cats[n - 1]);
    for (int i = 1; i + len - 1 <= n; ++i) table.set(i, i + len - 1, p);
  }
  return table;
}

namespace {

// Probability that [a,b] becomes a recursion interval (an interval whose
// relative score order is uniform given the path), for either variant:
// both middle consequents recurse on [i,k-1] and [k+1,j].
//
// reach[a][b], 1-based, spans of length >= 2 only.
std::vector<std::vector<BigRational>> reach_table(int n) {
  std::vector<std::vector<BigRational>> reach(
      static_cast<std::size_t>(n) + 1,
      std::vector<BigRational>(static_cast<std::size_t>(n) + 1, BigRational(0)));
  if (n >= 2) reach[1][n] = 1;
  for (int len = n - 1; len >= 2; --len) {
    for (int a = 1; a + len - 1 <= n; ++a) {
      const int b = a + len - 1;
      if (a == 1 && b == n) continue;
      BigRational p(0);
      if (a >= 2) p += reach[a - 1][b] / (len + 1);          // left terminal split off
      if (b + 1 <= n) p += reach[a][b + 1] / (len + 1);      // right terminal split off
      for (int j = b + 2; j <= n; ++j) p += reach[a][j] / (j - a + 1);  // middle, left part
      for (int i = 1; i <= a - 2; ++i) p += reach[i][b] / (b - i + 1);  // middle, right part
      reach[a][b] = p;
    }
  }
  return reach;
}

void mc_tally_block(int n, Variant variant, std::uint64_t block_samples, Rng rng,
                    std::vector<std::uint64_t>& tally, bool fused) {
  std::vector<double> scores(static_cast<std::size_t>(n));
  for (std::uint64_t s = 0; s < block_samples; ++s) {
    for (int p = 0; p < n; ++p) scores[p] = rng.uniform();
    if (fused) {
      coo_parse_spans(scores, variant, TieRule::leftmost, [&](int i, int j) {
        ++tally[static_cast<std::size_t>(i - 1) * n + (j - 1)];
      });
    } else {
      const BinaryTree tree = coo_parse(scores, variant);
      for (const Span& sp : spans(tree, true, true)) {
        ++tally[static_cast<std::size_t>(sp.start - 1) * n + (sp.end - 1)];
      }
    }
  }
}

constexpr std::uint64_t kMcBlock = 16384;  // fixed block size keeps substreams stable

MarginalTable mc_marginals(int n, Variant variant, std::uint64_t samples, std::uint64_t seed,
                           bool parallel) {
  if (n < 1) throw std::invalid_argument("coo_marginals_mc: n must be positive");
  if (samples == 0) throw std::invalid_argument("coo_marginals_mc: samples must be positive");
  const std::size_t cells = static_cast<std::size_t>(n) * n;
  std::vector<std::uint64_t> tally(cells, 0);
  const std::uint64_t blocks = (samples + kMcBlock - 1) / kMcBlock;
  const Rng root(seed);

  if (!parallel) {
    for (std::uint64_t b = 0; b < blocks; ++b) {
      const std::uint64_t count = std::min(kMcBlock, samples - b * kMcBlock);
      mc_tally_block(n, variant, count, root.substream(b), tally, /*fused=*/false);
    }
  } else {
#ifdef _OPENMP
#pragma omp parallel
    {
      std::vector<std::uint64_t> local(cells, 0);
#pragma omp for schedule(dynamic)
      for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
        const std::uint64_t count =
            std::min(kMcBlock, samples - static_cast<std::uint64_t>(b) * kMcBlock);
        mc_tally_block(n, variant, count, root.substream(static_cast<std::uint64_t>(b)), local,
                       /*fused=*/true);
      }
#pragma omp critical
      for (std::size_t c = 0; c < cells; ++c) tally[c] += local[c];
    }
#else
    for (std::uint64_t b = 0; b < blocks; ++b) {
      const std::uint64_t count = std::min(kMcBlock, samples - b * kMcBlock);
      mc_tally_block(n, variant, count, root.substream(b), tally, /*fused=*/true);
    }
#endif
  }

  MarginalTable table(n, MarginalMethod::monte_carlo);
  table.samples = samples;
  table.seed = seed;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      table.set(i, j, BigRational(BigInt(tally[static_cast<std::size_t>(i - 1) * n + (j - 1)]),
                                  BigInt(samples)));
    }
  }
  return table;
}

}  // namespace

MarginalTable coo_marginals_exact(int n, Variant variant) {
  if (n < 1 || n > 10) throw std::invalid_argument("coo_marginals_exact: n must be in [1, 10]");
  MarginalTable table(n, MarginalMethod::exact_enumeration);
  for (int i = 1; i <= n; ++i) table.set(i, i, BigRational(1));
  if (n == 1) return table;
  table.set(1, n, BigRational(1));

  const auto reach = reach_table(n);
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (a == 1 && b == n) continue;
      BigRational p = reach[a][b];
      if (variant == Variant::R) {
        // Transient middle daughter [k,j] shares the right endpoint.
        for (int i = 1; i <= a - 1; ++i) p += reach[i][b] / (b - i + 1);
      } else {
        // Transient middle daughter [i,k] shares the left endpoint.
        for (int j = b + 1; j <= n; ++j) p += reach[a][j] / (j - a + 1);
      }
      table.set(a, b, p);
    }
  }
  return table;
}

MarginalTable coo_marginals_exact_bruteforce(int n, Variant variant) {
  if (n < 1 || n > 10) {
    throw std::invalid_argument("coo_marginals_exact_bruteforce: n must be in [1, 10]");
  }
  MarginalTable table(n, MarginalMethod::exact_enumeration);
  std::vector<double> scores(static_cast<std::size_t>(n));
  std::iota(scores.begin(), scores.end(), 1.0);
  std::vector<BigInt> counts(static_cast<std::size_t>(n) * n, BigInt(0));
  BigInt total = 0;
  do {
    coo_parse_spans(scores, variant, TieRule::leftmost, [&](int i, int j) {
      ++counts[static_cast<std::size_t>(i - 1) * n + (j - 1)];
    });
    ++total;
  } while (std::next_permutation(scores.begin(), scores.end()));
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      table.set(i, j, BigRational(counts[static_cast<std::size_t>(i - 1) * n + (j - 1)], total));
    }
  }
  return table;
}

MarginalTable coo_marginals_mc(int n, Variant variant, std::uint64_t samples,
                               std::uint64_t seed) {
  return mc_marginals(n, variant, samples, seed, /*parallel=*/true);
}

MarginalTable coo_marginals_mc_serial(int n, Variant variant, std::uint64_t samples,
                                      std::uint64_t seed) {
  return mc_marginals(n, variant, samples, seed, /*parallel=*/false);
}

}  // namespace coo

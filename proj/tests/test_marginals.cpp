#include <cmath>

#include "doctest.h"

#include "coo/marginals.hpp"
#include "coo/tree.hpp"

using namespace coo;

TEST_CASE("uniform tree marginals") {
  const MarginalTable t3 = uniform_tree_marginals(3);
  CHECK(t3.at(1, 2) == BigRational(1, 2));
  CHECK(t3.at(2, 3) == BigRational(1, 2));
  CHECK(t3.at(1, 3) == BigRational(1));
  CHECK(t3.at(2, 2) == BigRational(1));

  SUBCASE("rows are position-constant") {
    for (int n : {4, 6, 9, 40}) {
      const MarginalTable t = uniform_tree_marginals(n);
      for (int len = 1; len <= n; ++len) {
        for (int i = 2; i + len - 1 <= n; ++i) {
          CHECK(t.at(i, i + len - 1) == t.at(1, len));
        }
      }
    }
  }

  SUBCASE("matches exhaustive enumeration exactly up to n = 8") {
    for (int n = 1; n <= 8; ++n) {
      const auto trees = enumerate_binary_trees(n);
      const MarginalTable closed = uniform_tree_marginals(n);
      std::vector<BigInt> counts(static_cast<std::size_t>(n) * n, BigInt(0));
      for (const BinaryTree& t : trees) {
        for (const Span& s : spans(t, true, true)) {
          ++counts[static_cast<std::size_t>(s.start - 1) * n + (s.end - 1)];
        }
      }
      for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
          CHECK(closed.at(i, j) ==
                BigRational(counts[static_cast<std::size_t>(i - 1) * n + (j - 1)],
                            BigInt(trees.size())));
        }
      }
    }
  }

  CHECK_THROWS_AS(uniform_tree_marginals(0), std::invalid_argument);
  CHECK_THROWS_AS(uniform_tree_marginals(501), std::invalid_argument);
}

TEST_CASE("greedy-decode marginals, exact") {
  const MarginalTable t3 = coo_marginals_exact(3, Variant::R);
  CHECK(t3.at(2, 3) == BigRational(2, 3));
  CHECK(t3.at(1, 2) == BigRational(1, 3));
  CHECK(t3.at(1, 3) == BigRational(1));

  SUBCASE("matches the n! loop for n <= 7, both variants") {
    for (int n = 1; n <= 7; ++n) {
      for (Variant v : {Variant::R, Variant::L}) {
        const MarginalTable dp = coo_marginals_exact(n, v);
        const MarginalTable brute = coo_marginals_exact_bruteforce(n, v);
        for (int i = 1; i <= n; ++i) {
          for (int j = i; j <= n; ++j) CHECK(dp.at(i, j) == brute.at(i, j));
        }
      }
    }
  }

  SUBCASE("right edge spans are twice as likely as left edge spans") {
    for (int n = 4; n <= 9; ++n) {
      const MarginalTable t = coo_marginals_exact(n, Variant::R);
      for (int len = 2; len <= n - 1; ++len) {
        CHECK(t.at(n - len + 1, n) == 2 * t.at(1, len));
      }
    }
  }

  SUBCASE("L tables are the reflection of R tables") {
    for (int n = 2; n <= 8; ++n) {
      const MarginalTable r = coo_marginals_exact(n, Variant::R);
      const MarginalTable l = coo_marginals_exact(n, Variant::L);
      for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) CHECK(l.at(i, j) == r.at(n + 1 - j, n + 1 - i));
      }
    }
  }

  SUBCASE("row constancy fails from n = 4 on (the bias witness)") {
    for (int n = 4; n <= 8; ++n) {
      const MarginalTable t = coo_marginals_exact(n, Variant::R);
      bool constant = true;
      for (int len = 2; len <= n - 1 && constant; ++len) {
        for (int i = 2; i + len - 1 <= n; ++i) {
          if (t.at(i, i + len - 1) != t.at(1, len)) {
            constant = false;
            break;
          }
        }
      }
      CHECK(!constant);
    }
  }

  CHECK_THROWS_AS(coo_marginals_exact(11, Variant::R), std::invalid_argument);
}

TEST_CASE("greedy-decode marginals, Monte Carlo") {
  SUBCASE("same seed gives identical tables") {
    const MarginalTable a = coo_marginals_mc(5, Variant::R, 20000, 7);
    const MarginalTable b = coo_marginals_mc(5, Variant::R, 20000, 7);
    for (int i = 1; i <= 5; ++i) {
      for (int j = i; j <= 5; ++j) CHECK(a.at(i, j) == b.at(i, j));
    }
    CHECK(a.samples == 20000);
    CHECK(a.seed == 7);
  }

  SUBCASE("serial reference equals the parallel kernel") {
    for (Variant v : {Variant::R, Variant::L}) {
      const MarginalTable parallel = coo_marginals_mc(6, v, 50000, 11);
      const MarginalTable serial = coo_marginals_mc_serial(6, v, 50000, 11);
      for (int i = 1; i <= 6; ++i) {
        for (int j = i; j <= 6; ++j) CHECK(parallel.at(i, j) == serial.at(i, j));
      }
    }
  }

  SUBCASE("trivial and whole spans are certain") {
    const MarginalTable t = coo_marginals_mc(6, Variant::R, 5000, 3);
    for (int i = 1; i <= 6; ++i) CHECK(t.at(i, i) == BigRational(1));
    CHECK(t.at(1, 6) == BigRational(1));
  }

  SUBCASE("estimates agree with exact values within 3 standard errors") {
    const int n = 6;
    const std::uint64_t samples = 100000;
    const MarginalTable mc = coo_marginals_mc(n, Variant::R, samples, 42);
    const MarginalTable exact = coo_marginals_exact(n, Variant::R);
    for (int i = 1; i <= n; ++i) {
      for (int j = i; j <= n; ++j) {
        const double p = to_double(exact.at(i, j));
        const double estimate = to_double(mc.at(i, j));
        const double se = std::sqrt(p * (1 - p) / static_cast<double>(samples));
        CHECK(std::abs(estimate - p) <= 3 * se + 1e-12);
      }
    }
  }

  CHECK_THROWS_AS(coo_marginals_mc(3, Variant::R, 0, 1), std::invalid_argument);
}

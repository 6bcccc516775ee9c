#include <algorithm>
#include <numeric>

#include "doctest.h"

#include "coo/decoders.hpp"
#include "coo/rng.hpp"

using namespace coo;

TEST_CASE("gap splitting") {
  CHECK(to_bracket_string(gap_split_parse(GapScoreVector{5, 1})) == "(x(xx))");
  CHECK(to_bracket_string(gap_split_parse(GapScoreVector{1, 5})) == "((xx)x)");
  CHECK(to_bracket_string(gap_split_parse(GapScoreVector{})) == "x");

  SUBCASE("image over all orderings at n = 4 is complete") {
    GapScoreVector gaps{1, 2, 3};
    std::set<std::string> image;
    do {
      image.insert(to_bracket_string(gap_split_parse(gaps)));
    } while (std::next_permutation(gaps.begin(), gaps.end()));
    CHECK(image.size() == 5);
  }

  SUBCASE("reversing the gaps mirrors the tree") {
    Rng rng(41);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 2 + static_cast<int>(rng.below(8));
      GapScoreVector gaps(static_cast<std::size_t>(n) - 1);
      for (double& g : gaps) g = rng.uniform();
      GapScoreVector reversed(gaps.rbegin(), gaps.rend());
      CHECK(gap_split_parse(reversed) == mirror(gap_split_parse(gaps)));
    }
  }
}

TEST_CASE("span splitting") {
  SUBCASE("indicator tables recover every tree up to n = 7") {
    for (int n = 1; n <= 7; ++n) {
      for (const BinaryTree& t : enumerate_binary_trees(n)) {
        CHECK(span_split_parse(indicator_table(t)) == t);
      }
    }
  }

  SUBCASE("constant table splits a terminal off on the left at every level") {
    CHECK(to_bracket_string(span_split_parse(SpanScoreTable(4, 1.0))) == "(x(x(xx)))");
  }

  SUBCASE("random tables always give valid trees") {
    Rng rng(43);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 1 + static_cast<int>(rng.below(6));
      SpanScoreTable table(n);
      for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) table.set(i, j, rng.uniform());
      }
      const BinaryTree t = span_split_parse(table);
      CHECK(t.leaf_count() == n);
      CHECK(parse_canonical(to_bracket_string(t)) == t);  // well-formed binary tree
    }
  }

  SUBCASE("bad lookups throw") {
    const SpanScoreTable table(3);
    CHECK_THROWS_AS(table.at(2, 1), std::out_of_range);
    CHECK_THROWS_AS(table.at(1, 4), std::out_of_range);
  }
}

TEST_CASE("completeness images") {
  const CompletenessReport coo5 = completeness_image(DecoderKind::coo_r, 5);
  CHECK(coo5.image.size() == 13);
  CHECK(coo5.total == 14);
  CHECK(coo5.coverage == BigRational(13, 14));

  const CompletenessReport gap5 = completeness_image(DecoderKind::gap, 5);
  CHECK(gap5.coverage == BigRational(1));

  const CompletenessReport span6 = completeness_image(DecoderKind::span, 6);
  CHECK(span6.coverage == BigRational(1));

  const CompletenessReport l5 = completeness_image(DecoderKind::coo_l, 5);
  CHECK(l5.image.size() == 13);

  CHECK_THROWS_AS(completeness_image(DecoderKind::gap, 9), std::invalid_argument);
}

#include <algorithm>
#include <cmath>
#include <map>

#include "doctest.h"

#include "coo/tree.hpp"

using namespace coo;

TEST_CASE("bracket string serialization") {
  CHECK(to_bracket_string(BinaryTree::leaf()) == "x");
  CHECK(to_bracket_string(parse_canonical("((xx)((xx)x))")) == "((xx)((xx)x))");
  const BinaryTree t = BinaryTree::branch(
      BinaryTree::leaf(), BinaryTree::branch(BinaryTree::leaf(), BinaryTree::leaf()));
  CHECK(to_bracket_string(t) == "(x(xx))");
}

TEST_CASE("canonical parsing") {
  const BinaryTree t = parse_canonical("((xx)x)");
  CHECK(t.leaf_count() == 3);
  CHECK(to_bracket_string(t) == "((xx)x)");

  SUBCASE("arbitrary terminals normalize structurally") {
    CHECK(to_bracket_string(parse_canonical("((some trees) ((grow branches) leftwards))")) ==
          "((xx)((xx)x))");
  }
  SUBCASE("whitespace tolerated") {
    CHECK(to_bracket_string(parse_canonical(" ( x ( x x ) ) ")) == "(x(xx))");
  }
  SUBCASE("single leaf") { CHECK(parse_canonical("x").leaf_count() == 1); }
  SUBCASE("errors") {
    CHECK_THROWS_WITH_AS(parse_canonical("((x)x)"),
                         doctest::Contains("unary chain"), std::runtime_error);
    CHECK_THROWS_AS(parse_canonical("((xx)x"), std::runtime_error);
    CHECK_THROWS_AS(parse_canonical("(xx))"), std::runtime_error);
    CHECK_THROWS_AS(parse_canonical(""), std::runtime_error);
    CHECK_THROWS_AS(parse_canonical("   "), std::runtime_error);
    CHECK_THROWS_AS(parse_canonical("(xxx)"), std::runtime_error);
    CHECK_THROWS_AS(parse_canonical("xx"), std::runtime_error);
  }
}

TEST_CASE("round trip is exhaustive for n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    for (const BinaryTree& t : enumerate_binary_trees(n)) {
      CHECK(parse_canonical(to_bracket_string(t)) == t);
    }
  }
}

TEST_CASE("spans") {
  CHECK(spans(parse_canonical("(x(xx))"), false, true) == SpanSet{{1, 3}, {2, 3}});
  CHECK(spans(parse_canonical("((xx)((xx)x))"), false, true) ==
        SpanSet{{1, 5}, {1, 2}, {3, 5}, {3, 4}});
  CHECK(spans(parse_canonical("(xx)"), false, false).empty());
  CHECK(spans(parse_canonical("(xx)"), true, true) == SpanSet{{1, 1}, {2, 2}, {1, 2}});
  // [1,1] at n=1 counts as trivial
  CHECK(spans(BinaryTree::leaf(), false, true).empty());
  CHECK(spans(BinaryTree::leaf(), true, true) == SpanSet{{1, 1}});
}

TEST_CASE("mirror") {
  CHECK(to_bracket_string(mirror(parse_canonical("(x(xx))"))) == "((xx)x)");
  CHECK(to_bracket_string(mirror(parse_canonical("((xx)((xx)x))"))) == "((x(xx))(xx))");

  for (int n = 1; n <= 8; ++n) {
    for (const BinaryTree& t : enumerate_binary_trees(n)) {
      CHECK(mirror(mirror(t)) == t);
      // spans reflect: [i,j] -> [n+1-j, n+1-i]
      SpanSet reflected;
      for (const Span& s : spans(t, true, true)) {
        reflected.insert(Span{n + 1 - s.end, n + 1 - s.start});
      }
      CHECK(spans(mirror(t), true, true) == reflected);
    }
  }
}

TEST_CASE("enumeration") {
  const auto n3 = enumerate_binary_trees(3);
  REQUIRE(n3.size() == 2);
  CHECK(to_bracket_string(n3[0]) == "(x(xx))");  // leftmost split first
  CHECK(to_bracket_string(n3[1]) == "((xx)x)");
  CHECK(enumerate_binary_trees(5).size() == 14);
  CHECK(enumerate_binary_trees(1).size() == 1);
  for (int n = 1; n <= 12; ++n) {
    CHECK(BigInt(enumerate_binary_trees(n).size()) == catalan(n - 1));
  }
  CHECK_THROWS_AS(enumerate_binary_trees(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_binary_trees(17), std::invalid_argument);
}

TEST_CASE("catalan numbers") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(4) == 14);
  CHECK(catalan(10) == 16796);
  CHECK(catalan(30) == BigInt("3814986502092304"));
  const auto table = catalan_table(12);
  for (int m = 0; m <= 12; ++m) CHECK(table[m] == catalan(m));
}

TEST_CASE("uniform tree sampling") {
  SUBCASE("n=1 is always the leaf") {
    Rng rng(5);
    for (int i = 0; i < 10; ++i) CHECK(sample_uniform_tree(1, rng).leaf_count() == 1);
  }

  SUBCASE("n=3 frequencies") {
    Rng rng(1234);
    int first = 0;
    const int total = 10000;
    for (int i = 0; i < total; ++i) {
      if (to_bracket_string(sample_uniform_tree(3, rng)) == "(x(xx))") ++first;
    }
    const double freq = static_cast<double>(first) / total;
    CHECK(freq == doctest::Approx(0.5).epsilon(0.04));  // 0.5 +- 0.02
  }

  SUBCASE("n=5 within 4 sigma of 1/14 per tree") {
    Rng rng(99);
    std::map<std::string, int> counts;
    const int total = 50000;
    const UniformTreeSampler sampler(5);
    for (int i = 0; i < total; ++i) ++counts[to_bracket_string(sampler.sample(5, rng))];
    CHECK(counts.size() == 14);
    const double p = 1.0 / 14.0;
    const double sigma = std::sqrt(p * (1 - p) * total);
    for (const auto& [tree, count] : counts) {
      CHECK(std::abs(count - total * p) < 4 * sigma);
    }
  }

  SUBCASE("goodness of fit for n in {3,4,5,6}") {
    // chi-square critical values at p = 0.001
    const std::map<int, double> critical{{1, 10.828}, {4, 18.467}, {13, 34.528}, {41, 74.745}};
    for (int n = 3; n <= 6; ++n) {
      const auto trees = enumerate_binary_trees(n);
      std::map<std::string, int> counts;
      Rng rng(2024 + n);
      const int total = 50000;
      const UniformTreeSampler sampler(n);
      for (int i = 0; i < total; ++i) ++counts[to_bracket_string(sampler.sample(n, rng))];
      const double expected = static_cast<double>(total) / trees.size();
      double chi2 = 0.0;
      for (const BinaryTree& t : trees) {
        const double observed = counts[to_bracket_string(t)];
        chi2 += (observed - expected) * (observed - expected) / expected;
      }
      CHECK(chi2 < critical.at(static_cast<int>(trees.size()) - 1));
    }
  }
}

TEST_CASE("treebank trees") {
  const GoldTree g = parse_treebank_tree("(S (NP (DT the) (NN cat)) (VP (VBD sat)))");
  const auto terminals = gold_terminals(g);
  REQUIRE(terminals.size() == 3);
  CHECK(terminals[0] == std::pair<std::string, std::string>{"the", "DT"});
  CHECK(terminals[2] == std::pair<std::string, std::string>{"sat", "VBD"});
  CHECK(spans(g, false, true) == SpanSet{{1, 2}, {1, 3}});
  CHECK(gold_leaf_count(g) == 3);

  SUBCASE("outer wrapper unwraps") {
    const GoldTree w = parse_treebank_tree("( (S (NP (DT a) (NN dog)) (VBD ran)) )");
    CHECK(w.label == "S");
    CHECK(gold_leaf_count(w) == 3);
  }
  SUBCASE("round trip through the treebank string") {
    const GoldTree again = parse_treebank_tree(to_treebank_string(g));
    CHECK(spans(again, true, true) == spans(g, true, true));
    CHECK(gold_terminals(again) == gold_terminals(g));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(parse_treebank_tree("(S (NP"), std::runtime_error);
    CHECK_THROWS_AS(parse_treebank_tree("(S ())"), std::runtime_error);
  }
}

TEST_CASE("punctuation stripping re-indexes spans") {
  const GoldTree g =
      parse_treebank_tree("(S (NP (DT the) (NN cat)) (, ,) (VP (VBD sat)) (. .))");
  const auto stripped = strip_terminals_by_tag(g, {",", "."});
  REQUIRE(stripped.has_value());
  CHECK(gold_leaf_count(*stripped) == 3);
  CHECK(spans(*stripped, false, true) == SpanSet{{1, 2}, {1, 3}});

  const auto all_gone = strip_terminals_by_tag(parse_treebank_tree("(S (. .))"), {"."});
  CHECK(!all_gone.has_value());
}

TEST_CASE("gold_from_binary") {
  const GoldTree g = gold_from_binary(parse_canonical("(x(xx))"));
  CHECK(gold_leaf_count(g) == 3);
  CHECK(spans(g, false, true) == SpanSet{{1, 3}, {2, 3}});
}

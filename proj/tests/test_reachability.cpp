#include <algorithm>

#include "doctest.h"

#include "coo/reachability.hpp"

using namespace coo;

namespace {
const char* kUnreachable5 = "((xx)((xx)x))";

bool contains(const std::vector<BinaryTree>& trees, const BinaryTree& t) {
  return std::any_of(trees.begin(), trees.end(), [&](const BinaryTree& u) { return u == t; });
}
}  // namespace

TEST_CASE("forbidden substring test") {
  CHECK(!is_recoverable(parse_canonical(kUnreachable5), Variant::R));
  CHECK(is_recoverable(parse_canonical("(x(xx))"), Variant::R));
  // the mirrored tree is L-unrecoverable by symmetry
  CHECK(!is_recoverable(parse_canonical("((x(xx))(xx))"), Variant::L));
  CHECK(is_recoverable(BinaryTree::leaf(), Variant::R));
}

TEST_CASE("structural test") {
  CHECK(!is_recoverable_structural(parse_canonical(kUnreachable5)));
  CHECK(is_recoverable_structural(parse_canonical("(x(x(x(xx))))")));
  int recoverable = 0;
  for (const BinaryTree& t : enumerate_binary_trees(5)) {
    if (is_recoverable_structural(t)) ++recoverable;
  }
  CHECK(recoverable == 13);

  SUBCASE("equals the substring test on every tree up to n = 10") {
    for (int n = 1; n <= 10; ++n) {
      for (const BinaryTree& t : enumerate_binary_trees(n)) {
        CHECK(is_recoverable_structural(t) == is_recoverable(t, Variant::R));
        CHECK(is_recoverable_structural(mirror(t)) == is_recoverable(t, Variant::L));
      }
    }
  }
}

TEST_CASE("enumerate_reachable") {
  const auto r3 = enumerate_reachable(3, Variant::R);
  REQUIRE(r3.size() == 2);
  CHECK(contains(r3, parse_canonical("(x(xx))")));
  CHECK(contains(r3, parse_canonical("((xx)x)")));

  const auto r5 = enumerate_reachable(5, Variant::R);
  CHECK(r5.size() == 13);
  CHECK(!contains(r5, parse_canonical(kUnreachable5)));

  const auto l5 = enumerate_reachable(5, Variant::L);
  CHECK(l5.size() == 13);
  for (const BinaryTree& t : l5) CHECK(contains(r5, mirror(t)));

  CHECK_THROWS_AS(enumerate_reachable(11, Variant::R), std::invalid_argument);

  SUBCASE("L and R images have equal size up to n = 8") {
    for (int n = 1; n <= 8; ++n) {
      CHECK(enumerate_reachable(n, Variant::L).size() ==
            enumerate_reachable(n, Variant::R).size());
    }
  }

  SUBCASE("matches the literal permutation loop up to n = 7") {
    for (int n = 1; n <= 7; ++n) {
      for (Variant v : {Variant::R, Variant::L}) {
        const auto fast = enumerate_reachable(n, v);
        const auto brute = enumerate_reachable_bruteforce(n, v, /*parallel=*/false);
        REQUIRE(fast.size() == brute.size());
        for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == brute[i]);
      }
    }
  }

  SUBCASE("parallel permutation loop equals serial") {
    for (Variant v : {Variant::R, Variant::L}) {
      const auto serial = enumerate_reachable_bruteforce(7, v, false);
      const auto parallel = enumerate_reachable_bruteforce(7, v, true);
      REQUIRE(serial.size() == parallel.size());
      for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i] == parallel[i]);
    }
  }
}

TEST_CASE("membership in the image equals the predicates") {
  for (int n = 3; n <= 8; ++n) {
    for (Variant v : {Variant::R, Variant::L}) {
      const auto image = enumerate_reachable(n, v);
      for (const BinaryTree& t : enumerate_binary_trees(n)) {
        CHECK(is_recoverable(t, v) == contains(image, t));
      }
    }
  }
}

TEST_CASE("count_recoverable_dp") {
  CHECK(count_recoverable_dp(4) == 5);
  CHECK(count_recoverable_dp(5) == 13);
  CHECK(count_recoverable_dp(6) == BigInt(enumerate_reachable(6, Variant::R).size()));
  for (int n = 1; n <= 10; ++n) {
    CHECK(count_recoverable_dp(n) == BigInt(enumerate_reachable(n, Variant::R).size()));
  }
  CHECK_THROWS_AS(count_recoverable_dp(0), std::invalid_argument);
}

TEST_CASE("closed recurrence") {
  CHECK(recurrence_a(1) == 1);
  CHECK(recurrence_a(2) == 1);
  CHECK(recurrence_a(3) == 3);
  CHECK(recurrence_a(20) == count_derivations(20));
  CHECK_THROWS_AS(recurrence_a(2001), std::invalid_argument);
}

TEST_CASE("witness scores") {
  CHECK(!witness_scores(parse_canonical(kUnreachable5), Variant::R).has_value());

  const auto comb_witness = witness_scores(parse_canonical("(x(x(xx)))"), Variant::R);
  REQUIRE(comb_witness.has_value());
  CHECK(*comb_witness == ScoreVector{4, 3, 2, 1});
  CHECK(to_bracket_string(coo_parse(ScoreVector{4, 3, 2, 1}, Variant::R)) == "(x(x(xx)))");

  SUBCASE("round trips on every reachable tree at n = 7, absent otherwise") {
    for (Variant v : {Variant::R, Variant::L}) {
      for (const BinaryTree& t : enumerate_binary_trees(7)) {
        const auto witness = witness_scores(t, v);
        CHECK(witness.has_value() == is_recoverable(t, v));
        if (witness) CHECK(coo_parse(*witness, v) == t);
      }
    }
  }
}

TEST_CASE("reachability report") {
  const auto rows = reachability_report(12);
  REQUIRE(rows.size() == 12);

  const ReachabilityRow& r5 = rows[4];
  CHECK(r5.n == 5);
  CHECK(r5.catalan_count == 14);
  CHECK(r5.reachable_dp == 13);
  REQUIRE(r5.reachable_enumerated.has_value());
  CHECK(*r5.reachable_enumerated == 13);
  CHECK(r5.recurrence == 23);
  REQUIRE(r5.derivations.has_value());
  CHECK(*r5.derivations == 23);
  CHECK(r5.ratio == BigRational(13, 14));
  CHECK(r5.dp_equals_enumerated());
  CHECK(r5.recurrence_equals_derivations());
  CHECK(!r5.recurrence_equals_dp());  // the derivation-vs-tree gap, surfaced

  const ReachabilityRow& r2 = rows[1];
  CHECK(r2.ratio == BigRational(1));

  for (const ReachabilityRow& row : rows) {
    CHECK(row.dp_equals_enumerated());
    CHECK(row.recurrence_equals_derivations());
  }
  CHECK(!report_notes(rows).empty());

  SUBCASE("ratio strictly decreasing from n = 5 on") {
    const auto longer = reachability_report(50, /*enum_cap=*/0);
    for (int n = 5; n < 50; ++n) {
      CHECK(longer[n].ratio < longer[n - 1].ratio);
    }
  }
}

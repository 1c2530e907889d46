#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "speclat/error.hpp"
#include "speclat/relation.hpp"

using namespace speclat;

TEST_CASE("reflexivity") {
  CHECK(BinaryRelation::identity(Carrier(3)).is_reflexive());
  CHECK_FALSE(BinaryRelation(Carrier(2)).is_reflexive());
  CHECK(BinaryRelation::total(Carrier(4)).is_reflexive());
}

TEST_CASE("transitivity") {
  Carrier c3(3);
  BinaryRelation broken = fx::relation(c3, {{0, 1}, {1, 2}});
  CHECK_FALSE(broken.is_transitive());
  broken.set(0, 2);
  CHECK(broken.is_transitive());
  CHECK(BinaryRelation::identity(c3).is_transitive());
  CHECK(BinaryRelation::total(c3).is_transitive());
}

TEST_CASE("preorder, partial order, equivalence") {
  Carrier c3(3);
  BinaryRelation chain = fx::with_identity(c3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(chain.is_partial_order());
  CHECK(chain.is_preorder());
  CHECK_FALSE(chain.is_equivalence());

  Carrier c2(2);
  BinaryRelation both = fx::with_identity(c2, {{0, 1}, {1, 0}});
  CHECK(both.is_equivalence());

  BinaryRelation one_way = fx::with_identity(c3, {{0, 1}});
  CHECK(one_way.is_preorder());
  CHECK_FALSE(one_way.is_equivalence());
}

TEST_CASE("coarser is containment") {
  Carrier c2(2);
  BinaryRelation chain = fx::with_identity(c2, {{0, 1}});
  CHECK(is_coarser(chain, BinaryRelation::total(c2)));
  CHECK_FALSE(is_coarser(BinaryRelation::total(c2), BinaryRelation::identity(c2)));
  CHECK(is_coarser(chain, chain));
  CHECK_THROWS_AS(is_coarser(chain, BinaryRelation::total(Carrier(3))),
                  PreconditionError);
}

TEST_CASE("coarser is a partial order on relations") {
  // Exhaustive over all 16 relations on two elements.
  Carrier c2(2);
  std::vector<BinaryRelation> all;
  for (unsigned long k = 0; k < 16; ++k) {
    all.push_back(oracle::to_relation(c2, oracle::nth_matrix(2, k)));
  }
  for (const auto& a : all) {
    CHECK(is_coarser(a, a));
    for (const auto& b : all) {
      if (is_coarser(a, b) && is_coarser(b, a)) {
        CHECK(a == b);
      }
      for (const auto& c : all) {
        if (is_coarser(a, b) && is_coarser(b, c)) {
          CHECK(is_coarser(a, c));
        }
      }
    }
  }
}

TEST_CASE("intersection") {
  Carrier c2(2);
  BinaryRelation chain = fx::with_identity(c2, {{0, 1}});

  SECTION("singleton") {
    std::vector<BinaryRelation> rs = {chain};
    CHECK(intersect(rs) == chain);
  }
  SECTION("finer relation absorbs") {
    std::vector<BinaryRelation> rs = {chain, BinaryRelation::total(c2)};
    CHECK(intersect(rs) == chain);
  }
  SECTION("computed against a bitwise oracle") {
    BinaryRelation left = fx::with_identity(c2, {{0, 1}});
    BinaryRelation right = fx::with_identity(c2, {{1, 0}});
    std::vector<BinaryRelation> rs = {left, right};
    CHECK(intersect(rs) == BinaryRelation::identity(c2));
  }
  SECTION("errors") {
    std::vector<BinaryRelation> empty;
    CHECK_THROWS_AS(intersect(empty), PreconditionError);
    std::vector<BinaryRelation> mismatched = {chain,
                                              BinaryRelation::total(Carrier(3))};
    CHECK_THROWS_AS(intersect(mismatched), PreconditionError);
  }
}

TEST_CASE("intersection laws, exhaustive on two elements") {
  Carrier c2(2);
  std::vector<BinaryRelation> all;
  for (unsigned long k = 0; k < 16; ++k) {
    all.push_back(oracle::to_relation(c2, oracle::nth_matrix(2, k)));
  }
  for (const auto& a : all) {
    std::vector<BinaryRelation> aa = {a, a};
    CHECK(intersect(aa) == a);
    for (const auto& b : all) {
      std::vector<BinaryRelation> ab = {a, b};
      std::vector<BinaryRelation> ba = {b, a};
      CHECK(intersect(ab) == intersect(ba));
      for (const auto& c : all) {
        std::vector<BinaryRelation> bc = {b, c};
        std::vector<BinaryRelation> ab_then_c = {intersect(ab), c};
        std::vector<BinaryRelation> a_then_bc = {a, intersect(bc)};
        CHECK(intersect(ab_then_c) == intersect(a_then_bc));
      }
    }
  }
}

TEST_CASE("symmetric core") {
  Carrier c2(2);
  BinaryRelation loop = fx::with_identity(c2, {{0, 1}, {1, 0}});
  CHECK(loop.symmetric_core() == BinaryRelation::total(c2));

  Carrier c3(3);
  BinaryRelation order = fx::with_identity(c3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(order.symmetric_core() == BinaryRelation::identity(c3));
  CHECK(BinaryRelation::total(c3).symmetric_core() == BinaryRelation::total(c3));
}

TEST_CASE("symmetric core of a preorder is an equivalence") {
  for (int n = 1; n <= 3; ++n) {
    Carrier carrier(n);
    auto preorders = enumerate_relations_satisfying(
        carrier, [](const BinaryRelation& r) { return r.is_preorder(); });
    for (const auto& r : preorders) {
      CHECK(r.symmetric_core().is_equivalence());
    }
  }
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_relations_satisfying(Carrier(1), [](const BinaryRelation& r) {
          return r.is_preorder();
        }).size() == 1);
  CHECK(enumerate_relations_satisfying(Carrier(2), [](const BinaryRelation& r) {
          return r.is_equivalence();
        }).size() == 2);

  // Brute force over all 16 candidate matrices with the naive oracle.
  size_t expected = 0;
  for (unsigned long k = 0; k < 16; ++k) {
    if (oracle::is_preorder(oracle::nth_matrix(2, k))) {
      ++expected;
    }
  }
  CHECK(expected == 4);
  auto preorders = enumerate_relations_satisfying(
      Carrier(2), [](const BinaryRelation& r) { return r.is_preorder(); });
  CHECK(preorders.size() == expected);
}

TEST_CASE("enumeration agrees with the naive oracle on three elements") {
  Carrier c3(3);
  std::vector<uint64_t> expected_keys;
  for (unsigned long k = 0; k < 512; ++k) {
    oracle::BoolMatrix m = oracle::nth_matrix(3, k);
    if (oracle::is_partial_order(m)) {
      expected_keys.push_back(oracle::to_relation(c3, m).row_major_key());
    }
  }
  auto orders = enumerate_relations_satisfying(
      c3, [](const BinaryRelation& r) { return r.is_partial_order(); });
  REQUIRE(orders.size() == expected_keys.size());
  for (size_t i = 0; i < orders.size(); ++i) {
    CHECK(orders[i].row_major_key() == expected_keys[i]);
  }
}

TEST_CASE("enumeration emits strictly increasing row-major keys") {
  auto rs = enumerate_relations_satisfying(
      Carrier(3), [](const BinaryRelation& r) { return r.is_preorder(); });
  for (size_t i = 1; i < rs.size(); ++i) {
    CHECK(rs[i - 1].row_major_key() < rs[i].row_major_key());
  }
  Carrier c3(3);
  auto containing = enumerate_relations_containing(
      BinaryRelation::identity(c3),
      [](const BinaryRelation& r) { return r.is_preorder(); });
  for (size_t i = 1; i < containing.size(); ++i) {
    CHECK(containing[i - 1].row_major_key() < containing[i].row_major_key());
  }
  // Restricting to supersets of the identity must not lose anything.
  CHECK(containing.size() == rs.size());
}

TEST_CASE("enumeration guard") {
  Carrier c6(6);
  CHECK_THROWS_AS(enumerate_relations_satisfying(
                      c6, [](const BinaryRelation&) { return true; }),
                  GuardError);
  // The guard is overridable and tunable; shrink it to see it trip, then
  // override.
  EnumerationLimits tight{.max_bits = 3, .allow_large = false};
  CHECK_THROWS_AS(enumerate_relations_satisfying(
                      Carrier(2), [](const BinaryRelation&) { return true; }, tight),
                  GuardError);
  EnumerationLimits overridden{.max_bits = 3, .allow_large = true};
  CHECK(enumerate_relations_satisfying(
            Carrier(2), [](const BinaryRelation&) { return true; }, overridden)
            .size() == 16);
}

TEST_CASE("carrier validation") {
  CHECK_THROWS_AS(Carrier(0), InvalidStructureError);
  CHECK_THROWS_AS(Carrier(2, {"x", "x"}), InvalidStructureError);
  CHECK_THROWS_AS(Carrier(2, {"x"}), InvalidStructureError);
  CHECK_THROWS_AS(Carrier(1, {""}), InvalidStructureError);
  CHECK(Carrier(2).name(1) == "x1");
}

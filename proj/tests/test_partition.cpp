#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "speclat/error.hpp"
#include "speclat/partition.hpp"

using namespace speclat;

TEST_CASE("partition counts are the Bell numbers") {
  CHECK(partition_count(1) == 1);
  CHECK(partition_count(2) == 2);
  CHECK(partition_count(3) == 5);
  CHECK(partition_count(4) == 15);
  CHECK(partition_count(5) == 52);
}

TEST_CASE("growth-string order starts coarse and ends discrete") {
  auto ps = enumerate_partitions(3);
  REQUIRE(ps.size() == 5);
  CHECK(ps.front().block_count() == 1);
  CHECK(ps.back().block_count() == 3);
  // Strings are pairwise distinct and strictly increasing lexicographically.
  for (size_t i = 1; i < ps.size(); ++i) {
    CHECK(ps[i - 1].rgs() < ps[i].rgs());
  }
}

TEST_CASE("blocks are sorted by their minimum element") {
  for (const SetPartition& p : enumerate_partitions(4)) {
    for (int b = 1; b < p.block_count(); ++b) {
      CHECK(p.block(b - 1).front() < p.block(b).front());
    }
    for (int e = 0; e < 4; ++e) {
      const auto& block = p.block(p.block_of(e));
      CHECK(std::find(block.begin(), block.end(), e) != block.end());
    }
  }
}

TEST_CASE("from_blocks validation") {
  CHECK_THROWS_AS(SetPartition::from_blocks(3, {{0, 1}}), PreconditionError);
  CHECK_THROWS_AS(SetPartition::from_blocks(3, {{0, 1}, {1, 2}}), PreconditionError);
  CHECK_THROWS_AS(SetPartition::from_blocks(3, {{0, 1}, {2, 3}}), PreconditionError);
  CHECK_THROWS_AS(SetPartition::from_blocks(3, {{0, 1, 2}, {}}), PreconditionError);
  SetPartition p = SetPartition::from_blocks(4, {{2, 3}, {0, 1}});
  CHECK(p.block(0) == std::vector<int>{0, 1});
  CHECK(p.block(1) == std::vector<int>{2, 3});
}

TEST_CASE("relation round trip over all partitions of a 4-set") {
  Carrier c4(4);
  for (const SetPartition& p : enumerate_partitions(4)) {
    BinaryRelation rel = p.to_relation(c4);
    CHECK(rel.is_equivalence());
    CHECK(SetPartition::from_equivalence(rel) == p);
  }
  CHECK_THROWS_AS(
      SetPartition::from_equivalence(fx::with_identity(c4, {{0, 1}})),
      PreconditionError);
}

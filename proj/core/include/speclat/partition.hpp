#ifndef SPECLAT_PARTITION_HPP
#define SPECLAT_PARTITION_HPP

#include <string>
#include <vector>

#include "speclat/relation.hpp"

namespace speclat {

/// A set partition of {0, ..., n-1}. Blocks are sorted internally and
/// ordered by their minimum element, which coincides with the block order
/// of the restricted growth string.
class SetPartition {
 public:
  /// From a restricted growth string: a[0] = 0 and
  /// a[i] <= 1 + max(a[0..i-1]).
  static SetPartition from_rgs(std::span<const int> rgs);

  /// From explicit blocks; they must partition {0..n-1}.
  static SetPartition from_blocks(int n, std::vector<std::vector<int>> blocks);

  /// From an equivalence relation (throws PreconditionError otherwise).
  static SetPartition from_equivalence(const BinaryRelation& rel);

  int size() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int block_of(int element) const { return block_of_[static_cast<size_t>(element)]; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& block(int b) const { return blocks_[static_cast<size_t>(b)]; }

  std::vector<int> rgs() const;
  BinaryRelation to_relation(const Carrier& carrier) const;

  bool operator==(const SetPartition& other) const {
    return n_ == other.n_ && blocks_ == other.blocks_;
  }

 private:
  SetPartition() = default;
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
};

/// All set partitions of an n-set in lexicographic restricted growth
/// string order (the all-zero string, i.e. the single-block partition,
/// comes first; the discrete partition comes last).
std::vector<SetPartition> enumerate_partitions(int n);

/// Number of set partitions of an n-set, counted by enumeration.
long partition_count(int n);

}  // namespace speclat

#endif  // SPECLAT_PARTITION_HPP

#include "speclat/partition.hpp"

#include <algorithm>

#include "speclat/error.hpp"

namespace speclat {

SetPartition SetPartition::from_rgs(std::span<const int> rgs) {
  if (rgs.empty()) {
    throw PreconditionError("restricted growth string must be non-empty");
  }
  SetPartition p;
  p.n_ = static_cast<int>(rgs.size());
  p.block_of_.assign(rgs.begin(), rgs.end());
  int max_seen = -1;
  for (size_t i = 0; i < rgs.size(); ++i) {
    if (rgs[i] < 0 || rgs[i] > max_seen + 1) {
      throw PreconditionError("not a restricted growth string at position " +
                              std::to_string(i));
    }
    if (rgs[i] == max_seen + 1) {
      ++max_seen;
      p.blocks_.emplace_back();
    }
    p.blocks_[static_cast<size_t>(rgs[i])].push_back(static_cast<int>(i));
  }
  return p;
}

SetPartition SetPartition::from_blocks(int n, std::vector<std::vector<int>> blocks) {
  std::vector<int> block_of(static_cast<size_t>(n), -1);
  for (auto& block : blocks) {
    if (block.empty()) {
      throw PreconditionError("partition block is empty");
    }
    std::sort(block.begin(), block.end());
    for (int e : block) {
      if (e < 0 || e >= n) {
        throw PreconditionError("partition element " + std::to_string(e) +
                                " out of range for size " + std::to_string(n));
      }
      if (block_of[static_cast<size_t>(e)] != -1) {
        throw PreconditionError("partition element " + std::to_string(e) +
                                " appears in two blocks");
      }
      block_of[static_cast<size_t>(e)] = 0;  // placeholder, reassigned below
    }
  }
  for (int e = 0; e < n; ++e) {
    if (block_of[static_cast<size_t>(e)] == -1) {
      throw PreconditionError("partition misses element " + std::to_string(e));
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  SetPartition p;
  p.n_ = n;
  p.blocks_ = std::move(blocks);
  p.block_of_.assign(static_cast<size_t>(n), -1);
  for (size_t b = 0; b < p.blocks_.size(); ++b) {
    for (int e : p.blocks_[b]) {
      p.block_of_[static_cast<size_t>(e)] = static_cast<int>(b);
    }
  }
  return p;
}

SetPartition SetPartition::from_equivalence(const BinaryRelation& rel) {
  if (!rel.is_equivalence()) {
    throw PreconditionError("relation is not an equivalence");
  }
  int n = rel.size();
  std::vector<int> rgs(static_cast<size_t>(n), -1);
  int next_block = 0;
  for (int a = 0; a < n; ++a) {
    if (rgs[static_cast<size_t>(a)] != -1) {
      continue;
    }
    for (int b = a; b < n; ++b) {
      if (rel.contains(a, b)) {
        rgs[static_cast<size_t>(b)] = next_block;
      }
    }
    ++next_block;
  }
  return from_rgs(rgs);
}

std::vector<int> SetPartition::rgs() const { return block_of_; }

BinaryRelation SetPartition::to_relation(const Carrier& carrier) const {
  if (carrier.size() != n_) {
    throw PreconditionError("partition of size " + std::to_string(n_) +
                            " vs carrier of size " + std::to_string(carrier.size()));
  }
  BinaryRelation r(carrier);
  for (const auto& block : blocks_) {
    for (int a : block) {
      for (int b : block) {
        r.set(a, b);
      }
    }
  }
  return r;
}

std::vector<SetPartition> enumerate_partitions(int n) {
  if (n < 1) {
    throw PreconditionError("partitions require n >= 1");
  }
  std::vector<SetPartition> out;
  std::vector<int> rgs(static_cast<size_t>(n), 0);
  while (true) {
    out.push_back(SetPartition::from_rgs(rgs));
    // Advance to the next restricted growth string in lexicographic order.
    int i = n - 1;
    for (; i >= 1; --i) {
      int prefix_max = 0;
      for (int j = 0; j < i; ++j) {
        prefix_max = std::max(prefix_max, rgs[static_cast<size_t>(j)]);
      }
      if (rgs[static_cast<size_t>(i)] <= prefix_max) {
        ++rgs[static_cast<size_t>(i)];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        break;
      }
    }
    if (i == 0) {
      break;
    }
  }
  return out;
}

long partition_count(int n) {
  return static_cast<long>(enumerate_partitions(n).size());
}

}  // namespace speclat

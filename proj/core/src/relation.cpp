#include "speclat/relation.hpp"

#include <algorithm>
#include <bit>

#include "speclat/error.hpp"

namespace speclat {

namespace {

uint64_t row_mask(int n) {
  return n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
}

void require_same_carrier(const BinaryRelation& a, const BinaryRelation& b,
                          const char* op) {
  if (a.size() != b.size()) {
    throw PreconditionError(std::string(op) + ": carrier mismatch (" +
                            std::to_string(a.size()) + " vs " +
                            std::to_string(b.size()) + ")");
  }
}

}  // namespace

Carrier::Carrier(int size) : size_(size) {
  if (size < 1) {
    throw InvalidStructureError("carrier size must be >= 1, got " +
                                std::to_string(size));
  }
  names_.reserve(static_cast<size_t>(size));
  for (int i = 0; i < size; ++i) {
    names_.push_back("x" + std::to_string(i));
  }
}

Carrier::Carrier(int size, std::vector<std::string> names)
    : size_(size), names_(std::move(names)) {
  if (size < 1) {
    throw InvalidStructureError("carrier size must be >= 1, got " +
                                std::to_string(size));
  }
  if (static_cast<int>(names_.size()) != size) {
    throw InvalidStructureError("carrier of size " + std::to_string(size) +
                                " given " + std::to_string(names_.size()) +
                                " names");
  }
  for (size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) {
      throw InvalidStructureError("carrier name " + std::to_string(i) +
                                  " is empty");
    }
    for (size_t j = i + 1; j < names_.size(); ++j) {
      if (names_[i] == names_[j]) {
        throw InvalidStructureError("duplicate carrier name '" + names_[i] + "'");
      }
    }
  }
}

BinaryRelation::BinaryRelation(Carrier carrier)
    : carrier_(std::move(carrier)),
      rows_(static_cast<size_t>(carrier_.size()), 0) {
  if (carrier_.size() > 64) {
    throw GuardError("relations support carriers of at most 64 elements");
  }
}

BinaryRelation BinaryRelation::identity(const Carrier& carrier) {
  BinaryRelation r(carrier);
  for (int i = 0; i < r.size(); ++i) {
    r.set(i, i);
  }
  return r;
}

BinaryRelation BinaryRelation::total(const Carrier& carrier) {
  BinaryRelation r(carrier);
  uint64_t mask = row_mask(r.size());
  for (auto& row : r.rows_) {
    row = mask;
  }
  return r;
}

BinaryRelation BinaryRelation::from_pairs(
    const Carrier& carrier, std::span<const std::pair<int, int>> pairs) {
  BinaryRelation r(carrier);
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= r.size() || b < 0 || b >= r.size()) {
      throw PreconditionError("pair (" + std::to_string(a) + ", " +
                              std::to_string(b) + ") out of range for carrier of size " +
                              std::to_string(r.size()));
    }
    r.set(a, b);
  }
  return r;
}

void BinaryRelation::set(int a, int b, bool value) {
  uint64_t bit = uint64_t{1} << b;
  if (value) {
    rows_[static_cast<size_t>(a)] |= bit;
  } else {
    rows_[static_cast<size_t>(a)] &= ~bit;
  }
}

std::vector<std::pair<int, int>> BinaryRelation::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a) {
    uint64_t row = rows_[static_cast<size_t>(a)];
    while (row != 0) {
      int b = std::countr_zero(row);
      out.emplace_back(a, b);
      row &= row - 1;
    }
  }
  return out;
}

int BinaryRelation::pair_count() const {
  int count = 0;
  for (uint64_t row : rows_) {
    count += std::popcount(row);
  }
  return count;
}

bool BinaryRelation::is_reflexive() const {
  for (int i = 0; i < size(); ++i) {
    if (!contains(i, i)) {
      return false;
    }
  }
  return true;
}

bool BinaryRelation::is_symmetric() const {
  for (int a = 0; a < size(); ++a) {
    for (int b = a + 1; b < size(); ++b) {
      if (contains(a, b) != contains(b, a)) {
        return false;
      }
    }
  }
  return true;
}

bool BinaryRelation::is_antisymmetric() const {
  for (int a = 0; a < size(); ++a) {
    for (int b = a + 1; b < size(); ++b) {
      if (contains(a, b) && contains(b, a)) {
        return false;
      }
    }
  }
  return true;
}

bool BinaryRelation::is_transitive() const {
  for (int a = 0; a < size(); ++a) {
    uint64_t reach = 0;
    uint64_t row = rows_[static_cast<size_t>(a)];
    uint64_t remaining = row;
    while (remaining != 0) {
      int b = std::countr_zero(remaining);
      reach |= rows_[static_cast<size_t>(b)];
      remaining &= remaining - 1;
    }
    if ((reach & ~row) != 0) {
      return false;
    }
  }
  return true;
}

bool BinaryRelation::is_preorder() const {
  return is_reflexive() && is_transitive();
}

bool BinaryRelation::is_partial_order() const {
  return is_reflexive() && is_antisymmetric() && is_transitive();
}

bool BinaryRelation::is_equivalence() const {
  return is_reflexive() && is_symmetric() && is_transitive();
}

BinaryRelation BinaryRelation::symmetric_core() const {
  BinaryRelation out(carrier_);
  for (int a = 0; a < size(); ++a) {
    for (int b = 0; b < size(); ++b) {
      if (contains(a, b) && contains(b, a)) {
        out.set(a, b);
      }
    }
  }
  return out;
}

BinaryRelation BinaryRelation::transpose() const {
  BinaryRelation out(carrier_);
  for (int a = 0; a < size(); ++a) {
    for (int b = 0; b < size(); ++b) {
      if (contains(a, b)) {
        out.set(b, a);
      }
    }
  }
  return out;
}

uint64_t BinaryRelation::row_major_key() const {
  if (size() > 8) {
    throw GuardError("row_major_key requires carrier size <= 8");
  }
  uint64_t key = 0;
  for (int a = 0; a < size(); ++a) {
    for (int b = 0; b < size(); ++b) {
      key = (key << 1) | (contains(a, b) ? 1u : 0u);
    }
  }
  return key;
}

bool is_coarser(const BinaryRelation& fine, const BinaryRelation& coarse) {
  require_same_carrier(fine, coarse, "is_coarser");
  for (int a = 0; a < fine.size(); ++a) {
    if ((fine.row_bits(a) & ~coarse.row_bits(a)) != 0) {
      return false;
    }
  }
  return true;
}

BinaryRelation intersect(std::span<const BinaryRelation> relations) {
  if (relations.empty()) {
    throw PreconditionError("intersect: empty sequence of relations");
  }
  BinaryRelation out = relations.front();
  for (size_t i = 1; i < relations.size(); ++i) {
    require_same_carrier(out, relations[i], "intersect");
    for (int a = 0; a < out.size(); ++a) {
      out.set_row(a, out.row_bits(a) & relations[i].row_bits(a));
    }
  }
  return out;
}

namespace {

// Shared sweep: assigns the free cells (row-major) every way, most
// significant cell first, so results come out in ascending row-major key
// order.
std::vector<BinaryRelation> sweep_free_cells(
    const BinaryRelation& base, const std::vector<std::pair<int, int>>& free_cells,
    const RelationPredicate& predicate, const EnumerationLimits& limits) {
  int bits = static_cast<int>(free_cells.size());
  if (bits > limits.max_bits && !limits.allow_large) {
    throw GuardError("enumeration over " + std::to_string(bits) +
                     " free cells exceeds the guard of " +
                     std::to_string(limits.max_bits) +
                     " (pass allow_large to override)");
  }
  std::vector<BinaryRelation> out;
  BinaryRelation candidate = base;
  uint64_t count = uint64_t{1} << bits;
  for (uint64_t k = 0; k < count; ++k) {
    for (int c = 0; c < bits; ++c) {
      bool bit = (k >> (bits - 1 - c)) & 1u;
      candidate.set(free_cells[static_cast<size_t>(c)].first,
                    free_cells[static_cast<size_t>(c)].second, bit);
    }
    if (predicate(candidate)) {
      out.push_back(candidate);
    }
  }
  return out;
}

}  // namespace

std::vector<BinaryRelation> enumerate_relations_satisfying(
    const Carrier& carrier, const RelationPredicate& predicate,
    const EnumerationLimits& limits) {
  int n = carrier.size();
  std::vector<std::pair<int, int>> cells;
  cells.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      cells.emplace_back(a, b);
    }
  }
  return sweep_free_cells(BinaryRelation(carrier), cells, predicate, limits);
}

std::vector<BinaryRelation> enumerate_relations_containing(
    const BinaryRelation& base, const RelationPredicate& predicate,
    const EnumerationLimits& limits) {
  std::vector<std::pair<int, int>> free_cells;
  for (int a = 0; a < base.size(); ++a) {
    for (int b = 0; b < base.size(); ++b) {
      if (!base.contains(a, b)) {
        free_cells.emplace_back(a, b);
      }
    }
  }
  return sweep_free_cells(base, free_cells, predicate, limits);
}

}  // namespace speclat

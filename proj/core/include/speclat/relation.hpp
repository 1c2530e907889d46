#ifndef SPECLAT_RELATION_HPP
#define SPECLAT_RELATION_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "speclat/carrier.hpp"

namespace speclat {

/// Limits for exhaustive relation enumeration. The default admits every
/// unrestricted sweep up to 5 elements (25 candidate bits); larger search
/// spaces throw GuardError unless allow_large is set.
struct EnumerationLimits {
  int max_bits = 25;
  bool allow_large = false;
};

/// A binary relation on a finite carrier, stored as packed bit rows
/// (one 64-bit word per row). Immutable by convention once shared:
/// construction code fills it in, everything downstream only reads.
class BinaryRelation {
 public:
  explicit BinaryRelation(Carrier carrier);

  static BinaryRelation identity(const Carrier& carrier);
  static BinaryRelation total(const Carrier& carrier);
  static BinaryRelation from_pairs(const Carrier& carrier,
                                   std::span<const std::pair<int, int>> pairs);

  int size() const { return carrier_.size(); }
  const Carrier& carrier() const { return carrier_; }

  bool contains(int a, int b) const {
    return (rows_[static_cast<size_t>(a)] >> b) & 1u;
  }
  void set(int a, int b, bool value = true);
  uint64_t row_bits(int a) const { return rows_[static_cast<size_t>(a)]; }
  void set_row(int a, uint64_t bits) { rows_[static_cast<size_t>(a)] = bits; }

  /// All pairs (a, b) of the relation in row-major order.
  std::vector<std::pair<int, int>> pairs() const;
  int pair_count() const;

  bool is_reflexive() const;
  bool is_symmetric() const;
  bool is_antisymmetric() const;
  /// True iff composing the relation with itself stays inside it,
  /// computed by boolean matrix multiplication on the bit rows.
  bool is_transitive() const;
  bool is_preorder() const;
  bool is_partial_order() const;
  bool is_equivalence() const;

  /// Pairs present in both directions: r ∩ rᵀ.
  BinaryRelation symmetric_core() const;
  BinaryRelation transpose() const;

  /// The row-major bit string read as an integer, first cell most
  /// significant. Total on relations over one carrier; used as the
  /// canonical enumeration key. Requires size() <= 8.
  uint64_t row_major_key() const;

  bool operator==(const BinaryRelation& other) const {
    return carrier_.size() == other.carrier_.size() && rows_ == other.rows_;
  }

 private:
  Carrier carrier_;
  std::vector<uint64_t> rows_;
};

/// True iff fine ⊆ coarse. Throws PreconditionError on carrier mismatch.
bool is_coarser(const BinaryRelation& fine, const BinaryRelation& coarse);

/// Bitwise intersection of a non-empty family over one carrier; the meet
/// in the lattice of relations.
BinaryRelation intersect(std::span<const BinaryRelation> relations);

using RelationPredicate = std::function<bool(const BinaryRelation&)>;

/// Every relation on the carrier satisfying the predicate, in ascending
/// row-major key order. The full 2^(n*n) space is swept; guarded by
/// limits (default: n <= 5).
std::vector<BinaryRelation> enumerate_relations_satisfying(
    const Carrier& carrier, const RelationPredicate& predicate,
    const EnumerationLimits& limits = {});

/// Every relation containing base and satisfying the predicate, in
/// ascending row-major key order. Only the free cells outside base are
/// swept, so the guard applies to that reduced space.
std::vector<BinaryRelation> enumerate_relations_containing(
    const BinaryRelation& base, const RelationPredicate& predicate,
    const EnumerationLimits& limits = {});

}  // namespace speclat

#endif  // SPECLAT_RELATION_HPP

#ifndef SPECLAT_POSET_HPP
#define SPECLAT_POSET_HPP

#include <optional>
#include <vector>

#include "speclat/partition.hpp"
#include "speclat/relation.hpp"

namespace speclat {

class FinitePoset {
 public:
  /// Throws InvalidStructureError with a witness if order is not a
  /// partial order.
  static FinitePoset validate(Carrier carrier, BinaryRelation order);

  int size() const { return carrier_.size(); }
  const Carrier& carrier() const { return carrier_; }
  const BinaryRelation& order() const { return order_; }
  bool leq(int a, int b) const { return order_.contains(a, b); }

  bool operator==(const FinitePoset& other) const { return order_ == other.order_; }

 private:
  FinitePoset(Carrier carrier, BinaryRelation order);
  Carrier carrier_;
  BinaryRelation order_;
};

/// A poset with a coarser preorder. No join compatibility condition is
/// required here; containment of the order is the whole invariant.
class SpecializationPoset {
 public:
  static SpecializationPoset validate(FinitePoset base, BinaryRelation spec);

  const FinitePoset& base() const { return base_; }
  const BinaryRelation& spec() const { return spec_; }

 private:
  SpecializationPoset(FinitePoset base, BinaryRelation spec);
  FinitePoset base_;
  BinaryRelation spec_;
};

struct MonotoneMap {
  FinitePoset dom;
  FinitePoset cod;
  std::vector<int> map;

  int operator()(int a) const { return map[static_cast<size_t>(a)]; }
  bool is_valid() const;  // a <= b implies map(a) <= map(b)
  bool is_surjective() const;
};

struct PosetQuotient {
  SetPartition classes;
  FinitePoset target;
  MonotoneMap projection;
};

/// Collapses the symmetric core of the coarser preorder and carries the
/// preorder down to a partial order on the classes. The projection's
/// kernel preorder recovers spec exactly.
PosetQuotient poset_quotient(const SpecializationPoset& sp);

/// Kernel preorder of an order preserving map: a ⊑ b iff m(a) <= m(b).
BinaryRelation poset_kernel_preorder(const MonotoneMap& m);

/// Isomorphism of surjections keeping the common domain fixed: a poset
/// isomorphism chi of the codomains with chi(m1(a)) == m2(a) for all a.
/// Returns the witness map or nullopt.
std::optional<std::vector<int>> poset_quotient_isomorphic(const MonotoneMap& m1,
                                                          const MonotoneMap& m2);

/// Canonical representatives of the surjective order preserving maps out
/// of p, up to isomorphism keeping p fixed. Targets are realized "into
/// classes": carriers are the blocks of a partition of p, ordered by
/// minimum element.
std::vector<MonotoneMap> enumerate_surjective_monotone_classes(const FinitePoset& p);

/// Number of preorders containing p's order.
long compatible_preorder_count_poset(const FinitePoset& p);

/// Number of equivalence relations on an n-set, counted by enumeration.
long equivalence_count(int n);

/// All partial orders on n labelled elements as posets, ordered by
/// row-major key of the order relation.
std::vector<FinitePoset> enumerate_posets(int n);

}  // namespace speclat

#endif  // SPECLAT_POSET_HPP

#ifndef SPECLAT_SEMILATTICE_HPP
#define SPECLAT_SEMILATTICE_HPP

#include <optional>
#include <string>
#include <vector>

#include "speclat/partition.hpp"
#include "speclat/relation.hpp"

namespace speclat {

/// A finite join semilattice: a carrier 0..n-1 with an idempotent,
/// commutative, associative join table. The induced order a <= b is
/// join(a, b) == b.
class FiniteSemilattice {
 public:
  /// Validates the three axioms; on failure throws InvalidStructureError
  /// naming a witness element, pair or triple.
  static FiniteSemilattice validate(Carrier carrier,
                                    const std::vector<std::vector<int>>& join_table);

  /// Join table derived from a partial order in which every pair of
  /// elements has a least upper bound; nullopt if some pair has none.
  static std::optional<FiniteSemilattice> from_order(const BinaryRelation& order);

  int size() const { return carrier_.size(); }
  const Carrier& carrier() const { return carrier_; }
  int join(int a, int b) const {
    return table_[static_cast<size_t>(a) * static_cast<size_t>(size()) +
                  static_cast<size_t>(b)];
  }
  bool leq(int a, int b) const { return join(a, b) == b; }

  BinaryRelation induced_order() const;

  /// Row-major join table rendered as a digit string; canonical identity
  /// of the semilattice up to names.
  std::string table_key() const;

  bool operator==(const FiniteSemilattice& other) const {
    return size() == other.size() && table_ == other.table_;
  }

 private:
  FiniteSemilattice(Carrier carrier, std::vector<int> table);
  Carrier carrier_;
  std::vector<int> table_;  // row-major, n*n entries
};

/// An equivalence relation compatible with join: a Θ b implies
/// (a ∨ c) Θ (b ∨ c).
class Congruence {
 public:
  /// Checks the congruence conditions; throws InvalidStructureError with
  /// a witness otherwise.
  static Congruence validate(const FiniteSemilattice& base, BinaryRelation rel);

  const FiniteSemilattice& base() const { return base_; }
  const BinaryRelation& relation() const { return rel_; }
  const SetPartition& partition() const { return partition_; }

  bool operator==(const Congruence& other) const { return rel_ == other.rel_; }

 private:
  friend Congruence make_congruence_unchecked(const FiniteSemilattice&,
                                              BinaryRelation);
  Congruence(FiniteSemilattice base, BinaryRelation rel);
  FiniteSemilattice base_;
  BinaryRelation rel_;
  SetPartition partition_;
};

/// Internal fast path for relations already known to be congruences
/// (asserted in debug builds only).
Congruence make_congruence_unchecked(const FiniteSemilattice& base,
                                     BinaryRelation rel);

/// A join semilattice with a compatible preorder: the preorder contains
/// the induced order and is closed under joins on the left of each bound
/// (a ⊑ b and a1 ⊑ b imply a ∨ a1 ⊑ b).
class SpecializationSemilattice {
 public:
  static SpecializationSemilattice validate(FiniteSemilattice base,
                                            BinaryRelation spec);

  const FiniteSemilattice& base() const { return base_; }
  const BinaryRelation& spec() const { return spec_; }

 private:
  SpecializationSemilattice(FiniteSemilattice base, BinaryRelation spec);
  FiniteSemilattice base_;
  BinaryRelation spec_;
};

/// A map between semilattice carriers; is_valid() is the join
/// preservation equation.
struct SemilatticeHom {
  FiniteSemilattice dom;
  FiniteSemilattice cod;
  std::vector<int> map;

  int operator()(int a) const { return map[static_cast<size_t>(a)]; }
  bool is_valid() const;
  bool is_surjective() const;
  bool is_injective() const;
  bool is_isomorphism() const { return is_valid() && is_injective() && is_surjective(); }
};

bool is_semilattice_hom(const SemilatticeHom& h);

/// True iff r is a preorder containing the induced order and satisfying
/// the join-compatibility condition above.
bool is_compatible_preorder(const FiniteSemilattice& s, const BinaryRelation& r);

bool is_congruence(const FiniteSemilattice& s, const BinaryRelation& r);

/// All congruences, by filtering set partitions in restricted growth
/// string order.
std::vector<Congruence> enumerate_congruences(const FiniteSemilattice& s);

enum class PreorderEnumeration {
  direct,           // filter preorders containing the induced order
  via_congruences,  // image of the congruence lattice
  cross_check,      // run both and require identical results
};

/// All compatible preorders in ascending row-major key order.
std::vector<BinaryRelation> enumerate_compatible_preorders(
    const FiniteSemilattice& s,
    PreorderEnumeration mode = PreorderEnumeration::direct);

/// Derived monotonicity: a ⊑ b and a1 ⊑ b1 imply a ∨ a1 ⊑ b ∨ b1;
/// holds for every valid SpecializationSemilattice.
bool check_derived_monotonicity(const SpecializationSemilattice& ss);

/// All join semilattices on n labelled elements, obtained by enumerating
/// partial orders and keeping those where every pair has a least upper
/// bound. Deterministic: ordered by the row-major key of the order.
std::vector<FiniteSemilattice> enumerate_semilattices(int n);

/// All maps dom -> cod that preserve join, in lexicographic map order.
/// Guarded by the total number |cod|^|dom| of candidate maps.
std::vector<SemilatticeHom> enumerate_homs(const FiniteSemilattice& dom,
                                           const FiniteSemilattice& cod,
                                           long max_maps = 10'000'000);

std::vector<SemilatticeHom> enumerate_surjective_homs(
    const FiniteSemilattice& dom, const FiniteSemilattice& cod,
    long max_maps = 10'000'000);

}  // namespace speclat

#endif  // SPECLAT_SEMILATTICE_HPP

#ifndef SPECLAT_MODEL_HPP
#define SPECLAT_MODEL_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "speclat/partition.hpp"
#include "speclat/relation.hpp"

namespace speclat {

struct RelationSymbol {
  std::string name;
  int arity;  // >= 1
  bool operator==(const RelationSymbol&) const = default;
};

struct FunctionSymbol {
  std::string name;
  int arity;  // >= 0; nullary functions are constants
  bool operator==(const FunctionSymbol&) const = default;
};

/// A finite first-order signature. Equality is implicit and never listed
/// among the relation symbols.
class Signature {
 public:
  static Signature validate(std::vector<RelationSymbol> relations,
                            std::vector<FunctionSymbol> functions);

  const std::vector<RelationSymbol>& relations() const { return relations_; }
  const std::vector<FunctionSymbol>& functions() const { return functions_; }

  bool operator==(const Signature&) const = default;

 private:
  Signature() = default;
  std::vector<RelationSymbol> relations_;
  std::vector<FunctionSymbol> functions_;
};

/// Number of arity-tuples over an n-element carrier.
long tuple_count(int n, int arity);
/// Mixed-radix encoding of a tuple; first coordinate most significant.
long encode_tuple(int n, std::span<const int> tuple);
std::vector<int> decode_tuple(int n, int arity, long index);

/// Set of arity-tuples over a carrier, stored as a flat bitmap indexed by
/// the mixed-radix encoding.
class RelationTable {
 public:
  RelationTable(int carrier_size, int arity);

  int arity() const { return arity_; }
  int carrier_size() const { return n_; }
  long universe_size() const { return static_cast<long>(bits_.size()); }

  bool contains_index(long t) const { return bits_[static_cast<size_t>(t)] != 0; }
  bool contains(std::span<const int> tuple) const;
  void set_index(long t, bool value = true) { bits_[static_cast<size_t>(t)] = value ? 1 : 0; }
  void set(std::span<const int> tuple, bool value = true);

  std::vector<std::vector<int>> tuples() const;

  bool operator==(const RelationTable&) const = default;

 private:
  int n_;
  int arity_;
  std::vector<char> bits_;
};

/// Total map carrier^arity -> carrier, same flat indexing.
class FunctionTable {
 public:
  FunctionTable(int carrier_size, int arity);

  int arity() const { return arity_; }
  int carrier_size() const { return n_; }
  long universe_size() const { return static_cast<long>(values_.size()); }

  int at_index(long t) const { return values_[static_cast<size_t>(t)]; }
  int eval(std::span<const int> tuple) const;
  void set_index(long t, int value) { values_[static_cast<size_t>(t)] = value; }
  void set(std::span<const int> tuple, int value);

  bool operator==(const FunctionTable&) const = default;

 private:
  int n_;
  int arity_;
  std::vector<int> values_;
};

class FiniteStructure {
 public:
  /// Tables must match the signature symbol-for-symbol, with all entries
  /// in range.
  static FiniteStructure validate(Signature signature, Carrier carrier,
                                  std::vector<RelationTable> relations,
                                  std::vector<FunctionTable> functions);

  const Signature& signature() const { return signature_; }
  const Carrier& carrier() const { return carrier_; }
  int size() const { return carrier_.size(); }
  const RelationTable& relation(int symbol) const { return relations_[static_cast<size_t>(symbol)]; }
  const FunctionTable& function(int symbol) const { return functions_[static_cast<size_t>(symbol)]; }
  const std::vector<RelationTable>& relations() const { return relations_; }
  const std::vector<FunctionTable>& functions() const { return functions_; }

  bool operator==(const FiniteStructure& other) const {
    return signature_ == other.signature_ && size() == other.size() &&
           relations_ == other.relations_ && functions_ == other.functions_;
  }

 private:
  FiniteStructure(Signature signature, Carrier carrier,
                  std::vector<RelationTable> relations,
                  std::vector<FunctionTable> functions);
  Signature signature_;
  Carrier carrier_;
  std::vector<RelationTable> relations_;
  std::vector<FunctionTable> functions_;
};

struct StructureHom {
  FiniteStructure dom;
  FiniteStructure cod;
  std::vector<int> map;

  int operator()(int a) const { return map[static_cast<size_t>(a)]; }
};

/// Standard model-theoretic homomorphism: functions commute with the map
/// and relations are preserved forward. Throws PreconditionError on
/// signature mismatch.
bool is_homomorphism(const StructureHom& h);
bool is_surjective(const StructureHom& h);

/// True iff the codomain is literally the set of kernel classes of the
/// map: its carrier has one element per block (ordered by minimum
/// element) and the map sends each element to its block index.
bool is_into_classes(const StructureHom& h);

/// An expansion of a structure by an equivalence Θ and one starred table
/// per relation symbol, satisfying:
///   - R ⊆ R* for every relation symbol;
///   - Θ is a congruence for every function symbol;
///   - every R* is Θ-saturated (constant on componentwise Θ-classes).
class AppropriateExpansion {
 public:
  static AppropriateExpansion validate(FiniteStructure base, BinaryRelation theta,
                                       std::vector<RelationTable> starred);

  const FiniteStructure& base() const { return base_; }
  const BinaryRelation& theta() const { return theta_; }
  const RelationTable& starred(int symbol) const { return starred_[static_cast<size_t>(symbol)]; }
  const std::vector<RelationTable>& starred_tables() const { return starred_; }

  bool operator==(const AppropriateExpansion& other) const {
    return base_ == other.base_ && theta_ == other.theta_ && starred_ == other.starred_;
  }

 private:
  AppropriateExpansion(FiniteStructure base, BinaryRelation theta,
                       std::vector<RelationTable> starred);
  friend AppropriateExpansion make_expansion_unchecked(FiniteStructure,
                                                       BinaryRelation,
                                                       std::vector<RelationTable>);
  FiniteStructure base_;
  BinaryRelation theta_;
  std::vector<RelationTable> starred_;
};

AppropriateExpansion make_expansion_unchecked(FiniteStructure base,
                                              BinaryRelation theta,
                                              std::vector<RelationTable> starred);

/// Reads the expansion off a surjective homomorphism: Θ is the kernel and
/// R*(t) holds iff R(h(t)) holds in the codomain.
AppropriateExpansion expansion_from_hom(const StructureHom& h);

/// Builds the into-classes quotient of an expansion: carrier = Θ-classes,
/// relations read off the starred tables, functions by representatives.
/// Returns the canonical projection.
StructureHom quotient_from_expansion(const AppropriateExpansion& e);

/// All surjective homomorphisms into classes with the given domain, in
/// deterministic order (kernel partitions in restricted growth string
/// order, relation choices in ascending bitmap order).
std::vector<StructureHom> enumerate_surjective_homs_into_classes(
    const FiniteStructure& a);

/// All appropriate expansions of a, in matching deterministic order.
std::vector<AppropriateExpansion> enumerate_appropriate_expansions(
    const FiniteStructure& a);

struct ModelCorrespondenceReport {
  long hom_count = 0;
  long expansion_count = 0;
  std::vector<std::string> failures;

  bool passed() const { return hom_count == expansion_count && failures.empty(); }
};

/// Verifies that expansion_from_hom and quotient_from_expansion are
/// mutually inverse bijections between the surjective homomorphisms into
/// classes and the appropriate expansions of a. Guarded: carrier <= 3.
ModelCorrespondenceReport verify_prop_3_5(const FiniteStructure& a);

/// Streams every structure over the signature with the given carrier
/// size, iterating function tables then relation tables in ascending
/// flat-table order.
void for_each_structure(const Signature& signature, int carrier_size,
                        const std::function<void(const FiniteStructure&)>& fn);

std::vector<FiniteStructure> enumerate_structures(const Signature& signature,
                                                  int carrier_size);

}  // namespace speclat

#endif  // SPECLAT_MODEL_HPP

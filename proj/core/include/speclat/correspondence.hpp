#ifndef SPECLAT_CORRESPONDENCE_HPP
#define SPECLAT_CORRESPONDENCE_HPP

#include <string>
#include <vector>

#include "speclat/semilattice.hpp"

namespace speclat {

/// Collapses a compatible preorder to its symmetric core, which is a
/// congruence. Throws PreconditionError if spec is not compatible.
Congruence psi(const FiniteSemilattice& s, const BinaryRelation& spec);

/// Expands a congruence Θ to the preorder with a ⊑ b iff (a ∨ b) Θ b;
/// always a compatible preorder.
BinaryRelation omega(const FiniteSemilattice& s, const Congruence& theta);

/// Result of exhaustively verifying that psi and omega form a complete
/// lattice isomorphism between the compatible preorders and the
/// congruences of one semilattice.
struct CorrespondenceReport {
  std::string semilattice_id;
  int preorder_count = 0;
  int congruence_count = 0;
  std::vector<std::string> round_trip_failures;
  std::vector<std::string> meet_preservation_failures;

  bool passed() const {
    return preorder_count == congruence_count && round_trip_failures.empty() &&
           meet_preservation_failures.empty();
  }
};

/// Checks, over all compatible preorders and congruences of s:
///  - omega(psi(r)) == r and psi(omega(t)) == t, bitwise;
///  - psi maps the set of preorders bijectively onto the set of
///    congruences;
///  - psi(intersection) == intersection of images for every subset of
///    size <= 3 and for the full set. On a finite lattice this, together
///    with bijectivity, certifies the complete-lattice isomorphism.
CorrespondenceReport verify_theorem_2_1(const FiniteSemilattice& s);

/// spec1 ⊆ spec2 iff psi(spec1) ⊆ psi(spec2); returns the biconditional.
bool monotone_pair_check(const FiniteSemilattice& s, const BinaryRelation& spec1,
                         const BinaryRelation& spec2);

}  // namespace speclat

#endif  // SPECLAT_CORRESPONDENCE_HPP

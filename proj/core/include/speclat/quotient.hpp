#ifndef SPECLAT_QUOTIENT_HPP
#define SPECLAT_QUOTIENT_HPP

#include <optional>
#include <utility>
#include <vector>

#include "speclat/correspondence.hpp"
#include "speclat/semilattice.hpp"

namespace speclat {

// Composition convention used throughout: commuting-square conditions are
// written pointwise, chi(phi(a)) == phi'(a), i.e. the quotient map phi is
// applied first and the connecting isomorphism after it.

/// A semilattice quotient: the source, the congruence, its classes
/// (ordered by minimum element), the induced target semilattice and the
/// canonical projection.
struct Quotient {
  FiniteSemilattice source;
  Congruence theta;
  SetPartition classes;
  FiniteSemilattice target;
  SemilatticeHom projection;
};

/// A surjective semilattice homomorphism treated as an object in its own
/// right (for quotient- and arrow-isomorphism checks).
class ArrowObject {
 public:
  /// Throws PreconditionError unless hom is a surjective homomorphism.
  static ArrowObject validate(SemilatticeHom hom);

  const SemilatticeHom& hom() const { return hom_; }

 private:
  explicit ArrowObject(SemilatticeHom hom) : hom_(std::move(hom)) {}
  SemilatticeHom hom_;
};

/// The canonical quotient of s by theta: target join induced on the
/// classes, projection sending each element to its class index.
Quotient build_quotient(const FiniteSemilattice& s, const Congruence& theta);

/// Kernel congruence of a homomorphism: a Θ b iff h(a) == h(b).
Congruence kernel(const SemilatticeHom& h);

/// Kernel preorder of a homomorphism: a ⊑ b iff h(a) <= h(b) in the
/// codomain's induced order. Always a compatible preorder on the domain.
BinaryRelation kernel_preorder(const SemilatticeHom& h);

/// The quotient of the base by psi(spec); its projection's kernel
/// preorder recovers spec exactly.
Quotient represent(const SpecializationSemilattice& ss);

/// One (compatible preorder, quotient) pair per compatible preorder of s,
/// quotient taken by the corresponding congruence.
std::vector<std::pair<BinaryRelation, Quotient>> gamma(const FiniteSemilattice& s);

/// Searches for an isomorphism chi between the codomains of two
/// surjections with the same source such that chi(q1(a)) == q2(a) for
/// every a. Returns the lexicographically least witness, or nullopt.
std::optional<SemilatticeHom> quotient_isomorphic(const ArrowObject& q1,
                                                  const ArrowObject& q2);

/// A commuting square of isomorphisms between two surjections:
/// tau(q1(a)) == q2(sigma(a)) for every a of q1's domain.
struct ArrowIso {
  SemilatticeHom sigma;  // domain isomorphism
  SemilatticeHom tau;    // codomain isomorphism
};

/// Searches for a commuting square of isomorphisms; sigma is the
/// lexicographically least witness and tau is determined by it.
std::optional<ArrowIso> arrow_isomorphic(const ArrowObject& q1,
                                         const ArrowObject& q2);

/// Semilattice homomorphism that also preserves the specialization
/// preorder: a ⊑ b implies map(a) ⊑ map(b).
bool is_spec_hom(const SpecializationSemilattice& ss1,
                 const SpecializationSemilattice& ss2,
                 const std::vector<int>& map);

/// Semilattice homomorphism that respects the congruences: a Θ1 b
/// implies map(a) Θ2 map(b).
bool is_con_hom(const FiniteSemilattice& s1, const Congruence& theta1,
                const FiniteSemilattice& s2, const Congruence& theta2,
                const std::vector<int>& map);

}  // namespace speclat

#endif  // SPECLAT_QUOTIENT_HPP

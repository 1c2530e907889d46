#ifndef SPECLAT_FIXTURES_HPP
#define SPECLAT_FIXTURES_HPP

#include "speclat/poset.hpp"
#include "speclat/semilattice.hpp"

namespace speclat::fixtures {

/// Five-element semilattice made of two 3-chains a1 < a2 < c and
/// b1 < b2 < c sharing the top, with every cross join equal to c.
/// Indices: a1=0, a2=1, b1=2, b2=3, c=4.
FiniteSemilattice two_chains_sharing_top();

/// Congruence on two_chains_sharing_top() collapsing {a1, a2} only.
Congruence collapse_a_pair();

/// Congruence on two_chains_sharing_top() collapsing {b1, b2} only.
Congruence collapse_b_pair();

/// Two-element antichain poset with elements named a and b.
FinitePoset two_element_antichain();

}  // namespace speclat::fixtures

#endif  // SPECLAT_FIXTURES_HPP

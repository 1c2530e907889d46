#include "speclat/fixtures.hpp"

namespace speclat::fixtures {

FiniteSemilattice two_chains_sharing_top() {
  // a1=0 < a2=1 < c=4, b1=2 < b2=3 < c=4, cross joins all c.
  Carrier carrier(5, {"a1", "a2", "b1", "b2", "c"});
  std::vector<std::vector<int>> join = {
      {0, 1, 4, 4, 4},
      {1, 1, 4, 4, 4},
      {4, 4, 2, 3, 4},
      {4, 4, 3, 3, 4},
      {4, 4, 4, 4, 4},
  };
  return FiniteSemilattice::validate(std::move(carrier), join);
}

namespace {

Congruence collapse_pair(const FiniteSemilattice& s, int x, int y) {
  BinaryRelation rel = BinaryRelation::identity(s.carrier());
  rel.set(x, y);
  rel.set(y, x);
  return Congruence::validate(s, std::move(rel));
}

}  // namespace

Congruence collapse_a_pair() {
  return collapse_pair(two_chains_sharing_top(), 0, 1);
}

Congruence collapse_b_pair() {
  return collapse_pair(two_chains_sharing_top(), 2, 3);
}

FinitePoset two_element_antichain() {
  Carrier carrier(2, {"a", "b"});
  return FinitePoset::validate(carrier, BinaryRelation::identity(carrier));
}

}  // namespace speclat::fixtures

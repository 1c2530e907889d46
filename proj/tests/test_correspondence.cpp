#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "speclat/correspondence.hpp"
#include "speclat/error.hpp"
#include "speclat/fixtures.hpp"

using namespace speclat;

TEST_CASE("psi collapses to the symmetric core") {
  FiniteSemilattice s = fixtures::two_chains_sharing_top();
  CHECK(psi(s, s.induced_order()).relation() ==
        BinaryRelation::identity(s.carrier()));
  CHECK(psi(s, BinaryRelation::total(s.carrier())).relation() ==
        BinaryRelation::total(s.carrier()));

  Congruence theta = fixtures::collapse_a_pair();
  CHECK(psi(s, omega(s, theta)).relation() == theta.relation());

  BinaryRelation not_compatible = BinaryRelation::identity(s.carrier());
  not_compatible.set(0, 1);  // a preorder, but missing most of the order
  CHECK_THROWS_AS(psi(s, not_compatible), PreconditionError);
}

TEST_CASE("omega expands a congruence to a preorder") {
  FiniteSemilattice s = fixtures::two_chains_sharing_top();
  Congruence identity =
      Congruence::validate(s, BinaryRelation::identity(s.carrier()));
  CHECK(omega(s, identity) == s.induced_order());

  Congruence total = Congruence::validate(s, BinaryRelation::total(s.carrier()));
  CHECK(omega(s, total) == BinaryRelation::total(s.carrier()));

  // Collapsing {a1, a2} puts a2 below a1 as well, on top of the order.
  BinaryRelation expanded = omega(s, fixtures::collapse_a_pair());
  CHECK(expanded.contains(1, 0));
  CHECK(is_coarser(s.induced_order(), expanded));
  CHECK(is_compatible_preorder(s, expanded));
}

TEST_CASE("round trips are exact for every small semilattice") {
  for (int n = 1; n <= 3; ++n) {
    for (const FiniteSemilattice& s : enumerate_semilattices(n)) {
      for (const BinaryRelation& r : enumerate_compatible_preorders(s)) {
        CHECK(omega(s, psi(s, r)) == r);
      }
      for (const Congruence& theta : enumerate_congruences(s)) {
        CHECK(psi(s, omega(s, theta)).relation() == theta.relation());
      }
    }
  }
}

TEST_CASE("meet preservation on subsets of up to three preorders") {
  for (int n = 1; n <= 3; ++n) {
    for (const FiniteSemilattice& s : enumerate_semilattices(n)) {
      auto preorders = enumerate_compatible_preorders(s);
      for (size_t i = 0; i < preorders.size(); ++i) {
        for (size_t j = i; j < preorders.size(); ++j) {
          for (size_t k = j; k < preorders.size(); ++k) {
            std::vector<BinaryRelation> subset = {preorders[i], preorders[j],
                                                  preorders[k]};
            std::vector<BinaryRelation> images = {psi(s, preorders[i]).relation(),
                                                  psi(s, preorders[j]).relation(),
                                                  psi(s, preorders[k]).relation()};
            CHECK(psi(s, intersect(subset)).relation() == intersect(images));
          }
        }
      }
    }
  }
}

TEST_CASE("psi is a bijection onto the congruences") {
  for (int n = 1; n <= 3; ++n) {
    for (const FiniteSemilattice& s : enumerate_semilattices(n)) {
      auto preorders = enumerate_compatible_preorders(s);
      auto congruences = enumerate_congruences(s);
      std::vector<uint64_t> image;
      for (const BinaryRelation& r : preorders) {
        image.push_back(psi(s, r).relation().row_major_key());
      }
      std::vector<uint64_t> expected;
      for (const Congruence& theta : congruences) {
        expected.push_back(theta.relation().row_major_key());
      }
      std::sort(image.begin(), image.end());
      std::sort(expected.begin(), expected.end());
      CHECK(std::adjacent_find(image.begin(), image.end()) == image.end());
      CHECK(image == expected);
    }
  }
}

TEST_CASE("full verification reports") {
  CorrespondenceReport one = verify_theorem_2_1(fx::chain(1));
  CHECK(one.passed());
  CHECK(one.preorder_count == 1);
  CHECK(one.congruence_count == 1);

  CorrespondenceReport two = verify_theorem_2_1(fx::chain(2));
  CHECK(two.passed());
  CHECK(two.preorder_count == 2);
  CHECK(two.congruence_count == 2);

  for (const FiniteSemilattice& s : enumerate_semilattices(3)) {
    CHECK(verify_theorem_2_1(s).passed());
  }
}

TEST_CASE("order is preserved and reflected") {
  FiniteSemilattice s = fixtures::two_chains_sharing_top();
  CHECK(monotone_pair_check(s, s.induced_order(),
                            BinaryRelation::total(s.carrier())));
  BinaryRelation r = omega(s, fixtures::collapse_a_pair());
  CHECK(monotone_pair_check(s, r, r));
  auto preorders = enumerate_compatible_preorders(s);
  for (const BinaryRelation& r1 : preorders) {
    for (const BinaryRelation& r2 : preorders) {
      CHECK(monotone_pair_check(s, r1, r2));
    }
  }
}

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "speclat/error.hpp"
#include "speclat/fixtures.hpp"
#include "speclat/quotient.hpp"

using namespace speclat;

TEST_CASE("quotient by the identity and by the total congruence") {
  FiniteSemilattice s = fixtures::two_chains_sharing_top();
  Quotient by_identity =
      build_quotient(s, Congruence::validate(s, BinaryRelation::identity(s.carrier())));
  CHECK(by_identity.target.size() == s.size());
  CHECK(by_identity.projection.is_injective());
  CHECK(by_identity.projection.is_surjective());

  Quotient by_total =
      build_quotient(s, Congruence::validate(s, BinaryRelation::total(s.carrier())));
  CHECK(by_total.target.size() == 1);
}

TEST_CASE("quotient by the fixture congruence") {
  FiniteSemilattice s = fixtures::two_chains_sharing_top();
  Quotient q = build_quotient(s, fixtures::collapse_a_pair());
  REQUIRE(q.target.size() == 4);
  // Classes ordered by minimum element: {a1,a2}=0, {b1}=1, {b2}=2, {c}=3.
  CHECK(q.classes.block(0) == std::vector<int>{0, 1});
  // The collapsed pair sits strictly below the top, the b-chain persists,
  // and every cross join hits the top.
  CHECK(q.target.leq(0, 3));
  CHECK(q.target.leq(1, 2));
  CHECK(q.target.leq(2, 3));
  CHECK(q.target.join(0, 1) == 3);
  CHECK(q.target.join(0, 2) == 3);
  CHECK_FALSE(q.target.leq(0, 1));
  CHECK_FALSE(q.target.leq(1, 0));
  CHECK(q.projection.map == std::vector<int>{0, 0, 1, 2, 3});
}

TEST_CASE("kernels") {
  FiniteSemilattice s = fixtures::two_chains_sharing_top();
  SemilatticeHom identity{s, s, {0, 1, 2, 3, 4}};
  CHECK(kernel(identity).relation() == BinaryRelation::identity(s.carrier()));
  CHECK(kernel_preorder(identity) == s.induced_order());

  FiniteSemilattice point = fx::chain(1);
  SemilatticeHom constant{s, point, {0, 0, 0, 0, 0}};
  CHECK(kernel(constant).relation() == BinaryRelation::total(s.carrier()));
  CHECK(kernel_preorder(constant) == BinaryRelation::total(s.carrier()));

  Quotient q = build_quotient(s, fixtures::collapse_a_pair());
  CHECK(kernel(q.projection).relation() == fixtures::collapse_a_pair().relation());
  CHECK(kernel_preorder(q.projection) == omega(s, fixtures::collapse_a_pair()));
}

TEST_CASE("kernel of a canonical projection recovers the congruence") {
  for (int n = 1; n <= 3; ++n) {
    for (const FiniteSemilattice& s : enumerate_semilattices(n)) {
      for (const Congruence& theta : enumerate_congruences(s)) {
        CHECK(kernel(build_quotient(s, theta).projection).relation() ==
              theta.relation());
      }
    }
  }
  FiniteSemilattice s = fixtures::two_chains_sharing_top();
  for (const Congruence& theta : enumerate_congruences(s)) {
    CHECK(kernel(build_quotient(s, theta).projection).relation() ==
          theta.relation());
  }
}

TEST_CASE("representation recovers the preorder") {
  FiniteSemilattice s = fixtures::two_chains_sharing_top();
  Quotient by_order =
      represent(SpecializationSemilattice::validate(s, s.induced_order()));
  CHECK(by_order.target.size() == s.size());
  CHECK(kernel_preorder(by_order.projection) == s.induced_order());

  Quotient by_total = represent(
      SpecializationSemilattice::validate(s, BinaryRelation::total(s.carrier())));
  CHECK(by_total.target.size() == 1);
  CHECK(kernel_preorder(by_total.projection) == BinaryRelation::total(s.carrier()));

  for (int n = 1; n <= 3; ++n) {
    for (const FiniteSemilattice& sl : enumerate_semilattices(n)) {
      for (const BinaryRelation& r : enumerate_compatible_preorders(sl)) {
        SpecializationSemilattice ss = SpecializationSemilattice::validate(sl, r);
        CHECK(kernel_preorder(represent(ss).projection) == r);
      }
    }
  }
}

TEST_CASE("one quotient per compatible preorder") {
  CHECK(gamma(fx::chain(1)).size() == 1);

  auto pairs = gamma(fx::chain(2));
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].second.target.size() == 2);
  CHECK(pairs[1].second.target.size() == 1);

  FiniteSemilattice s = fixtures::two_chains_sharing_top();
  auto fixture_pairs = gamma(s);
  for (size_t i = 0; i < fixture_pairs.size(); ++i) {
    ArrowObject qi = ArrowObject::validate(fixture_pairs[i].second.projection);
    for (size_t j = i + 1; j < fixture_pairs.size(); ++j) {
      ArrowObject qj = ArrowObject::validate(fixture_pairs[j].second.projection);
      CHECK_FALSE(quotient_isomorphic(qi, qj).has_value());
    }
  }
}

TEST_CASE("quotient isomorphism keeping the source fixed") {
  FiniteSemilattice s = fixtures::two_chains_sharing_top();
  Quotient qa = build_quotient(s, fixtures::collapse_a_pair());
  Quotient qb = build_quotient(s, fixtures::collapse_b_pair());
  ArrowObject a = ArrowObject::validate(qa.projection);
  ArrowObject b = ArrowObject::validate(qb.projection);

  SECTION("identity witness against itself") {
    auto chi = quotient_isomorphic(a, a);
    REQUIRE(chi.has_value());
    CHECK(chi->map == std::vector<int>{0, 1, 2, 3});
  }
  SECTION("the two collapses are not isomorphic as quotients") {
    CHECK_FALSE(quotient_isomorphic(a, b).has_value());
  }
  SECTION("a relabelled copy is found") {
    // Permute the target of qa by swapping the two middle elements.
    std::vector<int> perm = {0, 2, 1, 3};
    std::vector<std::vector<int>> table(4, std::vector<int>(4));
    for (int x = 0; x < 4; ++x) {
      for (int y = 0; y < 4; ++y) {
        table[static_cast<size_t>(perm[static_cast<size_t>(x)])]
             [static_cast<size_t>(perm[static_cast<size_t>(y)])] =
                 perm[static_cast<size_t>(qa.target.join(x, y))];
      }
    }
    FiniteSemilattice relabelled = FiniteSemilattice::validate(Carrier(4), table);
    std::vector<int> map;
    for (int x : qa.projection.map) {
      map.push_back(perm[static_cast<size_t>(x)]);
    }
    ArrowObject copy = ArrowObject::validate(SemilatticeHom{s, relabelled, map});
    auto chi = quotient_isomorphic(a, copy);
    REQUIRE(chi.has_value());
    CHECK(chi->map == perm);
    CHECK(chi->is_isomorphism());
  }
  SECTION("source mismatch is rejected") {
    Quotient other = build_quotient(fx::chain(2),
                                    Congruence::validate(fx::chain(2),
                                                         BinaryRelation::identity(Carrier(2))));
    CHECK_THROWS_AS(quotient_isomorphic(a, ArrowObject::validate(other.projection)),
                    PreconditionError);
  }
}

TEST_CASE("arrow isomorphism allows moving the source") {
  FiniteSemilattice s = fixtures::two_chains_sharing_top();
  Quotient qa = build_quotient(s, fixtures::collapse_a_pair());
  Quotient qb = build_quotient(s, fixtures::collapse_b_pair());
  ArrowObject a = ArrowObject::validate(qa.projection);
  ArrowObject b = ArrowObject::validate(qb.projection);

  SECTION("identity square against itself") {
    auto square = arrow_isomorphic(a, a);
    REQUIRE(square.has_value());
    CHECK(square->sigma.map == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(square->tau.map == std::vector<int>{0, 1, 2, 3});
  }
  SECTION("the two collapses become isomorphic") {
    auto square = arrow_isomorphic(a, b);
    REQUIRE(square.has_value());
    CHECK(square->sigma.is_isomorphism());
    CHECK(square->tau.is_isomorphism());
    for (int x = 0; x < s.size(); ++x) {
      CHECK(square->tau(qa.projection(x)) == qb.projection(square->sigma(x)));
    }
    // Swapping the two chains is a valid square; the returned witness is
    // the lexicographically least sigma, which is exactly that swap.
    CHECK(square->sigma.map == std::vector<int>{2, 3, 0, 1, 4});
  }
  SECTION("every surjection is arrow-isomorphic to its kernel projection") {
    for (int n = 1; n <= 3; ++n) {
      for (const FiniteSemilattice& dom : enumerate_semilattices(n)) {
        for (int m = 1; m <= n; ++m) {
          for (const FiniteSemilattice& cod : enumerate_semilattices(m)) {
            for (const SemilatticeHom& h : enumerate_surjective_homs(dom, cod)) {
              Quotient canonical = build_quotient(dom, kernel(h));
              CHECK(arrow_isomorphic(ArrowObject::validate(h),
                                     ArrowObject::validate(canonical.projection))
                        .has_value());
            }
          }
        }
      }
    }
  }
}

TEST_CASE("quotient isomorphism implies arrow isomorphism") {
  for (int n = 1; n <= 3; ++n) {
    for (const FiniteSemilattice& s : enumerate_semilattices(n)) {
      auto pairs = gamma(s);
      for (const auto& [r1, q1] : pairs) {
        for (const auto& [r2, q2] : pairs) {
          ArrowObject a1 = ArrowObject::validate(q1.projection);
          ArrowObject a2 = ArrowObject::validate(q2.projection);
          if (quotient_isomorphic(a1, a2)) {
            CHECK(arrow_isomorphic(a1, a2).has_value());
          }
        }
      }
    }
  }
}

TEST_CASE("specialization and congruence homomorphisms correspond") {
  FiniteSemilattice two = fx::chain(2);
  SpecializationSemilattice with_order =
      SpecializationSemilattice::validate(two, two.induced_order());
  CHECK(is_spec_hom(with_order, with_order, {0, 1}));
  Congruence identity = Congruence::validate(two, BinaryRelation::identity(Carrier(2)));
  CHECK(is_con_hom(two, identity, two, identity, {0, 1}));

  // A semilattice homomorphism that fails to preserve the coarser
  // preorder: total on the domain, plain order on the codomain.
  SpecializationSemilattice with_total =
      SpecializationSemilattice::validate(two, BinaryRelation::total(Carrier(2)));
  CHECK_FALSE(is_spec_hom(with_total, with_order, {0, 1}));

  for (const FiniteSemilattice& s1 : enumerate_semilattices(2)) {
    for (const FiniteSemilattice& s2 : enumerate_semilattices(2)) {
      for (const BinaryRelation& r1 : enumerate_compatible_preorders(s1)) {
        for (const BinaryRelation& r2 : enumerate_compatible_preorders(s2)) {
          SpecializationSemilattice ss1 = SpecializationSemilattice::validate(s1, r1);
          SpecializationSemilattice ss2 = SpecializationSemilattice::validate(s2, r2);
          Congruence t1 = psi(s1, r1);
          Congruence t2 = psi(s2, r2);
          for (int m0 = 0; m0 < 2; ++m0) {
            for (int m1 = 0; m1 < 2; ++m1) {
              std::vector<int> map = {m0, m1};
              CHECK(is_spec_hom(ss1, ss2, map) ==
                    is_con_hom(s1, t1, s2, t2, map));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("arrow object validation") {
  FiniteSemilattice two = fx::chain(2);
  CHECK_THROWS_AS(ArrowObject::validate(SemilatticeHom{two, two, {1, 0}}),
                  PreconditionError);  // not a homomorphism
  CHECK_THROWS_AS(ArrowObject::validate(SemilatticeHom{two, two, {1, 1}}),
                  PreconditionError);  // not surjective
}

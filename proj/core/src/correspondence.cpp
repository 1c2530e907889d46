#include "speclat/correspondence.hpp"

#include <algorithm>
#include <cassert>

#include "speclat/error.hpp"

namespace speclat {

Congruence psi(const FiniteSemilattice& s, const BinaryRelation& spec) {
  if (!is_compatible_preorder(s, spec)) {
    throw PreconditionError("psi: relation is not a compatible preorder");
  }
  BinaryRelation core = spec.symmetric_core();
  assert(is_congruence(s, core));
  return make_congruence_unchecked(s, std::move(core));
}

BinaryRelation omega(const FiniteSemilattice& s, const Congruence& theta) {
  if (theta.base() != s) {
    throw PreconditionError("omega: congruence belongs to a different semilattice");
  }
  BinaryRelation r(s.carrier());
  for (int a = 0; a < s.size(); ++a) {
    for (int b = 0; b < s.size(); ++b) {
      if (theta.relation().contains(s.join(a, b), b)) {
        r.set(a, b);
      }
    }
  }
  assert(is_compatible_preorder(s, r));
  return r;
}

namespace {

std::string describe_relation(const BinaryRelation& r) {
  std::string out = "{";
  bool first = true;
  for (auto [a, b] : r.pairs()) {
    if (!first) {
      out += ",";
    }
    first = false;
    out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  return out + "}";
}

void check_meet_preserved(const FiniteSemilattice& s,
                          const std::vector<BinaryRelation>& preorders,
                          const std::vector<size_t>& subset,
                          CorrespondenceReport& report) {
  std::vector<BinaryRelation> chosen;
  std::vector<BinaryRelation> images;
  chosen.reserve(subset.size());
  images.reserve(subset.size());
  for (size_t i : subset) {
    chosen.push_back(preorders[i]);
    images.push_back(psi(s, preorders[i]).relation());
  }
  BinaryRelation meet = intersect(chosen);
  BinaryRelation image_of_meet = psi(s, meet).relation();
  BinaryRelation meet_of_images = intersect(images);
  if (!(image_of_meet == meet_of_images)) {
    std::string witness = "subset {";
    for (size_t i : subset) {
      witness += " " + std::to_string(i);
    }
    witness += " }: psi(meet) = " + describe_relation(image_of_meet) +
               " but meet of images = " + describe_relation(meet_of_images);
    report.meet_preservation_failures.push_back(std::move(witness));
  }
}

}  // namespace

CorrespondenceReport verify_theorem_2_1(const FiniteSemilattice& s) {
  CorrespondenceReport report;
  report.semilattice_id = s.table_key();

  std::vector<BinaryRelation> preorders =
      enumerate_compatible_preorders(s, PreorderEnumeration::cross_check);
  std::vector<Congruence> congruences = enumerate_congruences(s);
  report.preorder_count = static_cast<int>(preorders.size());
  report.congruence_count = static_cast<int>(congruences.size());

  // Round trips in both directions, bitwise.
  std::vector<uint64_t> image_keys;
  for (const BinaryRelation& r : preorders) {
    Congruence theta = psi(s, r);
    image_keys.push_back(theta.relation().row_major_key());
    BinaryRelation back = omega(s, theta);
    if (!(back == r)) {
      report.round_trip_failures.push_back(
          "omega(psi(r)) != r for r = " + describe_relation(r));
    }
  }
  std::vector<uint64_t> congruence_keys;
  for (const Congruence& theta : congruences) {
    congruence_keys.push_back(theta.relation().row_major_key());
    BinaryRelation r = omega(s, theta);
    Congruence back = psi(s, r);
    if (!(back.relation() == theta.relation())) {
      report.round_trip_failures.push_back(
          "psi(omega(t)) != t for t = " + describe_relation(theta.relation()));
    }
  }

  // psi must map the preorders bijectively onto the congruences.
  std::sort(image_keys.begin(), image_keys.end());
  std::sort(congruence_keys.begin(), congruence_keys.end());
  if (std::adjacent_find(image_keys.begin(), image_keys.end()) != image_keys.end()) {
    report.round_trip_failures.push_back("psi is not injective on the preorders");
  }
  if (image_keys != congruence_keys) {
    report.round_trip_failures.push_back(
        "psi image differs from the congruence set");
  }

  // Meet preservation over subsets of size <= 3 plus the full set.
  size_t count = preorders.size();
  for (size_t i = 0; i < count; ++i) {
    check_meet_preserved(s, preorders, {i}, report);
    for (size_t j = i + 1; j < count; ++j) {
      check_meet_preserved(s, preorders, {i, j}, report);
      for (size_t k = j + 1; k < count; ++k) {
        check_meet_preserved(s, preorders, {i, j, k}, report);
      }
    }
  }
  if (count > 3) {
    std::vector<size_t> all(count);
    for (size_t i = 0; i < count; ++i) {
      all[i] = i;
    }
    check_meet_preserved(s, preorders, all, report);
  }

  return report;
}

bool monotone_pair_check(const FiniteSemilattice& s, const BinaryRelation& spec1,
                         const BinaryRelation& spec2) {
  Congruence t1 = psi(s, spec1);
  Congruence t2 = psi(s, spec2);
  bool preorders_ordered = is_coarser(spec1, spec2);
  bool congruences_ordered = is_coarser(t1.relation(), t2.relation());
  return preorders_ordered == congruences_ordered;
}

}  // namespace speclat

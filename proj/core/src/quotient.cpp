#include "speclat/quotient.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "speclat/error.hpp"

namespace speclat {

namespace {

std::string block_name(const Carrier& source, const std::vector<int>& block) {
  std::string name = "{";
  for (size_t i = 0; i < block.size(); ++i) {
    if (i > 0) {
      name += ",";
    }
    name += source.name(block[i]);
  }
  return name + "}";
}

Carrier class_carrier(const Carrier& source, const SetPartition& classes) {
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(classes.block_count()));
  for (const auto& block : classes.blocks()) {
    names.push_back(block_name(source, block));
  }
  return Carrier(classes.block_count(), std::move(names));
}

// Sorted multiset of class sizes; a cheap invariant for pruning
// isomorphism searches.
std::vector<int> class_size_profile(const SemilatticeHom& h) {
  std::vector<int> sizes(static_cast<size_t>(h.cod.size()), 0);
  for (int v : h.map) {
    ++sizes[static_cast<size_t>(v)];
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace

ArrowObject ArrowObject::validate(SemilatticeHom hom) {
  if (!hom.is_valid()) {
    throw PreconditionError("arrow object: map is not a homomorphism");
  }
  if (!hom.is_surjective()) {
    throw PreconditionError("arrow object: homomorphism is not surjective");
  }
  return ArrowObject(std::move(hom));
}

Quotient build_quotient(const FiniteSemilattice& s, const Congruence& theta) {
  if (theta.base() != s) {
    throw PreconditionError("quotient: congruence belongs to a different semilattice");
  }
  const SetPartition& classes = theta.partition();
  int m = classes.block_count();
  std::vector<std::vector<int>> table(static_cast<size_t>(m),
                                      std::vector<int>(static_cast<size_t>(m)));
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      int a = classes.block(x).front();
      int b = classes.block(y).front();
      table[static_cast<size_t>(x)][static_cast<size_t>(y)] =
          classes.block_of(s.join(a, b));
    }
  }
#ifndef NDEBUG
  // The target join is representative independent because theta is a
  // congruence.
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      for (int a : classes.block(x)) {
        for (int b : classes.block(y)) {
          assert(classes.block_of(s.join(a, b)) ==
                 table[static_cast<size_t>(x)][static_cast<size_t>(y)]);
        }
      }
    }
  }
#endif
  FiniteSemilattice target =
      FiniteSemilattice::validate(class_carrier(s.carrier(), classes), table);
  std::vector<int> projection(static_cast<size_t>(s.size()));
  for (int a = 0; a < s.size(); ++a) {
    projection[static_cast<size_t>(a)] = classes.block_of(a);
  }
  return Quotient{s, theta, classes, target,
                  SemilatticeHom{s, target, std::move(projection)}};
}

Congruence kernel(const SemilatticeHom& h) {
  if (!h.is_valid()) {
    throw PreconditionError("kernel: map is not a homomorphism");
  }
  BinaryRelation rel(h.dom.carrier());
  for (int a = 0; a < h.dom.size(); ++a) {
    for (int b = 0; b < h.dom.size(); ++b) {
      if (h(a) == h(b)) {
        rel.set(a, b);
      }
    }
  }
  return make_congruence_unchecked(h.dom, std::move(rel));
}

BinaryRelation kernel_preorder(const SemilatticeHom& h) {
  if (!h.is_valid()) {
    throw PreconditionError("kernel_preorder: map is not a homomorphism");
  }
  BinaryRelation r(h.dom.carrier());
  for (int a = 0; a < h.dom.size(); ++a) {
    for (int b = 0; b < h.dom.size(); ++b) {
      if (h.cod.leq(h(a), h(b))) {
        r.set(a, b);
      }
    }
  }
  return r;
}

Quotient represent(const SpecializationSemilattice& ss) {
  return build_quotient(ss.base(), psi(ss.base(), ss.spec()));
}

std::vector<std::pair<BinaryRelation, Quotient>> gamma(const FiniteSemilattice& s) {
  std::vector<std::pair<BinaryRelation, Quotient>> out;
  for (const BinaryRelation& r : enumerate_compatible_preorders(s)) {
    Quotient q = build_quotient(s, psi(s, r));
    out.emplace_back(r, std::move(q));
  }
  return out;
}

std::optional<SemilatticeHom> quotient_isomorphic(const ArrowObject& q1,
                                                  const ArrowObject& q2) {
  const SemilatticeHom& f = q1.hom();
  const SemilatticeHom& g = q2.hom();
  if (!(f.dom == g.dom) || f.dom.size() != g.dom.size()) {
    throw PreconditionError("quotient_isomorphic: sources differ");
  }
  if (f.cod.size() != g.cod.size()) {
    return std::nullopt;
  }
  if (class_size_profile(f) != class_size_profile(g)) {
    return std::nullopt;
  }
  int m = f.cod.size();
  std::vector<int> chi(static_cast<size_t>(m));
  std::iota(chi.begin(), chi.end(), 0);
  do {
    bool commutes = true;
    for (int a = 0; a < f.dom.size() && commutes; ++a) {
      commutes = chi[static_cast<size_t>(f(a))] == g(a);
    }
    if (!commutes) {
      continue;
    }
    SemilatticeHom witness{f.cod, g.cod, chi};
    if (witness.is_valid()) {
      return witness;
    }
  } while (std::next_permutation(chi.begin(), chi.end()));
  return std::nullopt;
}

std::optional<ArrowIso> arrow_isomorphic(const ArrowObject& q1,
                                         const ArrowObject& q2) {
  const SemilatticeHom& f = q1.hom();
  const SemilatticeHom& g = q2.hom();
  if (f.dom.size() != g.dom.size() || f.cod.size() != g.cod.size()) {
    return std::nullopt;
  }
  int n = f.dom.size();
  int m = f.cod.size();
  std::vector<int> sigma(static_cast<size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    SemilatticeHom sigma_hom{f.dom, g.dom, sigma};
    if (!sigma_hom.is_valid()) {
      continue;
    }
    // tau is forced pointwise by the commuting square, f being surjective.
    std::vector<int> tau(static_cast<size_t>(m), -1);
    bool consistent = true;
    for (int a = 0; a < n && consistent; ++a) {
      int from = f(a);
      int to = g(sigma[static_cast<size_t>(a)]);
      if (tau[static_cast<size_t>(from)] == -1) {
        tau[static_cast<size_t>(from)] = to;
      } else {
        consistent = tau[static_cast<size_t>(from)] == to;
      }
    }
    if (!consistent) {
      continue;
    }
    std::vector<char> hit(static_cast<size_t>(m), 0);
    bool bijective = true;
    for (int v : tau) {
      if (v < 0 || hit[static_cast<size_t>(v)]) {
        bijective = false;
        break;
      }
      hit[static_cast<size_t>(v)] = 1;
    }
    if (!bijective) {
      continue;
    }
    SemilatticeHom tau_hom{f.cod, g.cod, tau};
    if (tau_hom.is_valid()) {
      return ArrowIso{std::move(sigma_hom), std::move(tau_hom)};
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return std::nullopt;
}

bool is_spec_hom(const SpecializationSemilattice& ss1,
                 const SpecializationSemilattice& ss2,
                 const std::vector<int>& map) {
  SemilatticeHom h{ss1.base(), ss2.base(), map};
  if (!h.is_valid()) {
    return false;
  }
  for (int a = 0; a < ss1.base().size(); ++a) {
    for (int b = 0; b < ss1.base().size(); ++b) {
      if (ss1.spec().contains(a, b) && !ss2.spec().contains(h(a), h(b))) {
        return false;
      }
    }
  }
  return true;
}

bool is_con_hom(const FiniteSemilattice& s1, const Congruence& theta1,
                const FiniteSemilattice& s2, const Congruence& theta2,
                const std::vector<int>& map) {
  SemilatticeHom h{s1, s2, map};
  if (!h.is_valid()) {
    return false;
  }
  for (int a = 0; a < s1.size(); ++a) {
    for (int b = 0; b < s1.size(); ++b) {
      if (theta1.relation().contains(a, b) &&
          !theta2.relation().contains(h(a), h(b))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace speclat

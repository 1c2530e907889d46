#include "speclat/semilattice.hpp"

#include <algorithm>
#include <cassert>

#include "speclat/error.hpp"

namespace speclat {

namespace {

std::string named(const Carrier& c, int i) {
  return c.name(i) + " (#" + std::to_string(i) + ")";
}

}  // namespace

FiniteSemilattice::FiniteSemilattice(Carrier carrier, std::vector<int> table)
    : carrier_(std::move(carrier)), table_(std::move(table)) {}

FiniteSemilattice FiniteSemilattice::validate(
    Carrier carrier, const std::vector<std::vector<int>>& join_table) {
  int n = carrier.size();
  if (static_cast<int>(join_table.size()) != n) {
    throw InvalidStructureError("join table has " +
                                std::to_string(join_table.size()) +
                                " rows for carrier of size " + std::to_string(n));
  }
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(join_table[static_cast<size_t>(a)].size()) != n) {
      throw InvalidStructureError("join table row " + std::to_string(a) +
                                  " has " +
                                  std::to_string(join_table[static_cast<size_t>(a)].size()) +
                                  " entries, expected " + std::to_string(n));
    }
    for (int b = 0; b < n; ++b) {
      int v = join_table[static_cast<size_t>(a)][static_cast<size_t>(b)];
      if (v < 0 || v >= n) {
        throw InvalidStructureError("join entry at (" + std::to_string(a) + ", " +
                                    std::to_string(b) + ") is " + std::to_string(v) +
                                    ", out of range");
      }
      flat.push_back(v);
    }
  }
  FiniteSemilattice s(std::move(carrier), std::move(flat));
  const Carrier& c = s.carrier();
  for (int a = 0; a < n; ++a) {
    if (s.join(a, a) != a) {
      throw InvalidStructureError("idempotence fails at " + named(c, a) + ": " +
                                  c.name(a) + " v " + c.name(a) + " = " +
                                  c.name(s.join(a, a)));
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (s.join(a, b) != s.join(b, a)) {
        throw InvalidStructureError("commutativity fails at (" + named(c, a) +
                                    ", " + named(c, b) + ")");
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int d = 0; d < n; ++d) {
        if (s.join(s.join(a, b), d) != s.join(a, s.join(b, d))) {
          throw InvalidStructureError(
              "associativity fails at (" + named(c, a) + ", " + named(c, b) +
              ", " + named(c, d) + "): (" + c.name(a) + " v " + c.name(b) +
              ") v " + c.name(d) + " = " + c.name(s.join(s.join(a, b), d)) +
              " but " + c.name(a) + " v (" + c.name(b) + " v " + c.name(d) +
              ") = " + c.name(s.join(a, s.join(b, d))));
        }
      }
    }
  }
  return s;
}

std::optional<FiniteSemilattice> FiniteSemilattice::from_order(
    const BinaryRelation& order) {
  int n = order.size();
  std::vector<int> table(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      // Least upper bound of {a, b} under the order, if it exists.
      uint64_t uppers = order.row_bits(a) & order.row_bits(b);
      int least = -1;
      for (int u = 0; u < n; ++u) {
        if (!((uppers >> u) & 1u)) {
          continue;
        }
        if ((uppers & ~order.row_bits(u)) == 0) {
          least = u;
          break;
        }
      }
      if (least < 0) {
        return std::nullopt;
      }
      table[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b)] =
          least;
    }
  }
  return FiniteSemilattice(order.carrier(), std::move(table));
}

BinaryRelation FiniteSemilattice::induced_order() const {
  BinaryRelation r(carrier_);
  for (int a = 0; a < size(); ++a) {
    for (int b = 0; b < size(); ++b) {
      if (join(a, b) == b) {
        r.set(a, b);
      }
    }
  }
  return r;
}

std::string FiniteSemilattice::table_key() const {
  std::string key;
  key.reserve(table_.size());
  for (int v : table_) {
    key += static_cast<char>('0' + v);
  }
  return key;
}

Congruence::Congruence(FiniteSemilattice base, BinaryRelation rel)
    : base_(std::move(base)),
      rel_(std::move(rel)),
      partition_(SetPartition::from_equivalence(rel_)) {}

Congruence Congruence::validate(const FiniteSemilattice& base, BinaryRelation rel) {
  if (rel.size() != base.size()) {
    throw PreconditionError("congruence relation on carrier of size " +
                            std::to_string(rel.size()) + " for semilattice of size " +
                            std::to_string(base.size()));
  }
  if (!rel.is_equivalence()) {
    throw InvalidStructureError("relation is not an equivalence");
  }
  for (int a = 0; a < base.size(); ++a) {
    for (int b = 0; b < base.size(); ++b) {
      if (!rel.contains(a, b)) {
        continue;
      }
      for (int c = 0; c < base.size(); ++c) {
        if (!rel.contains(base.join(a, c), base.join(b, c))) {
          throw InvalidStructureError(
              "join compatibility fails: " + base.carrier().name(a) + " ~ " +
              base.carrier().name(b) + " but " + base.carrier().name(a) + " v " +
              base.carrier().name(c) + " is not related to " +
              base.carrier().name(b) + " v " + base.carrier().name(c));
        }
      }
    }
  }
  return Congruence(base, std::move(rel));
}

Congruence make_congruence_unchecked(const FiniteSemilattice& base,
                                     BinaryRelation rel) {
  assert(is_congruence(base, rel));
  return Congruence(base, std::move(rel));
}

SpecializationSemilattice::SpecializationSemilattice(FiniteSemilattice base,
                                                     BinaryRelation spec)
    : base_(std::move(base)), spec_(std::move(spec)) {}

SpecializationSemilattice SpecializationSemilattice::validate(
    FiniteSemilattice base, BinaryRelation spec) {
  if (spec.size() != base.size()) {
    throw PreconditionError("specialization preorder on carrier of size " +
                            std::to_string(spec.size()) + " for semilattice of size " +
                            std::to_string(base.size()));
  }
  if (!spec.is_preorder()) {
    throw InvalidStructureError("specialization relation is not a preorder");
  }
  if (!is_coarser(base.induced_order(), spec)) {
    throw InvalidStructureError(
        "specialization preorder does not contain the induced order");
  }
  for (int a = 0; a < base.size(); ++a) {
    for (int a1 = 0; a1 < base.size(); ++a1) {
      for (int b = 0; b < base.size(); ++b) {
        if (spec.contains(a, b) && spec.contains(a1, b) &&
            !spec.contains(base.join(a, a1), b)) {
          throw InvalidStructureError(
              "join compatibility fails at (" + base.carrier().name(a) + ", " +
              base.carrier().name(a1) + ", " + base.carrier().name(b) + ")");
        }
      }
    }
  }
  return SpecializationSemilattice(std::move(base), std::move(spec));
}

bool SemilatticeHom::is_valid() const { return is_semilattice_hom(*this); }

bool SemilatticeHom::is_surjective() const {
  std::vector<char> hit(static_cast<size_t>(cod.size()), 0);
  for (int v : map) {
    hit[static_cast<size_t>(v)] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
}

bool SemilatticeHom::is_injective() const {
  std::vector<char> hit(static_cast<size_t>(cod.size()), 0);
  for (int v : map) {
    if (hit[static_cast<size_t>(v)]) {
      return false;
    }
    hit[static_cast<size_t>(v)] = 1;
  }
  return true;
}

bool is_semilattice_hom(const SemilatticeHom& h) {
  if (static_cast<int>(h.map.size()) != h.dom.size()) {
    return false;
  }
  for (int v : h.map) {
    if (v < 0 || v >= h.cod.size()) {
      return false;
    }
  }
  for (int a = 0; a < h.dom.size(); ++a) {
    for (int b = 0; b < h.dom.size(); ++b) {
      if (h(h.dom.join(a, b)) != h.cod.join(h(a), h(b))) {
        return false;
      }
    }
  }
  return true;
}

bool is_compatible_preorder(const FiniteSemilattice& s, const BinaryRelation& r) {
  if (r.size() != s.size()) {
    throw PreconditionError("relation size " + std::to_string(r.size()) +
                            " vs semilattice size " + std::to_string(s.size()));
  }
  if (!r.is_preorder()) {
    return false;
  }
  if (!is_coarser(s.induced_order(), r)) {
    return false;
  }
  for (int a = 0; a < s.size(); ++a) {
    for (int a1 = 0; a1 < s.size(); ++a1) {
      for (int b = 0; b < s.size(); ++b) {
        if (r.contains(a, b) && r.contains(a1, b) &&
            !r.contains(s.join(a, a1), b)) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_congruence(const FiniteSemilattice& s, const BinaryRelation& r) {
  if (r.size() != s.size()) {
    throw PreconditionError("relation size " + std::to_string(r.size()) +
                            " vs semilattice size " + std::to_string(s.size()));
  }
  if (!r.is_equivalence()) {
    return false;
  }
  for (int a = 0; a < s.size(); ++a) {
    for (int b = 0; b < s.size(); ++b) {
      if (!r.contains(a, b)) {
        continue;
      }
      for (int c = 0; c < s.size(); ++c) {
        if (!r.contains(s.join(a, c), s.join(b, c))) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<Congruence> enumerate_congruences(const FiniteSemilattice& s) {
  std::vector<Congruence> out;
  for (const SetPartition& p : enumerate_partitions(s.size())) {
    BinaryRelation rel = p.to_relation(s.carrier());
    if (is_congruence(s, rel)) {
      out.push_back(make_congruence_unchecked(s, std::move(rel)));
    }
  }
  return out;
}

std::vector<BinaryRelation> enumerate_compatible_preorders(
    const FiniteSemilattice& s, PreorderEnumeration mode) {
  auto direct = [&s]() {
    return enumerate_relations_containing(
        s.induced_order(),
        [&s](const BinaryRelation& r) { return is_compatible_preorder(s, r); });
  };
  auto via_congruences = [&s]() {
    std::vector<BinaryRelation> image;
    for (const Congruence& theta : enumerate_congruences(s)) {
      BinaryRelation r(s.carrier());
      for (int a = 0; a < s.size(); ++a) {
        for (int b = 0; b < s.size(); ++b) {
          if (theta.relation().contains(s.join(a, b), b)) {
            r.set(a, b);
          }
        }
      }
      image.push_back(std::move(r));
    }
    std::sort(image.begin(), image.end(),
              [](const BinaryRelation& a, const BinaryRelation& b) {
                return a.row_major_key() < b.row_major_key();
              });
    return image;
  };
  switch (mode) {
    case PreorderEnumeration::direct:
      return direct();
    case PreorderEnumeration::via_congruences:
      return via_congruences();
    case PreorderEnumeration::cross_check: {
      std::vector<BinaryRelation> a = direct();
      std::vector<BinaryRelation> b = via_congruences();
      if (a != b) {
        throw CrossCheckError(
            "compatible preorder enumerations disagree: direct filter found " +
            std::to_string(a.size()) + ", congruence image found " +
            std::to_string(b.size()));
      }
      return a;
    }
  }
  throw PreconditionError("unknown enumeration mode");
}

bool check_derived_monotonicity(const SpecializationSemilattice& ss) {
  const FiniteSemilattice& s = ss.base();
  const BinaryRelation& r = ss.spec();
  for (int a = 0; a < s.size(); ++a) {
    for (int b = 0; b < s.size(); ++b) {
      if (!r.contains(a, b)) {
        continue;
      }
      for (int a1 = 0; a1 < s.size(); ++a1) {
        for (int b1 = 0; b1 < s.size(); ++b1) {
          if (r.contains(a1, b1) && !r.contains(s.join(a, a1), s.join(b, b1))) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

std::vector<FiniteSemilattice> enumerate_semilattices(int n) {
  if (n < 1) {
    throw PreconditionError("semilattice enumeration requires n >= 1");
  }
  if (n > 5) {
    throw GuardError("semilattice enumeration guarded at n <= 5, got " +
                     std::to_string(n));
  }
  Carrier carrier(n);
  std::vector<FiniteSemilattice> out;
  std::vector<BinaryRelation> orders = enumerate_relations_containing(
      BinaryRelation::identity(carrier),
      [](const BinaryRelation& r) { return r.is_partial_order(); });
  for (const BinaryRelation& order : orders) {
    if (auto s = FiniteSemilattice::from_order(order)) {
      out.push_back(std::move(*s));
    }
  }
  return out;
}

namespace {

std::vector<SemilatticeHom> enumerate_homs_impl(const FiniteSemilattice& dom,
                                                const FiniteSemilattice& cod,
                                                long max_maps, bool surjective_only) {
  double space = 1.0;
  for (int i = 0; i < dom.size(); ++i) {
    space *= cod.size();
  }
  if (space > static_cast<double>(max_maps)) {
    throw GuardError("homomorphism enumeration budget exceeded: " +
                     std::to_string(cod.size()) + "^" + std::to_string(dom.size()) +
                     " candidate maps");
  }
  std::vector<SemilatticeHom> out;
  std::vector<int> map(static_cast<size_t>(dom.size()), 0);
  while (true) {
    SemilatticeHom h{dom, cod, map};
    if (is_semilattice_hom(h) && (!surjective_only || h.is_surjective())) {
      out.push_back(std::move(h));
    }
    int i = dom.size() - 1;
    while (i >= 0 && map[static_cast<size_t>(i)] == cod.size() - 1) {
      map[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) {
      break;
    }
    ++map[static_cast<size_t>(i)];
  }
  return out;
}

}  // namespace

std::vector<SemilatticeHom> enumerate_homs(const FiniteSemilattice& dom,
                                           const FiniteSemilattice& cod,
                                           long max_maps) {
  return enumerate_homs_impl(dom, cod, max_maps, false);
}

std::vector<SemilatticeHom> enumerate_surjective_homs(const FiniteSemilattice& dom,
                                                      const FiniteSemilattice& cod,
                                                      long max_maps) {
  return enumerate_homs_impl(dom, cod, max_maps, true);
}

}  // namespace speclat

#include "speclat/poset.hpp"

#include <algorithm>
#include <cassert>

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

}  // namespace

FinitePoset::FinitePoset(Carrier carrier, BinaryRelation order)
    : carrier_(std::move(carrier)), order_(std::move(order)) {}

FinitePoset FinitePoset::validate(Carrier carrier, BinaryRelation order) {
  if (order.size() != carrier.size()) {
    throw PreconditionError("order on carrier of size " +
                            std::to_string(order.size()) + " vs carrier of size " +
                            std::to_string(carrier.size()));
  }
  if (!order.is_reflexive()) {
    throw InvalidStructureError("order is not reflexive");
  }
  if (!order.is_antisymmetric()) {
    throw InvalidStructureError("order is not antisymmetric");
  }
  if (!order.is_transitive()) {
    throw InvalidStructureError("order is not transitive");
  }
  return FinitePoset(std::move(carrier), std::move(order));
}

SpecializationPoset::SpecializationPoset(FinitePoset base, BinaryRelation spec)
    : base_(std::move(base)), spec_(std::move(spec)) {}

SpecializationPoset SpecializationPoset::validate(FinitePoset base,
                                                  BinaryRelation spec) {
  if (spec.size() != base.size()) {
    throw PreconditionError("specialization preorder size mismatch");
  }
  if (!spec.is_preorder()) {
    throw InvalidStructureError("specialization relation is not a preorder");
  }
  if (!is_coarser(base.order(), spec)) {
    throw InvalidStructureError(
        "specialization preorder does not contain the partial order");
  }
  return SpecializationPoset(std::move(base), std::move(spec));
}

bool MonotoneMap::is_valid() const {
  if (static_cast<int>(map.size()) != dom.size()) {
    return false;
  }
  for (int v : map) {
    if (v < 0 || v >= cod.size()) {
      return false;
    }
  }
  for (int a = 0; a < dom.size(); ++a) {
    for (int b = 0; b < dom.size(); ++b) {
      if (dom.leq(a, b) && !cod.leq((*this)(a), (*this)(b))) {
        return false;
      }
    }
  }
  return true;
}

bool MonotoneMap::is_surjective() const {
  std::vector<char> hit(static_cast<size_t>(cod.size()), 0);
  for (int v : map) {
    hit[static_cast<size_t>(v)] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
}

PosetQuotient poset_quotient(const SpecializationPoset& sp) {
  const FinitePoset& p = sp.base();
  const BinaryRelation& spec = sp.spec();
  SetPartition classes = SetPartition::from_equivalence(spec.symmetric_core());
  int m = classes.block_count();
  Carrier target_carrier = class_carrier(p.carrier(), classes);
  BinaryRelation target_order(target_carrier);
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      // Representative independent: spec is transitive and the classes
      // are its symmetric core.
      if (spec.contains(classes.block(x).front(), classes.block(y).front())) {
        target_order.set(x, y);
      }
    }
  }
  FinitePoset target = FinitePoset::validate(target_carrier, target_order);
  std::vector<int> projection(static_cast<size_t>(p.size()));
  for (int a = 0; a < p.size(); ++a) {
    projection[static_cast<size_t>(a)] = classes.block_of(a);
  }
  MonotoneMap pi{p, target, std::move(projection)};
  assert(pi.is_valid());
  return PosetQuotient{std::move(classes), std::move(target), std::move(pi)};
}

BinaryRelation poset_kernel_preorder(const MonotoneMap& m) {
  if (!m.is_valid()) {
    throw PreconditionError("kernel preorder: map is not order preserving");
  }
  BinaryRelation r(m.dom.carrier());
  for (int a = 0; a < m.dom.size(); ++a) {
    for (int b = 0; b < m.dom.size(); ++b) {
      if (m.cod.leq(m(a), m(b))) {
        r.set(a, b);
      }
    }
  }
  return r;
}

std::optional<std::vector<int>> poset_quotient_isomorphic(const MonotoneMap& m1,
                                                          const MonotoneMap& m2) {
  if (!(m1.dom == m2.dom)) {
    throw PreconditionError("poset_quotient_isomorphic: domains differ");
  }
  if (m1.cod.size() != m2.cod.size()) {
    return std::nullopt;
  }
  // chi is forced pointwise because m1 is surjective onto its codomain.
  int m = m1.cod.size();
  std::vector<int> chi(static_cast<size_t>(m), -1);
  for (int a = 0; a < m1.dom.size(); ++a) {
    int from = m1(a);
    int to = m2(a);
    if (chi[static_cast<size_t>(from)] == -1) {
      chi[static_cast<size_t>(from)] = to;
    } else if (chi[static_cast<size_t>(from)] != to) {
      return std::nullopt;
    }
  }
  std::vector<char> hit(static_cast<size_t>(m), 0);
  for (int v : chi) {
    if (v < 0 || hit[static_cast<size_t>(v)]) {
      return std::nullopt;
    }
    hit[static_cast<size_t>(v)] = 1;
  }
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (m1.cod.leq(x, y) !=
          m2.cod.leq(chi[static_cast<size_t>(x)], chi[static_cast<size_t>(y)])) {
        return std::nullopt;
      }
    }
  }
  return chi;
}

std::vector<MonotoneMap> enumerate_surjective_monotone_classes(const FinitePoset& p) {
  if (p.size() > 5) {
    throw GuardError("surjective monotone enumeration guarded at n <= 5");
  }
  std::vector<MonotoneMap> out;
  for (const SetPartition& classes : enumerate_partitions(p.size())) {
    Carrier target_carrier = class_carrier(p.carrier(), classes);
    std::vector<int> projection(static_cast<size_t>(p.size()));
    for (int a = 0; a < p.size(); ++a) {
      projection[static_cast<size_t>(a)] = classes.block_of(a);
    }
    std::vector<BinaryRelation> orders = enumerate_relations_containing(
        BinaryRelation::identity(target_carrier),
        [](const BinaryRelation& r) { return r.is_partial_order(); });
    for (BinaryRelation& order : orders) {
      FinitePoset target = FinitePoset::validate(target_carrier, std::move(order));
      MonotoneMap candidate{p, std::move(target), projection};
      if (!candidate.is_valid()) {
        continue;
      }
      bool duplicate = false;
      for (const MonotoneMap& seen : out) {
        if (poset_quotient_isomorphic(seen, candidate)) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) {
        out.push_back(std::move(candidate));
      }
    }
  }
  return out;
}

long compatible_preorder_count_poset(const FinitePoset& p) {
  return static_cast<long>(
      enumerate_relations_containing(p.order(), [](const BinaryRelation& r) {
        return r.is_preorder();
      }).size());
}

long equivalence_count(int n) {
  return partition_count(n);
}

std::vector<FinitePoset> enumerate_posets(int n) {
  if (n < 1) {
    throw PreconditionError("poset enumeration requires n >= 1");
  }
  if (n > 5) {
    throw GuardError("poset enumeration guarded at n <= 5, got " +
                     std::to_string(n));
  }
  Carrier carrier(n);
  std::vector<FinitePoset> out;
  for (BinaryRelation& order : enumerate_relations_containing(
           BinaryRelation::identity(carrier),
           [](const BinaryRelation& r) { return r.is_partial_order(); })) {
    out.push_back(FinitePoset::validate(carrier, std::move(order)));
  }
  return out;
}

}  // namespace speclat

#include "speclat/model.hpp"

#include <algorithm>
#include <cassert>

#include "speclat/error.hpp"

namespace speclat {

long tuple_count(int n, int arity) {
  long count = 1;
  for (int i = 0; i < arity; ++i) {
    count *= n;
  }
  return count;
}

long encode_tuple(int n, std::span<const int> tuple) {
  long index = 0;
  for (int v : tuple) {
    index = index * n + v;
  }
  return index;
}

std::vector<int> decode_tuple(int n, int arity, long index) {
  std::vector<int> tuple(static_cast<size_t>(arity));
  for (int i = arity - 1; i >= 0; --i) {
    tuple[static_cast<size_t>(i)] = static_cast<int>(index % n);
    index /= n;
  }
  return tuple;
}

Signature Signature::validate(std::vector<RelationSymbol> relations,
                              std::vector<FunctionSymbol> functions) {
  std::vector<std::string> names;
  for (const auto& r : relations) {
    if (r.arity < 1) {
      throw InvalidStructureError("relation symbol '" + r.name +
                                  "' must have arity >= 1");
    }
    names.push_back(r.name);
  }
  for (const auto& f : functions) {
    if (f.arity < 0) {
      throw InvalidStructureError("function symbol '" + f.name +
                                  "' has negative arity");
    }
    names.push_back(f.name);
  }
  for (size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) {
      throw InvalidStructureError("signature contains an empty symbol name");
    }
    for (size_t j = i + 1; j < names.size(); ++j) {
      if (names[i] == names[j]) {
        throw InvalidStructureError("duplicate symbol name '" + names[i] + "'");
      }
    }
  }
  Signature s;
  s.relations_ = std::move(relations);
  s.functions_ = std::move(functions);
  return s;
}

RelationTable::RelationTable(int carrier_size, int arity)
    : n_(carrier_size),
      arity_(arity),
      bits_(static_cast<size_t>(tuple_count(carrier_size, arity)), 0) {}

bool RelationTable::contains(std::span<const int> tuple) const {
  return contains_index(encode_tuple(n_, tuple));
}

void RelationTable::set(std::span<const int> tuple, bool value) {
  set_index(encode_tuple(n_, tuple), value);
}

std::vector<std::vector<int>> RelationTable::tuples() const {
  std::vector<std::vector<int>> out;
  for (long t = 0; t < universe_size(); ++t) {
    if (contains_index(t)) {
      out.push_back(decode_tuple(n_, arity_, t));
    }
  }
  return out;
}

FunctionTable::FunctionTable(int carrier_size, int arity)
    : n_(carrier_size),
      arity_(arity),
      values_(static_cast<size_t>(tuple_count(carrier_size, arity)), 0) {}

int FunctionTable::eval(std::span<const int> tuple) const {
  return at_index(encode_tuple(n_, tuple));
}

void FunctionTable::set(std::span<const int> tuple, int value) {
  set_index(encode_tuple(n_, tuple), value);
}

FiniteStructure::FiniteStructure(Signature signature, Carrier carrier,
                                 std::vector<RelationTable> relations,
                                 std::vector<FunctionTable> functions)
    : signature_(std::move(signature)),
      carrier_(std::move(carrier)),
      relations_(std::move(relations)),
      functions_(std::move(functions)) {}

FiniteStructure FiniteStructure::validate(Signature signature, Carrier carrier,
                                          std::vector<RelationTable> relations,
                                          std::vector<FunctionTable> functions) {
  if (relations.size() != signature.relations().size()) {
    throw InvalidStructureError("structure has " + std::to_string(relations.size()) +
                                " relation tables for " +
                                std::to_string(signature.relations().size()) +
                                " symbols");
  }
  if (functions.size() != signature.functions().size()) {
    throw InvalidStructureError("structure has " + std::to_string(functions.size()) +
                                " function tables for " +
                                std::to_string(signature.functions().size()) +
                                " symbols");
  }
  int n = carrier.size();
  for (size_t i = 0; i < relations.size(); ++i) {
    const auto& symbol = signature.relations()[i];
    if (relations[i].carrier_size() != n || relations[i].arity() != symbol.arity) {
      throw InvalidStructureError("table for relation '" + symbol.name +
                                  "' has wrong shape");
    }
  }
  for (size_t i = 0; i < functions.size(); ++i) {
    const auto& symbol = signature.functions()[i];
    if (functions[i].carrier_size() != n || functions[i].arity() != symbol.arity) {
      throw InvalidStructureError("table for function '" + symbol.name +
                                  "' has wrong shape");
    }
    for (long t = 0; t < functions[i].universe_size(); ++t) {
      int v = functions[i].at_index(t);
      if (v < 0 || v >= n) {
        throw InvalidStructureError("function '" + symbol.name + "' value " +
                                    std::to_string(v) + " out of range");
      }
    }
  }
  return FiniteStructure(std::move(signature), std::move(carrier),
                         std::move(relations), std::move(functions));
}

bool is_homomorphism(const StructureHom& h) {
  if (!(h.dom.signature() == h.cod.signature())) {
    throw PreconditionError("homomorphism check: signatures differ");
  }
  if (static_cast<int>(h.map.size()) != h.dom.size()) {
    return false;
  }
  for (int v : h.map) {
    if (v < 0 || v >= h.cod.size()) {
      return false;
    }
  }
  int n = h.dom.size();
  const Signature& sig = h.dom.signature();
  std::vector<int> mapped;
  for (size_t f = 0; f < sig.functions().size(); ++f) {
    int arity = sig.functions()[f].arity;
    const FunctionTable& table = h.dom.function(static_cast<int>(f));
    for (long t = 0; t < table.universe_size(); ++t) {
      std::vector<int> tuple = decode_tuple(n, arity, t);
      mapped.assign(tuple.size(), 0);
      for (size_t i = 0; i < tuple.size(); ++i) {
        mapped[i] = h.map[static_cast<size_t>(tuple[i])];
      }
      if (h.map[static_cast<size_t>(table.at_index(t))] !=
          h.cod.function(static_cast<int>(f)).eval(mapped)) {
        return false;
      }
    }
  }
  for (size_t r = 0; r < sig.relations().size(); ++r) {
    int arity = sig.relations()[r].arity;
    const RelationTable& table = h.dom.relation(static_cast<int>(r));
    for (long t = 0; t < table.universe_size(); ++t) {
      if (!table.contains_index(t)) {
        continue;
      }
      std::vector<int> tuple = decode_tuple(n, arity, t);
      mapped.assign(tuple.size(), 0);
      for (size_t i = 0; i < tuple.size(); ++i) {
        mapped[i] = h.map[static_cast<size_t>(tuple[i])];
      }
      if (!h.cod.relation(static_cast<int>(r)).contains(mapped)) {
        return false;
      }
    }
  }
  return true;
}

bool is_surjective(const StructureHom& h) {
  std::vector<char> hit(static_cast<size_t>(h.cod.size()), 0);
  for (int v : h.map) {
    if (v >= 0 && v < h.cod.size()) {
      hit[static_cast<size_t>(v)] = 1;
    }
  }
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

namespace {

SetPartition kernel_partition(const std::vector<int>& map, int dom_size) {
  std::vector<int> rgs(static_cast<size_t>(dom_size), -1);
  std::vector<int> seen_values;
  for (int a = 0; a < dom_size; ++a) {
    int v = map[static_cast<size_t>(a)];
    auto it = std::find(seen_values.begin(), seen_values.end(), v);
    if (it == seen_values.end()) {
      rgs[static_cast<size_t>(a)] = static_cast<int>(seen_values.size());
      seen_values.push_back(v);
    } else {
      rgs[static_cast<size_t>(a)] =
          static_cast<int>(std::distance(seen_values.begin(), it));
    }
  }
  return SetPartition::from_rgs(rgs);
}

std::string tuple_to_string(std::span<const int> tuple) {
  std::string out = "(";
  for (size_t i = 0; i < tuple.size(); ++i) {
    if (i > 0) {
      out += ",";
    }
    out += std::to_string(tuple[i]);
  }
  return out + ")";
}

Carrier class_carrier(const Carrier& source, const SetPartition& classes) {
  std::vector<std::string> names;
  for (const auto& block : classes.blocks()) {
    std::string name = "{";
    for (size_t i = 0; i < block.size(); ++i) {
      if (i > 0) {
        name += ",";
      }
      name += source.name(block[i]);
    }
    names.push_back(name + "}");
  }
  return Carrier(classes.block_count(), std::move(names));
}

// The orbit of a tuple under componentwise theta is determined by the
// block vector of its coordinates.
long orbit_index(const SetPartition& classes, std::span<const int> tuple) {
  long index = 0;
  for (int v : tuple) {
    index = index * classes.block_count() + classes.block_of(v);
  }
  return index;
}

// Checks that componentwise theta-related inputs give theta-related
// outputs, i.e. theta is a congruence for f. Linear sweep: tuples in one
// orbit must all map into one class.
bool function_respects(const FunctionTable& f, const SetPartition& classes) {
  int n = f.carrier_size();
  long orbits = tuple_count(classes.block_count(), f.arity());
  std::vector<int> orbit_class(static_cast<size_t>(orbits), -1);
  for (long t = 0; t < f.universe_size(); ++t) {
    std::vector<int> tuple = decode_tuple(n, f.arity(), t);
    long orbit = orbit_index(classes, tuple);
    int out_class = classes.block_of(f.at_index(t));
    int& expected = orbit_class[static_cast<size_t>(orbit)];
    if (expected == -1) {
      expected = out_class;
    } else if (expected != out_class) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool is_into_classes(const StructureHom& h) {
  if (!is_surjective(h)) {
    return false;
  }
  SetPartition classes = kernel_partition(h.map, h.dom.size());
  if (h.cod.size() != classes.block_count()) {
    return false;
  }
  for (int a = 0; a < h.dom.size(); ++a) {
    if (h.map[static_cast<size_t>(a)] != classes.block_of(a)) {
      return false;
    }
  }
  return true;
}

AppropriateExpansion::AppropriateExpansion(FiniteStructure base,
                                           BinaryRelation theta,
                                           std::vector<RelationTable> starred)
    : base_(std::move(base)),
      theta_(std::move(theta)),
      starred_(std::move(starred)) {}

AppropriateExpansion AppropriateExpansion::validate(
    FiniteStructure base, BinaryRelation theta,
    std::vector<RelationTable> starred) {
  if (theta.size() != base.size()) {
    throw PreconditionError("theta on carrier of size " +
                            std::to_string(theta.size()) + " for structure of size " +
                            std::to_string(base.size()));
  }
  if (!theta.is_equivalence()) {
    throw InvalidStructureError("theta is not an equivalence relation");
  }
  const Signature& sig = base.signature();
  if (starred.size() != sig.relations().size()) {
    throw InvalidStructureError("expected one starred table per relation symbol");
  }
  SetPartition classes = SetPartition::from_equivalence(theta);
  for (size_t r = 0; r < starred.size(); ++r) {
    const RelationSymbol& symbol = sig.relations()[r];
    const RelationTable& plain = base.relation(static_cast<int>(r));
    const RelationTable& star = starred[r];
    if (star.carrier_size() != base.size() || star.arity() != symbol.arity) {
      throw InvalidStructureError("starred table for '" + symbol.name +
                                  "' has wrong shape");
    }
    for (long t = 0; t < plain.universe_size(); ++t) {
      if (plain.contains_index(t) && !star.contains_index(t)) {
        throw InvalidStructureError(
            "containment fails for '" + symbol.name + "' at " +
            tuple_to_string(decode_tuple(base.size(), symbol.arity, t)) +
            ": in the plain relation but not in the starred one");
      }
    }
    // Saturation: the starred table must be constant on theta-orbits.
    long orbits = tuple_count(classes.block_count(), symbol.arity);
    std::vector<int> orbit_value(static_cast<size_t>(orbits), -1);
    for (long t = 0; t < star.universe_size(); ++t) {
      std::vector<int> tuple = decode_tuple(base.size(), symbol.arity, t);
      long orbit = orbit_index(classes, tuple);
      int value = star.contains_index(t) ? 1 : 0;
      int& expected = orbit_value[static_cast<size_t>(orbit)];
      if (expected == -1) {
        expected = value;
      } else if (expected != value) {
        throw InvalidStructureError(
            "saturation fails for '" + symbol.name + "' at " +
            tuple_to_string(tuple) +
            ": theta-related tuples disagree about membership");
      }
    }
  }
  for (size_t f = 0; f < sig.functions().size(); ++f) {
    if (!function_respects(base.function(static_cast<int>(f)), classes)) {
      throw InvalidStructureError("theta is not a congruence for function '" +
                                  sig.functions()[f].name + "'");
    }
  }
  return AppropriateExpansion(std::move(base), std::move(theta), std::move(starred));
}

AppropriateExpansion make_expansion_unchecked(FiniteStructure base,
                                              BinaryRelation theta,
                                              std::vector<RelationTable> starred) {
  return AppropriateExpansion(std::move(base), std::move(theta), std::move(starred));
}

AppropriateExpansion expansion_from_hom(const StructureHom& h) {
  if (!is_homomorphism(h)) {
    throw PreconditionError("expansion_from_hom: map is not a homomorphism");
  }
  if (!is_surjective(h)) {
    throw PreconditionError("expansion_from_hom: homomorphism is not surjective");
  }
  int n = h.dom.size();
  BinaryRelation theta(h.dom.carrier());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (h.map[static_cast<size_t>(a)] == h.map[static_cast<size_t>(b)]) {
        theta.set(a, b);
      }
    }
  }
  const Signature& sig = h.dom.signature();
  std::vector<RelationTable> starred;
  starred.reserve(sig.relations().size());
  std::vector<int> mapped;
  for (size_t r = 0; r < sig.relations().size(); ++r) {
    int arity = sig.relations()[r].arity;
    RelationTable star(n, arity);
    for (long t = 0; t < star.universe_size(); ++t) {
      std::vector<int> tuple = decode_tuple(n, arity, t);
      mapped.assign(tuple.size(), 0);
      for (size_t i = 0; i < tuple.size(); ++i) {
        mapped[i] = h.map[static_cast<size_t>(tuple[i])];
      }
      star.set_index(t, h.cod.relation(static_cast<int>(r)).contains(mapped));
    }
    starred.push_back(std::move(star));
  }
  return AppropriateExpansion::validate(h.dom, std::move(theta), std::move(starred));
}

StructureHom quotient_from_expansion(const AppropriateExpansion& e) {
  const FiniteStructure& a = e.base();
  const Signature& sig = a.signature();
  SetPartition classes = SetPartition::from_equivalence(e.theta());
  int m = classes.block_count();

  std::vector<RelationTable> relations;
  relations.reserve(sig.relations().size());
  for (size_t r = 0; r < sig.relations().size(); ++r) {
    int arity = sig.relations()[r].arity;
    RelationTable table(m, arity);
    for (long t = 0; t < table.universe_size(); ++t) {
      // Well-defined by saturation: any representatives give the same
      // answer; take the block minima.
      std::vector<int> class_tuple = decode_tuple(m, arity, t);
      std::vector<int> reps(class_tuple.size());
      for (size_t i = 0; i < class_tuple.size(); ++i) {
        reps[i] = classes.block(class_tuple[i]).front();
      }
      table.set_index(t, e.starred(static_cast<int>(r)).contains(reps));
    }
    relations.push_back(std::move(table));
  }

  std::vector<FunctionTable> functions;
  functions.reserve(sig.functions().size());
  for (size_t f = 0; f < sig.functions().size(); ++f) {
    int arity = sig.functions()[f].arity;
    FunctionTable table(m, arity);
    for (long t = 0; t < table.universe_size(); ++t) {
      std::vector<int> class_tuple = decode_tuple(m, arity, t);
      std::vector<int> reps(class_tuple.size());
      for (size_t i = 0; i < class_tuple.size(); ++i) {
        reps[i] = classes.block(class_tuple[i]).front();
      }
      table.set_index(t, classes.block_of(a.function(static_cast<int>(f)).eval(reps)));
    }
    functions.push_back(std::move(table));
  }

  FiniteStructure target =
      FiniteStructure::validate(sig, class_carrier(a.carrier(), classes),
                                std::move(relations), std::move(functions));
  std::vector<int> map(static_cast<size_t>(a.size()));
  for (int x = 0; x < a.size(); ++x) {
    map[static_cast<size_t>(x)] = classes.block_of(x);
  }
  StructureHom pi{a, std::move(target), std::move(map)};
  assert(is_homomorphism(pi) && is_into_classes(pi));
  return pi;
}

std::vector<StructureHom> enumerate_surjective_homs_into_classes(
    const FiniteStructure& a) {
  const Signature& sig = a.signature();
  int n = a.size();
  std::vector<StructureHom> out;
  for (const SetPartition& classes : enumerate_partitions(n)) {
    // The kernel of a homomorphism must be a congruence for every
    // function symbol; partitions that are not are skipped outright.
    bool ok = true;
    for (size_t f = 0; f < sig.functions().size() && ok; ++f) {
      ok = function_respects(a.function(static_cast<int>(f)), classes);
    }
    if (!ok) {
      continue;
    }
    int m = classes.block_count();

    // Quotient function tables are forced by the congruence property.
    std::vector<FunctionTable> functions;
    functions.reserve(sig.functions().size());
    for (size_t f = 0; f < sig.functions().size(); ++f) {
      int arity = sig.functions()[f].arity;
      FunctionTable table(m, arity);
      for (long t = 0; t < table.universe_size(); ++t) {
        std::vector<int> class_tuple = decode_tuple(m, arity, t);
        std::vector<int> reps(class_tuple.size());
        for (size_t i = 0; i < class_tuple.size(); ++i) {
          reps[i] = classes.block(class_tuple[i]).front();
        }
        table.set_index(t,
                        classes.block_of(a.function(static_cast<int>(f)).eval(reps)));
      }
      functions.push_back(std::move(table));
    }

    // Each quotient relation table must contain the image of the plain
    // table; the remaining tuples are free.
    std::vector<RelationTable> image_tables;
    std::vector<std::vector<long>> free_tuples;
    image_tables.reserve(sig.relations().size());
    free_tuples.reserve(sig.relations().size());
    for (size_t r = 0; r < sig.relations().size(); ++r) {
      int arity = sig.relations()[r].arity;
      RelationTable image(m, arity);
      const RelationTable& plain = a.relation(static_cast<int>(r));
      for (long t = 0; t < plain.universe_size(); ++t) {
        if (!plain.contains_index(t)) {
          continue;
        }
        std::vector<int> tuple = decode_tuple(n, arity, t);
        std::vector<int> image_tuple(tuple.size());
        for (size_t i = 0; i < tuple.size(); ++i) {
          image_tuple[i] = classes.block_of(tuple[i]);
        }
        image.set(image_tuple);
      }
      std::vector<long> free;
      for (long t = 0; t < image.universe_size(); ++t) {
        if (!image.contains_index(t)) {
          free.push_back(t);
        }
      }
      image_tables.push_back(std::move(image));
      free_tuples.push_back(std::move(free));
    }

    long total_free = 0;
    for (const auto& free : free_tuples) {
      total_free += static_cast<long>(free.size());
    }
    if (total_free > 25) {
      throw GuardError("relation-table sweep over " + std::to_string(total_free) +
                       " free tuples exceeds the guard");
    }

    std::vector<int> projection(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) {
      projection[static_cast<size_t>(x)] = classes.block_of(x);
    }
    Carrier target_carrier = class_carrier(a.carrier(), classes);

    // Sweep the free tuples of all symbols as one bit counter, first
    // symbol's first free tuple most significant.
    uint64_t combinations = uint64_t{1} << total_free;
    for (uint64_t k = 0; k < combinations; ++k) {
      std::vector<RelationTable> relations = image_tables;
      int bit = static_cast<int>(total_free) - 1;
      for (size_t r = 0; r < relations.size(); ++r) {
        for (long t : free_tuples[r]) {
          relations[r].set_index(t, (k >> bit) & 1u);
          --bit;
        }
      }
      FiniteStructure target = FiniteStructure::validate(
          sig, target_carrier, std::move(relations), functions);
      out.push_back(StructureHom{a, std::move(target), projection});
    }
  }
  return out;
}

std::vector<AppropriateExpansion> enumerate_appropriate_expansions(
    const FiniteStructure& a) {
  const Signature& sig = a.signature();
  int n = a.size();
  std::vector<AppropriateExpansion> out;
  for (const SetPartition& classes : enumerate_partitions(n)) {
    bool ok = true;
    for (size_t f = 0; f < sig.functions().size() && ok; ++f) {
      ok = function_respects(a.function(static_cast<int>(f)), classes);
    }
    if (!ok) {
      continue;
    }
    BinaryRelation theta = classes.to_relation(a.carrier());

    // Per symbol: the saturation of the plain table is forced in; every
    // orbit disjoint from it is free to be included or not.
    std::vector<RelationTable> base_tables;
    std::vector<std::vector<std::vector<long>>> free_orbits;
    base_tables.reserve(sig.relations().size());
    free_orbits.reserve(sig.relations().size());
    for (size_t r = 0; r < sig.relations().size(); ++r) {
      int arity = sig.relations()[r].arity;
      const RelationTable& plain = a.relation(static_cast<int>(r));
      long orbit_count = tuple_count(classes.block_count(), arity);
      std::vector<std::vector<long>> members(static_cast<size_t>(orbit_count));
      std::vector<char> forced(static_cast<size_t>(orbit_count), 0);
      for (long t = 0; t < plain.universe_size(); ++t) {
        std::vector<int> tuple = decode_tuple(n, arity, t);
        long orbit = orbit_index(classes, tuple);
        members[static_cast<size_t>(orbit)].push_back(t);
        if (plain.contains_index(t)) {
          forced[static_cast<size_t>(orbit)] = 1;
        }
      }
      RelationTable saturated(n, arity);
      std::vector<std::vector<long>> free;
      for (long orbit = 0; orbit < orbit_count; ++orbit) {
        if (members[static_cast<size_t>(orbit)].empty()) {
          continue;  // block vector not realized (never happens: all are)
        }
        if (forced[static_cast<size_t>(orbit)]) {
          for (long t : members[static_cast<size_t>(orbit)]) {
            saturated.set_index(t);
          }
        } else {
          free.push_back(members[static_cast<size_t>(orbit)]);
        }
      }
      base_tables.push_back(std::move(saturated));
      free_orbits.push_back(std::move(free));
    }

    long total_free = 0;
    for (const auto& free : free_orbits) {
      total_free += static_cast<long>(free.size());
    }
    if (total_free > 25) {
      throw GuardError("starred-table sweep over " + std::to_string(total_free) +
                       " free orbits exceeds the guard");
    }

    uint64_t combinations = uint64_t{1} << total_free;
    for (uint64_t k = 0; k < combinations; ++k) {
      std::vector<RelationTable> starred = base_tables;
      int bit = static_cast<int>(total_free) - 1;
      for (size_t r = 0; r < starred.size(); ++r) {
        for (const auto& orbit : free_orbits[r]) {
          if ((k >> bit) & 1u) {
            for (long t : orbit) {
              starred[r].set_index(t);
            }
          }
          --bit;
        }
      }
      out.push_back(make_expansion_unchecked(a, theta, std::move(starred)));
    }
  }
  return out;
}

ModelCorrespondenceReport verify_prop_3_5(const FiniteStructure& a) {
  if (a.size() > 3) {
    throw GuardError("correspondence verification guarded at carrier size <= 3");
  }
  ModelCorrespondenceReport report;
  std::vector<StructureHom> homs = enumerate_surjective_homs_into_classes(a);
  std::vector<AppropriateExpansion> expansions = enumerate_appropriate_expansions(a);
  report.hom_count = static_cast<long>(homs.size());
  report.expansion_count = static_cast<long>(expansions.size());
  if (report.hom_count != report.expansion_count) {
    report.failures.push_back("set sizes differ: " + std::to_string(report.hom_count) +
                              " homomorphisms vs " +
                              std::to_string(report.expansion_count) + " expansions");
  }
  for (size_t i = 0; i < homs.size(); ++i) {
    const StructureHom& h = homs[i];
    if (!is_homomorphism(h) || !is_into_classes(h)) {
      report.failures.push_back("enumerated map " + std::to_string(i) +
                                " is not a homomorphism into classes");
      continue;
    }
    AppropriateExpansion e = expansion_from_hom(h);
    StructureHom back = quotient_from_expansion(e);
    if (!(back.map == h.map) || !(back.cod == h.cod)) {
      report.failures.push_back("round trip through the expansion changes map " +
                                std::to_string(i));
    }
  }
  for (size_t i = 0; i < expansions.size(); ++i) {
    const AppropriateExpansion& e = expansions[i];
    StructureHom h = quotient_from_expansion(e);
    AppropriateExpansion back = expansion_from_hom(h);
    if (!(back == e)) {
      report.failures.push_back("round trip through the quotient changes expansion " +
                                std::to_string(i));
    }
  }
  return report;
}

void for_each_structure(const Signature& signature, int carrier_size,
                        const std::function<void(const FiniteStructure&)>& fn) {
  if (carrier_size < 1) {
    throw PreconditionError("carrier size must be >= 1");
  }
  Carrier carrier(carrier_size);
  int n = carrier_size;

  std::vector<FunctionTable> functions;
  for (const FunctionSymbol& f : signature.functions()) {
    functions.emplace_back(n, f.arity);
  }
  std::vector<RelationTable> relations;
  for (const RelationSymbol& r : signature.relations()) {
    relations.emplace_back(n, r.arity);
  }

  // Odometers over all function values and all relation bits.
  auto next_function_tables = [&]() {
    for (auto& table : functions) {
      for (long t = table.universe_size() - 1; t >= 0; --t) {
        if (table.at_index(t) < n - 1) {
          table.set_index(t, table.at_index(t) + 1);
          return true;
        }
        table.set_index(t, 0);
      }
    }
    return false;
  };
  auto next_relation_tables = [&]() {
    for (auto& table : relations) {
      for (long t = table.universe_size() - 1; t >= 0; --t) {
        if (!table.contains_index(t)) {
          table.set_index(t, true);
          return true;
        }
        table.set_index(t, false);
      }
    }
    return false;
  };

  while (true) {
    while (true) {
      fn(FiniteStructure::validate(signature, carrier, relations, functions));
      if (!next_relation_tables()) {
        break;
      }
    }
    if (!next_function_tables()) {
      break;
    }
  }
}

std::vector<FiniteStructure> enumerate_structures(const Signature& signature,
                                                  int carrier_size) {
  std::vector<FiniteStructure> out;
  for_each_structure(signature, carrier_size,
                     [&out](const FiniteStructure& s) { out.push_back(s); });
  return out;
}

}  // namespace speclat

// Batch front end: parses structure files, runs the constructions and
// exhaustive verifiers, emits reports and DOT diagrams.
//
// Exit codes: 0 success, 1 semantic failure or counterexample, 2 parse or
// usage error.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "speclat/correspondence.hpp"
#include "speclat/fixtures.hpp"
#include "speclat/io.hpp"
#include "speclat/model.hpp"
#include "speclat/poset.hpp"
#include "speclat/quotient.hpp"

namespace {

using namespace speclat;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const FiniteSemilattice& require_semilattice(const io::StructureFile& f,
                                             const std::string& path) {
  if (!f.semilattice) {
    throw UsageError(path + ": expected a semilattice file");
  }
  return *f.semilattice;
}

SpecializationSemilattice require_spec_semilattice(const io::StructureFile& f,
                                                   const std::string& path) {
  if (!f.semilattice || !f.spec) {
    throw UsageError(path + ": expected a semilattice file with a spec: section");
  }
  return SpecializationSemilattice::validate(*f.semilattice, *f.spec);
}

const FinitePoset& require_poset(const io::StructureFile& f, const std::string& path) {
  if (!f.poset) {
    throw UsageError(path + ": expected a poset file");
  }
  return *f.poset;
}

const FiniteStructure& require_relational(const io::StructureFile& f,
                                          const std::string& path) {
  if (!f.structure) {
    throw UsageError(path + ": expected a relational file");
  }
  return *f.structure;
}

std::string relation_line(const BinaryRelation& r) {
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

void print_quotient(std::ostream& os, const Quotient& q) {
  io::StructureFile target;
  target.kind = io::Kind::semilattice;
  target.semilattice = q.target;
  os << io::print_structure(target);
  os << "map:\n";
  for (size_t a = 0; a < q.projection.map.size(); ++a) {
    os << a << " " << q.projection.map[a] << "\n";
  }
  os << "end\n";
}

int cmd_validate(const std::string& path) {
  io::parse_structure_file(path);
  std::cout << "OK\n";
  return kExitPass;
}

int cmd_congruences(const std::string& path, bool count_only) {
  io::StructureFile f = io::parse_structure_file(path);
  const FiniteSemilattice& s = require_semilattice(f, path);
  std::vector<Congruence> congruences = enumerate_congruences(s);
  if (count_only) {
    std::cout << congruences.size() << "\n";
  } else {
    for (const Congruence& theta : congruences) {
      std::cout << io::format_partition(theta.partition()) << "\n";
    }
  }
  return kExitPass;
}

int cmd_preorders(const std::string& path, bool count_only, bool cross_check) {
  io::StructureFile f = io::parse_structure_file(path);
  const FiniteSemilattice& s = require_semilattice(f, path);
  std::vector<BinaryRelation> preorders = enumerate_compatible_preorders(
      s, cross_check ? PreorderEnumeration::cross_check
                     : PreorderEnumeration::direct);
  if (count_only) {
    std::cout << preorders.size() << "\n";
  } else {
    for (const BinaryRelation& r : preorders) {
      std::cout << relation_line(r) << "\n";
    }
  }
  return kExitPass;
}

int cmd_psi(const std::string& path, const std::string& rel_path) {
  io::StructureFile f = io::parse_structure_file(path);
  const FiniteSemilattice& s = require_semilattice(f, path);
  BinaryRelation spec = io::parse_relation_file(rel_path);
  Congruence theta = psi(s, spec);
  std::cout << io::print_relation(theta.relation());
  return kExitPass;
}

int cmd_omega(const std::string& path, const std::string& rel_path) {
  io::StructureFile f = io::parse_structure_file(path);
  const FiniteSemilattice& s = require_semilattice(f, path);
  BinaryRelation rel = io::parse_relation_file(rel_path);
  Congruence theta = Congruence::validate(s, std::move(rel));
  std::cout << io::print_relation(omega(s, theta));
  return kExitPass;
}

int cmd_quotient(const std::string& path, const std::string& partition_text) {
  io::StructureFile f = io::parse_structure_file(path);
  const FiniteSemilattice& s = require_semilattice(f, path);
  SetPartition partition = io::parse_partition(partition_text, s.size());
  Congruence theta = Congruence::validate(s, partition.to_relation(s.carrier()));
  print_quotient(std::cout, build_quotient(s, theta));
  return kExitPass;
}

int cmd_represent(const std::string& path) {
  io::StructureFile f = io::parse_structure_file(path);
  SpecializationSemilattice ss = require_spec_semilattice(f, path);
  Quotient q = represent(ss);
  print_quotient(std::cout, q);
  BinaryRelation recovered = kernel_preorder(q.projection);
  std::cout << "recovered:\n";
  for (auto [a, b] : recovered.pairs()) {
    std::cout << a << " " << b << "\n";
  }
  std::cout << "end\n";
  bool equal = recovered == ss.spec();
  std::cout << "spec-recovered: " << (equal ? "YES" : "NO") << "\n";
  return equal ? kExitPass : kExitFail;
}

int check_theorem_2_1(const FiniteSemilattice& s) {
  CorrespondenceReport report = verify_theorem_2_1(s);
  std::cout << "preorders: " << report.preorder_count << "\n"
            << "congruences: " << report.congruence_count << "\n"
            << "round-trip failures: " << report.round_trip_failures.size() << "\n"
            << "meet-preservation failures: "
            << report.meet_preservation_failures.size() << "\n";
  for (const std::string& w : report.round_trip_failures) {
    std::cout << "  " << w << "\n";
  }
  for (const std::string& w : report.meet_preservation_failures) {
    std::cout << "  " << w << "\n";
  }
  std::cout << "result: " << (report.passed() ? "PASS" : "FAIL") << "\n";
  return report.passed() ? kExitPass : kExitFail;
}

int check_corollary_2_3(const FiniteSemilattice& s) {
  auto pairs = gamma(s);
  long iso_collisions = 0;
  for (size_t i = 0; i < pairs.size(); ++i) {
    for (size_t j = i + 1; j < pairs.size(); ++j) {
      ArrowObject qi = ArrowObject::validate(pairs[i].second.projection);
      ArrowObject qj = ArrowObject::validate(pairs[j].second.projection);
      if (quotient_isomorphic(qi, qj)) {
        ++iso_collisions;
      }
    }
  }
  std::cout << "preorders: " << pairs.size() << "\n"
            << "quotient-isomorphic collisions: " << iso_collisions << "\n";
  bool ok = iso_collisions == 0;
  std::cout << "result: " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kExitPass : kExitFail;
}

int check_corollary_2_4(const io::StructureFile& f, const std::string& path) {
  const FiniteSemilattice& s = require_semilattice(f, path);
  std::vector<BinaryRelation> specs;
  if (f.spec) {
    specs.push_back(*f.spec);
  } else {
    specs = enumerate_compatible_preorders(s);
  }
  long failures = 0;
  for (const BinaryRelation& spec : specs) {
    SpecializationSemilattice ss = SpecializationSemilattice::validate(s, spec);
    Quotient q = represent(ss);
    if (!(kernel_preorder(q.projection) == spec)) {
      ++failures;
    }
  }
  std::cout << "specialization preorders checked: " << specs.size() << "\n"
            << "recovery failures: " << failures << "\n"
            << "result: " << (failures == 0 ? "PASS" : "FAIL") << "\n";
  return failures == 0 ? kExitPass : kExitFail;
}

int check_corollary_2_5(const FiniteSemilattice& s) {
  std::vector<BinaryRelation> preorders = enumerate_compatible_preorders(s);
  long checked = 0;
  long mismatches = 0;
  std::vector<int> map(static_cast<size_t>(s.size()), 0);
  for (const BinaryRelation& r1 : preorders) {
    SpecializationSemilattice ss1 = SpecializationSemilattice::validate(s, r1);
    Congruence t1 = psi(s, r1);
    for (const BinaryRelation& r2 : preorders) {
      SpecializationSemilattice ss2 = SpecializationSemilattice::validate(s, r2);
      Congruence t2 = psi(s, r2);
      std::fill(map.begin(), map.end(), 0);
      while (true) {
        ++checked;
        if (is_spec_hom(ss1, ss2, map) != is_con_hom(s, t1, s, t2, map)) {
          ++mismatches;
        }
        int i = s.size() - 1;
        while (i >= 0 && map[static_cast<size_t>(i)] == s.size() - 1) {
          map[static_cast<size_t>(i)] = 0;
          --i;
        }
        if (i < 0) {
          break;
        }
        ++map[static_cast<size_t>(i)];
      }
    }
  }
  std::cout << "maps checked: " << checked << "\n"
            << "mismatches: " << mismatches << "\n"
            << "result: " << (mismatches == 0 ? "PASS" : "FAIL") << "\n";
  return mismatches == 0 ? kExitPass : kExitFail;
}

int check_remark_2_6(const FiniteSemilattice& s) {
  long homs_checked = 0;
  long failures = 0;
  for (const Congruence& theta : enumerate_congruences(s)) {
    Quotient q = build_quotient(s, theta);
    for (const SemilatticeHom& h : enumerate_surjective_homs(s, q.target)) {
      ++homs_checked;
      Quotient canonical = build_quotient(s, kernel(h));
      ArrowObject lhs = ArrowObject::validate(h);
      ArrowObject rhs = ArrowObject::validate(canonical.projection);
      if (!arrow_isomorphic(lhs, rhs)) {
        ++failures;
      }
    }
  }
  std::cout << "surjections checked: " << homs_checked << "\n"
            << "not arrow-isomorphic to their canonical projection: " << failures
            << "\n"
            << "result: " << (failures == 0 ? "PASS" : "FAIL") << "\n";
  return failures == 0 ? kExitPass : kExitFail;
}

int check_proposition_3_2(const FinitePoset& p) {
  std::vector<MonotoneMap> classes = enumerate_surjective_monotone_classes(p);
  std::vector<BinaryRelation> preorders = enumerate_relations_containing(
      p.order(), [](const BinaryRelation& r) { return r.is_preorder(); });
  long unmatched = 0;
  std::vector<char> hit(classes.size(), 0);
  for (const BinaryRelation& spec : preorders) {
    PosetQuotient q = poset_quotient(SpecializationPoset::validate(p, spec));
    bool found = false;
    for (size_t i = 0; i < classes.size(); ++i) {
      if (poset_quotient_isomorphic(q.projection, classes[i])) {
        if (hit[i]) {
          ++unmatched;  // two preorders matched one class
        }
        hit[i] = 1;
        found = true;
        break;
      }
    }
    if (!found) {
      ++unmatched;
    }
  }
  std::cout << "compatible preorders: " << preorders.size() << "\n"
            << "surjective monotone classes: " << classes.size() << "\n"
            << "matching failures: " << unmatched << "\n";
  bool ok = unmatched == 0 && preorders.size() == classes.size();
  std::cout << "result: " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kExitPass : kExitFail;
}

int check_proposition_3_5(const FiniteStructure& a) {
  ModelCorrespondenceReport report = verify_prop_3_5(a);
  std::cout << "surjective homomorphisms into classes: " << report.hom_count << "\n"
            << "appropriate expansions: " << report.expansion_count << "\n"
            << "failures: " << report.failures.size() << "\n";
  for (const std::string& w : report.failures) {
    std::cout << "  " << w << "\n";
  }
  std::cout << "result: " << (report.passed() ? "PASS" : "FAIL") << "\n";
  return report.passed() ? kExitPass : kExitFail;
}

int cmd_check(const std::string& path, const std::string& theorem) {
  io::StructureFile f = io::parse_structure_file(path);
  if (theorem == "2.1") {
    return check_theorem_2_1(require_semilattice(f, path));
  }
  if (theorem == "2.3") {
    return check_corollary_2_3(require_semilattice(f, path));
  }
  if (theorem == "2.4") {
    return check_corollary_2_4(f, path);
  }
  if (theorem == "2.5") {
    return check_corollary_2_5(require_semilattice(f, path));
  }
  if (theorem == "2.6") {
    return check_remark_2_6(require_semilattice(f, path));
  }
  if (theorem == "3.2") {
    return check_proposition_3_2(require_poset(f, path));
  }
  if (theorem == "3.5") {
    return check_proposition_3_5(require_relational(f, path));
  }
  throw UsageError("unknown check '" + theorem +
                   "', expected one of 2.1 2.3 2.4 2.5 2.6 3.2 3.5");
}

int cmd_fixtures(const std::string& remark) {
  if (remark == "2.8") {
    FiniteSemilattice s = fixtures::two_chains_sharing_top();
    Quotient qa = build_quotient(s, fixtures::collapse_a_pair());
    Quotient qb = build_quotient(s, fixtures::collapse_b_pair());
    ArrowObject a = ArrowObject::validate(qa.projection);
    ArrowObject b = ArrowObject::validate(qb.projection);
    bool q_iso = quotient_isomorphic(a, b).has_value();
    bool arrow_iso = arrow_isomorphic(a, b).has_value();
    std::cout << "quotient-isomorphic: " << (q_iso ? "YES" : "NO")
              << " / arrow-isomorphic: " << (arrow_iso ? "YES" : "NO") << "\n";
    return (!q_iso && arrow_iso) ? kExitPass : kExitFail;
  }
  if (remark == "3.3") {
    FinitePoset p = fixtures::two_element_antichain();
    size_t classes = enumerate_surjective_monotone_classes(p).size();
    long equivalences = equivalence_count(p.size());
    std::cout << "classes: " << classes << " / equivalences: " << equivalences
              << "\n";
    return (classes == 4 && equivalences == 2) ? kExitPass : kExitFail;
  }
  throw UsageError("unknown fixture '" + remark + "', expected 2.8 or 3.3");
}

int cmd_enumerate(int n) {
  bool first = true;
  for (const FiniteSemilattice& s : enumerate_semilattices(n)) {
    if (!first) {
      std::cout << "\n";
    }
    first = false;
    io::StructureFile f;
    f.kind = io::Kind::semilattice;
    f.semilattice = s;
    std::cout << io::print_structure(f);
  }
  return kExitPass;
}

int cmd_expand(const std::string& struct_path, const std::string& hom_path) {
  io::StructureFile dom_file = io::parse_structure_file(struct_path);
  const FiniteStructure& dom = require_relational(dom_file, struct_path);
  io::StructureFile hom_file = io::parse_structure_file(hom_path);
  const FiniteStructure& cod = require_relational(hom_file, hom_path);
  if (!hom_file.map) {
    throw UsageError(hom_path + ": expected a map: section");
  }
  if (static_cast<int>(hom_file.map->size()) != dom.size()) {
    throw UsageError(hom_path + ": map has " + std::to_string(hom_file.map->size()) +
                     " entries for a domain of size " + std::to_string(dom.size()));
  }
  StructureHom h{dom, cod, *hom_file.map};
  AppropriateExpansion e = expansion_from_hom(h);
  io::StructureFile out;
  out.kind = io::Kind::relational;
  out.structure = e.base();
  out.theta = e.theta();
  out.starred = e.starred_tables();
  std::cout << io::print_structure(out);
  return kExitPass;
}

int cmd_collapse(const std::string& path) {
  io::StructureFile f = io::parse_structure_file(path);
  const FiniteStructure& base = require_relational(f, path);
  if (!f.theta) {
    throw UsageError(path + ": expected an expansion file with theta:");
  }
  AppropriateExpansion e = AppropriateExpansion::validate(base, *f.theta, f.starred);
  StructureHom pi = quotient_from_expansion(e);
  io::StructureFile out;
  out.kind = io::Kind::relational;
  out.structure = pi.cod;
  out.map = pi.map;
  std::cout << io::print_structure(out);
  return kExitPass;
}

int cmd_dot(const std::string& path, bool congruence_lattice) {
  io::StructureFile f = io::parse_structure_file(path);
  if (congruence_lattice) {
    const FiniteSemilattice& s = require_semilattice(f, path);
    std::cout << io::congruence_lattice_dot(s);
    return kExitPass;
  }
  if (f.semilattice) {
    std::cout << io::hasse_dot(f.semilattice->induced_order(),
                               f.semilattice->carrier());
    return kExitPass;
  }
  if (f.poset) {
    std::cout << io::hasse_dot(f.poset->order(), f.poset->carrier());
    return kExitPass;
  }
  throw UsageError(path + ": dot output needs a semilattice or poset file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite specialization semilattices, congruences and quotients"};
  app.require_subcommand(1);

  std::string file;
  std::string rel_file;
  std::string hom_file;
  std::string partition;
  std::string theorem;
  std::string remark;
  int enum_n = 0;
  bool count_only = false;
  bool cross_check = false;
  bool congruence_lattice = false;

  CLI::App* validate = app.add_subcommand("validate", "Check a structure file");
  validate->add_option("FILE", file)->required();

  CLI::App* congruences =
      app.add_subcommand("congruences", "List congruences as partitions");
  congruences->add_option("FILE", file)->required();
  congruences->add_flag("--count", count_only, "Print the count only");

  CLI::App* preorders =
      app.add_subcommand("preorders", "List compatible preorders");
  preorders->add_option("FILE", file)->required();
  preorders->add_flag("--count", count_only, "Print the count only");
  preorders->add_flag("--cross-check", cross_check,
                      "Run both enumeration strategies and compare");

  CLI::App* psi_cmd = app.add_subcommand(
      "psi", "Collapse a compatible preorder to its congruence");
  psi_cmd->add_option("FILE", file)->required();
  psi_cmd->add_option("RELFILE", rel_file)->required();

  CLI::App* omega_cmd =
      app.add_subcommand("omega", "Expand a congruence to its preorder");
  omega_cmd->add_option("FILE", file)->required();
  omega_cmd->add_option("RELFILE", rel_file)->required();

  CLI::App* quotient_cmd =
      app.add_subcommand("quotient", "Quotient a semilattice by a partition");
  quotient_cmd->add_option("FILE", file)->required();
  quotient_cmd->add_option("--by", partition, "Partition, e.g. {0,1}{2}")->required();

  CLI::App* represent_cmd = app.add_subcommand(
      "represent", "Represent a specialization semilattice as a kernel preorder");
  represent_cmd->add_option("FILE", file)->required();

  CLI::App* check = app.add_subcommand("check", "Run an exhaustive verifier");
  check->add_option("FILE", file)->required();
  check->add_option("--theorem", theorem, "One of 2.1 2.3 2.4 2.5 2.6 3.2 3.5")
      ->required();

  CLI::App* fixtures_cmd =
      app.add_subcommand("fixtures", "Run a built-in fixture");
  fixtures_cmd->add_option("--remark", remark, "2.8 or 3.3")->required();

  CLI::App* enumerate_cmd =
      app.add_subcommand("enumerate", "Write a structure corpus to stdout");
  enumerate_cmd->add_option("--semilattices", enum_n, "Carrier size")->required();

  CLI::App* expand = app.add_subcommand(
      "expand", "Expansion of a surjective homomorphism (structure + hom file)");
  expand->add_option("STRUCTFILE", file)->required();
  expand->add_option("HOMFILE", hom_file)->required();

  CLI::App* collapse =
      app.add_subcommand("collapse", "Quotient of an appropriate expansion");
  collapse->add_option("EXPANSIONFILE", file)->required();

  CLI::App* dot = app.add_subcommand("dot", "Hasse diagram in DOT format");
  dot->add_option("FILE", file)->required();
  dot->add_flag("--congruence-lattice", congruence_lattice,
                "Draw the congruence lattice instead of the induced order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (validate->parsed()) {
      return cmd_validate(file);
    }
    if (congruences->parsed()) {
      return cmd_congruences(file, count_only);
    }
    if (preorders->parsed()) {
      return cmd_preorders(file, count_only, cross_check);
    }
    if (psi_cmd->parsed()) {
      return cmd_psi(file, rel_file);
    }
    if (omega_cmd->parsed()) {
      return cmd_omega(file, rel_file);
    }
    if (quotient_cmd->parsed()) {
      return cmd_quotient(file, partition);
    }
    if (represent_cmd->parsed()) {
      return cmd_represent(file);
    }
    if (check->parsed()) {
      return cmd_check(file, theorem);
    }
    if (fixtures_cmd->parsed()) {
      return cmd_fixtures(remark);
    }
    if (enumerate_cmd->parsed()) {
      return cmd_enumerate(enum_n);
    }
    if (expand->parsed()) {
      return cmd_expand(file, hom_file);
    }
    if (collapse->parsed()) {
      return cmd_collapse(file);
    }
    if (dot->parsed()) {
      return cmd_dot(file, congruence_lattice);
    }
  } catch (const io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GuardError& e) {
    std::cerr << "guard error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}

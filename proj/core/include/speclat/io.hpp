#ifndef SPECLAT_IO_HPP
#define SPECLAT_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "speclat/model.hpp"
#include "speclat/poset.hpp"
#include "speclat/semilattice.hpp"

namespace speclat::io {

/// Syntax error in the text format; semantic invariant violations are
/// reported as InvalidStructureError after parsing instead.
class ParseError : public Error {
 public:
  ParseError(std::string file, int line, int column, const std::string& what);

  const std::string& file() const { return file_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string file_;
  int line_;
  int column_;
};

enum class Kind {
  semilattice,
  poset,
  spec_semilattice,
  spec_poset,
  relational,
};

/// Parsed form of one structure file. The optional members follow the
/// kind tag; a relational file may additionally carry theta and starred
/// tables, which makes it usable as an expansion, and a map section,
/// which makes it usable as the codomain-plus-map half of a homomorphism.
struct StructureFile {
  Kind kind = Kind::semilattice;
  std::optional<FiniteSemilattice> semilattice;
  std::optional<FinitePoset> poset;
  std::optional<BinaryRelation> spec;
  std::optional<FiniteStructure> structure;
  std::optional<BinaryRelation> theta;
  std::vector<RelationTable> starred;
  std::optional<std::vector<int>> map;
};

/// Line-oriented text format, '#' starts a comment:
///
///   semilattice N | poset N | relational N
///   names: x y z                    (optional)
///   join:                           (semilattice: N rows of N indices)
///   order: / spec: / theta:         (one "i j" pair per line, then "end")
///   rel NAME ARITY                  (relational: tuple lines, then "end")
///   fun NAME ARITY                  (lines "args -> value", then "end")
///   rel NAME* ARITY                 (starred table of an expansion)
///   map:                            ("a b" lines meaning a maps to b)
StructureFile parse_structure(std::string_view text, const std::string& origin);
StructureFile parse_structure_file(const std::string& path);

/// Canonical form: names always printed, sections in fixed order, pairs
/// and tuples sorted. parse(print(f)) reproduces f exactly.
std::string print_structure(const StructureFile& f);

/// Standalone relation files: header "relation N", optional names, a
/// "pairs:" section terminated by "end".
BinaryRelation parse_relation(std::string_view text, const std::string& origin);
BinaryRelation parse_relation_file(const std::string& path);
std::string print_relation(const BinaryRelation& r);

/// Block syntax for partitions on the command line: {0,1}{2}{3,4}.
SetPartition parse_partition(std::string_view text, int n);
std::string format_partition(const SetPartition& p);

/// Hasse diagram (transitive reduction) of a partial order in DOT format,
/// nodes in index order, bottom-up rank direction.
std::string hasse_dot(const BinaryRelation& order, const Carrier& carrier);

/// The congruence lattice of a semilattice in DOT format: one node per
/// congruence in enumeration order, labelled by block syntax, covering
/// edges of the inclusion order.
std::string congruence_lattice_dot(const FiniteSemilattice& s);

}  // namespace speclat::io

#endif  // SPECLAT_IO_HPP

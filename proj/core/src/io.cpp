#include "speclat/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace speclat::io {

namespace {

std::string format_position(const std::string& file, int line, int column,
                            const std::string& what) {
  return file + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " +
         what;
}

}  // namespace

ParseError::ParseError(std::string file, int line, int column,
                       const std::string& what)
    : Error(format_position(file, line, column, what)),
      file_(std::move(file)),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

struct Line {
  int number;  // 1-based
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view raw = eol == std::string_view::npos
                               ? text.substr(pos)
                               : text.substr(pos, eol - pos);
    ++number;
    Line line{number, {}};
    for (size_t i = 0; i < raw.size();) {
      if (raw[i] == '#') {
        break;
      }
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])) &&
             raw[i] != '#') {
        ++i;
      }
      line.tokens.push_back(
          Token{std::string(raw.substr(start, i - start)), static_cast<int>(start) + 1});
    }
    if (!line.tokens.empty()) {
      lines.push_back(std::move(line));
    }
    if (eol == std::string_view::npos) {
      break;
    }
    pos = eol + 1;
  }
  return lines;
}

class Cursor {
 public:
  Cursor(std::vector<Line> lines, std::string origin)
      : lines_(std::move(lines)), origin_(std::move(origin)) {}

  bool done() const { return index_ >= lines_.size(); }
  const Line& peek() const { return lines_[index_]; }
  const Line& take() { return lines_[index_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    if (done()) {
      int last = lines_.empty() ? 1 : lines_.back().number;
      throw ParseError(origin_, last, 1, what + " (unexpected end of input)");
    }
    const Line& line = peek();
    throw ParseError(origin_, line.number, line.tokens.front().column, what);
  }

  [[noreturn]] void fail_at(const Line& line, const Token& token,
                            const std::string& what) const {
    throw ParseError(origin_, line.number, token.column, what);
  }

  const std::string& origin() const { return origin_; }

 private:
  std::vector<Line> lines_;
  std::string origin_;
  size_t index_ = 0;
};

int parse_int(const Cursor& cursor, const Line& line, const Token& token) {
  size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token.text, &used);
  } catch (const std::exception&) {
    cursor.fail_at(line, token, "expected an integer, got '" + token.text + "'");
  }
  if (used != token.text.size()) {
    cursor.fail_at(line, token, "expected an integer, got '" + token.text + "'");
  }
  return value;
}

int parse_index(const Cursor& cursor, const Line& line, const Token& token, int n) {
  int value = parse_int(cursor, line, token);
  if (value < 0 || value >= n) {
    cursor.fail_at(line, token,
                   "index " + token.text + " out of range for carrier of size " +
                       std::to_string(n));
  }
  return value;
}

bool is_section_end(const Line& line) {
  return line.tokens.size() == 1 && line.tokens[0].text == "end";
}

std::vector<std::pair<int, int>> parse_pair_section(Cursor& cursor, int n) {
  std::vector<std::pair<int, int>> pairs;
  while (true) {
    if (cursor.done()) {
      cursor.fail("pair section not terminated by 'end'");
    }
    const Line& line = cursor.take();
    if (is_section_end(line)) {
      break;
    }
    if (line.tokens.size() != 2) {
      cursor.fail_at(line, line.tokens[0], "expected a pair 'i j' or 'end'");
    }
    int a = parse_index(cursor, line, line.tokens[0], n);
    int b = parse_index(cursor, line, line.tokens[1], n);
    pairs.emplace_back(a, b);
  }
  return pairs;
}

struct RelDecl {
  std::string name;
  int arity;
  bool starred;
  std::vector<std::vector<int>> tuples;
};

struct FunDecl {
  std::string name;
  int arity;
  std::vector<std::pair<std::vector<int>, int>> entries;
};

struct ParsedFile {
  std::string header;
  int n = 0;
  std::optional<std::vector<std::string>> names;
  std::optional<std::vector<std::vector<int>>> join_rows;
  std::optional<std::vector<std::pair<int, int>>> order_pairs;
  std::optional<std::vector<std::pair<int, int>>> spec_pairs;
  std::optional<std::vector<std::pair<int, int>>> theta_pairs;
  std::optional<std::vector<std::pair<int, int>>> map_pairs;
  std::optional<std::vector<std::pair<int, int>>> plain_pairs;
  std::vector<RelDecl> rels;
  std::vector<FunDecl> funs;
};

ParsedFile parse_raw(Cursor& cursor) {
  ParsedFile file;
  if (cursor.done()) {
    cursor.fail("empty file");
  }
  {
    const Line& header = cursor.take();
    file.header = header.tokens[0].text;
    if (file.header != "semilattice" && file.header != "poset" &&
        file.header != "relational" && file.header != "relation") {
      cursor.fail_at(header, header.tokens[0],
                     "unknown header '" + file.header +
                         "', expected semilattice, poset, relational or relation");
    }
    if (header.tokens.size() != 2) {
      cursor.fail_at(header, header.tokens[0],
                     "header must be '" + file.header + " N'");
    }
    file.n = parse_int(cursor, header, header.tokens[1]);
    if (file.n < 1) {
      cursor.fail_at(header, header.tokens[1], "carrier size must be >= 1");
    }
  }
  while (!cursor.done()) {
    const Line& line = cursor.take();
    const std::string& head = line.tokens[0].text;
    if (head == "names:") {
      if (file.names) {
        cursor.fail_at(line, line.tokens[0], "duplicate names line");
      }
      std::vector<std::string> names;
      for (size_t i = 1; i < line.tokens.size(); ++i) {
        names.push_back(line.tokens[i].text);
      }
      if (static_cast<int>(names.size()) != file.n) {
        cursor.fail_at(line, line.tokens[0],
                       "expected " + std::to_string(file.n) + " names, got " +
                           std::to_string(names.size()));
      }
      file.names = std::move(names);
    } else if (head == "join:") {
      if (file.join_rows) {
        cursor.fail_at(line, line.tokens[0], "duplicate join section");
      }
      std::vector<std::vector<int>> rows;
      for (int r = 0; r < file.n; ++r) {
        if (cursor.done()) {
          cursor.fail("join table needs " + std::to_string(file.n) + " rows");
        }
        const Line& row = cursor.take();
        if (static_cast<int>(row.tokens.size()) != file.n) {
          cursor.fail_at(row, row.tokens[0],
                         "join row needs " + std::to_string(file.n) + " entries");
        }
        std::vector<int> entries;
        for (const Token& token : row.tokens) {
          entries.push_back(parse_index(cursor, row, token, file.n));
        }
        rows.push_back(std::move(entries));
      }
      file.join_rows = std::move(rows);
    } else if (head == "order:" || head == "spec:" || head == "theta:" ||
               head == "map:" || head == "pairs:") {
      auto& slot = head == "order:"   ? file.order_pairs
                   : head == "spec:"  ? file.spec_pairs
                   : head == "theta:" ? file.theta_pairs
                   : head == "map:"   ? file.map_pairs
                                      : file.plain_pairs;
      if (slot) {
        cursor.fail_at(line, line.tokens[0], "duplicate " + head + " section");
      }
      if (head == "map:") {
        // Map values are range checked against the codomain size; keys are
        // checked afterwards because the domain size is not known here.
        std::vector<std::pair<int, int>> pairs;
        while (true) {
          if (cursor.done()) {
            cursor.fail("map section not terminated by 'end'");
          }
          const Line& entry = cursor.take();
          if (is_section_end(entry)) {
            break;
          }
          if (entry.tokens.size() != 2) {
            cursor.fail_at(entry, entry.tokens[0], "expected a pair 'a b' or 'end'");
          }
          int a = parse_int(cursor, entry, entry.tokens[0]);
          int b = parse_index(cursor, entry, entry.tokens[1], file.n);
          if (a < 0) {
            cursor.fail_at(entry, entry.tokens[0], "map key must be >= 0");
          }
          pairs.emplace_back(a, b);
        }
        slot = std::move(pairs);
      } else {
        slot = parse_pair_section(cursor, file.n);
      }
    } else if (head == "rel" || head == "fun") {
      if (line.tokens.size() != 3) {
        cursor.fail_at(line, line.tokens[0],
                       "expected '" + head + " NAME ARITY'");
      }
      std::string name = line.tokens[1].text;
      int arity = parse_int(cursor, line, line.tokens[2]);
      if (head == "rel") {
        bool starred = !name.empty() && name.back() == '*';
        if (starred) {
          name.pop_back();
        }
        if (arity < 1) {
          cursor.fail_at(line, line.tokens[2], "relation arity must be >= 1");
        }
        RelDecl decl{std::move(name), arity, starred, {}};
        while (true) {
          if (cursor.done()) {
            cursor.fail("relation table not terminated by 'end'");
          }
          const Line& entry = cursor.take();
          if (is_section_end(entry)) {
            break;
          }
          if (static_cast<int>(entry.tokens.size()) != arity) {
            cursor.fail_at(entry, entry.tokens[0],
                           "tuple needs " + std::to_string(arity) + " entries");
          }
          std::vector<int> tuple;
          for (const Token& token : entry.tokens) {
            tuple.push_back(parse_index(cursor, entry, token, file.n));
          }
          decl.tuples.push_back(std::move(tuple));
        }
        file.rels.push_back(std::move(decl));
      } else {
        if (arity < 0) {
          cursor.fail_at(line, line.tokens[2], "function arity must be >= 0");
        }
        FunDecl decl{std::move(name), arity, {}};
        while (true) {
          if (cursor.done()) {
            cursor.fail("function table not terminated by 'end'");
          }
          const Line& entry = cursor.take();
          if (is_section_end(entry)) {
            break;
          }
          if (static_cast<int>(entry.tokens.size()) != arity + 2 ||
              entry.tokens[static_cast<size_t>(arity)].text != "->") {
            cursor.fail_at(entry, entry.tokens[0],
                           "expected '" + std::string(arity ? "args " : "") +
                               "-> value' with " + std::to_string(arity) +
                               " arguments");
          }
          std::vector<int> args;
          for (int i = 0; i < arity; ++i) {
            args.push_back(
                parse_index(cursor, entry, entry.tokens[static_cast<size_t>(i)], file.n));
          }
          int value = parse_index(cursor, entry,
                                  entry.tokens[static_cast<size_t>(arity) + 1], file.n);
          decl.entries.emplace_back(std::move(args), value);
        }
        file.funs.push_back(std::move(decl));
      }
    } else {
      cursor.fail_at(line, line.tokens[0], "unknown section '" + head + "'");
    }
  }
  return file;
}

Carrier make_carrier(const ParsedFile& file) {
  if (file.names) {
    return Carrier(file.n, *file.names);
  }
  return Carrier(file.n);
}

BinaryRelation relation_from_pairs(const Carrier& carrier,
                                   const std::vector<std::pair<int, int>>& pairs) {
  return BinaryRelation::from_pairs(carrier, pairs);
}

}  // namespace

StructureFile parse_structure(std::string_view text, const std::string& origin) {
  Cursor cursor(tokenize(text), origin);
  ParsedFile raw = parse_raw(cursor);
  if (raw.header == "relation") {
    throw ParseError(origin, 1, 1,
                     "standalone relation files are not structure files");
  }
  StructureFile out;
  Carrier carrier = make_carrier(raw);
  if (raw.header == "semilattice") {
    if (!raw.join_rows) {
      throw ParseError(origin, 1, 1, "semilattice file needs a join: section");
    }
    out.semilattice = FiniteSemilattice::validate(carrier, *raw.join_rows);
    out.kind = Kind::semilattice;
    if (raw.spec_pairs) {
      BinaryRelation spec = relation_from_pairs(carrier, *raw.spec_pairs);
      SpecializationSemilattice::validate(*out.semilattice, spec);
      out.spec = std::move(spec);
      out.kind = Kind::spec_semilattice;
    }
    if (raw.order_pairs || raw.theta_pairs || raw.map_pairs || raw.plain_pairs ||
        !raw.rels.empty() || !raw.funs.empty()) {
      throw ParseError(origin, 1, 1, "semilattice file with foreign sections");
    }
  } else if (raw.header == "poset") {
    if (!raw.order_pairs) {
      throw ParseError(origin, 1, 1, "poset file needs an order: section");
    }
    out.poset = FinitePoset::validate(
        carrier, relation_from_pairs(carrier, *raw.order_pairs));
    out.kind = Kind::poset;
    if (raw.spec_pairs) {
      BinaryRelation spec = relation_from_pairs(carrier, *raw.spec_pairs);
      SpecializationPoset::validate(*out.poset, spec);
      out.spec = std::move(spec);
      out.kind = Kind::spec_poset;
    }
    if (raw.join_rows || raw.theta_pairs || raw.map_pairs || raw.plain_pairs ||
        !raw.rels.empty() || !raw.funs.empty()) {
      throw ParseError(origin, 1, 1, "poset file with foreign sections");
    }
  } else {
    out.kind = Kind::relational;
    if (raw.join_rows || raw.order_pairs || raw.spec_pairs || raw.plain_pairs) {
      throw ParseError(origin, 1, 1, "relational file with foreign sections");
    }
    std::vector<RelationSymbol> rel_symbols;
    std::vector<FunctionSymbol> fun_symbols;
    std::vector<RelationTable> rel_tables;
    std::vector<FunctionTable> fun_tables;
    for (const RelDecl& decl : raw.rels) {
      if (decl.starred) {
        continue;
      }
      rel_symbols.push_back(RelationSymbol{decl.name, decl.arity});
      RelationTable table(raw.n, decl.arity);
      for (const auto& tuple : decl.tuples) {
        table.set(tuple);
      }
      rel_tables.push_back(std::move(table));
    }
    for (const FunDecl& decl : raw.funs) {
      fun_symbols.push_back(FunctionSymbol{decl.name, decl.arity});
      FunctionTable table(raw.n, decl.arity);
      std::vector<char> defined(static_cast<size_t>(table.universe_size()), 0);
      for (const auto& [args, value] : decl.entries) {
        long t = encode_tuple(raw.n, args);
        defined[static_cast<size_t>(t)] = 1;
        table.set_index(t, value);
      }
      for (long t = 0; t < table.universe_size(); ++t) {
        if (!defined[static_cast<size_t>(t)]) {
          throw InvalidStructureError("function '" + decl.name +
                                      "' is missing an entry (tables must be total)");
        }
      }
      fun_tables.push_back(std::move(table));
    }
    Signature signature = Signature::validate(rel_symbols, fun_symbols);
    out.structure = FiniteStructure::validate(signature, carrier,
                                              std::move(rel_tables),
                                              std::move(fun_tables));
    if (raw.theta_pairs) {
      out.theta = relation_from_pairs(carrier, *raw.theta_pairs);
    }
    for (const RelDecl& decl : raw.rels) {
      if (!decl.starred) {
        continue;
      }
      auto symbol = std::find_if(
          rel_symbols.begin(), rel_symbols.end(),
          [&decl](const RelationSymbol& s) { return s.name == decl.name; });
      if (symbol == rel_symbols.end()) {
        throw InvalidStructureError("starred table for undeclared relation '" +
                                    decl.name + "'");
      }
      if (symbol->arity != decl.arity) {
        throw InvalidStructureError("starred table for '" + decl.name +
                                    "' has arity " + std::to_string(decl.arity) +
                                    ", symbol has arity " +
                                    std::to_string(symbol->arity));
      }
      RelationTable table(raw.n, decl.arity);
      for (const auto& tuple : decl.tuples) {
        table.set(tuple);
      }
      out.starred.push_back(std::move(table));
    }
    if (!out.starred.empty() || out.theta) {
      // A complete expansion must pass the expansion axioms.
      if (!out.theta) {
        throw InvalidStructureError("starred tables without a theta: section");
      }
      if (out.starred.size() != rel_symbols.size()) {
        throw InvalidStructureError("expected " + std::to_string(rel_symbols.size()) +
                                    " starred tables, got " +
                                    std::to_string(out.starred.size()));
      }
      AppropriateExpansion::validate(*out.structure, *out.theta, out.starred);
    }
    if (raw.map_pairs) {
      std::vector<std::pair<int, int>> pairs = *raw.map_pairs;
      std::sort(pairs.begin(), pairs.end());
      std::vector<int> map;
      for (size_t i = 0; i < pairs.size(); ++i) {
        if (pairs[i].first != static_cast<int>(i)) {
          throw InvalidStructureError(
              "map keys must be exactly 0..k-1, each exactly once");
        }
        map.push_back(pairs[i].second);
      }
      if (map.empty()) {
        throw InvalidStructureError("map section is empty");
      }
      out.map = std::move(map);
    }
  }
  return out;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

StructureFile parse_structure_file(const std::string& path) {
  return parse_structure(read_file(path), path);
}

namespace {

void print_names(std::ostream& os, const Carrier& carrier) {
  os << "names:";
  for (const std::string& name : carrier.names()) {
    os << " " << name;
  }
  os << "\n";
}

void print_pair_section(std::ostream& os, const char* header,
                        const BinaryRelation& rel) {
  os << header << "\n";
  for (auto [a, b] : rel.pairs()) {
    os << a << " " << b << "\n";
  }
  os << "end\n";
}

void print_relation_table(std::ostream& os, const std::string& name,
                          const RelationTable& table) {
  os << "rel " << name << " " << table.arity() << "\n";
  for (const auto& tuple : table.tuples()) {
    for (size_t i = 0; i < tuple.size(); ++i) {
      os << (i ? " " : "") << tuple[i];
    }
    os << "\n";
  }
  os << "end\n";
}

}  // namespace

std::string print_structure(const StructureFile& f) {
  std::ostringstream os;
  switch (f.kind) {
    case Kind::semilattice:
    case Kind::spec_semilattice: {
      const FiniteSemilattice& s = *f.semilattice;
      os << "semilattice " << s.size() << "\n";
      print_names(os, s.carrier());
      os << "join:\n";
      for (int a = 0; a < s.size(); ++a) {
        for (int b = 0; b < s.size(); ++b) {
          os << (b ? " " : "") << s.join(a, b);
        }
        os << "\n";
      }
      if (f.spec) {
        print_pair_section(os, "spec:", *f.spec);
      }
      break;
    }
    case Kind::poset:
    case Kind::spec_poset: {
      const FinitePoset& p = *f.poset;
      os << "poset " << p.size() << "\n";
      print_names(os, p.carrier());
      print_pair_section(os, "order:", p.order());
      if (f.spec) {
        print_pair_section(os, "spec:", *f.spec);
      }
      break;
    }
    case Kind::relational: {
      const FiniteStructure& a = *f.structure;
      os << "relational " << a.size() << "\n";
      print_names(os, a.carrier());
      const Signature& sig = a.signature();
      for (size_t r = 0; r < sig.relations().size(); ++r) {
        print_relation_table(os, sig.relations()[r].name,
                             a.relation(static_cast<int>(r)));
      }
      for (size_t fi = 0; fi < sig.functions().size(); ++fi) {
        const FunctionSymbol& symbol = sig.functions()[fi];
        const FunctionTable& table = a.function(static_cast<int>(fi));
        os << "fun " << symbol.name << " " << symbol.arity << "\n";
        for (long t = 0; t < table.universe_size(); ++t) {
          std::vector<int> tuple = decode_tuple(a.size(), symbol.arity, t);
          for (int v : tuple) {
            os << v << " ";
          }
          os << "-> " << table.at_index(t) << "\n";
        }
        os << "end\n";
      }
      if (f.theta) {
        print_pair_section(os, "theta:", *f.theta);
      }
      for (size_t r = 0; r < f.starred.size(); ++r) {
        print_relation_table(os, sig.relations()[r].name + "*", f.starred[r]);
      }
      if (f.map) {
        os << "map:\n";
        for (size_t a_idx = 0; a_idx < f.map->size(); ++a_idx) {
          os << a_idx << " " << (*f.map)[a_idx] << "\n";
        }
        os << "end\n";
      }
      break;
    }
  }
  return os.str();
}

BinaryRelation parse_relation(std::string_view text, const std::string& origin) {
  Cursor cursor(tokenize(text), origin);
  ParsedFile raw = parse_raw(cursor);
  if (raw.header != "relation") {
    throw ParseError(origin, 1, 1, "expected a 'relation N' file");
  }
  if (!raw.plain_pairs) {
    throw ParseError(origin, 1, 1, "relation file needs a pairs: section");
  }
  if (raw.join_rows || raw.order_pairs || raw.spec_pairs || raw.theta_pairs ||
      raw.map_pairs || !raw.rels.empty() || !raw.funs.empty()) {
    throw ParseError(origin, 1, 1, "relation file with foreign sections");
  }
  return BinaryRelation::from_pairs(make_carrier(raw), *raw.plain_pairs);
}

BinaryRelation parse_relation_file(const std::string& path) {
  return parse_relation(read_file(path), path);
}

std::string print_relation(const BinaryRelation& r) {
  std::ostringstream os;
  os << "relation " << r.size() << "\n";
  print_names(os, r.carrier());
  print_pair_section(os, "pairs:", r);
  return os.str();
}

SetPartition parse_partition(std::string_view text, int n) {
  std::vector<std::vector<int>> blocks;
  size_t i = 0;
  auto fail = [&](const std::string& what) -> void {
    throw ParseError("<partition>", 1, static_cast<int>(i) + 1, what);
  };
  while (i < text.size()) {
    if (text[i] != '{') {
      fail("expected '{'");
    }
    ++i;
    std::vector<int> block;
    while (true) {
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      if (start == i) {
        fail("expected an element index");
      }
      int value = std::stoi(std::string(text.substr(start, i - start)));
      block.push_back(value);
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == '}') {
        ++i;
        break;
      }
      fail("expected ',' or '}'");
    }
    blocks.push_back(std::move(block));
  }
  if (blocks.empty()) {
    throw ParseError("<partition>", 1, 1, "empty partition");
  }
  try {
    return SetPartition::from_blocks(n, std::move(blocks));
  } catch (const PreconditionError& e) {
    throw ParseError("<partition>", 1, 1, e.what());
  }
}

std::string format_partition(const SetPartition& p) {
  std::string out;
  for (const auto& block : p.blocks()) {
    out += "{";
    for (size_t i = 0; i < block.size(); ++i) {
      if (i > 0) {
        out += ",";
      }
      out += std::to_string(block[i]);
    }
    out += "}";
  }
  return out;
}

namespace {

bool covers(const BinaryRelation& order, int a, int b) {
  if (a == b || !order.contains(a, b)) {
    return false;
  }
  for (int c = 0; c < order.size(); ++c) {
    if (c != a && c != b && order.contains(a, c) && order.contains(c, b)) {
      return false;
    }
  }
  return true;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string hasse_dot(const BinaryRelation& order, const Carrier& carrier) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (int i = 0; i < carrier.size(); ++i) {
    os << "  n" << i << " [label=" << quote(carrier.name(i)) << "];\n";
  }
  for (int a = 0; a < order.size(); ++a) {
    for (int b = 0; b < order.size(); ++b) {
      if (covers(order, a, b)) {
        os << "  n" << a << " -> n" << b << ";\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

std::string congruence_lattice_dot(const FiniteSemilattice& s) {
  std::vector<Congruence> congruences = enumerate_congruences(s);
  std::ostringstream os;
  os << "digraph congruence_lattice {\n  rankdir=BT;\n";
  for (size_t i = 0; i < congruences.size(); ++i) {
    os << "  n" << i << " [label="
       << quote(format_partition(congruences[i].partition())) << "];\n";
  }
  auto strictly_below = [&](size_t i, size_t j) {
    return !(congruences[i].relation() == congruences[j].relation()) &&
           is_coarser(congruences[i].relation(), congruences[j].relation());
  };
  for (size_t i = 0; i < congruences.size(); ++i) {
    for (size_t j = 0; j < congruences.size(); ++j) {
      if (!strictly_below(i, j)) {
        continue;
      }
      bool covering = true;
      for (size_t k = 0; k < congruences.size() && covering; ++k) {
        if (k != i && k != j && strictly_below(i, k) && strictly_below(k, j)) {
          covering = false;
        }
      }
      if (covering) {
        os << "  n" << i << " -> n" << j << ";\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace speclat::io

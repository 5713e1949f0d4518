#include "ybe/io.hpp"

#include <map>
#include <sstream>

namespace ybe {

ParseError::ParseError(const std::string& message, std::string location)
    : std::invalid_argument(message + " at " + location), location_(std::move(location)) {}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected an object", "/");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key \"") + key + "\"", "/");
  return *it;
}

int as_int(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError("expected an integer", where);
  return v.get<int>();
}

// rows × cols matrix of integers; cols < 0 accepts any equal row length.
Table matrix(const Json& v, const std::string& where, int rows, int cols) {
  if (!v.is_array()) throw ParseError("expected an array of rows", where);
  if (rows >= 0 && static_cast<int>(v.size()) != rows)
    throw ParseError("expected " + std::to_string(rows) + " rows", where);
  Table t;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string row_at = where + "/" + std::to_string(i);
    if (!v[i].is_array()) throw ParseError("expected a row", row_at);
    if (cols >= 0 && static_cast<int>(v[i].size()) != cols)
      throw ParseError("expected " + std::to_string(cols) + " entries", row_at);
    std::vector<int> row;
    for (std::size_t k = 0; k < v[i].size(); ++k) row.push_back(as_int(v[i][k], row_at + "/" + std::to_string(k)));
    t.push_back(std::move(row));
  }
  return t;
}

int size_field(const Json& j) {
  const int n = as_int(field(j, "n"), "/n");
  if (n <= 0) throw ParseError("size must be positive", "/n");
  return n;
}

template <typename Rows>
Json rows_json(const Rows& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(r);
  return out;
}

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

DocumentKind detect_kind(const Json& j) {
  if (!j.is_object()) throw ParseError("expected an object", "/");
  if (j.contains("sigma") && j.contains("tau")) return DocumentKind::kSolution;
  if (j.contains("dot") && j.contains("circle")) return DocumentKind::kBrace;
  if (j.contains("groups") && j.contains("C") && j.contains("D")) return DocumentKind::kUnion;
  if (j.contains("table")) return DocumentKind::kGroup;
  throw ParseError("unrecognized document: no solution, brace, union or group keys", "/");
}

std::vector<Json> parse_json_documents(const std::string& text) {
  std::size_t whole_error = 0;
  try {
    return {Json::parse(text)};
  } catch (const Json::parse_error& e) {
    whole_error = e.byte;
  }
  std::vector<Json> out;
  std::istringstream in(text);
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(Json::parse(line));
    } catch (const Json::parse_error& e) {
      // A single multi-line document fails on its first line; report where
      // the whole-text parse stopped instead.
      if (out.empty()) throw ParseError("invalid JSON", line_column(text, whole_error));
      throw ParseError("invalid JSON", "line " + std::to_string(no) + ", column " + std::to_string(e.byte));
    }
  }
  if (out.empty()) throw ParseError("no JSON document", "line 1, column 1");
  return out;
}

SolutionTables solution_tables_from_json(const Json& j) {
  const int n = size_field(j);
  return {matrix(field(j, "sigma"), "/sigma", n, n), matrix(field(j, "tau"), "/tau", n, n)};
}

BraceTables brace_tables_from_json(const Json& j) {
  const int n = size_field(j);
  return {matrix(field(j, "dot"), "/dot", n, n), matrix(field(j, "circle"), "/circle", n, n)};
}

AbelianUnion union_from_json(const Json& j) {
  const Json& groups = field(j, "groups");
  if (!groups.is_array() || groups.empty()) throw ParseError("expected a non-empty array of groups", "/groups");
  AbelianUnion u;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const std::string at = "/groups/" + std::to_string(i);
    if (!groups[i].is_array()) throw ParseError("expected a list of invariant factors", at);
    std::vector<int> factors;
    for (std::size_t k = 0; k < groups[i].size(); ++k) {
      const int f = as_int(groups[i][k], at + "/" + std::to_string(k));
      if (f <= 0) throw ParseError("factor must be positive", at + "/" + std::to_string(k));
      factors.push_back(f);
    }
    u.groups.push_back(abelian_group(factors));
  }
  const int k = static_cast<int>(u.groups.size());
  u.c = matrix(field(j, "C"), "/C", k, k);
  u.d = matrix(field(j, "D"), "/D", k, k);
  return u;
}

FiniteGroup group_from_json(const Json& j) {
  const int n = size_field(j);
  return FiniteGroup::from_table(matrix(field(j, "table"), "/table", n, n));
}

Json to_json(const Solution& s) {
  Json j;
  j["n"] = s.size();
  j["sigma"] = rows_json(s.sigma_table());
  j["tau"] = rows_json(s.tau_table());
  return j;
}

Json to_json(const SkewBrace& b) {
  Json j;
  j["n"] = b.size();
  j["dot"] = rows_json(b.dot().table());
  j["circle"] = rows_json(b.circle().table());
  return j;
}

Json to_json(const AbelianUnion& u) {
  Json j;
  Json groups = Json::array();
  for (const auto& g : u.groups) groups.push_back(g.factors());
  j["groups"] = groups;
  j["C"] = rows_json(u.c);
  j["D"] = rows_json(u.d);
  return j;
}

Json to_json(const FiniteGroup& g) {
  Json j;
  j["n"] = g.size();
  j["table"] = rows_json(g.table());
  return j;
}

Json to_json(const SolutionPartition& p) { return rows_json(p.blocks); }

SolutionTables solution_tables_from_text(const std::string& text) {
  std::vector<Table> blocks(1);
  std::vector<std::vector<std::size_t>> lines(1);
  std::istringstream in(text);
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] == '#') continue;
    if (first == std::string::npos) {
      if (!blocks.back().empty()) {
        blocks.emplace_back();
        lines.emplace_back();
      }
      continue;
    }
    std::istringstream row(line);
    std::vector<int> values;
    std::string tok;
    while (row >> tok) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size())
        throw ParseError("expected an integer, got \"" + tok + "\"", "line " + std::to_string(no));
      values.push_back(v);
    }
    blocks.back().push_back(std::move(values));
    lines.back().push_back(no);
  }
  if (blocks.back().empty()) {
    blocks.pop_back();
    lines.pop_back();
  }
  if (blocks.size() != 2)
    throw ParseError("expected two blocks separated by a blank line, found " + std::to_string(blocks.size()),
                     "line 1");
  const std::size_t n = blocks[0].size();
  for (std::size_t b = 0; b < 2; ++b) {
    if (blocks[b].size() != n)
      throw ParseError("blocks have different numbers of rows", "line " + std::to_string(lines[b].front()));
    for (std::size_t r = 0; r < n; ++r)
      if (blocks[b][r].size() != n)
        throw ParseError("expected " + std::to_string(n) + " entries", "line " + std::to_string(lines[b][r]));
  }
  return {blocks[0], blocks[1]};
}

std::string to_text(const Solution& s) {
  std::ostringstream os;
  auto block = [&](const Table& t) {
    for (const auto& row : t) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
      os << '\n';
    }
  };
  block(s.sigma_table());
  os << '\n';
  block(s.tau_table());
  return os.str();
}

Json census_summary(int n, const std::vector<AbelianUnion>& entries) {
  std::map<std::string, int> by;
  for (const auto& u : entries) ++by[orbit_type(u)];
  Json j;
  j["n"] = n;
  j["count"] = entries.size();
  Json types = Json::object();
  for (const auto& [k, v] : by) types[k] = v;
  j["by_orbit_type"] = types;
  return j;
}

}  // namespace ybe

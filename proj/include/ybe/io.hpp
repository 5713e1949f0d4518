#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "ybe/abelian_union.hpp"
#include "ybe/brace.hpp"
#include "ybe/groups.hpp"
#include "ybe/retraction.hpp"
#include "ybe/solution.hpp"

namespace ybe {

using Json = nlohmann::ordered_json;

// Malformed input. location() is a JSON pointer ("/sigma/2/1") for
// structural errors, or "line L, column C" for syntax errors.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::string location);
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

struct SolutionTables {
  Table sigma;
  Table tau;
};

struct BraceTables {
  Table dot;
  Table circle;
};

enum class DocumentKind { kSolution, kBrace, kUnion, kGroup };

// Decided by required keys: "sigma"+"tau", "dot"+"circle", "groups"+"C"+"D",
// "table". Throws ParseError when none match.
DocumentKind detect_kind(const Json& j);

// One JSON document, or JSON-lines when the text holds several values.
// Blank lines are skipped.
std::vector<Json> parse_json_documents(const std::string& text);

// Shape checks only (square integer tables of the declared size); the
// mathematical checks belong to verify / verify_brace / validate_union.
SolutionTables solution_tables_from_json(const Json& j);
BraceTables brace_tables_from_json(const Json& j);
AbelianUnion union_from_json(const Json& j);
FiniteGroup group_from_json(const Json& j);

Json to_json(const Solution& s);
Json to_json(const SkewBrace& b);
Json to_json(const AbelianUnion& u);
Json to_json(const FiniteGroup& g);
Json to_json(const SolutionPartition& p);

// Two n×n blocks of whitespace-separated integers (σ rows, then τ rows)
// separated by one or more blank lines. Lines starting with '#' are ignored.
SolutionTables solution_tables_from_text(const std::string& text);
std::string to_text(const Solution& s);

// {"n", "count", "by_orbit_type"}
Json census_summary(int n, const std::vector<AbelianUnion>& entries);

}  // namespace ybe

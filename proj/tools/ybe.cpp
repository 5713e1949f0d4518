#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ybe/abelian_union.hpp"
#include "ybe/brace.hpp"
#include "ybe/io.hpp"
#include "ybe/retraction.hpp"
#include "ybe/solution.hpp"

using namespace ybe;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

// Usage or input problem that maps to exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

bool looks_like_json(const std::string& text) {
  const auto p = text.find_first_not_of(" \t\r\n");
  return p != std::string::npos && (text[p] == '{' || text[p] == '[');
}

std::string kind_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::kSigmaNotPermutation: return "sigma_not_permutation";
    case ViolationKind::kTauNotPermutation: return "tau_not_permutation";
    case ViolationKind::kNotBijective: return "not_bijective";
    case ViolationKind::kBirack1: return "birack1";
    case ViolationKind::kBirack2: return "birack2";
    case ViolationKind::kBirack3: return "birack3";
    case ViolationKind::kBraid: return "braid";
  }
  return "unknown";
}

Json level_json(const MultipermutationLevel& lvl, std::size_t n) {
  if (lvl.finite) return lvl.level;
  if (lvl.stabilized_size == n) return "irretractable";
  return "not multipermutation";
}

Json solution_report(const Solution& s) {
  Json r;
  r["n"] = s.size();
  r["involutive"] = is_involutive(s);
  r["square_free"] = is_square_free(s);
  r["lri"] = has_lri(s);
  r["left_distributive"] = is_left_distributive(s);
  r["right_distributive"] = is_right_distributive(s);
  const auto red = is_2reductive(s);
  r["red1"] = red.red1;
  r["red2"] = red.red2;
  r["red3"] = red.red3;
  r["red4"] = red.red4;
  r["two_reductive"] = red.all();
  r["condition_star"] = satisfies_condition_star(s);
  const auto lvl = multipermutation_level(s);
  r["multipermutation_level"] = level_json(lvl, s.size());
  r["retraction_tower"] = lvl.tower;
  return r;
}

Json violation_json(const Violation& v) {
  Json j;
  j["kind"] = kind_name(v.kind);
  j["witness"] = v.witness;
  j["message"] = v.describe();
  return j;
}

// Verifies one solution table pair and returns the report and exit status.
std::pair<Json, int> verify_tables(const Table& sigma, const Table& tau) {
  auto res = verify(sigma, tau);
  Json out;
  out["kind"] = "solution";
  if (!res) {
    out["valid"] = false;
    out["violation"] = violation_json(*res.violation);
    return {out, kViolation};
  }
  out["valid"] = true;
  out.update(solution_report(*res.solution));
  return {out, kOk};
}

std::pair<Json, int> verify_document(const Json& doc) {
  switch (detect_kind(doc)) {
    case DocumentKind::kSolution: {
      const auto t = solution_tables_from_json(doc);
      return verify_tables(t.sigma, t.tau);
    }
    case DocumentKind::kBrace: {
      const auto t = brace_tables_from_json(doc);
      const auto res = verify_brace(t.dot, t.circle);
      Json out;
      out["kind"] = "brace";
      if (!res) {
        out["valid"] = false;
        out["violation"] = {{"kind", "brace_law"}, {"witness", res.violation->witness},
                            {"message", res.violation->describe()}};
        return {out, kViolation};
      }
      out["valid"] = true;
      out.update(solution_report(associated_solution(*res.brace)));
      return {out, kOk};
    }
    case DocumentKind::kUnion: {
      const AbelianUnion u = union_from_json(doc);
      validate_union(u, true);
      Json out;
      out["kind"] = "union";
      if (!satisfies_generation(u)) {
        out["valid"] = false;
        out["violation"] = {{"kind", "not_generating"},
                            {"message", "some column of (C, D) does not generate its group"}};
        return {out, kViolation};
      }
      out["valid"] = true;
      out.update(solution_report(union_to_solution(u)));
      return {out, kOk};
    }
    case DocumentKind::kGroup:
      throw UsageError("a group table is neither a solution nor a brace");
  }
  return {Json(), kUsage};
}

int cmd_verify(const std::string& path, const std::string& format) {
  const std::string text = read_file(path);
  const bool json = format == "json" || (format == "auto" && looks_like_json(text));
  if (!json) {
    const auto t = solution_tables_from_text(text);
    auto [report, code] = verify_tables(t.sigma, t.tau);
    std::cout << report.dump(2) << '\n';
    return code;
  }
  const auto docs = parse_json_documents(text);
  int code = kOk;
  for (const auto& doc : docs) {
    if (doc.is_object() && doc.contains("by_orbit_type")) continue;  // census summary record
    auto [report, c] = verify_document(doc);
    std::cout << (docs.size() == 1 ? report.dump(2) : report.dump()) << '\n';
    code = std::max(code, c);
  }
  return code;
}

int enumeration_cap() {
  const char* env = std::getenv("YBE_ENUM_CAP");
  if (!env || !*env) return 8;
  try {
    std::size_t used = 0;
    const int cap = std::stoi(env, &used);
    if (used == std::string(env).size() && cap > 0) return cap;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string("YBE_ENUM_CAP must be a positive integer, got \"") + env + "\"");
}

int cmd_enumerate(int n, int jobs, const std::string& out_path) {
  const int cap = enumeration_cap();
  if (n < 1 || n > cap)
    throw UsageError("n must lie in 1.." + std::to_string(cap) + " (raise YBE_ENUM_CAP to go further)");
  if (jobs < 1) throw UsageError("--jobs must be positive");
  const auto entries = enumerate_2reductive(n, jobs);
  std::ostringstream lines;
  for (const auto& u : entries) lines << to_json(u).dump() << '\n';
  const std::string summary = census_summary(n, entries).dump();
  if (out_path.empty()) {
    std::cout << lines.str();
  } else {
    write_file(out_path, lines.str() + summary + '\n');
  }
  std::cout << summary << '\n';
  return kOk;
}

struct ClassifyInput {
  std::optional<Solution> solution;
  std::optional<AbelianUnion> u;
  Perm carrier_map;  // input carrier -> carrier of union_to_solution(*u)
};

ClassifyInput load_classify_input(const std::string& path) {
  const std::string text = read_file(path);
  ClassifyInput in;
  Table sigma, tau;
  if (looks_like_json(text)) {
    const auto docs = parse_json_documents(text);
    if (docs.size() != 1) throw UsageError(path + ": expected a single document");
    const auto kind = detect_kind(docs[0]);
    if (kind == DocumentKind::kUnion) {
      AbelianUnion u = union_from_json(docs[0]);
      validate_union(u);
      in.solution = union_to_solution(u);
      in.carrier_map = identity_perm(in.solution->size());
      in.u = std::move(u);
      return in;
    }
    if (kind != DocumentKind::kSolution) throw UsageError(path + ": expected a solution or a union");
    auto t = solution_tables_from_json(docs[0]);
    sigma = std::move(t.sigma);
    tau = std::move(t.tau);
  } else {
    auto t = solution_tables_from_text(text);
    sigma = std::move(t.sigma);
    tau = std::move(t.tau);
  }
  auto res = verify(sigma, tau);
  if (!res) throw UsageError(path + ": not a solution: " + res.violation->describe());
  in.solution = std::move(res.solution);
  if (is_2reductive(*in.solution).all()) {
    auto dec = solution_to_union(*in.solution);
    in.u = std::move(dec.u);
    in.carrier_map = std::move(dec.carrier_map);
  }
  return in;
}

constexpr std::size_t kSearchLimit = 6;

int cmd_classify(const std::string& p1, const std::string& p2) {
  const ClassifyInput a = load_classify_input(p1);
  const ClassifyInput b = load_classify_input(p2);
  Json out;
  auto report = [&](std::optional<Perm> phi) {
    out["isomorphic"] = phi.has_value();
    if (phi) out["carrier_map"] = *phi;
    std::cout << out.dump(2) << '\n';
    return phi ? kOk : kViolation;
  };

  if (a.u && b.u) {
    out["method"] = "union";
    const auto w = unions_isomorphic(*a.u, *b.u);
    if (!w) return report(std::nullopt);
    out["pi"] = w->pi;
    out["psi"] = w->psi;
    const auto off1 = a.u->offsets(), off2 = b.u->offsets();
    Perm across(a.solution->size());
    for (std::size_t i = 0; i < a.u->blocks(); ++i)
      for (std::size_t x = 0; x < a.u->groups[i].size(); ++x)
        across[off1[i] + x] = off2[w->pi[i]] + w->psi[i][x];
    const Perm phi = compose(inverse(b.carrier_map), compose(across, a.carrier_map));
    if (relabel(*a.solution, phi) != *b.solution) throw std::logic_error("union witness does not transport");
    return report(phi);
  }
  if (a.solution->size() > kSearchLimit || b.solution->size() > kSearchLimit)
    throw UsageError("classify needs 2-reductive inputs; general solutions are only searched up to size " +
                     std::to_string(kSearchLimit));
  out["method"] = "search";
  return report(find_isomorphism(*a.solution, *b.solution));
}

Json brace_report(const SkewBrace& b, bool full) {
  Json r;
  r["n"] = b.size();
  const auto routes = biskew_routes(b);
  r["biskew"] = routes.swapped_law;
  r["socle"] = socle(b);
  const auto series = socle_series(b);
  Json sizes = Json::array();
  for (const auto& t : series.terms) sizes.push_back(t.size());
  r["socle_series"] = sizes;
  if (series.nilpotency_class) {
    r["nilpotency_class"] = *series.nilpotency_class;
  } else {
    r["nilpotency_class"] = "not nilpotent";
    r["stabilized_size"] = series.terms.back().size();
  }
  const auto p = reductivity_profile_unchecked(b);
  r["two_reductive"] = p.all_red();
  if (!full) return r;

  r["biskew_routes"] = {{"swapped_law", routes.swapped_law},
                        {"lambda_dot_antihom", routes.lambda_dot_antihom},
                        {"left_distributive", routes.left_distributive}};
  const auto k = kernel_ideals(b);
  r["kernel_ideals"] = {{"ker_lambda", k.ker_lambda},
                        {"ker_rho", k.ker_rho},
                        {"ker_lambda_is_ideal", k.ker_lambda_is_ideal},
                        {"ker_rho_is_ideal", k.ker_rho_is_ideal}};
  r["reductivity_profile"] = {{"red1", p.red1},
                              {"red2", p.red2},
                              {"red3", p.red3},
                              {"red4", p.red4},
                              {"lambda_dot_hom", p.lambda_dot_hom},
                              {"lambda_dot_antihom", p.lambda_dot_antihom},
                              {"rho_dot_hom", p.rho_dot_hom},
                              {"rho_dot_antihom", p.rho_dot_antihom},
                              {"products_agree", p.products_agree},
                              {"level_at_most_2", p.level_at_most_2},
                              {"class_at_most_2", p.class_at_most_2},
                              {"opposite_class_at_most_2", p.opposite_class_at_most_2},
                              {"consistent", p.consistent()}};
  r["meta_trivial_by_socle"] = meta_trivial_by_socle(b);
  if (!series.nilpotency_class) r["stabilized_quotient"] = to_json(series.terms.back());
  r["associated_solution"] = to_json(associated_solution(b));
  return r;
}

int cmd_brace(const std::string& path, const std::string& mode, const std::string& solution_out) {
  const auto docs = parse_json_documents(read_file(path));
  if (!solution_out.empty() && docs.size() != 1) throw UsageError("--solution-out needs a single brace");
  int code = kOk;
  for (const auto& doc : docs) {
    if (detect_kind(doc) != DocumentKind::kBrace) throw UsageError(path + ": expected a brace");
    const auto t = brace_tables_from_json(doc);
    const auto res = verify_brace(t.dot, t.circle);
    Json r;
    if (doc.contains("name")) r["name"] = doc["name"];
    if (!res) {
      r["valid"] = false;
      r["violation"] = {{"kind", "brace_law"}, {"witness", res.violation->witness},
                        {"message", res.violation->describe()}};
      code = kViolation;
    } else {
      r["valid"] = true;
      r.update(brace_report(*res.brace, mode == "full"));
      if (mode == "full" && !r["reductivity_profile"]["consistent"].get<bool>()) code = kViolation;
      if (!solution_out.empty()) write_file(solution_out, to_json(associated_solution(*res.brace)).dump() + '\n');
    }
    std::cout << (docs.size() == 1 ? r.dump(2) : r.dump()) << '\n';
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite solutions of the set-theoretic braid equation"};
  app.require_subcommand(1);

  std::string file, file2, format = "auto", out_path, report = "summary", solution_out;
  int n = 0, jobs = 1;

  auto* verify_cmd = app.add_subcommand("verify", "Check a solution, brace or union and report its properties");
  verify_cmd->add_option("file", file, "Input file")->required();
  verify_cmd->add_option("--format", format, "Input format")->check(CLI::IsMember({"auto", "json", "text"}));

  auto* enum_cmd = app.add_subcommand("enumerate", "List 2-reductive solutions of size n up to isomorphism");
  enum_cmd->add_option("n", n, "Size")->required();
  enum_cmd->add_option("--jobs", jobs, "Worker threads");
  enum_cmd->add_option("--out", out_path, "Write JSON-lines here instead of standard output");

  auto* classify_cmd = app.add_subcommand("classify", "Decide whether two solutions are isomorphic");
  classify_cmd->add_option("first", file, "First solution or union")->required();
  classify_cmd->add_option("second", file2, "Second solution or union")->required();

  auto* brace_cmd = app.add_subcommand("brace", "Analyse a skew left brace");
  brace_cmd->add_option("file", file, "Brace JSON or JSON-lines catalog")->required();
  brace_cmd->add_option("--report", report, "Report detail")->check(CLI::IsMember({"full", "summary"}));
  brace_cmd->add_option("--solution-out", solution_out, "Write the associated solution here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*verify_cmd) return cmd_verify(file, format);
    if (*enum_cmd) return cmd_enumerate(n, jobs, out_path);
    if (*classify_cmd) return cmd_classify(file, file2);
    if (*brace_cmd) return cmd_brace(file, report, solution_out);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "consistency check failed: " << e.what() << '\n';
    return kViolation;
  }
  return kUsage;
}

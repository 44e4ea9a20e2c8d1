#include "masseylab/commands.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "masseylab/cochain.hpp"
#include "masseylab/error.hpp"
#include "masseylab/fixtures.hpp"

namespace masseylab {

using nlohmann::json;

namespace {

// Tokenized non-empty lines with comments stripped.
struct LineReader {
  explicit LineReader(std::istream& s) : in(s) {}
  std::istream& in;
  std::size_t lineno = 0;
  std::vector<std::string> words;

  bool next() {
    std::string line;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
      std::istringstream ls(line);
      words.clear();
      for (std::string w; ls >> w;) words.push_back(w);
      if (!words.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": " + msg);
  }

  std::uint32_t number(std::size_t i) const {
    const std::string& w = words.at(i);
    try {
      std::size_t used = 0;
      long v = std::stol(w, &used);
      if (used == w.size() && v >= 0 && v <= 0x7fffffff) return std::uint32_t(v);
    } catch (const std::exception&) {
    }
    error("not a non-negative integer: '" + w + "'");
  }

  std::vector<std::uint32_t> numbers_from(std::size_t i) const {
    std::vector<std::uint32_t> out;
    for (; i < words.size(); ++i) out.push_back(number(i));
    return out;
  }
};

FiniteGroup resolve_relative(const std::string& ref, const std::filesystem::path& base_dir) {
  try {
    return fixture_group(ref);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BadParameter) throw;
  }
  std::filesystem::path path(ref);
  if (path.is_relative() && !base_dir.empty() && !std::filesystem::exists(path)) path = base_dir / path;
  return resolve_group(path.string());
}

Report single(std::string command, std::string suite, Record r) {
  Report out;
  out.command = std::move(command);
  out.suite = std::move(suite);
  out.records.push_back(std::move(r));
  return out;
}

json generator_images(const GroupHom& h) {
  json out = json::array();
  for (Elem x : h.generator_images()) out.push_back(x);
  return out;
}

std::string residues(const FpVector& v) {
  std::string s;
  for (Residue r : v) s += std::to_string(int(r));
  return s.empty() ? "-" : s;
}

}  // namespace

MasseyQueryFile parse_massey_query(std::istream& in, const std::filesystem::path& base_dir) {
  LineReader r{in};
  MasseyQueryFile out;
  std::optional<FiniteGroup> g;
  std::optional<std::uint32_t> p, n;
  std::vector<std::vector<std::uint32_t>> rows;
  std::vector<std::size_t> row_lines;
  while (r.next()) {
    const std::string& key = r.words[0];
    if (key == "group") {
      if (r.words.size() != 2) r.error("'group' takes one name or path");
      out.group_ref = r.words[1];
      g = resolve_relative(r.words[1], base_dir);
    } else if (key == "p") {
      if (r.words.size() != 2) r.error("'p' takes one prime");
      p = r.number(1);
    } else if (key == "n") {
      if (r.words.size() != 2) r.error("'n' takes one length");
      n = r.number(1);
    } else if (key == "a") {
      if (!g) r.error("'a' rows must follow the 'group' line");
      rows.push_back(r.numbers_from(1));
      row_lines.push_back(r.lineno);
      if (rows.back().size() != g->generators().size())
        r.error("expected " + std::to_string(g->generators().size()) + " generator values");
    } else {
      r.error("unknown keyword '" + key + "'");
    }
  }
  if (!g || !p || !n) fail(ErrorKind::ParseError, "query needs 'group', 'p' and 'n' lines");
  if (*n < 2) fail(ErrorKind::ParseError, "n must be at least 2");
  if (rows.empty() || rows.size() % *n != 0)
    fail(ErrorKind::ParseError, "expected a multiple of " + std::to_string(*n) + " 'a' rows, found " + std::to_string(rows.size()));
  for (std::size_t t = 0; t < rows.size(); t += *n) {
    MasseyQuery q{*g, *p, {}};
    for (std::size_t i = t; i < t + *n; ++i) {
      FpVector gen_values;
      for (auto v : rows[i]) gen_values.push_back(Residue(v % *p));
      try {
        // a class is determined by its values on the generators
        std::vector<Elem> images;
        for (Residue v : gen_values) images.push_back(v);
        auto hom = GroupHom::from_generator_images(*g, build_cyclic(*p), images);
        FpVector per_element;
        for (Elem x = 0; x < g->order(); ++x) per_element.push_back(Residue(hom(x)));
        q.classes.push_back(Cochain::from_values(*g, *p, per_element));
      } catch (const Error& e) {
        fail(ErrorKind::ParseError, "line " + std::to_string(row_lines[i]) + ": " + e.what());
      }
    }
    out.queries.push_back(std::move(q));
  }
  return out;
}

ProblemFile parse_problem(std::istream& in, const std::filesystem::path& base_dir) {
  LineReader r{in};
  std::string refs[3];
  std::optional<FiniteGroup> g, a, b;
  std::optional<std::vector<std::uint32_t>> alpha, phi;
  std::size_t alpha_line = 0, phi_line = 0;
  while (r.next()) {
    const std::string& key = r.words[0];
    if (key == "g" || key == "a" || key == "b") {
      if (r.words.size() != 2) r.error("'" + key + "' takes one name or path");
      auto grp = resolve_relative(r.words[1], base_dir);
      refs[key == "g" ? 0 : key == "a" ? 1 : 2] = r.words[1];
      (key == "g" ? g : key == "a" ? a : b) = grp;
    } else if (key == "alpha") {
      alpha = r.numbers_from(1);
      alpha_line = r.lineno;
    } else if (key == "phi") {
      phi = r.numbers_from(1);
      phi_line = r.lineno;
    } else {
      r.error("unknown keyword '" + key + "'");
    }
  }
  if (!g || !a || !b || !alpha || !phi) fail(ErrorKind::ParseError, "problem needs 'g', 'a', 'b', 'alpha' and 'phi' lines");
  auto hom = [](const FiniteGroup& from, const FiniteGroup& to, const std::vector<std::uint32_t>& imgs, std::size_t line) {
    if (imgs.size() != from.generators().size())
      fail(ErrorKind::ParseError, "line " + std::to_string(line) + ": expected " +
                                      std::to_string(from.generators().size()) + " generator images");
    for (auto x : imgs)
      if (x >= to.order()) fail(ErrorKind::ParseError, "line " + std::to_string(line) + ": element index out of range");
    try {
      return GroupHom::from_generator_images(from, to, std::vector<Elem>(imgs.begin(), imgs.end()));
    } catch (const Error& e) {
      fail(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + e.what());
    }
  };
  return ProblemFile{refs[0], refs[1], refs[2],
                     EmbeddingProblem{*g, *a, *b, hom(*b, *a, *alpha, alpha_line), hom(*g, *a, *phi, phi_line)}};
}

Report cmd_group_list() {
  Report out;
  out.command = "group list";
  out.suite = "group";
  for (const auto& name : fixture_names()) {
    FiniteGroup g = fixture_group(name);
    out.records.push_back({name, Verdict::Holds,
                           json{{"order", g.order()}, {"generators", g.generators().size()}, {"abelian", is_abelian(g)}}.dump()});
  }
  return out;
}

Report cmd_group_show(const std::string& ref) {
  FiniteGroup g = resolve_group(ref);
  std::ostringstream spec;
  write_group_spec(spec, g);
  json gens = json::array();
  for (Elem s : g.generators()) gens.push_back(s);
  json orders = json::array();
  for (Elem x = 0; x < g.order(); ++x) orders.push_back(element_order(g, x));
  return single("group show " + ref, "group",
                {ref, Verdict::Holds,
                 json{{"order", g.order()},
                      {"generators", gens},
                      {"abelian", is_abelian(g)},
                      {"element_orders", orders},
                      {"fingerprint", g.fingerprint()},
                      {"spec", spec.str()}}
                     .dump()});
}

Report cmd_group_check(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) fail(ErrorKind::ParseError, "cannot open '" + file.string() + "'");
  const std::string item = file.filename().string();
  try {
    FiniteGroup g = parse_group_spec(in);
    const bool ok = satisfies_group_axioms(g);
    return single("group check " + item, "group",
                  {item, ok ? Verdict::Holds : Verdict::Fails, json{{"order", g.order()}, {"axioms", ok}}.dump()});
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::NonAssociative:
      case ErrorKind::NoIdentity:
      case ErrorKind::NoInverse:
      case ErrorKind::GeneratorsDontGenerate:
        return single("group check " + item, "group",
                      {item, Verdict::Fails, json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump()});
      default:
        throw;
    }
  }
}

Report cmd_cohomology(const std::string& ref, std::uint32_t p) {
  FiniteGroup g = resolve_group(ref);
  auto d = demushkin_check(g, p);
  json gram = nullptr;
  if (d.form) {
    gram = json::array();
    for (const auto& row : d.form->gram) gram.push_back(residues(row));
  }
  return single("cohomology --group " + ref + " --p " + std::to_string(p), "cohomology",
                {ref + " p=" + std::to_string(p), Verdict::Holds,
                 json{{"h1_dim", d.dim_h1},
                      {"h2_dim", d.dim_h2},
                      {"cup_form", gram},
                      {"nondegenerate", d.nondegenerate},
                      {"demushkin", d.verdict}}
                     .dump()});
}

Report cmd_massey(const std::filesystem::path& query_file, const RunConfig& cfg) {
  std::ifstream in(query_file);
  if (!in) fail(ErrorKind::ParseError, "cannot open '" + query_file.string() + "'");
  auto parsed = parse_massey_query(in, query_file.parent_path());
  Report out;
  out.command = "massey " + query_file.filename().string();
  out.suite = "massey";
  if (parsed.queries.empty()) return out;
  const Cohomology h(parsed.queries[0].group, parsed.queries[0].p);
  for (const auto& q : parsed.queries) {
    q.validate();
    SearchBudget budget{cfg.budget};
    auto set = massey_product_set(q, h, MasseyStrategy::HomLift, &budget);
    auto sol = solve_dwyer(q, DwyerTarget::Full, &budget);
    std::string label = "(";
    json values = json::array();
    for (std::size_t i = 0; i < q.classes.size(); ++i) label += (i ? "," : "") + residues(h.h1_coordinates(q.classes[i]));
    label += ")";
    for (const auto& v : set.values) values.push_back(residues(h.h2_coordinates(v.representative())));
    json d{{"defined", set.defined()}, {"vanishes", set.vanishes()}, {"values", values}, {"nodes", budget.used}};
    if (sol.verdict == SolveVerdict::Solved) {
      json w = json::array();
      for (Elem s : q.group.generators()) w.push_back(format_matrix_literal(sol.images[s]));
      d["witness"] = w;
    } else {
      d["witness"] = nullptr;
    }
    const bool over = set.status == SearchStatus::BudgetExceeded || sol.verdict == SolveVerdict::BudgetExceeded;
    const bool consistent = over || set.vanishes() == (sol.verdict == SolveVerdict::Solved);
    out.records.push_back({"a=" + label, over ? Verdict::BudgetExceeded : consistent ? Verdict::Holds : Verdict::Fails, d.dump()});
  }
  return out;
}

Report cmd_solve(const std::filesystem::path& problem_file, const RunConfig& cfg) {
  std::ifstream in(problem_file);
  if (!in) fail(ErrorKind::ParseError, "cannot open '" + problem_file.string() + "'");
  auto parsed = parse_problem(in, problem_file.parent_path());
  parsed.problem.validate();
  SearchBudget budget{cfg.budget};
  auto r = solve(parsed.problem, &budget);
  json d{{"result", to_string(r.verdict)}, {"nodes", r.nodes}};
  d["witness"] = r.solution ? generator_images(*r.solution) : json(nullptr);
  Verdict v = r.verdict == SolveVerdict::Solved     ? Verdict::Holds
              : r.verdict == SolveVerdict::NoSolution ? Verdict::Fails
                                                      : Verdict::BudgetExceeded;
  return single("solve " + problem_file.filename().string(), "solve",
                {parsed.g_ref + " -> " + parsed.b_ref + " over " + parsed.a_ref, v, d.dump()});
}

}  // namespace masseylab

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "masseylab/embedding.hpp"
#include "masseylab/massey.hpp"
#include "masseylab/report.hpp"

namespace masseylab {

/// Query file: `group <name|path>`, `p <prime>`, `n <length>`, then one
/// `a v1 v2 ...` line per class (values on the generators). Several tuples
/// may follow each other; every n rows form one tuple. `#` starts a comment.
struct MasseyQueryFile {
  std::string group_ref;
  std::vector<MasseyQuery> queries;
};
MasseyQueryFile parse_massey_query(std::istream& in, const std::filesystem::path& base_dir = {});

/// Problem file: `g <ref>`, `a <ref>`, `b <ref>`, `alpha ...` (images in A of
/// B's generators) and `phi ...` (images in A of G's generators).
struct ProblemFile {
  std::string g_ref, a_ref, b_ref;
  EmbeddingProblem problem;
};
ProblemFile parse_problem(std::istream& in, const std::filesystem::path& base_dir = {});

Report cmd_group_list();
Report cmd_group_show(const std::string& ref);
/// Records a failing verdict for structural defects (non-associative table,
/// missing identity, ...); syntax errors still throw ParseError.
Report cmd_group_check(const std::filesystem::path& file);
Report cmd_cohomology(const std::string& ref, std::uint32_t p);
Report cmd_massey(const std::filesystem::path& query_file, const RunConfig& cfg);
/// holds when a solution exists, fails with the node count as certificate otherwise.
Report cmd_solve(const std::filesystem::path& problem_file, const RunConfig& cfg);

}  // namespace masseylab

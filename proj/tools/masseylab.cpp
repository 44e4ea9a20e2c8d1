#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "masseylab/commands.hpp"
#include "masseylab/error.hpp"
#include "masseylab/finite_group.hpp"
#include "masseylab/fixtures.hpp"
#include "masseylab/report.hpp"
#include "masseylab/suites.hpp"

using namespace masseylab;

namespace {

constexpr int kUsageError = 3;

// Errors caused by the input rather than by the computation.
bool is_usage_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::BadParameter:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::ShapeMismatch:
    case ErrorKind::SizeMismatch:
    case ErrorKind::NotAHomomorphism:
      return true;
    default:
      return false;
  }
}

int emit(const Report& r, OutputFormat format) {
  write_report(std::cout, r, format);
  if (r.exit_code() == 1) {
    for (const auto& rec : r.records)
      if (rec.verdict == Verdict::Fails) {
        std::cerr << "first failing record: " << rec.item << "  " << rec.detail << '\n';
        break;
      }
  }
  return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Massey products, unitriangular lifts and embedding problems over small finite groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  RunConfig cfg;
  std::string format = "text";
  bool no_cache = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "records"}))->capture_default_str();
  app.add_option("--budget", cfg.budget, "Search nodes allowed per record")->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "Worker threads")->capture_default_str();
  app.add_flag("--no-cache", no_cache, "Recompute instead of reading the report cache");
  app.fallthrough();

  auto* group = app.add_subcommand("group", "Built-in groups and group spec files");
  group->require_subcommand(1);
  auto* group_list = group->add_subcommand("list", "List built-in groups");
  std::string group_ref;
  auto* group_show = group->add_subcommand("show", "Show a group as a spec file");
  group_show->add_option("group", group_ref, "Fixture name or spec file")->required();
  std::string check_file;
  auto* group_check = group->add_subcommand("check", "Validate a group spec file");
  group_check->add_option("file", check_file, "Spec file")->required();

  auto* cohomology = app.add_subcommand("cohomology", "H^1, H^2, cup form and Demushkin verdict");
  cohomology->add_option("--group", cfg.group, "Fixture name or spec file")->capture_default_str();
  cohomology->add_option("--p", cfg.p, "Prime")->capture_default_str();

  std::string query_file;
  auto* massey = app.add_subcommand("massey", "Evaluate the Massey products listed in a query file");
  massey->add_option("query", query_file, "Query file")->required()->check(CLI::ExistingFile);

  std::string problem_file;
  auto* solve_cmd = app.add_subcommand("solve", "Solve the embedding problem in a problem file");
  solve_cmd->add_option("problem", problem_file, "Problem file")->required()->check(CLI::ExistingFile);

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--group", cfg.group, "Fixture name or spec file")->capture_default_str();
  verify->add_option("--p", cfg.p, "Prime")->capture_default_str();
  verify->add_option("--n", cfg.n, "Tuple length")->capture_default_str();
  verify->add_option("--m", cfg.m, "Matrix size")->capture_default_str();
  verify->add_option("--k", cfg.k, "Fibre quotient index")->capture_default_str();
  verify->add_option("--seed", cfg.seed, "Seed for sampled suites")->capture_default_str();
  verify->add_option("--samples", cfg.samples, "Sample count (0 = exhaustive)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  cfg.format = format == "records" ? OutputFormat::Records : OutputFormat::Text;
  cfg.use_cache = !no_cache;
  if (cfg.use_cache) cfg.cache_dir = default_cache_dir();

  try {
    cfg.validate();
    if (*group_list) return emit(cmd_group_list(), cfg.format);
    if (*group_show) {
      Report r = cmd_group_show(group_ref);
      if (cfg.format == OutputFormat::Text) {
        write_group_spec(std::cout, resolve_group(group_ref));
        return 0;
      }
      return emit(r, cfg.format);
    }
    if (*group_check) return emit(cmd_group_check(check_file), cfg.format);
    if (*cohomology) return emit(cmd_cohomology(cfg.group, cfg.p), cfg.format);
    if (*massey) return emit(cmd_massey(query_file, cfg), cfg.format);
    if (*solve_cmd) return emit(cmd_solve(problem_file, cfg), cfg.format);
    if (*verify) return emit(run_suite(suite, cfg), cfg.format);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_usage_error(e.kind()) ? kUsageError : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kUsageError;
}

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "masseylab/commands.hpp"
#include "masseylab/error.hpp"
#include "masseylab/report.hpp"
#include "masseylab/suites.hpp"

using namespace masseylab;

namespace {

const std::string kData = MASSEYLAB_TEST_DATA;

std::string records_of(const Report& r) {
  std::ostringstream out;
  write_records(out, r);
  return out.str();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() / ("masseylab-test-" + std::to_string(std::random_device{}()));
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("verdict strings and exit codes") {
  for (Verdict v : {Verdict::Holds, Verdict::Fails, Verdict::BudgetExceeded, Verdict::NotApplicable})
    CHECK(parse_verdict(to_string(v)) == v);
  CHECK_FALSE(parse_verdict("maybe"));
  Report r;
  r.records = {{"a", Verdict::Holds, "{}"}, {"b", Verdict::NotApplicable, "{}"}};
  CHECK(r.exit_code() == 0);
  r.records.push_back({"c", Verdict::BudgetExceeded, "{}"});
  CHECK(r.exit_code() == 2);
  r.records.push_back({"d", Verdict::Fails, "{}"});
  CHECK(r.exit_code() == 1);
}

TEST_CASE("run configuration validation") {
  RunConfig cfg;
  cfg.budget = 0;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg.budget = 1;
  cfg.jobs = 0;
  CHECK_THROWS_AS(cfg.validate(), Error);
}

TEST_CASE("records round trip") {
  Report r;
  r.command = "verify demo";
  r.suite = "demo";
  r.records = {{"x", Verdict::Holds, R"({"n":1})"}, {"y", Verdict::Fails, R"({"why":"because"})"}};
  std::istringstream in(records_of(r));
  auto back = read_records(in);
  CHECK(back.command == r.command);
  CHECK(back.suite == r.suite);
  REQUIRE(back.records.size() == 2);
  CHECK(back.records[1].verdict == Verdict::Fails);
  CHECK(back.records[1].detail == r.records[1].detail);
  std::istringstream broken("{\"type\":\"header\"}\nnot json\n");
  CHECK_THROWS_AS(read_records(broken), Error);
}

TEST_CASE("golden reports") {
  RunConfig cfg;
  CHECK(records_of(run_suite("case-by-case", cfg)) == slurp(kData + "/case-by-case.jsonl"));
  cfg.group = "V4";
  cfg.n = 3;
  CHECK(records_of(run_suite("dwyer", cfg)) == slurp(kData + "/dwyer-v4-n3.jsonl"));
  CHECK(records_of(cmd_cohomology("Q8", 2)) == slurp(kData + "/cohomology-q8.jsonl"));
}

TEST_CASE("parallel runs produce the same records") {
  RunConfig one, four;
  one.group = four.group = "V4";
  one.n = four.n = 3;
  four.jobs = 4;
  for (const char* suite : {"dwyer", "twisting", "filtration", "central-steps"}) {
    CAPTURE(suite);
    auto a = run_suite(suite, one), b = run_suite(suite, four);
    CHECK(a.command == b.command);
    CHECK(records_of(a) == records_of(b));
  }
}

TEST_CASE("the cache never changes a report") {
  TempDir dir;
  RunConfig cfg;
  cfg.group = "Z4";
  cfg.n = 3;
  cfg.cache_dir = dir.path;
  auto fresh = run_suite("dwyer", cfg);
  CHECK_FALSE(fresh.from_cache);
  auto cached = run_suite("dwyer", cfg);
  CHECK(cached.from_cache);
  CHECK(records_of(fresh) == records_of(cached));
  cfg.use_cache = false;
  auto uncached = run_suite("dwyer", cfg);
  CHECK_FALSE(uncached.from_cache);
  CHECK(records_of(uncached) == records_of(fresh));

  // a different seed or group is a different entry
  cfg.use_cache = true;
  cfg.group = "Z2";
  CHECK_FALSE(run_suite("dwyer", cfg).from_cache);

  // a corrupt entry is recomputed
  for (const auto& f : std::filesystem::directory_iterator(dir.path)) std::ofstream(f.path()) << "garbage\n";
  cfg.group = "Z4";
  auto again = run_suite("dwyer", cfg);
  CHECK_FALSE(again.from_cache);
  CHECK(records_of(again) == records_of(fresh));
}

TEST_CASE("canonical commands ignore jobs and cache settings") {
  RunConfig a, b;
  b.jobs = 3;
  b.use_cache = false;
  for (const auto& s : suite_names()) CHECK(canonical_command(s, a) == canonical_command(s, b));
  CHECK(canonical_command("dwyer", a) == "verify dwyer --group V4 --p 2 --n 3 --budget 50000000");
  CHECK_THROWS_AS(run_suite("nonsense", a), Error);
}

TEST_CASE("group commands") {
  auto list = cmd_group_list();
  std::vector<std::string> names;
  for (const auto& r : list.records) names.push_back(r.item);
  for (const char* want : {"Z2", "Z4", "V4", "D4", "Q8", "U3_2", "SD2_2_3"})
    CHECK(std::find(names.begin(), names.end(), want) != names.end());
  auto show = cmd_group_show("Z2");
  CHECK(show.records[0].detail.find("\"order\":2") != std::string::npos);

  auto good = cmd_group_check(kData + "/s3.group");
  CHECK(good.exit_code() == 0);
  auto bad = cmd_group_check(kData + "/s3-mutated.group");
  CHECK(bad.exit_code() == 1);
  auto loop = cmd_group_check(kData + "/loop5.group");
  CHECK(loop.exit_code() == 1);
  CHECK(loop.records[0].detail.find("NonAssociative") != std::string::npos);
  CHECK_THROWS_AS(cmd_group_check(kData + "/garbled.group"), Error);
}

TEST_CASE("massey and solve commands") {
  RunConfig cfg;
  auto m = cmd_massey(kData + "/z4-fourfold.query", cfg);
  REQUIRE(m.records.size() == 2);
  CHECK(m.records[0].detail.find("\"vanishes\":true") != std::string::npos);
  CHECK(m.records[1].detail.find("\"vanishes\":false") != std::string::npos);
  CHECK(m.exit_code() == 0);

  auto solved = cmd_solve(kData + "/z4-over-z2-trivial.problem", cfg);
  CHECK(solved.exit_code() == 0);
  CHECK(solved.records[0].detail.find("\"witness\":[0]") != std::string::npos);
  auto unsolved = cmd_solve(kData + "/z2-into-z4.problem", cfg);
  CHECK(unsolved.exit_code() == 1);
  CHECK(unsolved.records[0].detail.find("no-solution") != std::string::npos);

  std::istringstream bad_query("group Z2\np 2\nn 2\na 1\n");
  CHECK_THROWS_AS(parse_massey_query(bad_query), Error);
  std::istringstream bad_problem("g Z2\na Z2\nb Z4\nalpha 1\nphi 7\n");
  CHECK_THROWS_AS(parse_problem(bad_problem), Error);
}

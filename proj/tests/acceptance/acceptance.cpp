// One line per acceptance criterion; the process fails if any criterion does.
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "masseylab/cochain.hpp"
#include "masseylab/embedding.hpp"
#include "masseylab/fixtures.hpp"
#include "masseylab/massey.hpp"
#include "masseylab/report.hpp"
#include "masseylab/suites.hpp"
#include "masseylab/unitriangular.hpp"
#include "masseylab/verification.hpp"

using namespace masseylab;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

RunConfig config() {
  RunConfig cfg;
  cfg.use_cache = false;
  cfg.jobs = 1;
  return cfg;
}

std::size_t count_not(const Report& r, Verdict v) { return r.records.size() - r.count(v); }

// 1. coboundary and cup axioms on seeded random cochains
Outcome complex_axioms() {
  std::size_t records = 0, bad = 0;
  for (const char* g : {"Z2", "Z4", "V4", "S3"})
    for (std::uint32_t p : {2u, 3u}) {
      auto cfg = config();
      cfg.group = g;
      cfg.p = p;
      cfg.samples = 100;
      cfg.seed = 1;
      auto r = run_suite("cochain-axioms", cfg);
      records += r.records.size();
      bad += count_not(r, Verdict::Holds);
    }
  return {bad == 0, std::to_string(records) + " checks x 100 samples, " + std::to_string(bad) + " failing"};
}

struct SweepCounts {
  std::size_t tuples = 0, dwyer = 0, defined = 0, cups = 0;
};

SweepCounts dwyer_sweep() {
  SweepCounts c;
  for (const char* name : {"Z2", "Z4", "V4"}) {
    auto g = fixture_group(name);
    Cohomology h(g, 2);
    for (std::uint32_t n : {3u, 4u})
      for (const auto& tuple : h1_tuples(h, n)) {
        MasseyQuery q{g, 2, tuple};
        ++c.tuples;
        auto ex = massey_product_set(q, h, MasseyStrategy::ExhaustiveCochain);
        auto hl = massey_product_set(q, h, MasseyStrategy::HomLift);
        const bool solved = solve(build_dwyer_problem(q)).verdict == SolveVerdict::Solved;
        c.dwyer += !(ex.vanishes() == hl.vanishes() && hl.vanishes() == solved);
        const bool mod_z = solve(build_dwyer_problem(q, DwyerTarget::ModZ)).verdict == SolveVerdict::Solved;
        const bool mod_p = solve(build_dwyer_problem(q, DwyerTarget::ModP)).verdict == SolveVerdict::Solved;
        c.defined += !(ex.defined() == mod_z && hl.defined() == mod_z);
        c.cups += consecutive_cups_zero(q, h).direct != mod_p;
      }
  }
  return c;
}

// 4. preimages of (1,1) in U_3(2)
Outcome case_by_case() {
  auto a = case_by_case_audit({1, 1});
  bool ok = a.preimages.size() == 2;
  for (auto o : a.orders) ok = ok && o == 4;
  std::string orders;
  for (auto o : a.orders) orders += (orders.empty() ? "" : ",") + std::to_string(o);
  return {ok, std::to_string(a.preimages.size()) + " preimages, orders {" + orders + "}"};
}

// 5. Z/2 sign patterns, n = 3..8
Outcome strong_core() {
  auto cfg = config();
  cfg.n = 8;
  auto r = run_suite("block-lift", cfg);
  std::size_t valid = 0, adjacent = 0;
  for (const auto& rec : r.records) {
    auto d = json::parse(rec.detail);
    valid += d["no_adjacent_ones"].get<std::size_t>();
    adjacent += d["adjacent_ones"].get<std::size_t>();
  }
  const bool ok = r.records.size() == 6 && r.count(Verdict::Holds) == 6;
  return {ok, std::to_string(valid) + " lifted patterns, " + std::to_string(adjacent) + " non-real adjacent-ones patterns, " +
                  std::to_string(count_not(r, Verdict::Holds)) + " failing lengths"};
}

// 6. obstruction vs solver on central steps
Outcome obstruction_theory() {
  std::size_t problems = 0, homs = 0, bad = 0, failing = 0;
  for (auto [m, p] : {std::pair{4u, 2u}, {5u, 2u}, {4u, 3u}}) {
    auto cfg = config();
    cfg.m = m;
    cfg.p = p;
    auto r = run_suite("central-steps", cfg);
    problems += r.records.size();
    for (const auto& rec : r.records) {
      auto d = json::parse(rec.detail);
      homs += d["homs"].get<std::size_t>();
      bad += d["disagreements"].get<std::size_t>() + d["policy_disagreements"].get<std::size_t>();
    }
    failing += count_not(r, Verdict::Holds);
  }
  return {bad == 0 && failing == 0, std::to_string(problems) + " problem/group pairs, " + std::to_string(homs) + " instances, " +
                        std::to_string(bad) + " disagreements"};
}

// 7. twisting identity
Outcome twisting() {
  std::size_t instances = 0, failures = 0;
  auto run = [&](const char* group, std::uint32_t p, std::uint64_t samples) {
    auto cfg = config();
    cfg.group = group;
    cfg.p = p;
    cfg.n = 3;
    cfg.k = 2;
    cfg.samples = samples;
    cfg.seed = 7;
    auto r = run_suite("twisting", cfg);
    for (const auto& rec : r.records) {
      auto d = json::parse(rec.detail);
      instances += d["chi_checked"].get<std::size_t>();
      failures += d["failing_chi"].size();
    }
    return r.records.size();
  };
  const std::size_t exhaustive = run("V4", 2, 0);
  const std::size_t before = instances;
  run("Z3xZ3", 3, 120);
  const std::size_t odd = instances - before;
  const bool ok = failures == 0 && exhaustive == 304 && odd >= 100;
  return {ok, std::to_string(before) + " pairs exhaustive at p=2, " + std::to_string(odd) + " sampled pairs at p=3, " +
                  std::to_string(failures) + " failures"};
}

// 8. M_{k,m}, the fibre product and rho kernels
Outcome structure() {
  std::size_t records = 0, bad = 0;
  for (std::uint32_t p : {2u, 3u}) {
    auto cfg = config();
    cfg.m = 4;
    cfg.p = p;
    auto r = run_suite("fiber-quotient", cfg);
    records += r.records.size();
    bad += count_not(r, Verdict::Holds);
  }
  return {bad == 0 && records > 0, std::to_string(records) + " structure checks, " + std::to_string(bad) + " failing"};
}

// 9. inductive construction when H^2 = 0
Outcome easy_vanishing() {
  std::size_t tuples = 0, steps = 0, nonzero = 0, unverified = 0;
  bool h2_zero = true;
  for (auto [name, p] : {std::pair{"Z3", 2u}, {"Z5", 2u}, {"S3", 5u}}) {
    auto report = easy_vanishing_drill(fixture_group(name), p, 3);
    h2_zero = h2_zero && report.h2_dim == 0;
    for (const auto& t : report.tuples) {
      ++tuples;
      unverified += !t.verified;
      for (const auto& s : t.steps) {
        ++steps;
        nonzero += !s.class_zero;
      }
    }
  }
  const bool ok = h2_zero && nonzero == 0 && unverified == 0 && tuples > 0;
  return {ok, "H^2 = 0 in all cases: " + std::string(h2_zero ? "yes" : "no") + ", " + std::to_string(tuples) +
                  " tuples, " + std::to_string(steps) + " steps, " + std::to_string(nonzero) + " nonzero obstructions"};
}

// 10. Demushkin verdicts and the filtration length
Outcome demushkin_and_filtration() {
  const bool z2 = demushkin_check(build_cyclic(2), 2).verdict;
  const bool z3 = demushkin_check(build_cyclic(3), 3).verdict;
  const bool z5 = demushkin_check(build_cyclic(5), 5).verdict;
  const bool trivial = demushkin_check(FiniteGroup(), 2).verdict;
  auto cfg = config();
  cfg.n = 4;
  cfg.p = 2;
  auto r = run_suite("filtration", cfg);
  std::string lengths;
  bool lengths_ok = r.records.size() == 3;
  for (const auto& rec : r.records) {
    auto d = json::parse(rec.detail);
    const auto len = d["length"].get<std::size_t>();
    lengths += " " + rec.item + ": " + std::to_string(len) + " (n choose 2 = " + std::to_string(d["n_choose_2"].get<int>()) +
               ", n-1 choose 2 = " + std::to_string(d["n_minus_1_choose_2"].get<int>()) + ")";
    lengths_ok = lengths_ok && rec.verdict == Verdict::Holds && d["matches_n_choose_2"].get<bool>();
  }
  const bool ok = z2 && !z3 && !z5 && !trivial && lengths_ok;
  return {ok, std::string("Z2 ") + (z2 ? "true" : "false") + ", Z3 " + (z3 ? "true" : "false") + ", Z5 " +
                  (z5 ? "true" : "false") + ", trivial " + (trivial ? "true" : "false") + ";" + lengths};
}

// 11. repeated single-worker runs are byte-identical
Outcome determinism() {
  struct Run {
    const char* suite;
    RunConfig cfg;
  };
  std::vector<Run> runs;
  auto cfg = config();
  cfg.seed = 42;
  cfg.samples = 100;
  cfg.group = "S3";
  cfg.p = 3;
  runs.push_back({"cochain-axioms", cfg});
  cfg = config();
  cfg.group = "Z3xZ3";
  cfg.p = 3;
  cfg.samples = 50;
  cfg.seed = 42;
  runs.push_back({"twisting", cfg});
  cfg = config();
  cfg.group = "V4";
  cfg.n = 4;
  runs.push_back({"dwyer", cfg});
  runs.push_back({"demushkin", cfg});
  std::size_t identical = 0;
  for (const auto& run : runs) {
    std::ostringstream a, b;
    write_records(a, run_suite(run.suite, run.cfg));
    write_records(b, run_suite(run.suite, run.cfg));
    identical += a.str() == b.str();
  }
  return {identical == runs.size(), std::to_string(identical) + "/" + std::to_string(runs.size()) + " suites byte-identical"};
}

}  // namespace

int main() {
  std::optional<SweepCounts> sweep;
  auto shared_sweep = [&]() -> const SweepCounts& {
    if (!sweep) sweep = dwyer_sweep();
    return *sweep;
  };
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"complex axioms (dd = 0, Leibniz), exact", complex_axioms},
      {"Dwyer correspondence, three paths, 0 disagreements allowed",
       [&] {
         const auto& c = shared_sweep();
         return Outcome{c.dwyer == 0, std::to_string(c.tuples) + " tuples, " + std::to_string(c.dwyer) + " disagreements"};
       }},
      {"defined <=> U/Z lift and cups zero <=> U/P lift, 0 disagreements allowed",
       [&] {
         const auto& c = shared_sweep();
         return Outcome{c.defined == 0 && c.cups == 0, std::to_string(c.tuples) + " tuples, " + std::to_string(c.defined) +
                                                          " defined mismatches, " + std::to_string(c.cups) + " cup mismatches"};
       }},
      {"case-by-case audit in U_3(2)", case_by_case},
      {"Z/2 sign patterns and block lifts, n = 3..8", strong_core},
      {"obstruction = 0 <=> solvable, lift-policy invariant, 0 disagreements allowed", obstruction_theory},
      {"twisting identity, 0 failures allowed", twisting},
      {"structure of M_{k,m}, fibre products and rho kernels", structure},
      {"inductive lifting when H^2 = 0, every obstruction exactly 0", easy_vanishing},
      {"Demushkin verdicts and filtration length", demushkin_and_filtration},
      {"determinism of structured reports", determinism},
  };
  int failed = 0, index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}

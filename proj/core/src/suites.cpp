#include "masseylab/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <functional>
#include <iterator>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "masseylab/embedding.hpp"
#include "masseylab/error.hpp"
#include "masseylab/fixtures.hpp"
#include "masseylab/layered_lift.hpp"
#include "masseylab/massey.hpp"
#include "masseylab/verification.hpp"

namespace masseylab {

using nlohmann::json;

namespace {

// Evaluates f(0..count-1) on `jobs` workers; results land in index order.
std::vector<Record> parallel_records(std::size_t count, unsigned jobs, const std::function<Record(std::size_t)>& f) {
  std::vector<Record> out(count);
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < count;) {
      try {
        out[i] = f(i);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(jobs, count); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

Record make(std::string item, Verdict v, const json& detail) { return Record{std::move(item), v, detail.dump()}; }

std::string coords_string(const FpVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i && v.size() > 1) s += ' ';
    s += std::to_string(int(v[i]));
  }
  return s;
}

json matrices_json(const FiniteGroup& g, std::span<const UniTriMatrix> images) {
  json out = json::array();
  for (Elem s : g.generators()) out.push_back(format_matrix_literal(images[s]));
  return out;
}

std::string solve_word(SolveVerdict v) { return to_string(v); }

Verdict combine(bool ok, bool over_budget) {
  if (over_budget) return Verdict::BudgetExceeded;
  return ok ? Verdict::Holds : Verdict::Fails;
}

// --- cochain-axioms ---------------------------------------------------------------------

Cochain random_cochain(const FiniteGroup& g, std::uint32_t p, std::uint32_t d, std::mt19937_64& rng) {
  FpVector v(Cochain::dimension(g.order(), d));
  for (auto& r : v) r = Residue(rng() % p);
  return Cochain(g, p, d, std::move(v));
}

std::vector<Record> suite_cochain_axioms(const RunConfig& cfg) {
  const FiniteGroup g = resolve_group(cfg.group);
  const std::uint32_t p = cfg.p;
  const std::uint64_t samples = cfg.samples ? cfg.samples : 100;
  std::vector<Record> out;
  for (std::uint32_t d = 0; d <= 1; ++d) {
    std::mt19937_64 rng(cfg.seed * 1000 + d);
    std::uint64_t failures = 0;
    for (std::uint64_t s = 0; s < samples; ++s)
      failures += !coboundary(coboundary(random_cochain(g, p, d, rng))).is_zero();
    out.push_back(make("dd=0 degree " + std::to_string(d), failures ? Verdict::Fails : Verdict::Holds,
                       {{"samples", samples}, {"failures", failures}}));
  }
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> degrees{{0, 1}, {1, 0}, {1, 1}, {0, 2}, {2, 0}};
  for (auto [r, s] : degrees) {
    std::mt19937_64 rng(cfg.seed * 1000 + 10 * r + s + 7);
    std::uint64_t failures = 0;
    for (std::uint64_t t = 0; t < samples; ++t) {
      Cochain a = random_cochain(g, p, r, rng), b = random_cochain(g, p, s, rng);
      Cochain lhs = coboundary(cup(a, b));
      Cochain second = cup(a, coboundary(b));
      Cochain rhs = cup(coboundary(a), b) + (r % 2 ? -second : second);
      failures += !(lhs == rhs);
    }
    out.push_back(make("leibniz degrees " + std::to_string(r) + "," + std::to_string(s),
                       failures ? Verdict::Fails : Verdict::Holds, {{"samples", samples}, {"failures", failures}}));
  }
  return out;
}

// --- dwyer --------------------------------------------------------------------------------

json massey_json(const MasseySet& s) {
  return {{"defined", s.defined()}, {"vanishes", s.vanishes()}, {"values", s.values.size()}, {"nodes", s.nodes}};
}

std::vector<Record> suite_dwyer(const RunConfig& cfg) {
  const FiniteGroup g = resolve_group(cfg.group);
  const Cohomology h(g, cfg.p);
  const auto tuples = h1_tuples(h, cfg.n);
  const bool exhaustive = g.order() <= 8 && cfg.n <= 4;
  return parallel_records(tuples.size(), cfg.jobs, [&](std::size_t t) {
    MasseyQuery q{g, cfg.p, tuples[t]};
    SearchBudget budget{cfg.budget};
    json d;
    bool over = false;
    std::optional<bool> ex_vanish, ex_defined;
    std::size_t ex_values = 0;
    if (exhaustive) {
      auto ex = massey_product_set(q, h, MasseyStrategy::ExhaustiveCochain, &budget);
      over |= ex.status == SearchStatus::BudgetExceeded;
      d["exhaustive"] = massey_json(ex);
      ex_vanish = ex.vanishes();
      ex_defined = ex.defined();
      ex_values = ex.values.size();
    } else {
      d["exhaustive"] = nullptr;
    }
    auto hl = massey_product_set(q, h, MasseyStrategy::HomLift, &budget);
    over |= hl.status == SearchStatus::BudgetExceeded;
    d["hom_lift"] = massey_json(hl);

    auto full = solve_dwyer(q, DwyerTarget::Full, &budget);
    auto mod_z = solve_dwyer(q, DwyerTarget::ModZ, &budget);
    auto mod_p = solve_dwyer(q, DwyerTarget::ModP, &budget);
    const auto cups = consecutive_cups_zero(q, h, &budget);
    for (const auto* r : {&full, &mod_z, &mod_p}) over |= r->verdict == SolveVerdict::BudgetExceeded;
    over |= cups.lift_status == SearchStatus::BudgetExceeded;
    d["solver"] = solve_word(full.verdict);
    d["solver_nodes"] = full.nodes;
    d["mod_z"] = solve_word(mod_z.verdict);
    d["mod_p"] = solve_word(mod_p.verdict);
    d["cups_zero"] = cups.direct;
    d["cups_lift"] = cups.lift;
    if (full.verdict == SolveVerdict::Solved) d["witness"] = matrices_json(g, full.images);
    const bool solved = full.verdict == SolveVerdict::Solved;
    bool ok = hl.vanishes() == solved;
    if (ex_vanish) ok = ok && *ex_vanish == solved && *ex_defined == hl.defined() && hl.values.size() == ex_values;
    ok = ok && hl.defined() == (mod_z.verdict == SolveVerdict::Solved);
    ok = ok && cups.direct == (mod_p.verdict == SolveVerdict::Solved) && cups.agree();
    return make("a=" + tuple_label(h, tuples[t]), combine(ok, over), d);
  });
}

// --- twisting -----------------------------------------------------------------------------

std::vector<Record> suite_twisting(const RunConfig& cfg) {
  const FiniteGroup g = resolve_group(cfg.group);
  const std::uint32_t m = cfg.n + 1, k = cfg.k;
  if (k < 2 || k + 1 > cfg.n)
    fail(ErrorKind::BadParameter, "twisting needs 2 <= k <= n-1 (psi into Q_{k,n+1}), got k=" + std::to_string(k));
  const Cohomology h(g, cfg.p);
  const auto& q = materialized_fiber_quotient(k, m, cfg.p);
  auto homs = all_homs(g, q.table());
  std::vector<std::size_t> chosen(homs.size());
  for (std::size_t i = 0; i < chosen.size(); ++i) chosen[i] = i;
  if (cfg.samples && cfg.samples < homs.size()) {
    std::mt19937_64 rng(cfg.seed);
    std::vector<std::size_t> pick;
    std::sample(chosen.begin(), chosen.end(), std::back_inserter(pick), cfg.samples, rng);
    chosen = std::move(pick);
  }
  const auto chis = h.h1_elements();
  return parallel_records(chosen.size(), cfg.jobs, [&](std::size_t i) {
    const GroupHom& psi = homs[chosen[i]];
    auto images = fiber_images(psi, q);
    json failing = json::array();
    for (const auto& chi : chis) {
      // verify_twisting takes the source index, one below the quotient index
      auto r = verify_twisting(g, k - 1, m, images, chi, h);
      if (!r.holds) failing.push_back(coords_string(h.h1_coordinates(chi)));
    }
    json gens = json::array();
    for (Elem s : g.generators()) gens.push_back(psi(s));
    return make("psi#" + std::to_string(chosen[i]), failing.empty() ? Verdict::Holds : Verdict::Fails,
                {{"psi_generators", gens}, {"chi_checked", chis.size()}, {"failing_chi", failing}});
  });
}

// --- strong vanishing -----------------------------------------------------------------------

std::vector<Record> suite_strong_vanishing(const RunConfig& cfg) {
  const FiniteGroup g = resolve_group(cfg.group);
  const Cohomology h(g, cfg.p);
  if (cfg.n < 3) fail(ErrorKind::BadParameter, "strong vanishing starts at n = 3");
  return parallel_records(cfg.n - 2, cfg.jobs, [&](std::size_t idx) {
    const std::uint32_t n = std::uint32_t(idx + 3);
    SearchBudget budget{cfg.budget};
    std::uint64_t cups_zero = 0, vanishing = 0;
    std::optional<std::string> counterexample;
    bool over = false;
    for (const auto& tuple : h1_tuples(h, n)) {
      bool cz = true;
      for (std::size_t i = 0; i + 1 < tuple.size() && cz; ++i) cz = h.is_coboundary(cup(tuple[i], tuple[i + 1]));
      if (!cz) continue;
      ++cups_zero;
      auto sol = solve_dwyer(MasseyQuery{g, cfg.p, tuple}, DwyerTarget::Full, &budget);
      if (sol.verdict == SolveVerdict::BudgetExceeded) {
        over = true;
        break;
      }
      if (sol.verdict == SolveVerdict::Solved)
        ++vanishing;
      else if (!counterexample)
        counterexample = tuple_label(h, tuple);
    }
    json d{{"n", n}, {"cups_zero", cups_zero}, {"vanishing", vanishing}, {"nodes", budget.used}};
    d["counterexample"] = counterexample ? json(*counterexample) : json(nullptr);
    return make("n=" + std::to_string(n), combine(!counterexample, over), d);
  });
}

// --- easy vanishing -------------------------------------------------------------------------

std::vector<Record> suite_easy_vanishing(const RunConfig& cfg) {
  const FiniteGroup g = resolve_group(cfg.group);
  const Cohomology h(g, cfg.p);
  if (h.h2_dim() != 0)
    return {make("H^2 = 0", Verdict::NotApplicable, {{"h2_dim", h.h2_dim()}})};
  const auto tuples = h1_tuples(h, cfg.n);
  return parallel_records(tuples.size(), cfg.jobs, [&](std::size_t t) {
    auto drill = drill_tuple(MasseyQuery{g, cfg.p, tuples[t]}, h);
    json steps = json::array();
    bool ok = drill.verified;
    for (const auto& s : drill.steps) {
      steps.push_back({{"position", std::to_string(s.i) + "," + std::to_string(s.j)},
                       {"cocycle_zero", s.cocycle_zero},
                       {"class_zero", s.class_zero}});
      ok = ok && s.class_zero;
    }
    json d{{"steps", steps}, {"verified", drill.verified}};
    if (drill.verified) d["solution"] = matrices_json(g, drill.solution);
    return make("a=" + tuple_label(h, tuples[t]), ok ? Verdict::Holds : Verdict::Fails, d);
  });
}

// --- case-by-case and block lifts -------------------------------------------------------------

std::vector<Record> suite_case_by_case(const RunConfig&) {
  std::vector<Record> out;
  auto audit = case_by_case_audit({1, 1});
  for (std::size_t i = 0; i < audit.preimages.size(); ++i) {
    const auto o = audit.orders[i];
    out.push_back(make("preimage " + format_matrix_literal(audit.preimages[i]),
                       o != 2 && audit.preimages.size() == 2 ? Verdict::Holds : Verdict::Fails,
                       {{"order", o}, {"e13", int(audit.preimages[i].at(1, 3))}, {"preimages", audit.preimages.size()}}));
  }
  if (audit.preimages.empty()) out.push_back(make("preimages of (1,1)", Verdict::Fails, {{"preimages", 0}}));
  return out;
}

std::vector<Record> suite_block_lift(const RunConfig& cfg) {
  const FiniteGroup g = build_cyclic(2);
  const Cohomology h(g, 2);
  if (cfg.n < 3) fail(ErrorKind::BadParameter, "block-lift sweeps start at n = 3");
  return parallel_records(cfg.n - 2, cfg.jobs, [&](std::size_t idx) {
    const std::uint32_t n = std::uint32_t(idx + 3);
    SearchBudget budget{cfg.budget};
    std::uint64_t valid = 0, adjacent = 0, problems = 0;
    bool over = false;
    for (const auto& tuple : h1_tuples(h, n)) {
      SignPattern pattern;
      for (const auto& a : tuple) pattern.push_back(a.at(1));
      bool cz = true;
      for (std::size_t i = 0; i + 1 < tuple.size(); ++i) cz = cz && h.is_coboundary(cup(tuple[i], tuple[i + 1]));
      const bool adj = has_adjacent_ones(pattern);
      MasseyQuery q{g, 2, tuple};
      if (cz == adj) ++problems;  // cups vanish exactly on patterns without adjacent ones
      if (!adj) {
        ++valid;
        UniTriMatrix a = block_lift(pattern);
        std::vector<UniTriMatrix> img{UniTriMatrix(n + 1, 2), a};
        if (!(a * a).is_identity() || phi_map(a) != pattern || !solves_dwyer(q, img)) ++problems;
        auto sol = solve_dwyer(q, DwyerTarget::Full, &budget);
        over |= sol.verdict == SolveVerdict::BudgetExceeded;
        if (sol.verdict == SolveVerdict::NoSolution) ++problems;
      } else {
        ++adjacent;
        auto real = is_real_dwyer(q, &budget);
        if (real.real || real.witness != Elem{1}) ++problems;
        auto sol = solve_dwyer(q, DwyerTarget::Full, &budget);
        over |= sol.verdict == SolveVerdict::BudgetExceeded;
        if (sol.verdict == SolveVerdict::Solved) ++problems;
      }
    }
    return make("n=" + std::to_string(n), combine(problems == 0, over),
                {{"no_adjacent_ones", valid}, {"adjacent_ones", adjacent}, {"problems", problems}, {"nodes", budget.used}});
  });
}

// --- structure of U_m(p) -----------------------------------------------------------------------

std::vector<Record> suite_fiber_quotient(const RunConfig& cfg) {
  const std::uint32_t m = cfg.m, p = cfg.p;
  if (m < 3) fail(ErrorKind::BadParameter, "fiber-quotient needs m >= 3");
  const auto& u = materialized_quotient(m, p);
  const FiniteGroup& ut = u.table();
  std::vector<UniTriMatrix> all;
  for (Elem x = 0; x < ut.order(); ++x) all.push_back(u.decode(x));
  std::vector<UniTriMatrix> gens;
  for (Elem s : ut.generators()) gens.push_back(u.decode(s));

  std::vector<std::function<Record()>> items;
  for (std::uint32_t k = 1; k + 1 <= m; ++k) {
    items.emplace_back([&, k] {
      NamedSubgroup mk(m, p, SubgroupKind::M, k);
      auto members = mk.elements();
      bool normal = true;
      for (const auto& x : members)
        for (const auto& s : gens) normal = normal && mk.contains(s * x * s.inverse());
      bool kernels = true;
      std::uint64_t count = 0;
      for (const auto& x : all) {
        const bool in = mk.contains(x);
        count += in;
        kernels = kernels && in == (block_upper_left(x, m - 1).is_identity() && block_lower_right(x, m + 1 - k).is_identity());
      }
      bool nested = true;
      if (k + 2 <= m) {
        NamedSubgroup next(m, p, SubgroupKind::M, k + 1);
        for (const auto& x : members) nested = nested && next.contains(x);
      }
      // U/M_{k,m} -> Q_{k,m}: homomorphism, onto, kernel M_{k,m}
      FiberQuotient q(k, m, p);
      std::vector<char> hit(q.order(), 0);
      bool hom = true, kernel = true;
      for (const auto& x : all) {
        auto img = q.project(x);
        hit[q.encode(img)] = 1;
        kernel = kernel && ((img == q.identity()) == mk.contains(x));
      }
      for (const auto& x : all)
        for (const auto& s : gens) hom = hom && q.project(x * s) == q.mul(q.project(x), q.project(s));
      const bool onto = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
      const bool order_ok = std::uint64_t(members.size()) * q.order() == ut.order() && count == members.size();
      const bool ok = normal && kernels && nested && hom && onto && kernel && order_ok;
      return make("M_{" + std::to_string(k) + "," + std::to_string(m) + "}", ok ? Verdict::Holds : Verdict::Fails,
                  {{"order", members.size()},
                   {"normal", normal},
                   {"equals_block_kernels", kernels},
                   {"inside_next", nested},
                   {"quotient_order", q.order()},
                   {"projection_hom", hom},
                   {"projection_onto", onto},
                   {"projection_kernel", kernel}});
    });
  }
  for (std::uint32_t k = 1; k + 2 <= m; ++k) {
    items.emplace_back([&, k] {
      const auto& q = materialized_fiber_quotient(k, m, p);
      const FiniteGroup& qt = q.table();
      const FiberElem lower_identity = FiberQuotient(k + 1, m, p).identity();
      std::vector<FiberElem> kernel;
      for (Elem x = 0; x < qt.order(); ++x) {
        auto e = q.decode(x);
        if (q.rho(e) == lower_identity) kernel.push_back(e);
      }
      bool additive = true, central = true;
      for (const auto& a : kernel)
        for (const auto& b : kernel) additive = additive && q.iota(q.mul(a, b)) == (q.iota(a) + q.iota(b)) % p;
      for (const auto& a : kernel)
        for (Elem s : qt.generators()) central = central && q.mul(a, q.decode(s)) == q.mul(q.decode(s), a);
      bool hom = true;
      FiberQuotient lower(k + 1, m, p);
      for (Elem x = 0; x < qt.order(); ++x)
        for (Elem s : qt.generators())
          hom = hom && q.rho(q.mul(q.decode(x), q.decode(s))) == lower.mul(q.rho(q.decode(x)), q.rho(q.decode(s)));
      const bool ok = kernel.size() == p && additive && central && hom;
      return make("Ker rho_{" + std::to_string(k) + "," + std::to_string(m) + "}", ok ? Verdict::Holds : Verdict::Fails,
                  {{"kernel_order", kernel.size()}, {"iota_additive", additive}, {"central", central}, {"rho_hom", hom}});
    });
  }
  items.emplace_back([&] {
    NamedSubgroup z(m, p, SubgroupKind::Z), pp(m, p, SubgroupKind::P);
    auto ze = z.elements(), pe = pp.elements();
    bool inside = true;
    for (const auto& x : ze) inside = inside && pp.contains(x);
    return make("Z_m inside P_m", inside ? Verdict::Holds : Verdict::Fails,
                {{"z_order", ze.size()}, {"p_order", pe.size()}, {"equal", ze.size() == pe.size() && inside}});
  });
  return parallel_records(items.size(), cfg.jobs, [&](std::size_t i) { return items[i](); });
}

std::uint64_t binomial(std::uint64_t a, std::uint64_t b) {
  if (b > a) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

std::vector<Record> suite_filtration(const RunConfig& cfg) {
  if (cfg.n < 2) fail(ErrorKind::BadParameter, "filtration needs n >= 2");
  return parallel_records(cfg.n - 1, cfg.jobs, [&](std::size_t idx) {
    const std::uint32_t n = std::uint32_t(idx + 2), m = n + 1, p = cfg.p;
    auto cs = central_series_ker_phi(n, p);
    const std::size_t len = cs.length();
    bool normal = true, central = true;
    std::vector<UniTriMatrix> gens;
    for (std::uint32_t i = 1; i < m; ++i) {
      UniTriMatrix e(m, p);
      e.set(i, i + 1, 1);
      gens.push_back(e);
    }
    for (std::size_t t = 1; t <= len; ++t) {
      normal = normal && is_normal_pattern(m, cs.subgroup(t));
      // the new position commutes with everything modulo N_{t-1}
      UniTriGroup below = cs.quotient(t - 1);
      UniTriMatrix z(m, p);
      z.set(cs.positions[t - 1].first, cs.positions[t - 1].second, 1);
      for (const auto& s : gens) central = central && below.mul(z, s) == below.mul(s, z);
    }
    const bool whole = cs.subgroup(len) == positions_at_distance_at_least(m, 2);
    const std::uint64_t nc2 = binomial(n, 2), n1c2 = binomial(n - 1, 2);
    const bool ok = normal && central && whole && len == nc2;
    return make("n=" + std::to_string(n), ok ? Verdict::Holds : Verdict::Fails,
                {{"length", len},
                 {"n_choose_2", nc2},
                 {"n_minus_1_choose_2", n1c2},
                 {"matches_n_choose_2", len == nc2},
                 {"matches_n_minus_1_choose_2", len == n1c2},
                 {"steps_normal", normal},
                 {"steps_central", central},
                 {"ends_at_kernel", whole}});
  });
}

// --- central step problems ------------------------------------------------------------------

std::vector<std::string> central_step_groups(std::uint32_t p) {
  if (p == 2) return {"Z2", "Z4", "V4"};
  if (p == 3) return {"Z3", "Z3xZ3"};
  return {"Z" + std::to_string(p)};
}

struct StepProblem {
  std::string name;
  FiniteGroup b, a;
  GroupHom alpha;
  std::optional<Elem> generator;  // iota-normalized kernel generator
};

std::vector<StepProblem> central_step_problems(std::uint32_t m, std::uint32_t p) {
  std::vector<StepProblem> out;
  const std::uint32_t n = m - 1;
  auto cs = central_series_ker_phi(n, p);
  for (std::size_t t = 1; t <= cs.length(); ++t) {
    const auto& hi = materialized_quotient(m, p, cs.subgroup(t - 1));
    const auto& lo = materialized_quotient(m, p, cs.subgroup(t));
    out.push_back({"U/N_" + std::to_string(t - 1) + " -> U/N_" + std::to_string(t), hi.table(), lo.table(),
                   projection_hom(hi, lo), std::nullopt});
  }
  for (std::uint32_t k = 1; k + 2 <= m; ++k) {
    const auto& top = materialized_fiber_quotient(k, m, p);
    const auto& low = materialized_fiber_quotient(k + 1, m, p);
    std::vector<Elem> img;
    for (Elem x = 0; x < top.table().order(); ++x) img.push_back(low.encode(top.rho(top.decode(x))));
    out.push_back({"rho_{" + std::to_string(k) + "," + std::to_string(m) + "}", top.table(), low.table(),
                   GroupHom(top.table(), low.table(), std::move(img)), top.encode(top.kernel_element(1))});
  }
  return out;
}

std::vector<Record> suite_central_steps(const RunConfig& cfg) {
  const std::uint32_t m = cfg.m, p = cfg.p;
  if (m < 3) fail(ErrorKind::BadParameter, "central-steps needs m >= 3");
  const auto problems = central_step_problems(m, p);
  const auto groups = central_step_groups(p);
  std::vector<std::pair<std::size_t, std::size_t>> items;
  for (std::size_t i = 0; i < problems.size(); ++i)
    for (std::size_t j = 0; j < groups.size(); ++j) items.emplace_back(i, j);
  return parallel_records(items.size(), cfg.jobs, [&](std::size_t idx) {
    const auto& pr = problems[items[idx].first];
    const FiniteGroup g = fixture_group(groups[items[idx].second]);
    const Cohomology h(g, p);
    SearchBudget budget{cfg.budget};
    std::uint64_t homs = 0, solvable = 0, disagreements = 0, policy_disagreements = 0;
    bool over = false;
    enumerate_homs(g, pr.a, {}, [&](const GroupHom& phi) {
      ++homs;
      EmbeddingProblem e{g, pr.a, pr.b, pr.alpha, phi};
      auto data = central_data(e, pr.generator);
      auto c1 = obstruction(e, data, h, LiftPolicy::Smallest);
      auto c2 = obstruction(e, data, h, LiftPolicy::Largest);
      auto s = solve(e, &budget);
      if (s.verdict == SolveVerdict::BudgetExceeded) {
        over = true;
        return false;
      }
      const bool solved = s.verdict == SolveVerdict::Solved;
      solvable += solved;
      if (solved != c1.is_zero()) ++disagreements;
      if (!(c1 == c2)) ++policy_disagreements;
      return true;
    });
    return make(pr.name + " over " + groups[items[idx].second],
                combine(disagreements == 0 && policy_disagreements == 0, over),
                {{"homs", homs},
                 {"solvable", solvable},
                 {"disagreements", disagreements},
                 {"policy_disagreements", policy_disagreements},
                 {"nodes", budget.used}});
  });
}

// --- demushkin ------------------------------------------------------------------------------

std::vector<Record> suite_demushkin(const RunConfig& cfg) {
  const FiniteGroup g = resolve_group(cfg.group);
  const Cohomology h(g, cfg.p);
  auto check = demushkin_check(g, cfg.p);
  std::vector<Record> out;
  json form = nullptr;
  if (check.form) {
    form = json::array();
    for (const auto& row : check.form->gram) form.push_back(coords_string(row));
  }
  out.push_back(make("cup form", Verdict::Holds,
                     {{"h1_dim", check.dim_h1},
                      {"h2_dim", check.dim_h2},
                      {"gram", form},
                      {"nondegenerate", check.nondegenerate},
                      {"demushkin", check.verdict}}));
  const auto tuples = h1_tuples(h, cfg.n);
  auto rest = parallel_records(tuples.size(), cfg.jobs, [&](std::size_t t) {
    MasseyQuery q{g, cfg.p, tuples[t]};
    SearchBudget budget{cfg.budget};
    bool in_domain = check.verdict;
    for (std::size_t i = 0; i < tuples[t].size() && in_domain; ++i) in_domain = !tuples[t][i].is_zero();
    for (std::size_t i = 0; i + 1 < tuples[t].size() && in_domain; ++i)
      in_domain = h.is_coboundary(cup(tuples[t][i], tuples[t][i + 1]));
    auto d = descend(q, h, &budget);
    auto blind = solve_dwyer(q, DwyerTarget::Full, &budget);
    const bool over = d.status == DescentStatus::BudgetExceeded || blind.verdict == SolveVerdict::BudgetExceeded;
    const bool solved = d.status == DescentStatus::Solved;
    json steps = json::array();
    for (const auto& s : d.steps) {
      steps.push_back({{"n", s.n},
                       {"k", s.k},
                       {"obstruction_zero", std::all_of(s.obstruction.begin(), s.obstruction.end(), [](Residue r) { return r == 0; })},
                       {"chi", s.chi ? json(coords_string(*s.chi)) : json(nullptr)}});
    }
    json detail{{"descent", solved ? "solved" : (over ? "budget-exceeded" : "stuck")},
                {"blind", solve_word(blind.verdict)},
                {"in_domain", in_domain},
                {"steps", steps}};
    if (!solved && d.status == DescentStatus::Stuck) detail["stuck_at"] = {d.stuck_n, d.stuck_k};
    if (solved) detail["solution"] = matrices_json(g, d.solution);
    Verdict v;
    if (over)
      v = Verdict::BudgetExceeded;
    else if (solved)
      v = d.verified && blind.verdict == SolveVerdict::Solved ? Verdict::Holds : Verdict::Fails;
    else if (in_domain)
      v = Verdict::Fails;
    else
      v = blind.verdict == SolveVerdict::Solved ? Verdict::NotApplicable : Verdict::Holds;
    return make("a=" + tuple_label(h, tuples[t]), v, detail);
  });
  out.insert(out.end(), std::make_move_iterator(rest.begin()), std::make_move_iterator(rest.end()));
  return out;
}

struct SuiteInfo {
  const char* name;
  std::vector<std::string> flags;
  std::function<std::vector<Record>(const RunConfig&)> run;
};

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> table{
      {"cochain-axioms", {"group", "p", "samples", "seed"}, suite_cochain_axioms},
      {"dwyer", {"group", "p", "n", "budget"}, suite_dwyer},
      {"twisting", {"group", "p", "n", "k", "samples", "seed"}, suite_twisting},
      {"strong-vanishing", {"group", "p", "n", "budget"}, suite_strong_vanishing},
      {"easy-vanishing", {"group", "p", "n"}, suite_easy_vanishing},
      {"case-by-case", {}, suite_case_by_case},
      {"block-lift", {"n", "budget"}, suite_block_lift},
      {"fiber-quotient", {"m", "p"}, suite_fiber_quotient},
      {"filtration", {"n", "p"}, suite_filtration},
      {"central-steps", {"m", "p", "budget"}, suite_central_steps},
      {"demushkin", {"group", "p", "n", "budget"}, suite_demushkin},
  };
  return table;
}

const SuiteInfo& find_suite(const std::string& name) {
  for (const auto& s : suites())
    if (name == s.name) return s;
  fail(ErrorKind::BadParameter, "unknown suite '" + name + "'");
}

std::string flag_value(const std::string& flag, const RunConfig& cfg) {
  if (flag == "group") return cfg.group;
  if (flag == "p") return std::to_string(cfg.p);
  if (flag == "n") return std::to_string(cfg.n);
  if (flag == "m") return std::to_string(cfg.m);
  if (flag == "k") return std::to_string(cfg.k);
  if (flag == "budget") return std::to_string(cfg.budget);
  if (flag == "seed") return std::to_string(cfg.seed);
  if (flag == "samples") return std::to_string(cfg.samples);
  return "";
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::filesystem::path cache_path(const std::string& suite, const RunConfig& cfg) {
  const auto& info = find_suite(suite);
  std::string key = std::string(kReportSchema) + '|' + kVersion + '|' + canonical_command(suite, cfg);
  if (std::find(info.flags.begin(), info.flags.end(), "group") != info.flags.end())
    key += "|" + std::to_string(resolve_group(cfg.group).fingerprint());
  std::ostringstream name;
  name << std::hex << fnv1a(key) << ".jsonl";
  return cfg.cache_dir / name.str();
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& s : suites()) out.emplace_back(s.name);
  return out;
}

std::string canonical_command(const std::string& suite, const RunConfig& cfg) {
  const auto& info = find_suite(suite);
  std::string out = "verify " + suite;
  for (const auto& f : info.flags) out += " --" + f + " " + flag_value(f, cfg);
  return out;
}

Report run_suite(const std::string& suite, const RunConfig& cfg) {
  cfg.validate();
  const auto& info = find_suite(suite);
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.command = canonical_command(suite, cfg);
  r.suite = suite;
  const bool caching = cfg.use_cache && !cfg.cache_dir.empty();
  std::filesystem::path path;
  if (caching) {
    path = cache_path(suite, cfg);
    std::ifstream in(path);
    if (in) {
      try {
        Report cached = read_records(in);
        if (cached.command == r.command) {
          r.records = std::move(cached.records);
          r.from_cache = true;
        }
      } catch (const Error&) {
        // unreadable entry: recompute and overwrite
      }
    }
  }
  if (!r.from_cache) {
    r.records = info.run(cfg);
    if (caching) {
      std::error_code ec;
      std::filesystem::create_directories(cfg.cache_dir, ec);
      auto tmp = path;
      tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
      {
        std::ofstream out(tmp);
        if (out) write_records(out, r);
      }
      std::filesystem::rename(tmp, path, ec);
      if (ec) std::filesystem::remove(tmp, ec);
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<std::vector<Cochain>> h1_tuples(const Cohomology& h, std::uint32_t n) {
  const auto els = h.h1_elements();
  std::size_t total = 1;
  for (std::uint32_t i = 0; i < n; ++i) total *= els.size();
  std::vector<std::vector<Cochain>> out;
  out.reserve(total);
  for (std::size_t t = 0; t < total; ++t) {
    std::vector<Cochain> tuple(n, els[0]);
    std::size_t v = t;
    for (std::uint32_t i = n; i-- > 0;) {
      tuple[i] = els[v % els.size()];
      v /= els.size();
    }
    out.push_back(std::move(tuple));
  }
  return out;
}

std::string tuple_label(const Cohomology& h, const std::vector<Cochain>& classes) {
  std::string s = "(";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i) s += ",";
    auto c = h.h1_coordinates(classes[i]);
    for (Residue r : c) s += std::to_string(int(r));
    if (c.empty()) s += "-";
  }
  return s + ")";
}

}  // namespace masseylab

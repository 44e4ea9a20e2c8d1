#include "doctest.h"
#include "generators.hpp"
#include "masseylab/embedding.hpp"
#include "masseylab/error.hpp"
#include "masseylab/layered_lift.hpp"
#include "masseylab/massey.hpp"
#include "masseylab/suites.hpp"
#include "masseylab/verification.hpp"

using namespace masseylab;

namespace {

MasseyQuery query(const std::string& group, std::uint32_t p, std::initializer_list<std::size_t> element_indices) {
  auto g = fixture_group(group);
  Cohomology h(g, p);
  auto els = h.h1_elements();
  MasseyQuery q{g, p, {}};
  for (auto i : element_indices) q.classes.push_back(els.at(i));
  return q;
}

}  // namespace

TEST_CASE("n = 2 systems and the cup singleton") {
  for (auto [name, p] : {std::pair{"Z2", 2u}, {"V4", 2u}, {"Z3xZ3", 3u}, {"Q8", 2u}}) {
    auto g = fixture_group(name);
    Cohomology h(g, p);
    for (const auto& a : h.h1_elements())
      for (const auto& b : h.h1_elements()) {
        DefiningSystem ds(g, p, 2);
        ds.set(1, 2, a);
        ds.set(2, 3, b);
        CHECK(is_defining_system(ds));
        CHECK(massey_value(ds, h) == h.class_of(cup(a, b)));
        auto set = massey_product_set(MasseyQuery{g, p, {a, b}}, h, MasseyStrategy::HomLift);
        REQUIRE(set.values.size() == 1);
        CHECK(set.values[0] == h.class_of(cup(a, b)));
      }
  }
}

TEST_CASE("systems read off homomorphisms are defining systems") {
  for (const char* name : {"Z2", "Z4", "V4"}) {
    auto g = fixture_group(name);
    const auto& u = materialized_quotient(4, 2);
    std::size_t count = 0;
    for (const auto& psi : all_homs(g, u.table())) {
      auto ds = defining_system_from_hom(psi, u);
      CHECK(is_defining_system(ds));
      ++count;
    }
    CHECK(count > 0);
  }
}

TEST_CASE("the negative sign convention is forced at p = 3") {
  auto z3 = fixture_group("Z3");
  const auto& u = materialized_quotient(4, 3);
  bool positive_fails = false;
  for (const auto& psi : all_homs(z3, u.table())) {
    CHECK(is_defining_system(defining_system_from_hom(psi, u, SignConvention::Negative)));
    positive_fails = positive_fails || !is_defining_system(defining_system_from_hom(psi, u, SignConvention::Positive));
  }
  CHECK(positive_fails);
}

TEST_CASE("a perturbed entry breaks the system with a witness") {
  // over Z/2 every 1-cochain is closed mod 2, so perturb over Z/4 instead
  auto z4 = fixture_group("Z4");
  UniTriMatrix j(4, 2);
  for (std::uint32_t i = 1; i < 4; ++i) j.set(i, i + 1, 1);
  std::vector<UniTriMatrix> images{UniTriMatrix(4, 2)};
  for (int k = 1; k < 4; ++k) images.push_back(images.back() * j);
  REQUIRE(z4.generators()[0] == 1);
  auto ds = defining_system_from_images(z4, images);
  REQUIRE(is_defining_system(ds));
  for (const auto& c : ds.classes()) CHECK(!c.is_zero());
  auto broken = ds.entry(1, 3);
  broken.set(std::vector<Elem>{1}, Residue(1 - broken.at(1)));
  ds.set(1, 3, broken);
  auto w = defining_system_failure(ds);
  REQUIRE(w);
  CHECK(w->i == 1);
  CHECK(w->j == 3);
  CHECK_THROWS_AS(massey_cocycle(ds), Error);
}

TEST_CASE("triple product over Z/4") {
  auto q = query("Z4", 2, {1, 1, 1});
  Cohomology h(q.group, 2);
  auto ex = massey_product_set(q, h, MasseyStrategy::ExhaustiveCochain);
  auto hl = massey_product_set(q, h, MasseyStrategy::HomLift);
  CHECK(ex.defined());
  CHECK(ex.vanishes());
  REQUIRE(ex.values.size() == hl.values.size());
  for (std::size_t i = 0; i < ex.values.size(); ++i) CHECK(ex.values[i] == hl.values[i]);
}

TEST_CASE("fourfold product over Z/4 is defined but does not vanish") {
  auto q = query("Z4", 2, {1, 1, 1, 1});
  Cohomology h(q.group, 2);
  auto ex = massey_product_set(q, h, MasseyStrategy::ExhaustiveCochain);
  auto hl = massey_product_set(q, h, MasseyStrategy::HomLift);
  CHECK(ex.defined());
  CHECK_FALSE(ex.vanishes());
  CHECK_FALSE(hl.vanishes());
  CHECK(solve_dwyer(q).verdict == SolveVerdict::NoSolution);
}

TEST_CASE("Z/2 examples") {
  Cohomology h(fixture_group("Z2"), 2);
  auto aaa = query("Z2", 2, {1, 1, 1});
  CHECK_FALSE(massey_product_set(aaa, h, MasseyStrategy::HomLift).defined());
  auto a0a = query("Z2", 2, {1, 0, 1});
  CHECK(massey_product_set(a0a, h, MasseyStrategy::HomLift).vanishes());
  CHECK(consecutive_cups_zero(a0a, h).direct);
  CHECK(consecutive_cups_zero(query("Z2", 2, {0, 0, 0}), h).direct);
  auto aa = consecutive_cups_zero(query("Z2", 2, {1, 1}), h);
  CHECK_FALSE(aa.direct);
  CHECK(aa.agree());
}

TEST_CASE("exhaustive strategy refuses large instances") {
  auto q = query("D4", 2, {1, 1, 1, 1, 1});
  Cohomology h(q.group, 2);
  CHECK_THROWS_AS(massey_product_set(q, h, MasseyStrategy::ExhaustiveCochain), Error);
}

TEST_CASE("query validation") {
  auto z2 = fixture_group("Z2");
  Cochain not_hom(z2, 3, 1);
  not_hom.set(std::vector<Elem>{1}, 1);
  CHECK_THROWS_AS((MasseyQuery{z2, 3, {not_hom, not_hom}}.validate()), Error);
  CHECK_THROWS_AS((MasseyQuery{z2, 2, {Cochain(z2, 2, 1)}}.validate()), Error);
}

TEST_CASE("property: both strategies give the same value sets") {
  testing::Gen gen(4);
  for (auto [name, p] : {std::pair{"V4", 2u}, {"Z4", 2u}, {"Z3", 3u}, {"S3", 2u}}) {
    auto g = fixture_group(name);
    Cohomology h(g, p);
    auto els = h.h1_elements();
    for (int trial = 0; trial < 8; ++trial) {
      MasseyQuery q{g, p, {}};
      for (int i = 0; i < 3; ++i) q.classes.push_back(els[gen.below(els.size())]);
      auto v = massey_product_set(q, h, MasseyStrategy::ExhaustiveCochain);
      auto w = massey_product_set(q, h, MasseyStrategy::HomLift);
      REQUIRE(v.values.size() == w.values.size());
      for (std::size_t i = 0; i < v.values.size(); ++i) CHECK(v.values[i] == w.values[i]);
    }
  }
}

TEST_CASE("Dwyer correspondence on small sweeps") {
  for (auto [name, p, n] : {std::tuple{"Z2", 2u, 3u}, {"Z4", 2u, 3u}, {"V4", 2u, 3u}, {"Z3", 3u, 3u}}) {
    auto g = fixture_group(name);
    Cohomology h(g, p);
    for (const auto& tuple : h1_tuples(h, n)) {
      MasseyQuery q{g, p, tuple};
      auto set = massey_product_set(q, h, MasseyStrategy::HomLift);
      auto full = solve(build_dwyer_problem(q));
      auto modz = solve(build_dwyer_problem(q, DwyerTarget::ModZ));
      auto modp = solve(build_dwyer_problem(q, DwyerTarget::ModP));
      CAPTURE(name);
      CAPTURE(tuple_label(h, tuple));
      CHECK(set.vanishes() == (full.verdict == SolveVerdict::Solved));
      CHECK(set.defined() == (modz.verdict == SolveVerdict::Solved));
      CHECK(consecutive_cups_zero(q, h).direct == (modp.verdict == SolveVerdict::Solved));
      CHECK(solve_dwyer(q).verdict == full.verdict);
    }
  }
}

TEST_CASE("layered lifter leaves are homomorphisms with the given superdiagonal") {
  auto q = query("V4", 2, {1, 2, 1});
  LayeredLifter lifter(q.group, UniTriGroup(4, 2), negated_superdiagonals(q.group, q.classes));
  std::size_t count = 0;
  lifter.enumerate([&](std::span<const UniTriMatrix> images) {
    CHECK(is_matrix_hom(q.group, images));
    CHECK(solves_dwyer(q, images));
    ++count;
    return true;
  });
  HomConstraint c;
  auto problem = build_dwyer_problem(q);
  c.alpha = problem.alpha;
  c.target = problem.phi;
  CHECK(count == all_homs(q.group, problem.b, c).size());
}

#include <set>
#include <sstream>

#include "doctest.h"
#include "generators.hpp"
#include "masseylab/error.hpp"
#include "masseylab/finite_group.hpp"
#include "masseylab/fixtures.hpp"

using namespace masseylab;

namespace {

std::multiset<std::uint32_t> order_profile(const FiniteGroup& g) {
  std::multiset<std::uint32_t> out;
  for (Elem x = 0; x < g.order(); ++x) out.insert(element_order(g, x));
  return out;
}

std::vector<std::vector<Elem>> table_of(const FiniteGroup& g) {
  std::vector<std::vector<Elem>> t(g.order(), std::vector<Elem>(g.order()));
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y) t[x][y] = g.mul(x, y);
  return t;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("tables build the expected small groups") {
  CHECK(build_from_table({{0}}, {}).order() == 1);
  auto z2 = build_from_table({{0, 1}, {1, 0}}, {1});
  CHECK(z2.order() == 2);
  CHECK(involutions(z2) == std::vector<Elem>{1});

  // identity stored at index 1 is moved to 0
  auto moved = build_from_table({{1, 0}, {0, 1}}, {0});
  CHECK(moved.order() == 2);
  CHECK(moved.mul(1, 1) == 0);
}

TEST_CASE("broken tables are rejected with the right error") {
  // a Latin square with identity and inverses where every x*x = 1: a loop of
  // order 5 that cannot be a group
  const std::vector<std::vector<Elem>> loop{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK(kind_of([&] { build_from_table(loop, {1, 2}); }) == ErrorKind::NonAssociative);
  auto s3 = table_of(build_symmetric3());
  auto broken = s3;
  std::swap(broken[1][2], broken[1][3]);
  CHECK_THROWS_AS(build_from_table(broken, {1, 2}), Error);
  CHECK(kind_of([&] { build_from_table({{1, 1}, {1, 1}}, {0}); }) == ErrorKind::NoIdentity);
  CHECK(kind_of([&] { build_from_table({{0, 1}, {1, 1}}, {1}); }) == ErrorKind::NoInverse);
  auto z4 = table_of(build_cyclic(4));
  CHECK(kind_of([&] { build_from_table(z4, {2}); }) == ErrorKind::GeneratorsDontGenerate);
}

TEST_CASE("cyclic, product and semidirect fixtures") {
  CHECK(build_cyclic(1).order() == 1);
  CHECK(order_profile(build_cyclic(4)) == std::multiset<std::uint32_t>{1, 2, 4, 4});
  auto v4 = build_direct_product(build_cyclic(2), build_cyclic(2));
  CHECK(involutions(v4).size() == 3);
  auto z6 = build_direct_product(build_cyclic(2), build_cyclic(3));
  CHECK(order_profile(z6).count(6) == 2);
  CHECK(order_profile(build_direct_product(build_cyclic(1), build_symmetric3())) == order_profile(build_symmetric3()));

  auto sd231 = build_semidirect_cyclic(2, 1, 3);
  CHECK(sd231.order() == 4);
  CHECK(is_abelian(sd231));
  CHECK(involutions(sd231).size() == 3);
  auto sd317 = build_semidirect_cyclic(3, 1, 7);
  CHECK(sd317.order() == 9);
  CHECK(is_abelian(sd317));
  auto sd223 = build_semidirect_cyclic(2, 2, 3);
  CHECK(sd223.order() == 16);
  CHECK_FALSE(is_abelian(sd223));
}

TEST_CASE("element queries") {
  auto z3 = build_cyclic(3);
  CHECK(involutions(z3).empty());
  CHECK(element_order(build_cyclic(4), 1) == 4);
  CHECK(element_order(build_cyclic(4), 0) == 1);
  auto s3 = build_symmetric3();
  for (Elem t : involutions(s3)) CHECK(centralizer(s3, t) == std::vector<Elem>{0, t});
  CHECK(centralizer(s3, 0).size() == 6);
  auto v4 = fixture_group("V4");
  CHECK(centralizer(v4, 2).size() == 4);
  CHECK(center(fixture_group("Q8")).size() == 2);
  CHECK(center(fixture_group("D4")).size() == 2);
}

TEST_CASE("every fixture satisfies the group axioms") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    auto g = fixture_group(name);
    if (g.order() <= kMaxFullOrder) CHECK(satisfies_group_axioms(g));
    CHECK(generated_subgroup(g, g.generators()).size() == g.order());
  }
}

TEST_CASE("fingerprints are stable and distinguish tables") {
  CHECK(build_cyclic(4).fingerprint() == build_cyclic(4).fingerprint());
  CHECK(build_cyclic(4).fingerprint() != fixture_group("V4").fingerprint());
  CHECK(fixture_group("Z2xZ4").same_table(build_direct_product(build_cyclic(2), build_cyclic(4))));
}

TEST_CASE("group spec round trip and parse errors") {
  auto q8 = build_quaternion8();
  std::stringstream ss;
  write_group_spec(ss, q8);
  auto back = parse_group_spec(ss);
  CHECK(back.same_table(q8));

  std::istringstream bad("order 2\ngenerators 1\n0 1\n1 x\n");
  try {
    parse_group_spec(bad);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("line 4, column 3") != std::string::npos);
  }
}

TEST_CASE("hom counts against closed forms") {
  for (std::uint32_t m = 1; m <= 16; ++m)
    for (std::uint32_t p : {2u, 3u, 5u}) {
      CAPTURE(m);
      CAPTURE(p);
      CHECK(all_homs(build_cyclic(m), build_cyclic(p)).size() == (m % p == 0 ? p : 1));
    }
  CHECK(all_homs(build_cyclic(2), build_cyclic(2)).size() == 2);
  CHECK(all_homs(build_cyclic(3), build_cyclic(2)).size() == 1);
  // Hom(V4, S3): trivial plus 3 * 3 maps onto an order-2 subgroup
  CHECK(all_homs(fixture_group("V4"), build_symmetric3()).size() == 10);
}

TEST_CASE("property: enumerated homs obey the homomorphism law") {
  testing::Gen gen(11);
  for (int trial = 0; trial < 12; ++trial) {
    auto g = fixture_group(gen.pick(testing::small_groups()));
    auto h = fixture_group(gen.pick(testing::small_groups()));
    CAPTURE(g.label());
    CAPTURE(h.label());
    std::set<std::vector<Elem>> seen;
    for (const auto& f : all_homs(g, h)) {
      CHECK(f.is_homomorphism());
      CHECK(f(0) == 0);
      CHECK(seen.insert(std::vector<Elem>(f.images().begin(), f.images().end())).second);
    }
  }
}

TEST_CASE("property: fiber-constrained search equals filtered enumeration") {
  // alpha : Z4 -> Z2 and alpha : D4 -> V4 (quotient by the centre)
  const std::vector<std::string> domains{"Z2", "Z4", "V4", "S3", "D4"};
  std::vector<std::pair<FiniteGroup, FiniteGroup>> targets;
  targets.emplace_back(build_cyclic(4), build_cyclic(2));
  targets.emplace_back(fixture_group("Z2xZ4"), fixture_group("V4"));
  for (auto& [h, a] : targets) {
    auto surj = all_homs(h, a);
    std::erase_if(surj, [](const GroupHom& f) { return !f.is_surjective(); });
    REQUIRE(!surj.empty());
    const GroupHom& alpha = surj.front();
    for (const auto& name : domains) {
      auto g = fixture_group(name);
      auto everything = all_homs(g, h);
      for (const auto& phi : all_homs(g, a)) {
        HomConstraint c;
        c.alpha = alpha;
        c.target = phi;
        auto fiber = all_homs(g, h, c);
        std::vector<GroupHom> filtered;
        for (const auto& psi : everything)
          if (compose(alpha, psi) == phi) filtered.push_back(psi);
        CAPTURE(name);
        CHECK(fiber == filtered);
      }
    }
  }
}

TEST_CASE("fixed generator images and the search budget") {
  auto z4 = build_cyclic(4);
  HomConstraint c;
  c.fixed = {Elem{2}};
  auto homs = all_homs(z4, z4, c);
  REQUIRE(homs.size() == 1);
  CHECK(homs[0](1) == 2);

  SearchBudget tiny{1};
  auto status = enumerate_homs(fixture_group("D4"), fixture_group("D4"), {}, [](const GroupHom&) { return true; }, &tiny);
  CHECK(status == SearchStatus::BudgetExceeded);
}

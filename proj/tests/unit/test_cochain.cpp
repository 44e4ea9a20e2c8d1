#include <fstream>
#include <sstream>

#include "doctest.h"
#include "generators.hpp"
#include "masseylab/cochain.hpp"
#include "masseylab/error.hpp"

using namespace masseylab;

namespace {

Cochain character(const FiniteGroup& g, std::uint32_t p, std::initializer_list<Residue> on_generators) {
  Cohomology h(g, p);
  for (const auto& a : h.h1_elements()) {
    bool match = true;
    std::size_t i = 0;
    for (Residue v : on_generators) match = match && a.at(g.generators()[i++]) == v;
    if (match) return a;
  }
  FAIL("no such character");
  return Cochain(g, p, 1);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("coboundary basics") {
  auto z4 = fixture_group("Z4");
  for (const auto& a : Cohomology(z4, 2).h1_elements()) CHECK(coboundary(a).is_zero());
  CHECK(coboundary(Cochain(z4, 2, 1)).is_zero());
  CHECK_THROWS_AS(coboundary(Cochain(z4, 2, 3)), Error);
  CHECK(is_cocycle(Cochain(z4, 2, 2)));
}

TEST_CASE("property: dd = 0 and the Leibniz rule") {
  testing::Gen gen(2024);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = fixture_group(gen.pick({"Z2", "Z3", "Z4", "V4", "S3", "Z6"}));
    const std::uint32_t p = trial % 3 == 0 ? 3 : 2;
    for (std::uint32_t d = 0; d <= 1; ++d) CHECK(coboundary(coboundary(gen.cochain(g, p, d))).is_zero());
    for (auto [r, s] : {std::pair{0u, 1u}, {1u, 0u}, {1u, 1u}, {0u, 2u}, {2u, 0u}}) {
      auto a = gen.cochain(g, p, r), b = gen.cochain(g, p, s);
      auto right = cup(a, coboundary(b));
      CHECK(coboundary(cup(a, b)) == cup(coboundary(a), b) + (r % 2 ? -right : right));
    }
  }
}

TEST_CASE("cup product examples") {
  auto z2 = fixture_group("Z2");
  Cohomology h2(z2, 2);
  auto a = character(z2, 2, {1});
  CHECK(cup(a, Cochain(z2, 2, 1)).is_zero());
  CHECK(is_cocycle(cup(a, a)));
  CHECK_FALSE(h2.is_coboundary(cup(a, a)));

  auto z3 = fixture_group("Z3");
  Cohomology h3(z3, 3);
  auto b = character(z3, 3, {1});
  CHECK(h3.is_coboundary(cup(b, b)));
  auto pre = h3.coboundary_preimage(cup(b, b));
  REQUIRE(pre);
  CHECK(coboundary(*pre) == cup(b, b));
  CHECK_THROWS_AS(cup(Cochain(z3, 3, 2), Cochain(z3, 3, 2)), Error);
}

TEST_CASE("cohomology dimensions") {
  struct Case {
    const char* group;
    std::uint32_t p;
    std::size_t h1, h2;
  };
  for (const auto& c : std::vector<Case>{{"1", 2, 0, 0},     {"Z2", 2, 1, 1},    {"Z3", 2, 0, 0},    {"Z5", 2, 0, 0},
                                         {"Z4", 2, 1, 1},    {"V4", 2, 2, 3},    {"S3", 2, 1, 1},    {"S3", 3, 0, 0},
                                         {"S3", 5, 0, 0},    {"Q8", 2, 2, 2},    {"D4", 2, 2, 3},    {"Z3", 3, 1, 1},
                                         {"Z3xZ3", 3, 2, 3}, {"Z2xZ4", 2, 2, 3}, {"U3_2", 2, 2, 3}, {"Z2xZ2xZ2", 2, 3, 6}}) {
    CAPTURE(c.group);
    CAPTURE(c.p);
    Cohomology h(fixture_group(c.group), c.p);
    CHECK(h.h1_dim() == c.h1);
    CHECK(h.h2_dim() == c.h2);
    CHECK(h.h2_basis().size() == c.h2);
    // independent count of Hom(G, Z/p)
    std::size_t homs = all_homs(fixture_group(c.group), build_cyclic(c.p)).size(), expected = 1;
    for (std::size_t i = 0; i < c.h1; ++i) expected *= c.p;
    CHECK(homs == expected);
  }
  CHECK_THROWS_AS(Cohomology(build_cyclic(40), 2).h2_dim(), Error);
}

TEST_CASE("classes and normal forms") {
  auto v4 = fixture_group("V4");
  Cohomology h(v4, 2);
  testing::Gen gen(8);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = h.h1_elements()[gen.below(4)], b = h.h1_elements()[gen.below(4)];
    auto z = cup(a, b);
    auto shifted = z + coboundary(gen.cochain(v4, 2, 1));
    CHECK(h.class_of(z) == h.class_of(shifted));
    CHECK(h.normal_form(z) == h.normal_form(shifted));
    CHECK(h.h2_coordinates(z) == h.h2_coordinates(shifted));
  }
  CHECK(h.class_of(Cochain(v4, 2, 2)).is_zero());
  CHECK(h.class_of(coboundary(gen.cochain(v4, 2, 1))).is_zero());
  Cochain not_cocycle(v4, 2, 2);
  not_cocycle.set(std::vector<Elem>{1, 2}, 1);
  CHECK_THROWS_AS(h.class_of(not_cocycle), Error);
}

TEST_CASE("property: cup product is well defined on classes") {
  testing::Gen gen(77);
  for (int trial = 0; trial < 30; ++trial) {
    auto name = gen.pick({"Z2", "Z4", "V4", "Z3", "Z3xZ3", "D4", "Q8"});
    const std::uint32_t p = name[1] == '3' ? 3 : 2;
    auto g = fixture_group(name);
    Cohomology h(g, p);
    if (h.h1_dim() == 0) continue;
    auto els = h.h1_elements();
    auto a = els[gen.below(els.size())], b = els[gen.below(els.size())];
    auto c = gen.cochain(g, p, 0);
    auto shifted = a + coboundary(c);
    CHECK(h.is_coboundary(cup(shifted, b) - cup(a, b)));
    CHECK(h.is_coboundary(cup(b, shifted) - cup(b, a)));
  }
}

TEST_CASE("cup pairing symmetry") {
  for (auto [name, p] : {std::pair{"Z2", 2u}, {"Z4", 2u}, {"V4", 2u}, {"D4", 2u}, {"Q8", 2u}, {"Z2xZ4", 2u},
                         {"Z3", 3u}, {"Z3xZ3", 3u}, {"Z5", 5u}, {"S3", 3u}}) {
    CAPTURE(name);
    Cohomology h(fixture_group(name), p);
    for (const auto& a : h.h1_elements())
      for (const auto& b : h.h1_elements()) {
        if (p == 2)
          CHECK(h.is_coboundary(cup(a, b) - cup(b, a)));
        else
          CHECK(h.is_coboundary(cup(a, b) + cup(b, a)));
      }
  }
}

TEST_CASE("cup form and the Demushkin check") {
  auto z2 = demushkin_check(fixture_group("Z2"), 2);
  CHECK(z2.verdict);
  REQUIRE(z2.form);
  CHECK(z2.form->gram == std::vector<FpVector>{{1}});
  for (std::uint32_t p : {3u, 5u}) {
    auto r = demushkin_check(build_cyclic(p), p);
    CHECK_FALSE(r.verdict);
    CHECK_FALSE(r.nondegenerate);
  }
  auto trivial = demushkin_check(FiniteGroup(), 2);
  CHECK_FALSE(trivial.verdict);
  CHECK(trivial.dim_h2 == 0);
  auto z4 = demushkin_check(fixture_group("Z4"), 2);
  CHECK(z4.dim_h2 == 1);
  REQUIRE(z4.form);
  CHECK(z4.form->gram == std::vector<FpVector>{{0}});
  CHECK_FALSE(z4.verdict);
  CHECK_THROWS_AS(cup_form(Cohomology(fixture_group("V4"), 2)), Error);
}

TEST_CASE("cochain dump matches the golden file and round-trips") {
  auto v4 = fixture_group("V4");
  Cohomology h(v4, 2);
  auto z = cup(h.h1_basis()[0], h.h1_basis()[1]);
  std::ostringstream out;
  dump_cochain(out, z);
  CHECK(out.str() == slurp(std::string(MASSEYLAB_TEST_DATA) + "/v4_cup.cochain"));
  std::istringstream in(out.str());
  CHECK(parse_cochain_dump(in, v4, 2) == z);
  std::istringstream bad("degree 1\n1 : 1\n2 : x\n");
  CHECK_THROWS_AS(parse_cochain_dump(bad, v4, 2), Error);
}

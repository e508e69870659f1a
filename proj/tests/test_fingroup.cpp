#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sampling.hpp"
#include "weylcomp/error.hpp"
#include "weylcomp/fingroup.hpp"
#include "weylcomp/weyl.hpp"

using namespace weylcomp;

namespace {

std::vector<std::size_t> elements_of_order(const Group& g, std::size_t k) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (g.element_order(x) == k) out.push_back(x);
  return out;
}

const char* kCatalog[] = {"trivial", "Z2", "Z3", "Z4", "Z6", "Z2xZ2", "D8", "Q8", "S3", "S4", "A4", "S5"};

}  // namespace

TEST_CASE("close examples") {
  CHECK(FinGroup::close({ExactMatrix::identity(2)}).order() == 1);
  FinGroup d8 = FinGroup::close({ExactMatrix{{-1, 0}, {0, 1}}, ExactMatrix{{0, 1}, {1, 0}}});
  CHECK(d8.order() == 8);
  FinGroup d8b = FinGroup::close(
      {ExactMatrix{{-1, 0}, {0, 1}}, ExactMatrix{{1, 0}, {0, -1}}, ExactMatrix{{0, 1}, {1, 0}}});
  CHECK(d8b.order() == 8);
  for (const auto& m : d8b.elements()) CHECK(d8.find(m).has_value());
  CHECK_THROWS_AS(FinGroup::close({ExactMatrix{{1, 1}, {0, 1}}}, 50), Error);
  CHECK_THROWS_AS(FinGroup::close({ExactMatrix{{1, 0}, {0, 1}}, ExactMatrix::identity(3)}), Error);
}

TEST_CASE("close is idempotent on element lists") {
  for (const char* name : kCatalog) {
    FinGroup g = catalog_group(name);
    FinGroup again = FinGroup::close({g.elements().begin(), g.elements().end()});
    CHECK(again.order() == g.order());
    for (const auto& m : g.elements()) CHECK(again.find(m).has_value());
  }
}

TEST_CASE("subgroup_generated examples") {
  FinGroup s3 = catalog_group("S3");
  const std::size_t id[] = {0};
  CHECK(subgroup_generated(s3, id).is_trivial());
  auto threes = elements_of_order(s3, 3);
  CHECK(threes.size() == 2);
  Subgroup a3 = subgroup_generated(s3, threes);
  CHECK(a3.order() == 3);

  FinGroup q8 = catalog_group("Q8");
  const std::size_t x2[] = {q8.power(q8.generators()[0], 2)};
  Subgroup z = subgroup_generated(q8, x2);
  CHECK(z.order() == 2);
  CHECK(z == center(q8));
}

TEST_CASE("is_normal examples") {
  FinGroup s3 = catalog_group("S3");
  CHECK(is_normal(s3, trivial_subgroup(s3)));
  CHECK(is_normal(s3, subgroup_generated(s3, elements_of_order(s3, 3))));
  const std::size_t t[] = {elements_of_order(s3, 2)[0]};
  CHECK_FALSE(is_normal(s3, subgroup_generated(s3, t)));

  const LieType f4{Family::F, 4};
  FinGroup w = weyl_group(f4);
  CHECK(is_normal(w, subsystem_subgroup(w, f4, {SubsystemKind::D4InF4, 4})));
}

TEST_CASE("quotient examples") {
  FinGroup s3 = catalog_group("S3");
  CHECK(quotient(s3, whole_group(s3)).order() == 1);
  const std::size_t t[] = {elements_of_order(s3, 2)[0]};
  CHECK_THROWS_AS(quotient(s3, subgroup_generated(s3, t)), Error);

  const LieType c2{Family::C, 2};
  FinGroup wc2 = weyl_group(c2);
  Subgroup a1a1 = subsystem_subgroup(wc2, c2, {SubsystemKind::A1nInC, 2});
  CHECK(a1a1.order() == 4);
  CHECK(quotient(wc2, a1a1).order() == 2);

  const LieType f4{Family::F, 4};
  FinGroup w = weyl_group(f4);
  QuotientGroup q = quotient(w, subsystem_subgroup(w, f4, {SubsystemKind::D4InF4, 4}));
  CHECK(q.order() == 6);
  CHECK_FALSE(q.is_abelian());
  CHECK(iso_to_catalog(q, "S3"));
}

TEST_CASE("sylow examples and p-part property") {
  FinGroup s3 = catalog_group("S3");
  CHECK(sylow(s3, 5).is_trivial());
  CHECK(sylow(s3, 3).order() == 3);
  FinGroup wf4 = weyl_group({Family::F, 4});
  CHECK(sylow(wf4, 3).order() == 9);
  CHECK(sylow(wf4, 2).order() == 128);

  for (const char* name : kCatalog) {
    FinGroup g = catalog_group(name);
    for (std::uint64_t p : {2, 3, 5, 7}) {
      Subgroup s = sylow(g, p);
      CHECK(s.order() == p_part(g.order(), p));
      for (std::size_t e : s.elements()) CHECK(p_part(g.element_order(e), p) == g.element_order(e));
    }
  }
}

TEST_CASE("nilpotence examples") {
  CHECK(is_nilpotent(catalog_group("Q8")));
  CHECK_FALSE(is_nilpotent(catalog_group("S3")));
  CHECK(is_nilpotent(catalog_group("D8")));
  CHECK_FALSE(is_p_nilpotent(catalog_group("S3"), 3));
  CHECK(is_p_nilpotent(catalog_group("S3"), 2));
  CHECK(is_p_nilpotent(catalog_group("S4"), 5));
  CHECK_FALSE(is_p_nilpotent(catalog_group("S4"), 3));
}

TEST_CASE("property: p-nilpotence agrees with the element-count oracle") {
  for (const char* name : kCatalog) {
    FinGroup g = catalog_group(name);
    bool all = true;
    for (std::uint64_t p : {2, 3, 5, 7}) {
      const bool pn = is_p_nilpotent(g, p);
      CHECK_MESSAGE(pn == oracle::p_nilpotent_by_elements(g, p), name << " p=" << p);
      if (g.order() % p == 0) all = all && pn;
    }
    CHECK_MESSAGE(is_nilpotent(g) == all, name);
  }
  for (const char* name : {"Q8", "D8", "Z4", "Z2xZ2"}) CHECK(is_p_nilpotent(catalog_group(name), 2));
  CHECK(is_p_nilpotent(catalog_group("Z3"), 3));
}

TEST_CASE("center examples and oracle") {
  FinGroup z6 = catalog_group("Z6");
  CHECK(center(z6).order() == 6);
  CHECK(center(catalog_group("Q8")).order() == 2);
  FinGroup d8 = catalog_group("D8");
  Subgroup zd8 = center(d8);
  CHECK(zd8.order() == 2);
  CHECK(d8.element(zd8.elements()[1]) == ExactMatrix{{-1, 0}, {0, -1}});
  for (const char* name : kCatalog) {
    FinGroup g = catalog_group(name);
    auto z = center(g);
    auto expect = oracle::center_by_commuting(g);
    CHECK(std::vector<std::size_t>(z.elements().begin(), z.elements().end()) == expect);
  }
}

TEST_CASE("isomorphism examples") {
  CHECK(iso_to_catalog(FinGroup::trivial(3), "trivial"));
  CHECK_FALSE(are_isomorphic(catalog_group("Q8"), catalog_group("D8")));
  CHECK(elements_of_order(catalog_group("Q8"), 4).size() == 6);
  CHECK(elements_of_order(catalog_group("D8"), 4).size() == 2);
  CHECK(are_isomorphic(weyl_group({Family::B, 2}), catalog_group("D8")));
  CHECK(are_isomorphic(catalog_group("Z6"), FinGroup::close({ExactMatrix{{-1, 0}, {0, -1}},
                                                             ExactMatrix{{0, -1}, {1, -1}}})));
  CHECK_FALSE(are_isomorphic(catalog_group("S3"), catalog_group("Z6")));
  CHECK(identify_in_catalog(catalog_group("A4")) == "A4");
  CHECK(identify_in_catalog(weyl_group({Family::A, 2})) == "S3");
  CHECK(identify_in_catalog(weyl_group({Family::A, 3})) == "S4");
  CHECK_THROWS_AS(catalog_group("M11"), Error);
}

TEST_CASE("has_complement examples") {
  FinGroup s3 = catalog_group("S3");
  CHECK(has_complement(s3, trivial_subgroup(s3)));
  CHECK(has_complement(s3, subgroup_generated(s3, elements_of_order(s3, 3))));
  FinGroup q8 = catalog_group("Q8");
  CHECK_FALSE(has_complement(q8, center(q8)));
  // Every order-4 subgroup of Q8 is cyclic and contains the central involution.
  for (std::size_t x : elements_of_order(q8, 4)) {
    const std::size_t g[] = {x};
    CHECK(subgroup_generated(q8, g).contains(center(q8).elements()[1]));
  }
  FinGroup d8 = catalog_group("D8");
  CHECK_FALSE(has_complement(d8, center(d8)));
  FinGroup z2z2 = catalog_group("Z2xZ2");
  const std::size_t a[] = {z2z2.generators()[0]};
  CHECK(has_complement(z2z2, subgroup_generated(z2z2, a)));
}

TEST_CASE("homomorphisms") {
  FinGroup q8 = catalog_group("Q8");
  FinGroup v4 = catalog_group("Z2xZ2");
  const std::size_t img[] = {v4.generators()[0], v4.generators()[1]};
  Homomorphism ab(q8, v4, img);
  CHECK(ab.kernel().order() == 2);
  CHECK(ab.kernel() == center(q8));

  const std::size_t x[] = {q8.generators()[0]};
  Subgroup nu = subgroup_generated(q8, x);
  CHECK(kernel_normality_check(ab, nu));
  CHECK(kernel_normality_check(ab, trivial_subgroup(q8)));

  FinGroup z3 = catalog_group("Z3");
  const std::size_t bad[] = {z3.generators()[0], 0};
  CHECK_THROWS_AS(Homomorphism(q8, z3, bad), Error);
}

TEST_CASE("property: kernel normality on sampled triples") {
  auto triples = sampling::kernel_normality_triples(150, 314159);
  for (const auto& t : triples) CHECK_MESSAGE(t.holds, t.group);
}

TEST_CASE("property: Lagrange and quotient orders on sampled normal closures") {
  std::mt19937 rng(99);
  for (const char* name : kCatalog) {
    FinGroup g = catalog_group(name);
    for (int k = 0; k < 5; ++k) {
      const std::size_t a = rng() % g.order();
      Subgroup n = normal_closure(g, std::span<const std::size_t>(&a, 1));
      CHECK(g.order() % n.order() == 0);
      CHECK(is_normal(g, n));
      CHECK(quotient(g, n).order() * n.order() == g.order());
    }
  }
}

TEST_CASE("character norm") {
  CHECK(rep_character_norm(FinGroup::trivial(4), 2) == 4);
  FinGroup q8 = catalog_group("Q8");
  CHECK(rep_character_norm(q8, 2) == 8);
  const std::size_t x[] = {q8.generators()[0]};
  FinGroup z4 = materialize(q8, subgroup_generated(q8, x));
  CHECK(z4.order() == 4);
  CHECK(rep_character_norm(z4, 2) == 8);
  CHECK_THROWS_AS(rep_character_norm(catalog_group("S3"), 1), Error);
  CHECK_THROWS_AS(rep_character_norm(catalog_group("D8"), 1), Error);
}

TEST_CASE("group json round trip") {
  FinGroup g = catalog_group("S4");
  auto j = group_to_json(g, "S4");
  CHECK(j["order"] == 24);
  CHECK(j["name"] == "S4");
  FinGroup back = group_from_json(j);
  CHECK(back.order() == 24);
  CHECK(back.generator_matrices() == g.generator_matrices());
  for (std::size_t i = 0; i < g.order(); ++i) CHECK(back.element(i) == g.element(i));
  j["order"] = 23;
  CHECK_THROWS_AS(group_from_json(j), Error);
}

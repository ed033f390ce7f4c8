#include <catch_amalgamated.hpp>

#include "stackypi1/finite_group.hpp"

using namespace stackypi1;

TEST_CASE("table validation") {
  CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 1}}), Error);
  CHECK_THROWS_AS(FiniteGroup({{0, 1, 2}, {1, 0, 2}, {2, 2, 0}}), Error);
  const FiniteGroup z2({{0, 1}, {1, 0}});
  CHECK(z2.order() == 2);
}

TEST_CASE("named constructions") {
  CHECK(groups::symmetric(3).order() == 6);
  CHECK(!groups::symmetric(3).is_abelian());
  CHECK(groups::dihedral(4).order() == 8);
  CHECK(groups::dicyclic(2).order() == 8);
  CHECK(groups::sl2_3().order() == 24);
  CHECK(groups::alternating(4).order() == 12);
  CHECK(groups::named("cyclic", 5).order() == 5);
  CHECK_THROWS_AS(groups::named("monster", 1), Error);
}

TEST_CASE("conjugacy classes and centralizers") {
  const auto s3 = groups::symmetric(3);
  CHECK(s3.conjugacy_classes().size() == 3);
  int sum = 0;
  for (const auto& c : s3.conjugacy_classes()) sum += static_cast<int>(c.size());
  CHECK(sum == 6);
  for (int g = 0; g < 6; ++g) CHECK(s3.centralizer_order(g) * static_cast<int>(s3.conjugacy_classes().size()) >= 6);
}

TEST_CASE("hom counts agree with known values") {
  // |Hom(Z, G)| = |G|, |Hom(Z^2, G)| = |G| * #classes
  GroupPresentation z{{"a"}, {}};
  GroupPresentation z2{{"a", "b"}, {{1, 2, -1, -2}}};
  for (const auto& g : groups::catalog_up_to(12)) {
    CHECK(count_homs(z, g) == static_cast<std::uint64_t>(g.order()));
    CHECK(count_homs(z2, g) == static_cast<std::uint64_t>(g.order()) * g.conjugacy_classes().size());
    CHECK(count_hom_classes(z, g) == g.conjugacy_classes().size());
  }
}

TEST_CASE("automorphism groups") {
  CHECK(automorphisms(groups::symmetric(3)).size() == 6);
  CHECK(automorphisms(groups::dicyclic(2)).size() == 24);
  CHECK(automorphisms(groups::cyclic(5)).size() == 4);
}

TEST_CASE("catalog orders are consistent") {
  for (const auto& g : groups::catalog()) {
    CHECK(g.order() <= 24);
    for (int a = 0; a < g.order(); ++a) CHECK(g.mul(a, g.inv(a)) == g.identity());
  }
}

TEST_CASE("hom enumeration respects the budget") {
  Budget b;
  b.max_states = 10;
  GroupPresentation f2{{"a", "b"}, {}};
  CHECK_THROWS_AS(count_homs(f2, groups::symmetric(4), &b), Error);
}

#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "stackypi1/torsor.hpp"

using namespace stackypi1;

namespace {

SimplicialBasepoint at(const std::string& v) {
  SimplicialBasepoint b;
  b.points.emplace_back(0, v);
  return b;
}

}  // namespace

TEST_CASE("triangle examples over every catalog group") {
  const auto boundary = build_space(spaces::boundary_triangle());
  const auto full = build_space(spaces::full_triangle());
  for (const auto& g : groups::catalog()) {
    CHECK(enumerate_framed(boundary, at("t0"), g).framed.size() == static_cast<std::size_t>(g.order()));
    CHECK(enumerate_framed(full, at("t0"), g).framed.size() == 1);
  }
}

TEST_CASE("planes and pyramid with S3") {
  const auto s3 = groups::symmetric(3);
  const auto planes = build_space(spaces::coordinate_planes());
  const auto pyramid = build_space(spaces::pyramid());
  CHECK(enumerate_framed(pyramid, at("P1"), s3).framed.size() == 6);
  CHECK(torsor_classes(planes, s3).classes.size() == 1);
  const auto c = torsor_classes(pyramid, s3);
  CHECK(c.classes.size() == 3);
  CHECK(c.groupoid_cardinality == Rational(1));  // 1/6 + 1/2 + 1/3
  const auto w = weight_equivalence(pyramid, s3);
  REQUIRE(w.classes.size() == 1);
  CHECK(w.classes[0].members.size() == 3);
}

TEST_CASE("trivial group gives one class") {
  const auto s = build_space(spaces::pyramid());
  const auto c = torsor_classes(s, groups::trivial());
  REQUIRE(c.classes.size() == 1);
  CHECK(c.classes[0].automorphisms == 1);
  CHECK(weight_equivalence(s, groups::trivial()).classes.size() == 1);
}

TEST_CASE("weight classes separate by restriction to level 0") {
  RawSpace raw;
  raw.levels[0].push_back({"x", GroupPresentation{{"g"}, {}}});
  const auto s = build_space(raw);
  const auto w = weight_equivalence(s, groups::cyclic(2));
  CHECK(w.classification.classes.size() == 2);
  REQUIRE(w.classes.size() == 2);
  CHECK(w.classes[0].members.size() == 1);
  CHECK(w.classes[1].members.size() == 1);
}

TEST_CASE("errors") {
  const auto two = build_space(spaces::from_simplices(2, {}, {}));
  CHECK_THROWS_AS(enumerate_framed(two, at("v0"), groups::cyclic(2)), Error);
  const auto s = build_space(spaces::circle());
  CHECK_THROWS_AS(enumerate_framed(s, SimplicialBasepoint{}, groups::cyclic(2)), Error);
  Budget tiny;
  tiny.max_states = 3;
  CHECK_THROWS_AS(enumerate_framed(s, at("v"), groups::symmetric(4), {1, &tiny}), Error);
}

TEST_CASE("framings at edge and triangle basepoints") {
  const auto full = build_space(spaces::full_triangle());
  const auto g = groups::symmetric(3);
  SimplicialBasepoint b = at("t0");
  b.points.emplace_back(1, "t12");
  // the second framing is a free G-torsor
  CHECK(enumerate_framed(full, b, g).framed.size() == 6);
  b.points.emplace_back(2, "t012");
  CHECK(enumerate_framed(full, b, g).framed.size() == 36);
}

TEST_CASE("property: Burnside consistency") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = build_space(oracles::random_trivial_space(rng));
    for (const auto& g : {groups::symmetric(3), groups::cyclic(4), groups::dihedral(4)}) {
      const auto c = torsor_classes(s, g);
      std::uint64_t total = 0;
      for (const auto& cl : c.classes) {
        CHECK(cl.orbit_size * cl.automorphisms == static_cast<std::uint64_t>(g.order()));
        total += cl.orbit_size;
      }
      CHECK(total == c.framed_count);
    }
  }
}

TEST_CASE("property: adding a 2-simplex never increases the framed count") {
  const auto g = groups::symmetric(3);
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 4;
    std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 3}};
    std::shuffle(edges.begin(), edges.end(), rng);
    auto find = [&](int x, int y) {
      return static_cast<int>(std::find(edges.begin(), edges.end(), std::make_pair(x, y)) - edges.begin());
    };
    std::vector<std::array<int, 3>> tris;
    std::uint64_t previous = enumerate_framed(build_space(spaces::from_simplices(n, edges, tris)), at("v0"), g).framed.size();
    for (auto [a, b, c] : std::vector<std::array<int, 3>>{{0, 1, 2}, {1, 2, 3}, {0, 1, 3}, {0, 2, 3}}) {
      tris.push_back({find(b, c), find(a, c), find(a, b)});
      const auto count = enumerate_framed(build_space(spaces::from_simplices(n, edges, tris)), at("v0"), g).framed.size();
      CHECK(count <= previous);
      previous = count;
    }
    CHECK(previous == 1);
  }
}

TEST_CASE("property: classes match Hom(pi1, G) / conjugation") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = build_space(oracles::random_trivial_space(rng));
    const auto p = pi1_presentation(s, "v0");
    for (const auto& g : groups::catalog_up_to(8)) {
      CHECK(torsor_classes(s, g).classes.size() == count_hom_classes(p, g));
      CHECK(enumerate_framed(s, at("v0"), g).framed.size() == count_homs(p, g));
    }
  }
}

TEST_CASE("thread count does not change results") {
  const auto s = build_space(spaces::pyramid());
  const auto g = groups::symmetric(4);
  const auto one = torsor_classes(s, g, {1, nullptr});
  const auto four = torsor_classes(s, g, {4, nullptr});
  REQUIRE(one.classes.size() == four.classes.size());
  for (std::size_t i = 0; i < one.classes.size(); ++i) {
    CHECK(one.classes[i].representative.transport == four.classes[i].representative.transport);
    CHECK(one.classes[i].automorphisms == four.classes[i].automorphisms);
  }
}

#include <catch_amalgamated.hpp>

#include <random>

#include "stackypi1/finite_group.hpp"
#include "stackypi1/simplicial.hpp"

using namespace stackypi1;

namespace {

GroupPresentation trivial_group() { return {}; }

ErrorKind kind_of(const RawSpace& raw) {
  try {
    build_space(raw);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::SchemaError;
}

bool same_hom_counts(const GroupPresentation& a, const GroupPresentation& b, int bound) {
  for (const auto& g : groups::catalog_up_to(bound))
    if (count_homs(a, g) != count_homs(b, g)) return false;
  return true;
}

// random graph on n vertices, connected through a random tree plus extra edges
std::vector<std::pair<int, int>> random_graph(std::mt19937_64& rng, int n, int extra) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < extra; ++i) {
    int a = pick(rng), b = pick(rng);
    if (a == b) continue;
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  return edges;
}

}  // namespace

TEST_CASE("builder synthesizes degeneracies and counts nondegenerate simplices") {
  const auto s = build_space(spaces::coordinate_planes());
  const auto c = s.nondegenerate_counts();
  CHECK(c[0] == 3);
  CHECK(c[1] == 3);
  CHECK(c[2] == 1);
  CHECK(c[3] == 0);
  // degenerate closure: level 1 holds s0 of each vertex too
  CHECK(s.level(1).size() == 6);
  CHECK(s.find(1, degenerate_name({0, 0}, "P1")) >= 0);
}

TEST_CASE("face identities are checked") {
  auto raw = spaces::full_triangle();
  // d0 of t012 must be the edge t1 -> t2; use t01 instead
  raw.faces[raw.faces.size() - 3].target = "t01";
  CHECK(kind_of(raw) == ErrorKind::IdentityViolation);

  auto dangling = spaces::boundary_triangle();
  dangling.faces[0].target = "nowhere";
  CHECK(kind_of(dangling) == ErrorKind::DanglingReference);

  auto with_degeneracy = spaces::circle();
  with_degeneracy.degeneracies.push_back({0, "v", 0, "loop"});
  CHECK_THROWS_AS(build_space(with_degeneracy), Error);
}

TEST_CASE("group homomorphisms along faces must respect relators") {
  RawSpace raw;
  raw.levels[0].push_back({"x", GroupPresentation{{"a"}, {{1, 1}}}});
  raw.levels[0].push_back({"y", GroupPresentation{{"b"}, {{1, 1, 1}}}});
  raw.levels[1].push_back({"e", GroupPresentation{{"c"}, {{1, 1}}}});
  raw.faces.push_back({1, "e", 1, "x", {{1}}});
  raw.faces.push_back({1, "e", 0, "y", {{1}}});
  // c -> b does not kill c^2 in Z/3
  CHECK_THROWS_AS(build_space(raw), Error);
  raw.faces.back().images = {{}};
  CHECK_NOTHROW(build_space(raw));
}

TEST_CASE("pi0 examples") {
  CHECK(pi0(build_space(spaces::boundary_triangle())).size() == 1);
  CHECK(pi0(build_space(spaces::from_simplices(2, {}, {}))).size() == 2);
  CHECK(pi0(build_space(spaces::from_simplices(2, {{0, 1}}, {}))).size() == 1);
}

TEST_CASE("pi1 examples") {
  const auto circle = pi1_presentation(build_space(spaces::circle()), "v");
  CHECK(circle.rank() == 1);
  CHECK(circle.relators.empty());

  const auto planes = pi1_presentation(build_space(spaces::coordinate_planes()), "P1");
  CHECK(same_hom_counts(planes, trivial_group(), 24));
  CHECK(format_abelianization(abelianization(planes)) == "0");

  const auto pyramid = pi1_presentation(build_space(spaces::pyramid()), "P1");
  CHECK(format_abelianization(abelianization(pyramid)) == "Z");
  CHECK(same_hom_counts(pyramid, GroupPresentation{{"t"}, {}}, 24));
}

TEST_CASE("pi1 errors") {
  CHECK_THROWS_MATCHES(pi1_presentation(build_space(spaces::from_simplices(2, {}, {})), "v0"), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) { return e.kind() == ErrorKind::Disconnected; }));
  CHECK_THROWS_MATCHES(pi1_presentation(build_space(spaces::circle()), "w"), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) { return e.kind() == ErrorKind::BasepointMissing; }));
}

TEST_CASE("component groups enter pi1") {
  RawSpace raw;
  raw.levels[0].push_back({"x", GroupPresentation{{"a"}, {{1, 1, 1}}}});
  raw.levels[1].push_back({"e", {}});
  raw.faces.push_back({1, "e", 1, "x", {}});
  raw.faces.push_back({1, "e", 0, "x", {}});
  // Z/3 vertex group and a free loop: Z/3 * Z
  const auto p = pi1_presentation(build_space(raw), "x");
  CHECK(format_abelianization(abelianization(p)) == "Z + Z/3");
}

TEST_CASE("property: graph spaces have abelianization rank 1 - chi") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    const auto edges = random_graph(rng, n, std::uniform_int_distribution<int>(0, 5)(rng));
    const auto s = build_space(spaces::from_simplices(n, edges, {}));
    const auto ab = abelianization(pi1_presentation(s, "v0"));
    CHECK(ab.torsion.empty());
    CHECK(ab.free_rank == static_cast<int>(edges.size()) - n + 1);
  }
}

TEST_CASE("property: a 2-simplex quotients by the normal closure of its boundary") {
  std::mt19937_64 rng(77);
  int checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 5)(rng);
    auto edges = random_graph(rng, n, 4);
    // pick a random triple a < b < c and make sure its three edges exist
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
    std::shuffle(v.begin(), v.end(), rng);
    std::sort(v.begin(), v.begin() + 3);
    const int a = v[0], b = v[1], c = v[2];
    auto find_or_add = [&](int x, int y) {
      for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i] == std::make_pair(x, y)) return static_cast<int>(i);
      edges.emplace_back(x, y);
      return static_cast<int>(edges.size()) - 1;
    };
    const int ab = find_or_add(a, b), ac = find_or_add(a, c), bc = find_or_add(b, c);
    const auto without = build_space(spaces::from_simplices(n, edges, {}));
    const auto with = build_space(spaces::from_simplices(n, edges, {{bc, ac, ab}}));

    auto ep = edge_path_presentation(without, "v0");
    auto gen = [&](int e) { return ep.edge_generator[static_cast<std::size_t>(without.find(1, "e" + std::to_string(e)))]; };
    GroupPresentation quotient = ep.presentation;
    quotient.relators.push_back(free_reduce({gen(ab), gen(bc), -gen(ac)}));
    CHECK(same_hom_counts(pi1_presentation(with, "v0"), quotient, 12));
    ++checked;
  }
  CHECK(checked == 30);
}

TEST_CASE("property: random graph spaces satisfy the simplicial identities on every level") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 5)(rng);
    const auto edges = random_graph(rng, n, 3);
    const auto s = build_space(spaces::from_simplices(n, edges, {}));
    for (int k = 1; k <= kTopLevel; ++k)
      for (int c = 0; c < static_cast<int>(s.level(k).size()); ++c) {
        const auto& comp = s.component(k, c);
        // d_i d_j = d_{j-1} d_i for i < j
        for (int j = 1; j <= k && k >= 2; ++j)
          for (int i = 0; i < j; ++i) {
            const int lhs = s.component(k - 1, comp.faces[static_cast<std::size_t>(j)].target).faces[static_cast<std::size_t>(i)].target;
            const int rhs = s.component(k - 1, comp.faces[static_cast<std::size_t>(i)].target).faces[static_cast<std::size_t>(j - 1)].target;
            CHECK(lhs == rhs);
          }
        // d_i s_j
        if (k < kTopLevel)
          for (int j = 0; j <= k; ++j) {
            const auto& up = s.component(k + 1, comp.degeneracies[static_cast<std::size_t>(j)].target);
            CHECK(up.faces[static_cast<std::size_t>(j)].target == c);
            CHECK(up.faces[static_cast<std::size_t>(j + 1)].target == c);
          }
      }
  }
}

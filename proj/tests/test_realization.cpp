#include <catch_amalgamated.hpp>

#include "stackypi1/realization.hpp"

using namespace stackypi1;

namespace {

GroupPresentation P(std::vector<std::string> g, std::vector<Word> r) { return {std::move(g), std::move(r)}; }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::SchemaError;
}

SimplicialComplex2 tetrahedron() { return make_complex(4, {}, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}); }

SimplicialComplex2 rp2() {
  return make_complex(6, {},
                      {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}});
}

SimplicialComplex2 torus() {
  std::vector<Triangle2> t;
  for (int i = 0; i < 7; ++i) {
    std::array<int, 3> a{i, (i + 1) % 7, (i + 3) % 7}, b{i, (i + 2) % 7, (i + 3) % 7};
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    t.push_back(a);
    t.push_back(b);
  }
  return make_complex(7, {}, t);
}

GroupPresentation pushout_of(const SimplicialComplex2& a) {
  const auto g = dual_graph(a);
  return pushout_presentation(a, unfold(a, g, maximal_tree(g)));
}

}  // namespace

TEST_CASE("complex conditions") {
  CHECK(check_conditions(tetrahedron()).all());
  const auto a = make_complex(4, {{2, 3}}, {{0, 1, 2}});
  const auto c = check_conditions(a);
  CHECK(!c.edges_in_triangles);
  CHECK(!check_conditions(make_complex(6, {}, {{0, 1, 2}, {3, 4, 5}})).triangles_connected);
}

TEST_CASE("unfolding examples") {
  const auto single = make_complex(3, {}, {{0, 1, 2}});
  auto g = dual_graph(single);
  const auto u1 = unfold(single, g, maximal_tree(g));
  CHECK(u1.complex.triangles.size() == 1);
  CHECK(u1.complex.num_vertices == 3);

  const auto two = make_complex(4, {}, {{0, 1, 2}, {1, 2, 3}});
  g = dual_graph(two);
  const auto u2 = unfold(two, g, maximal_tree(g));
  CHECK(u2.complex.num_vertices == 4);
  CHECK(u2.complex.edges.size() == two.edges.size());

  const auto tet = tetrahedron();
  g = dual_graph(tet);
  const auto tree = maximal_tree(g);
  CHECK(tree.size() == 3);
  const auto u = unfold(tet, g, tree);
  CHECK(u.complex.triangles.size() == 4);
  CHECK(u.complex.euler_characteristic() == 1);
  CHECK(fingerprint(complex_pi1(u.complex), P({}, {}), 12).consistent);
}

TEST_CASE("unfold rejects non-trees") {
  const auto tet = tetrahedron();
  const auto g = dual_graph(tet);
  CHECK(kind_of([&] { unfold(tet, g, {0}); }) == ErrorKind::NotSpanningTree);
  std::vector<int> all(g.arcs.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  CHECK(kind_of([&] { unfold(tet, g, all); }) == ErrorKind::NotSpanningTree);
}

TEST_CASE("pushout examples") {
  CHECK(fingerprint(pushout_of(tetrahedron()), P({}, {}), 24).consistent);
  CHECK(fingerprint(pushout_of(rp2()), P({"a"}, {{1, 1}}), 24).consistent);
  const auto t = pushout_of(torus());
  CHECK(format_abelianization(abelianization(t)) == "Z^2");
  CHECK(fingerprint(t, P({"a", "b"}, {{1, 2, -1, -2}}), 24).consistent);
}

TEST_CASE("pushout detects a non-simplicial map") {
  const auto tet = tetrahedron();
  const auto g = dual_graph(tet);
  auto u = unfold(tet, g, maximal_tree(g));
  u.vertex_map[0] = (u.vertex_map[0] + 1) % 4;
  CHECK(kind_of([&] { pushout_presentation(tet, u); }) == ErrorKind::MapMismatch);
}

TEST_CASE("H1 from boundary matrices agrees with the pushout") {
  for (const auto& a : {tetrahedron(), rp2(), torus()}) CHECK(homology_h1(a) == abelianization(pushout_of(a)));
}

TEST_CASE("presentation_to_complex examples") {
  const auto killed = realize(P({"a"}, {{1}}));
  CHECK(check_conditions(killed.realized.complex).all());
  CHECK(fingerprint(killed.pushout, P({}, {}), 12).consistent);

  const auto z = realize(P({"a"}, {}));
  CHECK(format_abelianization(abelianization(z.pushout)) == "Z");
  CHECK(fingerprint(z.pushout, P({"a"}, {}), 12).consistent);

  const auto z2 = realize(P({"a"}, {{1, 1}}));
  CHECK(fingerprint(z2.pushout, P({"a"}, {{1, 1}}), 24).consistent);
}

TEST_CASE("fingerprint examples") {
  const auto f = fingerprint(P({"a"}, {{1, 1}}), P({"a"}, {{1, 1, 1}}), 24);
  CHECK(!f.consistent);
  const auto ab = fingerprint(P({"a"}, {}), P({}, {}), 24);
  CHECK(!ab.consistent);
  CHECK(ab.ab_first.free_rank == 1);
  CHECK(ab.ab_second.free_rank == 0);
  const auto same = P({"a", "b"}, {{1, 2, 1, -2, -1, -2}});
  CHECK(fingerprint(same, same, 24).consistent);
  // Z/2 x Z/2 vs Z/4 differ in abelianization; S3 vs Z/6 differ first by hom counts
  const auto s3 = fingerprint(P({"a", "b"}, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2}}), P({"a"}, {{1, 1, 1, 1, 1, 1}}), 24);
  CHECK(!s3.consistent);
  CHECK_THROWS_AS(fingerprint(same, same, 25), Error);
}

TEST_CASE("round trip over the corpus") {
  const std::vector<GroupPresentation> corpus{
      P({}, {}), P({"a"}, {}), P({"a"}, {{1, 1}}), P({"a"}, {{1, 1, 1}}), P({"a"}, {{1, 1, 1, 1}}),
      P({"a"}, {{1, 1, 1, 1, 1}}), P({"a"}, {{1, 1, 1, 1, 1, 1}}), P({"a", "b"}, {{1, 2, -1, -2}}),
      P({"a", "b"}, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2}}), P({"a", "b"}, {{1, 2, 1, -2, -1, -2}})};
  for (const auto& p : corpus) {
    const auto plan = realize(p);
    CHECK(check_conditions(plan.realized.complex).all());
    CHECK(plan.unfolding.complex.triangles.size() == plan.realized.complex.triangles.size());
    CHECK(homology_h1(plan.realized.complex) == abelianization(plan.pushout));
    CHECK(fingerprint(p, plan.pushout, 24, 4).consistent);
    CHECK(fingerprint(complex_pi1(plan.unfolding.complex), P({}, {}), 24, 4).consistent);
    // the edge-path group of the complex agrees as well
    CHECK(fingerprint(p, complex_pi1(plan.realized.complex), 12, 4).consistent);
    CHECK(plan.z_to_y.size() == plan.Z.lines.size());
  }
}

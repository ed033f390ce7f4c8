#include <catch_amalgamated.hpp>

#include <random>

#include "stackypi1/local_system.hpp"
#include "stackypi1/spectral.hpp"
#include "stackypi1/twistor.hpp"

using namespace stackypi1;

namespace {

MatrixQ scalar(long v) {
  MatrixQ m(1, 1);
  m(0, 0) = Rational(v);
  return m;
}

std::vector<Eigen::Index> dims(const CohomologyResult& r) {
  std::vector<Eigen::Index> out;
  for (const auto& d : r.degrees) out.push_back(d.dimension);
  return out;
}

bool has_kind(ErrorKind k, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == k;
  }
  return false;
}

}  // namespace

TEST_CASE("trivial systems validate") {
  for (const auto& raw : {spaces::circle(), spaces::pyramid(), spaces::coordinate_planes(), spaces::full_triangle()}) {
    const auto s = build_space(raw);
    CHECK(check_local_system(s, trivial_matrix_system(s, 2)).ok);
    CHECK(check_local_system(s, trivial_finite_system(s, groups::symmetric(3))).ok);
  }
}

TEST_CASE("circle with monodromy 2") {
  const auto s = build_space(spaces::circle());
  auto m = trivial_matrix_system(s);
  m.transport["loop"] = scalar(2);
  CHECK(check_local_system(s, m).ok);
  CHECK(dims(cohomology(s, m)) == std::vector<Eigen::Index>{0, 0, 0});
  CHECK(dims(cohomology(s, trivial_matrix_system(s))) == std::vector<Eigen::Index>{1, 1, 0});
}

TEST_CASE("cocycle failure names the triangle") {
  const auto s = build_space(spaces::full_triangle());
  const auto g = groups::symmetric(3);
  auto f = trivial_finite_system(s, g);
  f.transport["t01"] = 1;
  f.transport["t12"] = 2;
  f.transport["t02"] = g.mul(1, 2);
  CHECK(check_local_system(s, f).ok);
  f.transport["t02"] = g.mul(2, 1);
  const auto r = check_local_system(s, f);
  CHECK(!r.ok);
  CHECK(!r.cocycle_ok);
  REQUIRE(r.triangles.size() == 1);
  CHECK(r.triangles[0].simplex == "t012");
  CHECK(!r.triangles[0].ok);
}

TEST_CASE("triangle monodromy on the planes model") {
  const auto s = build_space(spaces::coordinate_planes());
  const auto g = groups::symmetric(3);
  auto f = trivial_finite_system(s, g);
  const int a = 1, b = 3, c = 4;
  f.transport["L12"] = a;
  f.transport["L13"] = b;
  f.transport["L23"] = c;
  const int o = s.find(2, "O");
  // phi(d2) phi(d0) phi(d1)^-1 with d2 = L12, d0 = L23, d1 = L13
  CHECK(triangle_monodromy(s, f, o) == g.mul(g.mul(a, c), g.inv(b)));
  const int degenerate = s.find(2, degenerate_name({0, 0, 1}, "L12"));
  REQUIRE(degenerate >= 0);
  CHECK(triangle_monodromy(s, f, degenerate) == g.identity());
}

TEST_CASE("structure and transport errors") {
  const auto s = build_space(spaces::circle());
  auto f = trivial_finite_system(s, groups::cyclic(3));
  f.transport["loop"] = 7;
  CHECK(has_kind(ErrorKind::StructureMismatch, [&] { check_local_system(s, f); }));
  f.transport.erase("loop");
  CHECK(has_kind(ErrorKind::MissingTransport, [&] { check_local_system(s, f); }));
}

TEST_CASE("conjugation compatibility") {
  RawSpace raw;
  raw.levels[0].push_back({"x", GroupPresentation{{"a"}, {}}});
  raw.levels[1].push_back({"e", GroupPresentation{{"c"}, {}}});
  raw.faces.push_back({1, "e", 1, "x", {{1}}});
  raw.faces.push_back({1, "e", 0, "x", {{1}}});
  const auto s = build_space(raw);
  const auto g = groups::symmetric(3);
  auto f = trivial_finite_system(s, g);
  f.representation["x"] = {1};
  f.transport["e"] = 0;
  CHECK(check_local_system(s, f).ok);
  // a transport that does not commute with the representation breaks it
  f.transport["e"] = 3;
  if (g.mul(3, 1) != g.mul(1, 3)) CHECK(!check_local_system(s, f).conjugation_ok);
}

TEST_CASE("cohomology of the planes and pyramid models") {
  const auto planes = build_space(spaces::coordinate_planes());
  const auto pyramid = build_space(spaces::pyramid());
  CHECK(dims(cohomology(planes, trivial_matrix_system(planes))) == std::vector<Eigen::Index>{1, 0, 0});
  CHECK(dims(cohomology(pyramid, trivial_matrix_system(pyramid))) == std::vector<Eigen::Index>{1, 1, 0});
  const auto r = cohomology(planes, trivial_matrix_system(planes));
  CHECK(r.term_dimensions == std::vector<Eigen::Index>{3, 3, 1, 0});
}

TEST_CASE("nontrivial component groups use the presentation model") {
  RawSpace raw;
  raw.levels[0].push_back({"x", GroupPresentation{{"a", "b"}, {{1, 2, -1, -2}}}});
  const auto s = build_space(raw);
  auto m = trivial_matrix_system(s, 1);
  const auto r = cohomology(s, m);
  CHECK(r.model == "presentation");
  CHECK(r.degrees[0].dimension == 1);
  CHECK(r.degrees[1].dimension == 2);
  CHECK(!r.degrees[2].computed);
  m.representation["x"] = {scalar(3), scalar(1)};
  const auto twisted = cohomology(s, m);
  CHECK(twisted.degrees[0].dimension == 0);
}

TEST_CASE("property: Euler characteristic, H0 = pi0 and relabeling invariance") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 5)(rng);
    std::vector<std::pair<int, int>> edges;
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < n; ++i) {
      const int a = pick(rng), b = pick(rng);
      if (a < b) edges.emplace_back(a, b);
    }
    const auto s = build_space(spaces::from_simplices(n, edges, {}));
    const int d = std::uniform_int_distribution<int>(1, 2)(rng);
    const auto r = cohomology(s, trivial_matrix_system(s, d));
    long chi_terms = 0, chi_h = 0;
    for (std::size_t j = 0; j < r.term_dimensions.size(); ++j)
      chi_terms += (j % 2 ? -1 : 1) * static_cast<long>(r.term_dimensions[j]);
    for (const auto& deg : r.degrees) chi_h += (deg.degree % 2 ? -1 : 1) * static_cast<long>(deg.dimension);
    CHECK(chi_terms == chi_h);
    CHECK(r.degrees[0].dimension == static_cast<Eigen::Index>(d * pi0(s).size()));

    // reverse the vertex labels
    std::vector<std::pair<int, int>> relabeled;
    for (auto [a, b] : edges) relabeled.emplace_back(n - 1 - b, n - 1 - a);
    const auto t = build_space(spaces::from_simplices(n, relabeled, {}));
    CHECK(dims(cohomology(t, trivial_matrix_system(t, d))) == dims(r));
  }
}

TEST_CASE("weight filtration on cohomology of the planes model") {
  const auto s = build_space(spaces::coordinate_planes());
  const auto wf = weight_filtration_cohomology(s, trivial_matrix_system(s), 0);
  REQUIRE(wf.structures.size() == 3);
  CHECK(wf.structures[0].dimension == 1);
  CHECK(wf.structures[0].graded() == std::map<int, Eigen::Index>{{0, 1}});
  CHECK(wf.structures[1].dimension == 0);
  CHECK(wf.structures[2].dimension == 0);
}

TEST_CASE("weight filtration: graded dimensions sum to H^i and slopes equal weights") {
  for (const auto& raw : {spaces::pyramid(), spaces::coordinate_planes(), spaces::circle(), spaces::boundary_triangle()})
    for (int w : {-1, 0, 2}) {
      const auto s = build_space(raw);
      const auto sys = trivial_matrix_system(s, 1);
      const auto wf = weight_filtration_cohomology(s, sys, w);
      const auto h = cohomology(s, sys);
      for (std::size_t i = 0; i < wf.structures.size(); ++i) {
        Eigen::Index total = 0;
        for (const auto& [m, d] : wf.structures[i].graded()) {
          total += d;
          REQUIRE(wf.structures[i].slopes.count(m));
          CHECK(wf.structures[i].slopes.at(m) == m);
        }
        CHECK(total == h.degrees[i].dimension);
        CHECK(wf.induced[i].dimension == h.degrees[i].dimension);
      }
    }
}

TEST_CASE("acyclic local system gives empty structures") {
  const auto c = build_space(spaces::circle());
  auto m = trivial_matrix_system(c, 1);
  m.transport["loop"] = scalar(2);
  const auto wf = weight_filtration_cohomology(c, m, 0);
  for (const auto& st : wf.structures) CHECK(st.graded().empty());
}

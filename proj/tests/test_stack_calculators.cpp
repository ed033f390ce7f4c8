#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "stackypi1/parabolic.hpp"
#include "stackypi1/root_stack.hpp"
#include "stackypi1/wreath.hpp"

using namespace stackypi1;

namespace {

bool surjective(const std::vector<int>& map, int order) {
  std::vector<bool> hit(static_cast<std::size_t>(order));
  for (int x : map) hit[static_cast<std::size_t>(x)] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::SchemaError;
}

}  // namespace

TEST_CASE("root lift: the Z/2 triple") {
  const auto z2 = groups::cyclic(2);
  CHECK(root_lift_check({z2, {1}, {1}}).verdict == LiftVerdict::Lifts);
  const auto e = root_lift_check({z2, {1}, {2}});
  CHECK(e.verdict == LiftVerdict::Etale);
  CHECK(e.kernel_basis(0, 0) == 2);
  const auto n = root_lift_check({z2, {1}, {4}});
  CHECK(n.verdict == LiftVerdict::NoLift);
  CHECK(n.offending_row == 0);
  CHECK(n.offending_column == 0);
}

TEST_CASE("root lift: trivial Phi") {
  const auto one = groups::trivial();
  CHECK(root_lift_check({one, {0, 0}, {1, 1}}).verdict == LiftVerdict::Etale);
  // K = Z^2 is not inside Z + 3Z
  CHECK(root_lift_check({one, {0, 0}, {1, 3}}).verdict == LiftVerdict::NoLift);
}

TEST_CASE("root lift errors") {
  const auto s3 = groups::symmetric(3);
  int a = -1, b = -1;
  for (int x = 0; x < 6 && a < 0; ++x)
    for (int y = 0; y < 6; ++y)
      if (s3.mul(x, y) != s3.mul(y, x)) {
        a = x;
        b = y;
        break;
      }
  CHECK(kind_of([&] { root_lift_check({s3, {a, b}, {1, 1}}); }) == ErrorKind::NonCommuting);
  CHECK(kind_of([&] { root_lift_check({s3, {0}, {0}}); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { root_lift_check({s3, {0, 1}, {1}}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("root lift grid matches the lattice oracle") {
  int cases = 0;
  for (int o = 1; o <= 6; ++o) {
    const auto phi = groups::cyclic(o);
    for (int r = 1; r <= 2; ++r) {
      std::vector<int> el(static_cast<std::size_t>(r), 0);
      do {
        std::vector<int> ns(static_cast<std::size_t>(r), 1);
        do {
          ++cases;
          CHECK(root_lift_check({phi, el, ns}).verdict == oracles::root_lift(phi, el, ns));
        } while ([&] {
          for (auto& x : ns) {
            if (++x <= 4) return true;
            x = 1;
          }
          return false;
        }());
      } while ([&] {
        for (auto& x : el) {
          if (++x < o) return true;
          x = 0;
        }
        return false;
      }());
    }
  }
  CHECK(cases > 1000);
}

TEST_CASE("property: all roots 1 always lift, etale only for trivial elements") {
  const auto g = groups::abelian({2, 4});
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y) {
      const auto r = root_lift_check({g, {x, y}, {1, 1}});
      CHECK(r.verdict != LiftVerdict::NoLift);
      CHECK((r.verdict == LiftVerdict::Etale) == (x == g.identity() && y == g.identity()));
    }
}

TEST_CASE("parabolic translation examples") {
  ParabolicDescriptor higgs{2, 0, 0, {{3, {{Rational(-2, 3), 1, {0}}, {0, 1, {0}}}}}};
  CHECK(parabolic_translate(higgs).valid);
  ParabolicDescriptor one{1, 0, 1, {{2, {{Rational(-1, 2), 1, {Rational(-1, 2)}}}}}};
  const auto t = parabolic_translate(one);
  REQUIRE(t.valid);
  CHECK(t.root->divisors[0].pieces[0].character == 1);
  ParabolicDescriptor bad{1, 0, 0, {{2, {{Rational(-1, 3), 1, {0}}}}}};
  const auto v = parabolic_translate(bad);
  CHECK(!v.valid);
  REQUIRE(v.violations.size() == 1);
  CHECK(v.violations[0].message == "weight -1/3 not in (1/2)Z");
  CHECK(v.violations[0].eigenvalue == -1);
}

TEST_CASE("parabolic well-formedness") {
  ParabolicDescriptor out_of_range{1, 0, 0, {{2, {{Rational(1, 2), 1, {0}}}}}};
  CHECK_THROWS_AS(check_well_formed(out_of_range), Error);
  ParabolicDescriptor short_rank{2, 0, 0, {{2, {{0, 1, {0}}}}}};
  CHECK_THROWS_AS(check_well_formed(short_rank), Error);
  ParabolicDescriptor missing{1, 0, 0, {{2, {{0, 1, {}}}}}};
  CHECK_THROWS_AS(check_well_formed(missing), Error);
}

TEST_CASE("parabolic degree examples") {
  ParabolicDescriptor flat{2, 5, 0, {{2, {{0, 2, {0, 0}}}}}};
  CHECK(parabolic_degree(flat) == Rational(5));
  ParabolicDescriptor one{2, 1, 0, {{2, {{Rational(-1, 2), 1, {0}}, {0, 1, {0}}}}}};
  CHECK(parabolic_degree(one) == Rational(1, 2));
  ParabolicDescriptor two{2, 0, 0, {{3, {{Rational(-1, 3), 2, {0, 0}}}}, {2, {{Rational(-1, 2), 1, {0}}, {0, 1, {0}}}}}};
  CHECK(parabolic_degree(two) == Rational(-7, 6));
}

TEST_CASE("property: parabolic round trip and perturbation detection") {
  std::mt19937_64 rng(99);
  int perturbed = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_valid_descriptor(rng);
    const auto t = parabolic_translate(p);
    REQUIRE(t.valid);
    CHECK(to_parabolic(*t.root) == p);
    // perturb one eigenvalue: exactly that one must be reported
    if (p.divisors.empty()) continue;
    auto q = p;
    auto& div = q.divisors[rng() % q.divisors.size()];
    auto& piece = div.pieces[rng() % div.pieces.size()];
    const std::size_t k = rng() % piece.residues.size();
    piece.residues[k] += Rational(1, 1 + static_cast<long>(rng() % 7));
    const auto u = parabolic_translate(q);
    CHECK(!u.valid);
    REQUIRE(u.violations.size() == 1);
    CHECK(u.violations[0].eigenvalue == static_cast<int>(k));
    ++perturbed;
  }
  CHECK(perturbed > 50);
}

TEST_CASE("wreath order and hand product") {
  const auto z3 = groups::cyclic(3), z2 = groups::cyclic(2);
  const GroupAction inversion{{0, 1, 2}, {0, 2, 1}};
  const auto h = wreath_semidirect(z3, z2, inversion);
  CHECK(h.order() == 36);
  // (1,(1,0),1)(1,(2,1),0): the action of phi = 1 sends (1,(2,1)) to
  // (1,(-g_1,-g_0)) = (1,(2,1)); then (1,(1,0))(1,(2,1)) = (0,(1+1, 0+2)).
  const auto p = h.multiply({1, {1, 0}, 1}, {1, {2, 1}, 0});
  CHECK(p == WreathElement{0, {2, 2}, 1});
  CHECK(h.decode(h.encode(p)) == p);
  REQUIRE(h.table());
  CHECK(h.table()->order() == 36);
}

TEST_CASE("wreath axioms") {
  std::mt19937_64 rng(5);
  const auto s3 = groups::symmetric(3), z2 = groups::cyclic(2), z3 = groups::cyclic(3);
  const auto full = validate_axioms(wreath_semidirect(s3, z2, trivial_action(s3, z2)), rng);
  CHECK(full.exhaustive);
  CHECK(full.ok());
  // sampled mode: 1000 random triples
  const auto big = wreath_semidirect(s3, z3, trivial_action(s3, z3));
  const auto sampled = validate_axioms(big, rng, 0, 1000);
  CHECK(!sampled.exhaustive);
  CHECK(sampled.ok());
  CHECK(sampled.checks >= 1000);
  for (const auto& a : all_actions(z3, z2)) CHECK(validate_axioms(wreath_semidirect(z3, z2, a), rng).ok());
}

TEST_CASE("actions must be by automorphisms") {
  const auto z3 = groups::cyclic(3), z2 = groups::cyclic(2);
  CHECK(kind_of([&] { check_action(z3, z2, {{0, 1, 2}, {0, 1, 1}}); }) == ErrorKind::NotAnAction);
  CHECK(kind_of([&] { check_action(z3, z2, {{0, 2, 1}, {0, 2, 1}}); }) == ErrorKind::NotAnAction);
  CHECK(all_actions(z3, z2).size() == 2);
  CHECK(all_actions(groups::symmetric(3), z2).size() == 4);
}

TEST_CASE("change of action examples") {
  const auto z2 = groups::cyclic(2), z3 = groups::cyclic(3);
  const auto trivial_g = changeaction_check(z2, {0, 1}, groups::trivial(), z2, trivial_action(groups::trivial(), z2));
  CHECK(trivial_g.left.cardinality == Rational(1));
  CHECK(trivial_g.right.cardinality == Rational(1));

  const auto one = groups::trivial();
  const auto trivial_phi = changeaction_check(z3, {0, 0, 0}, groups::symmetric(3), one, trivial_action(groups::symmetric(3), one));
  CHECK(trivial_phi.equal);
  CHECK(trivial_phi.left.automorphisms == trivial_phi.right.automorphisms);

  const auto r = changeaction_check(z2, {0, 1}, z3, z2, trivial_action(z3, z2));
  CHECK(r.equal);
  CHECK(r.kernel_order == 1);
  CHECK(kind_of([&] { changeaction_check(z2, {0, 0}, z3, z2, trivial_action(z3, z2)); }) == ErrorKind::NotSurjective);
}

TEST_CASE("change of action grid") {
  const std::vector<FiniteGroup> gs{groups::cyclic(2), groups::cyclic(3), groups::symmetric(3)};
  int cases = 0;
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      const auto gamma = groups::cyclic(a), phi = groups::cyclic(b);
      for (const auto& omega : homomorphisms(gamma, phi)) {
        if (!surjective(omega, b)) continue;
        for (const auto& g : gs)
          for (const auto& act : all_actions(g, phi)) {
            ++cases;
            const auto rep = changeaction_check(gamma, omega, g, phi, act, 2);
            CHECK(rep.equal);
            CHECK(rep.quot_equal);
          }
      }
    }
  CHECK(cases == 50);
}

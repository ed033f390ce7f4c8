// Acceptance runner: one PASS/FAIL line per criterion.  All checks are exact;
// the only tolerances are the wall-clock limits below.  Criteria listed in
// kExpectedFailures are implemented faithfully and known to fail (see README);
// the exit code is nonzero only for failures outside that list.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "stackypi1/parabolic.hpp"
#include "stackypi1/realization.hpp"
#include "stackypi1/root_stack.hpp"
#include "stackypi1/spectral.hpp"
#include "stackypi1/torsor.hpp"
#include "stackypi1/twistor.hpp"
#include "stackypi1/wreath.hpp"

using namespace stackypi1;

namespace {

constexpr int kThreads = 4;
const std::set<int> kExpectedFailures{6};

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  double limit_seconds;
  std::function<Outcome()> run;
};

const GroupPresentation kTrivial{};
const GroupPresentation kZ{{"t"}, {}};

SimplicialBasepoint vertex(const std::string& v) {
  SimplicialBasepoint b;
  b.points.emplace_back(0, v);
  return b;
}

Outcome ac1() {
  const auto planes = build_space(spaces::coordinate_planes());
  const auto pyramid = build_space(spaces::pyramid());
  const auto fp_planes = fingerprint(pi1_presentation(planes, "P1"), kTrivial, 24, kThreads);
  const auto fp_pyramid = fingerprint(pi1_presentation(pyramid, "P1"), kZ, 24, kThreads);
  const auto s3 = groups::symmetric(3);
  const auto c_planes = torsor_classes(planes, s3).classes.size();
  const auto c_pyramid = torsor_classes(pyramid, s3).classes.size();
  std::ostringstream d;
  d << "planes~1: " << fp_planes.consistent << ", pyramid~Z: " << fp_pyramid.consistent << ", S3 classes " << c_planes
    << " vs " << c_pyramid;
  return {fp_planes.consistent && fp_pyramid.consistent && c_planes == 1 && c_pyramid == 3, d.str()};
}

Outcome ac2() {
  const auto boundary = build_space(spaces::boundary_triangle());
  const auto full = build_space(spaces::full_triangle());
  int groups_checked = 0, bad = 0;
  for (const auto& g : groups::catalog()) {
    ++groups_checked;
    if (enumerate_framed(boundary, vertex("t0"), g).framed.size() != static_cast<std::size_t>(g.order())) ++bad;
    if (enumerate_framed(full, vertex("t0"), g).framed.size() != 1) ++bad;
  }
  return {bad == 0, std::to_string(groups_checked) + " groups, " + std::to_string(bad) + " mismatches"};
}

Outcome ac3() {
  std::mt19937_64 rng(3);
  const auto gs = groups::catalog_up_to(8);
  int bad = 0, comparisons = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = build_space(oracles::random_trivial_space(rng, 5, 4));
    const auto p = pi1_presentation(s, "v0");
    for (const auto& g : gs) {
      ++comparisons;
      if (torsor_classes(s, g, {kThreads, nullptr}).classes.size() != count_hom_classes(p, g)) ++bad;
    }
  }
  return {bad == 0, "50 spaces x " + std::to_string(gs.size()) + " groups, " + std::to_string(bad) + " of " +
                        std::to_string(comparisons) + " differ"};
}

Outcome ac4() {
  std::mt19937_64 rng(4);
  int dec_bad = 0, u_bad = 0;
  for (int trial = 0; trial < 200; ++trial) {
    RandomComplexOptions opt;
    opt.degrees = 1 + static_cast<int>(rng() % 4);
    opt.max_dim = 6;
    opt.max_weight = static_cast<int>(rng() % 4);  // length <= 4
    const auto fc = random_filtered_complex(rng, opt);
    if (!compare_dec_pages(fc).ok) ++dec_bad;
    const auto u = check_u_acyclic(fc);
    if (!u.acyclic || !u.well_defined || !u.sequence_exact) ++u_bad;
  }
  return {dec_bad == 0 && u_bad == 0,
          "200 complexes: " + std::to_string(dec_bad) + " Dec mismatches, " + std::to_string(u_bad) + " non-acyclic U"};
}

Outcome ac5() {
  std::mt19937_64 rng(5);
  int d_bad = 0, b_bad = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = random_d_mixed(rng);
    if (classify_mtc(d).kind != MixedKind::DMixed || !check_degeneration(d, 2).passed) ++d_bad;
    const auto b = random_b_mixed(rng);
    if (!classify_mtc(b).b_mixed || !check_degeneration(b, 1).passed) ++b_bad;
  }
  const auto w = d2_witness();
  bool untagged = false;
  try {
    classify_mtc(w);
  } catch (const Error& e) {
    untagged = e.kind() == ErrorKind::MissingSlopeTag;
  }
  const auto cert = check_degeneration(w, 2);
  const bool witness = untagged && !cert.passed && cert.first_nonzero && !cert.first_nonzero->zero;
  return {d_bad == 0 && b_bad == 0 && witness, "100 D-mixed (" + std::to_string(d_bad) + " fail), 100 B-mixed (" +
                                                   std::to_string(b_bad) + " fail), witness d_2 != 0: " +
                                                   (witness ? "yes" : "no")};
}

Outcome ac6() {
  const auto s = build_space(spaces::pyramid());
  const auto sys = trivial_matrix_system(s, 1);
  const auto wf = weight_filtration_cohomology(s, sys, 0);
  const auto& h1 = wf.structures.at(1);
  const auto graded = h1.graded();
  // cross-check: W^B_m H^1 = W_{m-1} H^1 of the total complex
  const auto induced = induced_filtration(wf.total);
  bool cross = false;
  for (const auto& f : induced)
    if (f.degree == 1) {
      std::map<int, Eigen::Index> shifted;
      for (auto [m, d] : f.graded) shifted[m + 1] = d;
      cross = shifted == graded;
    }
  std::ostringstream d;
  d << "H^1 graded {";
  for (auto [m, dim] : graded) d << " weight " << m << ": dim " << dim << " slope " << h1.slopes.at(m);
  d << " }, expected weight 1 slope 1; spectral cross-check " << (cross ? "agrees" : "DISAGREES");
  const bool expected = graded == std::map<int, Eigen::Index>{{1, 1}} && h1.slopes.at(1) == 1;
  return {expected && cross, d.str()};
}

Outcome ac7() {
  int bad = 0;
  std::string failing;
  for (const auto& [name, p] : oracles::presentation_corpus()) {
    const auto plan = realize(p);
    const bool round = fingerprint(p, plan.pushout, 24, kThreads).consistent;
    const bool unfolded = fingerprint(complex_pi1(plan.unfolding.complex), kTrivial, 24, kThreads).consistent;
    if (!round || !unfolded) {
      ++bad;
      failing += " " + name;
    }
  }
  return {bad == 0, std::to_string(oracles::presentation_corpus().size()) + " presentations, failing:" +
                        (failing.empty() ? " none" : failing)};
}

Outcome ac8() {
  const auto z2 = groups::cyclic(2);
  const bool triple = root_lift_check({z2, {1}, {1}}).verdict == LiftVerdict::Lifts &&
                      root_lift_check({z2, {1}, {2}}).verdict == LiftVerdict::Etale &&
                      root_lift_check({z2, {1}, {4}}).verdict == LiftVerdict::NoLift;
  int cases = 0, bad = 0;
  for (int o = 1; o <= 6; ++o) {
    const auto phi = groups::cyclic(o);
    for (int r = 1; r <= 2; ++r) {
      const int elements = r == 1 ? o : o * o;
      const int roots = r == 1 ? 4 : 16;
      for (int e = 0; e < elements; ++e)
        for (int n = 0; n < roots; ++n) {
          std::vector<int> el{e % o}, ns{n % 4 + 1};
          if (r == 2) {
            el.push_back(e / o);
            ns.push_back(n / 4 + 1);
          }
          ++cases;
          if (root_lift_check({phi, el, ns}).verdict != oracles::root_lift(phi, el, ns)) ++bad;
        }
    }
  }
  return {triple && bad == 0, std::string("Z/2 triple ") + (triple ? "ok" : "WRONG") + ", grid " +
                                  std::to_string(cases) + " cases, " + std::to_string(bad) + " mismatches"};
}

Outcome ac9() {
  std::mt19937_64 rng(9);
  int round_bad = 0, missed = 0, perturbed = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_valid_descriptor(rng);
    const auto t = parabolic_translate(p);
    if (!t.valid || !(to_parabolic(*t.root) == p)) ++round_bad;
    if (p.divisors.empty()) continue;
    auto q = p;
    const std::size_t di = rng() % q.divisors.size();
    const std::size_t pi = rng() % q.divisors[di].pieces.size();
    auto& res = q.divisors[di].pieces[pi].residues;
    const std::size_t k = rng() % res.size();
    res[k] += Rational(1, 1 + static_cast<long>(rng() % 9));
    ++perturbed;
    const auto u = parabolic_translate(q);
    bool found = false;
    for (const auto& v : u.violations) found |= v.divisor == di && v.piece == pi && v.eigenvalue == static_cast<int>(k);
    if (u.valid || !found) ++missed;
  }
  return {round_bad == 0 && missed == 0, "100 round trips (" + std::to_string(round_bad) + " fail), " +
                                             std::to_string(perturbed) + " perturbations, " + std::to_string(missed) +
                                             " missed"};
}

Outcome ac10() {
  const std::vector<FiniteGroup> gs{groups::cyclic(2), groups::cyclic(3), groups::symmetric(3)};
  int cases = 0, bad = 0;
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      const auto gamma = groups::cyclic(a), phi = groups::cyclic(b);
      for (const auto& omega : homomorphisms(gamma, phi)) {
        std::set<int> image(omega.begin(), omega.end());
        if (static_cast<int>(image.size()) != b) continue;
        for (const auto& g : gs)
          for (const auto& act : all_actions(g, phi)) {
            ++cases;
            if (!changeaction_check(gamma, omega, g, phi, act, kThreads).equal) ++bad;
          }
      }
    }
  return {bad == 0, std::to_string(cases) + " instances, " + std::to_string(bad) + " unequal"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{{1, 1, ac1},   {2, 10, ac2}, {3, 60, ac3}, {4, 120, ac4}, {5, 30, ac5},
                                        {6, 1, ac6},   {7, 300, ac7}, {8, 30, ac8}, {9, 5, ac9},   {10, 300, ac10}};
  int unexpected = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.limit_seconds;
    const bool pass = o.ok && in_time;
    const bool expected_red = kExpectedFailures.count(c.id) > 0;
    if (!pass && !expected_red) ++unexpected;
    if (pass && expected_red) ++unexpected;  // stale expectation
    std::cout << "AC" << c.id << (c.id < 10 ? "  " : " ") << (pass ? "PASS" : "FAIL") << "  " << o.detail << "  ["
              << std::fixed << std::setprecision(3) << secs << "s / " << std::setprecision(0) << c.limit_seconds << "s"
              << (in_time ? "" : " EXCEEDED") << "]" << (expected_red && !pass ? "  (expected failure, see README)" : "")
              << "\n";
  }
  return unexpected == 0 ? 0 : 1;
}

#include "stackypi1/wreath.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "stackypi1/parallel.hpp"

namespace stackypi1 {

void check_action(const FiniteGroup& g, const FiniteGroup& phi, const GroupAction& action) {
  if (static_cast<int>(action.size()) != phi.order())
    throw Error(ErrorKind::NotAnAction, "action lists " + std::to_string(action.size()) + " maps for " +
                                            std::to_string(phi.order()) + " group elements");
  for (int f = 0; f < phi.order(); ++f) {
    const auto& a = action[static_cast<std::size_t>(f)];
    const std::string at = "/action/" + std::to_string(f);
    if (static_cast<int>(a.size()) != g.order()) throw Error(ErrorKind::NotAnAction, "map has the wrong length", at);
    std::vector<bool> hit(static_cast<std::size_t>(g.order()), false);
    for (int x : a) {
      if (x < 0 || x >= g.order()) throw Error(ErrorKind::NotAnAction, "map value out of range", at);
      hit[static_cast<std::size_t>(x)] = true;
    }
    if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
      throw Error(ErrorKind::NotAnAction, "map is not a bijection", at);
    if (!is_homomorphism(g, g, a)) throw Error(ErrorKind::NotAnAction, "map is not a group homomorphism", at);
  }
  for (int x = 0; x < g.order(); ++x)
    if (action[static_cast<std::size_t>(phi.identity())][static_cast<std::size_t>(x)] != x)
      throw Error(ErrorKind::NotAnAction, "identity does not act trivially");
  for (int f = 0; f < phi.order(); ++f)
    for (int h = 0; h < phi.order(); ++h)
      for (int x = 0; x < g.order(); ++x)
        if (action[static_cast<std::size_t>(phi.mul(f, h))][static_cast<std::size_t>(x)] !=
            action[static_cast<std::size_t>(f)][static_cast<std::size_t>(action[static_cast<std::size_t>(h)][static_cast<std::size_t>(x)])])
          throw Error(ErrorKind::NotAnAction, "action is not compatible with the product of " + std::to_string(f) +
                                                  " and " + std::to_string(h));
}

GroupAction trivial_action(const FiniteGroup& g, const FiniteGroup& phi) {
  std::vector<int> id(static_cast<std::size_t>(g.order()));
  for (int x = 0; x < g.order(); ++x) id[static_cast<std::size_t>(x)] = x;
  return GroupAction(static_cast<std::size_t>(phi.order()), id);
}

std::vector<GroupAction> all_actions(const FiniteGroup& g, const FiniteGroup& phi) {
  const auto auts = automorphisms(g);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < auts.size(); ++i) index.emplace(auts[i], static_cast<int>(i));
  std::vector<std::vector<int>> table(auts.size(), std::vector<int>(auts.size()));
  for (std::size_t i = 0; i < auts.size(); ++i)
    for (std::size_t j = 0; j < auts.size(); ++j) {
      std::vector<int> c(static_cast<std::size_t>(g.order()));
      for (int x = 0; x < g.order(); ++x) c[static_cast<std::size_t>(x)] = auts[i][static_cast<std::size_t>(auts[j][static_cast<std::size_t>(x)])];
      table[i][j] = index.at(c);
    }
  const FiniteGroup aut(std::move(table), "Aut");
  std::vector<GroupAction> out;
  for (const auto& hom : homomorphisms(phi, aut)) {
    GroupAction a;
    for (int f : hom) a.push_back(auts[static_cast<std::size_t>(f)]);
    out.push_back(std::move(a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

WreathGroup::WreathGroup(FiniteGroup g, FiniteGroup phi, GroupAction action)
    : g_(std::move(g)), phi_(std::move(phi)), action_(std::move(action)) {
  check_action(g_, phi_, action_);
  const auto n = static_cast<std::uint64_t>(phi_.order());
  wreath_order_ = n;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (wreath_order_ > (std::uint64_t{1} << 50) / static_cast<std::uint64_t>(g_.order()))
      throw Error(ErrorKind::InvalidArgument, "wreath product too large to encode");
    wreath_order_ *= static_cast<std::uint64_t>(g_.order());
  }
  if (wreath_order_ > (std::uint64_t{1} << 50) / n) throw Error(ErrorKind::InvalidArgument, "wreath product too large to encode");
}

void WreathGroup::decode_into(std::uint64_t a, int& v, std::vector<int>& g, int& phi) const {
  const auto n = static_cast<std::uint64_t>(phi_.order()), m = static_cast<std::uint64_t>(g_.order());
  phi = static_cast<int>(a / wreath_order_);
  a %= wreath_order_;
  v = static_cast<int>(a % n);
  a /= n;
  g.resize(n);
  for (std::uint64_t w = 0; w < n; ++w) {
    g[w] = static_cast<int>(a % m);
    a /= m;
  }
}

std::uint64_t WreathGroup::encode_raw(int v, const std::vector<int>& g, int phi) const {
  const auto n = static_cast<std::uint64_t>(phi_.order()), m = static_cast<std::uint64_t>(g_.order());
  std::uint64_t k = 0;
  for (std::size_t w = g.size(); w-- > 0;) k = k * m + static_cast<std::uint64_t>(g[w]);
  return static_cast<std::uint64_t>(v) + n * k + wreath_order_ * static_cast<std::uint64_t>(phi);
}

std::uint64_t WreathGroup::encode(const WreathElement& e) const {
  if (e.v < 0 || e.v >= phi_.order() || e.phi < 0 || e.phi >= phi_.order() ||
      static_cast<int>(e.g.size()) != phi_.order() ||
      std::any_of(e.g.begin(), e.g.end(), [&](int x) { return x < 0 || x >= g_.order(); }))
    throw Error(ErrorKind::InvalidArgument, "malformed wreath element");
  return encode_raw(e.v, e.g, e.phi);
}

WreathElement WreathGroup::decode(std::uint64_t a) const {
  if (a >= order()) throw Error(ErrorKind::InvalidArgument, "element code out of range");
  WreathElement e;
  decode_into(a, e.v, e.g, e.phi);
  return e;
}

std::uint64_t WreathGroup::identity() const {
  return encode_raw(phi_.identity(), std::vector<int>(static_cast<std::size_t>(phi_.order()), g_.identity()),
                    phi_.identity());
}

std::uint64_t WreathGroup::mul(std::uint64_t a, std::uint64_t b) const {
  thread_local std::vector<int> g, g2, out;
  int v, f, v2, f2;
  decode_into(a, v, g, f);
  decode_into(b, v2, g2, f2);
  const int n = phi_.order();
  // (v, g) . f(v2, g2), where f(v2, g2) = (f v2 f^-1, w |-> f(g2_{f^-1 w}))
  const int fi = phi_.inv(f);
  const int vi = phi_.inv(v);
  const auto& act = action_[static_cast<std::size_t>(f)];
  out.resize(static_cast<std::size_t>(n));
  for (int w = 0; w < n; ++w) {
    const int u = phi_.mul(vi, w);
    out[static_cast<std::size_t>(w)] = g_.mul(g[static_cast<std::size_t>(w)],
                                              act[static_cast<std::size_t>(g2[static_cast<std::size_t>(phi_.mul(fi, u))])]);
  }
  return encode_raw(phi_.mul(v, phi_.conj(f, v2)), out, phi_.mul(f, f2));
}

std::uint64_t WreathGroup::inv(std::uint64_t a) const {
  thread_local std::vector<int> g;
  int v, f;
  decode_into(a, v, g, f);
  const int n = phi_.order();
  // (v,g)^-1 = (v^-1, u |-> g_{vu}^-1), then act by f^-1
  std::vector<int> h(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) h[static_cast<std::size_t>(u)] = g_.inv(g[static_cast<std::size_t>(phi_.mul(v, u))]);
  const int fi = phi_.inv(f);
  std::vector<int> out(static_cast<std::size_t>(n));
  const auto& act = action_[static_cast<std::size_t>(fi)];
  for (int w = 0; w < n; ++w)
    out[static_cast<std::size_t>(w)] = act[static_cast<std::size_t>(h[static_cast<std::size_t>(phi_.mul(f, w))])];
  return encode_raw(phi_.conj(fi, phi_.inv(v)), out, fi);
}

std::pair<int, int> WreathGroup::project(std::uint64_t a) const {
  const auto n = static_cast<std::uint64_t>(phi_.order());
  return {static_cast<int>((a % wreath_order_) % n), static_cast<int>(a / wreath_order_)};
}

std::pair<int, int> WreathGroup::semidirect_mul(std::pair<int, int> a, std::pair<int, int> b) const {
  return {phi_.mul(a.first, phi_.conj(a.second, b.first)), phi_.mul(a.second, b.second)};
}

std::vector<std::uint64_t> WreathGroup::wreath_generators() const {
  std::vector<std::uint64_t> out;
  const int n = phi_.order();
  for (int s : g_.generators()) {
    std::vector<int> g(static_cast<std::size_t>(n), g_.identity());
    g[static_cast<std::size_t>(phi_.identity())] = s;
    out.push_back(encode_raw(phi_.identity(), g, phi_.identity()));
  }
  for (int t : phi_.generators())
    out.push_back(encode_raw(t, std::vector<int>(static_cast<std::size_t>(n), g_.identity()), phi_.identity()));
  return out;
}

std::vector<std::uint64_t> WreathGroup::generators() const {
  auto out = wreath_generators();
  for (int t : phi_.generators())
    out.push_back(encode_raw(phi_.identity(), std::vector<int>(static_cast<std::size_t>(phi_.order()), g_.identity()), t));
  return out;
}

std::vector<std::uint64_t> WreathGroup::fiber(int v, int phi) const {
  const auto n = static_cast<std::uint64_t>(phi_.order());
  std::vector<std::uint64_t> out;
  out.reserve(wreath_order_ / n);
  for (std::uint64_t k = 0; k < wreath_order_ / n; ++k)
    out.push_back(static_cast<std::uint64_t>(v) + n * k + wreath_order_ * static_cast<std::uint64_t>(phi));
  return out;
}

std::optional<FiniteGroup> WreathGroup::table() const {
  if (order() > kTableThreshold) return std::nullopt;
  const auto N = static_cast<std::size_t>(order());
  std::vector<std::vector<int>> t(N, std::vector<int>(N));
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) t[a][b] = static_cast<int>(mul(a, b));
  return FiniteGroup(std::move(t), "(" + g_.name() + " wr " + phi_.name() + ") x| " + phi_.name());
}

WreathGroup wreath_semidirect(const FiniteGroup& g, const FiniteGroup& phi, const GroupAction& action) {
  return WreathGroup(g, phi, action);
}

AxiomReport validate_axioms(const WreathGroup& h, std::mt19937_64& rng, std::uint64_t exhaustive_limit, int samples) {
  AxiomReport r;
  r.order = h.order();
  const std::uint64_t e = h.identity();
  auto check_element = [&](std::uint64_t x) {
    if (h.mul(x, e) != x || h.mul(e, x) != x) r.identity = false;
    const std::uint64_t xi = h.inv(x);
    if (h.mul(x, xi) != e || h.mul(xi, x) != e) r.inverses = false;
    ++r.checks;
  };
  auto check_pair = [&](std::uint64_t x, std::uint64_t y) {
    if (h.project(h.mul(x, y)) != h.semidirect_mul(h.project(x), h.project(y))) r.projection_homomorphism = false;
  };
  if (r.order <= exhaustive_limit) {
    r.exhaustive = true;
    const auto gens = h.generators();
    for (std::uint64_t x = 0; x < r.order; ++x) {
      check_element(x);
      for (std::uint64_t s : gens) {
        check_pair(x, s);
        const std::uint64_t xs = h.mul(x, s);
        for (std::uint64_t y = 0; y < r.order; ++y) {
          if (h.mul(xs, y) != h.mul(x, h.mul(s, y))) r.associativity = false;
          ++r.checks;
        }
      }
    }
  } else {
    std::uniform_int_distribution<std::uint64_t> pick(0, r.order - 1);
    for (int i = 0; i < samples; ++i) {
      const std::uint64_t x = pick(rng), y = pick(rng), z = pick(rng);
      check_element(x);
      check_pair(x, y);
      if (h.mul(h.mul(x, y), z) != h.mul(x, h.mul(y, z))) r.associativity = false;
      ++r.checks;
    }
  }
  return r;
}

namespace {

// Homomorphisms Gamma -> H whose generator images are drawn from the given
// candidate lists; returned as generator image tuples, sorted.
std::vector<std::vector<std::uint64_t>> lifts(const FiniteGroup& gamma, const WreathGroup& h,
                                              const std::vector<std::vector<std::uint64_t>>& candidates,
                                              Budget* budget) {
  const auto& gens = gamma.generators();
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> choice(gens.size());
  std::vector<std::uint64_t> image(static_cast<std::size_t>(gamma.order()));
  std::vector<bool> set(static_cast<std::size_t>(gamma.order()));
  auto extends = [&]() {
    std::fill(set.begin(), set.end(), false);
    image[static_cast<std::size_t>(gamma.identity())] = h.identity();
    set[static_cast<std::size_t>(gamma.identity())] = true;
    std::deque<int> queue{gamma.identity()};
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const int y = gamma.mul(x, gens[i]);
        const std::uint64_t im = h.mul(image[static_cast<std::size_t>(x)], choice[i]);
        if (!set[static_cast<std::size_t>(y)]) {
          set[static_cast<std::size_t>(y)] = true;
          image[static_cast<std::size_t>(y)] = im;
          queue.push_back(y);
        } else if (image[static_cast<std::size_t>(y)] != im) {
          return false;
        }
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == gens.size()) {
      if (budget) budget->charge();
      if (extends()) out.push_back(choice);
      return;
    }
    for (std::uint64_t c : candidates[i]) {
      choice[i] = c;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// Orbits of a finite group (given by generator actions) on a sorted object list.
GroupoidSummary orbit_summary(const std::vector<std::vector<std::uint64_t>>& objects, std::uint64_t group_order,
                              const std::function<std::vector<std::uint64_t>(std::size_t, const std::vector<std::uint64_t>&)>& act,
                              std::size_t num_generators) {
  GroupoidSummary s;
  s.objects = objects.size();
  s.cardinality = 0;
  std::set<std::vector<std::uint64_t>> seen;
  for (const auto& start : objects) {
    if (seen.count(start)) continue;
    std::deque<std::vector<std::uint64_t>> queue{start};
    seen.insert(start);
    std::uint64_t size = 0;
    while (!queue.empty()) {
      auto x = std::move(queue.front());
      queue.pop_front();
      ++size;
      for (std::size_t i = 0; i < num_generators; ++i) {
        auto y = act(i, x);
        if (seen.insert(y).second) queue.push_back(std::move(y));
      }
    }
    if (group_order % size != 0) throw Error(ErrorKind::ValidationFailed, "orbit size does not divide the group order");
    const std::uint64_t aut = group_order / size;
    s.automorphisms.push_back(aut);
    s.cardinality += Rational(1, static_cast<long long>(aut));
  }
  if (seen.size() != objects.size()) throw Error(ErrorKind::ValidationFailed, "gauge action leaves the object set");
  return s;
}

}  // namespace

ChangeActionReport changeaction_check(const FiniteGroup& gamma, const std::vector<int>& omega, const FiniteGroup& g,
                                      const FiniteGroup& phi, const GroupAction& action, int threads, Budget* budget) {
  if (static_cast<int>(omega.size()) != gamma.order())
    throw Error(ErrorKind::InvalidArgument, "omega must list one image per element of Gamma");
  for (int x : omega)
    if (x < 0 || x >= phi.order()) throw Error(ErrorKind::InvalidArgument, "omega value out of range");
  if (!is_homomorphism(gamma, phi, omega)) throw Error(ErrorKind::InvalidArgument, "omega is not a homomorphism");
  {
    std::vector<bool> hit(static_cast<std::size_t>(phi.order()), false);
    for (int x : omega) hit[static_cast<std::size_t>(x)] = true;
    if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
      throw Error(ErrorKind::NotSurjective, "omega is not surjective");
  }
  const WreathGroup h(g, phi, action);
  ChangeActionReport rep;
  rep.wreath_order = h.wreath_order();
  rep.h_order = h.order();

  // left: Hom(ker omega, G) // G
  std::vector<int> kel;
  for (int x = 0; x < gamma.order(); ++x)
    if (omega[static_cast<std::size_t>(x)] == phi.identity()) kel.push_back(x);
  rep.kernel_order = static_cast<int>(kel.size());
  std::map<int, int> kpos;
  for (std::size_t i = 0; i < kel.size(); ++i) kpos[kel[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> ktable(kel.size(), std::vector<int>(kel.size()));
  for (std::size_t i = 0; i < kel.size(); ++i)
    for (std::size_t j = 0; j < kel.size(); ++j) ktable[i][j] = kpos.at(gamma.mul(kel[i], kel[j]));
  const FiniteGroup kernel(std::move(ktable), "ker");
  const auto homs = homomorphisms(kernel, g, budget);
  {
    std::map<std::vector<int>, std::uint64_t> orbit;
    for (const auto& f : homs) {
      std::vector<int> best = f;
      for (int x = 0; x < g.order(); ++x) {
        std::vector<int> c(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) c[i] = g.conj(x, f[i]);
        best = std::min(best, c);
      }
      ++orbit[best];
    }
    rep.left.objects = homs.size();
    rep.left.cardinality = 0;
    for (const auto& [key, size] : orbit) {
      const std::uint64_t aut = static_cast<std::uint64_t>(g.order()) / size;
      rep.left.automorphisms.push_back(aut);
      rep.left.cardinality += Rational(1, static_cast<long long>(aut));
    }
  }

  const auto& ggens = gamma.generators();
  const int n = phi.order();
  auto conj_images = [&](std::uint64_t x, const std::vector<std::uint64_t>& obj) {
    std::vector<std::uint64_t> out = obj;
    const std::uint64_t xi = h.inv(x);
    for (std::size_t i = 1; i < out.size(); ++i) out[i] = h.mul(h.mul(x, out[i]), xi);
    return out;
  };
  auto run = [&](std::size_t tasks, const std::function<std::vector<std::vector<std::uint64_t>>(std::size_t, Budget*)>& fn) {
    std::vector<std::vector<std::vector<std::uint64_t>>> parts(tasks);
    std::vector<Budget> budgets(tasks, budget ? *budget : Budget{});
    parallel_for(tasks, threads, [&](std::size_t t) { parts[t] = fn(t, budget ? &budgets[t] : nullptr); });
    if (budget) {
      const std::uint64_t base = budget->used;
      for (const auto& b : budgets) budget->charge(b.used - base);
    }
    std::vector<std::vector<std::uint64_t>> all;
    for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    std::sort(all.begin(), all.end());
    return all;
  };

  // right: objects (rho, k) with k proj(rho) k^-1 = omega; gauge x: (x rho x^-1, k proj(x)^-1)
  {
    const auto objects = run(static_cast<std::size_t>(n), [&](std::size_t k, Budget* b) {
      std::vector<std::vector<std::uint64_t>> cand;
      const int ki = phi.inv(static_cast<int>(k));
      for (int s : ggens) cand.push_back(h.fiber(phi.conj(ki, omega[static_cast<std::size_t>(s)]), phi.identity()));
      std::vector<std::vector<std::uint64_t>> out;
      for (auto& l : lifts(gamma, h, cand, b)) {
        l.insert(l.begin(), k);
        out.push_back(std::move(l));
      }
      return out;
    });
    const auto gens = h.wreath_generators();
    rep.right = orbit_summary(objects, h.wreath_order(),
                              [&](std::size_t i, const std::vector<std::uint64_t>& obj) {
                                auto out = conj_images(gens[i], obj);
                                out[0] = static_cast<std::uint64_t>(
                                    phi.mul(static_cast<int>(obj[0]), phi.inv(h.project(gens[i]).first)));
                                return out;
                              },
                              gens.size());
  }
  rep.equal = rep.left.cardinality == rep.right.cardinality;

  // quotient square: fiber of Hom(Gamma, H) // H -> Hom(Gamma, Phi x| Phi) over B Phi.
  // rho0 = (omega, 1); Phi maps to automorphisms of rho0 by f |-> (f^-1, f).
  rep.quot_left.objects = rep.left.objects;
  rep.quot_left.cardinality = rep.left.cardinality / n;
  {
    using Pair = std::pair<int, int>;
    auto pinv = [&](Pair a) { return Pair{phi.conj(phi.inv(a.second), phi.inv(a.first)), phi.inv(a.second)}; };
    auto iota = [&](int f) { return Pair{phi.inv(f), f}; };
    for (int f = 0; f < n; ++f)
      for (int x = 0; x < gamma.order(); ++x) {
        const Pair r0{omega[static_cast<std::size_t>(x)], phi.identity()};
        if (h.semidirect_mul(h.semidirect_mul(iota(f), r0), pinv(iota(f))) != r0)
          throw Error(ErrorKind::ValidationFailed, "Phi does not act by automorphisms of the torsor point");
      }
    auto code = [&](Pair a) { return static_cast<std::uint64_t>(a.first + n * a.second); };
    auto uncode = [&](std::uint64_t c) { return Pair{static_cast<int>(c % static_cast<std::uint64_t>(n)), static_cast<int>(c / static_cast<std::uint64_t>(n))}; };
    const auto objects = run(static_cast<std::size_t>(n * n), [&](std::size_t t, Budget* b) {
      const Pair alpha = uncode(t);
      std::vector<std::vector<std::uint64_t>> cand;
      for (int s : ggens) {
        const Pair tau = h.semidirect_mul(h.semidirect_mul(alpha, Pair{omega[static_cast<std::size_t>(s)], phi.identity()}), pinv(alpha));
        cand.push_back(h.fiber(tau.first, tau.second));
      }
      std::vector<std::vector<std::uint64_t>> out;
      for (auto& l : lifts(gamma, h, cand, b)) {
        l.insert(l.begin(), t);
        out.push_back(std::move(l));
      }
      return out;
    });
    const auto hg = h.generators();
    const auto& pg = phi.generators();
    rep.quot_right = orbit_summary(objects, h.order() * static_cast<std::uint64_t>(n),
                                   [&](std::size_t i, const std::vector<std::uint64_t>& obj) {
                                     if (i < hg.size()) {
                                       auto out = conj_images(hg[i], obj);
                                       out[0] = code(h.semidirect_mul(h.project(hg[i]), uncode(obj[0])));
                                       return out;
                                     }
                                     auto out = obj;
                                     out[0] = code(h.semidirect_mul(uncode(obj[0]), pinv(iota(pg[i - hg.size()]))));
                                     return out;
                                   },
                                   hg.size() + pg.size());
  }
  rep.quot_equal = rep.quot_left.cardinality == rep.quot_right.cardinality;
  return rep;
}

}  // namespace stackypi1

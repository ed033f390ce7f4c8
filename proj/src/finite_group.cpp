#include "stackypi1/finite_group.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

namespace stackypi1 {

FiniteGroup::FiniteGroup() { finish(); }

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::string name) : name_(std::move(name)) {
  n_ = static_cast<int>(table.size());
  if (n_ == 0) throw Error(ErrorKind::InvalidGroup, "group table is empty");
  table_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(table[static_cast<std::size_t>(i)].size()) != n_)
      throw Error(ErrorKind::InvalidGroup, "group table row " + std::to_string(i) + " has wrong length");
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    for (int j = 0; j < n_; ++j) {
      const int v = table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (v < 0 || v >= n_)
        throw Error(ErrorKind::InvalidGroup, "group table entry out of range at (" + std::to_string(i) + "," +
                                                 std::to_string(j) + ")");
      if (seen[static_cast<std::size_t>(v)])
        throw Error(ErrorKind::InvalidGroup, "group table row " + std::to_string(i) + " is not a permutation");
      seen[static_cast<std::size_t>(v)] = true;
      table_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)] = v;
    }
  }
  for (int j = 0; j < n_; ++j) {
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    for (int i = 0; i < n_; ++i) {
      const int v = mul(i, j);
      if (seen[static_cast<std::size_t>(v)])
        throw Error(ErrorKind::InvalidGroup, "group table column " + std::to_string(j) + " is not a permutation");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  identity_ = -1;
  for (int e = 0; e < n_ && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw Error(ErrorKind::InvalidGroup, "group table has no identity");
  finish();
  // Light's test: associativity on a generating set implies it everywhere
  for (int g : generators_)
    for (int x = 0; x < n_; ++x) {
      const int xg = mul(x, g);
      for (int y = 0; y < n_; ++y)
        if (mul(xg, y) != mul(x, mul(g, y)))
          throw Error(ErrorKind::InvalidGroup, "group table is not associative at (" + std::to_string(x) + "," +
                                                   std::to_string(g) + "," + std::to_string(y) + ")");
    }
}

void FiniteGroup::finish() {
  if (table_.size() == 1) {
    n_ = 1;
    identity_ = 0;
  }
  inverse_.assign(static_cast<std::size_t>(n_), -1);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == identity_) {
        inverse_[static_cast<std::size_t>(a)] = b;
        break;
      }
  generators_.clear();
  std::vector<bool> in(static_cast<std::size_t>(n_), false);
  in[static_cast<std::size_t>(identity_)] = true;
  std::vector<int> members{identity_};
  for (int cand = 0; cand < n_; ++cand) {
    if (in[static_cast<std::size_t>(cand)]) continue;
    generators_.push_back(cand);
    // recompute closure under right multiplication by all generators
    std::fill(in.begin(), in.end(), false);
    members.assign(1, identity_);
    in[static_cast<std::size_t>(identity_)] = true;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (int s : generators_) {
        const int y = mul(members[i], s);
        if (!in[static_cast<std::size_t>(y)]) {
          in[static_cast<std::size_t>(y)] = true;
          members.push_back(y);
        }
      }
  }
  class_rep_.assign(static_cast<std::size_t>(n_), -1);
  for (int g = 0; g < n_; ++g) {
    if (class_rep_[static_cast<std::size_t>(g)] >= 0) continue;
    for (int h = 0; h < n_; ++h) class_rep_[static_cast<std::size_t>(conj(h, g))] = g;
  }
}

int FiniteGroup::power(int a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  int result = identity_;
  int base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_)));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = mul(i, j);
  return out;
}

bool FiniteGroup::is_abelian() const {
  for (int a : generators_)
    for (int b : generators_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
  std::map<int, std::vector<int>> by_rep;
  for (int g = 0; g < n_; ++g) by_rep[class_rep(g)].push_back(g);
  std::vector<std::vector<int>> out;
  for (auto& [rep, members] : by_rep) out.push_back(std::move(members));
  return out;
}

int FiniteGroup::centralizer_order(int g) const {
  int c = 0;
  for (int h = 0; h < n_; ++h)
    if (mul(h, g) == mul(g, h)) ++c;
  return c;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[static_cast<std::size_t>(p[i])];
  return r;
}

namespace groups {

namespace {

Permutation identity_perm(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::string cname(int n) { return "Z" + std::to_string(n); }

}  // namespace

FiniteGroup trivial() { return FiniteGroup(); }

FiniteGroup cyclic(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidGroup, "cyclic group order must be positive");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
  return FiniteGroup(std::move(t), cname(n));
}

FiniteGroup from_permutations(const std::vector<Permutation>& gens, std::string name) {
  if (gens.empty()) {
    FiniteGroup g;
    g.set_name(std::move(name));
    return g;
  }
  const int n = static_cast<int>(gens.front().size());
  return generate_group(identity_perm(n), gens, compose, std::move(name));
}

FiniteGroup dihedral(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidGroup, "dihedral parameter must be positive");
  // elements r^i s^j encoded as (i, j); s r s = r^-1
  using E = std::array<int, 2>;
  auto mul = [n](const E& a, const E& b) -> E {
    const int i = a[1] == 0 ? (a[0] + b[0]) % n : ((a[0] - b[0]) % n + n) % n;
    return {i, (a[1] + b[1]) % 2};
  };
  return generate_group(E{0, 0}, std::vector<E>{{1 % n, 0}, {0, 1}}, mul, "D" + std::to_string(n));
}

FiniteGroup symmetric(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidGroup, "symmetric degree must be positive");
  std::vector<Permutation> gens;
  if (n >= 2) {
    Permutation t = identity_perm(n);
    std::swap(t[0], t[1]);
    Permutation c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = (i + 1) % n;
    gens = {t, c};
  }
  auto g = from_permutations(gens, "S" + std::to_string(n));
  return g;
}

FiniteGroup alternating(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidGroup, "alternating degree must be positive");
  std::vector<Permutation> gens;
  for (int k = 2; k < n; ++k) {
    Permutation c = identity_perm(n);
    c[0] = 1;
    c[1] = static_cast<int>(k);
    c[static_cast<std::size_t>(k)] = 0;
    gens.push_back(c);
  }
  return from_permutations(gens, "A" + std::to_string(n));
}

FiniteGroup dicyclic(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidGroup, "dicyclic parameter must be positive");
  // a^i x^j with a^(2n) = 1, x^2 = a^n, x a x^-1 = a^-1
  const int m = 2 * n;
  using E = std::array<int, 2>;
  auto mul = [n, m](const E& a, const E& b) -> E {
    if (a[1] == 0) return {(a[0] + b[0]) % m, b[1]};
    int i = ((a[0] - b[0]) % m + m) % m;
    if (b[1] == 1) return {(i + n) % m, 0};
    return {i, 1};
  };
  return generate_group(E{0, 0}, std::vector<E>{{1 % m, 0}, {0, 1}}, mul, n == 2 ? "Q8" : "Dic" + std::to_string(n));
}

FiniteGroup sl2_3() {
  using M = std::array<int, 4>;  // row-major 2x2 over F3
  auto mul = [](const M& a, const M& b) -> M {
    return {(a[0] * b[0] + a[1] * b[2]) % 3, (a[0] * b[1] + a[1] * b[3]) % 3, (a[2] * b[0] + a[3] * b[2]) % 3,
            (a[2] * b[1] + a[3] * b[3]) % 3};
  };
  return generate_group(M{1, 0, 0, 1}, std::vector<M>{{1, 1, 0, 1}, {1, 0, 1, 1}}, mul, "SL(2,3)");
}

FiniteGroup abelian(const std::vector<int>& invariants) {
  std::vector<int> mods;
  for (int d : invariants) {
    if (d < 1) throw Error(ErrorKind::InvalidGroup, "abelian invariant must be positive");
    if (d > 1) mods.push_back(d);
  }
  if (mods.empty()) return trivial();
  FiniteGroup g = cyclic(mods[0]);
  for (std::size_t i = 1; i < mods.size(); ++i) g = direct_product(g, cyclic(mods[i]));
  std::string name;
  for (std::size_t i = 0; i < mods.size(); ++i) name += (i ? "x" : "") + cname(mods[i]);
  g.set_name(name);
  return g;
}

FiniteGroup metacyclic(int n, int m, int r) {
  using E = std::array<int, 2>;
  auto pw = [n](int base, int e) {
    long long out = 1 % n;
    for (int i = 0; i < e; ++i) out = out * base % n;
    return static_cast<int>(out);
  };
  if (pw(((r % n) + n) % n, m) != 1 % n)
    throw Error(ErrorKind::InvalidGroup, "metacyclic: r^m is not 1 mod n");
  auto mul = [n, m, r, pw](const E& a, const E& b) -> E {
    const long long twist = pw(((r % n) + n) % n, a[1]);
    return {static_cast<int>((a[0] + twist * b[0]) % n), (a[1] + b[1]) % m};
  };
  return generate_group(E{0, 0}, std::vector<E>{{1 % n, 0}, {0, 1 % m}}, mul,
                        cname(n) + ":" + cname(m) + "(" + std::to_string(r) + ")");
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order();
  std::vector<std::vector<int>> t(static_cast<std::size_t>(na * nb), std::vector<int>(static_cast<std::size_t>(na * nb)));
  for (int x = 0; x < na * nb; ++x)
    for (int y = 0; y < na * nb; ++y)
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  return FiniteGroup(std::move(t), a.name() + "x" + b.name());
}

namespace {

FiniteGroup named_as(FiniteGroup g, std::string name) {
  g.set_name(std::move(name));
  return g;
}

FiniteGroup generalized_dihedral_3x3() {
  // translations and the inversion of (Z/3)^2 acting on its 9 points
  auto pt = [](int a, int b) { return ((a % 3 + 3) % 3) * 3 + (b % 3 + 3) % 3; };
  Permutation t1(9), t2(9), inv(9);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      t1[static_cast<std::size_t>(pt(a, b))] = pt(a + 1, b);
      t2[static_cast<std::size_t>(pt(a, b))] = pt(a, b + 1);
      inv[static_cast<std::size_t>(pt(a, b))] = pt(-a, -b);
    }
  return from_permutations({t1, t2, inv}, "(Z3xZ3):Z2");
}

std::vector<FiniteGroup> build_catalog() {
  std::vector<FiniteGroup> out;
  // abelian groups by invariant factors
  const std::vector<std::vector<int>> abelian_types = {
      {1},     {2},     {3},        {4},  {2, 2},    {5},   {6},     {7},     {8},     {2, 4},  {2, 2, 2},
      {9},     {3, 3},  {10},       {11}, {12},      {2, 6}, {13},   {14},    {15},    {16},    {2, 8},
      {4, 4},  {2, 2, 4}, {2, 2, 2, 2}, {17}, {18},  {3, 6}, {19},   {20},    {2, 10}, {21},    {22},
      {23},    {24},    {2, 12},    {2, 2, 6}};
  for (const auto& t : abelian_types) out.push_back(abelian(t));
  out.front().set_name("1");
  for (int n = 3; n <= 12; ++n) out.push_back(dihedral(n));
  out.push_back(named_as(dicyclic(2), "Q8"));
  out.push_back(dicyclic(3));
  out.push_back(named_as(dicyclic(4), "Q16"));
  out.push_back(dicyclic(5));
  out.push_back(dicyclic(6));
  out.push_back(alternating(4));
  out.push_back(symmetric(4));
  out.push_back(sl2_3());
  // order 16
  out.push_back(named_as(direct_product(dihedral(4), cyclic(2)), "D4xZ2"));
  out.push_back(named_as(direct_product(dicyclic(2), cyclic(2)), "Q8xZ2"));
  out.push_back(named_as(metacyclic(8, 2, 5), "M16"));
  out.push_back(named_as(metacyclic(8, 2, 3), "SD16"));
  out.push_back(named_as(metacyclic(4, 4, 3), "Z4:Z4"));
  // order 18
  out.push_back(named_as(direct_product(symmetric(3), cyclic(3)), "S3xZ3"));
  out.push_back(generalized_dihedral_3x3());
  // orders 20, 21
  out.push_back(named_as(metacyclic(5, 4, 2), "F20"));
  out.push_back(named_as(metacyclic(7, 3, 2), "Z7:Z3"));
  // order 24
  out.push_back(named_as(direct_product(alternating(4), cyclic(2)), "A4xZ2"));
  out.push_back(named_as(direct_product(dihedral(4), cyclic(3)), "D4xZ3"));
  out.push_back(named_as(direct_product(dicyclic(2), cyclic(3)), "Q8xZ3"));
  out.push_back(named_as(direct_product(symmetric(3), cyclic(4)), "S3xZ4"));
  out.push_back(named_as(direct_product(dihedral(6), cyclic(2)), "D6xZ2"));
  out.push_back(named_as(direct_product(dicyclic(3), cyclic(2)), "Dic3xZ2"));
  out.push_back(named_as(metacyclic(3, 8, 2), "Z3:Z8"));
  std::stable_sort(out.begin(), out.end(), [](const FiniteGroup& a, const FiniteGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.name() < b.name();
  });
  return out;
}

}  // namespace

const std::vector<FiniteGroup>& catalog() {
  static const std::vector<FiniteGroup> groups = build_catalog();
  return groups;
}

std::vector<FiniteGroup> catalog_up_to(int order_bound) {
  std::vector<FiniteGroup> out;
  for (const auto& g : catalog())
    if (g.order() <= order_bound) out.push_back(g);
  return out;
}

FiniteGroup named(const std::string& kind, int n) {
  if (kind == "trivial") return trivial();
  if (kind == "cyclic") return cyclic(n);
  if (kind == "dihedral") return dihedral(n);
  if (kind == "symmetric") return symmetric(n);
  if (kind == "alternating") return alternating(n);
  if (kind == "dicyclic") return dicyclic(n);
  if (kind == "quaternion") return named_as(dicyclic(2), "Q8");
  if (kind == "sl2_3") return sl2_3();
  throw Error(ErrorKind::InvalidGroup, "unknown group construction '" + kind + "'");
}

}  // namespace groups

// ---- homomorphisms -----------------------------------------------------------

int evaluate(const FiniteGroup& g, const Word& w, const std::vector<int>& images) {
  int x = g.identity();
  for (int l : w) {
    const int im = images[static_cast<std::size_t>(std::abs(l) - 1)];
    x = g.mul(x, l > 0 ? im : g.inv(im));
  }
  return x;
}

void for_each_hom(const GroupPresentation& p, const FiniteGroup& g,
                  const std::function<void(const std::vector<int>&)>& visit, Budget* budget) {
  p.validate();
  const std::size_t n = p.generators.size();
  // relators checked as soon as their last generator is assigned
  std::vector<std::vector<Word>> due(n + 1);
  for (const auto& r : p.relators) {
    const Word c = cyclic_reduce(r);
    int top = 0;
    for (int l : c) top = std::max(top, std::abs(l));
    due[static_cast<std::size_t>(top)].push_back(c);
  }
  for (const auto& r : due[0])
    if (!r.empty()) return;
  std::vector<int> images(n, g.identity());
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == n) {
      visit(images);
      return;
    }
    for (int x = 0; x < g.order(); ++x) {
      if (budget) budget->charge();
      images[k] = x;
      bool ok = true;
      for (const auto& r : due[k + 1])
        if (evaluate(g, r, images) != g.identity()) {
          ok = false;
          break;
        }
      if (ok) rec(k + 1);
    }
  };
  rec(0);
}

std::uint64_t count_homs(const GroupPresentation& p, const FiniteGroup& g, Budget* budget) {
  std::uint64_t count = 0;
  for_each_hom(p, g, [&](const std::vector<int>&) { ++count; }, budget);
  return count;
}

std::uint64_t count_hom_classes(const GroupPresentation& p, const FiniteGroup& g, Budget* budget) {
  std::set<std::vector<int>> canonical;
  for_each_hom(
      p, g,
      [&](const std::vector<int>& images) {
        std::vector<int> best = images;
        std::vector<int> c(images.size());
        for (int h = 0; h < g.order(); ++h) {
          for (std::size_t i = 0; i < images.size(); ++i) c[i] = g.conj(h, images[i]);
          if (c < best) best = c;
        }
        canonical.insert(best);
      },
      budget);
  return canonical.size();
}

bool is_homomorphism(const FiniteGroup& from, const FiniteGroup& to, const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != from.order()) return false;
  for (int x : map)
    if (x < 0 || x >= to.order()) return false;
  for (int a = 0; a < from.order(); ++a)
    for (int b = 0; b < from.order(); ++b)
      if (map[static_cast<std::size_t>(from.mul(a, b))] !=
          to.mul(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]))
        return false;
  return true;
}

std::vector<std::vector<int>> homomorphisms(const FiniteGroup& from, const FiniteGroup& to, Budget* budget) {
  const auto& gens = from.generators();
  std::vector<std::vector<int>> candidates;
  for (int s : gens) {
    std::vector<int> c;
    const int o = from.element_order(s);
    for (int y = 0; y < to.order(); ++y)
      if (o % to.element_order(y) == 0) c.push_back(y);
    candidates.push_back(std::move(c));
  }
  std::vector<std::vector<int>> out;
  std::vector<int> images(gens.size());
  std::vector<int> map(static_cast<std::size_t>(from.order()));
  std::vector<int> order;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == gens.size()) {
      if (budget) budget->charge(static_cast<std::uint64_t>(from.order()));
      std::fill(map.begin(), map.end(), -1);
      map[static_cast<std::size_t>(from.identity())] = to.identity();
      order.assign(1, from.identity());
      for (std::size_t i = 0; i < order.size(); ++i) {
        const int x = order[i];
        for (std::size_t j = 0; j < gens.size(); ++j) {
          const int y = from.mul(x, gens[j]);
          const int v = to.mul(map[static_cast<std::size_t>(x)], images[j]);
          if (map[static_cast<std::size_t>(y)] < 0) {
            map[static_cast<std::size_t>(y)] = v;
            order.push_back(y);
          } else if (map[static_cast<std::size_t>(y)] != v) {
            return;
          }
        }
      }
      out.push_back(map);
      return;
    }
    for (int y : candidates[k]) {
      images[k] = y;
      rec(k + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> automorphisms(const FiniteGroup& g, Budget* budget) {
  std::vector<std::vector<int>> out;
  for (auto& m : homomorphisms(g, g, budget)) {
    std::vector<int> s = m;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) == s.end()) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace stackypi1

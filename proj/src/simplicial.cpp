#include "stackypi1/simplicial.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <regex>
#include <set>

#include "stackypi1/error.hpp"

namespace stackypi1 {

namespace {

const std::regex& degenerate_pattern() {
  static const std::regex re(R"(^s([0-9]+)\((.+)\)$)");
  return re;
}

std::string level_name(int k) { return "level " + std::to_string(k); }

// monotone surjection [k] -> [p] from its set of collapsed positions J
std::vector<int> surjection_from_positions(int k, const std::vector<int>& positions) {
  std::vector<int> sigma(static_cast<std::size_t>(k + 1));
  int v = 0;
  for (int i = 0; i <= k; ++i) {
    sigma[static_cast<std::size_t>(i)] = v;
    if (i < k && !std::binary_search(positions.begin(), positions.end(), i)) ++v;
  }
  return sigma;
}

std::vector<int> collapsed_positions(const std::vector<int>& sigma) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < sigma.size(); ++i)
    if (sigma[i] == sigma[i + 1]) out.push_back(static_cast<int>(i));
  return out;
}

// all subsets of {0..k-1} of size m, lexicographic
void subsets(int k, int m, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == m) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < k; ++i) {
    cur.push_back(i);
    subsets(k, m, i + 1, cur, out);
    cur.pop_back();
  }
}

Word identity_word(int g) { return Word{g}; }

std::vector<Word> identity_images(const GroupPresentation& p) {
  std::vector<Word> out;
  for (std::size_t g = 0; g < p.generators.size(); ++g) out.push_back(identity_word(static_cast<int>(g) + 1));
  return out;
}

Word substitute(const Word& w, const std::vector<Word>& images) {
  Word out;
  for (int l : w) {
    const Word& im = images.at(static_cast<std::size_t>(std::abs(l) - 1));
    if (l > 0)
      out.insert(out.end(), im.begin(), im.end());
    else {
      const Word inv = inverse(im);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return free_reduce(out);
}

// f then g
ComponentMap then(const ComponentMap& f, const ComponentMap& g) {
  ComponentMap out;
  out.target = g.target;
  for (const auto& w : f.images) out.images.push_back(substitute(w, g.images));
  return out;
}

class WordOracle {
 public:
  WordStatus status(int level, int index, const GroupPresentation& p, const Word& w) {
    const Word r = free_reduce(w);
    if (r.empty()) return WordStatus::Trivial;
    if (p.relators.empty()) return WordStatus::Nontrivial;
    auto key = std::make_pair(level, index);
    auto it = tables_.find(key);
    if (it == tables_.end()) it = tables_.emplace(key, enumerate_cosets(p, 20000)).first;
    if (!it->second) return WordStatus::Unverified;
    int c = 0;
    for (int l : r) {
      const auto g = static_cast<std::size_t>(std::abs(l) - 1);
      c = l > 0 ? it->second->action[g][static_cast<std::size_t>(c)]
                : it->second->inverse_action[g][static_cast<std::size_t>(c)];
    }
    return c == 0 ? WordStatus::Trivial : WordStatus::Nontrivial;
  }

 private:
  std::map<std::pair<int, int>, std::optional<CosetTable>> tables_;
};

}  // namespace

std::string degenerate_name(const std::vector<int>& sigma, const std::string& base) {
  std::string s = "s";
  for (int i : collapsed_positions(sigma)) s += std::to_string(i);
  return s + "(" + base + ")";
}

int SimplicialSpace::find(int k, const std::string& id) const {
  if (k < 0 || k > kTopLevel) return -1;
  const auto& lv = level(k);
  for (std::size_t i = 0; i < lv.size(); ++i)
    if (lv[i].id == id) return static_cast<int>(i);
  return -1;
}

std::vector<int> SimplicialSpace::nondegenerate(int k) const {
  std::vector<int> out;
  const auto& lv = level(k);
  for (std::size_t i = 0; i < lv.size(); ++i)
    if (lv[i].nondegenerate) out.push_back(static_cast<int>(i));
  return out;
}

std::array<std::size_t, kTopLevel + 1> SimplicialSpace::nondegenerate_counts() const {
  std::array<std::size_t, kTopLevel + 1> out{};
  for (int k = 0; k <= kTopLevel; ++k) out[static_cast<std::size_t>(k)] = nondegenerate(k).size();
  return out;
}

int SimplicialSpace::vertex(int k, int c, int i) const {
  while (k > 0) {
    const int face = i < k ? k : 0;
    if (face == 0) --i;
    c = component(k, c).faces[static_cast<std::size_t>(face)].target;
    --k;
  }
  return c;
}

int SimplicialSpace::edge(int k, int c, int i, int j) const {
  // drop every index other than i and j, highest first
  std::vector<int> keep{i, j};
  while (k > 1) {
    int drop = k;
    while (drop == keep[0] || drop == keep[1]) --drop;
    c = component(k, c).faces[static_cast<std::size_t>(drop)].target;
    for (auto& v : keep)
      if (v > drop) --v;
    --k;
  }
  return c;
}

SimplicialSpace build_space(const RawSpace& raw) {
  if (!raw.degeneracies.empty())
    throw Error(ErrorKind::NonSplit,
                "degeneracies are synthesized from the nondegenerate data and may not be supplied (got " +
                    std::to_string(raw.degeneracies.size()) + ")",
                "/degeneracies");
  SimplicialSpace space;
  auto& levels = space.levels_;

  // nondegenerate components, sorted by id
  for (int k = 0; k <= kTopLevel; ++k) {
    std::vector<RawComponent> comps = raw.levels[static_cast<std::size_t>(k)];
    std::sort(comps.begin(), comps.end(), [](const RawComponent& a, const RawComponent& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const auto& rc = comps[i];
      if (rc.id.empty()) throw Error(ErrorKind::DanglingReference, "empty component id at " + level_name(k));
      if (i > 0 && comps[i - 1].id == rc.id)
        throw Error(ErrorKind::DanglingReference, "duplicate component id '" + rc.id + "' at " + level_name(k));
      if (std::regex_match(rc.id, degenerate_pattern()))
        throw Error(ErrorKind::NonSplit, "component id '" + rc.id + "' at " + level_name(k) +
                                             " collides with the degenerate part (reserved form s<J>(...))");
      try {
        rc.group.validate();
      } catch (const Error& e) {
        throw Error(ErrorKind::DanglingReference, "component '" + rc.id + "': " + e.what());
      }
      Component c;
      c.id = rc.id;
      c.group = rc.group;
      c.nondegenerate = true;
      c.sigma.resize(static_cast<std::size_t>(k + 1));
      std::iota(c.sigma.begin(), c.sigma.end(), 0);
      c.base_level = k;
      c.base = static_cast<int>(i);
      levels[static_cast<std::size_t>(k)].push_back(std::move(c));
    }
  }
  std::array<std::size_t, kTopLevel + 1> n_nondeg{};
  for (int k = 0; k <= kTopLevel; ++k) n_nondeg[static_cast<std::size_t>(k)] = levels[static_cast<std::size_t>(k)].size();

  // degenerate closure
  for (int k = 1; k <= kTopLevel; ++k) {
    std::vector<Component> degen;
    for (int p = 0; p < k; ++p) {
      std::vector<std::vector<int>> sets;
      std::vector<int> cur;
      subsets(k, k - p, 0, cur, sets);
      for (const auto& positions : sets) {
        const auto sigma = surjection_from_positions(k, positions);
        for (std::size_t b = 0; b < n_nondeg[static_cast<std::size_t>(p)]; ++b) {
          const auto& base = levels[static_cast<std::size_t>(p)][b];
          Component c;
          c.id = degenerate_name(sigma, base.id);
          c.group = base.group;
          c.nondegenerate = false;
          c.sigma = sigma;
          c.base_level = p;
          c.base = static_cast<int>(b);
          degen.push_back(std::move(c));
        }
      }
    }
    std::sort(degen.begin(), degen.end(), [](const Component& a, const Component& b) { return a.id < b.id; });
    for (auto& c : degen) levels[static_cast<std::size_t>(k)].push_back(std::move(c));
  }

  // lookup of sigma^*(base)
  std::map<std::tuple<int, std::vector<int>, int>, int> pulled;
  for (int k = 0; k <= kTopLevel; ++k)
    for (std::size_t i = 0; i < levels[static_cast<std::size_t>(k)].size(); ++i) {
      const auto& c = levels[static_cast<std::size_t>(k)][i];
      pulled[{c.base_level, c.sigma, c.base}] = static_cast<int>(i);
    }
  // component at level tau.size()-1 equal to tau^*(component (lvl, idx))
  auto pull = [&](const std::vector<int>& tau, int lvl, int idx) -> int {
    const auto& c = levels[static_cast<std::size_t>(lvl)][static_cast<std::size_t>(idx)];
    std::vector<int> composite(tau.size());
    for (std::size_t j = 0; j < tau.size(); ++j)
      composite[j] = c.sigma[static_cast<std::size_t>(tau[j])];
    return pulled.at({c.base_level, composite, c.base});
  };

  // declared faces of nondegenerate components
  std::map<std::pair<int, std::string>, std::vector<const RawFace*>> declared;
  for (std::size_t f = 0; f < raw.faces.size(); ++f) {
    const auto& rf = raw.faces[f];
    const std::string where = "/faces/" + std::to_string(f);
    if (rf.level < 1 || rf.level > kTopLevel)
      throw Error(ErrorKind::DanglingReference, "face declared at " + level_name(rf.level), where);
    const int src = space.find(rf.level, rf.source);
    if (src < 0 || !levels[static_cast<std::size_t>(rf.level)][static_cast<std::size_t>(src)].nondegenerate)
      throw Error(ErrorKind::DanglingReference,
                  "face source '" + rf.source + "' is not a nondegenerate component at " + level_name(rf.level), where);
    if (rf.index < 0 || rf.index > rf.level)
      throw Error(ErrorKind::DanglingReference, "face index " + std::to_string(rf.index) + " out of range for '" +
                                                    rf.source + "'", where);
    declared[{rf.level, rf.source}].push_back(&rf);
  }
  for (int k = 1; k <= kTopLevel; ++k) {
    for (std::size_t i = 0; i < n_nondeg[static_cast<std::size_t>(k)]; ++i) {
      auto& c = levels[static_cast<std::size_t>(k)][i];
      c.faces.assign(static_cast<std::size_t>(k + 1), ComponentMap{});
      std::vector<bool> seen(static_cast<std::size_t>(k + 1), false);
      for (const RawFace* rf : declared[{k, c.id}]) {
        if (seen[static_cast<std::size_t>(rf->index)])
          throw Error(ErrorKind::DanglingReference,
                      "face " + std::to_string(rf->index) + " of '" + c.id + "' declared twice");
        seen[static_cast<std::size_t>(rf->index)] = true;
        const int t = space.find(k - 1, rf->target);
        if (t < 0)
          throw Error(ErrorKind::DanglingReference, "face " + std::to_string(rf->index) + " of '" + c.id +
                                                        "' targets unknown component '" + rf->target + "' at " +
                                                        level_name(k - 1));
        const auto& target = levels[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(t)];
        if (rf->images.size() != c.group.generators.size())
          throw Error(ErrorKind::DanglingReference, "face " + std::to_string(rf->index) + " of '" + c.id + "' gives " +
                                                        std::to_string(rf->images.size()) + " generator images, expected " +
                                                        std::to_string(c.group.generators.size()));
        for (const auto& w : rf->images)
          for (int l : w)
            if (l == 0 || std::abs(l) > static_cast<int>(target.group.generators.size()))
              throw Error(ErrorKind::DanglingReference, "face " + std::to_string(rf->index) + " of '" + c.id +
                                                            "' uses a generator outside '" + target.id + "'");
        ComponentMap m;
        m.target = t;
        for (const auto& w : rf->images) m.images.push_back(free_reduce(w));
        c.faces[static_cast<std::size_t>(rf->index)] = std::move(m);
      }
      for (int f = 0; f <= k; ++f)
        if (!seen[static_cast<std::size_t>(f)])
          throw Error(ErrorKind::DanglingReference, "missing face " + std::to_string(f) + " of '" + c.id + "' at " +
                                                        level_name(k));
    }
  }

  // faces of degenerate components, by composition
  for (int k = 1; k <= kTopLevel; ++k) {
    for (std::size_t idx = n_nondeg[static_cast<std::size_t>(k)]; idx < levels[static_cast<std::size_t>(k)].size(); ++idx) {
      auto& c = levels[static_cast<std::size_t>(k)][idx];
      const int p = c.base_level;
      c.faces.clear();
      for (int i = 0; i <= k; ++i) {
        std::vector<int> tau;
        for (int j = 0; j < k; ++j) tau.push_back(c.sigma[static_cast<std::size_t>(j < i ? j : j + 1)]);
        std::vector<bool> hit(static_cast<std::size_t>(p + 1), false);
        for (int v : tau) hit[static_cast<std::size_t>(v)] = true;
        const auto missing = std::find(hit.begin(), hit.end(), false);
        ComponentMap m;
        if (missing == hit.end()) {
          m.target = pulled.at({p, tau, c.base});
          m.images = identity_images(c.group);
        } else {
          const int mm = static_cast<int>(missing - hit.begin());
          for (auto& v : tau)
            if (v > mm) --v;
          const auto& basec = levels[static_cast<std::size_t>(p)][static_cast<std::size_t>(c.base)];
          const auto& bf = basec.faces[static_cast<std::size_t>(mm)];
          m.target = pull(tau, p - 1, bf.target);
          m.images = bf.images;
        }
        c.faces.push_back(std::move(m));
      }
    }
  }

  // degeneracies of every component below the top level
  for (int k = 0; k < kTopLevel; ++k) {
    for (auto& c : levels[static_cast<std::size_t>(k)]) {
      c.degeneracies.clear();
      for (int j = 0; j <= k; ++j) {
        std::vector<int> s(static_cast<std::size_t>(k + 2));
        for (int i = 0; i <= k + 1; ++i) s[static_cast<std::size_t>(i)] = i <= j ? i : i - 1;
        std::vector<int> composite(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) composite[i] = c.sigma[static_cast<std::size_t>(s[i])];
        ComponentMap m;
        m.target = pulled.at({c.base_level, composite, c.base});
        m.images = identity_images(c.group);
        c.degeneracies.push_back(std::move(m));
      }
    }
  }

  // homomorphisms respect relators
  WordOracle oracle;
  for (int k = 1; k <= kTopLevel; ++k)
    for (std::size_t idx = 0; idx < n_nondeg[static_cast<std::size_t>(k)]; ++idx) {
      const auto& c = levels[static_cast<std::size_t>(k)][idx];
      for (int i = 0; i <= k; ++i) {
        const auto& m = c.faces[static_cast<std::size_t>(i)];
        const auto& target = levels[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(m.target)];
        for (std::size_t r = 0; r < c.group.relators.size(); ++r) {
          const Word img = substitute(c.group.relators[r], m.images);
          const auto st = oracle.status(k - 1, m.target, target.group, img);
          if (st == WordStatus::Nontrivial)
            throw Error(ErrorKind::IdentityViolation, "face " + std::to_string(i) + " of '" + c.id + "' sends relator " +
                                                          std::to_string(r) + " to a nontrivial element of '" +
                                                          target.id + "'");
          if (st == WordStatus::Unverified)
            space.unverified_.push_back("face " + std::to_string(i) + " of '" + c.id + "' on relator " +
                                        std::to_string(r));
        }
      }
    }

  auto same = [&](const ComponentMap& a, const ComponentMap& b, int lvl, const std::string& identity,
                  const Component& src) {
    if (a.target != b.target)
      throw Error(ErrorKind::IdentityViolation,
                  "simplicial identity " + identity + " fails on component '" + src.id + "': '" +
                      levels[static_cast<std::size_t>(lvl)][static_cast<std::size_t>(a.target)].id + "' vs '" +
                      levels[static_cast<std::size_t>(lvl)][static_cast<std::size_t>(b.target)].id + "'");
    const auto& target = levels[static_cast<std::size_t>(lvl)][static_cast<std::size_t>(a.target)];
    for (std::size_t g = 0; g < a.images.size(); ++g) {
      const Word diff = concat(a.images[g], inverse(b.images[g]));
      const auto st = oracle.status(lvl, a.target, target.group, diff);
      if (st == WordStatus::Nontrivial)
        throw Error(ErrorKind::IdentityViolation, "simplicial identity " + identity + " fails on component '" + src.id +
                                                      "' at generator " + std::to_string(g + 1) + " (group map)");
      if (st == WordStatus::Unverified)
        space.unverified_.push_back("identity " + identity + " on '" + src.id + "' generator " + std::to_string(g + 1));
    }
  };
  auto idmap = [&](int lvl, int idx) {
    ComponentMap m;
    m.target = idx;
    m.images = identity_images(levels[static_cast<std::size_t>(lvl)][static_cast<std::size_t>(idx)].group);
    return m;
  };

  for (int k = 0; k <= kTopLevel; ++k) {
    for (std::size_t idx = 0; idx < levels[static_cast<std::size_t>(k)].size(); ++idx) {
      const auto& c = levels[static_cast<std::size_t>(k)][idx];
      auto face = [&](int lvl, const ComponentMap& m, int i) {
        const auto& y = levels[static_cast<std::size_t>(lvl)][static_cast<std::size_t>(m.target)];
        return then(m, y.faces[static_cast<std::size_t>(i)]);
      };
      auto degen = [&](int lvl, const ComponentMap& m, int j) {
        const auto& y = levels[static_cast<std::size_t>(lvl)][static_cast<std::size_t>(m.target)];
        return then(m, y.degeneracies[static_cast<std::size_t>(j)]);
      };
      // d_i d_j = d_{j-1} d_i, i < j
      if (k >= 2)
        for (int j = 1; j <= k; ++j)
          for (int i = 0; i < j; ++i) {
            const auto lhs = face(k - 1, c.faces[static_cast<std::size_t>(j)], i);
            const auto rhs = face(k - 1, c.faces[static_cast<std::size_t>(i)], j - 1);
            same(lhs, rhs, k - 2,
                 "d" + std::to_string(i) + "d" + std::to_string(j) + "=d" + std::to_string(j - 1) + "d" +
                     std::to_string(i),
                 c);
          }
      if (k < kTopLevel) {
        // face/degeneracy identities
        for (int j = 0; j <= k; ++j)
          for (int i = 0; i <= k + 1; ++i) {
            const auto lhs = face(k + 1, c.degeneracies[static_cast<std::size_t>(j)], i);
            ComponentMap rhs;
            std::string name = "d" + std::to_string(i) + "s" + std::to_string(j);
            if (i == j || i == j + 1) {
              rhs = idmap(k, static_cast<int>(idx));
              name += "=id";
            } else if (i < j) {
              rhs = degen(k - 1, c.faces[static_cast<std::size_t>(i)], j - 1);
              name += "=s" + std::to_string(j - 1) + "d" + std::to_string(i);
            } else {
              rhs = degen(k - 1, c.faces[static_cast<std::size_t>(i - 1)], j);
              name += "=s" + std::to_string(j) + "d" + std::to_string(i - 1);
            }
            same(lhs, rhs, k, name, c);
          }
        // s_i s_j = s_{j+1} s_i, i <= j
        if (k + 2 <= kTopLevel)
          for (int j = 0; j <= k; ++j)
            for (int i = 0; i <= j; ++i) {
              const auto lhs = degen(k + 1, c.degeneracies[static_cast<std::size_t>(j)], i);
              const auto rhs = degen(k + 1, c.degeneracies[static_cast<std::size_t>(i)], j + 1);
              same(lhs, rhs, k + 2,
                   "s" + std::to_string(i) + "s" + std::to_string(j) + "=s" + std::to_string(j + 1) + "s" +
                       std::to_string(i),
                   c);
            }
      }
    }
  }
  std::sort(space.unverified_.begin(), space.unverified_.end());
  space.unverified_.erase(std::unique(space.unverified_.begin(), space.unverified_.end()), space.unverified_.end());
  return space;
}

// ---- connectivity and pi_1 ---------------------------------------------------

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

}  // namespace

std::vector<std::vector<std::string>> pi0(const SimplicialSpace& space) {
  const auto& v = space.level(0);
  UnionFind uf(v.size());
  for (const auto& e : space.level(1)) uf.unite(e.faces[0].target, e.faces[1].target);
  std::map<int, std::vector<std::string>> classes;
  for (std::size_t i = 0; i < v.size(); ++i) classes[uf.find(static_cast<int>(i))].push_back(v[i].id);
  std::vector<std::vector<std::string>> out;
  for (auto& [root, ids] : classes) {
    std::sort(ids.begin(), ids.end());
    out.push_back(std::move(ids));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> spanning_tree_edges(const SimplicialSpace& space, const std::string& root) {
  const auto& verts = space.level(0);
  std::vector<std::vector<std::pair<int, int>>> adj(verts.size());  // (edge, other vertex)
  for (int e : space.nondegenerate(1)) {
    const auto& c = space.component(1, e);
    const int a = c.faces[1].target, b = c.faces[0].target;
    adj[static_cast<std::size_t>(a)].push_back({e, b});
    adj[static_cast<std::size_t>(b)].push_back({e, a});
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  std::vector<bool> seen(verts.size(), false);
  std::vector<int> tree;
  std::vector<int> roots;
  const int r0 = space.find(0, root);
  if (r0 >= 0) roots.push_back(r0);
  for (std::size_t i = 0; i < verts.size(); ++i) roots.push_back(static_cast<int>(i));
  for (int r : roots) {
    if (seen[static_cast<std::size_t>(r)]) continue;
    seen[static_cast<std::size_t>(r)] = true;
    std::deque<int> queue{r};
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (auto [e, y] : adj[static_cast<std::size_t>(x)]) {
        if (seen[static_cast<std::size_t>(y)]) continue;
        seen[static_cast<std::size_t>(y)] = true;
        tree.push_back(e);
        queue.push_back(y);
      }
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

EdgePathPresentation edge_path_presentation(const SimplicialSpace& space, const std::string& root) {
  const int r = space.find(0, root);
  if (r < 0) throw Error(ErrorKind::BasepointMissing, "basepoint '" + root + "' is not a level-0 component");
  const auto& verts = space.level(0);
  std::vector<bool> inside(verts.size(), false);
  for (const auto& cls : pi0(space))
    if (std::binary_search(cls.begin(), cls.end(), root))
      for (const auto& id : cls) inside[static_cast<std::size_t>(space.find(0, id))] = true;

  EdgePathPresentation out;
  GroupPresentation& p = out.presentation;
  out.vertex_offset.assign(verts.size(), -1);
  for (std::size_t v = 0; v < verts.size(); ++v) {
    if (!inside[v]) continue;
    out.vertex_offset[v] = static_cast<int>(p.generators.size());
    for (const auto& g : verts[v].group.generators) p.generators.push_back(verts[v].id + "." + g);
  }
  auto shift = [](const Word& w, int by) {
    Word s = w;
    for (auto& l : s) l += l > 0 ? by : -by;
    return s;
  };
  for (std::size_t v = 0; v < verts.size(); ++v)
    if (inside[v])
      for (const auto& rel : verts[v].group.relators) p.relators.push_back(shift(rel, out.vertex_offset[v]));
  out.edge_generator.assign(space.level(1).size(), 0);
  std::vector<int> edges;
  for (int e : space.nondegenerate(1))
    if (inside[static_cast<std::size_t>(space.component(1, e).faces[0].target)]) edges.push_back(e);
  for (int e : edges) {
    p.generators.push_back(space.component(1, e).id);
    out.edge_generator[static_cast<std::size_t>(e)] = static_cast<int>(p.generators.size());
  }
  for (int e : edges) {
    const auto& c = space.component(1, e);
    const Word t{out.edge_generator[static_cast<std::size_t>(e)]};
    for (std::size_t g = 0; g < c.group.generators.size(); ++g) {
      const Word w0 = shift(c.faces[0].images[g], out.vertex_offset[static_cast<std::size_t>(c.faces[0].target)]);
      const Word w1 = shift(c.faces[1].images[g], out.vertex_offset[static_cast<std::size_t>(c.faces[1].target)]);
      p.relators.push_back(free_reduce(concat(concat(concat(t, w0), inverse(t)), inverse(w1))));
    }
  }
  for (int e : spanning_tree_edges(space, root))
    if (out.edge_generator[static_cast<std::size_t>(e)] != 0) {
      out.tree_edges.push_back(e);
      p.relators.push_back(Word{out.edge_generator[static_cast<std::size_t>(e)]});
    }
  for (int s : space.nondegenerate(2)) {
    const auto& c = space.component(2, s);
    if (!inside[static_cast<std::size_t>(space.vertex(2, s, 0))]) continue;
    Word w;
    auto letter = [&](int face, int sign) {
      const int g = out.edge_generator[static_cast<std::size_t>(c.faces[static_cast<std::size_t>(face)].target)];
      if (g != 0) w.push_back(sign * g);
    };
    letter(2, 1);
    letter(0, 1);
    letter(1, -1);
    p.relators.push_back(w);
  }
  return out;
}

GroupPresentation pi1_presentation_raw(const SimplicialSpace& space, const std::string& basepoint) {
  if (space.find(0, basepoint) < 0)
    throw Error(ErrorKind::BasepointMissing, "basepoint '" + basepoint + "' is not a level-0 component");
  const auto classes = pi0(space);
  if (classes.size() != 1)
    throw Error(ErrorKind::Disconnected,
                "realization has " + std::to_string(classes.size()) + " connected components");
  return edge_path_presentation(space, basepoint).presentation;
}

GroupPresentation pi1_presentation(const SimplicialSpace& space, const std::string& basepoint) {
  return tietze_simplify(pi1_presentation_raw(space, basepoint));
}

// ---- sample spaces -----------------------------------------------------------

namespace spaces {

namespace {

RawFace face(int level, const std::string& src, int index, const std::string& target) {
  RawFace f;
  f.level = level;
  f.source = src;
  f.index = index;
  f.target = target;
  return f;
}

}  // namespace

RawSpace from_simplices(int vertices, const std::vector<std::pair<int, int>>& edges,
                        const std::vector<std::array<int, 3>>& triangles) {
  RawSpace raw;
  auto vname = [](int i) { return "v" + std::to_string(i); };
  auto ename = [](std::size_t i) { return "e" + std::to_string(i); };
  for (int v = 0; v < vertices; ++v) raw.levels[0].push_back({vname(v), {}});
  for (std::size_t e = 0; e < edges.size(); ++e) {
    raw.levels[1].push_back({ename(e), {}});
    raw.faces.push_back(face(1, ename(e), 1, vname(edges[e].first)));
    raw.faces.push_back(face(1, ename(e), 0, vname(edges[e].second)));
  }
  for (std::size_t t = 0; t < triangles.size(); ++t) {
    const std::string id = "t" + std::to_string(t);
    raw.levels[2].push_back({id, {}});
    for (int i = 0; i < 3; ++i) {
      const int e = triangles[t][static_cast<std::size_t>(i)];
      raw.faces.push_back(face(2, id, i, e < 0 ? "s0(" + vname(-e - 1) + ")" : ename(static_cast<std::size_t>(e))));
    }
  }
  return raw;
}

RawSpace boundary_triangle() {
  RawSpace raw;
  for (const char* v : {"t0", "t1", "t2"}) raw.levels[0].push_back({v, {}});
  for (const char* e : {"t01", "t02", "t12"}) raw.levels[1].push_back({e, {}});
  raw.faces = {face(1, "t01", 1, "t0"), face(1, "t01", 0, "t1"), face(1, "t02", 1, "t0"),
               face(1, "t02", 0, "t2"), face(1, "t12", 1, "t1"), face(1, "t12", 0, "t2")};
  return raw;
}

RawSpace full_triangle() {
  RawSpace raw = boundary_triangle();
  raw.levels[2].push_back({"t012", {}});
  raw.faces.push_back(face(2, "t012", 0, "t12"));
  raw.faces.push_back(face(2, "t012", 1, "t02"));
  raw.faces.push_back(face(2, "t012", 2, "t01"));
  return raw;
}

RawSpace circle() {
  RawSpace raw;
  raw.levels[0].push_back({"v", {}});
  raw.levels[1].push_back({"loop", {}});
  raw.faces = {face(1, "loop", 0, "v"), face(1, "loop", 1, "v")};
  return raw;
}

RawSpace pyramid() {
  RawSpace raw;
  for (const char* v : {"P1", "P2", "P3"}) raw.levels[0].push_back({v, {}});
  for (const char* e : {"L12", "L13", "L23"}) raw.levels[1].push_back({e, {}});
  raw.faces = {face(1, "L12", 1, "P1"), face(1, "L12", 0, "P2"), face(1, "L13", 1, "P1"),
               face(1, "L13", 0, "P3"), face(1, "L23", 1, "P2"), face(1, "L23", 0, "P3")};
  return raw;
}

RawSpace coordinate_planes() {
  RawSpace raw = pyramid();
  raw.levels[2].push_back({"O", {}});
  raw.faces.push_back(face(2, "O", 0, "L23"));
  raw.faces.push_back(face(2, "O", 1, "L13"));
  raw.faces.push_back(face(2, "O", 2, "L12"));
  return raw;
}

}  // namespace spaces

}  // namespace stackypi1

#include "stackypi1/torsor.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "stackypi1/parallel.hpp"

namespace stackypi1 {

namespace {

// Tree-gauged descent data on a connected space, as flat assignments.
struct Datum {
  std::vector<std::size_t> vertex_hom;  // index into the vertex's Hom list
  std::vector<int> edge;                // per level-1 index; identity on tree and degenerate edges
};

struct Problem {
  const SimplicialSpace& space;
  const FiniteGroup& G;
  std::vector<std::vector<std::vector<int>>> homs;  // per vertex
  std::vector<bool> is_tree;
  // variables in search order: (kind, index), kind 0 = vertex, 1 = edge
  std::vector<std::pair<int, int>> vars;
  std::vector<std::vector<int>> conj_checks;  // per step: edges to check
  std::vector<std::vector<int>> tri_checks;   // per step: 2-simplices to check
  std::vector<int> pre_triangles;
};

bool conj_ok(const Problem& P, const Datum& d, int e) {
  const auto& c = P.space.component(1, e);
  const int v0 = c.faces[0].target, v1 = c.faces[1].target;
  const auto& rho0 = P.homs[static_cast<std::size_t>(v0)][d.vertex_hom[static_cast<std::size_t>(v0)]];
  const auto& rho1 = P.homs[static_cast<std::size_t>(v1)][d.vertex_hom[static_cast<std::size_t>(v1)]];
  const int phi = d.edge[static_cast<std::size_t>(e)];
  for (std::size_t g = 0; g < c.group.generators.size(); ++g) {
    const int a = evaluate(P.G, c.faces[0].images[g], rho0);
    const int b = evaluate(P.G, c.faces[1].images[g], rho1);
    if (P.G.mul(phi, a) != P.G.mul(b, phi)) return false;
  }
  return true;
}

bool cocycle_ok(const Problem& P, const Datum& d, int s) {
  const auto& c = P.space.component(2, s);
  auto phi = [&](int face) { return d.edge[static_cast<std::size_t>(c.faces[static_cast<std::size_t>(face)].target)]; };
  return P.G.mul(phi(2), phi(0)) == phi(1);
}

Problem make_problem(const SimplicialSpace& space, const FiniteGroup& G, const std::string& root_id, Budget* budget) {
  Problem P{space, G, {}, {}, {}, {}, {}, {}};
  const auto& X0 = space.level(0);
  const auto& X1 = space.level(1);
  for (const auto& v : X0) {
    std::vector<std::vector<int>> list;
    for_each_hom(v.group, G, [&](const std::vector<int>& im) { list.push_back(im); }, budget);
    P.homs.push_back(std::move(list));
  }
  P.is_tree.assign(X1.size(), false);
  for (int e : spanning_tree_edges(space, root_id)) P.is_tree[static_cast<std::size_t>(e)] = true;
  // BFS vertex order from the root along tree edges
  const int root = space.find(0, root_id);
  std::vector<int> order{root};
  std::vector<bool> seen(X0.size(), false);
  seen[static_cast<std::size_t>(root)] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t e = 0; e < X1.size(); ++e) {
      if (!P.is_tree[e]) continue;
      const int a = X1[e].faces[0].target, b = X1[e].faces[1].target;
      for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}})
        if (x == order[i] && !seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          order.push_back(y);
        }
    }
  std::vector<int> vstep(X0.size(), -1), estep(X1.size(), -1);
  std::vector<bool> edge_done(X1.size(), false);
  for (int v : order) {
    vstep[static_cast<std::size_t>(v)] = static_cast<int>(P.vars.size());
    P.vars.emplace_back(0, v);
    for (std::size_t e = 0; e < X1.size(); ++e) {
      if (edge_done[e] || !X1[e].nondegenerate || P.is_tree[e]) continue;
      if (vstep[static_cast<std::size_t>(X1[e].faces[0].target)] < 0 ||
          vstep[static_cast<std::size_t>(X1[e].faces[1].target)] < 0)
        continue;
      edge_done[e] = true;
      estep[e] = static_cast<int>(P.vars.size());
      P.vars.emplace_back(1, static_cast<int>(e));
    }
  }
  P.conj_checks.resize(P.vars.size());
  P.tri_checks.resize(P.vars.size());
  for (std::size_t e = 0; e < X1.size(); ++e) {
    if (!X1[e].nondegenerate) continue;
    const int s = std::max({vstep[static_cast<std::size_t>(X1[e].faces[0].target)],
                            vstep[static_cast<std::size_t>(X1[e].faces[1].target)], estep[e]});
    P.conj_checks[static_cast<std::size_t>(s)].push_back(static_cast<int>(e));
  }
  for (int s : space.nondegenerate(2)) {
    int step = -1;
    for (const auto& f : space.component(2, s).faces) step = std::max(step, estep[static_cast<std::size_t>(f.target)]);
    if (step < 0) P.pre_triangles.push_back(s);
    else P.tri_checks[static_cast<std::size_t>(step)].push_back(s);
  }
  return P;
}

void search(const Problem& P, Datum& d, std::size_t step, std::vector<Datum>& out, Budget* budget) {
  if (step == P.vars.size()) {
    out.push_back(d);
    return;
  }
  const auto [kind, idx] = P.vars[step];
  const std::size_t n = kind == 0 ? P.homs[static_cast<std::size_t>(idx)].size() : static_cast<std::size_t>(P.G.order());
  for (std::size_t val = 0; val < n; ++val) {
    if (budget) budget->charge();
    if (kind == 0) d.vertex_hom[static_cast<std::size_t>(idx)] = val;
    else d.edge[static_cast<std::size_t>(idx)] = static_cast<int>(val);
    bool ok = true;
    for (int e : P.conj_checks[step])
      if (!conj_ok(P, d, e)) { ok = false; break; }
    if (ok)
      for (int s : P.tri_checks[step])
        if (!cocycle_ok(P, d, s)) { ok = false; break; }
    if (ok) search(P, d, step + 1, out, budget);
  }
}

std::vector<Datum> solve(const Problem& P, const EnumerationOptions& opt) {
  Datum d;
  d.vertex_hom.assign(P.space.level(0).size(), 0);
  d.edge.assign(P.space.level(1).size(), P.G.identity());
  for (int s : P.pre_triangles)
    if (!cocycle_ok(P, d, s)) return {};
  if (P.vars.empty()) {
    return {d};
  }
  // fan out over the first variable
  const auto [kind, idx] = P.vars[0];
  const std::size_t n = kind == 0 ? P.homs[static_cast<std::size_t>(idx)].size() : static_cast<std::size_t>(P.G.order());
  std::vector<std::vector<Datum>> parts(n);
  std::vector<Budget> budgets(n, opt.budget ? *opt.budget : Budget{});
  parallel_for(n, opt.threads, [&](std::size_t val) {
    Datum local = d;
    Budget* b = opt.budget ? &budgets[val] : nullptr;
    if (kind == 0) local.vertex_hom[static_cast<std::size_t>(idx)] = val;
    else local.edge[static_cast<std::size_t>(idx)] = static_cast<int>(val);
    for (int e : P.conj_checks[0])
      if (!conj_ok(P, local, e)) return;
    for (int s : P.tri_checks[0])
      if (!cocycle_ok(P, local, s)) return;
    search(P, local, 1, parts[val], b);
  });
  std::vector<Datum> out;
  const std::uint64_t base = opt.budget ? opt.budget->used : 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (opt.budget) opt.budget->charge(budgets[v].used - base + 1);
    for (auto& x : parts[v]) out.push_back(std::move(x));
  }
  return out;
}

FiniteLocalSystem to_system(const Problem& P, const Datum& d) {
  FiniteLocalSystem s;
  s.group = P.G;
  for (std::size_t v = 0; v < P.space.level(0).size(); ++v)
    s.representation[P.space.component(0, static_cast<int>(v)).id] = P.homs[v][d.vertex_hom[v]];
  for (int e : P.space.nondegenerate(1))
    s.transport[P.space.component(1, e).id] = d.edge[static_cast<std::size_t>(e)];
  return s;
}

// Flat tuple of a datum: vertex images then non-tree edge transports.
std::vector<int> flatten(const Problem& P, const Datum& d) {
  std::vector<int> t;
  for (std::size_t v = 0; v < P.homs.size(); ++v)
    for (int x : P.homs[v][d.vertex_hom[v]]) t.push_back(x);
  for (std::size_t e = 0; e < d.edge.size(); ++e)
    if (P.space.component(1, static_cast<int>(e)).nondegenerate && !P.is_tree[e]) t.push_back(d.edge[e]);
  return t;
}

void require_connected(const SimplicialSpace& space) {
  const auto comps = pi0(space);
  if (comps.size() != 1)
    throw Error(ErrorKind::Disconnected, "realization has " + std::to_string(comps.size()) +
                                             " connected components; torsor enumeration needs a connected space");
}

}  // namespace

std::vector<int> canonical_conjugate(const FiniteGroup& g, const std::vector<int>& tuple) {
  std::vector<int> best = tuple, cur(tuple.size());
  for (int h = 0; h < g.order(); ++h) {
    for (std::size_t i = 0; i < tuple.size(); ++i) cur[i] = g.conj(h, tuple[i]);
    if (cur < best) best = cur;
  }
  return best;
}

FramedEnumeration enumerate_framed(const SimplicialSpace& space, const SimplicialBasepoint& basepoint,
                                   const FiniteGroup& g, const EnumerationOptions& opt) {
  if (basepoint.points.empty()) throw Error(ErrorKind::EmptyBasepoint, "basepoint lists no simplices");
  std::vector<int> frame_vertex;
  std::vector<bool> level_hit(kTopLevel + 1, false);
  for (const auto& [level, id] : basepoint.points) {
    if (level < 0 || level > 2)
      throw Error(ErrorKind::BasepointMissing, "basepoint level " + std::to_string(level) + " is outside 0..2");
    const int c = space.find(level, id);
    if (c < 0)
      throw Error(ErrorKind::BasepointMissing,
                  "basepoint '" + id + "' is not a component of level " + std::to_string(level));
    level_hit[static_cast<std::size_t>(level)] = true;
    frame_vertex.push_back(space.vertex(level, c, 0));
  }
  require_connected(space);
  FramedEnumeration out;
  for (int k = 0; k <= 2; ++k)
    if (!level_hit[static_cast<std::size_t>(k)] && !space.level(k).empty())
      out.warnings.push_back("basepoint has no level-" + std::to_string(k) +
                             " simplex; the degenerate completion of the distinguished vertex is used");
  out.root = space.component(0, frame_vertex.front()).id;
  const Problem P = make_problem(space, g, out.root, opt.budget);
  for (std::size_t e = 0; e < P.is_tree.size(); ++e)
    if (P.is_tree[e]) out.tree_edges.push_back(space.component(1, static_cast<int>(e)).id);
  const auto data = solve(P, opt);
  out.unframed_count = data.size();
  const std::size_t extra = frame_vertex.size() - 1;
  std::uint64_t per = 1;
  for (std::size_t i = 0; i < extra; ++i) per *= static_cast<std::uint64_t>(g.order());
  if (opt.budget) opt.budget->charge(per * data.size());
  for (const auto& d : data) {
    const FiniteLocalSystem sys = to_system(P, d);
    std::vector<int> framing(frame_vertex.size(), g.identity());
    for (std::uint64_t code = 0; code < per; ++code) {
      std::uint64_t c = code;
      for (std::size_t i = extra; i >= 1; --i) {
        framing[i] = static_cast<int>(c % static_cast<std::uint64_t>(g.order()));
        c /= static_cast<std::uint64_t>(g.order());
      }
      out.framed.push_back({sys, framing});
    }
  }
  return out;
}

TorsorClassification torsor_classes(const SimplicialSpace& space, const FiniteGroup& g,
                                    const EnumerationOptions& opt) {
  require_connected(space);
  TorsorClassification out;
  const std::string root = space.component(0, 0).id;
  const Problem P = make_problem(space, g, root, opt.budget);
  const auto data = solve(P, opt);
  out.framed_count = data.size();
  out.framing_group_order = static_cast<std::uint64_t>(g.order());
  std::vector<std::vector<int>> flat(data.size()), keys(data.size());
  parallel_for(data.size(), opt.threads, [&](std::size_t i) {
    flat[i] = flatten(P, data[i]);
    keys[i] = canonical_conjugate(g, flat[i]);
  });
  // each orbit contains its canonical key, which serves as representative
  std::map<std::vector<int>, std::pair<std::size_t, std::uint64_t>> orbits;
  for (std::size_t i = 0; i < data.size(); ++i) {
    auto& o = orbits[keys[i]];
    ++o.second;
    if (flat[i] == keys[i]) o.first = i;
  }
  out.groupoid_cardinality = 0;
  for (const auto& [key, rep] : orbits) {
    TorsorClass c;
    c.representative = to_system(P, data[rep.first]);
    c.orbit_size = rep.second;
    c.automorphisms = out.framing_group_order / rep.second;
    out.groupoid_cardinality += Rational(1) / Rational(c.automorphisms);
    out.classes.push_back(std::move(c));
  }
  return out;
}

WeightEquivalence weight_equivalence(const SimplicialSpace& space, const FiniteGroup& g,
                                     const EnumerationOptions& opt) {
  WeightEquivalence out;
  out.classification = torsor_classes(space, g, opt);
  std::map<std::vector<std::vector<int>>, std::size_t> index;
  for (std::size_t i = 0; i < out.classification.classes.size(); ++i) {
    const auto& rep = out.classification.classes[i].representative;
    std::vector<std::vector<int>> key;
    for (const auto& v : space.level(0)) key.push_back(canonical_conjugate(g, rep.representation.at(v.id)));
    auto [it, fresh] = index.emplace(key, out.classes.size());
    if (fresh) {
      WeightClass wc;
      wc.representative = i;
      wc.restriction = key;
      out.classes.push_back(std::move(wc));
    }
    out.classes[it->second].members.push_back(i);
  }
  return out;
}

}  // namespace stackypi1

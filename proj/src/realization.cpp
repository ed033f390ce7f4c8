#include "stackypi1/realization.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "stackypi1/linalg.hpp"
#include "stackypi1/parallel.hpp"

namespace stackypi1 {

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
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
    return true;
  }
};

Edge2 sorted_edge(int a, int b) { return a < b ? Edge2{a, b} : Edge2{b, a}; }

Triangle2 sorted_triangle(int a, int b, int c) {
  Triangle2 t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

// Triangle index -> adjacency component id (union over shared edges).
std::vector<int> triangle_components(const SimplicialComplex2& a) {
  UnionFind uf(a.triangles.size());
  std::map<Edge2, int> first;
  for (std::size_t t = 0; t < a.triangles.size(); ++t) {
    const auto& tr = a.triangles[t];
    for (auto e : {Edge2{tr[0], tr[1]}, Edge2{tr[0], tr[2]}, Edge2{tr[1], tr[2]}}) {
      auto [it, fresh] = first.emplace(e, static_cast<int>(t));
      if (!fresh) uf.unite(it->second, static_cast<int>(t));
    }
  }
  std::vector<int> comp(a.triangles.size());
  for (std::size_t t = 0; t < comp.size(); ++t) comp[t] = uf.find(static_cast<int>(t));
  return comp;
}

}  // namespace

int SimplicialComplex2::edge_index(int a, int b) const {
  const Edge2 e = sorted_edge(a, b);
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || *it != e) return -1;
  return static_cast<int>(it - edges.begin());
}

SimplicialComplex2 make_complex(int num_vertices, std::vector<Edge2> edges, std::vector<Triangle2> triangles) {
  SimplicialComplex2 a;
  a.num_vertices = num_vertices;
  for (auto& t : triangles) {
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2])
      throw Error(ErrorKind::InvalidArgument, "triangle with a repeated vertex");
    edges.push_back({t[0], t[1]});
    edges.push_back({t[0], t[2]});
    edges.push_back({t[1], t[2]});
  }
  for (auto& e : edges) {
    if (e[0] > e[1]) std::swap(e[0], e[1]);
    if (e[0] == e[1]) throw Error(ErrorKind::InvalidArgument, "edge with a repeated vertex");
    if (e[0] < 0 || e[1] >= num_vertices) throw Error(ErrorKind::InvalidArgument, "edge vertex out of range");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::sort(triangles.begin(), triangles.end());
  triangles.erase(std::unique(triangles.begin(), triangles.end()), triangles.end());
  a.edges = std::move(edges);
  a.triangles = std::move(triangles);
  return a;
}

ComplexConditions check_conditions(const SimplicialComplex2& a) {
  ComplexConditions c;
  std::vector<bool> vertex_used(static_cast<std::size_t>(a.num_vertices), false);
  std::vector<bool> edge_used(a.edges.size(), false);
  for (const auto& e : a.edges) vertex_used[static_cast<std::size_t>(e[0])] = vertex_used[static_cast<std::size_t>(e[1])] = true;
  for (const auto& t : a.triangles)
    for (auto e : {Edge2{t[0], t[1]}, Edge2{t[0], t[2]}, Edge2{t[1], t[2]}}) {
      const int i = a.edge_index(e[0], e[1]);
      if (i < 0) c.triangle_edges_present = false;
      else edge_used[static_cast<std::size_t>(i)] = true;
    }
  c.vertices_in_edges = std::all_of(vertex_used.begin(), vertex_used.end(), [](bool b) { return b; });
  c.edges_in_triangles = std::all_of(edge_used.begin(), edge_used.end(), [](bool b) { return b; });
  const auto comp = triangle_components(a);
  c.triangles_connected = a.triangles.empty() || std::all_of(comp.begin(), comp.end(), [&](int x) { return x == comp[0]; });
  return c;
}

DualGraph dual_graph(const SimplicialComplex2& a) {
  DualGraph g;
  g.nodes = static_cast<int>(a.triangles.size());
  std::vector<std::vector<int>> on_edge(a.edges.size());
  for (std::size_t t = 0; t < a.triangles.size(); ++t) {
    const auto& tr = a.triangles[t];
    for (auto e : {Edge2{tr[0], tr[1]}, Edge2{tr[0], tr[2]}, Edge2{tr[1], tr[2]}}) {
      const int i = a.edge_index(e[0], e[1]);
      if (i < 0) throw Error(ErrorKind::InvalidArgument, "triangle edge missing from the complex");
      on_edge[static_cast<std::size_t>(i)].push_back(static_cast<int>(t));
    }
  }
  for (std::size_t e = 0; e < on_edge.size(); ++e)
    for (std::size_t i = 0; i < on_edge[e].size(); ++i)
      for (std::size_t j = i + 1; j < on_edge[e].size(); ++j)
        g.arcs.push_back({on_edge[e][i], on_edge[e][j], static_cast<int>(e)});
  std::sort(g.arcs.begin(), g.arcs.end(), [](const DualArc& x, const DualArc& y) {
    return std::tie(x.a, x.b, x.edge) < std::tie(y.a, y.b, y.edge);
  });
  return g;
}

std::vector<int> maximal_tree(const DualGraph& g) {
  std::vector<int> tree;
  if (g.nodes == 0) return tree;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.nodes));
  for (std::size_t i = 0; i < g.arcs.size(); ++i) {
    adj[static_cast<std::size_t>(g.arcs[i].a)].push_back(static_cast<int>(i));
    adj[static_cast<std::size_t>(g.arcs[i].b)].push_back(static_cast<int>(i));
  }
  std::vector<bool> seen(static_cast<std::size_t>(g.nodes), false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const int t = queue.front();
    queue.pop_front();
    for (int i : adj[static_cast<std::size_t>(t)]) {
      const auto& arc = g.arcs[static_cast<std::size_t>(i)];
      const int other = arc.a == t ? arc.b : arc.a;
      if (seen[static_cast<std::size_t>(other)]) continue;
      seen[static_cast<std::size_t>(other)] = true;
      tree.push_back(i);
      queue.push_back(other);
    }
  }
  if (static_cast<int>(tree.size()) != g.nodes - 1)
    throw Error(ErrorKind::Disconnected, "dual graph is not connected; triangles are not joined by adjacency");
  std::sort(tree.begin(), tree.end());
  return tree;
}

Unfolding unfold(const SimplicialComplex2& a, const DualGraph& g, const std::vector<int>& tree) {
  const int T = static_cast<int>(a.triangles.size());
  if (g.nodes != T) throw Error(ErrorKind::NotSpanningTree, "dual graph does not belong to this complex");
  if (static_cast<int>(tree.size()) != std::max(T - 1, 0))
    throw Error(ErrorKind::NotSpanningTree, "a spanning tree on " + std::to_string(T) + " triangles has " +
                                                std::to_string(std::max(T - 1, 0)) + " arcs, got " +
                                                std::to_string(tree.size()));
  UnionFind nodes(static_cast<std::size_t>(T));
  UnionFind corners(static_cast<std::size_t>(3 * T));
  auto corner = [&](int t, int v) {
    const auto& tr = a.triangles[static_cast<std::size_t>(t)];
    for (int i = 0; i < 3; ++i)
      if (tr[static_cast<std::size_t>(i)] == v) return 3 * t + i;
    throw Error(ErrorKind::NotSpanningTree, "arc edge is not an edge of its triangles");
  };
  for (int i : tree) {
    if (i < 0 || i >= static_cast<int>(g.arcs.size()))
      throw Error(ErrorKind::NotSpanningTree, "arc index " + std::to_string(i) + " out of range");
    const auto& arc = g.arcs[static_cast<std::size_t>(i)];
    if (!nodes.unite(arc.a, arc.b)) throw Error(ErrorKind::NotSpanningTree, "tree arcs contain a cycle");
    const auto& e = a.edges[static_cast<std::size_t>(arc.edge)];
    for (int v : e) corners.unite(corner(arc.a, v), corner(arc.b, v));
  }
  Unfolding u;
  std::map<int, int> number;
  for (int c = 0; c < 3 * T; ++c) {
    const int r = corners.find(c);
    if (number.emplace(r, static_cast<int>(number.size())).second)
      u.vertex_map.push_back(a.triangles[static_cast<std::size_t>(c / 3)][static_cast<std::size_t>(c % 3)]);
  }
  std::vector<std::pair<Triangle2, int>> tris;
  for (int t = 0; t < T; ++t)
    tris.emplace_back(sorted_triangle(number.at(corners.find(3 * t)), number.at(corners.find(3 * t + 1)),
                                      number.at(corners.find(3 * t + 2))),
                      t);
  std::sort(tris.begin(), tris.end());
  std::vector<Triangle2> triangles;
  for (const auto& [tr, origin] : tris) {
    triangles.push_back(tr);
    u.triangle_origin.push_back(origin);
  }
  u.complex = make_complex(static_cast<int>(number.size()), {}, std::move(triangles));
  return u;
}

GroupPresentation pushout_presentation(const SimplicialComplex2& a, const Unfolding& u) {
  const auto& b = u.complex;
  if (static_cast<int>(u.vertex_map.size()) != b.num_vertices)
    throw Error(ErrorKind::MapMismatch, "skeleton map has " + std::to_string(u.vertex_map.size()) +
                                            " entries for " + std::to_string(b.num_vertices) + " vertices");
  for (int v : u.vertex_map)
    if (v < 0 || v >= a.num_vertices) throw Error(ErrorKind::MapMismatch, "skeleton map sends a vertex out of range");
  auto image_edge = [&](int x, int y) {
    const int X = u.vertex_map[static_cast<std::size_t>(x)], Y = u.vertex_map[static_cast<std::size_t>(y)];
    const int e = X == Y ? -1 : a.edge_index(X, Y);
    if (e < 0)
      throw Error(ErrorKind::MapMismatch, "edge (" + std::to_string(x) + "," + std::to_string(y) +
                                              ") does not map to an edge");
    return e;
  };
  for (const auto& e : b.edges) image_edge(e[0], e[1]);
  for (const auto& t : b.triangles) {
    const auto img = sorted_triangle(u.vertex_map[static_cast<std::size_t>(t[0])], u.vertex_map[static_cast<std::size_t>(t[1])],
                                     u.vertex_map[static_cast<std::size_t>(t[2])]);
    if (!std::binary_search(a.triangles.begin(), a.triangles.end(), img))
      throw Error(ErrorKind::MapMismatch, "a triangle does not map to a triangle");
  }
  // spanning forest of A_1 and generator numbering
  auto bfs_forest = [](const SimplicialComplex2& c) {
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(c.num_vertices));
    for (std::size_t i = 0; i < c.edges.size(); ++i) {
      adj[static_cast<std::size_t>(c.edges[i][0])].emplace_back(c.edges[i][1], static_cast<int>(i));
      adj[static_cast<std::size_t>(c.edges[i][1])].emplace_back(c.edges[i][0], static_cast<int>(i));
    }
    std::vector<int> parent(static_cast<std::size_t>(c.num_vertices), -2), root(parent.size(), -1);
    std::vector<bool> tree(c.edges.size(), false);
    for (int r = 0; r < c.num_vertices; ++r) {
      if (parent[static_cast<std::size_t>(r)] != -2) continue;
      parent[static_cast<std::size_t>(r)] = -1;
      root[static_cast<std::size_t>(r)] = r;
      std::deque<int> q{r};
      while (!q.empty()) {
        const int x = q.front();
        q.pop_front();
        for (auto [y, e] : adj[static_cast<std::size_t>(x)]) {
          if (parent[static_cast<std::size_t>(y)] != -2) continue;
          parent[static_cast<std::size_t>(y)] = x;
          root[static_cast<std::size_t>(y)] = r;
          tree[static_cast<std::size_t>(e)] = true;
          q.push_back(y);
        }
      }
    }
    return std::tuple{parent, root, tree};
  };
  const auto [pa, ra, tree_a] = bfs_forest(a);
  GroupPresentation p;
  std::vector<int> gen(a.edges.size(), 0);
  for (std::size_t e = 0; e < a.edges.size(); ++e) {
    if (tree_a[e]) continue;
    p.generators.push_back("e" + std::to_string(a.edges[e][0]) + "_" + std::to_string(a.edges[e][1]));
    gen[e] = static_cast<int>(p.generators.size());
  }
  const auto [pb, rb, tree_b] = bfs_forest(b);
  auto path_to_root = [&](int x) {
    std::vector<int> path{x};
    while (pb[static_cast<std::size_t>(path.back())] >= 0) path.push_back(pb[static_cast<std::size_t>(path.back())]);
    return path;
  };
  for (std::size_t e = 0; e < b.edges.size(); ++e) {
    if (tree_b[e]) continue;
    // closed walk root -> x -> y -> root in the unfolded 1-skeleton
    std::vector<int> walk = path_to_root(b.edges[e][0]);
    std::reverse(walk.begin(), walk.end());
    for (int v : path_to_root(b.edges[e][1])) walk.push_back(v);
    Word w;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
      const int x = walk[i], y = walk[i + 1];
      const int ae = image_edge(x, y);
      const int g = gen[static_cast<std::size_t>(ae)];
      if (g == 0) continue;
      w.push_back(u.vertex_map[static_cast<std::size_t>(x)] < u.vertex_map[static_cast<std::size_t>(y)] ? g : -g);
    }
    w = cyclic_reduce(free_reduce(w));
    if (!w.empty()) p.relators.push_back(std::move(w));
  }
  return tietze_simplify(p);
}

SimplicialSpace complex_to_space(const SimplicialComplex2& a) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : a.edges) edges.emplace_back(e[0], e[1]);
  std::vector<std::array<int, 3>> tris;
  for (const auto& t : a.triangles)
    tris.push_back({a.edge_index(t[1], t[2]), a.edge_index(t[0], t[2]), a.edge_index(t[0], t[1])});
  return build_space(spaces::from_simplices(a.num_vertices, edges, tris));
}

GroupPresentation complex_pi1(const SimplicialComplex2& a) {
  if (a.num_vertices == 0) return {};
  return pi1_presentation(complex_to_space(a), "v0");
}

Abelianization homology_h1(const SimplicialComplex2& a) {
  const auto V = static_cast<Eigen::Index>(a.num_vertices);
  const auto E = static_cast<Eigen::Index>(a.edges.size());
  const auto T = static_cast<Eigen::Index>(a.triangles.size());
  MatrixZ d1 = zeros<Integer>(V, E), d2 = zeros<Integer>(E, T);
  for (Eigen::Index e = 0; e < E; ++e) {
    d1(a.edges[static_cast<std::size_t>(e)][0], e) -= 1;
    d1(a.edges[static_cast<std::size_t>(e)][1], e) += 1;
  }
  for (Eigen::Index t = 0; t < T; ++t) {
    const auto& tr = a.triangles[static_cast<std::size_t>(t)];
    d2(a.edge_index(tr[1], tr[2]), t) += 1;
    d2(a.edge_index(tr[0], tr[2]), t) -= 1;
    d2(a.edge_index(tr[0], tr[1]), t) += 1;
  }
  const auto r1 = linalg::rank(d1);
  const auto snf = linalg::smith_normal_form(d2);
  Abelianization ab;
  ab.free_rank = static_cast<std::size_t>(E - r1 - snf.rank());
  for (const auto& x : snf.invariants)
    if (x > 1) ab.torsion.push_back(x);
  std::sort(ab.torsion.begin(), ab.torsion.end());
  return ab;
}

RealizedComplex presentation_to_complex(const GroupPresentation& input) {
  input.validate();
  RealizedComplex out;
  std::vector<Triangle2> tris;
  std::vector<Edge2> edges;
  std::vector<std::pair<RealizationStep, std::vector<Triangle2>>> steps;
  int next = 0;
  if (input.generators.empty()) {
    next = 3;
    steps.push_back({{"base-triangle", "no generators: a single triangle", {}}, {{0, 1, 2}}});
    tris.push_back({0, 1, 2});
  } else {
    const int base = next++;
    std::vector<std::pair<int, int>> loop;
    for (std::size_t g = 0; g < input.generators.size(); ++g) {
      const int x1 = next++, x2 = next++;
      loop.emplace_back(x1, x2);
      edges.push_back(sorted_edge(base, x1));
      edges.push_back(sorted_edge(x1, x2));
      edges.push_back(sorted_edge(x2, base));
      steps.push_back({{"generator-loop", input.generators[g] + ": " + std::to_string(base) + "-" + std::to_string(x1) +
                                              "-" + std::to_string(x2) + "-" + std::to_string(base), {}},
                       {}});
    }
    for (std::size_t r = 0; r < input.relators.size(); ++r) {
      const Word w = cyclic_reduce(free_reduce(input.relators[r]));
      if (w.empty()) continue;
      std::vector<int> walk;
      for (int l : w) {
        const auto [x1, x2] = loop[static_cast<std::size_t>(std::abs(l) - 1)];
        walk.push_back(base);
        walk.push_back(l > 0 ? x1 : x2);
        walk.push_back(l > 0 ? x2 : x1);
      }
      const std::size_t n = walk.size();
      std::vector<int> q(n);
      for (auto& x : q) x = next++;
      const int centre = next++;
      std::vector<Triangle2> disk;
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t k = (j + 1) % n;
        disk.push_back(sorted_triangle(walk[j], walk[k], q[j]));
        disk.push_back(sorted_triangle(walk[k], q[j], q[k]));
        disk.push_back(sorted_triangle(q[j], q[k], centre));
      }
      tris.insert(tris.end(), disk.begin(), disk.end());
      steps.push_back({{"relator-disk", "relator " + std::to_string(r + 1) + " (" + format_word(w, input.generators) +
                                            "): boundary walk of " + std::to_string(n) + " edges",
                        {}},
                       disk});
    }
    // fins: a fresh cone point over every edge outside all triangles
    SimplicialComplex2 cur = make_complex(next, edges, tris);
    std::vector<bool> covered(cur.edges.size(), false);
    for (const auto& t : cur.triangles)
      for (auto e : {Edge2{t[0], t[1]}, Edge2{t[0], t[2]}, Edge2{t[1], t[2]}})
        covered[static_cast<std::size_t>(cur.edge_index(e[0], e[1]))] = true;
    for (std::size_t e = 0; e < cur.edges.size(); ++e) {
      if (covered[e]) continue;
      const int z = next++;
      const Triangle2 fin = sorted_triangle(cur.edges[e][0], cur.edges[e][1], z);
      tris.push_back(fin);
      steps.push_back({{"fin", "edge " + std::to_string(cur.edges[e][0]) + "-" + std::to_string(cur.edges[e][1]), {}},
                       {fin}});
    }
    // bridges: join adjacency components sharing a vertex
    for (;;) {
      cur = make_complex(next, edges, tris);
      const auto comp = triangle_components(cur);
      if (std::all_of(comp.begin(), comp.end(), [&](int c) { return c == comp[0]; })) break;
      std::vector<std::vector<int>> at_vertex(static_cast<std::size_t>(next));
      for (std::size_t t = 0; t < cur.triangles.size(); ++t)
        for (int v : cur.triangles[t]) at_vertex[static_cast<std::size_t>(v)].push_back(static_cast<int>(t));
      bool bridged = false;
      for (int v = 0; v < next && !bridged; ++v) {
        const auto& ts = at_vertex[static_cast<std::size_t>(v)];
        for (std::size_t i = 1; i < ts.size() && !bridged; ++i) {
          if (comp[static_cast<std::size_t>(ts[i])] == comp[static_cast<std::size_t>(ts[0])]) continue;
          const auto& t1 = cur.triangles[static_cast<std::size_t>(ts[0])];
          const auto& t2 = cur.triangles[static_cast<std::size_t>(ts[i])];
          std::vector<int> o1, o2;
          for (int x : t1) if (x != v) o1.push_back(x);
          for (int x : t2) if (x != v) o2.push_back(x);
          const int a = o1[0];
          const int b = o2[0] != a ? o2[0] : o2[1];
          const int z = next++;
          const std::vector<Triangle2> bridge{sorted_triangle(v, a, z), sorted_triangle(v, b, z)};
          tris.insert(tris.end(), bridge.begin(), bridge.end());
          steps.push_back({{"bridge", "at vertex " + std::to_string(v) + " along " + std::to_string(a) + "-" +
                                          std::to_string(v) + "-" + std::to_string(b),
                            {}},
                           bridge});
          out.used_bridges = true;
          bridged = true;
        }
      }
      if (!bridged) throw Error(ErrorKind::Disconnected, "presentation complex has triangle components with no common vertex");
    }
  }
  out.complex = make_complex(next, edges, tris);
  for (auto& [step, added] : steps) {
    for (const auto& t : added) {
      auto it = std::lower_bound(out.complex.triangles.begin(), out.complex.triangles.end(), t);
      step.triangles.push_back(static_cast<int>(it - out.complex.triangles.begin()));
    }
    out.steps.push_back(std::move(step));
  }
  return out;
}

LineConfiguration line_configuration(const SimplicialComplex2& g) {
  LineConfiguration c;
  c.lines = g.edges;
  c.points.resize(static_cast<std::size_t>(g.num_vertices));
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    for (int v : g.edges[e]) c.points[static_cast<std::size_t>(v)].push_back(static_cast<int>(e));
  return c;
}

RealizationPlan realize(const GroupPresentation& p) {
  RealizationPlan plan;
  plan.input = p;
  plan.realized = presentation_to_complex(p);
  const auto& A = plan.realized.complex;
  plan.dual = dual_graph(A);
  plan.tree = maximal_tree(plan.dual);
  plan.unfolding = unfold(A, plan.dual, plan.tree);
  plan.pushout = pushout_presentation(A, plan.unfolding);
  plan.Y = line_configuration(A);
  plan.Z = line_configuration(plan.unfolding.complex);
  for (const auto& e : plan.unfolding.complex.edges)
    plan.z_to_y.push_back(A.edge_index(plan.unfolding.vertex_map[static_cast<std::size_t>(e[0])],
                                       plan.unfolding.vertex_map[static_cast<std::size_t>(e[1])]));
  return plan;
}

FingerprintResult fingerprint(const GroupPresentation& p1, const GroupPresentation& p2, int order_bound, int threads,
                              Budget* budget) {
  constexpr int kMaxOrder = 24;
  if (order_bound < 1 || order_bound > kMaxOrder)
    throw Error(ErrorKind::InvalidArgument, "fingerprint order bound must lie in 1.." + std::to_string(kMaxOrder));
  FingerprintResult out;
  out.ab_first = abelianization(p1);
  out.ab_second = abelianization(p2);
  if (!(out.ab_first == out.ab_second)) {
    out.consistent = false;
    out.reason = "abelianizations differ: " + format_abelianization(out.ab_first) + " vs " +
                 format_abelianization(out.ab_second);
    return out;
  }
  const auto groups = groups::catalog_up_to(order_bound);
  std::vector<HomCount> counts(groups.size());
  std::vector<Budget> budgets(groups.size(), budget ? *budget : Budget{});
  parallel_for(groups.size(), threads, [&](std::size_t i) {
    Budget* b = budget ? &budgets[i] : nullptr;
    counts[i] = {groups[i].name(), groups[i].order(), count_homs(p1, groups[i], b), count_homs(p2, groups[i], b)};
  });
  if (budget) {
    const std::uint64_t base = budget->used;
    for (const auto& b : budgets) budget->charge(b.used - base);
  }
  for (const auto& c : counts) {
    out.counts.push_back(c);
    if (c.first != c.second) {
      out.consistent = false;
      out.witness = c.group;
      out.reason = "|Hom(-, " + c.group + ")| = " + std::to_string(c.first) + " vs " + std::to_string(c.second);
      break;
    }
  }
  return out;
}

}  // namespace stackypi1

#include "stackypi1/local_system.hpp"

#include <deque>

#include "stackypi1/error.hpp"
#include "stackypi1/linalg.hpp"

namespace stackypi1 {

namespace {

// element arithmetic over the two structure kinds

struct FiniteOps {
  const FiniteLocalSystem& s;
  int one() const { return s.group.identity(); }
  int mul(int a, int b) const { return s.group.mul(a, b); }
  int inv(int a) const { return s.group.inv(a); }
  bool is_one(int a) const { return a == s.group.identity(); }
  void check(int a, const std::string& where) const {
    if (a < 0 || a >= s.group.order())
      throw Error(ErrorKind::StructureMismatch,
                  where + ": element " + std::to_string(a) + " is not in the structure group of order " +
                      std::to_string(s.group.order()));
  }
  std::string show(int a) const { return std::to_string(a); }
};

struct MatrixOps {
  const MatrixLocalSystem& s;
  MatrixQ one() const { return identity<Rational>(s.dimension); }
  MatrixQ mul(const MatrixQ& a, const MatrixQ& b) const { return a * b; }
  MatrixQ inv(const MatrixQ& a) const { return linalg::inverse(a); }
  bool is_one(const MatrixQ& a) const { return a == one(); }
  void check(const MatrixQ& a, const std::string& where) const {
    if (a.rows() != s.dimension || a.cols() != s.dimension)
      throw Error(ErrorKind::StructureMismatch, where + ": matrix is " + std::to_string(a.rows()) + "x" +
                                                    std::to_string(a.cols()) + ", expected " +
                                                    std::to_string(s.dimension) + "x" + std::to_string(s.dimension));
    if (linalg::rank(a) != s.dimension)
      throw Error(ErrorKind::StructureMismatch, where + ": matrix is not invertible");
  }
  std::string show(const MatrixQ&) const { return "matrix"; }
};

template <typename Ops, typename Sys>
auto representation_of(const Ops& ops, const Sys& sys, const Component& v) {
  using E = std::decay_t<decltype(ops.one())>;
  std::vector<E> out;
  auto it = sys.representation.find(v.id);
  if (it == sys.representation.end()) {
    if (!v.group.generators.empty())
      throw Error(ErrorKind::MissingTransport, "missing representation for component '" + v.id + "'");
    return out;
  }
  return it->second;
}

template <typename Ops, typename Sys>
auto transport_of(const Ops& ops, const Sys& sys, const SimplicialSpace& space, int e) {
  const auto& c = space.component(1, e);
  if (!c.nondegenerate) return ops.one();
  auto it = sys.transport.find(c.id);
  if (it == sys.transport.end())
    throw Error(ErrorKind::MissingTransport, "missing transport for edge '" + c.id + "'");
  return it->second;
}

template <typename Ops, typename E>
E evaluate_word(const Ops& ops, const Word& w, const std::vector<E>& images) {
  E x = ops.one();
  for (int l : w) {
    const E& im = images.at(static_cast<std::size_t>(std::abs(l) - 1));
    x = ops.mul(x, l > 0 ? im : ops.inv(im));
  }
  return x;
}

template <typename Ops, typename Sys>
auto monodromy(const Ops& ops, const Sys& sys, const SimplicialSpace& space, int s) {
  const auto& c = space.component(2, s);
  const auto a = transport_of(ops, sys, space, c.faces[2].target);
  const auto b = transport_of(ops, sys, space, c.faces[0].target);
  const auto d = transport_of(ops, sys, space, c.faces[1].target);
  return ops.mul(ops.mul(a, b), ops.inv(d));
}

template <typename Ops, typename Sys>
LocalSystemReport check_impl(const SimplicialSpace& space, const Ops& ops, const Sys& sys) {
  LocalSystemReport report;
  auto fail = [&](bool& flag, const std::string& msg) {
    flag = false;
    report.ok = false;
    report.failures.push_back(msg);
  };
  for (const auto& [id, elems] : sys.representation) {
    const int v = space.find(0, id);
    if (v < 0) throw Error(ErrorKind::StructureMismatch, "representation given for unknown component '" + id + "'");
    const auto& comp = space.component(0, v);
    if (elems.size() != comp.group.generators.size())
      throw Error(ErrorKind::StructureMismatch, "representation of '" + id + "' has " + std::to_string(elems.size()) +
                                                    " images for " + std::to_string(comp.group.generators.size()) +
                                                    " generators");
    for (std::size_t g = 0; g < elems.size(); ++g) ops.check(elems[g], "representation of '" + id + "'");
  }
  for (const auto& [id, elem] : sys.transport) {
    const int e = space.find(1, id);
    if (e < 0) throw Error(ErrorKind::StructureMismatch, "transport given for unknown edge '" + id + "'");
    ops.check(elem, "transport of '" + id + "'");
    if (!space.component(1, e).nondegenerate && !ops.is_one(elem))
      fail(report.degeneracy_unit_ok, "transport at degenerate edge '" + id + "' is not the identity");
  }
  for (int e : space.nondegenerate(1)) (void)transport_of(ops, sys, space, e);

  for (std::size_t v = 0; v < space.level(0).size(); ++v) {
    const auto& comp = space.component(0, static_cast<int>(v));
    const auto rho = representation_of(ops, sys, comp);
    for (std::size_t r = 0; r < comp.group.relators.size(); ++r)
      if (!ops.is_one(evaluate_word(ops, comp.group.relators[r], rho)))
        fail(report.relators_ok, "representation of '" + comp.id + "' violates relator " + std::to_string(r));
  }
  for (int e : space.nondegenerate(1)) {
    const auto& c = space.component(1, e);
    const auto phi = transport_of(ops, sys, space, e);
    const auto rho0 = representation_of(ops, sys, space.component(0, c.faces[0].target));
    const auto rho1 = representation_of(ops, sys, space.component(0, c.faces[1].target));
    for (std::size_t g = 0; g < c.group.generators.size(); ++g) {
      const auto lhs = ops.mul(phi, evaluate_word(ops, c.faces[0].images[g], rho0));
      const auto rhs = ops.mul(evaluate_word(ops, c.faces[1].images[g], rho1), phi);
      if (!(lhs == rhs))
        fail(report.conjugation_ok,
             "transport of '" + c.id + "' does not intertwine the face images of generator " + std::to_string(g + 1));
    }
  }
  for (int s : space.nondegenerate(2)) {
    TriangleCheck t;
    t.simplex = space.component(2, s).id;
    t.ok = ops.is_one(monodromy(ops, sys, space, s));
    if (!t.ok) fail(report.cocycle_ok, "cocycle condition fails on 2-simplex '" + t.simplex + "'");
    report.triangles.push_back(t);
  }
  return report;
}

void set_block(MatrixQ& m, Eigen::Index row, Eigen::Index col, const MatrixQ& block, const Rational& sign) {
  for (Eigen::Index i = 0; i < block.rows(); ++i)
    for (Eigen::Index j = 0; j < block.cols(); ++j) m(row + i, col + j) += sign * block(i, j);
}

bool all_groups_trivial(const SimplicialSpace& space) {
  for (int k = 0; k <= kTopLevel; ++k)
    for (const auto& c : space.level(k))
      if (!c.group.generators.empty()) return false;
  return true;
}

CohomologyResult cochain_model(const SimplicialSpace& space, const MatrixLocalSystem& sys, int max_degree) {
  MatrixOps ops{sys};
  const Eigen::Index n = sys.dimension;
  std::vector<std::vector<int>> nondeg;
  std::vector<std::vector<int>> position;  // level index -> block index or -1
  for (int k = 0; k <= kTopLevel; ++k) {
    nondeg.push_back(space.nondegenerate(k));
    std::vector<int> pos(space.level(k).size(), -1);
    for (std::size_t i = 0; i < nondeg.back().size(); ++i) pos[static_cast<std::size_t>(nondeg.back()[i])] = static_cast<int>(i);
    position.push_back(std::move(pos));
  }
  CohomologyResult out;
  out.model = "cochain";
  for (int k = 0; k <= kTopLevel; ++k) out.term_dimensions.push_back(n * static_cast<Eigen::Index>(nondeg[static_cast<std::size_t>(k)].size()));
  // delta[j]: C^j -> C^{j+1}
  std::vector<MatrixQ> delta;
  for (int j = 0; j < kTopLevel; ++j) {
    MatrixQ d = zeros<Rational>(out.term_dimensions[static_cast<std::size_t>(j + 1)], out.term_dimensions[static_cast<std::size_t>(j)]);
    const auto& rows = nondeg[static_cast<std::size_t>(j + 1)];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const auto& c = space.component(j + 1, rows[r]);
      for (int a = 0; a <= j + 1; ++a) {
        const int t = position[static_cast<std::size_t>(j)][static_cast<std::size_t>(c.faces[static_cast<std::size_t>(a)].target)];
        if (t < 0) continue;
        const MatrixQ block = a == 0 ? transport_of(ops, sys, space, space.edge(j + 1, rows[r], 0, 1)) : ops.one();
        set_block(d, static_cast<Eigen::Index>(r) * n, static_cast<Eigen::Index>(t) * n, block, Rational(a % 2 == 0 ? 1 : -1));
      }
    }
    delta.push_back(std::move(d));
  }
  for (int j = 0; j <= max_degree; ++j) {
    const MatrixQ z = linalg::nullspace(delta[static_cast<std::size_t>(j)]);
    const MatrixQ b = j == 0 ? zeros<Rational>(out.term_dimensions[0], 0)
                             : linalg::column_basis(delta[static_cast<std::size_t>(j - 1)]);
    CohomologyDegree h;
    h.degree = j;
    h.cocycles = linalg::complement(b, z);
    h.dimension = h.cocycles.cols();
    out.degrees.push_back(std::move(h));
  }
  return out;
}

CohomologyResult presentation_model(const SimplicialSpace& space, const MatrixLocalSystem& sys, int max_degree) {
  MatrixOps ops{sys};
  const Eigen::Index n = sys.dimension;
  CohomologyResult out;
  out.model = "presentation";
  MatrixQ h0_total = zeros<Rational>(0, 0);
  std::vector<MatrixQ> h0_parts, h1_parts;
  Eigen::Index h0_dim = 0, h1_dim = 0;
  for (const auto& cls : pi0(space)) {
    const auto ep = edge_path_presentation(space, cls.front());
    const auto& p = ep.presentation;
    // gauge so that tree edges carry the identity
    std::vector<std::optional<MatrixQ>> gauge(space.level(0).size());
    gauge[static_cast<std::size_t>(space.find(0, cls.front()))] = ops.one();
    bool progress = true;
    while (progress) {
      progress = false;
      for (int e : ep.tree_edges) {
        const auto& c = space.component(1, e);
        const auto a = static_cast<std::size_t>(c.faces[1].target), b = static_cast<std::size_t>(c.faces[0].target);
        const MatrixQ phi = transport_of(ops, sys, space, e);
        if (gauge[a] && !gauge[b]) {
          gauge[b] = MatrixQ(*gauge[a] * phi);
          progress = true;
        } else if (gauge[b] && !gauge[a]) {
          gauge[a] = MatrixQ(*gauge[b] * ops.inv(phi));
          progress = true;
        }
      }
    }
    std::vector<MatrixQ> images(p.generators.size());
    for (std::size_t v = 0; v < space.level(0).size(); ++v) {
      if (ep.vertex_offset[v] < 0) continue;
      const auto& comp = space.component(0, static_cast<int>(v));
      const auto rho = representation_of(ops, sys, comp);
      const MatrixQ hinv = ops.inv(*gauge[v]);
      for (std::size_t g = 0; g < rho.size(); ++g)
        images[static_cast<std::size_t>(ep.vertex_offset[v]) + g] = *gauge[v] * rho[g] * hinv;
    }
    for (std::size_t e = 0; e < ep.edge_generator.size(); ++e) {
      if (ep.edge_generator[e] == 0) continue;
      const auto& c = space.component(1, static_cast<int>(e));
      images[static_cast<std::size_t>(ep.edge_generator[e] - 1)] =
          *gauge[static_cast<std::size_t>(c.faces[1].target)] * transport_of(ops, sys, space, static_cast<int>(e)) *
          ops.inv(*gauge[static_cast<std::size_t>(c.faces[0].target)]);
    }
    const auto ngen = static_cast<Eigen::Index>(images.size());
    // H^0: common fixed vectors
    MatrixQ stacked = zeros<Rational>(n * ngen, n);
    for (Eigen::Index g = 0; g < ngen; ++g)
      stacked.block(g * n, 0, n, n) = images[static_cast<std::size_t>(g)] - ops.one();
    const MatrixQ h0 = linalg::nullspace(stacked);
    h0_parts.push_back(h0);
    h0_dim += h0.cols();
    // H^1: Fox derivatives of the relators cut out the crossed homomorphisms
    MatrixQ fox = zeros<Rational>(n * static_cast<Eigen::Index>(p.relators.size()), n * ngen);
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
      MatrixQ prefix = ops.one();
      for (int l : p.relators[r]) {
        const auto g = static_cast<Eigen::Index>(std::abs(l) - 1);
        const MatrixQ& x = images[static_cast<std::size_t>(g)];
        if (l > 0) {
          set_block(fox, static_cast<Eigen::Index>(r) * n, g * n, prefix, Rational(1));
          prefix = prefix * x;
        } else {
          const MatrixQ xinv = ops.inv(x);
          set_block(fox, static_cast<Eigen::Index>(r) * n, g * n, MatrixQ(prefix * xinv), Rational(-1));
          prefix = prefix * xinv;
        }
      }
    }
    const MatrixQ z1 = linalg::nullspace(fox);
    const MatrixQ b1 = linalg::column_basis(stacked);
    const MatrixQ h1 = linalg::complement(b1, z1);
    h1_parts.push_back(h1);
    h1_dim += h1.cols();
  }
  auto assemble = [](const std::vector<MatrixQ>& parts) {
    Eigen::Index rows = 0, cols = 0;
    for (const auto& m : parts) {
      rows += m.rows();
      cols += m.cols();
    }
    MatrixQ out = zeros<Rational>(rows, cols);
    Eigen::Index r = 0, c = 0;
    for (const auto& m : parts) {
      if (m.size() > 0) out.block(r, c, m.rows(), m.cols()) = m;
      r += m.rows();
      c += m.cols();
    }
    return out;
  };
  CohomologyDegree h0;
  h0.degree = 0;
  h0.cocycles = assemble(h0_parts);
  h0.dimension = h0_dim;
  out.degrees.push_back(std::move(h0));
  if (max_degree >= 1) {
    CohomologyDegree h1;
    h1.degree = 1;
    h1.cocycles = assemble(h1_parts);
    h1.dimension = h1_dim;
    h1.note = "crossed homomorphisms on the edge-path presentation";
    out.degrees.push_back(std::move(h1));
  }
  for (int j = 2; j <= max_degree; ++j) {
    CohomologyDegree h;
    h.degree = j;
    h.computed = false;
    h.note = "not computed: component groups are nontrivial";
    out.degrees.push_back(std::move(h));
  }
  return out;
}

}  // namespace

LocalSystemReport check_local_system(const SimplicialSpace& space, const LocalSystem& system) {
  if (const auto* f = std::get_if<FiniteLocalSystem>(&system)) return check_impl(space, FiniteOps{*f}, *f);
  const auto& m = std::get<MatrixLocalSystem>(system);
  if (m.dimension < 0) throw Error(ErrorKind::StructureMismatch, "negative matrix dimension");
  return check_impl(space, MatrixOps{m}, m);
}

int triangle_monodromy(const SimplicialSpace& space, const FiniteLocalSystem& system, int simplex) {
  if (!space.component(2, simplex).nondegenerate) return system.group.identity();
  return monodromy(FiniteOps{system}, system, space, simplex);
}

MatrixQ triangle_monodromy(const SimplicialSpace& space, const MatrixLocalSystem& system, int simplex) {
  MatrixOps ops{system};
  if (!space.component(2, simplex).nondegenerate) return ops.one();
  return monodromy(ops, system, space, simplex);
}

CohomologyResult cohomology(const SimplicialSpace& space, const MatrixLocalSystem& system, int max_degree) {
  if (max_degree < 0 || max_degree > 2)
    throw Error(ErrorKind::UnsupportedDegree,
                "degree " + std::to_string(max_degree) + " requested; levels are stored up to 3 so degrees 0..2 are available");
  const auto report = check_local_system(space, system);
  if (!report.ok)
    throw Error(ErrorKind::ValidationFailed, "local system fails validation: " + report.failures.front());
  if (all_groups_trivial(space)) return cochain_model(space, system, max_degree);
  return presentation_model(space, system, max_degree);
}

MatrixLocalSystem trivial_matrix_system(const SimplicialSpace& space, int dimension) {
  MatrixLocalSystem s;
  s.dimension = dimension;
  for (const auto& v : space.level(0))
    if (!v.group.generators.empty())
      s.representation[v.id] = std::vector<MatrixQ>(v.group.generators.size(), identity<Rational>(dimension));
  for (int e : space.nondegenerate(1)) s.transport[space.component(1, e).id] = identity<Rational>(dimension);
  return s;
}

FiniteLocalSystem trivial_finite_system(const SimplicialSpace& space, const FiniteGroup& group) {
  FiniteLocalSystem s;
  s.group = group;
  for (const auto& v : space.level(0))
    if (!v.group.generators.empty())
      s.representation[v.id] = std::vector<int>(v.group.generators.size(), group.identity());
  for (int e : space.nondegenerate(1)) s.transport[space.component(1, e).id] = group.identity();
  return s;
}

CosimplicialVectorSpace cochain_cosimplicial(const SimplicialSpace& space, const MatrixLocalSystem& system) {
  MatrixOps ops{system};
  const Eigen::Index n = system.dimension;
  CosimplicialVectorSpace out;
  for (int k = 0; k <= kTopLevel; ++k) out.dims.push_back(n * static_cast<Eigen::Index>(space.level(k).size()));
  for (int k = 0; k < kTopLevel; ++k) {
    std::vector<MatrixQ> maps;
    for (int a = 0; a <= k + 1; ++a) {
      MatrixQ m = zeros<Rational>(out.dims[static_cast<std::size_t>(k + 1)], out.dims[static_cast<std::size_t>(k)]);
      for (std::size_t c = 0; c < space.level(k + 1).size(); ++c) {
        const auto& comp = space.component(k + 1, static_cast<int>(c));
        const int t = comp.faces[static_cast<std::size_t>(a)].target;
        const MatrixQ block =
            a == 0 ? transport_of(ops, system, space, space.edge(k + 1, static_cast<int>(c), 0, 1)) : ops.one();
        set_block(m, static_cast<Eigen::Index>(c) * n, static_cast<Eigen::Index>(t) * n, block, Rational(1));
      }
      maps.push_back(std::move(m));
    }
    out.cofaces.push_back(std::move(maps));
  }
  return out;
}

}  // namespace stackypi1

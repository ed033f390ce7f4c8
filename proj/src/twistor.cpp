#include "stackypi1/twistor.hpp"

#include "stackypi1/error.hpp"
#include "stackypi1/linalg.hpp"

namespace stackypi1 {

using linalg::column_basis;
using linalg::contains;
using linalg::image;
using linalg::intersect;
using linalg::span_sum;

std::string to_string(MixedKind k) {
  switch (k) {
    case MixedKind::DMixed: return "D-mixed";
    case MixedKind::BMixed: return "B-mixed";
    case MixedKind::Neither: return "neither";
  }
  return "neither";
}

Classification classify_mtc(const FilteredComplex& fc) {
  Classification out;
  out.d_mixed = out.b_mixed = true;
  const PageReport e1 = page(fc, 1);
  for (const auto& cell : e1.cells) {
    auto it = fc.slopes().find({cell.weight, cell.degree});
    if (it == fc.slopes().end())
      throw Error(ErrorKind::MissingSlopeTag, "no slope tag for nonzero graded cohomology H^" +
                                                  std::to_string(cell.degree) + "(Gr_" + std::to_string(cell.weight) +
                                                  ")",
                  "(" + std::to_string(cell.weight) + "," + std::to_string(cell.degree) + ")");
    SlopeCell sc{cell.weight, cell.degree, cell.dimension, it->second};
    if (sc.slope != sc.weight + sc.degree && out.d_mixed) {
      out.d_mixed = false;
      out.d_offender = sc;
    }
    if (sc.slope != sc.weight && out.b_mixed) {
      out.b_mixed = false;
      out.b_offender = sc;
    }
    out.cells.push_back(sc);
  }
  out.kind = out.d_mixed ? MixedKind::DMixed : out.b_mixed ? MixedKind::BMixed : MixedKind::Neither;
  return out;
}

DegenerationCertificate check_degeneration(const FilteredComplex& fc, int from_page) {
  DegenerationCertificate cert;
  cert.from_page = from_page;
  try {
    cert.classified = classify_mtc(fc).kind;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::MissingSlopeTag) throw;
  }
  cert.checked_through = from_page;
  for (int r = from_page; r < bound_page(fc); ++r) {
    cert.checked_through = r;
    PageReport p = page(fc, r);
    for (auto& d : p.differentials)
      if (!d.zero) {
        cert.passed = false;
        cert.first_nonzero = std::move(d);
        return cert;
      }
  }
  return cert;
}

DegenerationCertificate check_degeneration(const FilteredComplex& fc, MixedKind kind) {
  return check_degeneration(fc, kind == MixedKind::BMixed ? 1 : 2);
}

FilteredComplex d2_witness() {
  RawFilteredComplex raw;
  raw.dims = {1, 1};
  raw.differentials = {MatrixQ::Constant(1, 1, Rational(1))};
  raw.min_weight = 0;
  raw.max_weight = 2;
  raw.filtration = {{{2, MatrixQ::Constant(1, 1, Rational(1))}}, {{0, MatrixQ::Constant(1, 1, Rational(1))}}};
  return build_filtered_complex(raw);
}

FilteredComplex harmonic_complex(const std::vector<Eigen::Index>& dims, const std::vector<MatrixQ>& d, int w) {
  std::vector<std::vector<MatrixQ>> W;
  std::map<Cell, int> tags;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    W.push_back({identity<Rational>(dims[i])});
    tags[{w, static_cast<int>(i)}] = w + static_cast<int>(i);
  }
  return assemble_filtered_complex(0, dims, d, w, w, std::move(W), std::move(tags));
}

// ---- mixed twistor structures -----------------------------------------------------

MatrixQ MixedTwistorStructure::W(int m) const {
  if (m < min_weight) return zeros<Rational>(dimension, 0);
  if (m >= max_weight) return identity<Rational>(dimension);
  return steps[static_cast<std::size_t>(m - min_weight)];
}

std::map<int, Eigen::Index> MixedTwistorStructure::graded() const {
  std::map<int, Eigen::Index> out;
  for (int m = min_weight; m <= max_weight; ++m) {
    const auto g = W(m).cols() - W(m - 1).cols();
    if (g > 0) out[m] = g;
  }
  return out;
}

MixedTwistorStructure make_mts(Eigen::Index dimension, int min_weight, int max_weight, std::vector<MatrixQ> steps,
                               std::map<int, int> slopes) {
  MixedTwistorStructure s;
  s.dimension = dimension;
  s.min_weight = min_weight;
  s.max_weight = max_weight;
  if (min_weight > max_weight || steps.size() != static_cast<std::size_t>(max_weight - min_weight + 1))
    throw Error(ErrorKind::ValidationFailed, "twistor structure needs one step per weight in its range");
  for (auto& st : steps) {
    if (st.rows() != dimension) throw Error(ErrorKind::ValidationFailed, "filtration step has the wrong length");
    st = column_basis(st);
  }
  s.steps = std::move(steps);
  for (int m = min_weight + 1; m <= max_weight; ++m)
    if (!contains(s.steps[static_cast<std::size_t>(m - min_weight)], s.steps[static_cast<std::size_t>(m - min_weight - 1)]))
      throw Error(ErrorKind::ValidationFailed, "twistor filtration not increasing at weight " + std::to_string(m));
  if (s.steps.back().cols() != dimension)
    throw Error(ErrorKind::ValidationFailed, "twistor filtration not exhaustive");
  for (const auto& [m, g] : s.graded()) {
    auto it = slopes.find(m);
    if (it == slopes.end())
      throw Error(ErrorKind::ValidationFailed, "graded piece of weight " + std::to_string(m) + " has no slope label");
    if (it->second != m)
      throw Error(ErrorKind::ValidationFailed, "graded piece of weight " + std::to_string(m) + " has slope " +
                                                   std::to_string(it->second) + " (not pure)");
    s.slopes[m] = it->second;
  }
  return s;
}

MorphismReport mts_morphism_check(const MatrixQ& f, const MixedTwistorStructure& source,
                                  const MixedTwistorStructure& target) {
  if (f.rows() != target.dimension || f.cols() != source.dimension)
    throw Error(ErrorKind::InvalidArgument, "morphism matrix has the wrong shape");
  MorphismReport rep;
  const int lo = std::min(source.min_weight, target.min_weight);
  const int hi = std::max(source.max_weight, target.max_weight);
  for (int m = lo; m <= hi; ++m)
    if (!contains(target.W(m), image(f, source.W(m))))
      throw Error(ErrorKind::NotFiltered, "f(W_" + std::to_string(m) + ") is not contained in W'_" + std::to_string(m));
  const Eigen::Index r = linalg::rank(f);
  rep.injective = r == source.dimension;
  rep.surjective = r == target.dimension;
  const MatrixQ fV = image(f, identity<Rational>(source.dimension));
  rep.strict = true;
  bool all_inj = true, all_surj = true;
  for (int m = lo; m <= hi; ++m) {
    const MatrixQ fW = image(f, source.W(m));
    if (intersect(fV, target.W(m)).cols() != fW.cols()) rep.strict = false;
    GradedMapReport g;
    g.weight = m;
    g.source_dim = source.W(m).cols() - source.W(m - 1).cols();
    g.target_dim = target.W(m).cols() - target.W(m - 1).cols();
    const MatrixQ lower = target.W(m - 1);
    g.rank = span_sum(fW, lower).cols() - lower.cols();
    g.injective = g.rank == g.source_dim;
    g.surjective = g.rank == g.target_dim;
    all_inj = all_inj && g.injective;
    all_surj = all_surj && g.surjective;
    if (g.source_dim > 0 || g.target_dim > 0) rep.graded.push_back(g);
  }
  rep.consequence_holds = (!rep.injective || all_inj) && (!rep.surjective || all_surj);
  return rep;
}

// ---- cosimplicial totalization ------------------------------------------------------

FilteredComplex cosimplicial_total(const CosimplicialFilteredComplex& c) {
  const auto& L = c.levels;
  if (L.empty()) throw Error(ErrorKind::IncompatibleFaces, "cosimplicial object has no levels");
  const int K = static_cast<int>(L.size()) - 1;
  const int i0 = L[0].min_degree(), i1 = L[0].max_degree();
  for (int k = 0; k <= K; ++k) {
    if (L[static_cast<std::size_t>(k)].min_degree() != i0 || L[static_cast<std::size_t>(k)].max_degree() != i1)
      throw Error(ErrorKind::IncompatibleFaces, "level " + std::to_string(k) + " has a different degree range");
    const Classification cl = classify_mtc(L[static_cast<std::size_t>(k)]);
    if (!cl.d_mixed)
      throw Error(ErrorKind::LevelNotDMixed,
                  "level " + std::to_string(k) + " is not D-mixed at (" + std::to_string(cl.d_offender->weight) + "," +
                      std::to_string(cl.d_offender->degree) + ") with slope " + std::to_string(cl.d_offender->slope));
  }
  if (c.cofaces.size() != static_cast<std::size_t>(K))
    throw Error(ErrorKind::IncompatibleFaces, "expected coface maps for " + std::to_string(K) + " level transitions");
  auto delta = [&](int k, int a, int i) -> const MatrixQ& {
    return c.cofaces[static_cast<std::size_t>(k)][static_cast<std::size_t>(a)][static_cast<std::size_t>(i - i0)];
  };
  for (int k = 0; k < K; ++k) {
    const auto& G = L[static_cast<std::size_t>(k)];
    const auto& H = L[static_cast<std::size_t>(k + 1)];
    if (c.cofaces[static_cast<std::size_t>(k)].size() != static_cast<std::size_t>(k + 2))
      throw Error(ErrorKind::IncompatibleFaces, "level " + std::to_string(k) + " needs " + std::to_string(k + 2) +
                                                    " coface maps");
    for (int a = 0; a < k + 2; ++a) {
      if (c.cofaces[static_cast<std::size_t>(k)][static_cast<std::size_t>(a)].size() != static_cast<std::size_t>(i1 - i0 + 1))
        throw Error(ErrorKind::IncompatibleFaces, "coface " + std::to_string(a) + " of level " + std::to_string(k) +
                                                      " has the wrong number of degrees");
      const std::string name = "coface " + std::to_string(a) + " of level " + std::to_string(k);
      for (int i = i0; i <= i1; ++i) {
        const MatrixQ& m = delta(k, a, i);
        if (m.rows() != H.dim(i) || m.cols() != G.dim(i))
          throw Error(ErrorKind::IncompatibleFaces, name + " has the wrong shape in degree " + std::to_string(i));
        if (i < i1 && !is_zero(MatrixQ(H.d(i) * m - delta(k, a, i + 1) * G.d(i))))
          throw Error(ErrorKind::IncompatibleFaces, name + " does not commute with d in degree " + std::to_string(i));
        for (int w = G.min_weight(); w <= G.max_weight(); ++w)
          if (!contains(H.W(i, w), image(m, G.W(i, w))))
            throw Error(ErrorKind::IncompatibleFaces, name + " does not preserve W_" + std::to_string(w) +
                                                          " in degree " + std::to_string(i));
      }
    }
  }
  // cosimplicial identities delta^b delta^a = delta^a delta^{b-1}, a < b
  for (int k = 0; k + 1 < K; ++k)
    for (int b = 1; b < k + 3; ++b)
      for (int a = 0; a < b; ++a)
        for (int i = i0; i <= i1; ++i)
          if (!is_zero(MatrixQ(delta(k + 1, b, i) * delta(k, a, i) - delta(k + 1, a, i) * delta(k, b - 1, i))))
            throw Error(ErrorKind::IncompatibleFaces, "cosimplicial identity fails for cofaces " + std::to_string(a) +
                                                          "," + std::to_string(b) + " at level " + std::to_string(k));

  const int jmin = i0, jmax = i1 + K;
  std::vector<std::map<int, Eigen::Index>> offset(static_cast<std::size_t>(jmax - jmin + 1));
  std::vector<Eigen::Index> dims(offset.size(), 0);
  for (int j = jmin; j <= jmax; ++j)
    for (int k = 0; k <= K; ++k) {
      const int i = j - k;
      if (i < i0 || i > i1) continue;
      offset[static_cast<std::size_t>(j - jmin)][k] = dims[static_cast<std::size_t>(j - jmin)];
      dims[static_cast<std::size_t>(j - jmin)] += L[static_cast<std::size_t>(k)].dim(i);
    }
  std::vector<MatrixQ> ds;
  for (int j = jmin; j < jmax; ++j) {
    const auto& src = offset[static_cast<std::size_t>(j - jmin)];
    const auto& tgt = offset[static_cast<std::size_t>(j + 1 - jmin)];
    MatrixQ D = zeros<Rational>(dims[static_cast<std::size_t>(j + 1 - jmin)], dims[static_cast<std::size_t>(j - jmin)]);
    for (const auto& [k, off] : src) {
      const int i = j - k;
      const auto& G = L[static_cast<std::size_t>(k)];
      if (G.dim(i) == 0) continue;
      if (auto it = tgt.find(k); it != tgt.end() && G.dim(i + 1) > 0) {
        MatrixQ block = G.d(i);
        if (k % 2 != 0) block = -block;
        D.block(it->second, off, G.dim(i + 1), G.dim(i)) = block;
      }
      if (auto it = tgt.find(k + 1); it != tgt.end() && k < K) {
        const auto& H = L[static_cast<std::size_t>(k + 1)];
        if (H.dim(i) == 0) continue;
        MatrixQ sum = zeros<Rational>(H.dim(i), G.dim(i));
        for (int a = 0; a < k + 2; ++a) {
          if (a % 2 == 0) sum += delta(k, a, i);
          else sum -= delta(k, a, i);
        }
        D.block(it->second, off, H.dim(i), G.dim(i)) = sum;
      }
    }
    ds.push_back(std::move(D));
  }
  int lo = L[0].min_weight(), hi = L[0].max_weight();
  for (int k = 0; k <= K; ++k) {
    lo = std::min(lo, L[static_cast<std::size_t>(k)].min_weight() - k);
    hi = std::max(hi, L[static_cast<std::size_t>(k)].max_weight() - k);
  }
  std::vector<std::vector<MatrixQ>> W;
  for (int j = jmin; j <= jmax; ++j) {
    const auto& o = offset[static_cast<std::size_t>(j - jmin)];
    const Eigen::Index N = dims[static_cast<std::size_t>(j - jmin)];
    std::vector<MatrixQ> steps;
    for (int m = lo; m <= hi; ++m) {
      MatrixQ span = zeros<Rational>(N, 0);
      for (const auto& [k, off] : o) {
        const MatrixQ piece = L[static_cast<std::size_t>(k)].W(j - k, m + k);
        if (piece.cols() == 0) continue;
        MatrixQ embedded = zeros<Rational>(N, piece.cols());
        embedded.block(off, 0, piece.rows(), piece.cols()) = piece;
        span = linalg::hcat(span, embedded);
      }
      steps.push_back(span);
    }
    W.push_back(std::move(steps));
  }
  // tags: cell (m, j) of the total inherits the tag of any contributing level
  // cell (m + k, j - k) with nonzero graded cohomology
  std::map<Cell, int> tags;
  for (int k = 0; k <= K; ++k) {
    const auto& G = L[static_cast<std::size_t>(k)];
    for (const auto& cell : page(G, 1).cells) {
      const Cell key{cell.weight - k, cell.degree + k};
      const int s = G.slopes().at({cell.weight, cell.degree});
      auto [it, fresh] = tags.emplace(key, s);
      if (!fresh && it->second != s)
        throw Error(ErrorKind::IncompatibleFaces, "levels disagree on the slope of total cell (" +
                                                      std::to_string(key.first) + "," + std::to_string(key.second) + ")");
    }
  }
  FilteredComplex tot =
      assemble_filtered_complex(jmin, std::move(dims), std::move(ds), lo, hi, std::move(W), std::move(tags));
  if (!classify_mtc(tot).d_mixed)
    throw Error(ErrorKind::ValidationFailed, "total complex does not classify as D-mixed");
  return tot;
}

CosimplicialFilteredComplex discrete_levels(const CosimplicialVectorSpace& v, int w) {
  CosimplicialFilteredComplex c;
  for (auto n : v.dims) {
    std::vector<std::vector<MatrixQ>> W{{identity<Rational>(n)}};
    c.levels.push_back(assemble_filtered_complex(0, {n}, {}, w, w, std::move(W), {{{w, 0}, w}}));
  }
  for (const auto& per_level : v.cofaces) {
    std::vector<std::vector<MatrixQ>> faces;
    for (const auto& m : per_level) faces.push_back({m});
    c.cofaces.push_back(std::move(faces));
  }
  c.cofaces.resize(c.levels.empty() ? 0 : c.levels.size() - 1);
  return c;
}

WeightFiltrationResult weight_filtration_cohomology(const SimplicialSpace& space, const MatrixLocalSystem& system,
                                                    int w) {
  WeightFiltrationResult out;
  out.total = cosimplicial_total(discrete_levels(cochain_cosimplicial(space, system), w));
  auto induced = induced_filtration(out.total);
  for (auto& h : induced) {
    if (h.degree > 2) continue;
    const int j = h.degree;
    std::map<int, int> slopes;
    for (const auto& [m, g] : h.graded) {
      auto it = out.total.slopes().find({m, j});
      if (it != out.total.slopes().end()) slopes[m + j] = it->second;
    }
    out.structures.push_back(make_mts(h.dimension, h.min_weight + j, h.max_weight + j, h.steps, slopes));
    out.induced.push_back(std::move(h));
  }
  return out;
}

}  // namespace stackypi1

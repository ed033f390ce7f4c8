#include "stackypi1/spectral.hpp"

#include <algorithm>
#include <string>

#include "stackypi1/error.hpp"
#include "stackypi1/linalg.hpp"
#include "stackypi1/parallel.hpp"

namespace stackypi1 {

using linalg::column_basis;
using linalg::complement;
using linalg::hcat;
using linalg::image;
using linalg::intersect;
using linalg::preimage;
using linalg::span_sum;

namespace {

// Z_r(m, n) = { x in W_m F^n : dx in W_{m-r} }
MatrixQ cycles(const FilteredComplex& fc, int r, int m, int n) {
  return preimage(fc.d(n), fc.W(n, m), fc.W(n + 1, m - r));
}

// B_s(m, n) = d(W_{m+s} F^{n-1}) ∩ W_m F^n
MatrixQ boundaries(const FilteredComplex& fc, int s, int m, int n) {
  return intersect(image(fc.d(n - 1), fc.W(n - 1, m + s)), fc.W(n, m));
}

struct CellData {
  MatrixQ denominator;   // basis of Z_{r-1}(m-1) + B_{r-1}(m)
  MatrixQ reps;          // complement inside Z_r(m)
};

CellData cell_data(const FilteredComplex& fc, int r, int m, int n) {
  CellData c;
  const MatrixQ num = cycles(fc, r, m, n);
  c.denominator = span_sum(cycles(fc, r - 1, m - 1, n), boundaries(fc, r - 1, m, n));
  c.reps = complement(c.denominator, num);
  return c;
}

PageCell make_cell(int m, int n, Eigen::Index dim) {
  return PageCell{m, n, -m, n + m, dim};
}

PageReport page_without_stability(const FilteredComplex& fc, int r, int threads) {
  if (r < 0) throw Error(ErrorKind::InvalidArgument, "page index must be nonnegative");
  PageReport rep;
  rep.r = r;
  const int lo = fc.min_weight(), hi = fc.max_weight();
  const int nw = hi - lo + 1;
  const int nd = fc.num_degrees();
  std::vector<CellData> data(static_cast<std::size_t>(nw * nd));
  parallel_for(data.size(), threads, [&](std::size_t idx) {
    const int m = lo + static_cast<int>(idx) % nw;
    const int n = fc.min_degree() + static_cast<int>(idx) / nw;
    data[idx] = cell_data(fc, r, m, n);
  });
  auto at = [&](int m, int n) -> const CellData* {
    if (m < lo || m > hi || n < fc.min_degree() || n > fc.max_degree()) return nullptr;
    return &data[static_cast<std::size_t>((n - fc.min_degree()) * nw + (m - lo))];
  };
  for (int n = fc.min_degree(); n <= fc.max_degree(); ++n)
    for (int m = lo; m <= hi; ++m) {
      const auto dim = at(m, n)->reps.cols();
      if (dim == 0) continue;
      rep.cells.push_back(make_cell(m, n, dim));
      rep.total_by_degree[n] += dim;
    }
  for (const auto& cell : rep.cells) {
    const CellData* src = at(cell.weight, cell.degree);
    const CellData* tgt = at(cell.weight - r, cell.degree + 1);
    if (tgt == nullptr || tgt->reps.cols() == 0) continue;
    PageDifferential diff;
    diff.source = cell;
    diff.target = make_cell(cell.weight - r, cell.degree + 1, tgt->reps.cols());
    const MatrixQ basis = hcat(tgt->denominator, tgt->reps);
    const MatrixQ dx = fc.d(cell.degree) * src->reps;
    diff.matrix = MatrixQ(tgt->reps.cols(), src->reps.cols());
    for (Eigen::Index j = 0; j < dx.cols(); ++j) {
      const VectorQ c = linalg::coordinates<Rational>(basis, VectorQ(dx.col(j)));
      diff.matrix.col(j) = c.tail(tgt->reps.cols());
    }
    diff.zero = is_zero(diff.matrix);
    if (!diff.zero) rep.all_differentials_zero = false;
    rep.differentials.push_back(std::move(diff));
  }
  return rep;
}

MatrixQ kron(const MatrixQ& a, const MatrixQ& b) {
  MatrixQ out = zeros<Rational>(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  return out;
}

}  // namespace

int bound_page(const FilteredComplex& fc) { return fc.max_weight() - fc.min_weight() + 1; }

PageReport page(const FilteredComplex& fc, int r, int threads) {
  PageReport rep = page_without_stability(fc, r, threads);
  rep.stable = rep.all_differentials_zero;
  for (int s = r + 1; rep.stable && s < bound_page(fc); ++s)
    rep.stable = page_without_stability(fc, s, threads).all_differentials_zero;
  return rep;
}

std::vector<PageReport> pages(const FilteredComplex& fc, int threads) {
  std::vector<PageReport> out;
  for (int r = 0; r <= bound_page(fc); ++r) out.push_back(page_without_stability(fc, r, threads));
  bool stable = true;
  for (auto it = out.rbegin(); it != out.rend(); ++it) {
    stable = stable && it->all_differentials_zero;
    it->stable = stable;
  }
  // trim to the first stable page
  std::size_t first = out.size() - 1;
  while (first > 0 && out[first - 1].stable) --first;
  out.resize(first + 1);
  return out;
}

Eigen::Index page_dimension(const FilteredComplex& fc, int r, int m, int n) {
  if (n < fc.min_degree() || n > fc.max_degree()) return 0;
  if (m < fc.min_weight() || m > fc.max_weight()) return 0;
  return cell_data(fc, r, m, n).reps.cols();
}

std::map<int, Eigen::Index> cohomology_dimensions(const FilteredComplex& fc) {
  std::map<int, Eigen::Index> out;
  for (int n = fc.min_degree(); n <= fc.max_degree(); ++n)
    out[n] = fc.dim(n) - linalg::rank(fc.d(n)) - linalg::rank(fc.d(n - 1));
  return out;
}

FilteredComplex dec(const FilteredComplex& fc) {
  const int lo = fc.min_weight() + fc.min_degree();
  const int hi = fc.max_weight() + fc.max_degree() + 1;
  std::vector<Eigen::Index> dims;
  std::vector<MatrixQ> ds;
  std::vector<std::vector<MatrixQ>> W;
  for (int i = fc.min_degree(); i <= fc.max_degree(); ++i) {
    dims.push_back(fc.dim(i));
    if (i < fc.max_degree()) ds.push_back(fc.d(i));
    std::vector<MatrixQ> steps;
    for (int m = lo; m <= hi; ++m) steps.push_back(preimage(fc.d(i), fc.W(i, m - i), fc.W(i + 1, m - i - 1)));
    W.push_back(std::move(steps));
  }
  std::map<Cell, int> tags;
  for (int n = fc.min_degree(); n <= fc.max_degree(); ++n)
    for (int m = lo; m <= hi; ++m) {
      auto it = fc.slopes().find({m - n, n});
      if (it != fc.slopes().end()) tags[{m, n}] = it->second;
    }
  return assemble_filtered_complex(fc.min_degree(), std::move(dims), std::move(ds), lo, hi, std::move(W),
                                   std::move(tags));
}

std::vector<FilteredCohomology> induced_filtration(const FilteredComplex& fc) {
  std::vector<FilteredCohomology> out;
  for (int n = fc.min_degree(); n <= fc.max_degree(); ++n) {
    FilteredCohomology h;
    h.degree = n;
    const MatrixQ Z = linalg::nullspace(fc.d(n));
    const MatrixQ B = image(fc.d(n - 1), identity<Rational>(fc.dim(n - 1)));
    h.representatives = complement(B, Z);
    h.dimension = h.representatives.cols();
    h.min_weight = fc.min_weight();
    h.max_weight = fc.max_weight();
    const MatrixQ basis = hcat(B, h.representatives);
    Eigen::Index previous = 0;
    for (int m = h.min_weight; m <= h.max_weight; ++m) {
      const MatrixQ S = span_sum(intersect(Z, fc.W(n, m)), B);
      MatrixQ coords(h.dimension, S.cols());
      for (Eigen::Index j = 0; j < S.cols(); ++j)
        coords.col(j) = linalg::coordinates<Rational>(basis, VectorQ(S.col(j))).tail(h.dimension);
      MatrixQ step = column_basis(coords);
      if (step.cols() > previous) h.graded[m] = step.cols() - previous;
      previous = step.cols();
      h.steps.push_back(std::move(step));
    }
    out.push_back(std::move(h));
  }
  return out;
}

FilteredComplex tensor_product(const FilteredComplex& a, const FilteredComplex& b) {
  const int dmin = a.min_degree() + b.min_degree();
  const int dmax = a.max_degree() + b.max_degree();
  const int lo = a.min_weight() + b.min_weight();
  const int hi = a.max_weight() + b.max_weight();
  // block offsets: degree n -> list of (p, offset)
  std::vector<std::map<int, Eigen::Index>> offset(static_cast<std::size_t>(dmax - dmin + 1));
  std::vector<Eigen::Index> dims(offset.size(), 0);
  for (int n = dmin; n <= dmax; ++n) {
    auto& o = offset[static_cast<std::size_t>(n - dmin)];
    Eigen::Index total = 0;
    for (int p = a.min_degree(); p <= a.max_degree(); ++p) {
      const int q = n - p;
      if (q < b.min_degree() || q > b.max_degree()) continue;
      o[p] = total;
      total += a.dim(p) * b.dim(q);
    }
    dims[static_cast<std::size_t>(n - dmin)] = total;
  }
  std::vector<MatrixQ> ds;
  for (int n = dmin; n < dmax; ++n) {
    const auto& src = offset[static_cast<std::size_t>(n - dmin)];
    const auto& tgt = offset[static_cast<std::size_t>(n + 1 - dmin)];
    MatrixQ D = zeros<Rational>(dims[static_cast<std::size_t>(n + 1 - dmin)], dims[static_cast<std::size_t>(n - dmin)]);
    for (const auto& [p, off] : src) {
      const int q = n - p;
      const Eigen::Index rows_here = a.dim(p) * b.dim(q);
      if (rows_here == 0) continue;
      if (auto it = tgt.find(p + 1); it != tgt.end() && a.dim(p + 1) * b.dim(q) > 0)
        D.block(it->second, off, a.dim(p + 1) * b.dim(q), rows_here) = kron(a.d(p), identity<Rational>(b.dim(q)));
      if (auto it = tgt.find(p); it != tgt.end() && a.dim(p) * b.dim(q + 1) > 0) {
        MatrixQ block = kron(identity<Rational>(a.dim(p)), b.d(q));
        if (p % 2 != 0) block = -block;
        D.block(it->second, off, a.dim(p) * b.dim(q + 1), rows_here) = block;
      }
    }
    ds.push_back(std::move(D));
  }
  std::vector<std::vector<MatrixQ>> W;
  for (int n = dmin; n <= dmax; ++n) {
    const auto& o = offset[static_cast<std::size_t>(n - dmin)];
    const Eigen::Index N = dims[static_cast<std::size_t>(n - dmin)];
    std::vector<MatrixQ> steps;
    for (int m = lo; m <= hi; ++m) {
      MatrixQ span = zeros<Rational>(N, 0);
      for (const auto& [p, off] : o) {
        const int q = n - p;
        const Eigen::Index block = a.dim(p) * b.dim(q);
        if (block == 0) continue;
        for (int wa = a.min_weight(); wa <= a.max_weight(); ++wa) {
          const MatrixQ piece = kron(a.W(p, wa), b.W(q, m - wa));
          if (piece.cols() == 0) continue;
          MatrixQ embedded = zeros<Rational>(N, piece.cols());
          embedded.block(off, 0, block, piece.cols()) = piece;
          span = hcat(span, embedded);
        }
      }
      steps.push_back(column_basis(span));
    }
    W.push_back(std::move(steps));
  }
  return assemble_filtered_complex(dmin, std::move(dims), std::move(ds), lo, hi, std::move(W));
}

DecComparison compare_dec_pages(const FilteredComplex& fc) {
  DecComparison out;
  const FilteredComplex D = dec(fc);
  for (int n = D.min_degree(); n <= D.max_degree(); ++n)
    for (int m = D.min_weight(); m <= D.max_weight(); ++m) {
      const auto lhs = page_dimension(D, 1, m, n);
      const auto rhs = page_dimension(fc, 2, m - n, n);
      if (lhs != rhs) {
        out.ok = false;
        out.mismatches.emplace_back(make_cell(m, n, lhs), rhs);
      }
    }
  return out;
}

AcyclicityReport check_u_acyclic(const FilteredComplex& fc) {
  AcyclicityReport rep;
  const FilteredComplex D = dec(fc);
  const int n0 = fc.min_degree(), n1 = fc.max_degree();
  for (int m = D.min_weight(); m <= D.max_weight(); ++m) {
    std::map<int, MatrixQ> A, B;
    for (int n = n0 - 1; n <= n1 + 1; ++n) {
      const MatrixQ killed = span_sum(fc.W(n, m - n - 1), image(fc.d(n - 1), fc.W(n - 1, m - n)));
      A[n] = intersect(D.W(n, m), killed);
      B[n] = D.W(n, m - 1);
      if (!linalg::contains(A[n], B[n])) {
        rep.well_defined = false;
        rep.failures.push_back("U at weight " + std::to_string(m) + ", degree " + std::to_string(n) +
                               ": W^B_{m-1} not contained in the kernel");
      }
    }
    std::map<int, Eigen::Index> rank;
    for (int n = n0 - 1; n <= n1; ++n) {
      const MatrixQ img = image(fc.d(n), A[n]);
      if (!linalg::contains(A[n + 1], img)) {
        rep.well_defined = false;
        rep.failures.push_back("d does not preserve U at weight " + std::to_string(m) + ", degree " +
                               std::to_string(n));
      }
      rank[n] = span_sum(img, B[n + 1]).cols() - B[n + 1].cols();
    }
    for (int n = n0; n <= n1; ++n) {
      const Eigen::Index u = A[n].cols() - B[n].cols();
      rep.total_dimension += u;
      if (u != rank[n] + rank[n - 1]) {
        rep.acyclic = false;
        rep.failures.push_back("U not exact at weight " + std::to_string(m) + ", degree " + std::to_string(n) +
                               ": dim " + std::to_string(u) + ", ranks " + std::to_string(rank[n - 1]) + " and " +
                               std::to_string(rank[n]));
      }
      const Eigen::Index e0 = page_dimension(D, 0, m, n);
      const Eigen::Index e1 = page_dimension(fc, 1, m - n, n);
      if (e0 != u + e1) {
        rep.sequence_exact = false;
        rep.failures.push_back("dim E_0(dec) != dim U + dim E_1 at weight " + std::to_string(m) + ", degree " +
                               std::to_string(n));
      }
    }
  }
  return rep;
}

// ---- random instances ---------------------------------------------------------

namespace {

Rational small_nonzero(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> v(1, 3), s(0, 1);
  return Rational(s(rng) ? v(rng) : -v(rng));
}

// Product of random elementary operations, integral with integral inverse.
std::pair<MatrixQ, MatrixQ> random_unimodular(std::mt19937_64& rng, Eigen::Index n, int steps) {
  MatrixQ q = identity<Rational>(n), qi = identity<Rational>(n);
  if (n < 2) return {q, qi};
  std::uniform_int_distribution<Eigen::Index> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int s = 0; s < steps; ++s) {
    const Eigen::Index i = pick(rng), j = pick(rng);
    const int c = coef(rng);
    if (i == j || c == 0) continue;
    // row_i += c row_j on q; inverse gets col_j -= c col_i
    q.row(i) += Rational(c) * q.row(j);
    qi.col(j) -= Rational(c) * qi.col(i);
  }
  return {q, qi};
}

}  // namespace

FilteredComplex random_filtered_complex(std::mt19937_64& rng, const RandomComplexOptions& opt) {
  if (opt.degrees < 1 || opt.max_dim < 1 || opt.min_weight > opt.max_weight || opt.drops.empty())
    throw Error(ErrorKind::InvalidArgument, "bad random complex options");
  const int nd = opt.degrees;
  std::vector<std::vector<int>> weights(static_cast<std::size_t>(nd));
  struct Pair { int degree; std::size_t x, y; Rational c; };
  std::vector<Pair> arrows;
  std::uniform_int_distribution<int> deg(0, nd - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> target(nd, std::max(nd, nd * opt.max_dim * 2 / 3));
  const int wanted = target(rng);
  int total = 0;
  for (int attempt = 0; attempt < 20 * nd * opt.max_dim && total < wanted; ++attempt) {
    const int n = deg(rng);
    auto& wn = weights[static_cast<std::size_t>(n)];
    if (static_cast<int>(wn.size()) >= opt.max_dim) continue;
    if (unit(rng) < opt.singleton_rate || n + 1 >= nd) {
      wn.push_back(std::uniform_int_distribution<int>(opt.min_weight, opt.max_weight)(rng));
      ++total;
      continue;
    }
    auto& wn1 = weights[static_cast<std::size_t>(n + 1)];
    if (static_cast<int>(wn1.size()) >= opt.max_dim) continue;
    const int drop = opt.drops[std::uniform_int_distribution<std::size_t>(0, opt.drops.size() - 1)(rng)];
    if (opt.min_weight + drop > opt.max_weight) continue;
    const int m = std::uniform_int_distribution<int>(opt.min_weight + drop, opt.max_weight)(rng);
    wn.push_back(m);
    wn1.push_back(m - drop);
    arrows.push_back({n, wn.size() - 1, wn1.size() - 1, small_nonzero(rng)});
    total += 2;
  }
  // sort each degree by weight; remember positions
  std::vector<std::vector<std::size_t>> pos(static_cast<std::size_t>(nd));
  std::vector<std::vector<int>> sorted_weights(static_cast<std::size_t>(nd));
  for (int n = 0; n < nd; ++n) {
    const auto& w = weights[static_cast<std::size_t>(n)];
    std::vector<std::size_t> order(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });
    pos[static_cast<std::size_t>(n)].resize(w.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
      pos[static_cast<std::size_t>(n)][order[k]] = k;
      sorted_weights[static_cast<std::size_t>(n)].push_back(w[order[k]]);
    }
  }
  std::vector<Eigen::Index> dims;
  for (const auto& w : sorted_weights) dims.push_back(static_cast<Eigen::Index>(w.size()));
  std::vector<MatrixQ> d;
  for (int n = 0; n + 1 < nd; ++n) d.push_back(zeros<Rational>(dims[static_cast<std::size_t>(n + 1)], dims[static_cast<std::size_t>(n)]));
  for (const auto& a : arrows)
    d[static_cast<std::size_t>(a.degree)](static_cast<Eigen::Index>(pos[static_cast<std::size_t>(a.degree + 1)][a.y]),
                                          static_cast<Eigen::Index>(pos[static_cast<std::size_t>(a.degree)][a.x])) = a.c;
  // filtered automorphisms (unitriangular w.r.t. weight order) and scrambling
  std::vector<MatrixQ> P(static_cast<std::size_t>(nd)), Pi(static_cast<std::size_t>(nd));
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int n = 0; n < nd; ++n) {
    const auto& w = sorted_weights[static_cast<std::size_t>(n)];
    const Eigen::Index k = dims[static_cast<std::size_t>(n)];
    MatrixQ p = identity<Rational>(k);
    for (Eigen::Index i = 0; i < k; ++i)
      for (Eigen::Index j = i + 1; j < k; ++j)
        if (w[static_cast<std::size_t>(i)] <= w[static_cast<std::size_t>(j)]) p(i, j) = Rational(coef(rng));
    auto [q, qi] = opt.scramble ? random_unimodular(rng, k, static_cast<int>(3 * k)) : std::pair{identity<Rational>(k), identity<Rational>(k)};
    P[static_cast<std::size_t>(n)] = q * p;
    Pi[static_cast<std::size_t>(n)] = linalg::inverse<Rational>(p) * qi;
  }
  for (int n = 0; n + 1 < nd; ++n)
    d[static_cast<std::size_t>(n)] = P[static_cast<std::size_t>(n + 1)] * d[static_cast<std::size_t>(n)] * Pi[static_cast<std::size_t>(n)];
  std::vector<std::vector<MatrixQ>> W(static_cast<std::size_t>(nd));
  for (int n = 0; n < nd; ++n) {
    const auto& w = sorted_weights[static_cast<std::size_t>(n)];
    const Eigen::Index k = dims[static_cast<std::size_t>(n)];
    for (int m = opt.min_weight; m <= opt.max_weight; ++m) {
      Eigen::Index c = 0;
      while (c < k && w[static_cast<std::size_t>(c)] <= m) ++c;
      W[static_cast<std::size_t>(n)].push_back(MatrixQ(P[static_cast<std::size_t>(n)].leftCols(c)));
    }
  }
  return assemble_filtered_complex(0, std::move(dims), std::move(d), opt.min_weight, opt.max_weight, std::move(W));
}

void tag_all_cells(FilteredComplex& fc, bool deligne) {
  std::map<Cell, int> tags;
  for (int n = fc.min_degree(); n <= fc.max_degree(); ++n)
    for (int m = fc.min_weight(); m <= fc.max_weight(); ++m) tags[{m, n}] = deligne ? m + n : m;
  fc.set_slopes(std::move(tags));
}

FilteredComplex random_d_mixed(std::mt19937_64& rng, RandomComplexOptions opt) {
  opt.drops = {0, 1};
  FilteredComplex fc = random_filtered_complex(rng, opt);
  tag_all_cells(fc, true);
  return fc;
}

FilteredComplex random_b_mixed(std::mt19937_64& rng, RandomComplexOptions opt) {
  opt.drops = {0};
  FilteredComplex fc = random_filtered_complex(rng, opt);
  tag_all_cells(fc, false);
  return fc;
}

}  // namespace stackypi1

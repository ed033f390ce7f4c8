#include "stackypi1/parabolic.hpp"

#include "stackypi1/error.hpp"

namespace stackypi1 {

void check_well_formed(const ParabolicDescriptor& p) {
  if (p.rank < 0) throw Error(ErrorKind::InvalidArgument, "negative rank", "/rank");
  for (std::size_t i = 0; i < p.divisors.size(); ++i) {
    const auto& d = p.divisors[i];
    const std::string at = "/divisors/" + std::to_string(i);
    if (d.n < 1) throw Error(ErrorKind::InvalidArgument, "root multiplicity must be positive", at + "/n");
    int total = 0;
    for (std::size_t j = 0; j < d.pieces.size(); ++j) {
      const auto& w = d.pieces[j];
      const std::string pat = at + "/pieces/" + std::to_string(j);
      if (!(w.alpha > -1 && w.alpha <= 0))
        throw Error(ErrorKind::InvalidArgument, "weight " + to_string(w.alpha) + " outside (-1,0]", pat + "/alpha");
      if (w.multiplicity < 1) throw Error(ErrorKind::InvalidArgument, "multiplicity must be positive", pat + "/multiplicity");
      if (static_cast<int>(w.residues.size()) != w.multiplicity)
        throw Error(ErrorKind::InvalidArgument, "residue list length differs from the multiplicity", pat + "/residues");
      total += w.multiplicity;
    }
    if (total != p.rank)
      throw Error(ErrorKind::InvalidArgument,
                  "multiplicities sum to " + std::to_string(total) + ", rank is " + std::to_string(p.rank), at);
  }
}

TranslationResult parabolic_translate(const ParabolicDescriptor& p) {
  check_well_formed(p);
  TranslationResult out;
  RootStackDescriptor root{p.rank, p.degree, p.lambda, {}};
  for (std::size_t i = 0; i < p.divisors.size(); ++i) {
    const auto& d = p.divisors[i];
    RootStackDivisor rd{d.n, {}};
    for (std::size_t j = 0; j < d.pieces.size(); ++j) {
      const auto& w = d.pieces[j];
      const Rational scaled = -w.alpha * d.n;
      if (denominator(scaled) != 1)
        out.violations.push_back({i, j, -1, "weight " + to_string(w.alpha) + " not in (1/" + std::to_string(d.n) + ")Z"});
      const Rational expected = p.lambda * w.alpha;
      for (std::size_t k = 0; k < w.residues.size(); ++k)
        if (w.residues[k] != expected)
          out.violations.push_back({i, j, static_cast<int>(k),
                                    "residue eigenvalue " + to_string(w.residues[k]) + " on gr_" + to_string(w.alpha) +
                                        " differs from lambda*alpha = " + to_string(expected)});
      rd.pieces.push_back({static_cast<int>(numerator(scaled)), w.multiplicity, expected});
    }
    root.divisors.push_back(std::move(rd));
  }
  out.valid = out.violations.empty();
  if (out.valid) out.root = std::move(root);
  return out;
}

ParabolicDescriptor to_parabolic(const RootStackDescriptor& r) {
  ParabolicDescriptor p{r.rank, r.degree, r.lambda, {}};
  for (const auto& d : r.divisors) {
    ParabolicDivisor pd{d.n, {}};
    for (const auto& piece : d.pieces) {
      if (piece.character < 0 || piece.character >= d.n)
        throw Error(ErrorKind::InvalidArgument, "character outside 0..n-1");
      const Rational alpha = Rational(-piece.character, d.n);
      pd.pieces.push_back({alpha, piece.multiplicity,
                           std::vector<Rational>(static_cast<std::size_t>(piece.multiplicity), r.lambda * alpha)});
    }
    p.divisors.push_back(std::move(pd));
  }
  return p;
}

Rational parabolic_degree(const ParabolicDescriptor& p) {
  check_well_formed(p);
  Rational deg(p.degree);
  for (const auto& d : p.divisors)
    for (const auto& w : d.pieces) deg += w.alpha * w.multiplicity;
  return deg;
}

bool operator==(const WeightPiece& a, const WeightPiece& b) {
  return a.alpha == b.alpha && a.multiplicity == b.multiplicity && a.residues == b.residues;
}
bool operator==(const ParabolicDivisor& a, const ParabolicDivisor& b) { return a.n == b.n && a.pieces == b.pieces; }
bool operator==(const ParabolicDescriptor& a, const ParabolicDescriptor& b) {
  return a.rank == b.rank && a.degree == b.degree && a.lambda == b.lambda && a.divisors == b.divisors;
}

ParabolicDescriptor random_valid_descriptor(std::mt19937_64& rng) {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  ParabolicDescriptor p;
  p.rank = uniform(1, 4);
  p.degree = uniform(-5, 5);
  p.lambda = Rational(uniform(-3, 3), uniform(1, 3));
  const int divisors = uniform(0, 3);
  for (int i = 0; i < divisors; ++i) {
    ParabolicDivisor d;
    d.n = uniform(1, 6);
    int left = p.rank;
    while (left > 0) {
      const int m = uniform(1, left);
      const Rational alpha(-uniform(0, d.n - 1), d.n);
      d.pieces.push_back({alpha, m, std::vector<Rational>(static_cast<std::size_t>(m), p.lambda * alpha)});
      left -= m;
    }
    p.divisors.push_back(std::move(d));
  }
  return p;
}

}  // namespace stackypi1

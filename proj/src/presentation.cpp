#include "stackypi1/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>

#include "stackypi1/error.hpp"
#include "stackypi1/linalg.hpp"

namespace stackypi1 {

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l = -l;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

void GroupPresentation::validate() const {
  const int n = static_cast<int>(generators.size());
  for (std::size_t r = 0; r < relators.size(); ++r)
    for (int l : relators[r])
      if (l == 0 || std::abs(l) > n)
        throw Error(ErrorKind::InvalidArgument,
                    "relator " + std::to_string(r) + " uses generator index " + std::to_string(l) +
                        " outside 1.." + std::to_string(n));
}

std::size_t GroupPresentation::total_length() const {
  std::size_t t = 0;
  for (const auto& r : relators) t += r.size();
  return t;
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    const int g = std::abs(w[i]) - 1;
    os << (g < static_cast<int>(names.size()) ? names[static_cast<std::size_t>(g)] : "x" + std::to_string(g + 1));
    if (w[i] < 0) os << "^-1";
  }
  return os.str();
}

std::string format_presentation(const GroupPresentation& p) {
  std::ostringstream os;
  os << "< ";
  for (std::size_t i = 0; i < p.generators.size(); ++i) os << (i ? ", " : "") << p.generators[i];
  os << " | ";
  for (std::size_t i = 0; i < p.relators.size(); ++i) os << (i ? ", " : "") << format_word(p.relators[i], p.generators);
  os << " >";
  return os.str();
}

namespace {

Word canonical_cyclic_key(const Word& w) {
  Word best = w;
  for (const Word& base : {w, inverse(w)}) {
    for (std::size_t s = 0; s < base.size(); ++s) {
      Word rot(base.begin() + static_cast<std::ptrdiff_t>(s), base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(s));
      if (rot < best) best = rot;
    }
  }
  return best;
}

std::vector<Word> normalize_relators(const std::vector<Word>& rels) {
  std::vector<Word> out;
  std::set<Word> seen;
  for (const auto& r : rels) {
    Word c = cyclic_reduce(r);
    if (c.empty()) continue;
    if (seen.insert(canonical_cyclic_key(c)).second) out.push_back(c);
  }
  return out;
}

}  // namespace

GroupPresentation tietze_simplify(const GroupPresentation& input, std::size_t max_total_length) {
  input.validate();
  std::vector<std::string> gens = input.generators;
  std::vector<Word> rels = normalize_relators(input.relators);

  while (true) {
    // candidate (relator, generator) pairs where the generator occurs once
    std::size_t total = 0;
    for (const auto& r : rels) total += r.size();
    int best_rel = -1, best_gen = 0;
    std::size_t best_cost = 0;
    for (std::size_t ri = 0; ri < rels.size(); ++ri) {
      const Word& r = rels[ri];
      std::vector<int> count(gens.size() + 1, 0);
      for (int l : r) ++count[static_cast<std::size_t>(std::abs(l))];
      for (std::size_t g = 1; g <= gens.size(); ++g) {
        if (count[g] != 1) continue;
        std::size_t occurrences = 0;
        for (std::size_t rj = 0; rj < rels.size(); ++rj)
          if (rj != ri)
            for (int l : rels[rj])
              if (static_cast<std::size_t>(std::abs(l)) == g) ++occurrences;
        const std::size_t new_total = total - r.size() + occurrences * (r.size() - 1) - occurrences;
        if (new_total > max_total_length && occurrences > 0) continue;
        // prefer short relators, then few substitutions
        const std::size_t cost = r.size() * 1000 + occurrences;
        if (best_rel < 0 || cost < best_cost) {
          best_rel = static_cast<int>(ri);
          best_gen = static_cast<int>(g);
          best_cost = cost;
        }
      }
    }
    if (best_rel < 0) break;

    const Word r = rels[static_cast<std::size_t>(best_rel)];
    std::size_t pos = 0;
    while (std::abs(r[pos]) != best_gen) ++pos;
    Word rotated(r.begin() + static_cast<std::ptrdiff_t>(pos), r.end());
    rotated.insert(rotated.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos));
    const Word rest(rotated.begin() + 1, rotated.end());
    // x rest = 1  =>  x = rest^-1 ;  x^-1 rest = 1  =>  x = rest
    const Word replacement = rotated[0] > 0 ? inverse(rest) : rest;
    const Word replacement_inv = inverse(replacement);

    std::vector<Word> next;
    for (std::size_t ri = 0; ri < rels.size(); ++ri) {
      if (static_cast<int>(ri) == best_rel) continue;
      Word w;
      for (int l : rels[ri]) {
        if (l == best_gen)
          w.insert(w.end(), replacement.begin(), replacement.end());
        else if (l == -best_gen)
          w.insert(w.end(), replacement_inv.begin(), replacement_inv.end());
        else
          w.push_back(l);
      }
      for (auto& l : w) {
        if (std::abs(l) > best_gen) l += (l > 0 ? -1 : 1);
      }
      next.push_back(std::move(w));
    }
    gens.erase(gens.begin() + (best_gen - 1));
    rels = normalize_relators(next);
  }
  GroupPresentation out{std::move(gens), std::move(rels)};
  return out;
}

Abelianization abelianization(const GroupPresentation& p) {
  p.validate();
  const auto n = static_cast<Eigen::Index>(p.generators.size());
  MatrixZ m = zeros<Integer>(static_cast<Eigen::Index>(p.relators.size()), n);
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (int l : p.relators[r]) m(static_cast<Eigen::Index>(r), std::abs(l) - 1) += (l > 0 ? 1 : -1);
  Abelianization out;
  const auto snf = linalg::smith_normal_form(m);
  out.free_rank = static_cast<std::size_t>(n - snf.rank());
  for (const auto& d : snf.invariants)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

std::string format_abelianization(const Abelianization& a) {
  std::ostringstream os;
  bool first = true;
  if (a.free_rank > 0) {
    os << "Z";
    if (a.free_rank > 1) os << "^" << a.free_rank;
    first = false;
  }
  for (const auto& t : a.torsion) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

// ---- coset enumeration ------------------------------------------------------

namespace {

class CosetEnumerator {
 public:
  CosetEnumerator(const GroupPresentation& p, std::size_t max_cosets)
      : ngens_(p.generators.size()), max_(max_cosets) {
    for (const auto& r : p.relators) {
      Word c = cyclic_reduce(r);
      if (c.empty()) continue;
      std::vector<int> cols;
      for (int l : c) cols.push_back(column(l));
      rels_.push_back(std::move(cols));
    }
    new_coset();
  }

  bool run() {
    for (std::size_t c = 0; c < table_.size(); ++c) {
      for (const auto& r : rels_) {
        if (!alive(c)) break;
        if (!scan_and_fill(static_cast<int>(c), r)) return false;
      }
      if (alive(c)) {
        for (int x = 0; x < static_cast<int>(2 * ngens_); ++x) {
          if (!alive(c)) break;
          if (table_[c][static_cast<std::size_t>(x)] < 0) {
            if (!define(static_cast<int>(c), x)) return false;
          }
        }
      }
    }
    return true;
  }

  CosetTable result() {
    std::vector<int> index(table_.size(), -1);
    int k = 0;
    for (std::size_t c = 0; c < table_.size(); ++c)
      if (alive(c)) index[c] = k++;
    CosetTable out;
    out.size = static_cast<std::size_t>(k);
    out.action.assign(ngens_, std::vector<int>(out.size));
    out.inverse_action.assign(ngens_, std::vector<int>(out.size));
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (!alive(c)) continue;
      for (std::size_t g = 0; g < ngens_; ++g) {
        out.action[g][static_cast<std::size_t>(index[c])] = index[static_cast<std::size_t>(rep(table_[c][2 * g]))];
        out.inverse_action[g][static_cast<std::size_t>(index[c])] =
            index[static_cast<std::size_t>(rep(table_[c][2 * g + 1]))];
      }
    }
    return out;
  }

 private:
  static int column(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }
  static int inv(int col) { return col ^ 1; }

  bool alive(std::size_t c) const { return parent_[c] == static_cast<int>(c); }

  int rep(int c) {
    int r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      const int next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  int new_coset() {
    table_.emplace_back(2 * ngens_, -1);
    parent_.push_back(static_cast<int>(parent_.size()));
    return static_cast<int>(table_.size()) - 1;
  }

  bool define(int c, int x) {
    if (table_.size() >= max_) return false;
    const int d = new_coset();
    table_[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)] = d;
    table_[static_cast<std::size_t>(d)][static_cast<std::size_t>(inv(x))] = c;
    return true;
  }

  int& entry(int c, int x) { return table_[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)]; }

  bool scan_and_fill(int c, const std::vector<int>& w) {
    int f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    while (true) {
      while (i <= j && entry(f, w[static_cast<std::size_t>(i)]) >= 0) {
        f = entry(f, w[static_cast<std::size_t>(i)]);
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i && entry(b, inv(w[static_cast<std::size_t>(j)])) >= 0) {
        b = entry(b, inv(w[static_cast<std::size_t>(j)]));
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        entry(f, w[static_cast<std::size_t>(i)]) = b;
        entry(b, inv(w[static_cast<std::size_t>(i)])) = f;
        return true;
      }
      if (!define(f, w[static_cast<std::size_t>(i)])) return false;
    }
  }

  void merge(int k, int l, std::deque<int>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[static_cast<std::size_t>(l)] = k;
    queue.push_back(l);
  }

  void coincidence(int a, int b) {
    std::deque<int> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const int e = queue.front();
      queue.pop_front();
      for (int x = 0; x < static_cast<int>(2 * ngens_); ++x) {
        const int f = entry(e, x);
        if (f < 0) continue;
        entry(f, inv(x)) = -1;
        const int e1 = rep(e), f1 = rep(f);
        if (entry(e1, x) >= 0)
          merge(f1, entry(e1, x), queue);
        else if (entry(f1, inv(x)) >= 0)
          merge(e1, entry(f1, inv(x)), queue);
        else {
          entry(e1, x) = f1;
          entry(f1, inv(x)) = e1;
        }
      }
    }
  }

  std::size_t ngens_;
  std::size_t max_;
  std::vector<std::vector<int>> rels_;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
};

}  // namespace

std::optional<CosetTable> enumerate_cosets(const GroupPresentation& p, std::size_t max_cosets) {
  p.validate();
  CosetEnumerator e(p, max_cosets);
  if (!e.run()) return std::nullopt;
  return e.result();
}

WordStatus word_status(const GroupPresentation& p, const Word& w, std::size_t max_cosets) {
  const Word r = free_reduce(w);
  if (r.empty()) return WordStatus::Trivial;
  const auto table = enumerate_cosets(p, max_cosets);
  if (!table) return WordStatus::Unverified;
  int c = 0;
  for (int l : r) {
    const auto g = static_cast<std::size_t>(std::abs(l) - 1);
    c = l > 0 ? table->action[g][static_cast<std::size_t>(c)] : table->inverse_action[g][static_cast<std::size_t>(c)];
  }
  return c == 0 ? WordStatus::Trivial : WordStatus::Nontrivial;
}

}  // namespace stackypi1

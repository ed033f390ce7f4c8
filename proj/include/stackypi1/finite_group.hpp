#ifndef STACKYPI1_FINITE_GROUP_HPP
#define STACKYPI1_FINITE_GROUP_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "stackypi1/error.hpp"
#include "stackypi1/presentation.hpp"

namespace stackypi1 {

/// Multiplication-table group on elements 0..n-1.  Tables are validated on
/// construction (Latin square, identity, Light's associativity test over a
/// generating set).
class FiniteGroup {
 public:
  FiniteGroup();  // trivial group
  FiniteGroup(std::vector<std::vector<int>> table, std::string name = {});

  int order() const { return n_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int conj(int h, int g) const { return mul(mul(h, g), inv(h)); }  // h g h^-1
  int power(int a, long long k) const;
  int element_order(int a) const;
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  /// Greedy generating set (deterministic, smallest indices first).
  const std::vector<int>& generators() const { return generators_; }
  std::vector<std::vector<int>> table() const;
  bool is_abelian() const;

  std::vector<std::vector<int>> conjugacy_classes() const;
  int centralizer_order(int g) const;
  /// Canonical representative (least index) of the conjugacy class of g.
  int class_rep(int g) const { return class_rep_[static_cast<std::size_t>(g)]; }

 private:
  void finish();
  int n_ = 1;
  int identity_ = 0;
  std::vector<int> table_{0};
  std::vector<int> inverse_{0};
  std::vector<int> generators_;
  std::vector<int> class_rep_{0};
  std::string name_ = "1";
};

/// Closure of a set of generators under an associative product, producing a
/// validated table.  Elements are ordered by breadth-first discovery from
/// the identity.
template <typename T, typename Mul>
FiniteGroup generate_group(const T& identity, const std::vector<T>& gens, Mul mul, std::string name,
                           std::size_t max_order = 100000) {
  std::map<T, int> index;
  std::vector<T> elems{identity};
  index.emplace(identity, 0);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      T x = mul(elems[i], g);
      if (index.emplace(x, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(x));
        if (elems.size() > max_order) throw Error(ErrorKind::BudgetExceeded, "group closure exceeds order bound");
      }
    }
  }
  std::vector<std::vector<int>> table(elems.size(), std::vector<int>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) table[i][j] = index.at(mul(elems[i], elems[j]));
  return FiniteGroup(std::move(table), std::move(name));
}

using Permutation = std::vector<int>;
/// Composition convention (p*q)(i) = q(p(i)), i.e. apply p first.
Permutation compose(const Permutation& p, const Permutation& q);

namespace groups {

FiniteGroup trivial();
FiniteGroup cyclic(int n);
FiniteGroup dihedral(int n);   // order 2n
FiniteGroup symmetric(int n);
FiniteGroup alternating(int n);
FiniteGroup dicyclic(int n);   // order 4n; dicyclic(2) is Q8
FiniteGroup sl2_3();
FiniteGroup abelian(const std::vector<int>& invariants);
/// Z/n semidirect Z/m with generator of Z/m acting by multiplication by r.
FiniteGroup metacyclic(int n, int m, int r);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup from_permutations(const std::vector<Permutation>& gens, std::string name);

/// Catalog of small groups (every group of order <= 15 and a broad selection
/// of orders 16..24), ordered by order then name.
const std::vector<FiniteGroup>& catalog();
std::vector<FiniteGroup> catalog_up_to(int order_bound);

/// Named construction: "cyclic", "dihedral", "symmetric", "alternating",
/// "dicyclic", "quaternion", "sl2_3", "trivial".
FiniteGroup named(const std::string& kind, int n);

}  // namespace groups

// ---- homomorphisms -----------------------------------------------------------

/// Calls `visit(images)` for every homomorphism from the presented group to
/// G (images[i] = image of generator i).  Backtracking with relator pruning.
void for_each_hom(const GroupPresentation& p, const FiniteGroup& g,
                  const std::function<void(const std::vector<int>&)>& visit, Budget* budget = nullptr);

std::uint64_t count_homs(const GroupPresentation& p, const FiniteGroup& g, Budget* budget = nullptr);

/// Evaluates a word under generator images.
int evaluate(const FiniteGroup& g, const Word& w, const std::vector<int>& images);

/// All homomorphisms between finite groups, each as a full element map.
std::vector<std::vector<int>> homomorphisms(const FiniteGroup& from, const FiniteGroup& to, Budget* budget = nullptr);

bool is_homomorphism(const FiniteGroup& from, const FiniteGroup& to, const std::vector<int>& map);

/// Automorphisms as element permutations, ordered lexicographically.
std::vector<std::vector<int>> automorphisms(const FiniteGroup& g, Budget* budget = nullptr);

/// Number of orbits of G acting on Hom(P, G) by simultaneous conjugation.
std::uint64_t count_hom_classes(const GroupPresentation& p, const FiniteGroup& g, Budget* budget = nullptr);

}  // namespace stackypi1

#endif  // STACKYPI1_FINITE_GROUP_HPP

#ifndef STACKYPI1_PRESENTATION_HPP
#define STACKYPI1_PRESENTATION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stackypi1/scalar.hpp"

namespace stackypi1 {

/// A word in the free group: nonzero signed 1-based generator indices,
/// +i for generator i and -i for its inverse.
using Word = std::vector<int>;

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);

/// Finite presentation <generators | relators>.  The empty presentation is
/// the trivial group.
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::size_t rank() const { return generators.size(); }
  /// Throws Error(InvalidArgument) when a relator letter is out of range.
  void validate() const;
  std::size_t total_length() const;
};

std::string format_word(const Word& w, const std::vector<std::string>& names);
std::string format_presentation(const GroupPresentation& p);

/// Tietze post-pass: free and cyclic reduction, removal of trivial and
/// duplicate relators, and elimination of generators that occur exactly once
/// in some relator.  The result presents an isomorphic group.
GroupPresentation tietze_simplify(const GroupPresentation& p, std::size_t max_total_length = 20000);

struct Abelianization {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1, ascending
  bool operator==(const Abelianization&) const = default;
};

Abelianization abelianization(const GroupPresentation& p);
std::string format_abelianization(const Abelianization& a);

/// Coset enumeration over the trivial subgroup (Hopcroft-Lund-Tarjan style
/// with coincidence processing).  Returns the right regular action of the
/// generators on the group elements, or nullopt if more than `max_cosets`
/// cosets were needed.
struct CosetTable {
  std::size_t size = 0;
  // action[g][c]: coset reached from c by generator g (0-based g)
  std::vector<std::vector<int>> action;
  std::vector<std::vector<int>> inverse_action;
};
std::optional<CosetTable> enumerate_cosets(const GroupPresentation& p, std::size_t max_cosets = 100000);

enum class WordStatus { Trivial, Nontrivial, Unverified };

/// Word problem: decided by free reduction, else by coset enumeration when it
/// terminates within the bound, else Unverified.
WordStatus word_status(const GroupPresentation& p, const Word& w, std::size_t max_cosets = 100000);

}  // namespace stackypi1

#endif  // STACKYPI1_PRESENTATION_HPP

#ifndef STACKYPI1_WREATH_HPP
#define STACKYPI1_WREATH_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "stackypi1/finite_group.hpp"
#include "stackypi1/scalar.hpp"

namespace stackypi1 {

/// Action of Phi on G by automorphisms: action[phi][g] = phi(g).
using GroupAction = std::vector<std::vector<int>>;

/// Throws NotAnAction unless every map is an automorphism and phi |-> action[phi]
/// is a homomorphism.
void check_action(const FiniteGroup& g, const FiniteGroup& phi, const GroupAction& action);
GroupAction trivial_action(const FiniteGroup& g, const FiniteGroup& phi);
/// Every homomorphism Phi -> Aut(G), in a deterministic order.
std::vector<GroupAction> all_actions(const FiniteGroup& g, const FiniteGroup& phi);

/// Element (v, (g_w)_{w in Phi}, phi) of H = (G wr Phi) x| Phi.  Elements of
/// the wreath product itself have phi = identity.
struct WreathElement {
  int v = 0;
  std::vector<int> g;
  int phi = 0;
  auto operator<=>(const WreathElement&) const = default;
};

/// H = (G wr Phi) x| Phi with
///   (v,g)(v',g') = (vv', w |-> g_w g'_{v^-1 w})
///   phi . (v,g)  = (phi v phi^-1, w |-> phi(g_{phi^-1 w}))
/// Elements are also encoded as integers v + |Phi| (sum_w g_w |G|^w) + |Phi| |G|^|Phi| phi.
class WreathGroup {
 public:
  static constexpr std::uint64_t kTableThreshold = 2048;

  WreathGroup(FiniteGroup g, FiniteGroup phi, GroupAction action);

  const FiniteGroup& base() const { return g_; }
  const FiniteGroup& acting() const { return phi_; }
  const GroupAction& action() const { return action_; }
  std::uint64_t order() const { return wreath_order_ * static_cast<std::uint64_t>(phi_.order()); }
  std::uint64_t wreath_order() const { return wreath_order_; }

  std::uint64_t identity() const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv(std::uint64_t a) const;
  /// Image in Phi x| Phi (adjoint action), as (v, phi).
  std::pair<int, int> project(std::uint64_t a) const;
  /// Product in Phi x| Phi.
  std::pair<int, int> semidirect_mul(std::pair<int, int> a, std::pair<int, int> b) const;
  bool in_wreath(std::uint64_t a) const { return project(a).second == phi_.identity(); }

  std::uint64_t encode(const WreathElement& e) const;
  WreathElement decode(std::uint64_t a) const;
  WreathElement multiply(const WreathElement& a, const WreathElement& b) const { return decode(mul(encode(a), encode(b))); }

  /// Generating sets of G wr Phi and of H.
  std::vector<std::uint64_t> wreath_generators() const;
  std::vector<std::uint64_t> generators() const;
  /// Elements of H projecting to (v, phi) (all |G|^|Phi| of them).
  std::vector<std::uint64_t> fiber(int v, int phi) const;

  /// Explicit table of H when order() <= kTableThreshold.
  std::optional<FiniteGroup> table() const;

 private:
  void decode_into(std::uint64_t a, int& v, std::vector<int>& g, int& phi) const;
  std::uint64_t encode_raw(int v, const std::vector<int>& g, int phi) const;

  FiniteGroup g_, phi_;
  GroupAction action_;
  std::uint64_t wreath_order_ = 1;
};

WreathGroup wreath_semidirect(const FiniteGroup& g, const FiniteGroup& phi, const GroupAction& action);

struct AxiomReport {
  std::uint64_t order = 0;
  bool exhaustive = false;       // Light's test over generators on all pairs
  std::uint64_t checks = 0;
  bool identity = true;
  bool inverses = true;
  bool associativity = true;
  bool projection_homomorphism = true;
  bool ok() const { return identity && inverses && associativity && projection_homomorphism; }
};

/// Full validation when order <= exhaustive_limit, otherwise `samples` random triples.
AxiomReport validate_axioms(const WreathGroup& h, std::mt19937_64& rng, std::uint64_t exhaustive_limit = 10000,
                            int samples = 1000);

struct GroupoidSummary {
  std::uint64_t objects = 0;
  std::vector<std::uint64_t> automorphisms;  // one entry per isomorphism class, in canonical order
  Rational cardinality;                      // sum of 1 / |Aut|
};

struct ChangeActionReport {
  int kernel_order = 0;
  std::uint64_t wreath_order = 0;
  std::uint64_t h_order = 0;
  GroupoidSummary left;    // Hom(ker omega, G) // G
  GroupoidSummary right;   // lifts Gamma -> G wr Phi identified with omega // G wr Phi
  bool equal = false;
  GroupoidSummary quot_left;  // (Hom(ker omega, G) // G) // Phi: cardinality only
  GroupoidSummary quot_right;    // fiber of Hom(Gamma, H) // H over B Phi
  bool quot_equal = false;
};

/// Finite model of the change-of-action square: Gamma plays pi_1(Y) and
/// ker omega plays pi_1(X).  Throws NotSurjective, NotAnAction, InvalidArgument.
ChangeActionReport changeaction_check(const FiniteGroup& gamma, const std::vector<int>& omega, const FiniteGroup& g,
                                      const FiniteGroup& phi, const GroupAction& action, int threads = 1,
                                      Budget* budget = nullptr);

}  // namespace stackypi1

#endif  // STACKYPI1_WREATH_HPP

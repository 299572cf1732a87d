#pragma once

// Truncated nerves of strict 2-groups as simplicial groups.
//
// A p-simplex is a composable string x_0 → x_1 → ... → x_p. It is stored as
// its start object x_0 together with the ker(src) parts k_i of its arrows,
// arrow_i = k_i · unit(x_{i-1}); so level p has |Ob| · |ker src|^p elements.
// Multiplication is arrowwise in the morphism group.

#include <cstdint>
#include <vector>

#include "cech2/crossed_module.hpp"
#include "cech2/report.hpp"

namespace cech2 {

struct NerveOptions {
  int levels = 4;
  int max_level_order = 2048;
  int full_validation_below = 256;  // check associativity of level tables up to this order
};

class TruncatedSimplicialGroup {
 public:
  int top() const { return static_cast<int>(levels_.size()) - 1; }
  const GroupPtr& level(int p) const { return levels_[p]; }
  /// d_i : level p → level p-1, for 1 ≤ p ≤ top and 0 ≤ i ≤ p.
  const GroupHom& face(int p, int i) const { return faces_[p][i]; }
  /// s_i : level p → level p+1, for 0 ≤ p < top and 0 ≤ i ≤ p.
  const GroupHom& degeneracy(int p, int i) const { return degeneracies_[p][i]; }
  const TwoGroup& two_group() const { return tg_; }

  int kernel_order() const { return static_cast<int>(kernel_.size()); }
  /// Ascending elements of ker src.
  const std::vector<Elem>& kernel() const { return kernel_; }
  Elem start(int p, Elem x) const;
  /// The arrows of a p-simplex as morphisms (empty for p = 0).
  std::vector<Elem> arrows(int p, Elem x) const;
  /// Objects x_0..x_p along the string.
  std::vector<Elem> objects(int p, Elem x) const;
  /// (x_0, k_1, ..., k_p) with k_i a position in kernel().
  std::vector<Elem> coordinates(int p, Elem x) const;
  /// Index of a composable string; throws NotComposable.
  Elem from_arrows(Elem start, const std::vector<Elem>& arrows) const;

 private:
  friend TruncatedSimplicialGroup nerve_two_group(const TwoGroup&, const NerveOptions&);
  explicit TruncatedSimplicialGroup(TwoGroup tg) : tg_(std::move(tg)) {}

  TwoGroup tg_;
  std::vector<Elem> kernel_;
  std::vector<Elem> kernel_pos_;  // morphism -> position in kernel_, -1 elsewhere
  std::vector<GroupPtr> levels_;
  std::vector<std::vector<GroupHom>> faces_;
  std::vector<std::vector<GroupHom>> degeneracies_;
};

/// Throws BudgetExceeded if some level exceeds options.max_level_order.
TruncatedSimplicialGroup nerve_two_group(const TwoGroup& tg, const NerveOptions& options = {});
TruncatedSimplicialGroup nerve_two_group(const CrossedModule& xm, const NerveOptions& options = {});

/// All simplicial identities on every element of every level where they are
/// defined, and that every face and degeneracy is a homomorphism.
Report check_simplicial_identities(const TruncatedSimplicialGroup& nsg);

/// Enumerates composable tuples of morphisms of the 2-group of xm directly,
/// checks the count is |G|·|H|^p, that (start, H-parts) is a bijection onto
/// G × H^p agreeing with the stored encoding, and that the stored faces and
/// degeneracies match dropping, composing and inserting identities.
Report check_level_iso(const TruncatedSimplicialGroup& nsg, const CrossedModule& xm,
                       std::uint64_t max_tuples = 1'000'000);

/// For the nerve of G ⋉ H̄ up to level p, reads each simplex as
/// (g, h_0, ..., h_p) from its objects and checks the product of two simplices
/// is (gg', h_0 α(g)(h'_0), ..., h_p α(g)(h'_p)) on all pairs.
Report check_bar_multiplication(const GroupPtr& G, const GroupPtr& H, const GroupAction& alpha, int p,
                                std::uint64_t max_pairs = 10'000'000);

}  // namespace cech2

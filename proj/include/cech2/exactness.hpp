#pragma once

// Induced maps on Ȟ¹ and constructive checks of the two exactness lemmas:
// the bijection Ȟ¹(M, H→G) ≅ Ȟ¹(M, K) for 1 → H → G → K → 1, and exactness
// of Ȟ¹(𝒢₀) → Ȟ¹(𝒢₁) → Ȟ¹(𝒢₂) for a short exact sequence of 2-groups.

#include <optional>
#include <vector>

#include "cech2/cohomology.hpp"
#include "cech2/crossed_module.hpp"
#include "cech2/report.hpp"

namespace cech2 {

/// 1 → H → G → K → 1 with a set-theoretic section of the projection.
class GroupSES {
 public:
  /// Without an explicit section the minimal-index preimage is used.
  static GroupSES validate(GroupHom inclusion, GroupHom projection, std::optional<std::vector<Elem>> section = {});

  const GroupHom& inclusion() const { return inclusion_; }
  const GroupHom& projection() const { return projection_; }
  const std::vector<Elem>& section() const { return section_; }
  const GroupPtr& H() const { return inclusion_.dom(); }
  const GroupPtr& G() const { return inclusion_.cod(); }
  const GroupPtr& K() const { return projection_.cod(); }

  /// (G, H, inclusion, conjugation).
  CrossedModule crossed_module() const;
  CrossedModule quotient() const { return discrete_two_group(K()); }
  /// (projection, trivial): the map inducing α∗.
  TwoGroupHom to_quotient() const;
  GroupSES with_section(std::vector<Elem> section) const;

 private:
  GroupSES(GroupHom inclusion, GroupHom projection, std::vector<Elem> section)
      : inclusion_(std::move(inclusion)), projection_(std::move(projection)), section_(std::move(section)) {}

  GroupHom inclusion_;
  GroupHom projection_;
  std::vector<Elem> section_;
};

/// Every normalized section, in lexicographic order.
std::vector<std::vector<Elem>> all_sections(const GroupHom& projection);

Cocycle pushforward_cocycle(const TwoGroupHom& hom, const Cocycle& c);

Cocycle lemma2_alpha(const Cocycle& c, const GroupSES& ses);
/// Lifts edge values through the section and solves the triangle law for h.
/// Throws DefectNotInKernel if some g_ik (g_ij g_jk)^-1 misses the image of H.
Cocycle lemma2_beta(const Cocycle& k, const GroupSES& ses, const SimplicialComplex& complex);

Report verify_lemma2(const GroupSES& ses, const SimplicialComplex& complex, const Budget& budget = {});
/// Lemma-2 lifts of every K-cocycle under every normalized section land in
/// one class per K-cocycle.
Report lemma2_section_independence(const GroupSES& ses, const SimplicialComplex& complex, const Budget& budget = {});

/// A witness taking c to the trivial cocycle, if one exists.
std::optional<CoboundaryWitness> trivialization_witness(const CechSetting& setting, const Cocycle& c,
                                                        const Budget& budget = {});

/// Set-theoretic lifts along the right-hand map of a sequence.
struct SesSections {
  std::vector<Elem> G;  // G₂ → G₁
  std::vector<Elem> H;  // H₂ → H₁
};
/// Minimal-index preimages.
SesSections default_sections(const CrossedModuleSES& ses);

struct KernelLift {
  Cocycle lifted;               // over 𝒢₀
  CoboundaryWitness witness;    // over 𝒢₁, sends c to the pushforward of lifted
  std::vector<Elem> gamma;      // γ_ij in G₁
};

/// Given c over 𝒢₁ and a witness trivializing p∗c, lifts the witness through
/// the sections, forms γ_ij = x̂_i g_ij x̂_j^-1 t(ξ̂_ij) with x = f^-1 and
/// ξ = α(f^-1)(k), and pulls the result back along the injective left map.
/// Throws ValuesNotInKernel if anything lands outside the kernel of p.
KernelLift lemma3_kernel_lift(const CechSetting& middle, const Cocycle& c, const CrossedModuleSES& ses,
                              const CoboundaryWitness& trivializing, const SesSections& sections);

Report verify_lemma3(const CrossedModuleSES& ses, const SimplicialComplex& complex, const Budget& budget = {});

/// 1 → Z₂ → Z₄ → Z₂ → 1.
GroupSES ses_z2_z4_z2();
/// 1 → Z₃ → Z₃ → 1 → 1.
GroupSES ses_z3_z3_trivial();
/// The same sequences viewed as discrete 2-groups.
CrossedModuleSES discrete_ses(const GroupSES& ses);

}  // namespace cech2

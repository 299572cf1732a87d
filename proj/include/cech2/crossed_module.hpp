#pragma once

// Crossed modules (G, H, t, α) and the strict 2-groups they present.
//
// Morphisms of the 2-group of a crossed module are pairs (h, g) in H ⋊ G,
// encoded as h * |G| + g, with source g and target t(h)g.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cech2/group.hpp"
#include "cech2/report.hpp"

namespace cech2 {

class CrossedModule {
 public:
  /// G = t.cod(), H = t.dom(); alpha must act by G on H. Checks equivariance
  /// and the Peiffer identity exhaustively.
  static CrossedModule validate(std::string name, GroupHom t, GroupAction alpha);

  const std::string& name() const { return name_; }
  const GroupPtr& G() const { return t_.cod(); }
  const GroupPtr& H() const { return t_.dom(); }
  const GroupHom& t() const { return t_; }
  const GroupAction& alpha() const { return alpha_; }

  Elem boundary(Elem h) const { return t_(h); }
  Elem act(Elem g, Elem h) const { return alpha_(g, h); }
  /// All h with t(h) = g, ascending.
  const std::vector<Elem>& fiber(Elem g) const { return fibers_[g]; }

  /// Componentwise equality of tables, t and α (names ignored).
  bool same_as(const CrossedModule& other) const;

 private:
  CrossedModule(std::string name, GroupHom t, GroupAction alpha);

  std::string name_;
  GroupHom t_;
  GroupAction alpha_;
  std::vector<std::vector<Elem>> fibers_;
};

/// A strict 2-group: a group object in groupoids, given by its object and
/// morphism groups and the structure homomorphisms. Composition is derived
/// from the group structure as b2 ∘ b1 = b2 · unit(tgt b1)^-1 · b1.
class TwoGroup {
 public:
  /// Checks src∘unit = tgt∘unit = id and that ker src and ker tgt commute,
  /// which is what makes composition a homomorphism.
  static TwoGroup validate(GroupPtr ob, GroupPtr mor, GroupHom src, GroupHom tgt, GroupHom unit);

  const GroupPtr& ob() const { return ob_; }
  const GroupPtr& mor() const { return mor_; }
  const GroupHom& src() const { return src_; }
  const GroupHom& tgt() const { return tgt_; }
  const GroupHom& unit() const { return unit_; }

  bool composable(Elem first, Elem second) const { return tgt_(first) == src_(second); }
  /// second ∘ first; throws NotComposable when tgt(first) != src(second).
  Elem compose(Elem second, Elem first) const;
  Elem horizontal(Elem a, Elem b) const { return mor_->mul(a, b); }

  /// The crossed module this 2-group was built from, if any.
  const std::shared_ptr<const CrossedModule>& source() const { return source_; }
  void set_source(std::shared_ptr<const CrossedModule> xm) { source_ = std::move(xm); }

 private:
  TwoGroup(GroupPtr ob, GroupPtr mor, GroupHom src, GroupHom tgt, GroupHom unit)
      : ob_(std::move(ob)), mor_(std::move(mor)), src_(std::move(src)), tgt_(std::move(tgt)), unit_(std::move(unit)) {}

  GroupPtr ob_;
  GroupPtr mor_;
  GroupHom src_;
  GroupHom tgt_;
  GroupHom unit_;
  std::shared_ptr<const CrossedModule> source_;
};

TwoGroup two_group_from_crossed_module(const CrossedModule& xm);
/// G = Ob, H = ker(src) listed in ascending morphism index, t = tgt restricted,
/// α(g)(h) = unit(g) h unit(g)^-1.
CrossedModule crossed_module_from_two_group(const TwoGroup& tg, std::string name = "");

/// (h1, g1) ⋆ (h2, g2) = (h1 α(g1)(h2), g1 g2), evaluated from the formula.
Elem horizontal_compose(const CrossedModule& xm, Elem b1, Elem b2);
/// b2 ∘ b1 for b1 = (h, g) and b2 = (h', t(h)g): returns (h'h, g).
Elem vertical_compose(const CrossedModule& xm, Elem b1, Elem b2);
Elem make_bigon(const CrossedModule& xm, Elem h, Elem g);

/// (a2 ∘ a1) · (b2 ∘ b1) = (a2 · b2) ∘ (a1 · b1) over all composable pairs.
Report check_interchange(const TwoGroup& tg);
/// The closed-form compositions against the group law and derived composition.
Report check_composition_formulas(const CrossedModule& xm);

CrossedModule discrete_two_group(const GroupPtr& g);
/// H → 1; rejected with PeifferViolation unless H is abelian.
CrossedModule shift_two_group(const GroupPtr& h);

struct AutOptions {
  int max_order = 12;
};
/// H → Aut(H) with t(h) = conjugation by h. Aut(H) elements are ordered
/// lexicographically as permutations of H, identity first.
CrossedModule aut_two_group(const GroupPtr& h, AutOptions options = {});

/// Strict homomorphism of crossed modules (fG, fH).
class TwoGroupHom {
 public:
  static TwoGroupHom validate(CrossedModule dom, CrossedModule cod, GroupHom fG, GroupHom fH);

  const CrossedModule& dom() const { return dom_; }
  const CrossedModule& cod() const { return cod_; }
  const GroupHom& fG() const { return fG_; }
  const GroupHom& fH() const { return fH_; }
  /// Image of a morphism (h, g) of the domain 2-group.
  Elem on_morphism(Elem b) const;

 private:
  TwoGroupHom(CrossedModule dom, CrossedModule cod, GroupHom fG, GroupHom fH)
      : dom_(std::move(dom)), cod_(std::move(cod)), fG_(std::move(fG)), fH_(std::move(fH)) {}

  CrossedModule dom_;
  CrossedModule cod_;
  GroupHom fG_;
  GroupHom fH_;
};

/// 1 → 𝒢₀ --left--> 𝒢₁ --right--> 𝒢₂ → 1
struct CrossedModuleSES {
  TwoGroupHom left;
  TwoGroupHom right;
};

/// Exactness of both rows and commutativity of the squares.
Report validate_ses(const CrossedModuleSES& ses);

struct HatConstruction {
  CrossedModule hat;
  CrossedModuleSES ses;
};

/// (G⋉H, H, t', α') with t'(h) = (1, h) and α'(g, h)(h') = α(t(h)g)(h'), and
/// the sequence 1 → H → Ĝ → 𝒢 → 1 with f(h) = (t(h), h^-1), f'(g, h) = t(h)g.
/// G⋉H is semidirect_product(G, H, α); its element (g, h) is encoded h*|G|+g.
HatConstruction hat_construction(const CrossedModule& xm);

/// Objects H, morphisms H × H with src(h, h') = h, tgt(h, h') = h',
/// unit(h) = (h, h). Morphism (a, b) is encoded a*|H| + b.
TwoGroup segal_bar_two_group(const GroupPtr& h);

/// G ⋉ H̄: objects G⋉H, morphisms G⋉(H×H) under the diagonal action.
/// Morphism (g, (a, b)) is encoded (a*|H| + b)*|G| + g.
TwoGroup semidirect_two_group(const TwoGroup& bar_h, const GroupAction& alpha);

struct TwoGroupIso {
  TwoGroup from;
  TwoGroup to;
  std::vector<Elem> ob_map;
  std::vector<Elem> mor_map;
  TwoGroupHom hom;
};

/// Builds ((g,h),h') ↦ (g,(h,h'h)) from the hat 2-group of xm to
/// G⋉H̄ and checks it is an isomorphism of 2-groups. Throws IsoCheckFailed.
TwoGroupIso iso_hat_check(const CrossedModule& xm);

}  // namespace cech2

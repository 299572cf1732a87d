#include "cech2/crossed_module.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cech2/error.hpp"

namespace cech2 {

namespace {

std::string pair(Elem a, Elem b) { return "(" + std::to_string(a) + ", " + std::to_string(b) + ")"; }

bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
  return a.order() == b.order() && a.table() == b.table();
}

}  // namespace

CrossedModule::CrossedModule(std::string name, GroupHom t, GroupAction alpha)
    : name_(std::move(name)), t_(std::move(t)), alpha_(std::move(alpha)), fibers_(t_.cod()->order()) {
  for (Elem h = 0; h < t_.dom()->order(); ++h) fibers_[t_(h)].push_back(h);
}

CrossedModule CrossedModule::validate(std::string name, GroupHom t, GroupAction alpha) {
  const FiniteGroup& G = *t.cod();
  const FiniteGroup& H = *t.dom();
  if (alpha.actor()->order() != G.order() || alpha.target()->order() != H.order())
    throw Error(ErrorCode::InvalidInput, "action groups do not match t: H -> G");
  for (Elem g = 0; g < G.order(); ++g)
    for (Elem h = 0; h < H.order(); ++h)
      if (t(alpha(g, h)) != G.conj(g, t(h)))
        throw Error(ErrorCode::EquivarianceViolation, "(g, h) = " + pair(g, h));
  for (Elem h = 0; h < H.order(); ++h)
    for (Elem h2 = 0; h2 < H.order(); ++h2)
      if (alpha(t(h), h2) != H.conj(h, h2))
        throw Error(ErrorCode::PeifferViolation, "(h, h') = " + pair(h, h2));
  return CrossedModule(std::move(name), std::move(t), std::move(alpha));
}

bool CrossedModule::same_as(const CrossedModule& other) const {
  return same_group(*G(), *other.G()) && same_group(*H(), *other.H()) && t_.map() == other.t_.map() &&
         alpha_.perms() == other.alpha_.perms();
}

// ---------------------------------------------------------------------------

TwoGroup TwoGroup::validate(GroupPtr ob, GroupPtr mor, GroupHom src, GroupHom tgt, GroupHom unit) {
  for (Elem x = 0; x < ob->order(); ++x) {
    if (src(unit(x)) != x) throw Error(ErrorCode::NotTwoGroup, "src(unit(x)) != x for x = " + std::to_string(x));
    if (tgt(unit(x)) != x) throw Error(ErrorCode::NotTwoGroup, "tgt(unit(x)) != x for x = " + std::to_string(x));
  }
  std::vector<Elem> ker_src, ker_tgt;
  for (Elem b = 0; b < mor->order(); ++b) {
    if (src(b) == 0) ker_src.push_back(b);
    if (tgt(b) == 0) ker_tgt.push_back(b);
  }
  for (Elem a : ker_src)
    for (Elem b : ker_tgt)
      if (mor->mul(a, b) != mor->mul(b, a))
        throw Error(ErrorCode::NotTwoGroup, "ker src and ker tgt do not commute at " + pair(a, b));
  return TwoGroup(std::move(ob), std::move(mor), std::move(src), std::move(tgt), std::move(unit));
}

Elem TwoGroup::compose(Elem second, Elem first) const {
  if (!composable(first, second))
    throw Error(ErrorCode::NotComposable, "tgt(first) = " + std::to_string(tgt_(first)) +
                                              " but src(second) = " + std::to_string(src_(second)));
  return mor_->mul(mor_->mul(second, mor_->inv(unit_(tgt_(first)))), first);
}

TwoGroup two_group_from_crossed_module(const CrossedModule& xm) {
  const GroupPtr& G = xm.G();
  const int ng = G->order();
  GroupPtr mor = semidirect_product(G, xm.H(), xm.alpha());
  std::vector<Elem> src(mor->order()), tgt(mor->order()), unit(ng);
  for (Elem b = 0; b < mor->order(); ++b) {
    const Elem h = pair_first(b, ng), g = pair_second(b, ng);
    src[b] = g;
    tgt[b] = G->mul(xm.boundary(h), g);
  }
  for (Elem g = 0; g < ng; ++g) unit[g] = encode_pair(0, g, ng);
  TwoGroup tg = TwoGroup::validate(G, mor, GroupHom::validate(mor, G, std::move(src)),
                                   GroupHom::validate(mor, G, std::move(tgt)), GroupHom::validate(G, mor, std::move(unit)));
  tg.set_source(std::make_shared<const CrossedModule>(xm));
  return tg;
}

CrossedModule crossed_module_from_two_group(const TwoGroup& tg, std::string name) {
  const FiniteGroup& mor = *tg.mor();
  std::vector<Elem> kernel;
  for (Elem b = 0; b < mor.order(); ++b)
    if (tg.src()(b) == 0) kernel.push_back(b);
  std::map<Elem, Elem> local;
  for (Elem i = 0; i < static_cast<Elem>(kernel.size()); ++i) local[kernel[i]] = i;
  GroupPtr H = subgroup(mor, "ker(src)", kernel);
  std::vector<Elem> t(kernel.size());
  for (std::size_t i = 0; i < kernel.size(); ++i) t[i] = tg.tgt()(kernel[i]);
  std::vector<std::vector<Elem>> perms(tg.ob()->order(), std::vector<Elem>(kernel.size()));
  for (Elem g = 0; g < tg.ob()->order(); ++g)
    for (std::size_t i = 0; i < kernel.size(); ++i) perms[g][i] = local.at(mor.conj(tg.unit()(g), kernel[i]));
  if (name.empty()) name = tg.source() ? tg.source()->name() : "ker(src)->Ob";
  return CrossedModule::validate(std::move(name), GroupHom::validate(H, tg.ob(), std::move(t)),
                                 GroupAction::validate(tg.ob(), H, std::move(perms)));
}

Report check_interchange(const TwoGroup& tg) {
  Report report;
  report.suite = "interchange";
  const FiniteGroup& mor = *tg.mor();
  std::vector<std::pair<Elem, Elem>> chains;
  for (Elem a = 0; a < mor.order(); ++a)
    for (Elem b = 0; b < mor.order(); ++b)
      if (tg.composable(a, b)) chains.push_back({a, b});
  std::string failure;
  std::int64_t quadruples = 0;
  for (const auto& [a1, a2] : chains)
    for (const auto& [b1, b2] : chains) {
      ++quadruples;
      if (failure.empty() &&
          mor.mul(tg.compose(a2, a1), tg.compose(b2, b1)) != tg.compose(mor.mul(a2, b2), mor.mul(a1, b1)))
        failure = "a = " + pair(a1, a2) + ", b = " + pair(b1, b2);
    }
  report.figures["composable_pairs"] = static_cast<std::int64_t>(chains.size());
  report.figures["quadruples"] = quadruples;
  report.add("interchange law", failure.empty(), failure);
  return report;
}

Report check_composition_formulas(const CrossedModule& xm) {
  Report report;
  report.suite = "composition";
  const TwoGroup tg = two_group_from_crossed_module(xm);
  const int n = tg.mor()->order();
  std::string horizontal, vertical;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (horizontal.empty() && horizontal_compose(xm, a, b) != tg.horizontal(a, b)) horizontal = pair(a, b);
      if (vertical.empty() && tg.composable(a, b) && vertical_compose(xm, a, b) != tg.compose(b, a)) vertical = pair(a, b);
    }
  report.add("horizontal composition is the group law", horizontal.empty(), horizontal);
  report.add("vertical composition matches b2 unit(tgt b1)^-1 b1", vertical.empty(), vertical);
  return report;
}

Elem make_bigon(const CrossedModule& xm, Elem h, Elem g) { return encode_pair(h, g, xm.G()->order()); }

Elem horizontal_compose(const CrossedModule& xm, Elem b1, Elem b2) {
  const int ng = xm.G()->order();
  const Elem h1 = pair_first(b1, ng), g1 = pair_second(b1, ng);
  const Elem h2 = pair_first(b2, ng), g2 = pair_second(b2, ng);
  return encode_pair(xm.H()->mul(h1, xm.act(g1, h2)), xm.G()->mul(g1, g2), ng);
}

Elem vertical_compose(const CrossedModule& xm, Elem b1, Elem b2) {
  const int ng = xm.G()->order();
  const Elem h = pair_first(b1, ng), g = pair_second(b1, ng);
  const Elem h2 = pair_first(b2, ng), g2 = pair_second(b2, ng);
  const Elem mid = xm.G()->mul(xm.boundary(h), g);
  if (g2 != mid)
    throw Error(ErrorCode::NotComposable,
                "first ends at " + std::to_string(mid) + ", second starts at " + std::to_string(g2));
  return encode_pair(xm.H()->mul(h2, h), g, ng);
}

CrossedModule discrete_two_group(const GroupPtr& g) {
  GroupPtr trivial = cyclic_group(1);
  return CrossedModule::validate("discrete:" + g->name(), GroupHom::trivial(trivial, g), GroupAction::trivial(g, trivial));
}

CrossedModule shift_two_group(const GroupPtr& h) {
  GroupPtr trivial = cyclic_group(1);
  return CrossedModule::validate("shift:" + h->name(), GroupHom::trivial(h, trivial), GroupAction::trivial(trivial, h));
}

CrossedModule aut_two_group(const GroupPtr& hp, AutOptions options) {
  const FiniteGroup& H = *hp;
  const int n = H.order();
  if (n > options.max_order)
    throw Error(ErrorCode::BudgetExceeded, "|H| = " + std::to_string(n) + " exceeds automorphism search bound " +
                                               std::to_string(options.max_order));
  const std::vector<Elem> gens = generating_set(H);
  // Words for every element as (predecessor, generator) in BFS order.
  std::vector<Elem> pred(n, -1), via(n, -1), bfs{0};
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const Elem y = H.mul(bfs[i], gens[s]);
      if (!seen[y]) {
        seen[y] = 1;
        pred[y] = bfs[i];
        via[y] = static_cast<Elem>(s);
        bfs.push_back(y);
      }
    }
  std::set<std::vector<Elem>> autos;
  std::vector<Elem> images(gens.size(), 0);
  while (true) {
    std::vector<Elem> phi(n, 0);
    for (std::size_t i = 1; i < bfs.size(); ++i) phi[bfs[i]] = H.mul(phi[pred[bfs[i]]], images[via[bfs[i]]]);
    bool ok = std::set<Elem>(phi.begin(), phi.end()).size() == static_cast<std::size_t>(n);
    for (Elem a = 0; ok && a < n; ++a)
      for (Elem b = 0; ok && b < n; ++b) ok = phi[H.mul(a, b)] == H.mul(phi[a], phi[b]);
    if (ok) autos.insert(phi);
    std::size_t k = 0;
    while (k < images.size() && ++images[k] == n) images[k++] = 0;
    if (k == images.size()) break;
  }
  const std::vector<std::vector<Elem>> sorted(autos.begin(), autos.end());
  std::map<std::vector<Elem>, Elem> index;
  for (Elem i = 0; i < static_cast<Elem>(sorted.size()); ++i) index[sorted[i]] = i;
  const int na = static_cast<int>(sorted.size());
  std::vector<std::vector<Elem>> table(na, std::vector<Elem>(na));
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < na; ++b) {
      std::vector<Elem> q(n);
      for (Elem x = 0; x < n; ++x) q[x] = sorted[a][sorted[b][x]];
      table[a][b] = index.at(q);
    }
  GroupPtr aut = FiniteGroup::validate("Aut(" + H.name() + ")", table);
  std::vector<Elem> t(n);
  for (Elem h = 0; h < n; ++h) {
    std::vector<Elem> c(n);
    for (Elem x = 0; x < n; ++x) c[x] = H.conj(h, x);
    t[h] = index.at(c);
  }
  return CrossedModule::validate("aut:" + H.name(), GroupHom::validate(hp, aut, std::move(t)),
                                 GroupAction::validate(aut, hp, sorted));
}

// ---------------------------------------------------------------------------

TwoGroupHom TwoGroupHom::validate(CrossedModule dom, CrossedModule cod, GroupHom fG, GroupHom fH) {
  if (fG.dom()->order() != dom.G()->order() || fG.cod()->order() != cod.G()->order() ||
      fH.dom()->order() != dom.H()->order() || fH.cod()->order() != cod.H()->order())
    throw Error(ErrorCode::InvalidInput, "2-group homomorphism components have the wrong groups");
  for (Elem h = 0; h < dom.H()->order(); ++h)
    if (cod.boundary(fH(h)) != fG(dom.boundary(h)))
      throw Error(ErrorCode::NotHomomorphism, "t'∘fH != fG∘t at h = " + std::to_string(h));
  for (Elem g = 0; g < dom.G()->order(); ++g)
    for (Elem h = 0; h < dom.H()->order(); ++h)
      if (fH(dom.act(g, h)) != cod.act(fG(g), fH(h)))
        throw Error(ErrorCode::NotHomomorphism, "fH(α(g)(h)) != α'(fG g)(fH h) at " + pair(g, h));
  return TwoGroupHom(std::move(dom), std::move(cod), std::move(fG), std::move(fH));
}

Elem TwoGroupHom::on_morphism(Elem b) const {
  const int ng = dom_.G()->order();
  return encode_pair(fH_(pair_first(b, ng)), fG_(pair_second(b, ng)), cod_.G()->order());
}

namespace {

void check_row(Report& report, const std::string& row, const GroupHom& left, const GroupHom& right) {
  report.checks.push_back({row + " left injective", left.injective(), ""});
  report.checks.push_back({row + " right surjective", right.surjective(), ""});
  const auto image = hom_kernel_image(left).image;
  const auto kernel = hom_kernel_image(right).kernel;
  CheckItem exact{row + " image = kernel", image == kernel, ""};
  if (!exact.ok)
    exact.detail = "|image| = " + std::to_string(image.size()) + ", |kernel| = " + std::to_string(kernel.size());
  report.checks.push_back(exact);
}

void check_square(Report& report, const std::string& label, const TwoGroupHom& f) {
  CheckItem item{label + " square t∘fH = fG∘t", true, ""};
  for (Elem h = 0; h < f.dom().H()->order() && item.ok; ++h)
    if (f.cod().boundary(f.fH()(h)) != f.fG()(f.dom().boundary(h))) {
      item.ok = false;
      item.detail = "h = " + std::to_string(h);
    }
  report.checks.push_back(item);
}

}  // namespace

Report validate_ses(const CrossedModuleSES& ses) {
  Report report;
  report.suite = "ses";
  report.checks.push_back({"middle terms agree", ses.left.cod().same_as(ses.right.dom()), ""});
  check_square(report, "left", ses.left);
  check_square(report, "right", ses.right);
  check_row(report, "H-row", ses.left.fH(), ses.right.fH());
  check_row(report, "G-row", ses.left.fG(), ses.right.fG());
  return report;
}

HatConstruction hat_construction(const CrossedModule& xm) {
  const GroupPtr& G = xm.G();
  const GroupPtr& H = xm.H();
  const int ng = G->order();
  GroupPtr gh = semidirect_product(G, H, xm.alpha());
  std::vector<Elem> t_hat(H->order());
  for (Elem h = 0; h < H->order(); ++h) t_hat[h] = encode_pair(h, 0, ng);
  std::vector<std::vector<Elem>> perms(gh->order(), std::vector<Elem>(H->order()));
  for (Elem x = 0; x < gh->order(); ++x) {
    const Elem h = pair_first(x, ng), g = pair_second(x, ng);
    for (Elem h2 = 0; h2 < H->order(); ++h2) perms[x][h2] = xm.act(G->mul(xm.boundary(h), g), h2);
  }
  CrossedModule hat = CrossedModule::validate("hat:" + xm.name(), GroupHom::validate(H, gh, std::move(t_hat)),
                                              GroupAction::validate(gh, H, std::move(perms)));

  std::vector<Elem> f(H->order());
  for (Elem h = 0; h < H->order(); ++h) f[h] = encode_pair(H->inv(h), xm.boundary(h), ng);
  std::vector<Elem> f_prime(gh->order());
  for (Elem x = 0; x < gh->order(); ++x) f_prime[x] = G->mul(xm.boundary(pair_first(x, ng)), pair_second(x, ng));

  CrossedModule sub = discrete_two_group(H);
  TwoGroupHom left = TwoGroupHom::validate(sub, hat, GroupHom::validate(H, gh, std::move(f)),
                                           GroupHom::trivial(sub.H(), H));
  TwoGroupHom right = TwoGroupHom::validate(hat, xm, GroupHom::validate(gh, G, std::move(f_prime)), GroupHom::identity(H));
  HatConstruction out{hat, CrossedModuleSES{std::move(left), std::move(right)}};
  const Report report = validate_ses(out.ses);
  if (!report.ok()) throw Error(ErrorCode::NotExact, "hat sequence failed exactness");
  return out;
}

TwoGroup segal_bar_two_group(const GroupPtr& h) {
  const int n = h->order();
  GroupPtr mor = direct_product(h, h);
  std::vector<Elem> src(n * n), tgt(n * n), unit(n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      src[a * n + b] = a;
      tgt[a * n + b] = b;
    }
  for (Elem a = 0; a < n; ++a) unit[a] = a * n + a;
  return TwoGroup::validate(h, mor, GroupHom::validate(mor, h, std::move(src)), GroupHom::validate(mor, h, std::move(tgt)),
                            GroupHom::validate(h, mor, std::move(unit)));
}

TwoGroup semidirect_two_group(const TwoGroup& bar_h, const GroupAction& alpha) {
  const GroupPtr& G = alpha.actor();
  const GroupPtr& H = alpha.target();
  const int ng = G->order(), nh = H->order();
  if (bar_h.ob()->order() != nh || bar_h.mor()->order() != nh * nh)
    throw Error(ErrorCode::InvalidInput, "bar 2-group does not match the acted-on group");
  GroupPtr ob = semidirect_product(G, H, alpha);
  std::vector<std::vector<Elem>> diag(ng, std::vector<Elem>(nh * nh));
  for (Elem g = 0; g < ng; ++g)
    for (Elem a = 0; a < nh; ++a)
      for (Elem b = 0; b < nh; ++b) diag[g][a * nh + b] = alpha(g, a) * nh + alpha(g, b);
  GroupAction diagonal = GroupAction::validate(G, bar_h.mor(), std::move(diag));
  GroupPtr mor = semidirect_product(G, bar_h.mor(), diagonal);
  std::vector<Elem> src(mor->order()), tgt(mor->order()), unit(ob->order());
  for (Elem m = 0; m < mor->order(); ++m) {
    const Elem x = pair_first(m, ng), g = pair_second(m, ng);
    src[m] = encode_pair(bar_h.src()(x), g, ng);
    tgt[m] = encode_pair(bar_h.tgt()(x), g, ng);
  }
  for (Elem o = 0; o < ob->order(); ++o) unit[o] = encode_pair(bar_h.unit()(pair_first(o, ng)), pair_second(o, ng), ng);
  return TwoGroup::validate(ob, mor, GroupHom::validate(mor, ob, std::move(src)), GroupHom::validate(mor, ob, std::move(tgt)),
                            GroupHom::validate(ob, mor, std::move(unit)));
}

namespace {

[[noreturn]] void iso_fail(const std::string& what) { throw Error(ErrorCode::IsoCheckFailed, what); }

void require_bijective(const std::vector<Elem>& map, int n, const std::string& what) {
  if (static_cast<int>(map.size()) != n || std::set<Elem>(map.begin(), map.end()).size() != static_cast<std::size_t>(n))
    iso_fail(what + " is not bijective");
}

}  // namespace

TwoGroupIso iso_hat_check(const CrossedModule& xm) {
  const HatConstruction hc = hat_construction(xm);
  TwoGroup from = two_group_from_crossed_module(hc.hat);
  TwoGroup to = semidirect_two_group(segal_bar_two_group(xm.H()), xm.alpha());
  const FiniteGroup& H = *xm.H();
  const int ng = xm.G()->order(), nh = H.order(), ngh = ng * nh;

  std::vector<Elem> ob_map(from.ob()->order());
  std::iota(ob_map.begin(), ob_map.end(), 0);
  std::vector<Elem> mor_map(from.mor()->order());
  for (Elem m = 0; m < from.mor()->order(); ++m) {
    const Elem h2 = pair_first(m, ngh), x = pair_second(m, ngh);
    const Elem h = pair_first(x, ng), g = pair_second(x, ng);
    mor_map[m] = encode_pair(h * nh + H.mul(h2, h), g, ng);
  }
  require_bijective(ob_map, to.ob()->order(), "object map");
  require_bijective(mor_map, to.mor()->order(), "morphism map");

  const FiniteGroup& fo = *from.ob();
  const FiniteGroup& fm = *from.mor();
  for (Elem a = 0; a < fo.order(); ++a)
    for (Elem b = 0; b < fo.order(); ++b)
      if (ob_map[fo.mul(a, b)] != to.ob()->mul(ob_map[a], ob_map[b])) iso_fail("object map not a homomorphism at " + pair(a, b));
  for (Elem a = 0; a < fm.order(); ++a)
    for (Elem b = 0; b < fm.order(); ++b)
      if (mor_map[fm.mul(a, b)] != to.mor()->mul(mor_map[a], mor_map[b]))
        iso_fail("morphism map not a homomorphism at " + pair(a, b));
  for (Elem m = 0; m < fm.order(); ++m) {
    if (to.src()(mor_map[m]) != ob_map[from.src()(m)]) iso_fail("src not preserved at " + std::to_string(m));
    if (to.tgt()(mor_map[m]) != ob_map[from.tgt()(m)]) iso_fail("tgt not preserved at " + std::to_string(m));
  }
  for (Elem o = 0; o < fo.order(); ++o)
    if (to.unit()(ob_map[o]) != mor_map[from.unit()(o)]) iso_fail("unit not preserved at " + std::to_string(o));
  for (Elem b1 = 0; b1 < fm.order(); ++b1)
    for (Elem b2 = 0; b2 < fm.order(); ++b2)
      if (from.composable(b1, b2) && mor_map[from.compose(b2, b1)] != to.compose(mor_map[b2], mor_map[b1]))
        iso_fail("composition not preserved at " + pair(b1, b2));

  CrossedModule to_xm = crossed_module_from_two_group(to, "semidirect-bar:" + xm.name());
  std::vector<Elem> to_kernel;
  for (Elem m = 0; m < to.mor()->order(); ++m)
    if (to.src()(m) == 0) to_kernel.push_back(m);
  std::vector<Elem> fH(nh);
  for (Elem h = 0; h < nh; ++h) {
    const Elem image = mor_map[make_bigon(hc.hat, h, 0)];
    const auto it = std::find(to_kernel.begin(), to_kernel.end(), image);
    if (it == to_kernel.end()) iso_fail("kernel of src not preserved at h = " + std::to_string(h));
    fH[h] = static_cast<Elem>(it - to_kernel.begin());
  }
  TwoGroupHom hom = TwoGroupHom::validate(hc.hat, to_xm, GroupHom::validate(hc.hat.G(), to_xm.G(), ob_map),
                                          GroupHom::validate(hc.hat.H(), to_xm.H(), std::move(fH)));
  return TwoGroupIso{std::move(from), std::move(to), std::move(ob_map), std::move(mor_map), std::move(hom)};
}

}  // namespace cech2

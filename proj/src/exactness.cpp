#include "cech2/exactness.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cech2/error.hpp"

namespace cech2 {

namespace {

std::vector<Elem> min_preimages(const GroupHom& p) {
  std::vector<Elem> out(p.cod()->order(), -1);
  for (Elem x = p.dom()->order() - 1; x >= 0; --x) out[p(x)] = x;
  return out;
}

// Preimage table of an injective map, -1 off the image.
std::vector<Elem> pullback_table(const GroupHom& f) {
  std::vector<Elem> out(f.cod()->order(), -1);
  for (Elem x = 0; x < f.dom()->order(); ++x) out[f(x)] = x;
  return out;
}

Classification classify_in(const SimplicialComplex& complex, const CrossedModule& xm, const Budget& budget,
                           bool witnesses = false) {
  auto setting = std::make_shared<const CechSetting>(complex, xm);
  return classify(std::make_shared<const CocycleSpace>(CocycleSpace::enumerate(setting, budget)),
                  ClassifyOptions{witnesses});
}

std::string ids(const std::vector<std::size_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

// Induced map on classes; the first cocycle whose image leaves its class is
// returned in `broken`.
struct ClassMap {
  std::vector<std::uint32_t> on_class;
  std::optional<std::size_t> broken;
  std::optional<std::size_t> invalid;
};

ClassMap induced(const Classification& from, const Classification& to, const TwoGroupHom& hom) {
  ClassMap out;
  out.on_class.assign(from.class_count(), 0);
  std::vector<char> set(from.class_count(), 0);
  const CocycleSpace& space = from.space();
  for (std::size_t id = 0; id < space.size(); ++id) {
    const Cocycle image = pushforward_cocycle(hom, space.at(id));
    if (!to.space().setting().validate(image)) {
      if (!out.invalid) out.invalid = id;
      continue;
    }
    const std::uint32_t cls = from.class_of(id);
    const std::uint32_t img = to.class_of(image);
    if (!set[cls]) {
      set[cls] = 1;
      out.on_class[cls] = img;
    } else if (out.on_class[cls] != img && !out.broken) {
      out.broken = id;
    }
  }
  return out;
}

}  // namespace

GroupSES GroupSES::validate(GroupHom inclusion, GroupHom projection, std::optional<std::vector<Elem>> section) {
  if (inclusion.cod()->order() != projection.dom()->order() || inclusion.cod()->table() != projection.dom()->table())
    throw Error(ErrorCode::NotExact, "inclusion and projection do not share the middle group");
  if (!inclusion.injective()) throw Error(ErrorCode::NotExact, "inclusion is not injective");
  if (!projection.surjective()) throw Error(ErrorCode::NotExact, "projection is not surjective");
  std::vector<Elem> image = hom_kernel_image(inclusion).image;
  std::vector<Elem> kernel = hom_kernel_image(projection).kernel;
  std::sort(image.begin(), image.end());
  std::sort(kernel.begin(), kernel.end());
  if (image != kernel) throw Error(ErrorCode::NotExact, "image of the inclusion differs from the kernel of the projection");
  std::vector<Elem> s = section ? std::move(*section) : min_preimages(projection);
  const int nk = projection.cod()->order();
  if (static_cast<int>(s.size()) != nk) throw Error(ErrorCode::InvalidInput, "section has the wrong length");
  for (Elem x = 0; x < nk; ++x) {
    if (s[x] < 0 || s[x] >= projection.dom()->order())
      throw Error(ErrorCode::EntryOutOfRange, "section entry " + std::to_string(s[x]));
    if (projection(s[x]) != x) throw Error(ErrorCode::InvalidInput, "section is not a right inverse at " + std::to_string(x));
  }
  if (s[0] != 0) throw Error(ErrorCode::InvalidInput, "section must send 1 to 1");
  return GroupSES(std::move(inclusion), std::move(projection), std::move(s));
}

GroupSES GroupSES::with_section(std::vector<Elem> section) const {
  return validate(inclusion_, projection_, std::move(section));
}

CrossedModule GroupSES::crossed_module() const {
  const FiniteGroup& g = *G();
  const std::vector<Elem> back = pullback_table(inclusion_);
  std::vector<std::vector<Elem>> perms(g.order(), std::vector<Elem>(H()->order()));
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem h = 0; h < H()->order(); ++h) perms[x][h] = back[g.conj(x, inclusion_(h))];
  return CrossedModule::validate(H()->name() + "->" + G()->name(), inclusion_,
                                 GroupAction::validate(G(), H(), std::move(perms)));
}

TwoGroupHom GroupSES::to_quotient() const {
  const CrossedModule q = quotient();
  return TwoGroupHom::validate(crossed_module(), q, projection_, GroupHom::trivial(H(), q.H()));
}

std::vector<std::vector<Elem>> all_sections(const GroupHom& projection) {
  const int nk = projection.cod()->order();
  std::vector<std::vector<Elem>> fibers(nk);
  for (Elem x = 0; x < projection.dom()->order(); ++x) fibers[projection(x)].push_back(x);
  fibers[0] = {0};
  std::vector<std::vector<Elem>> out;
  std::vector<std::size_t> pick(nk, 0);
  while (true) {
    std::vector<Elem> s(nk);
    for (int i = 0; i < nk; ++i) s[i] = fibers[i][pick[i]];
    out.push_back(std::move(s));
    int i = nk - 1;
    while (i >= 0 && ++pick[i] == fibers[i].size()) pick[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

Cocycle pushforward_cocycle(const TwoGroupHom& hom, const Cocycle& c) {
  Cocycle out;
  out.g.reserve(c.g.size());
  out.h.reserve(c.h.size());
  for (Elem g : c.g) out.g.push_back(hom.fG()(g));
  for (Elem h : c.h) out.h.push_back(hom.fH()(h));
  return out;
}

Cocycle lemma2_alpha(const Cocycle& c, const GroupSES& ses) {
  Cocycle out;
  for (Elem g : c.g) out.g.push_back(ses.projection()(g));
  out.h.assign(c.h.size(), 0);
  return out;
}

Cocycle lemma2_beta(const Cocycle& k, const GroupSES& ses, const SimplicialComplex& complex) {
  const FiniteGroup& G = *ses.G();
  const std::vector<Elem> back = pullback_table(ses.inclusion());
  Cocycle out;
  for (Elem x : k.g) out.g.push_back(ses.section()[x]);
  for (const Simplex& t : complex.simplices_of_dim(2)) {
    const Elem gij = out.g[*complex.index_of({t[0], t[1]})];
    const Elem gjk = out.g[*complex.index_of({t[1], t[2]})];
    const Elem gik = out.g[*complex.index_of({t[0], t[2]})];
    const Elem defect = G.mul(gik, G.inv(G.mul(gij, gjk)));
    if (back[defect] < 0)
      throw Error(ErrorCode::DefectNotInKernel, "triangle " + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                                                    std::to_string(t[2]) + " has defect " + std::to_string(defect));
    out.h.push_back(back[defect]);
  }
  return out;
}

Report verify_lemma2(const GroupSES& ses, const SimplicialComplex& complex, const Budget& budget) {
  Report report;
  report.suite = "lemma2";
  const CrossedModule xm = ses.crossed_module();
  const Classification A = classify_in(complex, xm, budget);
  const Classification B = classify_in(complex, ses.quotient(), budget);
  report.figures["classes_H_to_G"] = static_cast<std::int64_t>(A.class_count());
  report.figures["classes_K"] = static_cast<std::int64_t>(B.class_count());
  report.figures["cocycles_H_to_G"] = static_cast<std::int64_t>(A.space().size());
  report.figures["cocycles_K"] = static_cast<std::int64_t>(B.space().size());

  // α∗
  const ClassMap alpha = induced(A, B, ses.to_quotient());
  report.add("alpha output valid", !alpha.invalid, alpha.invalid ? "cocycle " + std::to_string(*alpha.invalid) : "");
  report.add("alpha well-defined on classes", !alpha.broken, alpha.broken ? "cocycle " + std::to_string(*alpha.broken) : "");

  // β
  std::vector<std::uint32_t> beta(B.class_count(), 0);
  std::vector<char> set(B.class_count(), 0);
  std::optional<std::size_t> beta_invalid, beta_broken, beta_defect;
  for (std::size_t id = 0; id < B.space().size(); ++id) {
    Cocycle lifted;
    try {
      lifted = lemma2_beta(B.space().at(id), ses, complex);
    } catch (const Error&) {
      if (!beta_defect) beta_defect = id;
      continue;
    }
    if (!A.space().setting().validate(lifted)) {
      if (!beta_invalid) beta_invalid = id;
      continue;
    }
    const std::uint32_t cls = B.class_of(id), img = A.class_of(lifted);
    if (!set[cls]) {
      set[cls] = 1;
      beta[cls] = img;
    } else if (beta[cls] != img && !beta_broken) {
      beta_broken = id;
    }
  }
  report.add("beta defect lies in H", !beta_defect, beta_defect ? "K-cocycle " + std::to_string(*beta_defect) : "");
  report.add("beta output valid", !beta_invalid, beta_invalid ? "K-cocycle " + std::to_string(*beta_invalid) : "");
  report.add("beta well-defined on classes", !beta_broken, beta_broken ? "K-cocycle " + std::to_string(*beta_broken) : "");

  std::vector<std::size_t> bad;
  for (std::size_t j = 0; j < B.class_count(); ++j)
    if (alpha.on_class[beta[j]] != j) bad.push_back(j);
  report.add("alpha after beta is the identity on K-classes", bad.empty(), bad.empty() ? "" : "classes " + ids(bad));
  bad.clear();
  for (std::size_t i = 0; i < A.class_count(); ++i)
    if (beta[alpha.on_class[i]] != i) bad.push_back(i);
  report.add("beta after alpha is the identity on H->G classes", bad.empty(), bad.empty() ? "" : "classes " + ids(bad));

  // Lifting α(c) by c's own edge values recovers c, because t is injective.
  std::optional<std::size_t> not_recovered;
  const FiniteGroup& G = *ses.G();
  const std::vector<Elem> back = pullback_table(ses.inclusion());
  const CechSetting& st = A.space().setting();
  for (std::size_t id = 0; id < A.space().size() && !not_recovered; ++id) {
    const Cocycle c = A.space().at(id);
    for (int t = 0; t < st.triangles(); ++t) {
      const auto& e = st.triangle_edges(t);
      const Elem defect = G.mul(c.g[e[2]], G.inv(G.mul(c.g[e[0]], c.g[e[1]])));
      if (back[defect] != c.h[t]) {
        not_recovered = id;
        break;
      }
    }
  }
  report.add("own edge values lift back to the cocycle", !not_recovered,
             not_recovered ? "cocycle " + std::to_string(*not_recovered) : "");
  report.add("class counts equal", A.class_count() == B.class_count(),
             std::to_string(A.class_count()) + " vs " + std::to_string(B.class_count()));
  report.add("base class preserved", alpha.on_class[A.base_class()] == B.base_class() && beta[B.base_class()] == A.base_class());
  return report;
}

Report lemma2_section_independence(const GroupSES& ses, const SimplicialComplex& complex, const Budget& budget) {
  Report report;
  report.suite = "lemma2-sections";
  const Classification A = classify_in(complex, ses.crossed_module(), budget);
  const std::vector<Cocycle> ks = enumerate_cocycles(complex, ses.quotient(), budget);
  const auto sections = all_sections(ses.projection());
  report.figures["sections"] = static_cast<std::int64_t>(sections.size());
  std::vector<std::uint32_t> reference;
  for (const Cocycle& k : ks) reference.push_back(A.class_of(lemma2_beta(k, ses, complex)));
  for (const auto& sec : sections) {
    const GroupSES other = ses.with_section(sec);
    std::optional<std::size_t> differs;
    for (std::size_t i = 0; i < ks.size() && !differs; ++i) {
      const Cocycle lifted = lemma2_beta(ks[i], other, complex);
      if (!A.space().setting().validate(lifted) || A.class_of(lifted) != reference[i]) differs = i;
    }
    std::string name = "section";
    for (Elem x : sec) name += " " + std::to_string(x);
    report.add(name, !differs, differs ? "K-cocycle " + std::to_string(*differs) : "");
  }
  return report;
}

std::optional<CoboundaryWitness> trivialization_witness(const CechSetting& setting, const Cocycle& c,
                                                        const Budget& budget) {
  return cohomologous_check(setting, c, setting.trivial_cocycle(), budget);
}

SesSections default_sections(const CrossedModuleSES& ses) {
  return SesSections{min_preimages(ses.right.fG()), min_preimages(ses.right.fH())};
}

KernelLift lemma3_kernel_lift(const CechSetting& middle, const Cocycle& c, const CrossedModuleSES& ses,
                              const CoboundaryWitness& w, const SesSections& sections) {
  const CrossedModule& x1 = middle.coefficients();
  const CrossedModule& x2 = ses.right.cod();
  const FiniteGroup& G1 = *x1.G();
  const FiniteGroup& G2 = *x2.G();
  const int nv = middle.vertices(), ne = middle.edges();

  // Switch to x_i = f_i^-1, ξ_ij = α(f_i^-1)(k_ij), then lift.
  std::vector<Elem> xh(nv), xih(ne);
  for (int v = 0; v < nv; ++v) xh[v] = sections.G[G2.inv(w.f[v])];
  for (int e = 0; e < ne; ++e) xih[e] = sections.H[x2.act(G2.inv(w.f[middle.edge(e)[0]]), w.k[e])];

  KernelLift out;
  CoboundaryWitness lifted{std::vector<Elem>(nv), std::vector<Elem>(ne)};
  for (int v = 0; v < nv; ++v) lifted.f[v] = G1.inv(xh[v]);
  out.gamma.resize(ne);
  for (int e = 0; e < ne; ++e) {
    const auto [i, j] = middle.edge(e);
    out.gamma[e] = G1.mul(G1.mul(G1.mul(xh[i], c.g[e]), G1.inv(xh[j])), x1.boundary(xih[e]));
    lifted.k[e] = x1.act(G1.mul(c.g[e], G1.inv(xh[j])), xih[e]);
  }
  const Cocycle moved = middle.apply(c, lifted);
  if (moved.g != out.gamma)
    throw Error(ErrorCode::InvalidInput, "lifted witness disagrees with the gamma formula");

  const GroupHom& pG = ses.right.fG();
  const GroupHom& pH = ses.right.fH();
  const std::vector<Elem> backG = pullback_table(ses.left.fG());
  const std::vector<Elem> backH = pullback_table(ses.left.fH());
  for (int e = 0; e < ne; ++e)
    if (pG(moved.g[e]) != 0 || backG[moved.g[e]] < 0)
      throw Error(ErrorCode::ValuesNotInKernel, "gamma on edge " + std::to_string(e) + " = " + std::to_string(moved.g[e]));
  for (int t = 0; t < middle.triangles(); ++t)
    if (pH(moved.h[t]) != 0 || backH[moved.h[t]] < 0)
      throw Error(ErrorCode::ValuesNotInKernel, "c on triangle " + std::to_string(t) + " = " + std::to_string(moved.h[t]));
  for (Elem g : moved.g) out.lifted.g.push_back(backG[g]);
  for (Elem h : moved.h) out.lifted.h.push_back(backH[h]);
  out.witness = std::move(lifted);
  return out;
}

Report verify_lemma3(const CrossedModuleSES& ses, const SimplicialComplex& complex, const Budget& budget) {
  Report report;
  report.suite = "lemma3";
  const Report rows = validate_ses(ses);
  report.add("sequence exact", rows.ok(), rows.first_failure() ? rows.first_failure()->name : "");
  if (!rows.ok()) return report;

  const Classification C0 = classify_in(complex, ses.left.dom(), budget);
  const Classification C1 = classify_in(complex, ses.left.cod(), budget);
  const Classification C2 = classify_in(complex, ses.right.cod(), budget);
  report.figures["classes_0"] = static_cast<std::int64_t>(C0.class_count());
  report.figures["classes_1"] = static_cast<std::int64_t>(C1.class_count());
  report.figures["classes_2"] = static_cast<std::int64_t>(C2.class_count());

  const ClassMap f = induced(C0, C1, ses.left);
  const ClassMap p = induced(C1, C2, ses.right);
  report.add("f* preserves validity", !f.invalid, f.invalid ? "cocycle " + std::to_string(*f.invalid) : "");
  report.add("f* descends to classes", !f.broken, f.broken ? "cocycle " + std::to_string(*f.broken) : "");
  report.add("p* preserves validity", !p.invalid, p.invalid ? "cocycle " + std::to_string(*p.invalid) : "");
  report.add("p* descends to classes", !p.broken, p.broken ? "cocycle " + std::to_string(*p.broken) : "");
  report.add("f* sends base to base", f.on_class[C0.base_class()] == C1.base_class());
  report.add("p* sends base to base", p.on_class[C1.base_class()] == C2.base_class());

  std::set<std::size_t> image;
  for (std::uint32_t cls : f.on_class) image.insert(cls);

  const CechSetting& s1 = C1.space().setting();
  const CechSetting& s2 = C2.space().setting();
  const SesSections sections = default_sections(ses);
  std::set<std::size_t> kernel, kernel_by_orbit;
  std::vector<std::size_t> lift_failures, lift_wrong_class;
  for (std::size_t cls = 0; cls < C1.class_count(); ++cls) {
    if (p.on_class[cls] == C2.base_class()) kernel_by_orbit.insert(cls);
    const Cocycle c = C1.representative(cls);
    const auto w = trivialization_witness(s2, pushforward_cocycle(ses.right, c), budget);
    if (!w) continue;
    kernel.insert(cls);
    try {
      const KernelLift lift = lemma3_kernel_lift(s1, c, ses, *w, sections);
      const Cocycle pushed = pushforward_cocycle(ses.left, lift.lifted);
      if (!C0.space().setting().validate(lift.lifted) || s1.apply(c, lift.witness) != pushed ||
          C1.class_of(pushed) != cls)
        lift_wrong_class.push_back(cls);
    } catch (const Error&) {
      lift_failures.push_back(cls);
    }
  }
  report.figures["image_f"] = static_cast<std::int64_t>(image.size());
  report.figures["kernel_p"] = static_cast<std::int64_t>(kernel.size());
  report.add("trivialization search agrees with orbit classification", kernel == kernel_by_orbit);
  report.add("every kernel class lifts", lift_failures.empty(), lift_failures.empty() ? "" : "classes " + ids(lift_failures));
  report.add("lifts push forward to their class", lift_wrong_class.empty(),
             lift_wrong_class.empty() ? "" : "classes " + ids(lift_wrong_class));
  std::vector<std::size_t> im(image.begin(), image.end()), ker(kernel.begin(), kernel.end());
  report.add("image of f* equals kernel of p*", image == kernel, "image " + ids(im) + ", kernel " + ids(ker));
  return report;
}

GroupSES ses_z2_z4_z2() {
  GroupPtr z2 = cyclic_group(2), z4 = cyclic_group(4);
  return GroupSES::validate(GroupHom::validate(z2, z4, {0, 2}), GroupHom::validate(z4, z2, {0, 1, 0, 1}));
}

GroupSES ses_z3_z3_trivial() {
  GroupPtr z3 = cyclic_group(3);
  return GroupSES::validate(GroupHom::identity(z3), GroupHom::trivial(z3, cyclic_group(1)));
}

CrossedModuleSES discrete_ses(const GroupSES& ses) {
  const CrossedModule a = discrete_two_group(ses.H());
  const CrossedModule b = discrete_two_group(ses.G());
  const CrossedModule c = discrete_two_group(ses.K());
  return CrossedModuleSES{TwoGroupHom::validate(a, b, ses.inclusion(), GroupHom::identity(a.H())),
                          TwoGroupHom::validate(b, c, ses.projection(), GroupHom::identity(b.H()))};
}

}  // namespace cech2

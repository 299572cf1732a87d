#include "cech2/cohomology.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace cech2 {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();
constexpr std::uint64_t kDenseIndexLimit = std::uint64_t{1} << 26;

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r = saturating_mul(r, base);
  return r;
}

std::string budget_message(const char* what, std::uint64_t need, std::uint64_t cap) {
  return std::string(what) + " space " + (need == kSaturated ? std::string("> 2^64") : std::to_string(need)) +
         " exceeds budget " + std::to_string(cap);
}

}  // namespace

// ---------------------------------------------------------------------------

CechSetting::CechSetting(SimplicialComplex complex, CrossedModule xm) : complex_(std::move(complex)), xm_(std::move(xm)) {
  for (const Simplex& s : complex_.simplices_of_dim(1)) edges_.push_back({s[0], s[1]});
  for (const Simplex& s : complex_.simplices_of_dim(2))
    tri_edges_.push_back({edge_index(s[0], s[1]), edge_index(s[1], s[2]), edge_index(s[0], s[2])});
  for (const Simplex& s : complex_.simplices_of_dim(3)) {
    auto tri = [&](int a, int b, int c) { return *complex_.index_of({s[a], s[b], s[c]}); };
    tet_faces_.push_back({tri(0, 1, 2), tri(0, 1, 3), tri(0, 2, 3), tri(1, 2, 3)});
    tet_edge_ij_.push_back(edge_index(s[0], s[1]));
  }
}

int CechSetting::edge_index(int i, int j) const {
  const auto idx = complex_.index_of({i, j});
  if (!idx) throw Error(ErrorCode::InvalidInput, "no edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
  return *idx;
}

bool CechSetting::shape_ok(const Cocycle& c) const {
  if (static_cast<int>(c.g.size()) != edges() || static_cast<int>(c.h.size()) != triangles()) return false;
  const int ng = xm_.G()->order(), nh = xm_.H()->order();
  return std::all_of(c.g.begin(), c.g.end(), [ng](Elem x) { return x >= 0 && x < ng; }) &&
         std::all_of(c.h.begin(), c.h.end(), [nh](Elem x) { return x >= 0 && x < nh; });
}

CocycleReport CechSetting::validate(const Cocycle& c) const {
  CocycleReport report;
  if (!shape_ok(c)) {
    report.ok = false;
    report.violation = ErrorCode::InvalidInput;
    report.detail = "cocycle does not match the complex or the coefficient groups";
    return report;
  }
  const FiniteGroup& G = *xm_.G();
  const FiniteGroup& H = *xm_.H();
  for (int t = 0; t < triangles(); ++t) {
    const auto [ij, jk, ik] = tri_edges_[t];
    if (G.mul(xm_.boundary(c.h[t]), G.mul(c.g[ij], c.g[jk])) != c.g[ik]) {
      report.ok = false;
      report.violation = ErrorCode::TriangleViolation;
      report.simplex = complex_.simplices_of_dim(2)[t];
      return report;
    }
  }
  for (int q = 0; q < tetrahedra(); ++q) {
    const auto [ijk, ijl, ikl, jkl] = tet_faces_[q];
    const Elem lhs = H.mul(xm_.act(c.g[tet_edge_ij_[q]], c.h[jkl]), c.h[ijl]);
    if (lhs != H.mul(c.h[ijk], c.h[ikl])) {
      report.ok = false;
      report.violation = ErrorCode::TetrahedronViolation;
      report.simplex = complex_.simplices_of_dim(3)[q];
      return report;
    }
  }
  return report;
}

Cocycle CechSetting::trivial_cocycle() const {
  return Cocycle{std::vector<Elem>(edges(), 0), std::vector<Elem>(triangles(), 0)};
}

CoboundaryWitness CechSetting::identity_witness() const {
  return CoboundaryWitness{std::vector<Elem>(vertices(), 0), std::vector<Elem>(edges(), 0)};
}

Cocycle CechSetting::apply(const Cocycle& c, const CoboundaryWitness& w) const {
  const FiniteGroup& G = *xm_.G();
  const FiniteGroup& H = *xm_.H();
  Cocycle out{std::vector<Elem>(edges()), std::vector<Elem>(triangles())};
  for (int e = 0; e < edges(); ++e) {
    const auto [i, j] = edges_[e];
    out.g[e] = G.mul(G.mul(G.inv(w.f[i]), xm_.boundary(w.k[e])), G.mul(c.g[e], w.f[j]));
  }
  for (int t = 0; t < triangles(); ++t) {
    const auto [ij, jk, ik] = tri_edges_[t];
    const int i = edges_[ij][0];
    Elem x = H.mul(w.k[ik], c.h[t]);
    x = H.mul(x, H.inv(xm_.act(c.g[ij], w.k[jk])));
    x = H.mul(x, H.inv(w.k[ij]));
    out.h[t] = xm_.act(G.inv(w.f[i]), x);
  }
  return out;
}

CoboundaryWitness CechSetting::compose(const CoboundaryWitness& first, const CoboundaryWitness& second) const {
  const FiniteGroup& G = *xm_.G();
  const FiniteGroup& H = *xm_.H();
  CoboundaryWitness out{std::vector<Elem>(vertices()), std::vector<Elem>(edges())};
  for (int v = 0; v < vertices(); ++v) out.f[v] = G.mul(first.f[v], second.f[v]);
  for (int e = 0; e < edges(); ++e) out.k[e] = H.mul(xm_.act(first.f[edges_[e][0]], second.k[e]), first.k[e]);
  return out;
}

CoboundaryWitness CechSetting::inverse(const CoboundaryWitness& w) const {
  const FiniteGroup& G = *xm_.G();
  const FiniteGroup& H = *xm_.H();
  CoboundaryWitness out{std::vector<Elem>(vertices()), std::vector<Elem>(edges())};
  for (int v = 0; v < vertices(); ++v) out.f[v] = G.inv(w.f[v]);
  for (int e = 0; e < edges(); ++e) out.k[e] = xm_.act(G.inv(w.f[edges_[e][0]]), H.inv(w.k[e]));
  return out;
}

std::uint64_t CechSetting::cocycle_candidates() const {
  return saturating_mul(saturating_pow(xm_.G()->order(), edges()), saturating_pow(xm_.H()->order(), triangles()));
}

std::uint64_t CechSetting::witness_count() const {
  return saturating_mul(saturating_pow(xm_.G()->order(), vertices()), saturating_pow(xm_.H()->order(), edges()));
}

CocycleReport validate_cocycle(const Cocycle& c, const SimplicialComplex& complex, const CrossedModule& xm) {
  return CechSetting(complex, xm).validate(c);
}

Cocycle trivial_cocycle(const SimplicialComplex& complex, const CrossedModule& xm) {
  return CechSetting(complex, xm).trivial_cocycle();
}

Cocycle apply_coboundary(const Cocycle& c, const CoboundaryWitness& w, const SimplicialComplex& complex,
                         const CrossedModule& xm) {
  return CechSetting(complex, xm).apply(c, w);
}

// ---------------------------------------------------------------------------

CocycleSpace CocycleSpace::enumerate(SettingPtr setting, const Budget& budget) {
  const CechSetting& s = *setting;
  const std::uint64_t candidates = s.cocycle_candidates();
  if (candidates > budget.cocycles) throw Error(ErrorCode::BudgetExceeded, budget_message("cocycle", candidates, budget.cocycles));

  const CrossedModule& xm = s.coefficients();
  const FiniteGroup& G = *xm.G();
  const FiniteGroup& H = *xm.H();
  const int E = s.edges(), T = s.triangles();

  CocycleSpace space;
  space.setting_ = setting;
  space.radices_.assign(E, G.order());
  space.radices_.insert(space.radices_.end(), T, H.order());
  space.weights_.assign(E + T, 1);
  for (int p = E + T - 2; p >= 0; --p) space.weights_[p] = space.weights_[p + 1] * space.radices_[p + 1];

  std::vector<Elem> g(E, 0);
  std::vector<const std::vector<Elem>*> fibers(T);
  std::vector<int> choice(T, 0);
  std::vector<Elem> h(T, 0);
  while (true) {
    bool liftable = true;
    for (int t = 0; t < T && liftable; ++t) {
      const auto [ij, jk, ik] = s.triangle_edges(t);
      const Elem defect = G.mul(g[ik], G.inv(G.mul(g[ij], g[jk])));
      fibers[t] = &xm.fiber(defect);
      liftable = !fibers[t]->empty();
    }
    if (liftable) {
      std::uint64_t g_code = 0;
      for (int e = 0; e < E; ++e) g_code += static_cast<std::uint64_t>(g[e]) * space.weights_[e];
      std::fill(choice.begin(), choice.end(), 0);
      while (true) {
        for (int t = 0; t < T; ++t) h[t] = (*fibers[t])[choice[t]];
        bool ok = true;
        for (int q = 0; q < s.tetrahedra() && ok; ++q) {
          const auto [ijk, ijl, ikl, jkl] = s.tetrahedron_faces(q);
          ok = H.mul(xm.act(g[s.tetrahedron_edge_ij(q)], h[jkl]), h[ijl]) == H.mul(h[ijk], h[ikl]);
        }
        if (ok) {
          std::uint64_t code = g_code;
          for (int t = 0; t < T; ++t) code += static_cast<std::uint64_t>(h[t]) * space.weights_[E + t];
          space.codes_.push_back(code);
        }
        int t = T - 1;
        while (t >= 0 && ++choice[t] == static_cast<int>(fibers[t]->size())) choice[t--] = 0;
        if (t < 0) break;
      }
    }
    int e = E - 1;
    while (e >= 0 && ++g[e] == G.order()) g[e--] = 0;
    if (e < 0) break;
  }

  if (candidates <= kDenseIndexLimit) {
    space.dense_index_.assign(candidates, -1);
    for (std::size_t i = 0; i < space.codes_.size(); ++i) space.dense_index_[space.codes_[i]] = static_cast<std::int32_t>(i);
  }
  return space;
}

void CocycleSpace::decode_digits(std::uint64_t code, std::vector<Elem>& digits) const {
  digits.resize(radices_.size());
  for (int p = static_cast<int>(radices_.size()) - 1; p >= 0; --p) {
    digits[p] = static_cast<Elem>(code % radices_[p]);
    code /= radices_[p];
  }
}

Cocycle CocycleSpace::at(std::size_t id) const {
  std::vector<Elem> digits;
  decode_digits(codes_.at(id), digits);
  const int E = setting_->edges();
  return Cocycle{std::vector<Elem>(digits.begin(), digits.begin() + E), std::vector<Elem>(digits.begin() + E, digits.end())};
}

std::vector<Cocycle> CocycleSpace::all() const {
  std::vector<Cocycle> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i));
  return out;
}

std::uint64_t CocycleSpace::encode(const Cocycle& c) const {
  if (!setting_->shape_ok(c)) throw Error(ErrorCode::InvalidInput, "cocycle does not fit this space");
  const int E = setting_->edges();
  std::uint64_t code = 0;
  for (int e = 0; e < E; ++e) code += static_cast<std::uint64_t>(c.g[e]) * weights_[e];
  for (std::size_t t = 0; t < c.h.size(); ++t) code += static_cast<std::uint64_t>(c.h[t]) * weights_[E + t];
  return code;
}

std::optional<std::size_t> CocycleSpace::find_code(std::uint64_t code) const {
  if (!dense_index_.empty()) {
    if (code >= dense_index_.size() || dense_index_[code] < 0) return std::nullopt;
    return static_cast<std::size_t>(dense_index_[code]);
  }
  const auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
  if (it == codes_.end() || *it != code) return std::nullopt;
  return static_cast<std::size_t>(it - codes_.begin());
}

std::optional<std::size_t> CocycleSpace::find(const Cocycle& c) const { return find_code(encode(c)); }

std::vector<Cocycle> enumerate_cocycles(const SimplicialComplex& complex, const CrossedModule& xm, const Budget& budget) {
  return CocycleSpace::enumerate(std::make_shared<const CechSetting>(complex, xm), budget).all();
}

// ---------------------------------------------------------------------------

std::optional<CoboundaryWitness> cohomologous_check(const CechSetting& s, const Cocycle& c, const Cocycle& c_prime,
                                                    const Budget& budget) {
  const std::uint64_t total = s.witness_count();
  if (total > budget.witnesses) throw Error(ErrorCode::BudgetExceeded, budget_message("witness", total, budget.witnesses));
  const FiniteGroup& G = *s.coefficients().G();
  const FiniteGroup& H = *s.coefficients().H();
  const int V = s.vertices(), E = s.edges();
  CoboundaryWitness w = s.identity_witness();
  // Edge values are fixed by (f, k) independently per edge, so reject a
  // vertex assignment early when some edge admits no k at all.
  while (true) {
    bool edges_possible = true;
    for (int e = 0; e < E && edges_possible; ++e) {
      const auto [i, j] = s.edge(e);
      // t(k) = f_i g'_ij f_j^-1 g_ij^-1
      const Elem need = G.mul(G.mul(w.f[i], c_prime.g[e]), G.inv(G.mul(c.g[e], w.f[j])));
      edges_possible = !s.coefficients().fiber(need).empty();
    }
    if (edges_possible) {
      std::fill(w.k.begin(), w.k.end(), 0);
      while (true) {
        if (s.apply(c, w) == c_prime) return w;
        int e = E - 1;
        while (e >= 0 && ++w.k[e] == H.order()) w.k[e--] = 0;
        if (e < 0) break;
      }
    }
    int v = V - 1;
    while (v >= 0 && ++w.f[v] == G.order()) w.f[v--] = 0;
    if (v < 0) break;
  }
  return std::nullopt;
}

std::optional<CoboundaryWitness> cohomologous_check(const Cocycle& c, const Cocycle& c_prime,
                                                    const SimplicialComplex& complex, const CrossedModule& xm,
                                                    const Budget& budget) {
  return cohomologous_check(CechSetting(complex, xm), c, c_prime, budget);
}

// ---------------------------------------------------------------------------

namespace {

struct Generator {
  bool at_vertex;
  int where;  // vertex or edge index
  Elem value;
};

/// Local effect of a single-vertex or single-edge witness on a decoded
/// cocycle; returns the code of the image.
class GeneratorAction {
 public:
  explicit GeneratorAction(const CocycleSpace& space) : space_(space), s_(space.setting()) {
    const int V = s_.vertices(), E = s_.edges();
    out_edges_.resize(V);
    in_edges_.resize(V);
    led_triangles_.resize(V);
    edge_roles_.resize(E);
    for (int e = 0; e < E; ++e) {
      out_edges_[s_.edge(e)[0]].push_back(e);
      in_edges_[s_.edge(e)[1]].push_back(e);
    }
    for (int t = 0; t < s_.triangles(); ++t) {
      const auto& te = s_.triangle_edges(t);
      led_triangles_[s_.edge(te[0])[0]].push_back(t);
      for (int role = 0; role < 3; ++role) edge_roles_[te[role]].push_back({t, role});
    }
  }

  std::uint64_t apply(std::uint64_t code, const std::vector<Elem>& d, const Generator& gen) const {
    const CrossedModule& xm = s_.coefficients();
    const FiniteGroup& G = *xm.G();
    const FiniteGroup& H = *xm.H();
    const int E = s_.edges();
    auto shift = [&](int pos, Elem old_v, Elem new_v) {
      code += (static_cast<std::uint64_t>(new_v) - static_cast<std::uint64_t>(old_v)) * space_.weight(pos);
    };
    if (gen.at_vertex) {
      const Elem a = gen.value, a_inv = G.inv(a);
      for (int e : out_edges_[gen.where]) shift(e, d[e], G.mul(a_inv, d[e]));
      for (int e : in_edges_[gen.where]) shift(e, d[e], G.mul(d[e], a));
      for (int t : led_triangles_[gen.where]) shift(E + t, d[E + t], xm.act(a_inv, d[E + t]));
    } else {
      const int e = gen.where;
      const Elem b = gen.value;
      shift(e, d[e], G.mul(xm.boundary(b), d[e]));
      for (const auto& [t, role] : edge_roles_[e]) {
        const Elem h = d[E + t];
        Elem h_new = h;
        if (role == 2) h_new = H.mul(b, h);                                                        // e = ik
        if (role == 1) h_new = H.mul(h, H.inv(xm.act(d[s_.triangle_edges(t)[0]], b)));             // e = jk
        if (role == 0) h_new = H.mul(h, H.inv(b));                                                 // e = ij
        shift(E + t, h, h_new);
      }
    }
    return code;
  }

 private:
  const CocycleSpace& space_;
  const CechSetting& s_;
  std::vector<std::vector<int>> out_edges_, in_edges_, led_triangles_;
  std::vector<std::vector<std::pair<int, int>>> edge_roles_;
};

}  // namespace

Classification classify(std::shared_ptr<const CocycleSpace> space_ptr, const ClassifyOptions& options) {
  const CocycleSpace& space = *space_ptr;
  const CechSetting& s = space.setting();
  const CrossedModule& xm = s.coefficients();

  std::vector<Generator> gens;
  for (int v = 0; v < s.vertices(); ++v)
    for (Elem a : generating_set(*xm.G())) gens.push_back({true, v, a});
  for (int e = 0; e < s.edges(); ++e)
    for (Elem b : generating_set(*xm.H())) gens.push_back({false, e, b});

  Classification out;
  out.space_ = space_ptr;
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  out.class_of_.assign(space.size(), kUnset);
  if (options.record_witnesses) {
    out.parent_.assign(space.size(), -1);
    out.parent_generator_.assign(space.size(), -1);
    for (const Generator& gen : gens) {
      CoboundaryWitness w = s.identity_witness();
      (gen.at_vertex ? w.f : w.k)[gen.where] = gen.value;
      out.generators_.push_back(std::move(w));
    }
  }

  const GeneratorAction action(space);
  std::vector<Elem> digits;
  std::deque<std::uint32_t> queue;
  for (std::size_t root = 0; root < space.size(); ++root) {
    if (out.class_of_[root] != kUnset) continue;
    const auto cls = static_cast<std::uint32_t>(out.classes_.size());
    std::vector<std::uint32_t> members{static_cast<std::uint32_t>(root)};
    out.class_of_[root] = cls;
    queue.push_back(static_cast<std::uint32_t>(root));
    while (!queue.empty()) {
      const std::uint32_t id = queue.front();
      queue.pop_front();
      const std::uint64_t code = space.code(id);
      space.decode_digits(code, digits);
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        const auto next = space.find_code(action.apply(code, digits, gens[gi]));
        if (!next) throw Error(ErrorCode::InvalidInput, "coboundary image left the cocycle set");
        if (out.class_of_[*next] != kUnset) continue;
        out.class_of_[*next] = cls;
        if (options.record_witnesses) {
          out.parent_[*next] = static_cast<std::int32_t>(id);
          out.parent_generator_[*next] = static_cast<std::int32_t>(gi);
        }
        members.push_back(static_cast<std::uint32_t>(*next));
        queue.push_back(static_cast<std::uint32_t>(*next));
      }
    }
    std::sort(members.begin(), members.end());
    out.classes_.push_back(std::move(members));
  }
  out.base_class_ = out.class_of_.empty() ? 0 : out.class_of_[*space.find(s.trivial_cocycle())];
  return out;
}

Classification classify_h1(const SimplicialComplex& complex, const CrossedModule& xm, const Budget& budget,
                           const ClassifyOptions& options) {
  auto setting = std::make_shared<const CechSetting>(complex, xm);
  return classify(std::make_shared<const CocycleSpace>(CocycleSpace::enumerate(setting, budget)), options);
}

std::uint32_t Classification::class_of(const Cocycle& c) const {
  const auto id = space_->find(c);
  if (!id) throw Error(ErrorCode::InvalidInput, "cocycle is not in the enumerated space");
  return class_of_[*id];
}

std::vector<std::size_t> Classification::sizes() const {
  std::vector<std::size_t> out;
  for (const auto& c : classes_) out.push_back(c.size());
  return out;
}

CoboundaryWitness Classification::witness_from_representative(std::size_t id) const {
  if (!has_witnesses()) throw Error(ErrorCode::InvalidInput, "classification was built without witnesses");
  const CechSetting& s = space_->setting();
  std::vector<int> path;
  for (std::int32_t cur = static_cast<std::int32_t>(id); parent_[cur] >= 0; cur = parent_[cur])
    path.push_back(parent_generator_[cur]);
  CoboundaryWitness w = s.identity_witness();
  for (auto it = path.rbegin(); it != path.rend(); ++it) w = s.compose(w, generators_[*it]);
  return w;
}

// ---------------------------------------------------------------------------

std::vector<std::vector<long long>> coboundary_matrix(const SimplicialComplex& complex, int k) {
  const auto& rows = complex.simplices_of_dim(k + 1);
  const auto& cols = complex.simplices_of_dim(k);
  std::vector<std::vector<long long>> m(rows.size(), std::vector<long long>(cols.size(), 0));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t i = 0; i < rows[r].size(); ++i) {
      Simplex face = rows[r];
      face.erase(face.begin() + static_cast<long>(i));
      m[r][*complex.index_of(face)] += (i % 2 == 0) ? 1 : -1;
    }
  return m;
}

std::vector<long long> integer_diagonal_form(std::vector<std::vector<long long>> a) {
  std::vector<long long> diag;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t top = 0;
  while (top < rows && top < cols) {
    // pivot: smallest nonzero absolute value in the remaining block
    long long best = 0;
    std::size_t pr = 0, pc = 0;
    for (std::size_t r = top; r < rows; ++r)
      for (std::size_t c = top; c < cols; ++c)
        if (a[r][c] != 0 && (best == 0 || std::llabs(a[r][c]) < best)) {
          best = std::llabs(a[r][c]);
          pr = r;
          pc = c;
        }
    if (best == 0) break;
    std::swap(a[top], a[pr]);
    for (auto& row : a) std::swap(row[top], row[pc]);
    bool clean = true;
    for (std::size_t r = top + 1; r < rows; ++r) {
      const long long q = a[r][top] / a[top][top];
      if (q != 0)
        for (std::size_t c = top; c < cols; ++c) a[r][c] -= q * a[top][c];
      if (a[r][top] != 0) clean = false;
    }
    for (std::size_t c = top + 1; c < cols; ++c) {
      const long long q = a[top][c] / a[top][top];
      if (q != 0)
        for (std::size_t r = top; r < rows; ++r) a[r][c] -= q * a[r][top];
      if (a[top][c] != 0) clean = false;
    }
    if (!clean) continue;  // a smaller remainder now exists; pivot again
    diag.push_back(std::llabs(a[top][top]));
    ++top;
  }
  return diag;
}

namespace {

/// |{x ∈ A : d·x = 0}|
std::uint64_t annihilated_by(const FiniteGroup& a, long long d) {
  std::uint64_t n = 0;
  for (Elem x = 0; x < a.order(); ++x)
    if (a.power(x, d) == 0) ++n;
  return n;
}

}  // namespace

std::uint64_t abelian_oracle_h2(const SimplicialComplex& complex, const GroupPtr& abelian) {
  const FiniteGroup& A = *abelian;
  if (!A.is_abelian()) throw Error(ErrorCode::NotAbelian, A.name() + " is not abelian");
  // |ker δ²| = Π_i |A[d_i]| · |A|^(T - r);  |im δ¹| = |A|^E / |ker δ¹|.
  using u128 = unsigned __int128;
  auto kernel_size = [&](int k) {
    const auto diag = integer_diagonal_form(coboundary_matrix(complex, k));
    const std::size_t n = complex.count(k);
    u128 size = 1;
    for (long long d : diag) size *= annihilated_by(A, d);
    for (std::size_t i = diag.size(); i < n; ++i) size *= static_cast<u128>(A.order());
    return size;
  };
  const u128 ker2 = kernel_size(2);
  const u128 ker1 = kernel_size(1);
  u128 cochains1 = 1;
  for (std::size_t i = 0; i < complex.count(1); ++i) cochains1 *= static_cast<u128>(A.order());
  const u128 image1 = cochains1 / ker1;
  if (image1 == 0 || ker2 % image1 != 0) throw Error(ErrorCode::InvalidInput, "inconsistent cochain counts");
  return static_cast<std::uint64_t>(ker2 / image1);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> cycle_order(const SimplicialComplex& complex) {
  const int n = complex.vertex_count();
  std::vector<std::vector<int>> adj(n);
  for (const Simplex& e : complex.simplices_of_dim(1)) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  bool ok = complex.dimension() == 1 && n >= 3;
  for (int v = 0; ok && v < n; ++v) ok = adj[v].size() == 2;
  if (!ok) throw Error(ErrorCode::NotACycle, "complex is not a cycle graph");
  for (auto& a : adj) std::sort(a.begin(), a.end());
  std::vector<int> order{0};
  int prev = 0, cur = adj[0][0];
  while (cur != 0) {
    order.push_back(cur);
    const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(order.size()) != n) throw Error(ErrorCode::NotACycle, "cycle graph is disconnected");
  return order;
}

}  // namespace

Elem holonomy(const SimplicialComplex& complex, const Cocycle& c, const CrossedModule& discrete) {
  if (discrete.H()->order() != 1) throw Error(ErrorCode::InvalidInput, "holonomy needs discrete coefficients");
  const std::vector<int> order = cycle_order(complex);
  const FiniteGroup& G = *discrete.G();
  Elem product = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int u = order[i], v = order[(i + 1) % order.size()];
    const Elem step = u < v ? c.g[*complex.index_of({u, v})] : G.inv(c.g[*complex.index_of({v, u})]);
    product = G.mul(product, step);
  }
  return product;
}

int holonomy_oracle(const SimplicialComplex& complex, const Cocycle& c, const CrossedModule& discrete) {
  const Elem x = holonomy(complex, c, discrete);
  const auto classes = conjugacy_classes(*discrete.G());
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (std::binary_search(classes[i].begin(), classes[i].end(), x)) return static_cast<int>(i);
  throw Error(ErrorCode::InvalidInput, "element outside every conjugacy class");
}

RefineCounts refine_compare(const SimplicialComplex& complex, const CrossedModule& xm, const Budget& budget) {
  return RefineCounts{classify_h1(complex, xm, budget).class_count(),
                      classify_h1(barycentric_subdivide(complex), xm, budget).class_count()};
}

}  // namespace cech2

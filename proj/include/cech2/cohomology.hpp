#pragma once

// Čech 1-cocycles with values in a crossed module, the coboundary action, and
// brute-force classification of Ȟ¹(U, 𝒢) over the vertex-star cover of a
// simplicial complex.
//
// Conventions. Values are stored only on strictly increasing tuples, indexed
// by the lexicographic position of the simplex in the complex:
//   g[e]  for each edge e = (i<j),
//   h[t]  for each triangle t = (i<j<k).
// A cocycle satisfies, on every increasing triangle and tetrahedron,
//   t(h_ijk) g_ij g_jk = g_ik
//   α(g_ij)(h_jkl) h_ijl = h_ijk h_ikl.
// A witness (f, k) sends (g, h) to (g', h') with
//   t(k_ij) g_ij f_j = f_i g'_ij
//   h'_ijk = α(f_i^-1)(k_ik h_ijk α(g_ij)(k_jk)^-1 k_ij^-1),
// the second line being the prism read off with all 2-cells invertible.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cech2/complex.hpp"
#include "cech2/crossed_module.hpp"
#include "cech2/error.hpp"

namespace cech2 {

struct Cocycle {
  std::vector<Elem> g;
  std::vector<Elem> h;
  bool operator==(const Cocycle&) const = default;
};

struct CoboundaryWitness {
  std::vector<Elem> f;
  std::vector<Elem> k;
  bool operator==(const CoboundaryWitness&) const = default;
};

struct Budget {
  std::uint64_t cocycles = 1'000'000;
  std::uint64_t witnesses = 1'000'000;
};

struct CocycleReport {
  bool ok = true;
  std::optional<ErrorCode> violation;
  Simplex simplex;
  std::string detail;
  explicit operator bool() const { return ok; }
};

/// A complex together with coefficients, plus the incidence tables every
/// cocycle computation needs.
class CechSetting {
 public:
  CechSetting(SimplicialComplex complex, CrossedModule xm);

  const SimplicialComplex& complex() const { return complex_; }
  const CrossedModule& coefficients() const { return xm_; }
  int vertices() const { return complex_.vertex_count(); }
  int edges() const { return static_cast<int>(edges_.size()); }
  int triangles() const { return static_cast<int>(tri_edges_.size()); }
  int tetrahedra() const { return static_cast<int>(tet_faces_.size()); }

  const std::array<int, 2>& edge(int e) const { return edges_[e]; }
  /// Edge indices (ij, jk, ik) of triangle (i<j<k).
  const std::array<int, 3>& triangle_edges(int t) const { return tri_edges_[t]; }
  /// Triangle indices (ijk, ijl, ikl, jkl) of tetrahedron (i<j<k<l).
  const std::array<int, 4>& tetrahedron_faces(int q) const { return tet_faces_[q]; }
  int tetrahedron_edge_ij(int q) const { return tet_edge_ij_[q]; }
  int edge_index(int i, int j) const;

  CocycleReport validate(const Cocycle& c) const;
  Cocycle trivial_cocycle() const;
  CoboundaryWitness identity_witness() const;
  Cocycle apply(const Cocycle& c, const CoboundaryWitness& w) const;
  /// The witness w with apply(apply(c, first), second) = apply(c, w).
  CoboundaryWitness compose(const CoboundaryWitness& first, const CoboundaryWitness& second) const;
  CoboundaryWitness inverse(const CoboundaryWitness& w) const;
  bool shape_ok(const Cocycle& c) const;

  std::uint64_t cocycle_candidates() const;  // |G|^E |H|^T, saturating
  std::uint64_t witness_count() const;       // |G|^V |H|^E, saturating

 private:
  SimplicialComplex complex_;
  CrossedModule xm_;
  std::vector<std::array<int, 2>> edges_;
  std::vector<std::array<int, 3>> tri_edges_;
  std::vector<std::array<int, 4>> tet_faces_;
  std::vector<int> tet_edge_ij_;
};

using SettingPtr = std::shared_ptr<const CechSetting>;

CocycleReport validate_cocycle(const Cocycle& c, const SimplicialComplex& complex, const CrossedModule& xm);
Cocycle trivial_cocycle(const SimplicialComplex& complex, const CrossedModule& xm);
Cocycle apply_coboundary(const Cocycle& c, const CoboundaryWitness& w, const SimplicialComplex& complex,
                         const CrossedModule& xm);

/// All valid cocycles, stored as mixed-radix codes in ascending lexicographic
/// order of (g over edges, h over triangles).
class CocycleSpace {
 public:
  /// Throws BudgetExceeded when |G|^E |H|^T exceeds budget.cocycles.
  static CocycleSpace enumerate(SettingPtr setting, const Budget& budget = {});

  const CechSetting& setting() const { return *setting_; }
  const SettingPtr& setting_ptr() const { return setting_; }
  std::size_t size() const { return codes_.size(); }
  std::uint64_t code(std::size_t id) const { return codes_[id]; }
  Cocycle at(std::size_t id) const;
  std::vector<Cocycle> all() const;
  std::uint64_t encode(const Cocycle& c) const;
  std::optional<std::size_t> find(const Cocycle& c) const;
  std::optional<std::size_t> find_code(std::uint64_t code) const;

  void decode_digits(std::uint64_t code, std::vector<Elem>& digits) const;
  std::uint64_t weight(int position) const { return weights_[position]; }

 private:
  SettingPtr setting_;
  std::vector<std::uint64_t> weights_;
  std::vector<int> radices_;
  std::vector<std::uint64_t> codes_;
  std::vector<std::int32_t> dense_index_;
};

std::vector<Cocycle> enumerate_cocycles(const SimplicialComplex& complex, const CrossedModule& xm, const Budget& budget = {});

/// First witness in lexicographic (f, k) order taking c to c_prime.
/// Throws BudgetExceeded when |G|^V |H|^E exceeds budget.witnesses.
std::optional<CoboundaryWitness> cohomologous_check(const CechSetting& setting, const Cocycle& c, const Cocycle& c_prime,
                                                    const Budget& budget = {});
std::optional<CoboundaryWitness> cohomologous_check(const Cocycle& c, const Cocycle& c_prime,
                                                    const SimplicialComplex& complex, const CrossedModule& xm,
                                                    const Budget& budget = {});

struct ClassifyOptions {
  bool record_witnesses = false;
};

/// Ȟ¹(U, 𝒢) as a pointed set. Classes are listed in order of their smallest
/// cocycle id; the first cocycle of each class is its representative. The
/// trivial cocycle has code 0, so base_class is always 0.
class Classification {
 public:
  const CocycleSpace& space() const { return *space_; }
  const std::shared_ptr<const CocycleSpace>& space_ptr() const { return space_; }
  std::size_t class_count() const { return classes_.size(); }
  const std::vector<std::vector<std::uint32_t>>& classes() const { return classes_; }
  std::uint32_t class_of(std::size_t cocycle_id) const { return class_of_[cocycle_id]; }
  /// Class of an arbitrary valid cocycle.
  std::uint32_t class_of(const Cocycle& c) const;
  std::size_t base_class() const { return base_class_; }
  Cocycle representative(std::size_t cls) const { return space_->at(classes_[cls][0]); }
  std::vector<std::size_t> sizes() const;

  bool has_witnesses() const { return !parent_.empty(); }
  /// Witness taking the class representative to cocycle `id`. Requires
  /// record_witnesses.
  CoboundaryWitness witness_from_representative(std::size_t id) const;

 private:
  friend Classification classify(std::shared_ptr<const CocycleSpace>, const ClassifyOptions&);
  std::shared_ptr<const CocycleSpace> space_;
  std::vector<std::vector<std::uint32_t>> classes_;
  std::vector<std::uint32_t> class_of_;
  std::size_t base_class_ = 0;
  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> parent_generator_;
  std::vector<CoboundaryWitness> generators_;
};

/// Orbits of the witness group on an enumerated space. The witness group is
/// generated by witnesses supported on one vertex or one edge, so orbits are
/// found by breadth-first search over those generators.
Classification classify(std::shared_ptr<const CocycleSpace> space, const ClassifyOptions& options = {});
Classification classify_h1(const SimplicialComplex& complex, const CrossedModule& xm, const Budget& budget = {},
                           const ClassifyOptions& options = {});

/// |H²(complex; A)| for a finite abelian group A, from integer diagonal forms
/// of the simplicial coboundary matrices: |ker δ²| / |im δ¹|.
std::uint64_t abelian_oracle_h2(const SimplicialComplex& complex, const GroupPtr& abelian);

/// Diagonal entries (nonzero) of an integer matrix after unimodular row and
/// column reduction.
std::vector<long long> integer_diagonal_form(std::vector<std::vector<long long>> matrix);
/// Signed coboundary matrix δ^k : C^k -> C^{k+1}, rows indexed by (k+1)-simplices.
std::vector<std::vector<long long>> coboundary_matrix(const SimplicialComplex& complex, int k);

/// Ordered product of edge values around a cycle graph (start at vertex 0,
/// step first to its smaller neighbour), as an index into conjugacy_classes(G).
int holonomy_oracle(const SimplicialComplex& complex, const Cocycle& c, const CrossedModule& discrete);
/// The raw holonomy element, same traversal.
Elem holonomy(const SimplicialComplex& complex, const Cocycle& c, const CrossedModule& discrete);

struct RefineCounts {
  std::size_t original = 0;
  std::size_t subdivided = 0;
};
RefineCounts refine_compare(const SimplicialComplex& complex, const CrossedModule& xm, const Budget& budget = {});

}  // namespace cech2

#pragma once

// Finite simplicial complexes standing in for spaces with good covers: vertex
// i is the open set U_i of a vertex-star cover and a k-simplex records a
// nonempty (k+1)-fold intersection.

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cech2 {

/// Strictly increasing vertex tuple.
using Simplex = std::vector<int>;

class SimplicialComplex {
 public:
  /// Normalizes each tuple to increasing order and closes under faces. Every
  /// vertex 0..vertex_count-1 is present even if no simplex mentions it.
  static SimplicialComplex build(int vertex_count, const std::vector<Simplex>& maximal);

  int vertex_count() const { return vertex_count_; }
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  /// Lexicographically ordered simplices of dimension k (empty past the top).
  const std::vector<Simplex>& simplices_of_dim(int k) const;
  std::size_t count(int k) const { return simplices_of_dim(k).size(); }
  std::optional<int> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }
  std::vector<Simplex> maximal_simplices() const;
  long euler_characteristic() const;

  bool operator==(const SimplicialComplex& other) const {
    return vertex_count_ == other.vertex_count_ && by_dim_ == other.by_dim_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::map<Simplex, int>> index_;
};

/// Vertices are the simplices of c ordered by (dimension, lex); simplices are
/// chains of faces.
SimplicialComplex barycentric_subdivide(const SimplicialComplex& c);

/// point, interval, circle3, circle6, sphere2, torus7, rp2_6.
SimplicialComplex standard_space(const std::string& name);
const std::vector<std::string>& standard_space_names();

}  // namespace cech2

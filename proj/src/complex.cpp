#include "cech2/complex.hpp"

#include <algorithm>
#include <set>

#include "cech2/error.hpp"

namespace cech2 {

namespace {

constexpr int kMaxSimplexVertices = 16;

std::string show(const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "]";
}

}  // namespace

SimplicialComplex SimplicialComplex::build(int vertex_count, const std::vector<Simplex>& maximal) {
  if (vertex_count < 1) throw Error(ErrorCode::InvalidInput, "a complex needs at least one vertex");
  std::set<Simplex> all;
  for (int v = 0; v < vertex_count; ++v) all.insert({v});
  for (Simplex s : maximal) {
    if (s.empty()) throw Error(ErrorCode::EmptySimplex, "empty maximal simplex");
    for (int v : s)
      if (v < 0 || v >= vertex_count) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " in " + show(s));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (static_cast<int>(s.size()) > kMaxSimplexVertices) throw Error(ErrorCode::InvalidInput, "simplex too large: " + show(s));
    const unsigned subsets = 1u << s.size();
    for (unsigned mask = 1; mask < subsets; ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (mask & (1u << i)) face.push_back(s[i]);
      all.insert(std::move(face));
    }
  }
  SimplicialComplex c;
  c.vertex_count_ = vertex_count;
  for (const Simplex& s : all) {
    const std::size_t k = s.size() - 1;
    if (c.by_dim_.size() <= k) c.by_dim_.resize(k + 1);
    c.by_dim_[k].push_back(s);
  }
  c.index_.resize(c.by_dim_.size());
  for (std::size_t k = 0; k < c.by_dim_.size(); ++k)
    for (int i = 0; i < static_cast<int>(c.by_dim_[k].size()); ++i) c.index_[k][c.by_dim_[k][i]] = i;
  return c;
}

const std::vector<Simplex>& SimplicialComplex::simplices_of_dim(int k) const {
  static const std::vector<Simplex> empty;
  if (k < 0 || k >= static_cast<int>(by_dim_.size())) return empty;
  return by_dim_[k];
}

std::optional<int> SimplicialComplex::index_of(const Simplex& s) const {
  if (s.empty() || s.size() > index_.size()) return std::nullopt;
  const auto& m = index_[s.size() - 1];
  const auto it = m.find(s);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (std::size_t k = 0; k < by_dim_.size(); ++k)
    for (const Simplex& s : by_dim_[k]) {
      bool is_face = false;
      if (k + 1 < by_dim_.size())
        for (const Simplex& t : by_dim_[k + 1])
          if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
            is_face = true;
            break;
          }
      if (!is_face) out.push_back(s);
    }
  return out;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (std::size_t k = 0; k < by_dim_.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(by_dim_[k].size());
  return chi;
}

SimplicialComplex barycentric_subdivide(const SimplicialComplex& c) {
  std::map<Simplex, int> vertex_of;
  int next = 0;
  for (int k = 0; k <= c.dimension(); ++k)
    for (const Simplex& s : c.simplices_of_dim(k)) vertex_of[s] = next++;
  std::vector<Simplex> flags;
  for (const Simplex& top : c.maximal_simplices()) {
    Simplex order = top;
    do {
      Simplex chain;
      Simplex prefix;
      for (int v : order) {
        prefix.push_back(v);
        Simplex face = prefix;
        std::sort(face.begin(), face.end());
        chain.push_back(vertex_of.at(face));
      }
      flags.push_back(std::move(chain));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return SimplicialComplex::build(next, flags);
}

const std::vector<std::string>& standard_space_names() {
  static const std::vector<std::string> names{"point", "interval", "circle3", "circle6", "sphere2", "torus7", "rp2_6"};
  return names;
}

SimplicialComplex standard_space(const std::string& name) {
  if (name == "point") return SimplicialComplex::build(1, {});
  if (name == "interval") return SimplicialComplex::build(2, {{0, 1}});
  if (name == "circle3") return SimplicialComplex::build(3, {{0, 1}, {1, 2}, {0, 2}});
  if (name == "circle6") {
    std::vector<Simplex> edges;
    for (int i = 0; i < 6; ++i) edges.push_back({i, (i + 1) % 6});
    return SimplicialComplex::build(6, edges);
  }
  if (name == "sphere2") return SimplicialComplex::build(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  if (name == "torus7") {
    // Möbius–Kantor 7-vertex torus
    std::vector<Simplex> tris;
    for (int i = 0; i < 7; ++i) {
      tris.push_back({i, (i + 1) % 7, (i + 3) % 7});
      tris.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return SimplicialComplex::build(7, tris);
  }
  if (name == "rp2_6") {
    return SimplicialComplex::build(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                        {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
  }
  throw Error(ErrorCode::UnknownSpace, "no standard space named '" + name + "'");
}

}  // namespace cech2

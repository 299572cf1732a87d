#include <doctest.h>

#include <algorithm>

#include "cech2/complex.hpp"
#include "cech2/error.hpp"

using namespace cech2;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidInput;
}

long alternating_sum(const SimplicialComplex& c) {
  long chi = 0;
  for (int k = 0; k <= c.dimension(); ++k) chi += (k % 2 ? -1 : 1) * static_cast<long>(c.count(k));
  return chi;
}

}  // namespace

TEST_CASE("building and ordering") {
  const SimplicialComplex c = SimplicialComplex::build(4, {{2, 0, 1}, {3, 1}});
  CHECK(c.dimension() == 2);
  CHECK(c.count(0) == 4);
  CHECK(c.simplices_of_dim(1) == std::vector<Simplex>{{0, 1}, {0, 2}, {1, 2}, {1, 3}});
  CHECK(c.simplices_of_dim(2) == std::vector<Simplex>{{0, 1, 2}});
  CHECK(c.index_of({1, 3}) == 3);
  CHECK_FALSE(c.contains({0, 3}));
  CHECK(c.simplices_of_dim(5).empty());
  auto maximal = c.maximal_simplices();
  std::sort(maximal.begin(), maximal.end());
  CHECK(maximal == std::vector<Simplex>{{0, 1, 2}, {1, 3}});

  const SimplicialComplex lonely = SimplicialComplex::build(3, {{0, 1}});
  CHECK(lonely.count(0) == 3);
  CHECK(lonely.euler_characteristic() == 2);

  CHECK(code_of([] { SimplicialComplex::build(2, {{0, 2}}); }) == ErrorCode::VertexOutOfRange);
  CHECK(code_of([] { SimplicialComplex::build(2, {{-1, 0}}); }) == ErrorCode::VertexOutOfRange);
  CHECK(code_of([] { SimplicialComplex::build(2, {{}}); }) == ErrorCode::EmptySimplex);
}

TEST_CASE("closing under faces is idempotent") {
  for (const std::string& name : standard_space_names()) {
    CAPTURE(name);
    const SimplicialComplex c = standard_space(name);
    CHECK(SimplicialComplex::build(c.vertex_count(), c.maximal_simplices()) == c);
    std::vector<Simplex> all;
    for (int k = 0; k <= c.dimension(); ++k)
      for (const Simplex& s : c.simplices_of_dim(k)) all.push_back(s);
    CHECK(SimplicialComplex::build(c.vertex_count(), all) == c);
  }
}

TEST_CASE("standard spaces") {
  const std::vector<std::pair<std::string, long>> chi{{"point", 1},  {"interval", 1}, {"circle3", 0}, {"circle6", 0},
                                                      {"sphere2", 2}, {"torus7", 0},   {"rp2_6", 1}};
  for (const auto& [name, expected] : chi) {
    CAPTURE(name);
    const SimplicialComplex c = standard_space(name);
    CHECK(c.euler_characteristic() == expected);
    CHECK(alternating_sum(c) == expected);
  }
  const SimplicialComplex t = standard_space("torus7");
  CHECK(t.count(0) == 7);
  CHECK(t.count(1) == 21);
  CHECK(t.count(2) == 14);
  const SimplicialComplex rp = standard_space("rp2_6");
  CHECK(rp.count(1) == 15);
  CHECK(rp.count(2) == 10);
  const SimplicialComplex s = standard_space("sphere2");
  CHECK(s.count(2) == 4);
  CHECK(s.count(3) == 0);
  CHECK(code_of([] { standard_space("klein"); }) == ErrorCode::UnknownSpace);
}

TEST_CASE("barycentric subdivision") {
  const SimplicialComplex c3 = barycentric_subdivide(standard_space("circle3"));
  CHECK(c3.count(0) == 6);
  CHECK(c3.count(1) == 6);
  CHECK(c3.count(2) == 0);

  const SimplicialComplex edge = barycentric_subdivide(standard_space("interval"));
  CHECK(edge.count(0) == 3);
  CHECK(edge.count(1) == 2);

  const SimplicialComplex s = barycentric_subdivide(standard_space("sphere2"));
  CHECK(s.count(0) == 14);
  CHECK(s.count(1) == 36);
  CHECK(s.count(2) == 24);

  for (const std::string& name : standard_space_names()) {
    CAPTURE(name);
    const SimplicialComplex c = standard_space(name);
    const SimplicialComplex sd = barycentric_subdivide(c);
    CHECK(sd.euler_characteristic() == c.euler_characteristic());
    CHECK(sd.dimension() == c.dimension());
    // vertices of the subdivision are the simplices of c
    std::size_t simplices = 0;
    for (int k = 0; k <= c.dimension(); ++k) simplices += c.count(k);
    CHECK(sd.count(0) == simplices);
  }
}

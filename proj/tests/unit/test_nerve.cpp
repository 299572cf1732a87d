#include <doctest.h>

#include "cech2/io.hpp"
#include "cech2/nerve.hpp"

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

// Composable p-strings counted by walking the hom-set matrix.
std::uint64_t count_strings(const TwoGroup& tg, int p) {
  const int n = tg.ob()->order();
  std::vector<std::vector<std::uint64_t>> homs(n, std::vector<std::uint64_t>(n, 0));
  for (Elem m = 0; m < tg.mor()->order(); ++m) ++homs[tg.src()(m)][tg.tgt()(m)];
  std::vector<std::uint64_t> ending(n, 1);
  for (int step = 0; step < p; ++step) {
    std::vector<std::uint64_t> next(n, 0);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) next[y] += ending[x] * homs[x][y];
    ending = next;
  }
  std::uint64_t total = 0;
  for (auto v : ending) total += v;
  return total;
}

}  // namespace

TEST_CASE("low levels") {
  const CrossedModule xm = z2_to_z4();
  const TruncatedSimplicialGroup n = nerve_two_group(xm);
  CHECK(n.top() == 4);
  CHECK(n.level(0)->table() == xm.G()->table());
  CHECK(n.level(1)->order() == 8);
  CHECK(n.level(2)->order() == 16);
  for (int p = 0; p <= 4; ++p) CHECK(n.level(p)->order() == 4 << p);

  // a 1-simplex (h, g) is a morphism g -> t(h) g
  const TwoGroup& tg = n.two_group();
  for (Elem x = 0; x < n.level(1)->order(); ++x) {
    const auto arrows = n.arrows(1, x);
    REQUIRE(arrows.size() == 1);
    CHECK(n.objects(1, x) == std::vector<Elem>{tg.src()(arrows[0]), tg.tgt()(arrows[0])});
    CHECK(n.from_arrows(n.start(1, x), arrows) == x);
  }
  CHECK(code_of([&] { n.from_arrows(0, {make_bigon(xm, 1, 1), make_bigon(xm, 0, 0)}); }) == ErrorCode::NotComposable);
}

TEST_CASE("discrete nerves are constant") {
  const CrossedModule d = discrete_two_group(symmetric_group(3));
  const TruncatedSimplicialGroup n = nerve_two_group(d);
  for (int p = 0; p <= n.top(); ++p) {
    CHECK(n.level(p)->table() == d.G()->table());
    for (int i = 0; p > 0 && i <= p; ++i) CHECK(n.face(p, i).map() == GroupHom::identity(d.G()).map());
  }
  CHECK(check_simplicial_identities(n).ok());
}

TEST_CASE("level orders count composable strings") {
  for (const CrossedModule& xm : {z2_to_z4(), aut_two_group(cyclic_group(3)), shift_two_group(cyclic_group(2)),
                                  hat_construction(z2_to_z4()).hat, aut_two_group(symmetric_group(3))}) {
    CAPTURE(xm.name());
    NerveOptions opt;
    opt.levels = 3;
    const TruncatedSimplicialGroup n = nerve_two_group(xm, opt);
    for (int p = 0; p <= n.top(); ++p) {
      CHECK(static_cast<std::uint64_t>(n.level(p)->order()) == count_strings(n.two_group(), p));
      long expected = xm.G()->order();
      for (int i = 0; i < p; ++i) expected *= xm.H()->order();
      CHECK(n.level(p)->order() == expected);
    }
    CHECK(check_simplicial_identities(n).ok());
    const Report iso = check_level_iso(n, xm);
    CAPTURE(iso.first_failure() ? iso.first_failure()->name : "");
    CHECK(iso.ok());
  }
  const auto a3 = nerve_two_group(aut_two_group(cyclic_group(3)));
  CHECK(a3.level(3)->order() == 54);
}

TEST_CASE("simplicial identities up to level 4") {
  for (const CrossedModule& xm : {z2_to_z4(), aut_two_group(cyclic_group(3))}) {
    CAPTURE(xm.name());
    const TruncatedSimplicialGroup n = nerve_two_group(xm);
    const Report r = check_simplicial_identities(n);
    CHECK(r.ok());
    CHECK(r.figures.at("level_4") == n.level(4)->order());
    // d_i d_j = d_{j-1} d_i, checked again here on every element
    for (int p = 2; p <= 4; ++p)
      for (int j = 1; j <= p; ++j)
        for (int i = 0; i < j; ++i)
          for (Elem x = 0; x < n.level(p)->order(); ++x)
            if (n.face(p - 1, i)(n.face(p, j)(x)) != n.face(p - 1, j - 1)(n.face(p, i)(x))) FAIL("face identity");
    for (int p = 0; p < 4; ++p)
      for (int i = 0; i <= p; ++i)
        for (Elem x = 0; x < n.level(p)->order(); ++x) {
          const Elem y = n.degeneracy(p, i)(x);
          if (n.face(p + 1, i)(y) != x || n.face(p + 1, i + 1)(y) != x) FAIL("d s = id");
        }
  }
}

TEST_CASE("bar multiplication") {
  const GroupPtr z2 = cyclic_group(2), z3 = cyclic_group(3);
  const GroupAction inv = GroupAction::validate(z2, z3, {{0, 1, 2}, {0, 2, 1}});
  for (int p = 0; p <= 2; ++p) CHECK(check_bar_multiplication(z2, z3, inv, p).ok());
  const Report r = check_bar_multiplication(z2, z3, inv, 2);
  // every level up to p: 6² + 18² + 54²
  CHECK(r.figures.at("pairs") == 6 * 6 + 18 * 18 + 54 * 54);
  const GroupPtr one = cyclic_group(1);
  CHECK(check_bar_multiplication(one, z3, GroupAction::trivial(one, z3), 2).ok());
  CHECK(check_bar_multiplication(symmetric_group(3), z2, GroupAction::trivial(symmetric_group(3), z2), 1).ok());
}

TEST_CASE("level budget") {
  NerveOptions opt;
  opt.max_level_order = 30;
  CHECK(code_of([&] { nerve_two_group(z2_to_z4(), opt); }) == ErrorCode::BudgetExceeded);
  opt.levels = 2;
  CHECK(nerve_two_group(z2_to_z4(), opt).top() == 2);
}

#include <doctest.h>

#include "cech2/crossed_module.hpp"
#include "cech2/error.hpp"
#include "cech2/io.hpp"

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

// Both axioms re-checked from the raw data.
bool axioms_hold(const CrossedModule& xm) {
  const FiniteGroup& G = *xm.G();
  const FiniteGroup& H = *xm.H();
  for (Elem g = 0; g < G.order(); ++g)
    for (Elem h = 0; h < H.order(); ++h)
      if (xm.t()(xm.alpha()(g, h)) != G.mul(G.mul(g, xm.t()(h)), G.inv(g))) return false;
  for (Elem h = 0; h < H.order(); ++h)
    for (Elem k = 0; k < H.order(); ++k)
      if (xm.alpha()(xm.t()(h), k) != H.mul(H.mul(h, k), H.inv(h))) return false;
  return true;
}

std::vector<CrossedModule> library() {
  std::vector<CrossedModule> out{z2_to_z4(), aut_two_group(cyclic_group(3)), shift_two_group(cyclic_group(2))};
  for (const char* g : {"Z1", "Z2", "Z3", "S3", "V4"}) out.push_back(discrete_two_group(builtin_group(g)));
  for (const char* g : {"Z3", "Z4", "V4"}) out.push_back(shift_two_group(builtin_group(g)));
  for (const char* g : {"Z2", "Z4", "S3", "V4"}) out.push_back(aut_two_group(builtin_group(g)));
  out.push_back(hat_construction(z2_to_z4()).hat);
  return out;
}

}  // namespace

TEST_CASE("validation") {
  const GroupPtr z2 = cyclic_group(2), z4 = cyclic_group(4), s3 = symmetric_group(3), one = cyclic_group(1);
  CHECK(axioms_hold(discrete_two_group(s3)));
  CHECK(axioms_hold(z2_to_z4()));
  CHECK(code_of([&] {
          CrossedModule::validate("S3->1", GroupHom::trivial(s3, one), GroupAction::trivial(one, s3));
        }) == ErrorCode::PeifferViolation);
  CHECK(code_of([&] { shift_two_group(s3); }) == ErrorCode::PeifferViolation);

  // A3 ⊂ S3 with trivial action breaks equivariance.
  const GroupPtr z3 = cyclic_group(3);
  Elem r = 0;
  for (Elem x = 1; x < 6; ++x)
    if (s3->element_order(x) == 3) r = x;
  const GroupHom inc = GroupHom::validate(z3, s3, {0, r, s3->mul(r, r)});
  CHECK(code_of([&] { CrossedModule::validate("A3->S3", inc, GroupAction::trivial(s3, z3)); }) ==
        ErrorCode::EquivarianceViolation);
}

TEST_CASE("library passes both axioms") {
  for (const CrossedModule& xm : library()) {
    CAPTURE(xm.name());
    CHECK(axioms_hold(xm));
  }
}

TEST_CASE("2-group of a crossed module") {
  const CrossedModule xm = z2_to_z4();
  const TwoGroup tg = two_group_from_crossed_module(xm);
  CHECK(tg.mor()->order() == 8);
  // (1,2) ∘ (1,0) = (0,0)
  CHECK(tg.compose(make_bigon(xm, 1, 2), make_bigon(xm, 1, 0)) == make_bigon(xm, 0, 0));
  CHECK(vertical_compose(xm, make_bigon(xm, 1, 0), make_bigon(xm, 1, 2)) == make_bigon(xm, 0, 0));
  CHECK(code_of([&] { tg.compose(make_bigon(xm, 1, 1), make_bigon(xm, 1, 0)); }) == ErrorCode::NotComposable);
  CHECK(code_of([&] { vertical_compose(xm, make_bigon(xm, 0, 0), make_bigon(xm, 0, 1)); }) == ErrorCode::NotComposable);
  // (1,0) ⋆ (1,2) = (0,2)
  CHECK(horizontal_compose(xm, make_bigon(xm, 1, 0), make_bigon(xm, 1, 2)) == make_bigon(xm, 0, 2));
  CHECK(horizontal_compose(xm, make_bigon(xm, 0, 1), make_bigon(xm, 0, 3)) == make_bigon(xm, 0, 0));

  const CrossedModule d = discrete_two_group(symmetric_group(3));
  const TwoGroup dt = two_group_from_crossed_module(d);
  for (Elem b = 0; b < dt.mor()->order(); ++b) CHECK(dt.src()(b) == dt.tgt()(b));

  const TwoGroup h1 = two_group_from_crossed_module(shift_two_group(cyclic_group(2)));
  CHECK(h1.ob()->order() == 1);
  CHECK(h1.mor()->order() == 2);
}

TEST_CASE("round trip through 2-groups") {
  for (const CrossedModule& xm : library()) {
    CAPTURE(xm.name());
    CHECK(crossed_module_from_two_group(two_group_from_crossed_module(xm)).same_as(xm));
  }
}

TEST_CASE("composition formulas and interchange") {
  for (const CrossedModule& xm : library()) {
    CAPTURE(xm.name());
    CHECK(check_composition_formulas(xm).ok());
    CHECK(check_interchange(two_group_from_crossed_module(xm)).ok());
  }
  AutOptions options;
  CHECK(check_interchange(two_group_from_crossed_module(aut_two_group(cyclic_group(3), options))).figures.at("composable_pairs") ==
        18);
}

TEST_CASE("automorphism 2-groups") {
  const CrossedModule a3 = aut_two_group(cyclic_group(3));
  CHECK(a3.G()->order() == 2);
  CHECK(a3.t().map() == std::vector<Elem>{0, 0, 0});
  CHECK(aut_two_group(cyclic_group(2)).G()->order() == 1);
  const CrossedModule as3 = aut_two_group(symmetric_group(3));
  CHECK(as3.G()->order() == 6);
  CHECK(as3.t().injective());
  CHECK(as3.t().surjective());
  CHECK(aut_two_group(builtin_group("V4")).G()->order() == 6);
  CHECK(code_of([] { aut_two_group(builtin_group("S4")); }) == ErrorCode::BudgetExceeded);
}

TEST_CASE("hat construction") {
  const HatConstruction hz = hat_construction(z2_to_z4());
  CHECK(hz.hat.G()->order() == 8);
  CHECK(hz.hat.H()->order() == 2);
  CHECK(validate_ses(hz.ses).ok());
  const TwoGroup hg = two_group_from_crossed_module(hz.hat);
  CHECK(hg.ob()->order() == 8);
  CHECK(hg.mor()->order() == 16);

  const HatConstruction hd = hat_construction(discrete_two_group(cyclic_group(3)));
  CHECK(hd.hat.G()->order() == 3);
  CHECK(hd.hat.H()->order() == 1);
  CHECK(validate_ses(hd.ses).ok());

  const HatConstruction hs = hat_construction(shift_two_group(cyclic_group(2)));
  CHECK(hs.hat.G()->order() == 2);
  for (Elem h = 0; h < 2; ++h) CHECK(hs.hat.boundary(h) == encode_pair(h, 0, 1));
  CHECK(validate_ses(hs.ses).ok());
}

TEST_CASE("Segal bar 2-group and G ⋉ H̄") {
  const TwoGroup b1 = segal_bar_two_group(cyclic_group(1));
  CHECK(b1.mor()->order() == 1);
  const TwoGroup b2 = segal_bar_two_group(cyclic_group(2));
  CHECK(b2.ob()->order() == 2);
  CHECK(b2.mor()->order() == 4);
  for (Elem x = 0; x < 2; ++x)
    for (Elem y = 0; y < 2; ++y) {
      int n = 0;
      for (Elem m = 0; m < 4; ++m) n += b2.src()(m) == x && b2.tgt()(m) == y;
      CHECK(n == 1);
    }
  const TwoGroup b3 = segal_bar_two_group(cyclic_group(3));
  // (1,2) ∘ (0,1) = (0,2)
  CHECK(b3.compose(1 * 3 + 2, 0 * 3 + 1) == 0 * 3 + 2);

  const GroupPtr z4 = cyclic_group(4), z2 = cyclic_group(2);
  const TwoGroup sd = semidirect_two_group(segal_bar_two_group(z2), GroupAction::trivial(z4, z2));
  CHECK(sd.ob()->order() == 8);
  CHECK(sd.mor()->order() == 16);
  CHECK(check_interchange(sd).ok());

  const GroupPtr one = cyclic_group(1), z3 = cyclic_group(3);
  const TwoGroup plain = semidirect_two_group(segal_bar_two_group(z3), GroupAction::trivial(one, z3));
  CHECK(plain.mor()->table() == b3.mor()->table());
}

TEST_CASE("hat is isomorphic to G ⋉ H̄") {
  for (const CrossedModule& xm : library()) {
    CAPTURE(xm.name());
    const TwoGroupIso iso = iso_hat_check(xm);
    CHECK(iso.from.mor()->order() == iso.to.mor()->order());
  }
  const TwoGroupIso iso = iso_hat_check(z2_to_z4());
  CHECK(iso.from.ob()->order() == 8);
  CHECK(iso.from.mor()->order() == 16);
}

TEST_CASE("short exact sequences") {
  const GroupPtr z2 = cyclic_group(2), z4 = cyclic_group(4);
  const CrossedModule left = CrossedModule::validate("Z2->Z2", GroupHom::identity(z2), GroupAction::trivial(z2, z2));
  const CrossedModule mid = z2_to_z4();
  const CrossedModule right = discrete_two_group(z2);
  const CrossedModuleSES ses{
      TwoGroupHom::validate(left, mid, GroupHom::validate(z2, z4, {0, 2}), GroupHom::identity(z2)),
      TwoGroupHom::validate(mid, right, GroupHom::validate(z4, z2, {0, 1, 0, 1}), GroupHom::trivial(z2, right.H()))};
  CHECK(validate_ses(ses).ok());

  const CrossedModule d4 = discrete_two_group(z4);
  const CrossedModule d2 = discrete_two_group(z2);
  const CrossedModuleSES broken{
      TwoGroupHom::validate(d2, d4, GroupHom::validate(z2, z4, {0, 2}), GroupHom::identity(d2.H())),
      TwoGroupHom::validate(d4, d2, GroupHom::trivial(z4, z2), GroupHom::identity(d4.H()))};
  const Report r = validate_ses(broken);
  CHECK_FALSE(r.ok());
  REQUIRE(r.first_failure());
  CHECK(r.first_failure()->name.find("surjective") != std::string::npos);
}

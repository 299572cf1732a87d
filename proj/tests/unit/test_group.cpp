#include <doctest.h>

#include <algorithm>
#include <set>

#include "cech2/error.hpp"
#include "cech2/group.hpp"

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

// Conjugacy classes straight from the table.
std::multiset<std::size_t> class_sizes(const FiniteGroup& g) {
  std::vector<char> seen(g.order(), 0);
  std::multiset<std::size_t> out;
  for (Elem x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::set<Elem> cls;
    for (Elem y = 0; y < g.order(); ++y) cls.insert(g.mul(g.mul(y, x), g.inv(y)));
    for (Elem z : cls) seen[z] = 1;
    out.insert(cls.size());
  }
  return out;
}

}  // namespace

TEST_CASE("small tables") {
  CHECK(FiniteGroup::validate("1", {{0}})->order() == 1);
  const GroupPtr z2 = FiniteGroup::validate("Z2", {{0, 1}, {1, 0}});
  CHECK(z2->order() == 2);
  CHECK(z2->inv(1) == 1);
  CHECK(code_of([] { FiniteGroup::validate("bad", {{0, 1, 2}, {1, 0, 0}, {2, 0, 0}}); }) == ErrorCode::NotAssociative);
  CHECK(code_of([] { FiniteGroup::validate("bad", {{1, 0}, {0, 1}}); }) == ErrorCode::NoIdentityAtZero);
  CHECK(code_of([] { FiniteGroup::validate("bad", {{0, 1}, {1, 1}}); }) == ErrorCode::MissingInverse);
  CHECK(code_of([] { FiniteGroup::validate("bad", {{0, 1}, {1}}); }) == ErrorCode::NotSquare);
  CHECK(code_of([] { FiniteGroup::validate("bad", {{0, 2}, {2, 0}}); }) == ErrorCode::EntryOutOfRange);
}

TEST_CASE("S3 from two generators") {
  const GroupPtr s3 = group_from_permutations("S3", 3, {{1, 0, 2}, {1, 2, 0}});
  REQUIRE(s3->order() == 6);
  CHECK_FALSE(s3->is_abelian());
  int triples = 0;
  for (Elem a = 0; a < 6; ++a)
    for (Elem b = 0; b < 6; ++b)
      for (Elem c = 0; c < 6; ++c, ++triples) CHECK(s3->mul(s3->mul(a, b), c) == s3->mul(a, s3->mul(b, c)));
  CHECK(triples == 216);
  CHECK(fingerprint(*s3) == fingerprint(*symmetric_group(3)));
}

TEST_CASE("homomorphisms") {
  const GroupPtr z2 = cyclic_group(2), z4 = cyclic_group(4);
  CHECK(GroupHom::identity(z4).injective());
  const GroupHom inc = GroupHom::validate(z2, z4, {0, 2});
  CHECK(inc.injective());
  CHECK_FALSE(inc.surjective());
  CHECK(code_of([&] { GroupHom::validate(z2, z4, {0, 1}); }) == ErrorCode::NotHomomorphism);
  const GroupHom red = GroupHom::validate(z4, z2, {0, 1, 0, 1});
  CHECK(red.after(inc).map() == std::vector<Elem>{0, 0});
}

TEST_CASE("actions") {
  const GroupPtr z2 = cyclic_group(2), z3 = cyclic_group(3), z4 = cyclic_group(4);
  CHECK(GroupAction::trivial(symmetric_group(3), z4).is_trivial());
  const GroupAction inv = GroupAction::validate(z2, z3, {{0, 1, 2}, {0, 2, 1}});
  CHECK_FALSE(inv.is_trivial());
  CHECK(code_of([&] { GroupAction::validate(z2, z4, {{0, 1, 2, 3}, {0, 2, 1, 3}}); }) == ErrorCode::NotAutomorphism);
  CHECK(code_of([&] { GroupAction::validate(z2, z3, {{0, 2, 1}, {0, 2, 1}}); }) == ErrorCode::NotActionHom);
}

TEST_CASE("semidirect products") {
  const GroupPtr z2 = cyclic_group(2), z3 = cyclic_group(3);
  const GroupPtr d3 = semidirect_product(z2, z3, GroupAction::validate(z2, z3, {{0, 1, 2}, {0, 2, 1}}));
  CHECK(d3->order() == 6);
  CHECK_FALSE(d3->is_abelian());
  CHECK(fingerprint(*d3) == fingerprint(*symmetric_group(3)));
  // (h,g)(h',g') = (h α(g)(h'), gg')
  CHECK(d3->mul(encode_pair(1, 1, 2), encode_pair(1, 0, 2)) == encode_pair(0, 1, 2));

  const GroupPtr v4 = semidirect_product(z2, z2, GroupAction::trivial(z2, z2));
  CHECK(fingerprint(*v4) == fingerprint(*builtin_group("V4")));
  const GroupPtr s3 = symmetric_group(3), z4 = cyclic_group(4);
  CHECK(semidirect_product(s3, z4, GroupAction::trivial(s3, z4))->table() == direct_product(z4, s3)->table());
}

TEST_CASE("conjugacy classes against a direct sweep") {
  for (const std::string name : {"Z1", "Z4", "S3", "V4", "S4"}) {
    const GroupPtr g = builtin_group(name);
    std::multiset<std::size_t> got;
    for (const auto& c : conjugacy_classes(*g)) got.insert(c.size());
    CHECK(got == class_sizes(*g));
  }
  CHECK(conjugacy_classes(*cyclic_group(4)).size() == 4);
  CHECK(conjugacy_classes(*symmetric_group(3)).size() == 3);
  CHECK(conjugacy_classes(*cyclic_group(1)).size() == 1);
}

TEST_CASE("kernel and image") {
  const GroupPtr z2 = cyclic_group(2), z4 = cyclic_group(4);
  const KernelImage id = hom_kernel_image(GroupHom::identity(z4));
  CHECK(id.kernel == std::vector<Elem>{0});
  CHECK(id.image == std::vector<Elem>{0, 1, 2, 3});
  const KernelImage red = hom_kernel_image(GroupHom::validate(z4, z2, {0, 1, 0, 1}));
  CHECK(red.kernel == std::vector<Elem>{0, 2});
  CHECK(red.image == std::vector<Elem>{0, 1});
  const GroupPtr s3 = symmetric_group(3);
  const KernelImage triv = hom_kernel_image(GroupHom::trivial(s3, z2));
  CHECK(triv.kernel.size() == 6);
  CHECK(triv.image == std::vector<Elem>{0});

  // sign map: kernel is A3 and normal
  std::vector<Elem> sign(6);
  for (Elem x = 0; x < 6; ++x) sign[x] = s3->element_order(x) == 2 ? 1 : 0;
  const KernelImage sg = hom_kernel_image(GroupHom::validate(s3, z2, sign));
  CHECK(sg.kernel.size() == 3);
  CHECK(is_normal_subgroup(*s3, sg.kernel));
}

TEST_CASE("builtin names") {
  CHECK(builtin_group("Z7")->order() == 7);
  CHECK(builtin_group("S4")->order() == 24);
  CHECK(builtin_group("V4")->is_abelian());
  CHECK(code_of([] { builtin_group("Q8x"); }) == ErrorCode::UnknownGroup);
  CHECK(generated_subgroup(*symmetric_group(3), generating_set(*symmetric_group(3))).size() == 6);
}

#include <doctest.h>

#include "cech2/io.hpp"

using namespace cech2;

#ifndef CECH2_DATA_DIR
#error "CECH2_DATA_DIR must point at the fixture directory"
#endif

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

std::string data(const std::string& name) { return std::string(CECH2_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("groups and crossed modules round trip") {
  const GroupPtr s3 = symmetric_group(3);
  CHECK(group_from_json(to_json(*s3))->table() == s3->table());
  CHECK(group_from_json(Json("Z5"))->order() == 5);
  CHECK(to_json(*s3)["order"] == 6);
  CHECK(code_of([] { group_from_json(parse_json(R"({"order":3,"table":[[0,1],[1,0]]})")); }) == ErrorCode::InvalidInput);
  for (const CrossedModule& xm : {z2_to_z4(), aut_two_group(cyclic_group(3)), hat_construction(z2_to_z4()).hat}) {
    CAPTURE(xm.name());
    const CrossedModule back = crossed_module_from_json(parse_json(to_json(xm).dump()));
    CHECK(back.same_as(xm));
    CHECK(back.name() == xm.name());
  }
  // alpha defaults to trivial
  const CrossedModule plain = crossed_module_from_json(parse_json(R"({"G":"Z4","H":"Z2","t":[0,2]})"));
  CHECK(plain.same_as(z2_to_z4()));
}

TEST_CASE("complexes and cocycles round trip") {
  for (const std::string& name : standard_space_names()) {
    const SimplicialComplex c = standard_space(name);
    CHECK(complex_from_json(to_json(c)) == c);
  }
  const SimplicialComplex s2 = standard_space("sphere2");
  const CrossedModule xm = z2_to_z4();
  for (const Cocycle& c : enumerate_cocycles(s2, xm)) CHECK(cocycle_from_json(to_json(c, s2), s2) == c);

  const SimplicialComplex c3 = standard_space("circle3");
  const Cocycle fixture = cocycle_from_json(read_json_file(data("cocycle_circle3_z4.json")), c3);
  CHECK(fixture.g == std::vector<Elem>{1, 0, 3});
  CHECK(validate_cocycle(fixture, c3, discrete_two_group(cyclic_group(4))).ok);

  const Json w = to_json(CoboundaryWitness{{0, 1, 2}, {0, 0, 1}}, c3);
  CHECK(w["f"]["1"] == 1);
  CHECK(w["k"]["1,2"] == 1);
}

TEST_CASE("reports and classifications") {
  Report r;
  r.suite = "demo";
  r.add("first", true);
  r.add("second", false, "why");
  r.figures["n"] = 3;
  const Json j = to_json(r);
  CHECK(j["ok"] == false);
  CHECK(j["checks"][1]["detail"] == "why");
  CHECK_FALSE(j["checks"][0].contains("detail"));
  CHECK(j["figures"]["n"] == 3);

  const Classification cls = classify_h1(standard_space("circle3"), discrete_two_group(symmetric_group(3)));
  const Json cj = to_json(cls);
  CHECK(cj["classes"] == 3);
  CHECK(cj["base_class"] == 0);
  CHECK(cj["cocycles"] == 216);
  CHECK(cj["sizes"].size() == 3);
  CHECK(cj["representatives"].size() == 3);
  CHECK(to_json(cls).dump() == cj.dump());
}

TEST_CASE("specs") {
  CHECK(parse_coefficients("discrete:S3").G()->order() == 6);
  CHECK(parse_coefficients("shift:Z3").H()->order() == 3);
  CHECK(parse_coefficients("aut:Z3").G()->order() == 2);
  CHECK(parse_coefficients("hat:z2-z4").G()->order() == 8);
  CHECK(parse_coefficients("z2-z4").same_as(z2_to_z4()));
  CHECK(parse_coefficients(data("z2_to_z4.json")).same_as(z2_to_z4()));
  CHECK(parse_space("torus7").count(2) == 14);
  CHECK(parse_space(data("circle4.json")).count(1) == 4);
  CHECK(parse_group_ses("z3-z3-1").K()->order() == 1);
  CHECK(parse_group_ses(data("ses_z2_z4_z2.json")).section() == ses_z2_z4_z2().section());
  CHECK(validate_ses(parse_crossed_module_ses("hat:z2-z4")).ok());
  CHECK(validate_ses(parse_crossed_module_ses("z2-z4-z2")).ok());
  CHECK(validate_ses(parse_crossed_module_ses(data("ses_discrete_z2_z4_z2.json"))).ok());
  CHECK(validate_ses(parse_crossed_module_ses(data("ses_z2_z4_z2.json"))).ok());
}

TEST_CASE("input errors") {
  CHECK(code_of([] { parse_coefficients(data("malformed.json")); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { parse_coefficients("missing/file.json"); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { parse_coefficients("discrete:Q9"); }) == ErrorCode::UnknownGroup);
  CHECK(code_of([] { parse_coefficients(data("shift_s3.json")); }) == ErrorCode::PeifferViolation);
  CHECK(code_of([] { parse_space("moebius"); }) == ErrorCode::UnknownSpace);
  CHECK(code_of([] { complex_from_json(parse_json(R"({"vertices":"3","maximal":[]})")); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { crossed_module_from_json(parse_json(R"({"G":"Z4","t":[0,2]})")); }) == ErrorCode::InvalidInput);
  const SimplicialComplex c3 = standard_space("circle3");
  CHECK(code_of([&] { cocycle_from_json(parse_json(R"({"g":{"0,1":1,"0,2":0}})"), c3); }) == ErrorCode::InvalidInput);
  CHECK(code_of([&] { cocycle_from_json(parse_json(R"({"g":{"0,1":1,"0,2":0,"1,2":0,"2,0":0}})"), c3); }) ==
        ErrorCode::InvalidInput);
  CHECK(code_of([&] { cocycle_from_json(parse_json(R"({"g":{"0,1":-1,"0,2":0,"1,2":0}})"), c3); }) ==
        ErrorCode::EntryOutOfRange);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilbfock/dsl.hpp"

using namespace hilbfock;

namespace {

SurfaceDatum k3_rho1(int b = 21) {
  SurfaceConfig cfg;
  cfg.mode = SurfaceMode::K3Chow;
  cfg.picard_rank = 1;
  cfg.picard_gram = {{Rat(2)}};
  cfg.b = b;
  return make_surface(cfg);
}

RadVector rad_vac() { return rad_from(vacuum()); }

}  // namespace

TEST_CASE("vector parsing and printing round-trips") {
  SurfaceDatum d = k3_rho1();
  FockVector v = parse_vector_dsl("3/2 q(2,l) q(1,1) v + qq(1,2;tr) v", d);
  CHECK(v.terms.size() == 2);
  CHECK(parse_vector_dsl(print_vector_dsl(v, d), d) == v);
  FockVector w = parse_vector_dsl("1/2 q(1,1)^2 v - q(3,c) v", d);
  CHECK(parse_vector_dsl(print_vector_dsl(w, d), d) == w);
  CHECK_THROWS_AS(parse_vector_dsl("q(1,zz) v", d), DslParseError);
  CHECK_THROWS_AS(parse_vector_dsl("q(1,l)", d), DslParseError);
}

TEST_CASE("operator parsing round-trips through print") {
  SurfaceDatum d = k3_rho1();
  for (const char* src : {
           "q(-1,c)",
           "G(2,c)",
           "[L(2), q(3,l)]",
           "2 q(1,1) q(2,l) + -1/2 L(0)",
           "J(0,2) - 2 Lehn(1)",
           "[Lehn(1), q(-1,1 + 2c)]",
           "D(1,-1) D(2,2)",
       }) {
    auto ast = parse_operator_dsl(src, d);
    std::string printed = print_operator_dsl(*ast, d);
    auto ast2 = parse_operator_dsl(printed, d);
    CHECK(print_operator_dsl(*ast2, d) == printed);
  }
  CHECK_THROWS_AS(parse_operator_dsl("W(1)", d), DslParseError);
  CHECK_THROWS_AS(parse_operator_dsl("q(1,c", d), DslParseError);
  CHECK_THROWS_AS(parse_operator_dsl("q(1,c) +", d), DslParseError);
}

TEST_CASE("evaluation of spec instances") {
  SurfaceDatum d = k3_rho1();
  // q(-1,c) v = 0
  auto e1 = parse_operator_dsl("q(-1,c)", d);
  CHECK(dsl_eval(*e1, rad_vac(), d).is_zero());
  // [L(2), q(3,l)] v = 0
  auto e2 = parse_operator_dsl("[L(2), q(3,l)]", d);
  RadVector in = rad_from(parse_vector_dsl("v", d));
  CHECK(dsl_eval(*e2, in, d).is_zero());
  // G(2,c) on 1/2 q(1,1)^2 v
  auto e3 = parse_operator_dsl("G(2,c)", d);
  RadVector w = rad_from(parse_vector_dsl("1/2 q(1,1)^2 v", d));
  RadVector r3 = dsl_eval(*e3, w, d);
  CHECK_FALSE(r3.is_zero());
  // matches the named-operator path
  FockVector direct = apply_expr(with_class(op_G(2, 4, d), one_leg(d.basis_class(d.c_index), d), d),
                                 parse_vector_dsl("1/2 q(1,1)^2 v", d), d);
  RadVector want = rad_from(direct);
  CHECK(r3 == want);
  // powers: q(1,1)^3 v = q_1(1)^3 v
  auto e4 = parse_operator_dsl("q(1,1)^3", d);
  CHECK(dsl_eval(*e4, rad_vac(), d) == rad_from(parse_vector_dsl("q(1,1)^3 v", d)));
}

TEST_CASE("radical atoms evaluate with exact radicals") {
  SurfaceDatum d = k3_rho1();
  auto e = parse_operator_dsl("D(1,-1)", d);
  RadVector r = dsl_eval(*e, rad_vac(), d);
  // D_{1,-1} v = b/2 v, rational component only
  REQUIRE(r.comps.count(1) == 1);
  CHECK(r.comps.size() == 1);
  FockVector want = vacuum();
  want *= Rat(21, 2);
  CHECK(r.comps.at(1) == want);

  // D(2,2) has rational normalization 1/sqrt(4)
  auto e2 = parse_operator_dsl("D(2,2)", d);
  RadVector r2 = dsl_eval(*e2, rad_vac(), d);
  REQUIRE(r2.comps.count(1) == 1);
  FockVector pair22 = fock_monomial({}, {{2, 2}}, d);
  pair22 *= Rat(1, 2);
  CHECK(r2.comps.at(1) == pair22);

  // D(2,1) v carries sqrt(2)/2 q_2 q_1(tr) v
  auto e3 = parse_operator_dsl("D(2,1)", d);
  RadVector r3 = dsl_eval(*e3, rad_vac(), d);
  REQUIRE(r3.comps.count(2) == 1);
  FockVector pair12 = fock_monomial({}, {{1, 2}}, d);
  pair12 *= Rat(1, 2);
  CHECK(r3.comps.at(2) == pair12);
}

TEST_CASE("commutator nodes keep the first factor's legs first") {
  SurfaceDatum d = k3_rho1();
  auto e = parse_operator_dsl("[Lehn(1), Lehn(-1)]", d);
  CHECK(dsl_free_legs(*e) == 2);
  RadVector r = dsl_eval(*e, rad_from(parse_vector_dsl("q(1,l) v", d)), d);
  CHECK_FALSE(r.is_zero());
}

TEST_CASE("class sub-language") {
  SurfaceDatum d = k3_rho1();
  SurfClass c = parse_class_dsl("1 + 2c - 1/2 l", d);
  CHECK(c[0] == Rat(1));
  CHECK(c[1] == Rat(-1, 2));
  CHECK(c[d.c_index] == Rat(2));
  CHECK(parse_class_dsl("e", d)[d.c_index] == Rat(24));
  CHECK(parse_class_dsl("t", d) == d.zero_class());
}

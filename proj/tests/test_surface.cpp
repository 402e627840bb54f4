#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilbfock/surface.hpp"

using namespace hilbfock;

static SurfaceConfig k3_rho1() {
  SurfaceConfig cfg;
  cfg.mode = SurfaceMode::K3Chow;
  cfg.picard_rank = 1;
  cfg.picard_gram = {{Rat(2)}};
  cfg.b = 21;
  return cfg;
}

static SurfaceConfig split_rho1_b2() {
  SurfaceConfig cfg;
  cfg.mode = SurfaceMode::Split;
  cfg.picard_rank = 1;
  cfg.picard_gram = {{Rat(2)}};
  cfg.b = 2;
  return cfg;
}

TEST_CASE("k3-chow datum basics") {
  SurfaceDatum d = make_surface(k3_rho1());
  CHECK(d.dim == 3);
  CHECK(d.basis_name(0) == "1");
  CHECK(d.basis_name(1) == "l");
  CHECK(d.basis_name(2) == "c");
  CHECK(d.e_class()[d.c_index] == Rat(24));
  CHECK_FALSE(d.synthetic);

  CHECK(d.pair(d.basis_class(0), d.basis_class(d.c_index)) == Rat(1));
  CHECK(d.pair(d.basis_class(0), d.basis_class(0)) == Rat(0));
  CHECK(d.pair(d.basis_class(1), d.basis_class(1)) == Rat(2));

  // l*l = <l,l> c ; c*c = 0
  SurfClass ll = d.mul(d.basis_class(1), d.basis_class(1));
  CHECK(ll[d.c_index] == Rat(2));
  CHECK(d.mul(d.basis_class(d.c_index), d.basis_class(d.c_index)) == d.zero_class());

  // Todd class is 1 + 2c
  CHECK(d.todd_grade1() == d.zero_class());
  SurfClass td2 = d.todd_grade2();
  CHECK(td2[d.c_index] == Rat(2));
}

TEST_CASE("split datum basics") {
  SurfaceDatum d = make_surface(split_rho1_b2());
  CHECK(d.dim == 5);
  CHECK(d.basis_name(2) == "tau1");
  CHECK(d.basis_name(3) == "tau2");
  CHECK(d.basis_index("tau2") == 3);
  CHECK(d.synthetic);
  // tau products land in the point class through the pairing
  SurfClass t12 = d.mul(d.basis_class(2), d.basis_class(3));
  CHECK(t12 == d.zero_class());  // identity gram: <tau1,tau2> = 0
  SurfClass t11 = d.mul(d.basis_class(2), d.basis_class(2));
  CHECK(t11[d.c_index] == Rat(1));
  CHECK(d.e_point_coeff() == Rat(5));
}

TEST_CASE("ring laws over all basis triples") {
  for (auto cfg : {k3_rho1(), split_rho1_b2()}) {
    SurfaceDatum d = make_surface(cfg);
    for (int i = 0; i < d.dim; ++i)
      for (int j = 0; j < d.dim; ++j) {
        SurfClass xi = d.basis_class(i), xj = d.basis_class(j);
        CHECK(d.mul(xi, xj) == d.mul(xj, xi));
        CHECK(d.pair(d.mul(xi, xj), d.basis_class(0)) == d.pair(xi, xj));
        for (int k = 0; k < d.dim; ++k) {
          SurfClass xk = d.basis_class(k);
          CHECK(d.mul(d.mul(xi, xj), xk) == d.mul(xi, d.mul(xj, xk)));
        }
      }
    // e kills every positive-grade class
    for (int i = 1; i < d.dim; ++i)
      CHECK(d.mul(d.e_class(), d.basis_class(i)) == d.zero_class());
  }
}

TEST_CASE("make_surface validation") {
  auto cfg = k3_rho1();
  cfg.t_coeffs = {Rat(1)};
  CHECK_THROWS_WITH_AS(make_surface(cfg), "canonical class must vanish in k3-chow mode",
                       std::invalid_argument);

  auto cfg2 = k3_rho1();
  cfg2.picard_gram = {{Rat(0)}};
  CHECK_THROWS_AS(make_surface(cfg2), std::invalid_argument);

  auto cfg3 = k3_rho1();
  cfg3.b = 0;
  CHECK_THROWS_AS(make_surface(cfg3), std::invalid_argument);
}

TEST_CASE("config parsing") {
  std::string text =
      "# honest K3 with rho = 1\n"
      "mode k3-chow\n"
      "picard_rank 1\n"
      "b 21\n"
      "picard_gram 2\n";
  SurfaceConfig cfg = parse_surface_config(text);
  SurfaceDatum d = make_surface(cfg);
  CHECK(d.b == 21);
  CHECK(d.picard_gram[0][0] == Rat(2));

  std::string split_text =
      "mode split\npicard_rank 1\nb 2\npicard_gram 2\n"
      "transcendental_gram 2 1 1 1\nt_coeffs 1/2\n";
  SurfaceDatum s = make_surface(parse_surface_config(split_text));
  CHECK(s.transcendental_gram[0][1] == Rat(1));
  CHECK_FALSE(s.t_is_zero());
  CHECK(s.t_class()[1] == Rat(1, 2));

  CHECK_THROWS_AS(parse_surface_config("mode nonsense\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_surface_config("picard_gram 1\n"), std::invalid_argument);
}

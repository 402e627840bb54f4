#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hilbfock/fock.hpp"

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

SurfaceDatum split_rho1(int b = 2) {
  SurfaceConfig cfg;
  cfg.mode = SurfaceMode::Split;
  cfg.picard_rank = 1;
  cfg.picard_gram = {{Rat(2)}};
  cfg.b = b;
  return make_surface(cfg);
}

}  // namespace

TEST_CASE("creation, annihilation, vacuum") {
  SurfaceDatum d = k3_rho1();
  SurfClass one = d.basis_class(0), l = d.basis_class(1), c = d.basis_class(d.c_index);

  // annihilators kill the vacuum
  for (int n = 1; n <= 4; ++n) CHECK(apply_q(-n, l, vacuum(), d).is_zero());

  // q(1,l) v
  FockVector w = apply_q(1, l, vacuum(), d);
  CHECK(w == fock_monomial({{1, 1}}, {}, d));

  // the Heisenberg-forced derivation sign: q(-2,c) q(2,1) v = -2 v
  FockVector q21 = fock_monomial({{2, 0}}, {}, d);
  FockVector got = apply_q(-2, c, q21, d);
  FockVector want = vacuum();
  want *= Rat(-2);
  CHECK(got == want);

  // q_0 = 0
  CHECK(apply_q(0, one, q21, d).is_zero());

  // weight and codim shifts
  FockVector x = fock_monomial({{2, 1}, {1, 0}}, {{1, 2}}, d);
  const FockMono& m = x.terms.begin()->first;
  CHECK(m.weight() == 6);
  CHECK(m.codim(d) == 2 + 0 + 3);
  for (int n = 1; n <= 3; ++n) {
    FockVector y = apply_q(n, l, x, d);
    for (auto& [mm, cc] : y.terms) {
      CHECK(mm.weight() == m.weight() + n);
      CHECK(mm.codim(d) == m.codim(d) + n - 1 + 1);
    }
  }
}

TEST_CASE("pairs are transparent to annihilators in the datum's span") {
  SurfaceDatum d = k3_rho1();
  FockVector pair12 = fock_monomial({}, {{1, 2}}, d);
  for (int n = 1; n <= 3; ++n)
    for (int idx = 0; idx < d.dim; ++idx)
      CHECK(apply_q(-n, d.basis_class(idx), pair12, d).is_zero());
}

TEST_CASE("Heisenberg module law on a bounded window") {
  for (auto d : {k3_rho1(), split_rho1()}) {
    auto monos = enumerate_monomials(d, 5);
    for (int n = -3; n <= 3; ++n)
      for (int np = -3; np <= 3; ++np) {
        if (n == 0 || np == 0) continue;
        for (int gi = 0; gi < d.dim; ++gi)
          for (int gj = 0; gj < d.dim; ++gj) {
            SurfClass g = d.basis_class(gi), gp = d.basis_class(gj);
            for (auto& m : monos) {
              FockVector w;
              w.add(m, Rat(1));
              FockVector lhs = apply_q(n, g, apply_q(np, gp, w, d), d);
              lhs -= apply_q(np, gp, apply_q(n, g, w, d), d);
              FockVector rhs;
              if (n + np == 0) {
                rhs = w;
                rhs *= Rat(n) * d.pair_basis(gi, gj);
              }
              CHECK(lhs == rhs);
            }
          }
      }
  }
}

TEST_CASE("to_split_fock intertwines apply_q over the common span") {
  SurfaceDatum d = k3_rho1(2);
  SurfaceDatum s = split_rho1(2);
  CHECK(to_split_fock(vacuum(), d, s) == vacuum());

  FockVector p = fock_monomial({}, {{1, 1}}, d);
  FockVector ps = to_split_fock(p, d, s);
  CHECK(ps == [] {
    SurfaceDatum sd = split_rho1(2);
    FockVector r = fock_monomial({{1, 2}, {1, 2}}, {}, sd);
    r += fock_monomial({{1, 3}, {1, 3}}, {}, sd);
    return r;
  }());

  auto monos = enumerate_monomials(d, 5);
  for (size_t i = 0; i < monos.size(); i += 7) {
    FockVector w;
    w.add(monos[i], Rat(1));
    for (int n = -4; n <= 4; ++n) {
      if (n == 0) continue;
      for (int gi = 0; gi < d.dim; ++gi) {
        SurfClass g = d.basis_class(gi);
        SurfClass gs = s.basis_class(gi == d.c_index ? s.c_index : gi);
        CHECK(to_split_fock(apply_q(n, g, w, d), d, s) ==
              apply_q(n, gs, to_split_fock(w, d, s), s));
      }
    }
  }
}

TEST_CASE("monomial enumeration is duplicate-free and weight-sorted") {
  for (auto d : {k3_rho1(), split_rho1()}) {
    auto monos = enumerate_monomials(d, 6);
    std::set<FockMono> seen;
    int prev = 0;
    for (auto& m : monos) {
      CHECK(m.plain());
      CHECK(m.weight() <= 6);
      CHECK(m.weight() >= prev);
      prev = m.weight();
      CHECK(seen.insert(m).second);
    }
    CHECK(monos.front() == FockMono{});
  }
}

TEST_CASE("fock_monomial validation") {
  SurfaceDatum d = k3_rho1();
  CHECK_THROWS_AS(fock_monomial({{0, 0}}, {}, d), std::invalid_argument);
  CHECK_THROWS_AS(fock_monomial({{1, 9}}, {}, d), std::invalid_argument);
  SurfaceDatum s = split_rho1();
  CHECK_THROWS_AS(fock_monomial({}, {{1, 1}}, s), std::invalid_argument);
}

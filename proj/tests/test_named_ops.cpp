#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilbfock/named_ops.hpp"

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

FockVector basis_vec(const FockMono& m) {
  FockVector w;
  w.add(m, Rat(1));
  return w;
}

}  // namespace

TEST_CASE("partition enumeration") {
  int count = 0;
  long long sq = 0;
  for_each_partition(2, 0, 4, [&](const std::vector<int>& p) {
    ++count;
    CHECK(p[0] + p[1] == 0);
    CHECK(p[0] >= p[1]);
    sq += partition_stats(p).square_sum;
  });
  CHECK(count == 4);  // (n,-n) for n = 1..4
  CHECK(sq == 2 * (1 + 4 + 9 + 16));

  count = 0;
  for_each_partition(3, 1, 2, [&](const std::vector<int>& p) {
    ++count;
    CHECK(p[0] + p[1] + p[2] == 1);
    int ann = 0;
    for (int x : p)
      if (x < 0) ann -= x;
    CHECK(ann <= 2);
  });
  CHECK(count > 0);

  // lambda! of (2,1,1,-3,-3): 1 * 2! * 2!
  PartitionStats st = partition_stats({2, 1, 1, -3, -3});
  CHECK(st.fact == Rat(4));
  CHECK(st.square_sum == 4 + 1 + 1 + 9 + 9);
}

TEST_CASE("J(n,0) = -q_n bare") {
  SurfaceDatum d = k3_rho1();
  for (int n : {-3, -1, 1, 2}) {
    OperatorExpr j = op_J(n, 0, 8, d);
    OperatorExpr q = expr_q_bare(n, d);
    q *= Rat(-1);
    CHECK(j.terms == q.terms);
  }
}

TEST_CASE("J(n,1) = -Lehn(n) for n != 0") {
  SurfaceDatum d = k3_rho1();
  for (int n : {-2, 1, 3}) {
    OperatorExpr j = op_J(n, 1, 6, d);
    OperatorExpr le = op_lehn(n, 6, d);
    le *= Rat(-1);
    CHECK(j.terms == le.terms);
  }
}

TEST_CASE("J(0,1) = G(2) and J(0,2) = 2 G(3)") {
  SurfaceDatum d = k3_rho1();
  auto r1 = operator_equal(op_J(0, 1, 8, d), op_G(2, 8, d), 8, d);
  CHECK(r1.equal);
  CHECK(r1.method == "canonical");
  OperatorExpr g3 = op_G(3, 8, d);
  g3 *= Rat(2);
  auto r2 = operator_equal(op_J(0, 2, 8, d), g3, 8, d);
  CHECK(r2.equal);
  CHECK(r2.method == "canonical");
}

TEST_CASE("number operator sign forced by the commutation relations") {
  SurfaceDatum d = k3_rho1();
  OperatorExpr l0 = with_class(op_lehn(0, 8, d), one_leg(d.basis_class(0), d), d);
  FockVector w = fock_monomial({{3, 1}}, {}, d);
  FockVector got = apply_expr(l0, w, d);
  FockVector want = w;
  want *= Rat(-3);
  CHECK(got == want);
  // weight additivity on a composite monomial
  FockVector w2 = fock_monomial({{2, 0}, {1, 2}}, {}, d);
  FockVector got2 = apply_expr(l0, w2, d);
  FockVector want2 = w2;
  want2 *= Rat(-3);
  CHECK(got2 == want2);
}

TEST_CASE("homogeneity of named-operator terms") {
  SurfaceDatum d = k3_rho1();
  auto codim_shift = [&](const OpTerm& t) {
    int shift = 0;
    for (int m : t.modes) shift += m - 1;
    return shift + term_grade(t.cls, d);
  };
  for (int n : {-2, 0, 3})
    for (int k : {1, 2, 3})
      for (auto& [t, c] : op_J(n, k, 6, d).terms) {
        CHECK(t.weight_shift() == n);
        CHECK(codim_shift(t) == n + k + 1);
      }
  for (int k : {2, 3, 4})
    for (auto& [t, c] : op_G(k, 6, d).terms) {
      CHECK(t.weight_shift() == 0);
      CHECK(codim_shift(t) == k);
    }
}

TEST_CASE("virasoro operators on the transcendental class") {
  SurfaceDatum d = k3_rho1(21);
  // L_{-2} v = 0, L_2 v = 1/2 q_1 q_1 (tr) v
  CHECK(apply_expr(op_vir(-2, 6, d), vacuum(), d).is_zero());
  FockVector l2 = apply_expr(op_vir(2, 6, d), vacuum(), d);
  FockVector want = fock_monomial({}, {{1, 1}}, d);
  want *= Rat(1, 2);
  CHECK(l2 == want);

  // [L_2, L_{-2}] = 4 L_0 - b/2 on weight <= 4
  OperatorExpr com = commutator(op_vir(2, 8, d), op_vir(-2, 8, d), d);
  OperatorExpr rhs = op_vir(0, 8, d);
  rhs *= Rat(4);
  OpTerm idt;
  idt.cls = ClassTerm::units(0);
  rhs.add(idt, Rat(-21, 2));
  auto r = operator_equal(com, rhs, 4, d);
  CHECK(r.equal);

  // [L_n, q_m(gamma)] = 0
  for (int n : {-2, 1})
    for (int m : {-1, 2})
      for (int gi = 0; gi < d.dim; ++gi) {
        OperatorExpr c2 = commutator(op_vir(n, 8, d), expr_q(m, d.basis_class(gi), d), d);
        auto rr = operator_equal(c2, zero_expr(0, d), 5, d);
        CHECK(rr.equal);
      }
}

TEST_CASE("heis-vir in one- and two-leg form") {
  SurfaceDatum d = k3_rho1();
  for (int n : {-2, 0, 1})
    for (int np : {-1, 2}) {
      // [Lehn_n(1), q_{n'}(gamma)] = -n' q_{n+n'}(gamma)
      SurfClass g = d.basis_class(1);
      OperatorExpr lhs = commutator(with_class(op_lehn(n, 8, d), one_leg(d.basis_class(0), d), d),
                                    expr_q(np, g, d), d);
      OperatorExpr rhs = expr_q(n + np, g, d);
      rhs *= Rat(-np);
      CHECK(operator_equal(lhs, rhs, 5, d).equal);

      // two-leg form: [Lehn_n, q_{n'}] = -n' Delta_*(q_{n+n'})
      OperatorExpr lhs2 = commutator(op_lehn(n, 8, d), expr_q_bare(np, d), d);
      OperatorExpr rhs2 = diag_push_free(expr_q_bare(n + np, d), d);
      rhs2 *= Rat(-np);
      CHECK(operator_equal(lhs2, rhs2, 5, d).equal);
    }
}

TEST_CASE("window contract: truncations act exactly below the window") {
  SurfaceDatum d = k3_rho1();
  auto monos = enumerate_monomials(d, 4);
  OperatorExpr small = op_G(2, 4, d), big = op_G(2, 9, d);
  for (auto& m : monos)
    CHECK(apply_expr(small, basis_vec(m), d) == apply_expr(big, basis_vec(m), d));
}

TEST_CASE("guards") {
  SurfaceConfig cfg;
  cfg.mode = SurfaceMode::Split;
  cfg.picard_rank = 1;
  cfg.picard_gram = {{Rat(2)}};
  cfg.b = 2;
  cfg.t_coeffs = {Rat(1)};
  SurfaceDatum gen = make_surface(cfg);
  CHECK_THROWS_WITH_AS(op_J(1, 1, 4, gen), "J operators require c_1 = 0", std::invalid_argument);
  CHECK_THROWS_WITH_AS(op_G(4, 4, gen), "J/G(k>=4) require c_1 = 0", std::invalid_argument);
  CHECK_NOTHROW(op_G(3, 4, gen));
  CHECK_THROWS_AS(op_G(1, 4, gen), std::invalid_argument);
}

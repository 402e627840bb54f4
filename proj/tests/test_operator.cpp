#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hilbfock/operator.hpp"

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

OperatorExpr tr_pair_expr(int m, int n, const SurfaceDatum& d) {
  // q_m q_n (Delta^tr), zero free legs
  OperatorExpr e = zero_expr(0, d);
  ClassTerm t;
  t.deco = {ClassTerm::kTr, ClassTerm::kTr};
  t.tr = {{0, 1}};
  OpTerm ot;
  ot.modes = {(int8_t)m, (int8_t)n};
  ot.cls = t;
  e.add(ot, Rat(1));
  return e;
}

}  // namespace

TEST_CASE("canonicalize emits the Heisenberg contraction") {
  SurfaceDatum d = k3_rho1();
  SurfClass l = d.basis_class(1), c = d.basis_class(d.c_index), one = d.basis_class(0);

  // q_{-n}(gamma) q_n(delta) - q_n(delta) q_{-n}(gamma) = -n <gamma,delta> Id
  for (int n = 1; n <= 3; ++n) {
    OperatorExpr lhs = compose(expr_q(-n, l, d), expr_q(n, l, d), d);
    lhs -= compose(expr_q(n, l, d), expr_q(-n, l, d), d);
    OperatorExpr canon = canonicalize(lhs, d);
    OperatorExpr want = expr_id_with_class(zero_class_on(0, d), d);
    OpTerm idt;
    idt.cls = ClassTerm::units(0);
    want.add(idt, Rat(-n) * Rat(2));  // <l,l> = 2
    CHECK(canon.terms == want.terms);
  }

  // ordered words pass through
  OperatorExpr e = compose(expr_q(2, c, d), expr_q(1, one, d), d);
  CHECK(canonicalize(e, d).terms == e.terms);

  // canonicalize is idempotent
  OperatorExpr x = compose(expr_q(-1, c, d), compose(expr_q(2, l, d), expr_q(-2, c, d), d), d);
  OperatorExpr cx = canonicalize(x, d);
  CHECK(canonicalize(cx, d).terms == cx.terms);
}

TEST_CASE("reorder_colon drops commutators") {
  SurfaceDatum d = k3_rho1();
  SurfClass l = d.basis_class(1);
  OperatorExpr e = compose(expr_q(-1, l, d), expr_q(1, l, d), d);
  OperatorExpr r = reorder_colon(e, d);
  OperatorExpr want = compose(expr_q(1, l, d), expr_q(-1, l, d), d);
  CHECK(r.terms == want.terms);
  OperatorExpr already = compose(expr_q(3, l, d), expr_q(-2, l, d), d);
  CHECK(reorder_colon(already, d).terms == already.terms);
}

TEST_CASE("commutator of attached Nakajima operators is the Heisenberg scalar") {
  for (auto d : {k3_rho1(), split_rho1()}) {
    for (int n : {-3, -1, 1, 2})
      for (int np : {-2, 1, 3}) {
        if (n == 0 || np == 0) continue;
        for (int gi = 0; gi < d.dim; ++gi)
          for (int gj = 0; gj < d.dim; ++gj) {
            OperatorExpr com =
                commutator(expr_q(n, d.basis_class(gi), d), expr_q(np, d.basis_class(gj), d), d);
            OperatorExpr want = zero_expr(0, d);
            if (n + np == 0) {
              OpTerm idt;
              idt.cls = ClassTerm::units(0);
              want.add(idt, Rat(n) * d.pair_basis(gi, gj));
            }
            CHECK(com.terms == want.terms);
          }
      }
  }
}

TEST_CASE("two-legged Heisenberg relation with free legs") {
  SurfaceDatum d = k3_rho1();
  for (int n : {1, 2}) {
    OperatorExpr com = commutator(expr_q_bare(n, d), expr_q_bare(-n, d), d);
    // n * Id x [Delta] on the two output legs
    PolarizedClass delta = diagonal(d);
    delta *= Rat(n);
    OperatorExpr want = expr_id_with_class(delta, d);
    CHECK(com.terms == want.terms);

    // and the evaluation path agrees on the vacuum
    FockVector lhs = apply_expr(com, vacuum(), d);
    FockVector rhs = apply_expr(want, vacuum(), d);
    CHECK(lhs == rhs);
    CHECK_FALSE(lhs.is_zero());
  }
}

TEST_CASE("evaluation matches apply_q for single factors") {
  for (auto d : {k3_rho1(), split_rho1()}) {
    auto monos = enumerate_monomials(d, 5);
    for (int n = -3; n <= 3; ++n) {
      if (n == 0) continue;
      for (int gi = 0; gi < d.dim; ++gi) {
        SurfClass g = d.basis_class(gi);
        OperatorExpr e = expr_q(n, g, d);
        for (size_t i = 0; i < monos.size(); i += 3) {
          FockVector w;
          w.add(monos[i], Rat(1));
          CHECK(apply_expr(e, w, d) == apply_q(n, g, w, d));
        }
      }
    }
  }
}

TEST_CASE("transcendental pair operators") {
  SurfaceDatum d = k3_rho1(21);
  // q_m q_{-m}(tr) v = 0 ; q_{-m} q_m(tr) v = -m b v
  for (int m = 1; m <= 3; ++m) {
    CHECK(apply_expr(tr_pair_expr(m, -m, d), vacuum(), d).is_zero());
    FockVector got = apply_expr(tr_pair_expr(-m, m, d), vacuum(), d);
    FockVector want = vacuum();
    want *= Rat(-m) * Rat(d.b);
    CHECK(got == want);
  }
  // creation pair: q_1 q_2 (tr) v = the pair monomial
  FockVector pair = apply_expr(tr_pair_expr(1, 2, d), vacuum(), d);
  CHECK(pair == fock_monomial({}, {{1, 2}}, d));

  // q_{-1}q_{-1}(tr) q_1q_1(tr) v = 2b v
  FockVector x = apply_expr(tr_pair_expr(-1, -1, d), apply_expr(tr_pair_expr(1, 1, d), vacuum(), d), d);
  FockVector want = vacuum();
  want *= Rat(2) * Rat(d.b);
  CHECK(x == want);

  // annihilators in the datum's span pass through pairs
  SurfClass l = d.basis_class(1);
  FockVector y = apply_expr(expr_q(-1, l, d), fock_monomial({}, {{1, 2}}, d), d);
  CHECK(y.is_zero());
}

TEST_CASE("specialize") {
  SurfaceDatum d = k3_rho1();
  SurfClass l = d.basis_class(1), c = d.basis_class(d.c_index);
  // with_class on a bare q recovers the attached operator
  for (int n : {-2, 1, 3}) {
    OperatorExpr spec = with_class(expr_q_bare(n, d), one_leg(l, d), d);
    CHECK(spec.terms == expr_q(n, l, d).terms);
  }
  // restriction then attaching gamma equals attaching the diagonal pushforward
  OperatorExpr word = compose(expr_q_bare(2, d), expr_q_bare(1, d), d);
  for (int gi = 0; gi < d.dim; ++gi) {
    SurfClass g = d.basis_class(gi);
    OperatorExpr lhs = with_class(restrict_diagonal(word, d), one_leg(g, d), d);
    OperatorExpr rhs = with_class(word, diagonal_block(2, {0, 1}, g, d), d);
    CHECK(canonicalize(lhs, d).terms == canonicalize(rhs, d).terms);
  }
  // diag_push_free then with_class(gamma x delta) = mul_free then with_class
  OperatorExpr pushed = diag_push_free(expr_q_bare(2, d), d);
  OperatorExpr a = with_class(pushed, tensor_class({l, c}, d), d);
  OperatorExpr b2 = with_class(mul_free(expr_q_bare(2, d), 0, d.mul(l, c), d),
                               one_leg(d.basis_class(0), d), d);
  CHECK(canonicalize(a, d).terms == canonicalize(b2, d).terms);
}

TEST_CASE("canonicalize preserves the operator (randomized)") {
  std::mt19937_64 rng(77001);
  for (auto d : {k3_rho1(2), split_rho1(2)}) {
    auto monos = enumerate_monomials(d, 5);
    for (int trial = 0; trial < 60; ++trial) {
      // random word of 2-3 attached operators, some tr pairs in k3 mode
      OperatorExpr e = zero_expr(0, d);
      OpTerm t;
      int nmodes = 2 + (int)(rng() % 2);
      t.cls = ClassTerm::units(nmodes);
      for (int i = 0; i < nmodes; ++i) {
        int m = 1 + (int)(rng() % 3);
        t.modes.push_back((int8_t)(rng() % 2 ? m : -m));
        t.cls.deco[i] = (int8_t)(rng() % d.dim);
      }
      if (d.mode == SurfaceMode::K3Chow && nmodes >= 2 && rng() % 2) {
        t.cls.deco[0] = ClassTerm::kTr;
        t.cls.deco[1] = ClassTerm::kTr;
        t.cls.tr = {{0, 1}};
      }
      e.add(t, Rat(1 + (int)(rng() % 3), 1 + (int)(rng() % 2)));
      OperatorExpr ce = canonicalize(e, d);
      for (size_t i = 0; i < monos.size(); i += 5) {
        FockVector w;
        w.add(monos[i], Rat(1));
        CHECK(apply_expr(e, w, d) == apply_expr(ce, w, d));
      }
    }
  }
}

TEST_CASE("operator_equal") {
  SurfaceDatum d = k3_rho1();
  SurfClass l = d.basis_class(1);
  OperatorExpr a = compose(expr_q(1, l, d), expr_q(-1, l, d), d);
  OperatorExpr b = compose(expr_q(-1, l, d), expr_q(1, l, d), d);
  auto r1 = operator_equal(reorder_colon(b, d), a, 4, d);
  CHECK(r1.equal);
  CHECK(r1.method == "canonical");
  auto r2 = operator_equal(a, b, 4, d);
  CHECK_FALSE(r2.equal);
  CHECK(r2.residual != "");
}

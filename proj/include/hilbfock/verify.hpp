#pragma once

#include "hilbfock/named_ops.hpp"

namespace hilbfock {

struct CheckResult {
  bool pass = false;
  std::string method;
  std::string residual;
  std::string note;
};

// Memoized application of a fixed operator at a fixed free-leg offset.
class CachedOp {
 public:
  CachedOp() = default;
  CachedOp(OperatorExpr e, int in_free) : e_(std::move(e)), in_free_(in_free) {}
  const FockVector& on(const FockMono& m, const SurfaceDatum& d);
  FockVector apply(const FockVector& w, const SurfaceDatum& d);
  const OperatorExpr& expr() const { return e_; }

 private:
  OperatorExpr e_;
  int in_free_ = 0;
  std::map<FockMono, FockVector> cache_;
};

// [A, B] evaluated on w, with A's free legs placed first.
FockVector commutator_eval(CachedOp& a_first, CachedOp& a_second, CachedOp& b_first,
                           CachedOp& b_second, const FockVector& w, const SurfaceDatum& d);

// relabel the free legs of every monomial (perm[old] = new)
FockVector relabel_free(const FockVector& v, const std::vector<int>& perm);

// --- individual identity instances; W = evaluation weight bound ------------

CheckResult check_heis(int n, int np, int gi, int gj, int W, const SurfaceDatum& d);
CheckResult check_heis_vir(int n, int np, int W, const SurfaceDatum& d);      // two-leg form
CheckResult check_vir_vir(int n, int np, int W, const SurfaceDatum& d);       // two-leg form
CheckResult check_vir_central(int n, int np, int W, const SurfaceDatum& d);   // L_n with charge b
CheckResult check_commute(int n, int m, int gi, int W, const SurfaceDatum& d);
CheckResult check_lqw_rel(int rel, int n, int np, int W, const SurfaceDatum& d);  // rel in 2..5
CheckResult check_lqw_special4(int sign, int k, int W, const SurfaceDatum& d);
CheckResult check_lqw_special5(int a, int k, int W, const SurfaceDatum& d);

struct OmegaResult {
  bool structural_ok = false;
  bool base_zero = false;  // the target operator vanishes on the window
  Rat omega;
  std::string residual;
};

// Shares the truncated W-operator applications across many instances.
class LqwEngine {
 public:
  LqwEngine(const SurfaceDatum& d, int W) : d_(d), W_(W) {}
  CheckResult rel(int rel, int n, int np);
  CheckResult special4(int sign, int k);
  CheckResult special5(int a, int k);
  OmegaResult omega(int n, int np, int k, int kp);

 private:
  friend struct LqwAccess;
  const SurfaceDatum& d_;
  int W_;
  std::map<std::tuple<int, int, int>, CachedOp> jops_;     // (n, k, in_free)
  std::map<std::pair<int, int>, CachedOp> pushed_;         // Delta_*(J)
  std::map<std::pair<int, int>, CachedOp> pushed_e_;       // Delta_*((e/12) J)
  CachedOp& J(int n, int k, int in_free);
  CachedOp& pushed(int n, int k);
  CachedOp& pushed_e(int n, int k);
  FockVector bracket(int n, int k, int np, int kp, const FockVector& w);
};
CheckResult check_formula_j(int k, int W, const SurfaceDatum& d);  // J(0,k) vs k! G-combination
CheckResult check_oi(int m, int n, int k, int gi, int W, const SurfaceDatum& d);
CheckResult check_oioi(int m, int n, int mp, int npp, int W, const SurfaceDatum& d);
CheckResult check_oioi_tr(int m, int n, int mp, int npp, int W, const SurfaceDatum& d);
CheckResult check_prop2_a(int m, int W, const SurfaceDatum& d);
CheckResult check_prop2_b(int m, int n, int W, const SurfaceDatum& d);

OmegaResult extract_omega(int n, int np, int k, int kp, int W, const SurfaceDatum& d);

// Constructive decomposition of G_k(gamma) into words in {q_n(delta), L_m}.
struct DecompositionWord {
  Rat coeff;
  // atoms applied right to left; mode != 0 with basis >= 0 is q, basis < 0 is L
  std::vector<std::pair<int, int>> atoms;  // (mode, basis idx) or (s, -1) for L_s
};
struct DecompositionResult {
  std::vector<DecompositionWord> words;
  CheckResult cert;
  std::string printed;
};
DecompositionResult decompose_G(int k, int gi, int W, const SurfaceDatum& d);

}  // namespace hilbfock

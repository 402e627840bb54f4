#pragma once

#include "hilbfock/scalar_field.hpp"
#include "hilbfock/verify.hpp"

namespace hilbfock {

// Matrices over rows/columns indexed by {-N..-1, 1..N}, dense and exact.
struct SpMatrix {
  int N = 0;
  std::vector<std::vector<Rat>> a;  // 2N x 2N

  explicit SpMatrix(int n) : N(n), a(2 * n, std::vector<Rat>(2 * n, Rat(0))) {}
  static int idx(int i, int N) { return i > 0 ? i - 1 : N - i - 1; }
  Rat& at(int r, int c) { return a[idx(r, N)][idx(c, N)]; }
  const Rat& at(int r, int c) const { return a[idx(r, N)][idx(c, N)]; }
  bool operator==(const SpMatrix& o) const { return N == o.N && a == o.a; }
  SpMatrix operator*(const SpMatrix& o) const;
  SpMatrix operator-(const SpMatrix& o) const;
  SpMatrix& operator+=(const SpMatrix& o);
  SpMatrix& scale(const Rat& c);
  bool is_zero() const;
};

// d_{m,n} = E_{m,-n} + sign(m) sign(n) E_{n,-m}
SpMatrix sp_generator(int m, int n, int N);
// block conditions of the symplectic algebra
bool sp_member(const SpMatrix& x);
// [d,d'] against the four-term structure constants, full sweep |.| <= N
CheckResult verify_sp_relations(int N);

// Operator with coefficients in the radical scalar field, componentwise over
// square-free radicands.
struct RadOp {
  std::map<long long, OperatorExpr> comps;
  void add(long long r, const OperatorExpr& e, const Rat& scale);
};
struct RadVector {
  std::map<long long, FockVector> comps;
  void add(long long r, const FockVector& v, const Rat& scale);
  bool is_zero() const { return comps.empty(); }
  bool operator==(const RadVector& o) const { return comps == o.comps; }
  std::string str(const SurfaceDatum& d) const;
};

// D_{m,n} = (sign n / sqrt|mn|) q_m q_n(tr) + delta_{m+n} (b/2) Id
RadOp D_operator(int m, int n, const SurfaceDatum& d);
RadVector rad_apply(const RadOp& op, const RadVector& v, const SurfaceDatum& d);
RadVector rad_from(const FockVector& v);

// Eq. sp rel realized by the D operators on the Fock model, one instance.
CheckResult check_sp_rel_D(int m, int n, int mp, int np, int W, const SurfaceDatum& d);
// D_{m,-m} v = (b/2) v
CheckResult check_sp_highest(int m, const SurfaceDatum& d);
// q_{-n} q_n(tr) = q_n q_{-n}(tr) - n b Id
CheckResult check_tr_reorder(int n, int W, const SurfaceDatum& d);

}  // namespace hilbfock

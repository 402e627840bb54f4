#include "hilbfock/sp_algebra.hpp"

#include <sstream>

namespace hilbfock {

SpMatrix SpMatrix::operator*(const SpMatrix& o) const {
  SpMatrix r(N);
  for (int i = 0; i < 2 * N; ++i)
    for (int k = 0; k < 2 * N; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < 2 * N; ++j)
        if (!o.a[k][j].is_zero()) r.a[i][j] += a[i][k] * o.a[k][j];
    }
  return r;
}

SpMatrix SpMatrix::operator-(const SpMatrix& o) const {
  SpMatrix r = *this;
  for (int i = 0; i < 2 * N; ++i)
    for (int j = 0; j < 2 * N; ++j) r.a[i][j] -= o.a[i][j];
  return r;
}

SpMatrix& SpMatrix::operator+=(const SpMatrix& o) {
  for (int i = 0; i < 2 * N; ++i)
    for (int j = 0; j < 2 * N; ++j) a[i][j] += o.a[i][j];
  return *this;
}

SpMatrix& SpMatrix::scale(const Rat& c) {
  for (auto& row : a)
    for (auto& x : row) x *= c;
  return *this;
}

bool SpMatrix::is_zero() const {
  for (auto& row : a)
    for (auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

SpMatrix sp_generator(int m, int n, int N) {
  if (m == 0 || n == 0 || std::abs(m) > N || std::abs(n) > N)
    throw std::invalid_argument("sp_generator: index out of range");
  SpMatrix d(N);
  int sg = (m > 0 ? 1 : -1) * (n > 0 ? 1 : -1);
  d.at(m, -n) += Rat(1);
  d.at(n, -m) += Rat(sg);
  return d;
}

bool sp_member(const SpMatrix& x) {
  int N = x.N;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      if (x.at(i, -j) != x.at(j, -i)) return false;       // +/- block symmetric
      if (x.at(-i, j) != x.at(-j, i)) return false;       // -/+ block symmetric
      if (x.at(-i, -j) != -x.at(j, i)) return false;      // -- block = -transpose of ++
    }
  return true;
}

CheckResult verify_sp_relations(int N) {
  CheckResult res;
  res.method = "matrix(N=" + std::to_string(N) + ")";
  auto sign = [](int x) { return x > 0 ? 1 : -1; };
  for (int m = -N; m <= N; ++m)
    for (int n = -N; n <= N; ++n) {
      if (m == 0 || n == 0) continue;
      if (!sp_member(sp_generator(m, n, N))) {
        res.pass = false;
        res.residual = "d(" + std::to_string(m) + "," + std::to_string(n) + ") not in sp";
        return res;
      }
      for (int mp = -N; mp <= N; ++mp)
        for (int np = -N; np <= N; ++np) {
          if (mp == 0 || np == 0) continue;
          SpMatrix lhs = sp_generator(m, n, N) * sp_generator(mp, np, N) -
                         sp_generator(mp, np, N) * sp_generator(m, n, N);
          SpMatrix rhs(N);
          if (n + mp == 0) rhs += sp_generator(m, np, N);
          if (m + mp == 0) {
            SpMatrix t = sp_generator(n, np, N);
            t.scale(Rat(sign(m) * sign(n)));
            rhs += t;
          }
          if (n + np == 0) {
            SpMatrix t = sp_generator(m, mp, N);
            t.scale(Rat(sign(mp) * sign(np)));
            rhs += t;
          }
          if (m + np == 0) {
            SpMatrix t = sp_generator(n, mp, N);
            t.scale(Rat(sign(m) * sign(n) * sign(mp) * sign(np)));
            rhs += t;
          }
          if (!(lhs - rhs).is_zero()) {
            res.pass = false;
            std::ostringstream os;
            os << "[d(" << m << "," << n << "), d(" << mp << "," << np << ")] mismatch";
            res.residual = os.str();
            return res;
          }
        }
    }
  res.pass = true;
  return res;
}

void RadOp::add(long long r, const OperatorExpr& e, const Rat& scale) {
  auto [root, sf] = ScalarField::split_square(r);
  OperatorExpr& slot = comps[sf];
  slot.free_legs = e.free_legs;
  slot.rep = e.rep;
  for (auto& [t, c] : e.terms) slot.add(t, c * scale * Rat(root));
  if (slot.is_zero()) comps.erase(sf);
}

void RadVector::add(long long r, const FockVector& v, const Rat& scale) {
  if (scale.is_zero() || v.is_zero()) return;
  auto [root, sf] = ScalarField::split_square(r);
  FockVector& slot = comps[sf];
  for (auto& [m, c] : v.terms) slot.add(m, c * scale * Rat(root));
  if (slot.is_zero()) comps.erase(sf);
}

std::string RadVector::str(const SurfaceDatum& d) const {
  if (comps.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [r, v] : comps) {
    os << (first ? "" : " + ");
    first = false;
    if (r != 1) os << "sqrt(" << r << ")*";
    os << "(" << v.str(d) << ")";
  }
  return os.str();
}

RadOp D_operator(int m, int n, const SurfaceDatum& d) {
  if (m == 0 || n == 0) throw std::invalid_argument("D_operator: nonzero indices required");
  RadOp op;
  long long mn = std::llabs((long long)m * n);
  // sign(n)/sqrt(|mn|) = sign(n) sqrt(s)/(s g) with |mn| = g^2 s
  auto [root, sf] = ScalarField::split_square(mn);
  Rat coeff = Rat(n > 0 ? 1 : -1) * Rat(1, root * sf);
  op.add(sf, op_tr_pair(m, n, d), coeff);
  if (m + n == 0) {
    OperatorExpr id = zero_expr(0, d);
    OpTerm idt;
    idt.cls = ClassTerm::units(0);
    id.add(idt, Rat(1));
    op.add(1, id, Rat(d.b, 2));
  }
  return op;
}

RadVector rad_apply(const RadOp& op, const RadVector& v, const SurfaceDatum& d) {
  RadVector out;
  for (auto& [r1, e] : op.comps)
    for (auto& [r2, w] : v.comps) {
      long long g = std::gcd(r1, r2);
      out.add((r1 / g) * (r2 / g), apply_expr(e, w, d), Rat(g));
    }
  return out;
}

RadVector rad_from(const FockVector& v) {
  RadVector r;
  r.add(1, v, Rat(1));
  return r;
}

CheckResult check_sp_rel_D(int m, int n, int mp, int np, int W, const SurfaceDatum& d) {
  CheckResult res;
  res.method = "evaluated(weight<=" + std::to_string(W) + "),radical";
  RadOp A = D_operator(m, n, d), B = D_operator(mp, np, d);
  auto sign = [](int x) { return x > 0 ? 1 : -1; };
  std::vector<std::pair<Rat, RadOp>> rhs;
  if (n + mp == 0) rhs.emplace_back(Rat(1), D_operator(m, np, d));
  if (m + mp == 0) rhs.emplace_back(Rat(sign(m) * sign(n)), D_operator(n, np, d));
  if (n + np == 0) rhs.emplace_back(Rat(sign(mp) * sign(np)), D_operator(m, mp, d));
  if (m + np == 0)
    rhs.emplace_back(Rat(sign(m) * sign(n) * sign(mp) * sign(np)), D_operator(n, mp, d));
  for (auto& mono : cached_monomials(d, W)) {
    FockVector w;
    w.add(mono, Rat(1));
    RadVector rw = rad_from(w);
    RadVector lhs = rad_apply(A, rad_apply(B, rw, d), d);
    RadVector ba = rad_apply(B, rad_apply(A, rw, d), d);
    for (auto& [r, v] : ba.comps) lhs.add(r, v, Rat(-1));
    for (auto& [coeff, op] : rhs) {
      RadVector t = rad_apply(op, rw, d);
      for (auto& [r, v] : t.comps) lhs.add(r, v, -coeff);
    }
    if (!lhs.is_zero()) {
      res.pass = false;
      res.residual = "on " + mono.str(d) + ": " + lhs.str(d);
      return res;
    }
  }
  res.pass = true;
  return res;
}

CheckResult check_sp_highest(int m, const SurfaceDatum& d) {
  CheckResult res;
  res.method = "evaluated(vacuum),radical";
  RadVector got = rad_apply(D_operator(m, -m, d), rad_from(vacuum()), d);
  FockVector want = vacuum();
  want *= Rat(d.b, 2);
  RadVector diff = got;
  diff.add(1, want, Rat(-1));
  res.pass = diff.is_zero();
  if (!res.pass) res.residual = diff.str(d);
  return res;
}

CheckResult check_tr_reorder(int n, int W, const SurfaceDatum& d) {
  OperatorExpr lhs = op_tr_pair(-n, n, d);
  OperatorExpr rhs = op_tr_pair(n, -n, d);
  OpTerm idt;
  idt.cls = ClassTerm::units(0);
  rhs.add(idt, Rat(-(long long)n * d.b));
  CheckResult res;
  EqualResult eq = operator_equal(lhs, rhs, W, d);
  res.pass = eq.equal;
  res.method = eq.method;
  res.residual = eq.residual;
  return res;
}

}  // namespace hilbfock

#include "hilbfock/named_ops.hpp"

#include <functional>

namespace hilbfock {

namespace {

void rec_partitions(int pos, int length, int max_part, int rem_sum, int ann_left,
                    std::vector<int>& parts,
                    const std::function<void(const std::vector<int>&)>& fn) {
  if (pos == length) {
    if (rem_sum == 0) fn(parts);
    return;
  }
  int rest = length - pos;
  int hi = std::min(max_part, rem_sum + ann_left);
  for (int p = hi; p >= -ann_left; --p) {
    if (p == 0) continue;
    // weakly decreasing: remaining parts are <= p, so their sum is <= p*rest
    if (rem_sum - p > p * (rest - 1)) continue;
    int ann2 = ann_left - (p < 0 ? -p : 0);
    if (rem_sum - p < -ann2) continue;
    parts[pos] = p;
    rec_partitions(pos + 1, length, p, rem_sum - p, ann2, parts, fn);
  }
}

}  // namespace

void for_each_partition(int length, int sum, int ann_budget,
                        const std::function<void(const std::vector<int>&)>& fn) {
  if (length == 0) {
    if (sum == 0) {
      std::vector<int> empty;
      fn(empty);
    }
    return;
  }
  std::vector<int> parts(length);
  rec_partitions(0, length, sum + ann_budget, sum, ann_budget, parts, fn);
}

PartitionStats partition_stats(const std::vector<int>& parts) {
  PartitionStats st;
  st.fact = Rat(1);
  int run = 1;
  for (size_t i = 0; i < parts.size(); ++i) {
    st.square_sum += (long long)parts[i] * parts[i];
    if (i + 1 < parts.size() && parts[i + 1] == parts[i]) {
      ++run;
      st.fact *= Rat(run);
    } else {
      run = 1;
    }
  }
  return st;
}

OperatorExpr op_lehn(int n, int window, const SurfaceDatum& d) {
  OperatorExpr e = zero_expr(1, d);
  std::vector<int> legs3 = {0, 1, 2};
  PolarizedClass diag3 = diagonal_block(3, legs3, d.basis_class(0), d);
  for_each_partition(2, n, window, [&](const std::vector<int>& parts) {
    Rat coeff = parts[0] == parts[1] ? Rat(1, 2) : Rat(1);
    e.add_class({(int8_t)parts[0], (int8_t)parts[1]}, diag3, coeff);
  });
  return e;
}

// The transcendental diagonal on S^2: a formal edge in k3-chow mode, the
// explicit Kunneth tensor over the tau block in split mode.
static PolarizedClass tr_diagonal(const SurfaceDatum& d) {
  PolarizedClass tr = zero_class_on(2, d);
  if (d.mode == SurfaceMode::K3Chow) {
    ClassTerm t;
    t.deco = {ClassTerm::kTr, ClassTerm::kTr};
    t.tr = {{0, 1}};
    tr.add(t, Rat(1));
  } else {
    for (int al = 0; al < d.b; ++al)
      for (int be = 0; be < d.b; ++be) {
        int ia = 1 + d.picard_rank + al, ib = 1 + d.picard_rank + be;
        Rat w = d.dual_[ia][ib];
        if (w.is_zero()) continue;
        ClassTerm t = ClassTerm::units(2);
        t.deco = {(int8_t)ia, (int8_t)ib};
        tr.add(t, w);
      }
  }
  return tr;
}

OperatorExpr op_vir(int n, int window, const SurfaceDatum& d) {
  OperatorExpr e = zero_expr(0, d);
  PolarizedClass tr = tr_diagonal(d);
  for_each_partition(2, n, window, [&](const std::vector<int>& parts) {
    Rat coeff = parts[0] == parts[1] ? Rat(1, 2) : Rat(1);
    e.add_class({(int8_t)parts[0], (int8_t)parts[1]}, tr, coeff);
  });
  return e;
}

OperatorExpr op_J(int n, int k, int window, const SurfaceDatum& d) {
  if (k < 0) throw std::invalid_argument("op_J: k >= 0 required");
  if (!d.t_is_zero()) throw std::invalid_argument("J operators require c_1 = 0");
  OperatorExpr e = zero_expr(1, d);
  Rat kfact = factorial(k);

  {  // main partition sum, length k+1
    std::vector<int> all(k + 2);
    for (int i = 0; i < k + 2; ++i) all[i] = i;
    PolarizedClass diag = diagonal_block(k + 2, all, d.basis_class(0), d);
    for_each_partition(k + 1, n, window, [&](const std::vector<int>& parts) {
      PartitionStats st = partition_stats(parts);
      std::vector<int8_t> modes(parts.begin(), parts.end());
      e.add_class(modes, diag, -kfact / st.fact);
    });
  }
  if (k >= 2) {  // Euler-class correction sum, length k-1 (nonempty)
    std::vector<int> all(k);
    for (int i = 0; i < k; ++i) all[i] = i;
    PolarizedClass diag_e = diagonal_block(k, all, d.e_class(), d);
    for_each_partition(k - 1, n, window, [&](const std::vector<int>& parts) {
      PartitionStats st = partition_stats(parts);
      std::vector<int8_t> modes(parts.begin(), parts.end());
      Rat num = Rat(st.square_sum) + Rat((long long)n * n - 2);
      e.add_class(modes, diag_e, kfact * num / (Rat(24) * st.fact));
    });
  }
  return e;
}

OperatorExpr op_G(int k, int window, const SurfaceDatum& d) {
  if (k < 2) throw std::invalid_argument("op_G: k >= 2 required");
  if (k >= 4 && !d.t_is_zero())
    throw std::invalid_argument("J/G(k>=4) require c_1 = 0");
  OperatorExpr e = zero_expr(1, d);
  if (k == 2) {
    PolarizedClass diag3 = diagonal_block(3, {0, 1, 2}, d.basis_class(0), d);
    for (int n = 1; n <= window; ++n)
      e.add_class({(int8_t)n, (int8_t)(-n)}, diag3, Rat(-1));
    return e;
  }
  if (k == 3) {
    PolarizedClass diag4 = diagonal_block(4, {0, 1, 2, 3}, d.basis_class(0), d);
    for_each_partition(3, 0, window, [&](const std::vector<int>& parts) {
      PartitionStats st = partition_stats(parts);
      std::vector<int8_t> modes(parts.begin(), parts.end());
      e.add_class(modes, diag4, Rat(-1) / st.fact);
    });
    if (!d.t_is_zero()) {
      PolarizedClass diag_t = diagonal_block(3, {0, 1, 2}, d.t_class(), d);
      for (int n = 1; n <= window; ++n)
        e.add_class({(int8_t)n, (int8_t)(-n)}, diag_t, Rat(-n, 2));
    }
    return e;
  }
  // J_0^{k-1}/(k-1)! - (e/12) G_{k-2}
  e = op_J(0, k - 1, window, d);
  e *= Rat(1) / factorial(k - 1);
  SurfClass e12 = d.e_class();
  for (auto& x : e12) x *= Rat(1, 12);
  OperatorExpr lower = mul_free(op_G(k - 2, window, d), 0, e12, d);
  lower *= Rat(-1);
  e += lower;
  return e;
}

OperatorExpr op_tr_pair(int m, int n, const SurfaceDatum& d) {
  OperatorExpr e = zero_expr(0, d);
  if (m == 0 || n == 0) return e;
  e.add_class({(int8_t)m, (int8_t)n}, tr_diagonal(d), Rat(1));
  return e;
}

}  // namespace hilbfock

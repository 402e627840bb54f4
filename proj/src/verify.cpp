#include "hilbfock/verify.hpp"

#include <sstream>

#include "hilbfock/parallel.hpp"

namespace hilbfock {

const FockVector& CachedOp::on(const FockMono& m, const SurfaceDatum& d) {
  auto it = cache_.find(m);
  if (it != cache_.end()) return it->second;
  FockVector w;
  w.add(m, Rat(1));
  return cache_.emplace(m, apply_expr(e_, w, d, in_free_)).first->second;
}

FockVector CachedOp::apply(const FockVector& w, const SurfaceDatum& d) {
  FockVector out;
  for (auto& [m, c] : w.terms) {
    const FockVector& part = on(m, d);
    for (auto& [pm, pc] : part.terms) out.add(pm, pc * c);
  }
  return out;
}

FockVector relabel_free(const FockVector& v, const std::vector<int>& perm) {
  FockVector out;
  for (auto& [m, c] : v.terms) {
    FockMono nm = m;
    for (auto& e : nm.open) e.second = (int8_t)perm[e.second];
    for (auto& e : nm.fdeco) e.first = (int8_t)perm[e.first];
    for (auto& e : nm.ftr) {
      e.first = (int8_t)perm[e.first];
      e.second = (int8_t)perm[e.second];
    }
    nm.normalize();
    out.add(nm, c);
  }
  return out;
}

FockVector commutator_eval(CachedOp& a_first, CachedOp& a_second, CachedOp& b_first,
                           CachedOp& b_second, const FockVector& w, const SurfaceDatum& d) {
  int am = a_first.expr().free_legs, bm = b_first.expr().free_legs;
  // A after B: B's legs land first; permute to put A's legs first
  FockVector ab = a_second.apply(b_first.apply(w, d), d);
  std::vector<int> perm(am + bm);
  for (int f = 0; f < bm; ++f) perm[f] = am + f;
  for (int f = 0; f < am; ++f) perm[bm + f] = f;
  ab = relabel_free(ab, perm);
  FockVector ba = b_second.apply(a_first.apply(w, d), d);
  ab -= ba;
  return ab;
}

namespace {

std::string eval_method(int W) { return "evaluated(weight<=" + std::to_string(W) + ")"; }

CheckResult eval_sweep(int W, const SurfaceDatum& d, bool parallel,
                       const std::function<FockVector(const FockVector&)>& resid) {
  const auto& monos = cached_monomials(d, W);
  std::vector<std::string> fail(monos.size());
  std::vector<char> bad(monos.size(), 0);
  auto run_one = [&](int i) {
    FockVector w;
    w.add(monos[i], Rat(1));
    FockVector r = resid(w);
    if (!r.is_zero()) {
      bad[i] = 1;
      fail[i] = "on " + monos[i].str(d) + ": " + r.str(d);
    }
  };
  if (parallel)
    parallel_for_index((int)monos.size(), run_one);
  else
    for (int i = 0; i < (int)monos.size(); ++i) run_one(i);
  CheckResult res;
  res.method = eval_method(W);
  for (size_t i = 0; i < monos.size(); ++i)
    if (bad[i]) {
      res.pass = false;
      res.residual = fail[i];
      return res;
    }
  res.pass = true;
  return res;
}

CheckResult from_equal(const EqualResult& e) {
  CheckResult r;
  r.pass = e.equal;
  r.method = e.method;
  r.residual = e.residual;
  return r;
}

// q_m q_n with the full diagonal class attached (composition order as written)
OperatorExpr qq_delta(int m, int n, const SurfaceDatum& d) {
  OperatorExpr e = zero_expr(0, d);
  if (m == 0 || n == 0) return e;
  e.add_class({(int8_t)m, (int8_t)n}, diagonal(d), Rat(1));
  return e;
}

PolarizedClass delta_e_class(const SurfaceDatum& d) {
  return diagonal_block(2, {0, 1}, d.e_class(), d);
}

}  // namespace

namespace {

// Flat evaluation of the Heisenberg commutator on one creation section.
// Terms live in stack buffers; the pair sections are spectators (annihilators
// in the datum's span pass through them), so the sweep runs on deduplicated
// creation sections.
struct HeisKernel {
  static constexpr int kMax = 24;
  struct Term {
    int8_t len;
    std::pair<int8_t, int8_t> e[kMax];
    Rat coeff;
  };
  using Terms = std::vector<Term>;

  const SurfaceDatum& d;
  int n, np, gi, gj;
  Rat central;

  static void insert_entry(Term& t, std::pair<int8_t, int8_t> entry) {
    int i = t.len;
    while (i > 0 && entry < t.e[i - 1]) {
      t.e[i] = t.e[i - 1];
      --i;
    }
    t.e[i] = entry;
    ++t.len;
  }

  void apply_one(int mode, int cls, const Term& in, Terms& out) const {
    if (mode > 0) {
      Term t = in;
      insert_entry(t, {(int8_t)mode, (int8_t)cls});
      out.push_back(t);
      return;
    }
    for (int i = 0; i < in.len; ++i) {
      if (in.e[i].first != (int8_t)(-mode)) continue;
      if (i > 0 && in.e[i] == in.e[i - 1]) continue;  // group equal entries
      int count = 1;
      for (int j = i + 1; j < in.len && in.e[j] == in.e[i]; ++j) ++count;
      Rat p = d.pair_basis(cls, in.e[i].second);
      if (p.is_zero()) continue;
      Term t;
      t.len = 0;
      t.coeff = in.coeff * p * Rat(mode) * Rat(count);
      for (int j = 0; j < in.len; ++j)
        if (j != i) t.e[t.len++] = in.e[j];
      out.push_back(t);
    }
  }

  bool residual_zero(const FockMono& m) const {
    Term base;
    base.len = (int8_t)m.cre.size();
    for (size_t i = 0; i < m.cre.size(); ++i) base.e[i] = m.cre[i];
    base.coeff = Rat(1);
    Terms acc;
    Terms tmp;
    // A B w
    apply_one(np, gj, base, tmp);
    for (auto& t : tmp) apply_one(n, gi, t, acc);
    // - B A w
    tmp.clear();
    apply_one(n, gi, base, tmp);
    for (auto& t : tmp) {
      Terms t2;
      apply_one(np, gj, t, t2);
      for (auto& u : t2) {
        u.coeff = -u.coeff;
        acc.push_back(u);
      }
    }
    // - central w
    if (!central.is_zero()) {
      Term t = base;
      t.coeff = -central;
      acc.push_back(t);
    }
    // merge and test
    for (size_t i = 0; i < acc.size(); ++i) {
      if (acc[i].coeff.is_zero()) continue;
      Rat sum = acc[i].coeff;
      for (size_t j = i + 1; j < acc.size(); ++j) {
        if (acc[j].coeff.is_zero() || acc[j].len != acc[i].len) continue;
        bool same = true;
        for (int x = 0; x < acc[i].len && same; ++x) same = acc[j].e[x] == acc[i].e[x];
        if (same) {
          sum += acc[j].coeff;
          acc[j].coeff = Rat(0);
        }
      }
      if (!sum.is_zero()) return false;
    }
    return true;
  }
};

}  // namespace

CheckResult check_heis(int n, int np, int gi, int gj, int W, const SurfaceDatum& d) {
  Rat central = (n + np == 0) ? Rat(n) * d.pair_basis(gi, gj) : Rat(0);
  HeisKernel kernel{d, n, np, gi, gj, central};
  const auto& monos = cached_cre_monomials(d, W);
  CheckResult res;
  res.method = eval_method(W) + ",flat";
  std::vector<char> bad(monos.size(), 0);
  parallel_for_index((int)monos.size(), [&](int i) {
    if (!kernel.residual_zero(monos[i])) bad[i] = 1;
  });
  for (size_t i = 0; i < monos.size(); ++i)
    if (bad[i]) {
      res.pass = false;
      res.residual = "on " + monos[i].str(d) + ": nonzero residual";
      return res;
    }
  res.pass = true;
  return res;
}

CheckResult check_heis_vir(int n, int np, int W, const SurfaceDatum& d) {
  OperatorExpr lehn = op_lehn(n, W + std::max(0, np), d);
  OperatorExpr q = expr_q_bare(np, d);
  OperatorExpr lhs = commutator(lehn, q, d);
  OperatorExpr rhs = diag_push_free(expr_q_bare(n + np, d), d);
  rhs *= Rat(-np);
  return from_equal(operator_equal(lhs, rhs, W, d));
}

CheckResult check_vir_vir(int n, int np, int W, const SurfaceDatum& d) {
  int slack = std::max({0, n, np});
  OperatorExpr lhs = commutator(op_lehn(n, W + slack, d), op_lehn(np, W + slack, d), d);
  OperatorExpr rhs = diag_push_free(op_lehn(n + np, W, d), d);
  rhs *= Rat(n - np);
  if (n + np == 0) {
    PolarizedClass ce = delta_e_class(d);
    ce *= Rat(-(long long)n * n * n + n, 12);
    rhs += expr_id_with_class(ce, d);
  }
  return from_equal(operator_equal(lhs, rhs, W, d));
}

CheckResult check_vir_central(int n, int np, int W, const SurfaceDatum& d) {
  int slack = std::max({0, n, np});
  OperatorExpr lhs = commutator(op_vir(n, W + slack, d), op_vir(np, W + slack, d), d);
  OperatorExpr rhs = op_vir(n + np, W, d);
  rhs *= Rat(n - np);
  if (n + np == 0) {
    OpTerm idt;
    idt.cls = ClassTerm::units(0);
    rhs.add(idt, Rat(-(long long)n * n * n + n, 12) * Rat(d.b));
  }
  return from_equal(operator_equal(lhs, rhs, W, d));
}

CheckResult check_commute(int n, int m, int gi, int W, const SurfaceDatum& d) {
  OperatorExpr lhs =
      commutator(op_vir(n, W + std::max(0, m), d), expr_q(m, d.basis_class(gi), d), d);
  return from_equal(operator_equal(lhs, zero_expr(0, d), W, d));
}

CachedOp& LqwEngine::J(int n, int k, int in_free) {
  auto key = std::make_tuple(n, k, in_free);
  auto it = jops_.find(key);
  if (it == jops_.end()) it = jops_.emplace(key, CachedOp(op_J(n, k, W_ + 3, d_), in_free)).first;
  return it->second;
}

CachedOp& LqwEngine::pushed(int n, int k) {
  auto key = std::make_pair(n, k);
  auto it = pushed_.find(key);
  if (it == pushed_.end())
    it = pushed_.emplace(key, CachedOp(diag_push_free(op_J(n, k, W_, d_), d_), 0)).first;
  return it->second;
}

CachedOp& LqwEngine::pushed_e(int n, int k) {
  auto key = std::make_pair(n, k);
  auto it = pushed_e_.find(key);
  if (it == pushed_e_.end()) {
    SurfClass e12 = d_.e_class();
    for (auto& x : e12) x *= Rat(1, 12);
    it = pushed_e_
             .emplace(key, CachedOp(diag_push_free(mul_free(op_J(n, k, W_, d_), 0, e12, d_), d_), 0))
             .first;
  }
  return it->second;
}

FockVector LqwEngine::bracket(int n, int k, int np, int kp, const FockVector& w) {
  return commutator_eval(J(n, k, 0), J(n, k, 1), J(np, kp, 0), J(np, kp, 1), w, d_);
}

CheckResult LqwEngine::rel(int rel, int n, int np) {
  int k = 0, kp = 0;
  switch (rel) {
    case 2: k = 0, kp = 0; break;
    case 3: k = 1, kp = 0; break;
    case 4: k = 2, kp = 0; break;
    case 5: k = 1, kp = 1; break;
    default: throw std::invalid_argument("lqw rel must be in 2..5");
  }
  OperatorExpr central = zero_expr(2, d_);
  CachedOp* linear = nullptr;
  Rat linear_coeff(0);
  if (rel == 2) {
    if (n + np == 0) {
      PolarizedClass delta = diagonal(d_);
      delta *= Rat(n);
      central += expr_id_with_class(delta, d_);
    }
  } else if (rel == 3) {
    linear = &pushed(n + np, 0);
    linear_coeff = Rat(np);
  } else if (rel == 4) {
    linear = &pushed(n + np, 1);
    linear_coeff = Rat(2 * np);
    if (n + np == 0) {
      PolarizedClass ce = delta_e_class(d_);
      ce *= Rat(-((long long)n * n * n - n), 6);
      central += expr_id_with_class(ce, d_);
    }
  } else {
    linear = &pushed(n + np, 1);
    linear_coeff = Rat(np - n);
    if (n + np == 0) {
      PolarizedClass ce = delta_e_class(d_);
      ce *= Rat(-((long long)n * n * n - n), 12);
      central += expr_id_with_class(ce, d_);
    }
  }
  return eval_sweep(W_, d_, false, [&](const FockVector& w) {
    FockVector r = bracket(n, k, np, kp, w);
    if (linear) {
      FockVector t = linear->apply(w, d_);
      t *= linear_coeff;
      r -= t;
    }
    r -= apply_expr(central, w, d_);
    return r;
  });
}

CheckResult LqwEngine::special4(int sign, int k) {
  int s = sign > 0 ? 1 : -1;
  CachedOp& rhs = pushed(s, k + 1);
  return eval_sweep(W_, d_, false, [&](const FockVector& w) {
    FockVector r = bracket(s, k, 0, 2, w);
    FockVector t = rhs.apply(w, d_);
    t *= Rat(-2 * s);
    r -= t;
    return r;
  });
}

CheckResult LqwEngine::special5(int a, int k) {
  if (a < 0 || a > k) throw std::invalid_argument("special5: 0 <= a <= k");
  CachedOp& lin = pushed(0, k - 1);
  CachedOp* corr = k >= 3 ? &pushed_e(0, k - 3) : nullptr;
  return eval_sweep(W_, d_, false, [&](const FockVector& w) {
    FockVector r = bracket(1, a, -1, k - a, w);
    FockVector t = lin.apply(w, d_);
    t *= Rat(-k);
    r -= t;
    if (corr) {
      FockVector u = corr->apply(w, d_);
      u *= Rat((long long)k * (k - 1) * (k - 2));
      r += u;
    }
    return r;
  });
}

OmegaResult LqwEngine::omega(int n, int np, int k, int kp) {
  if (k + kp < 3) throw std::invalid_argument("extract_omega: k + k' >= 3 required");
  CachedOp& linear = pushed(n + np, k + kp - 1);
  CachedOp& base = pushed_e(n + np, k + kp - 3);
  Rat lcoeff((long long)k * np - (long long)kp * n);
  const auto& monos = cached_monomials(d_, W_);
  std::vector<FockVector> rs(monos.size()), bs(monos.size());
  for (size_t i = 0; i < monos.size(); ++i) {
    FockVector w;
    w.add(monos[i], Rat(1));
    rs[i] = bracket(n, k, np, kp, w);
    FockVector lin = linear.apply(w, d_);
    lin *= lcoeff;
    rs[i] -= lin;
    bs[i] = base.apply(w, d_);
  }
  OmegaResult res;
  bool have_omega = false;
  for (size_t i = 0; i < monos.size() && !have_omega; ++i) {
    if (bs[i].is_zero()) continue;
    auto& [m0, c0] = *bs[i].terms.begin();
    auto it = rs[i].terms.find(m0);
    res.omega = (it == rs[i].terms.end()) ? Rat(0) : it->second / c0;
    have_omega = true;
  }
  res.base_zero = !have_omega;
  if (!have_omega) res.omega = Rat(0);
  for (size_t i = 0; i < monos.size(); ++i) {
    FockVector scaled = bs[i];
    scaled *= res.omega;
    FockVector diff = rs[i];
    diff -= scaled;
    if (!diff.is_zero()) {
      res.structural_ok = false;
      res.residual = "on " + monos[i].str(d_) + ": " + diff.str(d_);
      return res;
    }
  }
  res.structural_ok = true;
  return res;
}

CheckResult check_lqw_rel(int rel, int n, int np, int W, const SurfaceDatum& d) {
  LqwEngine e(d, W);
  return e.rel(rel, n, np);
}

CheckResult check_lqw_special4(int sign, int k, int W, const SurfaceDatum& d) {
  LqwEngine e(d, W);
  return e.special4(sign, k);
}

CheckResult check_lqw_special5(int a, int k, int W, const SurfaceDatum& d) {
  LqwEngine e(d, W);
  return e.special5(a, k);
}

CheckResult check_formula_j(int k, int W, const SurfaceDatum& d) {
  if (k == 1) return from_equal(operator_equal(op_J(0, 1, W, d), op_G(2, W, d), W, d));
  if (k == 2) {
    OperatorExpr g3 = op_G(3, W, d);
    g3 *= Rat(2);
    return from_equal(operator_equal(op_J(0, 2, W, d), g3, W, d));
  }
  // general: J(0,k) = k! (G(k+1) + (e/12) G(k-1))
  OperatorExpr rhs = op_G(k + 1, W, d);
  SurfClass e12 = d.e_class();
  for (auto& x : e12) x *= Rat(1, 12);
  rhs += mul_free(op_G(k - 1, W, d), 0, e12, d);
  rhs *= factorial(k);
  return from_equal(operator_equal(op_J(0, k, W, d), rhs, W, d));
}

OmegaResult extract_omega(int n, int np, int k, int kp, int W, const SurfaceDatum& d) {
  LqwEngine e(d, W);
  return e.omega(n, np, k, kp);
}

CheckResult check_oi(int m, int n, int k, int gi, int W, const SurfaceDatum& d) {
  SurfClass g = d.basis_class(gi);
  OperatorExpr lhs = commutator(qq_delta(m, n, d), expr_q(k, g, d), d);
  OperatorExpr rhs = zero_expr(0, d);
  if (m + k == 0) {
    OperatorExpr t = expr_q(n, g, d);
    t *= Rat(m);
    rhs += t;
  }
  if (n + k == 0) {
    OperatorExpr t = expr_q(m, g, d);
    t *= Rat(n);
    rhs += t;
  }
  return from_equal(operator_equal(lhs, rhs, W, d));
}

namespace {

CheckResult oioi_generic(int m, int n, int mp, int npp, int W, const SurfaceDatum& d, bool tr) {
  auto qq = [&](int a, int b) { return tr ? op_tr_pair(a, b, d) : qq_delta(a, b, d); };
  OperatorExpr lhs = commutator(qq(m, n), qq(mp, npp), d);
  OperatorExpr rhs = zero_expr(0, d);
  auto add = [&](int delta, int coeff, int a, int b) {
    if (delta != 0) return;
    OperatorExpr t = qq(a, b);
    t *= Rat(coeff);
    rhs += t;
  };
  add(m + mp, m, n, npp);
  add(m + npp, m, mp, n);
  add(n + mp, n, m, npp);
  add(n + npp, n, mp, m);
  return from_equal(operator_equal(lhs, rhs, W, d));
}

}  // namespace

CheckResult check_oioi(int m, int n, int mp, int npp, int W, const SurfaceDatum& d) {
  return oioi_generic(m, n, mp, npp, W, d, false);
}

CheckResult check_oioi_tr(int m, int n, int mp, int npp, int W, const SurfaceDatum& d) {
  return oioi_generic(m, n, mp, npp, W, d, true);
}

CheckResult check_prop2_a(int m, int W, const SurfaceDatum& d) {
  int win = W + std::max(0, m);
  OperatorExpr l0l0 =
      with_class(compose(op_lehn(0, win, d), op_lehn(0, win, d), d), diagonal(d), d);
  l0l0 *= Rat(-1);
  OperatorExpr lhs = commutator(l0l0, expr_q(m, d.basis_class(0), d), d);
  OperatorExpr qml0 =
      with_class(compose(expr_q_bare(m, d), op_lehn(0, win, d), d), diagonal(d), d);
  qml0 *= Rat(2 * m);
  OperatorExpr rhs = qml0;
  OperatorExpr correction = expr_q(m, d.e_class(), d);
  correction *= Rat(-(long long)m * m);
  rhs += correction;
  return from_equal(operator_equal(lhs, rhs, W, d));
}

CheckResult check_prop2_b(int m, int n, int W, const SurfaceDatum& d) {
  int win = W + std::max(0, m) + std::max(0, n);
  OperatorExpr qml0 =
      with_class(compose(expr_q_bare(m, d), op_lehn(0, win, d), d), diagonal(d), d);
  OperatorExpr lhs = commutator(qml0, expr_q(n, d.basis_class(0), d), d);
  OperatorExpr rhs = qq_delta(m, n, d);
  rhs *= Rat(-n);
  if (m + n == 0) {
    OperatorExpr l01 = with_class(op_lehn(0, W, d), one_leg(d.basis_class(0), d), d);
    l01 *= Rat(m);
    rhs += l01;
  }
  return from_equal(operator_equal(lhs, rhs, W, d));
}

DecompositionResult decompose_G(int k, int gi, int W, const SurfaceDatum& d) {
  if (k < 2) throw std::invalid_argument("decompose_G: k >= 2 required");
  if (d.mode != SurfaceMode::K3Chow)
    throw std::invalid_argument("decompose_G: k3-chow datum required");
  SurfClass gamma = d.basis_class(gi);
  OperatorExpr g = with_class(op_G(k, W, d), one_leg(gamma, d), d);

  // group terms: words without a transcendental edge stay in the Heisenberg
  // part, the edge families collapse onto Virasoro generators
  struct Key {
    std::vector<std::pair<int8_t, int8_t>> bystanders;
    int s = 0;
    bool operator<(const Key& o) const {
      if (bystanders != o.bystanders) return bystanders < o.bystanders;
      return s < o.s;
    }
  };
  // accumulate per traced pair first: equivalent edge placements within
  // equal-mode runs arrive as separate build terms
  std::map<Key, std::map<std::pair<int, int>, Rat>> groups;
  std::vector<DecompositionWord> words;
  for (auto& [t, c] : g.terms) {
    if (t.cls.tr.empty()) {
      DecompositionWord w;
      w.coeff = c;
      for (int i = 0; i < t.bound(); ++i) w.atoms.emplace_back(t.modes[i], t.cls.deco[i]);
      words.push_back(std::move(w));
      continue;
    }
    if (t.cls.tr.size() != 1) throw std::logic_error("decompose_G: unexpected multi-edge term");
    int la = t.cls.tr[0].first, lb = t.cls.tr[0].second;
    int a = t.modes[la], b2 = t.modes[lb];
    Key key;
    key.s = a + b2;
    for (int i = 0; i < t.bound(); ++i)
      if (i != la && i != lb) key.bystanders.emplace_back(t.modes[i], t.cls.deco[i]);
    auto pr = std::make_pair(std::max(a, b2), std::min(a, b2));
    auto [it, inserted] = groups[key].try_emplace(pr, c);
    if (!inserted) it->second += c;
  }
  for (auto& [key, members] : groups) {
    // every traced pair in the window must report the same multiple of the
    // Virasoro generator's own coefficient
    bool have = false;
    Rat C;
    for (auto& [pr, sum] : members) {
      Rat lcoef = (pr.first == pr.second) ? Rat(1, 2) : Rat(1);
      Rat cand = sum / lcoef;
      if (!have) {
        C = cand;
        have = true;
      } else if (C != cand) {
        throw std::logic_error("decompose_G: inconsistent Virasoro grouping");
      }
    }
    if (!have || C.is_zero()) continue;
    DecompositionWord w;
    w.coeff = C;
    for (auto& [mode, deco] : key.bystanders) w.atoms.emplace_back(mode, deco);
    w.atoms.emplace_back(key.s, -1);
    words.push_back(std::move(w));
  }

  // assemble and certify against the defining operator
  OperatorExpr assembled = zero_expr(0, d);
  for (auto& w : words) {
    OperatorExpr acc = zero_expr(0, d);
    {
      OpTerm idt;
      idt.cls = ClassTerm::units(0);
      acc.add(idt, Rat(1));
    }
    for (auto& [mode, deco] : w.atoms) {
      OperatorExpr atom =
          deco < 0 ? op_vir(mode, W + 12, d) : expr_q(mode, d.basis_class(deco), d);
      acc = compose(acc, atom, d);
    }
    acc *= w.coeff;
    assembled += acc;
  }
  DecompositionResult res;
  res.words = words;
  EqualResult eq = operator_equal(assembled, g, W, d);
  res.cert.pass = eq.equal;
  res.cert.method = eq.method;
  res.cert.residual = eq.residual;

  std::ostringstream os;
  bool first = true;
  for (auto& w : words) {
    os << (first ? "" : " + ") << w.coeff.str();
    first = false;
    for (auto& [mode, deco] : w.atoms) {
      if (deco < 0)
        os << " L(" << mode << ")";
      else
        os << " q(" << mode << "," << d.basis_name(deco) << ")";
    }
  }
  res.printed = os.str();
  return res;
}

}  // namespace hilbfock

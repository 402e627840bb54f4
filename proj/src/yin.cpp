#include "hilbfock/yin.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hilbfock {

FockVector yin_unnormalized(const std::vector<int>& ms, const std::vector<int>& ns,
                            const SurfaceDatum& d) {
  if (ms.size() != ns.size()) throw std::invalid_argument("yin: family size mismatch");
  if (d.mode != SurfaceMode::K3Chow) throw std::invalid_argument("yin: k3-chow datum required");
  FockVector out;
  std::vector<int> perm(ns.size());
  std::iota(perm.begin(), perm.end(), 0);
  // sum over assignments with the permutation sign
  std::sort(perm.begin(), perm.end());
  do {
    int inv = 0;
    for (size_t i = 0; i < perm.size(); ++i)
      for (size_t j = i + 1; j < perm.size(); ++j) inv += perm[i] > perm[j];
    FockMono m;
    for (size_t i = 0; i < ms.size(); ++i) {
      int a = ms[i], b = ns[perm[i]];
      if (a < 1 || b < 1) throw std::invalid_argument("yin: positive modes required");
      m.pairs.emplace_back((int8_t)std::min(a, b), (int8_t)std::max(a, b));
    }
    m.normalize();
    out.add(m, Rat(inv % 2 ? -1 : 1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {

// sorts a family strictly ascending; returns the sign, or 0 on a repeat
int sort_family(std::vector<int>& v) {
  int sign = 1;
  for (size_t i = 0; i + 1 < v.size(); ++i)
    for (size_t j = 0; j + 1 < v.size() - i; ++j)
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        sign = -sign;
      }
  for (size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] == v[i + 1]) return 0;
  return sign;
}

}  // namespace

RadVector yin_normalized(const std::vector<int>& ms, const std::vector<int>& ns,
                         const SurfaceDatum& d) {
  std::vector<int> m2 = ms, n2 = ns;
  int s1 = sort_family(m2), s2 = sort_family(n2);
  RadVector out;
  if (s1 == 0 || s2 == 0) return out;
  long long prod = 1;
  for (int x : m2) prod *= x;
  for (int x : n2) prod *= x;
  auto [root, sf] = ScalarField::split_square(prod);
  FockVector v = yin_unnormalized(m2, n2, d);
  // 1/sqrt(prod) = sqrt(sf)/(sf*root)
  out.add(sf, v, Rat(s1 * s2, sf * root));
  return out;
}

CheckResult yin_annihilation_check(int index_bound, int mode_bound, const SurfaceDatum& d) {
  CheckResult res;
  res.method = "direct expansion";
  int families = d.b + 1;
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int next) {
    if ((int)cur.size() == families) {
      tuples.push_back(cur);
      return;
    }
    for (int x = next; x <= index_bound; ++x) {
      cur.push_back(x);
      rec(x + 1);
      cur.pop_back();
    }
  };
  rec(1);
  if (tuples.empty()) {
    res.pass = false;
    res.residual = "index bound below b+1: no yin vectors to test";
    return res;
  }
  for (auto& ms : tuples)
    for (auto& ns : tuples) {
      FockVector v = yin_unnormalized(ms, ns, d);
      for (int m = 1; m <= mode_bound; ++m)
        for (int n = 1; n <= mode_bound; ++n) {
          FockVector r = apply_expr(op_tr_pair(-m, -n, d), v, d);
          if (!r.is_zero()) {
            res.pass = false;
            std::ostringstream os;
            os << "d(-" << m << ",-" << n << ") on yin(";
            for (int x : ms) os << x << " ";
            os << "| ";
            for (int x : ns) os << x << " ";
            os << ") = " << r.str(d);
            res.residual = os.str();
            return res;
          }
        }
    }
  res.pass = true;
  return res;
}

WedgeElem levi_action(int s, int u, const WedgePair& w) {
  WedgeElem out;
  auto add_replaced = [&](const std::vector<int>& repl, const std::vector<int>& other,
                          bool replaced_is_m, const Rat& sign_in) {
    std::vector<int> r = repl;
    int sg = sort_family(r);
    if (sg == 0) return;
    WedgePair p;
    if (replaced_is_m) {
      p.m = r;
      p.n = other;
    } else {
      p.m = other;
      p.n = r;
    }
    if (p.n < p.m) std::swap(p.m, p.n);
    auto [it, inserted] = out.try_emplace(p, sign_in * Rat(sg));
    if (!inserted) {
      it->second += sign_in * Rat(sg);
      if (it->second.is_zero()) out.erase(it);
    }
  };
  for (size_t i = 0; i < w.m.size(); ++i)
    if (w.m[i] == u) {
      std::vector<int> r = w.m;
      r[i] = s;
      add_replaced(r, w.n, true, Rat(1));
    }
  for (size_t i = 0; i < w.n.size(); ++i)
    if (w.n[i] == u) {
      std::vector<int> r = w.n;
      r[i] = s;
      add_replaced(r, w.m, false, Rat(1));
    }
  return out;
}

CheckResult check_gl_equivariance(int s, int u, const std::vector<int>& ms,
                                  const std::vector<int>& ns, const SurfaceDatum& d) {
  CheckResult res;
  res.method = "radical evaluation";
  // operator side: (D_{s,-u} - (b/2) delta_{su}) on the normalized yin vector
  RadVector yin = yin_normalized(ms, ns, d);
  RadVector lhs = rad_apply(D_operator(s, -u, d), yin, d);
  if (s == u)
    for (auto& [r, v] : yin.comps) lhs.add(r, v, Rat(-d.b, 2));
  // combinatorial side through the index-replacement action
  WedgePair w{ms, ns};
  if (w.n < w.m) std::swap(w.m, w.n);
  WedgeElem replaced = levi_action(s, u, w);
  for (auto& [p, c] : replaced) {
    RadVector t = yin_normalized(p.m, p.n, d);
    for (auto& [r, v] : t.comps) lhs.add(r, v, -c);
  }
  res.pass = lhs.is_zero();
  if (!res.pass) res.residual = lhs.str(d);
  return res;
}

KimuraResult kimura_check(int b, int b_model) {
  if (b < 1 || b > 4) throw std::invalid_argument("kimura_check: 1 <= b <= 4 enforced");
  if (b_model < 1) throw std::invalid_argument("kimura_check: b_model >= 1");
  SurfaceConfig cfg;
  cfg.mode = SurfaceMode::Split;
  cfg.picard_rank = 0;
  cfg.b = b_model;
  SurfaceDatum d = make_surface(cfg);

  int k = 2 * (b + 1);
  PolarizedClass total = zero_class_on(k, d);
  std::vector<int> perm(b + 1);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inv = 0;
    for (size_t i = 0; i < perm.size(); ++i)
      for (size_t j = i + 1; j < perm.size(); ++j) inv += perm[i] > perm[j];
    Rat sign(inv % 2 ? -1 : 1);
    // expand the product of transcendental tensors over the tau basis
    std::vector<std::pair<ClassTerm, Rat>> acc{{ClassTerm::units(k), sign}};
    for (int i = 0; i <= b; ++i) {
      int left = i, right = perm[i] + b + 1;
      std::vector<std::pair<ClassTerm, Rat>> next;
      for (int al = 0; al < d.b; ++al)
        for (int be = 0; be < d.b; ++be) {
          int ia = 1 + al, ib = 1 + be;  // rho = 0: taus start at index 1
          Rat wgt = d.dual_[ia][ib];
          if (wgt.is_zero()) continue;
          for (auto& [t, c] : acc) {
            ClassTerm nt = t;
            nt.deco[left] = (int8_t)ia;
            nt.deco[right] = (int8_t)ib;
            next.emplace_back(nt, c * wgt);
          }
        }
      acc = std::move(next);
    }
    for (auto& [t, c] : acc) total.add(t, c);
  } while (std::next_permutation(perm.begin(), perm.end()));

  KimuraResult res;
  res.zero = total.is_zero();
  res.residual_terms = total.terms.size();
  std::ostringstream os;
  os << "antisymmetrized rank-" << (b + 1) << " product in transcendental rank " << b_model
     << (res.zero ? ": vanishes" : ": nonzero");
  res.note = os.str();
  return res;
}

}  // namespace hilbfock

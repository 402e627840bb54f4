#include "hilbfock/virasoro_module.hpp"

#include <sstream>

namespace hilbfock {

namespace {

void add_elem(VirElem& e, const VirWord& w, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = e.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
}

// L_n applied to a single straightened word (h = 0, lowest weight).
void apply_word(int n, const VirWord& w, const Rat& coeff, const Rat& central, VirElem& out) {
  if (coeff.is_zero()) return;
  if (w.empty()) {
    if (n >= 1) add_elem(out, {n}, coeff);
    return;  // L_0 v = 0 (h = 0) and L_{n<0} v = 0
  }
  int head = w[0];
  if (n >= head) {
    VirWord nw;
    nw.reserve(w.size() + 1);
    nw.push_back(n);
    nw.insert(nw.end(), w.begin(), w.end());
    add_elem(out, nw, coeff);
    return;
  }
  VirWord tail(w.begin() + 1, w.end());
  // L_n L_head = L_head L_n + (n - head) L_{n+head} - ((n^3-n)/12) d_{n+head} c
  VirElem inner;
  apply_word(n, tail, coeff, central, inner);
  for (auto& [iw, ic] : inner) apply_word(head, iw, ic, central, out);
  VirElem comm;
  apply_word(n + head, tail, coeff * Rat(n - head), central, comm);
  for (auto& [cw, cc] : comm) add_elem(out, cw, cc);
  if (n + head == 0) {
    Rat central_term = Rat(-((long long)n * n * n - n), 12) * central * coeff;
    for (auto& [tw, tc] : VirElem{{tail, central_term}}) add_elem(out, tw, tc);
  }
}

}  // namespace

VirElem vir_apply(int n, const VirElem& x, const Rat& central) {
  VirElem out;
  for (auto& [w, c] : x) apply_word(n, w, c, central, out);
  return out;
}

std::vector<VirWord> vir_basis(int level, int min_part) {
  std::vector<VirWord> out;
  VirWord cur;
  std::function<void(int, int)> rec = [&](int rem, int maxp) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rem, maxp); p >= min_part; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(level, level);
  return out;
}

Rat shapovalov_entry(const VirWord& lam, const VirWord& mu, const Rat& central) {
  VirElem x{{mu, Rat(1)}};
  // adjoint of L_{lam_1} ... L_{lam_k} applied as L_{-lam_1} first
  for (int p : lam) x = vir_apply(-p, x, central);
  auto it = x.find(VirWord{});
  return it == x.end() ? Rat(0) : it->second;
}

std::vector<std::vector<Rat>> shapovalov_gram(const Rat& central, int level, bool quotient) {
  auto basis = vir_basis(level, quotient ? 2 : 1);
  size_t n = basis.size();
  std::vector<std::vector<Rat>> g(n, std::vector<Rat>(n, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      g[i][j] = shapovalov_entry(basis[i], basis[j], central);
      g[j][i] = g[i][j];
    }
  return g;
}

Rat matrix_det(std::vector<std::vector<Rat>> m) {
  size_t n = m.size();
  Rat det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return Rat(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      Rat f = m[r][col] / m[col][col];
      for (size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  return det;
}

SingularCheck no_singular_check(const std::vector<int>& charges, int max_level) {
  SingularCheck res;
  std::ostringstream os;
  for (int c : charges)
    for (int level = 1; level <= max_level; ++level) {
      Rat det = matrix_det(shapovalov_gram(Rat(c), level, true));
      size_t dim = vir_basis(level, 2).size();
      if (dim > 0 && det.is_zero()) {
        res.pass = false;
        os << "singular quotient Gram at c=" << c << " level=" << level;
        res.detail = os.str();
        return res;
      }
    }
  res.pass = true;
  os << "nonsingular quotient Gram for all listed charges, levels <= " << max_level;
  res.detail = os.str();
  return res;
}

}  // namespace hilbfock

#include "hilbfock/chern.hpp"

#include <sstream>
#include <stdexcept>

namespace hilbfock {

int ChernRing::add_symbol(const std::string& name, int degree) {
  if (degree < 1) throw std::invalid_argument("symbol degree must be >= 1");
  deg_.push_back(degree);
  names_.push_back(name);
  return (int)deg_.size() - 1;
}

ChernPoly ChernRing::constant(const Rat& c) const {
  ChernPoly p;
  if (!c.is_zero()) p[ChernMono(deg_.size(), 0)] = c;
  return p;
}

ChernPoly ChernRing::symbol(int id) const {
  ChernPoly p;
  ChernMono m(deg_.size(), 0);
  m[id] = 1;
  p[m] = Rat(1);
  return p;
}

int ChernRing::degree(const ChernMono& m) const {
  int d = 0;
  for (size_t i = 0; i < m.size(); ++i) d += deg_[i] * m[i];
  return d;
}

ChernPoly ChernRing::mul(const ChernPoly& a, const ChernPoly& b) const {
  ChernPoly r;
  for (auto& [ma, ca] : a)
    for (auto& [mb, cb] : b) {
      ChernMono m(deg_.size(), 0);
      for (size_t i = 0; i < m.size(); ++i) m[i] = (uint8_t)(ma[i] + mb[i]);
      if (degree(m) > D_) continue;
      auto [it, inserted] = r.try_emplace(m, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second.is_zero()) r.erase(it);
      }
    }
  return r;
}

void ChernRing::add_to(ChernPoly& a, const ChernPoly& b, const Rat& scale) {
  if (scale.is_zero()) return;
  for (auto& [m, c] : b) {
    auto [it, inserted] = a.try_emplace(m, c * scale);
    if (!inserted) {
      it->second += c * scale;
      if (it->second.is_zero()) a.erase(it);
    }
  }
}

std::string ChernRing::str(const ChernPoly& p) const {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : p) {
    os << (first ? "" : " + ") << c.str();
    first = false;
    for (size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      os << "*" << names_[i];
      if (m[i] > 1) os << "^" << (int)m[i];
    }
  }
  return os.str();
}

ChernSeries series_zero(const ChernRing& R) {
  ChernSeries s;
  s.comp.assign(R.truncation() + 1, R.zero());
  return s;
}

ChernSeries series_one(const ChernRing& R) {
  ChernSeries s = series_zero(R);
  s.comp[0] = R.constant(Rat(1));
  return s;
}

ChernSeries series_add(const ChernRing& R, const ChernSeries& a, const ChernSeries& b) {
  ChernSeries s = a;
  for (int n = 0; n <= R.truncation(); ++n) ChernRing::add_to(s.comp[n], b.comp[n]);
  return s;
}

ChernSeries series_sub(const ChernRing& R, const ChernSeries& a, const ChernSeries& b) {
  ChernSeries s = a;
  for (int n = 0; n <= R.truncation(); ++n) ChernRing::add_to(s.comp[n], b.comp[n], Rat(-1));
  return s;
}

ChernSeries series_mul(const ChernRing& R, const ChernSeries& a, const ChernSeries& b) {
  ChernSeries s = series_zero(R);
  for (int n = 0; n <= R.truncation(); ++n)
    for (int k = 0; k <= n; ++k)
      ChernRing::add_to(s.comp[n], R.mul(a.comp[k], b.comp[n - k]));
  return s;
}

ChernSeries series_inverse(const ChernRing& R, const ChernSeries& u) {
  if (u.comp[0] != R.constant(Rat(1)))
    throw std::invalid_argument("series_inverse: constant term must be 1");
  ChernSeries v = series_zero(R);
  v.comp[0] = R.constant(Rat(1));
  for (int n = 1; n <= R.truncation(); ++n) {
    ChernPoly acc = R.zero();
    for (int k = 1; k <= n; ++k) ChernRing::add_to(acc, R.mul(u.comp[k], v.comp[n - k]));
    for (auto& [m, c] : acc) v.comp[n][m] = -c;
  }
  return v;
}

ChernSeries series_exp(const ChernRing& R, const ChernSeries& s) {
  if (!s.comp[0].empty()) throw std::invalid_argument("series_exp: constant term must vanish");
  // n E_n = sum_{k=1..n} k S_k E_{n-k}
  ChernSeries e = series_one(R);
  for (int n = 1; n <= R.truncation(); ++n) {
    ChernPoly acc = R.zero();
    for (int k = 1; k <= n; ++k) ChernRing::add_to(acc, R.mul(s.comp[k], e.comp[n - k]), Rat(k));
    for (auto& [m, c] : acc) e.comp[n][m] = c * Rat(1, n);
  }
  return e;
}

ChernSeries series_log(const ChernRing& R, const ChernSeries& u) {
  if (u.comp[0] != R.constant(Rat(1)))
    throw std::invalid_argument("series_log: constant term must be 1");
  // n U_n = sum_{k=1..n} k S_k U_{n-k}  =>  n S_n = n U_n - sum_{k<n} k S_k U_{n-k}
  ChernSeries s = series_zero(R);
  for (int n = 1; n <= R.truncation(); ++n) {
    ChernPoly acc = u.comp[n];
    ChernPoly corr = R.zero();
    for (int k = 1; k < n; ++k) ChernRing::add_to(corr, R.mul(s.comp[k], u.comp[n - k]), Rat(k, n));
    ChernRing::add_to(acc, corr, Rat(-1));
    s.comp[n] = acc;
  }
  return s;
}

ChernSeries psi(const ChernRing& R, const ChernSeries& s) {
  if (s.comp[0] != R.constant(Rat(1)))
    throw std::invalid_argument("psi: rank slot must be normalized to 1");
  ChernSeries x = series_zero(R);
  for (int n = 1; n <= R.truncation(); ++n) {
    Rat f = -factorial(n - 1);
    for (auto& [m, c] : s.comp[n]) x.comp[n][m] = c * f;
  }
  return series_exp(R, x);
}

ChernSeries phi(const ChernRing& R, const ChernSeries& u) {
  ChernSeries l = series_log(R, u);
  ChernSeries t = series_one(R);
  for (int n = 1; n <= R.truncation(); ++n) {
    Rat f = Rat(-1) / factorial(n - 1);
    for (auto& [m, c] : l.comp[n]) t.comp[n][m] = c * f;
  }
  return t;
}

ChernPoly chern_class(const ChernRing& R, const ChernSeries& signed_total, int k, bool negate) {
  if (k < 0 || k > R.truncation()) return R.zero();
  const ChernSeries* src = &signed_total;
  ChernSeries inv;
  if (negate) {
    inv = series_inverse(R, signed_total);
    src = &inv;
  }
  ChernPoly p = src->comp[k];
  if (k % 2)
    for (auto& [m, c] : p) c = -c;
  return p;
}

ChernSeries to_standard_convention(const ChernRing& R, const ChernSeries& signed_total) {
  ChernSeries s = signed_total;
  for (int n = 1; n <= R.truncation(); n += 2)
    for (auto& [m, c] : s.comp[n]) c = -c;
  return s;
}

// note: adjoin every symbol before building polynomials (monomial width is
// fixed at construction)
ChernSeries generic_character(ChernRing& R) {
  std::vector<int> ids;
  for (int n = 1; n <= R.truncation(); ++n)
    ids.push_back(R.add_symbol("ch" + std::to_string(n), n));
  ChernSeries out = series_zero(R);
  out.comp[0] = R.constant(Rat(1));
  for (int n = 1; n <= R.truncation(); ++n) out.comp[n] = R.symbol(ids[n - 1]);
  return out;
}

ChernSeries line_character(ChernRing& R) {
  int x = R.add_symbol("x", 1);
  ChernSeries s = series_zero(R);
  s.comp[0] = R.constant(Rat(1));
  ChernPoly pw = R.constant(Rat(1));
  for (int n = 1; n <= R.truncation(); ++n) {
    pw = R.mul(pw, R.symbol(x));
    for (auto& [m, c] : pw) s.comp[n][m] = c / factorial(n);
  }
  return s;
}

ChernCheck claim_identity_check(int a, int b, int D) {
  ChernCheck res;
  if (a < 0 || b < 0 || a + b < 1) {
    res.pass = false;
    res.detail = "requires a, b >= 0 with a + b > 0 (the boundary case is excluded)";
    return res;
  }
  if (a + b > D) {
    res.pass = false;
    res.detail = "truncation too small for a + b";
    return res;
  }
  ChernRing R(D);
  ChernSeries ch = generic_character(R);
  ChernSeries total = psi(R, ch);
  ChernSeries total_inv = series_inverse(R, total);

  ChernPoly lhs = R.zero();
  Rat sign((a + b) % 2 ? -1 : 1);
  for (int n = -a - 1; n <= b - 1; ++n) {
    if (n == 0) continue;
    ChernPoly ci = chern_class(R, total, a + n + 1, false);
    ChernPoly cni = [&] {
      int k = b - n - 1;
      if (k < 0 || k > D) return R.zero();
      ChernPoly p = total_inv.comp[k];
      if (k % 2)
        for (auto& [m, c] : p) c = -c;
      return p;
    }();
    ChernRing::add_to(lhs, R.mul(ci, cni), sign * Rat(n));
  }
  ChernPoly rhs = ch.comp[a + b];
  for (auto& [m, c] : rhs) c = c * (-factorial(a + b));
  ChernPoly diff = lhs;
  ChernRing::add_to(diff, rhs, Rat(-1));
  res.pass = diff.empty();
  res.detail = res.pass ? "exact polynomial identity in the free symbols"
                        : "residual: " + R.str(diff);
  return res;
}

}  // namespace hilbfock

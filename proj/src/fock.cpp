#include "hilbfock/fock.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace hilbfock {

void FockMono::normalize() {
  std::sort(cre.begin(), cre.end());
  for (auto& p : pairs)
    if (p.first > p.second) std::swap(p.first, p.second);
  std::sort(pairs.begin(), pairs.end());
  std::sort(open.begin(), open.end());
  std::sort(fdeco.begin(), fdeco.end());
  for (auto& p : ftr)
    if (p.first > p.second) std::swap(p.first, p.second);
  std::sort(ftr.begin(), ftr.end());
}

bool FockMono::operator<(const FockMono& o) const {
  if (cre != o.cre) return cre < o.cre;
  if (pairs != o.pairs) return pairs < o.pairs;
  if (open != o.open) return open < o.open;
  if (fdeco != o.fdeco) return fdeco < o.fdeco;
  return ftr < o.ftr;
}

int FockMono::weight() const {
  int w = 0;
  for (auto& e : cre) w += e.first;
  for (auto& e : pairs) w += e.first + e.second;
  for (auto& e : open) w += e.first;
  return w;
}

int FockMono::codim(const SurfaceDatum& d) const {
  int c = 0;
  for (auto& e : cre) c += e.first - 1 + d.grade(e.second);
  for (auto& e : pairs) c += e.first + e.second;  // (m-1) + (n-1) + 2
  for (auto& e : open) c += e.first;              // (n-1) + grade 1 slot
  for (auto& e : fdeco) c += d.grade(e.second);
  c += 2 * (int)ftr.size();
  return c;
}

std::string FockMono::str(const SurfaceDatum& d) const {
  if (cre.empty() && pairs.empty() && open.empty() && fdeco.empty() && ftr.empty()) return "v";
  std::ostringstream os;
  for (auto& e : cre) os << "q(" << (int)e.first << "," << d.basis_name(e.second) << ") ";
  for (auto& e : pairs) os << "qq(" << (int)e.first << "," << (int)e.second << ";tr) ";
  for (auto& e : open) os << "q(" << (int)e.first << ";tr->s" << (int)(e.second + 1) << ") ";
  os << "v";
  for (auto& e : fdeco) os << " [s" << (int)(e.first + 1) << ":" << d.basis_name(e.second) << "]";
  for (auto& e : ftr) os << " [tr:s" << (int)(e.first + 1) << ",s" << (int)(e.second + 1) << "]";
  return os.str();
}

void FockVector::add(const FockMono& m, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

FockVector& FockVector::operator+=(const FockVector& o) {
  for (auto& [m, c] : o.terms) add(m, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  for (auto& [m, c] : o.terms) add(m, -c);
  return *this;
}

FockVector& FockVector::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms.clear();
    return *this;
  }
  for (auto& [m, v] : terms) v *= c;
  return *this;
}

int FockVector::max_weight() const {
  int w = 0;
  for (auto& [m, c] : terms) w = std::max(w, m.weight());
  return w;
}

std::string FockVector::str(const SurfaceDatum& d) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms) {
    os << (first ? "" : " + ") << c.str() << " " << m.str(d);
    first = false;
  }
  return os.str();
}

FockVector vacuum() {
  FockVector v;
  v.add(FockMono{}, Rat(1));
  return v;
}

FockVector fock_monomial(const std::vector<std::pair<int, int>>& creations,
                         const std::vector<std::pair<int, int>>& tr_pairs,
                         const SurfaceDatum& d) {
  FockMono m;
  for (auto& [n, idx] : creations) {
    if (n < 1) throw std::invalid_argument("fock_monomial: creation mode must be >= 1");
    if (idx < 0 || idx >= d.dim) throw std::invalid_argument("fock_monomial: invalid basis label");
    m.cre.emplace_back((int8_t)n, (int8_t)idx);
  }
  for (auto& [a, b] : tr_pairs) {
    if (d.mode != SurfaceMode::K3Chow)
      throw std::invalid_argument("fock_monomial: tr pairs exist in k3-chow mode only");
    if (a < 1 || b < 1) throw std::invalid_argument("fock_monomial: pair modes must be >= 1");
    m.pairs.emplace_back((int8_t)a, (int8_t)b);
  }
  m.normalize();
  FockVector v;
  v.add(m, Rat(1));
  return v;
}

FockVector apply_q(int n, const SurfClass& gamma, const FockVector& w, const SurfaceDatum& d) {
  FockVector out;
  if (n == 0) return out;  // q_0 = 0
  for (auto& [m, c] : w.terms) {
    if (n > 0) {
      for (int idx = 0; idx < d.dim; ++idx) {
        if (gamma[idx].is_zero()) continue;
        FockMono nm = m;
        nm.cre.emplace_back((int8_t)n, (int8_t)idx);
        nm.normalize();
        out.add(nm, c * gamma[idx]);
      }
      continue;
    }
    // annihilation: contract against matching creation factors; the pairing
    // kills transcendental slots for classes in the datum's span
    for (size_t i = 0; i < m.cre.size(); ++i) {
      if (m.cre[i].first != (int8_t)(-n)) continue;
      Rat p(0);
      for (int idx = 0; idx < d.dim; ++idx)
        if (!gamma[idx].is_zero()) p += gamma[idx] * d.pair_basis(idx, m.cre[i].second);
      if (p.is_zero()) continue;
      FockMono nm = m;
      nm.cre.erase(nm.cre.begin() + i);
      out.add(nm, c * p * Rat(n));
    }
  }
  return out;
}

FockVector to_split_fock(const FockVector& w, const SurfaceDatum& k3, const SurfaceDatum& split) {
  if (k3.mode != SurfaceMode::K3Chow || split.mode != SurfaceMode::Split ||
      split.picard_rank != k3.picard_rank || split.b != k3.b ||
      split.picard_gram != k3.picard_gram)
    throw std::invalid_argument("to_split_fock: datum mismatch");
  FockVector out;
  for (auto& [m, c] : w.terms) {
    if (!m.plain()) throw std::invalid_argument("to_split_fock: monomial has unresolved free legs");
    std::vector<std::pair<FockMono, Rat>> acc;
    FockMono base;
    for (auto& e : m.cre)
      base.cre.emplace_back(e.first,
                            (int8_t)(e.second == (int8_t)k3.c_index ? split.c_index : e.second));
    acc.emplace_back(base, c);
    for (auto& pr : m.pairs) {
      std::vector<std::pair<FockMono, Rat>> next;
      for (int al = 0; al < split.b; ++al)
        for (int be = 0; be < split.b; ++be) {
          int ia = 1 + split.picard_rank + al, ib = 1 + split.picard_rank + be;
          Rat wgt = split.dual_[ia][ib];
          if (wgt.is_zero()) continue;
          for (auto& [bm, bc] : acc) {
            FockMono nm = bm;
            nm.cre.emplace_back(pr.first, (int8_t)ia);
            nm.cre.emplace_back(pr.second, (int8_t)ib);
            next.emplace_back(nm, bc * wgt);
          }
        }
      acc = std::move(next);
    }
    for (auto& [nm, nc] : acc) {
      FockMono fin = nm;
      fin.normalize();
      out.add(fin, nc);
    }
  }
  return out;
}

namespace {

constexpr size_t kEnumCap = 2000000;

void enum_push(std::vector<FockMono>& out, FockMono m) {
  if (out.size() >= kEnumCap)
    throw std::invalid_argument(
        "weight bound enumerates more than 2e6 basis monomials for this datum; lower the bound");
  out.push_back(std::move(m));
}

void enum_pairs(const SurfaceDatum& d, int budget, std::vector<std::pair<int8_t, int8_t>>& cur,
                std::pair<int8_t, int8_t> minpair, FockMono& proto,
                std::vector<FockMono>& out) {
  {
    FockMono m = proto;
    m.pairs = cur;
    m.normalize();
    enum_push(out, std::move(m));
  }
  for (int a = minpair.first; a <= budget; ++a)
    for (int b = std::max((int)(a == minpair.first ? minpair.second : a), a); a + b <= budget; ++b) {
      cur.emplace_back((int8_t)a, (int8_t)b);
      enum_pairs(d, budget - a - b, cur, {(int8_t)a, (int8_t)b}, proto, out);
      cur.pop_back();
    }
}

void enum_cre(const SurfaceDatum& d, int budget, std::pair<int8_t, int8_t> minent,
              FockMono& proto, std::vector<FockMono>& out) {
  if (d.mode == SurfaceMode::K3Chow) {
    std::vector<std::pair<int8_t, int8_t>> cur;
    enum_pairs(d, budget, cur, {1, 1}, proto, out);
  } else {
    enum_push(out, proto);
  }
  for (int n = minent.first; n <= budget; ++n) {
    int idx0 = (n == minent.first) ? minent.second : 0;
    for (int idx = idx0; idx < d.dim; ++idx) {
      proto.cre.emplace_back((int8_t)n, (int8_t)idx);
      enum_cre(d, budget - n, {(int8_t)n, (int8_t)idx}, proto, out);
      proto.cre.pop_back();
    }
  }
}

}  // namespace

std::vector<FockMono> enumerate_monomials(const SurfaceDatum& d, int max_weight) {
  std::vector<FockMono> out;
  FockMono proto;
  enum_cre(d, max_weight, {1, 0}, proto, out);
  std::stable_sort(out.begin(), out.end(),
                   [](const FockMono& a, const FockMono& b) { return a.weight() < b.weight(); });
  return out;
}

namespace {

std::string datum_key(const SurfaceDatum& d, int w, bool cre_only) {
  std::string key = d.mode == SurfaceMode::K3Chow ? "k" : "s";
  key += std::to_string(d.picard_rank) + ":" + std::to_string(d.b) + ":" + std::to_string(w);
  key += cre_only ? ":c" : ":f";
  return key;
}

}  // namespace

const std::vector<FockMono>& cached_monomials(const SurfaceDatum& d, int max_weight) {
  static std::mutex mu;
  static std::map<std::string, std::vector<FockMono>> cache;
  std::lock_guard<std::mutex> lock(mu);
  std::string key = datum_key(d, max_weight, false);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, enumerate_monomials(d, max_weight)).first;
  return it->second;
}

const std::vector<FockMono>& cached_cre_monomials(const SurfaceDatum& d, int max_weight) {
  static std::mutex mu;
  static std::map<std::string, std::vector<FockMono>> cache;
  std::lock_guard<std::mutex> lock(mu);
  std::string key = datum_key(d, max_weight, true);
  auto it = cache.find(key);
  if (it == cache.end()) {
    std::vector<FockMono> all = enumerate_monomials(d, max_weight);
    std::vector<FockMono> cre;
    for (auto& m : all)
      if (m.pairs.empty()) cre.push_back(m);
    it = cache.emplace(key, std::move(cre)).first;
  }
  return it->second;
}

}  // namespace hilbfock

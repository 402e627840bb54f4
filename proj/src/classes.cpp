#include "hilbfock/classes.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace hilbfock {

void ClassTerm::normalize() {
  for (auto& e : tr)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(tr.begin(), tr.end());
}

void PolarizedClass::add(const ClassTerm& t, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

PolarizedClass& PolarizedClass::operator+=(const PolarizedClass& o) {
  assert(legs == o.legs);
  for (const auto& [t, c] : o.terms) add(t, c);
  return *this;
}

PolarizedClass& PolarizedClass::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms.clear();
    return *this;
  }
  for (auto& [t, v] : terms) v *= c;
  return *this;
}

PolarizedClass operator-(const PolarizedClass& a, const PolarizedClass& b) {
  PolarizedClass r = a;
  for (const auto& [t, c] : b.terms) r.add(t, -c);
  return r;
}

PolarizedClass zero_class_on(int legs, const SurfaceDatum& d) {
  PolarizedClass r;
  r.legs = legs;
  r.rep = d.mode;
  return r;
}

PolarizedClass unit_class_on(int legs, const SurfaceDatum& d) {
  PolarizedClass r = zero_class_on(legs, d);
  r.add(ClassTerm::units(legs), Rat(1));
  return r;
}

PolarizedClass tensor_class(const std::vector<SurfClass>& factors, const SurfaceDatum& d) {
  int k = (int)factors.size();
  PolarizedClass r = zero_class_on(k, d);
  std::vector<std::pair<ClassTerm, Rat>> acc{{ClassTerm::units(k), Rat(1)}};
  for (int leg = 0; leg < k; ++leg) {
    std::vector<std::pair<ClassTerm, Rat>> next;
    for (const auto& [t, c] : acc)
      for (int idx = 0; idx < d.dim; ++idx) {
        if (factors[leg][idx].is_zero()) continue;
        ClassTerm t2 = t;
        t2.deco[leg] = (int8_t)idx;
        next.emplace_back(t2, c * factors[leg][idx]);
      }
    acc = std::move(next);
  }
  for (auto& [t, c] : acc) r.add(t, c);
  return r;
}

PolarizedClass one_leg(const SurfClass& gamma, const SurfaceDatum& d) {
  return tensor_class({gamma}, d);
}

int term_grade(const ClassTerm& t, const SurfaceDatum& d) {
  int g = 2 * (int)t.tr.size();
  for (int leg = 0; leg < t.legs(); ++leg)
    if (t.deco[leg] != ClassTerm::kTr) g += d.grade(t.deco[leg]);
  return g;
}

namespace {

// Accumulates basis decorations on one leg with the surface ring rules.
struct LegDeco {
  int idx = 0;  // unit
  bool dead = false;
  void mul_in(int j, Rat& coeff, const SurfaceDatum& d) {
    if (dead) return;
    if (j == 0) return;
    if (idx == 0) {
      idx = j;
      return;
    }
    if (d.grade(idx) + d.grade(j) > 2) {
      dead = true;
      return;
    }
    // two grade-1 decorations
    Rat p = d.mul_point_coeff(idx, j);
    if (p.is_zero()) {
      dead = true;
      return;
    }
    coeff *= p;
    idx = d.c_index;
  }
};

}  // namespace

PolarizedClass mul_classes(const PolarizedClass& a, const PolarizedClass& b,
                           const SurfaceDatum& d) {
  if (a.legs != b.legs) throw std::invalid_argument("mul_classes: leg count mismatch");
  if (a.rep != b.rep) throw std::invalid_argument("mul_classes: representation mismatch");
  int k = a.legs;
  PolarizedClass r = zero_class_on(k, d);
  for (const auto& [ta, ca] : a.terms)
    for (const auto& [tb, cb] : b.terms) {
      Rat coeff = ca * cb;
      // edge graph on legs: each leg has <= 1 edge from each factor
      std::vector<int> ea(k, -1), eb(k, -1);  // partner leg or -1
      for (auto& e : ta.tr) {
        ea[e.first] = e.second;
        ea[e.second] = e.first;
      }
      for (auto& e : tb.tr) {
        eb[e.first] = e.second;
        eb[e.second] = e.first;
      }
      std::vector<LegDeco> deco(k);
      for (int leg = 0; leg < k; ++leg) {
        if (ta.deco[leg] != ClassTerm::kTr) deco[leg].mul_in(ta.deco[leg], coeff, d);
        if (tb.deco[leg] != ClassTerm::kTr) deco[leg].mul_in(tb.deco[leg], coeff, d);
      }
      // resolve edge chains: components are paths or cycles (degree <= 2)
      std::vector<std::pair<int8_t, int8_t>> edges;
      std::vector<char> seen(k, 0);
      bool zero = false;
      auto walk = [&](int first_partner, bool from_a) {
        // walk alternating sides; returns the chain end; marks interior with c
        int cur = first_partner;
        bool side_a = from_a;
        while (true) {
          seen[cur] = 1;
          int n = side_a ? eb[cur] : ea[cur];
          if (n == -1) return cur;
          // interior leg: two composed edges leave a point class there
          deco[cur].mul_in(d.c_index, coeff, d);
          side_a = !side_a;
          cur = n;
        }
      };
      for (int leg = 0; leg < k; ++leg) {
        if (seen[leg]) continue;
        bool has_a = ea[leg] != -1, has_b = eb[leg] != -1;
        if (!has_a && !has_b) continue;
        if (has_a && has_b) continue;  // interior of a path, or on a cycle
        seen[leg] = 1;
        int end = walk(has_a ? ea[leg] : eb[leg], has_a);
        edges.emplace_back((int8_t)std::min(leg, end), (int8_t)std::max(leg, end));
      }
      // remaining unseen edge-legs are on cycles
      for (int leg = 0; leg < k && !zero; ++leg) {
        if (seen[leg] || ea[leg] == -1 || eb[leg] == -1) continue;
        // trace the cycle
        coeff *= Rat(d.b);
        int cur = leg;
        bool use_a = true;
        do {
          seen[cur] = 1;
          deco[cur].mul_in(d.c_index, coeff, d);
          cur = use_a ? ea[cur] : eb[cur];
          use_a = !use_a;
        } while (cur != leg);
      }
      ClassTerm out;
      out.deco.assign(k, 0);
      for (auto& e : edges) {
        out.deco[e.first] = ClassTerm::kTr;
        out.deco[e.second] = ClassTerm::kTr;
      }
      for (int leg = 0; leg < k && !zero; ++leg) {
        if (deco[leg].dead) zero = true;
        if (out.deco[leg] == ClassTerm::kTr) {
          if (deco[leg].idx != 0) zero = true;  // tr endpoint against a positive-grade class
        } else {
          out.deco[leg] = (int8_t)deco[leg].idx;
        }
      }
      if (zero || coeff.is_zero()) continue;
      out.tr = edges;
      out.normalize();
      r.add(out, coeff);
    }
  return r;
}

PolarizedClass contract(const PolarizedClass& a, int i, int j, const SurfaceDatum& d) {
  if (i == j || i < 0 || j < 0 || i >= a.legs || j >= a.legs)
    throw std::invalid_argument("contract: invalid legs");
  int k = a.legs;
  PolarizedClass r = zero_class_on(k - 1, d);
  auto relabel = [&](int leg) { return leg > j ? leg - 1 : leg; };
  for (const auto& [t, c] : a.terms) {
    Rat coeff = c;
    // contents of legs i and j
    int pi = -1, pj = -1;  // edge partners
    for (auto& e : t.tr) {
      if (e.first == i) pi = e.second;
      if (e.second == i) pi = e.first;
      if (e.first == j) pj = e.second;
      if (e.second == j) pj = e.first;
    }
    LegDeco merged;
    std::vector<std::pair<int, int>> new_edges;  // in old labels, endpoints != i,j
    bool zero = false;
    if (pi == j) {
      // the edge (i,j) itself: closed onto the merged leg
      coeff *= Rat(d.b);
      merged.mul_in(d.c_index, coeff, d);
    } else {
      int ends = 0;
      int endpoints[2];
      if (t.deco[i] != ClassTerm::kTr)
        merged.mul_in(t.deco[i], coeff, d);
      else
        endpoints[ends++] = pi;
      if (t.deco[j] != ClassTerm::kTr)
        merged.mul_in(t.deco[j], coeff, d);
      else
        endpoints[ends++] = pj;
      if (ends == 1) {
        if (merged.idx != 0) zero = true;  // edge endpoint meets positive decoration
        new_edges.emplace_back(i, endpoints[0]);
      } else if (ends == 2) {
        // two edge endpoints on the merged leg: compose, point class remains
        merged.mul_in(d.c_index, coeff, d);
        new_edges.emplace_back(endpoints[0], endpoints[1]);
      }
    }
    if (zero || merged.dead || coeff.is_zero()) continue;
    ClassTerm out;
    out.deco.assign(k - 1, 0);
    for (int leg = 0; leg < k; ++leg) {
      if (leg == j) continue;
      out.deco[relabel(leg)] = (leg == i) ? (int8_t)merged.idx : t.deco[leg];
    }
    for (auto& e : t.tr) {
      if (e.first == i || e.second == i || e.first == j || e.second == j) continue;
      out.tr.emplace_back((int8_t)relabel(e.first), (int8_t)relabel(e.second));
    }
    for (auto& e : new_edges)
      out.tr.emplace_back((int8_t)relabel(e.first), (int8_t)relabel(e.second));
    for (auto& e : out.tr) {
      out.deco[e.first] = ClassTerm::kTr;
      out.deco[e.second] = ClassTerm::kTr;
    }
    out.normalize();
    r.add(out, coeff);
  }
  return r;
}

PolarizedClass integrate(const PolarizedClass& a, const std::vector<int>& legs,
                         const SurfaceDatum& d) {
  std::vector<char> drop(a.legs, 0);
  for (int leg : legs) {
    if (leg < 0 || leg >= a.legs) throw std::invalid_argument("integrate: invalid leg");
    drop[leg] = 1;
  }
  std::vector<int> relabel(a.legs, -1);
  int nk = 0;
  for (int leg = 0; leg < a.legs; ++leg)
    if (!drop[leg]) relabel[leg] = nk++;
  PolarizedClass r = zero_class_on(nk, d);
  for (const auto& [t, c] : a.terms) {
    bool zero = false;
    for (auto& e : t.tr)
      if (drop[e.first] || drop[e.second]) zero = true;  // transcendental projection of 1 is 0
    for (int leg = 0; leg < a.legs && !zero; ++leg)
      if (drop[leg] && t.deco[leg] != (int8_t)d.c_index) zero = true;  // only the point class integrates to 1
    if (zero) continue;
    ClassTerm out;
    out.deco.assign(nk, 0);
    for (int leg = 0; leg < a.legs; ++leg)
      if (!drop[leg]) out.deco[relabel[leg]] = t.deco[leg];
    for (auto& e : t.tr) out.tr.emplace_back((int8_t)relabel[e.first], (int8_t)relabel[e.second]);
    out.normalize();
    r.add(out, c);
  }
  return r;
}

PolarizedClass restrict_small_diagonal(const PolarizedClass& a, const SurfaceDatum& d) {
  if (a.legs < 1) throw std::invalid_argument("restrict: needs at least one leg");
  PolarizedClass r = zero_class_on(1, d);
  for (const auto& [t, c] : a.terms) {
    Rat coeff = c;
    LegDeco merged;
    for (int leg = 0; leg < a.legs; ++leg)
      if (t.deco[leg] != ClassTerm::kTr) merged.mul_in(t.deco[leg], coeff, d);
    for (size_t e = 0; e < t.tr.size(); ++e) {
      // edge restricted to the diagonal leaves b times the point class
      coeff *= Rat(d.b);
      merged.mul_in(d.c_index, coeff, d);
    }
    if (merged.dead || coeff.is_zero()) continue;
    ClassTerm out;
    out.deco.assign(1, (int8_t)merged.idx);
    r.add(out, coeff);
  }
  return r;
}

PolarizedClass diag_push(const PolarizedClass& a, int f, const SurfaceDatum& d) {
  if (f < 0 || f >= a.legs) throw std::invalid_argument("diag_push: invalid leg");
  int k = a.legs;
  int nf = k;  // new leg index
  PolarizedClass r = zero_class_on(k + 1, d);
  for (const auto& [t, c] : a.terms) {
    auto base = [&]() {
      ClassTerm out;
      out.deco.assign(k + 1, 0);
      for (int leg = 0; leg < k; ++leg) out.deco[leg] = t.deco[leg];
      out.tr = t.tr;
      return out;
    };
    if (t.deco[f] == ClassTerm::kTr) {
      int partner = -1;
      for (auto& e : t.tr)
        if (e.first == f)
          partner = e.second;
        else if (e.second == f)
          partner = e.first;
      // c_f * tr(partner, new) + c_new * tr(partner, f)
      ClassTerm o1 = base();
      o1.tr.clear();
      for (auto& e : t.tr)
        if (e.first != f && e.second != f) o1.tr.push_back(e);
      o1.deco[f] = (int8_t)d.c_index;
      o1.deco[nf] = ClassTerm::kTr;
      o1.tr.emplace_back((int8_t)partner, (int8_t)nf);
      o1.normalize();
      r.add(o1, c);
      ClassTerm o2 = base();
      o2.deco[nf] = (int8_t)d.c_index;
      r.add(o2, c);
      continue;
    }
    int idx = t.deco[f];
    int g = d.grade(idx);
    if (g == 2) {
      ClassTerm o = base();
      o.deco[nf] = (int8_t)d.c_index;
      r.add(o, c);
    } else if (g == 1) {
      ClassTerm o1 = base();
      o1.deco[nf] = (int8_t)d.c_index;
      r.add(o1, c);
      ClassTerm o2 = base();
      o2.deco[f] = (int8_t)d.c_index;
      o2.deco[nf] = (int8_t)idx;
      r.add(o2, c);
    } else {
      // unit: full diagonal, Kunneth part over the datum's basis...
      for (int al = 0; al < d.dim; ++al) {
        for (int be = 0; be < d.dim; ++be) {
          Rat w = d.dual_[al][be];
          if (w.is_zero()) continue;
          ClassTerm o = base();
          o.deco[f] = (int8_t)al;
          o.deco[nf] = (int8_t)be;
          r.add(o, c * w);
        }
      }
      if (d.mode == SurfaceMode::K3Chow) {
        // ...plus the formal transcendental edge
        ClassTerm o = base();
        o.deco[f] = ClassTerm::kTr;
        o.deco[nf] = ClassTerm::kTr;
        o.tr.emplace_back((int8_t)f, (int8_t)nf);
        o.normalize();
        r.add(o, c);
      }
    }
  }
  return r;
}

static PolarizedClass embed(const PolarizedClass& a, const std::vector<int>& positions, int k,
                            const SurfaceDatum& d) {
  PolarizedClass r = zero_class_on(k, d);
  for (const auto& [t, c] : a.terms) {
    ClassTerm out;
    out.deco.assign(k, 0);
    for (int leg = 0; leg < a.legs; ++leg) out.deco[positions[leg]] = t.deco[leg];
    for (auto& e : t.tr)
      out.tr.emplace_back((int8_t)positions[e.first], (int8_t)positions[e.second]);
    out.normalize();
    r.add(out, c);
  }
  return r;
}

PolarizedClass diagonal_block(int k, const std::vector<int>& block, const SurfClass& gamma,
                              const SurfaceDatum& d) {
  if (block.empty()) throw std::invalid_argument("diagonal_block: empty block");
  PolarizedClass small = one_leg(gamma, d);
  for (size_t i = 1; i < block.size(); ++i) small = diag_push(small, 0, d);
  return embed(small, block, k, d);
}

PolarizedClass diagonal(const SurfaceDatum& d) {
  SurfClass unit = d.basis_class(0);
  return diag_push(one_leg(unit, d), 0, d);
}

PolarizedClass small_diagonal_expansion(int n, const SurfaceDatum& d) {
  if (n < 2) throw std::invalid_argument("small_diagonal_expansion: n >= 2 required");
  std::vector<int> block(n);
  for (int i = 0; i < n; ++i) block[i] = i;
  return diagonal_block(n, block, d.basis_class(0), d);
}

SplitClass split_of(const DiagramClass& a, const SurfaceDatum& k3, const SurfaceDatum& split) {
  if (a.rep != SurfaceMode::K3Chow) throw std::invalid_argument("split_of: expects a diagram class");
  if (split.mode != SurfaceMode::Split || split.picard_rank != k3.picard_rank ||
      split.b != k3.b || split.picard_gram != k3.picard_gram)
    throw std::invalid_argument("split_of: datum mismatch");
  PolarizedClass r = zero_class_on(a.legs, split);
  auto remap = [&](int idx) {
    if (idx == k3.c_index) return split.c_index;
    return idx;  // unit and picard share positions
  };
  for (const auto& [t, c] : a.terms) {
    std::vector<std::pair<ClassTerm, Rat>> acc;
    ClassTerm base;
    base.deco.assign(a.legs, 0);
    for (int leg = 0; leg < a.legs; ++leg)
      if (t.deco[leg] != ClassTerm::kTr) base.deco[leg] = (int8_t)remap(t.deco[leg]);
    acc.emplace_back(base, c);
    for (auto& e : t.tr) {
      std::vector<std::pair<ClassTerm, Rat>> next;
      for (int al = 0; al < split.b; ++al)
        for (int be = 0; be < split.b; ++be) {
          int ia = 1 + split.picard_rank + al, ib = 1 + split.picard_rank + be;
          Rat w = split.dual_[ia][ib];
          if (w.is_zero()) continue;
          for (auto& [bt, bc] : acc) {
            ClassTerm o = bt;
            o.deco[e.first] = (int8_t)ia;
            o.deco[e.second] = (int8_t)ib;
            next.emplace_back(o, bc * w);
          }
        }
      acc = std::move(next);
    }
    for (auto& [ot, oc] : acc) r.add(ot, oc);
  }
  return r;
}

Rat integral(const PolarizedClass& a, const SurfaceDatum& d) {
  std::vector<int> all(a.legs);
  for (int i = 0; i < a.legs; ++i) all[i] = i;
  PolarizedClass z = integrate(a, all, d);
  Rat r(0);
  for (const auto& [t, c] : z.terms) r += c;
  return r;
}

std::string class_to_string(const PolarizedClass& a, const SurfaceDatum& d) {
  std::ostringstream os;
  os << a.legs << " |";
  if (a.terms.empty()) {
    os << " 0";
    return os.str();
  }
  bool first = true;
  for (const auto& [t, c] : a.terms) {
    os << (first ? " " : " + ") << c.str();
    first = false;
    for (int leg = 0; leg < a.legs; ++leg)
      if (t.deco[leg] != ClassTerm::kTr && t.deco[leg] != 0)
        os << " {" << (leg + 1) << "}:" << d.basis_name(t.deco[leg]);
    for (auto& e : t.tr) os << " tr:(" << (e.first + 1) << "," << (e.second + 1) << ")";
  }
  return os.str();
}

PolarizedClass class_from_string(const std::string& s, const SurfaceDatum& d) {
  auto bar = s.find('|');
  if (bar == std::string::npos) throw std::invalid_argument("class: missing '|'");
  int k = atoi(s.substr(0, bar).c_str());
  if (k < 0) throw std::invalid_argument("class: bad leg count");
  PolarizedClass r = zero_class_on(k, d);
  std::string body = s.substr(bar + 1);
  // split top-level terms on '+'
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : body) {
    if (ch == '+') {
      parts.push_back(cur);
      cur.clear();
    } else
      cur += ch;
  }
  parts.push_back(cur);
  for (auto& part : parts) {
    std::istringstream ts(part);
    std::string tok;
    if (!(ts >> tok)) continue;
    Rat coeff;
    PolarizedClass term = unit_class_on(k, d);
    // first token may be a coefficient
    if (tok.find('{') == std::string::npos && tok.rfind("tr:", 0) != 0) {
      coeff = Rat::parse(tok);
      if (!(ts >> tok)) {
        if (!coeff.is_zero()) {
          term *= coeff;
          r += term;
        }
        continue;
      }
    } else {
      coeff = Rat(1);
    }
    do {
      PolarizedClass factor = zero_class_on(k, d);
      if (tok.rfind("tr:", 0) == 0) {
        if (d.mode != SurfaceMode::K3Chow)
          throw std::invalid_argument("class: tr edges are k3-chow only");
        int i = 0, j = 0;
        if (sscanf(tok.c_str(), "tr:(%d,%d)", &i, &j) != 2 || i < 1 || j < 1 || i > k || j > k ||
            i == j)
          throw std::invalid_argument("class: bad tr edge '" + tok + "'");
        ClassTerm t = ClassTerm::units(k);
        t.deco[i - 1] = ClassTerm::kTr;
        t.deco[j - 1] = ClassTerm::kTr;
        t.tr.emplace_back((int8_t)(i - 1), (int8_t)(j - 1));
        t.normalize();
        factor.add(t, Rat(1));
      } else if (tok[0] == '{') {
        auto close = tok.find('}');
        auto colon = tok.find(':', close);
        if (close == std::string::npos || colon == std::string::npos)
          throw std::invalid_argument("class: bad block '" + tok + "'");
        std::vector<int> legs;
        std::string nums = tok.substr(1, close - 1);
        std::istringstream ns(nums);
        std::string n;
        while (std::getline(ns, n, ',')) {
          int leg = atoi(n.c_str());
          if (leg < 1 || leg > k) throw std::invalid_argument("class: bad leg in '" + tok + "'");
          legs.push_back(leg - 1);
        }
        std::string name = tok.substr(colon + 1);
        int idx = d.basis_index(name);
        if (idx < 0) throw std::invalid_argument("class: unknown basis name '" + name + "'");
        factor = diagonal_block(k, legs, d.basis_class(idx), d);
      } else {
        throw std::invalid_argument("class: unexpected token '" + tok + "'");
      }
      term = mul_classes(term, factor, d);
    } while (ts >> tok);
    term *= coeff;
    r += term;
  }
  return r;
}

}  // namespace hilbfock

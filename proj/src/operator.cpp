#include "hilbfock/operator.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace hilbfock {

void OperatorExpr::add(const OpTerm& t, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

void OperatorExpr::add_class(const std::vector<int8_t>& modes, const PolarizedClass& cls,
                             const Rat& c) {
  assert(cls.legs == (int)modes.size() + free_legs);
  for (auto& [ct, cc] : cls.terms) {
    OpTerm t;
    t.modes = modes;
    t.cls = ct;
    add(t, c * cc);
  }
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& o) {
  assert(free_legs == o.free_legs);
  for (auto& [t, c] : o.terms) add(t, c);
  return *this;
}

OperatorExpr& OperatorExpr::operator-=(const OperatorExpr& o) {
  assert(free_legs == o.free_legs);
  for (auto& [t, c] : o.terms) add(t, -c);
  return *this;
}

OperatorExpr& OperatorExpr::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms.clear();
    return *this;
  }
  for (auto& [t, v] : terms) v *= c;
  return *this;
}

int OperatorExpr::max_weight_raise() const {
  int r = 0;
  for (auto& [t, c] : terms) r = std::max(r, t.weight_shift());
  return r;
}

std::string OperatorExpr::str(const SurfaceDatum& d) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [t, c] : terms) {
    os << (first ? "" : " + ") << c.str() << " ";
    first = false;
    for (size_t i = 0; i < t.modes.size(); ++i) os << "q" << (int)t.modes[i] << " ";
    PolarizedClass cl = zero_class_on(t.cls.legs(), d);
    cl.add(t.cls, Rat(1));
    os << "(" << class_to_string(cl, d) << ")";
  }
  return os.str();
}

OperatorExpr zero_expr(int free_legs, const SurfaceDatum& d) {
  OperatorExpr e;
  e.free_legs = free_legs;
  e.rep = d.mode;
  return e;
}

OperatorExpr expr_q(int n, const SurfClass& gamma, const SurfaceDatum& d) {
  OperatorExpr e = zero_expr(0, d);
  if (n == 0) return e;
  e.add_class({(int8_t)n}, one_leg(gamma, d), Rat(1));
  return e;
}

OperatorExpr expr_q_bare(int n, const SurfaceDatum& d) {
  OperatorExpr e = zero_expr(1, d);
  if (n == 0) return e;
  e.add_class({(int8_t)n}, diagonal(d), Rat(1));
  return e;
}

OperatorExpr expr_id_with_class(const PolarizedClass& cls, const SurfaceDatum& d) {
  OperatorExpr e = zero_expr(cls.legs, d);
  e.add_class({}, cls, Rat(1));
  return e;
}

namespace {

// Glue legs i and j of a term's class and integrate the merged leg out; the
// scalar factor multiplies the emitted Heisenberg contraction term.
std::optional<std::pair<ClassTerm, Rat>> term_contract_legs(const ClassTerm& t, int i, int j,
                                                            const SurfaceDatum& d) {
  int pi = -1, pj = -1;
  for (auto& e : t.tr) {
    if (e.first == i) pi = e.second;
    if (e.second == i) pi = e.first;
    if (e.first == j) pj = e.second;
    if (e.second == j) pj = e.first;
  }
  bool tri = t.deco[i] == ClassTerm::kTr, trj = t.deco[j] == ClassTerm::kTr;
  Rat factor;
  std::optional<std::pair<int, int>> new_edge;
  if (!tri && !trj) {
    factor = d.pair_basis(t.deco[i], t.deco[j]);
    if (factor.is_zero()) return std::nullopt;
  } else if (tri && trj) {
    if (pi == j) {
      factor = Rat(d.b);  // closed loop
    } else {
      factor = Rat(1);  // edge composition
      new_edge = {pi, pj};
    }
  } else {
    return std::nullopt;  // basis class against a transcendental slot
  }
  ClassTerm out;
  int k = t.legs();
  auto relabel = [&](int leg) { return leg - (leg > i) - (leg > j); };
  out.deco.assign(k - 2, 0);
  for (int leg = 0; leg < k; ++leg) {
    if (leg == i || leg == j) continue;
    out.deco[relabel(leg)] = t.deco[leg];
  }
  for (auto& e : t.tr) {
    if (e.first == i || e.second == i || e.first == j || e.second == j) continue;
    out.tr.emplace_back((int8_t)relabel(e.first), (int8_t)relabel(e.second));
  }
  if (new_edge)
    out.tr.emplace_back((int8_t)relabel(new_edge->first), (int8_t)relabel(new_edge->second));
  for (auto& e : out.tr) {
    out.deco[e.first] = ClassTerm::kTr;
    out.deco[e.second] = ClassTerm::kTr;
  }
  out.normalize();
  return std::make_pair(out, factor);
}

ClassTerm remap_legs(const ClassTerm& t, const std::vector<int>& to, int new_legs) {
  ClassTerm out;
  out.deco.assign(new_legs, 0);
  for (int leg = 0; leg < t.legs(); ++leg) out.deco[to[leg]] = t.deco[leg];
  for (auto& e : t.tr) out.tr.emplace_back((int8_t)to[e.first], (int8_t)to[e.second]);
  out.normalize();
  return out;
}

// Lexicographically minimal class over the full product of equal-mode-run
// permutations (edges may cross runs, so runs cannot be minimized greedily).
void minimize_equal_runs(OpTerm& t) {
  int k = t.bound();
  int total = t.cls.legs();
  std::vector<std::pair<int, int>> runs;  // [start, end)
  for (int i = 0; i < k;) {
    int j = i;
    while (j < k && t.modes[j] == t.modes[i]) ++j;
    if (j - i > 1) runs.emplace_back(i, j);
    i = j;
  }
  if (runs.empty()) return;
  std::vector<int> perm(total);
  ClassTerm best = t.cls;
  bool have_best = false;
  std::vector<std::vector<int>> arrangement(runs.size());
  for (size_t r = 0; r < runs.size(); ++r) {
    arrangement[r].resize(runs[r].second - runs[r].first);
    for (size_t x = 0; x < arrangement[r].size(); ++x) arrangement[r][x] = runs[r].first + (int)x;
  }
  auto apply_candidate = [&]() {
    for (int leg = 0; leg < total; ++leg) perm[leg] = leg;
    for (size_t r = 0; r < runs.size(); ++r)
      for (size_t x = 0; x < arrangement[r].size(); ++x)
        perm[runs[r].first + (int)x] = arrangement[r][x];
    ClassTerm cand = remap_legs(t.cls, perm, total);
    if (!have_best || cand < best) {
      best = cand;
      have_best = true;
    }
  };
  // odometer over permutations of every run
  std::vector<std::vector<int>> base = arrangement;
  auto advance = [&](size_t r) {
    while (r < runs.size()) {
      if (std::next_permutation(arrangement[r].begin(), arrangement[r].end())) return true;
      arrangement[r] = base[r];
      ++r;
    }
    return false;
  };
  apply_candidate();
  while (advance(0)) apply_candidate();
  t.cls = best;
}

}  // namespace

OperatorExpr canonicalize(const OperatorExpr& e, const SurfaceDatum& d) {
  OperatorExpr out = zero_expr(e.free_legs, d);
  std::vector<std::pair<OpTerm, Rat>> work(e.terms.begin(), e.terms.end());
  while (!work.empty()) {
    auto [t, c] = work.back();
    work.pop_back();
    if (c.is_zero()) continue;
    bool emitted_all = false;
    bool changed = true;
    while (changed && !emitted_all) {
      changed = false;
      for (int i = 0; i + 1 < t.bound(); ++i) {
        int8_t a = t.modes[i], b = t.modes[i + 1];
        if (a >= b) continue;
        if (a < 0 && b > 0 && a + b == 0) {
          // Heisenberg contraction between the swapped slots
          if (auto con = term_contract_legs(t.cls, i, i + 1, d)) {
            OpTerm ct;
            ct.modes = t.modes;
            ct.modes.erase(ct.modes.begin() + i, ct.modes.begin() + i + 2);
            ct.cls = con->first;
            work.emplace_back(ct, c * Rat(a) * con->second);
          }
        }
        std::vector<int> perm(t.cls.legs());
        for (int leg = 0; leg < t.cls.legs(); ++leg) perm[leg] = leg;
        perm[i] = i + 1;
        perm[i + 1] = i;
        t.cls = remap_legs(t.cls, perm, t.cls.legs());
        std::swap(t.modes[i], t.modes[i + 1]);
        changed = true;
      }
    }
    bool dead = false;
    for (int m : t.modes)
      if (m == 0) dead = true;  // q_0 = 0
    if (dead) continue;
    minimize_equal_runs(t);
    out.add(t, c);
  }
  return out;
}

OperatorExpr reorder_colon(const OperatorExpr& e, const SurfaceDatum& d) {
  OperatorExpr out = zero_expr(e.free_legs, d);
  for (auto [t, c] : e.terms) {
    // stable sort modes descending, permuting class legs alongside
    int k = t.bound();
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return t.modes[x] > t.modes[y]; });
    OpTerm nt;
    nt.modes.resize(k);
    std::vector<int> perm(t.cls.legs());
    for (int i = 0; i < t.cls.legs(); ++i) perm[i] = i;
    for (int i = 0; i < k; ++i) {
      nt.modes[i] = t.modes[order[i]];
      perm[order[i]] = i;
    }
    nt.cls = remap_legs(t.cls, perm, t.cls.legs());
    minimize_equal_runs(nt);
    out.add(nt, c);
  }
  return out;
}

OperatorExpr compose(const OperatorExpr& a, const OperatorExpr& b, const SurfaceDatum& d) {
  assert(a.rep == b.rep);
  OperatorExpr out = zero_expr(a.free_legs + b.free_legs, d);
  for (auto& [ta, ca] : a.terms)
    for (auto& [tb, cb] : b.terms) {
      int ka = ta.bound(), kb = tb.bound();
      int ma = ta.free_legs(), mb = tb.free_legs();
      OpTerm t;
      t.modes = ta.modes;
      t.modes.insert(t.modes.end(), tb.modes.begin(), tb.modes.end());
      ClassTerm cls;
      cls.deco.assign(ka + kb + ma + mb, 0);
      std::vector<int> mapa(ka + ma), mapb(kb + mb);
      for (int i = 0; i < ka; ++i) mapa[i] = i;
      for (int i = 0; i < ma; ++i) mapa[ka + i] = ka + kb + i;
      for (int i = 0; i < kb; ++i) mapb[i] = ka + i;
      for (int i = 0; i < mb; ++i) mapb[kb + i] = ka + kb + ma + i;
      ClassTerm a2 = remap_legs(ta.cls, mapa, ka + kb + ma + mb);
      ClassTerm b2 = remap_legs(tb.cls, mapb, ka + kb + ma + mb);
      for (int leg = 0; leg < ka + ma; ++leg) cls.deco[mapa[leg]] = ta.cls.deco[leg];
      for (int leg = 0; leg < kb + mb; ++leg) cls.deco[mapb[leg]] = tb.cls.deco[leg];
      cls.tr = a2.tr;
      cls.tr.insert(cls.tr.end(), b2.tr.begin(), b2.tr.end());
      cls.normalize();
      t.cls = cls;
      out.add(t, ca * cb);
    }
  return out;
}

OperatorExpr permute_free(const OperatorExpr& e, const std::vector<int>& perm,
                          const SurfaceDatum& d) {
  assert((int)perm.size() == e.free_legs);
  OperatorExpr out = zero_expr(e.free_legs, d);
  for (auto& [t, c] : e.terms) {
    int k = t.bound();
    std::vector<int> to(t.cls.legs());
    for (int i = 0; i < k; ++i) to[i] = i;
    for (int f = 0; f < e.free_legs; ++f) to[k + f] = k + perm[f];
    OpTerm nt;
    nt.modes = t.modes;
    nt.cls = remap_legs(t.cls, to, t.cls.legs());
    out.add(nt, c);
  }
  return out;
}

OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b, const SurfaceDatum& d) {
  OperatorExpr ab = compose(a, b, d);
  OperatorExpr ba = compose(b, a, d);
  // keep a's free legs first in both orders
  std::vector<int> perm(a.free_legs + b.free_legs);
  for (int f = 0; f < b.free_legs; ++f) perm[f] = a.free_legs + f;
  for (int f = 0; f < a.free_legs; ++f) perm[b.free_legs + f] = f;
  ab -= permute_free(ba, perm, d);
  return canonicalize(ab, d);
}

OperatorExpr with_class(const OperatorExpr& e, const PolarizedClass& gamma,
                        const SurfaceDatum& d) {
  if (gamma.legs != e.free_legs) throw std::invalid_argument("with_class: leg mismatch");
  OperatorExpr out = zero_expr(0, d);
  for (auto& [t, c] : e.terms) {
    int k = t.bound(), m = t.free_legs();
    PolarizedClass cls = zero_class_on(k + m, d);
    cls.add(t.cls, c);
    std::vector<int> gmap(m);
    for (int f = 0; f < m; ++f) gmap[f] = k + f;
    PolarizedClass gext = zero_class_on(k + m, d);
    for (auto& [gt, gc] : gamma.terms) gext.add(remap_legs(gt, gmap, k + m), gc);
    PolarizedClass prod = mul_classes(cls, gext, d);
    std::vector<int> frees(m);
    for (int f = 0; f < m; ++f) frees[f] = k + f;
    PolarizedClass integ = integrate(prod, frees, d);
    out.add_class(t.modes, integ, Rat(1));
  }
  return out;
}

OperatorExpr restrict_diagonal(const OperatorExpr& e, const SurfaceDatum& d) {
  if (e.free_legs < 1) throw std::invalid_argument("restrict_diagonal: no free legs");
  OperatorExpr out = zero_expr(1, d);
  for (auto& [t, c] : e.terms) {
    int k = t.bound();
    PolarizedClass cls = zero_class_on(t.cls.legs(), d);
    cls.add(t.cls, c);
    // fold the free legs onto the first one
    for (int f = e.free_legs - 1; f >= 1; --f) cls = contract(cls, k, k + f, d);
    out.add_class(t.modes, cls, Rat(1));
  }
  return out;
}

OperatorExpr diag_push_free(const OperatorExpr& e, const SurfaceDatum& d) {
  if (e.free_legs != 1) throw std::invalid_argument("diag_push_free: expects one free leg");
  OperatorExpr out = zero_expr(2, d);
  for (auto& [t, c] : e.terms) {
    PolarizedClass cls = zero_class_on(t.cls.legs(), d);
    cls.add(t.cls, c);
    out.add_class(t.modes, diag_push(cls, t.bound(), d), Rat(1));
  }
  return out;
}

OperatorExpr mul_free(const OperatorExpr& e, int f, const SurfClass& gamma,
                      const SurfaceDatum& d) {
  if (f < 0 || f >= e.free_legs) throw std::invalid_argument("mul_free: bad leg");
  OperatorExpr out = zero_expr(e.free_legs, d);
  for (auto& [t, c] : e.terms) {
    int total = t.cls.legs();
    PolarizedClass cls = zero_class_on(total, d);
    cls.add(t.cls, c);
    std::vector<SurfClass> fac(total, d.basis_class(0));
    fac[t.bound() + f] = gamma;
    out.add_class(t.modes, mul_classes(cls, tensor_class(fac, d), d), Rat(1));
  }
  return out;
}

// ----------------------------------------------------------------------------
// evaluation engine

namespace {

constexpr int8_t KLEG = 0;     // class leg (bound not yet processed, or free)
constexpr int8_t KSLOT = 1;    // open creation slot
constexpr int8_t KFREEIN = 2;  // free leg of the input monomial

struct End {
  int8_t kind = KLEG;
  int16_t id = 0;
  bool operator==(const End& o) const { return kind == o.kind && id == o.id; }
};

struct Kern {
  End end[2];
  bool dead = false;
};

struct OpenEnt {
  int8_t mode = 0;
  int16_t kern = 0;
  int8_t side = 0;
  bool dead = false;
};

struct EvalState {
  std::vector<std::pair<int8_t, int8_t>> cre;
  std::vector<std::pair<int8_t, int8_t>> pairs;
  std::vector<OpenEnt> opens;
  std::vector<Kern> kerns;
  Rat coeff;
};

struct TermEval {
  const OpTerm& t;
  const SurfaceDatum& d;
  int in_free;
  FockVector& out;
  const FockMono& w;

  void assemble(const EvalState& st) {
    FockMono m;
    m.cre = st.cre;
    m.pairs = st.pairs;
    m.fdeco = w.fdeco;
    int k = t.bound();
    auto out_free = [&](const End& e) {
      return e.kind == KFREEIN ? (int8_t)e.id : (int8_t)(in_free + ((int)e.id - k));
    };
    for (auto& kn : st.kerns) {
      if (kn.dead) continue;
      const End &x = kn.end[0], &y = kn.end[1];
      auto is_slot = [](const End& e) { return e.kind == KSLOT; };
      if (is_slot(x) && is_slot(y)) {
        int8_t m1 = st.opens[x.id].mode, m2 = st.opens[y.id].mode;
        m.pairs.emplace_back(std::min(m1, m2), std::max(m1, m2));
      } else if (is_slot(x) || is_slot(y)) {
        const End& s = is_slot(x) ? x : y;
        const End& f = is_slot(x) ? y : x;
        assert(f.kind == KFREEIN || (int)f.id >= k);
        m.open.emplace_back(st.opens[s.id].mode, out_free(f));
      } else {
        assert((f_ok(x) && f_ok(y)));
        m.ftr.emplace_back(out_free(x), out_free(y));
      }
    }
    for (int leg = k; leg < t.cls.legs(); ++leg)
      if (t.cls.deco[leg] != ClassTerm::kTr)
        m.fdeco.emplace_back((int8_t)(in_free + (leg - k)), t.cls.deco[leg]);
    m.normalize();
    out.add(m, st.coeff);
  }

  bool f_ok(const End& e) const { return e.kind == KFREEIN || (e.kind == KLEG && (int)e.id >= t.bound()); }

  void go(int pos, EvalState st) {
    if (st.coeff.is_zero()) return;
    if (pos < 0) {
      assemble(st);
      return;
    }
    int a = t.modes[pos];
    int8_t deco = t.cls.deco[pos];
    if (deco != ClassTerm::kTr) {
      if (a > 0) {
        st.cre.emplace_back((int8_t)a, deco);
        go(pos - 1, std::move(st));
        return;
      }
      // annihilate a concrete creation; group equal entries
      for (size_t i = 0; i < st.cre.size(); ++i) {
        if (st.cre[i].first != (int8_t)(-a)) continue;
        bool first_of_kind = true;
        int count = 0;
        for (size_t j = 0; j < st.cre.size(); ++j) {
          if (st.cre[j] != st.cre[i]) continue;
          if (j < i) first_of_kind = false;
          ++count;
        }
        if (!first_of_kind) continue;
        Rat p = d.pair_basis(deco, st.cre[i].second);
        if (p.is_zero()) continue;
        EvalState ns = st;
        ns.coeff *= Rat(a) * p * Rat(count);
        ns.cre.erase(ns.cre.begin() + i);
        go(pos - 1, std::move(ns));
      }
      return;
    }
    // the leg carries a kernel end
    int ki = -1, side = -1;
    for (size_t i = 0; i < st.kerns.size(); ++i) {
      if (st.kerns[i].dead) continue;
      for (int s = 0; s < 2; ++s)
        if (st.kerns[i].end[s] == End{KLEG, (int16_t)pos}) {
          ki = (int)i;
          side = s;
        }
    }
    assert(ki >= 0);
    if (a > 0) {
      const End& other = st.kerns[ki].end[1 - side];
      if (other.kind == KSLOT) {
        // the partner slot is an open creation: close them into a pair
        EvalState ns = st;
        int8_t m2 = ns.opens[other.id].mode;
        ns.opens[other.id].dead = true;
        ns.kerns[ki].dead = true;
        ns.pairs.emplace_back(std::min((int8_t)a, m2), std::max((int8_t)a, m2));
        go(pos - 1, std::move(ns));
      } else {
        EvalState ns = st;
        ns.opens.push_back({(int8_t)a, (int16_t)ki, (int8_t)side, false});
        ns.kerns[ki].end[side] = End{KSLOT, (int16_t)(ns.opens.size() - 1)};
        go(pos - 1, std::move(ns));
      }
      return;
    }
    // annihilator tied to a kernel: open creations first
    for (size_t s = 0; s < st.opens.size(); ++s) {
      if (st.opens[s].dead || st.opens[s].mode != (int8_t)(-a)) continue;
      int k2 = st.opens[s].kern;
      EvalState ns = st;
      ns.opens[s].dead = true;
      if (k2 == ki) {
        // the kernel closes onto itself: a full transcendental loop
        ns.kerns[ki].dead = true;
        ns.coeff *= Rat(a) * Rat(d.b);
      } else {
        End y = ns.kerns[k2].end[1 - ns.opens[s].side];
        ns.kerns[k2].dead = true;
        ns.kerns[ki].end[side] = y;
        if (y.kind == KSLOT) {
          ns.opens[y.id].kern = (int16_t)ki;
          ns.opens[y.id].side = (int8_t)side;
        }
        ns.coeff *= Rat(a);
      }
      go(pos - 1, std::move(ns));
    }
    // then closed pairs; group equal entries
    for (size_t i = 0; i < st.pairs.size(); ++i) {
      bool first_of_kind = true;
      int count = 0;
      for (size_t j = 0; j < st.pairs.size(); ++j) {
        if (st.pairs[j] != st.pairs[i]) continue;
        if (j < i) first_of_kind = false;
        ++count;
      }
      if (!first_of_kind) continue;
      int slots = (st.pairs[i].first == (int8_t)(-a)) + (st.pairs[i].second == (int8_t)(-a));
      if (slots == 0) continue;
      int8_t other_mode =
          st.pairs[i].first == (int8_t)(-a) ? st.pairs[i].second : st.pairs[i].first;
      EvalState ns = st;
      ns.coeff *= Rat(a) * Rat(slots) * Rat(count);
      ns.pairs.erase(ns.pairs.begin() + i);
      ns.opens.push_back({other_mode, (int16_t)ki, (int8_t)side, false});
      ns.kerns[ki].end[side] = End{KSLOT, (int16_t)(ns.opens.size() - 1)};
      go(pos - 1, std::move(ns));
    }
  }
};

}  // namespace

FockVector apply_expr(const OperatorExpr& e, const FockVector& w, const SurfaceDatum& d,
                      int in_free) {
  FockVector out;
  for (auto& [t, c] : e.terms) {
    bool normal = std::is_sorted(t.modes.begin(), t.modes.end(), std::greater<int8_t>());
    for (auto& [m, mc] : w.terms) {
      if (normal) {
        // annihilators of a normal-ordered word only see the input content
        bool feasible = true;
        int max_mode = 0;
        for (int x : t.modes) max_mode = std::max(max_mode, -x);
        for (int mode = 1; mode <= max_mode && feasible; ++mode) {
          int need = 0;
          for (int x : t.modes)
            if (x == -mode) ++need;
          if (!need) continue;
          int have = 0;
          for (auto& e2 : m.cre)
            if (e2.first == mode) ++have;
          for (auto& e2 : m.pairs) have += (e2.first == mode) + (e2.second == mode);
          for (auto& e2 : m.open)
            if (e2.first == mode) ++have;
          if (need > have) feasible = false;
        }
        if (!feasible) continue;
      }
      EvalState st;
      st.coeff = c * mc;
      st.cre = m.cre;
      st.pairs = m.pairs;
      for (auto& e2 : t.cls.tr) {
        Kern k;
        k.end[0] = End{KLEG, (int16_t)e2.first};
        k.end[1] = End{KLEG, (int16_t)e2.second};
        st.kerns.push_back(k);
      }
      for (auto& o : m.open) {
        Kern k;
        k.end[1] = End{KFREEIN, (int16_t)o.second};
        st.kerns.push_back(k);
        st.opens.push_back({o.first, (int16_t)(st.kerns.size() - 1), 0, false});
        st.kerns.back().end[0] = End{KSLOT, (int16_t)(st.opens.size() - 1)};
      }
      for (auto& f : m.ftr) {
        Kern k;
        k.end[0] = End{KFREEIN, (int16_t)f.first};
        k.end[1] = End{KFREEIN, (int16_t)f.second};
        st.kerns.push_back(k);
      }
      TermEval ev{t, d, in_free, out, m};
      ev.go(t.bound() - 1, std::move(st));
    }
  }
  return out;
}

EqualResult operator_equal(const OperatorExpr& a, const OperatorExpr& b, int weight_bound,
                           const SurfaceDatum& d) {
  assert(a.free_legs == b.free_legs);
  OperatorExpr diff = a;
  diff -= b;
  OperatorExpr cd = canonicalize(diff, d);
  bool any_active = false;
  for (auto& [t, c] : cd.terms)
    if (t.ann_sum() <= weight_bound) any_active = true;
  if (!any_active) return {true, "canonical", ""};

  EqualResult r;
  r.method = "evaluated(weight<=" + std::to_string(weight_bound) + ")";
  for (auto& m : cached_monomials(d, weight_bound)) {
    FockVector w;
    w.add(m, Rat(1));
    FockVector res = apply_expr(cd, w, d);
    if (!res.is_zero()) {
      r.equal = false;
      r.residual = "on " + m.str(d) + ": " + res.str(d);
      return r;
    }
  }
  r.equal = true;
  return r;
}

}  // namespace hilbfock

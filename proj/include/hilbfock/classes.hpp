#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hilbfock/surface.hpp"

namespace hilbfock {

// Polarized classes on S^k in two representations sharing one term type:
//
//   split   (full Kunneth tensors over the split datum's basis, no edges)
//   diagram (k3-chow: R(S)-basis decorations on legs + a partial matching of
//            legs by formal transcendental-diagonal edges)
//
// Canonical form: every leg carries either a basis decoration or exactly one
// edge endpoint; decorated diagonal pushforwards are expanded eagerly at
// construction, so equality is term comparison.
//
// Rewrite rules (applied by mul/contract/integrate/restrict):
//   defining (bv):        tr * l = tr * c = 0 on a shared leg
//                         l * l' = <l,l'> c,  grade > 2 products vanish
//                         D_B(1), D_B(gamma) expand through the small-diagonal
//                         decomposition and the diagonal product relations
//   forced by the Kunneth model (split oracle, not quoted relations):
//                         tr(i,j)*tr(i,j)   = b * c_i c_j
//                         tr(i,j)*tr(j,k)   = c_j * tr(i,k)
//                         contract over an edge composes edges (projector
//                         idempotence); a closed edge loop contributes b
//                         integrate over either endpoint of an edge kills the term
struct ClassTerm {
  static constexpr int8_t kTr = -1;
  std::vector<int8_t> deco;                        // per leg: basis index or kTr
  std::vector<std::pair<int8_t, int8_t>> tr;       // sorted pairs (a<b), 0-based

  int legs() const { return (int)deco.size(); }
  void normalize();  // sorts edge list, orients pairs
  bool operator<(const ClassTerm& o) const {
    if (deco != o.deco) return deco < o.deco;
    return tr < o.tr;
  }
  bool operator==(const ClassTerm& o) const { return deco == o.deco && tr == o.tr; }
  static ClassTerm units(int k) {
    ClassTerm t;
    t.deco.assign(k, 0);
    return t;
  }
};

struct PolarizedClass {
  int legs = 0;
  SurfaceMode rep = SurfaceMode::K3Chow;
  std::map<ClassTerm, Rat> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const ClassTerm& t, const Rat& c);
  PolarizedClass& operator+=(const PolarizedClass& o);
  PolarizedClass& operator*=(const Rat& c);
  friend PolarizedClass operator-(const PolarizedClass& a, const PolarizedClass& b);
  bool operator==(const PolarizedClass& o) const {
    return legs == o.legs && rep == o.rep && terms == o.terms;
  }
};

// Aliases matching the two representations.
using SplitClass = PolarizedClass;
using DiagramClass = PolarizedClass;

PolarizedClass zero_class_on(int legs, const SurfaceDatum& d);
PolarizedClass unit_class_on(int legs, const SurfaceDatum& d);
// Exterior product of single-leg classes.
PolarizedClass tensor_class(const std::vector<SurfClass>& factors, const SurfaceDatum& d);
// gamma placed on one leg of S^1.
PolarizedClass one_leg(const SurfClass& gamma, const SurfaceDatum& d);

// Term grade (complex codimension); classes mix grades unless homogeneous.
int term_grade(const ClassTerm& t, const SurfaceDatum& d);

PolarizedClass mul_classes(const PolarizedClass& a, const PolarizedClass& b,
                           const SurfaceDatum& d);
// Multiply by Delta_{ij} and integrate out leg j (0-based legs).
PolarizedClass contract(const PolarizedClass& a, int i, int j, const SurfaceDatum& d);
// Pushforward against the projection that forgets `legs` (pairs them with 1).
PolarizedClass integrate(const PolarizedClass& a, const std::vector<int>& legs,
                         const SurfaceDatum& d);
// Pullback along the small diagonal S -> S^k.
PolarizedClass restrict_small_diagonal(const PolarizedClass& a, const SurfaceDatum& d);
// Replace leg f by two legs (f and a new last leg) glued by the diagonal.
PolarizedClass diag_push(const PolarizedClass& a, int f, const SurfaceDatum& d);
// (Delta_B)_*(gamma): diagonal pushforward of gamma along the listed legs,
// expanded eagerly to canonical form; other legs of S^k carry 1.
PolarizedClass diagonal_block(int k, const std::vector<int>& block, const SurfClass& gamma,
                              const SurfaceDatum& d);

PolarizedClass diagonal(const SurfaceDatum& d);                 // class of Delta on S^2
PolarizedClass small_diagonal_expansion(int n, const SurfaceDatum& d);

// Substitutes the formal transcendental edge by the split-basis tensor.
SplitClass split_of(const DiagramClass& a, const SurfaceDatum& k3, const SurfaceDatum& split);

// Full integral over all legs (class must live on S^0 after integration).
Rat integral(const PolarizedClass& a, const SurfaceDatum& d);

std::string class_to_string(const PolarizedClass& a, const SurfaceDatum& d);
PolarizedClass class_from_string(const std::string& s, const SurfaceDatum& d);

}  // namespace hilbfock

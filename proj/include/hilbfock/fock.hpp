#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hilbfock/classes.hpp"
#include "hilbfock/surface.hpp"

namespace hilbfock {

// Basis monomial of the Fock model, possibly tensored with a class on S^m
// ("free legs") when it is the output of an operator with unintegrated legs.
//
//   cre   : creation factors (mode >= 1, basis index)
//   pairs : transcendental-pair factors (m <= n), k3-chow mode only
//   open  : creation factors whose class slot is tied to a free leg by a
//           transcendental edge
//   fdeco : concrete basis decoration per remaining free leg
//   ftr   : transcendental edges between two free legs
//
// All sections sorted; the vacuum is all-empty.
struct FockMono {
  using PV = std::vector<std::pair<int8_t, int8_t>>;
  PV cre;
  PV pairs;
  PV open;
  PV fdeco;
  PV ftr;

  void normalize();
  bool operator<(const FockMono& o) const;
  bool operator==(const FockMono& o) const {
    return cre == o.cre && pairs == o.pairs && open == o.open && fdeco == o.fdeco && ftr == o.ftr;
  }
  bool plain() const { return open.empty() && fdeco.empty() && ftr.empty(); }

  int weight() const;
  int codim(const SurfaceDatum& d) const;
  std::string str(const SurfaceDatum& d) const;
};

struct FockVector {
  std::map<FockMono, Rat> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const FockMono& m, const Rat& c);
  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  FockVector& operator*=(const Rat& c);
  bool operator==(const FockVector& o) const { return terms == o.terms; }
  int max_weight() const;
  std::string str(const SurfaceDatum& d) const;
};

FockVector vacuum();
// Basis vector from explicit factors; validates modes and labels.
FockVector fock_monomial(const std::vector<std::pair<int, int>>& creations,
                         const std::vector<std::pair<int, int>>& tr_pairs,
                         const SurfaceDatum& d);

// Nakajima operator with an attached surface class, acting on the model.
// n > 0 creates, n < 0 is the derivation fixed by the Heisenberg relation.
FockVector apply_q(int n, const SurfClass& gamma, const FockVector& w, const SurfaceDatum& d);

// Expands transcendental pairs through the split basis (M -> W realization).
FockVector to_split_fock(const FockVector& w, const SurfaceDatum& k3, const SurfaceDatum& split);

// All plain basis monomials of weight <= max_weight, weight-increasing order.
std::vector<FockMono> enumerate_monomials(const SurfaceDatum& d, int max_weight);
// Same, memoized per datum shape; the returned reference stays valid.
const std::vector<FockMono>& cached_monomials(const SurfaceDatum& d, int max_weight);
// Creation-section-only variant (pair sections are spectators of the
// quadratic-free identities, so sweeps may deduplicate over them).
const std::vector<FockMono>& cached_cre_monomials(const SurfaceDatum& d, int max_weight);

}  // namespace hilbfock

#pragma once

#include "hilbfock/sp_algebra.hpp"

namespace hilbfock {

// Antisymmetrized products of transcendental-pair creation operators on the
// vacuum, indexed by two families of positive modes.
FockVector yin_unnormalized(const std::vector<int>& ms, const std::vector<int>& ns,
                            const SurfaceDatum& d);
// With the sp normalization 1/sqrt(prod m_i prod n_i); zero when either
// family has a repeated index. Unsorted families pick up the permutation sign.
RadVector yin_normalized(const std::vector<int>& ms, const std::vector<int>& ns,
                         const SurfaceDatum& d);

// d_{-m,-n} annihilates every yin vector with indices/modes in the ranges.
CheckResult yin_annihilation_check(int index_bound, int mode_bound, const SurfaceDatum& d);

// Levi action on S^2(wedge^{b+1}) versus the D action on yin vectors.
using WedgeTuple = std::vector<int>;  // strictly increasing
struct WedgePair {
  WedgeTuple m, n;  // normalized: m <= n lexicographically
  bool operator<(const WedgePair& o) const {
    if (m != o.m) return m < o.m;
    return n < o.n;
  }
};
using WedgeElem = std::map<WedgePair, Rat>;
// (E_{s,u} - (b/2) delta_{su}) acting by index replacement
WedgeElem levi_action(int s, int u, const WedgePair& w);
CheckResult check_gl_equivariance(int s, int u, const std::vector<int>& ms,
                                  const std::vector<int>& ns, const SurfaceDatum& d);

struct KimuraResult {
  bool zero = false;
  size_t residual_terms = 0;
  std::string note;
};
// The antisymmetrized (b+1)-fold product of transcendental diagonals on
// S^{2(b+1)}, computed in a split model of transcendental rank b_model.
KimuraResult kimura_check(int b, int b_model);

}  // namespace hilbfock

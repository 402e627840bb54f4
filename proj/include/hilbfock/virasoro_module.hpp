#pragma once

#include <map>
#include <vector>

#include "hilbfock/rational.hpp"
#include "hilbfock/verify.hpp"

namespace hilbfock {

// Abstract lowest-weight module over the Virasoro presentation
//   [L_n, L_m] = (n-m) L_{n+m} - ((n^3-n)/12) delta_{n+m,0} c
// with v of weight 0: L_n v = 0 for n <= 0. Raising operators are L_{n>0};
// under L~_n := -L_{-n} this is the standard highest-weight algebra at
// central charge +c, so the usual determinant expectations apply.
//
// Basis words are weakly decreasing positive parts; the contravariant form
// takes the adjoint of L_n to L_{-n} and normalizes <v,v> = 1.

using VirWord = std::vector<int>;            // parts sorted descending, >= 1
using VirElem = std::map<VirWord, Rat>;      // straightened combination

VirElem vir_apply(int n, const VirElem& x, const Rat& central);

std::vector<VirWord> vir_basis(int level, int min_part);

Rat shapovalov_entry(const VirWord& lam, const VirWord& mu, const Rat& central);
// Gram matrix of the level subspace; quotient restricts to parts >= 2.
std::vector<std::vector<Rat>> shapovalov_gram(const Rat& central, int level, bool quotient);
Rat matrix_det(std::vector<std::vector<Rat>> m);

struct SingularCheck {
  bool pass = false;
  std::string detail;
};
// Nonvanishing of every quotient-basis Gram determinant for c = each listed
// integral charge and all levels <= max_level.
SingularCheck no_singular_check(const std::vector<int>& charges, int max_level);

}  // namespace hilbfock

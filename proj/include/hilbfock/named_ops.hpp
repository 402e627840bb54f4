#pragma once

#include <functional>

#include "hilbfock/operator.hpp"

namespace hilbfock {

// Builders for the named operator series, truncated to a window: the result
// acts exactly like the full series on every vector of weight <= window
// (terms whose annihilators exceed the window act as zero there).

// Quadratic diagonal operator: (1/2) sum_{a+b=n} :q_a q_b: restricted to the
// diagonal, one free leg.
OperatorExpr op_lehn(int n, int window, const SurfaceDatum& d);

// Same sum attached to the transcendental diagonal class; zero free legs.
OperatorExpr op_vir(int n, int window, const SurfaceDatum& d);

// W-algebra family from the partition formula; one free leg. Requires a
// datum with vanishing canonical class.
OperatorExpr op_J(int n, int k, int window, const SurfaceDatum& d);

// Chern-multiplication operators; one free leg. k in {2,3} works for any
// datum (with the canonical-class correction term); k >= 4 requires t = 0.
OperatorExpr op_G(int k, int window, const SurfaceDatum& d);

// q_m q_n with the transcendental edge attached; zero free legs. The
// sp normalization (radical scalars, b/2 shift) lives in the rep layer.
OperatorExpr op_tr_pair(int m, int n, const SurfaceDatum& d);

// Multisets of nonzero integers: given length, total sum, and a cap on the
// annihilator part; parts delivered weakly decreasing.
void for_each_partition(int length, int sum, int ann_budget,
                        const std::function<void(const std::vector<int>&)>& fn);

struct PartitionStats {
  Rat fact;  // product of multiplicity factorials
  long long square_sum = 0;
};
PartitionStats partition_stats(const std::vector<int>& parts);

}  // namespace hilbfock

#pragma once

#include <optional>
#include <string>

#include "hilbfock/classes.hpp"
#include "hilbfock/fock.hpp"

namespace hilbfock {

// One normal-form summand of an operator word: modes[i] is bound to class
// leg i; legs modes.size().. are free output legs (the operator maps the
// Fock model to itself tensored with classes on S^free).
struct OpTerm {
  std::vector<int8_t> modes;
  ClassTerm cls;

  int bound() const { return (int)modes.size(); }
  int free_legs() const { return cls.legs() - bound(); }
  int ann_sum() const {
    int s = 0;
    for (int m : modes)
      if (m < 0) s -= m;
    return s;
  }
  int weight_shift() const {
    int s = 0;
    for (int m : modes) s += m;
    return s;
  }
  bool operator<(const OpTerm& o) const {
    if (modes != o.modes) return modes < o.modes;
    return cls < o.cls;
  }
  bool operator==(const OpTerm& o) const { return modes == o.modes && cls == o.cls; }
};

struct OperatorExpr {
  int free_legs = 0;
  SurfaceMode rep = SurfaceMode::K3Chow;
  std::map<OpTerm, Rat> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const OpTerm& t, const Rat& c);
  void add_class(const std::vector<int8_t>& modes, const PolarizedClass& cls, const Rat& c);
  OperatorExpr& operator+=(const OperatorExpr& o);
  OperatorExpr& operator-=(const OperatorExpr& o);
  OperatorExpr& operator*=(const Rat& c);
  int max_weight_raise() const;
  std::string str(const SurfaceDatum& d) const;
};

OperatorExpr zero_expr(int free_legs, const SurfaceDatum& d);
// q_n with the class gamma attached (zero free legs), or bare (one free leg).
OperatorExpr expr_q(int n, const SurfClass& gamma, const SurfaceDatum& d);
OperatorExpr expr_q_bare(int n, const SurfaceDatum& d);
// identity operator tensored with a fixed class on the free legs
OperatorExpr expr_id_with_class(const PolarizedClass& cls, const SurfaceDatum& d);

// Normal form: modes weakly decreasing, Heisenberg contraction terms emitted
// for each annihilator-past-creator transposition (left-to-right sweeps),
// structurally equal terms merged.
OperatorExpr canonicalize(const OperatorExpr& e, const SurfaceDatum& d);
// The defining reorder of :...: — permutes modes without emitting commutators.
OperatorExpr reorder_colon(const OperatorExpr& e, const SurfaceDatum& d);

// Composition A after B; free legs concatenate as [A's][B's]. Not canonicalized.
OperatorExpr compose(const OperatorExpr& a, const OperatorExpr& b, const SurfaceDatum& d);
// compose(a,b) - compose(b,a) with b's free legs held in the same (trailing)
// slots in both orders; canonicalized.
OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b, const SurfaceDatum& d);

// Specialization of the free legs.
OperatorExpr with_class(const OperatorExpr& e, const PolarizedClass& gamma, const SurfaceDatum& d);
OperatorExpr restrict_diagonal(const OperatorExpr& e, const SurfaceDatum& d);
// Pushforward of the unique free leg along the diagonal (one leg becomes two).
OperatorExpr diag_push_free(const OperatorExpr& e, const SurfaceDatum& d);
// Multiply the class on free leg `f` (counted from 0) by gamma.
OperatorExpr mul_free(const OperatorExpr& e, int f, const SurfClass& gamma, const SurfaceDatum& d);
// Reorder the free legs by perm (new_position[old]).
OperatorExpr permute_free(const OperatorExpr& e, const std::vector<int>& perm,
                          const SurfaceDatum& d);

// Action on the Fock model. Monomials of w may carry in_free free legs
// (0..in_free-1); the expression's free legs are appended after them.
FockVector apply_expr(const OperatorExpr& e, const FockVector& w, const SurfaceDatum& d,
                      int in_free = 0);

struct EqualResult {
  bool equal = false;
  std::string method;    // "canonical" or "evaluated(weight<=N)"
  std::string residual;  // first nonzero residual, printed, when not equal
};

// Canonical-form comparison first; bounded evaluation on every basis
// monomial of weight <= weight_bound as the fallback.
EqualResult operator_equal(const OperatorExpr& a, const OperatorExpr& b, int weight_bound,
                           const SurfaceDatum& d);

}  // namespace hilbfock

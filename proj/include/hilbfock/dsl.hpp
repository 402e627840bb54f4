#pragma once

#include <memory>

#include "hilbfock/sp_algebra.hpp"

namespace hilbfock {

// Operator expression language:
//   expr := term (('+'|'-') term)*
//   term := rational? atom+
//   atom := 'q(' int ',' class ')' | 'L(' int ')' | 'Lehn(' int ')'
//         | 'J(' int ',' int ')' | 'G(' int ',' class ')' | 'D(' int ',' int ')'
//         | '[' expr ',' expr ']'
//   atoms accept an optional '^' int power
//   class := cterm (('+'|'-') cterm)* ; cterm := rational? symbol
//   symbol := '1' | 'c' | 'e' | 't' | 'l' | 'l'<i> | 'tau'<i>
//
// Vectors:  vexpr := vterm (('+'|'-') vterm)* ;
//           vterm := rational? vfactor* 'v'
//           vfactor := 'q(' int ',' symbol ')' ['^' int] | 'qq(' int ',' int ';tr)' ['^' int]
struct DslNode {
  enum Kind { Sum, Prod, Com, Q, L, Lehn, J, G, D } kind = Sum;
  Rat coeff = Rat(1);                            // Prod scale
  std::vector<std::shared_ptr<DslNode>> kids;    // Sum terms / Prod atoms / Com pair
  int a = 0, b = 0;                              // integer parameters
  SurfClass cls;                                 // attached class for Q and G
};

struct DslParseError : std::invalid_argument {
  size_t position;
  DslParseError(const std::string& msg, size_t pos)
      : std::invalid_argument(msg + " at position " + std::to_string(pos)), position(pos) {}
};

std::shared_ptr<DslNode> parse_operator_dsl(const std::string& text, const SurfaceDatum& d);
std::string print_operator_dsl(const DslNode& n, const SurfaceDatum& d);

// number of free output legs of the expression
int dsl_free_legs(const DslNode& n);

// evaluation against the Fock model; output may carry radical components
// (the D atoms) and free-leg structure (Lehn/J atoms)
RadVector dsl_eval(const DslNode& n, const RadVector& w, const SurfaceDatum& d);

FockVector parse_vector_dsl(const std::string& text, const SurfaceDatum& d);
std::string print_vector_dsl(const FockVector& v, const SurfaceDatum& d);

SurfClass parse_class_dsl(const std::string& text, const SurfaceDatum& d);

}  // namespace hilbfock

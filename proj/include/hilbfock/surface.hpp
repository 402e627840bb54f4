#pragma once

#include <string>
#include <vector>

#include "hilbfock/rational.hpp"

namespace hilbfock {

enum class SurfaceMode { K3Chow, Split };

// A class on S is a coefficient vector over the datum's basis.
using SurfClass = std::vector<Rat>;

// Finite exact model of the coefficient ring of the surface.
//
// Basis layout (fixed): index 0 is the unit (grade 0), then the Picard
// classes l1..l_rho (grade 1), then (split mode only) tau1..tau_b (grade 1),
// and the point class c last (grade 2). Grade-1 products land in c via the
// pairing; products above grade 2 vanish.
struct SurfaceDatum {
  SurfaceMode mode = SurfaceMode::K3Chow;
  int picard_rank = 0;
  int b = 0;
  std::vector<std::vector<Rat>> picard_gram;
  std::vector<std::vector<Rat>> transcendental_gram;  // split mode only
  std::vector<Rat> t_coeffs;                          // over l1..l_rho
  bool synthetic = false;                             // rho + b != 22

  int dim = 0;
  int c_index = 0;

  int grade(int idx) const { return idx == 0 ? 0 : idx == c_index ? 2 : 1; }
  bool is_unit(int idx) const { return idx == 0; }
  bool is_point(int idx) const { return idx == c_index; }
  bool is_transcendental(int idx) const {
    return mode == SurfaceMode::Split && idx > picard_rank && idx < c_index;
  }
  // In k3-chow mode the whole basis spans R(S); in split mode R(S) excludes taus.
  bool in_rs(int idx) const { return !is_transcendental(idx); }

  std::string basis_name(int idx) const;
  int basis_index(const std::string& name) const;  // -1 if unknown

  Rat pair_basis(int i, int j) const { return pairing_[i][j]; }
  Rat pair(const SurfClass& x, const SurfClass& y) const;

  // Coefficient of c in the product of basis elements i, j (both grade 1).
  Rat mul_point_coeff(int i, int j) const { return pairing_[i][j]; }
  SurfClass mul(const SurfClass& x, const SurfClass& y) const;

  // Dual basis: dual(i) = Sum_j dual_[i][j] * basis_j with <dual(i), j> = delta_ij.
  const std::vector<Rat>& dual(int i) const { return dual_[i]; }

  SurfClass zero_class() const { return SurfClass(dim, Rat(0)); }
  SurfClass basis_class(int idx) const;
  SurfClass t_class() const;  // c_1(K_S)
  SurfClass e_class() const;  // c_2(Tan_S): 24c (k3-chow) or the Kunneth Euler class (split)
  Rat e_point_coeff() const { return mode == SurfaceMode::K3Chow ? Rat(24) : Rat(2 + picard_rank + b); }
  bool t_is_zero() const;
  SurfClass todd_grade1() const;  // t/2
  SurfClass todd_grade2() const;  // (t^2 + e)/12

  std::string class_str(const SurfClass& x) const;

  // filled by make_surface
  std::vector<std::vector<Rat>> pairing_;  // dim x dim
  std::vector<std::vector<Rat>> dual_;
};

struct SurfaceConfig {
  SurfaceMode mode = SurfaceMode::K3Chow;
  int picard_rank = 1;
  int b = 21;
  std::vector<std::vector<Rat>> picard_gram;          // empty => identity
  std::vector<std::vector<Rat>> transcendental_gram;  // empty => identity
  std::vector<Rat> t_coeffs;                          // empty => 0
};

SurfaceDatum make_surface(const SurfaceConfig& cfg);
SurfaceConfig parse_surface_config(const std::string& text);
SurfaceConfig load_surface_config(const std::string& path);

// Exact inverse of a square rational matrix; throws std::invalid_argument if singular.
std::vector<std::vector<Rat>> invert_matrix(const std::vector<std::vector<Rat>>& m);

}  // namespace hilbfock

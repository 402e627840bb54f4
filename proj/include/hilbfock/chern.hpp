#pragma once

#include <map>
#include <string>
#include <vector>

#include "hilbfock/rational.hpp"

namespace hilbfock {

// Truncated graded power-series calculus over free symbols with rational
// coefficients. Series are stored by degree component; multiplication drops
// everything above the truncation degree.
using ChernMono = std::vector<uint8_t>;  // exponent per symbol
using ChernPoly = std::map<ChernMono, Rat>;

class ChernRing {
 public:
  explicit ChernRing(int truncation) : D_(truncation) {}
  int truncation() const { return D_; }
  int add_symbol(const std::string& name, int degree);
  int symbols() const { return (int)deg_.size(); }
  const std::string& name(int id) const { return names_[id]; }

  ChernPoly zero() const { return {}; }
  ChernPoly constant(const Rat& c) const;
  ChernPoly symbol(int id) const;
  int degree(const ChernMono& m) const;
  ChernPoly mul(const ChernPoly& a, const ChernPoly& b) const;
  static void add_to(ChernPoly& a, const ChernPoly& b, const Rat& scale = Rat(1));
  std::string str(const ChernPoly& p) const;

 private:
  int D_;
  std::vector<int> deg_;
  std::vector<std::string> names_;
};

// comp[n] = degree-n part, n = 0..D; comp[0] must be 0 or a constant
struct ChernSeries {
  std::vector<ChernPoly> comp;
  bool operator==(const ChernSeries& o) const { return comp == o.comp; }
};

ChernSeries series_zero(const ChernRing& R);
ChernSeries series_one(const ChernRing& R);
ChernSeries series_add(const ChernRing& R, const ChernSeries& a, const ChernSeries& b);
ChernSeries series_sub(const ChernRing& R, const ChernSeries& a, const ChernSeries& b);
ChernSeries series_mul(const ChernRing& R, const ChernSeries& a, const ChernSeries& b);
// reciprocal of a series with constant term 1
ChernSeries series_inverse(const ChernRing& R, const ChernSeries& u);
// exp of a series with zero constant term; log of one with constant term 1
ChernSeries series_exp(const ChernRing& R, const ChernSeries& s);
ChernSeries series_log(const ChernRing& R, const ChernSeries& u);

// The character <-> signed-total-class transforms. psi input must have
// constant term 1 (rank slot normalized); the degree-0 slot is excluded from
// the exponent sum. phi(psi(s)) = s up to the truncation degree.
ChernSeries psi(const ChernRing& R, const ChernSeries& s);
ChernSeries phi(const ChernRing& R, const ChernSeries& u);

// c_k read off a signed total class Sum (-1)^n c_n; negate = virtual dual.
ChernPoly chern_class(const ChernRing& R, const ChernSeries& signed_total, int k, bool negate);
// converter to the all-plus-signs convention
ChernSeries to_standard_convention(const ChernRing& R, const ChernSeries& signed_total);

// the generic character: symbols ch_1..ch_D adjoined to R, constant term 1
ChernSeries generic_character(ChernRing& R);
// ch of a line bundle: one degree-1 symbol x, components x^n/n!
ChernSeries line_character(ChernRing& R);

struct ChernCheck {
  bool pass = false;
  std::string detail;
};
// coefficient identity: sum_n (-1)^{a+b} c_{a+n+1}(I) c_{b-n-1}(-I) n
//                       = -(a+b)! ch_{a+b}(I), exact in the free symbols
ChernCheck claim_identity_check(int a, int b, int D);

}  // namespace hilbfock

#pragma once

#include <map>
#include <string>

#include "hilbfock/rational.hpp"

namespace hilbfock {

// Exact elements a_0 + sum a_r sqrt(r) over square-free positive integers r.
class ScalarField {
 public:
  ScalarField() = default;
  ScalarField(const Rat& a) {
    if (!a.is_zero()) comps_[1] = a;
  }
  // coeff * sqrt(n); n is normalized to its square-free part
  static ScalarField radical(long long n, const Rat& coeff = Rat(1));
  // 1/sqrt(n) as an exact element
  static ScalarField inv_sqrt(long long n);

  bool is_zero() const { return comps_.empty(); }
  bool is_rational() const {
    return comps_.empty() || (comps_.size() == 1 && comps_.begin()->first == 1);
  }
  Rat rational_part() const {
    auto it = comps_.find(1);
    return it == comps_.end() ? Rat(0) : it->second;
  }

  ScalarField operator+(const ScalarField& o) const;
  ScalarField operator-(const ScalarField& o) const;
  ScalarField operator*(const ScalarField& o) const;
  ScalarField operator-() const;
  bool operator==(const ScalarField& o) const { return comps_ == o.comps_; }
  bool operator!=(const ScalarField& o) const { return !(*this == o); }

  const std::map<long long, Rat>& components() const { return comps_; }
  std::string str() const;

  // n = square * sqfree; returns {sqrt(square), sqfree}
  static std::pair<long long, long long> split_square(long long n);

 private:
  std::map<long long, Rat> comps_;  // square-free radicand -> coefficient
  void add(long long r, const Rat& c);
};

}  // namespace hilbfock

#include "hilbfock/scalar_field.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hilbfock {

std::pair<long long, long long> ScalarField::split_square(long long n) {
  if (n <= 0) throw std::invalid_argument("radicand must be positive");
  long long root = 1, rest = n;
  for (long long p = 2; p * p <= rest; ++p)
    while (rest % (p * p) == 0) {
      rest /= p * p;
      root *= p;
    }
  return {root, rest};
}

ScalarField ScalarField::radical(long long n, const Rat& coeff) {
  auto [root, sf] = split_square(n);
  ScalarField s;
  s.add(sf, coeff * Rat(root));
  return s;
}

ScalarField ScalarField::inv_sqrt(long long n) {
  // 1/sqrt(n) = sqrt(n)/n = g*sqrt(s)/(g^2 s) = sqrt(s)/(g s)
  auto [root, sf] = split_square(n);
  ScalarField s;
  s.add(sf, Rat(1, root * sf));
  return s;
}

void ScalarField::add(long long r, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = comps_.try_emplace(r, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

ScalarField ScalarField::operator+(const ScalarField& o) const {
  ScalarField s = *this;
  for (auto& [r, c] : o.comps_) s.add(r, c);
  return s;
}

ScalarField ScalarField::operator-(const ScalarField& o) const {
  ScalarField s = *this;
  for (auto& [r, c] : o.comps_) s.add(r, -c);
  return s;
}

ScalarField ScalarField::operator-() const {
  ScalarField s;
  for (auto& [r, c] : comps_) s.comps_[r] = -c;
  return s;
}

ScalarField ScalarField::operator*(const ScalarField& o) const {
  ScalarField s;
  for (auto& [r1, c1] : comps_)
    for (auto& [r2, c2] : o.comps_) {
      long long g = std::gcd(r1, r2);
      // sqrt(r1) sqrt(r2) = g sqrt(r1 r2 / g^2), the product of coprime
      // square-free numbers staying square-free
      s.add((r1 / g) * (r2 / g), c1 * c2 * Rat(g));
    }
  return s;
}

std::string ScalarField::str() const {
  if (comps_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [r, c] : comps_) {
    os << (first ? "" : " + ") << c.str();
    first = false;
    if (r != 1) os << "*sqrt(" << r << ")";
  }
  return os.str();
}

}  // namespace hilbfock

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hilbfock/chern.hpp"

using namespace hilbfock;

TEST_CASE("line bundle: psi gives 1 - x") {
  ChernRing R(5);
  ChernSeries ch = line_character(R);
  ChernSeries total = psi(R, ch);
  CHECK(total.comp[0] == R.constant(Rat(1)));
  // signed total class: comp[1] = -x, higher components vanish
  ChernPoly mx = R.symbol(0);
  for (auto& [m, c] : mx) c = -c;
  CHECK(total.comp[1] == mx);
  for (int n = 2; n <= 5; ++n) CHECK(total.comp[n].empty());
  // c_1 = x under the sign convention; c_k = 0 for k >= 2
  CHECK(chern_class(R, total, 1, false) == R.symbol(0));
  CHECK(chern_class(R, total, 2, false).empty());
  // c_k(-I) follows the complete homogeneous pattern: (-1)^k x^k
  ChernPoly c2 = chern_class(R, total, 2, true);
  ChernPoly x2 = R.mul(R.symbol(0), R.symbol(0));
  CHECK(c2 == x2);
}

TEST_CASE("phi inverts psi to the truncation degree") {
  ChernRing R(10);
  ChernSeries ch = generic_character(R);
  CHECK(phi(R, psi(R, ch)) == ch);

  // randomized series with scrambled rational coefficients
  std::mt19937_64 rng(5150);
  ChernSeries s = series_one(R);
  for (int n = 1; n <= 10; ++n) {
    s.comp[n] = ch.comp[n];
    for (auto& [m, c] : s.comp[n]) c = Rat((long long)(rng() % 9) - 4, 1 + (long long)(rng() % 5));
  }
  CHECK(phi(R, psi(R, s)) == s);
}

TEST_CASE("signed total classes multiply inversely") {
  ChernRing R(10);
  ChernSeries total = psi(R, generic_character(R));
  ChernSeries inv = series_inverse(R, total);
  CHECK(series_mul(R, total, inv) == series_one(R));
  // c(I) c(-I) = 1 expressed through the indexed classes
  for (int k = 1; k <= 10; ++k) {
    ChernPoly acc = R.zero();
    for (int j = 0; j <= k; ++j) {
      Rat sg(((k - j) % 2) ? -1 : 1);
      (void)sg;  // the signed-total split already carries the signs
      ChernRing::add_to(acc, R.mul(total.comp[j], inv.comp[k - j]));
    }
    CHECK(acc.empty());
  }
}

TEST_CASE("additivity: psi of a sum is the product") {
  // two independent generic families, adjoined before any polynomial is built
  ChernRing R(8);
  std::vector<int> ia, ib;
  for (int n = 1; n <= 8; ++n) ia.push_back(R.add_symbol("ch" + std::to_string(n), n));
  for (int n = 1; n <= 8; ++n) ib.push_back(R.add_symbol("dh" + std::to_string(n), n));
  ChernSeries a = series_zero(R), b = series_zero(R);
  a.comp[0] = b.comp[0] = R.constant(Rat(1));
  for (int n = 1; n <= 8; ++n) {
    a.comp[n] = R.symbol(ia[n - 1]);
    b.comp[n] = R.symbol(ib[n - 1]);
  }

  // characters add with rank slot renormalized to 1
  ChernSeries sum = series_add(R, a, b);
  sum.comp[0] = R.constant(Rat(1));
  CHECK(psi(R, sum) == series_mul(R, psi(R, a), psi(R, b)));
}

TEST_CASE("to_standard_convention flips odd signs") {
  ChernRing R(4);
  ChernSeries total = psi(R, line_character(R));
  ChernSeries std_total = to_standard_convention(R, total);
  CHECK(std_total.comp[1] == R.symbol(0));
}

TEST_CASE("claim identity") {
  // spec instances
  CHECK(claim_identity_check(1, 1, 6).pass);
  CHECK(claim_identity_check(0, 1, 6).pass);
  // full generic sweep 1 <= a+b <= 8 runs in the acceptance suite; spot checks here
  CHECK(claim_identity_check(2, 3, 8).pass);
  CHECK(claim_identity_check(4, 0, 8).pass);
  CHECK_FALSE(claim_identity_check(0, 0, 6).pass);
}

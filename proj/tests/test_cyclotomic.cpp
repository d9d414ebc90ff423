#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

#include "doctest.h"

#include "cospec/cyclotomic.hpp"

using namespace cospec;

namespace {
std::vector<BigInt> coeffs(std::vector<long> v) {
  return std::vector<BigInt>(v.begin(), v.end());
}
}  // namespace

TEST_SUITE("cyclotomic") {

TEST_CASE("cyclotomic polynomials match the classical tables") {
  CHECK(cyclotomic_polynomial(1).coeffs == coeffs({-1, 1}));
  CHECK(cyclotomic_polynomial(2).coeffs == coeffs({1, 1}));
  CHECK(cyclotomic_polynomial(3).coeffs == coeffs({1, 1, 1}));
  CHECK(cyclotomic_polynomial(4).coeffs == coeffs({1, 0, 1}));
  CHECK(cyclotomic_polynomial(6).coeffs == coeffs({1, -1, 1}));
  CHECK(cyclotomic_polynomial(8).coeffs == coeffs({1, 0, 0, 0, 1}));
  CHECK(cyclotomic_polynomial(12).coeffs == coeffs({1, 0, -1, 0, 1}));
  CHECK(cyclotomic_polynomial(15).coeffs ==
        coeffs({1, -1, 0, 1, -1, 1, 0, -1, 1}));
  // 105 is the first index with a coefficient of magnitude 2.
  IntPolynomial p105 = cyclotomic_polynomial(105);
  CHECK(p105.degree() == 48);
  bool has_minus_two = false;
  for (const BigInt& c : p105.coeffs)
    if (c == -2) has_minus_two = true;
  CHECK(has_minus_two);
}

TEST_CASE("divmod_monic divides exactly and rejects non-monic divisors") {
  IntPolynomial num = x_power_minus_one(8);
  auto [q, r] = divmod_monic(num, cyclotomic_polynomial(8));
  CHECK(r.degree() == -1);
  CHECK(q.coeffs == coeffs({-1, 0, 0, 0, 1}));  // x^4 - 1
  IntPolynomial not_monic{coeffs({1, 2})};
  CHECK_THROWS_AS(divmod_monic(num, not_monic), std::invalid_argument);
}

TEST_CASE("full root sums cancel to zero") {
  CyclotomicField f8(8);
  // 1 + z^2 + z^4 + z^6 = 0 in Q(zeta_8) (sum over a coset of the 4th roots).
  std::vector<std::int64_t> counts(8, 0);
  counts[0] = counts[2] = counts[4] = counts[6] = 1;
  CHECK(is_zero(f8.from_exponent_counts(counts)));
  // 1 + z^4 = 0.
  std::vector<std::int64_t> pair(8, 0);
  pair[0] = pair[4] = 1;
  CHECK(is_zero(f8.from_exponent_counts(pair)));
}

TEST_CASE("arithmetic and equality on exact values") {
  CyclotomicField f8(8);
  CyclotomicInteger a = root_power_sum(f8, {1, 7});   // z + z^7  = sqrt(2)
  CyclotomicInteger b = root_power_sum(f8, {3, 5});   // z^3 + z^5 = -sqrt(2)
  CHECK(cyc_equals(cyc_neg(a), b));
  CHECK(is_zero(cyc_add(a, b)));
  CHECK(cyc_equals(cyc_scale(a, BigInt(-1)), b));
  CHECK(!cyc_equals(a, b));

  CyclotomicInteger two = f8.from_integer(BigInt(2));
  CHECK(is_rational_integer(two));
  CHECK(rational_value(two) == 2);
  CHECK(!is_rational_integer(a));
  CHECK_THROWS_AS(rational_value(a), std::invalid_argument);
}

TEST_CASE("mixed moduli are rejected with a lift hint") {
  CyclotomicField f8(8);
  CyclotomicField f16(16);
  CyclotomicInteger a = root_power_sum(f8, {1});
  CyclotomicInteger b = root_power_sum(f16, {2});
  CHECK_THROWS_AS(cyc_add(a, b), std::invalid_argument);
  // After lifting both to the common field they are equal: zeta_8 = zeta_16^2.
  CHECK(cyc_equals(lift(a, 16), b));
}

TEST_CASE("galois substitution permutes root exponents") {
  CyclotomicField f8(8);
  CyclotomicInteger a = root_power_sum(f8, {1});
  CHECK(cyc_equals(galois_apply(3, a), root_power_sum(f8, {3})));
  CHECK(cyc_equals(galois_apply(7, a), root_power_sum(f8, {7})));
  // sqrt(2) = z + z^7 is fixed by t=7 (complex conjugation).
  CyclotomicInteger s = root_power_sum(f8, {1, 7});
  CHECK(cyc_equals(galois_apply(7, s), s));
  // t must be invertible mod N.
  CHECK_THROWS_AS(galois_apply(2, a), std::invalid_argument);
  // Composition: t=3 twice is t=9=1 mod 8.
  CHECK(cyc_equals(galois_apply(3, galois_apply(3, a)), a));
}

TEST_CASE("lift preserves values across index multiplication") {
  CyclotomicField f4(4);
  CyclotomicInteger i = root_power_sum(f4, {1});  // zeta_4
  CyclotomicInteger lifted = lift(i, 8);
  CHECK(lifted.modulus == 8);
  CHECK(cyc_equals(lifted, root_power_sum(CyclotomicField(8), {2})));
  CHECK_THROWS_AS(lift(i, 6), std::invalid_argument);  // 4 does not divide 6
  // Rational integers lift to themselves.
  CyclotomicInteger five = f4.from_integer(BigInt(5));
  CHECK(rational_value(lift(five, 12)) == 5);
}

TEST_CASE("numeric embedding matches known values") {
  CyclotomicField f8(8);
  std::complex<double> v = to_complex(root_power_sum(f8, {1, 7}));
  CHECK(std::abs(v.real() - std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(v.imag()) < 1e-12);
  std::complex<double> z = to_complex(root_power_sum(f8, {1}));
  CHECK(std::abs(z - std::polar(1.0, std::acos(-1.0) / 4)) < 1e-12);
}

TEST_CASE("to_string renders sparse polynomials in the root") {
  CyclotomicField f8(8);
  CHECK(to_string(f8.from_integer(BigInt(0))) == "0");
  CHECK(to_string(f8.from_integer(BigInt(-3))) == "-3");
  CHECK(to_string(root_power_sum(f8, {1, 7})) == "z - z^3");  // z^7 reduces
}

TEST_CASE("large moduli stay exact") {
  // In Q(zeta_105), the sum over all primitive roots is mu(105) = -1.
  CyclotomicField f105(105);
  std::vector<std::int64_t> counts(105, 0);
  for (std::uint64_t e = 0; e < 105; ++e)
    if (std::gcd(e, std::uint64_t{105}) == 1) counts[e] = 1;
  CyclotomicInteger s = f105.from_exponent_counts(counts);
  CHECK(is_rational_integer(s));
  CHECK(rational_value(s) == -1);
}

}  // TEST_SUITE

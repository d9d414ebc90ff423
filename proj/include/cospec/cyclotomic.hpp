#pragma once
// Exact arithmetic with sums of N-th roots of unity.
//
// Values live in the ring Z[zeta_N] and are stored as integer coefficient
// vectors of length phi(N) against the power basis 1, zeta, ..., zeta^(phi-1),
// i.e. reduced modulo the N-th cyclotomic polynomial.  Because that basis is
// a Z-basis, coefficient equality is value equality, so eigenvalues can be
// compared exactly with no numerics involved.  Coefficients are arbitrary
// precision; nothing here can silently overflow.
//
// The ring operations deliberately stop at what spectra need: addition,
// negation, integer scaling, Galois action zeta -> zeta^t, and lifting into
// a larger cyclotomic ring.  General ring multiplication is not provided.

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cospec {

using BigInt = boost::multiprecision::cpp_int;

// Dense integer polynomial, lowest degree first, no trailing zeros.
struct IntPolynomial {
  std::vector<BigInt> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  // Degree of the zero polynomial is reported as -1.
  long long degree() const {
    return static_cast<long long>(coeffs.size()) - 1;
  }
  void normalize();  // drop trailing zeros

  bool operator==(const IntPolynomial&) const = default;
};

IntPolynomial x_power_minus_one(std::uint64_t n);

// Long division by a monic divisor; exact over Z.  Returns {quotient,
// remainder} with deg(remainder) < deg(divisor).  Throws if the divisor is
// not monic.
std::pair<IntPolynomial, IntPolynomial> divmod_monic(IntPolynomial num,
                                                     const IntPolynomial& den);

// The n-th cyclotomic polynomial Phi_n, computed by exact division of
// x^n - 1 by the Phi_d for proper divisors d, with the standard shortcuts
// Phi_n(x) = Phi_rad(n)(x^(n/rad)) and Phi_2m(x) = Phi_m(-x) for odd m > 1.
IntPolynomial cyclotomic_polynomial(std::uint64_t n);

// A value in Z[zeta_modulus]; coeffs has length phi(modulus) exactly.
struct CyclotomicInteger {
  std::uint64_t modulus = 1;
  std::vector<BigInt> coeffs;

  bool operator==(const CyclotomicInteger&) const = default;
};

// Carries Phi_N so that many values in the same ring reduce against one
// precomputed minimal polynomial.
class CyclotomicField {
 public:
  explicit CyclotomicField(std::uint64_t n);

  std::uint64_t modulus() const { return n_; }
  std::size_t degree() const { return phi_.coeffs.size() - 1; }
  const IntPolynomial& minimal_polynomial() const { return phi_; }

  // Value sum_e counts[e] * zeta^e, from a vector of length modulus().
  CyclotomicInteger from_exponent_counts(
      const std::vector<std::int64_t>& counts) const;
  CyclotomicInteger from_exponent_counts(
      const std::vector<BigInt>& counts) const;
  CyclotomicInteger from_integer(BigInt v) const;

 private:
  std::uint64_t n_;
  IntPolynomial phi_;
};

// sum of zeta_n^e over the listed exponents (taken mod n; repeats allowed).
CyclotomicInteger root_power_sum(const CyclotomicField& field,
                                 const std::vector<std::uint64_t>& exponents);
CyclotomicInteger root_power_sum(std::uint64_t n,
                                 const std::vector<std::uint64_t>& exponents);

// Operands must share a modulus (use lift() first otherwise).
CyclotomicInteger cyc_add(const CyclotomicInteger& a,
                          const CyclotomicInteger& b);
CyclotomicInteger cyc_neg(const CyclotomicInteger& a);
CyclotomicInteger cyc_scale(const CyclotomicInteger& a, const BigInt& k);
bool cyc_equals(const CyclotomicInteger& a, const CyclotomicInteger& b);
bool is_zero(const CyclotomicInteger& a);

// Galois action zeta -> zeta^t; requires gcd(t, modulus) = 1.  This is a
// ring automorphism, so it permutes the eigenvalues of any integer matrix.
CyclotomicInteger galois_apply(const CyclotomicField& field, std::uint64_t t,
                               const CyclotomicInteger& a);
CyclotomicInteger galois_apply(std::uint64_t t, const CyclotomicInteger& a);

// Re-expresses a in Z[zeta_target] via zeta_n = zeta_target^(target/n);
// requires modulus | target.
CyclotomicInteger lift(const CyclotomicInteger& a, std::uint64_t target,
                       const CyclotomicField& target_field);
CyclotomicInteger lift(const CyclotomicInteger& a, std::uint64_t target);

// True iff the value lies in Z (all power-basis coefficients above the
// constant term vanish); rational_value then returns that integer.
bool is_rational_integer(const CyclotomicInteger& a);
BigInt rational_value(const CyclotomicInteger& a);

// Numeric evaluation at zeta = exp(2*pi*i/modulus), for oracle comparisons.
std::complex<double> to_complex(const CyclotomicInteger& a);

// Canonical exact rendering, e.g. "z - z^3 (z = primitive 8th root)".
std::string to_string(const CyclotomicInteger& a);

}  // namespace cospec

#include "cospec/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace cospec {

void IntPolynomial::normalize() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

IntPolynomial x_power_minus_one(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("exponent must be positive");
  IntPolynomial p;
  p.coeffs.assign(n + 1, 0);
  p.coeffs[0] = -1;
  p.coeffs[n] = 1;
  return p;
}

std::pair<IntPolynomial, IntPolynomial> divmod_monic(
    IntPolynomial num, const IntPolynomial& den) {
  if (den.is_zero() || den.coeffs.back() != 1)
    throw std::invalid_argument("divisor must be monic");
  num.normalize();
  const long long dd = den.degree();
  IntPolynomial quot;
  if (num.degree() >= dd)
    quot.coeffs.assign(num.degree() - dd + 1, 0);
  while (num.degree() >= dd) {
    const long long shift = num.degree() - dd;
    BigInt c = num.coeffs.back();
    quot.coeffs[shift] = c;
    for (long long i = 0; i <= dd; ++i)
      num.coeffs[shift + i] -= c * den.coeffs[i];
    num.normalize();
  }
  quot.normalize();
  return {std::move(quot), std::move(num)};
}

namespace {

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// Phi_n for squarefree n, by dividing x^n - 1 by the proper-divisor factors.
IntPolynomial cyclotomic_squarefree(
    std::uint64_t n, std::map<std::uint64_t, IntPolynomial>& cache) {
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  IntPolynomial p = x_power_minus_one(n);
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d) continue;
    auto [q, r] = divmod_monic(std::move(p), cyclotomic_squarefree(d, cache));
    if (!r.is_zero())
      throw std::logic_error("cyclotomic division left a remainder");
    p = std::move(q);
  }
  cache.emplace(n, p);
  return p;
}

// Substitutes x^k for x: spreads coefficients k positions apart.
IntPolynomial substitute_power(const IntPolynomial& p, std::uint64_t k) {
  IntPolynomial out;
  out.coeffs.assign(static_cast<std::size_t>(p.degree()) * k + 1, 0);
  for (std::size_t i = 0; i < p.coeffs.size(); ++i)
    out.coeffs[i * k] = p.coeffs[i];
  return out;
}

IntPolynomial substitute_negated(const IntPolynomial& p) {
  IntPolynomial out = p;
  for (std::size_t i = 1; i < out.coeffs.size(); i += 2)
    out.coeffs[i] = -out.coeffs[i];
  if (!out.coeffs.empty() && out.coeffs.back() < 0)
    for (BigInt& c : out.coeffs) c = -c;
  return out;
}

}  // namespace

IntPolynomial cyclotomic_polynomial(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic index must be positive");
  if (n == 1) {
    IntPolynomial p;
    p.coeffs = {-1, 1};
    return p;
  }
  auto factors = factorize(n);
  std::uint64_t radical = 1;
  for (auto [p, e] : factors) radical *= p;
  if (radical != n)
    return substitute_power(cyclotomic_polynomial(radical), n / radical);
  if (n % 2 == 0 && n > 2)
    return substitute_negated(cyclotomic_polynomial(n / 2));
  std::map<std::uint64_t, IntPolynomial> cache;
  return cyclotomic_squarefree(n, cache);
}

CyclotomicField::CyclotomicField(std::uint64_t n)
    : n_(n), phi_(cyclotomic_polynomial(n)) {}

namespace {

template <typename Int>
CyclotomicInteger reduce_counts(std::uint64_t n, const IntPolynomial& phi,
                                const std::vector<Int>& counts) {
  if (counts.size() != n)
    throw std::invalid_argument("exponent count vector must have length " +
                                std::to_string(n));
  const std::size_t deg = phi.coeffs.size() - 1;
  CyclotomicInteger out;
  out.modulus = n;
  if ((n & (n - 1)) == 0 && n > 1) {
    // Power of two: Phi_n = x^(n/2) + 1, so zeta^(i + n/2) = -zeta^i.
    out.coeffs.resize(deg);
    for (std::size_t i = 0; i < deg; ++i)
      out.coeffs[i] = BigInt(counts[i]) - BigInt(counts[i + deg]);
    return out;
  }
  IntPolynomial p;
  p.coeffs.assign(counts.begin(), counts.end());
  p.normalize();
  auto [q, r] = divmod_monic(std::move(p), phi);
  r.coeffs.resize(deg, 0);
  out.coeffs = std::move(r.coeffs);
  return out;
}

}  // namespace

CyclotomicInteger CyclotomicField::from_exponent_counts(
    const std::vector<std::int64_t>& counts) const {
  return reduce_counts(n_, phi_, counts);
}

CyclotomicInteger CyclotomicField::from_exponent_counts(
    const std::vector<BigInt>& counts) const {
  return reduce_counts(n_, phi_, counts);
}

CyclotomicInteger CyclotomicField::from_integer(BigInt v) const {
  CyclotomicInteger out;
  out.modulus = n_;
  out.coeffs.assign(degree(), 0);
  out.coeffs[0] = std::move(v);
  return out;
}

CyclotomicInteger root_power_sum(const CyclotomicField& field,
                                 const std::vector<std::uint64_t>& exponents) {
  std::vector<std::int64_t> counts(field.modulus(), 0);
  for (std::uint64_t e : exponents) ++counts[e % field.modulus()];
  return field.from_exponent_counts(counts);
}

CyclotomicInteger root_power_sum(std::uint64_t n,
                                 const std::vector<std::uint64_t>& exponents) {
  return root_power_sum(CyclotomicField(n), exponents);
}

namespace {

void require_same_modulus(const CyclotomicInteger& a,
                          const CyclotomicInteger& b) {
  if (a.modulus != b.modulus)
    throw std::invalid_argument(
        "modulus mismatch (" + std::to_string(a.modulus) + " vs " +
        std::to_string(b.modulus) + "); lift() to a common ring first");
}

}  // namespace

CyclotomicInteger cyc_add(const CyclotomicInteger& a,
                          const CyclotomicInteger& b) {
  require_same_modulus(a, b);
  CyclotomicInteger out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i)
    out.coeffs[i] += b.coeffs[i];
  return out;
}

CyclotomicInteger cyc_neg(const CyclotomicInteger& a) {
  CyclotomicInteger out = a;
  for (BigInt& c : out.coeffs) c = -c;
  return out;
}

CyclotomicInteger cyc_scale(const CyclotomicInteger& a, const BigInt& k) {
  CyclotomicInteger out = a;
  for (BigInt& c : out.coeffs) c *= k;
  return out;
}

bool cyc_equals(const CyclotomicInteger& a, const CyclotomicInteger& b) {
  require_same_modulus(a, b);
  return a.coeffs == b.coeffs;
}

bool is_zero(const CyclotomicInteger& a) {
  for (const BigInt& c : a.coeffs)
    if (c != 0) return false;
  return true;
}

CyclotomicInteger galois_apply(const CyclotomicField& field, std::uint64_t t,
                               const CyclotomicInteger& a) {
  if (field.modulus() != a.modulus)
    throw std::invalid_argument("field modulus does not match the value");
  const std::uint64_t n = a.modulus;
  t %= n;
  if (std::gcd(t, n) != 1)
    throw std::invalid_argument("Galois exponent " + std::to_string(t) +
                                " is not coprime to " + std::to_string(n));
  std::vector<BigInt> counts(n, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    if (a.coeffs[i] != 0)
      counts[static_cast<std::size_t>(
          (static_cast<unsigned __int128>(i) * t) % n)] += a.coeffs[i];
  return field.from_exponent_counts(counts);
}

CyclotomicInteger galois_apply(std::uint64_t t, const CyclotomicInteger& a) {
  return galois_apply(CyclotomicField(a.modulus), t, a);
}

CyclotomicInteger lift(const CyclotomicInteger& a, std::uint64_t target,
                       const CyclotomicField& target_field) {
  if (target_field.modulus() != target)
    throw std::invalid_argument("field modulus does not match the target");
  if (target % a.modulus != 0)
    throw std::invalid_argument(
        "lift target " + std::to_string(target) +
        " is not a multiple of the source modulus " +
        std::to_string(a.modulus));
  const std::uint64_t scale = target / a.modulus;
  std::vector<BigInt> counts(target, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    if (a.coeffs[i] != 0) counts[i * scale] += a.coeffs[i];
  return target_field.from_exponent_counts(counts);
}

CyclotomicInteger lift(const CyclotomicInteger& a, std::uint64_t target) {
  return lift(a, target, CyclotomicField(target));
}

bool is_rational_integer(const CyclotomicInteger& a) {
  for (std::size_t i = 1; i < a.coeffs.size(); ++i)
    if (a.coeffs[i] != 0) return false;
  return true;
}

BigInt rational_value(const CyclotomicInteger& a) {
  if (!is_rational_integer(a))
    throw std::invalid_argument("value " + to_string(a) +
                                " is not a rational integer");
  return a.coeffs.empty() ? BigInt(0) : a.coeffs[0];
}

std::complex<double> to_complex(const CyclotomicInteger& a) {
  std::complex<double> out = 0;
  const double step =
      2.0 * std::numbers::pi / static_cast<double>(a.modulus);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    double c = a.coeffs[i].convert_to<double>();
    out += std::complex<double>(c * std::cos(step * i), c * std::sin(step * i));
  }
  return out;
}

std::string to_string(const CyclotomicInteger& a) {
  std::string s;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    const BigInt& c = a.coeffs[i];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (i == 0) {
      s += mag.str();
    } else {
      if (mag != 1) s += mag.str() + "*";
      s += i == 1 ? "z" : "z^" + std::to_string(i);
    }
  }
  if (s.empty()) return "0";
  return s;
}

}  // namespace cospec

#include "cospec/f2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cospec::f2 {

bool Basis::insert(std::uint64_t v) {
  v = reduce(v);
  if (v == 0) return false;
  int lead = 63 - std::countl_zero(v);
  // Keep the form reduced: clear the new leading bit from existing rows.
  for (int b = 0; b < 64; ++b)
    if (slot_[b] & (std::uint64_t{1} << lead)) slot_[b] ^= v;
  slot_[lead] = v;
  ++rank_;
  return true;
}

std::uint64_t Basis::reduce(std::uint64_t v) const {
  // Cancel every pivot bit, not just the leading one: insert() depends on the
  // reduced form having no pivot of one row inside another.
  for (int b = 63; b >= 0 && v != 0; --b)
    if (((v >> b) & 1) && slot_[b] != 0) v ^= slot_[b];
  return v;
}

std::vector<std::uint64_t> Basis::rows() const {
  std::vector<std::uint64_t> out;
  for (int b = 63; b >= 0; --b)
    if (slot_[b]) out.push_back(slot_[b]);
  return out;
}

std::vector<std::uint64_t> orthogonal_complement(const Basis& basis, int n) {
  if (n < 0 || n > 64)
    throw std::invalid_argument("dimension must be between 0 and 64");
  std::vector<std::uint64_t> rows = basis.rows();
  for (std::uint64_t r : rows)
    if (n < 64 && (r >> n) != 0)
      throw std::invalid_argument("basis row exceeds the given dimension");
  // Reduced echelon rows: row r_p = e_p + sum over free bits f of c_{p,f} e_f,
  // where p is the leading (pivot) bit.  For each free bit f the vector
  // z = e_f + sum_p c_{p,f} e_p satisfies parity_dot(z, r) = 0 for all rows.
  std::uint64_t pivot_mask = 0;
  for (std::uint64_t r : rows) pivot_mask |= std::uint64_t{1} << (63 - std::countl_zero(r));
  std::vector<std::uint64_t> out;
  for (int f = 0; f < n; ++f) {
    if (pivot_mask & (std::uint64_t{1} << f)) continue;
    std::uint64_t z = std::uint64_t{1} << f;
    for (std::uint64_t r : rows)
      if (r & (std::uint64_t{1} << f))
        z |= std::uint64_t{1} << (63 - std::countl_zero(r));
    out.push_back(z);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int rank_of(const std::vector<std::uint64_t>& vectors) {
  Basis b;
  for (std::uint64_t v : vectors) b.insert(v);
  return b.rank();
}

std::vector<std::uint64_t> span_elements(
    const std::vector<std::uint64_t>& generators, std::uint64_t limit) {
  Basis b;
  for (std::uint64_t v : generators) b.insert(v);
  if (b.rank() >= 63)
    throw std::length_error("span too large to materialize");
  std::uint64_t count = std::uint64_t{1} << b.rank();
  if (limit && count > limit)
    throw std::length_error("span exceeds limit of " + std::to_string(limit) +
                            " elements");
  std::vector<std::uint64_t> rows = b.rows();
  std::vector<std::uint64_t> out{0};
  out.reserve(count);
  for (std::uint64_t r : rows) {
    std::size_t sz = out.size();
    for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] ^ r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cospec::f2

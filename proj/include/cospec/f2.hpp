#pragma once
// Dense linear algebra over GF(2) on bitmask vectors of dimension <= 64.

#include <cstdint>
#include <vector>

namespace cospec::f2 {

inline int parity_dot(std::uint64_t a, std::uint64_t b) {
  return __builtin_parityll(a & b);
}

// Incremental row basis in reduced echelon form, one slot per leading bit.
class Basis {
 public:
  // Adds v to the span; returns true iff v was independent of the span.
  bool insert(std::uint64_t v);
  // True iff v lies in the span.
  bool contains(std::uint64_t v) const { return reduce(v) == 0; }
  // Reduces v modulo the span (result has no leading bit in common with it).
  std::uint64_t reduce(std::uint64_t v) const;
  int rank() const { return rank_; }
  // The rows, leading bit descending.
  std::vector<std::uint64_t> rows() const;

 private:
  std::uint64_t slot_[64] = {};
  int rank_ = 0;
};

// Basis of {z in F2^n : parity_dot(z, r) = 0 for every row r}, computed by
// back-substitution from the reduced echelon rows.  Rows must fit in n bits.
std::vector<std::uint64_t> orthogonal_complement(const Basis& basis, int n);

int rank_of(const std::vector<std::uint64_t>& vectors);

// All 2^rank elements of the span, ascending.  Throws std::length_error if
// the span exceeds `limit` elements (0 = no limit).
std::vector<std::uint64_t> span_elements(
    const std::vector<std::uint64_t>& generators, std::uint64_t limit = 0);

}  // namespace cospec::f2

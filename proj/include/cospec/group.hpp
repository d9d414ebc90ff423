#pragma once
// Finite abelian groups presented as explicit products of cyclic factors,
// with their elements, dual characters, and subgroup machinery.
//
// A group Z_{d_1} x ... x Z_{d_k} is stored as the list of factor orders.
// Elements and characters are both residue tuples against those orders
// (the dual group is identified with the group itself), but they are kept
// as distinct types so a character can never be passed where a vertex is
// expected.  The canonical order on elements is lexicographic on tuples,
// with the first coordinate most significant; element_rank/element_at
// convert between a tuple and its position in that order (mixed-radix).

#include <cstdint>
#include <string>
#include <vector>

namespace cospec {

struct GroupElement {
  std::vector<std::uint64_t> coords;

  bool operator==(const GroupElement&) const = default;
  auto operator<=>(const GroupElement&) const = default;
};

struct Character {
  std::vector<std::uint64_t> coords;

  bool operator==(const Character&) const = default;
  auto operator<=>(const Character&) const = default;
};

struct AbelianGroup {
  std::vector<std::uint64_t> orders;  // cyclic factor orders, each >= 2
  std::uint64_t exponent = 1;         // lcm of the factor orders
  std::uint64_t size = 1;             // product of the factor orders

  std::size_t rank() const { return orders.size(); }
  GroupElement identity() const {
    return GroupElement{std::vector<std::uint64_t>(orders.size(), 0)};
  }
};

// A subgroup given by generators, with its full element list in canonical
// (lexicographic) order.  `generators` is a minimal generating set when the
// subgroup was produced by this library's own routines.
struct Subgroup {
  std::vector<GroupElement> generators;
  std::vector<GroupElement> elements;
  std::uint64_t order = 0;
};

// Validates the orders (each >= 2, product and lcm fit in 64 bits) and
// precomputes exponent and size.  Throws std::invalid_argument otherwise.
AbelianGroup make_group(const std::vector<std::uint64_t>& orders);

// Throws std::invalid_argument if the tuple shape or residues don't match
// the group.  All operations below call this on their inputs.
void check_element(const AbelianGroup& g, const GroupElement& x);
void check_character(const AbelianGroup& g, const Character& a);

GroupElement add(const AbelianGroup& g, const GroupElement& x,
                 const GroupElement& y);
GroupElement negate(const AbelianGroup& g, const GroupElement& x);
bool is_involution(const AbelianGroup& g, const GroupElement& x);  // 2x = 0

// Exponent e of the pairing <a, x> = zeta_N^e between a character and an
// element, where N is the group exponent: e = sum_i a_i * x_i * (N / d_i)
// computed mod N.  Bilinear in both arguments.
std::uint64_t pairing_exponent(const AbelianGroup& g, const Character& a,
                               const GroupElement& x);

// Position of x in the canonical order, and its inverse.
std::uint64_t element_rank(const AbelianGroup& g, const GroupElement& x);
GroupElement element_at(const AbelianGroup& g, std::uint64_t rank);
Character character_at(const AbelianGroup& g, std::uint64_t rank);
std::uint64_t character_rank(const AbelianGroup& g, const Character& a);

// The subgroup {x : 2x = 0}; order = 2^(# even factor orders).
Subgroup two_torsion(const AbelianGroup& g);

// Closure of the generators under addition, elements in canonical order.
// Intended for small subgroups; throws std::length_error if the closure
// exceeds `limit` elements (0 = no limit).
Subgroup subgroup_generated(const AbelianGroup& g,
                            const std::vector<GroupElement>& generators,
                            std::uint64_t limit = 0);

// Builds a Subgroup from an explicit element set (must be closed and
// contain the identity; throws std::invalid_argument otherwise) and
// computes a minimal generating set for it.  The set may be given in any
// order.  Only supports sets of involutions (the strongly cospectral case),
// where minimality is GF(2) rank.
Subgroup subgroup_from_involutions(const AbelianGroup& g,
                                   std::vector<GroupElement> elements);

// "(a, b, c)" rendering used in text reports and error messages.
std::string to_string(const GroupElement& x);
std::string to_string(const Character& a);

}  // namespace cospec

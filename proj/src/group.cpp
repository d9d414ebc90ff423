#include "cospec/group.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

#include "cospec/f2.hpp"

namespace cospec {

namespace {

// a*b with overflow detection, used when sizing groups.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a)
    throw std::invalid_argument("group size overflows 64 bits");
  return a * b;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

}  // namespace

AbelianGroup make_group(const std::vector<std::uint64_t>& orders) {
  if (orders.empty())
    throw std::invalid_argument("group needs at least one cyclic factor");
  AbelianGroup g;
  g.orders = orders;
  for (std::uint64_t d : orders) {
    if (d < 2)
      throw std::invalid_argument("cyclic factor order must be >= 2, got " +
                                  std::to_string(d));
    g.size = checked_mul(g.size, d);
    std::uint64_t gcd = std::gcd(g.exponent, d);
    g.exponent = checked_mul(g.exponent / gcd, d);
  }
  return g;
}

void check_element(const AbelianGroup& g, const GroupElement& x) {
  if (x.coords.size() != g.orders.size())
    throw std::invalid_argument("element has " +
                                std::to_string(x.coords.size()) +
                                " coordinates, group has " +
                                std::to_string(g.orders.size()) + " factors");
  for (std::size_t i = 0; i < x.coords.size(); ++i)
    if (x.coords[i] >= g.orders[i])
      throw std::invalid_argument("coordinate " + std::to_string(i) +
                                  " of element " + to_string(x) +
                                  " exceeds factor order " +
                                  std::to_string(g.orders[i]));
}

void check_character(const AbelianGroup& g, const Character& a) {
  check_element(g, GroupElement{a.coords});
}

GroupElement add(const AbelianGroup& g, const GroupElement& x,
                 const GroupElement& y) {
  check_element(g, x);
  check_element(g, y);
  GroupElement z{x.coords};
  for (std::size_t i = 0; i < z.coords.size(); ++i)
    z.coords[i] = (z.coords[i] + y.coords[i]) % g.orders[i];
  return z;
}

GroupElement negate(const AbelianGroup& g, const GroupElement& x) {
  check_element(g, x);
  GroupElement z{x.coords};
  for (std::size_t i = 0; i < z.coords.size(); ++i)
    z.coords[i] = z.coords[i] == 0 ? 0 : g.orders[i] - z.coords[i];
  return z;
}

bool is_involution(const AbelianGroup& g, const GroupElement& x) {
  check_element(g, x);
  for (std::size_t i = 0; i < x.coords.size(); ++i)
    if ((2 * x.coords[i]) % g.orders[i] != 0) return false;
  return true;
}

std::uint64_t pairing_exponent(const AbelianGroup& g, const Character& a,
                               const GroupElement& x) {
  check_character(g, a);
  check_element(g, x);
  const std::uint64_t n = g.exponent;
  std::uint64_t e = 0;
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    std::uint64_t term = mul_mod(a.coords[i] % n, x.coords[i] % n, n);
    term = mul_mod(term, n / g.orders[i], n);
    e = (e + term) % n;
  }
  return e;
}

std::uint64_t element_rank(const AbelianGroup& g, const GroupElement& x) {
  check_element(g, x);
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < x.coords.size(); ++i)
    r = r * g.orders[i] + x.coords[i];
  return r;
}

GroupElement element_at(const AbelianGroup& g, std::uint64_t rank) {
  if (rank >= g.size)
    throw std::invalid_argument("element rank " + std::to_string(rank) +
                                " out of range for group of size " +
                                std::to_string(g.size));
  GroupElement x{std::vector<std::uint64_t>(g.orders.size())};
  for (std::size_t i = g.orders.size(); i-- > 0;) {
    x.coords[i] = rank % g.orders[i];
    rank /= g.orders[i];
  }
  return x;
}

Character character_at(const AbelianGroup& g, std::uint64_t rank) {
  return Character{element_at(g, rank).coords};
}

std::uint64_t character_rank(const AbelianGroup& g, const Character& a) {
  return element_rank(g, GroupElement{a.coords});
}

Subgroup two_torsion(const AbelianGroup& g) {
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < g.orders.size(); ++i) {
    if (g.orders[i] % 2 == 0) {
      GroupElement e = g.identity();
      e.coords[i] = g.orders[i] / 2;
      gens.push_back(std::move(e));
    }
  }
  return subgroup_generated(g, gens);
}

Subgroup subgroup_generated(const AbelianGroup& g,
                            const std::vector<GroupElement>& generators,
                            std::uint64_t limit) {
  for (const GroupElement& x : generators) check_element(g, x);
  std::set<GroupElement> closure{g.identity()};
  std::vector<GroupElement> frontier(closure.begin(), closure.end());
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const GroupElement& x : frontier) {
      for (const GroupElement& s : generators) {
        GroupElement y = add(g, x, s);
        if (closure.insert(y).second) {
          if (limit && closure.size() > limit)
            throw std::length_error("subgroup closure exceeds limit of " +
                                    std::to_string(limit) + " elements");
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  Subgroup h;
  h.generators = generators;
  h.elements.assign(closure.begin(), closure.end());
  h.order = h.elements.size();
  return h;
}

Subgroup subgroup_from_involutions(const AbelianGroup& g,
                                   std::vector<GroupElement> elements) {
  std::set<GroupElement> set;
  for (const GroupElement& x : elements) {
    check_element(g, x);
    if (!is_involution(g, x))
      throw std::invalid_argument("element " + to_string(x) +
                                  " is not an involution");
    set.insert(x);
  }
  if (!set.count(g.identity()))
    throw std::invalid_argument("element set does not contain the identity");
  for (const GroupElement& x : set)
    for (const GroupElement& y : set)
      if (!set.count(add(g, x, y)))
        throw std::invalid_argument(
            "element set is not closed under addition: " + to_string(x) +
            " + " + to_string(y) + " is missing");

  // Minimal generators: the involutions form a GF(2) space indexed by the
  // even-order factors; greedy rank selection in canonical order.
  std::vector<std::size_t> even_factors;
  for (std::size_t i = 0; i < g.orders.size(); ++i)
    if (g.orders[i] % 2 == 0) even_factors.push_back(i);
  if (even_factors.size() > 64)
    throw std::invalid_argument("more than 64 even factors unsupported");
  auto to_mask = [&](const GroupElement& x) {
    std::uint64_t m = 0;
    for (std::size_t b = 0; b < even_factors.size(); ++b)
      if (x.coords[even_factors[b]] != 0) m |= std::uint64_t{1} << b;
    return m;
  };
  f2::Basis basis;
  Subgroup h;
  for (const GroupElement& x : set)
    if (basis.insert(to_mask(x))) h.generators.push_back(x);
  h.elements.assign(set.begin(), set.end());
  h.order = h.elements.size();
  if ((std::uint64_t{1} << basis.rank()) != h.order)
    throw std::invalid_argument("involution set is not a subgroup");
  return h;
}

std::string to_string(const GroupElement& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(x.coords[i]);
  }
  return s + ")";
}

std::string to_string(const Character& a) {
  return to_string(GroupElement{a.coords});
}

}  // namespace cospec

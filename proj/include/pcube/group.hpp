#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pcube/permutation.hpp"

namespace pcube {

/// A finite group of order v given by its Cayley table. Elements are the
/// indices 0..v-1 and element 0 is the identity. The operation is written
/// additively (`op(g, h)` is g+h) even when the group is not abelian.
///
/// Construction validates the Latin square property, the identity, inverses
/// and associativity; a GroupTable that exists is a group.
class GroupTable {
 public:
  /// Throws std::invalid_argument when `rows` is not the Cayley table of a
  /// group with identity 0.
  GroupTable(std::vector<std::vector<int>> rows, std::string name);

  int order() const { return order_; }
  const std::string& name() const { return name_; }

  int op(int g, int h) const { return table_[static_cast<std::size_t>(g) * order_ + h]; }
  int neg(int g) const { return inverse_[g]; }
  /// Right difference g - h = g + (-h).
  int sub(int g, int h) const { return op(g, neg(h)); }
  /// Left difference -g + h.
  int left_sub(int g, int h) const { return op(neg(g), h); }

  bool is_abelian() const;
  int element_order(int g) const;
  /// Least common multiple of the element orders.
  int exponent() const;

  std::vector<std::vector<int>> rows() const;

  bool operator==(const GroupTable& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }

 private:
  int order_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::string name_;
};

/// Z_v with table[g][h] = (g+h) mod v.
GroupTable cyclic_group(int v);

/// G x H with element (g, h) at index g*|H| + h.
GroupTable direct_product(const GroupTable& g, const GroupTable& h);

/// Z_n x| Z_m = <x, y | x^n = y^m = 1, y x y^-1 = x^r>, element x^i y^j at
/// index i*m + j. Requires gcd(r, n) = 1 and r^m = 1 (mod n).
GroupTable semidirect_product(int n, int m, int r);

/// N x| Z_m where the generator of Z_m acts on N by the automorphism
/// `action` (given as a permutation of N's elements, of order dividing m).
/// Element (x, j) is at index x*m + j and multiplies as
/// (x, i)(y, j) = (x + action^i(y), i + j).
GroupTable semidirect_product(const GroupTable& normal, int m, const Permutation& action,
                              std::string name = {});

/// <a, b | a^4 = b^4 = 1, ba = ab^3> written multiplicatively; element a^i b^j
/// has index 4i + j.
GroupTable presented_group_16_4();

/// The 14 groups of order 16, numbered by their small-group library ids.
/// Structure per id: 1 Z16, 2 Z4xZ4, 3 (Z4xZ2)x|Z2 (c: a->ab), 4 Z4x|Z4,
/// 5 Z8xZ2, 6 modular M16, 7 D16, 8 QD16, 9 Q16, 10 Z4xZ2xZ2, 11 Z2xD8,
/// 12 Z2xQ8, 13 Pauli (Z4xZ2)x|Z2 (c: b->a^2 b), 14 Z2^4.
GroupTable small_group_16(int id);

/// The automorphism group of `g` as permutations of its elements (all fix 0),
/// found by backtracking over images of a greedy generating sequence.
/// Throws BudgetExceeded when the order of `g` exceeds `limit`.
std::vector<Permutation> group_automorphisms(const GroupTable& g, int limit = 64);

/// Greedy generating sequence: repeatedly adds the least element outside the
/// subgroup generated so far.
std::vector<int> greedy_generators(const GroupTable& g);

/// True when `phi` is a bijective homomorphism of `g` onto itself.
bool is_automorphism(const GroupTable& g, std::span<const int> phi);

/// Resolves builtin names: `Z<n>`, `Z<n>sZ<m>` (least nontrivial action),
/// `Z<n>sZ<m>_<r>`, `SD16_4` (presented_group_16_4), `SG16_<id>`, `GF<q>`
/// (additive group of the field), and `A x B` products of these such as
/// `Z4xZ4` or `GF9xZ11`. Throws ParseError for unknown names.
GroupTable group_from_name(std::string_view name);

}  // namespace pcube

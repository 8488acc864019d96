#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pcube/cube.hpp"
#include "pcube/group.hpp"

namespace pcube {

/// Default cap on C(v, k) for enumerate_difference_sets().
inline constexpr std::uint64_t kDefaultEnumerationBudget = 50'000'000;

/// An ordinary difference set: a k-subset of a group, stored sorted.
struct OrdinaryDifferenceSet {
  int k = 0;
  int lambda = 0;
  std::vector<int> elements;
};

/// An n-dimensional difference set: k n-tuples of group elements such that
/// the right differences of every coordinate pair form a (v,k,lambda)
/// difference set. Tuples are kept in the order they were given; normalize()
/// produces the sorted form with 0 in the first coordinate.
struct NdDifferenceSet {
  int k = 0;
  int lambda = 0;
  int n = 0;
  std::vector<Row> tuples;

  bool operator==(const NdDifferenceSet&) const = default;
};

/// |s| = k and every nonzero element is a right difference a - b of exactly
/// lambda ordered pairs from s.
bool is_difference_set(const GroupTable& g, std::span<const int> s, int k, int lambda);

/// Same test with left differences -a + b.
bool is_left_difference_set(const GroupTable& g, std::span<const int> s, int k, int lambda);

/// All (v,k,lambda) difference sets in g in lexicographic order, by subset
/// backtracking that prunes as soon as a difference occurs more than lambda
/// times. Throws BudgetExceeded when C(v,k) exceeds `budget`.
std::vector<std::vector<int>> enumerate_difference_sets(const GroupTable& g, int k, int lambda,
                                                        std::uint64_t budget = kDefaultEnumerationBudget);

struct CoordinateDifferences {
  std::vector<int> values;  // d_x - d_y in tuple order
  bool distinct = true;     // false when two tuples give the same difference
};

/// Right differences d_x - d_y (1-based coordinates, x < y).
CoordinateDifferences coordinate_differences(const GroupTable& g, const NdDifferenceSet& d, int x, int y);

/// Left differences -d_x + d_y; a diagnostic for non-abelian groups.
CoordinateDifferences left_coordinate_differences(const GroupTable& g, const NdDifferenceSet& d, int x, int y);

struct DiffsetReport {
  bool ok = true;
  int x = 0;  // first failing pair, 1-based
  int y = 0;
  std::string message;
};

/// Checks every coordinate pair in lexicographic order and reports the first
/// failure. Throws std::invalid_argument for ragged tuples or n < 2.
DiffsetReport is_nd_difference_set(const GroupTable& g, const NdDifferenceSet& d);

/// dev D = {(d_1 + g, ..., d_n + g)}: the cube whose symbols are group
/// element indices. Throws std::invalid_argument when D is not valid.
Cube develop(const GroupTable& g, const NdDifferenceSet& d);

/// {(g + d_1, ..., g + d_n)} with duplicates removed; for non-abelian groups
/// this can have fewer than vk rows. Diagnostic only.
std::vector<Row> left_development(const GroupTable& g, const NdDifferenceSet& d);

/// Right-translates each tuple by -d_1 so the first coordinate is 0, then
/// sorts the tuples.
NdDifferenceSet normalize(const GroupTable& g, const NdDifferenceSet& d);

/// {(0, s) : s in S}.
NdDifferenceSet lift_to_2d(const OrdinaryDifferenceSet& s);

/// Restriction to the given 1-based coordinates.
NdDifferenceSet restrict_diffset(const NdDifferenceSet& d, std::span<const int> coords);

}  // namespace pcube

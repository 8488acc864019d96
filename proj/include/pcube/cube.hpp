#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pcube {

/// One n-tuple of a cube. Symbols are 0-based internally (symbol s prints as
/// s+1); group-indexed cubes use element indices directly.
using Row = std::vector<int>;

struct CubeParams {
  int v = 0;
  int k = 0;
  int lambda = 0;
  int n = 0;

  bool operator==(const CubeParams&) const = default;
};

/// A (v,k,lambda) projection n-cube in its orthogonal-array representation:
/// the set of n-tuples where the cube has a 1, kept sorted.
///
/// The constructor checks shape, symbol range and row distinctness only; use
/// verify_cube() for the design conditions.
class Cube {
 public:
  Cube() = default;
  /// Throws std::invalid_argument on a ragged row, a symbol outside 0..v-1,
  /// n < 2 or a duplicate row.
  Cube(CubeParams params, std::vector<Row> rows);

  const CubeParams& params() const { return params_; }
  int v() const { return params_.v; }
  int k() const { return params_.k; }
  int lambda() const { return params_.lambda; }
  int n() const { return params_.n; }
  std::size_t size() const { return rows_.size(); }
  const std::vector<Row>& rows() const { return rows_; }
  const Row& row(std::size_t i) const { return rows_[i]; }

  bool operator==(const Cube&) const = default;

 private:
  CubeParams params_;
  std::vector<Row> rows_;
};

/// v x v matrix of projection sums.
struct DesignMatrix {
  int v = 0;
  std::vector<int> entries;  // row-major

  int at(int i, int j) const { return entries[static_cast<std::size_t>(i) * v + j]; }
  int& at(int i, int j) { return entries[static_cast<std::size_t>(i) * v + j]; }
  bool operator==(const DesignMatrix&) const = default;
};

/// Entry (i, j) counts rows r with r[x] = i and r[y] = j. Coordinates are
/// 1-based with 1 <= x < y <= n; throws std::invalid_argument otherwise.
DesignMatrix projection(const Cube& c, int x, int y);

/// True iff m is a 0/1 matrix with all row and column sums k and every pair of
/// distinct rows meeting in exactly lambda columns.
bool is_symmetric_design(const DesignMatrix& m, int v, int k, int lambda);

enum class CubeCondition {
  kNone = 0,
  kRowsPerFirst = 1,   // each i has exactly k partners j
  kRowsPerSecond = 2,  // each j has exactly k partners i
  kPairCount = 3,      // distinct i, i' share exactly lambda partners j
  kCardinality = 4,
  kMalformed = 5,
};

struct VerifyReport {
  bool ok = true;
  CubeCondition condition = CubeCondition::kNone;
  int x = 0;  // 1-based failing coordinate pair, 0 when not pair-specific
  int y = 0;
  std::string message;
};

/// Checks that `rows` (0-based symbols) is the set of incidences of a
/// (v,k,lambda) projection cube: vk distinct rows and, for every coordinate
/// pair in lexicographic order, the three conditions on the set projection.
/// The first failure is reported. Never throws.
VerifyReport verify_cube(std::span<const Row> rows, int v, int k, int lambda);
VerifyReport verify_cube(const Cube& c);

/// Each symbol appears exactly k times in every coordinate.
bool is_orthogonal_array(const Cube& c);

/// Hamming distance distribution (A_0..A_n) seen from one row.
std::vector<int> distance_distribution_at(const Cube& c, std::size_t row_index);

/// The distance distribution, which is the same from every row of a valid
/// cube. Throws std::invalid_argument if rows disagree.
std::vector<int> distance_distribution(const Cube& c);

struct DimensionBounds {
  bool bounded = false;  // false for k < 2: no bound on n
  int triangular = 0;    // floor(v(v+1)/2)
  int distance = 0;      // floor((vk-1)/(k-1))
};

DimensionBounds dimension_bounds(int v, int k);

/// Rows restricted to the given 1-based coordinates, in that order. Throws
/// std::invalid_argument for fewer than 2 coordinates or when restricted rows
/// collide.
Cube restrict_cube(const Cube& c, std::span<const int> coords);

/// Two distinct rows agreeing in at least two coordinates, if any.
std::optional<std::pair<std::size_t, std::size_t>> find_agreeing_pair(const Cube& c);

}  // namespace pcube

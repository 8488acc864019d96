#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pcube/cube.hpp"
#include "pcube/diffset.hpp"
#include "pcube/equivalence.hpp"
#include "pcube/group.hpp"

namespace pcube {

/// A normalized n-dimensional difference set together with the canonical
/// rows of its development, which serve as the dedup key.
struct ClassRepresentative {
  NdDifferenceSet diffset;
  std::vector<Row> canonical;
};

struct DimensionClasses {
  int n = 0;
  std::vector<ClassRepresentative> classes;
};

struct ClassificationResult {
  std::string group;
  int v = 0;
  int k = 0;
  int lambda = 0;
  /// The ordinary difference sets the extension draws from.
  std::vector<std::vector<int>> catalog;
  /// Dimensions 2, 3, ... in order; the last entry may be empty.
  std::vector<DimensionClasses> per_dimension;
  /// Largest n with at least one class, 0 when there is no difference set.
  int mu = 0;
  /// False when the budget or max_dim stopped the run before the frontier
  /// emptied; mu is then a lower bound.
  bool complete = true;
};

struct ClassifyOptions {
  std::optional<int> max_dim;
  /// Wall-clock budget in seconds; zero means unlimited.
  double budget_seconds = 0;
  int threads = 1;
  std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
  /// Called after each dimension is completed.
  std::function<void(const DimensionClasses&)> on_dimension;
};

/// The 2-dimensional lifts of `catalog`, in catalog order.
std::vector<NdDifferenceSet> lifts(const std::vector<std::vector<int>>& catalog, int k, int lambda);

/// Every extension of every frontier element by one coordinate holding a
/// catalog set, assignments tried in lexicographic permutation order, pruned
/// as soon as a difference against an existing coordinate repeats or occurs
/// more than lambda times. Extensions are deduplicated by the canonical rows
/// of their developments; the first one found (frontier order, then catalog
/// order, then assignment order) represents its class.
///
/// Throws BudgetExceeded when `deadline_hit` returns true during the run.
std::vector<ClassRepresentative> extend_diffsets(const GroupTable& g, const std::vector<NdDifferenceSet>& frontier,
                                                 const std::vector<std::vector<int>>& catalog, int threads = 1,
                                                 const std::function<bool()>& deadline_hit = {});

/// Dedup by development, keeping the first of each class.
std::vector<ClassRepresentative> dedup_by_development(const GroupTable& g, const std::vector<NdDifferenceSet>& sets,
                                                      int threads = 1);

/// Extends all 2-dimensional lifts, then class representatives only, until
/// the frontier empties or max_dim is reached.
ClassificationResult classify_nd_diffsets(const GroupTable& g, int k, int lambda, const ClassifyOptions& options = {});

/// Largest v accepted by classify_cubes_exhaustive().
inline constexpr int kExhaustiveMaxV = 4;

/// All (v,k,lambda) projection n-cubes up to paratopy, as canonical cubes
/// sorted by their rows. Throws std::invalid_argument for v > 4.
std::vector<Cube> classify_cubes_exhaustive(int v, int k, int lambda, int n);

struct ExtractedDiffset {
  GroupTable group;
  NdDifferenceSet diffset;
  /// symbol_to_element[m][s]: the group element standing for symbol s in
  /// coordinate m, so develop(group, diffset) is this relabeling of the cube.
  std::vector<std::vector<int>> symbol_to_element;
};

/// Turns a cube with an autotopy group acting sharply transitively on every
/// coordinate into a difference set over that group. Group elements are
/// numbered by the image of symbol 1 in coordinate 1, and h + g means apply
/// h, then g. Orbit representatives are the lexicographically least rows;
/// the result is normalized. Throws std::invalid_argument when a generator
/// is not an autotopy or the action is not sharply transitive.
ExtractedDiffset extract_diffset(const Cube& c, const std::vector<Isotopy>& generators);

inline constexpr std::uint64_t kDefaultCellBudget = 4'000'000;

/// All (v,k,lambda) projection n-cubes invariant under the isotopy group
/// generated by `generators`, up to paratopy, as canonical cubes sorted by
/// rows. Cells of {1..v}^n are collapsed into orbits and unions of orbits
/// are searched with incremental projection counts. Throws BudgetExceeded
/// when v^n exceeds `cell_budget`.
std::vector<Cube> kramer_mesner_search(int v, int k, int lambda, int n, const std::vector<Isotopy>& generators,
                                       std::uint64_t cell_budget = kDefaultCellBudget);

}  // namespace pcube

#pragma once

#include <optional>

#include "pcube/diffset.hpp"
#include "pcube/field.hpp"

namespace pcube {

/// A construction together with the group it lives in.
struct ConstructedDiffset {
  GroupTable group;
  NdDifferenceSet diffset;
};

struct ConstructedOrdinary {
  GroupTable group;
  OrdinaryDifferenceSet set;
};

/// The q-dimensional (q, (q-1)/2, (q-3)/4) difference set in (F_q, +):
/// tuples (0, a^(2i), a^(2i+1), ..., a^(2i+q-2)) for i = 0..(q-3)/2.
/// Throws std::invalid_argument unless q = 3 mod 4 is a prime power.
ConstructedDiffset paley_nd(int q, std::optional<int> alpha = std::nullopt);

/// Tuples (0, a^(mi), a^(mi+1), ..., a^(mi+q-2)) for i = 0..(q-1)/m - 1.
/// m = 2 requires q = 3 mod 4, m = 4 requires q = 4t^2 + 1 with t odd; any
/// other m dividing q-1 is accepted only if the result verifies. lambda is
/// k(k-1)/(q-1). Throws std::invalid_argument on inadmissible parameters.
ConstructedDiffset cyclotomic_nd(int q, int m, std::optional<int> alpha = std::nullopt);

enum class TwinVariant { kStandard, kPrimed };

/// The (4m-1, 2m-1, m-1) set E1 u E2 u E3 (standard) or E1' u E2' u E3
/// (primed) in F_q x F_(q+2), m = (q+1)^2/4. Element (a, b) has index
/// a*(q+2) + b.
ConstructedOrdinary twin_prime_power_ordinary(int q, TwinVariant variant,
                                              std::optional<int> alpha = std::nullopt,
                                              std::optional<int> beta = std::nullopt);

/// The q-dimensional twin prime power difference set: E1 tuples
/// (0, a_0, ..., a_(q-2)), E2 tuples (0, a_1, ..., a_(q-1)) with
/// a_x = (alpha^(2i+x), beta^(2j+x)), then the zero tuple and the tuples
/// (0, b_0, ..., b_(q-2)) with b_x = (alpha^(i+x), 0).
ConstructedDiffset twin_prime_power_nd(int q, std::optional<int> alpha = std::nullopt,
                                       std::optional<int> beta = std::nullopt);

enum class PaleyHalf { kSquares, kNonsquares };

/// Nonzero squares or nonsquares of F_q, q = 3 mod 4.
ConstructedOrdinary paley_ordinary(int q, PaleyHalf which, std::optional<int> alpha = std::nullopt);

}  // namespace pcube

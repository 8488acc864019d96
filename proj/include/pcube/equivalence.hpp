#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pcube/cube.hpp"
#include "pcube/diffset.hpp"
#include "pcube/group.hpp"
#include "pcube/permutation.hpp"

namespace pcube {

/// One symbol permutation per coordinate: row r goes to (a_1(r_1), ..., a_n(r_n)).
struct Isotopy {
  std::vector<Permutation> perms;

  bool operator==(const Isotopy&) const = default;
};

/// Conjugation followed by an isotopy. Row r goes to the row whose m-th entry
/// is perms[m](r[conj[m]]), i.e. coordinate m of the image is read from
/// coordinate conj[m] of the source and then relabeled.
struct Paratopy {
  Permutation conj;
  Isotopy iso;

  bool operator==(const Paratopy&) const = default;
};

Isotopy identity_isotopy(int n, int v);
Paratopy identity_paratopy(int n, int v);

/// Throws std::invalid_argument unless t has n bijections of degree v.
Cube apply_isotopy(const Cube& c, const Isotopy& t);

/// Row r goes to (r[gamma[0]], ..., r[gamma[n-1]]).
Cube apply_conjugation(const Cube& c, std::span<const int> gamma);

Cube apply(const Cube& c, const Paratopy& p);
std::vector<Row> apply_rows(std::span<const Row> rows, const Paratopy& p);

/// q after p.
Paratopy compose(const Paratopy& q, const Paratopy& p);
Paratopy inverse(const Paratopy& p);

/// Cycle notation of the conjugation and every symbol map, 1-based.
std::string to_string(const Paratopy& p);
std::string to_string(const Isotopy& t);

struct CanonicalCertificate {
  /// Sorted image of the source cube under to_canonical.
  std::vector<Row> canonical_rows;
  Paratopy to_canonical;
  std::uint64_t apar_order = 1;
  std::uint64_t atop_order = 1;
  /// Generators of the autoparatopy group.
  std::vector<Paratopy> generators;
  /// Generators of the autotopy group.
  std::vector<Isotopy> atop_generators;
  /// Group orders are exact unless this is set (order beyond 2^64).
  bool saturated = false;
};

/// Canonical representative under the full paratopy group, found by
/// canonically labeling the incidence graph with vertices for rows,
/// (coordinate, symbol) cells and coordinates. Paratopic cubes, and only
/// those, get equal canonical_rows.
CanonicalCertificate canonical_form(const Cube& c);

/// canonical_form(c).canonical_rows without the autotopy run.
std::vector<Row> canonical_rows(const Cube& c);

/// The canonical rows under isotopies only (coordinates stay in place).
std::vector<Row> isotopy_canonical_rows(const Cube& c);

/// A paratopy mapping c1 onto c2, validated by direct application. Throws
/// std::invalid_argument when the parameters differ.
std::optional<Paratopy> are_paratopic(const Cube& c1, const Cube& c2);

/// An isotopy mapping c1 onto c2, validated by direct application.
std::optional<Isotopy> are_isotopic(const Cube& c1, const Cube& c2);

struct AutotopyGroup {
  std::uint64_t order = 1;
  std::vector<Isotopy> generators;
  bool saturated = false;
};

AutotopyGroup autotopy_group(const Cube& c);

/// True iff s2 = phi(s1) + g for an automorphism phi of g and an element g.
/// Throws std::invalid_argument when the sets have different sizes or leave
/// the group.
bool diffset_equivalent(const GroupTable& g, const OrdinaryDifferenceSet& s1, const OrdinaryDifferenceSet& s2);

/// Class index of every set under automorphisms and right translations.
/// Classes are numbered in order of their first member. `automorphisms`
/// defaults to group_automorphisms(g) when empty.
std::vector<int> diffset_classes(const GroupTable& g, const std::vector<std::vector<int>>& sets,
                                 std::vector<Permutation> automorphisms = {});

}  // namespace pcube

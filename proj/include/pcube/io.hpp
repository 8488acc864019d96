#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcube/cube.hpp"
#include "pcube/diffset.hpp"
#include "pcube/equivalence.hpp"
#include "pcube/group.hpp"

namespace pcube {

// Text formats. Blank lines and '#' comments are ignored by every reader;
// readers throw ParseError on malformed input.

/// `group v=<v> name=<name>` then v rows of the Cayley table (0-based).
std::string write_group(const GroupTable& g);
GroupTable read_group(std::string_view text);

/// `pcube v=<v> k=<k> lambda=<l> n=<n>` then one row per line, 1-based
/// symbols, sorted. The reader re-sorts and checks symbols and duplicates;
/// the design conditions (including the row count vk) are left to
/// verify_cube().
std::string write_cube(const Cube& c);
Cube read_cube(std::string_view text);

struct DiffsetFile {
  GroupTable group;
  NdDifferenceSet diffset;
};

/// `ndiffset v=<v> k=<k> lambda=<l> n=<n> group=<name>` then k tuples of
/// 0-based element indices. The writer sorts the tuples.
std::string write_diffset(const GroupTable& g, const NdDifferenceSet& d);
/// The group is `group` when given (its order must match), otherwise the
/// builtin named in the header.
DiffsetFile read_diffset(std::string_view text, const std::optional<GroupTable>& group = std::nullopt);

/// `action v=<v> n=<n> generators=<g>` then, per generator, n lines of v
/// 1-based images (the symbol permutation on each coordinate).
struct ActionFile {
  int v = 0;
  int n = 0;
  std::vector<Isotopy> generators;
};
std::string write_action(const ActionFile& a);
ActionFile read_action(std::string_view text);

/// Whole file contents; throws ParseError when the file cannot be read.
std::string read_text_file(const std::string& path);
/// Throws std::runtime_error when the file cannot be written.
void write_text_file(const std::string& path, std::string_view contents);

}  // namespace pcube

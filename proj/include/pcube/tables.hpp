#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcube/classify.hpp"

namespace pcube {

/// An expected integer, possibly only a lower bound, or absent ("-").
struct ExpectedValue {
  int value = 0;
  bool lower_bound = false;
  bool absent = false;

  /// True when `computed` is consistent: equal, or at least `value` for a
  /// lower bound, or absent when nothing is expected.
  bool accepts(std::optional<int> computed) const;
  std::string to_string() const;
};

struct Table1Cell {
  int n = 0;
  int count = 0;
};

struct Table2Cell {
  std::string group;
  int v = 0;
  int k = 0;
  int lambda = 0;
  int mu = 0;
};

struct Table3Cell {
  int id = 0;
  int nds = 0;
  int tds = 0;
  ExpectedValue mu;
};

struct Table4Row {
  std::vector<std::string> groups;
  int v = 0;
  int k = 0;
  int lambda = 0;
  std::vector<int> counts;  // dimensions 3, 4, ...
};

struct ExpectedTables {
  std::vector<Table1Cell> table1;
  std::vector<Table2Cell> table2;
  std::vector<Table3Cell> table3;
  std::vector<Table4Row> table4;
};

/// Parses the reference-value format of data/expected_tables.txt.
ExpectedTables parse_expected_tables(std::string_view text);

/// The reference values compiled into the library.
const ExpectedTables& expected_tables();

/// Number of (3,2,1) cube classes for each n in [2, max_n].
std::vector<Table1Cell> compute_table1(int max_n = 6);

/// Classes per dimension n >= 3 after merging paratopic developments from
/// several classifications of the same (v,k,lambda).
std::vector<int> merged_class_counts(const std::vector<ClassificationResult>& results);

struct DifferenceSetCensus {
  int tds = 0;
  int nds = 0;
};

/// Total (16,6,2)-style census for any group: all (v,k,lambda) difference
/// sets and their classes under automorphisms and translations.
DifferenceSetCensus difference_set_census(const GroupTable& g, int k, int lambda);

}  // namespace pcube

#include "pcube/tables.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "expected_tables_data.hpp"
#include "pcube/equivalence.hpp"
#include "pcube/error.hpp"

namespace pcube {

namespace {

std::map<std::string, std::string> fields_of(const std::string& line, std::string& kind) {
  std::istringstream in(line);
  in >> kind;
  std::map<std::string, std::string> out;
  std::string word;
  while (in >> word) {
    const auto eq = word.find('=');
    if (eq == std::string::npos) throw ParseError("expected tables: bad field '" + word + "'");
    out[word.substr(0, eq)] = word.substr(eq + 1);
  }
  return out;
}

const std::string& need(const std::map<std::string, std::string>& f, const std::string& key) {
  const auto it = f.find(key);
  if (it == f.end()) throw ParseError("expected tables: missing " + key + "=");
  return it->second;
}

int to_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw ParseError("expected tables: bad integer '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("expected tables: bad integer '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string part;
  std::istringstream in(s);
  while (std::getline(in, part, sep)) out.push_back(part);
  return out;
}

ExpectedValue to_expected(const std::string& s) {
  if (s == "-") return ExpectedValue{0, false, true};
  if (s.rfind(">=", 0) == 0) return ExpectedValue{to_int(s.substr(2)), true, false};
  return ExpectedValue{to_int(s), false, false};
}

}  // namespace

bool ExpectedValue::accepts(std::optional<int> computed) const {
  if (absent) return !computed.has_value() || *computed == 0;
  if (!computed) return false;
  return lower_bound ? *computed >= value : *computed == value;
}

std::string ExpectedValue::to_string() const {
  if (absent) return "-";
  return (lower_bound ? ">=" : "") + std::to_string(value);
}

ExpectedTables parse_expected_tables(std::string_view text) {
  ExpectedTables t;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::string kind;
    const auto f = fields_of(line, kind);
    if (kind == "table1") {
      t.table1.push_back(Table1Cell{to_int(need(f, "n")), to_int(need(f, "count"))});
    } else if (kind == "table2") {
      t.table2.push_back(Table2Cell{need(f, "group"), to_int(need(f, "v")), to_int(need(f, "k")),
                                    to_int(need(f, "lambda")), to_int(need(f, "mu"))});
    } else if (kind == "table3") {
      t.table3.push_back(Table3Cell{to_int(need(f, "id")), to_int(need(f, "nds")), to_int(need(f, "tds")),
                                    to_expected(need(f, "mu"))});
    } else if (kind == "table4") {
      Table4Row row{split(need(f, "groups"), ','), to_int(need(f, "v")), to_int(need(f, "k")),
                    to_int(need(f, "lambda")), {}};
      for (const auto& c : split(need(f, "counts"), ',')) row.counts.push_back(to_int(c));
      t.table4.push_back(std::move(row));
    } else {
      throw ParseError("expected tables: unknown record '" + kind + "'");
    }
  }
  return t;
}

const ExpectedTables& expected_tables() {
  static const ExpectedTables tables = parse_expected_tables(kExpectedTablesText);
  return tables;
}

std::vector<Table1Cell> compute_table1(int max_n) {
  std::vector<Table1Cell> out;
  for (int n = 2; n <= max_n; ++n) {
    out.push_back(Table1Cell{n, static_cast<int>(classify_cubes_exhaustive(3, 2, 1, n).size())});
  }
  return out;
}

std::vector<int> merged_class_counts(const std::vector<ClassificationResult>& results) {
  std::map<int, std::set<std::vector<Row>>> keys;
  for (const auto& r : results) {
    for (const auto& dim : r.per_dimension) {
      if (dim.n < 3) continue;
      for (const auto& rep : dim.classes) keys[dim.n].insert(rep.canonical);
    }
  }
  std::vector<int> out;
  for (int n = 3; keys.count(n) && !keys[n].empty(); ++n) out.push_back(static_cast<int>(keys[n].size()));
  return out;
}

DifferenceSetCensus difference_set_census(const GroupTable& g, int k, int lambda) {
  const auto sets = enumerate_difference_sets(g, k, lambda);
  DifferenceSetCensus c;
  c.tds = static_cast<int>(sets.size());
  if (!sets.empty()) {
    const auto classes = diffset_classes(g, sets);
    c.nds = *std::max_element(classes.begin(), classes.end()) + 1;
  }
  return c;
}

}  // namespace pcube

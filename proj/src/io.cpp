#include "pcube/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "pcube/error.hpp"

namespace pcube {

namespace {

std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(first, last - first + 1));
  }
  return out;
}

int parse_int(std::string_view s, std::string_view what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("bad integer '" + std::string(s) + "' in " + std::string(what));
  }
  return value;
}

std::vector<int> parse_ints(const std::string& line, std::string_view what) {
  std::vector<int> out;
  std::istringstream in(line);
  std::string token;
  while (in >> token) out.push_back(parse_int(token, what));
  return out;
}

struct Header {
  std::map<std::string, std::string, std::less<>> fields;

  int integer(std::string_view key, std::string_view what) const {
    const auto it = fields.find(key);
    if (it == fields.end()) throw ParseError(std::string(what) + " header lacks " + std::string(key) + "=");
    return parse_int(it->second, what);
  }
  std::string text(std::string_view key, std::string_view what) const {
    const auto it = fields.find(key);
    if (it == fields.end()) throw ParseError(std::string(what) + " header lacks " + std::string(key) + "=");
    return it->second;
  }
};

Header parse_header(const std::vector<std::string>& lines, std::string_view keyword) {
  if (lines.empty()) throw ParseError("empty " + std::string(keyword) + " file");
  std::istringstream in(lines[0]);
  std::string word;
  in >> word;
  if (word != keyword) throw ParseError("expected header '" + std::string(keyword) + " ...'");
  Header h;
  while (in >> word) {
    const auto eq = word.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("bad header field '" + word + "'");
    h.fields[word.substr(0, eq)] = word.substr(eq + 1);
  }
  return h;
}

std::string join(const Row& r, int offset) {
  std::string out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(r[i] + offset);
  }
  return out;
}

}  // namespace

std::string write_group(const GroupTable& g) {
  std::string out = "group v=" + std::to_string(g.order()) + " name=" + (g.name().empty() ? "G" : g.name()) + "\n";
  for (const auto& row : g.rows()) out += join(row, 0) + "\n";
  return out;
}

GroupTable read_group(std::string_view text) {
  const auto lines = content_lines(text);
  const Header h = parse_header(lines, "group");
  const int v = h.integer("v", "group");
  if (v < 1) throw ParseError("group order must be positive");
  if (static_cast<int>(lines.size()) != v + 1) throw ParseError("group file needs exactly v table rows");
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= v; ++i) {
    rows.push_back(parse_ints(lines[i], "group table"));
    if (static_cast<int>(rows.back().size()) != v) throw ParseError("group table row has wrong length");
  }
  const auto name = h.fields.find("name");
  try {
    return GroupTable(std::move(rows), name == h.fields.end() ? std::string("G") : name->second);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid group table: ") + e.what());
  }
}

std::string write_cube(const Cube& c) {
  std::ostringstream out;
  out << "pcube v=" << c.v() << " k=" << c.k() << " lambda=" << c.lambda() << " n=" << c.n() << "\n";
  for (const Row& r : c.rows()) out << join(r, 1) << "\n";
  return out.str();
}

Cube read_cube(std::string_view text) {
  const auto lines = content_lines(text);
  const Header h = parse_header(lines, "pcube");
  const CubeParams p{h.integer("v", "pcube"), h.integer("k", "pcube"), h.integer("lambda", "pcube"),
                     h.integer("n", "pcube")};
  if (p.v < 1 || p.k < 0 || p.lambda < 0 || p.n < 2) throw ParseError("pcube header parameters out of range");
  std::vector<Row> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    Row r = parse_ints(lines[i], "pcube row");
    if (static_cast<int>(r.size()) != p.n) throw ParseError("pcube row " + std::to_string(i) + " has wrong length");
    for (int& s : r) {
      if (s < 1 || s > p.v) throw ParseError("pcube symbol out of range 1..v");
      --s;
    }
    rows.push_back(std::move(r));
  }
  try {
    return Cube(p, std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid cube: ") + e.what());
  }
}

std::string write_diffset(const GroupTable& g, const NdDifferenceSet& d) {
  std::ostringstream out;
  out << "ndiffset v=" << g.order() << " k=" << d.k << " lambda=" << d.lambda << " n=" << d.n
      << " group=" << (g.name().empty() ? "G" : g.name()) << "\n";
  std::vector<Row> tuples = d.tuples;
  std::sort(tuples.begin(), tuples.end());
  for (const Row& t : tuples) out << join(t, 0) << "\n";
  return out.str();
}

DiffsetFile read_diffset(std::string_view text, const std::optional<GroupTable>& group) {
  const auto lines = content_lines(text);
  const Header h = parse_header(lines, "ndiffset");
  const int v = h.integer("v", "ndiffset");
  NdDifferenceSet d{h.integer("k", "ndiffset"), h.integer("lambda", "ndiffset"), h.integer("n", "ndiffset"), {}};
  std::optional<GroupTable> g = group;
  if (!g) g = group_from_name(h.text("group", "ndiffset"));
  if (g->order() != v) throw ParseError("ndiffset v does not match the group order");
  if (d.n < 2) throw ParseError("ndiffset n must be at least 2");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    Row t = parse_ints(lines[i], "ndiffset tuple");
    if (static_cast<int>(t.size()) != d.n) throw ParseError("ndiffset tuple has wrong length");
    for (int e : t) {
      if (e < 0 || e >= v) throw ParseError("ndiffset element out of range 0..v-1");
    }
    d.tuples.push_back(std::move(t));
  }
  if (static_cast<int>(d.tuples.size()) != d.k) throw ParseError("ndiffset needs exactly k tuples");
  return DiffsetFile{std::move(*g), std::move(d)};
}

std::string write_action(const ActionFile& a) {
  std::ostringstream out;
  out << "action v=" << a.v << " n=" << a.n << " generators=" << a.generators.size() << "\n";
  for (const Isotopy& t : a.generators) {
    for (const Permutation& p : t.perms) out << join(p, 1) << "\n";
  }
  return out.str();
}

ActionFile read_action(std::string_view text) {
  const auto lines = content_lines(text);
  const Header h = parse_header(lines, "action");
  ActionFile a{h.integer("v", "action"), h.integer("n", "action"), {}};
  const int count = h.integer("generators", "action");
  if (a.v < 1 || a.n < 2 || count < 0) throw ParseError("action header parameters out of range");
  if (static_cast<int>(lines.size()) != 1 + count * a.n) {
    throw ParseError("action file needs n lines per generator");
  }
  for (int g = 0; g < count; ++g) {
    Isotopy t;
    for (int m = 0; m < a.n; ++m) {
      Permutation p = parse_ints(lines[1 + g * a.n + m], "action");
      for (int& x : p) --x;
      if (static_cast<int>(p.size()) != a.v || !is_permutation_of_range(p)) {
        throw ParseError("action line is not a permutation of 1..v");
      }
      t.perms.push_back(std::move(p));
    }
    a.generators.push_back(std::move(t));
  }
  return a;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace pcube

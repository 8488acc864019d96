#include "pcube/permutation.hpp"

#include <algorithm>
#include <sstream>

namespace pcube {

std::string cycle_string(std::span<const int> p, int offset) {
  std::ostringstream out;
  std::vector<char> seen(p.size(), 0);
  bool any = false;
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == static_cast<int>(start)) continue;
    any = true;
    out << '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = 1;
      if (!first) out << ',';
      out << static_cast<int>(x) + offset;
      first = false;
      x = static_cast<std::size_t>(p[x]);
    }
    out << ')';
  }
  if (!any) out << "()";
  return out.str();
}

Permutation parse_cycles(const std::string& text, int degree, int offset) {
  Permutation p = identity_permutation(degree);
  std::vector<int> cycle;
  std::string number;
  bool open = false;
  auto flush_number = [&] {
    if (number.empty()) return;
    int x = std::stoi(number) - offset;
    if (x < 0 || x >= degree) throw std::invalid_argument("cycle point out of range: " + number);
    cycle.push_back(x);
    number.clear();
  };
  for (char c : text) {
    if (c == '(') {
      if (open) throw std::invalid_argument("nested cycle in " + text);
      open = true;
      cycle.clear();
    } else if (c == ')') {
      if (!open) throw std::invalid_argument("unbalanced cycle in " + text);
      flush_number();
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const int x = cycle[i];
        if (p[x] != x || std::find(cycle.begin(), cycle.begin() + i, x) != cycle.begin() + i) {
          throw std::invalid_argument("repeated cycle point in " + text);
        }
      }
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        p[cycle[i]] = cycle[(i + 1) % cycle.size()];
      }
      open = false;
    } else if (c == ',' || c == ' ') {
      flush_number();
    } else if (c >= '0' && c <= '9') {
      number.push_back(c);
    } else {
      throw std::invalid_argument("unexpected character in cycle notation: " + text);
    }
  }
  if (open) throw std::invalid_argument("unterminated cycle in " + text);
  if (!is_permutation_of_range(p)) throw std::invalid_argument("cycles overlap: " + text);
  return p;
}

}  // namespace pcube

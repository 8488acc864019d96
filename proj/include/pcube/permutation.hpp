#pragma once

#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcube {

/// A permutation of {0, ..., size-1}, stored as its image list: p[i] is the
/// image of i.
using Permutation = std::vector<int>;

inline Permutation identity_permutation(int size) {
  Permutation p(static_cast<std::size_t>(size));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline bool is_permutation_of_range(std::span<const int> p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

inline bool is_identity(std::span<const int> p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != static_cast<int>(i)) return false;
  }
  return true;
}

/// (a * b)(i) = a(b(i)): apply b first, then a.
inline Permutation compose(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose: degree mismatch");
  Permutation r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

inline Permutation inverse(std::span<const int> p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

/// Cycle notation with a configurable offset (1 for the 1-based symbols used
/// in printed output). Fixed points are omitted; the identity prints as "()".
std::string cycle_string(std::span<const int> p, int offset = 1);

/// Parses cycle notation such as "(2,3,4,5,6,7)" over `degree` points with
/// the given offset. Throws std::invalid_argument on malformed text or a
/// repeated point.
Permutation parse_cycles(const std::string& text, int degree, int offset = 1);

}  // namespace pcube

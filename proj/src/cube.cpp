#include "pcube/cube.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace pcube {

Cube::Cube(CubeParams params, std::vector<Row> rows) : params_(params), rows_(std::move(rows)) {
  if (params_.n < 2) throw std::invalid_argument("cube dimension must be at least 2");
  if (params_.v < 1) throw std::invalid_argument("cube order must be positive");
  for (const Row& r : rows_) {
    if (static_cast<int>(r.size()) != params_.n) throw std::invalid_argument("row length differs from n");
    for (int s : r) {
      if (s < 0 || s >= params_.v) throw std::invalid_argument("symbol out of range");
    }
  }
  std::sort(rows_.begin(), rows_.end());
  if (std::adjacent_find(rows_.begin(), rows_.end()) != rows_.end()) {
    throw std::invalid_argument("duplicate row in cube");
  }
}

DesignMatrix projection(const Cube& c, int x, int y) {
  if (x < 1 || y > c.n() || x >= y) {
    throw std::invalid_argument("projection: need 1 <= x < y <= n");
  }
  DesignMatrix m{c.v(), std::vector<int>(static_cast<std::size_t>(c.v()) * c.v(), 0)};
  for (const Row& r : c.rows()) ++m.at(r[x - 1], r[y - 1]);
  return m;
}

bool is_symmetric_design(const DesignMatrix& m, int v, int k, int lambda) {
  if (m.v != v || static_cast<int>(m.entries.size()) != v * v) return false;
  for (int e : m.entries) {
    if (e != 0 && e != 1) return false;
  }
  for (int i = 0; i < v; ++i) {
    int row = 0, col = 0;
    for (int j = 0; j < v; ++j) {
      row += m.at(i, j);
      col += m.at(j, i);
    }
    if (row != k || col != k) return false;
  }
  for (int i = 0; i < v; ++i) {
    for (int i2 = i + 1; i2 < v; ++i2) {
      int inner = 0;
      for (int j = 0; j < v; ++j) inner += m.at(i, j) * m.at(i2, j);
      if (inner != lambda) return false;
    }
  }
  return true;
}

namespace {

VerifyReport fail(CubeCondition cond, int x, int y, std::string msg) {
  return VerifyReport{false, cond, x, y, std::move(msg)};
}

}  // namespace

VerifyReport verify_cube(std::span<const Row> rows, int v, int k, int lambda) {
  if (rows.empty()) return fail(CubeCondition::kCardinality, 0, 0, "empty row set");
  const std::size_t n = rows.front().size();
  if (n < 2) return fail(CubeCondition::kMalformed, 0, 0, "dimension below 2");
  for (const Row& r : rows) {
    if (r.size() != n) return fail(CubeCondition::kMalformed, 0, 0, "ragged rows");
    for (int s : r) {
      if (s < 0 || s >= v) return fail(CubeCondition::kMalformed, 0, 0, "symbol out of range");
    }
  }
  {
    std::vector<Row> sorted(rows.begin(), rows.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      return fail(CubeCondition::kMalformed, 0, 0, "duplicate row");
    }
  }
  if (static_cast<long long>(rows.size()) != static_cast<long long>(v) * k) {
    std::ostringstream msg;
    msg << "cardinality " << rows.size() << " != vk = " << static_cast<long long>(v) * k;
    return fail(CubeCondition::kCardinality, 0, 0, msg.str());
  }

  const std::size_t words = (static_cast<std::size_t>(v) + 63) / 64;
  std::vector<std::uint64_t> bits(static_cast<std::size_t>(v) * words);
  auto row_bits = [&](int i) { return bits.data() + static_cast<std::size_t>(i) * words; };
  std::vector<int> col_count(v);

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      const int cx = static_cast<int>(x) + 1, cy = static_cast<int>(y) + 1;
      std::fill(bits.begin(), bits.end(), 0);
      for (const Row& r : rows) row_bits(r[x])[r[y] / 64] |= std::uint64_t{1} << (r[y] % 64);
      for (int i = 0; i < v; ++i) {
        int count = 0;
        for (std::size_t w = 0; w < words; ++w) count += std::popcount(row_bits(i)[w]);
        if (count != k) {
          std::ostringstream msg;
          msg << "pair (" << cx << "," << cy << "): symbol " << i + 1 << " in coordinate " << cx
              << " has " << count << " partners, expected " << k;
          return fail(CubeCondition::kRowsPerFirst, cx, cy, msg.str());
        }
      }
      std::fill(col_count.begin(), col_count.end(), 0);
      for (int i = 0; i < v; ++i) {
        for (int j = 0; j < v; ++j) {
          if ((row_bits(i)[j / 64] >> (j % 64)) & 1U) ++col_count[j];
        }
      }
      for (int j = 0; j < v; ++j) {
        if (col_count[j] != k) {
          std::ostringstream msg;
          msg << "pair (" << cx << "," << cy << "): symbol " << j + 1 << " in coordinate " << cy
              << " has " << col_count[j] << " partners, expected " << k;
          return fail(CubeCondition::kRowsPerSecond, cx, cy, msg.str());
        }
      }
      for (int i = 0; i < v; ++i) {
        for (int i2 = i + 1; i2 < v; ++i2) {
          int inner = 0;
          for (std::size_t w = 0; w < words; ++w) inner += std::popcount(row_bits(i)[w] & row_bits(i2)[w]);
          if (inner != lambda) {
            std::ostringstream msg;
            msg << "pair (" << cx << "," << cy << "): symbols " << i + 1 << " and " << i2 + 1
                << " share " << inner << " partners, expected " << lambda;
            return fail(CubeCondition::kPairCount, cx, cy, msg.str());
          }
        }
      }
    }
  }
  return VerifyReport{};
}

VerifyReport verify_cube(const Cube& c) { return verify_cube(c.rows(), c.v(), c.k(), c.lambda()); }

bool is_orthogonal_array(const Cube& c) {
  for (int x = 0; x < c.n(); ++x) {
    std::vector<int> count(c.v(), 0);
    for (const Row& r : c.rows()) ++count[r[x]];
    for (int s : count) {
      if (s != c.k()) return false;
    }
  }
  return true;
}

std::vector<int> distance_distribution_at(const Cube& c, std::size_t row_index) {
  std::vector<int> a(c.n() + 1, 0);
  const Row& base = c.row(row_index);
  for (const Row& r : c.rows()) {
    int d = 0;
    for (int x = 0; x < c.n(); ++x) d += r[x] != base[x];
    ++a[d];
  }
  return a;
}

std::vector<int> distance_distribution(const Cube& c) {
  if (c.size() == 0) throw std::invalid_argument("distance_distribution: empty cube");
  std::vector<int> first = distance_distribution_at(c, 0);
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (distance_distribution_at(c, i) != first) {
      throw std::invalid_argument("distance_distribution: rows see different distributions");
    }
  }
  return first;
}

DimensionBounds dimension_bounds(int v, int k) {
  if (k < 2) return DimensionBounds{};
  return DimensionBounds{true, v * (v + 1) / 2, (v * k - 1) / (k - 1)};
}

Cube restrict_cube(const Cube& c, std::span<const int> coords) {
  if (coords.size() < 2) throw std::invalid_argument("restrict: need at least 2 coordinates");
  for (int x : coords) {
    if (x < 1 || x > c.n()) throw std::invalid_argument("restrict: coordinate out of range");
  }
  std::vector<Row> rows;
  rows.reserve(c.size());
  for (const Row& r : c.rows()) {
    Row out;
    out.reserve(coords.size());
    for (int x : coords) out.push_back(r[x - 1]);
    rows.push_back(std::move(out));
  }
  CubeParams p = c.params();
  p.n = static_cast<int>(coords.size());
  return Cube(p, std::move(rows));
}

std::optional<std::pair<std::size_t, std::size_t>> find_agreeing_pair(const Cube& c) {
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t b = a + 1; b < c.size(); ++b) {
      int agree = 0;
      for (int x = 0; x < c.n(); ++x) agree += c.row(a)[x] == c.row(b)[x];
      if (agree >= 2) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

}  // namespace pcube

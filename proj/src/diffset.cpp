#include "pcube/diffset.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "pcube/error.hpp"

namespace pcube {

namespace {

template <typename Diff>
bool covers_exactly(const GroupTable& g, std::span<const int> s, int k, int lambda, Diff diff) {
  if (static_cast<int>(s.size()) != k) return false;
  std::vector<int> count(g.order(), 0);
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = 0; b < s.size(); ++b) {
      if (a == b) continue;
      const int d = diff(s[a], s[b]);
      if (d == 0) return false;  // repeated element
      ++count[d];
    }
  }
  for (int h = 1; h < g.order(); ++h) {
    if (count[h] != lambda) return false;
  }
  return true;
}

std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(r);
}

class SubsetSearch {
 public:
  SubsetSearch(const GroupTable& g, int k, int lambda)
      : g_(g), k_(k), lambda_(lambda), count_(g.order(), 0) {}

  std::vector<std::vector<int>> run() {
    chosen_.clear();
    if (k_ >= 1 && k_ <= g_.order()) recurse(0);
    return std::move(found_);
  }

 private:
  void recurse(int next) {
    if (static_cast<int>(chosen_.size()) == k_) {
      for (int h = 1; h < g_.order(); ++h) {
        if (count_[h] != lambda_) return;
      }
      found_.push_back(chosen_);
      return;
    }
    const int remaining = k_ - static_cast<int>(chosen_.size());
    for (int e = next; e <= g_.order() - remaining; ++e) {
      if (add(e)) recurse(e + 1);
      remove(e);
    }
  }

  // Adds e and its differences with the chosen elements; returns false when
  // some count exceeds lambda (the caller still calls remove()).
  bool add(int e) {
    bool ok = true;
    for (int c : chosen_) {
      ok &= ++count_[g_.sub(e, c)] <= lambda_;
      ok &= ++count_[g_.sub(c, e)] <= lambda_;
    }
    chosen_.push_back(e);
    return ok;
  }

  void remove(int e) {
    chosen_.pop_back();
    for (int c : chosen_) {
      --count_[g_.sub(e, c)];
      --count_[g_.sub(c, e)];
    }
  }

  const GroupTable& g_;
  int k_;
  int lambda_;
  std::vector<int> count_;
  std::vector<int> chosen_;
  std::vector<std::vector<int>> found_;
};

void check_shape(const NdDifferenceSet& d) {
  if (d.n < 2) throw std::invalid_argument("difference set dimension must be at least 2");
  if (static_cast<int>(d.tuples.size()) != d.k) {
    throw std::invalid_argument("difference set has " + std::to_string(d.tuples.size()) +
                                " tuples, expected k = " + std::to_string(d.k));
  }
  for (const Row& t : d.tuples) {
    if (static_cast<int>(t.size()) != d.n) throw std::invalid_argument("ragged difference set tuples");
  }
}

template <typename Diff>
CoordinateDifferences differences(const GroupTable& g, const NdDifferenceSet& d, int x, int y, Diff diff) {
  if (x < 1 || y > d.n || x >= y) throw std::invalid_argument("coordinate_differences: need 1 <= x < y <= n");
  CoordinateDifferences out;
  std::vector<char> seen(g.order(), 0);
  for (const Row& t : d.tuples) {
    const int value = diff(t[x - 1], t[y - 1]);
    if (seen[value]) out.distinct = false;
    seen[value] = 1;
    out.values.push_back(value);
  }
  return out;
}

}  // namespace

bool is_difference_set(const GroupTable& g, std::span<const int> s, int k, int lambda) {
  return covers_exactly(g, s, k, lambda, [&](int a, int b) { return g.sub(a, b); });
}

bool is_left_difference_set(const GroupTable& g, std::span<const int> s, int k, int lambda) {
  return covers_exactly(g, s, k, lambda, [&](int a, int b) { return g.left_sub(a, b); });
}

std::vector<std::vector<int>> enumerate_difference_sets(const GroupTable& g, int k, int lambda,
                                                        std::uint64_t budget) {
  const std::uint64_t subsets = binomial_capped(g.order(), k, budget);
  if (subsets > budget) {
    throw BudgetExceeded("enumerate_difference_sets: C(" + std::to_string(g.order()) + "," +
                         std::to_string(k) + ") exceeds the enumeration budget");
  }
  return SubsetSearch(g, k, lambda).run();
}

CoordinateDifferences coordinate_differences(const GroupTable& g, const NdDifferenceSet& d, int x, int y) {
  return differences(g, d, x, y, [&](int a, int b) { return g.sub(a, b); });
}

CoordinateDifferences left_coordinate_differences(const GroupTable& g, const NdDifferenceSet& d, int x,
                                                  int y) {
  return differences(g, d, x, y, [&](int a, int b) { return g.left_sub(a, b); });
}

DiffsetReport is_nd_difference_set(const GroupTable& g, const NdDifferenceSet& d) {
  check_shape(d);
  for (const Row& t : d.tuples) {
    for (int e : t) {
      if (e < 0 || e >= g.order()) throw std::invalid_argument("difference set element out of range");
    }
  }
  for (int x = 1; x <= d.n; ++x) {
    for (int y = x + 1; y <= d.n; ++y) {
      const CoordinateDifferences diffs = coordinate_differences(g, d, x, y);
      if (!diffs.distinct || !is_difference_set(g, diffs.values, d.k, d.lambda)) {
        std::ostringstream msg;
        msg << "coordinates (" << x << "," << y << ") do not give a (" << g.order() << "," << d.k << ","
            << d.lambda << ") difference set";
        return DiffsetReport{false, x, y, msg.str()};
      }
    }
  }
  return DiffsetReport{};
}

Cube develop(const GroupTable& g, const NdDifferenceSet& d) {
  const DiffsetReport report = is_nd_difference_set(g, d);
  if (!report.ok) throw std::invalid_argument("develop: " + report.message);
  std::vector<Row> rows;
  rows.reserve(static_cast<std::size_t>(g.order()) * d.tuples.size());
  for (int h = 0; h < g.order(); ++h) {
    for (const Row& t : d.tuples) {
      Row r(t.size());
      for (std::size_t x = 0; x < t.size(); ++x) r[x] = g.op(t[x], h);
      rows.push_back(std::move(r));
    }
  }
  return Cube(CubeParams{g.order(), d.k, d.lambda, d.n}, std::move(rows));
}

std::vector<Row> left_development(const GroupTable& g, const NdDifferenceSet& d) {
  check_shape(d);
  std::vector<Row> rows;
  for (int h = 0; h < g.order(); ++h) {
    for (const Row& t : d.tuples) {
      Row r(t.size());
      for (std::size_t x = 0; x < t.size(); ++x) r[x] = g.op(h, t[x]);
      rows.push_back(std::move(r));
    }
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return rows;
}

NdDifferenceSet normalize(const GroupTable& g, const NdDifferenceSet& d) {
  check_shape(d);
  NdDifferenceSet out = d;
  for (Row& t : out.tuples) {
    const int shift = g.neg(t[0]);
    for (int& e : t) e = g.op(e, shift);
  }
  std::sort(out.tuples.begin(), out.tuples.end());
  return out;
}

NdDifferenceSet lift_to_2d(const OrdinaryDifferenceSet& s) {
  NdDifferenceSet out{s.k, s.lambda, 2, {}};
  for (int e : s.elements) out.tuples.push_back(Row{0, e});
  return out;
}

NdDifferenceSet restrict_diffset(const NdDifferenceSet& d, std::span<const int> coords) {
  if (coords.size() < 2) throw std::invalid_argument("restrict: need at least 2 coordinates");
  NdDifferenceSet out{d.k, d.lambda, static_cast<int>(coords.size()), {}};
  for (const Row& t : d.tuples) {
    Row r;
    for (int x : coords) {
      if (x < 1 || x > d.n) throw std::invalid_argument("restrict: coordinate out of range");
      r.push_back(t[x - 1]);
    }
    out.tuples.push_back(std::move(r));
  }
  return out;
}

}  // namespace pcube

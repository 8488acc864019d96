#include "pcube/classify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "pcube/error.hpp"

namespace pcube {

namespace {

// Runs fn(0..count-1) on up to `threads` workers. The first exception thrown
// by any task is rethrown after all workers stop.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(std::max(threads, 1), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (!failed) {
        const std::size_t i = next++;
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          failed = true;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<Row> development_key(const GroupTable& g, const NdDifferenceSet& d) {
  return canonical_rows(develop(g, d));
}

// Keeps the first representative of every key, preserving order.
class FirstSeen {
 public:
  bool insert(const std::vector<Row>& key) { return keys_.insert(key).second; }

 private:
  std::set<std::vector<Row>> keys_;
};

// Backtracking over assignments of one catalog set to the tuples of d.
class Extender {
 public:
  Extender(const GroupTable& g, const NdDifferenceSet& d, const std::vector<int>& s,
           const std::function<bool()>& deadline_hit)
      : g_(g), d_(d), s_(s), deadline_hit_(deadline_hit), used_(s.size(), 0),
        seen_(d.n, std::vector<char>(g.order(), 0)), counts_(d.n, std::vector<int>(g.order(), 0)),
        values_(d.n) {}

  std::vector<NdDifferenceSet> run() {
    if (static_cast<int>(s_.size()) == d_.k) recurse(0);
    return std::move(found_);
  }

 private:
  void recurse(int i) {
    if ((++nodes_ & 0xFFF) == 0 && deadline_hit_ && deadline_hit_()) {
      throw BudgetExceeded("classification budget exhausted");
    }
    if (i == d_.k) {
      NdDifferenceSet e{d_.k, d_.lambda, d_.n + 1, d_.tuples};
      for (int t = 0; t < d_.k; ++t) e.tuples[t].push_back(s_[assignment_[t]]);
      found_.push_back(normalize(g_, e));
      return;
    }
    for (std::size_t j = 0; j < s_.size(); ++j) {
      if (used_[j]) continue;
      if (!place(i, static_cast<int>(j))) continue;
      used_[j] = 1;
      assignment_.push_back(static_cast<int>(j));
      recurse(i + 1);
      assignment_.pop_back();
      used_[j] = 0;
      unplace(i, static_cast<int>(j));
    }
  }

  // Adds the differences d_i[x] - s_j for every coordinate x; fails when one
  // repeats or some pairwise difference count exceeds lambda.
  bool place(int i, int j) {
    const int e = s_[j];
    for (int x = 0; x < d_.n; ++x) {
      if (seen_[x][g_.sub(d_.tuples[i][x], e)]) return false;
    }
    bool ok = true;
    for (int x = 0; x < d_.n; ++x) {
      const int val = g_.sub(d_.tuples[i][x], e);
      for (int u : values_[x]) {
        ok &= ++counts_[x][g_.sub(val, u)] <= d_.lambda;
        ok &= ++counts_[x][g_.sub(u, val)] <= d_.lambda;
      }
      seen_[x][val] = 1;
      values_[x].push_back(val);
    }
    if (!ok) unplace(i, j);
    return ok;
  }

  void unplace(int i, int j) {
    const int e = s_[j];
    for (int x = 0; x < d_.n; ++x) {
      const int val = g_.sub(d_.tuples[i][x], e);
      values_[x].pop_back();
      seen_[x][val] = 0;
      for (int u : values_[x]) {
        --counts_[x][g_.sub(val, u)];
        --counts_[x][g_.sub(u, val)];
      }
    }
  }

  const GroupTable& g_;
  const NdDifferenceSet& d_;
  const std::vector<int>& s_;
  const std::function<bool()>& deadline_hit_;
  std::vector<char> used_;
  std::vector<int> assignment_;
  std::vector<std::vector<char>> seen_;
  std::vector<std::vector<int>> counts_;
  std::vector<std::vector<int>> values_;
  std::vector<NdDifferenceSet> found_;
  std::uint64_t nodes_ = 0;
};

// Incremental state for building a cube row by row: symbol counts per
// coordinate, occupied projection pairs and row inner products per
// projection, each checked against its final value.
class PartialCube {
 public:
  PartialCube(int v, int k, int lambda, int n)
      : v_(v), k_(k), lambda_(lambda), n_(n), count_(static_cast<std::size_t>(n) * v, 0),
        occ_(static_cast<std::size_t>(n) * n * v * v, 0), ip_(static_cast<std::size_t>(n) * n * v * v, 0) {}

  bool fits(const Row& r) const {
    for (int x = 0; x < n_; ++x) {
      if (count_[x * v_ + r[x]] >= k_) return false;
    }
    for (int x = 0; x < n_; ++x) {
      for (int y = x + 1; y < n_; ++y) {
        if (occ_[idx(x, y, r[x], r[y])]) return false;
        for (int i = 0; i < v_; ++i) {
          if (i != r[x] && occ_[idx(x, y, i, r[y])] && ip_[idx(x, y, r[x], i)] >= lambda_) return false;
        }
      }
    }
    return true;
  }

  void add(const Row& r) { update(r, 1); }
  void remove(const Row& r) { update(r, -1); }

 private:
  std::size_t idx(int x, int y, int i, int j) const {
    return ((static_cast<std::size_t>(x) * n_ + y) * v_ + i) * v_ + j;
  }

  void update(const Row& r, int delta) {
    for (int x = 0; x < n_; ++x) count_[x * v_ + r[x]] += delta;
    for (int x = 0; x < n_; ++x) {
      for (int y = x + 1; y < n_; ++y) {
        if (delta < 0) occ_[idx(x, y, r[x], r[y])] = 0;
        for (int i = 0; i < v_; ++i) {
          if (i != r[x] && occ_[idx(x, y, i, r[y])]) {
            ip_[idx(x, y, r[x], i)] += delta;
            ip_[idx(x, y, i, r[x])] += delta;
          }
        }
        if (delta > 0) occ_[idx(x, y, r[x], r[y])] = 1;
      }
    }
  }

  int v_, k_, lambda_, n_;
  std::vector<int> count_;
  std::vector<char> occ_;
  std::vector<int> ip_;
};

std::uint64_t checked_power(int v, int n, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (int i = 0; i < n; ++i) {
    r *= static_cast<std::uint64_t>(v);
    if (r > cap) return cap + 1;
  }
  return r;
}

Row cell_row(std::uint64_t cell, int v, int n) {
  Row r(n);
  for (int m = n - 1; m >= 0; --m) {
    r[m] = static_cast<int>(cell % v);
    cell /= v;
  }
  return r;
}

std::uint64_t row_cell(const Row& r, int v) {
  std::uint64_t c = 0;
  for (int s : r) c = c * v + s;
  return c;
}

// Canonical cubes of the accepted row sets, deduplicated and sorted.
class CubeCollector {
 public:
  explicit CubeCollector(CubeParams p) : p_(p) {}

  void offer(std::vector<Row> rows) {
    std::sort(rows.begin(), rows.end());
    if (!verify_cube(rows, p_.v, p_.k, p_.lambda).ok) return;
    keys_.insert(canonical_rows(Cube(p_, std::move(rows))));
  }

  std::vector<Cube> result() const {
    std::vector<Cube> out;
    for (const auto& key : keys_) out.emplace_back(p_, key);
    return out;
  }

 private:
  CubeParams p_;
  std::set<std::vector<Row>> keys_;
};

void check_design_params(int v, int k, int lambda, int n) {
  if (v < 1 || k < 1 || k > v || lambda < 0 || n < 2) throw std::invalid_argument("invalid (v,k,lambda,n)");
  if (static_cast<long long>(k) * (k - 1) != static_cast<long long>(lambda) * (v - 1)) {
    throw std::invalid_argument("k(k-1) != lambda(v-1): no symmetric design");
  }
}

}  // namespace

std::vector<NdDifferenceSet> lifts(const std::vector<std::vector<int>>& catalog, int k, int lambda) {
  std::vector<NdDifferenceSet> out;
  for (const auto& s : catalog) out.push_back(lift_to_2d(OrdinaryDifferenceSet{k, lambda, s}));
  return out;
}

std::vector<ClassRepresentative> dedup_by_development(const GroupTable& g, const std::vector<NdDifferenceSet>& sets,
                                                      int threads) {
  std::vector<std::vector<Row>> keys(sets.size());
  parallel_for(sets.size(), threads, [&](std::size_t i) { keys[i] = development_key(g, sets[i]); });
  FirstSeen seen;
  std::vector<ClassRepresentative> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (seen.insert(keys[i])) out.push_back(ClassRepresentative{normalize(g, sets[i]), std::move(keys[i])});
  }
  return out;
}

std::vector<ClassRepresentative> extend_diffsets(const GroupTable& g, const std::vector<NdDifferenceSet>& frontier,
                                                 const std::vector<std::vector<int>>& catalog, int threads,
                                                 const std::function<bool()>& deadline_hit) {
  const std::size_t tasks = frontier.size() * catalog.size();
  std::vector<std::vector<ClassRepresentative>> results(tasks);
  parallel_for(tasks, threads, [&](std::size_t t) {
    const NdDifferenceSet& d = frontier[t / catalog.size()];
    const std::vector<int>& s = catalog[t % catalog.size()];
    FirstSeen local;
    if (deadline_hit && deadline_hit()) throw BudgetExceeded("classification budget exhausted");
    for (NdDifferenceSet& e : Extender(g, d, s, deadline_hit).run()) {
      if (deadline_hit && deadline_hit()) throw BudgetExceeded("classification budget exhausted");
      std::vector<Row> key = development_key(g, e);
      if (local.insert(key)) results[t].push_back(ClassRepresentative{std::move(e), std::move(key)});
    }
  });
  FirstSeen seen;
  std::vector<ClassRepresentative> out;
  for (auto& batch : results) {
    for (auto& rep : batch) {
      if (seen.insert(rep.canonical)) out.push_back(std::move(rep));
    }
  }
  return out;
}

ClassificationResult classify_nd_diffsets(const GroupTable& g, int k, int lambda, const ClassifyOptions& options) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  std::function<bool()> deadline_hit;
  if (options.budget_seconds > 0) {
    deadline_hit = [start, budget = options.budget_seconds] {
      return std::chrono::duration<double>(Clock::now() - start).count() > budget;
    };
  }
  ClassificationResult result;
  result.group = g.name();
  result.v = g.order();
  result.k = k;
  result.lambda = lambda;
  result.catalog = enumerate_difference_sets(g, k, lambda, options.enumeration_budget);

  const std::vector<NdDifferenceSet> lifted = lifts(result.catalog, k, lambda);
  DimensionClasses dim2{2, dedup_by_development(g, lifted, options.threads)};
  result.per_dimension.push_back(dim2);
  if (options.on_dimension) options.on_dimension(dim2);
  if (dim2.classes.empty()) return result;
  result.mu = 2;

  // Every lift is extended; from dimension 3 on only class representatives.
  std::vector<NdDifferenceSet> frontier = lifted;
  for (int n = 2;; ++n) {
    if (options.max_dim && n >= *options.max_dim) {
      result.complete = false;
      break;
    }
    std::vector<ClassRepresentative> next;
    try {
      next = extend_diffsets(g, frontier, result.catalog, options.threads, deadline_hit);
    } catch (const BudgetExceeded&) {
      result.complete = false;
      break;
    }
    DimensionClasses dim{n + 1, std::move(next)};
    result.per_dimension.push_back(dim);
    if (options.on_dimension) options.on_dimension(dim);
    if (dim.classes.empty()) break;
    result.mu = n + 1;
    frontier.clear();
    for (const auto& rep : dim.classes) frontier.push_back(rep.diffset);
  }
  return result;
}

std::vector<Cube> classify_cubes_exhaustive(int v, int k, int lambda, int n) {
  if (v > kExhaustiveMaxV) throw std::invalid_argument("classify_cubes_exhaustive: v > 4 is out of range");
  check_design_params(v, k, lambda, n);
  const std::uint64_t cells = checked_power(v, n, kDefaultCellBudget);
  if (cells > kDefaultCellBudget) throw BudgetExceeded("classify_cubes_exhaustive: v^n too large");

  // Candidate rows grouped by first coordinate, in lexicographic order.
  std::vector<std::vector<Row>> block(v);
  for (std::uint64_t c = 0; c < cells; ++c) {
    Row r = cell_row(c, v, n);
    block[r[0]].push_back(std::move(r));
  }
  CubeCollector collector(CubeParams{v, k, lambda, n});
  PartialCube state(v, k, lambda, n);
  std::vector<Row> rows;
  // The rows with first symbol 0 pairwise disagree outside coordinate 1, so
  // an isotopy fixing coordinate 1 makes them (0, i, ..., i), i < k.
  for (int i = 0; i < k; ++i) {
    Row r(n, i);
    r[0] = 0;
    if (!state.fits(r)) return {};
    state.add(r);
    rows.push_back(std::move(r));
  }
  std::function<void(int, std::size_t)> recurse = [&](int b, std::size_t from) {
    if (b == v) {
      collector.offer(rows);
      return;
    }
    const int in_block = static_cast<int>(rows.size()) - b * k;
    if (in_block == k) {
      recurse(b + 1, 0);
      return;
    }
    for (std::size_t i = from; i < block[b].size(); ++i) {
      const Row& r = block[b][i];
      if (!state.fits(r)) continue;
      state.add(r);
      rows.push_back(r);
      recurse(b, i + 1);
      rows.pop_back();
      state.remove(r);
    }
  };
  recurse(1, 0);
  return collector.result();
}

ExtractedDiffset extract_diffset(const Cube& c, const std::vector<Isotopy>& generators) {
  const int v = c.v();
  const int n = c.n();
  for (const Isotopy& t : generators) {
    if (!(apply_isotopy(c, t) == c)) throw std::invalid_argument("extract_diffset: generator is not an autotopy");
  }
  // Close the generators into a group, stopping once it outgrows v.
  auto key = [](const Isotopy& t) { return t.perms; };
  std::map<std::vector<Permutation>, Isotopy> elements;
  const Isotopy id = identity_isotopy(n, v);
  elements.emplace(key(id), id);
  std::vector<Isotopy> queue{id};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const Isotopy& gen : generators) {
      Isotopy prod;
      for (int m = 0; m < n; ++m) prod.perms.push_back(compose(gen.perms[m], queue[q].perms[m]));
      if (elements.emplace(key(prod), prod).second) {
        if (static_cast<int>(elements.size()) > v) {
          throw std::invalid_argument("extract_diffset: group order exceeds v, action not sharply transitive");
        }
        queue.push_back(prod);
      }
    }
  }
  if (static_cast<int>(elements.size()) != v) {
    throw std::invalid_argument("extract_diffset: group order differs from v, action not sharply transitive");
  }
  // Number elements by the image of symbol 0 in the first coordinate.
  std::vector<Isotopy> by_index(v);
  std::vector<char> have(v, 0);
  for (const auto& [k, t] : elements) {
    const int index = t.perms[0][0];
    if (have[index]) throw std::invalid_argument("extract_diffset: action not sharply transitive");
    have[index] = 1;
    by_index[index] = t;
  }
  std::vector<std::vector<int>> symbol_to_element(n, std::vector<int>(v, -1));
  for (int m = 0; m < n; ++m) {
    for (int e = 0; e < v; ++e) {
      const int s = by_index[e].perms[m][0];
      if (symbol_to_element[m][s] >= 0) {
        throw std::invalid_argument("extract_diffset: action not sharply transitive on coordinate " +
                                    std::to_string(m + 1));
      }
      symbol_to_element[m][s] = e;
    }
  }
  std::vector<std::vector<int>> table(v, std::vector<int>(v));
  for (int a = 0; a < v; ++a) {
    for (int b = 0; b < v; ++b) {
      // a + b: apply a, then b.
      table[a][b] = by_index[b].perms[0][by_index[a].perms[0][0]];
    }
  }
  GroupTable group(std::move(table), "G");

  // Rows up to the action; the least row of each orbit represents it.
  std::set<Row> remaining(c.rows().begin(), c.rows().end());
  NdDifferenceSet d{c.k(), c.lambda(), n, {}};
  while (!remaining.empty()) {
    const Row rep = *remaining.begin();
    for (const Isotopy& t : by_index) {
      Row image(n);
      for (int m = 0; m < n; ++m) image[m] = t.perms[m][rep[m]];
      remaining.erase(image);
    }
    Row tuple(n);
    for (int m = 0; m < n; ++m) tuple[m] = symbol_to_element[m][rep[m]];
    d.tuples.push_back(std::move(tuple));
  }
  if (static_cast<int>(d.tuples.size()) != c.k()) {
    throw std::invalid_argument("extract_diffset: orbit count differs from k");
  }
  d = normalize(group, d);
  return ExtractedDiffset{std::move(group), std::move(d), std::move(symbol_to_element)};
}

std::vector<Cube> kramer_mesner_search(int v, int k, int lambda, int n, const std::vector<Isotopy>& generators,
                                       std::uint64_t cell_budget) {
  check_design_params(v, k, lambda, n);
  for (const Isotopy& t : generators) {
    if (static_cast<int>(t.perms.size()) != n) throw std::invalid_argument("kramer_mesner_search: generator arity");
    for (const Permutation& p : t.perms) {
      if (static_cast<int>(p.size()) != v || !is_permutation_of_range(p)) {
        throw std::invalid_argument("kramer_mesner_search: generator component is not a permutation");
      }
    }
  }
  const std::uint64_t cells = checked_power(v, n, cell_budget);
  if (cells > cell_budget) throw BudgetExceeded("kramer_mesner_search: v^n exceeds the cell budget");

  std::vector<char> assigned(cells, 0);
  std::vector<std::vector<Row>> orbits;
  for (std::uint64_t c = 0; c < cells; ++c) {
    if (assigned[c]) continue;
    std::vector<std::uint64_t> members{c};
    assigned[c] = 1;
    for (std::size_t q = 0; q < members.size(); ++q) {
      const Row r = cell_row(members[q], v, n);
      for (const Isotopy& t : generators) {
        Row image(n);
        for (int m = 0; m < n; ++m) image[m] = t.perms[m][r[m]];
        const std::uint64_t ic = row_cell(image, v);
        if (!assigned[ic]) {
          assigned[ic] = 1;
          members.push_back(ic);
        }
      }
    }
    std::sort(members.begin(), members.end());
    std::vector<Row> rows;
    for (std::uint64_t m : members) rows.push_back(cell_row(m, v, n));
    // Orbits that cannot be part of any cube on their own are dropped.
    PartialCube alone(v, k, lambda, n);
    bool ok = static_cast<int>(rows.size()) <= v * k;
    for (std::size_t i = 0; ok && i < rows.size(); ++i) {
      ok = alone.fits(rows[i]);
      if (ok) alone.add(rows[i]);
    }
    if (ok) orbits.push_back(std::move(rows));
  }
  std::stable_sort(orbits.begin(), orbits.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  std::vector<std::size_t> suffix(orbits.size() + 1, 0);
  for (std::size_t i = orbits.size(); i-- > 0;) suffix[i] = suffix[i + 1] + orbits[i].size();

  const std::size_t target = static_cast<std::size_t>(v) * k;
  CubeCollector collector(CubeParams{v, k, lambda, n});
  PartialCube state(v, k, lambda, n);
  std::vector<Row> rows;
  std::function<void(std::size_t)> recurse = [&](std::size_t i) {
    if (rows.size() == target) {
      collector.offer(rows);
      return;
    }
    if (i == orbits.size() || rows.size() + suffix[i] < target) return;
    const auto& orbit = orbits[i];
    if (rows.size() + orbit.size() <= target) {
      std::size_t added = 0;
      for (; added < orbit.size(); ++added) {
        if (!state.fits(orbit[added])) break;
        state.add(orbit[added]);
        rows.push_back(orbit[added]);
      }
      if (added == orbit.size()) recurse(i + 1);
      while (added-- > 0) {
        state.remove(orbit[added]);
        rows.pop_back();
      }
    }
    recurse(i + 1);
  };
  recurse(0);
  return collector.result();
}

}  // namespace pcube

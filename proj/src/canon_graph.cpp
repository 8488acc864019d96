#include "pcube/canon_graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace pcube {

namespace {

struct Partition {
  std::vector<int> elems;    // vertices in cell order
  std::vector<int> pos;      // position of each vertex in elems
  std::vector<int> cell_at;  // start of the cell containing each position
  std::vector<int> size_at;  // cell size, valid at cell starts
  int cells = 0;

  bool discrete() const { return cells == static_cast<int>(elems.size()); }
};

using Trace = std::vector<int>;

int compare(const std::vector<int>& a, const std::vector<int>& b) {
  if (a == b) return 0;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()) ? -1 : 1;
}

struct Leaf {
  Permutation labeling;
  std::vector<int> code;
  std::vector<int> path;
  std::vector<Trace> traces;
};

class Canonizer {
 public:
  explicit Canonizer(const ColoredGraph& g) : g_(g), n_(g.size()), count_(n_, 0) {}

  GraphCanonResult run() {
    Partition p = initial_partition();
    std::vector<int> all;
    for (int s = 0; s < n_; s += p.size_at[s]) all.push_back(s);
    Trace root;
    refine(p, all, root);
    search(p, 0, true, 0);
    GraphCanonResult out;
    out.labeling = best_.labeling;
    out.generators = std::move(generators_);
    out.group_order = order_;
    out.order_saturated = saturated_;
    out.nodes = nodes_;
    out.leaves = leaves_;
    return out;
  }

 private:
  Partition initial_partition() const {
    Partition p;
    p.elems.resize(n_);
    std::iota(p.elems.begin(), p.elems.end(), 0);
    std::stable_sort(p.elems.begin(), p.elems.end(), [&](int a, int b) { return g_.colors[a] < g_.colors[b]; });
    p.pos.resize(n_);
    p.cell_at.resize(n_);
    p.size_at.assign(n_, 0);
    for (int i = 0; i < n_; ++i) p.pos[p.elems[i]] = i;
    for (int i = 0; i < n_;) {
      int j = i;
      while (j < n_ && g_.colors[p.elems[j]] == g_.colors[p.elems[i]]) ++j;
      for (int t = i; t < j; ++t) p.cell_at[t] = i;
      p.size_at[i] = j - i;
      ++p.cells;
      i = j;
    }
    return p;
  }

  // Equitable refinement. Every split appends (cell, fragments, then
  // (count, size) per fragment) to the trace.
  void refine(Partition& p, const std::vector<int>& splitters, Trace& trace) {
    std::deque<int> queue(splitters.begin(), splitters.end());
    std::vector<char> queued(n_, 0);
    for (int s : splitters) queued[s] = 1;
    std::vector<int> touched;
    std::vector<int> touched_cells;
    std::vector<int> members;
    while (!queue.empty()) {
      const int w = queue.front();
      queue.pop_front();
      queued[w] = 0;
      touched.clear();
      for (int i = w; i < w + p.size_at[w]; ++i) {
        for (int nb : g_.adjacency[p.elems[i]]) {
          if (count_[nb]++ == 0) touched.push_back(nb);
        }
      }
      touched_cells.clear();
      for (int u : touched) touched_cells.push_back(p.cell_at[p.pos[u]]);
      std::sort(touched_cells.begin(), touched_cells.end());
      touched_cells.erase(std::unique(touched_cells.begin(), touched_cells.end()), touched_cells.end());
      for (int c : touched_cells) {
        const int size = p.size_at[c];
        if (size == 1) continue;
        members.assign(p.elems.begin() + c, p.elems.begin() + c + size);
        const int first = count_[members[0]];
        if (std::all_of(members.begin(), members.end(), [&](int u) { return count_[u] == first; })) continue;
        std::stable_sort(members.begin(), members.end(), [&](int a, int b) { return count_[a] < count_[b]; });
        std::vector<int> starts;
        trace.push_back(c);
        const std::size_t header = trace.size();
        trace.push_back(0);
        for (int i = 0; i < size; ++i) {
          const int u = members[i];
          p.elems[c + i] = u;
          p.pos[u] = c + i;
          if (i == 0 || count_[u] != count_[members[i - 1]]) starts.push_back(c + i);
          p.cell_at[c + i] = starts.back();
        }
        starts.push_back(c + size);
        const int fragments = static_cast<int>(starts.size()) - 1;
        trace[header] = fragments;
        int largest = 0;
        for (int f = 0; f < fragments; ++f) {
          const int fs = starts[f + 1] - starts[f];
          p.size_at[starts[f]] = fs;
          trace.push_back(count_[p.elems[starts[f]]]);
          trace.push_back(fs);
          if (fs > starts[largest + 1] - starts[largest]) largest = f;
        }
        p.cells += fragments - 1;
        const bool was_queued = queued[c] != 0;
        for (int f = 0; f < fragments; ++f) {
          const int s = starts[f];
          if (queued[s]) continue;
          if (!was_queued && f == largest) continue;
          queued[s] = 1;
          queue.push_back(s);
        }
      }
      for (int u : touched) count_[u] = 0;
    }
    trace.push_back(p.cells);
  }

  // The first non-singleton cell joined non-trivially to the most other
  // non-singleton cells. Joins are uniform over a cell of an equitable
  // partition, so one member decides.
  int target_cell(const Partition& p) {
    int best = -1;
    int best_joins = -1;
    std::vector<int>& hits = count_;
    std::vector<int> cells;
    for (int s = 0; s < n_; s += p.size_at[s]) {
      if (p.size_at[s] == 1) continue;
      cells.clear();
      for (int nb : g_.adjacency[p.elems[s]]) {
        const int c = p.cell_at[p.pos[nb]];
        if (hits[c]++ == 0) cells.push_back(c);
      }
      int joins = 0;
      for (int c : cells) {
        if (p.size_at[c] > 1 && hits[c] < p.size_at[c]) ++joins;
        hits[c] = 0;
      }
      if (joins > best_joins) {
        best = s;
        best_joins = joins;
      }
    }
    return best;
  }

  void individualize(Partition& p, int cell, int v, Trace& trace) {
    const int size = p.size_at[cell];
    const int at = p.pos[v];
    const int other = p.elems[cell];
    std::swap(p.elems[cell], p.elems[at]);
    p.pos[v] = cell;
    p.pos[other] = at;
    p.size_at[cell] = 1;
    p.size_at[cell + 1] = size - 1;
    for (int i = cell + 1; i < cell + size; ++i) p.cell_at[i] = cell + 1;
    ++p.cells;
    trace.push_back(cell);
    refine(p, {cell}, trace);
  }

  std::vector<int> code_of(const Partition& p) const {
    std::vector<int> code;
    std::vector<int> nbrs;
    for (int i = 0; i < n_; ++i) {
      const int u = p.elems[i];
      nbrs.clear();
      for (int nb : g_.adjacency[u]) nbrs.push_back(p.pos[nb]);
      std::sort(nbrs.begin(), nbrs.end());
      code.push_back(static_cast<int>(nbrs.size()));
      code.insert(code.end(), nbrs.begin(), nbrs.end());
    }
    return code;
  }

  static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    int i = 0;
    while (i < static_cast<int>(std::min(a.size(), b.size())) && a[i] == b[i]) ++i;
    return i;
  }

  // gamma maps the vertices of leaf `from` onto those of the current leaf.
  void record_automorphism(const Permutation& from_labeling, const Partition& p) {
    Permutation gamma(n_);
    for (int v = 0; v < n_; ++v) gamma[v] = p.elems[from_labeling[v]];
    for (int v = 0; v < n_; ++v) {
      if (g_.colors[gamma[v]] != g_.colors[v]) throw std::logic_error("canonical_labeling: bad automorphism");
    }
    if (std::all_of(gamma.begin(), gamma.end(), [i = 0](int x) mutable { return x == i++; })) return;
    generators_.push_back(std::move(gamma));
  }

  int leaf(const Partition& p, bool eq_first, int cmp_best) {
    ++leaves_;
    std::vector<int> code = code_of(p);
    if (!have_leaf_) {
      have_leaf_ = true;
      first_ = Leaf{p.pos, std::move(code), path_, traces_};
      best_ = first_;
      ++best_serial_;
      return -1;
    }
    if (eq_first && code == first_.code) {
      record_automorphism(first_.labeling, p);
      return common_prefix(path_, first_.path);
    }
    if (cmp_best == 0 && code == best_.code) {
      record_automorphism(best_.labeling, p);
      return common_prefix(path_, best_.path);
    }
    if (cmp_best > 0 || (cmp_best == 0 && code < best_.code)) {
      best_ = Leaf{p.pos, std::move(code), path_, traces_};
      ++best_serial_;
    }
    return -1;
  }

  // Union-find orbits of the generators fixing the current path pointwise.
  std::vector<int> stabilizer_orbits() const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Permutation& gen : generators_) {
      if (!std::all_of(path_.begin(), path_.end(), [&](int v) { return gen[v] == v; })) continue;
      for (int v = 0; v < n_; ++v) {
        const int a = find(v);
        const int b = find(gen[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  void multiply_order(std::uint64_t f) {
    if (saturated_) return;
    if (f != 0 && order_ > std::numeric_limits<std::uint64_t>::max() / f) {
      saturated_ = true;
      order_ = std::numeric_limits<std::uint64_t>::max();
      return;
    }
    order_ *= f;
  }

  // Returns the depth at which the search resumes after an automorphism
  // jump, or -1 to continue normally.
  int search(const Partition& p, int depth, bool on_first_path, int cmp_best_in) {
    ++nodes_;
    if (p.discrete()) return leaf(p, on_first_path || eq_first_at(depth), cmp_best_in);
    const int cell = target_cell(p);
    std::vector<int> children(p.elems.begin() + cell, p.elems.begin() + cell + p.size_at[cell]);
    std::sort(children.begin(), children.end());
    std::vector<int> explored;
    std::vector<int> orbits;
    std::size_t orbit_gens = static_cast<std::size_t>(-1);
    int cmp_best = cmp_best_in;
    const bool eq_first = on_first_path || eq_first_at(depth);
    for (int w : children) {
      if (!explored.empty()) {
        if (orbit_gens != generators_.size()) {
          orbits = stabilizer_orbits();
          orbit_gens = generators_.size();
        }
        if (std::any_of(explored.begin(), explored.end(), [&](int e) { return orbits[e] == orbits[w]; })) {
          continue;
        }
      }
      explored.push_back(w);
      Partition q = p;
      Trace t;
      individualize(q, cell, w, t);
      const bool child_first = on_first_path && (!have_leaf_ || first_.path[depth] == w);
      bool child_eq_first = child_first;
      if (!child_eq_first && eq_first && have_leaf_) {
        child_eq_first = depth < static_cast<int>(first_.traces.size()) && t == first_.traces[depth];
      }
      int child_cmp = cmp_best;
      if (have_leaf_ && cmp_best == 0) {
        child_cmp = depth < static_cast<int>(best_.traces.size()) ? compare(best_.traces[depth], t) : 1;
      }
      if (have_leaf_ && !child_eq_first && child_cmp < 0) continue;
      path_.push_back(w);
      traces_.push_back(std::move(t));
      eq_first_stack_.push_back(child_eq_first);
      const std::uint64_t serial = best_serial_;
      const int r = search(q, depth + 1, child_first, child_cmp);
      eq_first_stack_.pop_back();
      traces_.pop_back();
      path_.pop_back();
      if (best_serial_ != serial) cmp_best = 0;  // new best lies below this node
      if (r >= 0 && r < depth) return r;
    }
    if (on_first_path) {
      const std::vector<int> orb = stabilizer_orbits();
      const int v = first_.path[depth];
      multiply_order(static_cast<std::uint64_t>(std::count(orb.begin(), orb.end(), orb[v])));
    }
    return -1;
  }

  bool eq_first_at(int depth) const { return depth > 0 && eq_first_stack_[depth - 1]; }

  const ColoredGraph& g_;
  int n_;
  std::vector<int> count_;
  std::vector<int> path_;
  std::vector<Trace> traces_;
  std::vector<char> eq_first_stack_;
  bool have_leaf_ = false;
  Leaf first_;
  Leaf best_;
  std::uint64_t best_serial_ = 0;
  std::vector<Permutation> generators_;
  std::uint64_t order_ = 1;
  bool saturated_ = false;
  std::uint64_t nodes_ = 0;
  std::uint64_t leaves_ = 0;
};

}  // namespace

GraphCanonResult canonical_labeling(const ColoredGraph& graph) {
  if (graph.colors.size() != graph.adjacency.size()) {
    throw std::invalid_argument("canonical_labeling: one color per vertex required");
  }
  if (graph.size() == 0) return GraphCanonResult{};
  return Canonizer(graph).run();
}

std::vector<int> labeled_code(const ColoredGraph& graph, const Permutation& labeling) {
  const int n = graph.size();
  std::vector<int> at(n);
  for (int v = 0; v < n; ++v) at[labeling[v]] = v;
  std::vector<int> code;
  std::vector<int> nbrs;
  for (int i = 0; i < n; ++i) {
    nbrs.clear();
    for (int nb : graph.adjacency[at[i]]) nbrs.push_back(labeling[nb]);
    std::sort(nbrs.begin(), nbrs.end());
    code.push_back(static_cast<int>(nbrs.size()));
    code.insert(code.end(), nbrs.begin(), nbrs.end());
  }
  return code;
}

}  // namespace pcube

#include "pcube/equivalence.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pcube/canon_graph.hpp"

namespace pcube {

namespace {

void check_isotopy(const Isotopy& t, int n, int v) {
  if (static_cast<int>(t.perms.size()) != n) throw std::invalid_argument("isotopy arity does not match n");
  for (const Permutation& p : t.perms) {
    if (static_cast<int>(p.size()) != v || !is_permutation_of_range(p)) {
      throw std::invalid_argument("isotopy component is not a permutation of the v symbols");
    }
  }
}

void check_paratopy(const Paratopy& p, int n, int v) {
  if (static_cast<int>(p.conj.size()) != n || !is_permutation_of_range(p.conj)) {
    throw std::invalid_argument("conjugation is not a permutation of the n coordinates");
  }
  check_isotopy(p.iso, n, v);
}

enum class Mode { kParatopy, kIsotopy };

// Vertices: rows, then cell (x, s) at R + x*v + s, then coordinate x at
// R + n*v + x.
ColoredGraph incidence_graph(const Cube& c, Mode mode) {
  const int r = static_cast<int>(c.size());
  const int n = c.n();
  const int v = c.v();
  ColoredGraph g;
  g.adjacency.resize(static_cast<std::size_t>(r + n * v + n));
  g.colors.assign(g.adjacency.size(), 0);
  for (int i = 0; i < r; ++i) {
    for (int x = 0; x < n; ++x) g.add_edge(i, r + x * v + c.row(i)[x]);
  }
  for (int x = 0; x < n; ++x) {
    for (int s = 0; s < v; ++s) {
      g.add_edge(r + x * v + s, r + n * v + x);
      g.colors[r + x * v + s] = 1;
    }
    g.colors[r + n * v + x] = mode == Mode::kParatopy ? 2 : 2 + x;
  }
  return g;
}

// The paratopy taking c to its canonical form given a canonical labeling of
// its incidence graph.
Paratopy labeling_to_paratopy(const Cube& c, const Permutation& labeling) {
  const int r = static_cast<int>(c.size());
  const int n = c.n();
  const int v = c.v();
  Paratopy p;
  p.conj.resize(n);
  std::iota(p.conj.begin(), p.conj.end(), 0);
  std::sort(p.conj.begin(), p.conj.end(),
            [&](int a, int b) { return labeling[r + n * v + a] < labeling[r + n * v + b]; });
  p.iso.perms.resize(n);
  for (int m = 0; m < n; ++m) {
    const int x = p.conj[m];
    std::vector<int> order(v);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return labeling[r + x * v + a] < labeling[r + x * v + b]; });
    p.iso.perms[m] = inverse(order);
  }
  return p;
}

// A color-preserving automorphism of the incidence graph as a paratopy.
Paratopy automorphism_to_paratopy(const Cube& c, const Permutation& sigma) {
  const int r = static_cast<int>(c.size());
  const int n = c.n();
  const int v = c.v();
  Paratopy p;
  p.conj.resize(n);
  p.iso.perms.assign(n, Permutation(v));
  for (int x = 0; x < n; ++x) {
    const int m = sigma[r + n * v + x] - (r + n * v);
    p.conj[m] = x;
    for (int s = 0; s < v; ++s) {
      const int image = sigma[r + x * v + s] - r;
      p.iso.perms[m][s] = image % v;
    }
  }
  return p;
}

struct Run {
  Paratopy to_canonical;
  std::vector<Row> rows;
  GraphCanonResult graph;
};

Run canonical_run(const Cube& c, Mode mode) {
  Run run;
  run.graph = canonical_labeling(incidence_graph(c, mode));
  run.to_canonical = labeling_to_paratopy(c, run.graph.labeling);
  run.rows = apply_rows(c.rows(), run.to_canonical);
  std::sort(run.rows.begin(), run.rows.end());
  return run;
}

void check_same_params(const Cube& a, const Cube& b) {
  if (!(a.params() == b.params())) throw std::invalid_argument("cubes have different parameters");
}

std::vector<int> translate_set(const GroupTable& g, std::span<const int> s, std::span<const int> phi, int t) {
  std::vector<int> out;
  out.reserve(s.size());
  for (int e : s) out.push_back(g.op(phi.empty() ? e : phi[e], t));
  std::sort(out.begin(), out.end());
  return out;
}

void check_set(const GroupTable& g, const OrdinaryDifferenceSet& s) {
  for (int e : s.elements) {
    if (e < 0 || e >= g.order()) throw std::invalid_argument("difference set element outside the group");
  }
}

}  // namespace

Isotopy identity_isotopy(int n, int v) { return Isotopy{std::vector<Permutation>(n, identity_permutation(v))}; }

Paratopy identity_paratopy(int n, int v) { return Paratopy{identity_permutation(n), identity_isotopy(n, v)}; }

Cube apply_isotopy(const Cube& c, const Isotopy& t) {
  check_isotopy(t, c.n(), c.v());
  return apply(c, Paratopy{identity_permutation(c.n()), t});
}

Cube apply_conjugation(const Cube& c, std::span<const int> gamma) {
  return apply(c, Paratopy{Permutation(gamma.begin(), gamma.end()), identity_isotopy(c.n(), c.v())});
}

Cube apply(const Cube& c, const Paratopy& p) {
  check_paratopy(p, c.n(), c.v());
  return Cube(c.params(), apply_rows(c.rows(), p));
}

std::vector<Row> apply_rows(std::span<const Row> rows, const Paratopy& p) {
  std::vector<Row> out;
  out.reserve(rows.size());
  for (const Row& r : rows) {
    Row o(r.size());
    for (std::size_t m = 0; m < r.size(); ++m) o[m] = p.iso.perms[m][r[p.conj[m]]];
    out.push_back(std::move(o));
  }
  return out;
}

Paratopy compose(const Paratopy& q, const Paratopy& p) {
  const std::size_t n = p.conj.size();
  if (q.conj.size() != n) throw std::invalid_argument("compose: arity mismatch");
  Paratopy out;
  out.conj.resize(n);
  out.iso.perms.resize(n);
  for (std::size_t m = 0; m < n; ++m) {
    out.conj[m] = p.conj[q.conj[m]];
    out.iso.perms[m] = compose(q.iso.perms[m], p.iso.perms[q.conj[m]]);
  }
  return out;
}

Paratopy inverse(const Paratopy& p) {
  const std::size_t n = p.conj.size();
  Paratopy out;
  out.conj = inverse(p.conj);
  out.iso.perms.resize(n);
  for (std::size_t m = 0; m < n; ++m) out.iso.perms[m] = inverse(p.iso.perms[out.conj[m]]);
  return out;
}

std::string to_string(const Isotopy& t) {
  std::ostringstream out;
  for (std::size_t m = 0; m < t.perms.size(); ++m) out << (m ? " " : "") << cycle_string(t.perms[m]);
  return out.str();
}

std::string to_string(const Paratopy& p) {
  return "conj=" + cycle_string(p.conj) + " iso=" + to_string(p.iso);
}

CanonicalCertificate canonical_form(const Cube& c) {
  Run par = canonical_run(c, Mode::kParatopy);
  CanonicalCertificate cert;
  cert.canonical_rows = std::move(par.rows);
  cert.to_canonical = std::move(par.to_canonical);
  cert.apar_order = par.graph.group_order;
  for (const Permutation& sigma : par.graph.generators) cert.generators.push_back(automorphism_to_paratopy(c, sigma));
  const AutotopyGroup atop = autotopy_group(c);
  cert.atop_order = atop.order;
  cert.atop_generators = atop.generators;
  cert.saturated = par.graph.order_saturated || atop.saturated;
  return cert;
}

std::vector<Row> canonical_rows(const Cube& c) { return canonical_run(c, Mode::kParatopy).rows; }

std::vector<Row> isotopy_canonical_rows(const Cube& c) { return canonical_run(c, Mode::kIsotopy).rows; }

std::optional<Paratopy> are_paratopic(const Cube& c1, const Cube& c2) {
  check_same_params(c1, c2);
  const Run a = canonical_run(c1, Mode::kParatopy);
  const Run b = canonical_run(c2, Mode::kParatopy);
  if (a.rows != b.rows) return std::nullopt;
  Paratopy witness = compose(inverse(b.to_canonical), a.to_canonical);
  if (!(apply(c1, witness) == c2)) throw std::logic_error("are_paratopic: witness failed validation");
  return witness;
}

std::optional<Isotopy> are_isotopic(const Cube& c1, const Cube& c2) {
  check_same_params(c1, c2);
  const Run a = canonical_run(c1, Mode::kIsotopy);
  const Run b = canonical_run(c2, Mode::kIsotopy);
  if (a.rows != b.rows) return std::nullopt;
  Paratopy witness = compose(inverse(b.to_canonical), a.to_canonical);
  if (!is_identity(witness.conj) || !(apply(c1, witness) == c2)) {
    throw std::logic_error("are_isotopic: witness failed validation");
  }
  return witness.iso;
}

AutotopyGroup autotopy_group(const Cube& c) {
  const GraphCanonResult g = canonical_labeling(incidence_graph(c, Mode::kIsotopy));
  AutotopyGroup out;
  out.order = g.group_order;
  out.saturated = g.order_saturated;
  for (const Permutation& sigma : g.generators) out.generators.push_back(automorphism_to_paratopy(c, sigma).iso);
  return out;
}

bool diffset_equivalent(const GroupTable& g, const OrdinaryDifferenceSet& s1, const OrdinaryDifferenceSet& s2) {
  if (s1.elements.size() != s2.elements.size()) throw std::invalid_argument("diffset_equivalent: sizes differ");
  check_set(g, s1);
  check_set(g, s2);
  std::vector<int> target = s2.elements;
  std::sort(target.begin(), target.end());
  for (const Permutation& phi : group_automorphisms(g)) {
    for (int t = 0; t < g.order(); ++t) {
      if (translate_set(g, s1.elements, phi, t) == target) return true;
    }
  }
  return false;
}

std::vector<int> diffset_classes(const GroupTable& g, const std::vector<std::vector<int>>& sets,
                                 std::vector<Permutation> automorphisms) {
  if (automorphisms.empty()) automorphisms = group_automorphisms(g);
  std::vector<std::vector<int>> sorted;
  for (const auto& s : sets) {
    std::vector<int> t = s;
    std::sort(t.begin(), t.end());
    sorted.push_back(std::move(t));
  }
  std::vector<std::size_t> index(sorted.size());
  std::iota(index.begin(), index.end(), 0);
  std::sort(index.begin(), index.end(), [&](std::size_t a, std::size_t b) { return sorted[a] < sorted[b]; });
  auto find_set = [&](const std::vector<int>& s) -> std::optional<std::size_t> {
    auto it = std::lower_bound(index.begin(), index.end(), s,
                               [&](std::size_t i, const std::vector<int>& key) { return sorted[i] < key; });
    if (it == index.end() || sorted[*it] != s) return std::nullopt;
    return *it;
  };
  std::vector<std::size_t> parent(sorted.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  // The automorphisms together with the translations generate the action.
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (const Permutation& phi : automorphisms) {
      if (auto j = find_set(translate_set(g, sorted[i], phi, 0))) unite(i, *j);
    }
    for (int t = 1; t < g.order(); ++t) {
      if (auto j = find_set(translate_set(g, sorted[i], {}, t))) unite(i, *j);
    }
  }
  std::vector<int> out(sorted.size(), -1);
  std::vector<int> label(sorted.size(), -1);
  int next = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const std::size_t root = find(i);
    if (label[root] < 0) label[root] = next++;
    out[i] = label[root];
  }
  return out;
}

}  // namespace pcube

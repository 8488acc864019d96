#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "corpus.hpp"
#include "oracles.hpp"
#include "pcube/canon_graph.hpp"
#include "pcube/classify.hpp"
#include "pcube/equivalence.hpp"

using namespace pcube;

namespace {

using oracles::brute_force_orders;
using oracles::random_paratopy;
using oracles::random_perm;

std::vector<Cube> equivalence_corpus() {
  std::vector<Cube> out = corpus::all_cubes();
  out.push_back(develop(group_from_name("Z4xZ4"), corpus::D4()));
  out.push_back(develop(cyclic_group(7), corpus::D5()));
  out.push_back(develop(presented_group_16_4(), corpus::D3()));
  return out;
}

}  // namespace

TEST(Equivalence, ApplyAndInverse) {
  std::mt19937 rng(5);
  const Cube c = corpus::C1();
  for (int trial = 0; trial < 50; ++trial) {
    const Paratopy p = random_paratopy(3, 7, rng);
    const Paratopy q = random_paratopy(3, 7, rng);
    EXPECT_EQ(apply(apply(c, p), inverse(p)), c);
    EXPECT_EQ(apply(c, compose(q, p)), apply(apply(c, p), q));
    EXPECT_EQ(compose(p, inverse(p)), identity_paratopy(3, 7));
  }
}

TEST(Equivalence, ConjugateThenIsotopyTakesC1ToC2) {
  const std::vector<int> swap12{1, 0, 2};
  const Permutation alpha = parse_cycles("(2,3,4,5,6,7)", 7);
  const Cube conj = apply_conjugation(corpus::C1(), swap12);
  EXPECT_EQ(apply_isotopy(conj, Isotopy{{alpha, alpha, alpha}}), corpus::C2());
}

TEST(Equivalence, WorkedCubeRelations) {
  const Cube c1 = corpus::C1(), c2 = corpus::C2(), c3 = corpus::C3();
  EXPECT_FALSE(are_isotopic(c1, c2).has_value());
  const auto w = are_paratopic(c1, c2);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(apply(c1, *w), c2);
  EXPECT_FALSE(are_paratopic(c1, c3).has_value());
  EXPECT_FALSE(are_paratopic(c2, c3).has_value());

  const Cube c5 = corpus::C5();
  const std::vector<int> first3{1, 2, 3};
  EXPECT_FALSE(are_paratopic(restrict_cube(c5, first3), corpus::C4()).has_value());
}

TEST(Equivalence, AutoparatopyOrders) {
  const CanonicalCertificate c1 = canonical_form(corpus::C1());
  const CanonicalCertificate c2 = canonical_form(corpus::C2());
  const CanonicalCertificate c3 = canonical_form(corpus::C3());
  EXPECT_EQ(c1.apar_order, 63u);
  EXPECT_EQ(c2.apar_order, 63u);
  EXPECT_EQ(c3.apar_order, 42u);
  EXPECT_EQ(c1.atop_order, 21u);
  EXPECT_EQ(canonical_form(develop(group_from_name("Z4xZ4"), corpus::D4())).apar_order, 16u);
  EXPECT_EQ(autotopy_group(corpus::C3()).order, c3.atop_order);
}

TEST(Equivalence, GeneratorsAreAutoparatopies) {
  for (const Cube& c : equivalence_corpus()) {
    const CanonicalCertificate cert = canonical_form(c);
    for (const Paratopy& g : cert.generators) EXPECT_EQ(apply(c, g), c);
    for (const Isotopy& g : cert.atop_generators) EXPECT_EQ(apply_isotopy(c, g), c);
    EXPECT_EQ(apply(c, cert.to_canonical).rows(), cert.canonical_rows);
    EXPECT_EQ(cert.apar_order % cert.atop_order, 0u);
  }
}

TEST(Equivalence, MatchesBruteForceForSmallCubes) {
  std::vector<Cube> cubes{corpus::C4()};
  for (int n = 2; n <= 3; ++n) {
    for (const Cube& c : classify_cubes_exhaustive(3, 2, 1, n)) cubes.push_back(c);
  }
  for (const Cube& c : cubes) {
    const auto [apar, atop] = brute_force_orders(c);
    const CanonicalCertificate cert = canonical_form(c);
    EXPECT_EQ(cert.apar_order, apar);
    EXPECT_EQ(cert.atop_order, atop);
  }
}

TEST(Equivalence, CanonicalFormInvariantUnderRandomParatopies) {
  std::mt19937 rng(1234);
  for (const Cube& c : equivalence_corpus()) {
    const CanonicalCertificate base = canonical_form(c);
    for (int trial = 0; trial < 100; ++trial) {
      const Cube moved = apply(c, random_paratopy(c.n(), c.v(), rng));
      const CanonicalCertificate cert = canonical_form(moved);
      ASSERT_EQ(cert.canonical_rows, base.canonical_rows);
      ASSERT_EQ(cert.apar_order, base.apar_order);
      const auto w = are_paratopic(c, moved);
      ASSERT_TRUE(w.has_value());
      ASSERT_EQ(apply(c, *w), moved);
    }
  }
}

TEST(Equivalence, IsotopyCanonicalFormIgnoresSymbolsOnly) {
  std::mt19937 rng(77);
  const Cube c = corpus::C1();
  const auto base = isotopy_canonical_rows(c);
  for (int trial = 0; trial < 30; ++trial) {
    Paratopy p = random_paratopy(3, 7, rng);
    p.conj = identity_permutation(3);
    const Cube moved = apply(c, p);
    EXPECT_EQ(isotopy_canonical_rows(moved), base);
    const auto w = are_isotopic(c, moved);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(apply_isotopy(c, *w), moved);
  }
}

TEST(Equivalence, DevelopmentsAreEquivalentToWorkedCubes) {
  const GroupTable z7 = cyclic_group(7);
  EXPECT_TRUE(are_paratopic(develop(z7, corpus::D1()), corpus::C1()).has_value());
  EXPECT_TRUE(are_paratopic(develop(z7, corpus::D1()), corpus::C2()).has_value());
  EXPECT_TRUE(are_paratopic(develop(z7, corpus::D2()), corpus::C3()).has_value());
}

TEST(Equivalence, DiffsetClassesOfSmallGroups) {
  const GroupTable z7 = cyclic_group(7);
  const auto sets = enumerate_difference_sets(z7, 3, 1);
  const auto classes = diffset_classes(z7, sets);
  EXPECT_EQ(*std::max_element(classes.begin(), classes.end()), 0);
  const GroupTable z3 = cyclic_group(3);
  const auto s3 = enumerate_difference_sets(z3, 2, 1);
  EXPECT_EQ(s3.size(), 3u);
  EXPECT_EQ(diffset_classes(z3, s3), (std::vector<int>{0, 0, 0}));
}

namespace {

ColoredGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  ColoredGraph g{std::vector<std::vector<int>>(n), std::vector<int>(n, 0)};
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

ColoredGraph relabel(const ColoredGraph& g, const Permutation& p) {
  ColoredGraph out{std::vector<std::vector<int>>(g.size()), std::vector<int>(g.size())};
  for (int v = 0; v < g.size(); ++v) {
    out.colors[p[v]] = g.colors[v];
    for (int w : g.adjacency[v]) out.adjacency[p[v]].push_back(p[w]);
  }
  return out;
}

ColoredGraph petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({i + 5, (i + 2) % 5 + 5});
  }
  return graph_from_edges(10, e);
}

}  // namespace

TEST(GraphCanon, KnownAutomorphismGroupOrders) {
  std::vector<std::pair<int, int>> cycle, cube3, complete;
  for (int i = 0; i < 9; ++i) cycle.push_back({i, (i + 1) % 9});
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (!(a >> b & 1)) cube3.push_back({a, a | 1 << b});
    }
  }
  for (int a = 0; a < 6; ++a) {
    for (int b = a + 1; b < 6; ++b) complete.push_back({a, b});
  }
  EXPECT_EQ(canonical_labeling(graph_from_edges(9, cycle)).group_order, 18u);
  EXPECT_EQ(canonical_labeling(graph_from_edges(8, cube3)).group_order, 48u);
  EXPECT_EQ(canonical_labeling(graph_from_edges(6, complete)).group_order, 720u);
  EXPECT_EQ(canonical_labeling(petersen()).group_order, 120u);
}

TEST(GraphCanon, ColorsRestrictAutomorphisms) {
  std::vector<std::pair<int, int>> cycle;
  for (int i = 0; i < 6; ++i) cycle.push_back({i, (i + 1) % 6});
  ColoredGraph g = graph_from_edges(6, cycle);
  g.colors[0] = 1;
  EXPECT_EQ(canonical_labeling(g).group_order, 2u);
}

TEST(GraphCanon, RelabelingGivesSameCode) {
  std::mt19937 rng(31);
  const ColoredGraph base = petersen();
  const auto code = labeled_code(base, canonical_labeling(base).labeling);
  for (int trial = 0; trial < 50; ++trial) {
    const ColoredGraph moved = relabel(base, random_perm(10, rng));
    const GraphCanonResult r = canonical_labeling(moved);
    EXPECT_EQ(labeled_code(moved, r.labeling), code);
    for (const Permutation& gen : r.generators) {
      EXPECT_EQ(labeled_code(moved, gen), labeled_code(moved, identity_permutation(10)));
    }
  }
}

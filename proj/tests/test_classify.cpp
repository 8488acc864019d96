#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "corpus.hpp"
#include "pcube/classify.hpp"
#include "pcube/error.hpp"

using namespace pcube;

namespace {

std::set<std::vector<Row>> keys(const std::vector<ClassRepresentative>& reps) {
  std::set<std::vector<Row>> out;
  for (const auto& r : reps) out.insert(r.canonical);
  return out;
}

std::vector<int> counts_from(const ClassificationResult& r, int from_n) {
  std::vector<int> out;
  for (const auto& d : r.per_dimension) {
    if (d.n >= from_n && !d.classes.empty()) out.push_back(static_cast<int>(d.classes.size()));
  }
  return out;
}

Isotopy diagonal_shift(int v, int n) {
  Permutation s(v);
  for (int i = 0; i < v; ++i) s[i] = (i + 1) % v;
  return Isotopy{std::vector<Permutation>(n, s)};
}

}  // namespace

TEST(Classify, ZThreeByHand) {
  // Brute force: all normalized pairs of 3-tuples over Z3.
  const GroupTable z3 = cyclic_group(3);
  std::vector<Row> tuples;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) tuples.push_back({0, a, b});
  }
  int valid = 0;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    for (std::size_t j = i + 1; j < tuples.size(); ++j) {
      valid += is_nd_difference_set(z3, NdDifferenceSet{2, 1, 3, {tuples[i], tuples[j]}}).ok;
    }
  }
  EXPECT_EQ(valid, 9);

  const auto catalog = enumerate_difference_sets(z3, 2, 1);
  const auto lifted = lifts(catalog, 2, 1);
  EXPECT_EQ(lifted.size(), 3u);
  const auto three = extend_diffsets(z3, lifted, catalog);
  ASSERT_EQ(three.size(), 1u);
  const NdDifferenceSet rep{2, 1, 3, {{0, 0, 1}, {0, 1, 0}}};
  EXPECT_EQ(three[0].canonical, canonical_rows(develop(z3, rep)));
  EXPECT_TRUE(extend_diffsets(z3, {rep}, catalog).empty());

  const ClassificationResult r = classify_nd_diffsets(z3, 2, 1);
  EXPECT_EQ(r.mu, 3);
  EXPECT_TRUE(r.complete);
}

TEST(Classify, FanoPlane) {
  const ClassificationResult r = classify_nd_diffsets(cyclic_group(7), 3, 1);
  EXPECT_EQ(r.mu, 7);
  EXPECT_TRUE(r.complete);
  EXPECT_EQ(counts_from(r, 3), (std::vector<int>{2, 2, 1, 1, 1}));
  EXPECT_EQ(r.catalog.size(), 14u);
  EXPECT_LE(r.mu, dimension_bounds(7, 3).distance);
}

TEST(Classify, ComplementOfFano) {
  const ClassificationResult r = classify_nd_diffsets(cyclic_group(7), 4, 2);
  EXPECT_EQ(r.mu, 7);
  EXPECT_EQ(counts_from(r, 3), (std::vector<int>{2, 2, 1, 1, 1}));
}

TEST(Classify, RepresentativesAreValidAndDistinct) {
  const GroupTable g = cyclic_group(7);
  const ClassificationResult r = classify_nd_diffsets(g, 3, 1);
  for (const auto& dim : r.per_dimension) {
    std::set<std::vector<Row>> seen;
    for (const auto& rep : dim.classes) {
      EXPECT_EQ(rep.diffset.n, dim.n);
      EXPECT_TRUE(is_nd_difference_set(g, rep.diffset).ok);
      for (const Row& t : rep.diffset.tuples) EXPECT_EQ(t[0], 0);
      EXPECT_EQ(rep.canonical, canonical_rows(develop(g, rep.diffset)));
      EXPECT_TRUE(seen.insert(rep.canonical).second);
    }
  }
}

TEST(Classify, RestrictionClosure) {
  const GroupTable g = cyclic_group(11);
  const ClassificationResult r = classify_nd_diffsets(g, 5, 2);
  EXPECT_EQ(r.mu, 11);
  EXPECT_EQ(counts_from(r, 3), (std::vector<int>{2, 4, 6, 6, 4, 2, 1, 1, 1}));
  for (std::size_t i = 1; i < r.per_dimension.size(); ++i) {
    const auto lower = keys(r.per_dimension[i - 1].classes);
    const int n = r.per_dimension[i].n;
    for (const auto& rep : r.per_dimension[i].classes) {
      for (int drop = 1; drop <= n; ++drop) {
        std::vector<int> coords;
        for (int x = 1; x <= n; ++x) {
          if (x != drop) coords.push_back(x);
        }
        const NdDifferenceSet sub = restrict_diffset(rep.diffset, coords);
        EXPECT_TRUE(lower.count(canonical_rows(develop(g, sub)))) << "n=" << n;
      }
    }
  }
}

TEST(Classify, FrontierOrderDoesNotChangeClasses) {
  const GroupTable g = cyclic_group(7);
  const auto catalog = enumerate_difference_sets(g, 3, 1);
  std::vector<NdDifferenceSet> frontier = lifts(catalog, 3, 1);
  const auto base = keys(extend_diffsets(g, frontier, catalog));
  std::mt19937 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(frontier.begin(), frontier.end(), rng);
    EXPECT_EQ(keys(extend_diffsets(g, frontier, catalog)), base);
  }
}

TEST(Classify, ThreadCountDoesNotChangeResult) {
  const GroupTable g = cyclic_group(11);
  ClassifyOptions one, many;
  many.threads = 4;
  const ClassificationResult a = classify_nd_diffsets(g, 6, 3, one);
  const ClassificationResult b = classify_nd_diffsets(g, 6, 3, many);
  ASSERT_EQ(a.per_dimension.size(), b.per_dimension.size());
  for (std::size_t i = 0; i < a.per_dimension.size(); ++i) {
    ASSERT_EQ(a.per_dimension[i].classes.size(), b.per_dimension[i].classes.size());
    for (std::size_t j = 0; j < a.per_dimension[i].classes.size(); ++j) {
      EXPECT_EQ(a.per_dimension[i].classes[j].diffset.tuples, b.per_dimension[i].classes[j].diffset.tuples);
    }
  }
}

TEST(Classify, MaxDimAndBudgetGivePartialResults) {
  const GroupTable g = cyclic_group(13);
  ClassifyOptions capped;
  capped.max_dim = 4;
  const ClassificationResult r = classify_nd_diffsets(g, 4, 1, capped);
  EXPECT_FALSE(r.complete);
  EXPECT_EQ(r.mu, 4);
  EXPECT_EQ(counts_from(r, 3), (std::vector<int>{3, 7}));

  ClassifyOptions tiny;
  tiny.budget_seconds = 1e-6;
  const ClassificationResult t = classify_nd_diffsets(g, 4, 1, tiny);
  EXPECT_FALSE(t.complete);
  EXPECT_LE(t.mu, 13);
}

TEST(Classify, NoDifferenceSets) {
  const ClassificationResult r = classify_nd_diffsets(cyclic_group(16), 6, 2);
  EXPECT_EQ(r.mu, 0);
  EXPECT_TRUE(r.catalog.empty());
}

TEST(Classify, ExhaustiveSmallCubes) {
  const std::vector<int> expect{1, 2, 1, 1, 0};
  for (int n = 2; n <= 6; ++n) {
    const auto cubes = classify_cubes_exhaustive(3, 2, 1, n);
    EXPECT_EQ(static_cast<int>(cubes.size()), expect[n - 2]) << n;
    for (const Cube& c : cubes) {
      EXPECT_TRUE(verify_cube(c).ok);
      EXPECT_EQ(c.rows(), canonical_rows(c));
    }
  }
  const auto five = classify_cubes_exhaustive(3, 2, 1, 5);
  EXPECT_EQ(five[0].rows(), canonical_rows(corpus::C5()));
  // At n = 3: the development of {(0,0,1),(0,1,0)} over Z3, which is C4,
  // and the restrictions of C5.
  const auto three = classify_cubes_exhaustive(3, 2, 1, 3);
  const auto c4 = canonical_rows(corpus::C4());
  const auto z3 = canonical_rows(develop(cyclic_group(3), NdDifferenceSet{2, 1, 3, {{0, 0, 1}, {0, 1, 0}}}));
  const std::vector<int> first3{1, 2, 3};
  const auto c5r = canonical_rows(restrict_cube(corpus::C5(), first3));
  EXPECT_EQ(c4, z3);
  EXPECT_NE(c4, c5r);
  std::set<std::vector<Row>> got{three[0].rows(), three[1].rows()};
  EXPECT_EQ(got, (std::set<std::vector<Row>>{c4, c5r}));
  EXPECT_THROW(classify_cubes_exhaustive(5, 1, 0, 2), std::invalid_argument);
}

TEST(Classify, KramerMesnerTrivialGroupMatchesExhaustive) {
  for (int n = 2; n <= 4; ++n) {
    const auto km = kramer_mesner_search(3, 2, 1, n, {});
    const auto ex = classify_cubes_exhaustive(3, 2, 1, n);
    EXPECT_EQ(km, ex) << n;
  }
}

TEST(Classify, KramerMesnerDiagonalTranslations) {
  const GroupTable g = cyclic_group(7);
  const auto km = kramer_mesner_search(7, 3, 1, 3, {diagonal_shift(7, 3)});
  ClassifyOptions opt;
  opt.max_dim = 3;
  const ClassificationResult r = classify_nd_diffsets(g, 3, 1, opt);
  std::set<std::vector<Row>> from_km, from_ds;
  for (const Cube& c : km) from_km.insert(c.rows());
  for (const auto& rep : r.per_dimension[1].classes) from_ds.insert(rep.canonical);
  EXPECT_EQ(km.size(), 2u);
  EXPECT_EQ(from_km, from_ds);
  EXPECT_THROW(kramer_mesner_search(16, 6, 2, 6, {}, 1000), BudgetExceeded);
}

TEST(Classify, ExtractDiffsetRoundTrip) {
  struct Case {
    GroupTable g;
    NdDifferenceSet d;
  };
  const std::vector<Case> cases{{cyclic_group(7), corpus::D5()},
                                {group_from_name("Z4xZ4"), corpus::D4()},
                                {presented_group_16_4(), corpus::D3()}};
  for (const Case& c : cases) {
    const Cube cube = develop(c.g, c.d);
    std::vector<Isotopy> gens;
    for (int h = 1; h < c.g.order(); ++h) {
      Permutation t(c.g.order());
      for (int x = 0; x < c.g.order(); ++x) t[x] = c.g.op(x, h);
      gens.push_back(Isotopy{std::vector<Permutation>(c.d.n, t)});
    }
    const ExtractedDiffset e = extract_diffset(cube, gens);
    EXPECT_EQ(e.group.order(), c.g.order());
    EXPECT_TRUE(is_nd_difference_set(e.group, e.diffset).ok);
    const Cube back = develop(e.group, e.diffset);
    std::vector<Row> relabeled;
    for (const Row& r : cube.rows()) {
      Row t(r.size());
      for (std::size_t m = 0; m < r.size(); ++m) t[m] = e.symbol_to_element[m][r[m]];
      relabeled.push_back(t);
    }
    std::sort(relabeled.begin(), relabeled.end());
    EXPECT_EQ(back.rows(), relabeled);
    EXPECT_EQ(e.group.is_abelian(), c.g.is_abelian());
  }
}

TEST(Classify, ExtractRejectsNonTransitiveAction) {
  EXPECT_THROW(extract_diffset(corpus::C4(), {}), std::invalid_argument);
}

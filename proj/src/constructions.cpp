#include "pcube/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pcube {

namespace {

FiniteField field_or_throw(int q, std::optional<int> alpha, const char* what) {
  if (!prime_power(q)) {
    throw std::invalid_argument(std::string(what) + ": " + std::to_string(q) + " is not a prime power");
  }
  return finite_field_of_order(q, alpha);
}

// Tuples (0, a^(m i), ..., a^(m i + q - 2)) for i = 0..(q-1)/m - 1.
NdDifferenceSet cyclotomic_tuples(const FiniteField& f, int m, int lambda) {
  const int q = f.order();
  NdDifferenceSet d{(q - 1) / m, lambda, q, {}};
  for (int i = 0; i < (q - 1) / m; ++i) {
    Row t{0};
    for (int x = 0; x <= q - 2; ++x) t.push_back(f.power_of_primitive(static_cast<long long>(m) * i + x));
    d.tuples.push_back(std::move(t));
  }
  return d;
}

bool is_four_t_squared_plus_one_t_odd(int q) {
  if ((q - 1) % 4 != 0) return false;
  const int t2 = (q - 1) / 4;
  const int t = static_cast<int>(std::lround(std::sqrt(static_cast<double>(t2))));
  return t * t == t2 && t % 2 == 1;
}

struct TwinFields {
  FiniteField fq;
  FiniteField fq2;
  GroupTable group;
};

TwinFields twin_fields(int q, std::optional<int> alpha, std::optional<int> beta) {
  if (q < 3 || q % 2 == 0 || !prime_power(q) || !prime_power(q + 2)) {
    throw std::invalid_argument("twin prime power: " + std::to_string(q) + " and " + std::to_string(q + 2) +
                                " must both be odd prime powers");
  }
  FiniteField fq = finite_field_of_order(q, alpha);
  FiniteField fq2 = finite_field_of_order(q + 2, beta);
  GroupTable g = direct_product(fq.additive_group(), fq2.additive_group());
  return TwinFields{std::move(fq), std::move(fq2), std::move(g)};
}

}  // namespace

ConstructedDiffset paley_nd(int q, std::optional<int> alpha) {
  if (q % 4 != 3) throw std::invalid_argument("paley_nd: q = " + std::to_string(q) + " is not 3 mod 4");
  FiniteField f = field_or_throw(q, alpha, "paley_nd");
  NdDifferenceSet d = cyclotomic_tuples(f, 2, (q - 3) / 4);
  return ConstructedDiffset{f.additive_group(), std::move(d)};
}

ConstructedDiffset cyclotomic_nd(int q, int m, std::optional<int> alpha) {
  if (m == 2) return paley_nd(q, alpha);
  FiniteField f = field_or_throw(q, alpha, "cyclotomic_nd");
  if (m < 2 || (q - 1) % m != 0) {
    throw std::invalid_argument("cyclotomic_nd: m = " + std::to_string(m) + " does not divide q - 1");
  }
  if (m == 4 && !is_four_t_squared_plus_one_t_odd(q)) {
    throw std::invalid_argument("cyclotomic_nd: m = 4 needs q = 4t^2 + 1 with t odd");
  }
  const long long k = (q - 1) / m;
  if ((k * (k - 1)) % (q - 1) != 0) {
    throw std::invalid_argument("cyclotomic_nd: no integral lambda for q = " + std::to_string(q) +
                                ", m = " + std::to_string(m));
  }
  const int lambda = static_cast<int>(k * (k - 1) / (q - 1));
  NdDifferenceSet d = cyclotomic_tuples(f, m, lambda);
  GroupTable g = f.additive_group();
  // Admissibility of m >= 8 is decided by the construction itself.
  if (m != 4) {
    const DiffsetReport report = is_nd_difference_set(g, d);
    if (!report.ok) {
      throw std::invalid_argument("cyclotomic_nd: q = " + std::to_string(q) + ", m = " + std::to_string(m) +
                                  " is inadmissible: " + report.message);
    }
  }
  return ConstructedDiffset{std::move(g), std::move(d)};
}

ConstructedOrdinary twin_prime_power_ordinary(int q, TwinVariant variant, std::optional<int> alpha,
                                              std::optional<int> beta) {
  TwinFields tf = twin_fields(q, alpha, beta);
  const int w = q + 2;
  auto pair = [w](int a, int b) { return a * w + b; };
  // E1/E2 exponent offsets of (alpha, beta) for the two parts.
  const int off1b = variant == TwinVariant::kStandard ? 0 : 1;
  const int off2b = variant == TwinVariant::kStandard ? 1 : 0;
  std::vector<int> elems;
  for (int i = 0; i <= (q - 3) / 2; ++i) {
    for (int j = 0; j <= (q - 1) / 2; ++j) {
      elems.push_back(pair(tf.fq.power_of_primitive(2 * i), tf.fq2.power_of_primitive(2 * j + off1b)));
    }
  }
  for (int i = 0; i <= (q - 3) / 2; ++i) {
    for (int j = 0; j <= (q - 1) / 2; ++j) {
      elems.push_back(pair(tf.fq.power_of_primitive(2 * i + 1), tf.fq2.power_of_primitive(2 * j + off2b)));
    }
  }
  elems.push_back(pair(0, 0));
  for (int i = 0; i <= q - 2; ++i) elems.push_back(pair(tf.fq.power_of_primitive(i), 0));
  std::sort(elems.begin(), elems.end());
  const int m = (q + 1) * (q + 1) / 4;
  return ConstructedOrdinary{std::move(tf.group), OrdinaryDifferenceSet{2 * m - 1, m - 1, std::move(elems)}};
}

ConstructedDiffset twin_prime_power_nd(int q, std::optional<int> alpha, std::optional<int> beta) {
  TwinFields tf = twin_fields(q, alpha, beta);
  const int w = q + 2;
  const int m = (q + 1) * (q + 1) / 4;
  NdDifferenceSet d{2 * m - 1, m - 1, q, {}};
  auto a_elem = [&](int i, int j, int x) {
    return tf.fq.power_of_primitive(2 * i + x) * w + tf.fq2.power_of_primitive(2 * j + x);
  };
  for (int shift = 0; shift <= 1; ++shift) {  // E1 then E2
    for (int i = 0; i <= (q - 3) / 2; ++i) {
      for (int j = 0; j <= (q - 1) / 2; ++j) {
        Row t{0};
        for (int x = 0; x <= q - 2; ++x) t.push_back(a_elem(i, j, x + shift));
        d.tuples.push_back(std::move(t));
      }
    }
  }
  d.tuples.push_back(Row(q, 0));
  for (int i = 0; i <= q - 2; ++i) {
    Row t{0};
    for (int x = 0; x <= q - 2; ++x) t.push_back(tf.fq.power_of_primitive(i + x) * w);
    d.tuples.push_back(std::move(t));
  }
  return ConstructedDiffset{std::move(tf.group), std::move(d)};
}

ConstructedOrdinary paley_ordinary(int q, PaleyHalf which, std::optional<int> alpha) {
  if (q % 4 != 3) throw std::invalid_argument("paley_ordinary: q = " + std::to_string(q) + " is not 3 mod 4");
  FiniteField f = field_or_throw(q, alpha, "paley_ordinary");
  std::vector<int> elems = cyclotomic_class(f, 2, which == PaleyHalf::kSquares ? 0 : 1);
  std::sort(elems.begin(), elems.end());
  return ConstructedOrdinary{f.additive_group(),
                             OrdinaryDifferenceSet{(q - 1) / 2, (q - 3) / 4, std::move(elems)}};
}

}  // namespace pcube

#pragma once

#include <optional>
#include <vector>

#include "pcube/group.hpp"

namespace pcube {

/// Largest field order accepted by finite_field().
inline constexpr int kDefaultFieldLimit = 1 << 13;

bool is_prime(int n);

/// Returns (p, s) with q = p^s, or nothing when q is not a prime power.
std::optional<std::pair<int, int>> prime_power(int q);

/// The finite field GF(p^s).
///
/// Elements are indexed 0..q-1. An element with polynomial coefficients
/// c_0 + c_1 t + ... + c_{s-1} t^{s-1} has index sum c_i p^i, so GF(p) uses
/// plain residues and 0 is the zero element, 1 the unit. Multiplication for
/// s > 1 is modulo the monic irreducible polynomial of degree s whose
/// coefficient vector (read as the same base-p index) is smallest.
class FiniteField {
 public:
  int characteristic() const { return p_; }
  int degree() const { return s_; }
  int order() const { return q_; }
  int primitive() const { return alpha_; }
  /// Coefficients c_0..c_s of the reduction polynomial (c_s = 1).
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const;
  int neg(int a) const;
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const;
  int inv(int a) const;
  /// alpha^e for any integer e (reduced mod q-1).
  int power_of_primitive(long long e) const;
  /// Discrete log base alpha; a must be nonzero.
  int log(int a) const;

  bool is_square(int a) const;
  /// Index of the cyclotomic class of order m containing a != 0, i.e.
  /// log(a) mod m.
  int cyclotomic_index(int a, int m) const;

  /// (F_q, +) as a GroupTable, elements numbered by field index.
  GroupTable additive_group() const;

 private:
  friend FiniteField finite_field(int p, int s, std::optional<int> primitive, int limit);

  int p_ = 0;
  int s_ = 0;
  int q_ = 0;
  int alpha_ = 0;
  std::vector<int> modulus_;
  std::vector<int> exp_;  // exp_[i] = alpha^i, 0 <= i < q-1
  std::vector<int> log_;  // log_[a] for a != 0
};

/// Builds GF(p^s). When `primitive` is absent the least primitive element in
/// index order is used. Throws std::invalid_argument for a non-prime p, an
/// order above `limit`, or a requested element that is not primitive.
FiniteField finite_field(int p, int s, std::optional<int> primitive = std::nullopt,
                         int limit = kDefaultFieldLimit);

/// Convenience overload taking the field order q = p^s.
FiniteField finite_field_of_order(int q, std::optional<int> primitive = std::nullopt);

/// {alpha^(m*i + offset) : i = 0..(q-1)/m - 1} in increasing i order.
/// Throws std::invalid_argument unless m divides q-1.
std::vector<int> cyclotomic_class(const FiniteField& f, int m, int offset);

}  // namespace pcube

#include "pcube/field.hpp"

#include <stdexcept>
#include <string>

namespace pcube {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<int, int>> prime_power(int q) {
  if (q < 2) return std::nullopt;
  int p = 2;
  while (q % p != 0) ++p;
  int s = 0;
  int r = q;
  while (r % p == 0) {
    r /= p;
    ++s;
  }
  if (r != 1) return std::nullopt;
  return std::make_pair(p, s);
}

namespace {

using Poly = std::vector<int>;  // coefficients c_0..c_d, mod p

Poly digits(int index, int p, int s) {
  Poly c(s, 0);
  for (int i = 0; i < s; ++i) {
    c[i] = index % p;
    index /= p;
  }
  return c;
}

int undigits(const Poly& c, int p) {
  int index = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) index = index * p + c[i];
  return index;
}

// Product of two residues (each of degree < s) reduced modulo the monic
// polynomial `mod` of degree s.
Poly mul_mod(const Poly& a, const Poly& b, const Poly& mod, int p) {
  const int s = static_cast<int>(mod.size()) - 1;
  Poly prod(2 * s, 0);
  for (int i = 0; i < s; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < s; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  for (int d = 2 * s - 1; d >= s; --d) {
    const int c = prod[d];
    if (c == 0) continue;
    for (int i = 0; i <= s; ++i) {
      prod[d - s + i] = ((prod[d - s + i] - c * mod[i]) % p + p) % p;
    }
  }
  prod.resize(s);
  return prod;
}

// A monic polynomial of degree s over GF(p) is irreducible iff it has no
// monic factor of degree 1..s/2; checked by trial division.
bool poly_irreducible(const Poly& f, int p) {
  const int s = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= s / 2; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int low = 0; low < count; ++low) {
      Poly g = digits(low, p, d);
      g.push_back(1);
      // Remainder of f by g.
      Poly r = f;
      for (int k = s; k >= d; --k) {
        const int c = r[k];
        if (c == 0) continue;
        for (int i = 0; i <= d; ++i) r[k - d + i] = ((r[k - d + i] - c * g[i]) % p + p) % p;
      }
      bool zero = true;
      for (int i = 0; i < d; ++i) zero = zero && r[i] == 0;
      if (zero) return false;
    }
  }
  return true;
}

Poly least_irreducible(int p, int s) {
  int count = 1;
  for (int i = 0; i < s; ++i) count *= p;
  for (int low = 0; low < count; ++low) {
    Poly f = digits(low, p, s);
    f.push_back(1);
    if (poly_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

int FiniteField::add(int a, int b) const {
  if (s_ == 1) return (a + b) % p_;
  int r = 0, scale = 1;
  for (int i = 0; i < s_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

int FiniteField::neg(int a) const {
  if (s_ == 1) return (p_ - a) % p_;
  int r = 0, scale = 1;
  for (int i = 0; i < s_; ++i) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

int FiniteField::mul(int a, int b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

int FiniteField::inv(int a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

int FiniteField::power_of_primitive(long long e) const {
  const long long n = q_ - 1;
  return exp_[static_cast<std::size_t>(((e % n) + n) % n)];
}

int FiniteField::log(int a) const {
  if (a == 0) throw std::domain_error("log of zero");
  return log_[a];
}

bool FiniteField::is_square(int a) const {
  if (a == 0) return true;
  if (p_ == 2) return true;
  return log_[a] % 2 == 0;
}

int FiniteField::cyclotomic_index(int a, int m) const { return log(a) % m; }

GroupTable FiniteField::additive_group() const {
  std::vector<std::vector<int>> t(q_, std::vector<int>(q_));
  for (int a = 0; a < q_; ++a) {
    for (int b = 0; b < q_; ++b) t[a][b] = add(a, b);
  }
  std::string name = s_ == 1 ? "Z" + std::to_string(q_) : "GF" + std::to_string(q_);
  return GroupTable(std::move(t), std::move(name));
}

FiniteField finite_field(int p, int s, std::optional<int> primitive, int limit) {
  if (!is_prime(p)) throw std::invalid_argument("finite_field: " + std::to_string(p) + " is not prime");
  if (s < 1) throw std::invalid_argument("finite_field: exponent must be positive");
  long long q = 1;
  for (int i = 0; i < s; ++i) {
    q *= p;
    if (q > limit) throw std::invalid_argument("finite_field: order exceeds limit " + std::to_string(limit));
  }
  FiniteField f;
  f.p_ = p;
  f.s_ = s;
  f.q_ = static_cast<int>(q);
  if (s == 1) {
    f.modulus_ = {0, 1};
  } else {
    f.modulus_ = least_irreducible(p, s);
  }

  const int qi = f.q_;
  auto try_primitive = [&](int alpha) -> bool {
    if (alpha <= 0 || alpha >= qi) return false;
    std::vector<int> exp(qi - 1);
    std::vector<int> log(qi, -1);
    Poly a = digits(alpha, p, s);
    Poly x = digits(1, p, s);
    for (int i = 0; i < qi - 1; ++i) {
      int idx = s == 1 ? x[0] : undigits(x, p);
      if (log[idx] >= 0) return false;
      log[idx] = i;
      exp[i] = idx;
      if (s == 1) {
        x[0] = static_cast<int>(static_cast<long long>(x[0]) * alpha % p);
      } else {
        x = mul_mod(x, a, f.modulus_, p);
      }
    }
    if ((s == 1 ? x[0] : undigits(x, p)) != 1) return false;
    f.alpha_ = alpha;
    f.exp_ = std::move(exp);
    f.log_ = std::move(log);
    return true;
  };

  if (primitive) {
    if (!try_primitive(*primitive)) {
      throw std::invalid_argument("finite_field: " + std::to_string(*primitive) +
                                  " is not a primitive element of GF(" + std::to_string(qi) + ")");
    }
  } else {
    bool found = false;
    for (int alpha = 1; alpha < qi && !found; ++alpha) found = try_primitive(alpha);
    if (!found) throw std::logic_error("finite_field: no primitive element");
  }
  return f;
}

FiniteField finite_field_of_order(int q, std::optional<int> primitive) {
  auto pp = prime_power(q);
  if (!pp) throw std::invalid_argument("finite_field: " + std::to_string(q) + " is not a prime power");
  return finite_field(pp->first, pp->second, primitive);
}

std::vector<int> cyclotomic_class(const FiniteField& f, int m, int offset) {
  const int q = f.order();
  if (m < 1 || (q - 1) % m != 0) {
    throw std::invalid_argument("cyclotomic_class: " + std::to_string(m) + " does not divide " +
                                std::to_string(q - 1));
  }
  std::vector<int> out;
  out.reserve((q - 1) / m);
  for (int i = 0; i < (q - 1) / m; ++i) {
    out.push_back(f.power_of_primitive(static_cast<long long>(m) * i + offset));
  }
  return out;
}

}  // namespace pcube

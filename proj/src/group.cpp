#include "pcube/group.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <string>

#include "pcube/error.hpp"
#include "pcube/field.hpp"

namespace pcube {

GroupTable::GroupTable(std::vector<std::vector<int>> rows, std::string name)
    : order_(static_cast<int>(rows.size())), name_(std::move(name)) {
  const int v = order_;
  if (v < 1) throw std::invalid_argument("group table is empty");
  table_.reserve(static_cast<std::size_t>(v) * v);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != v) throw std::invalid_argument("group table is not square");
    for (int x : row) {
      if (x < 0 || x >= v) throw std::invalid_argument("group table entry out of range");
      table_.push_back(x);
    }
  }
  // Latin square.
  for (int g = 0; g < v; ++g) {
    std::vector<char> in_row(v, 0), in_col(v, 0);
    for (int h = 0; h < v; ++h) {
      int r = op(g, h), c = op(h, g);
      if (in_row[r] || in_col[c]) throw std::invalid_argument("group table is not a Latin square");
      in_row[r] = in_col[c] = 1;
    }
  }
  for (int g = 0; g < v; ++g) {
    if (op(0, g) != g || op(g, 0) != g) {
      throw std::invalid_argument("element 0 is not the identity");
    }
  }
  inverse_.assign(v, -1);
  for (int g = 0; g < v; ++g) {
    for (int h = 0; h < v; ++h) {
      if (op(g, h) == 0) {
        if (op(h, g) != 0) throw std::invalid_argument("element has no two-sided inverse");
        inverse_[g] = h;
      }
    }
  }
  for (int a = 0; a < v; ++a) {
    for (int b = 0; b < v; ++b) {
      const int ab = op(a, b);
      for (int c = 0; c < v; ++c) {
        if (op(ab, c) != op(a, op(b, c))) throw std::invalid_argument("group table is not associative");
      }
    }
  }
}

bool GroupTable::is_abelian() const {
  for (int g = 0; g < order_; ++g) {
    for (int h = g + 1; h < order_; ++h) {
      if (op(g, h) != op(h, g)) return false;
    }
  }
  return true;
}

int GroupTable::element_order(int g) const {
  int x = g, k = 1;
  while (x != 0) {
    x = op(x, g);
    ++k;
  }
  return k;
}

int GroupTable::exponent() const {
  int e = 1;
  for (int g = 0; g < order_; ++g) e = std::lcm(e, element_order(g));
  return e;
}

std::vector<std::vector<int>> GroupTable::rows() const {
  std::vector<std::vector<int>> out(order_);
  for (int g = 0; g < order_; ++g) {
    out[g].assign(table_.begin() + static_cast<std::ptrdiff_t>(g) * order_,
                  table_.begin() + static_cast<std::ptrdiff_t>(g + 1) * order_);
  }
  return out;
}

GroupTable cyclic_group(int v) {
  if (v < 1) throw std::invalid_argument("cyclic_group: order must be positive");
  std::vector<std::vector<int>> t(v, std::vector<int>(v));
  for (int g = 0; g < v; ++g) {
    for (int h = 0; h < v; ++h) t[g][h] = (g + h) % v;
  }
  return GroupTable(std::move(t), "Z" + std::to_string(v));
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  const int a = g.order(), b = h.order();
  std::vector<std::vector<int>> t(a * b, std::vector<int>(a * b));
  for (int x = 0; x < a * b; ++x) {
    for (int y = 0; y < a * b; ++y) {
      t[x][y] = g.op(x / b, y / b) * b + h.op(x % b, y % b);
    }
  }
  return GroupTable(std::move(t), g.name() + "x" + h.name());
}

namespace {

int power_mod(long long base, int exp, int mod) {
  long long r = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return static_cast<int>(r);
}

int default_action(int n, int m) {
  for (int r = 2; r < n; ++r) {
    if (std::gcd(r, n) == 1 && power_mod(r, m, n) == 1) return r;
  }
  return 1;
}

// <a, b | a^n = 1, b^m = a^t, b a b^-1 = a^r>, element a^i b^j at index i*m + j.
GroupTable metacyclic(int n, int m, int r, int t, std::string name) {
  const int v = n * m;
  std::vector<int> rpow(m);
  for (int j = 0; j < m; ++j) rpow[j] = power_mod(r, j, n);
  std::vector<std::vector<int>> table(v, std::vector<int>(v));
  for (int x = 0; x < v; ++x) {
    const int i = x / m, j = x % m;
    for (int y = 0; y < v; ++y) {
      const int k = y / m, l = y % m;
      long long a = i + static_cast<long long>(k) * rpow[j];
      int b = j + l;
      if (b >= m) {
        b -= m;
        a += t;
      }
      table[x][y] = static_cast<int>(a % n) * m + b;
    }
  }
  return GroupTable(std::move(table), std::move(name));
}

}  // namespace

GroupTable semidirect_product(const GroupTable& normal, int m, const Permutation& action,
                              std::string name) {
  const int nn = normal.order();
  if (m < 1) throw std::invalid_argument("semidirect_product: m must be positive");
  if (static_cast<int>(action.size()) != nn || !is_automorphism(normal, action)) {
    throw std::invalid_argument("semidirect_product: action is not an automorphism");
  }
  std::vector<Permutation> powers{identity_permutation(nn)};
  for (int i = 1; i <= m; ++i) powers.push_back(compose(action, powers.back()));
  if (!is_identity(powers[m])) {
    throw std::invalid_argument("semidirect_product: action order does not divide m");
  }
  const int v = nn * m;
  std::vector<std::vector<int>> t(v, std::vector<int>(v));
  for (int a = 0; a < v; ++a) {
    const int x = a / m, i = a % m;
    for (int b = 0; b < v; ++b) {
      const int y = b / m, j = b % m;
      t[a][b] = normal.op(x, powers[i][y]) * m + (i + j) % m;
    }
  }
  if (name.empty()) name = normal.name() + "sZ" + std::to_string(m);
  return GroupTable(std::move(t), std::move(name));
}

GroupTable semidirect_product(int n, int m, int r) {
  if (n < 1 || m < 1) throw std::invalid_argument("semidirect_product: orders must be positive");
  const int rr = ((r % n) + n) % n;
  if (std::gcd(rr, n) != 1 || power_mod(rr, m, n) != 1 % n) {
    throw std::invalid_argument("semidirect_product: x -> x^" + std::to_string(r) +
                                " is not an automorphism of Z" + std::to_string(n) +
                                " of order dividing " + std::to_string(m));
  }
  std::string name = "Z" + std::to_string(n) + "sZ" + std::to_string(m);
  if (rr != default_action(n, m)) name += "_" + std::to_string(rr);
  return metacyclic(n, m, rr, 0, std::move(name));
}

GroupTable presented_group_16_4() {
  // (a^i b^j)(a^k b^l) = a^(i+k) b^(j(-1)^k + l), since a^-1 b a = b^-1.
  std::vector<std::vector<int>> t(16, std::vector<int>(16));
  for (int x = 0; x < 16; ++x) {
    const int i = x / 4, j = x % 4;
    for (int y = 0; y < 16; ++y) {
      const int k = y / 4, l = y % 4;
      const int bj = (k % 2 == 0) ? j : (4 - j) % 4;
      t[x][y] = ((i + k) % 4) * 4 + (bj + l) % 4;
    }
  }
  return GroupTable(std::move(t), "SD16_4");
}

GroupTable small_group_16(int id) {
  const GroupTable z2 = cyclic_group(2);
  const GroupTable z4 = cyclic_group(4);
  auto named = [id](const GroupTable& g) {
    return GroupTable(g.rows(), "SG16_" + std::to_string(id));
  };
  switch (id) {
    case 1: return named(cyclic_group(16));
    case 2: return named(direct_product(z4, z4));
    case 3: {
      const GroupTable base = direct_product(z4, z2);  // (x, y) at 2x + y
      Permutation phi(8);
      for (int x = 0; x < 4; ++x) {
        for (int y = 0; y < 2; ++y) phi[2 * x + y] = 2 * x + (y + x) % 2;
      }
      return named(semidirect_product(base, 2, phi));
    }
    case 4: return named(presented_group_16_4());
    case 5: return named(direct_product(cyclic_group(8), z2));
    case 6: return named(metacyclic(8, 2, 5, 0, ""));
    case 7: return named(metacyclic(8, 2, 7, 0, ""));
    case 8: return named(metacyclic(8, 2, 3, 0, ""));
    case 9: return named(metacyclic(8, 2, 7, 4, ""));
    case 10: return named(direct_product(direct_product(z4, z2), z2));
    case 11: return named(direct_product(z2, metacyclic(4, 2, 3, 0, "D8")));
    case 12: return named(direct_product(z2, metacyclic(4, 2, 3, 2, "Q8")));
    case 13: {
      const GroupTable base = direct_product(z4, z2);
      Permutation phi(8);
      for (int x = 0; x < 4; ++x) {
        for (int y = 0; y < 2; ++y) phi[2 * x + y] = 2 * ((x + 2 * y) % 4) + y;
      }
      return named(semidirect_product(base, 2, phi));
    }
    case 14: return named(direct_product(direct_product(z2, z2), direct_product(z2, z2)));
    default: throw std::invalid_argument("small_group_16: id must be in 1..14");
  }
}

bool is_automorphism(const GroupTable& g, std::span<const int> phi) {
  const int v = g.order();
  if (static_cast<int>(phi.size()) != v || !is_permutation_of_range(phi)) return false;
  for (int a = 0; a < v; ++a) {
    for (int b = 0; b < v; ++b) {
      if (phi[g.op(a, b)] != g.op(phi[a], phi[b])) return false;
    }
  }
  return true;
}

std::vector<int> greedy_generators(const GroupTable& g) {
  const int v = g.order();
  std::vector<char> in_span(v, 0);
  in_span[0] = 1;
  std::vector<int> gens;
  for (int x = 1; x < v; ++x) {
    if (in_span[x]) continue;
    gens.push_back(x);
    std::fill(in_span.begin(), in_span.end(), 0);
    in_span[0] = 1;
    std::vector<int> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (int s : gens) {
        const int y = g.op(queue[i], s);
        if (!in_span[y]) {
          in_span[y] = 1;
          queue.push_back(y);
        }
      }
    }
  }
  return gens;
}

namespace {

class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const GroupTable& g) : g_(g), gens_(greedy_generators(g)) {}

  std::vector<Permutation> run() {
    std::vector<int> map(g_.order(), -1);
    map[0] = 0;
    extend(0, map);
    return std::move(found_);
  }

 private:
  // Propagates phi(e + s) = phi(e) + phi(s) over the subgroup generated by
  // gens_[0..count). Returns false on a conflict or a non-injective image.
  bool close(std::vector<int>& map, std::size_t count) const {
    const int v = g_.order();
    std::vector<char> used(v, 0);
    std::vector<int> known;
    for (int x = 0; x < v; ++x) {
      if (map[x] >= 0) {
        if (used[map[x]]) return false;
        used[map[x]] = 1;
        known.push_back(x);
      }
    }
    for (std::size_t i = 0; i < known.size(); ++i) {
      const int e = known[i];
      for (std::size_t j = 0; j < count; ++j) {
        const int s = gens_[j];
        const int f = g_.op(e, s);
        const int img = g_.op(map[e], map[s]);
        if (map[f] < 0) {
          if (used[img]) return false;
          used[img] = 1;
          map[f] = img;
          known.push_back(f);
        } else if (map[f] != img) {
          return false;
        }
      }
    }
    return true;
  }

  void extend(std::size_t level, const std::vector<int>& map) {
    if (level == gens_.size()) {
      found_.push_back(map);
      return;
    }
    const int s = gens_[level];
    const int want = g_.element_order(s);
    std::vector<char> used(g_.order(), 0);
    for (int x : map) {
      if (x >= 0) used[x] = 1;
    }
    for (int c = 1; c < g_.order(); ++c) {
      if (used[c] || g_.element_order(c) != want) continue;
      std::vector<int> next = map;
      next[s] = c;
      if (close(next, level + 1)) extend(level + 1, next);
    }
  }

  const GroupTable& g_;
  std::vector<int> gens_;
  std::vector<Permutation> found_;
};

}  // namespace

std::vector<Permutation> group_automorphisms(const GroupTable& g, int limit) {
  if (g.order() > limit) {
    throw BudgetExceeded("group_automorphisms: order " + std::to_string(g.order()) +
                         " exceeds limit " + std::to_string(limit));
  }
  return AutomorphismSearch(g).run();
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("unknown group name: " + std::string(whole));
  }
  return value;
}

GroupTable single_group_from_name(std::string_view name, std::string_view whole) {
  if (name == "SD16_4") return presented_group_16_4();
  if (name.starts_with("SG16_")) return small_group_16(parse_int(name.substr(5), whole));
  if (name.starts_with("GF")) return finite_field_of_order(parse_int(name.substr(2), whole)).additive_group();
  if (name.starts_with("Z")) {
    const auto spos = name.find('s');
    if (spos == std::string_view::npos) return cyclic_group(parse_int(name.substr(1), whole));
    const int n = parse_int(name.substr(1, spos - 1), whole);
    std::string_view rest = name.substr(spos + 1);
    if (!rest.starts_with("Z")) throw ParseError("unknown group name: " + std::string(whole));
    rest.remove_prefix(1);
    const auto upos = rest.find('_');
    const int m = parse_int(rest.substr(0, upos), whole);
    const int r = upos == std::string_view::npos ? default_action(n, m)
                                                 : parse_int(rest.substr(upos + 1), whole);
    return semidirect_product(n, m, r);
  }
  throw ParseError("unknown group name: " + std::string(whole));
}

}  // namespace

GroupTable group_from_name(std::string_view name) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = name.find('x', start);
    parts.push_back(name.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  try {
    GroupTable g = single_group_from_name(parts[0], name);
    for (std::size_t i = 1; i < parts.size(); ++i) {
      g = direct_product(g, single_group_from_name(parts[i], name));
    }
    return GroupTable(g.rows(), std::string(name));
  } catch (const std::invalid_argument& e) {
    throw ParseError("invalid group name " + std::string(name) + ": " + e.what());
  }
}

}  // namespace pcube

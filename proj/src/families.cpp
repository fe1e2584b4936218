#include "adeq/families.hpp"

#include <algorithm>
#include <map>

namespace adeq {

namespace {

FiniteSemigroup from_table(std::vector<std::vector<int>> table,
                           std::optional<std::vector<std::string>> labels =
                               std::nullopt) {
  return FiniteSemigroup::validate(std::move(table), std::move(labels));
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw ParamOutOfRangeError(msg);
}

}  // namespace

FiniteSemigroup semilattice_chain(int k) {
  require(k >= 1, "semilattice_chain needs k >= 1");
  std::vector<std::vector<int>> t(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) t[a][b] = std::min(a, b);
  return from_table(std::move(t));
}

FiniteSemigroup rectangular_band(int m, int k) {
  require(m >= 1 && k >= 1, "rectangular_band needs m, k >= 1");
  const int n = m * k;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a / k) * k + (b % k);
  return from_table(std::move(t));
}

FiniteSemigroup left_zero(int m) {
  require(m >= 1, "left_zero needs m >= 1");
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t[a][b] = a;
  return from_table(std::move(t));
}

FiniteSemigroup right_zero(int k) {
  require(k >= 1, "right_zero needs k >= 1");
  std::vector<std::vector<int>> t(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) t[a][b] = b;
  return from_table(std::move(t));
}

FiniteSemigroup cyclic_group(int k) {
  require(k >= 1, "cyclic_group needs k >= 1");
  std::vector<std::vector<int>> t(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) t[a][b] = (a + b) % k;
  return from_table(std::move(t));
}

FiniteSemigroup monogenic(int index, int period) {
  require(index >= 1 && period >= 1, "monogenic needs index, period >= 1");
  // Elements a^1 .. a^(index+period-1); exponents at or past the index wrap
  // with the given period.
  const int n = index + period - 1;
  auto reduce = [&](int e) {
    return e < index ? e : index + (e - index) % period;
  };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = reduce((a + 1) + (b + 1)) - 1;
  return from_table(std::move(t));
}

FiniteSemigroup full_transformation_monoid(int n) {
  require(n >= 1 && n <= 3, "full_transformation_monoid supports n <= 3");
  int order = 1;
  for (int i = 0; i < n; ++i) order *= n;
  // Map index -> transformation as base-n digits; composition acts left
  // to right: x (fg) = (x f) g.
  auto image = [&](int f, int x) {
    for (int i = 0; i < x; ++i) f /= n;
    return f % n;
  };
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int f = 0; f < order; ++f)
    for (int g = 0; g < order; ++g) {
      int h = 0, pow = 1;
      for (int x = 0; x < n; ++x) {
        h += image(g, image(f, x)) * pow;
        pow *= n;
      }
      t[f][g] = h;
    }
  return from_table(std::move(t));
}

FiniteSemigroup symmetric_inverse_monoid(int n) {
  require(n >= 1 && n <= 2, "symmetric_inverse_monoid supports n <= 2");
  // Partial injective maps on n points, encoded pointwise with n meaning
  // "undefined".
  std::vector<std::vector<int>> maps;
  std::vector<int> cur(n, 0);
  const int base = n + 1;
  int total = 1;
  for (int i = 0; i < n; ++i) total *= base;
  for (int code = 0; code < total; ++code) {
    std::vector<int> f(n);
    int c = code;
    for (int i = 0; i < n; ++i) {
      f[i] = c % base;
      c /= base;
    }
    bool injective = true;
    for (int i = 0; i < n && injective; ++i)
      for (int j = i + 1; j < n && injective; ++j)
        injective = f[i] == n || f[j] == n || f[i] != f[j];
    if (injective) maps.push_back(f);
  }
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(maps.size()); ++i) index[maps[i]] = i;
  const int order = static_cast<int>(maps.size());
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      std::vector<int> h(n);
      for (int x = 0; x < n; ++x) {
        const int y = maps[a][x];
        h[x] = y == n ? n : maps[b][y];
      }
      t[a][b] = index.at(h);
    }
  return from_table(std::move(t));
}

FiniteSemigroup brandt_b2() {
  // 2x2 matrix units (i,j) plus zero: (i,j)(k,l) = (i,l) if j = k, else 0.
  // Indices: 0 = zero, 1 = (0,0), 2 = (0,1), 3 = (1,0), 4 = (1,1).
  auto pair_of = [](int e) { return std::pair{(e - 1) / 2, (e - 1) % 2}; };
  std::vector<std::vector<int>> t(5, std::vector<int>(5, 0));
  for (int a = 1; a < 5; ++a)
    for (int b = 1; b < 5; ++b) {
      auto [i, j] = pair_of(a);
      auto [k, l] = pair_of(b);
      t[a][b] = j == k ? 1 + 2 * i + l : 0;
    }
  return from_table(std::move(t),
                    std::vector<std::string>{"0", "e11", "e12", "e21", "e22"});
}

FiniteSemigroup direct_product(const FiniteSemigroup& a,
                               const FiniteSemigroup& b) {
  const int na = a.order(), nb = b.order();
  const int n = na * nb;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int p = a.product(x / nb, y / nb);
      const int q = b.product(x % nb, y % nb);
      t[x][y] = p * nb + q;
    }
  return from_table(std::move(t));
}

FiniteSemigroup generate(const std::string& family,
                         const std::vector<int>& params) {
  auto arity = [&](size_t k) {
    require(params.size() == k, family + " expects " + std::to_string(k) +
                                   " parameter(s), got " +
                                   std::to_string(params.size()));
  };
  if (family == "semilattice_chain") {
    arity(1);
    return semilattice_chain(params[0]);
  }
  if (family == "rectangular_band") {
    arity(2);
    return rectangular_band(params[0], params[1]);
  }
  if (family == "left_zero") {
    arity(1);
    return left_zero(params[0]);
  }
  if (family == "right_zero") {
    arity(1);
    return right_zero(params[0]);
  }
  if (family == "cyclic_group") {
    arity(1);
    return cyclic_group(params[0]);
  }
  if (family == "monogenic") {
    arity(2);
    return monogenic(params[0], params[1]);
  }
  if (family == "full_transformation_monoid") {
    arity(1);
    return full_transformation_monoid(params[0]);
  }
  if (family == "symmetric_inverse_monoid") {
    arity(1);
    return symmetric_inverse_monoid(params[0]);
  }
  if (family == "brandt_B2") {
    arity(0);
    return brandt_b2();
  }
  throw ParamOutOfRangeError("unknown family: " + family);
}

}  // namespace adeq

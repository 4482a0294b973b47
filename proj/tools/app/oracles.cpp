#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

namespace projmon::app::oracle {

namespace {

std::int64_t md(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

struct IMatHash {
  std::size_t operator()(const IMat& m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : m) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

std::int64_t factorial(std::int64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::int64_t power(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

struct Space {
  std::size_t n;
  std::int64_t p;
  std::size_t size() const { return static_cast<std::size_t>(power(p, static_cast<std::int64_t>(n))); }
  std::vector<std::int64_t> decode(std::size_t x) const {
    std::vector<std::int64_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::int64_t>(x) % p, x /= static_cast<std::size_t>(p);
    return v;
  }
  std::size_t encode(const std::vector<std::int64_t>& v) const {
    std::size_t x = 0;
    for (std::size_t i = n; i-- > 0;) x = x * static_cast<std::size_t>(p) + static_cast<std::size_t>(md(v[i], p));
    return x;
  }
  std::size_t add(std::size_t a, std::size_t b) const {
    auto u = decode(a), v = decode(b);
    for (std::size_t i = 0; i < n; ++i) u[i] += v[i];
    return encode(u);
  }
  std::size_t apply(const IMat& g, std::size_t a) const {
    auto v = decode(a);
    std::vector<std::int64_t> w(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) w[r] += g[r * n + c] * v[c];
    }
    return encode(w);
  }
};

using Sub = std::vector<std::size_t>;  // sorted member codes

Sub span(const Space& sp, const std::vector<std::size_t>& gens) {
  std::set<std::size_t> s{0};
  for (auto g : gens) {
    std::set<std::size_t> next;
    for (auto x : s) {
      std::size_t y = x;
      for (std::int64_t k = 0; k < sp.p; ++k) {
        next.insert(y);
        y = sp.add(y, g);
      }
    }
    s = std::move(next);
  }
  return {s.begin(), s.end()};
}

std::vector<Sub> all_subspaces(const Space& sp) {
  std::set<Sub> out;
  std::size_t total = sp.size();
  out.insert(Sub{0});
  std::vector<Sub> frontier{Sub{0}};
  while (!frontier.empty()) {
    std::vector<Sub> next;
    for (const auto& w : frontier) {
      for (std::size_t v = 1; v < total; ++v) {
        if (std::binary_search(w.begin(), w.end(), v)) continue;
        std::vector<std::size_t> gens(w.begin(), w.end());
        gens.push_back(v);
        Sub s = span(sp, gens);
        if (out.insert(s).second) next.push_back(s);
      }
    }
    frontier = std::move(next);
  }
  return {out.begin(), out.end()};
}

bool invariant(const Space& sp, const Sub& w, const std::vector<IMat>& gens) {
  for (const auto& g : gens) {
    for (auto x : w) {
      if (!std::binary_search(w.begin(), w.end(), sp.apply(g, x))) return false;
    }
  }
  return true;
}

}  // namespace

IMat mul(const IMat& a, const IMat& b, std::size_t n, std::int64_t p) {
  IMat c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (!a[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] = (c[i * n + j] + a[i * n + k] * b[k * n + j]) % p;
    }
  }
  return c;
}

std::size_t closure_size(const std::vector<IMat>& gens, std::size_t n, std::int64_t p, std::size_t cap) {
  IMat id(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
  std::unordered_set<IMat, IMatHash> seen{id};
  std::vector<IMat> todo{id};
  while (!todo.empty()) {
    IMat x = std::move(todo.back());
    todo.pop_back();
    for (const auto& g : gens) {
      IMat y = mul(x, g, n, p);
      if (seen.insert(y).second) {
        if (seen.size() > cap) return 0;
        todo.push_back(std::move(y));
      }
    }
  }
  return seen.size();
}

std::vector<IMat> type_a_generators(std::size_t n, std::int64_t p) {
  std::vector<IMat> out;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      if (i == j) continue;
      auto image = [&](std::size_t k) { return k == i ? j : k; };
      IMat m(n * n, 0);
      for (std::size_t k = 1; k <= n; ++k) {
        // e_k - e_0 -> e_image(k) - e_image(0); keep coordinates 1..n.
        std::vector<std::int64_t> v(n + 1, 0);
        v[image(k)] += 1;
        v[image(0)] -= 1;
        for (std::size_t r = 1; r <= n; ++r) m[(r - 1) * n + (k - 1)] = md(v[r], p);
      }
      out.push_back(std::move(m));
    }
  }
  return out;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  a = md(a, p);
  for (std::int64_t x = 1; x < p; ++x) {
    if (a * x % p == 1) return x;
  }
  return 0;
}

IMat projection2(std::int64_t k1, std::int64_t k2, std::int64_t l1, std::int64_t l2, std::int64_t p) {
  // v -> phi(v) l with phi(k) = 0, phi(l) = 1.
  std::int64_t d = inv_mod(-k2 * l1 + k1 * l2, p);
  std::int64_t phi1 = md(-k2 * d, p), phi2 = md(k1 * d, p);
  return {md(l1 * phi1, p), md(l1 * phi2, p), md(l2 * phi1, p), md(l2 * phi2, p)};
}

std::int64_t type_a_order(std::int64_t n, bool char2) {
  std::int64_t base = power(n + 1, n + 1) - factorial(n + 1);
  if (!char2) return base - n + 1;
  return base - power(2, n) * binom(n + 1, 2) + binom(n, 2) + 1;
}

std::int64_t type_b_order(std::int64_t n, std::int64_t t) { return power(n * t + 1, n) - power(t, n) * factorial(n) + 1; }

std::int64_t gmpn_order(std::int64_t m, std::int64_t p, std::int64_t n) { return power(m, n) * factorial(n) / p; }

std::int64_t order_mod(std::int64_t a, std::int64_t p) {
  a = md(a, p);
  std::int64_t x = a, k = 1;
  while (x != 1) {
    x = x * a % p;
    if (++k > p) return 0;
  }
  return k;
}

std::size_t strongly_connected_tournaments(std::size_t v) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = i + 1; j < v; ++j) pairs.emplace_back(i, j);
  }
  std::size_t count = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
    std::vector<std::vector<bool>> adj(v, std::vector<bool>(v, false));
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      auto [a, b] = pairs[e];
      if (mask >> e & 1) adj[a][b] = true;
      else adj[b][a] = true;
    }
    for (std::size_t k = 0; k < v; ++k) {
      for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t j = 0; j < v; ++j) {
          if (adj[i][k] && adj[k][j]) adj[i][j] = true;
        }
      }
    }
    bool ok = true;
    for (std::size_t i = 0; i < v && ok; ++i) {
      for (std::size_t j = 0; j < v; ++j) {
        if (i != j && !adj[i][j]) ok = false;
      }
    }
    count += ok;
  }
  return count;
}

namespace {

template <class F>
void for_each_map(std::size_t n, F&& f) {
  std::size_t pts = n + 1;
  std::vector<std::size_t> fn(pts, 0);
  while (true) {
    f(fn);
    std::size_t k = 0;
    while (k < pts && ++fn[k] == pts) fn[k++] = 0;
    if (k == pts) return;
  }
}

}  // namespace

std::size_t non_bijective_maps(std::size_t n) {
  std::size_t count = 0;
  for_each_map(n, [&](const std::vector<std::size_t>& fn) {
    std::set<std::size_t> img(fn.begin(), fn.end());
    count += img.size() < fn.size();
  });
  return count;
}

std::size_t defect_one_idempotents(std::size_t n) {
  std::size_t count = 0;
  for_each_map(n, [&](const std::vector<std::size_t>& fn) {
    std::set<std::size_t> img(fn.begin(), fn.end());
    bool idem = true;
    for (auto x : fn) idem = idem && fn[x] == x;
    count += idem && img.size() + 1 == fn.size();
  });
  return count;
}

std::size_t invariant_proper_subspaces(const std::vector<IMat>& gens, std::size_t n, std::int64_t p) {
  Space sp{n, p};
  std::size_t count = 0;
  for (const auto& w : all_subspaces(sp)) {
    if (w.size() == 1 || w.size() == sp.size()) continue;
    count += invariant(sp, w, gens);
  }
  return count;
}

bool completely_reducible(const std::vector<IMat>& gens, std::size_t n, std::int64_t p) {
  Space sp{n, p};
  auto subs = all_subspaces(sp);
  std::vector<Sub> inv;
  for (const auto& w : subs) {
    if (invariant(sp, w, gens)) inv.push_back(w);
  }
  for (const auto& w : inv) {
    bool has = false;
    for (const auto& u : inv) {
      if (w.size() * u.size() != sp.size()) continue;
      std::vector<std::size_t> common;
      std::set_intersection(w.begin(), w.end(), u.begin(), u.end(), std::back_inserter(common));
      if (common.size() == 1) {
        has = true;
        break;
      }
    }
    if (!has) return false;
  }
  return true;
}

}  // namespace projmon::app::oracle

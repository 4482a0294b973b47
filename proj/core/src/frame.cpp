#include "projmon/frame.hpp"

#include <algorithm>
#include <map>

#include "projmon/error.hpp"

namespace projmon {

namespace {

Vec canonical_line(Vec v) {
  std::size_t j = 0;
  while (j < v.size() && v[j].is_zero()) ++j;
  if (j == v.size()) return v;
  Scalar inv = v[j].inverse();
  for (auto& x : v) x *= inv;
  return v;
}

// Independent vectors first, then one in general position with respect to
// them, then everything else.
std::vector<std::size_t> frame_order(const std::vector<Vec>& vs, const Field& f, std::size_t n) {
  std::vector<std::size_t> order;
  std::vector<bool> taken(vs.size(), false);
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < vs.size() && basis.size() < n; ++i) {
    auto trial = basis;
    trial.push_back(vs[i]);
    if (rref(trial, n).size() == trial.size()) {
      basis.push_back(vs[i]);
      order.push_back(i);
      taken[i] = true;
    }
  }
  if (basis.size() == n) {
    Matrix b = Matrix::from_columns(f, basis);
    Matrix binv = *b.inverse();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (taken[i]) continue;
      Vec c = binv.apply(vs[i]);
      if (std::none_of(c.begin(), c.end(), [](const Scalar& s) { return s.is_zero(); })) {
        order.push_back(i);
        taken[i] = true;
        break;
      }
    }
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!taken[i]) order.push_back(i);
  }
  return order;
}

struct Search {
  const Field& f;
  std::size_t n;
  const FrameItems& src;
  const FrameItems& dst;
  const std::function<bool(const Matrix&)>& visit;
  std::size_t max_nodes;
  FrameSearchStats stats;

  std::vector<std::pair<bool, std::size_t>> order;  // (is_kernel, index)
  std::vector<std::vector<bool>> inc_src, inc_dst;  // [kernel][normal] incidence
  std::map<Vec, std::size_t> dst_k, dst_n;
  std::vector<long> assign_k, assign_n;
  std::vector<bool> used_k, used_n;
  bool stopped = false, capped = false, inconclusive = false;

  void add_rows(std::vector<Vec>& rows, bool kernel, const Vec& s, const Vec& t) const {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        Vec r = zero_vec(f, n * n);
        bool nz = false;
        for (std::size_t c = 0; c < n; ++c) {
          if (kernel) {
            // t_b (f s)_a - t_a (f s)_b = 0
            if (!t[b].is_zero() && !s[c].is_zero()) r[a * n + c] += t[b] * s[c], nz = true;
            if (!t[a].is_zero() && !s[c].is_zero()) r[b * n + c] -= t[a] * s[c], nz = true;
          } else {
            // s_b (f^T t)_a - s_a (f^T t)_b = 0
            if (!s[b].is_zero() && !t[c].is_zero()) r[c * n + a] += s[b] * t[c], nz = true;
            if (!s[a].is_zero() && !t[c].is_zero()) r[c * n + b] -= s[a] * t[c], nz = true;
          }
        }
        if (nz) rows.push_back(std::move(r));
      }
    }
  }

  Matrix to_matrix(const Vec& v) const {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
    }
    return m;
  }

  bool maps_items(const Matrix& m) const {
    auto inv = m.inverse();
    if (!inv) return false;
    for (const auto& k : src.kernels) {
      if (!dst_k.count(canonical_line(m.apply(k)))) return false;
    }
    Matrix it = inv->transpose();
    for (const auto& p : src.normals) {
      if (!dst_n.count(canonical_line(it.apply(p)))) return false;
    }
    return true;
  }

  void candidate(const Matrix& m) {
    if (!maps_items(m)) return;
    ++stats.candidates;
    if (visit(m)) stopped = true;
  }

  void underdetermined(const std::vector<Vec>& ns) {
    ++stats.underdetermined;
    inconclusive = true;
    if (ns.size() != 2) return;
    candidate(to_matrix(ns[0]));
    if (stopped) return;
    candidate(to_matrix(ns[1]));
    for (const auto& z : f.roots_of_unity(f.unity_count())) {
      if (stopped) return;
      Vec v = ns[0];
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += z * ns[1][i];
      candidate(to_matrix(v));
    }
  }

  void dfs(std::size_t depth, std::vector<Vec> rows) {
    if (stopped || capped) return;
    if (++stats.nodes > max_nodes) {
      capped = true;
      return;
    }
    std::vector<std::size_t> piv;
    rows = rref(std::move(rows), n * n, &piv);
    if (rows.size() == n * n) return;
    if (rows.size() + 1 == n * n) {
      candidate(to_matrix(nullspace(rows, f, n * n)[0]));
      return;
    }
    if (depth == order.size()) {
      underdetermined(nullspace(rows, f, n * n));
      return;
    }
    auto [is_kernel, idx] = order[depth];
    const auto& targets = is_kernel ? dst.kernels : dst.normals;
    auto& used = is_kernel ? used_k : used_n;
    for (std::size_t t = 0; t < targets.size(); ++t) {
      if (used[t]) continue;
      bool ok = true;
      if (is_kernel) {
        for (std::size_t l = 0; l < src.normals.size() && ok; ++l) {
          if (assign_n[l] >= 0 && inc_src[idx][l] != inc_dst[t][static_cast<std::size_t>(assign_n[l])]) ok = false;
        }
      } else {
        for (std::size_t k = 0; k < src.kernels.size() && ok; ++k) {
          if (assign_k[k] >= 0 && inc_src[k][idx] != inc_dst[static_cast<std::size_t>(assign_k[k])][t]) ok = false;
        }
      }
      if (!ok) continue;
      std::vector<Vec> next = rows;
      add_rows(next, is_kernel, is_kernel ? src.kernels[idx] : src.normals[idx], targets[t]);
      used[t] = true;
      (is_kernel ? assign_k : assign_n)[idx] = static_cast<long>(t);
      dfs(depth + 1, std::move(next));
      (is_kernel ? assign_k : assign_n)[idx] = -1;
      used[t] = false;
      if (stopped || capped) return;
    }
  }
};

std::vector<std::vector<bool>> incidence(const FrameItems& it) {
  std::vector<std::vector<bool>> inc(it.kernels.size(), std::vector<bool>(it.normals.size()));
  for (std::size_t k = 0; k < it.kernels.size(); ++k) {
    for (std::size_t l = 0; l < it.normals.size(); ++l) inc[k][l] = dot(it.normals[l], it.kernels[k]).is_zero();
  }
  return inc;
}

}  // namespace

FrameItems frame_items(const LineData& d) {
  FrameItems it;
  for (const auto& k : d.kernels) it.kernels.push_back(canonical_line(k.vector()));
  for (const auto& l : d.images) it.normals.push_back(canonical_line(l.normal()));
  return it;
}

FrameSearchResult frame_search(const Field& f, std::size_t n, const FrameItems& src, const FrameItems& dst,
                               const std::function<bool(const Matrix&)>& visit, std::size_t max_nodes,
                               FrameSearchStats* stats) {
  Search s{f, n, src, dst, visit, max_nodes, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}};
  if (src.kernels.size() > dst.kernels.size() || src.normals.size() > dst.normals.size()) {
    if (stats) *stats = s.stats;
    return FrameSearchResult::Exhausted;
  }
  for (auto i : frame_order(src.kernels, f, n)) s.order.emplace_back(true, i);
  for (auto i : frame_order(src.normals, f, n)) s.order.emplace_back(false, i);
  s.inc_src = incidence(src);
  s.inc_dst = incidence(dst);
  for (std::size_t i = 0; i < dst.kernels.size(); ++i) s.dst_k.emplace(canonical_line(dst.kernels[i]), i);
  for (std::size_t i = 0; i < dst.normals.size(); ++i) s.dst_n.emplace(canonical_line(dst.normals[i]), i);
  s.assign_k.assign(src.kernels.size(), -1);
  s.assign_n.assign(src.normals.size(), -1);
  s.used_k.assign(dst.kernels.size(), false);
  s.used_n.assign(dst.normals.size(), false);
  s.dfs(0, {});
  if (stats) *stats = s.stats;
  if (s.stopped) return FrameSearchResult::Stopped;
  if (s.capped) return FrameSearchResult::Capped;
  if (s.inconclusive) return FrameSearchResult::Inconclusive;
  return FrameSearchResult::Exhausted;
}

}  // namespace projmon

#include "projmon/classify.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "projmon/analysis.hpp"
#include "projmon/error.hpp"

namespace projmon {

namespace {

struct Fingerprint {
  std::size_t k, l, c;
};

Fingerprint fingerprint(const LineData& d) {
  std::size_t c = 0;
  for (const auto& k : d.kernels) {
    if (std::binary_search(d.images.begin(), d.images.end(), k)) ++c;
  }
  return {d.kernels.size(), d.images.size(), c};
}

[[noreturn]] void fail(const std::string& why) { throw Error("classification failure: " + why); }

ClassificationTag confirm(ClassificationTag t, const Monoid& m) {
  Monoid inst = canonical_instance(t, m.field(), std::max<std::size_t>(m.size() + 1, 64));
  if (!inst.finite()) fail("canonical instance " + t.name() + " did not close");
  auto wit = equivalent(m, inst);
  if (!wit) fail("no equivalence with " + t.name());
  t.witness = *wit;
  return t;
}

// S from the coordinates of the kernels outside Im(M), in a basis of the two images.
ClassificationTag classify_x(const Monoid& m, bool via_dual) {
  const auto& d = m.lines();
  const Field& f = m.field();
  auto fp = fingerprint(d);
  int i = static_cast<int>(fp.c);
  const Subspace* u1 = &d.images[0];
  const Subspace* u2 = &d.images[1];
  if (i == 1 && !std::binary_search(d.kernels.begin(), d.kernels.end(), *u1)) std::swap(u1, u2);
  auto b = Matrix::from_columns(f, {u1->vector(), u2->vector()}).inverse();
  if (!b) fail("images do not span");
  std::vector<Scalar> s;
  for (const auto& k : d.kernels) {
    if (k == *u1 || k == *u2) continue;
    Vec c = b->apply(k.vector());
    s.push_back(c[1] / c[0]);
  }
  if (s.empty()) fail("no kernel outside the images");
  Scalar u = s.front();
  for (auto& x : s) x = x / u;
  ClassificationTag t{Family::X, {}, i, std::nullopt, via_dual, Matrix::identity(f, 2), fp.k, fp.l, fp.c};
  try {
    auto [cs, ci] = canonicalize_X(s, i);
    t.s = std::move(cs);
    t.index = ci;
  } catch (const Error& e) {
    fail(e.what());
  }
  return confirm(std::move(t), m);
}

ClassificationTag classify_y(const Monoid& m) {
  const auto& d = m.lines();
  const Field& f = m.field();
  auto fp = fingerprint(d);
  std::optional<Subspace> common;
  std::vector<Subspace> ks, ls;
  for (const auto& k : d.kernels) {
    if (std::binary_search(d.images.begin(), d.images.end(), k)) common = k;
    else ks.push_back(k);
  }
  for (const auto& l : d.images) {
    if (!common || !(l == *common)) ls.push_back(l);
  }
  if (!common || ks.size() != 2 || ls.size() != 2) fail("unexpected line configuration");
  std::set<Scalar> found;
  for (int a = 0; a < 2; ++a) {
    for (int bk = 0; bk < 2; ++bk) {
      const Vec& l1 = ls[a].vector();
      const Vec& k1 = ks[bk].vector();
      auto g0 = Matrix::from_columns(f, {l1, k1}).inverse();
      if (!g0) continue;
      Vec co = g0->apply(common->vector());
      Vec c1 = l1, c2 = k1;
      for (auto& x : c1) x = x * co[0];
      for (auto& x : c2) x = x * co[1];
      auto fm = Matrix::from_columns(f, {c1, c2}).inverse();
      if (!fm) continue;
      Vec l2 = fm->apply(ls[1 - a].vector());
      Vec k2 = fm->apply(ks[1 - bk].vector());
      if (l2[0].is_zero() || k2[1].is_zero()) continue;
      Scalar w = l2[1] / l2[0] - f.one();
      Scalar w2 = f.one() - k2[0] / k2[1];
      if (!(w == w2)) continue;
      if (w.is_zero() || w == f.one() || w == -f.one() || !order_of_unity(w)) continue;
      found.insert(canonicalize_Y(w));
    }
  }
  if (found.empty()) fail("no Y parameter fits the line data");
  for (const auto& w : found) {
    ClassificationTag t{Family::Y, {}, 0, w, false, Matrix::identity(f, 2), fp.k, fp.l, fp.c};
    try {
      return confirm(std::move(t), m);
    } catch (const Error&) {
    }
  }
  fail("no Y parameter confirmed");
}

constexpr Fingerprint kZPrints[] = {{3, 3, 3}, {3, 3, 2}, {4, 3, 2}, {4, 3, 3}, {5, 3, 3}, {4, 4, 4}};

}  // namespace

std::string ClassificationTag::name() const {
  std::ostringstream os;
  switch (family) {
    case Family::X: {
      os << "X({";
      for (std::size_t k = 0; k < s.size(); ++k) os << (k ? "," : "") << s[k].to_string();
      os << "}, " << index << ")";
      break;
    }
    case Family::Y: os << "Y(" << w->to_string() << ")"; break;
    case Family::Z: os << "Z(" << index << ")"; break;
  }
  if (via_dual) os << " via dual";
  return os.str();
}

bool ClassificationTag::same_class(const ClassificationTag& o) const {
  return family == o.family && s == o.s && index == o.index && w == o.w && via_dual == o.via_dual;
}

Monoid canonical_instance(const ClassificationTag& t, const Field& f, std::size_t cap) {
  switch (t.family) {
    case Family::X: return make_X(t.s, t.index, f, cap);
    case Family::Y: return make_Y(*t.w, f, cap);
    case Family::Z: return make_Z(t.index, f, cap);
  }
  throw Error("unknown family");
}

std::pair<std::vector<Scalar>, int> canonicalize_X(std::vector<Scalar> s, int i) {
  s = normalize_x_params(std::move(s), i);
  std::set<std::vector<Scalar>> seen{s};
  std::deque<std::vector<Scalar>> todo{s};
  auto push = [&](std::vector<Scalar> t) {
    std::sort(t.begin(), t.end());
    if (seen.insert(t).second) todo.push_back(std::move(t));
  };
  while (!todo.empty()) {
    auto cur = std::move(todo.front());
    todo.pop_front();
    for (const auto& u : cur) {
      std::vector<Scalar> t;
      for (const auto& x : cur) t.push_back(x / u);
      push(std::move(t));
      if (i != 1) {
        std::vector<Scalar> v;
        for (const auto& x : cur) v.push_back(u / x);
        push(std::move(v));
      }
    }
  }
  return {*seen.begin(), i};
}

Scalar canonicalize_Y(const Scalar& w) { return std::min(w, w.inverse()); }

ClassificationTag classify_c2(const Monoid& m) {
  if (m.is_affine() || m.dim() != 2) throw Error("classify_c2 needs a linear monoid on a 2-dimensional space");
  require_finite(m, "classify_c2");
  if (m.size() <= 1) throw Error("classify_c2 needs a non-trivial monoid");
  if (!is_irreducible(m).irreducible) throw Error("classify_c2 needs an irreducible monoid");
  const auto& d = m.lines();
  auto fp = fingerprint(d);
  if (fp.l == 2) return classify_x(m, false);
  if (fp.k == 2) return classify_x(dual(m), true);
  if (fp.k == 3 && fp.l == 3 && fp.c == 1) return classify_y(m);
  const Field& f = m.field();
  for (bool dualize : {false, true}) {
    std::size_t k = dualize ? fp.l : fp.k, l = dualize ? fp.k : fp.l;
    for (int i = 0; i < 6; ++i) {
      const auto& z = kZPrints[i];
      if (z.k != k || z.l != l || z.c != fp.c) continue;
      ClassificationTag t{Family::Z, {}, i, std::nullopt, dualize, Matrix::identity(f, 2), k, l, fp.c};
      try {
        return confirm(std::move(t), dualize ? dual(m) : m);
      } catch (const Error&) {
      }
    }
  }
  fail("fingerprint (" + std::to_string(fp.k) + "," + std::to_string(fp.l) + "," + std::to_string(fp.c) +
       ") matches no family");
}

std::string to_string(R3Target t) { return t == R3Target::A3 ? "A3" : "B3^2"; }

EmbeddingReport classify_r3(const Monoid& m, std::size_t max_nodes) {
  if (m.is_affine() || m.dim() != 3) throw Error("classify_r3 needs a linear monoid on a 3-dimensional space");
  require_finite(m, "classify_r3");
  if (!is_irreducible(m).irreducible) throw Error("classify_r3 needs an irreducible monoid");
  const Field& f = m.field();
  Monoid a3 = make_A(3, f);
  Monoid b32 = make_B(3, 2, f);
  Monoid dm = dual(m);
  bool inconclusive = false;
  for (bool via_dual : {false, true}) {
    const Monoid& src = via_dual ? dm : m;
    for (R3Target target : {R3Target::A3, R3Target::B32}) {
      const Monoid& dst = target == R3Target::A3 ? a3 : b32;
      if (src.lines().kernels.size() > dst.lines().kernels.size() ||
          src.lines().images.size() > dst.lines().images.size()) {
        continue;
      }
      std::optional<Matrix> found;
      FrameSearchStats stats;
      auto res = frame_search(
          f, 3, frame_items(src.lines()), frame_items(dst.lines()),
          [&](const Matrix& g) {
            auto inv = g.inverse();
            if (inv && conjugates_into(g, *inv, src, dst)) {
              found = g;
              return true;
            }
            return false;
          },
          max_nodes, &stats);
      if (found) return {target, via_dual, *found, stats};
      if (res != FrameSearchResult::Exhausted) inconclusive = true;
    }
  }
  throw Error(inconclusive ? "embedding failure (search inconclusive)" : "embedding failure");
}

bool is_tournament(const std::vector<Arc>& arcs, std::size_t vertices) {
  std::set<Arc> s(arcs.begin(), arcs.end());
  if (s.size() != arcs.size()) return false;
  for (const auto& [i, j] : s) {
    if (i == j || i >= vertices || j >= vertices) return false;
  }
  for (std::size_t i = 0; i < vertices; ++i) {
    for (std::size_t j = i + 1; j < vertices; ++j) {
      if (s.count({i, j}) + s.count({j, i}) != 1) return false;
    }
  }
  return true;
}

bool strongly_connected(const std::vector<Arc>& arcs, std::size_t vertices, std::size_t first) {
  if (vertices <= first) return true;
  auto reach = [&](bool forward) {
    std::vector<char> seen(vertices, 0);
    std::vector<std::size_t> stack{first};
    seen[first] = 1;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (const auto& [a, b] : arcs) {
        std::size_t from = forward ? a : b, to = forward ? b : a;
        if (from == v && to < vertices && !seen[to]) {
          seen[to] = 1;
          stack.push_back(to);
        }
      }
    }
    for (std::size_t v = first; v < vertices; ++v) {
      if (!seen[v]) return false;
    }
    return true;
  };
  return reach(true) && reach(false);
}

bool mingen_criterion_A(const std::vector<Arc>& arcs, std::size_t n) {
  if (n < 2) throw Error("criterion requires n >= 2");
  return is_tournament(arcs, n + 1) && strongly_connected(arcs, n + 1);
}

namespace {

// 0: some pair missing, 1: at least one of each pair, 2: exactly one of each.
int b_conditions(const std::vector<BGen>& p, std::size_t n, std::int64_t t, const Field& f, bool& connected) {
  std::vector<char> has_p(n + 1, 0);
  std::map<std::tuple<std::size_t, std::size_t, Scalar>, int> present;
  std::vector<Arc> arcs;
  for (const auto& g : p) {
    if (g.i < 1 || g.i > n) throw Error("generator index out of range");
    if (!g.j) {
      has_p[g.i] = 1;
      continue;
    }
    if (*g.j < 1 || *g.j > n || !g.z) throw Error("generator index out of range");
    present[{g.i, *g.j, *g.z}]++;
    arcs.emplace_back(g.i, *g.j);
  }
  connected = strongly_connected(arcs, n + 1, 1);
  for (std::size_t i = 1; i <= n; ++i) {
    if (!has_p[i]) return 0;
  }
  int result = 2;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      for (const auto& z : f.roots_of_unity(t)) {
        int c = 0;
        auto a = present.find({i, j, z});
        auto b = present.find({j, i, z.inverse()});
        if (a != present.end()) c += a->second;
        if (b != present.end()) c += b->second;
        if (c == 0) return 0;
        if (c > 1) result = 1;
      }
    }
  }
  return result;
}

}  // namespace

bool gen_criterion_B(const std::vector<BGen>& p, std::size_t n, std::int64_t t, const Field& f) {
  bool connected = false;
  int c = b_conditions(p, n, t, f, connected);
  return c >= 1 && connected;
}

bool mingen_criterion_B(const std::vector<BGen>& p, std::size_t n, std::int64_t t, const Field& f) {
  if (n < 3) throw Error("criterion requires n >= 3");
  bool connected = false;
  int c = b_conditions(p, n, t, f, connected);
  return c == 2 && connected;
}

}  // namespace projmon

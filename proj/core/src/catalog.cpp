#include "projmon/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "projmon/error.hpp"

namespace projmon {

namespace {

std::int64_t ipow(std::int64_t b, std::size_t e) {
  std::int64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

std::int64_t factorial(std::size_t n) {
  std::int64_t r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= static_cast<std::int64_t>(i);
  return r;
}

std::int64_t binom2(std::int64_t n) { return n * (n - 1) / 2; }

Monoid closed(Monoid m, std::size_t cap) {
  m.close(cap);
  return m;
}

void sort_unique(std::vector<Scalar>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

// ------------------------------------------------------------------ type A

std::vector<ArcGen> a_generators(std::size_t n, const Field& f) {
  if (n < 1) throw Error("A_n needs n >= 1");
  std::vector<ArcGen> out;
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<Vec> img;
    if (i == 0) {
      for (std::size_t k = 2; k <= n; ++k) {
        Vec v = zero_vec(f, n);
        v[k - 1] = f.one();
        v[0] = -f.one();
        img.push_back(v);
      }
    } else {
      for (std::size_t k = 1; k <= n; ++k) {
        if (k != i) img.push_back(unit_vec(f, n, k - 1));
      }
    }
    Subspace l = Subspace::span(f, n, img);
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == i) continue;
      Vec k = zero_vec(f, n);
      if (i > 0) k[i - 1] += f.one();
      if (j > 0) k[j - 1] -= f.one();
      out.push_back({i, j, prj(Subspace::line(k), l)});
    }
  }
  return out;
}

Monoid make_A(std::size_t n, const Field& f, std::size_t cap) {
  std::vector<Matrix> g;
  for (auto& a : a_generators(n, f)) g.push_back(a.m);
  return closed(Monoid(f, n, std::move(g)), cap);
}

std::vector<ArcGen> aplus_generators(std::size_t n, const Field& f) {
  if (n < 1) throw Error("A_n^+ needs n >= 1");
  TransformationModel tm(n);
  std::vector<ArcGen> out;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      if (i != j) out.push_back({i, j, tm.matrix(tm.elementary(i, j), f)});
    }
  }
  return out;
}

Monoid make_Aplus(std::size_t n, const Field& f, std::size_t cap) {
  std::vector<Matrix> g;
  for (auto& a : aplus_generators(n, f)) g.push_back(a.m);
  return closed(Monoid(f, n + 1, std::move(g)), cap);
}

std::int64_t a_order_formula(std::size_t n, std::int64_t characteristic) {
  if (n < 1) throw Error("A_n needs n >= 1");
  auto m = static_cast<std::int64_t>(n) + 1;
  if (n == 1) return 2;
  if (characteristic == 2) {
    return ipow(m, n + 1) - factorial(n + 1) - ipow(2, n) * binom2(m) + binom2(m - 1) + 1;
  }
  return ipow(m, n + 1) - factorial(n + 1) - static_cast<std::int64_t>(n) + 1;
}

std::int64_t aplus_order_formula(std::size_t n) {
  auto m = static_cast<std::int64_t>(n) + 1;
  return ipow(m, n + 1) - factorial(n + 1) + 1;
}

TransformationModel::TransformationModel(std::size_t n) : n_(n) {
  if (n < 1 || n > 6) throw Error("transformation model supports 1 <= n <= 6");
}

TransformationModel::Fn TransformationModel::identity() const {
  Fn f(n_ + 1);
  std::iota(f.begin(), f.end(), std::uint8_t{0});
  return f;
}

TransformationModel::Fn TransformationModel::compose(const Fn& f, const Fn& g) {
  Fn h(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) h[x] = f[g[x]];
  return h;
}

bool TransformationModel::bijective(const Fn& f) {
  std::vector<bool> hit(f.size(), false);
  for (auto y : f) hit[y] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

TransformationModel::Fn TransformationModel::elementary(std::size_t i, std::size_t j) const {
  Fn f = identity();
  f[i] = static_cast<std::uint8_t>(j);
  return f;
}

Matrix TransformationModel::matrix(const Fn& fn, const Field& field) const {
  Matrix m(field, n_ + 1, n_ + 1);
  for (std::size_t i = 0; i <= n_; ++i) m(fn[i], i) = field.one();
  return m;
}

Matrix TransformationModel::restricted(const Fn& fn, const Field& field) const {
  // f_k = e_k - e_0 goes to e_{fn(k)} - e_{fn(0)} = f_{fn(k)} - f_{fn(0)}
  Matrix m(field, n_, n_);
  for (std::size_t k = 1; k <= n_; ++k) {
    if (fn[k] > 0) m(fn[k] - 1, k - 1) += field.one();
    if (fn[0] > 0) m(fn[0] - 1, k - 1) -= field.one();
  }
  return m;
}

std::vector<TransformationModel::Fn> TransformationModel::all() const {
  std::vector<Fn> out;
  Fn f(n_ + 1, 0);
  while (true) {
    out.push_back(f);
    std::size_t k = n_ + 1;
    while (k > 0) {
      --k;
      if (f[k] < n_) {
        ++f[k];
        break;
      }
      f[k] = 0;
      if (k == 0) return out;
    }
  }
}

std::vector<TransformationModel::Fn> TransformationModel::closure(const std::vector<Fn>& gens) const {
  std::vector<Fn> elems{identity()};
  std::set<Fn> seen{identity()};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      Fn h = compose(elems[i], g);
      if (seen.insert(h).second) elems.push_back(std::move(h));
    }
  }
  return elems;
}

HowieResult howie_check(std::size_t n) {
  if (n < 1 || n > 4) throw Error("howie_check supports 1 <= n <= 4");
  TransformationModel tm(n);
  std::vector<TransformationModel::Fn> idem;
  for (const auto& f : tm.all()) {
    std::size_t moved = 0;
    for (std::size_t x = 0; x <= n; ++x) moved += f[x] != x ? 1 : 0;
    if (moved == 1 && TransformationModel::compose(f, f) == f) idem.push_back(f);
  }
  auto cl = tm.closure(idem);
  std::size_t singular = 0;
  for (const auto& f : tm.all()) singular += TransformationModel::bijective(f) ? 0 : 1;
  std::size_t generated = 0;
  bool holds = true;
  for (const auto& f : cl) {
    if (f == tm.identity()) continue;
    ++generated;
    if (TransformationModel::bijective(f)) holds = false;
  }
  holds = holds && generated == singular;
  return {holds, idem.size(), singular, generated};
}

// ------------------------------------------------------------------ type B

std::string BGen::label() const {
  std::string s = "p_" + std::to_string(i);
  if (j) s += std::to_string(*j) + "^" + z->to_string();
  return s;
}

std::int64_t minimal_cyclotomic_for_roots(std::int64_t t) {
  if (t < 1) throw Error("root order must be positive");
  if (t % 2 == 1) return t;
  if (t % 4 == 2) return t / 2;
  return t;
}

std::vector<BGen> b_generators(std::size_t n, std::int64_t t, const Field& f) {
  if (n < 1) throw Error("B_n^t needs n >= 1");
  if (!f.has_roots_of_unity(t)) {
    throw Error("field " + f.spec().to_string() + " lacks primitive " + std::to_string(t) +
                "th roots of unity; Cyclotomic(" + std::to_string(minimal_cyclotomic_for_roots(t)) + ") has them");
  }
  auto roots = f.roots_of_unity(t);
  std::vector<BGen> out;
  for (std::size_t i = 1; i <= n; ++i) {
    Matrix m = Matrix::identity(f, n);
    m(i - 1, i - 1) = f.zero();
    out.push_back({i, std::nullopt, std::nullopt, m});
  }
  std::set<std::pair<Subspace, Subspace>> seen;
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<Vec> img;
    for (std::size_t k = 1; k <= n; ++k) {
      if (k != i) img.push_back(unit_vec(f, n, k - 1));
    }
    Subspace l = Subspace::span(f, n, img);
    for (std::size_t j = 1; j <= n; ++j) {
      if (j == i) continue;
      for (const auto& z : roots) {
        Vec k = zero_vec(f, n);
        k[i - 1] = f.one();
        k[j - 1] = -z;
        Subspace kl = Subspace::line(k);
        if (!seen.emplace(kl, l).second) continue;
        out.push_back({i, j, z, prj(kl, l)});
      }
    }
  }
  return out;
}

Monoid make_B(std::size_t n, std::int64_t t, const Field& f, std::size_t cap) {
  std::vector<Matrix> g;
  for (auto& b : b_generators(n, t, f)) g.push_back(b.m);
  return closed(Monoid(f, n, std::move(g)), cap);
}

std::int64_t b_order_formula(std::size_t n, std::int64_t t) {
  return ipow(static_cast<std::int64_t>(n) * t + 1, n) - ipow(t, n) * factorial(n) + 1;
}

// ------------------------------------------------------------------ dim 2

Subspace line2(const Scalar& x, const Scalar& y) { return Subspace::line({x, y}); }

std::vector<Matrix> complete_generators(const std::vector<Subspace>& kernels, const std::vector<Subspace>& images) {
  std::vector<Matrix> out;
  for (const auto& k : kernels) {
    for (const auto& l : images) {
      if (!l.contains(k)) out.push_back(prj(k, l));
    }
  }
  return out;
}

Monoid make_from_lines(const std::vector<Subspace>& kernels, const std::vector<Subspace>& images, std::size_t cap) {
  if (kernels.empty() || images.empty()) throw Error("need at least one kernel and one image");
  const Field& f = kernels.front().field();
  std::size_t n = kernels.front().ambient();
  return closed(Monoid(f, n, complete_generators(kernels, images)), cap);
}

Scalar omega(const Field& f) {
  const auto& s = f.spec();
  if (s.kind == FieldSpec::Kind::Cyclotomic && s.param % 3 == 0) return f.zeta().pow(s.param / 3);
  auto w = f.primitive_root(3);
  if (!w) throw Error("field " + s.to_string() + " has no primitive cube root of unity; use C3");
  return *w;
}

std::vector<Scalar> normalize_x_params(std::vector<Scalar> s, int i) {
  if (i < 0 || i > 2) throw Error("X_S^(i) needs i in {0, 1, 2}");
  if (s.empty()) throw Error("X_S^(i) needs 1 in S");
  sort_unique(s);
  Field f = s.front().field();
  if (std::find(s.begin(), s.end(), f.one()) == s.end()) throw Error("X_S^(i) needs 1 in S");
  for (const auto& x : s) {
    if (x.is_zero() || !order_of_unity(x)) throw Error("X_S^(i): " + x.to_string() + " is not a root of unity");
  }
  if (static_cast<std::size_t>(i) + s.size() < 2) throw Error("X_S^(i) needs i + |S| >= 2");
  return s;
}

LineSets x_lines(const std::vector<Scalar>& s0, int i, const Field& f) {
  auto s = normalize_x_params(s0, i);
  LineSets ls;
  for (const auto& x : s) ls.kernels.push_back(line2(f.one(), x));
  if (i >= 1) ls.kernels.push_back(line2(f.one(), f.zero()));
  if (i == 2) ls.kernels.push_back(line2(f.zero(), f.one()));
  ls.images = {line2(f.one(), f.zero()), line2(f.zero(), f.one())};
  return ls;
}

LineSets y_lines(const Scalar& w) {
  Field f = w.field();
  if (w.is_zero() || !order_of_unity(w) || w == f.one() || w == -f.one()) {
    throw Error("Y_w needs a root of unity w other than 1 and -1");
  }
  LineSets ls;
  ls.images = {line2(f.one(), f.one()), line2(f.one(), f.zero()), line2(f.one(), f.one() + w)};
  ls.kernels = {line2(f.one(), f.one()), line2(f.zero(), f.one()), line2(f.one() - w, f.one())};
  return ls;
}

LineSets z_lines(int i, const Field& f) {
  if (i < 0 || i > 5) throw Error("Z^(i) needs i in 0..5");
  Scalar one = f.one(), zero = f.zero();
  std::vector<Subspace> base{line2(one, zero), line2(zero, one), line2(-one, one)};
  LineSets ls{base, base};
  if (i == 0) return ls;
  Scalar w = omega(f);
  Subspace lw = line2(w, one), lw2 = line2(w * w, one);
  switch (i) {
    case 1: ls.kernels = {base[0], base[1], lw}; break;
    case 2: ls.kernels = {base[0], base[1], lw, lw2}; break;
    case 3: ls.kernels.push_back(lw); break;
    case 4: ls.kernels.push_back(lw), ls.kernels.push_back(lw2); break;
    case 5: ls.kernels.push_back(lw), ls.images.push_back(lw); break;
    default: break;
  }
  return ls;
}

Monoid make_X(const std::vector<Scalar>& s, int i, const Field& f, std::size_t cap) {
  auto ls = x_lines(s, i, f);
  return make_from_lines(ls.kernels, ls.images, cap);
}

Monoid make_Y(const Scalar& w, const Field& f, std::size_t cap) {
  if (!(w.field() == f)) throw Error("Y_w parameter is over a different field");
  auto ls = y_lines(w);
  return make_from_lines(ls.kernels, ls.images, cap);
}

Monoid make_Z(int i, const Field& f, std::size_t cap) {
  auto ls = z_lines(i, f);
  return make_from_lines(ls.kernels, ls.images, cap);
}

std::int64_t x_trace_group_order(const std::vector<Scalar>& s, int i) {
  auto v = normalize_x_params(s, i);
  return unity_subgroup_order(v);
}

std::int64_t x_order_formula(const std::vector<Scalar>& s, int i) {
  auto v = normalize_x_params(s, i);
  auto g = unity_subgroup_order(v);
  auto k = static_cast<std::int64_t>(v.size());
  switch (i) {
    case 0: return 2 * k * g + 1;
    case 1: return 2 * (k + 1) * g + 2;
    default: return 2 * (k + 2) * g + 2;
  }
}

std::int64_t y_trace_group_order(const Scalar& w) {
  std::vector<Scalar> g{w, -w};
  return unity_subgroup_order(g);
}

std::int64_t y_order_formula(const Scalar& w) { return 9 * y_trace_group_order(w) + 2; }

std::int64_t z_order(int i) {
  static constexpr std::int64_t orders[] = {20, 56, 74, 74, 92, 98};
  if (i < 0 || i > 5) throw Error("Z^(i) needs i in 0..5");
  return orders[i];
}

Monoid make_shared_line(const Field& f, const std::vector<std::int64_t>& onto, const std::vector<std::int64_t>& from,
                        std::size_t cap) {
  Subspace l = line2(f.one(), f.zero());
  std::vector<Matrix> g;
  for (auto a : onto) g.push_back(prj(l, line2(f.from_int(a), f.one())));
  for (auto b : from) g.push_back(prj(line2(f.from_int(b), f.one()), l));
  return closed(Monoid(f, 2, std::move(g)), cap);
}

Monoid direct_sum(const Monoid& a, const Monoid& b, std::size_t cap) {
  if (a.is_affine() || b.is_affine()) throw Error("direct_sum needs linear monoids");
  if (!(a.field() == b.field())) throw Error("direct_sum needs a common field");
  std::size_t na = a.dim(), nb = b.dim();
  const Field& f = a.field();
  std::vector<Matrix> g;
  for (const auto& x : a.generators()) {
    Matrix m = Matrix::identity(f, na + nb);
    for (std::size_t r = 0; r < na; ++r) {
      for (std::size_t c = 0; c < na; ++c) m(r, c) = x(r, c);
    }
    g.push_back(m);
  }
  for (const auto& x : b.generators()) {
    Matrix m = Matrix::identity(f, na + nb);
    for (std::size_t r = 0; r < nb; ++r) {
      for (std::size_t c = 0; c < nb; ++c) m(na + r, na + c) = x(r, c);
    }
    g.push_back(m);
  }
  return closed(Monoid(f, na + nb, std::move(g), false), cap);
}

// ------------------------------------------------------------------ affine

std::vector<AffineMap> affine_c_generators(std::size_t n, const Field& f) {
  if (n < 1) throw Error("C_n needs n >= 1");
  std::vector<AffineMap> out;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      if (i == j) continue;
      Matrix a = Matrix::identity(f, n);
      Vec b = zero_vec(f, n);
      if (i == 0) {
        // l_j += l_0 = 1 - sum l
        for (std::size_t k = 0; k < n; ++k) a(j - 1, k) -= f.one();
        b[j - 1] = f.one();
      } else {
        if (j > 0) a(j - 1, i - 1) += f.one();
        a(i - 1, i - 1) = f.zero();
      }
      out.emplace_back(a, b);
    }
  }
  return out;
}

Monoid make_affine_C(std::size_t n, const Field& f, std::size_t cap) {
  return closed(Monoid(f, n, affine_c_generators(n, f)), cap);
}

std::vector<AffineMap> affine_d_generators(std::size_t n, std::int64_t t, const std::vector<Scalar>& x, const Field& f) {
  if (n < 1) throw Error("D_n^t(X) needs n >= 1");
  if (!f.has_roots_of_unity(t)) {
    throw Error("field " + f.spec().to_string() + " lacks primitive " + std::to_string(t) + "th roots of unity");
  }
  auto xs = x;
  sort_unique(xs);
  std::vector<AffineMap> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (const auto& z : f.roots_of_unity(t)) {
        Matrix a = Matrix::identity(f, n);
        a(i, i) = f.zero();
        a(i, j) = z;
        out.emplace_back(a, zero_vec(f, n));
      }
    }
    for (const auto& v : xs) {
      Matrix a = Matrix::identity(f, n);
      a(i, i) = f.zero();
      Vec b = zero_vec(f, n);
      b[i] = v;
      out.emplace_back(a, b);
    }
  }
  return out;
}

Monoid make_affine_D(std::size_t n, std::int64_t t, const std::vector<Scalar>& x, const Field& f, std::size_t cap) {
  return closed(Monoid(f, n, affine_d_generators(n, t, x, f)), cap);
}

namespace {

std::vector<Scalar> zx_set(std::int64_t t, const std::vector<Scalar>& x, const Field& f) {
  std::vector<Scalar> out{f.zero()};
  for (const auto& z : f.roots_of_unity(t)) {
    for (const auto& v : x) out.push_back(z * v);
  }
  sort_unique(out);
  return out;
}

}  // namespace

bool in_nt_set(const AffineMap& m, std::int64_t t, const std::vector<Scalar>& x) {
  const Field& f = m.field();
  auto roots = f.roots_of_unity(t);
  auto zx = zx_set(t, x, f);
  const Matrix& a = m.linear_part();
  const Vec& b = m.translation();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::size_t nz = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a(r, c).is_zero()) continue;
      ++nz;
      if (std::find(roots.begin(), roots.end(), a(r, c)) == roots.end()) return false;
    }
    if (nz > 1) return false;
    if (nz == 1 && !b[r].is_zero()) return false;
    if (nz == 0 && !std::binary_search(zx.begin(), zx.end(), b[r])) return false;
  }
  return true;
}

std::int64_t nt_bound(std::size_t n, std::int64_t t, const std::vector<Scalar>& x, const Field& f) {
  auto zx = zx_set(t, x, f);
  return ipow(static_cast<std::int64_t>(n) * t + static_cast<std::int64_t>(zx.size()), n);
}

Monoid make_two_parallel_images(const Field& f, std::size_t cap) {
  Scalar one = f.one(), zero = f.zero();
  Subspace k = Subspace::line({one, zero});
  Subspace l = Subspace::line({zero, one});
  std::vector<AffineMap> g;
  // x = 0 and x = 1, both parallel to L
  g.push_back(affine_prj(k, AffineSubspace::hyperplane({one, zero}, zero)));
  g.push_back(affine_prj(k, AffineSubspace::hyperplane({one, zero}, one)));
  // y = x through the origin
  g.push_back(affine_prj(l, AffineSubspace::hyperplane({one, -one}, zero)));
  return closed(Monoid(f, 2, g), cap);
}

// ------------------------------------------------------------------ infinite fixtures

std::vector<Fixture> infinite_fixtures() {
  Field q;
  auto m = [&](std::vector<std::vector<std::int64_t>> r) { return Matrix::from_ints(q, r); };
  auto half = q.from_rational(Rational(1, 2));
  std::vector<Fixture> out;

  auto pair = [&](std::int64_t a, std::int64_t b) {
    std::vector<Matrix> g{m({{0, 0, 0}, {-a, 1, 0}, {-b, 0, 1}}), m({{1, -1, 0}, {0, 0, 0}, {0, -1, 1}})};
    return g;
  };
  {
    auto g = pair(1, -1);
    out.push_back({"projection pair a=1 b=-1", g, g[0] * g[1], [q](std::int64_t n) {
                     return Matrix::from_ints(q, {{0, 0, 0}, {-1, 1, 0}, {2 * n - 1, -2 * n, 1}});
                   }});
  }
  {
    auto g = pair(1, 0);
    out.push_back({"projection pair a=1 b=0", g, g[0] * g[1], [q](std::int64_t n) {
                     return Matrix::from_ints(q, {{0, 0, 0}, {-1, 1, 0}, {n - 1, -n, 1}});
                   }});
  }
  {
    auto g = pair(2, 0);
    out.push_back({"projection pair a=2 b=0", g, g[0] * g[1], {}});
  }
  {
    std::vector<Matrix> g{m({{0, 0, 0}, {0, 1, 0}, {1, 0, 1}}), m({{1, 1, 0}, {0, 0, 0}, {0, 0, 1}}),
                          m({{1, 0, -1}, {0, 1, -1}, {0, 0, 0}})};
    // x^2 = -2x
    out.push_back({"three projections", g, g[0] * g[1] * g[2], [q](std::int64_t n) {
                     Matrix x = Matrix::from_ints(q, {{0, 0, 0}, {0, 0, 0}, {1, 1, -2}});
                     return x.scaled(q.from_int(-2).pow(n - 1));
                   }});
  }
  {
    std::vector<Matrix> g{m({{0, 0, 0}, {0, 1, 0}, {0, 0, 1}}), m({{1, -1, 0}, {0, 0, 0}, {0, -1, 1}}),
                          m({{0, 0, 0}, {1, 1, 0}, {0, 0, 1}}), m({{1, 0, -1}, {0, 1, -1}, {0, 0, 0}})};
    out.push_back({"four projections", g, g[0] * g[1] * g[2] * g[3], [q](std::int64_t n) {
                     Matrix x = Matrix::from_ints(q, {{0, 0, 0}, {0, 0, 0}, {-1, -1, 2}});
                     return x.scaled(q.from_int(2).pow(n - 1));
                   }});
  }
  {
    // D meets the coordinate axes only at 0, a = 2
    Matrix c = m({{0, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    c(0, 1) = half;
    c(0, 2) = half;
    std::vector<Matrix> g{m({{1, 0, 0}, {0, 0, 0}, {0, 0, 1}}), m({{0, 0, 0}, {-1, 1, 0}, {-1, 0, 1}}), c};
    out.push_back({"fourth image, a=2", g, g[0] * g[1] * g[2], [q, half](std::int64_t n) {
                     Matrix x = Matrix::from_ints(q, {{0, 0, 0}, {0, 0, 0}, {0, -1, 1}});
                     return x.scaled(half.pow(n));
                   }});
  }
  {
    std::vector<Matrix> g{m({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}), m({{1, -1, 0}, {0, 0, 0}, {0, -1, 1}}),
                          m({{1, 0, 0}, {-1, 0, 2}, {0, 0, 1}})};
    out.push_back({"fourth image, a=-1", g, g[0] * g[1] * g[2], [q](std::int64_t n) {
                     Matrix x = Matrix::from_ints(q, {{1, 0, -1}, {0, 0, 0}, {0, 0, 0}});
                     return x.scaled(q.from_int(2).pow(n));
                   }});
  }
  return out;
}

}  // namespace projmon

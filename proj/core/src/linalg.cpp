#include "projmon/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "projmon/error.hpp"

namespace projmon {

// ---------------------------------------------------------------- vectors

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, f.zero()); }

Vec unit_vec(const Field& f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v[i] = f.one();
  return v;
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size() || a.empty()) throw Error("dot: size mismatch");
  Scalar s = a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::string vec_to_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + ")";
}

std::vector<Vec> rref(std::vector<Vec> rows, std::size_t ncols, std::vector<std::size_t>* pivots) {
  std::size_t r = 0;
  std::vector<std::size_t> piv;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    if (!rows[r][c].is_one()) {
      Scalar inv = rows[r][c].inverse();
      for (std::size_t j = c; j < ncols; ++j) {
        if (!rows[r][j].is_zero()) rows[r][j] *= inv;
      }
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Scalar f = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j) {
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
      }
    }
    piv.push_back(c);
    ++r;
  }
  rows.resize(r);
  if (pivots) *pivots = std::move(piv);
  return rows;
}

std::vector<Vec> nullspace(const std::vector<Vec>& rows, const Field& f, std::size_t ncols) {
  std::vector<std::size_t> piv;
  auto r = rref(rows, ncols, &piv);
  std::vector<bool> is_piv(ncols, false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<Vec> out;
  for (std::size_t fc = 0; fc < ncols; ++fc) {
    if (is_piv[fc]) continue;
    Vec v = zero_vec(f, ncols);
    v[fc] = f.one();
    for (std::size_t i = 0; i < r.size(); ++i) v[piv[i]] = -r[i][fc];
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

std::optional<Vec> solve(const Matrix& m, const Vec& rhs) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Vec r = m.row(i);
    r.push_back(rhs[i]);
    rows.push_back(std::move(r));
  }
  std::vector<std::size_t> piv;
  auto red = rref(std::move(rows), m.cols() + 1, &piv);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  Vec x = zero_vec(m.field(), m.cols());
  for (std::size_t i = 0; i < red.size(); ++i) x[piv[i]] = red[i][m.cols()];
  return x;
}

std::size_t combine(std::size_t h, std::size_t v) { return h ^ (v + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2)); }

}  // namespace

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : f_(f), rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<Vec>& rows) {
  if (rows.empty()) throw Error("matrix needs at least one row");
  Matrix m(f, rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw Error("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) {
      if (!(rows[i][j].field() == f)) throw Error("matrix entry from a different field");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::from_ints(Field f, const std::vector<std::vector<std::int64_t>>& rows) {
  std::vector<Vec> r;
  for (const auto& row : rows) {
    Vec v;
    for (auto x : row) v.push_back(f.from_int(x));
    r.push_back(std::move(v));
  }
  return from_rows(f, r);
}

Matrix Matrix::from_columns(Field f, const std::vector<Vec>& cols) { return from_rows(f, cols).transpose(); }

Vec Matrix::row(std::size_t r) const { return Vec(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_); }

Vec Matrix::col(std::size_t c) const {
  Vec v;
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, c));
  return v;
}

std::vector<Vec> Matrix::row_list() const {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix product: shape mismatch");
  if (!(a.f_ == b.f_)) throw Error("matrix product: field mismatch");
  Matrix c(a.f_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      bool one = x.is_one();
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (y.is_zero()) continue;
        c(i, j) += one ? y : x * y;
      }
    }
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix sum: shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix difference: shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
  return c;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix c = *this;
  for (auto& x : c.a_) x *= s;
  return c;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw Error("matrix-vector product: size mismatch");
  Vec out = zero_vec(f_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
    }
  }
  return out;
}

Matrix Matrix::pow(std::int64_t e) const {
  if (e < 0) {
    auto inv = inverse();
    if (!inv) throw Error("negative power of a singular matrix");
    return inv->pow(-e);
  }
  Matrix r = identity(f_, rows_);
  Matrix b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return r;
}

Scalar Matrix::trace() const {
  Scalar t = f_.zero();
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Scalar Matrix::det() const {
  if (!square()) throw Error("determinant of a non-square matrix");
  auto rows = row_list();
  Scalar d = f_.one();
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t p = c;
    while (p < rows_ && rows[p][c].is_zero()) ++p;
    if (p == rows_) return f_.zero();
    if (p != c) {
      std::swap(rows[p], rows[c]);
      d = -d;
    }
    d *= rows[c][c];
    Scalar inv = rows[c][c].inverse();
    for (std::size_t i = c + 1; i < rows_; ++i) {
      if (rows[i][c].is_zero()) continue;
      Scalar f = rows[i][c] * inv;
      for (std::size_t j = c; j < cols_; ++j) rows[i][j] -= f * rows[c][j];
    }
  }
  return d;
}

std::size_t Matrix::rank() const { return rref(row_list(), cols_).size(); }

bool Matrix::invertible() const { return square() && rank() == rows_; }

std::optional<Matrix> Matrix::inverse() const {
  if (!square()) return std::nullopt;
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < rows_; ++i) {
    Vec r = row(i);
    Vec e = unit_vec(f_, rows_, i);
    r.insert(r.end(), e.begin(), e.end());
    rows.push_back(std::move(r));
  }
  std::vector<std::size_t> piv;
  auto red = rref(std::move(rows), 2 * cols_, &piv);
  if (red.size() < rows_ || piv[rows_ - 1] != rows_ - 1) return std::nullopt;
  Matrix inv(f_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = red[i][cols_ + j];
  }
  return inv;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_identity() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
    }
  }
  return true;
}

bool Matrix::is_idempotent() const { return square() && (*this) * (*this) == *this; }

Subspace Matrix::kernel() const {
  return Subspace::span(f_, cols_, nullspace(row_list(), f_, cols_));
}

Subspace Matrix::image() const { return Subspace::span(f_, rows_, transpose().row_list()); }

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::strong_ordering operator<=>(const Matrix& a, const Matrix& b) {
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  for (std::size_t i = 0; i < a.a_.size(); ++i) {
    if (auto c = a.a_[i] <=> b.a_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t Matrix::hash() const {
  std::size_t h = rows_ * 131 + cols_;
  for (const auto& x : a_) h = combine(h, x.hash());
  return h;
}

std::string Matrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) s += ", ";
    s += "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) s += ", ";
      s += (*this)(i, j).to_string();
    }
    s += "]";
  }
  return s + "]";
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(Field f, std::size_t ambient) : f_(f), n_(ambient) {}

Subspace Subspace::span(Field f, std::size_t ambient, std::vector<Vec> vs) {
  Subspace s(f, ambient);
  for (const auto& v : vs) {
    if (v.size() != ambient) throw Error("span: vector of wrong length");
  }
  s.basis_ = rref(std::move(vs), ambient, &s.piv_);
  return s;
}

Subspace Subspace::line(const Vec& v) {
  if (v.empty() || is_zero_vec(v)) throw Error("line spanned by the zero vector");
  return span(v[0].field(), v.size(), {v});
}

Subspace Subspace::whole(Field f, std::size_t ambient) {
  std::vector<Vec> vs;
  for (std::size_t i = 0; i < ambient; ++i) vs.push_back(unit_vec(f, ambient, i));
  return span(f, ambient, std::move(vs));
}

Subspace Subspace::hyperplane(const Vec& phi) {
  if (phi.empty() || is_zero_vec(phi)) throw Error("hyperplane with zero normal");
  const Field f = phi[0].field();
  return span(f, phi.size(), nullspace({phi}, f, phi.size()));
}

const Vec& Subspace::vector() const {
  if (basis_.size() != 1) throw Error("vector() needs a line, got dimension " + std::to_string(basis_.size()));
  return basis_[0];
}

Vec Subspace::reduce(const Vec& v) const {
  Vec r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (r[piv_[i]].is_zero()) continue;
    Scalar c = r[piv_[i]];
    for (std::size_t j = 0; j < n_; ++j) {
      if (!basis_[i][j].is_zero()) r[j] -= c * basis_[i][j];
    }
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& u) const {
  if (u.dim() > dim()) return false;
  return std::all_of(u.basis_.begin(), u.basis_.end(), [&](const Vec& v) { return contains(v); });
}

Subspace Subspace::sum(const Subspace& u) const {
  std::vector<Vec> vs = basis_;
  vs.insert(vs.end(), u.basis_.begin(), u.basis_.end());
  return span(f_, n_, std::move(vs));
}

Subspace Subspace::annihilator() const { return span(f_, n_, nullspace(basis_, f_, n_)); }

Subspace Subspace::intersect(const Subspace& u) const {
  return annihilator().sum(u.annihilator()).annihilator();
}

Subspace Subspace::image_under(const Matrix& m) const {
  std::vector<Vec> vs;
  for (const auto& b : basis_) vs.push_back(m.apply(b));
  return span(f_, m.rows(), std::move(vs));
}

Vec Subspace::normal() const {
  if (dim() + 1 != n_) throw Error("normal() needs a hyperplane");
  return annihilator().vector();
}

bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.basis_ == b.basis_; }

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.basis_.size() <=> b.basis_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.basis_.size(); ++i) {
    for (std::size_t j = 0; j < a.n_; ++j) {
      if (auto c = a.basis_[i][j] <=> b.basis_[i][j]; c != 0) return c;
    }
  }
  return std::strong_ordering::equal;
}

std::size_t Subspace::hash() const {
  std::size_t h = n_ * 31 + basis_.size();
  for (const auto& v : basis_) {
    for (const auto& x : v) h = combine(h, x.hash());
  }
  return h;
}

std::string Subspace::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) s += ", ";
    s += vec_to_string(basis_[i]);
  }
  return s + ">";
}

// ---------------------------------------------------------------- projections

Matrix prj(const Subspace& k, const Subspace& l) {
  std::size_t n = k.ambient();
  if (k.dim() != 1 || l.dim() + 1 != n || l.ambient() != n) throw Error("prj needs a line and a hyperplane");
  if (l.contains(k)) throw Error("degenerate projection axis");
  const Vec& kv = k.vector();
  Vec phi = l.normal();
  Scalar inv = dot(phi, kv).inverse();
  Matrix p = Matrix::identity(k.field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!kv[i].is_zero() && !phi[j].is_zero()) p(i, j) -= kv[i] * phi[j] * inv;
    }
  }
  return p;
}

Subspace kernel_line(const Matrix& m) {
  Subspace k = m.kernel();
  if (k.dim() != 1) throw Error("kernel_line: nullity is " + std::to_string(k.dim()) + ", expected 1");
  return k;
}

Subspace image_space(const Matrix& m) { return m.image(); }

MapClass classify_map(const Matrix& m) {
  if (!m.square()) throw Error("classify_map needs a square matrix");
  std::size_t n = m.rows();
  if (m.is_identity()) return {MapKind::Identity, 1, false};
  if (m.invertible()) {
    Matrix d = m - Matrix::identity(m.field(), n);
    if (d.rank() != 1) return {MapKind::InvertibleOther, std::nullopt, false};
    MapClass c{MapKind::Reflection, std::nullopt, (d * d).is_zero()};
    std::int64_t limit = m.field().unity_count() * static_cast<std::int64_t>(n);
    if (c.transvection && m.field().characteristic() > 0) limit = std::max(limit, m.field().characteristic());
    Matrix p = m;
    for (std::int64_t k = 1; k <= limit; ++k) {
      if (p.is_identity()) {
        c.order = k;
        break;
      }
      p = p * m;
    }
    return c;
  }
  if (m.rank() + 1 == n && m.is_idempotent()) return {MapKind::Projection, std::nullopt, false};
  return {MapKind::RankDeficientOther, std::nullopt, false};
}

std::string to_string(MapKind k) {
  switch (k) {
    case MapKind::Identity: return "identity";
    case MapKind::Reflection: return "reflection";
    case MapKind::Projection: return "projection";
    case MapKind::RankDeficientOther: return "rank-deficient";
    case MapKind::InvertibleOther: return "invertible";
  }
  return "?";
}

// ---------------------------------------------------------------- affine

AffineMap::AffineMap(Matrix a, Vec b) : a_(std::move(a)), b_(std::move(b)) {
  if (!a_.square() || b_.size() != a_.rows()) throw Error("affine map: shape mismatch");
}

AffineMap AffineMap::identity(Field f, std::size_t n) { return {Matrix::identity(f, n), zero_vec(f, n)}; }

AffineMap AffineMap::linear(Matrix a) {
  Vec b = zero_vec(a.field(), a.rows());
  return {std::move(a), std::move(b)};
}

AffineMap AffineMap::from_augmented(const Matrix& m) {
  std::size_t n = m.rows() - 1;
  Matrix a(m.field(), n, n);
  Vec b;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    b.push_back(m(i, n));
  }
  return {std::move(a), std::move(b)};
}

AffineMap AffineMap::compose(const AffineMap& other) const {
  Vec b = a_.apply(other.b_);
  for (std::size_t i = 0; i < b.size(); ++i) b[i] += b_[i];
  return {a_ * other.a_, std::move(b)};
}

Vec AffineMap::apply(const Vec& v) const {
  Vec r = a_.apply(v);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b_[i];
  return r;
}

Matrix AffineMap::to_augmented() const {
  std::size_t n = dim();
  Matrix m(field(), n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a_(i, j);
    m(i, n) = b_[i];
  }
  m(n, n) = field().one();
  return m;
}

bool AffineMap::is_projection() const { return a_.rank() + 1 == dim() && compose(*this) == *this; }

AffineSubspace AffineMap::image() const {
  if (!(compose(*this) == *this)) throw Error("image() needs an idempotent affine map");
  Matrix d = a_ - Matrix::identity(field(), dim());
  Vec rhs;
  for (const auto& x : b_) rhs.push_back(-x);
  auto p = solve(d, rhs);
  if (!p) throw Error("idempotent affine map without fixed points");
  return {*p, d.kernel()};
}

std::string AffineMap::to_string() const { return "{A: " + a_.to_string() + ", b: " + vec_to_string(b_) + "}"; }

Matrix linear_part(const AffineMap& m) { return m.linear_part(); }

Subspace affine_kernel(const AffineMap& p) {
  if (!p.is_projection()) throw Error("affine_kernel: not an affine projection");
  return kernel_line(p.linear_part());
}

AffineSubspace::AffineSubspace(Vec point, Subspace direction) : p_(direction.reduce(point)), d_(std::move(direction)) {}

AffineSubspace AffineSubspace::hyperplane(const Vec& phi, const Scalar& c) {
  Subspace d = Subspace::hyperplane(phi);
  std::size_t j = 0;
  while (phi[j].is_zero()) ++j;
  Vec p = zero_vec(c.field(), phi.size());
  p[j] = c / phi[j];
  return {std::move(p), std::move(d)};
}

bool AffineSubspace::contains(const Vec& v) const {
  Vec diff = v;
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= p_[i];
  return d_.contains(diff);
}

std::strong_ordering operator<=>(const AffineSubspace& a, const AffineSubspace& b) {
  if (auto c = a.d_ <=> b.d_; c != 0) return c;
  for (std::size_t i = 0; i < a.p_.size(); ++i) {
    if (auto c = a.p_[i] <=> b.p_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string AffineSubspace::to_string() const { return vec_to_string(p_) + " + " + d_.to_string(); }

AffineMap affine_prj(const Subspace& k, const AffineSubspace& h) {
  std::size_t n = k.ambient();
  if (h.direction().dim() + 1 != n) throw Error("affine_prj needs an affine hyperplane");
  Matrix a = prj(k, h.direction());
  Vec phi = h.direction().normal();
  Scalar c = dot(phi, h.point());
  const Vec& kv = k.vector();
  Scalar s = c / dot(phi, kv);
  Vec b;
  for (const auto& x : kv) b.push_back(x * s);
  return {std::move(a), std::move(b)};
}

}  // namespace projmon

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "projmon/field.hpp"

namespace projmon {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, std::size_t n);
Vec unit_vec(const Field& f, std::size_t n, std::size_t i);
Scalar dot(const Vec& a, const Vec& b);
bool is_zero_vec(const Vec& v);
std::string vec_to_string(const Vec& v);

/// Reduced row echelon form of the given rows; zero rows are dropped.
/// `pivots` (optional) receives the pivot column of each returned row.
std::vector<Vec> rref(std::vector<Vec> rows, std::size_t ncols, std::vector<std::size_t>* pivots = nullptr);

/// Basis of {x : R x = 0} for the row system R (each row has ncols entries).
std::vector<Vec> nullspace(const std::vector<Vec>& rows, const Field& f, std::size_t ncols);

class Subspace;

class Matrix {
 public:
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(Field f, std::size_t n);
  static Matrix from_rows(Field f, const std::vector<Vec>& rows);
  static Matrix from_ints(Field f, const std::vector<std::vector<std::int64_t>>& rows);
  static Matrix from_columns(Field f, const std::vector<Vec>& cols);

  [[nodiscard]] const Field& field() const { return f_; }
  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool square() const { return rows_ == cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  [[nodiscard]] Vec row(std::size_t r) const;
  [[nodiscard]] Vec col(std::size_t c) const;
  [[nodiscard]] std::vector<Vec> row_list() const;

  [[nodiscard]] Matrix transpose() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  [[nodiscard]] Matrix scaled(const Scalar& s) const;
  [[nodiscard]] Vec apply(const Vec& v) const;
  [[nodiscard]] Matrix pow(std::int64_t e) const;

  [[nodiscard]] Scalar trace() const;
  [[nodiscard]] Scalar det() const;
  [[nodiscard]] std::size_t rank() const;
  [[nodiscard]] bool invertible() const;
  [[nodiscard]] std::optional<Matrix> inverse() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] bool is_idempotent() const;
  /// Null space {x : Mx = 0} and column space.
  [[nodiscard]] Subspace kernel() const;
  [[nodiscard]] Subspace image() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend std::strong_ordering operator<=>(const Matrix& a, const Matrix& b);
  [[nodiscard]] std::size_t hash() const;
  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] const std::vector<Scalar>& entries() const { return a_; }

 private:
  Field f_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

struct MatrixHash {
  std::size_t operator()(const Matrix& m) const { return m.hash(); }
};

/// Linear subspace of F^n held by its RREF basis.
class Subspace {
 public:
  Subspace(Field f, std::size_t ambient);  // zero subspace
  static Subspace span(Field f, std::size_t ambient, std::vector<Vec> vs);
  static Subspace line(const Vec& v);
  static Subspace whole(Field f, std::size_t ambient);
  /// Hyperplane {x : phi . x = 0}.
  static Subspace hyperplane(const Vec& phi);

  [[nodiscard]] const Field& field() const { return f_; }
  [[nodiscard]] std::size_t ambient() const { return n_; }
  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] const std::vector<Vec>& basis() const { return basis_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const { return piv_; }
  [[nodiscard]] bool is_zero() const { return basis_.empty(); }
  [[nodiscard]] bool is_whole() const { return basis_.size() == n_; }
  /// Spanning vector of a line (its RREF row).
  [[nodiscard]] const Vec& vector() const;

  [[nodiscard]] bool contains(const Vec& v) const;
  [[nodiscard]] bool contains(const Subspace& u) const;
  [[nodiscard]] Subspace sum(const Subspace& u) const;
  [[nodiscard]] Subspace intersect(const Subspace& u) const;
  /// Annihilator under the standard pairing, as a subspace of F^n.
  [[nodiscard]] Subspace annihilator() const;
  [[nodiscard]] Subspace image_under(const Matrix& m) const;
  /// Normal covector of a hyperplane.
  [[nodiscard]] Vec normal() const;
  /// Reduce v modulo this subspace (zero at the pivot columns).
  [[nodiscard]] Vec reduce(const Vec& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);
  [[nodiscard]] std::size_t hash() const;
  [[nodiscard]] std::string to_string() const;

 private:
  Field f_;
  std::size_t n_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> piv_;
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const { return s.hash(); }
};

/// Projection with kernel K (a line) and image L (a hyperplane).
Matrix prj(const Subspace& k, const Subspace& l);

Subspace kernel_line(const Matrix& m);
Subspace image_space(const Matrix& m);

enum class MapKind { Identity, Reflection, Projection, RankDeficientOther, InvertibleOther };

struct MapClass {
  MapKind kind;
  std::optional<std::int64_t> order;  // reflections of finite order
  bool transvection = false;
};

MapClass classify_map(const Matrix& m);
std::string to_string(MapKind k);

class AffineSubspace;

/// v -> A v + b.
class AffineMap {
 public:
  AffineMap(Matrix a, Vec b);
  static AffineMap identity(Field f, std::size_t n);
  static AffineMap linear(Matrix a);
  /// Inverse of to_augmented.
  static AffineMap from_augmented(const Matrix& m);

  [[nodiscard]] const Matrix& linear_part() const { return a_; }
  [[nodiscard]] const Vec& translation() const { return b_; }
  [[nodiscard]] std::size_t dim() const { return a_.rows(); }
  [[nodiscard]] const Field& field() const { return a_.field(); }

  /// (this o other)(v) = this(other(v)).
  [[nodiscard]] AffineMap compose(const AffineMap& other) const;
  [[nodiscard]] Vec apply(const Vec& v) const;
  /// (n+1)x(n+1) matrix [[A, b], [0, 1]].
  [[nodiscard]] Matrix to_augmented() const;
  [[nodiscard]] bool is_projection() const;
  /// Fixed-point set of an idempotent map.
  [[nodiscard]] AffineSubspace image() const;

  friend bool operator==(const AffineMap& a, const AffineMap& b) { return a.a_ == b.a_ && a.b_ == b.b_; }
  [[nodiscard]] std::string to_string() const;

 private:
  Matrix a_;
  Vec b_;
};

Matrix linear_part(const AffineMap& m);
Subspace affine_kernel(const AffineMap& p);

/// point + direction, with the point reduced modulo the direction.
class AffineSubspace {
 public:
  AffineSubspace(Vec point, Subspace direction);
  /// {x : phi . x = c}.
  static AffineSubspace hyperplane(const Vec& phi, const Scalar& c);

  [[nodiscard]] const Vec& point() const { return p_; }
  [[nodiscard]] const Subspace& direction() const { return d_; }
  [[nodiscard]] bool contains(const Vec& v) const;
  [[nodiscard]] bool parallel(const AffineSubspace& o) const { return d_ == o.d_; }

  friend bool operator==(const AffineSubspace& a, const AffineSubspace& b) { return a.p_ == b.p_ && a.d_ == b.d_; }
  friend std::strong_ordering operator<=>(const AffineSubspace& a, const AffineSubspace& b);
  [[nodiscard]] std::string to_string() const;

 private:
  Vec p_;
  Subspace d_;
};

/// Affine projection with kernel direction K onto the affine hyperplane H.
AffineMap affine_prj(const Subspace& k, const AffineSubspace& h);

}  // namespace projmon

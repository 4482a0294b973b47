#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "projmon/linalg.hpp"
#include "projmon/monoid.hpp"

namespace projmon {

// ------------------------------------------------------------------ type A

/// p_ij on V = {sum of coordinates zero} in F^{n+1}, written in the basis
/// f_k = e_k - e_0 (k = 1..n).
struct ArcGen {
  std::size_t i, j;  // 0..n
  Matrix m;
};

std::vector<ArcGen> a_generators(std::size_t n, const Field& f);
Monoid make_A(std::size_t n, const Field& f, std::size_t cap = kDefaultCap);

/// p_ij^+ on F^{n+1}: e_i -> e_j, other basis vectors fixed.
std::vector<ArcGen> aplus_generators(std::size_t n, const Field& f);
Monoid make_Aplus(std::size_t n, const Field& f, std::size_t cap = kDefaultCap);

/// |A_n| from the closed formulas (characteristic 2 has its own).
std::int64_t a_order_formula(std::size_t n, std::int64_t characteristic);
std::int64_t aplus_order_formula(std::size_t n);

/// Functions {0..n} -> {0..n}, with the matrix model e_i -> e_{f(i)}.
class TransformationModel {
 public:
  using Fn = std::vector<std::uint8_t>;

  explicit TransformationModel(std::size_t n);
  [[nodiscard]] std::size_t points() const { return n_ + 1; }
  [[nodiscard]] Fn identity() const;
  /// (f o g)(x) = f(g(x)).
  [[nodiscard]] static Fn compose(const Fn& f, const Fn& g);
  [[nodiscard]] static bool bijective(const Fn& f);
  /// e_i -> e_j, everything else fixed.
  [[nodiscard]] Fn elementary(std::size_t i, std::size_t j) const;
  [[nodiscard]] Matrix matrix(const Fn& f, const Field& field) const;
  /// Action of matrix(f) restricted to the sum-zero subspace, in the f-basis.
  [[nodiscard]] Matrix restricted(const Fn& f, const Field& field) const;
  /// Every function, in lexicographic order.
  [[nodiscard]] std::vector<Fn> all() const;
  /// Closure of a set of functions under composition (identity included).
  [[nodiscard]] std::vector<Fn> closure(const std::vector<Fn>& gens) const;

 private:
  std::size_t n_;
};

struct HowieResult {
  bool holds;
  std::size_t idempotents;     // defect-1 idempotents, n(n+1)
  std::size_t singular_count;  // (n+1)^(n+1) - (n+1)!
  std::size_t generated;       // non-identity part of the closure
};

/// Defect-1 idempotents of {0..n} generate exactly the non-bijective maps.
HowieResult howie_check(std::size_t n);

// ------------------------------------------------------------------ type B

/// p_i (kernel e_i, image the other coordinates) or p_ij^z (kernel
/// <e_i - z e_j>, same image).  Indices are 1-based as in the usual notation.
struct BGen {
  std::size_t i;
  std::optional<std::size_t> j;
  std::optional<Scalar> z;
  Matrix m;

  [[nodiscard]] std::string label() const;
};

/// Smallest cyclotomic field containing the t-th roots of unity.
std::int64_t minimal_cyclotomic_for_roots(std::int64_t t);

std::vector<BGen> b_generators(std::size_t n, std::int64_t t, const Field& f);
Monoid make_B(std::size_t n, std::int64_t t, const Field& f, std::size_t cap = kDefaultCap);
std::int64_t b_order_formula(std::size_t n, std::int64_t t);

// ------------------------------------------------------------------ dim 2

/// Column vector (x, y) as used in line data <x|y>.
Subspace line2(const Scalar& x, const Scalar& y);

/// Generators prj(K, L) over all K, L with K not inside L.
std::vector<Matrix> complete_generators(const std::vector<Subspace>& kernels, const std::vector<Subspace>& images);
Monoid make_from_lines(const std::vector<Subspace>& kernels, const std::vector<Subspace>& images,
                       std::size_t cap = kDefaultCap);

struct LineSets {
  std::vector<Subspace> kernels;
  std::vector<Subspace> images;
};

/// Primitive cube root: x^(N/3) in C<N> with 3 | N, otherwise any primitive one.
Scalar omega(const Field& f);

/// S must contain 1, consist of roots of unity, and satisfy i + |S| >= 2.
std::vector<Scalar> normalize_x_params(std::vector<Scalar> s, int i);
LineSets x_lines(const std::vector<Scalar>& s, int i, const Field& f);
LineSets y_lines(const Scalar& w);
LineSets z_lines(int i, const Field& f);

Monoid make_X(const std::vector<Scalar>& s, int i, const Field& f, std::size_t cap = kDefaultCap);
Monoid make_Y(const Scalar& w, const Field& f, std::size_t cap = kDefaultCap);
Monoid make_Z(int i, const Field& f, std::size_t cap = kDefaultCap);

/// Trace group orders: <S> for X_S^(i), <w, -w> for Y_w.
std::int64_t x_trace_group_order(const std::vector<Scalar>& s, int i);
std::int64_t x_order_formula(const std::vector<Scalar>& s, int i);
std::int64_t y_trace_group_order(const Scalar& w);
std::int64_t y_order_formula(const Scalar& w);
std::int64_t z_order(int i);

/// Dimension-2 monoid whose projections all have <e1> as kernel or image:
/// kernel <e1> onto <(a,1)> for each a in onto, and kernel <(b,1)> onto <e1>
/// for each b in from.
Monoid make_shared_line(const Field& f, const std::vector<std::int64_t>& onto, const std::vector<std::int64_t>& from,
                        std::size_t cap = kDefaultCap);

/// Generators of a and b placed block-diagonally.
Monoid direct_sum(const Monoid& a, const Monoid& b, std::size_t cap = kDefaultCap);

// ------------------------------------------------------------------ affine

/// q_ij on the chart (l_1..l_n) of {sum l_k e_k : sum l_k = 1}.
std::vector<AffineMap> affine_c_generators(std::size_t n, const Field& f);
Monoid make_affine_C(std::size_t n, const Field& f, std::size_t cap = kDefaultCap);

std::vector<AffineMap> affine_d_generators(std::size_t n, std::int64_t t, const std::vector<Scalar>& x, const Field& f);
Monoid make_affine_D(std::size_t n, std::int64_t t, const std::vector<Scalar>& x, const Field& f,
                     std::size_t cap = kDefaultCap);

/// Membership in N^t(X): each row of A has at most one non-zero entry, lying
/// in the t-th roots; a zero row k needs b_k in (roots * X) u {0}, otherwise b_k = 0.
bool in_nt_set(const AffineMap& m, std::int64_t t, const std::vector<Scalar>& x);
/// |N^t(X)| upper bound (nt + |ZX u {0}|)^n.
std::int64_t nt_bound(std::size_t n, std::int64_t t, const std::vector<Scalar>& x, const Field& f);

/// Two affine lines parallel to L with kernel K, plus a projection with
/// kernel L onto a line J not parallel to K (dimension 2).
Monoid make_two_parallel_images(const Field& f, std::size_t cap = kDefaultCap);

// ------------------------------------------------------------------ infinite fixtures

struct Fixture {
  std::string name;
  std::vector<Matrix> generators;
  /// Product of generators whose powers are all distinct.
  Matrix product;
  /// Closed form of product^k, when known.
  std::function<Matrix(std::int64_t)> power_formula;
};

std::vector<Fixture> infinite_fixtures();

}  // namespace projmon

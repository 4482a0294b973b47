#include <catch2/catch_amalgamated.hpp>

#include "projmon/error.hpp"
#include "projmon/linalg.hpp"

using namespace projmon;

namespace {
Field q;
Vec v(std::initializer_list<std::int64_t> xs) {
  Vec out;
  for (auto x : xs) out.push_back(q.from_int(x));
  return out;
}
}  // namespace

TEST_CASE("projection from kernel and image") {
  Matrix p = prj(Subspace::line(v({1, 1})), Subspace::line(v({1, 0})));
  CHECK(p == Matrix::from_ints(q, {{1, -1}, {0, 0}}));
  Matrix d = prj(Subspace::line(v({1, 0, 0})), Subspace::span(q, 3, {v({0, 1, 0}), v({0, 0, 1})}));
  CHECK(d == Matrix::from_ints(q, {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK_THROWS_AS(prj(Subspace::line(v({1, 0})), Subspace::line(v({1, 0}))), Error);
}

TEST_CASE("map classification") {
  auto r = classify_map(Matrix::from_ints(q, {{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}));
  CHECK(r.kind == MapKind::Reflection);
  CHECK(r.order == 2);
  CHECK(classify_map(Matrix::from_ints(q, {{1, -1}, {0, 0}})).kind == MapKind::Projection);
  auto t = classify_map(Matrix::from_ints(q, {{1, 1}, {0, 1}}));
  CHECK(t.kind == MapKind::Reflection);
  CHECK(t.transvection);
  CHECK(classify_map(Matrix::identity(q, 2)).kind == MapKind::Identity);
  CHECK(classify_map(Matrix::from_ints(q, {{0, 0}, {0, 0}})).kind == MapKind::RankDeficientOther);
}

TEST_CASE("kernel line and image of a projection") {
  Matrix d = Matrix::from_ints(q, {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(kernel_line(d) == Subspace::line(v({1, 0, 0})));
  CHECK(image_space(d) == Subspace::span(q, 3, {v({0, 1, 0}), v({0, 0, 1})}));
  Matrix p = Matrix::from_ints(q, {{1, -1}, {0, 0}});
  CHECK(kernel_line(p) == Subspace::line(v({1, 1})));
  CHECK(image_space(p) == Subspace::line(v({1, 0})));
  CHECK_THROWS_AS(kernel_line(Matrix::identity(q, 2)), Error);
}

TEST_CASE("subspace lattice operations") {
  auto a = Subspace::line(v({1, 0, 0}));
  auto b = Subspace::line(v({0, 1, 0}));
  auto ab = a.sum(b);
  CHECK(ab.dim() == 2);
  CHECK(ab == Subspace::hyperplane(v({0, 0, 1})));
  CHECK(a.intersect(b).is_zero());
  CHECK(ab.annihilator() == Subspace::line(v({0, 0, 1})));
  CHECK(Subspace::span(q, 2, {v({2, 4})}) == Subspace::line(v({1, 2})));
}

TEST_CASE("matrix inverse and determinant") {
  Matrix m = Matrix::from_ints(q, {{2, 1}, {7, 4}});
  CHECK(m.det() == q.one());
  auto inv = m.inverse();
  REQUIRE(inv);
  CHECK((m * *inv).is_identity());
  CHECK_FALSE(Matrix::from_ints(q, {{1, 2}, {2, 4}}).inverse().has_value());
}

TEST_CASE("affine maps") {
  AffineMap t(Matrix::identity(q, 2), v({1, 0}));
  CHECK(linear_part(t).is_identity());
  Matrix a = Matrix::from_ints(q, {{1, -1}, {0, 0}});
  CHECK(linear_part(AffineMap::linear(a)) == a);
  CHECK(affine_kernel(AffineMap::linear(a)) == kernel_line(a));
  CHECK_THROWS_AS(affine_kernel(t), Error);

  // image x1 = 1, kernel direction e1
  AffineMap p = affine_prj(Subspace::line(v({1, 0})), AffineSubspace::hyperplane(v({1, 0}), q.one()));
  CHECK(p.is_projection());
  CHECK(affine_kernel(p) == Subspace::line(v({1, 0})));

  AffineMap p2 = affine_prj(Subspace::line(v({1, 1})), AffineSubspace::hyperplane(v({0, 1}), q.from_int(2)));
  CHECK(linear_part(p.compose(p2)) == linear_part(p) * linear_part(p2));
  CHECK(AffineMap::from_augmented(p.to_augmented()) == p);
}

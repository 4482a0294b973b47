#include <catch2/catch_amalgamated.hpp>

#include "projmon/catalog.hpp"
#include "projmon/normalizer.hpp"

using namespace projmon;

TEST_CASE("normalising reflections") {
  Field q;
  Field c3(FieldSpec::cyclotomic(3));
  CHECK(normalizing_reflections(make_Z(1, c3)).group_order == 1);
  auto a2 = normalizing_reflections(make_A(2, q));
  CHECK(a2.group_order == 12);
  CHECK(a2.caveat == kNormalizerCaveat);
  CHECK(normalizing_reflections(make_A(2, c3)).group_order == 36);
  CHECK(normalizing_reflections(make_Z(5, c3)).group_order == 72);

  Scalar w = omega(c3);
  Matrix r = Matrix::from_rows(c3, {{c3.one(), w - c3.one()}, {w + c3.one(), -c3.one()}}).scaled(w.inverse());
  auto y = normalizing_reflections(make_Y(w, c3));
  bool found = false;
  for (const auto& x : y.reflections) found = found || x.matrix == r;
  CHECK(found);
}

TEST_CASE("imprimitive group orders") {
  CHECK(expected_gmpn_order(6, 2, 2) == 36);
  CHECK(expected_gmpn_order(4, 2, 2) == 16);
  CHECK(expected_gmpn_order(2, 2, 2) == 4);
}

TEST_CASE("reflection multiples") {
  Field q;
  auto m = reflection_multiples(Matrix::from_ints(q, {{0, 1}, {1, 0}}));
  // (0 1; 1 0) and its negative are both reflections
  CHECK(m.size() == 2);
}

#include <catch2/catch_amalgamated.hpp>

#include "projmon/catalog.hpp"
#include "projmon/error.hpp"

using namespace projmon;

namespace {
Field q;
Field c3(FieldSpec::cyclotomic(3));
}  // namespace

TEST_CASE("type A orders") {
  CHECK(make_A(1, q).size() == 2);
  CHECK(make_A(2, q).size() == 20);
  CHECK(make_A(2, Field(FieldSpec::prime(2))).size() == 11);
  CHECK(a_order_formula(3, 0) == 230);
  CHECK(a_order_formula(3, 2) == 188);
  CHECK(make_Aplus(1, q).size() == 3);
  CHECK(make_Aplus(2, q).size() == 22);
  CHECK(aplus_order_formula(2) == 22);
}

TEST_CASE("A_n+ permutes the basis") {
  Monoid m = make_Aplus(2, q);
  for (const auto& e : m.elements()) {
    for (std::size_t c = 0; c < 3; ++c) {
      std::size_t ones = 0, zeros = 0;
      for (std::size_t r = 0; r < 3; ++r) {
        if (e(r, c).is_one()) ++ones;
        else if (e(r, c).is_zero()) ++zeros;
      }
      CHECK(ones == 1);
      CHECK(zeros == 2);
    }
  }
}

TEST_CASE("type B orders") {
  CHECK(make_B(2, 2, q).size() == 18);
  CHECK(make_B(3, 1, q).size() == 59);
  CHECK(b_order_formula(3, 2) == 296);
  CHECK(b_generators(3, 1, q).size() == 9);
  CHECK_THROWS_WITH(make_B(2, 4, q), Catch::Matchers::ContainsSubstring("Cyclotomic(4)"));
}

TEST_CASE("dimension-2 families") {
  CHECK(make_Z(0, c3).size() == 20);
  CHECK(equivalent(make_Z(0, q), make_A(2, q)).has_value());
  CHECK(make_Y(omega(c3), c3).size() == 56);
  CHECK(y_order_formula(omega(c3)) == 56);
  CHECK(make_X({q.one(), -q.one()}, 1, q).size() == 14);
  CHECK(x_order_formula({q.one(), -q.one()}, 1) == 14);
  for (int i = 0; i < 6; ++i) CHECK(static_cast<std::int64_t>(make_Z(i, c3).size()) == z_order(i));
  CHECK_THROWS_AS(make_X({q.one()}, 0, q), Error);
}

TEST_CASE("affine families") {
  CHECK(make_affine_C(1, q).size() == 3);
  CHECK(make_affine_C(2, q).size() == 22);
  auto gens = affine_c_generators(2, q);
  auto a = a_generators(2, q);
  REQUIRE(gens.size() == a.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    bool found = false;
    for (const auto& g : a) found = found || linear_part(gens[k]) == g.m;
    CHECK(found);
  }

  std::vector<Scalar> x{q.zero()};
  Monoid d = make_affine_D(2, 1, x, q);
  REQUIRE(d.finite());
  CHECK(static_cast<std::int64_t>(d.size()) <= nt_bound(2, 1, x, q));
  Monoid b = dual(make_B(2, 1, q));
  for (const auto& e : d.elements()) {
    auto m = AffineMap::from_augmented(e);
    CHECK(in_nt_set(m, 1, x));
    CHECK(b.contains(m.linear_part()));
  }
}

TEST_CASE("idempotent generation in the transformation model") {
  auto r1 = howie_check(1);
  CHECK(r1.holds);
  auto r2 = howie_check(2);
  CHECK(r2.holds);
  CHECK(r2.singular_count == 21);
  auto r3 = howie_check(3);
  CHECK(r3.holds);
  CHECK(r3.singular_count == 232);
}

TEST_CASE("infinite fixtures have the stated powers") {
  for (const auto& fx : infinite_fixtures()) {
    if (!fx.power_formula) continue;
    Matrix x = fx.product;
    for (std::int64_t k = 1; k <= 6; ++k, x = x * fx.product) CHECK(x == fx.power_formula(k));
  }
}

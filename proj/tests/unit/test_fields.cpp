#include <catch2/catch_amalgamated.hpp>

#include "projmon/error.hpp"
#include "projmon/field.hpp"

using namespace projmon;

TEST_CASE("field handles report characteristic and roots of unity") {
  Field q;
  CHECK(q.characteristic() == 0);
  CHECK(q.unity_count() == 2);
  Field c3(FieldSpec::cyclotomic(3));
  CHECK(c3.characteristic() == 0);
  CHECK(c3.unity_count() == 6);
  Field f2(FieldSpec::prime(2));
  CHECK(f2.characteristic() == 2);
  CHECK(f2.unity_count() == 1);
}

TEST_CASE("field spec strings round-trip") {
  for (const char* s : {"Q", "C3", "C12", "F2", "F101"}) CHECK(FieldSpec::parse(s).to_string() == s);
  CHECK_THROWS_AS(Field(FieldSpec::prime(9)), Error);
  CHECK_THROWS(FieldSpec::parse("R"));
}

TEST_CASE("order of roots of unity") {
  Field q;
  CHECK(order_of_unity(q.one()) == 1);
  CHECK_FALSE(order_of_unity(q.from_int(2)).has_value());
  CHECK_THROWS(order_of_unity(q.zero()));
  Field c3(FieldSpec::cyclotomic(3));
  CHECK(order_of_unity(-c3.zeta()) == 6);
}

TEST_CASE("cyclic subgroup generated by roots") {
  Field q;
  std::vector<Scalar> one{q.one()};
  CHECK(unity_subgroup_order(one) == 1);
  Field c3(FieldSpec::cyclotomic(3));
  std::vector<Scalar> a{-c3.one(), c3.zeta()};
  CHECK(unity_subgroup_order(a) == 6);
  Field c4(FieldSpec::cyclotomic(4));
  std::vector<Scalar> b{c4.zeta(), -c4.zeta()};
  CHECK(unity_subgroup_order(b) == 4);
  std::vector<Scalar> bad{q.from_int(3)};
  CHECK_THROWS(unity_subgroup_order(bad));
}

TEST_CASE("cyclotomic arithmetic is exact and canonical") {
  Field c3(FieldSpec::cyclotomic(3));
  Scalar z = c3.zeta();
  CHECK(z * z * z == c3.one());
  CHECK(z * z + z + c3.one() == c3.zero());
  CHECK((z / (z + c3.from_int(2))) * (z + c3.from_int(2)) == z);
  Field c5(FieldSpec::cyclotomic(5));
  CHECK(c5.zeta().pow(5).is_one());
  CHECK(c5.zeta().pow(-1) * c5.zeta() == c5.one());
}

TEST_CASE("prime field arithmetic") {
  Field f7(FieldSpec::prime(7));
  Scalar x = f7.from_int(3);
  CHECK((x * x.inverse()).is_one());
  CHECK(f7.from_int(-1).residue() == 6);
  CHECK(order_of_unity(x) == 6);
  auto r = f7.sqrt(f7.from_int(2));
  REQUIRE(r);
  CHECK(*r * *r == f7.from_int(2));
  CHECK_FALSE(f7.sqrt(f7.from_int(3)).has_value());
}

TEST_CASE("rationals never overflow") {
  Field q;
  Scalar big = q.from_int(std::int64_t{1} << 62);
  Scalar sq = big * big * big;
  CHECK(sq / big / big == big);
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
}

#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "projmon/catalog.hpp"
#include "projmon/error.hpp"
#include "projmon/monoid.hpp"

using namespace projmon;

namespace {
Field q;

Matrix arc(const std::vector<ArcGen>& g, std::size_t i, std::size_t j) {
  for (const auto& a : g) {
    if (a.i == i && a.j == j) return a.m;
  }
  FAIL("no such arc");
  return Matrix(q, 0, 0);
}
}  // namespace

TEST_CASE("closure sizes") {
  Monoid a2(q, 2, [] {
    std::vector<Matrix> m;
    for (const auto& g : a_generators(2, Field())) m.push_back(g.m);
    return m;
  }());
  a2.close();
  CHECK(a2.finite());
  CHECK(a2.size() == 20);
  CHECK(a2.elements().front().is_identity());

  Matrix p = Matrix::from_ints(q, {{1, -1}, {0, 0}});
  Monoid one = close(q, 2, {p});
  CHECK(one.size() == 2);
  CHECK(one.contains(p));
}

TEST_CASE("capped closure carries an infiniteness witness") {
  for (const auto& fx : infinite_fixtures()) {
    if (fx.name != "three projections") continue;
    Monoid m(q, 3, fx.generators);
    m.close(10000);
    CHECK(m.status() == ClosureStatus::CapExceeded);
    REQUIRE(m.witness());
    const auto& pw = m.witness()->powers;
    CHECK(pw.size() == 100);
    CHECK(std::set<Matrix>(pw.begin(), pw.end()).size() == pw.size());
    CHECK_THROWS_AS(require_finite(m, "test"), CapExceeded);
  }
}

TEST_CASE("mixed fields and shapes are rejected") {
  Field c3(FieldSpec::cyclotomic(3));
  Matrix a = Matrix::from_ints(q, {{1, -1}, {0, 0}});
  Matrix b = Matrix::from_ints(c3, {{1, -1}, {0, 0}});
  CHECK_THROWS_AS(Monoid(q, 2, {a, b}), Error);
  CHECK_THROWS_AS(Monoid(q, 3, {a}), Error);
}

TEST_CASE("generation and minimality") {
  auto g = a_generators(2, q);
  Monoid a2 = make_A(2, q);
  std::vector<Matrix> all;
  for (const auto& x : g) all.push_back(x.m);
  CHECK(generates(all, a2));
  CHECK_FALSE(is_minimal_generating(all, a2));
  std::vector<Matrix> cycle{arc(g, 0, 1), arc(g, 1, 2), arc(g, 2, 0)};
  CHECK(is_minimal_generating(cycle, a2));
  std::vector<Matrix> back{arc(g, 0, 1), arc(g, 1, 0)};
  CHECK_FALSE(generates(back, a2));
}

TEST_CASE("duals") {
  Monoid a2 = make_A(2, q);
  Monoid d = dual(a2);
  CHECK(d.size() == 20);
  Monoid dd = dual(d);
  CHECK(std::set<Matrix>(dd.elements().begin(), dd.elements().end()) ==
        std::set<Matrix>(a2.elements().begin(), a2.elements().end()));
  Monoid a3 = make_A(3, q);
  CHECK_FALSE(equivalent(a3, dual(a3)).has_value());
  CHECK(equivalent(a2, dual(a2)).has_value());
}

TEST_CASE("units and projection part") {
  Monoid a2 = make_A(2, q);
  auto s = units_and_projection_part(a2);
  REQUIRE(s.units.size() == 1);
  CHECK(s.units.front().is_identity());
  CHECK(s.projection_part.size() == 20);

  Monoid refl = close(q, 2, {Matrix::from_ints(q, {{0, 1}, {1, 0}}), Matrix::from_ints(q, {{-1, 0}, {0, 1}})});
  auto r = units_and_projection_part(refl);
  CHECK(r.units.size() == 8);
  CHECK(r.projection_part.size() == 1);
}

TEST_CASE("equivalence witnesses") {
  Monoid a2 = make_A(2, q);
  auto id = equivalent(a2, a2);
  REQUIRE(id);
  auto inv = id->inverse();
  CHECK(conjugates_into(*id, *inv, a2, a2));

  Monoid x = make_X({q.one()}, 2, q);
  Monoid b = make_B(2, 1, q);
  CHECK(equivalent(x, b).has_value());

  Monoid x0 = make_X({q.one(), -q.one()}, 0, q);
  Monoid d0 = dual(x0);
  auto f = equivalent(x0, d0);
  REQUIRE(f);
  CHECK(conjugates_into(*f, *f->inverse(), x0, d0));
  // (1 -1; s -1) with s = -1 swaps the two images
  Matrix w = Matrix::from_ints(q, {{1, -1}, {-1, -1}});
  CHECK(conjugates_into(w, *w.inverse(), x0, d0));
}

TEST_CASE("cached element lists must be the exact closure") {
  Monoid a2 = make_A(2, q);
  Monoid fresh(q, 2, a2.generators());
  CHECK(fresh.adopt_elements(a2.elements()));
  CHECK(fresh.size() == 20);
  auto partial = a2.elements();
  partial.pop_back();
  Monoid other(q, 2, a2.generators());
  CHECK_FALSE(other.adopt_elements(partial));
}

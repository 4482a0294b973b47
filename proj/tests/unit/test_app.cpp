#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "app/cache.hpp"
#include "app/families.hpp"
#include "app/oracles.hpp"
#include "projmon/catalog.hpp"
#include "projmon/error.hpp"
#include "projmon/serialize.hpp"

using namespace projmon;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("projmon-test-" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("family parameters") {
  Field q;
  app::FamilyParams a;
  a.family = "A";
  a.n = 3;
  CHECK(app::build_family(a, q).generators().size() == 12);

  Field c3(FieldSpec::cyclotomic(3));
  app::FamilyParams z;
  z.family = "Z";
  z.i = 5;
  Monoid m = app::build_family(z, c3);
  m.close();
  CHECK(m.size() == 98);
  CHECK(m.lines().kernels.size() == 4);

  app::FamilyParams b;
  b.family = "B";
  b.n = 2;
  b.t = 4;
  CHECK_THROWS_WITH(app::build_family(b, q), Catch::Matchers::ContainsSubstring("Cyclotomic(4)"));

  CHECK(app::parse_scalar("e(1/3)", c3) == omega(c3));
  CHECK(app::parse_scalar("-e(1/6)", c3) == -(-omega(c3).pow(2)));
  CHECK(app::parse_scalar("-3/4", q) == q.from_rational(Rational(-3, 4)));
  CHECK_THROWS(app::parse_scalar("e(1/4)", q));
}

TEST_CASE("descriptor round trip") {
  Field c3(FieldSpec::cyclotomic(3));
  for (const Monoid& m : {make_Z(3, c3), make_affine_C(2, Field()), make_A(2, Field(FieldSpec::prime(5)))}) {
    json j = to_json(descriptor_of(m));
    Monoid back = monoid_from(descriptor_from_json(json::parse(j.dump())));
    back.close();
    REQUIRE(back.size() == m.size());
    for (const auto& e : m.elements()) CHECK(back.contains(e));
    auto elems = elements_from_json(json::parse(elements_to_json(m).dump()), back);
    CHECK(elems == m.elements());
  }
}

TEST_CASE("closure cache") {
  fs::path dir = scratch("cache");
  Field c3(FieldSpec::cyclotomic(3));
  Monoid first = make_Z(5, c3, 1);
  Monoid cold(c3, 2, first.generators());
  auto a = app::close_cached(cold, 1000, dir);
  CHECK_FALSE(a.hit);
  REQUIRE(fs::exists(a.file));

  Monoid warm(c3, 2, first.generators());
  auto b = app::close_cached(warm, 1000, dir);
  CHECK(b.hit);
  CHECK(warm.elements() == cold.elements());

  Monoid capped(c3, 2, first.generators());
  auto c = app::close_cached(capped, 10, dir);
  CHECK_FALSE(c.hit);
  CHECK(capped.status() == ClosureStatus::CapExceeded);
  CHECK(fs::exists(a.file));

  {
    std::ifstream in(a.file);
    json j = json::parse(in);
    j["elements"].erase(j["elements"].begin() + 3);
    std::ofstream(a.file) << j.dump();
  }
  Monoid tampered(c3, 2, first.generators());
  auto d = app::close_cached(tampered, 1000, dir);
  CHECK(d.discarded);
  CHECK(tampered.elements() == cold.elements());
  fs::remove_all(dir);
}

TEST_CASE("reference computations") {
  using namespace app::oracle;
  CHECK(type_a_order(2, false) == 20);
  CHECK(type_a_order(2, true) == 11);
  CHECK(type_b_order(3, 2) == 296);
  CHECK(strongly_connected_tournaments(3) == 2);
  CHECK(non_bijective_maps(2) == 21);
  CHECK(defect_one_idempotents(3) == 12);
  CHECK(closure_size(type_a_generators(2, 7), 2, 7) == 20);
}

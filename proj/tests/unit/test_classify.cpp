#include <catch2/catch_amalgamated.hpp>

#include "projmon/analysis.hpp"
#include "projmon/classify.hpp"
#include "projmon/error.hpp"

using namespace projmon;

namespace {
Field q;
Field c3(FieldSpec::cyclotomic(3));

std::vector<BGen> pick(const std::vector<BGen>& all, const std::vector<std::string>& labels) {
  std::vector<BGen> out;
  for (const auto& l : labels) {
    for (const auto& g : all) {
      if (g.label() == l) out.push_back(g);
    }
  }
  REQUIRE(out.size() == labels.size());
  return out;
}
}  // namespace

TEST_CASE("dimension-2 classification") {
  auto b = classify_c2(make_B(2, 2, q));
  CHECK(b.family == Family::X);
  CHECK(b.index == 2);
  CHECK(b.s.size() == 2);

  Scalar w = omega(c3);
  Monoid y = make_Y(w, c3);
  Monoid raw(c3, 2, y.generators());
  raw.close();
  auto t = classify_c2(raw);
  REQUIRE(t.family == Family::Y);
  CHECK((*t.w == w || *t.w == w.inverse()));

  auto d = classify_c2(dual(y));
  REQUIRE(d.family == Family::Y);
  CHECK((*d.w == -w || *d.w == -w.inverse()));

  CHECK_THROWS_AS(classify_c2(make_shared_line(q, {0, 1}, {1})), Error);
}

TEST_CASE("canonical X parameters") {
  auto a = canonicalize_X({q.one(), -q.one()}, 0);
  CHECK(a.first.size() == 2);
  CHECK(a.second == 0);
  Scalar w = omega(c3);
  CHECK(canonicalize_X({c3.one(), w}, 0) == canonicalize_X({c3.one(), w * w}, 0));
  // the rescale move by w carries {1, w} to {1, w^2}
  CHECK(canonicalize_X({c3.one(), w}, 1) == canonicalize_X({c3.one(), w * w}, 1));
  CHECK(canonicalize_Y(w) == canonicalize_Y(w * w));
}

TEST_CASE("three-dimensional embeddings") {
  auto a = classify_r3(make_A(3, q));
  CHECK(a.target == R3Target::A3);
  CHECK_FALSE(a.via_dual);
  CHECK(classify_r3(dual(make_A(3, q))).via_dual);

  auto gens = b_generators(3, 2, q);
  std::vector<Matrix> sub;
  for (const auto& g : pick(gens, {"p_1", "p_2", "p_3", "p_12^1", "p_23^1", "p_31^1"})) sub.push_back(g.m);
  Monoid m = close(q, 3, sub);
  if (is_irreducible(m).irreducible) {
    auto r = classify_r3(m);
    CHECK((r.target == R3Target::B32 || r.target == R3Target::A3));
  }
}

TEST_CASE("tournament criterion") {
  CHECK(mingen_criterion_A({{0, 1}, {1, 2}, {2, 0}}, 2));
  CHECK_FALSE(mingen_criterion_A({{0, 1}, {1, 2}, {0, 2}}, 2));
  CHECK_FALSE(mingen_criterion_A({{0, 1}, {1, 0}, {1, 2}, {2, 0}}, 2));
  CHECK(is_tournament({{0, 1}, {1, 2}, {0, 2}}, 3));
  CHECK(strongly_connected({{0, 1}, {1, 2}, {2, 0}}, 3));
}

TEST_CASE("type B generation criteria") {
  auto all = b_generators(3, 1, q);
  auto cyc = pick(all, {"p_1", "p_2", "p_3", "p_12^1", "p_23^1", "p_31^1"});
  CHECK(gen_criterion_B(cyc, 3, 1, q));
  CHECK(mingen_criterion_B(cyc, 3, 1, q));
  auto missing = pick(all, {"p_1", "p_2", "p_12^1", "p_23^1", "p_31^1"});
  CHECK_FALSE(gen_criterion_B(missing, 3, 1, q));
  auto both = pick(all, {"p_1", "p_2", "p_3", "p_12^1", "p_21^1", "p_23^1", "p_31^1"});
  CHECK(gen_criterion_B(both, 3, 1, q));
  CHECK_FALSE(mingen_criterion_B(both, 3, 1, q));

  Monoid b = make_B(3, 1, q);
  std::vector<Matrix> mats;
  for (const auto& g : both) mats.push_back(g.m);
  CHECK(generates(mats, b));
  CHECK_FALSE(is_minimal_generating(mats, b));
  CHECK_THROWS_WITH(mingen_criterion_B(b_generators(2, 1, q), 2, 1, q),
                    Catch::Matchers::ContainsSubstring("n >= 3"));
}

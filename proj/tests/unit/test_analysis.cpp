#include <catch2/catch_amalgamated.hpp>

#include "projmon/analysis.hpp"
#include "projmon/catalog.hpp"

using namespace projmon;

namespace {
Field q;
Field c3(FieldSpec::cyclotomic(3));
Vec v(std::initializer_list<std::int64_t> xs) {
  Vec out;
  for (auto x : xs) out.push_back(q.from_int(x));
  return out;
}
}  // namespace

TEST_CASE("kernel and image counts") {
  Monoid a2 = make_A(2, q);
  CHECK(kernels(a2).size() == 3);
  CHECK(images(a2).size() == 3);
  Monoid a3 = make_A(3, q);
  CHECK(kernels(a3).size() == 6);
  CHECK(images(a3).size() == 4);
  Monoid z2 = make_Z(2, c3);
  CHECK(kernels(z2).size() == 4);
  CHECK(images(z2).size() == 3);
}

TEST_CASE("completeness") {
  CHECK(is_complete(make_A(3, q)).complete);
  CHECK(is_complete(make_Y(omega(c3), c3)).complete);
  Matrix p1 = prj(Subspace::line(v({1, 0})), Subspace::line(v({0, 1})));
  Matrix p2 = prj(Subspace::line(v({1, 1})), Subspace::line(v({1, 0})));
  Monoid m = close(q, 2, {p1, p2});
  auto r = is_complete(m);
  CHECK_FALSE(r.complete);
  CHECK(r.missing.has_value());
}

TEST_CASE("irreducibility") {
  CHECK(is_irreducible(make_A(3, q)).irreducible);
  CHECK(is_irreducible(make_B(3, 2, q)).irreducible);
  Monoid shared = make_shared_line(q, {0, 1}, {1});
  auto r = is_irreducible(shared);
  CHECK_FALSE(r.irreducible);
  REQUIRE(r.witness);
  CHECK(*r.witness == Subspace::line(v({1, 0})));
  Monoid axes = direct_sum(make_A(1, q), make_A(1, q));
  CHECK_FALSE(is_irreducible(axes).irreducible);
}

TEST_CASE("complete reducibility") {
  auto irr = is_completely_reducible(make_A(2, q));
  CHECK(irr.completely_reducible);
  Monoid axes = direct_sum(make_A(1, q), make_A(1, q));
  auto cr = is_completely_reducible(axes);
  CHECK(cr.completely_reducible);
  REQUIRE(cr.decomposition.size() == 2);
  for (const auto& w : cr.decomposition) CHECK(is_invariant(axes, w));
  CHECK_FALSE(is_completely_reducible(make_shared_line(q, {0, 1}, {1})).completely_reducible);
}

TEST_CASE("trace groups") {
  Monoid a2 = make_A(2, q);
  auto full = trace_group(a2, TraceMethod::Full);
  auto pairs = trace_group(a2, TraceMethod::Pairs);
  CHECK(full.order == 2);
  CHECK(pairs.order == 1);
  CHECK(pairs.pairs_unreliable);
  CHECK(trace_group(make_Z(3, c3), TraceMethod::Full).order == 6);
  CHECK(trace_group(make_X({q.one()}, 1, q), TraceMethod::Full).order == 1);
}

TEST_CASE("cardinality prediction") {
  auto z5 = predicted_count(make_Z(5, c3));
  CHECK(z5.kernels == 4);
  CHECK(z5.images == 4);
  CHECK(z5.trace_group == 6);
  CHECK(z5.zero_present);
  CHECK(z5.predicted == 98);
  auto z0 = predicted_count(make_Z(0, c3));
  CHECK(z0.trace_group == 2);
  CHECK(z0.predicted == 20);
  Field c4(FieldSpec::cyclotomic(4));
  auto yi = predicted_count(make_Y(c4.zeta(), c4));
  CHECK(yi.trace_group == 4);
  CHECK(yi.predicted == 38);
  CHECK(yi.actual == 38);
}

TEST_CASE("star condition and split") {
  CHECK(star_condition(make_A(3, q)));
  CHECK(star_condition(make_B(3, 2, q)));
  CHECK_FALSE(is_split(make_A(3, q)));
  CHECK_FALSE(is_split(make_B(3, 2, q)));
  std::vector<Matrix> g;
  for (auto& img : {Subspace::hyperplane(v({1, 0, 0})), Subspace::hyperplane(v({0, 1, 0})),
                    Subspace::hyperplane(v({0, 0, 1}))}) {
    g.push_back(prj(Subspace::line(v({1, 1, 1})), img));
  }
  CHECK_FALSE(star_condition(close(q, 3, g)));
  // K = <e3>, A = <e1, e2>
  Subspace k = Subspace::line(v({0, 0, 1}));
  Subspace a = Subspace::hyperplane(v({0, 0, 1}));
  Monoid split = close(q, 3,
                       {prj(k, a), prj(Subspace::line(v({1, 0, 0})), Subspace::hyperplane(v({1, 0, 0}))),
                        prj(Subspace::line(v({0, 1, 0})), Subspace::hyperplane(v({0, 1, 0})))});
  CHECK(is_split(split));
}

TEST_CASE("affine structure") {
  Monoid c2 = make_affine_C(2, q);
  auto r = affcomp_check(c2);
  CHECK(r.hypotheses);
  CHECK(r.holds);
  Monoid two = make_two_parallel_images(q);
  CHECK(has_parallel_images(two));
  CHECK(is_irreducible_affine(two).irreducible);
  CHECK_FALSE(is_complete_affine(two).complete);
  Monoid lin = underlying_linear(c2);
  CHECK(lin.size() == 20);
}

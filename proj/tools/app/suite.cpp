#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "projmon/analysis.hpp"
#include "projmon/catalog.hpp"
#include "projmon/classify.hpp"
#include "projmon/error.hpp"
#include "projmon/normalizer.hpp"
#include "verify.hpp"

namespace projmon::app {

namespace {

template <class A, class B>
Outcome same(const A& expected, const B& computed, std::string note = {}) {
  std::ostringstream e, c;
  e << expected;
  c << computed;
  return {e.str(), c.str(), e.str() == c.str(), std::move(note)};
}

Outcome holds(bool ok, const std::string& what, const std::string& detail = {}) {
  return {what, ok ? what : (detail.empty() ? "violated" : detail), ok, {}};
}

Monoid closed(Monoid m, std::size_t cap) {
  m.close(cap);
  return m;
}

std::int64_t closed_size(Monoid m, std::size_t cap) {
  m.close(cap);
  require_finite(m, "closure");
  return static_cast<std::int64_t>(m.size());
}

oracle::IMat to_imat(const Matrix& m) {
  oracle::IMat out;
  for (const auto& x : m.entries()) out.push_back(x.residue());
  return out;
}

std::vector<oracle::IMat> to_imats(const std::vector<Matrix>& v) {
  std::vector<oracle::IMat> out;
  for (const auto& m : v) out.push_back(to_imat(m));
  return out;
}

struct Named {
  std::string name;
  std::function<Monoid(std::size_t)> make;
};

Field Q() { return Field(); }
Field C3() { return Field(FieldSpec::cyclotomic(3)); }
Field C4() { return Field(FieldSpec::cyclotomic(4)); }

std::vector<Scalar> pm(const Field& f) { return {f.one(), -f.one()}; }
std::vector<Scalar> one(const Field& f) { return {f.one()}; }

// Irreducible dimension-2 instances of every catalog family.
std::vector<Named> dim2_catalog() {
  std::vector<Named> v;
  v.push_back({"X({1,-1},0)", [](std::size_t c) { return make_X(pm(Q()), 0, Q(), c); }});
  v.push_back({"X({1},1)", [](std::size_t c) { return make_X(one(Q()), 1, Q(), c); }});
  v.push_back({"X({1,-1},1)", [](std::size_t c) { return make_X(pm(Q()), 1, Q(), c); }});
  v.push_back({"X({1},2)", [](std::size_t c) { return make_X(one(Q()), 2, Q(), c); }});
  v.push_back({"X({1,-1},2)", [](std::size_t c) { return make_X(pm(Q()), 2, Q(), c); }});
  v.push_back({"X({1,w},0)", [](std::size_t c) { return make_X({C3().one(), omega(C3())}, 0, C3(), c); }});
  v.push_back({"X({1,w},1)", [](std::size_t c) { return make_X({C3().one(), omega(C3())}, 1, C3(), c); }});
  v.push_back({"A2", [](std::size_t c) { return make_A(2, Q(), c); }});
  v.push_back({"B2^1", [](std::size_t c) { return make_B(2, 1, Q(), c); }});
  v.push_back({"B2^2", [](std::size_t c) { return make_B(2, 2, Q(), c); }});
  v.push_back({"B2^4/C4", [](std::size_t c) { return make_B(2, 4, C4(), c); }});
  v.push_back({"Y_w", [](std::size_t c) { return make_Y(omega(C3()), C3(), c); }});
  v.push_back({"Y_i", [](std::size_t c) { return make_Y(C4().zeta(), C4(), c); }});
  for (int i = 0; i < 6; ++i) {
    v.push_back({"Z" + std::to_string(i), [i](std::size_t c) { return make_Z(i, C3(), c); }});
  }
  return v;
}

Monoid conjugated(const Monoid& m, const Matrix& g, std::size_t cap) {
  auto gi = g.inverse();
  std::vector<Matrix> gens;
  for (const auto& x : m.generators()) gens.push_back(g * x * *gi);
  return closed(Monoid(m.field(), m.dim(), std::move(gens)), cap);
}

Matrix random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  while (true) {
    Matrix g(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) g(i, j) = f.from_int(d(rng));
    }
    if (g.invertible()) return g;
  }
}

bool same_elements(const Monoid& a, const Monoid& b) {
  if (a.size() != b.size()) return false;
  for (const auto& e : a.elements()) {
    if (!b.contains(e)) return false;
  }
  return true;
}

// Lines of the monoid's projections, read off the elements directly.
bool kernel_meets_image(const Monoid& m) {
  std::set<Subspace> ks, ls;
  for (const auto& e : m.elements()) {
    if (classify_map(e).kind == MapKind::Projection) {
      ks.insert(e.kernel());
      ls.insert(e.image());
    }
  }
  for (const auto& k : ks) {
    if (ls.count(k)) return true;
  }
  return false;
}

// ------------------------------------------------------------------ criteria

void cardinality_a(std::vector<Check>& out, const SuiteOptions& o) {
  const std::int64_t stated[] = {2, 20, 230, 3002};
  for (std::size_t n = 1; n <= 4; ++n) {
    out.push_back({1, "1.A" + std::to_string(n) + "/Q", "type A order formula, characteristic not 2", [n, o, stated] {
                     auto formula = oracle::type_a_order(static_cast<std::int64_t>(n), false);
                     if (formula != stated[n - 1]) return same(stated[n - 1], formula, "formula disagrees with table");
                     return same(formula, closed_size(make_A(n, Q(), o.cap), o.cap));
                   }});
  }
  out.push_back({1, "1.A3/GF(101) reference closure", "type A order formula, characteristic not 2", [] {
                   return same(230, oracle::closure_size(oracle::type_a_generators(3, 101), 3, 101));
                 }});
}

void cardinality_a_char2(std::vector<Check>& out, const SuiteOptions& o) {
  for (std::size_t n = 2; n <= 3; ++n) {
    out.push_back({2, "2.A" + std::to_string(n) + "/GF(2)", "type A order formula, characteristic 2", [n, o] {
                     auto expected = oracle::type_a_order(static_cast<std::int64_t>(n), true);
                     auto ref = static_cast<std::int64_t>(oracle::closure_size(oracle::type_a_generators(n, 2), n, 2));
                     if (ref != expected) return same(expected, ref, "reference closure disagrees with formula");
                     return same(expected, closed_size(make_A(n, Field(FieldSpec::prime(2)), o.cap), o.cap));
                   }});
  }
}

void cardinality_b(std::vector<Check>& out, const SuiteOptions& o) {
  const std::pair<std::size_t, std::int64_t> cases[] = {{2, 1}, {2, 2}, {3, 1}, {3, 2}};
  const std::int64_t stated[] = {8, 18, 59, 296};
  for (int k = 0; k < 4; ++k) {
    auto [n, t] = cases[k];
    auto want = stated[k];
    out.push_back({3, "3.B" + std::to_string(n) + "^" + std::to_string(t), "type B order formula", [n, t, want, o] {
                     auto formula = oracle::type_b_order(static_cast<std::int64_t>(n), t);
                     if (formula != want) return same(want, formula, "formula disagrees with table");
                     return same(want, closed_size(make_B(n, t, Q(), o.cap), o.cap));
                   }});
  }
}

void tables(std::vector<Check>& out, const SuiteOptions& o) {
  const std::int64_t z[] = {20, 56, 74, 74, 92, 98};
  for (int i = 0; i < 6; ++i) {
    out.push_back({4, "4.Z" + std::to_string(i), "Z family table", [i, z, o] {
                     return same(z[i], closed_size(make_Z(i, C3(), o.cap), o.cap));
                   }});
  }
  out.push_back({4, "4.Y_w", "Y_w order 9|G|+2", [o] {
                   // G = <w, -w> is the group of sixth roots of unity.
                   return same(9 * 6 + 2, closed_size(make_Y(omega(C3()), C3(), o.cap), o.cap));
                 }});
  out.push_back({4, "4.Y_i", "Y_w order 9|G|+2", [o] {
                   // i = 5 in GF(13); <i, -i> has order 4.
                   const std::int64_t p = 13, w = 5;
                   std::int64_t g = std::max(oracle::order_mod(w, p), oracle::order_mod(p - w, p));
                   std::vector<oracle::IMat> gens;
                   std::vector<std::pair<std::int64_t, std::int64_t>> ims{{1, 1}, {1, 0}, {1, 1 + w}};
                   std::vector<std::pair<std::int64_t, std::int64_t>> ks{{1, 1}, {0, 1}, {1 - w + p, 1}};
                   for (auto [k1, k2] : ks) {
                     for (auto [l1, l2] : ims) {
                       if ((k1 * l2 - k2 * l1) % p == 0) continue;
                       gens.push_back(oracle::projection2(k1, k2, l1, l2, p));
                     }
                   }
                   auto ref = static_cast<std::int64_t>(oracle::closure_size(gens, 2, p));
                   if (ref != 9 * g + 2) return same(9 * g + 2, ref, "reference closure disagrees with formula");
                   return same(ref, closed_size(make_Y(C4().zeta(), C4(), o.cap), o.cap));
                 }});
  struct XCase {
    const char* name;
    bool both;
    int i;
    std::int64_t order;
  };
  const XCase xs[] = {{"X({1,-1},0)", true, 0, 9}, {"X({1},1)", false, 1, 6}, {"X({1,-1},1)", true, 1, 14},
                      {"X({1},2)", false, 2, 8},   {"X({1,-1},2)", true, 2, 18}};
  for (const auto& x : xs) {
    out.push_back({4, std::string("4.") + x.name, "real-case X orders", [x, o] {
                     return same(x.order, closed_size(make_X(x.both ? pm(Q()) : one(Q()), x.i, Q(), o.cap), o.cap));
                   }});
  }
}

void card_prediction(std::vector<Check>& out, const SuiteOptions& o) {
  for (const auto& c : dim2_catalog()) {
    out.push_back({5, "5." + c.name, "cardinality from trace group", [c, o] {
                     Monoid m = c.make(o.cap);
                     auto p = predicted_count(m);
                     bool zero = kernel_meets_image(m);
                     if (p.zero_present != zero) return same(zero, p.zero_present, "zero element presence");
                     if (p.zero_predicted != zero) return same(zero, p.zero_predicted, "zero prediction");
                     return same(m.size(), p.predicted);
                   }});
  }
}

void trace_groups(std::vector<Check>& out, const SuiteOptions& o) {
  out.push_back({6, "6.A2", "trace group of A2 and the pairs method", [o] {
                   Monoid m = make_A(2, Q(), o.cap);
                   auto full = trace_group(m, TraceMethod::Full);
                   auto pairs = trace_group(m, TraceMethod::Pairs);
                   std::ostringstream c;
                   c << "full=" << full.order << " flagged=" << pairs.pairs_unreliable;
                   return same("full=2 flagged=1", c.str());
                 }});
  for (int i = 1; i <= 5; ++i) {
    out.push_back({6, "6.Z" + std::to_string(i), "trace group of Z", [i, o] {
                     return same(6, trace_group(make_Z(i, C3(), o.cap), TraceMethod::Full).order);
                   }});
  }
  out.push_back({6, "6.full=pairs", "trace group from pairs of projections", [o] {
                   std::string bad;
                   std::size_t checked = 0;
                   for (const auto& c : dim2_catalog()) {
                     Monoid m = c.make(o.cap);
                     auto pairs = trace_group(m, TraceMethod::Pairs);
                     if (pairs.pairs_unreliable) continue;
                     ++checked;
                     if (trace_group(m, TraceMethod::Full).order != pairs.order) bad += c.name + " ";
                   }
                   Outcome r = holds(bad.empty(), "full = pairs on all", "differs on " + bad);
                   r.note = std::to_string(checked) + " instances";
                   return r;
                 }});
}

std::vector<Named> irreducible_catalog() {
  auto v = dim2_catalog();
  v.push_back({"A1", [](std::size_t c) { return make_A(1, Q(), c); }});
  v.push_back({"A3", [](std::size_t c) { return make_A(3, Q(), c); }});
  v.push_back({"A4", [](std::size_t c) { return make_A(4, Q(), c); }});
  v.push_back({"A2/GF(2)", [](std::size_t c) { return make_A(2, Field(FieldSpec::prime(2)), c); }});
  v.push_back({"A3/GF(2)", [](std::size_t c) { return make_A(3, Field(FieldSpec::prime(2)), c); }});
  v.push_back({"B3^1", [](std::size_t c) { return make_B(3, 1, Q(), c); }});
  v.push_back({"B3^2", [](std::size_t c) { return make_B(3, 2, Q(), c); }});
  return v;
}

void irreducibility(std::vector<Check>& out, const SuiteOptions& o) {
  for (const auto& c : irreducible_catalog()) {
    out.push_back({7, "7." + c.name, "irreducibility conditions", [c, o] {
                     Monoid m = c.make(o.cap);
                     std::ostringstream s;
                     s << "irreducible=" << is_irreducible(m).irreducible << " sum=V=" << kernel_sum(m).is_whole()
                       << " meet=0=" << image_intersection(m).is_zero() << " complete=" << is_complete(m).complete;
                     return same("irreducible=1 sum=V=1 meet=0=1 complete=1", s.str());
                   }});
  }
  out.push_back({7, "7.shared-line", "reducible example with a common line", [o] {
                   Monoid m = make_shared_line(Q(), {0, 1}, {1}, o.cap);
                   auto r = is_irreducible(m);
                   bool ok = !r.irreducible && r.witness && is_invariant(m, *r.witness);
                   return holds(ok, "reducible with invariant witness");
                 }});
}

struct CrCase {
  std::string name;
  std::function<Monoid(std::size_t)> make;
  std::optional<bool> expected;  // known answer, when stated
};

std::vector<CrCase> cr_cases() {
  std::vector<CrCase> v;
  for (const auto& c : dim2_catalog()) v.push_back({c.name, c.make, true});
  Field f3(FieldSpec::prime(3)), f5(FieldSpec::prime(5));
  v.push_back({"A2+A1", [](std::size_t c) { return direct_sum(make_A(2, Q()), make_A(1, Q()), c); }, true});
  v.push_back({"A1+A1", [](std::size_t c) { return direct_sum(make_A(1, Q()), make_A(1, Q()), c); }, true});
  v.push_back({"B2^1+A1", [](std::size_t c) { return direct_sum(make_B(2, 1, Q()), make_A(1, Q()), c); }, true});
  v.push_back({"A1+A1/GF(3)", [f3](std::size_t c) { return direct_sum(make_A(1, f3), make_A(1, f3), c); }, true});
  v.push_back({"A2+A1/GF(5)", [f5](std::size_t c) { return direct_sum(make_A(2, f5), make_A(1, f5), c); }, true});
  v.push_back({"B2^1+A1/GF(3)", [f3](std::size_t c) { return direct_sum(make_B(2, 1, f3), make_A(1, f3), c); }, true});
  v.push_back({"shared {0},{1}", [](std::size_t c) { return make_shared_line(Q(), {0}, {1}, c); }, false});
  v.push_back({"shared {0,1},{1}", [](std::size_t c) { return make_shared_line(Q(), {0, 1}, {1}, c); }, false});
  v.push_back({"shared {0,1},{}", [](std::size_t c) { return make_shared_line(Q(), {0, 1}, {}, c); }, std::nullopt});
  v.push_back({"shared {},{0,1}", [](std::size_t c) { return make_shared_line(Q(), {}, {0, 1}, c); }, std::nullopt});
  v.push_back({"shared {0},{1}/GF(5)", [f5](std::size_t c) { return make_shared_line(f5, {0}, {1}, c); }, false});
  v.push_back({"shared {0,1},{2}/GF(5)", [f5](std::size_t c) { return make_shared_line(f5, {0, 1}, {2}, c); }, false});
  return v;
}

void complete_reducibility(std::vector<Check>& out, const SuiteOptions& o) {
  for (const auto& c : cr_cases()) {
    out.push_back({8, "8." + c.name, "complete reducibility criterion", [c, o] {
                     Monoid m = c.make(o.cap);
                     require_finite(m, "closure");
                     auto cr = is_completely_reducible(m);
                     Subspace s = kernel_sum(m), t = image_intersection(m);
                     bool direct = s.sum(t).is_whole() && s.intersect(t).is_zero();
                     bool criterion = direct && is_complete(m).complete;
                     if (cr.completely_reducible != criterion) return same(criterion, cr.completely_reducible);
                     for (const auto& w : cr.decomposition) {
                       if (!is_invariant(m, w)) return holds(false, "decomposition invariant", "summand not invariant");
                     }
                     if (cr.completely_reducible && !is_irreducible(m).irreducible) {
                       Subspace total(m.field(), m.dim());
                       std::size_t dims = 0;
                       for (const auto& w : cr.decomposition) total = total.sum(w), dims += w.dim();
                       if (!total.is_whole() || dims != m.dim()) return holds(false, "decomposition spans", "bad sum");
                     }
                     bool answer = cr.completely_reducible;
                     if (m.field().spec().kind == FieldSpec::Kind::PrimeField) {
                       bool ref = oracle::completely_reducible(to_imats(m.generators()), m.dim(), m.field().characteristic());
                       if (ref != answer) return same(ref, answer, "subspace enumeration disagrees");
                     }
                     if (c.expected && *c.expected != answer) return same(*c.expected, answer);
                     return same(criterion, answer);
                   }});
  }
}

void normalizers(std::vector<Check>& out, const SuiteOptions& o) {
  Field f2(FieldSpec::prime(2));
  struct Case {
    std::string name;
    std::function<Monoid(std::size_t)> make;
    std::int64_t expected;
  };
  std::vector<Case> cases = {
      {"Y_w", [](std::size_t c) { return make_Y(omega(C3()), C3(), c); }, 2},
      {"Z0", [](std::size_t c) { return make_Z(0, C3(), c); }, 36},
      {"Z4", [](std::size_t c) { return make_Z(4, C3(), c); }, 36},
      {"Z1", [](std::size_t c) { return make_Z(1, C3(), c); }, 1},
      {"Z2", [](std::size_t c) { return make_Z(2, C3(), c); }, 4},
      {"Z3", [](std::size_t c) { return make_Z(3, C3(), c); }, 3},
      {"Z5", [](std::size_t c) { return make_Z(5, C3(), c); }, 72},
      {"A2/Q", [](std::size_t c) { return make_A(2, Q(), c); }, 12},
      {"A2/C3", [](std::size_t c) { return make_A(2, C3(), c); }, 36},
      {"A3/Q", [](std::size_t c) { return make_A(3, Q(), c); }, 48},
      {"A3/GF(2)", [f2](std::size_t c) { return make_A(3, f2, c); }, 24},
      {"B2^2/Q", [](std::size_t c) { return make_B(2, 2, Q(), c); }, 8},
      {"B2^2/C4", [](std::size_t c) { return make_B(2, 2, C4(), c); }, oracle::gmpn_order(4, 2, 2)},
      {"B3^2/Q", [](std::size_t c) { return make_B(3, 2, Q(), c); }, 48},
  };
  for (const auto& c : cases) {
    out.push_back({9, "9." + c.name, "normalising reflection group", [c, o] {
                     Monoid m = c.make(o.cap);
                     require_finite(m, "closure");
                     auto r = normalizing_reflections(m);
                     Outcome res = same(c.expected, r.group_order);
                     res.note = std::to_string(r.reflections.size()) + " reflections over " + r.field.to_string();
                     return res;
                   }});
  }
  out.push_back({9, "9.Y_w stated reflection", "normalising reflection group", [o] {
                   Field f = C3();
                   Scalar w = omega(f);
                   Matrix r = Matrix::from_rows(f, {{f.one(), w - f.one()}, {w + f.one(), -f.one()}}).scaled(w.inverse());
                   Monoid m = make_Y(w, f, o.cap);
                   auto rep = normalizing_reflections(m);
                   bool found = std::any_of(rep.reflections.begin(), rep.reflections.end(),
                                            [&](const ReflectionWitness& x) { return x.matrix == r; });
                   return holds(found, "stated reflection found");
                 }});
}

std::vector<Arc> arcs_of(const std::vector<ArcGen>& pool, std::uint64_t mask) {
  std::vector<Arc> arcs;
  for (std::size_t k = 0; k < pool.size(); ++k) {
    if (mask >> k & 1) arcs.emplace_back(pool[k].i, pool[k].j);
  }
  return arcs;
}

Outcome mingen_a(std::size_t n, const SuiteOptions& o, std::size_t random_extra) {
  auto pool = a_generators(n, Q());
  Monoid m = make_A(n, Q(), o.cap);
  require_finite(m, "closure");
  std::vector<Matrix> mats;
  for (const auto& g : pool) mats.push_back(g.m);
  GenerationOracle gen(m, mats);
  std::size_t agree = 0, total = 0, minimal = 0;
  std::string bad;
  auto test = [&](std::uint64_t mask) {
    bool crit = mingen_criterion_A(arcs_of(pool, mask), n);
    bool brute = gen.minimal(mask);
    ++total;
    minimal += brute;
    if (crit == brute) ++agree;
    else if (bad.empty()) bad = "mask " + std::to_string(mask);
  };
  std::uint64_t all = std::uint64_t{1} << pool.size();
  for (std::uint64_t mask = 0; mask < all; ++mask) test(mask);
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::uint64_t> d(0, all - 1);
  for (std::size_t k = 0; k < random_extra;) {
    auto mask = d(rng);
    if (is_tournament(arcs_of(pool, mask), n + 1)) continue;
    test(mask);
    ++k;
  }
  Outcome r = same(total, agree, bad);
  r.note = std::to_string(minimal) + " minimal generating subsets";
  return r;
}

void minimal_generation(std::vector<Check>& out, const SuiteOptions& o) {
  out.push_back({10, "10.A2 subsets", "minimal generating sets, type A", [o] { return mingen_a(2, o, 0); }});
  out.push_back({10, "10.A3 subsets", "minimal generating sets, type A", [o] { return mingen_a(3, o, 200); }});
  out.push_back({10, "10.A2 count", "minimal generating sets, type A", [] {
                   std::size_t expected = oracle::strongly_connected_tournaments(3);
                   std::size_t count = 0;
                   std::vector<Arc> pairs{{0, 1}, {0, 2}, {1, 2}};
                   for (std::uint64_t mask = 0; mask < 8; ++mask) {
                     std::vector<Arc> arcs;
                     for (std::size_t e = 0; e < 3; ++e) {
                       auto [a, b] = pairs[e];
                       arcs.push_back(mask >> e & 1 ? Arc{a, b} : Arc{b, a});
                     }
                     count += mingen_criterion_A(arcs, 2);
                   }
                   if (expected != 2) return same(2, expected, "reference count");
                   return same(expected, count);
                 }});
  out.push_back({10, "10.B3^1 subsets", "minimal generating sets, type B", [o] {
                   auto pool = b_generators(3, 1, Q());
                   Monoid m = make_B(3, 1, Q(), o.cap);
                   require_finite(m, "closure");
                   std::vector<Matrix> mats;
                   for (const auto& g : pool) mats.push_back(g.m);
                   GenerationOracle gen(m, mats);
                   std::size_t agree = 0, total = 0;
                   std::string bad;
                   for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pool.size()); ++mask) {
                     std::vector<BGen> p;
                     for (std::size_t k = 0; k < pool.size(); ++k) {
                       if (mask >> k & 1) p.push_back(pool[k]);
                     }
                     bool g1 = gen_criterion_B(p, 3, 1, Q()), g2 = gen.generates(mask);
                     bool m1 = mingen_criterion_B(p, 3, 1, Q()), m2 = gen.minimal(mask);
                     ++total;
                     if (g1 == g2 && m1 == m2) ++agree;
                     else if (bad.empty()) bad = "mask " + std::to_string(mask);
                   }
                   return same(total, agree, bad);
                 }});
}

void fixtures(std::vector<Check>& out, const SuiteOptions& o) {
  const std::size_t cap = std::min<std::size_t>(o.cap, 10000);
  for (const auto& fx : infinite_fixtures()) {
    out.push_back({11, "11." + fx.name, "infiniteness witnesses", [fx, cap] {
                     Monoid m(fx.generators.front().field(), fx.generators.front().rows(), fx.generators);
                     m.close(cap);
                     if (m.status() != ClosureStatus::CapExceeded) return same("CapExceeded", "Finite");
                     if (!m.witness()) return same("CapExceeded with witness", "CapExceeded without witness");
                     const auto& pw = m.witness()->powers;
                     std::set<Matrix> distinct(pw.begin(), pw.end());
                     if (distinct.size() != pw.size()) return holds(false, "distinct powers", "repeated power");
                     if (fx.power_formula) {
                       Matrix x = fx.product;
                       for (std::int64_t k = 1; k <= 8; ++k, x = x * fx.product) {
                         if (!(x == fx.power_formula(k))) return holds(false, "power formula", "differs at " + std::to_string(k));
                       }
                     }
                     return same("CapExceeded with witness", "CapExceeded with witness");
                   }});
  }
}

std::vector<Monoid> proper_submonoids(const Monoid& m, std::size_t want, std::uint64_t seed, std::size_t cap) {
  std::vector<Monoid> out;
  const auto& g = m.generators();
  std::mt19937_64 rng(seed);
  std::set<std::uint64_t> tried;
  std::uint64_t all = (std::uint64_t{1} << g.size()) - 1;
  std::uniform_int_distribution<std::uint64_t> d(1, all);
  for (int attempts = 0; attempts < 4000 && out.size() < want; ++attempts) {
    auto mask = d(rng);
    if (mask == all || !tried.insert(mask).second) continue;
    std::vector<Matrix> sub;
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (mask >> k & 1) sub.push_back(g[k]);
    }
    Monoid s(m.field(), m.dim(), sub);
    s.close(cap);
    if (!s.finite() || s.size() >= m.size()) continue;
    if (!is_irreducible(s).irreducible) continue;
    out.push_back(std::move(s));
  }
  return out;
}

void r3_embeddings(std::vector<Check>& out, const SuiteOptions& o) {
  std::vector<Named> targets = {
      {"A3", [](std::size_t c) { return make_A(3, Q(), c); }},
      {"B3^2", [](std::size_t c) { return make_B(3, 2, Q(), c); }},
      {"dual A3", [](std::size_t c) { return dual(make_A(3, Q(), c)); }},
  };
  for (const auto& t : targets) {
    out.push_back({12, "12." + t.name, "embedding into A3 or B3^2", [t, o] {
                     Monoid m = t.make(o.cap);
                     require_finite(m, "closure");
                     auto r = classify_r3(m);
                     std::string got = to_string(r.target) + (r.via_dual ? " via dual" : "");
                     auto subs = proper_submonoids(m, 5, o.seed, o.cap);
                     if (subs.size() < 5) return same(5, subs.size(), "irreducible proper submonoids found");
                     for (const auto& s : subs) classify_r3(s);
                     Outcome res = holds(true, "embeds with 5 submonoids");
                     res.note = got;
                     return res;
                   }});
  }
}

void c2_classification(std::vector<Check>& out, const SuiteOptions& o) {
  for (const auto& c : dim2_catalog()) {
    out.push_back({13, "13." + c.name, "classification over the complex plane", [c, o] {
                     Monoid m = c.make(o.cap);
                     auto tag = classify_c2(m);
                     Monoid inst = canonical_instance(tag, m.field(), o.cap);
                     Monoid target = tag.via_dual ? dual(m) : m;
                     auto wi = tag.witness.inverse();
                     std::vector<Matrix> moved;
                     for (const auto& e : target.elements()) moved.push_back(tag.witness * e * *wi);
                     std::set<Matrix> a(moved.begin(), moved.end()), b(inst.elements().begin(), inst.elements().end());
                     if (a != b) return holds(false, "witness maps onto canonical instance", "element sets differ");
                     std::mt19937_64 rng(o.seed + std::hash<std::string>{}(c.name));
                     for (int k = 0; k < 2; ++k) {
                       auto g = random_invertible(m.field(), 2, rng);
                       auto t2 = classify_c2(conjugated(m, g, o.cap));
                       if (!t2.same_class(tag)) return same(tag.name(), t2.name(), "after random conjugation");
                     }
                     auto again = classify_c2(inst);
                     if (!again.same_class(tag) && !tag.via_dual) return same(tag.name(), again.name(), "canonical instance");
                     Outcome r = holds(true, "stable tag");
                     r.note = tag.name();
                     return r;
                   }});
  }
  out.push_back({13, "13.X canonical params", "classification over the complex plane", [o] {
                   std::string bad;
                   struct P {
                     std::vector<Scalar> s;
                     int i;
                     Field f;
                   };
                   Field f = C3();
                   Scalar w = omega(f);
                   std::vector<P> ps{{pm(Q()), 0, Q()}, {one(Q()), 1, Q()}, {pm(Q()), 2, Q()},
                                     {{f.one(), w}, 0, f}, {{f.one(), w * w}, 1, f}, {{f.one(), w, w * w}, 2, f}};
                   for (const auto& p : ps) {
                     auto tag = classify_c2(make_X(p.s, p.i, p.f, o.cap));
                     auto [cs, ci] = canonicalize_X(p.s, p.i);
                     if (tag.family != Family::X || tag.via_dual || tag.s != cs || tag.index != ci) bad += tag.name() + " ";
                   }
                   return holds(bad.empty(), "canonical parameters returned", bad);
                 }});
  out.push_back({13, "13.Y duality", "Y_w and the dual of Y_-w", [o] {
                   std::string bad;
                   for (const Field& f : {C3(), C4()}) {
                     Scalar w = f.spec().param == 3 ? omega(f) : f.zeta();
                     Monoid a = dual(make_Y(w, f, o.cap));
                     Monoid b = make_Y(-w, f, o.cap);
                     auto wit = equivalent(a, b);
                     if (!wit) bad += "w=" + w.to_string() + " ";
                     auto tag = classify_c2(a);
                     if (!(tag.family == Family::Y && *tag.w == canonicalize_Y(-w))) bad += tag.name() + " ";
                   }
                   return holds(bad.empty(), "dual Y_w equivalent to Y_-w", bad);
                 }});
  std::vector<Named> self_dual = {
      {"X({1,-1},0)", [](std::size_t c) { return make_X(pm(Q()), 0, Q(), c); }},
      {"X({1,w},0)", [](std::size_t c) { return make_X({C3().one(), omega(C3())}, 0, C3(), c); }},
      {"X({1},1)", [](std::size_t c) { return make_X(one(Q()), 1, Q(), c); }},
      {"Y_i", [](std::size_t c) { return make_Y(C4().zeta(), C4(), c); }},
      {"Z0", [](std::size_t c) { return make_Z(0, C3(), c); }},
      {"Z1", [](std::size_t c) { return make_Z(1, C3(), c); }},
      {"Z5", [](std::size_t c) { return make_Z(5, C3(), c); }},
  };
  for (const auto& s : self_dual) {
    out.push_back({13, "13.self-dual " + s.name, "self-dual irreducible monoids", [s, o] {
                     Monoid m = s.make(o.cap);
                     return holds(equivalent(m, dual(m)).has_value(), "equivalent to its dual");
                   }});
  }
}

void affine(std::vector<Check>& out, const SuiteOptions& o) {
  out.push_back({14, "14.C2", "affine type A", [o] {
                   auto expected = static_cast<std::int64_t>(oracle::non_bijective_maps(2) + 1);
                   auto c = closed_size(make_affine_C(2, Q(), o.cap), o.cap);
                   auto a = closed_size(make_Aplus(2, Q(), o.cap), o.cap);
                   std::ostringstream s;
                   s << c << " = " << a;
                   std::ostringstream e;
                   e << expected << " = " << expected;
                   return same(e.str(), s.str());
                 }});
  for (std::size_t n = 2; n <= 3; ++n) {
    out.push_back({14, "14.C" + std::to_string(n) + " linear part", "affine type A", [n, o] {
                     Monoid c = make_affine_C(n, Q(), o.cap);
                     Monoid lin = underlying_linear(c, o.cap);
                     Monoid a = make_A(n, Q(), o.cap);
                     require_finite(lin, "closure");
                     bool eq = same_elements(lin, a) || equivalent(lin, a).has_value();
                     return holds(eq, "linear part equals A_n");
                   }});
  }
  struct DCase {
    std::string name;
    std::size_t n;
    std::int64_t t;
    std::vector<std::int64_t> x;
  };
  for (const auto& d : std::vector<DCase>{{"D2^1({0})", 2, 1, {0}}, {"D2^2({0,1})", 2, 2, {0, 1}}}) {
    out.push_back({14, "14." + d.name, "affine type B", [d, o] {
                     std::vector<Scalar> x;
                     for (auto v : d.x) x.push_back(Q().from_int(v));
                     Monoid m = make_affine_D(d.n, d.t, x, Q(), o.cap);
                     require_finite(m, "closure");
                     for (const auto& e : m.elements()) {
                       if (!in_nt_set(AffineMap::from_augmented(e), d.t, x)) return holds(false, "all elements in N^t(X)", e.to_string());
                     }
                     Outcome r = holds(true, "finite, all elements in N^t(X)");
                     r.note = std::to_string(m.size()) + " elements, bound " + std::to_string(nt_bound(d.n, d.t, x, Q()));
                     return r;
                   }});
  }
  out.push_back({14, "14.two parallel images", "affine irreducible but not complete", [o] {
                   Monoid m = make_two_parallel_images(Q(), o.cap);
                   require_finite(m, "closure");
                   std::ostringstream s;
                   s << "irreducible=" << is_irreducible_affine(m).irreducible
                     << " complete=" << is_complete_affine(m).complete;
                   return same("irreducible=1 complete=0", s.str());
                 }});
  out.push_back({14, "14.affcomp C2", "completeness for affine monoids", [o] {
                   Monoid m = make_affine_C(2, Q(), o.cap);
                   auto r = affcomp_check(m);
                   return holds(r.hypotheses && r.holds, "hypotheses met and completeness holds");
                 }});
  out.push_back({14, "14.affcomp no parallel images", "completeness for affine monoids", [o] {
                   Monoid m = make_affine_C(3, Q(), o.cap);
                   require_finite(m, "closure");
                   auto r = affcomp_check(m);
                   bool ok = r.no_parallel_images && r.hypotheses && r.holds;
                   return holds(ok, "no parallel images and completeness holds");
                 }});
}

void semireflections(std::vector<Check>& out, const SuiteOptions& o) {
  out.push_back({15, "15.A2.S3/GF(3)", "semireflection monoid split", [o] {
                   Field f(FieldSpec::prime(3));
                   std::vector<Matrix> gens;
                   for (const auto& g : a_generators(2, f)) gens.push_back(g.m);
                   TransformationModel tm(2);
                   for (std::size_t i = 0; i <= 2; ++i) {
                     for (std::size_t j = i + 1; j <= 2; ++j) {
                       TransformationModel::Fn fn = tm.identity();
                       std::swap(fn[i], fn[j]);
                       gens.push_back(tm.restricted(fn, f));
                     }
                   }
                   Monoid m(f, 2, gens);
                   m.close(o.cap);
                   require_finite(m, "closure");
                   if (!is_irreducible(m).irreducible) return holds(false, "irreducible", "reducible");
                   auto split = units_and_projection_part(m);
                   if (split.units.size() != 6) return same(6, split.units.size(), "units");
                   std::size_t inv = oracle::invariant_proper_subspaces(to_imats(split.units), 2, 3);
                   if (inv != 1) return same(1, inv, "invariant subspaces of the units");
                   auto lib = invariant_subspaces_prime(f, 2, split.units);
                   Subspace diag = Subspace::line({f.one(), f.one()});
                   if (lib.size() != 1 || !(lib.front() == diag)) return holds(false, "invariant line <(1,1)>", "library disagrees");
                   const Monoid& m0 = split.projection_part;
                   for (const auto& u : split.units) {
                     if (!u.is_identity() && m0.contains(u)) return holds(false, "M0 n M1 = 1", "unit in M0");
                   }
                   std::set<Matrix> prod;
                   for (const auto& a : m0.elements()) {
                     for (const auto& u : split.units) prod.insert(a * u);
                   }
                   if (prod.size() != m.size()) return same(m.size(), prod.size(), "M0 M1");
                   for (const auto& e : prod) {
                     if (!m.contains(e)) return holds(false, "M0 M1 = M", "product outside M");
                   }
                   for (const auto& u : split.units) {
                     auto ui = u.inverse();
                     for (const auto& g : m0.generators()) {
                       if (!m0.contains(u * g * *ui)) return holds(false, "M1 normalizes M0", "conjugate outside M0");
                     }
                   }
                   Outcome r = holds(true, "split verified");
                   r.note = std::to_string(m.size()) + " elements";
                   return r;
                 }});
}

void howie(std::vector<Check>& out, const SuiteOptions&) {
  for (std::size_t n = 1; n <= 4; ++n) {
    out.push_back({16, "16.n=" + std::to_string(n), "idempotent generation of singular maps", [n] {
                     auto r = howie_check(n);
                     auto idem = oracle::defect_one_idempotents(n);
                     auto gens = aplus_generators(n, Q()).size();
                     std::ostringstream e, c;
                     e << "holds=1 idempotents=" << idem << " generators=" << idem << " singular=" << oracle::non_bijective_maps(n);
                     c << "holds=" << r.holds << " idempotents=" << r.idempotents << " generators=" << gens
                       << " singular=" << r.generated;
                     return same(e.str(), c.str());
                   }});
  }
}

void xb_correspondence(std::vector<Check>& out, const SuiteOptions& o) {
  for (std::int64_t t = 1; t <= 2; ++t) {
    out.push_back({17, "17.t=" + std::to_string(t), "X with all t-th roots and B_2^t", [t, o] {
                     Field f = Q();
                     Monoid x = make_X(f.roots_of_unity(t), 2, f, o.cap);
                     Monoid b = make_B(2, t, f, o.cap);
                     Outcome r = holds(equivalent(x, b).has_value(), "equivalent");
                     r.note = "index note: |X_{mu_2m}^(2)| = 8m^2+8m+2 = |B_2^{2m}|, so S = mu_t pairs with B_2^t";
                     return r;
                   }});
  }
}

}  // namespace

std::vector<Check> paper_suite(const SuiteOptions& opt) {
  std::vector<Check> out;
  cardinality_a(out, opt);
  cardinality_a_char2(out, opt);
  cardinality_b(out, opt);
  tables(out, opt);
  card_prediction(out, opt);
  trace_groups(out, opt);
  irreducibility(out, opt);
  complete_reducibility(out, opt);
  normalizers(out, opt);
  minimal_generation(out, opt);
  fixtures(out, opt);
  r3_embeddings(out, opt);
  c2_classification(out, opt);
  affine(out, opt);
  semireflections(out, opt);
  howie(out, opt);
  xb_correspondence(out, opt);
  return out;
}

}  // namespace projmon::app

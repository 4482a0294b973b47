#include "projmon/normalizer.hpp"

#include <algorithm>
#include <set>

#include "projmon/error.hpp"

namespace projmon {

namespace {

Matrix projective_normal_form(const Matrix& a) {
  for (const auto& x : a.entries()) {
    if (!x.is_zero()) return a.scaled(x.inverse());
  }
  return a;
}

}  // namespace

std::vector<std::pair<Matrix, Scalar>> reflection_multiples(const Matrix& a) {
  const Field& f = a.field();
  std::size_t n = a.rows();
  Matrix id = Matrix::identity(f, n);
  std::vector<std::pair<Matrix, Scalar>> out;
  std::set<Matrix> seen;
  auto test = [&](const Scalar& mu) {
    if (mu.is_zero()) return;
    Matrix r = a.scaled(mu.inverse());
    Matrix d = r - id;
    if (d.rank() != 1) return;
    Scalar z = f.one() + d.trace();
    if (z.is_zero() || !order_of_unity(z)) return;
    if (seen.insert(r).second) out.emplace_back(r, mu);
  };
  Scalar tr = a.trace();
  Scalar base = f.from_int(static_cast<std::int64_t>(n) - 1);
  for (const auto& z : f.roots_of_unity(f.unity_count())) {
    Scalar den = base + z;
    if (!den.is_zero()) {
      test(tr / den);
      continue;
    }
    // eigenvalues mu (n - 1 times) and mu z with trace zero
    if (n == 2) {
      if (auto mu = f.sqrt(a.det() / z)) {
        test(*mu);
        test(-*mu);
      }
    } else if (f.spec().kind == FieldSpec::Kind::PrimeField && f.spec().param <= (1 << 16)) {
      for (std::int64_t k = 1; k < f.spec().param; ++k) test(f.from_int(k));
    } else {
      throw Error("normalizer search inconclusive: cannot resolve the scalar for eigenvalue " + z.to_string());
    }
  }
  return out;
}

NormalizerReport normalizing_reflections(const Monoid& m, std::size_t max_nodes) {
  if (m.is_affine()) throw Error("normalizer needs a linear monoid");
  require_finite(m, "normalizer");
  const Field& f = m.field();
  std::size_t n = m.dim();
  const auto& ld = m.lines();
  FrameItems items = frame_items(ld);
  std::set<Matrix> cands;
  NormalizerReport rep{f.spec(), {}, 1, std::nullopt, kNormalizerCaveat, {}};
  auto res = frame_search(
      f, n, items, items,
      [&](const Matrix& a) {
        cands.insert(projective_normal_form(a));
        return false;
      },
      max_nodes, &rep.stats);
  if (res != FrameSearchResult::Exhausted) throw Error("normalizer search inconclusive");

  std::set<Matrix> kept;
  std::vector<ReflectionWitness> refl;
  for (const auto& a : cands) {
    for (auto& [r, mu] : reflection_multiples(a)) {
      if (kept.count(r)) continue;
      auto inv = r.inverse();
      if (!conjugates_into(r, *inv, m, m)) continue;
      kept.insert(r);
      Scalar z = f.one() + (r - Matrix::identity(f, n)).trace();
      ReflectionWitness w{r, z, order_of_unity(z), z.is_one(), {}, mu};
      for (const auto& k : ld.kernels) {
        Subspace img = k.image_under(r);
        auto it = std::lower_bound(ld.kernels.begin(), ld.kernels.end(), img);
        if (it == ld.kernels.end() || !(*it == img)) throw ConsistencyError("normalising reflection moves a kernel off Ker(M)");
        w.kernel_permutation.push_back(static_cast<std::size_t>(it - ld.kernels.begin()));
      }
      refl.push_back(std::move(w));
    }
  }
  std::sort(refl.begin(), refl.end(), [](const auto& x, const auto& y) { return x.matrix < y.matrix; });
  if (!refl.empty()) {
    std::vector<Matrix> gens;
    for (const auto& w : refl) gens.push_back(w.matrix);
    Monoid g(f, n, std::move(gens));
    g.close(kDefaultCap);
    if (!g.finite()) throw Error("normalising reflections generate an infinite group");
    for (const auto& e : g.elements()) {
      if (!e.invertible()) throw ConsistencyError("normalising reflections generate a singular element");
    }
    rep.group_order = g.size();
  }
  rep.reflections = std::move(refl);
  return rep;
}

std::int64_t expected_gmpn_order(std::int64_t m, std::int64_t p, std::int64_t n) {
  if (m < 1 || p < 1 || n < 1 || m % p != 0) throw Error("G(m,p,n) needs p | m");
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < n; ++i) r *= m;
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return r / p;
}

}  // namespace projmon

#include "projmon/analysis.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "projmon/catalog.hpp"
#include "projmon/error.hpp"

namespace projmon {

namespace {

void require_linear_finite(const Monoid& m, const char* what) {
  if (m.is_affine()) throw Error(std::string(what) + " needs a linear monoid");
  require_finite(m, what);
}

// (kernel, image) of a non-identity semireflection: im(g - 1), ker(g - 1).
struct Axes {
  Subspace k, l;
};

std::vector<Axes> generator_axes(const Monoid& m) {
  std::vector<Axes> out;
  std::set<Matrix> seen;
  Matrix id = Matrix::identity(m.field(), m.dim());
  for (const auto& g : m.generators()) {
    if (g.is_identity() || !seen.insert(g).second) continue;
    Matrix d = g - id;
    if (d.rank() != 1) throw Error("generator is not a semireflection: " + g.to_string());
    out.push_back({d.image(), d.kernel()});
  }
  return out;
}

template <class T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<Subspace> kernels(const Monoid& m) {
  require_linear_finite(m, "kernels");
  return m.lines().kernels;
}

std::vector<Subspace> images(const Monoid& m) {
  require_linear_finite(m, "images");
  return m.lines().images;
}

Subspace kernel_sum(const Monoid& m) {
  Subspace s(m.field(), m.dim());
  for (const auto& k : kernels(m)) s = s.sum(k);
  return s;
}

Subspace image_intersection(const Monoid& m) {
  Subspace t = Subspace::whole(m.field(), m.dim());
  for (const auto& l : images(m)) t = t.intersect(l);
  return t;
}

CompletenessResult is_complete(const Monoid& m) {
  require_linear_finite(m, "is_complete");
  for (const auto& k : m.lines().kernels) {
    for (const auto& l : m.lines().images) {
      if (!l.contains(k) && !m.contains(prj(k, l))) return {false, std::make_pair(k, l)};
    }
  }
  return {true, std::nullopt};
}

bool is_invariant(const Monoid& m, const Subspace& w) {
  return std::all_of(m.generators().begin(), m.generators().end(),
                     [&](const Matrix& g) { return w.contains(w.image_under(g)); });
}

IrreducibilityResult is_irreducible(const Monoid& m) {
  if (m.is_affine()) throw Error("is_irreducible needs a linear monoid; use is_irreducible_affine");
  const Field& f = m.field();
  std::size_t n = m.dim();
  auto ax = generator_axes(m);
  if (ax.size() > 25) throw Error("bipartition search too large");
  if (ax.empty()) {
    if (n == 1) return {true, std::nullopt};
    return {false, Subspace::line(unit_vec(f, n, 0))};
  }
  std::optional<Subspace> found;
  std::function<void(std::size_t, const Subspace&, const Subspace&)> dfs =
      [&](std::size_t i, const Subspace& low, const Subspace& high) {
        if (found) return;
        if (!high.contains(low) || low.is_whole() || high.is_zero()) return;
        if (i == ax.size()) {
          if (!low.is_zero()) {
            found = low;
          } else if (n >= 2) {
            found = Subspace::line(high.basis().front());
          }
          return;
        }
        dfs(i + 1, low.sum(ax[i].k), high);
        dfs(i + 1, low, high.intersect(ax[i].l));
      };
  dfs(0, Subspace(f, n), Subspace::whole(f, n));
  if (found) return {false, found};
  return {true, std::nullopt};
}

CompleteReducibility is_completely_reducible(const Monoid& m) {
  require_linear_finite(m, "is_completely_reducible");
  CompleteReducibility r{};
  Subspace s = kernel_sum(m), t = image_intersection(m);
  r.direct_sum = s.intersect(t).is_zero() && s.dim() + t.dim() == m.dim();
  r.complete = is_complete(m).complete;
  r.completely_reducible = r.direct_sum && r.complete;
  if (!r.completely_reducible) return r;
  auto irr = is_irreducible(m);
  if (irr.irreducible) return r;
  const Subspace& w = *irr.witness;
  const Field& f = m.field();
  std::size_t n = m.dim();
  Subspace s2(f, n), t1 = Subspace::whole(f, n);
  for (auto i : m.projection_indices()) {
    const Matrix& p = m.elements()[i];
    Subspace k = p.kernel();
    if (w.contains(k)) {
      t1 = t1.intersect(p.image());
    } else {
      s2 = s2.sum(k);
    }
  }
  Subspace x = s2;
  if (!w.intersect(x).is_zero() || !t1.contains(x)) throw ConsistencyError("complement construction: S2 meets W");
  for (const auto& v : t1.basis()) {
    if (x.dim() + w.dim() == n) break;
    if (!w.sum(x).contains(v)) x = x.sum(Subspace::line(v));
  }
  if (x.dim() + w.dim() != n || !w.intersect(x).is_zero() || !is_invariant(m, x)) {
    throw ConsistencyError("no invariant complement found for " + w.to_string());
  }
  r.decomposition = {w, x};
  return r;
}

TraceGroup trace_group(const Monoid& m, TraceMethod method) {
  require_linear_finite(m, "trace_group");
  if (m.dim() != 2) throw Error("trace group is defined in dimension 2");
  std::vector<Scalar> traces;
  auto take = [&](const Scalar& t) {
    if (t.is_zero()) return;
    if (!order_of_unity(t)) throw Error("trace condition violated: trace " + t.to_string());
    traces.push_back(t);
  };
  TraceGroup g{1, false};
  if (method == TraceMethod::Full) {
    for (const auto& e : m.elements()) {
      if (!e.invertible()) take(e.trace());
    }
  } else {
    const auto& idx = m.projection_indices();
    for (auto a : idx) {
      for (auto b : idx) take((m.elements()[a] * m.elements()[b]).trace());
    }
    const auto& ld = m.lines();
    if (ld.kernels.size() == 3 && ld.images == ld.kernels) {
      try {
        Monoid a2 = make_A(2, m.field());
        g.pairs_unreliable = equivalent(m, a2).has_value();
      } catch (const Error&) {
        g.pairs_unreliable = true;
      }
    }
  }
  sort_unique(traces);
  g.order = unity_subgroup_order(traces);
  return g;
}

CountPrediction predicted_count(const Monoid& m) {
  require_linear_finite(m, "predicted_count");
  if (m.dim() != 2) throw Error("cardinality prediction is defined in dimension 2");
  const auto& ld = m.lines();
  CountPrediction c{};
  c.kernels = ld.kernels.size();
  c.images = ld.images.size();
  c.trace_group = trace_group(m, TraceMethod::Full).order;
  c.zero_predicted = std::any_of(ld.kernels.begin(), ld.kernels.end(), [&](const Subspace& k) {
    return std::binary_search(ld.images.begin(), ld.images.end(), k);
  });
  c.zero_present = m.contains(Matrix(m.field(), 2, 2));
  c.predicted = static_cast<std::int64_t>(c.kernels * c.images) * c.trace_group + 1 + (c.zero_predicted ? 1 : 0);
  c.actual = static_cast<std::int64_t>(m.size());
  return c;
}

bool star_condition(const Monoid& m) {
  require_linear_finite(m, "star_condition");
  if (m.dim() != 3) throw Error("condition (*) is defined in dimension 3");
  const auto& im = m.lines().images;
  for (std::size_t a = 0; a < im.size(); ++a) {
    for (std::size_t b = a + 1; b < im.size(); ++b) {
      Subspace ab = im[a].intersect(im[b]);
      for (std::size_t c = b + 1; c < im.size(); ++c) {
        if (!ab.intersect(im[c]).is_zero()) continue;
        for (const auto& k : m.lines().kernels) {
          if (!im[a].contains(k) && !im[b].contains(k) && !im[c].contains(k)) return false;
        }
      }
    }
  }
  return true;
}

std::optional<std::pair<Subspace, Subspace>> split_witness(const Monoid& m) {
  require_linear_finite(m, "is_split");
  if (m.dim() != 3) throw Error("the split predicate is defined in dimension 3");
  const auto& ld = m.lines();
  for (const auto& k : ld.kernels) {
    for (const auto& a : ld.images) {
      bool ok = std::all_of(ld.images.begin(), ld.images.end(), [&](const Subspace& l) { return l == a || l.contains(k); }) &&
                std::all_of(ld.kernels.begin(), ld.kernels.end(), [&](const Subspace& j) { return j == k || a.contains(j); });
      if (ok) return std::make_pair(k, a);
    }
  }
  return std::nullopt;
}

bool is_split(const Monoid& m) { return split_witness(m).has_value(); }

AnalysisReport analyze(const Monoid& m, const ReportRequest& req) {
  require_linear_finite(m, "analyze");
  auto irr = is_irreducible(m);
  AnalysisReport r{kernels(m),
                   images(m),
                   is_complete(m),
                   irr,
                   is_completely_reducible(m),
                   kernel_sum(m),
                   image_intersection(m),
                   std::nullopt,
                   std::nullopt,
                   std::nullopt,
                   m.contains(Matrix(m.field(), m.dim(), m.dim())),
                   std::nullopt,
                   std::nullopt,
                   units_and_projection_part(m).projection_part_is_all_singulars};
  bool projection_monoid = std::all_of(m.generators().begin(), m.generators().end(),
                                       [](const Matrix& g) { return !g.invertible(); });
  if (m.dim() == 2 && irr.irreducible && projection_monoid) {
    if (req.trace) {
      r.trace_full = trace_group(m, TraceMethod::Full);
      r.trace_pairs = trace_group(m, TraceMethod::Pairs);
    }
    if (req.card) r.count = predicted_count(m);
  }
  if (m.dim() == 3) {
    if (req.star) r.star = star_condition(m);
    if (req.split) r.split = is_split(m);
  }
  return r;
}

std::vector<Subspace> invariant_subspaces_prime(const Field& f, std::size_t n, const std::vector<Matrix>& gens) {
  if (f.spec().kind != FieldSpec::Kind::PrimeField) throw Error("invariant subspace enumeration needs a prime field");
  if (n < 2 || n > 3) throw Error("invariant subspace enumeration supports dimension 2 or 3");
  std::int64_t p = f.spec().param;
  std::int64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  std::set<Subspace> cands;
  for (std::int64_t code = 1; code < total; ++code) {
    Vec v(n, f.zero());
    std::int64_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= p) v[i] = Scalar::from_residue(f, c % p);
    cands.insert(Subspace::line(v));
    if (n == 3) cands.insert(Subspace::hyperplane(v));
  }
  std::vector<Subspace> out;
  for (const auto& w : cands) {
    if (std::all_of(gens.begin(), gens.end(), [&](const Matrix& g) { return w.contains(w.image_under(g)); })) {
      out.push_back(w);
    }
  }
  return out;
}

// ------------------------------------------------------------------ affine

namespace {

void require_affine_finite(const Monoid& m, const char* what) {
  if (!m.is_affine()) throw Error(std::string(what) + " needs an affine monoid");
  require_finite(m, what);
}

std::vector<AffineMap> affine_projections(const Monoid& m) {
  std::vector<AffineMap> out;
  for (const auto& e : m.elements()) {
    AffineMap a = AffineMap::from_augmented(e);
    if (a.is_projection()) out.push_back(std::move(a));
  }
  return out;
}

// Solution set of {phi_i . x = c_i}; rows are (phi_i | c_i).
std::optional<AffineSubspace> solve_affine(const Field& f, std::size_t n, std::vector<Vec> rows) {
  std::vector<std::size_t> piv;
  rows = rref(std::move(rows), n + 1, &piv);
  for (auto c : piv) {
    if (c == n) return std::nullopt;
  }
  Vec point = zero_vec(f, n);
  for (std::size_t r = 0; r < rows.size(); ++r) point[piv[r]] = rows[r][n];
  std::vector<Vec> lin;
  for (auto row : rows) {
    row.pop_back();
    lin.push_back(std::move(row));
  }
  return AffineSubspace(point, Subspace::span(f, n, nullspace(lin, f, n)));
}

Vec equation(const AffineSubspace& h) {
  Vec phi = h.direction().normal();
  Scalar c = dot(phi, h.point());
  phi.push_back(c);
  return phi;
}

}  // namespace

std::vector<Subspace> affine_kernels(const Monoid& m) {
  require_affine_finite(m, "affine_kernels");
  std::vector<Subspace> out;
  for (const auto& p : affine_projections(m)) out.push_back(affine_kernel(p));
  sort_unique(out);
  return out;
}

std::vector<AffineSubspace> affine_images(const Monoid& m) {
  require_affine_finite(m, "affine_images");
  std::vector<AffineSubspace> out;
  for (const auto& p : affine_projections(m)) out.push_back(p.image());
  sort_unique(out);
  return out;
}

AffineCompleteness is_complete_affine(const Monoid& m) {
  auto ks = affine_kernels(m);
  auto ls = affine_images(m);
  for (const auto& k : ks) {
    for (const auto& l : ls) {
      if (l.direction().contains(k)) continue;
      if (!m.contains(affine_prj(k, l).to_augmented())) return {false, std::make_pair(k, l)};
    }
  }
  return {true, std::nullopt};
}

AffineIrreducibility is_irreducible_affine(const Monoid& m) {
  if (!m.is_affine()) throw Error("is_irreducible_affine needs an affine monoid");
  const Field& f = m.field();
  std::size_t n = m.dim();
  struct Gen {
    Subspace k;
    Vec eq;
  };
  std::vector<Gen> gens;
  for (const auto& g : m.affine_generators()) {
    if (g.linear_part().is_identity() && is_zero_vec(g.translation())) continue;
    if (!g.is_projection()) throw Error("affine irreducibility needs affine projection generators");
    gens.push_back({affine_kernel(g), equation(g.image())});
  }
  if (gens.size() > 25) throw Error("bipartition search too large");
  if (n == 1) return {true, std::nullopt};
  std::optional<AffineSubspace> found;
  std::vector<Vec> eqs;
  std::function<void(std::size_t, const Subspace&)> dfs = [&](std::size_t i, const Subspace& low) {
    if (found || low.is_whole()) return;
    auto high = solve_affine(f, n, eqs);
    if (!high || !high->direction().contains(low) || high->direction().is_zero()) return;
    if (i == gens.size()) {
      Subspace d = low.is_zero() ? Subspace::line(high->direction().basis().front()) : low;
      found = AffineSubspace(high->point(), d);
      return;
    }
    dfs(i + 1, low.sum(gens[i].k));
    eqs.push_back(gens[i].eq);
    dfs(i + 1, low);
    eqs.pop_back();
  };
  dfs(0, Subspace(f, n));
  if (found) return {false, found};
  return {true, std::nullopt};
}

Monoid underlying_linear(const Monoid& m, std::size_t cap) {
  if (!m.is_affine()) throw Error("underlying_linear needs an affine monoid");
  std::vector<Matrix> g;
  for (const auto& a : m.affine_generators()) g.push_back(a.linear_part());
  Monoid lin(m.field(), m.dim(), std::move(g));
  lin.close(cap);
  return lin;
}

bool has_parallel_images(const Monoid& m) {
  auto ls = affine_images(m);
  for (std::size_t a = 0; a < ls.size(); ++a) {
    for (std::size_t b = a + 1; b < ls.size(); ++b) {
      if (ls[a].parallel(ls[b])) return true;
    }
  }
  return false;
}

AffcompCheck affcomp_check(const Monoid& m) {
  require_affine_finite(m, "affcomp_check");
  AffcompCheck c{};
  Monoid lin = underlying_linear(m, m.size() + 1);
  c.linear_complete = lin.finite() && is_complete(lin).complete;
  c.no_parallel_images = !has_parallel_images(m);
  c.char0_finite = m.field().characteristic() == 0 && m.finite();
  c.hypotheses = c.linear_complete && (c.no_parallel_images || c.char0_finite);
  c.complete = is_complete_affine(m).complete;
  c.holds = !c.hypotheses || c.complete;
  return c;
}

}  // namespace projmon

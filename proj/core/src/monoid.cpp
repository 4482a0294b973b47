#include "projmon/monoid.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "projmon/error.hpp"
#include "projmon/frame.hpp"

namespace projmon {

namespace {

bool is_projection(const Matrix& m) { return m.rank() + 1 == m.rows() && m.is_idempotent(); }

std::size_t bfs_size(const std::vector<std::vector<std::uint32_t>>& table, const std::vector<bool>& allowed) {
  std::vector<char> seen(table.size(), 0);
  std::vector<std::uint32_t> queue{0};
  seen[0] = 1;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const auto& row = table[queue[q]];
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!allowed[j]) continue;
      std::uint32_t x = row[j];
      if (!seen[x]) {
        seen[x] = 1;
        queue.push_back(x);
      }
    }
  }
  return queue.size();
}

}  // namespace

Monoid::Monoid(Field f, std::size_t dim, std::vector<Matrix> gens, bool require_semireflections)
    : kind_(MonoidKind::Linear), f_(f), n_(dim), gens_(std::move(gens)) {
  if (dim < 1) throw Error("monoid dimension must be positive");
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const Matrix& g = gens_[i];
    if (!(g.field() == f_)) throw Error("generator " + std::to_string(i) + " is over a different field");
    if (g.rows() != n_ || g.cols() != n_) throw Error("generator " + std::to_string(i) + " has the wrong shape");
    if (require_semireflections) {
      auto k = classify_map(g).kind;
      if (k != MapKind::Projection && k != MapKind::Reflection) {
        throw Error("generator " + std::to_string(i) + " is not a semireflection: " + g.to_string());
      }
    }
  }
}

Monoid::Monoid(Field f, std::size_t dim, const std::vector<AffineMap>& gens, bool require_projections)
    : kind_(MonoidKind::Affine), f_(f), n_(dim) {
  if (dim < 1) throw Error("monoid dimension must be positive");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const AffineMap& g = gens[i];
    if (!(g.field() == f_) || g.dim() != n_) throw Error("affine generator " + std::to_string(i) + " mismatches field or dimension");
    if (require_projections && !g.is_projection()) {
      throw Error("affine generator " + std::to_string(i) + " is not an affine projection: " + g.to_string());
    }
    gens_.push_back(g.to_augmented());
  }
}

std::vector<AffineMap> Monoid::affine_generators() const {
  if (!is_affine()) throw Error("affine_generators on a linear monoid");
  std::vector<AffineMap> out;
  for (const auto& g : gens_) out.push_back(AffineMap::from_augmented(g));
  return out;
}

void Monoid::close(std::size_t cap) {
  if (status_ != ClosureStatus::Unclosed) return;
  if (cap < 1) throw Error("closure cap must be positive");
  cap_ = cap;
  elems_.clear();
  index_.clear();
  elems_.push_back(identity());
  index_.emplace(elems_[0], 0);
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    for (const auto& g : gens_) {
      Matrix x = elems_[i] * g;
      if (index_.count(x)) continue;
      if (elems_.size() >= cap) {
        status_ = ClosureStatus::CapExceeded;
        find_witness();
        return;
      }
      index_.emplace(x, elems_.size());
      elems_.push_back(std::move(x));
    }
  }
  status_ = ClosureStatus::Finite;
}

void Monoid::find_witness() {
  auto k = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(cap_))));
  k = std::max<std::size_t>(k, 2);
  for (std::size_t i = 1; i < elems_.size(); ++i) {
    const Matrix& e = elems_[i];
    std::unordered_set<Matrix, MatrixHash> seen;
    std::vector<Matrix> powers;
    Matrix p = e;
    bool distinct = true;
    while (powers.size() < k) {
      if (!seen.insert(p).second) {
        distinct = false;
        break;
      }
      powers.push_back(p);
      p = p * e;
    }
    if (distinct) {
      witness_ = InfinitenessWitness{e, std::move(powers)};
      return;
    }
  }
}

bool Monoid::adopt_elements(std::vector<Matrix> elems) {
  if (elems.empty() || !elems[0].is_identity()) return false;
  std::unordered_map<Matrix, std::size_t, MatrixHash> index;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (!(elems[i].field() == f_) || elems[i].rows() != matrix_dim() || elems[i].cols() != matrix_dim()) return false;
    if (!index.emplace(elems[i], i).second) return false;
  }
  std::vector<char> reached(elems.size(), 0);
  std::vector<std::size_t> todo{0};
  reached[0] = 1;
  std::size_t count = 1;
  while (!todo.empty()) {
    std::size_t e = todo.back();
    todo.pop_back();
    for (const auto& g : gens_) {
      auto it = index.find(elems[e] * g);
      if (it == index.end()) return false;
      if (!reached[it->second]) {
        reached[it->second] = 1;
        ++count;
        todo.push_back(it->second);
      }
    }
  }
  if (count != elems.size()) return false;
  elems_ = std::move(elems);
  index_ = std::move(index);
  status_ = ClosureStatus::Finite;
  cap_ = std::max(cap_, elems_.size());
  witness_.reset();
  lines_.reset();
  proj_idx_.reset();
  return true;
}

void Monoid::require_finite(const char* what) const {
  if (status_ == ClosureStatus::Unclosed) throw Error(std::string(what) + ": monoid has not been closed");
  if (status_ == ClosureStatus::CapExceeded) {
    throw CapExceeded(std::string(what) + ": monoid exceeded the closure cap of " + std::to_string(cap_));
  }
}

std::size_t Monoid::size() const {
  require_finite("size");
  return elems_.size();
}

std::optional<std::size_t> Monoid::index_of(const Matrix& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::vector<std::uint32_t>> Monoid::right_table(const std::vector<Matrix>& pool) const {
  require_finite("right_table");
  std::vector<std::vector<std::uint32_t>> t(elems_.size(), std::vector<std::uint32_t>(pool.size()));
  for (std::size_t e = 0; e < elems_.size(); ++e) {
    for (std::size_t j = 0; j < pool.size(); ++j) {
      auto idx = index_of(elems_[e] * pool[j]);
      if (!idx) throw Error("element outside the monoid: " + pool[j].to_string());
      t[e][j] = static_cast<std::uint32_t>(*idx);
    }
  }
  return t;
}

const std::vector<std::size_t>& Monoid::projection_indices() const {
  require_finite("projections");
  if (!proj_idx_) {
    auto v = std::make_shared<std::vector<std::size_t>>();
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (is_projection(elems_[i])) v->push_back(i);
    }
    proj_idx_ = v;
  }
  return *proj_idx_;
}

const LineData& Monoid::lines() const {
  if (is_affine()) throw Error("lines() is defined for linear monoids");
  if (!lines_) {
    auto d = std::make_shared<LineData>();
    for (auto i : projection_indices()) {
      d->kernels.push_back(elems_[i].kernel());
      d->images.push_back(elems_[i].image());
    }
    for (auto* v : {&d->kernels, &d->images}) {
      std::sort(v->begin(), v->end());
      v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    lines_ = d;
  }
  return *lines_;
}

Monoid close(Field f, std::size_t dim, std::vector<Matrix> gens, std::size_t cap) {
  Monoid m(f, dim, std::move(gens));
  m.close(cap);
  return m;
}

// ---------------------------------------------------------------- generation

void require_finite(const Monoid& m, const std::string& what) {
  if (m.status() == ClosureStatus::CapExceeded) {
    throw CapExceeded(what + ": monoid exceeded the closure cap of " + std::to_string(m.cap()));
  }
  if (m.status() == ClosureStatus::Unclosed) throw Error(what + " needs a finite (closed) monoid");
}

bool generates(std::span<const Matrix> p, const Monoid& m) {
  std::vector<Matrix> pool(p.begin(), p.end());
  auto table = m.right_table(pool);
  return bfs_size(table, std::vector<bool>(pool.size(), true)) == m.size();
}

bool is_minimal_generating(std::span<const Matrix> p, const Monoid& m) {
  std::vector<Matrix> pool(p.begin(), p.end());
  auto table = m.right_table(pool);
  std::vector<bool> allowed(pool.size(), true);
  if (bfs_size(table, allowed) != m.size()) return false;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    allowed[i] = false;
    bool gen = bfs_size(table, allowed) == m.size();
    allowed[i] = true;
    if (gen) return false;
  }
  return true;
}

GenerationOracle::GenerationOracle(const Monoid& m, std::vector<Matrix> pool)
    : target_(m.size()), pool_(std::move(pool)) {
  if (pool_.size() > 64) throw Error("generation oracle pool limited to 64 elements");
  table_ = m.right_table(pool_);
}

std::size_t GenerationOracle::closure_size(std::uint64_t mask) {
  auto it = memo_.find(mask);
  if (it != memo_.end()) return it->second;
  std::vector<bool> allowed(pool_.size());
  for (std::size_t j = 0; j < pool_.size(); ++j) allowed[j] = (mask >> j) & 1;
  std::size_t s = bfs_size(table_, allowed);
  memo_.emplace(mask, s);
  return s;
}

bool GenerationOracle::generates(std::uint64_t mask) { return closure_size(mask) == target_; }

bool GenerationOracle::minimal(std::uint64_t mask) {
  if (!generates(mask)) return false;
  for (std::size_t j = 0; j < pool_.size(); ++j) {
    if (((mask >> j) & 1) && generates(mask & ~(std::uint64_t{1} << j))) return false;
  }
  return true;
}

// ---------------------------------------------------------------- duality, split

Monoid dual(const Monoid& m) {
  if (m.is_affine()) throw Error("dual is defined for linear monoids");
  std::vector<Matrix> gens;
  for (const auto& g : m.generators()) gens.push_back(g.transpose());
  Monoid d(m.field(), m.dim(), std::move(gens), false);
  if (m.finite()) {
    std::vector<Matrix> elems;
    elems.reserve(m.size());
    for (const auto& e : m.elements()) elems.push_back(e.transpose());
    if (!d.adopt_elements(std::move(elems))) throw ConsistencyError("transposed element set rejected");
  } else if (m.status() == ClosureStatus::CapExceeded) {
    d.close(m.cap());
  }
  return d;
}

SemireflectionSplit units_and_projection_part(const Monoid& m) {
  if (m.is_affine()) throw Error("units_and_projection_part needs a linear monoid");
  const auto& elems = m.elements();
  std::size_t total = m.size();
  std::vector<Matrix> units;
  std::vector<Matrix> projs;
  for (const auto& e : elems) {
    if (e.invertible()) units.push_back(e);
  }
  for (auto i : m.projection_indices()) projs.push_back(elems[i]);
  Monoid m0(m.field(), m.dim(), projs);
  m0.close(total + 1);
  if (!m0.finite()) throw ConsistencyError("projection part is larger than the monoid");
  for (const auto& u : units) {
    if (!u.is_identity() && m0.contains(u)) throw ConsistencyError("M0 and M1 share a non-identity element");
  }
  std::unordered_set<Matrix, MatrixHash> prod;
  for (const auto& a : m0.elements()) {
    for (const auto& b : units) {
      Matrix x = a * b;
      if (!m.contains(x)) throw ConsistencyError("product of M0 and M1 leaves the monoid");
      prod.insert(std::move(x));
    }
  }
  if (prod.size() != total) throw ConsistencyError("M0 M1 does not cover the monoid");
  for (const auto& u : units) {
    Matrix ui = *u.inverse();
    for (const auto& p : projs) {
      if (!m0.contains(u * p * ui)) throw ConsistencyError("M1 does not normalise M0");
    }
  }
  bool all_singular = m0.size() - 1 == total - units.size();
  return {std::move(units), std::move(m0), all_singular};
}

// ---------------------------------------------------------------- equivalence

bool conjugates_into(const Matrix& f, const Matrix& f_inv, const Monoid& m, const Monoid& target) {
  return std::all_of(m.generators().begin(), m.generators().end(),
                     [&](const Matrix& g) { return target.contains(f * g * f_inv); });
}

namespace {

std::size_t incident_pairs(const LineData& d) {
  std::size_t c = 0;
  for (const auto& k : d.kernels) {
    for (const auto& l : d.images) c += l.contains(k) ? 1 : 0;
  }
  return c;
}

}  // namespace

std::optional<Matrix> equivalent(const Monoid& m, const Monoid& n) {
  if (m.is_affine() || n.is_affine()) throw Error("equivalent is defined for linear monoids");
  if (m.dim() != n.dim() || !(m.field() == n.field())) throw Error("equivalent needs monoids of equal dimension and field");
  if (m.size() != n.size()) return std::nullopt;
  const auto& lm = m.lines();
  const auto& ln = n.lines();
  if (lm.kernels.size() != ln.kernels.size() || lm.images.size() != ln.images.size()) return std::nullopt;
  if (incident_pairs(lm) != incident_pairs(ln)) return std::nullopt;
  Matrix id = Matrix::identity(m.field(), m.dim());
  if (conjugates_into(id, id, m, n)) return id;
  std::optional<Matrix> found;
  auto res = frame_search(m.field(), m.dim(), frame_items(lm), frame_items(ln), [&](const Matrix& f) {
    auto inv = f.inverse();
    if (inv && conjugates_into(f, *inv, m, n)) {
      found = f;
      return true;
    }
    return false;
  });
  if (!found && (res == FrameSearchResult::Inconclusive || res == FrameSearchResult::Capped)) {
    throw Error("equivalence search inconclusive");
  }
  return found;
}

}  // namespace projmon

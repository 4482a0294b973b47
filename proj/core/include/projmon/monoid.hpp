#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "projmon/linalg.hpp"

namespace projmon {

inline constexpr std::size_t kDefaultCap = 100000;

enum class MonoidKind { Linear, Affine };
enum class ClosureStatus { Unclosed, Finite, CapExceeded };

struct InfinitenessWitness {
  Matrix element;
  std::vector<Matrix> powers;  // element^1 .. element^k, pairwise distinct
};

struct LineData {
  std::vector<Subspace> kernels;  // sorted
  std::vector<Subspace> images;   // sorted
};

/// Monoid generated by square matrices, or by affine maps stored as
/// augmented (n+1)x(n+1) matrices.
class Monoid {
 public:
  Monoid(Field f, std::size_t dim, std::vector<Matrix> gens, bool require_semireflections = true);
  Monoid(Field f, std::size_t dim, const std::vector<AffineMap>& gens, bool require_projections = true);

  [[nodiscard]] MonoidKind kind() const { return kind_; }
  [[nodiscard]] bool is_affine() const { return kind_ == MonoidKind::Affine; }
  [[nodiscard]] const Field& field() const { return f_; }
  /// Dimension of the space acted on.
  [[nodiscard]] std::size_t dim() const { return n_; }
  /// Size of the stored matrices (dim, or dim+1 for affine monoids).
  [[nodiscard]] std::size_t matrix_dim() const { return kind_ == MonoidKind::Affine ? n_ + 1 : n_; }
  [[nodiscard]] const std::vector<Matrix>& generators() const { return gens_; }
  [[nodiscard]] std::vector<AffineMap> affine_generators() const;

  /// Breadth-first closure; a no-op once closed.
  void close(std::size_t cap = kDefaultCap);
  /// Install a known element list (e.g. from a cache) after checking it is
  /// exactly the closure of the generators.
  bool adopt_elements(std::vector<Matrix> elems);

  [[nodiscard]] ClosureStatus status() const { return status_; }
  [[nodiscard]] bool finite() const { return status_ == ClosureStatus::Finite; }
  [[nodiscard]] std::size_t size() const;
  [[nodiscard]] std::size_t cap() const { return cap_; }
  /// Elements in discovery order, identity first.
  [[nodiscard]] const std::vector<Matrix>& elements() const { return elems_; }
  [[nodiscard]] std::optional<std::size_t> index_of(const Matrix& m) const;
  [[nodiscard]] bool contains(const Matrix& m) const { return index_of(m).has_value(); }
  [[nodiscard]] const std::optional<InfinitenessWitness>& witness() const { return witness_; }
  [[nodiscard]] Matrix identity() const { return Matrix::identity(f_, matrix_dim()); }

  /// table[e][j] = index of elements()[e] * pool[j]; pool must lie in the monoid.
  [[nodiscard]] std::vector<std::vector<std::uint32_t>> right_table(const std::vector<Matrix>& pool) const;

  /// Kernels and images of the projections among the elements (linear, finite).
  [[nodiscard]] const LineData& lines() const;
  /// Indices of the projection elements.
  [[nodiscard]] const std::vector<std::size_t>& projection_indices() const;

 private:
  void require_finite(const char* what) const;
  void find_witness();

  MonoidKind kind_;
  Field f_;
  std::size_t n_;
  std::vector<Matrix> gens_;
  ClosureStatus status_ = ClosureStatus::Unclosed;
  std::size_t cap_ = 0;
  std::vector<Matrix> elems_;
  std::unordered_map<Matrix, std::size_t, MatrixHash> index_;
  std::optional<InfinitenessWitness> witness_;
  mutable std::shared_ptr<const LineData> lines_;
  mutable std::shared_ptr<const std::vector<std::size_t>> proj_idx_;
};

Monoid close(Field f, std::size_t dim, std::vector<Matrix> gens, std::size_t cap = kDefaultCap);

/// Throws CapExceeded after a capped closure, Error when never closed.
void require_finite(const Monoid& m, const std::string& what);

bool generates(std::span<const Matrix> p, const Monoid& m);
bool is_minimal_generating(std::span<const Matrix> p, const Monoid& m);

/// Memoized generation queries for subsets (bitmasks) of a fixed pool of at
/// most 64 elements of a finite monoid.
class GenerationOracle {
 public:
  GenerationOracle(const Monoid& m, std::vector<Matrix> pool);
  [[nodiscard]] std::size_t pool_size() const { return pool_.size(); }
  std::size_t closure_size(std::uint64_t mask);
  bool generates(std::uint64_t mask);
  bool minimal(std::uint64_t mask);

 private:
  std::size_t target_;
  std::vector<Matrix> pool_;
  std::vector<std::vector<std::uint32_t>> table_;
  std::unordered_map<std::uint64_t, std::size_t> memo_;
};

/// Monoid generated by the transposes; element set transposed when closed.
Monoid dual(const Monoid& m);

struct SemireflectionSplit {
  std::vector<Matrix> units;  // M1
  Monoid projection_part;     // M0
  bool projection_part_is_all_singulars;
};

SemireflectionSplit units_and_projection_part(const Monoid& m);

/// Invertible f with f M f^-1 = N, if one exists.
std::optional<Matrix> equivalent(const Monoid& m, const Monoid& n);

/// f g f^-1 in target for every generator g of m.
bool conjugates_into(const Matrix& f, const Matrix& f_inv, const Monoid& m, const Monoid& target);

}  // namespace projmon

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "projmon/linalg.hpp"
#include "projmon/monoid.hpp"

namespace projmon {

std::vector<Subspace> kernels(const Monoid& m);
std::vector<Subspace> images(const Monoid& m);
Subspace kernel_sum(const Monoid& m);
Subspace image_intersection(const Monoid& m);

struct CompletenessResult {
  bool complete;
  std::optional<std::pair<Subspace, Subspace>> missing;  // (K, L) with prj(K, L) absent
};

CompletenessResult is_complete(const Monoid& m);

struct IrreducibilityResult {
  bool irreducible;
  std::optional<Subspace> witness;  // proper non-zero invariant subspace
};

/// Searches bipartitions of the generators (each must be a semireflection;
/// for g != 1 its "kernel" is im(g - 1) and its "image" ker(g - 1)).
IrreducibilityResult is_irreducible(const Monoid& m);

/// W invariant under every generator.
bool is_invariant(const Monoid& m, const Subspace& w);

struct CompleteReducibility {
  bool completely_reducible;
  bool direct_sum;  // V = S + T with S n T = 0
  bool complete;
  /// Invariant summands W, X with V = W + X (only when reducible and CR).
  std::vector<Subspace> decomposition;
};

CompleteReducibility is_completely_reducible(const Monoid& m);

enum class TraceMethod { Full, Pairs };

struct TraceGroup {
  std::int64_t order;
  /// PAIRS on a monoid equivalent to A_2, where it undercounts.
  bool pairs_unreliable = false;
};

TraceGroup trace_group(const Monoid& m, TraceMethod method);

struct CountPrediction {
  std::size_t kernels, images;
  std::int64_t trace_group;
  bool zero_predicted;  // Ker n Im non-empty
  bool zero_present;
  std::int64_t predicted;
  std::int64_t actual;
};

/// k l |G| + 1 + [Ker n Im non-empty] for irreducible dimension-2 monoids.
CountPrediction predicted_count(const Monoid& m);

/// Every kernel lies in one of any three images meeting in 0 (dimension 3).
bool star_condition(const Monoid& m);

/// A kernel K and image A such that every other image contains K and every
/// other kernel lies in A (dimension 3).
std::optional<std::pair<Subspace, Subspace>> split_witness(const Monoid& m);
bool is_split(const Monoid& m);

struct AnalysisReport {
  std::vector<Subspace> kernels;
  std::vector<Subspace> images;
  CompletenessResult complete;
  IrreducibilityResult irreducible;
  CompleteReducibility cr;
  Subspace kernel_sum;
  Subspace image_intersection;
  std::optional<TraceGroup> trace_full;
  std::optional<TraceGroup> trace_pairs;
  std::optional<CountPrediction> count;
  bool zero_present;
  std::optional<bool> star;
  std::optional<bool> split;
  bool projection_part_is_all_singulars;
};

/// Which parts of the report to compute.
struct ReportRequest {
  bool trace = true;
  bool card = true;
  bool star = true;
  bool split = true;
};

AnalysisReport analyze(const Monoid& m, const ReportRequest& req = {});

/// Every proper non-zero subspace invariant under all of gens, by direct
/// enumeration of lines and hyperplanes (prime fields, dimension <= 3).
std::vector<Subspace> invariant_subspaces_prime(const Field& f, std::size_t n, const std::vector<Matrix>& gens);

// ------------------------------------------------------------------ affine

std::vector<Subspace> affine_kernels(const Monoid& m);
std::vector<AffineSubspace> affine_images(const Monoid& m);

struct AffineCompleteness {
  bool complete;
  std::optional<std::pair<Subspace, AffineSubspace>> missing;
};

AffineCompleteness is_complete_affine(const Monoid& m);

struct AffineIrreducibility {
  bool irreducible;
  std::optional<AffineSubspace> witness;
};

/// No proper affine subspace of positive dimension is invariant.
AffineIrreducibility is_irreducible_affine(const Monoid& m);

/// Monoid generated by the linear parts of the generators.
Monoid underlying_linear(const Monoid& m, std::size_t cap = kDefaultCap);

bool has_parallel_images(const Monoid& m);

struct AffcompCheck {
  bool linear_complete;
  bool no_parallel_images;
  bool char0_finite;
  bool hypotheses;  // linear_complete && (no_parallel_images || char0_finite)
  bool complete;
  bool holds;  // hypotheses imply complete
};

AffcompCheck affcomp_check(const Monoid& m);

}  // namespace projmon

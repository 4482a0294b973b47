#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "projmon/catalog.hpp"
#include "projmon/frame.hpp"
#include "projmon/linalg.hpp"
#include "projmon/monoid.hpp"

namespace projmon {

enum class Family { X, Y, Z };

struct ClassificationTag {
  Family family;
  std::vector<Scalar> s;   // X only, canonical
  int index = 0;           // i for X and Z
  std::optional<Scalar> w; // Y only, canonical
  bool via_dual = false;
  Matrix witness;          // witness * M' * witness^-1 = canonical instance, M' = M or dual(M)
  std::size_t lines_kernels = 0, lines_images = 0, lines_common = 0;

  /// Family and canonical parameters; the witness is not part of the name.
  [[nodiscard]] std::string name() const;
  [[nodiscard]] bool same_class(const ClassificationTag& o) const;
};

/// Canonical instance of the tagged family over f.
Monoid canonical_instance(const ClassificationTag& t, const Field& f, std::size_t cap = kDefaultCap);

ClassificationTag classify_c2(const Monoid& m);

/// Least member of the orbit of S under the two rescaling moves.
std::pair<std::vector<Scalar>, int> canonicalize_X(std::vector<Scalar> s, int i);

/// Least of w and w^-1.
Scalar canonicalize_Y(const Scalar& w);

enum class R3Target { A3, B32 };
std::string to_string(R3Target t);

struct EmbeddingReport {
  R3Target target;
  bool via_dual;
  Matrix witness;  // witness * g * witness^-1 in the target for every g
  FrameSearchStats stats;
};

EmbeddingReport classify_r3(const Monoid& m, std::size_t max_nodes = 1000000);

using Arc = std::pair<std::size_t, std::size_t>;

bool is_tournament(const std::vector<Arc>& arcs, std::size_t vertices);
bool strongly_connected(const std::vector<Arc>& arcs, std::size_t vertices, std::size_t first = 0);

/// Arcs over {0..n}: minimal generating for A_n iff a strongly connected tournament.
bool mingen_criterion_A(const std::vector<Arc>& arcs, std::size_t n);

/// Subsets of b_generators(n, t, f).
bool gen_criterion_B(const std::vector<BGen>& p, std::size_t n, std::int64_t t, const Field& f);
bool mingen_criterion_B(const std::vector<BGen>& p, std::size_t n, std::int64_t t, const Field& f);

}  // namespace projmon

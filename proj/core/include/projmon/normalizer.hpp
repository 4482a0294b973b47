#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "projmon/frame.hpp"
#include "projmon/linalg.hpp"
#include "projmon/monoid.hpp"

namespace projmon {

struct ReflectionWitness {
  Matrix matrix;
  Scalar zeta;  // the non-unit eigenvalue (1 for a transvection)
  std::optional<std::int64_t> order;
  bool transvection;
  std::vector<std::size_t> kernel_permutation;  // kernel i -> kernel perm[i]
  Scalar lambda;                                // frame solution = lambda * matrix
};

struct NormalizerReport {
  FieldSpec field;
  std::vector<ReflectionWitness> reflections;  // sorted by matrix
  std::size_t group_order;
  std::optional<std::string> identified_as;
  std::string caveat;
  FrameSearchStats stats;
};

inline constexpr const char* kNormalizerCaveat =
    "search space: reflections with entries in the working field whose non-unit eigenvalue is a root of unity "
    "there, plus transvections; reflections of infinite order are not searched, and normalising maps that need "
    "a larger field are missed";

/// Reflections r with r M r^-1 = M, found among maps permuting Ker(M) and Im(M).
NormalizerReport normalizing_reflections(const Monoid& m, std::size_t max_nodes = 1000000);

/// Scalar multiples of a that are reflections (finite order or transvection).
std::vector<std::pair<Matrix, Scalar>> reflection_multiples(const Matrix& a);

/// |G(m, p, n)| = m^n n! / p.
std::int64_t expected_gmpn_order(std::int64_t m, std::int64_t p, std::int64_t n);

}  // namespace projmon

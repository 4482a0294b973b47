#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "projmon/field.hpp"
#include "projmon/monoid.hpp"

namespace projmon::app {

/// Family name plus whichever parameters it uses.
struct FamilyParams {
  std::string family;  // A, Aplus, B, X, Y, Z, C, D
  std::size_t n = 2;
  std::int64_t t = 1;
  int i = 0;
  std::vector<std::string> s;  // X: S, D: X
  std::string w;
};

/// Integers, rationals "a/b", or roots of unity "e(k/m)" = exp(2 pi i k/m).
/// In Cyclotomic(N) the root e(1/N) is the generator zeta.
Scalar parse_scalar(const std::string& text, const Field& f);

/// Monoid with the family's generators, not yet closed.
Monoid build_family(const FamilyParams& p, const Field& f);

}  // namespace projmon::app

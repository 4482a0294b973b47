#pragma once

#include <cstddef>
#include <functional>

#include "projmon/linalg.hpp"
#include "projmon/monoid.hpp"

namespace projmon {

/// Line data used to pin down a linear map up to scalar: kernel lines in V
/// and normals of image hyperplanes in V*.
struct FrameItems {
  std::vector<Vec> kernels;
  std::vector<Vec> normals;
};

FrameItems frame_items(const LineData& d);

enum class FrameSearchResult { Exhausted, Stopped, Inconclusive, Capped };

struct FrameSearchStats {
  std::size_t nodes = 0;
  std::size_t candidates = 0;
  std::size_t underdetermined = 0;
};

/// Enumerates invertible f, each once up to scalar, sending every source
/// kernel line onto a target kernel line and every source image onto a target
/// image, injectively within each type.  visit(f) returns true to stop.
FrameSearchResult frame_search(const Field& f, std::size_t n, const FrameItems& src, const FrameItems& dst,
                               const std::function<bool(const Matrix&)>& visit,
                               std::size_t max_nodes = 1000000, FrameSearchStats* stats = nullptr);

}  // namespace projmon

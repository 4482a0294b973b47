#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "projmon/analysis.hpp"
#include "projmon/classify.hpp"
#include "projmon/linalg.hpp"
#include "projmon/monoid.hpp"
#include "projmon/normalizer.hpp"

namespace projmon {

using json = nlohmann::json;

/// Rationals as "num/den", cyclotomic elements as coefficient arrays, GF(p) as integers.
json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, const Field& f);

json to_json(const Vec& v);
Vec vec_from_json(const json& j, const Field& f);

/// Row-major nested arrays (the field travels separately).
json matrix_rows(const Matrix& m);
Matrix matrix_from_rows(const json& j, const Field& f);

/// {"field", "rows"}.
json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

/// {"A", "b"}.
json to_json(const AffineMap& m);
AffineMap affine_from_json(const json& j, const Field& f);

json to_json(const Subspace& s);

struct Descriptor {
  FieldSpec field;
  std::size_t dim = 0;
  MonoidKind kind = MonoidKind::Linear;
  std::vector<Matrix> generators;  // augmented for affine monoids
};

Descriptor descriptor_of(const Monoid& m);
Monoid monoid_from(const Descriptor& d);

/// {"field", "dim", "kind", "generators"}.
json to_json(const Descriptor& d);
Descriptor descriptor_from_json(const json& j);

/// Stable text form used for digests: keys sorted, no whitespace.
std::string canonical_text(const Descriptor& d);

/// Element list of a closed monoid, in discovery order.
json elements_to_json(const Monoid& m);
std::vector<Matrix> elements_from_json(const json& j, const Monoid& m);

json to_json(const AnalysisReport& r);
json to_json(const NormalizerReport& r);
json to_json(const ClassificationTag& t);
json to_json(const EmbeddingReport& r);

}  // namespace projmon

#include "projmon/serialize.hpp"

#include "projmon/error.hpp"

namespace projmon {

json to_json(const Scalar& s) {
  const Field f = s.field();
  switch (f.spec().kind) {
    case FieldSpec::Kind::Rationals: return s.coefficients().front().to_string();
    case FieldSpec::Kind::PrimeField: return s.residue();
    case FieldSpec::Kind::Cyclotomic: {
      json a = json::array();
      for (const auto& c : s.coefficients()) a.push_back(c.to_string());
      return a;
    }
  }
  throw Error("unknown field kind");
}

namespace {

Rational rational_from(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw Error("expected a rational, got " + j.dump());
}

}  // namespace

Scalar scalar_from_json(const json& j, const Field& f) {
  switch (f.spec().kind) {
    case FieldSpec::Kind::Rationals: return f.from_rational(rational_from(j));
    case FieldSpec::Kind::PrimeField: {
      if (!j.is_number_integer()) throw Error("GF(p) scalars are integers, got " + j.dump());
      return Scalar::from_residue(f, j.get<std::int64_t>());
    }
    case FieldSpec::Kind::Cyclotomic: {
      if (!j.is_array()) return f.from_rational(rational_from(j));
      if (j.size() > f.degree()) throw Error("cyclotomic scalar has too many coefficients: " + j.dump());
      std::vector<Rational> c;
      for (const auto& x : j) c.push_back(rational_from(x));
      c.resize(f.degree(), Rational(0));
      return Scalar::from_coefficients(f, std::move(c));
    }
  }
  throw Error("unknown field kind");
}

json to_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Vec vec_from_json(const json& j, const Field& f) {
  if (!j.is_array()) throw Error("expected a vector, got " + j.dump());
  Vec v;
  for (const auto& x : j) v.push_back(scalar_from_json(x, f));
  return v;
}

json matrix_rows(const Matrix& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(to_json(m.row(r)));
  return a;
}

Matrix matrix_from_rows(const json& j, const Field& f) {
  if (!j.is_array() || j.empty()) throw Error("expected a non-empty array of rows");
  std::vector<Vec> rows;
  for (const auto& r : j) rows.push_back(vec_from_json(r, f));
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) throw Error("ragged matrix rows");
  }
  return Matrix::from_rows(f, rows);
}

json to_json(const Matrix& m) { return {{"field", m.field().spec().to_string()}, {"rows", matrix_rows(m)}}; }

Matrix matrix_from_json(const json& j) {
  Field f(FieldSpec::parse(j.at("field").get<std::string>()));
  return matrix_from_rows(j.at("rows"), f);
}

json to_json(const AffineMap& m) { return {{"A", matrix_rows(m.linear_part())}, {"b", to_json(m.translation())}}; }

AffineMap affine_from_json(const json& j, const Field& f) {
  return AffineMap(matrix_from_rows(j.at("A"), f), vec_from_json(j.at("b"), f));
}

json to_json(const Subspace& s) {
  json a = json::array();
  for (const auto& v : s.basis()) a.push_back(to_json(v));
  return a;
}

Descriptor descriptor_of(const Monoid& m) { return {m.field().spec(), m.dim(), m.kind(), m.generators()}; }

Monoid monoid_from(const Descriptor& d) {
  Field f(d.field);
  if (d.kind == MonoidKind::Linear) return Monoid(f, d.dim, d.generators);
  std::vector<AffineMap> g;
  for (const auto& a : d.generators) g.push_back(AffineMap::from_augmented(a));
  return Monoid(f, d.dim, g);
}

json to_json(const Descriptor& d) {
  json gens = json::array();
  for (const auto& g : d.generators) {
    if (d.kind == MonoidKind::Linear) gens.push_back(matrix_rows(g));
    else gens.push_back(to_json(AffineMap::from_augmented(g)));
  }
  return {{"field", d.field.to_string()},
          {"dim", d.dim},
          {"kind", d.kind == MonoidKind::Linear ? "linear" : "affine"},
          {"generators", gens}};
}

Descriptor descriptor_from_json(const json& j) {
  Descriptor d;
  d.field = FieldSpec::parse(j.at("field").get<std::string>());
  d.dim = j.at("dim").get<std::size_t>();
  auto kind = j.value("kind", std::string("linear"));
  if (kind == "linear") d.kind = MonoidKind::Linear;
  else if (kind == "affine") d.kind = MonoidKind::Affine;
  else throw Error("descriptor kind must be linear or affine, got " + kind);
  Field f(d.field);
  for (const auto& g : j.at("generators")) {
    Matrix m = d.kind == MonoidKind::Linear ? matrix_from_rows(g, f) : affine_from_json(g, f).to_augmented();
    std::size_t want = d.kind == MonoidKind::Linear ? d.dim : d.dim + 1;
    if (m.rows() != want || m.cols() != want) throw Error("generator shape does not match dim " + std::to_string(d.dim));
    d.generators.push_back(std::move(m));
  }
  return d;
}

std::string canonical_text(const Descriptor& d) { return to_json(d).dump(); }

json elements_to_json(const Monoid& m) {
  json a = json::array();
  for (const auto& e : m.elements()) a.push_back(matrix_rows(e));
  return a;
}

std::vector<Matrix> elements_from_json(const json& j, const Monoid& m) {
  std::vector<Matrix> out;
  for (const auto& e : j) {
    Matrix x = matrix_from_rows(e, m.field());
    if (x.rows() != m.matrix_dim() || x.cols() != m.matrix_dim()) throw Error("cached element has the wrong shape");
    out.push_back(std::move(x));
  }
  return out;
}

namespace {

json subspaces(const std::vector<Subspace>& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(to_json(s));
  return a;
}

json trace_json(const std::optional<TraceGroup>& t) {
  if (!t) return nullptr;
  return {{"order", t->order}, {"pairsUnreliable", t->pairs_unreliable}};
}

}  // namespace

json to_json(const AnalysisReport& r) {
  json j;
  j["kernels"] = subspaces(r.kernels);
  j["images"] = subspaces(r.images);
  j["complete"] = r.complete.complete;
  if (r.complete.missing) {
    j["missing"] = {{"kernel", to_json(r.complete.missing->first)}, {"image", to_json(r.complete.missing->second)}};
  }
  j["irreducible"] = r.irreducible.irreducible;
  if (r.irreducible.witness) j["invariantSubspace"] = to_json(*r.irreducible.witness);
  j["completelyReducible"] = r.cr.completely_reducible;
  j["directSum"] = r.cr.direct_sum;
  j["decomposition"] = subspaces(r.cr.decomposition);
  j["kernelSum"] = to_json(r.kernel_sum);
  j["imageIntersection"] = to_json(r.image_intersection);
  j["traceFull"] = trace_json(r.trace_full);
  j["tracePairs"] = trace_json(r.trace_pairs);
  if (r.count) {
    j["card"] = {{"kernels", r.count->kernels},       {"images", r.count->images},
                 {"traceGroup", r.count->trace_group}, {"zeroPredicted", r.count->zero_predicted},
                 {"zeroPresent", r.count->zero_present}, {"predicted", r.count->predicted},
                 {"actual", r.count->actual}};
  } else {
    j["card"] = nullptr;
  }
  j["zeroPresent"] = r.zero_present;
  j["star"] = r.star ? json(*r.star) : json(nullptr);
  j["split"] = r.split ? json(*r.split) : json(nullptr);
  j["projectionPartIsAllSingulars"] = r.projection_part_is_all_singulars;
  return j;
}

json to_json(const NormalizerReport& r) {
  json refl = json::array();
  for (const auto& w : r.reflections) {
    json perm = json::array();
    for (auto p : w.kernel_permutation) perm.push_back(p);
    refl.push_back({{"matrix", matrix_rows(w.matrix)},
                    {"zeta", to_json(w.zeta)},
                    {"order", w.order ? json(*w.order) : json(nullptr)},
                    {"transvection", w.transvection},
                    {"kernelPermutation", perm}});
  }
  return {{"field", r.field.to_string()},
          {"groupOrder", r.group_order},
          {"reflections", refl},
          {"identifiedAs", r.identified_as ? json(*r.identified_as) : json(nullptr)},
          {"caveat", r.caveat},
          {"searchNodes", r.stats.nodes}};
}

json to_json(const ClassificationTag& t) {
  json j;
  j["family"] = t.family == Family::X ? "X" : t.family == Family::Y ? "Y" : "Z";
  j["name"] = t.name();
  json p;
  if (t.family == Family::X) {
    json s = json::array();
    for (const auto& x : t.s) s.push_back(to_json(x));
    p["S"] = s;
    p["i"] = t.index;
  } else if (t.family == Family::Y) {
    p["w"] = to_json(*t.w);
  } else {
    p["i"] = t.index;
  }
  j["canonicalParams"] = p;
  j["viaDual"] = t.via_dual;
  j["witness"] = matrix_rows(t.witness);
  j["fingerprint"] = {{"kernels", t.lines_kernels}, {"images", t.lines_images}, {"common", t.lines_common}};
  return j;
}

json to_json(const EmbeddingReport& r) {
  return {{"target", to_string(r.target)},
          {"viaDual", r.via_dual},
          {"witness", matrix_rows(r.witness)},
          {"searchNodes", r.stats.nodes}};
}

}  // namespace projmon

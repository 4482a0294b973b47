#include "families.hpp"

#include <numeric>
#include <regex>

#include "projmon/catalog.hpp"
#include "projmon/error.hpp"
#include "projmon/rational.hpp"

namespace projmon::app {

namespace {

Scalar root_of_unity(std::int64_t k, std::int64_t m, const Field& f) {
  if (m < 1) throw Error("root of unity needs a positive order");
  k = ((k % m) + m) % m;
  const auto& spec = f.spec();
  if (spec.kind == FieldSpec::Kind::Cyclotomic) {
    std::int64_t n = spec.param;
    if (n % m == 0) return f.zeta().pow(k * (n / m));
    if (n % 2 == 1 && (2 * n) % m == 0) {
      Scalar z2n = -f.zeta().pow((n + 1) / 2);
      return z2n.pow(k * (2 * n / m));
    }
  } else if (spec.kind == FieldSpec::Kind::Rationals) {
    if (k == 0) return f.one();
    if (2 * k == m) return -f.one();
  } else if (auto r = f.primitive_root(m)) {
    return r->pow(k);
  }
  throw Error("field " + spec.to_string() + " has no root e(" + std::to_string(k) + "/" + std::to_string(m) + ")");
}

}  // namespace

Scalar parse_scalar(const std::string& text, const Field& f) {
  static const std::regex root(R"(\s*(-?)e\((-?\d+)/(\d+)\)\s*)");
  std::smatch mt;
  if (std::regex_match(text, mt, root)) {
    Scalar r = root_of_unity(std::stoll(mt[2]), std::stoll(mt[3]), f);
    return mt[1].length() ? -r : r;
  }
  return f.from_rational(Rational::parse(text));
}

Monoid build_family(const FamilyParams& p, const Field& f) {
  auto scalars = [&] {
    std::vector<Scalar> v;
    for (const auto& x : p.s) v.push_back(parse_scalar(x, f));
    return v;
  };
  std::vector<Matrix> g;
  const std::string& fam = p.family;
  if (fam == "A") {
    for (auto& a : a_generators(p.n, f)) g.push_back(a.m);
    return Monoid(f, p.n, std::move(g));
  }
  if (fam == "Aplus") {
    for (auto& a : aplus_generators(p.n, f)) g.push_back(a.m);
    return Monoid(f, p.n + 1, std::move(g));
  }
  if (fam == "B") {
    for (auto& b : b_generators(p.n, p.t, f)) g.push_back(b.m);
    return Monoid(f, p.n, std::move(g));
  }
  if (fam == "X" || fam == "Y" || fam == "Z") {
    LineSets ls = fam == "X" ? x_lines(scalars(), p.i, f) : fam == "Y" ? y_lines(parse_scalar(p.w, f)) : z_lines(p.i, f);
    return Monoid(f, 2, complete_generators(ls.kernels, ls.images));
  }
  if (fam == "C") return Monoid(f, p.n, affine_c_generators(p.n, f));
  if (fam == "D") return Monoid(f, p.n, affine_d_generators(p.n, p.t, scalars(), f));
  throw Error("unknown family '" + fam + "' (expected A, Aplus, B, X, Y, Z, C or D)");
}

}  // namespace projmon::app

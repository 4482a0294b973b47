#include "projmon/field.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "projmon/error.hpp"

namespace projmon {

namespace detail {

struct FieldData {
  FieldSpec spec;
  std::int64_t characteristic = 0;
  std::int64_t unity_count = 2;
  std::size_t degree = 1;
  std::vector<std::int64_t> cyclo;  // monic Phi_N, low degree first, size degree+1
  std::int64_t p = 0;
  std::int64_t gf_generator = 1;
};

}  // namespace detail

namespace {

using detail::FieldData;
using Kind = FieldSpec::Kind;

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// Exact division of integer polynomials (low degree first) by a monic divisor.
std::vector<std::int64_t> divide_monic(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
  std::size_t dn = den.size() - 1;
  std::vector<std::int64_t> quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    std::int64_t c = num[k];
    quot[k - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  return quot;
}

std::vector<std::int64_t> cyclotomic_poly(std::int64_t n) {
  std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_monic(p, cyclotomic_poly(d));
  }
  return p;
}

std::unique_ptr<FieldData> build(const FieldSpec& spec) {
  auto d = std::make_unique<FieldData>();
  d->spec = spec;
  switch (spec.kind) {
    case Kind::Rationals:
      d->spec.param = 1;
      break;
    case Kind::Cyclotomic: {
      if (spec.param < 1 || spec.param > 420) {
        throw Error("cyclotomic order must be in [1, 420], got " + std::to_string(spec.param));
      }
      d->cyclo = cyclotomic_poly(spec.param);
      d->degree = d->cyclo.size() - 1;
      d->unity_count = spec.param % 2 == 0 ? spec.param : 2 * spec.param;
      break;
    }
    case Kind::PrimeField: {
      if (!is_prime(spec.param) || spec.param >= (std::int64_t{1} << 31)) {
        throw Error("prime field needs a prime below 2^31, got " + std::to_string(spec.param));
      }
      d->p = spec.param;
      d->characteristic = spec.param;
      d->unity_count = spec.param - 1;
      // smallest primitive root
      std::int64_t m = spec.param - 1;
      std::vector<std::int64_t> factors;
      for (std::int64_t q = 2, r = m; r > 1; ++q) {
        if (q * q > r) {
          factors.push_back(r);
          break;
        }
        if (r % q == 0) {
          factors.push_back(q);
          while (r % q == 0) r /= q;
        }
      }
      for (std::int64_t g = 1; g < spec.param; ++g) {
        bool ok = std::all_of(factors.begin(), factors.end(),
                              [&](std::int64_t q) { return mod_pow(g, m / q, spec.param) != 1; });
        if (ok) {
          d->gf_generator = g;
          break;
        }
      }
      break;
    }
  }
  return d;
}

const FieldData* intern(const FieldSpec& spec) {
  static std::mutex mu;
  static std::map<FieldSpec, std::unique_ptr<FieldData>> table;
  std::lock_guard lock(mu);
  auto it = table.find(spec);
  if (it == table.end()) it = table.emplace(spec, build(spec)).first;
  return it->second.get();
}

void require_same(const FieldData* a, const FieldData* b) {
  if (a != b) throw Error("scalars from different fields: " + a->spec.to_string() + " vs " + b->spec.to_string());
}

// Solve A y = rhs over Q; A square and invertible.
std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> a, std::vector<Rational> rhs) {
  std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw Error("division by zero in cyclotomic field");
    std::swap(a[piv], a[col]);
    std::swap(rhs[piv], rhs[col]);
    Rational inv = a[col][col].inverse();
    for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Rational f = a[r][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q.sign() < 0) return std::nullopt;
  mpq_class v = q.to_mpq();
  mpz_class n = v.get_num(), d = v.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn = sqrt(n), rd = sqrt(d);
  return Rational::from_mpq(mpq_class(rn, rd));
}

// Best rational approximation by continued fractions.
std::optional<Rational> reconstruct(long double x) {
  constexpr std::int64_t kMaxDen = 1000000;
  long double a = x;
  std::int64_t h0 = 1, h1 = 0, k0 = 0, k1 = 1;  // convergents h/k
  for (int it = 0; it < 64; ++it) {
    long double fl = std::floor(a);
    if (std::fabs(fl) > 1e15L) return std::nullopt;
    auto ai = static_cast<std::int64_t>(fl);
    std::int64_t h2 = ai * h0 + h1, k2 = ai * k0 + k1;
    if (k2 > kMaxDen) break;
    h1 = h0; h0 = h2; k1 = k0; k0 = k2;
    long double approx = static_cast<long double>(h0) / static_cast<long double>(k0);
    if (std::fabs(approx - x) < 1e-10L * std::max<long double>(1, std::fabs(x))) return Rational(h0, k0);
    long double frac = a - fl;
    if (frac < 1e-18L) break;
    a = 1 / frac;
  }
  long double approx = static_cast<long double>(h0) / static_cast<long double>(k0);
  if (k0 > 0 && std::fabs(approx - x) < 1e-10L * std::max<long double>(1, std::fabs(x))) return Rational(h0, k0);
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------- FieldSpec

FieldSpec FieldSpec::parse(std::string_view s) {
  if (s == "Q") return rationals();
  auto number = [&](std::string_view t) -> std::int64_t {
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; }) || t.size() > 9) {
      throw Error("bad field spec '" + std::string(s) + "' (expected Q, C<N> or F<p>)");
    }
    return std::stoll(std::string(t));
  };
  if (!s.empty() && s[0] == 'C') return cyclotomic(number(s.substr(1)));
  if (!s.empty() && s[0] == 'F') return prime(number(s.substr(1)));
  throw Error("bad field spec '" + std::string(s) + "' (expected Q, C<N> or F<p>)");
}

std::string FieldSpec::to_string() const {
  switch (kind) {
    case Kind::Rationals: return "Q";
    case Kind::Cyclotomic: return "C" + std::to_string(param);
    case Kind::PrimeField: return "F" + std::to_string(param);
  }
  return "?";
}

// ---------------------------------------------------------------- Field

Field::Field() : d_(intern(FieldSpec{})) {}
Field::Field(const FieldSpec& spec) : d_(intern(spec)) {}

const FieldSpec& Field::spec() const { return d_->spec; }
std::int64_t Field::characteristic() const { return d_->characteristic; }
std::int64_t Field::unity_count() const { return d_->unity_count; }
std::size_t Field::degree() const { return d_->degree; }

Scalar Field::zero() const {
  Scalar s(d_);
  if (d_->spec.kind == Kind::Cyclotomic) s.c_.assign(d_->degree, Rational());
  return s;
}

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const { return from_rational(Rational(v)); }

Scalar Field::from_rational(const Rational& q) const {
  Scalar s = zero();
  switch (d_->spec.kind) {
    case Kind::Rationals: s.q_ = q; break;
    case Kind::Cyclotomic: s.c_[0] = q; break;
    case Kind::PrimeField: {
      mpq_class v = q.to_mpq();
      mpz_class p = d_->p;
      mpz_class num = v.get_num() % p, den = v.get_den() % p;
      if (num < 0) num += p;
      if (den == 0) throw Error("denominator divisible by the characteristic");
      std::int64_t inv = mod_pow(den.get_si(), d_->p - 2, d_->p);
      s.r_ = num.get_si() * inv % d_->p;
      break;
    }
  }
  return s;
}

Scalar Field::zeta() const {
  if (d_->spec.kind != Kind::Cyclotomic) throw Error("zeta() needs a cyclotomic field");
  std::vector<Rational> c(d_->degree, Rational());
  if (d_->degree == 1) {
    c[0] = Rational(-d_->cyclo[0]);  // x = -Phi_N(0) when Phi_N is linear
  } else {
    c[1] = Rational(1);
  }
  return Scalar::from_coefficients(*this, std::move(c));
}

Scalar Field::unity_generator() const {
  switch (d_->spec.kind) {
    case Kind::Rationals: return from_int(-1);
    case Kind::Cyclotomic: return d_->spec.param % 2 == 0 ? zeta() : -zeta();
    case Kind::PrimeField: return Scalar::from_residue(*this, d_->gf_generator);
  }
  return one();
}

bool Field::has_roots_of_unity(std::int64_t t) const { return t >= 1 && d_->unity_count % t == 0; }

std::optional<Scalar> Field::primitive_root(std::int64_t k) const {
  if (!has_roots_of_unity(k)) return std::nullopt;
  return unity_generator().pow(d_->unity_count / k);
}

std::vector<Scalar> Field::roots_of_unity(std::int64_t t) const {
  auto w = primitive_root(t);
  if (!w) throw Error("field " + d_->spec.to_string() + " has no primitive " + std::to_string(t) + "-th root of unity");
  std::vector<Scalar> out;
  Scalar x = one();
  for (std::int64_t k = 0; k < t; ++k) {
    out.push_back(x);
    x *= *w;
  }
  return out;
}

std::optional<Scalar> Field::sqrt(const Scalar& c) const {
  require_same(d_, c.f_);
  if (c.is_zero()) return c;
  switch (d_->spec.kind) {
    case Kind::Rationals: {
      auto r = rational_sqrt(c.q_);
      if (!r) return std::nullopt;
      return from_rational(*r);
    }
    case Kind::PrimeField: {
      for (std::int64_t x = 1; x < d_->p; ++x) {
        if (x * x % d_->p == c.r_) return Scalar::from_residue(*this, x);
      }
      return std::nullopt;
    }
    case Kind::Cyclotomic: break;
  }
  if (d_->degree == 1) {
    auto r = rational_sqrt(c.c_[0]);
    if (!r) return std::nullopt;
    return from_rational(*r);
  }
  // Candidate roots from the complex embeddings, accepted only after an exact check.
  using cplx = std::complex<long double>;
  const std::int64_t n = d_->spec.param;
  const std::size_t deg = d_->degree;
  const long double tau = 2 * std::acos(-1.0L);
  std::vector<std::int64_t> units;
  for (std::int64_t k = 1; k <= n; ++k) {
    if (std::gcd(k, n) == 1) units.push_back(k);
  }
  std::vector<std::vector<cplx>> vander(deg, std::vector<cplx>(deg));
  std::vector<cplx> roots(deg);
  for (std::size_t r = 0; r < deg; ++r) {
    cplx val = 0;
    for (std::size_t j = 0; j < deg; ++j) {
      vander[r][j] = std::polar(1.0L, tau * static_cast<long double>(units[r] * static_cast<std::int64_t>(j) % n) / n);
      val += c.c_[j].to_long_double() * vander[r][j];
    }
    roots[r] = std::sqrt(val);
  }
  for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << (deg - 1)); ++signs) {
    std::vector<std::vector<cplx>> a = vander;
    std::vector<cplx> rhs(deg);
    for (std::size_t r = 0; r < deg; ++r) rhs[r] = (r > 0 && ((signs >> (r - 1)) & 1)) ? -roots[r] : roots[r];
    bool singular = false;
    for (std::size_t col = 0; col < deg && !singular; ++col) {
      std::size_t piv = col;
      for (std::size_t r = col + 1; r < deg; ++r) {
        if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
      }
      if (std::abs(a[piv][col]) < 1e-12L) {
        singular = true;
        break;
      }
      std::swap(a[piv], a[col]);
      std::swap(rhs[piv], rhs[col]);
      for (std::size_t r = 0; r < deg; ++r) {
        if (r == col) continue;
        cplx f = a[r][col] / a[col][col];
        for (std::size_t j = col; j < deg; ++j) a[r][j] -= f * a[col][j];
        rhs[r] -= f * rhs[col];
      }
    }
    if (singular) continue;
    std::vector<Rational> coeffs;
    bool ok = true;
    for (std::size_t j = 0; j < deg && ok; ++j) {
      cplx v = rhs[j] / a[j][j];
      if (std::fabs(v.imag()) > 1e-8L) {
        ok = false;
        break;
      }
      auto q = reconstruct(v.real());
      if (!q) ok = false;
      else coeffs.push_back(*q);
    }
    if (!ok) continue;
    Scalar cand = Scalar::from_coefficients(*this, std::move(coeffs));
    if (cand * cand == c) return cand;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- Scalar

Scalar Scalar::from_coefficients(const Field& f, std::vector<Rational> c) {
  Scalar s(f.d_);
  switch (f.d_->spec.kind) {
    case Kind::Rationals:
      if (c.size() != 1) throw Error("rational scalar takes exactly one coefficient");
      s.q_ = c[0];
      break;
    case Kind::Cyclotomic:
      if (c.empty()) c.emplace_back();
      s.c_ = std::move(c);
      s.reduce();
      break;
    case Kind::PrimeField:
      throw Error("prime field scalars are built from residues");
  }
  return s;
}

Scalar Scalar::from_residue(const Field& f, std::int64_t r) {
  if (f.d_->spec.kind != Kind::PrimeField) throw Error("residues need a prime field");
  Scalar s(f.d_);
  std::int64_t p = f.d_->p;
  s.r_ = ((r % p) + p) % p;
  return s;
}

void Scalar::reduce() {
  const auto& phi = f_->cyclo;
  std::size_t deg = f_->degree;
  for (std::size_t k = c_.size(); k-- > deg;) {
    if (c_[k].is_zero()) continue;
    Rational lead = c_[k];
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi[j] != 0) c_[k - deg + j] -= lead * Rational(phi[j]);
    }
    c_[k] = Rational();
  }
  c_.resize(deg);
}

bool Scalar::is_zero() const {
  switch (f_->spec.kind) {
    case Kind::Rationals: return q_.is_zero();
    case Kind::Cyclotomic: return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
    case Kind::PrimeField: return r_ == 0;
  }
  return false;
}

bool Scalar::is_one() const {
  switch (f_->spec.kind) {
    case Kind::Rationals: return q_.is_one();
    case Kind::Cyclotomic:
      if (!c_[0].is_one()) return false;
      return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& r) { return r.is_zero(); });
    case Kind::PrimeField: return r_ == 1;
  }
  return false;
}

Scalar Scalar::operator-() const {
  Scalar s(f_);
  switch (f_->spec.kind) {
    case Kind::Rationals: s.q_ = -q_; break;
    case Kind::Cyclotomic:
      s.c_.reserve(c_.size());
      for (const auto& r : c_) s.c_.push_back(-r);
      break;
    case Kind::PrimeField: s.r_ = r_ == 0 ? 0 : f_->p - r_; break;
  }
  return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same(a.f_, b.f_);
  Scalar s(a.f_);
  switch (a.f_->spec.kind) {
    case Kind::Rationals: s.q_ = a.q_ + b.q_; break;
    case Kind::Cyclotomic:
      s.c_.resize(a.c_.size());
      for (std::size_t i = 0; i < a.c_.size(); ++i) s.c_[i] = a.c_[i] + b.c_[i];
      break;
    case Kind::PrimeField: s.r_ = (a.r_ + b.r_) % a.f_->p; break;
  }
  return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same(a.f_, b.f_);
  Scalar s(a.f_);
  switch (a.f_->spec.kind) {
    case Kind::Rationals: s.q_ = a.q_ * b.q_; break;
    case Kind::Cyclotomic: {
      std::size_t deg = a.c_.size();
      s.c_.assign(2 * deg - 1, Rational());
      for (std::size_t i = 0; i < deg; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < deg; ++j) {
          if (!b.c_[j].is_zero()) s.c_[i + j] += a.c_[i] * b.c_[j];
        }
      }
      s.reduce();
      break;
    }
    case Kind::PrimeField: s.r_ = a.r_ * b.r_ % a.f_->p; break;
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("inverse of zero");
  Scalar s(f_);
  switch (f_->spec.kind) {
    case Kind::Rationals: s.q_ = q_.inverse(); break;
    case Kind::PrimeField: s.r_ = mod_pow(r_, f_->p - 2, f_->p); break;
    case Kind::Cyclotomic: {
      std::size_t deg = f_->degree;
      // Column j of the multiplication matrix is this * x^j.
      std::vector<std::vector<Rational>> m(deg, std::vector<Rational>(deg));
      Scalar xj = Field(f_).one();
      Scalar x = Field(f_).zeta();
      for (std::size_t j = 0; j < deg; ++j) {
        Scalar col = *this * xj;
        for (std::size_t i = 0; i < deg; ++i) m[i][j] = col.c_[i];
        xj = xj * x;
      }
      std::vector<Rational> rhs(deg, Rational());
      rhs[0] = Rational(1);
      // Solution y gives this * (sum y_j x^j) = 1.
      s.c_ = solve_rational(std::move(m), std::move(rhs));
      break;
    }
  }
  return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r = Field(f_).one();
  Scalar b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e > 0) b *= b;
  }
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.f_ != b.f_) return false;
  switch (a.f_->spec.kind) {
    case Kind::Rationals: return a.q_ == b.q_;
    case Kind::Cyclotomic: return a.c_ == b.c_;
    case Kind::PrimeField: return a.r_ == b.r_;
  }
  return false;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  require_same(a.f_, b.f_);
  switch (a.f_->spec.kind) {
    case Kind::Rationals: return a.q_ <=> b.q_;
    case Kind::Cyclotomic:
      for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
      }
      return std::strong_ordering::equal;
    case Kind::PrimeField: return a.r_ <=> b.r_;
  }
  return std::strong_ordering::equal;
}

std::size_t Scalar::hash() const {
  switch (f_->spec.kind) {
    case Kind::Rationals: return q_.hash();
    case Kind::Cyclotomic: {
      std::size_t h = 0x51ED27;
      for (const auto& r : c_) h = h * 1000003u ^ r.hash();
      return h;
    }
    case Kind::PrimeField: return std::hash<std::int64_t>{}(r_);
  }
  return 0;
}

std::string Scalar::to_string() const {
  auto pretty = [](const Rational& q) {
    std::string s = q.to_string();
    if (q.is_integer()) s = s.substr(0, s.find('/'));
    return s;
  };
  switch (f_->spec.kind) {
    case Kind::Rationals: return pretty(q_);
    case Kind::PrimeField: return std::to_string(r_);
    case Kind::Cyclotomic: {
      std::ostringstream os;
      bool first = true;
      for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j].is_zero()) continue;
        std::string coef = pretty(c_[j]);
        if (!first) os << (coef[0] == '-' ? " - " : " + ");
        if (!first && coef[0] == '-') coef = coef.substr(1);
        if (j == 0) {
          os << coef;
        } else {
          if (coef == "-1") os << "-";
          else if (coef != "1") os << coef << "*";
          os << "z";
          if (j > 1) os << "^" << j;
        }
        first = false;
      }
      return first ? "0" : os.str();
    }
  }
  return "?";
}

std::optional<Rational> Scalar::as_rational() const {
  switch (f_->spec.kind) {
    case Kind::Rationals: return q_;
    case Kind::Cyclotomic:
      for (std::size_t j = 1; j < c_.size(); ++j) {
        if (!c_[j].is_zero()) return std::nullopt;
      }
      return c_[0];
    case Kind::PrimeField: return std::nullopt;
  }
  return std::nullopt;
}

std::vector<Rational> Scalar::coefficients() const {
  switch (f_->spec.kind) {
    case Kind::Rationals: return {q_};
    case Kind::Cyclotomic: return c_;
    case Kind::PrimeField: return {Rational(r_)};
  }
  return {};
}

// ---------------------------------------------------------------- roots of unity

std::optional<std::int64_t> order_of_unity(const Scalar& z) {
  if (z.is_zero()) throw Error("order_of_unity: zero is not a root of unity");
  std::int64_t m = z.field().unity_count();
  Scalar w = z;
  for (std::int64_t k = 1; k <= m; ++k) {
    if (w.is_one()) return k;
    w *= z;
  }
  return std::nullopt;
}

std::int64_t unity_subgroup_order(std::span<const Scalar> zs) {
  std::int64_t order = 1;
  for (const auto& z : zs) {
    auto k = z.is_zero() ? std::nullopt : order_of_unity(z);
    if (!k) throw Error("not a root of unity: " + z.to_string());
    order = std::lcm(order, *k);
  }
  return order;
}

}  // namespace projmon

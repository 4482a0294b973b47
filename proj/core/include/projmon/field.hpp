#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "projmon/rational.hpp"

namespace projmon {

/// Which ground field a computation lives in.  One spec is fixed per
/// computation; values over different specs never mix.
struct FieldSpec {
  enum class Kind { Rationals, Cyclotomic, PrimeField };

  Kind kind = Kind::Rationals;
  std::int64_t param = 1;  // N for Cyclotomic(N), p for PrimeField(p)

  static FieldSpec rationals() { return {}; }
  static FieldSpec cyclotomic(std::int64_t n) { return {Kind::Cyclotomic, n}; }
  static FieldSpec prime(std::int64_t p) { return {Kind::PrimeField, p}; }

  /// "Q", "C<N>" or "F<p>".
  static FieldSpec parse(std::string_view s);
  [[nodiscard]] std::string to_string() const;

  auto operator<=>(const FieldSpec&) const = default;
};

class Scalar;

namespace detail {
struct FieldData;
}

/// Handle to an interned field.  Cheap to copy; two handles compare equal iff
/// they were made from the same spec.
class Field {
 public:
  Field();  // the rationals
  explicit Field(const FieldSpec& spec);

  [[nodiscard]] const FieldSpec& spec() const;
  [[nodiscard]] std::int64_t characteristic() const;
  /// Number of roots of unity in the field (the order of its torsion group).
  [[nodiscard]] std::int64_t unity_count() const;
  /// Dimension over the prime field (phi(N) for cyclotomic fields, else 1).
  [[nodiscard]] std::size_t degree() const;

  [[nodiscard]] Scalar zero() const;
  [[nodiscard]] Scalar one() const;
  [[nodiscard]] Scalar from_int(std::int64_t v) const;
  [[nodiscard]] Scalar from_rational(const Rational& q) const;
  /// Generator of the cyclotomic field (the class of x); errors for other fields.
  [[nodiscard]] Scalar zeta() const;
  /// Generator of the cyclic group of all roots of unity.
  [[nodiscard]] Scalar unity_generator() const;
  /// A primitive k-th root of unity, if the field has one.
  [[nodiscard]] std::optional<Scalar> primitive_root(std::int64_t k) const;
  /// All t-th roots of unity as powers g^0, g^1, ... of a primitive one; errors when absent.
  [[nodiscard]] std::vector<Scalar> roots_of_unity(std::int64_t t) const;
  [[nodiscard]] bool has_roots_of_unity(std::int64_t t) const;
  /// Exact square root when one exists in the field.
  [[nodiscard]] std::optional<Scalar> sqrt(const Scalar& c) const;

  friend bool operator==(const Field& a, const Field& b) { return a.d_ == b.d_; }

 private:
  friend class Scalar;
  explicit Field(const detail::FieldData* d) : d_(d) {}
  const detail::FieldData* d_;
};

/// Exact field element in canonical form: equal values have identical
/// representations, so equality and hashing are representation-level.
class Scalar {
 public:
  [[nodiscard]] Field field() const { return Field(f_); }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_one() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  [[nodiscard]] Scalar inverse() const;
  [[nodiscard]] Scalar pow(std::int64_t e) const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Fixed total order on canonical representations (not a field order).
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  [[nodiscard]] std::size_t hash() const;
  [[nodiscard]] std::string to_string() const;

  /// Rational value; only for the rationals and cyclotomic elements of degree 0.
  [[nodiscard]] std::optional<Rational> as_rational() const;
  /// Coefficients on 1, zeta, zeta^2, ... (cyclotomic), the value (Q) or residue (GF(p)).
  [[nodiscard]] std::vector<Rational> coefficients() const;
  [[nodiscard]] std::int64_t residue() const { return r_; }

  static Scalar from_coefficients(const Field& f, std::vector<Rational> c);
  static Scalar from_residue(const Field& f, std::int64_t r);

 private:
  friend class Field;
  explicit Scalar(const detail::FieldData* f) : f_(f) {}
  void reduce();

  const detail::FieldData* f_;
  Rational q_;                 // Rationals
  std::vector<Rational> c_;    // Cyclotomic: length phi(N)
  std::int64_t r_ = 0;         // PrimeField: residue in [0, p)
};

/// Multiplicative order of z when z is a root of unity in its field.
/// Throws on z = 0.
std::optional<std::int64_t> order_of_unity(const Scalar& z);

/// Order of the cyclic group generated by a set of roots of unity (lcm of
/// their orders).  Throws, naming the offending value, on a non-root.
std::int64_t unity_subgroup_order(std::span<const Scalar> zs);

struct UnityRoot {
  std::int64_t order;
  Scalar witness;
};

struct ScalarHash {
  std::size_t operator()(const Scalar& s) const { return s.hash(); }
};

}  // namespace projmon

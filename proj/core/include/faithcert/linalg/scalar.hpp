#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace faithcert {

/// Ground field selector: the rationals, or Z/p for a prime p.
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field{}; }
  /// Throws std::invalid_argument unless p is a prime below 2^62.
  static Field prime(std::uint64_t p);
  /// Parses "rational" or "prime:<p>".
  static Field parse(std::string_view text);

  constexpr bool is_rational() const { return modulus_ == 0; }
  constexpr std::uint64_t modulus() const { return modulus_; }
  std::string name() const;

  friend constexpr bool operator==(Field, Field) = default;

 private:
  friend class Scalar;
  constexpr explicit Field(std::uint64_t modulus) : modulus_(modulus) {}

  std::uint64_t modulus_ = 0;
};

/// An exact field element, either an arbitrary-precision rational or a
/// residue modulo a prime. Arithmetic between different backends throws
/// BackendMismatch.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(Field field);

  static Scalar zero(Field field) { return Scalar(field); }
  static Scalar one(Field field) { return from_int(field, 1); }
  static Scalar from_int(Field field, long long value);
  /// Maps a rational into `field`; throws PreconditionError when the
  /// denominator vanishes modulo p.
  static Scalar from_rational(Field field, const mpq_class& value);
  /// Accepts "n", "-n" or "n/d".
  static Scalar parse(Field field, std::string_view text);

  Field field() const { return Field(modulus_); }
  bool is_rational() const { return modulus_ == 0; }
  bool is_zero() const;
  bool is_one() const;
  int sign() const;

  /// Rational value; throws std::logic_error on a prime-field scalar.
  const mpq_class& rational() const;
  std::uint64_t residue() const;

  Scalar inverse() const;
  Scalar pow(unsigned long exponent) const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  Scalar operator-() const;

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Total order used for keys: by backend, then by value (rationals
  /// numerically, residues as integers in [0, p)).
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  /// "num/den" for rationals (den always present), decimal residue for
  /// prime fields.
  std::string to_string() const;

 private:
  void require_same(const Scalar& other) const;

  mpq_class q_;
  std::uint64_t r_ = 0;
  std::uint64_t modulus_ = 0;
};

}  // namespace faithcert

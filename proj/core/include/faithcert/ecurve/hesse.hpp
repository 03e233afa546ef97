#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>

#include "faithcert/linalg/matrix.hpp"

namespace faithcert::ecurve {

/// Projective triple, normalized so that the first nonzero entry is 1.
struct ProjPoint {
  std::array<Scalar, 3> coords;

  /// Throws PreconditionError for (0,0,0).
  static ProjPoint make(const Scalar& x, const Scalar& y, const Scalar& z);
  static ProjPoint make(Field field, long long x, long long y, long long z);
  static ProjPoint from_vector(std::span<const Scalar> v);

  Field field() const { return coords[0].field(); }
  const Scalar& operator[](std::size_t i) const { return coords[i]; }
  Vector vector() const { return {coords[0], coords[1], coords[2]}; }
  std::string to_string() const;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

/// Linear form a x + b y + c z, normalized like ProjPoint.
struct LineForm {
  std::array<Scalar, 3> coeffs;

  static LineForm make(const Scalar& a, const Scalar& b, const Scalar& c);
  static LineForm from_vector(std::span<const Scalar> v);

  Field field() const { return coeffs[0].field(); }
  const Scalar& operator[](std::size_t i) const { return coeffs[i]; }
  Vector vector() const { return {coeffs[0], coeffs[1], coeffs[2]}; }
  Scalar evaluate(const ProjPoint& p) const;
  bool contains(const ProjPoint& p) const { return evaluate(p).is_zero(); }
  std::string to_string() const;

  friend bool operator==(const LineForm&, const LineForm&) = default;
  friend auto operator<=>(const LineForm&, const LineForm&) = default;
};

/// x^3 + y^3 + z^3 = 3 psi x y z with identity O = (1:-1:0).
class HesseCurve {
 public:
  /// Throws PreconditionError when psi^3 = 1 or the field has characteristic 3.
  explicit HesseCurve(Scalar psi);

  const Scalar& psi() const { return psi_; }
  Field field() const { return psi_.field(); }
  ProjPoint identity() const;

  Scalar equation(std::span<const Scalar> v) const;
  Vector gradient(std::span<const Scalar> v) const;

 private:
  Scalar psi_;
};

bool on_curve(const HesseCurve& E, const ProjPoint& P);

/// Third point of E on the line PQ (the tangent at P when P = Q).
ProjPoint third_intersection(const HesseCurve& E, const ProjPoint& P, const ProjPoint& Q);
ProjPoint neg(const HesseCurve& E, const ProjPoint& P);
ProjPoint add(const HesseCurve& E, const ProjPoint& P, const ProjPoint& Q);
ProjPoint sub(const HesseCurve& E, const ProjPoint& P, const ProjPoint& Q);
ProjPoint smul(const HesseCurve& E, long long n, const ProjPoint& P);

/// sigma(P) = P - p.
ProjPoint sigma(const HesseCurve& E, const ProjPoint& p, const ProjPoint& P);
ProjPoint sigma_inverse(const HesseCurve& E, const ProjPoint& p, const ProjPoint& P);
/// sigma^n for any integer n.
ProjPoint sigma_power(const HesseCurve& E, const ProjPoint& p, const ProjPoint& P, long long n);

/// Line through distinct points. Throws PreconditionError when P = Q.
LineForm line_through(const ProjPoint& P, const ProjPoint& Q);
LineForm line_tangent(const HesseCurve& E, const ProjPoint& P);

/// True iff np != O for n = 1..bound. Over Q, bound 12 certifies infinite
/// order. Throws PreconditionError over a prime field.
bool certify_infinite_order(const HesseCurve& E, const ProjPoint& p, unsigned bound = 12);

/// True iff 3(R - np) != O for 1 <= n <= N.
bool condition_3R(const HesseCurve& E, const ProjPoint& p, const ProjPoint& R, unsigned N);

}  // namespace faithcert::ecurve

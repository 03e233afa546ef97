#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "faithcert/lie/lie_algebra.hpp"

namespace faithcert::lie {

/// Ordered PBW monomial x_0^{a_0} ... x_{m-1}^{a_{m-1}}.
struct PbwMonomial {
  std::vector<std::uint32_t> exponents;

  std::uint32_t degree() const;
  friend auto operator<=>(const PbwMonomial&, const PbwMonomial&) = default;
};

/// Element of U(g) in PBW normal form. Elements remember the Lie algebra
/// they belong to; combining elements of different algebras throws.
class UeaElement {
 public:
  explicit UeaElement(std::shared_ptr<const LieAlgebra> algebra);

  static UeaElement zero(std::shared_ptr<const LieAlgebra> algebra) { return UeaElement(std::move(algebra)); }
  static UeaElement scalar(std::shared_ptr<const LieAlgebra> algebra, const Scalar& value);
  static UeaElement one(std::shared_ptr<const LieAlgebra> algebra);
  static UeaElement generator(std::shared_ptr<const LieAlgebra> algebra, std::size_t i);
  /// Embeds g -> U_1.
  static UeaElement from_lie(std::shared_ptr<const LieAlgebra> algebra, const Vector& x);
  static UeaElement monomial(std::shared_ptr<const LieAlgebra> algebra, PbwMonomial m, const Scalar& coeff);

  const std::shared_ptr<const LieAlgebra>& algebra() const { return algebra_; }
  Field field() const { return algebra_->field(); }
  const std::map<PbwMonomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Filtration degree; nullopt for the zero element.
  std::optional<std::uint32_t> degree() const;
  Scalar coefficient(const PbwMonomial& m) const;
  /// Constant term (coefficient of the empty monomial).
  Scalar constant_term() const;
  /// Homogeneous component of degree 1 read as an element of g.
  Vector linear_part() const;
  /// Keeps only the terms of exactly the given degree.
  UeaElement homogeneous_part(std::uint32_t degree) const;

  void add_term(const PbwMonomial& m, const Scalar& coeff);

  UeaElement& operator+=(const UeaElement& rhs);
  UeaElement& operator-=(const UeaElement& rhs);
  UeaElement& operator*=(const Scalar& s);
  UeaElement operator-() const;
  friend UeaElement operator+(UeaElement a, const UeaElement& b) { return a += b; }
  friend UeaElement operator-(UeaElement a, const UeaElement& b) { return a -= b; }
  friend UeaElement operator*(UeaElement a, const Scalar& s) { return a *= s; }
  friend UeaElement operator*(const Scalar& s, UeaElement a) { return a *= s; }
  friend UeaElement operator*(const UeaElement& a, const UeaElement& b);
  friend bool operator==(const UeaElement& a, const UeaElement& b);

  UeaElement pow(unsigned exponent) const;
  std::string to_string() const;

 private:
  void require_same(const UeaElement& other) const;

  std::shared_ptr<const LieAlgebra> algebra_;
  std::map<PbwMonomial, Scalar> terms_;
};

/// PBW normal form of a*b. Straightening rewrites x_j x_i (j > i) as
/// x_i x_j + [x_j, x_i] until every word is ordered.
UeaElement uea_multiply(const UeaElement& a, const UeaElement& b);

/// Bijective coordinates on U_d: the PBW monomials of total degree <= d,
/// ordered by degree and then lexicographically with larger exponents of
/// earlier generators first. dim U_d = C(m + d, d).
class FiltrationBasis {
 public:
  FiltrationBasis(std::shared_ptr<const LieAlgebra> algebra, std::uint32_t degree);

  std::uint32_t degree() const { return degree_; }
  std::size_t dim() const { return monomials_.size(); }
  const std::vector<PbwMonomial>& monomials() const { return monomials_; }
  const std::shared_ptr<const LieAlgebra>& algebra() const { return algebra_; }
  /// Index of the first monomial of the given total degree.
  std::size_t offset(std::uint32_t degree) const;

  /// Throws std::out_of_range when u has degree above the basis degree.
  Vector element_to_vector(const UeaElement& u) const;
  UeaElement vector_to_element(std::span<const Scalar> v) const;
  UeaElement element(std::size_t index) const;

 private:
  std::shared_ptr<const LieAlgebra> algebra_;
  std::uint32_t degree_;
  std::vector<PbwMonomial> monomials_;
  std::map<PbwMonomial, std::size_t> index_;
};

/// dim U_d = C(m + d, d).
std::size_t filtration_dim(std::size_t lie_dim, std::uint32_t degree);

}  // namespace faithcert::lie

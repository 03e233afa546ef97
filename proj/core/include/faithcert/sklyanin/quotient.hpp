#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "faithcert/linalg/subspace.hpp"
#include "faithcert/sklyanin/tensor.hpp"

namespace faithcert::sklyanin {

/// Coset in A(n), held by its coordinates on the standard words of degree n.
struct AlgebraElement {
  std::uint32_t degree = 0;
  Vector coords;

  bool is_zero() const { return faithcert::is_zero(coords); }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator*(const Scalar& s, const AlgebraElement& a);

/// A = T(V)/(R2) up to a fixed degree.
///
/// A(n) is computed from A(n-1) ⊗ V modulo the image of A(n-2) ⊗ R2. The
/// standard words of degree n are the non-pivot columns of that image in
/// word order; they coincide with the non-pivot columns of the echelonized
/// I(n) because the word order is multiplicative and standard words are
/// closed under taking prefixes.
class GradedQuotient {
 public:
  GradedQuotient(const Subspace& r2, std::uint32_t max_degree);

  Field field() const { return field_; }
  std::uint32_t max_degree() const { return max_degree_; }
  std::size_t dim(std::uint32_t n) const { return standard(n).size(); }
  /// Word indices of the standard words of degree n, increasing.
  const std::vector<std::uint64_t>& standard(std::uint32_t n) const;
  /// Right multiplication by the letter v as a map A(n-1) -> A(n).
  const Matrix& rho(std::uint32_t n, unsigned v) const;

  AlgebraElement zero(std::uint32_t n) const;
  AlgebraElement unit() const;
  AlgebraElement from_coords(std::uint32_t n, Vector coords) const;
  /// Degree-one element a x + b y + c z.
  AlgebraElement linear(std::span<const Scalar> abc) const;

  AlgebraElement normal_form(const TensorElement& f) const;
  /// Tensor supported on the standard words.
  TensorElement representative(const AlgebraElement& a) const;

  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
  /// a -> a b as a map A(m) -> A(m + deg b).
  Matrix right_multiplication(const AlgebraElement& b, std::uint32_t m) const;
  /// b -> a b as a map A(m) -> A(deg a + m).
  Matrix left_multiplication(const AlgebraElement& a, std::uint32_t m) const;

  /// A·L ∩ A(m) in A(m) coordinates.
  Subspace left_ideal_image(const AlgebraElement& L, std::uint32_t m) const;

 private:
  void require_degree(std::uint32_t n) const;
  std::size_t position(std::uint32_t n, std::uint64_t word) const;
  Vector normal_form_rec(std::span<const Scalar> f, std::uint32_t n) const;
  /// Splits b in A(k) as sum_v b_v · v with b_v in A(k-1).
  std::array<Vector, 3> split_last_letter(const AlgebraElement& b) const;

  Field field_;
  std::uint32_t max_degree_;
  std::vector<std::vector<std::uint64_t>> standard_;
  std::vector<std::array<Matrix, 3>> rho_;
};

}  // namespace faithcert::sklyanin

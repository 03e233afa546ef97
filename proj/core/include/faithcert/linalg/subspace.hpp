#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "faithcert/linalg/matrix.hpp"

namespace faithcert {

/// A linear subspace of K^n, held by its reduced row-echelon basis. The
/// echelon basis is canonical, so equality of subspaces is equality of
/// basis matrices.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(Field field, std::size_t ambient_dim);
  static Subspace full(Field field, std::size_t ambient_dim);
  static Subspace span(Field field, std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace row_space(const Matrix& m);

  Field field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }

  /// Residue of v after clearing every pivot coordinate; zero iff v is in
  /// the subspace. The residue is the projection onto the span of the
  /// non-pivot unit vectors along the subspace.
  Vector reduce(std::span<const Scalar> v) const;
  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of v on the non-pivot (complement) unit vectors.
  Vector complement_coordinates(std::span<const Scalar> v) const;
  std::vector<std::size_t> complement_indices() const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  explicit Subspace(EchelonForm form);

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
/// Zassenhaus intersection.
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
/// {v : map * v in target}.
Subspace preimage(const Matrix& map, const Subspace& target);
/// map applied to a subspace of its source.
Subspace image(const Matrix& map, const Subspace& source);
Subspace image(const Matrix& map);

}  // namespace faithcert

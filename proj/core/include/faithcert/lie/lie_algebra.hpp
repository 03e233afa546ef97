#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "faithcert/linalg/matrix.hpp"
#include "faithcert/linalg/subspace.hpp"

namespace faithcert::lie {

/// One structure constant: [x_i, x_j] has coefficient `value` on x_k.
struct StructureConstant {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Scalar value;
};

/// Finite-dimensional Lie algebra given by structure constants on a fixed
/// ordered basis x_0, ..., x_{m-1}. The constants are stored as given;
/// check_lie_axioms decides whether they define a Lie algebra.
class LieAlgebra {
 public:
  LieAlgebra(Field field, std::size_t dim, std::vector<std::string> labels = {});

  /// Stores each constant literally; unspecified constants are zero.
  static LieAlgebra from_structure_constants(Field field, std::size_t dim,
                                             const std::vector<StructureConstant>& constants,
                                             std::vector<std::string> labels = {});
  /// Like from_structure_constants but fills in c[j][i][k] = -c[i][j][k]
  /// for every pair given in one order only. Conflicting pairs throw.
  static LieAlgebra from_brackets(Field field, std::size_t dim, const std::vector<StructureConstant>& brackets,
                                  std::vector<std::string> labels = {});

  /// "abelian2", "nonabelian2" ([x,y] = y), "heisenberg" ([x,y] = z) and
  /// "sl2" (basis h, e, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h).
  static LieAlgebra builtin(std::string_view name, Field field = Field::rationals());
  static const std::vector<std::string>& builtin_names();

  Field field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * dim_ + j) * dim_ + k];
  }
  /// [x_i, x_j] as a coordinate vector.
  Vector bracket_basis(std::size_t i, std::size_t j) const;
  Vector bracket(const Vector& a, const Vector& b) const;
  Vector basis_vector(std::size_t i) const { return unit_vector(field_, dim_, i); }
  Vector zero() const { return zero_vector(field_, dim_); }

 private:
  Field field_;
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<Scalar> constants_;
};

/// Antisymmetry and the Jacobi identity, checked exactly on basis triples.
bool check_lie_axioms(const LieAlgebra& algebra);

/// Matrix of ad x acting on column coordinate vectors.
Matrix ad_matrix(const LieAlgebra& algebra, const Vector& x);
/// (ad x)^m = 0 with m = dim g.
bool is_ad_nilpotent(const LieAlgebra& algebra, const Vector& x);

bool is_abelian(const LieAlgebra& algebra);
/// Lower central series reaches zero.
bool is_nilpotent(const LieAlgebra& algebra);
/// The center z of g as a subspace of g.
Subspace center(const LieAlgebra& algebra);

/// Coefficients c_0..c_m of det(t I - M) (c_m = 1), lowest degree first.
std::vector<Scalar> characteristic_polynomial(const Matrix& m);

struct Eigenpair {
  Scalar eigenvalue;
  Vector eigenvector;
};

/// A nonzero eigenvalue of ad x in the base field together with an
/// eigenvector. Over Q the candidates come from the rational root theorem;
/// over a small prime field every residue is tried. Candidates are tried by
/// increasing absolute value, positive before negative. Returns nullopt when
/// no nonzero root lies in the base field. Throws PreconditionError when x
/// is ad-nilpotent.
std::optional<Eigenpair> find_rational_eigenpair(const LieAlgebra& algebra, const Vector& x);

}  // namespace faithcert::lie

#include "faithcert/linalg/subspace.hpp"

#include <algorithm>
#include <string>

#include "faithcert/errors.hpp"

namespace faithcert {

namespace {

void require_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionMismatch("subspace ambient dimensions differ: " + std::to_string(a.ambient_dim()) + " vs " +
                            std::to_string(b.ambient_dim()));
  }
  if (a.field() != b.field()) throw BackendMismatch("subspace backends differ");
}

}  // namespace

Subspace::Subspace(EchelonForm form) : pivots_(std::move(form.pivots)) {
  const std::size_t cols = form.reduced.cols();
  Matrix basis(form.reduced.field(), form.rank, cols);
  for (std::size_t r = 0; r < form.rank; ++r) {
    for (std::size_t c = 0; c < cols; ++c) basis(r, c) = form.reduced(r, c);
  }
  basis_ = std::move(basis);
}

Subspace Subspace::zero(Field field, std::size_t ambient_dim) {
  return Subspace(EchelonForm{Matrix(field, 0, ambient_dim), {}, 0});
}

Subspace Subspace::full(Field field, std::size_t ambient_dim) {
  std::vector<std::size_t> pivots(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) pivots[i] = i;
  return Subspace(EchelonForm{Matrix::identity(field, ambient_dim), pivots, ambient_dim});
}

Subspace Subspace::span(Field field, std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  return row_space(Matrix::from_rows(field, ambient_dim, vectors));
}

Subspace Subspace::row_space(const Matrix& m) { return Subspace(rref(m)); }

Vector Subspace::reduce(std::span<const Scalar> v) const {
  if (v.size() != ambient_dim()) throw DimensionMismatch("vector length does not match ambient dimension");
  Vector out(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Scalar coeff = out[pivots_[i]];
    if (coeff.is_zero()) continue;
    const auto row = basis_.row(i);
    for (std::size_t c = pivots_[i]; c < row.size(); ++c) {
      if (!row[c].is_zero()) out[c] -= coeff * row[c];
    }
  }
  return out;
}

bool Subspace::contains(std::span<const Scalar> v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  require_ambient(*this, other);
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_.row(i))) return false;
  }
  return true;
}

std::vector<std::size_t> Subspace::complement_indices() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_dim(); ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

Vector Subspace::complement_coordinates(std::span<const Scalar> v) const {
  const Vector r = reduce(v);
  Vector out;
  for (std::size_t c : complement_indices()) out.push_back(r[c]);
  return out;
}

bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

Subspace kernel(const Matrix& m) {
  const EchelonForm form = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : form.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v = unit_vector(m.field(), cols, f);
    for (std::size_t i = 0; i < form.rank; ++i) {
      const Scalar& a = form.reduced(i, f);
      if (!a.is_zero()) v[form.pivots[i]] = -a;
    }
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.field(), cols, basis);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_ambient(a, b);
  Matrix stacked(a.field(), a.dim() + b.dim(), a.ambient_dim());
  for (std::size_t r = 0; r < a.dim(); ++r) std::copy_n(a.basis().row(r).begin(), a.ambient_dim(), stacked.row(r).begin());
  for (std::size_t r = 0; r < b.dim(); ++r) {
    std::copy_n(b.basis().row(r).begin(), b.ambient_dim(), stacked.row(a.dim() + r).begin());
  }
  return Subspace::row_space(stacked);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  require_ambient(a, b);
  const std::size_t n = a.ambient_dim();
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.field(), n);
  // Rows [a | a] and [b | 0]; echelon rows of the form [0 | w] span the intersection.
  Matrix z(a.field(), a.dim() + b.dim(), 2 * n);
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      z(r, c) = a.basis()(r, c);
      z(r, n + c) = a.basis()(r, c);
    }
  }
  for (std::size_t r = 0; r < b.dim(); ++r) {
    for (std::size_t c = 0; c < n; ++c) z(a.dim() + r, c) = b.basis()(r, c);
  }
  const EchelonForm form = rref(z);
  std::vector<Vector> rows;
  for (std::size_t k = 0; k < form.rank; ++k) {
    if (form.pivots[k] < n) continue;
    Vector w(form.reduced.row(k).begin() + static_cast<std::ptrdiff_t>(n), form.reduced.row(k).end());
    rows.push_back(std::move(w));
  }
  return Subspace::span(a.field(), n, rows);
}

Subspace preimage(const Matrix& map, const Subspace& target) {
  if (map.rows() != target.ambient_dim()) throw DimensionMismatch("preimage: map target does not match subspace");
  if (target.dim() == 0) return kernel(map);
  Matrix reduced(map.field(), map.rows(), map.cols());
  for (std::size_t c = 0; c < map.cols(); ++c) {
    const Vector r = target.reduce(map.column_vector(c));
    for (std::size_t i = 0; i < map.rows(); ++i) reduced(i, c) = r[i];
  }
  return kernel(reduced);
}

Subspace image(const Matrix& map, const Subspace& source) {
  if (map.cols() != source.ambient_dim()) throw DimensionMismatch("image: map source does not match subspace");
  std::vector<Vector> rows;
  rows.reserve(source.dim());
  for (std::size_t i = 0; i < source.dim(); ++i) rows.push_back(map.apply(source.basis().row(i)));
  return Subspace::span(map.field(), map.rows(), rows);
}

Subspace image(const Matrix& map) { return Subspace::row_space(map.transpose()); }

}  // namespace faithcert

#include "faithcert/sklyanin/quotient.hpp"

#include <algorithm>
#include <stdexcept>

#include "faithcert/errors.hpp"

namespace faithcert::sklyanin {

namespace {

void require_same_degree(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.degree != b.degree) throw DimensionMismatch("algebra elements of different degrees");
}

}  // namespace

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_degree(a, b);
  AlgebraElement out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_degree(a, b);
  AlgebraElement out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= b.coords[i];
  return out;
}

AlgebraElement operator*(const Scalar& s, const AlgebraElement& a) {
  AlgebraElement out = a;
  for (auto& c : out.coords) c *= s;
  return out;
}

GradedQuotient::GradedQuotient(const Subspace& r2, std::uint32_t max_degree)
    : field_(r2.field()), max_degree_(max_degree) {
  if (r2.ambient_dim() != 9) throw DimensionMismatch("quadratic relations live in V⊗V");
  standard_.push_back({0});
  rho_.emplace_back();
  if (max_degree == 0) return;
  standard_.push_back({0, 1, 2});
  rho_.push_back({});
  for (unsigned v = 0; v < 3; ++v) {
    rho_[1][v] = Matrix(field_, 3, 1);
    rho_[1][v](v, 0) = Scalar::one(field_);
  }

  for (std::uint32_t n = 2; n <= max_degree; ++n) {
    const auto& prev = standard_[n - 1];
    const auto& prev2 = standard_[n - 2];
    const std::size_t cols = prev.size() * 3;
    // Column (t, b) of A(n-1) ⊗ V sits at position pos(t) * 3 + b, which is word order.
    std::vector<Vector> rows;
    for (std::size_t s = 0; s < prev2.size(); ++s) {
      for (std::size_t r = 0; r < r2.dim(); ++r) {
        Vector row = zero_vector(field_, cols);
        for (unsigned a = 0; a < 3; ++a) {
          for (unsigned b = 0; b < 3; ++b) {
            const Scalar& coeff = r2.basis()(r, a * 3 + b);
            if (coeff.is_zero()) continue;
            const Matrix& ra = rho_[n - 1][a];
            for (std::size_t t = 0; t < prev.size(); ++t) {
              if (!ra(t, s).is_zero()) row[t * 3 + b] += coeff * ra(t, s);
            }
          }
        }
        rows.push_back(std::move(row));
      }
    }
    const Subspace relations = Subspace::span(field_, cols, rows);
    std::vector<long> pivot_row(cols, -1);
    for (std::size_t i = 0; i < relations.pivots().size(); ++i) pivot_row[relations.pivots()[i]] = static_cast<long>(i);

    std::vector<std::uint64_t> words;
    std::vector<std::size_t> free_position(cols, 0);
    for (std::size_t c = 0; c < cols; ++c) {
      if (pivot_row[c] < 0) {
        free_position[c] = words.size();
        words.push_back(prev[c / 3] * 3 + c % 3);
      }
    }
    std::array<Matrix, 3> rho;
    for (unsigned v = 0; v < 3; ++v) {
      rho[v] = Matrix(field_, words.size(), prev.size());
      for (std::size_t t = 0; t < prev.size(); ++t) {
        const std::size_t c = t * 3 + v;
        if (pivot_row[c] < 0) {
          rho[v](free_position[c], t) = Scalar::one(field_);
          continue;
        }
        // Pivot word ≡ -sum over free columns of the row entries.
        const auto row = relations.basis().row(static_cast<std::size_t>(pivot_row[c]));
        for (std::size_t f = 0; f < cols; ++f) {
          if (pivot_row[f] < 0 && !row[f].is_zero()) rho[v](free_position[f], t) = -row[f];
        }
      }
    }
    standard_.push_back(std::move(words));
    rho_.push_back(std::move(rho));
  }
}

void GradedQuotient::require_degree(std::uint32_t n) const {
  if (n > max_degree_) {
    throw std::out_of_range("degree " + std::to_string(n) + " exceeds the quotient cap " + std::to_string(max_degree_));
  }
}

const std::vector<std::uint64_t>& GradedQuotient::standard(std::uint32_t n) const {
  require_degree(n);
  return standard_[n];
}

const Matrix& GradedQuotient::rho(std::uint32_t n, unsigned v) const {
  require_degree(n);
  if (n == 0 || v > 2) throw std::out_of_range("rho needs degree >= 1 and a letter in {0,1,2}");
  return rho_[n][v];
}

std::size_t GradedQuotient::position(std::uint32_t n, std::uint64_t word) const {
  const auto& words = standard(n);
  const auto it = std::lower_bound(words.begin(), words.end(), word);
  if (it == words.end() || *it != word) throw std::out_of_range("word is not standard");
  return static_cast<std::size_t>(it - words.begin());
}

AlgebraElement GradedQuotient::zero(std::uint32_t n) const { return AlgebraElement{n, zero_vector(field_, dim(n))}; }

AlgebraElement GradedQuotient::unit() const { return AlgebraElement{0, {Scalar::one(field_)}}; }

AlgebraElement GradedQuotient::from_coords(std::uint32_t n, Vector coords) const {
  if (coords.size() != dim(n)) throw DimensionMismatch("coordinate vector does not match dim A(n)");
  return AlgebraElement{n, std::move(coords)};
}

AlgebraElement GradedQuotient::linear(std::span<const Scalar> abc) const {
  return from_coords(1, Vector(abc.begin(), abc.end()));
}

Vector GradedQuotient::normal_form_rec(std::span<const Scalar> f, std::uint32_t n) const {
  if (n == 0) return {f[0]};
  const std::uint64_t block = f.size() / 3;
  Vector out = zero_vector(field_, dim(n));
  // f = sum_b f_b ⊗ v_b with f_b read off at stride 3.
  for (unsigned b = 0; b < 3; ++b) {
    Vector fb(block, Scalar::zero(field_));
    bool nonzero = false;
    for (std::uint64_t i = 0; i < block; ++i) {
      fb[i] = f[i * 3 + b];
      nonzero = nonzero || !fb[i].is_zero();
    }
    if (!nonzero) continue;
    const Vector image = rho_[n][b].apply(normal_form_rec(fb, n - 1));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += image[i];
  }
  return out;
}

AlgebraElement GradedQuotient::normal_form(const TensorElement& f) const {
  require_degree(f.degree);
  if (f.coords.size() != tensor_dim(f.degree)) throw DimensionMismatch("tensor length is not 3^n");
  return AlgebraElement{f.degree, normal_form_rec(f.coords, f.degree)};
}

TensorElement GradedQuotient::representative(const AlgebraElement& a) const {
  TensorElement out = TensorElement::zero(field_, a.degree);
  const auto& words = standard(a.degree);
  for (std::size_t i = 0; i < words.size(); ++i) out.coords[words[i]] = a.coords[i];
  return out;
}

std::array<Vector, 3> GradedQuotient::split_last_letter(const AlgebraElement& b) const {
  const auto& words = standard(b.degree);
  std::array<Vector, 3> parts;
  for (auto& part : parts) part = zero_vector(field_, dim(b.degree - 1));
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (!b.coords[i].is_zero()) parts[words[i] % 3][position(b.degree - 1, words[i] / 3)] = b.coords[i];
  }
  return parts;
}

AlgebraElement GradedQuotient::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
  require_degree(a.degree + b.degree);
  if (b.degree == 0) return b.coords[0] * a;
  AlgebraElement out = zero(a.degree + b.degree);
  const auto parts = split_last_letter(b);
  for (unsigned v = 0; v < 3; ++v) {
    if (faithcert::is_zero(parts[v])) continue;
    const AlgebraElement partial = multiply(a, AlgebraElement{b.degree - 1, parts[v]});
    const Vector image = rho_[a.degree + b.degree][v].apply(partial.coords);
    for (std::size_t i = 0; i < image.size(); ++i) out.coords[i] += image[i];
  }
  return out;
}

Matrix GradedQuotient::right_multiplication(const AlgebraElement& b, std::uint32_t m) const {
  require_degree(m + b.degree);
  if (b.degree == 0) {
    Matrix out = Matrix::identity(field_, dim(m));
    for (std::size_t i = 0; i < dim(m); ++i) out(i, i) = b.coords[0];
    return out;
  }
  Matrix out(field_, dim(m + b.degree), dim(m));
  const auto parts = split_last_letter(b);
  for (unsigned v = 0; v < 3; ++v) {
    if (faithcert::is_zero(parts[v])) continue;
    out = out + rho_[m + b.degree][v] * right_multiplication(AlgebraElement{b.degree - 1, parts[v]}, m);
  }
  return out;
}

Matrix GradedQuotient::left_multiplication(const AlgebraElement& a, std::uint32_t m) const {
  require_degree(a.degree + m);
  std::vector<Vector> columns;
  for (std::size_t i = 0; i < dim(m); ++i) {
    columns.push_back(multiply(a, AlgebraElement{m, unit_vector(field_, dim(m), i)}).coords);
  }
  return Matrix::from_columns(field_, dim(a.degree + m), columns);
}

Subspace GradedQuotient::left_ideal_image(const AlgebraElement& L, std::uint32_t m) const {
  if (m < L.degree) return Subspace::zero(field_, dim(m));
  return image(right_multiplication(L, m - L.degree));
}

}  // namespace faithcert::sklyanin

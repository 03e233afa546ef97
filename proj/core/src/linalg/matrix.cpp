#include "faithcert/linalg/matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "faithcert/errors.hpp"

namespace faithcert {

Vector zero_vector(Field field, std::size_t n) { return Vector(n, Scalar::zero(field)); }

Vector unit_vector(Field field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v.at(i) = Scalar::one(field);
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw DimensionMismatch("row " + std::to_string(r) + " has length " + std::to_string(rows[r].size()) +
                              ", expected " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c].field() != field) throw BackendMismatch("matrix entries must share one backend");
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::from_columns(Field field, std::size_t rows, const std::vector<Vector>& columns) {
  return from_rows(field, rows, columns).transpose();
}

Vector Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return Vector(s.begin(), s.end());
}

Vector Matrix::column_vector(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

bool Matrix::is_zero() const { return faithcert::is_zero(data_); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product size mismatch");
  if (a.field_ != b.field_) throw BackendMismatch("matrix backends differ");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum size mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference size mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

using IntRow = std::vector<mpz_class>;

void make_primitive(IntRow& row) {
  mpz_class g = 0;
  for (const auto& x : row) {
    if (sgn(x) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (auto& x : row) {
    if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

// target <- f1 * target - f2 * pivot, chosen so that target[col] becomes 0.
void eliminate(IntRow& target, const IntRow& pivot, std::size_t col) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), pivot[col].get_mpz_t(), target[col].get_mpz_t());
  mpz_class f1, f2;
  mpz_divexact(f1.get_mpz_t(), pivot[col].get_mpz_t(), g.get_mpz_t());
  mpz_divexact(f2.get_mpz_t(), target[col].get_mpz_t(), g.get_mpz_t());
  const bool unit_scale = f1 == 1;
  for (std::size_t j = 0; j < target.size(); ++j) {
    const bool t_zero = sgn(target[j]) == 0;
    const bool p_zero = sgn(pivot[j]) == 0;
    if (p_zero) {
      if (!t_zero && !unit_scale) target[j] *= f1;
      continue;
    }
    if (!t_zero && !unit_scale) target[j] *= f1;
    mpz_submul(target[j].get_mpz_t(), f2.get_mpz_t(), pivot[j].get_mpz_t());
  }
  target[col] = 0;
  make_primitive(target);
}

EchelonForm rref_rational(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<IntRow> a(rows, IntRow(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class lcm = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      const mpq_class& q = m(r, c).rational();
      if (sgn(q) != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const mpq_class& q = m(r, c).rational();
      if (sgn(q) == 0) continue;
      mpz_divexact(a[r][c].get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
      a[r][c] *= q.get_num();
    }
    make_primitive(a[r]);
  }

  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t best = rows;
    std::size_t best_size = 0;
    for (std::size_t i = rank; i < rows; ++i) {
      if (sgn(a[i][c]) == 0) continue;
      const std::size_t size = mpz_sizeinbase(a[i][c].get_mpz_t(), 2);
      if (best == rows || size < best_size) {
        best = i;
        best_size = size;
      }
    }
    if (best == rows) continue;
    std::swap(a[rank], a[best]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (sgn(a[i][c]) != 0) eliminate(a[i], a[rank], c);
    }
    pivots.push_back(c);
    ++rank;
  }
  for (std::size_t k = rank; k-- > 0;) {
    for (std::size_t i = 0; i < k; ++i) {
      if (sgn(a[i][pivots[k]]) != 0) eliminate(a[i], a[k], pivots[k]);
    }
  }

  EchelonForm out{Matrix(m.field(), rows, cols), pivots, rank};
  for (std::size_t k = 0; k < rank; ++k) {
    const mpz_class& lead = a[k][pivots[k]];
    for (std::size_t c = 0; c < cols; ++c) {
      if (sgn(a[k][c]) == 0) continue;
      mpq_class q(a[k][c], lead);
      q.canonicalize();
      out.reduced(k, c) = Scalar::from_rational(m.field(), q);
    }
  }
  return out;
}

EchelonForm rref_prime(const Matrix& m) {
  using u128 = unsigned __int128;
  const std::uint64_t p = m.field().modulus();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c).residue();
  }
  auto mul = [p](std::uint64_t x, std::uint64_t y) { return static_cast<std::uint64_t>(static_cast<u128>(x) * y % p); };
  auto inv = [&](std::uint64_t x) {
    std::uint64_t r = 1, e = p - 2;
    while (e != 0) {
      if (e & 1) r = mul(r, x);
      x = mul(x, x);
      e >>= 1;
    }
    return r;
  };

  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pr = rank;
    while (pr < rows && a[pr][c] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(a[rank], a[pr]);
    const std::uint64_t s = inv(a[rank][c]);
    for (auto& x : a[rank]) x = mul(x, s);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][c] == 0) continue;
      const std::uint64_t f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (a[rank][j] == 0) continue;
        const std::uint64_t t = mul(f, a[rank][j]);
        a[i][j] = a[i][j] >= t ? a[i][j] - t : a[i][j] + p - t;
      }
    }
    pivots.push_back(c);
    ++rank;
  }

  EchelonForm out{Matrix(m.field(), rows, cols), pivots, rank};
  for (std::size_t r = 0; r < rank; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (a[r][c] != 0) out.reduced(r, c) = Scalar::from_int(m.field(), static_cast<long long>(a[r][c]));
    }
  }
  return out;
}

}  // namespace

EchelonForm rref(const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const Scalar& s : m.row(r)) {
      if (s.field() != m.field()) throw BackendMismatch("rref: matrix mixes scalar backends");
    }
  }
  return m.field().is_rational() ? rref_rational(m) : rref_prime(m);
}

}  // namespace faithcert

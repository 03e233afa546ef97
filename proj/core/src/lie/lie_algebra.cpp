#include "faithcert/lie/lie_algebra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include "faithcert/errors.hpp"
#include "faithcert/linalg/number_theory.hpp"

namespace faithcert::lie {

namespace {

std::vector<std::string> default_labels(std::size_t dim, std::vector<std::string> labels) {
  if (labels.empty()) {
    static const char* kNames[] = {"x", "y", "z", "w"};
    for (std::size_t i = 0; i < dim; ++i) {
      labels.push_back(dim <= 4 ? std::string(kNames[i]) : "x" + std::to_string(i));
    }
  }
  if (labels.size() != dim) throw DimensionMismatch("label count does not match Lie algebra dimension");
  return labels;
}

void check_indices(std::size_t dim, const StructureConstant& c) {
  if (c.i >= dim || c.j >= dim || c.k >= dim) {
    throw std::out_of_range("structure constant index out of range: [" + std::to_string(c.i) + ", " +
                            std::to_string(c.j) + ", " + std::to_string(c.k) + "]");
  }
}

Scalar trace(const Matrix& m) {
  Scalar t = Scalar::zero(m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

Scalar eval_poly(const std::vector<Scalar>& coeffs, const Scalar& t) {
  Scalar acc = Scalar::zero(t.field());
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * t + coeffs[i];
  return acc;
}

Eigenpair eigenpair_for(const Matrix& ad, const Scalar& lambda) {
  Matrix shifted = ad;
  for (std::size_t i = 0; i < ad.rows(); ++i) shifted(i, i) -= lambda;
  return Eigenpair{lambda, kernel(shifted).basis_vector(0)};
}

}  // namespace

LieAlgebra::LieAlgebra(Field field, std::size_t dim, std::vector<std::string> labels)
    : field_(field),
      dim_(dim),
      labels_(default_labels(dim, std::move(labels))),
      constants_(dim * dim * dim, Scalar::zero(field)) {}

LieAlgebra LieAlgebra::from_structure_constants(Field field, std::size_t dim,
                                                const std::vector<StructureConstant>& constants,
                                                std::vector<std::string> labels) {
  LieAlgebra algebra(field, dim, std::move(labels));
  for (const auto& c : constants) {
    check_indices(dim, c);
    if (c.value.field() != field) throw BackendMismatch("structure constant backend differs from algebra");
    algebra.constants_[(c.i * dim + c.j) * dim + c.k] = c.value;
  }
  return algebra;
}

LieAlgebra LieAlgebra::from_brackets(Field field, std::size_t dim, const std::vector<StructureConstant>& brackets,
                                     std::vector<std::string> labels) {
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Scalar> given;
  for (const auto& c : brackets) {
    check_indices(dim, c);
    given[{c.i, c.j, c.k}] = c.value;
  }
  std::vector<StructureConstant> full;
  for (const auto& [key, value] : given) {
    const auto [i, j, k] = key;
    full.push_back({i, j, k, value});
    const auto mirror = given.find({j, i, k});
    if (mirror == given.end()) {
      full.push_back({j, i, k, -value});
    } else if (mirror->second != -value) {
      throw std::invalid_argument("brackets [" + std::to_string(i) + "," + std::to_string(j) + "] and [" +
                                  std::to_string(j) + "," + std::to_string(i) + "] are not antisymmetric");
    }
  }
  return from_structure_constants(field, dim, full, std::move(labels));
}

const std::vector<std::string>& LieAlgebra::builtin_names() {
  static const std::vector<std::string> names{"abelian2", "nonabelian2", "heisenberg", "sl2"};
  return names;
}

LieAlgebra LieAlgebra::builtin(std::string_view name, Field field) {
  auto s = [field](long long v) { return Scalar::from_int(field, v); };
  if (name == "abelian2") return LieAlgebra(field, 2, {"x", "y"});
  if (name == "nonabelian2") return from_brackets(field, 2, {{0, 1, 1, s(1)}}, {"x", "y"});
  if (name == "heisenberg") return from_brackets(field, 3, {{0, 1, 2, s(1)}}, {"x", "y", "z"});
  if (name == "sl2") {
    return from_brackets(field, 3, {{0, 1, 1, s(2)}, {0, 2, 2, s(-2)}, {1, 2, 0, s(1)}}, {"h", "e", "f"});
  }
  throw std::invalid_argument("unknown builtin Lie algebra '" + std::string(name) + "'");
}

std::optional<std::size_t> LieAlgebra::index_of(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vector v;
  v.reserve(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v.push_back(constant(i, j, k));
  return v;
}

Vector LieAlgebra::bracket(const Vector& a, const Vector& b) const {
  if (a.size() != dim_ || b.size() != dim_) throw DimensionMismatch("bracket operands must lie in g");
  Vector out = zero();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j].is_zero()) continue;
      const Scalar ab = a[i] * b[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Scalar& c = constant(i, j, k);
        if (!c.is_zero()) out[k] += ab * c;
      }
    }
  }
  return out;
}

bool check_lie_axioms(const LieAlgebra& algebra) {
  const std::size_t m = algebra.dim();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        if (algebra.constant(i, j, k) != -algebra.constant(j, i, k)) return false;
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        const Vector xi = algebra.basis_vector(i), xj = algebra.basis_vector(j), xk = algebra.basis_vector(k);
        Vector sum = algebra.bracket(xi, algebra.bracket(xj, xk));
        const Vector b = algebra.bracket(xj, algebra.bracket(xk, xi));
        const Vector c = algebra.bracket(xk, algebra.bracket(xi, xj));
        for (std::size_t t = 0; t < m; ++t) sum[t] += b[t] + c[t];
        if (!is_zero(sum)) return false;
      }
    }
  }
  return true;
}

Matrix ad_matrix(const LieAlgebra& algebra, const Vector& x) {
  const std::size_t m = algebra.dim();
  std::vector<Vector> columns;
  columns.reserve(m);
  for (std::size_t j = 0; j < m; ++j) columns.push_back(algebra.bracket(x, algebra.basis_vector(j)));
  return Matrix::from_columns(algebra.field(), m, columns);
}

bool is_ad_nilpotent(const LieAlgebra& algebra, const Vector& x) {
  const Matrix ad = ad_matrix(algebra, x);
  Matrix power = Matrix::identity(algebra.field(), algebra.dim());
  for (std::size_t i = 0; i < algebra.dim(); ++i) power = power * ad;
  return power.is_zero();
}

bool is_abelian(const LieAlgebra& algebra) {
  for (std::size_t i = 0; i < algebra.dim(); ++i) {
    for (std::size_t j = 0; j < algebra.dim(); ++j) {
      if (!is_zero(algebra.bracket_basis(i, j))) return false;
    }
  }
  return true;
}

bool is_nilpotent(const LieAlgebra& algebra) {
  Subspace term = Subspace::full(algebra.field(), algebra.dim());
  for (std::size_t step = 0; step <= algebra.dim(); ++step) {
    if (term.dim() == 0) return true;
    std::vector<Vector> next;
    for (std::size_t r = 0; r < term.dim(); ++r) {
      for (std::size_t i = 0; i < algebra.dim(); ++i) {
        next.push_back(algebra.bracket(algebra.basis_vector(i), term.basis_vector(r)));
      }
    }
    Subspace bracketed = Subspace::span(algebra.field(), algebra.dim(), next);
    if (bracketed == term) return false;
    term = std::move(bracketed);
  }
  return term.dim() == 0;
}

Subspace center(const LieAlgebra& algebra) {
  const std::size_t m = algebra.dim();
  // Stack ad(x_i) for all basis elements: z is central iff [x_i, z] = 0 for all i.
  Matrix stacked(algebra.field(), m * m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const Matrix ad = ad_matrix(algebra, algebra.basis_vector(i));
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < m; ++c) stacked(i * m + r, c) = ad(r, c);
    }
  }
  return kernel(stacked);
}

std::vector<Scalar> characteristic_polynomial(const Matrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw DimensionMismatch("characteristic polynomial of a non-square matrix");
  const Field field = a.field();
  if (!field.is_rational() && field.modulus() <= n) {
    throw PreconditionError("characteristic polynomial needs characteristic above the matrix size");
  }
  // Faddeev-LeVerrier.
  std::vector<Scalar> coeffs(n + 1, Scalar::zero(field));
  coeffs[n] = Scalar::one(field);
  Matrix mk(field, n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += coeffs[n - k + 1];
    mk = std::move(next);
    coeffs[n - k] = -trace(a * mk) / Scalar::from_int(field, static_cast<long long>(k));
  }
  return coeffs;
}

std::optional<Eigenpair> find_rational_eigenpair(const LieAlgebra& algebra, const Vector& x) {
  if (is_ad_nilpotent(algebra, x)) {
    throw PreconditionError("x is ad-nilpotent; ad x has no nonzero eigenvalue");
  }
  const Matrix ad = ad_matrix(algebra, x);
  const Field field = algebra.field();
  const std::size_t m = algebra.dim();

  if (!field.is_rational()) {
    const std::uint64_t p = field.modulus();
    if (p > (1ULL << 20)) {
      throw PreconditionError("eigenvalue search over prime fields is limited to p < 2^20");
    }
    for (std::uint64_t a = 1; a <= p / 2; ++a) {
      for (const long long candidate : {static_cast<long long>(a), -static_cast<long long>(a)}) {
        const Scalar lambda = Scalar::from_int(field, candidate);
        Matrix shifted = ad;
        for (std::size_t i = 0; i < m; ++i) shifted(i, i) -= lambda;
        if (rref(shifted).rank < m) return eigenpair_for(ad, lambda);
      }
    }
    return std::nullopt;
  }

  std::vector<Scalar> poly = characteristic_polynomial(ad);
  // Clear denominators.
  mpz_class lcm = 1;
  for (const auto& c : poly) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational().get_den().get_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : poly) ints.push_back(mpz_class(c.rational() * lcm));
  std::size_t low = 0;
  while (low < ints.size() && ints[low] == 0) ++low;
  const mpz_class trailing = ints[low];
  const mpz_class leading = ints.back();

  std::set<mpq_class> candidates;
  for (const auto& r : integer_divisors(trailing)) {
    for (const auto& s : integer_divisors(leading)) {
      mpq_class q(r, s);
      q.canonicalize();
      candidates.insert(q);
    }
  }
  for (const auto& q : candidates) {
    for (const mpq_class& v : {q, mpq_class(-q)}) {
      const Scalar lambda = Scalar::from_rational(field, v);
      if (eval_poly(poly, lambda).is_zero()) return eigenpair_for(ad, lambda);
    }
  }
  return std::nullopt;
}

}  // namespace faithcert::lie

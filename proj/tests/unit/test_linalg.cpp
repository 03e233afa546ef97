#include <doctest.h>

#include <random>

#include "faithcert/errors.hpp"
#include "faithcert/linalg/subspace.hpp"

using namespace faithcert;

namespace {

// Oracle: Laplace expansion over mpq, rank as the largest nonvanishing minor.
mpq_class det(const std::vector<std::vector<mpq_class>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  mpq_class total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<mpq_class>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<mpq_class> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(row);
    }
    const mpq_class term = a[0][c] * det(minor);
    total += (c % 2 == 0) ? term : mpq_class(-term);
  }
  return total;
}

bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::size_t brute_rank(const std::vector<std::vector<mpq_class>>& a, std::size_t cols, std::uint64_t p = 0) {
  const std::size_t rows = a.size();
  for (std::size_t k = std::min(rows, cols); k > 0; --k) {
    std::vector<std::size_t> ri(k), ci(k);
    for (std::size_t i = 0; i < k; ++i) ri[i] = i;
    do {
      for (std::size_t i = 0; i < k; ++i) ci[i] = i;
      do {
        std::vector<std::vector<mpq_class>> sub(k, std::vector<mpq_class>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = a[ri[i]][ci[j]];
        const mpq_class d = det(sub);
        if (p == 0 ? d != 0 : mpz_class(d.get_num() % mpz_class(static_cast<unsigned long>(p))) != 0) return k;
      } while (next_subset(ci, cols));
    } while (next_subset(ri, rows));
  }
  return 0;
}

std::vector<std::vector<mpq_class>> random_integer_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                                          int spread, bool low_rank) {
  std::uniform_int_distribution<int> dist(-spread, spread);
  std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols));
  for (auto& row : a)
    for (auto& v : row) v = dist(rng);
  if (low_rank && rows >= 3) {
    for (std::size_t c = 0; c < cols; ++c) a[2][c] = a[0][c] * 3 - a[1][c] * 2;
  }
  return a;
}

Matrix to_matrix(Field f, const std::vector<std::vector<mpq_class>>& a, std::size_t cols) {
  Matrix m(f, a.size(), cols);
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar::from_rational(f, a[r][c]);
  return m;
}

Vector ints(Field f, std::initializer_list<long long> values) {
  Vector v;
  for (auto x : values) v.push_back(Scalar::from_int(f, x));
  return v;
}

Subspace random_subspace(std::mt19937_64& rng, Field f, std::size_t n, std::size_t gens) {
  std::uniform_int_distribution<int> dist(-2, 2);
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < gens; ++i) {
    Vector v;
    for (std::size_t j = 0; j < n; ++j) v.push_back(Scalar::from_int(f, dist(rng)));
    rows.push_back(v);
  }
  return Subspace::span(f, n, rows);
}

}  // namespace

TEST_CASE("scalar arithmetic and parsing") {
  const Field q = Field::rationals();
  const Scalar a = Scalar::parse(q, "3/4");
  const Scalar b = Scalar::parse(q, "-5/6");
  CHECK((a + b).to_string() == "-1/12");
  CHECK((a * b).to_string() == "-5/8");
  CHECK((a / b).to_string() == "-9/10");
  CHECK(Scalar::from_int(q, 7).to_string() == "7/1");
  CHECK_THROWS_AS(Scalar::zero(q).inverse(), std::domain_error);

  const Field f7 = Field::prime(7);
  CHECK(Scalar::parse(f7, "1/3").residue() == 5);
  CHECK((Scalar::from_int(f7, 3) * Scalar::from_int(f7, 5)).residue() == 1);
  CHECK(Scalar::from_int(f7, -1).residue() == 6);
  CHECK_THROWS_AS(Scalar::parse(f7, "1/14"), PreconditionError);
  CHECK_THROWS_AS(Field::prime(9), std::invalid_argument);
  CHECK_THROWS_AS(a + Scalar::one(f7), BackendMismatch);
  CHECK(Field::parse("prime:101").modulus() == 101);
  CHECK(Field::parse("rational").is_rational());
}

TEST_CASE("rref rank agrees with minor-expansion oracle") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 2 + trial % 3, cols = 2 + (trial / 3) % 4;
    const auto a = random_integer_matrix(rng, rows, cols, 4, trial % 2 == 0);
    CHECK(rref(to_matrix(Field::rationals(), a, cols)).rank == brute_rank(a, cols));
    CHECK(rref(to_matrix(Field::prime(5), a, cols)).rank == brute_rank(a, cols, 5));
  }
}

TEST_CASE("rref output is reduced and idempotent") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_integer_matrix(rng, 4, 6, 9, trial % 2 == 1);
    const Matrix m = to_matrix(Field::rationals(), a, 6);
    const EchelonForm e = rref(m);
    for (std::size_t i = 0; i < e.rank; ++i) {
      for (std::size_t r = 0; r < m.rows(); ++r) {
        CHECK(e.reduced(r, e.pivots[i]) == (r == i ? Scalar::one(m.field()) : Scalar::zero(m.field())));
      }
      if (i > 0) CHECK(e.pivots[i - 1] < e.pivots[i]);
    }
    CHECK(rref(e.reduced).reduced == e.reduced);
    CHECK(Subspace::row_space(m) == Subspace::row_space(e.reduced));
  }
}

TEST_CASE("rref rejects mixed backends") {
  Matrix m(Field::rationals(), 1, 2);
  m(0, 1) = Scalar::one(Field::prime(3));
  CHECK_THROWS_AS(rref(m), BackendMismatch);
}

TEST_CASE("kernel, image and preimage") {
  const Field q = Field::rationals();
  const Matrix m = Matrix::from_rows(q, 3, {ints(q, {1, 2, 3}), ints(q, {2, 4, 6})});
  const Subspace k = kernel(m);
  CHECK(k.dim() == 2);
  for (std::size_t i = 0; i < k.dim(); ++i) CHECK(is_zero(m.apply(k.basis().row(i))));
  CHECK(image(m).dim() == 1);
  const Subspace target = Subspace::span(q, 2, {ints(q, {1, 2})});
  CHECK(preimage(m, target).dim() == 3);
  const Subspace other = Subspace::span(q, 2, {ints(q, {1, 0})});
  CHECK(preimage(m, other) == k);
}

TEST_CASE("subspace lattice properties") {
  std::mt19937_64 rng(99);
  for (Field f : {Field::rationals(), Field::prime(3)}) {
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t n = 5;
      const Subspace a = random_subspace(rng, f, n, 1 + trial % 4);
      const Subspace b = random_subspace(rng, f, n, 1 + (trial / 2) % 4);
      const Subspace c = random_subspace(rng, f, n, 2);
      const Subspace meet = subspace_intersect(a, b);
      const Subspace join = subspace_sum(a, b);
      CHECK(join.dim() + meet.dim() == a.dim() + b.dim());
      CHECK(a.contains(meet));
      CHECK(b.contains(meet));
      CHECK(join.contains(a));
      // Modular law: b' ⊆ a implies a ∩ (b' + c) = b' + (a ∩ c).
      const Subspace inner = meet;
      CHECK(subspace_intersect(a, subspace_sum(inner, c)) == subspace_sum(inner, subspace_intersect(a, c)));
      CHECK(subspace_intersect(a, b) == subspace_intersect(b, a));
      for (std::size_t i = 0; i < a.dim(); ++i) CHECK(is_zero(a.reduce(a.basis().row(i))));
    }
  }
}

TEST_CASE("complement coordinates") {
  const Field q = Field::rationals();
  const Subspace s = Subspace::span(q, 3, {ints(q, {1, 1, 0})});
  CHECK(s.complement_indices() == std::vector<std::size_t>{1, 2});
  const Vector v = ints(q, {2, 0, 5});
  CHECK(s.complement_coordinates(v) == ints(q, {-2, 5}));
}

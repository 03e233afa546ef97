#include "faithcert/ecurve/divisor.hpp"

#include "faithcert/errors.hpp"
#include "faithcert/linalg/number_theory.hpp"
#include "faithcert/linalg/subspace.hpp"

namespace faithcert::ecurve {

namespace {

// Binary form sum_i g[i] s^i t^(k-i).
using BinaryForm = std::vector<Scalar>;

// Divides g by (u s + v t); throws when it does not divide.
BinaryForm deflate(const BinaryForm& g, const Scalar& u, const Scalar& v) {
  const std::size_t k = g.size() - 1;
  BinaryForm h(k, Scalar::zero(g[0].field()));
  if (!u.is_zero()) {
    h[k - 1] = g[k] / u;
    for (std::size_t i = k - 1; i >= 1; --i) h[i - 1] = (g[i] - v * h[i]) / u;
    if (g[0] != v * h[0]) throw PreconditionError("hint is not a root of the restricted cubic");
  } else {
    if (!g[k].is_zero()) throw PreconditionError("hint is not a root of the restricted cubic");
    for (std::size_t i = 0; i < k; ++i) h[i] = g[i] / v;
  }
  return h;
}

}  // namespace

void Divisor::add(const ProjPoint& P, long long multiplicity) {
  if (multiplicity == 0) return;
  const long long total = (terms_[P] += multiplicity);
  if (total == 0) terms_.erase(P);
}

long long Divisor::multiplicity(const ProjPoint& P) const {
  const auto it = terms_.find(P);
  return it == terms_.end() ? 0 : it->second;
}

long long Divisor::degree() const {
  long long d = 0;
  for (const auto& [P, n] : terms_) d += n;
  return d;
}

bool Divisor::is_effective() const {
  for (const auto& [P, n] : terms_)
    if (n < 0) return false;
  return true;
}

std::vector<ProjPoint> Divisor::support() const {
  std::vector<ProjPoint> out;
  for (const auto& [P, n] : terms_) out.push_back(P);
  return out;
}

std::string Divisor::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [P, n] : terms_) {
    if (!out.empty()) out += " + ";
    out += (n == 1 ? "" : std::to_string(n) + "*") + P.to_string();
  }
  return out;
}

Divisor operator+(Divisor a, const Divisor& b) {
  for (const auto& [P, n] : b.terms_) a.add(P, n);
  return a;
}

Divisor divisor_of_line(const HesseCurve& E, const LineForm& L, const std::vector<ProjPoint>& hints) {
  const Field field = E.field();
  const Subspace plane = kernel(Matrix::from_rows(field, 3, {L.vector()}));
  const Vector A = plane.basis_vector(0), B = plane.basis_vector(1);
  auto point_at = [&](const Scalar& s, const Scalar& t) {
    Vector v;
    for (std::size_t i = 0; i < 3; ++i) v.push_back(s * A[i] + t * B[i]);
    return ProjPoint::from_vector(v);
  };
  auto dot = [](std::span<const Scalar> a, std::span<const Scalar> b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
  };
  // F(sA + tB) as a binary cubic.
  BinaryForm g{E.equation(B), dot(E.gradient(B), A), dot(E.gradient(A), B), E.equation(A)};

  Divisor D;
  auto take_root = [&](Scalar s, Scalar t) {
    g = deflate(g, t, -s);
    D.add(point_at(s, t));
  };

  for (const auto& H : hints) {
    if (!L.contains(H) || !on_curve(E, H)) throw PreconditionError("hint " + H.to_string() + " is not on L and E");
    // H = sA + tB: A and B are reduced echelon vectors, so read s, t at their pivots.
    const std::size_t pa = plane.pivots()[0], pb = plane.pivots()[1];
    take_root(H[pa], H[pb]);
  }
  const Scalar one = Scalar::one(field), zero = Scalar::zero(field);
  while (g.size() > 1) {
    const std::size_t k = g.size() - 1;
    if (g[k].is_zero()) {
      take_root(one, zero);
      continue;
    }
    if (k == 1) {
      take_root(-g[0], g[1]);
    } else if (k == 2 && field.modulus() != 2) {
      const Scalar disc = g[1] * g[1] - Scalar::from_int(field, 4) * g[2] * g[0];
      const auto root = square_root(disc);
      if (!root) throw DegenerateConfiguration("line " + L.to_string() + " meets the curve in non-rational points");
      take_root(-g[1] + *root, Scalar::from_int(field, 2) * g[2]);
    } else {
      const auto roots = polynomial_roots(std::vector<Scalar>(g.begin(), g.end()));
      if (roots.empty()) throw DegenerateConfiguration("line " + L.to_string() + " meets the curve in non-rational points");
      take_root(roots.front(), one);
    }
  }
  return D;
}

ProjPoint divisor_sum(const HesseCurve& E, const Divisor& D) {
  ProjPoint total = E.identity();
  for (const auto& [P, n] : D.terms()) total = add(E, total, smul(E, n, P));
  return total;
}

Divisor sigma_star(const HesseCurve& E, const ProjPoint& p, const Divisor& D) {
  Divisor out;
  for (const auto& [P, n] : D.terms()) out.add(sigma(E, p, P), n);
  return out;
}

}  // namespace faithcert::ecurve

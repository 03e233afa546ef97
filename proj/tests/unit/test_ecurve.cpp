#include <doctest.h>

#include "faithcert/ecurve/divisor.hpp"
#include "faithcert/errors.hpp"

using namespace faithcert;
using namespace faithcert::ecurve;

namespace {

const Field Q = Field::rationals();

HesseCurve curve(long long psi, Field f = Q) { return HesseCurve(Scalar::from_int(f, psi)); }

// Oracle: third intersection by solving the restricted cubic directly with
// rational arithmetic on mpq, independent of the gradient formulas.
std::array<mpq_class, 3> oracle_third(const mpq_class& psi, const std::array<mpq_class, 3>& P,
                                      const std::array<mpq_class, 3>& Q) {
  auto F = [&](const std::array<mpq_class, 3>& v) {
    return mpq_class(v[0] * v[0] * v[0] + v[1] * v[1] * v[1] + v[2] * v[2] * v[2] - 3 * psi * v[0] * v[1] * v[2]);
  };
  // f(t) = F(P + t Q) is a cubic in t with roots t = 0 and t = infinity
  // (leading coefficient F(Q) = 0); so f(t) = a t + b t^2 and the third root is -a/b.
  auto at = [&](const mpq_class& t) {
    return std::array<mpq_class, 3>{P[0] + t * Q[0], P[1] + t * Q[1], P[2] + t * Q[2]};
  };
  const mpq_class f1 = F(at(1)), fm1 = F(at(-1));
  const mpq_class b = (f1 + fm1) / 2, a = (f1 - fm1) / 2;
  if (b == 0) return Q;  // the line is tangent at Q
  const mpq_class t = -a / b;
  return at(t);
}

ProjPoint from_mpq(const std::array<mpq_class, 3>& v) {
  return ProjPoint::make(Scalar::from_rational(Q, v[0]), Scalar::from_rational(Q, v[1]), Scalar::from_rational(Q, v[2]));
}

std::array<mpq_class, 3> to_mpq(const ProjPoint& P) { return {P[0].rational(), P[1].rational(), P[2].rational()}; }

}  // namespace

TEST_CASE("curve membership") {
  const HesseCurve E = curve(2);
  CHECK(on_curve(E, E.identity()));
  CHECK(on_curve(E, ProjPoint::make(Q, 1, 2, 3)));
  CHECK_FALSE(on_curve(E, ProjPoint::make(Q, 1, 0, 0)));
  CHECK_THROWS_AS(curve(1), PreconditionError);
  CHECK_THROWS_AS(curve(2, Field::prime(3)), PreconditionError);
  CHECK_THROWS_AS(ProjPoint::make(Q, 0, 0, 0), PreconditionError);
  CHECK(ProjPoint::make(Q, 2, 4, 6) == ProjPoint::make(Q, 1, 2, 3));
}

TEST_CASE("chord third point agrees with the restricted-cubic oracle") {
  const HesseCurve E = curve(2);
  const ProjPoint p = ProjPoint::make(Q, 1, 2, 3);
  std::vector<ProjPoint> sample{p, smul(E, 2, p), smul(E, -1, p), smul(E, 3, p), E.identity()};
  for (const auto& P : sample) {
    for (const auto& R : sample) {
      if (P == R) continue;
      CHECK(third_intersection(E, P, R) == from_mpq(oracle_third(2, to_mpq(P), to_mpq(R))));
    }
  }
}

TEST_CASE("chord-tangent examples") {
  const HesseCurve E = curve(2);
  const ProjPoint O = E.identity();
  const ProjPoint p = ProjPoint::make(Q, 1, 2, 3);
  CHECK(third_intersection(E, O, O) == O);
  CHECK(third_intersection(E, p, neg(E, p)) == O);
  CHECK(neg(E, p) == ProjPoint::make(Q, 2, 1, 3));
  CHECK(neg(E, p) == third_intersection(E, p, O));
  CHECK(add(E, p, O) == p);
  CHECK(add(E, p, neg(E, p)) == O);
  // Tangent: the doubled point is collinear with the tangent line.
  const ProjPoint t = third_intersection(E, p, p);
  CHECK(on_curve(E, t));
  CHECK(line_tangent(E, p).contains(t));
}

TEST_CASE("group axioms on a sample") {
  for (Field f : {Q, Field::prime(1009)}) {
    const HesseCurve E = curve(2, f);
    const ProjPoint p = ProjPoint::make(f, 1, 2, 3);
    std::vector<ProjPoint> sample;
    for (long long n : {0, 1, 2, -1, 3, -2}) sample.push_back(smul(E, n, p));
    if (f.is_rational()) sample.push_back(ProjPoint::make(f, 1, 0, -1));
    for (const auto& A : sample) {
      CHECK(add(E, A, E.identity()) == A);
      CHECK(add(E, A, neg(E, A)) == E.identity());
      for (const auto& B : sample) {
        CHECK(add(E, A, B) == add(E, B, A));
        CHECK(add(E, add(E, A, B), third_intersection(E, A, B)) == E.identity());
        for (const auto& C : sample) CHECK(add(E, add(E, A, B), C) == add(E, A, add(E, B, C)));
      }
    }
    CHECK(smul(E, 5, p) == add(E, smul(E, 2, p), smul(E, 3, p)));
    CHECK(smul(E, -4, p) == neg(E, smul(E, 4, p)));
  }
}

TEST_CASE("sigma") {
  const HesseCurve E = curve(2);
  const ProjPoint p = ProjPoint::make(Q, 1, 2, 3);
  const ProjPoint P = smul(E, 2, p);
  CHECK(sigma(E, p, E.identity()) == neg(E, p));
  CHECK(sigma(E, p, sigma_inverse(E, p, P)) == P);
  ProjPoint iterated = P;
  for (long long n = 1; n <= 6; ++n) {
    iterated = sigma(E, p, iterated);
    CHECK(iterated == sub(E, P, smul(E, n, p)));
    CHECK(iterated == sigma_power(E, p, P, n));
  }
}

TEST_CASE("divisors of lines") {
  const HesseCurve E = curve(2);
  const ProjPoint O = E.identity();
  const ProjPoint p = ProjPoint::make(Q, 1, 2, 3);
  const ProjPoint P = p, R = smul(E, 2, p);
  const LineForm L = line_through(P, R);
  const Divisor D = divisor_of_line(E, L);
  CHECK(D.degree() == 3);
  CHECK(D.multiplicity(third_intersection(E, P, R)) >= 1);
  CHECK(divisor_sum(E, D) == O);
  CHECK(divisor_of_line(E, L, {P, R}) == D);
  CHECK(divisor_of_line(E, L, {P}) == D);

  Divisor flex;
  flex.add(O, 3);
  CHECK(divisor_of_line(E, line_tangent(E, O)) == flex);
  CHECK(divisor_of_line(E, line_tangent(E, O), {O}) == flex);

  const Divisor T = divisor_of_line(E, line_tangent(E, p), {p});
  CHECK(T.multiplicity(p) == 2);
  CHECK(divisor_sum(E, T) == O);

  // Far multiples: hints avoid factoring the large restricted cubic.
  const ProjPoint A = smul(E, 11, p), B = smul(E, -7, p);
  const Divisor far = divisor_of_line(E, line_through(A, B), {A, B});
  CHECK(far.multiplicity(smul(E, -4, p)) == 1);
  CHECK_THROWS_AS(line_through(P, P), PreconditionError);
  CHECK_THROWS_AS(divisor_of_line(E, L, {ProjPoint::make(Q, 1, 0, 0)}), PreconditionError);
}

TEST_CASE("divisor pushforward") {
  const HesseCurve E = curve(2);
  const ProjPoint p = ProjPoint::make(Q, 1, 2, 3);
  CHECK(sigma_star(E, p, Divisor{}) == Divisor{});
  Divisor D;
  D.add(p);
  D.add(smul(E, 3, p), 2);
  D.add(E.identity(), -1);
  const Divisor pushed = sigma_star(E, p, D);
  CHECK(pushed.degree() == D.degree());
  CHECK(pushed.multiplicity(smul(E, 2, p)) == 2);
  CHECK(pushed.multiplicity(E.identity()) == 1);
  CHECK_FALSE(D.is_effective());
}

TEST_CASE("torsion certification") {
  const HesseCurve E = curve(2);
  const ProjPoint p = ProjPoint::make(Q, 1, 2, 3);
  CHECK(certify_infinite_order(E, p));
  CHECK_FALSE(certify_infinite_order(E, E.identity()));
  // The flexes (1:-w:0) are 3-torsion; over Q, (0:1:-1) is one.
  CHECK_FALSE(certify_infinite_order(E, ProjPoint::make(Q, 0, 1, -1)));
  CHECK_THROWS_AS(certify_infinite_order(curve(2, Field::prime(7)), ProjPoint::make(Field::prime(7), 1, 2, 3)),
                  PreconditionError);
}

TEST_CASE("condition 3R") {
  const HesseCurve E = curve(2);
  const ProjPoint p = ProjPoint::make(Q, 1, 2, 3);
  CHECK_FALSE(condition_3R(E, p, p, 3));
  CHECK(condition_3R(E, p, E.identity(), 5));
  CHECK(condition_3R(E, p, p, 0));
  CHECK(condition_3R(E, p, smul(E, -3, p), 6));
}

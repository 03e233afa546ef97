#include "faithcert/ecurve/hesse.hpp"

#include "faithcert/errors.hpp"
#include "faithcert/linalg/subspace.hpp"

namespace faithcert::ecurve {

namespace {

std::array<Scalar, 3> normalized(const Scalar& a, const Scalar& b, const Scalar& c, const char* what) {
  std::array<Scalar, 3> v{a, b, c};
  if (a.field() != b.field() || a.field() != c.field()) throw BackendMismatch(std::string(what) + " entries over different fields");
  for (std::size_t i = 0; i < 3; ++i) {
    if (!v[i].is_zero()) {
      const Scalar inv = v[i].inverse();
      for (auto& x : v) x *= inv;
      return v;
    }
  }
  throw PreconditionError(std::string(what) + " must be nonzero");
}

std::string triple_to_string(const std::array<Scalar, 3>& v, char sep) {
  return "(" + v[0].to_string() + sep + v[1].to_string() + sep + v[2].to_string() + ")";
}

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
  Scalar acc = a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Vector combine(const Scalar& s, std::span<const Scalar> a, const Scalar& t, std::span<const Scalar> b) {
  Vector out;
  for (std::size_t i = 0; i < 3; ++i) out.push_back(s * a[i] + t * b[i]);
  return out;
}

Vector cross(std::span<const Scalar> a, std::span<const Scalar> b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

void require_on_curve(const HesseCurve& E, const ProjPoint& P) {
  if (!on_curve(E, P)) throw PreconditionError("point " + P.to_string() + " is not on the curve");
}

}  // namespace

ProjPoint ProjPoint::make(const Scalar& x, const Scalar& y, const Scalar& z) {
  return ProjPoint{normalized(x, y, z, "point")};
}

ProjPoint ProjPoint::make(Field field, long long x, long long y, long long z) {
  return make(Scalar::from_int(field, x), Scalar::from_int(field, y), Scalar::from_int(field, z));
}

ProjPoint ProjPoint::from_vector(std::span<const Scalar> v) {
  if (v.size() != 3) throw DimensionMismatch("projective point needs three coordinates");
  return make(v[0], v[1], v[2]);
}

std::string ProjPoint::to_string() const { return triple_to_string(coords, ':'); }

LineForm LineForm::make(const Scalar& a, const Scalar& b, const Scalar& c) {
  return LineForm{normalized(a, b, c, "line")};
}

LineForm LineForm::from_vector(std::span<const Scalar> v) {
  if (v.size() != 3) throw DimensionMismatch("line needs three coefficients");
  return make(v[0], v[1], v[2]);
}

Scalar LineForm::evaluate(const ProjPoint& p) const { return dot(coeffs, p.coords); }

std::string LineForm::to_string() const { return triple_to_string(coeffs, ','); }

HesseCurve::HesseCurve(Scalar psi) : psi_(std::move(psi)) {
  if (field().modulus() == 3) throw PreconditionError("Hesse curves are singular in characteristic 3");
  if (psi_.pow(3).is_one()) throw PreconditionError("psi^3 = 1 gives a singular Hesse cubic");
}

ProjPoint HesseCurve::identity() const { return ProjPoint::make(field(), 1, -1, 0); }

Scalar HesseCurve::equation(std::span<const Scalar> v) const {
  const Scalar three = Scalar::from_int(field(), 3);
  return v[0] * v[0] * v[0] + v[1] * v[1] * v[1] + v[2] * v[2] * v[2] - three * psi_ * v[0] * v[1] * v[2];
}

Vector HesseCurve::gradient(std::span<const Scalar> v) const {
  const Scalar three = Scalar::from_int(field(), 3);
  const Scalar t = three * psi_;
  return {three * v[0] * v[0] - t * v[1] * v[2], three * v[1] * v[1] - t * v[0] * v[2],
          three * v[2] * v[2] - t * v[0] * v[1]};
}

bool on_curve(const HesseCurve& E, const ProjPoint& P) { return E.equation(P.coords).is_zero(); }

ProjPoint third_intersection(const HesseCurve& E, const ProjPoint& P, const ProjPoint& Q) {
  require_on_curve(E, P);
  require_on_curve(E, Q);
  if (P != Q) {
    // On the chord, F(sP + tQ) = st (b s + c t).
    const Scalar b = dot(E.gradient(P.coords), Q.coords);
    const Scalar c = dot(E.gradient(Q.coords), P.coords);
    if (b.is_zero() && c.is_zero()) throw DegenerateConfiguration("line lies on the curve");
    return ProjPoint::from_vector(combine(c, P.coords, -b, Q.coords));
  }
  const Vector grad = E.gradient(P.coords);
  const Subspace tangent = kernel(Matrix::from_rows(E.field(), 3, {grad}));
  for (std::size_t i = 0; i < tangent.dim(); ++i) {
    const Vector D = tangent.basis_vector(i);
    if (is_zero(cross(D, P.coords))) continue;
    // On the tangent, F(sP + tD) = t^2 (q s + F(D) t).
    const Scalar q = dot(E.gradient(D), P.coords);
    const Scalar fd = E.equation(D);
    if (q.is_zero() && fd.is_zero()) throw DegenerateConfiguration("tangent line lies on the curve");
    return ProjPoint::from_vector(combine(fd, P.coords, -q, D));
  }
  throw DegenerateConfiguration("singular point " + P.to_string());
}

ProjPoint neg(const HesseCurve& E, const ProjPoint& P) {
  require_on_curve(E, P);
  return ProjPoint::make(P[1], P[0], P[2]);
}

ProjPoint add(const HesseCurve& E, const ProjPoint& P, const ProjPoint& Q) {
  return neg(E, third_intersection(E, P, Q));
}

ProjPoint sub(const HesseCurve& E, const ProjPoint& P, const ProjPoint& Q) { return add(E, P, neg(E, Q)); }

ProjPoint smul(const HesseCurve& E, long long n, const ProjPoint& P) {
  ProjPoint base = n < 0 ? neg(E, P) : P;
  unsigned long long k = n < 0 ? 0ULL - static_cast<unsigned long long>(n) : static_cast<unsigned long long>(n);
  ProjPoint result = E.identity();
  while (k > 0) {
    if (k & 1ULL) result = add(E, result, base);
    k >>= 1;
    if (k > 0) base = add(E, base, base);
  }
  return result;
}

ProjPoint sigma(const HesseCurve& E, const ProjPoint& p, const ProjPoint& P) { return sub(E, P, p); }

ProjPoint sigma_inverse(const HesseCurve& E, const ProjPoint& p, const ProjPoint& P) { return add(E, P, p); }

ProjPoint sigma_power(const HesseCurve& E, const ProjPoint& p, const ProjPoint& P, long long n) {
  return sub(E, P, smul(E, n, p));
}

LineForm line_through(const ProjPoint& P, const ProjPoint& Q) {
  if (P == Q) throw PreconditionError("line_through needs distinct points; use line_tangent");
  return LineForm::from_vector(cross(P.coords, Q.coords));
}

LineForm line_tangent(const HesseCurve& E, const ProjPoint& P) {
  require_on_curve(E, P);
  return LineForm::from_vector(E.gradient(P.coords));
}

bool certify_infinite_order(const HesseCurve& E, const ProjPoint& p, unsigned bound) {
  if (!E.field().is_rational()) throw PreconditionError("no infinite-order points over a finite field");
  require_on_curve(E, p);
  const ProjPoint O = E.identity();
  ProjPoint multiple = O;
  for (unsigned n = 1; n <= bound; ++n) {
    multiple = add(E, multiple, p);
    if (multiple == O) return false;
  }
  return true;
}

bool condition_3R(const HesseCurve& E, const ProjPoint& p, const ProjPoint& R, unsigned N) {
  const ProjPoint O = E.identity();
  ProjPoint shifted = R;
  for (unsigned n = 1; n <= N; ++n) {
    shifted = sub(E, shifted, p);
    if (smul(E, 3, shifted) == O) return false;
  }
  return true;
}

}  // namespace faithcert::ecurve

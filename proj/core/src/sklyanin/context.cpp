#include "faithcert/sklyanin/context.hpp"

#include <algorithm>
#include <set>

#include "faithcert/errors.hpp"

namespace faithcert::sklyanin {

namespace {

// Evaluation of every monomial of degree n at the tuple pts[0..n): the
// product of coordinate_{i_k}(pts[k]).
Vector monomial_values(const std::vector<ProjPoint>& pts, std::uint32_t n) {
  Vector values{Scalar::one(pts.front().field())};
  for (std::uint32_t k = 0; k < n; ++k) {
    Vector next;
    next.reserve(values.size() * 3);
    for (const auto& v : values)
      for (unsigned i = 0; i < 3; ++i) next.push_back(v * pts[k][i]);
    values = std::move(next);
  }
  return values;
}

std::vector<ProjPoint> orbit(const SklyaninContext& ctx, const ProjPoint& e, std::uint32_t n) {
  std::vector<ProjPoint> pts;
  for (std::uint32_t k = 0; k < n; ++k) pts.push_back(ctx.shifted(e, k));
  return pts;
}

Subspace evaluation_kernel(const SklyaninContext& ctx, std::uint32_t n, const std::vector<ProjPoint>& samples) {
  std::vector<Vector> rows;
  for (const auto& e : samples) rows.push_back(monomial_values(orbit(ctx, e, n), n));
  return kernel(Matrix::from_rows(ctx.field(), tensor_dim(n), rows));
}

}  // namespace

SklyaninContext::SklyaninContext(HesseCurve curve, ProjPoint p, SklyaninCaps caps)
    : curve_(std::move(curve)), p_(std::move(p)), caps_(caps) {
  if (!curve_.field().is_rational()) {
    throw PreconditionError("the Sklyanin construction needs the rational backend: no infinite-order points over a finite field");
  }
  if (!ecurve::on_curve(curve_, p_)) throw PreconditionError("p is not on the curve");
  if (caps_.d == 0 || caps_.n_max == 0) throw PreconditionError("caps d and n_max must be positive");
  infinite_order_ = ecurve::certify_infinite_order(curve_, p_, caps_.torsion_bound);
  if (!infinite_order_) {
    throw PreconditionError("p has finite order (np = O for some n <= " + std::to_string(caps_.torsion_bound) + ")");
  }
  r2_ = relations(*this, 2);
  if (r2_.dim() != 3) throw DegenerateConfiguration("expected 3 quadratic relations, found " + std::to_string(r2_.dim()));
  const std::uint32_t top = std::max({6U, caps_.d + caps_.n_max, caps_.n_max + 1});
  quotient_ = std::make_unique<GradedQuotient>(r2_, top);
}

ProjPoint SklyaninContext::multiple(long long k) const {
  std::lock_guard lock(mutex_);
  if (multiples_.empty()) multiples_.emplace(0, curve_.identity());
  auto it = multiples_.find(k);
  if (it != multiples_.end()) return it->second;
  // Walk out from the nearest cached multiple on the same side of zero.
  const long long step = k > 0 ? 1 : -1;
  long long j = k;
  while (multiples_.find(j) == multiples_.end()) j -= step;
  ProjPoint current = multiples_.at(j);
  const ProjPoint delta = step > 0 ? p_ : ecurve::neg(curve_, p_);
  while (j != k) {
    j += step;
    current = ecurve::add(curve_, current, delta);
    multiples_.emplace(j, current);
  }
  return current;
}

ProjPoint SklyaninContext::shifted(const ProjPoint& e, long long k) const {
  if (k == 0) return e;
  return ecurve::add(curve_, e, multiple(-k));
}

std::vector<ProjPoint> SklyaninContext::sample_points(std::size_t count, std::size_t skip) const {
  std::vector<ProjPoint> out;
  for (std::size_t i = skip; i < skip + count; ++i) {
    const long long half = static_cast<long long>((i + 1) / 2);
    out.push_back(multiple(i % 2 == 1 ? half : -half));
  }
  return out;
}

std::size_t SklyaninContext::default_sample_count(std::uint32_t n) const { return 3 * n + 1 + caps_.sample_margin; }

const Subspace& SklyaninContext::ideal_slice(std::uint32_t n) const {
  if (n > caps_.tensor_cap) {
    throw std::out_of_range("I(" + std::to_string(n) + ") exceeds the tensor cap " + std::to_string(caps_.tensor_cap));
  }
  {
    std::lock_guard lock(mutex_);
    auto it = ideal_cache_.find(n);
    if (it != ideal_cache_.end()) return it->second;
  }
  const Field f = field();
  Subspace slice;
  if (n < 2) {
    slice = Subspace::zero(f, tensor_dim(n));
  } else {
    std::vector<Vector> rows;
    const Subspace& lower = ideal_slice(n - 1);
    for (std::size_t i = 0; i < lower.dim(); ++i) {
      const TensorElement b{n - 1, lower.basis_vector(i)};
      for (std::uint64_t v = 0; v < 3; ++v) rows.push_back(tensor(b, TensorElement::word(f, 1, v)).coords);
    }
    for (std::uint64_t w = 0; w < tensor_dim(n - 2); ++w) {
      const TensorElement word = TensorElement::word(f, n - 2, w);
      for (std::size_t r = 0; r < r2_.dim(); ++r) rows.push_back(tensor(word, TensorElement{2, r2_.basis_vector(r)}).coords);
    }
    slice = Subspace::span(f, tensor_dim(n), rows);
  }
  std::lock_guard lock(mutex_);
  return ideal_cache_.emplace(n, std::move(slice)).first->second;
}

Scalar evaluate(const SklyaninContext& ctx, const TensorElement& f, const ProjPoint& e) {
  if (!ecurve::on_curve(ctx.curve(), e)) throw PreconditionError("evaluation point is not on the curve");
  if (f.degree == 0) return f.coords[0];
  const Vector values = monomial_values(orbit(ctx, e, f.degree), f.degree);
  Scalar acc = Scalar::zero(ctx.field());
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!f.coords[i].is_zero()) acc += f.coords[i] * values[i];
  return acc;
}

Subspace relations(const SklyaninContext& ctx, std::uint32_t n, const std::vector<ProjPoint>& samples) {
  if (n == 0) return Subspace::zero(ctx.field(), 1);
  const std::set<ProjPoint> distinct(samples.begin(), samples.end());
  if (distinct.size() != samples.size()) throw PreconditionError("sample points must be distinct");
  for (const auto& e : samples)
    if (!ecurve::on_curve(ctx.curve(), e)) throw PreconditionError("sample point is not on the curve");

  const Subspace first = evaluation_kernel(ctx, n, samples);
  std::vector<ProjPoint> extended = samples;
  for (std::size_t skip = 0; extended.size() < samples.size() + ctx.caps().sample_margin; ++skip) {
    const ProjPoint e = ctx.sample_points(1, skip).front();
    if (!distinct.contains(e)) extended.push_back(e);
  }
  if (evaluation_kernel(ctx, n, extended) != first) {
    throw DegenerateConfiguration("insufficient samples: R_" + std::to_string(n) + " did not stabilize");
  }
  return first;
}

Subspace relations(const SklyaninContext& ctx, std::uint32_t n) {
  return relations(ctx, n, ctx.sample_points(ctx.default_sample_count(n)));
}

Subspace left_ideal_slice(const SklyaninContext& ctx, const AlgebraElement& L, std::uint32_t m) {
  if (L.degree != 1) throw PreconditionError("left_ideal_slice needs a degree-one L");
  if (m == 0) return Subspace::zero(ctx.field(), 1);
  const Field f = ctx.field();
  const TensorElement line = TensorElement::linear(L.coords);
  std::vector<Vector> rows;
  for (std::uint64_t w = 0; w < tensor_dim(m - 1); ++w) rows.push_back(tensor(TensorElement::word(f, m - 1, w), line).coords);
  const Subspace& ideal = ctx.ideal_slice(m);
  for (std::size_t i = 0; i < ideal.dim(); ++i) rows.push_back(ideal.basis_vector(i));
  return Subspace::span(f, tensor_dim(m), rows);
}

bool membership_in_AL(const SklyaninContext& ctx, const AlgebraElement& f, const AlgebraElement& L) {
  return ctx.quotient().left_ideal_image(L, f.degree).contains(f.coords);
}

bool membership_in_AL(const SklyaninContext& ctx, const TensorElement& f, const AlgebraElement& L) {
  return membership_in_AL(ctx, ctx.quotient().normal_form(f), L);
}

AlgebraElement find_central_g(const SklyaninContext& ctx) {
  const GradedQuotient& A = ctx.quotient();
  const Field f = ctx.field();
  const std::size_t d3 = A.dim(3), d4 = A.dim(4);
  Matrix system(f, 3 * d4, d3);
  for (unsigned w = 0; w < 3; ++w) {
    const AlgebraElement letter = A.linear(unit_vector(f, 3, w));
    const Matrix commutator = A.right_multiplication(letter, 3) - A.left_multiplication(letter, 3);
    for (std::size_t r = 0; r < d4; ++r)
      for (std::size_t c = 0; c < d3; ++c) system(w * d4 + r, c) = commutator(r, c);
  }
  const Subspace solutions = kernel(system);
  if (solutions.dim() != 1) {
    throw DegenerateConfiguration("central degree-3 elements form a space of dimension " + std::to_string(solutions.dim()));
  }
  return A.from_coords(3, solutions.basis_vector(0));
}

}  // namespace faithcert::sklyanin

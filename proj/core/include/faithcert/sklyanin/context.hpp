#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "faithcert/ecurve/hesse.hpp"
#include "faithcert/sklyanin/quotient.hpp"

namespace faithcert::sklyanin {

using ecurve::HesseCurve;
using ecurve::ProjPoint;

struct SklyaninCaps {
  std::uint32_t d = 3;
  std::uint32_t n_max = 6;
  /// Largest degree for which I(n) is formed explicitly inside V^{⊗n}.
  std::uint32_t tensor_cap = 5;
  /// Extra sample points beyond 3n + 1, and the stabilization batch size.
  std::uint32_t sample_margin = 5;
  unsigned torsion_bound = 12;
};

/// Curve, translation point and the quadratic algebra they determine.
///
/// Construction certifies that p has infinite order, computes R2 from
/// sample points, and builds the graded quotient up to the degree the caps
/// require. Lazily filled caches are guarded, so a context can be shared.
class SklyaninContext {
 public:
  /// Throws PreconditionError if p is off the curve, has finite order, or
  /// the field is not Q.
  SklyaninContext(HesseCurve curve, ProjPoint p, SklyaninCaps caps = {});

  const HesseCurve& curve() const { return curve_; }
  const ProjPoint& point() const { return p_; }
  const SklyaninCaps& caps() const { return caps_; }
  Field field() const { return curve_.field(); }
  bool infinite_order() const { return infinite_order_; }

  /// k p.
  ProjPoint multiple(long long k) const;
  /// sigma^k(e) = e - k p.
  ProjPoint shifted(const ProjPoint& e, long long k) const;
  /// k p for k = 0, 1, -1, 2, -2, ... starting at position `skip`.
  std::vector<ProjPoint> sample_points(std::size_t count, std::size_t skip = 0) const;
  /// Number of samples used for R_n: 3n + 1 + margin.
  std::size_t default_sample_count(std::uint32_t n) const;

  const Subspace& r2() const { return r2_; }
  const GradedQuotient& quotient() const { return *quotient_; }

  /// I(n) inside V^{⊗n}, for n <= tensor_cap; cached.
  const Subspace& ideal_slice(std::uint32_t n) const;

 private:
  HesseCurve curve_;
  ProjPoint p_;
  SklyaninCaps caps_;
  bool infinite_order_ = false;
  Subspace r2_;
  std::unique_ptr<GradedQuotient> quotient_;

  mutable std::mutex mutex_;
  mutable std::map<long long, ProjPoint> multiples_;
  mutable std::map<std::uint32_t, Subspace> ideal_cache_;
};

/// f(e, sigma e, ..., sigma^{n-1} e) with normalized point coordinates.
Scalar evaluate(const SklyaninContext& ctx, const TensorElement& f, const ProjPoint& e);

/// Kernel of the evaluation matrix on the given samples. A batch of
/// `sample_margin` further points must leave the kernel unchanged, else
/// DegenerateConfiguration("insufficient samples").
Subspace relations(const SklyaninContext& ctx, std::uint32_t n, const std::vector<ProjPoint>& samples);
Subspace relations(const SklyaninContext& ctx, std::uint32_t n);

/// V^{⊗(m-1)} ⊗ L + I(m) inside V^{⊗m}.
Subspace left_ideal_slice(const SklyaninContext& ctx, const AlgebraElement& L, std::uint32_t m);

/// F in A·L, decided in A(deg F).
bool membership_in_AL(const SklyaninContext& ctx, const TensorElement& f, const AlgebraElement& L);
bool membership_in_AL(const SklyaninContext& ctx, const AlgebraElement& f, const AlgebraElement& L);

/// The degree-3 central element, normalized so its first nonzero
/// coordinate is 1. Throws DegenerateConfiguration unless the solution
/// space of {v in A(3) : v w = w v for w in A(1)} is one-dimensional.
AlgebraElement find_central_g(const SklyaninContext& ctx);

}  // namespace faithcert::sklyanin

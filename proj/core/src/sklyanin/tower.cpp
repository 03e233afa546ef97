#include "faithcert/sklyanin/tower.hpp"

#include <algorithm>
#include <map>

#include "faithcert/errors.hpp"

namespace faithcert::sklyanin {

namespace {

using nlohmann::json;
using ecurve::LineForm;

LineForm line_or_tangent(const HesseCurve& E, const ProjPoint& A, const ProjPoint& B) {
  return A == B ? ecurve::line_tangent(E, A) : ecurve::line_through(A, B);
}

ProjPoint plus_multiple(const SklyaninContext& ctx, const ProjPoint& A, long long n) {
  return n == 0 ? A : ecurve::add(ctx.curve(), A, ctx.multiple(n));
}

json element_json(const AlgebraElement& a) { return json{{"degree", a.degree}, {"coords", to_json(a.coords)}}; }

}  // namespace

Tower construct_tower(const SklyaninContext& ctx, const ProjPoint& P0, const ProjPoint& Q0, const ProjPoint& S,
                      std::uint32_t n_max) {
  const HesseCurve& E = ctx.curve();
  for (const auto* pt : {&P0, &Q0, &S})
    if (!ecurve::on_curve(E, *pt)) throw PreconditionError("tower point " + pt->to_string() + " is not on the curve");
  if (P0 == Q0) throw PreconditionError("P and Q must be distinct");
  if (n_max + 1 > ctx.quotient().max_degree()) throw PreconditionError("n_max exceeds the quotient degree cap");

  const ProjPoint R0 = ecurve::third_intersection(E, P0, Q0);
  Tower tower;
  struct Labelling {
    ProjPoint P, Q, R;
    const char* name;
  };
  bool found = false;
  for (const Labelling& l : {Labelling{P0, Q0, R0, "R"}, Labelling{Q0, R0, P0, "P"}, Labelling{R0, P0, Q0, "Q"}}) {
    if (l.P != l.Q && ecurve::condition_3R(E, ctx.point(), l.R, n_max)) {
      tower.P = l.P;
      tower.Q = l.Q;
      tower.R = l.R;
      tower.relabelled = l.name;
      found = true;
      break;
    }
  }
  if (!found) throw PreconditionError("hypothesis violated: 3R lies in 3N*p for every labelling of P, Q, R");
  tower.S = S;
  tower.T = ecurve::third_intersection(E, tower.R, S);
  for (const auto& st : {tower.S, tower.T}) {
    if (st == tower.P || st == tower.Q) throw PreconditionError("S and T must avoid P and Q");
  }

  const GradedQuotient& A = ctx.quotient();
  const LineForm L0 = line_or_tangent(E, tower.P, tower.Q);
  const LineForm M0 = line_or_tangent(E, tower.R, tower.S);
  if (L0 == M0) throw PreconditionError("M_0 is proportional to L_0");

  tower.n_max = n_max;
  for (std::uint32_t n = 0; n <= n_max; ++n) {
    const auto shift = static_cast<long long>(n);
    const LineForm Ln = line_or_tangent(E, plus_multiple(ctx, tower.P, shift), plus_multiple(ctx, tower.Q, shift));
    const LineForm Mn = n == 0 ? M0 : line_or_tangent(E, plus_multiple(ctx, tower.S, shift), plus_multiple(ctx, tower.T, shift));
    tower.L.push_back(A.linear(Ln.vector()));
    AlgebraElement M = A.linear(Mn.vector());
    Scalar lambda = Scalar::one(ctx.field());
    if (n > 0) {
      const AlgebraElement lhs = A.multiply(tower.L[n], tower.M[n - 1]);
      const AlgebraElement rhs = A.multiply(M, tower.L[n - 1]);
      auto pivot = std::find_if(rhs.coords.begin(), rhs.coords.end(), [](const Scalar& s) { return !s.is_zero(); });
      if (pivot == rhs.coords.end()) throw DegenerateConfiguration("relation-space inconsistency: M_n L_{n-1} vanishes");
      lambda = lhs.coords[static_cast<std::size_t>(pivot - rhs.coords.begin())] / *pivot;
      if (lambda.is_zero() || lhs != lambda * rhs) {
        throw DegenerateConfiguration("relation-space inconsistency: L_n M_{n-1} and M_n L_{n-1} are not proportional at n = " +
                                      std::to_string(n));
      }
      M = lambda * M;
    }
    tower.M.push_back(M);
    tower.lambda.push_back(lambda);
  }
  tower.N.push_back(A.unit());
  tower.Nprime.push_back(A.unit());
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    tower.N.push_back(n == 1 ? tower.M[0] : A.multiply(tower.M[n - 1], tower.N[n - 1]));
    tower.Nprime.push_back(n == 1 ? tower.M[1] : A.multiply(tower.M[n], tower.Nprime[n - 1]));
  }
  return tower;
}

bool verify_tower_relation(const SklyaninContext& ctx, const Tower& tower, std::uint32_t n) {
  const GradedQuotient& A = ctx.quotient();
  return A.multiply(tower.L.at(n), tower.M.at(n - 1)) == A.multiply(tower.M.at(n), tower.L.at(n - 1));
}

bool verify_tower_identity(const SklyaninContext& ctx, const Tower& tower, std::uint32_t n) {
  const GradedQuotient& A = ctx.quotient();
  return A.multiply(tower.L.at(n), tower.N.at(n)) == A.multiply(tower.Nprime.at(n), tower.L.at(0));
}

std::vector<ProjPoint> claimed_divisor_of_Nn(const SklyaninContext& ctx, const Tower& tower, std::uint32_t n) {
  std::vector<ProjPoint> points;
  auto push = [&](const ProjPoint& pt) {
    if (std::find(points.begin(), points.end(), pt) == points.end()) points.push_back(pt);
  };
  const auto shift = static_cast<long long>(n) - 1;
  push(plus_multiple(ctx, tower.S, shift));
  push(plus_multiple(ctx, tower.T, shift));
  for (long long i = 0; i <= shift; ++i) push(plus_multiple(ctx, tower.R, 3 * i - 2 * shift));
  return points;
}

bool verify_divisor_of_Nn(const SklyaninContext& ctx, const Tower& tower, std::uint32_t n) {
  const TensorElement rep = ctx.quotient().representative(tower.N.at(n));
  for (const auto& pt : claimed_divisor_of_Nn(ctx, tower, n))
    if (!evaluate(ctx, rep, pt).is_zero()) return false;
  return true;
}

bool verify_Nn_not_in_AL(const SklyaninContext& ctx, const Tower& tower, std::uint32_t n) {
  return !membership_in_AL(ctx, tower.N.at(n), tower.L.at(0));
}

Subspace truncated_annihilator_AL(const SklyaninContext& ctx, const AlgebraElement& L_target, const AlgebraElement& w,
                                  std::uint32_t m) {
  if (w.is_zero()) throw PreconditionError("annihilator of the zero element");
  const GradedQuotient& A = ctx.quotient();
  return preimage(A.right_multiplication(w, m), A.left_ideal_image(L_target, m + w.degree));
}

Subspace intersect_ALn_slices(const SklyaninContext& ctx, const Tower& tower, std::uint32_t m, std::uint32_t N) {
  if (N > tower.n_max) throw PreconditionError("N exceeds the tower cap");
  const GradedQuotient& A = ctx.quotient();
  Subspace meet = A.left_ideal_image(tower.L[0], m);
  for (std::uint32_t n = 1; n <= N && meet.dim() > 0; ++n) meet = subspace_intersect(meet, A.left_ideal_image(tower.L[n], m));
  return meet;
}

std::optional<std::uint32_t> minimal_intersection_N(const SklyaninContext& ctx, const Tower& tower, std::uint32_t m) {
  const GradedQuotient& A = ctx.quotient();
  Subspace meet = A.left_ideal_image(tower.L[0], m);
  for (std::uint32_t n = 0; n <= tower.n_max; ++n) {
    if (n > 0) meet = subspace_intersect(meet, A.left_ideal_image(tower.L[n], m));
    if (meet.dim() == 0) return n;
  }
  return std::nullopt;
}

Subspace direct_annihilator_AL(const SklyaninContext& ctx, const AlgebraElement& L, std::uint32_t m,
                               std::uint32_t test_degree) {
  const GradedQuotient& A = ctx.quotient();
  Subspace result = Subspace::full(ctx.field(), A.dim(m));
  for (std::uint32_t k = 0; k <= test_degree && result.dim() > 0; ++k) {
    const Subspace target = A.left_ideal_image(L, m + k);
    for (std::size_t t = 0; t < A.dim(k) && result.dim() > 0; ++t) {
      const AlgebraElement word{k, unit_vector(ctx.field(), A.dim(k), t)};
      result = subspace_intersect(result, preimage(A.right_multiplication(word, m), target));
    }
  }
  return result;
}

CertificateReport faithfulness_certificate_sklyanin(const SklyaninContext& ctx, const Tower& tower, std::uint32_t d) {
  CertificateReport report;
  const std::string anchor = "A/AL is a faithful A-module";
  if (tower.L.empty() || tower.L[0].degree != 1) {
    report.add(CheckRecord{"sklyanin.faithful", anchor, Status::precondition_error,
                           json{{"reason", "L must have degree 1"}}});
    return report;
  }
  const AlgebraElement& L = tower.L[0];
  const GradedQuotient& A = ctx.quotient();
  if (d + tower.n_max > A.max_degree()) {
    report.add(CheckRecord{"sklyanin.faithful", anchor, Status::precondition_error,
                           json{{"reason", "d + n_max exceeds the quotient degree cap"}}});
    return report;
  }

  bool tower_zero = true;
  report.add(timed([&] {
    json rows = json::array();
    for (std::uint32_t m = 0; m <= d; ++m) {
      Subspace t = Subspace::full(ctx.field(), A.dim(m));
      std::uint32_t used = 0;
      for (std::uint32_t n = 0; n <= tower.n_max && t.dim() > 0; ++n, ++used) {
        t = subspace_intersect(t, truncated_annihilator_AL(ctx, L, tower.N[n], m));
      }
      tower_zero = tower_zero && t.dim() == 0;
      rows.push_back(json{{"m", m}, {"dim", t.dim()}, {"N_used", used}});
    }
    return CheckRecord{"sklyanin.faithful_via_tower", "ann_A(A/AL) ∩ A(m) ⊆ ∩_n ann N̄_n = 0",
                       tower_zero ? Status::pass : Status::inconclusive,
                       json{{"d", d}, {"n_max", tower.n_max}, {"pieces", rows}}};
  }));

  bool direct_zero = true;
  report.add(timed([&] {
    json rows = json::array();
    for (std::uint32_t m = 0; m <= d; ++m) {
      const Subspace t = direct_annihilator_AL(ctx, L, m, tower.n_max);
      direct_zero = direct_zero && t.dim() == 0;
      rows.push_back(json{{"m", m}, {"dim", t.dim()}});
    }
    return CheckRecord{"sklyanin.faithful_direct", "{a in A(m) : a A(k) ⊆ AL, k <= n_max} = 0",
                       direct_zero ? Status::pass : Status::inconclusive,
                       json{{"d", d}, {"test_degree", tower.n_max}, {"pieces", rows}}};
  }));

  const bool agree = tower_zero == direct_zero;
  report.add(CheckRecord{"sklyanin.faithful", anchor,
                         agree && tower_zero ? Status::pass : Status::inconclusive,
                         json{{"via_tower", tower_zero}, {"direct", direct_zero}, {"agree", agree}}});
  return report;
}

CertificateReport sklyanin_suite(const SklyaninContext& ctx, const ProjPoint& P, const ProjPoint& Q,
                                 const ProjPoint& S) {
  CertificateReport report;
  const GradedQuotient& A = ctx.quotient();
  const Field f = ctx.field();
  const SklyaninCaps& caps = ctx.caps();

  report.add(CheckRecord{"sklyanin.infinite_order", "p has infinite order", Status::pass,
                         json{{"p", ctx.point().to_string()}, {"bound", caps.torsion_bound}}});

  report.add(timed([&] {
    const Subspace r1 = relations(ctx, 1);
    const Subspace& r2 = ctx.r2();
    const std::size_t skip = ctx.default_sample_count(2) + caps.sample_margin;
    std::size_t nonvanishing = 0;
    for (const auto& e : ctx.sample_points(20, skip))
      for (std::size_t i = 0; i < r2.dim(); ++i)
        if (!evaluate(ctx, TensorElement{2, r2.basis_vector(i)}, e).is_zero()) ++nonvanishing;
    const bool ok = r1.dim() == 0 && r2.dim() == 3 && nonvanishing == 0;
    return CheckRecord{"sklyanin.relations", "R_2 = forms vanishing on E_2, dim 3", ok ? Status::pass : Status::fail,
                       json{{"dim_R1", r1.dim()}, {"dim_R2", r2.dim()}, {"R2", to_json(r2)},
                            {"fresh_points", 20}, {"nonvanishing", nonvanishing}}};
  }));

  report.add(timed([&] {
    const Subspace r3 = relations(ctx, 3);
    const Subspace r4 = relations(ctx, 4);
    const Subspace& i3 = ctx.ideal_slice(3);
    std::vector<Vector> rows;
    const Subspace& i4 = ctx.ideal_slice(4);
    for (std::size_t i = 0; i < i4.dim(); ++i) rows.push_back(i4.basis_vector(i));
    for (std::size_t i = 0; i < r3.dim(); ++i) {
      const TensorElement r{3, r3.basis_vector(i)};
      for (std::uint64_t v = 0; v < 3; ++v) {
        const TensorElement letter = TensorElement::word(f, 1, v);
        rows.push_back(tensor(r, letter).coords);
        rows.push_back(tensor(letter, r).coords);
      }
    }
    const Subspace generated = Subspace::span(f, tensor_dim(4), rows);
    const bool stable = generated.contains(r4) && i3.dim() <= r3.dim() && r3.contains(i3);
    return CheckRecord{"sklyanin.ideal_stabilization", "I_n = I_3 for n >= 3",
                       stable ? Status::pass : Status::fail,
                       json{{"dim_I3", i3.dim()}, {"dim_R3", r3.dim()}, {"gap", r3.dim() - i3.dim()},
                            {"dim_R4", r4.dim()}, {"dim_generated_4", generated.dim()}}};
  }));

  report.add(timed([&] {
    json dims = json::array();
    bool ok = true;
    for (std::uint32_t n = 0; n <= 6; ++n) {
      dims.push_back(A.dim(n));
      ok = ok && A.dim(n) == static_cast<std::size_t>((n + 1) * (n + 2) / 2);
    }
    return CheckRecord{"sklyanin.hilbert_function", "dim A(n) = (n+1)(n+2)/2", ok ? Status::pass : Status::fail,
                       json{{"dims", dims}}};
  }));

  report.add(timed([&] {
    AlgebraElement g;
    try {
      g = find_central_g(ctx);
    } catch (const DegenerateConfiguration& e) {
      return CheckRecord{"sklyanin.central_element", "g in A(3) with gA = Ag", Status::precondition_error,
                         json{{"reason", e.what()}}};
    }
    bool ok = true;
    json rows = json::array();
    for (std::uint32_t m = 0; m <= 3; ++m) {
      const Matrix right = A.right_multiplication(g, m), left = A.left_multiplication(g, m);
      const bool same = image(right) == image(left);
      const bool injective = rref(right).rank == A.dim(m);
      if (m <= 2) ok = ok && same;
      ok = ok && injective;
      rows.push_back(json{{"m", m}, {"gA_eq_Ag", same}, {"injective", injective}});
    }
    return CheckRecord{"sklyanin.central_element", "g in A(3) with gA = Ag, unique up to scalar",
                       ok ? Status::pass : Status::fail, json{{"g", element_json(g)}, {"checks", rows}}};
  }));

  Tower tower;
  try {
    tower = construct_tower(ctx, P, Q, S, caps.n_max);
  } catch (const PreconditionError& e) {
    report.add(CheckRecord{"sklyanin.tower", "(E, sigma, L) tower hypotheses", Status::precondition_error,
                           json{{"reason", e.what()}}});
    return report;
  } catch (const DegenerateConfiguration& e) {
    report.add(CheckRecord{"sklyanin.tower", "L_n M_{n-1} = M_n L_{n-1}", Status::fail, json{{"reason", e.what()}}});
    return report;
  }
  {
    json lambdas = json::array();
    for (const auto& l : tower.lambda) lambdas.push_back(to_json(l));
    report.add(CheckRecord{"sklyanin.tower", "(E, sigma, L) tower hypotheses", Status::pass,
                           json{{"P", tower.P.to_string()}, {"Q", tower.Q.to_string()}, {"R", tower.R.to_string()},
                                {"S", tower.S.to_string()}, {"T", tower.T.to_string()},
                                {"relabelled", tower.relabelled}, {"n_max", tower.n_max},
                                {"L0", element_json(tower.L[0])}, {"lambda", lambdas}}});
  }

  auto per_n = [&](const std::string& name, const std::string& anchor, std::uint32_t top, auto&& predicate) {
    report.add(timed([&] {
      std::vector<std::uint32_t> failed;
      for (std::uint32_t n = 1; n <= top; ++n)
        if (!predicate(n)) failed.push_back(n);
      return CheckRecord{name, anchor, failed.empty() ? Status::pass : Status::fail,
                         json{{"n_max", top}, {"failed", failed}}};
    }));
  };
  per_n("sklyanin.tower_relation", "L_n M_{n-1} = M_n L_{n-1}", tower.n_max,
        [&](std::uint32_t n) { return verify_tower_relation(ctx, tower, n); });
  per_n("sklyanin.tower_identity", "L_n N_n = N'_n L", tower.n_max,
        [&](std::uint32_t n) { return verify_tower_identity(ctx, tower, n); });
  per_n("sklyanin.divisor_of_N", "N_n vanishes on n(S+(n-1)p) + n(T+(n-1)p) + sum_i R+(3i-2(n-1))p", tower.n_max,
        [&](std::uint32_t n) { return verify_divisor_of_Nn(ctx, tower, n); });

  report.add(timed([&] {
    std::vector<std::uint32_t> failed;
    bool control = true;
    for (std::uint32_t n = 1; n <= tower.n_max; ++n) {
      if (!verify_Nn_not_in_AL(ctx, tower, n)) failed.push_back(n);
      AlgebraElement sample = A.zero(n - 1);
      for (std::size_t i = 0; i < sample.coords.size(); ++i) sample.coords[i] = Scalar::from_int(f, static_cast<long long>(i) + 1);
      control = control && membership_in_AL(ctx, A.multiply(sample, tower.L[0]), tower.L[0]);
    }
    return CheckRecord{"sklyanin.N_not_in_AL", "N_n ∉ AL", failed.empty() && control ? Status::pass : Status::fail,
                       json{{"n_max", tower.n_max}, {"failed", failed}, {"control_in_AL", control}}};
  }));

  report.add(timed([&] {
    const std::uint32_t n_top = std::min(3U, tower.n_max), m_top = std::min(3U, caps.d);
    json mismatches = json::array();
    for (std::uint32_t n = 0; n <= n_top; ++n) {
      for (std::uint32_t m = 0; m <= m_top; ++m) {
        if (truncated_annihilator_AL(ctx, tower.L[0], tower.N[n], m) != A.left_ideal_image(tower.L[n], m)) {
          mismatches.push_back(json{{"n", n}, {"m", m}});
        }
      }
    }
    return CheckRecord{"sklyanin.annihilator_of_N", "ann_A N̄_n = AL_n", mismatches.empty() ? Status::pass : Status::fail,
                       json{{"n_max", n_top}, {"m_max", m_top}, {"mismatches", mismatches}}};
  }));

  report.add(timed([&] {
    json rows = json::array();
    bool all = true;
    for (std::uint32_t m = 1; m <= 4; ++m) {
      const auto N = minimal_intersection_N(ctx, tower, m);
      all = all && N.has_value();
      rows.push_back(json{{"m", m}, {"minimal_N", N ? json(*N) : json(nullptr)}});
    }
    return CheckRecord{"sklyanin.intersection_of_AL", "∩_n AL_n = 0", all ? Status::pass : Status::inconclusive,
                       json{{"n_max", tower.n_max}, {"pieces", rows}}};
  }));

  report.append(faithfulness_certificate_sklyanin(ctx, tower, caps.d));
  return report;
}

}  // namespace faithcert::sklyanin

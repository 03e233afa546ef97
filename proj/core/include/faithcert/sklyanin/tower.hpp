#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "faithcert/ecurve/hesse.hpp"
#include "faithcert/report/report.hpp"
#include "faithcert/sklyanin/context.hpp"

namespace faithcert::sklyanin {

/// Lines L_n, M_n in A(1) and the products N_n, N'_n in A(n), indexed by n.
/// L = L_0 passes through P, Q, R; M_0 through R, S, T.
struct Tower {
  ProjPoint P, Q, R, S, T;
  /// Which point plays R after relabelling: "R", "P" or "Q".
  std::string relabelled;
  std::uint32_t n_max = 0;
  std::vector<AlgebraElement> L, M, N, Nprime;
  /// lambda[n] rescales the line through S + np, T + np into M_n (lambda[0] = 1).
  std::vector<Scalar> lambda;
};

/// Builds the tower up to n_max. Throws PreconditionError when the
/// configuration violates a hypothesis and DegenerateConfiguration when
/// L_n M_{n-1} and M_n L_{n-1} are not proportional in A(2).
Tower construct_tower(const SklyaninContext& ctx, const ProjPoint& P, const ProjPoint& Q, const ProjPoint& S,
                      std::uint32_t n_max);

/// L_n M_{n-1} = M_n L_{n-1} in A(2).
bool verify_tower_relation(const SklyaninContext& ctx, const Tower& tower, std::uint32_t n);
/// L_n N_n = N'_n L in A(n+1).
bool verify_tower_identity(const SklyaninContext& ctx, const Tower& tower, std::uint32_t n);

/// Points at which N_n must vanish: S + (n-1)p, T + (n-1)p and
/// R + (3i - 2(n-1))p for 0 <= i <= n-1, without repetitions.
std::vector<ProjPoint> claimed_divisor_of_Nn(const SklyaninContext& ctx, const Tower& tower, std::uint32_t n);
bool verify_divisor_of_Nn(const SklyaninContext& ctx, const Tower& tower, std::uint32_t n);

bool verify_Nn_not_in_AL(const SklyaninContext& ctx, const Tower& tower, std::uint32_t n);

/// { a in A(m) : a w in A L_target }.
Subspace truncated_annihilator_AL(const SklyaninContext& ctx, const AlgebraElement& L_target, const AlgebraElement& w,
                                  std::uint32_t m);

/// ∩_{n=0..N} A L_n ∩ A(m), in A(m) coordinates (zero means the
/// intersection inside V^{⊗m} is exactly I(m)).
Subspace intersect_ALn_slices(const SklyaninContext& ctx, const Tower& tower, std::uint32_t m, std::uint32_t N);
/// Smallest N <= tower.n_max with a zero intersection in degree m.
std::optional<std::uint32_t> minimal_intersection_N(const SklyaninContext& ctx, const Tower& tower, std::uint32_t m);

/// { a in A(m) : a A(k) ⊆ A L for all k <= test_degree }.
Subspace direct_annihilator_AL(const SklyaninContext& ctx, const AlgebraElement& L, std::uint32_t m,
                               std::uint32_t test_degree);

/// For each m <= d, T_m = { a in A(m) : a N_n in A L for n <= n_max }
/// must vanish, and so must the direct truncated annihilator with test
/// degree n_max. Exhausted caps give inconclusive records.
CertificateReport faithfulness_certificate_sklyanin(const SklyaninContext& ctx, const Tower& tower, std::uint32_t d);

/// Every check of the suite, in a fixed order.
CertificateReport sklyanin_suite(const SklyaninContext& ctx, const ProjPoint& P, const ProjPoint& Q,
                                 const ProjPoint& S);

}  // namespace faithcert::sklyanin

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "faithcert/lie/uea.hpp"
#include "faithcert/linalg/subspace.hpp"
#include "faithcert/report/report.hpp"

namespace faithcert::lie {

// Truncated certificates for faithfulness of U/Ux, x in U_1 \ K.
//
// Every subspace returned here lives in the coordinates of
// FiltrationBasis(algebra, d). Because gr U is a polynomial ring,
// Ux ∩ U_k = U_{k-1} x, which is what makes the degree-d truncations exact.

/// (x - n) y^n == y^n x in U.
bool verify_weight_identity(const UeaElement& x, const UeaElement& y, unsigned n);

/// span{ m x : deg m <= d-1 } = Ux ∩ U_d. Throws PreconditionError unless
/// x has degree exactly 1.
Subspace left_ideal_truncation(const UeaElement& x, std::uint32_t d);

/// { u in U_d : u w in Ux }.
Subspace truncated_annihilator_mod(const UeaElement& x, const UeaElement& w, std::uint32_t d);

/// { u in U_d : u w in Ux for every w in `family` }, intersected in order;
/// stops early once the running intersection is zero and reports how many
/// family members were consumed through `used`.
Subspace annihilator_of_family(const UeaElement& x, const std::vector<UeaElement>& family, std::uint32_t d,
                               std::size_t* used = nullptr);

/// ∩_{n=0..N} (U(x-n) ∩ U_d).
Subspace intersect_shifted_ideals(const UeaElement& x, unsigned shifts, std::uint32_t d);

/// { z in U_d : z x_i = x_i z for all basis x_i }.
Subspace center_truncated(const std::shared_ptr<const LieAlgebra>& algebra, std::uint32_t d);

/// (ad y)^k (u), with ad y extended to U as the derivation u -> yu - uy.
UeaElement ad_derivation_power(const Vector& y, const UeaElement& u, unsigned k);

/// Direct truncated annihilator of U/Ux:
/// { u in U_d : u b in Ux for every PBW monomial b of degree <= test_degree }.
Subspace truncated_module_annihilator(const UeaElement& x, std::uint32_t d, std::uint32_t test_degree);

/// Ux ∩ Z ∩ U_d. Every nonzero element annihilates U/Ux, since it
/// commutes past any b to give bz in Ux.
Subspace certified_annihilators(const UeaElement& x, std::uint32_t d);

/// Record for the direct truncated annihilator at cap d with test degree
/// d: pass when it vanishes, fail when it meets Ux ∩ Z (a certified
/// annihilating element), inconclusive otherwise.
CheckRecord direct_annihilator_record(const UeaElement& x, std::uint32_t d);

/// Lie axioms, the dispatching certificate and the direct annihilator.
CertificateReport env_suite(const std::shared_ptr<const LieAlgebra>& algebra, const UeaElement& x, std::uint32_t d,
                            unsigned shifts);

/// x = x' + mu with x' in g nonzero; throws PreconditionError otherwise.
struct LinearGenerator {
  Vector lie_part;
  Scalar constant;
};
LinearGenerator split_linear(const UeaElement& x);

/// Faithfulness of U/Ux for nilpotent nonabelian g and x' outside the
/// center, via Ux ∩ Z = 0 at degree d plus a spot check of the leading
/// (ad y)-power identity.
CertificateReport verify_nilpotent_faithful(const std::shared_ptr<const LieAlgebra>& algebra, const UeaElement& x,
                                            std::uint32_t d);

/// Dispatching certificate: eigenvector branch when x' is not
/// ad-nilpotent, nilpotent branch when g is nilpotent and x' is not
/// central, otherwise an inconclusive "outside X" record.
CertificateReport faithfulness_certificate_env(const std::shared_ptr<const LieAlgebra>& algebra,
                                               const UeaElement& x, std::uint32_t d, unsigned shifts);

}  // namespace faithcert::lie

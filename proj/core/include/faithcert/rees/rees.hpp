#pragma once

#include <cstdint>
#include <string>

#include "faithcert/lie/uea.hpp"
#include "faithcert/report/report.hpp"

namespace faithcert::rees {

using lie::UeaElement;

/// u z^n in the Rees ring of the standard filtration, deg u <= n.
struct ReesElement {
  std::uint32_t degree = 0;
  UeaElement coefficient;

  std::string to_string() const;
  friend bool operator==(const ReesElement&, const ReesElement&) = default;
};

/// u z^n. Throws PreconditionError when deg u > n.
ReesElement homogenize(const UeaElement& u, std::uint32_t n);
/// The central degree-one element z = 1 z.
ReesElement rees_z(const std::shared_ptr<const lie::LieAlgebra>& algebra);
ReesElement rees_multiply(const ReesElement& a, const ReesElement& b);
ReesElement operator+(const ReesElement& a, const ReesElement& b);
ReesElement operator-(const ReesElement& a, const ReesElement& b);

/// Coordinates on the homogeneous piece of degree n: those of U_n.
lie::FiltrationBasis rees_basis(const std::shared_ptr<const lie::LieAlgebra>& algebra, std::uint32_t n);

/// dim of the degree-n piece, computed from homogenized basis elements.
std::size_t rees_piece_dim(const std::shared_ptr<const lie::LieAlgebra>& algebra, std::uint32_t n);

/// (Rees ring)·x̃ in degree n, with x̃ = xz.
Subspace rees_ideal_slice(const UeaElement& x, std::uint32_t n);

/// { homogeneous u of degree m : u b̃ in (Rees ring)·x̃ for every
/// homogeneous basis element b̃ of degree <= test_degree }.
Subspace rees_homogeneous_annihilator(const UeaElement& x, std::uint32_t m, std::uint32_t test_degree);

/// Compares the truncated annihilator of U/Ux with the graded pieces of
/// the annihilator of the Rees module, both at cap d, and records whether
/// the two sides agree.
CertificateReport verify_rees_transfer(const UeaElement& x, std::uint32_t d);

}  // namespace faithcert::rees

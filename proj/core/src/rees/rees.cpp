#include "faithcert/rees/rees.hpp"

#include <map>

#include "faithcert/errors.hpp"
#include "faithcert/lie/certificates.hpp"

namespace faithcert::rees {

namespace {

void require_same_algebra(const ReesElement& a, const ReesElement& b) {
  if (a.coefficient.algebra() != b.coefficient.algebra()) throw std::invalid_argument("Rees elements over different algebras");
}

}  // namespace

std::string ReesElement::to_string() const {
  return "(" + coefficient.to_string() + ")*z^" + std::to_string(degree);
}

ReesElement homogenize(const UeaElement& u, std::uint32_t n) {
  const auto deg = u.degree();
  if (deg && *deg > n) {
    throw PreconditionError("cannot homogenize an element of degree " + std::to_string(*deg) + " in degree " +
                            std::to_string(n));
  }
  return ReesElement{n, u};
}

ReesElement rees_z(const std::shared_ptr<const lie::LieAlgebra>& algebra) {
  return ReesElement{1, UeaElement::one(algebra)};
}

ReesElement rees_multiply(const ReesElement& a, const ReesElement& b) {
  require_same_algebra(a, b);
  return ReesElement{a.degree + b.degree, a.coefficient * b.coefficient};
}

ReesElement operator+(const ReesElement& a, const ReesElement& b) {
  require_same_algebra(a, b);
  if (a.degree != b.degree) throw DimensionMismatch("adding Rees elements of different degrees");
  return ReesElement{a.degree, a.coefficient + b.coefficient};
}

ReesElement operator-(const ReesElement& a, const ReesElement& b) {
  require_same_algebra(a, b);
  if (a.degree != b.degree) throw DimensionMismatch("subtracting Rees elements of different degrees");
  return ReesElement{a.degree, a.coefficient - b.coefficient};
}

lie::FiltrationBasis rees_basis(const std::shared_ptr<const lie::LieAlgebra>& algebra, std::uint32_t n) {
  return lie::FiltrationBasis(algebra, n);
}

std::size_t rees_piece_dim(const std::shared_ptr<const lie::LieAlgebra>& algebra, std::uint32_t n) {
  const auto basis = rees_basis(algebra, n);
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < basis.dim(); ++i) rows.push_back(basis.element_to_vector(homogenize(basis.element(i), n).coefficient));
  return Subspace::span(algebra->field(), basis.dim(), rows).dim();
}

Subspace rees_ideal_slice(const UeaElement& x, std::uint32_t n) {
  lie::split_linear(x);
  const auto& algebra = x.algebra();
  const auto basis = rees_basis(algebra, n);
  if (n == 0) return Subspace::zero(algebra->field(), basis.dim());
  const ReesElement xt = homogenize(x, 1);
  const auto lower = rees_basis(algebra, n - 1);
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < lower.dim(); ++i) {
    const ReesElement product = rees_multiply(homogenize(lower.element(i), n - 1), xt);
    rows.push_back(basis.element_to_vector(product.coefficient));
  }
  return Subspace::span(algebra->field(), basis.dim(), rows);
}

Subspace rees_homogeneous_annihilator(const UeaElement& x, std::uint32_t m, std::uint32_t test_degree) {
  const auto& algebra = x.algebra();
  const auto source = rees_basis(algebra, m);
  Subspace result = Subspace::full(algebra->field(), source.dim());
  std::map<std::uint32_t, std::pair<lie::FiltrationBasis, Subspace>> targets;
  for (std::uint32_t k = 0; k <= test_degree && result.dim() > 0; ++k) {
    const auto tests = rees_basis(algebra, k);
    auto [it, inserted] = targets.try_emplace(m + k, rees_basis(algebra, m + k), Subspace());
    if (inserted) it->second.second = rees_ideal_slice(x, m + k);
    const auto& [target, ideal] = it->second;
    for (std::size_t t = 0; t < tests.dim() && result.dim() > 0; ++t) {
      const ReesElement b = homogenize(tests.element(t), k);
      Matrix map(algebra->field(), target.dim(), source.dim());
      for (std::size_t c = 0; c < source.dim(); ++c) {
        const ReesElement product = rees_multiply(homogenize(source.element(c), m), b);
        const Vector col = ideal.reduce(target.element_to_vector(product.coefficient));
        for (std::size_t r = 0; r < col.size(); ++r) map(r, c) = col[r];
      }
      result = subspace_intersect(result, kernel(map));
    }
  }
  return result;
}

CertificateReport verify_rees_transfer(const UeaElement& x, std::uint32_t d) {
  lie::split_linear(x);
  const auto& algebra = x.algebra();
  const std::uint32_t test_degree = d;
  CertificateReport report;

  bool u_faithful = false;
  report.add(timed([&] {
    const Subspace ann = lie::truncated_module_annihilator(x, d, test_degree);
    u_faithful = ann.dim() == 0;
    nlohmann::json data{{"degree", d}, {"test_degree", test_degree}, {"dim", ann.dim()}};
    Status status = Status::pass;
    if (!u_faithful) {
      const lie::FiltrationBasis basis(algebra, d);
      const Subspace certified = subspace_intersect(ann, lie::certified_annihilators(x, d));
      status = certified.dim() > 0 ? Status::fail : Status::inconclusive;
      data["witness"] = basis.vector_to_element((certified.dim() > 0 ? certified : ann).basis().row(0)).to_string();
      data["x_annihilates"] = certified.contains(basis.element_to_vector(x));
    }
    return CheckRecord{"rees.u_annihilator", "ann of U/Ux vanishes in U_d", status, data};
  }));

  bool rees_faithful = true;
  report.add(timed([&] {
    nlohmann::json pieces = nlohmann::json::array();
    nlohmann::json data{{"degree", d}, {"test_degree", test_degree}};
    bool certified_any = false;
    for (std::uint32_t m = 0; m <= d; ++m) {
      const Subspace ann = rees_homogeneous_annihilator(x, m, test_degree);
      pieces.push_back(ann.dim());
      if (ann.dim() == 0) continue;
      rees_faithful = false;
      // Central elements of the Rees ideal in degree m annihilate the module outright.
      const auto basis = rees_basis(algebra, m);
      const Subspace central = subspace_intersect(rees_ideal_slice(x, m), lie::center_truncated(algebra, m));
      const Subspace certified = subspace_intersect(ann, central);
      if (!data.contains("witness") || (certified.dim() > 0 && !certified_any)) {
        data["witness"] = ReesElement{m, basis.vector_to_element((certified.dim() > 0 ? certified : ann).basis().row(0))}
                              .to_string();
        data["x_annihilates"] = m == 1 && certified.contains(basis.element_to_vector(x));
      }
      certified_any = certified_any || certified.dim() > 0;
    }
    data["piece_dims"] = pieces;
    const Status status = rees_faithful ? Status::pass : (certified_any ? Status::fail : Status::inconclusive);
    return CheckRecord{"rees.rees_annihilator", "graded ann of the Rees module vanishes in degrees <= d", status, data};
  }));

  report.add(CheckRecord{"rees.transfer_agreement", "U/Ux faithful iff the Rees module is faithful (at cap d)",
                         u_faithful == rees_faithful ? Status::pass : Status::fail,
                         nlohmann::json{{"u_side", u_faithful}, {"rees_side", rees_faithful}}});
  return report;
}

}  // namespace faithcert::rees

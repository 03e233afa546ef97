#include "faithcert/lie/certificates.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "faithcert/errors.hpp"

namespace faithcert::lie {

namespace {

using nlohmann::json;

Subspace ideal_in_basis(const UeaElement& x, const FiltrationBasis& basis) {
  std::vector<Vector> rows;
  const std::size_t lower = basis.degree() == 0 ? 0 : basis.offset(basis.degree());
  rows.reserve(lower);
  for (std::size_t i = 0; i < lower; ++i) rows.push_back(basis.element_to_vector(basis.element(i) * x));
  return Subspace::span(x.field(), basis.dim(), rows);
}

// Columns: coordinates of (basis element) * w in `target_basis`, reduced modulo `ideal`.
Matrix reduced_right_multiplication(const FiltrationBasis& source, const UeaElement& w,
                                    const FiltrationBasis& target_basis, const Subspace& ideal) {
  Matrix map(w.field(), target_basis.dim(), source.dim());
  for (std::size_t c = 0; c < source.dim(); ++c) {
    const Vector col = ideal.reduce(target_basis.element_to_vector(source.element(c) * w));
    for (std::size_t r = 0; r < col.size(); ++r) map(r, c) = col[r];
  }
  return map;
}

json vector_json(const FiltrationBasis& basis, std::span<const Scalar> v) {
  return basis.vector_to_element(v).to_string();
}

std::string describe(const UeaElement& u) { return u.to_string(); }

}  // namespace

LinearGenerator split_linear(const UeaElement& x) {
  const auto degree = x.degree();
  if (!degree || *degree != 1) throw PreconditionError("x must lie in U_1 and not in K");
  return LinearGenerator{x.linear_part(), x.constant_term()};
}

bool verify_weight_identity(const UeaElement& x, const UeaElement& y, unsigned n) {
  const UeaElement yn = y.pow(n);
  const UeaElement shifted = x - UeaElement::scalar(x.algebra(), Scalar::from_int(x.field(), n));
  return shifted * yn == yn * x;
}

Subspace left_ideal_truncation(const UeaElement& x, std::uint32_t d) {
  split_linear(x);
  return ideal_in_basis(x, FiltrationBasis(x.algebra(), d));
}

Subspace truncated_annihilator_mod(const UeaElement& x, const UeaElement& w, std::uint32_t d) {
  return annihilator_of_family(x, {w}, d);
}

Subspace annihilator_of_family(const UeaElement& x, const std::vector<UeaElement>& family, std::uint32_t d,
                               std::size_t* used) {
  split_linear(x);
  const FiltrationBasis source(x.algebra(), d);
  Subspace result = Subspace::full(x.field(), source.dim());
  std::map<std::uint32_t, std::pair<FiltrationBasis, Subspace>> targets;
  std::size_t consumed = 0;
  for (const auto& w : family) {
    if (result.dim() == 0) break;
    ++consumed;
    if (w.is_zero()) continue;
    const std::uint32_t top = d + *w.degree();
    auto it = targets.find(top);
    if (it == targets.end()) {
      FiltrationBasis target(x.algebra(), top);
      Subspace ideal = ideal_in_basis(x, target);
      it = targets.emplace(top, std::pair{std::move(target), std::move(ideal)}).first;
    }
    const auto& [target, ideal] = it->second;
    result = subspace_intersect(result, kernel(reduced_right_multiplication(source, w, target, ideal)));
  }
  if (used != nullptr) *used = consumed;
  return result;
}

Subspace intersect_shifted_ideals(const UeaElement& x, unsigned shifts, std::uint32_t d) {
  split_linear(x);
  const FiltrationBasis basis(x.algebra(), d);
  Subspace result = ideal_in_basis(x, basis);
  for (unsigned n = 1; n <= shifts && result.dim() > 0; ++n) {
    const UeaElement shifted = x - UeaElement::scalar(x.algebra(), Scalar::from_int(x.field(), n));
    result = subspace_intersect(result, ideal_in_basis(shifted, basis));
  }
  return result;
}

Subspace center_truncated(const std::shared_ptr<const LieAlgebra>& algebra, std::uint32_t d) {
  const FiltrationBasis basis(algebra, d);
  const std::size_t m = algebra->dim();
  Matrix map(algebra->field(), basis.dim() * m, basis.dim());
  for (std::size_t c = 0; c < basis.dim(); ++c) {
    const UeaElement z = basis.element(c);
    for (std::size_t i = 0; i < m; ++i) {
      const UeaElement xi = UeaElement::generator(algebra, i);
      const Vector commutator = basis.element_to_vector(z * xi - xi * z);
      for (std::size_t r = 0; r < basis.dim(); ++r) map(i * basis.dim() + r, c) = commutator[r];
    }
  }
  return kernel(map);
}

UeaElement ad_derivation_power(const Vector& y, const UeaElement& u, unsigned k) {
  const UeaElement yu = UeaElement::from_lie(u.algebra(), y);
  UeaElement current = u;
  for (unsigned i = 0; i < k && !current.is_zero(); ++i) current = yu * current - current * yu;
  return current;
}

Subspace truncated_module_annihilator(const UeaElement& x, std::uint32_t d, std::uint32_t test_degree) {
  const FiltrationBasis tests(x.algebra(), test_degree);
  std::vector<UeaElement> family;
  family.reserve(tests.dim());
  for (std::size_t i = 0; i < tests.dim(); ++i) family.push_back(tests.element(i));
  return annihilator_of_family(x, family, d);
}

CertificateReport verify_nilpotent_faithful(const std::shared_ptr<const LieAlgebra>& algebra, const UeaElement& x,
                                            std::uint32_t d) {
  CertificateReport report;
  const std::string anchor = "U/Ux faithful for nilpotent g, x' outside the center (via Ux ∩ Z = 0)";
  auto precondition = [&](const std::string& why) {
    report.add(CheckRecord{"env.nilpotent.center_intersection", anchor, Status::precondition_error,
                           json{{"reason", why}}});
    return report;
  };
  if (!is_nilpotent(*algebra)) return precondition("g is not nilpotent");
  if (is_abelian(*algebra)) return precondition("g is abelian");
  LinearGenerator parts;
  try {
    parts = split_linear(x);
  } catch (const PreconditionError& e) {
    return precondition(e.what());
  }
  if (center(*algebra).contains(parts.lie_part)) return precondition("x' is central");

  report.add(timed([&] {
    const Subspace ideal = left_ideal_truncation(x, d);
    const Subspace z = center_truncated(algebra, d);
    const Subspace meet = subspace_intersect(ideal, z);
    const FiltrationBasis basis(algebra, d);
    json data{{"degree", d}, {"ideal_dim", ideal.dim()}, {"center_dim", z.dim()}, {"intersection_dim", meet.dim()}};
    if (meet.dim() > 0) data["witness"] = vector_json(basis, meet.basis().row(0));
    return CheckRecord{"env.nilpotent.center_intersection", "Ux ∩ Z = 0 (truncated at degree d)",
                       meet.dim() == 0 ? Status::pass : Status::fail, data};
  }));

  report.add(timed([&] {
    // y with [y, x'] != 0; ad y is locally nilpotent on U because g is nilpotent.
    Vector y;
    for (std::size_t i = 0; i < algebra->dim(); ++i) {
      if (!is_zero(algebra->bracket(algebra->basis_vector(i), parts.lie_part))) {
        y = algebra->basis_vector(i);
        break;
      }
    }
    auto vanishing_order = [&](const UeaElement& u) {
      unsigned i = 0;
      while (!ad_derivation_power(y, u, i + 1).is_zero()) ++i;
      return i;
    };
    const FiltrationBasis basis(algebra, d == 0 ? 0 : d - 1);
    std::vector<UeaElement> samples;
    UeaElement sum = UeaElement::zero(algebra);
    for (std::size_t k = 0; k < basis.dim(); ++k) {
      samples.push_back(basis.element(k));
      sum += basis.element(k) * Scalar::from_int(algebra->field(), static_cast<long long>(k + 1));
    }
    samples.push_back(sum);
    const unsigned j = vanishing_order(x);
    std::size_t verified = 0;
    json failures = json::array();
    for (const auto& u : samples) {
      const unsigned i = vanishing_order(u);
      const UeaElement lhs = ad_derivation_power(y, u * x, i + j);
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), i + j, i);
      const Scalar c = Scalar::from_rational(algebra->field(), mpq_class(binom));
      const UeaElement rhs = c * (ad_derivation_power(y, u, i) * ad_derivation_power(y, x, j));
      if (lhs == rhs && !lhs.is_zero()) {
        ++verified;
      } else {
        failures.push_back(describe(u));
      }
    }
    return CheckRecord{"env.nilpotent.derivation_identity",
                       "(ad y)^{i+j}(ux) = C(i+j,i) (ad y)^i(u) (ad y)^j(x) != 0",
                       failures.empty() ? Status::pass : Status::fail,
                       json{{"y", to_json(y)}, {"j", j}, {"samples", samples.size()}, {"verified", verified},
                            {"failures", failures}}};
  }));
  return report;
}

CertificateReport faithfulness_certificate_env(const std::shared_ptr<const LieAlgebra>& algebra,
                                               const UeaElement& x, std::uint32_t d, unsigned shifts) {
  CertificateReport report;
  const std::string anchor = "U/Ux is faithful for x in the open set X of U_1";
  auto precondition = [&](const std::string& why) {
    report.add(CheckRecord{"env.faithful", anchor, Status::precondition_error, json{{"reason", why}}});
    return report;
  };
  if (is_abelian(*algebra)) return precondition("g is abelian");
  LinearGenerator parts;
  try {
    parts = split_linear(x);
  } catch (const PreconditionError& e) {
    return precondition(e.what());
  }

  if (!is_ad_nilpotent(*algebra, parts.lie_part)) {
    std::optional<Eigenpair> pair;
    try {
      pair = find_rational_eigenpair(*algebra, parts.lie_part);
    } catch (const std::exception& e) {
      return precondition(e.what());
    }
    if (!pair) {
      return precondition("ad x' has no nonzero eigenvalue in the base field; supply a configuration with rational data");
    }
    // Rescale so that [x', y] = y; U x is unchanged.
    const Scalar inv = pair->eigenvalue.inverse();
    const UeaElement xs = x * inv;
    const UeaElement y = UeaElement::from_lie(algebra, pair->eigenvector);
    report.add(CheckRecord{"env.eigenpair", "[x', y] = lambda y with lambda != 0", Status::pass,
                           json{{"lambda", to_json(pair->eigenvalue)}, {"y", to_json(pair->eigenvector)},
                                {"normalized_x", xs.to_string()}}});

    report.add(timed([&] {
      const unsigned top = std::min(shifts, 6U);
      std::vector<unsigned> failed;
      for (unsigned n = 0; n <= top; ++n) {
        if (!verify_weight_identity(xs, y, n)) failed.push_back(n);
      }
      return CheckRecord{"env.weight_identity", "(x-n) y^n = y^n x", failed.empty() ? Status::pass : Status::fail,
                         json{{"n_max", top}, {"failed", failed}}};
    }));

    report.add(timed([&] {
      const unsigned top = std::min(shifts, 3U);
      json rows = json::array();
      bool ok = true;
      for (unsigned n = 0; n <= top; ++n) {
        const Subspace ann = truncated_annihilator_mod(xs, y.pow(n), d);
        const UeaElement shifted = xs - UeaElement::scalar(algebra, Scalar::from_int(algebra->field(), n));
        const Subspace expected = left_ideal_truncation(shifted, d);
        ok = ok && ann == expected;
        rows.push_back(json{{"n", n}, {"annihilator_dim", ann.dim()}, {"ideal_dim", expected.dim()},
                            {"equal", ann == expected}});
      }
      return CheckRecord{"env.annihilator_of_power", "ann_U(ybar^n) = U(x-n)", ok ? Status::pass : Status::fail,
                         json{{"degree", d}, {"rows", rows}}};
    }));

    report.add(timed([&] {
      const Subspace meet = intersect_shifted_ideals(xs, shifts, d);
      return CheckRecord{"env.shifted_ideal_intersection", "∩_n U(x-n) = 0",
                         meet.dim() == 0 ? Status::pass : Status::inconclusive,
                         json{{"degree", d}, {"shifts", shifts}, {"intersection_dim", meet.dim()}}};
    }));

    report.add(timed([&] {
      std::vector<UeaElement> powers;
      UeaElement power = UeaElement::one(algebra);
      for (unsigned n = 0; n <= shifts; ++n) {
        powers.push_back(power);
        power = power * y;
      }
      std::size_t used = 0;
      const Subspace t = annihilator_of_family(xs, powers, d, &used);
      json data{{"degree", d}, {"shifts", shifts}, {"powers_used", used}, {"dim", t.dim()}};
      if (t.dim() > 0) data["witness"] = vector_json(FiltrationBasis(algebra, d), t.basis().row(0));
      return CheckRecord{"env.faithful", anchor, t.dim() == 0 ? Status::pass : Status::inconclusive, data};
    }));
    return report;
  }

  if (is_nilpotent(*algebra) && !center(*algebra).contains(parts.lie_part)) {
    report.append(verify_nilpotent_faithful(algebra, x, d));
    const bool ok = report.verdict() == Status::pass;
    report.add(CheckRecord{"env.faithful", anchor, ok ? Status::pass : Status::fail,
                           json{{"branch", "nilpotent"}, {"degree", d}}});
    return report;
  }

  report.add(CheckRecord{"env.faithful", anchor, Status::inconclusive,
                         json{{"reason", "outside X, no certificate"}, {"x", x.to_string()}}});
  return report;
}

Subspace certified_annihilators(const UeaElement& x, std::uint32_t d) {
  return subspace_intersect(left_ideal_truncation(x, d), center_truncated(x.algebra(), d));
}

CheckRecord direct_annihilator_record(const UeaElement& x, std::uint32_t d) {
  return timed([&] {
    const FiltrationBasis basis(x.algebra(), d);
    const Subspace ann = truncated_module_annihilator(x, d, d);
    json data{{"degree", d}, {"test_degree", d}, {"dim", ann.dim()}};
    Status status = Status::pass;
    if (ann.dim() > 0) {
      const Subspace certified = subspace_intersect(ann, certified_annihilators(x, d));
      status = certified.dim() > 0 ? Status::fail : Status::inconclusive;
      data["witness"] = vector_json(basis, (certified.dim() > 0 ? certified : ann).basis().row(0));
      data["x_annihilates"] = ann.contains(basis.element_to_vector(x)) && certified.contains(basis.element_to_vector(x));
    }
    return CheckRecord{"env.direct_annihilator", "{u in U_d : u U_d ⊆ Ux} = 0", status, data};
  });
}

CertificateReport env_suite(const std::shared_ptr<const LieAlgebra>& algebra, const UeaElement& x, std::uint32_t d,
                            unsigned shifts) {
  CertificateReport report;
  const bool jacobi = check_lie_axioms(*algebra);
  report.add(CheckRecord{"env.lie_axioms", "antisymmetry and Jacobi identity", jacobi ? Status::pass : Status::fail,
                         json{{"dim", algebra->dim()}}});
  if (!jacobi) return report;
  report.append(faithfulness_certificate_env(algebra, x, d, shifts));
  try {
    split_linear(x);
  } catch (const PreconditionError&) {
    return report;
  }
  report.add(direct_annihilator_record(x, d));
  return report;
}

}  // namespace faithcert::lie

#include <doctest.h>

#include "faithcert/errors.hpp"
#include "faithcert/lie/certificates.hpp"

using namespace faithcert;
using namespace faithcert::lie;

namespace {

std::shared_ptr<const LieAlgebra> builtin(std::string_view name, Field f = Field::rationals()) {
  return std::make_shared<const LieAlgebra>(LieAlgebra::builtin(name, f));
}

Scalar num(long long v, Field f = Field::rationals()) { return Scalar::from_int(f, v); }

// Oracle for sl2 straightening: brute-force multiplication on words, then
// reordering using [h,e]=2e, [h,f]=-2f, [e,f]=h by repeated adjacent swaps.
using Word = std::vector<int>;
std::map<Word, mpq_class> straighten(std::map<Word, mpq_class> input) {
  std::map<Word, mpq_class> out;
  while (!input.empty()) {
    auto [w, c] = *input.begin();
    input.erase(input.begin());
    if (c == 0) continue;
    std::size_t i = 0;
    while (i + 1 < w.size() && w[i] <= w[i + 1]) ++i;
    if (i + 1 >= w.size()) {
      out[w] += c;
      continue;
    }
    Word swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    input[swapped] += c;
    // w[i] > w[i+1]: x_a x_b = x_b x_a + [x_a, x_b]
    const int a = w[i], b = w[i + 1];
    Word shorter(w.begin(), w.begin() + i);
    Word tail(w.begin() + i + 2, w.end());
    auto emit = [&](int gen, mpq_class coeff) {
      Word n = shorter;
      n.push_back(gen);
      n.insert(n.end(), tail.begin(), tail.end());
      input[n] += c * coeff;
    };
    // basis order h=0, e=1, f=2; a > b.
    if (a == 1 && b == 0) emit(1, -2);  // [e,h] = -2e
    if (a == 2 && b == 0) emit(2, 2);   // [f,h] = 2f
    if (a == 2 && b == 1) emit(0, -1);  // [f,e] = -h
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

UeaElement from_words(const std::shared_ptr<const LieAlgebra>& g, const std::map<Word, mpq_class>& words) {
  UeaElement u = UeaElement::zero(g);
  for (const auto& [w, c] : words) {
    PbwMonomial m{std::vector<std::uint32_t>(3, 0)};
    for (int letter : w) ++m.exponents[letter];
    u.add_term(m, Scalar::from_rational(g->field(), c));
  }
  return u;
}

}  // namespace

TEST_CASE("builtin algebras satisfy the Lie axioms") {
  for (const auto& name : LieAlgebra::builtin_names()) {
    CAPTURE(name);
    CHECK(check_lie_axioms(*builtin(name)));
    CHECK(check_lie_axioms(*builtin(name, Field::prime(5))));
  }
  CHECK(is_abelian(*builtin("abelian2")));
  CHECK(is_nilpotent(*builtin("heisenberg")));
  CHECK_FALSE(is_nilpotent(*builtin("nonabelian2")));
  CHECK_FALSE(is_nilpotent(*builtin("sl2")));
  CHECK(center(*builtin("heisenberg")).dim() == 1);
  CHECK(center(*builtin("sl2")).dim() == 0);
}

TEST_CASE("from_brackets rejects inconsistent or non-Jacobi data") {
  const Field q = Field::rationals();
  CHECK_THROWS(LieAlgebra::from_brackets(q, 2, {{0, 1, 1, num(1)}, {1, 0, 1, num(1)}}));
  // [x,y]=z, [x,z]=x: the Jacobi sum on (x,y,z) is z.
  const auto g = LieAlgebra::from_brackets(q, 3, {{0, 1, 2, num(1)}, {0, 2, 0, num(1)}});
  CHECK_FALSE(check_lie_axioms(g));
}

TEST_CASE("PBW multiplication matches word-straightening oracle on sl2") {
  const auto g = builtin("sl2");
  const std::vector<Word> words = {{2, 1}, {2, 2, 1, 0}, {1, 0, 2}, {2, 1, 1, 0, 2}, {0, 2, 1, 2, 1}};
  for (const auto& w : words) {
    UeaElement product = UeaElement::one(g);
    for (int letter : w) product = product * UeaElement::generator(g, letter);
    CHECK(product == from_words(g, straighten({{w, 1}})));
  }
}

TEST_CASE("UEA multiplication is associative and respects brackets") {
  const auto g = builtin("sl2");
  const auto h = UeaElement::generator(g, 0), e = UeaElement::generator(g, 1), f = UeaElement::generator(g, 2);
  CHECK(e * f - f * e == h);
  CHECK(h * e - e * h == e * num(2));
  const UeaElement a = e * f + h * h, b = f * f - e, c = h * e * f;
  CHECK((a * b) * c == a * (b * c));
  // Casimir is central.
  const UeaElement casimir = h * h + e * f * num(2) + f * e * num(2);
  for (const auto& x : {h, e, f}) CHECK(casimir * x == x * casimir);
}

TEST_CASE("filtration basis coordinates") {
  const auto g = builtin("sl2");
  CHECK(filtration_dim(3, 4) == 35);
  const FiltrationBasis basis(g, 3);
  CHECK(basis.dim() == 20);
  CHECK(basis.offset(2) == 4);
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    const Vector v = basis.element_to_vector(basis.element(i));
    CHECK(v == unit_vector(g->field(), basis.dim(), i));
  }
  CHECK_THROWS_AS(basis.element_to_vector(UeaElement::generator(g, 0).pow(4)), std::out_of_range);
}

TEST_CASE("rational eigenpairs") {
  const auto g = builtin("sl2");
  const auto pair = find_rational_eigenpair(*g, g->basis_vector(0));
  REQUIRE(pair);
  CHECK(pair->eigenvalue == num(2));
  CHECK(g->bracket(g->basis_vector(0), pair->eigenvector) ==
        std::vector<Scalar>{pair->eigenvector[0] * num(2), pair->eigenvector[1] * num(2),
                            pair->eigenvector[2] * num(2)});
  CHECK_THROWS_AS(find_rational_eigenpair(*g, g->basis_vector(1)), PreconditionError);
  // h + e has eigenvalues 0, ±2 as well.
  Vector he = g->basis_vector(0);
  he[1] = num(1);
  CHECK(find_rational_eigenpair(*g, he));
}

TEST_CASE("characteristic polynomial") {
  const auto g = builtin("sl2");
  const auto poly = characteristic_polynomial(ad_matrix(*g, g->basis_vector(0)));
  // t^3 - 4t, stored from the constant term upward.
  CHECK(poly == std::vector<Scalar>{num(0), num(-4), num(0), num(1)});
}

TEST_CASE("weight identity and shifted ideals on sl2") {
  const auto g = builtin("sl2");
  const UeaElement x = UeaElement::generator(g, 0) * Scalar::parse(g->field(), "1/2");
  const UeaElement y = UeaElement::generator(g, 1);
  for (unsigned n = 0; n <= 6; ++n) CHECK(verify_weight_identity(x, y, n));
  CHECK_FALSE(verify_weight_identity(x, y * num(1) + UeaElement::generator(g, 2), 1));
  for (std::uint32_t d = 1; d <= 3; ++d) {
    const Subspace ideal = left_ideal_truncation(x, d);
    CHECK(ideal.dim() == filtration_dim(3, d - 1));
    CHECK(intersect_shifted_ideals(x, d + 1, d).dim() == 0);
  }
  CHECK_THROWS_AS(left_ideal_truncation(UeaElement::one(g), 2), PreconditionError);
}

TEST_CASE("annihilator of ybar^n is U(x-n)") {
  const auto g = builtin("nonabelian2");
  const UeaElement x = UeaElement::generator(g, 0);
  const UeaElement y = UeaElement::generator(g, 1);
  for (unsigned n = 0; n <= 3; ++n) {
    const UeaElement shifted = x - UeaElement::scalar(g, num(n));
    CHECK(truncated_annihilator_mod(x, y.pow(n), 3) == left_ideal_truncation(shifted, 3));
  }
}

TEST_CASE("center of U(heisenberg) truncated") {
  const auto g = builtin("heisenberg");
  // Z(U) = k[z], so dim Z ∩ U_d = d + 1.
  for (std::uint32_t d = 0; d <= 3; ++d) CHECK(center_truncated(g, d).dim() == d + 1);
}

TEST_CASE("env certificates") {
  SUBCASE("sl2 with x = h passes") {
    const auto g = builtin("sl2");
    const auto report = faithfulness_certificate_env(g, UeaElement::generator(g, 0), 3, 4);
    CHECK(report.verdict() == Status::pass);
    CHECK(report.find("env.eigenpair") != nullptr);
  }
  SUBCASE("nonabelian2 with x = x0 + 1/3 passes") {
    const auto g = builtin("nonabelian2");
    const UeaElement x = UeaElement::generator(g, 0) + UeaElement::scalar(g, Scalar::parse(g->field(), "1/3"));
    CHECK(faithfulness_certificate_env(g, x, 3, 4).verdict() == Status::pass);
  }
  SUBCASE("heisenberg uses the nilpotent branch") {
    const auto g = builtin("heisenberg");
    const auto report = faithfulness_certificate_env(g, UeaElement::generator(g, 0), 3, 4);
    CHECK(report.verdict() == Status::pass);
    CHECK(report.find("env.nilpotent.center_intersection") != nullptr);
  }
  SUBCASE("heisenberg with central x") {
    const auto g = builtin("heisenberg");
    CHECK(verify_nilpotent_faithful(g, UeaElement::generator(g, 2), 2).verdict() == Status::precondition_error);
    CHECK(faithfulness_certificate_env(g, UeaElement::generator(g, 2), 2, 2).verdict() == Status::inconclusive);
  }
  SUBCASE("nonabelian2 with ad-nilpotent x is outside X") {
    const auto g = builtin("nonabelian2");
    const auto report = faithfulness_certificate_env(g, UeaElement::generator(g, 1), 2, 2);
    CHECK(report.verdict() == Status::inconclusive);
    CHECK(report.find("env.faithful")->data["reason"] == "outside X, no certificate");
  }
  SUBCASE("abelian2 is a precondition error and x annihilates") {
    const auto g = builtin("abelian2");
    const UeaElement x = UeaElement::generator(g, 0);
    CHECK(faithfulness_certificate_env(g, x, 2, 2).verdict() == Status::precondition_error);
    const Subspace ann = truncated_module_annihilator(x, 2, 2);
    CHECK(ann.contains(FiltrationBasis(g, 2).element_to_vector(x)));
  }
  SUBCASE("sl2 direct annihilator vanishes") {
    const auto g = builtin("sl2");
    CHECK(truncated_module_annihilator(UeaElement::generator(g, 0), 2, 2).dim() == 0);
  }
  SUBCASE("prime backend") {
    const auto g = builtin("sl2", Field::prime(101));
    CHECK(faithfulness_certificate_env(g, UeaElement::generator(g, 0), 2, 3).verdict() == Status::pass);
  }
}

TEST_CASE("env suite verdicts") {
  const auto na = builtin("nonabelian2");
  CHECK(env_suite(na, UeaElement::generator(na, 0), 4, 5).verdict() == Status::pass);
  const auto ab = builtin("abelian2");
  const auto report = env_suite(ab, UeaElement::generator(ab, 0), 3, 4);
  CHECK(report.verdict() == Status::fail);
  const auto* direct = report.find("env.direct_annihilator");
  REQUIRE(direct != nullptr);
  CHECK(direct->status == Status::fail);
  CHECK(direct->data["x_annihilates"] == true);
  const auto h = builtin("heisenberg");
  CHECK(env_suite(h, UeaElement::generator(h, 1), 3, 3).verdict() == Status::pass);
}

#include "faithcert/lie/uea.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "faithcert/errors.hpp"

namespace faithcert::lie {

std::uint32_t PbwMonomial::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), std::uint32_t{0});
}

namespace {

class Straightener {
 public:
  explicit Straightener(const LieAlgebra& algebra) : algebra_(algebra) {}

  using Terms = std::map<PbwMonomial, Scalar>;

  // Normal form of (monomial) * x_k.
  const Terms& times_generator(const PbwMonomial& a, std::size_t k) {
    const auto key = std::make_pair(a, k);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;

    std::size_t last = algebra_.dim();
    for (std::size_t i = algebra_.dim(); i-- > 0;) {
      if (a.exponents[i] > 0) {
        last = i;
        break;
      }
    }
    Terms out;
    if (last == algebra_.dim() || last <= k) {
      PbwMonomial b = a;
      ++b.exponents[k];
      out.emplace(std::move(b), Scalar::one(algebra_.field()));
    } else {
      // a = a' x_j with j > k:  a' x_j x_k = (a' x_k) x_j + a' [x_j, x_k].
      PbwMonomial shorter = a;
      --shorter.exponents[last];
      const Terms moved = times_generator(shorter, k);
      for (const auto& [m, c] : moved) accumulate(out, times_generator(m, last), c);
      for (std::size_t l = 0; l < algebra_.dim(); ++l) {
        const Scalar& c = algebra_.constant(last, k, l);
        if (!c.is_zero()) accumulate(out, times_generator(shorter, l), c);
      }
    }
    return cache_.emplace(key, std::move(out)).first->second;
  }

  Terms times_monomial(const PbwMonomial& a, const PbwMonomial& b) {
    Terms current{{a, Scalar::one(algebra_.field())}};
    for (std::size_t k = 0; k < algebra_.dim(); ++k) {
      for (std::uint32_t e = 0; e < b.exponents[k]; ++e) {
        Terms next;
        for (const auto& [m, c] : current) accumulate(next, times_generator(m, k), c);
        current = std::move(next);
      }
    }
    return current;
  }

  static void accumulate(Terms& into, const Terms& from, const Scalar& scale) {
    for (const auto& [m, c] : from) {
      auto [it, inserted] = into.try_emplace(m, c * scale);
      if (!inserted) {
        it->second += c * scale;
        if (it->second.is_zero()) into.erase(it);
      }
    }
  }

 private:
  const LieAlgebra& algebra_;
  std::map<std::pair<PbwMonomial, std::size_t>, Terms> cache_;
};

PbwMonomial empty_monomial(std::size_t dim) { return PbwMonomial{std::vector<std::uint32_t>(dim, 0)}; }

void enumerate_degree(std::size_t dim, std::uint32_t remaining, std::size_t pos, std::vector<std::uint32_t>& current,
                      std::vector<PbwMonomial>& out) {
  if (pos + 1 == dim) {
    current[pos] = remaining;
    out.push_back(PbwMonomial{current});
    return;
  }
  for (std::uint32_t e = remaining + 1; e-- > 0;) {
    current[pos] = e;
    enumerate_degree(dim, remaining - e, pos + 1, current, out);
  }
  current[pos] = 0;
}

}  // namespace

UeaElement::UeaElement(std::shared_ptr<const LieAlgebra> algebra) : algebra_(std::move(algebra)) {
  if (!algebra_) throw std::invalid_argument("UeaElement needs a Lie algebra");
}

UeaElement UeaElement::scalar(std::shared_ptr<const LieAlgebra> algebra, const Scalar& value) {
  UeaElement u(std::move(algebra));
  u.add_term(empty_monomial(u.algebra_->dim()), value);
  return u;
}

UeaElement UeaElement::one(std::shared_ptr<const LieAlgebra> algebra) {
  const Field f = algebra->field();
  return scalar(std::move(algebra), Scalar::one(f));
}

UeaElement UeaElement::generator(std::shared_ptr<const LieAlgebra> algebra, std::size_t i) {
  return from_lie(algebra, algebra->basis_vector(i));
}

UeaElement UeaElement::from_lie(std::shared_ptr<const LieAlgebra> algebra, const Vector& x) {
  UeaElement u(std::move(algebra));
  if (x.size() != u.algebra_->dim()) throw DimensionMismatch("vector is not an element of g");
  for (std::size_t i = 0; i < x.size(); ++i) {
    PbwMonomial m = empty_monomial(x.size());
    m.exponents[i] = 1;
    u.add_term(m, x[i]);
  }
  return u;
}

UeaElement UeaElement::monomial(std::shared_ptr<const LieAlgebra> algebra, PbwMonomial m, const Scalar& coeff) {
  UeaElement u(std::move(algebra));
  if (m.exponents.size() != u.algebra_->dim()) throw DimensionMismatch("monomial length does not match g");
  u.add_term(m, coeff);
  return u;
}

std::optional<std::uint32_t> UeaElement::degree() const {
  if (terms_.empty()) return std::nullopt;
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Scalar UeaElement::coefficient(const PbwMonomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field()) : it->second;
}

Scalar UeaElement::constant_term() const { return coefficient(empty_monomial(algebra_->dim())); }

Vector UeaElement::linear_part() const {
  Vector v = algebra_->zero();
  for (const auto& [m, c] : terms_) {
    if (m.degree() != 1) continue;
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
      if (m.exponents[i] == 1) v[i] = c;
    }
  }
  return v;
}

UeaElement UeaElement::homogeneous_part(std::uint32_t degree) const {
  UeaElement out(algebra_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() == degree) out.terms_.emplace(m, c);
  }
  return out;
}

void UeaElement::add_term(const PbwMonomial& m, const Scalar& coeff) {
  if (coeff.field() != field()) throw BackendMismatch("coefficient backend differs from the Lie algebra");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void UeaElement::require_same(const UeaElement& other) const {
  if (algebra_ != other.algebra_) {
    throw std::invalid_argument("enveloping algebra elements belong to different Lie algebras");
  }
}

UeaElement& UeaElement::operator+=(const UeaElement& rhs) {
  require_same(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

UeaElement& UeaElement::operator-=(const UeaElement& rhs) {
  require_same(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

UeaElement& UeaElement::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

UeaElement UeaElement::operator-() const {
  UeaElement out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

UeaElement operator*(const UeaElement& a, const UeaElement& b) { return uea_multiply(a, b); }

bool operator==(const UeaElement& a, const UeaElement& b) { return a.terms_ == b.terms_; }

UeaElement UeaElement::pow(unsigned exponent) const {
  UeaElement result = one(algebra_);
  for (unsigned i = 0; i < exponent; ++i) result = uea_multiply(result, *this);
  return result;
}

std::string UeaElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) out << " + ";
    first = false;
    out << "(" << it->second.to_string() << ")";
    for (std::size_t i = 0; i < it->first.exponents.size(); ++i) {
      const auto e = it->first.exponents[i];
      if (e == 0) continue;
      out << "*" << algebra_->labels()[i];
      if (e > 1) out << "^" << e;
    }
  }
  return out.str();
}

UeaElement uea_multiply(const UeaElement& a, const UeaElement& b) {
  if (a.algebra() != b.algebra()) {
    throw std::invalid_argument("uea_multiply: operands belong to different Lie algebras");
  }
  UeaElement out(a.algebra());
  Straightener straightener(*a.algebra());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const Scalar scale = ca * cb;
      for (const auto& [m, c] : straightener.times_monomial(ma, mb)) out.add_term(m, c * scale);
    }
  }
  return out;
}

std::size_t filtration_dim(std::size_t lie_dim, std::uint32_t degree) {
  // C(m + d, d) computed incrementally; exact at every step.
  std::size_t result = 1;
  for (std::uint32_t i = 1; i <= degree; ++i) result = result * (lie_dim + i) / i;
  return result;
}

FiltrationBasis::FiltrationBasis(std::shared_ptr<const LieAlgebra> algebra, std::uint32_t degree)
    : algebra_(std::move(algebra)), degree_(degree) {
  const std::size_t m = algebra_->dim();
  std::vector<std::uint32_t> current(m, 0);
  for (std::uint32_t t = 0; t <= degree; ++t) {
    if (m == 0) {
      if (t == 0) monomials_.push_back(PbwMonomial{});
      continue;
    }
    enumerate_degree(m, t, 0, current, monomials_);
  }
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::size_t FiltrationBasis::offset(std::uint32_t degree) const {
  return degree == 0 ? 0 : filtration_dim(algebra_->dim(), degree - 1);
}

Vector FiltrationBasis::element_to_vector(const UeaElement& u) const {
  Vector v = zero_vector(algebra_->field(), monomials_.size());
  for (const auto& [m, c] : u.terms()) {
    const auto it = index_.find(m);
    if (it == index_.end()) {
      throw std::out_of_range("element of degree " + std::to_string(m.degree()) + " outside U_" +
                              std::to_string(degree_));
    }
    v[it->second] = c;
  }
  return v;
}

UeaElement FiltrationBasis::vector_to_element(std::span<const Scalar> v) const {
  if (v.size() != monomials_.size()) throw DimensionMismatch("coordinate vector does not match dim U_d");
  UeaElement u(algebra_);
  for (std::size_t i = 0; i < v.size(); ++i) u.add_term(monomials_[i], v[i]);
  return u;
}

UeaElement FiltrationBasis::element(std::size_t index) const {
  return UeaElement::monomial(algebra_, monomials_.at(index), Scalar::one(algebra_->field()));
}

}  // namespace faithcert::lie

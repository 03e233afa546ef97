#include "faithcert/linalg/scalar.hpp"

#include <stdexcept>

#include "faithcert/errors.hpp"

namespace faithcert {

namespace {

using u128 = unsigned __int128;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    if (n % d == 0) return n == d;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % n);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e != 0) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a % n, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t reduce_mpz(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // p is prime: a^(p-2).
  std::uint64_t r = 1, e = p - 2;
  while (e != 0) {
    if (e & 1) r = static_cast<std::uint64_t>(static_cast<u128>(r) * a % p);
    a = static_cast<std::uint64_t>(static_cast<u128>(a) * a % p);
    e >>= 1;
  }
  return r;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 62) || !is_prime(p)) {
    throw std::invalid_argument("not a supported prime modulus: " + std::to_string(p));
  }
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "rational") return rationals();
  constexpr std::string_view prefix = "prime:";
  if (text.substr(0, prefix.size()) == prefix) {
    const std::string digits(text.substr(prefix.size()));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("malformed backend '" + std::string(text) + "'");
    }
    return prime(std::stoull(digits));
  }
  throw std::invalid_argument("unknown backend '" + std::string(text) + "' (expected rational or prime:<p>)");
}

std::string Field::name() const {
  return is_rational() ? std::string("rational") : "prime:" + std::to_string(modulus_);
}

Scalar::Scalar(Field field) : modulus_(field.modulus()) {}

Scalar Scalar::from_int(Field field, long long value) {
  Scalar s(field);
  if (field.is_rational()) {
    s.q_ = mpq_class(static_cast<long>(value));
  } else {
    const auto p = static_cast<long long>(field.modulus());
    long long r = value % p;
    if (r < 0) r += p;
    s.r_ = static_cast<std::uint64_t>(r);
  }
  return s;
}

Scalar Scalar::from_rational(Field field, const mpq_class& value) {
  Scalar s(field);
  if (field.is_rational()) {
    s.q_ = value;
    s.q_.canonicalize();
    return s;
  }
  const std::uint64_t p = field.modulus();
  const std::uint64_t den = reduce_mpz(value.get_den(), p);
  if (den == 0) {
    throw PreconditionError("denominator of " + value.get_str() + " vanishes modulo " + std::to_string(p));
  }
  const std::uint64_t num = reduce_mpz(value.get_num(), p);
  s.r_ = static_cast<std::uint64_t>(static_cast<u128>(num) * inverse_mod(den, p) % p);
  return s;
}

Scalar Scalar::parse(Field field, std::string_view text) {
  mpq_class q;
  const std::string str(text);
  const auto slash = str.find('/');
  const std::string num = str.substr(0, slash);
  const std::string den = slash == std::string::npos ? std::string("1") : str.substr(slash + 1);
  auto valid = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    return i < s.size() && s.find_first_not_of("0123456789", i) == std::string::npos;
  };
  if (!valid(num, true) || !valid(den, false)) {
    throw std::invalid_argument("malformed rational '" + str + "'");
  }
  mpz_class n(num[0] == '+' ? num.substr(1) : num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + str + "'");
  q = mpq_class(n, d);
  q.canonicalize();
  return from_rational(field, q);
}

bool Scalar::is_zero() const { return modulus_ == 0 ? sgn(q_) == 0 : r_ == 0; }

bool Scalar::is_one() const { return modulus_ == 0 ? q_ == 1 : r_ == 1; }

int Scalar::sign() const {
  if (modulus_ == 0) return sgn(q_);
  return r_ == 0 ? 0 : 1;
}

const mpq_class& Scalar::rational() const {
  if (modulus_ != 0) throw std::logic_error("rational() called on a prime-field scalar");
  return q_;
}

std::uint64_t Scalar::residue() const {
  if (modulus_ == 0) throw std::logic_error("residue() called on a rational scalar");
  return r_;
}

void Scalar::require_same(const Scalar& other) const {
  if (modulus_ != other.modulus_) {
    throw BackendMismatch("scalar backends differ: " + field().name() + " vs " + other.field().name());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar s(field());
  if (modulus_ == 0) {
    s.q_ = 1 / q_;
  } else {
    s.r_ = inverse_mod(r_, modulus_);
  }
  return s;
}

Scalar Scalar::pow(unsigned long exponent) const {
  Scalar result = one(field());
  Scalar base = *this;
  while (exponent != 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same(rhs);
  if (modulus_ == 0) {
    q_ += rhs.q_;
  } else {
    r_ += rhs.r_;
    if (r_ >= modulus_) r_ -= modulus_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same(rhs);
  if (modulus_ == 0) {
    q_ -= rhs.q_;
  } else {
    r_ = r_ >= rhs.r_ ? r_ - rhs.r_ : r_ + modulus_ - rhs.r_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same(rhs);
  if (modulus_ == 0) {
    q_ *= rhs.q_;
  } else {
    r_ = static_cast<std::uint64_t>(static_cast<u128>(r_) * rhs.r_ % modulus_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same(rhs);
  return *this *= rhs.inverse();
}

Scalar Scalar::operator-() const {
  Scalar s(field());
  if (modulus_ == 0) {
    s.q_ = -q_;
  } else {
    s.r_ = r_ == 0 ? 0 : modulus_ - r_;
  }
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.modulus_ != b.modulus_) return false;
  return a.modulus_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.modulus_ != b.modulus_) return a.modulus_ <=> b.modulus_;
  if (a.modulus_ != 0) return a.r_ <=> b.r_;
  const int c = cmp(a.q_, b.q_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string Scalar::to_string() const {
  if (modulus_ != 0) return std::to_string(r_);
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

}  // namespace faithcert

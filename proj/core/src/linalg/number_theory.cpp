#include "faithcert/linalg/number_theory.hpp"

#include <set>

#include "faithcert/errors.hpp"

namespace faithcert {

namespace {

Scalar eval(const std::vector<Scalar>& coeffs, const Scalar& t) {
  Scalar acc = Scalar::zero(t.field());
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * t + coeffs[i];
  return acc;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  for (; e > 0; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0 || p == 2) return a;
  if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;
  // Tonelli-Shanks.
  std::uint64_t q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::uint64_t z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0, t2 = t;
    while (t2 != 1) {
      t2 = mulmod(t2, t2, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

}  // namespace

std::vector<mpz_class> integer_divisors(const mpz_class& value) {
  mpz_class n = abs(value);
  if (n == 0) throw std::invalid_argument("divisors of zero");
  std::vector<std::pair<mpz_class, unsigned>> factors;
  for (unsigned long d = 2; d <= 1000000 && d * d <= n; ++d) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), d) != 0) {
      n /= d;
      ++e;
    }
    if (e > 0) factors.emplace_back(mpz_class(d), e);
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) {
      throw DegenerateConfiguration("integer too large to factor for a rational root search");
    }
    factors.emplace_back(n, 1);
  }
  std::vector<mpz_class> out{1};
  for (const auto& [prime, exp] : factors) {
    const std::size_t base = out.size();
    mpz_class power = 1;
    for (unsigned e = 1; e <= exp; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  return out;
}

std::optional<Scalar> square_root(const Scalar& s) {
  if (s.is_rational()) {
    const mpq_class& q = s.rational();
    if (q < 0) return std::nullopt;
    if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 || mpz_perfect_square_p(q.get_den_mpz_t()) == 0) {
      return std::nullopt;
    }
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
    return Scalar::from_rational(s.field(), mpq_class(num, den));
  }
  const auto r = sqrt_mod(s.residue(), s.field().modulus());
  if (!r) return std::nullopt;
  return Scalar::from_int(s.field(), static_cast<long long>(*r));
}

std::vector<Scalar> polynomial_roots(const std::vector<Scalar>& coeffs) {
  if (coeffs.empty() || coeffs.back().is_zero()) throw std::invalid_argument("polynomial_roots needs a nonzero leading coefficient");
  const Field field = coeffs.back().field();
  std::vector<Scalar> roots;
  std::size_t low = 0;
  while (coeffs[low].is_zero()) ++low;
  if (low > 0) roots.push_back(Scalar::zero(field));
  if (low + 1 == coeffs.size()) return roots;

  if (!field.is_rational()) {
    const std::uint64_t p = field.modulus();
    if (p >= (1ULL << 20)) throw DegenerateConfiguration("root search over a large prime field is not supported");
    for (std::uint64_t a = 1; a < p; ++a) {
      const Scalar t = Scalar::from_int(field, static_cast<long long>(a));
      if (eval(coeffs, t).is_zero()) roots.push_back(t);
    }
    return roots;
  }

  mpz_class lcm = 1;
  for (const auto& c : coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational().get_den().get_mpz_t());
  const mpz_class trailing = mpz_class(coeffs[low].rational() * lcm);
  const mpz_class leading = mpz_class(coeffs.back().rational() * lcm);
  std::set<mpq_class> candidates;
  for (const auto& r : integer_divisors(trailing)) {
    for (const auto& s : integer_divisors(leading)) {
      mpq_class q(r, s);
      q.canonicalize();
      candidates.insert(q);
    }
  }
  for (const auto& q : candidates) {
    for (const mpq_class& v : {q, mpq_class(-q)}) {
      const Scalar t = Scalar::from_rational(field, v);
      if (eval(coeffs, t).is_zero()) roots.push_back(t);
    }
  }
  return roots;
}

}  // namespace faithcert

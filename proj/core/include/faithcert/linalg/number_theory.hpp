#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "faithcert/linalg/scalar.hpp"

namespace faithcert {

/// Positive divisors of |n| (n != 0), by trial division up to 10^6 with a
/// probable-prime cofactor. Throws DegenerateConfiguration otherwise.
std::vector<mpz_class> integer_divisors(const mpz_class& n);

/// A square root of s in its field, if one exists.
std::optional<Scalar> square_root(const Scalar& s);

/// Roots in the base field of c[0] + c[1] t + ... + c[k] t^k (c[k] != 0),
/// each listed once. Rational search uses the rational root theorem;
/// prime fields with p < 2^20 are searched exhaustively.
std::vector<Scalar> polynomial_roots(const std::vector<Scalar>& coeffs);

}  // namespace faithcert

#pragma once

#include <map>
#include <string>
#include <vector>

#include "faithcert/ecurve/hesse.hpp"

namespace faithcert::ecurve {

/// Finite formal sum of points.
class Divisor {
 public:
  Divisor() = default;

  void add(const ProjPoint& P, long long multiplicity = 1);
  long long multiplicity(const ProjPoint& P) const;
  const std::map<ProjPoint, long long>& terms() const { return terms_; }
  long long degree() const;
  bool is_effective() const;
  /// Support as a set of points, ignoring multiplicities.
  std::vector<ProjPoint> support() const;
  std::string to_string() const;

  friend Divisor operator+(Divisor a, const Divisor& b);
  friend bool operator==(const Divisor&, const Divisor&) = default;

 private:
  std::map<ProjPoint, long long> terms_;
};

/// Intersection divisor of a line with E (degree 3). Known points of E on
/// the line may be passed as hints; they are divided out of the restricted
/// cubic first, which avoids factoring large coefficients. Throws
/// DegenerateConfiguration when the remaining roots are not in the field.
Divisor divisor_of_line(const HesseCurve& E, const LineForm& L, const std::vector<ProjPoint>& hints = {});

/// Sum of the support points under the group law, with multiplicity.
ProjPoint divisor_sum(const HesseCurve& E, const Divisor& D);

/// Pushforward along sigma.
Divisor sigma_star(const HesseCurve& E, const ProjPoint& p, const Divisor& D);

}  // namespace faithcert::ecurve

#pragma once
#include <map>
#include <vector>

#include "qtgl2/laurent.hpp"

namespace qtgl2 {

/// A nonzero field element kept in factored form
///   sign * lead * prod_m (1 - m)^{e_m},   e_m in Z \ {0},
/// or the exact zero. Products and quotients are map merges, which keeps
/// chained coefficient arithmetic cheap; expansion happens only on demand.
class FactoredValue {
 public:
  FactoredValue() : zero_(false), sign_(1) {}  // one

  static FactoredValue one() { return FactoredValue(); }
  static FactoredValue zero() {
    FactoredValue v;
    v.zero_ = true;
    return v;
  }
  static FactoredValue from_monomial(const Monomial& m, int sign = 1) {
    FactoredValue v;
    v.lead_ = m;
    v.sign_ = sign;
    return v;
  }
  /// a - b with monomials a, b: equals a*(1 - b/a); zero when a == b.
  static FactoredValue difference(const Monomial& a, const Monomial& b);
  /// q - q^{-1}
  static FactoredValue q_minus_qinv();

  bool is_zero() const { return zero_; }
  bool is_one() const { return !zero_ && sign_ == 1 && lead_.is_one() && factors_.empty(); }
  bool is_minus_one() const { return !zero_ && sign_ == -1 && lead_.is_one() && factors_.empty(); }
  int sign() const { return sign_; }
  const Monomial& lead() const { return lead_; }
  const std::map<Monomial, int>& factors() const { return factors_; }

  FactoredValue operator*(const FactoredValue&) const;
  FactoredValue operator/(const FactoredValue&) const;  // throws DivisionByZero
  FactoredValue& operator*=(const FactoredValue& o) { return *this = *this * o; }
  FactoredValue negated() const;

  FieldElement to_field() const;
  /// Exact equality as field elements (via the factored ratio).
  bool equals(const FactoredValue& o) const;

  std::string str() const { return to_field().str(); }

 private:
  bool zero_;
  int sign_;
  Monomial lead_;
  std::map<Monomial, int> factors_;  // no zero exponents, no key == 1
  friend bool group_sum_is_zero(const std::vector<FactoredValue>& terms);
  friend FieldElement group_sum(const std::vector<FactoredValue>& terms);
};

/// Exact test of sum == 0 over a common factored denominator.
bool group_sum_is_zero(const std::vector<FactoredValue>& terms);
FieldElement group_sum(const std::vector<FactoredValue>& terms);

}  // namespace qtgl2

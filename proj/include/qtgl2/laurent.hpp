#pragma once
#include <gmpxx.h>

#include <map>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "qtgl2/monomial.hpp"

namespace qtgl2 {

/// Integer-coefficient Laurent polynomial over the generator lattice.
/// No zero coefficients are stored; equality is map equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(long c) {
    if (c != 0) terms_[Monomial::one()] = c;
  }
  explicit LaurentPoly(const mpz_class& c) {
    if (c != 0) terms_[Monomial::one()] = c;
  }
  static LaurentPoly monomial(const Monomial& m, const mpz_class& c = 1) {
    LaurentPoly p;
    if (c != 0) p.terms_[m] = c;
    return p;
  }
  /// a - b as a two-term polynomial.
  static LaurentPoly difference(const Monomial& a, const Monomial& b);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  size_t num_terms() const { return terms_.size(); }
  const std::map<Monomial, mpz_class>& terms() const { return terms_; }

  LaurentPoly operator+(const LaurentPoly&) const;
  LaurentPoly operator-(const LaurentPoly&) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly&) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  bool operator==(const LaurentPoly&) const = default;

  /// gcd of |coefficients|; 0 for the zero polynomial.
  mpz_class integer_content() const;
  /// componentwise minimum of exponents over the support (unit factor).
  Monomial monomial_content() const;
  void divide_integer(const mpz_class& g);
  void divide_monomial(const Monomial& m);
  /// sign of the coefficient at the largest monomial (0 if zero poly).
  int lead_sign() const;

  LaurentPoly specialized(const Substitution& s) const;

  std::string str() const;
  nlohmann::json to_json() const;

 private:
  void add_term(const Monomial& m, const mpz_class& c);
  std::map<Monomial, mpz_class> terms_;
};

/// Fraction of LaurentPolys. Kept unreduced except integer-content and
/// monomial-content stripping; equality by cross-multiplication.
class FieldElement {
 public:
  FieldElement() : num_(), den_(1) {}
  explicit FieldElement(long c) : num_(c), den_(1) {}
  FieldElement(LaurentPoly num, LaurentPoly den);
  static FieldElement from_poly(const LaurentPoly& p) { return FieldElement(p, LaurentPoly(1)); }
  static FieldElement from_monomial(const Monomial& m) {
    return from_poly(LaurentPoly::monomial(m));
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }

  FieldElement operator+(const FieldElement&) const;
  FieldElement operator-(const FieldElement&) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement&) const;
  FieldElement operator/(const FieldElement&) const;  // throws DivisionByZero
  FieldElement inverse() const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  /// a/b == c/d  iff  ad == cb.
  bool operator==(const FieldElement& o) const { return num_ * o.den_ == o.num_ * den_; }

  FieldElement specialized(const Substitution& s) const;  // throws if denominator collapses

  std::string str() const;
  nlohmann::json to_json() const;

 private:
  void normalize();
  LaurentPoly num_, den_;
};

}  // namespace qtgl2

#include "qtgl2/factored.hpp"

namespace qtgl2 {

FactoredValue FactoredValue::difference(const Monomial& a, const Monomial& b) {
  if (a == b) return zero();
  FactoredValue v;
  v.lead_ = a;
  v.factors_[b / a] = 1;
  return v;
}

FactoredValue FactoredValue::q_minus_qinv() {
  return difference(Monomial::q(), Monomial::q(-1));
}

FactoredValue FactoredValue::operator*(const FactoredValue& o) const {
  if (zero_ || o.zero_) return zero();
  FactoredValue r = *this;
  r.sign_ *= o.sign_;
  r.lead_ *= o.lead_;
  for (const auto& [m, e] : o.factors_) {
    int& re = r.factors_[m];
    re += e;
    if (re == 0) r.factors_.erase(m);
  }
  return r;
}

FactoredValue FactoredValue::operator/(const FactoredValue& o) const {
  if (o.zero_) throw Error(ErrorKind::DivisionByZero, "division by zero factored value");
  if (zero_) return zero();
  FactoredValue inv;
  inv.sign_ = o.sign_;
  inv.lead_ = o.lead_.inverse();
  for (const auto& [m, e] : o.factors_) inv.factors_[m] = -e;
  return *this * inv;
}

FactoredValue FactoredValue::negated() const {
  if (zero_) return zero();
  FactoredValue r = *this;
  r.sign_ = -r.sign_;
  return r;
}

FieldElement FactoredValue::to_field() const {
  if (zero_) return FieldElement(0);
  LaurentPoly num = LaurentPoly::monomial(lead_, sign_);
  LaurentPoly den(1);
  for (const auto& [m, e] : factors_) {
    LaurentPoly f = LaurentPoly::difference(Monomial::one(), m);
    for (int i = 0; i < std::abs(e); ++i) {
      if (e > 0)
        num *= f;
      else
        den *= f;
    }
  }
  return FieldElement(std::move(num), std::move(den));
}

bool FactoredValue::equals(const FactoredValue& o) const {
  if (zero_ || o.zero_) return zero_ == o.zero_;
  return (*this / o).is_one();
}

FieldElement group_sum(const std::vector<FactoredValue>& terms) {
  // Common denominator over the factored forms; expand numerators only.
  std::map<Monomial, int> den;
  for (const auto& t : terms) {
    if (t.zero_) continue;
    for (const auto& [m, e] : t.factors_)
      if (e < 0) {
        int& d = den[m];
        if (-e > d) d = -e;
      }
  }
  LaurentPoly total;
  for (const auto& t : terms) {
    if (t.zero_) continue;
    // numerator = t * common_denominator: exponent of (1-m) is e_m + den_m >= 0
    std::map<Monomial, int> exps = t.factors_;
    for (const auto& [m, e] : den) exps[m] += e;
    LaurentPoly numer = LaurentPoly::monomial(t.lead_, t.sign_);
    for (const auto& [m, e] : exps) {
      LaurentPoly f = LaurentPoly::difference(Monomial::one(), m);
      for (int i = 0; i < e; ++i) numer *= f;
    }
    total += numer;
  }
  LaurentPoly d(1);
  for (const auto& [m, e] : den) {
    LaurentPoly f = LaurentPoly::difference(Monomial::one(), m);
    for (int i = 0; i < e; ++i) d *= f;
  }
  return FieldElement(std::move(total), std::move(d));
}

bool group_sum_is_zero(const std::vector<FactoredValue>& terms) {
  size_t nonzero = 0;
  const FactoredValue* first = nullptr;
  for (const auto& t : terms) {
    if (!t.zero_) {
      ++nonzero;
      if (!first) first = &t;
    }
  }
  if (nonzero == 0) return true;
  if (nonzero == 1) return false;
  if (nonzero == 2) {
    // ratio test avoids expansion entirely
    const FactoredValue* second = nullptr;
    for (const auto& t : terms)
      if (!t.zero_ && &t != first) {
        second = &t;
        break;
      }
    return (*first / *second).is_minus_one();
  }
  return group_sum(terms).is_zero();
}

}  // namespace qtgl2

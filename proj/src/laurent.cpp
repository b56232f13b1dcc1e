#include "qtgl2/laurent.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace qtgl2 {

void LaurentPoly::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::difference(const Monomial& a, const Monomial& b) {
  LaurentPoly p;
  p.add_term(a, 1);
  p.add_term(b, -1);
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

mpz_class LaurentPoly::integer_content() const {
  mpz_class g = 0;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Monomial LaurentPoly::monomial_content() const {
  if (terms_.empty()) return Monomial::one();
  Monomial::Exponents mins = terms_.begin()->first.exponents();
  for (const auto& [m, c] : terms_)
    for (int i = 0; i < Monomial::kGens; ++i)
      if (m.exp(i) < mins[i]) mins[i] = m.exp(i);
  return Monomial(mins);
}

void LaurentPoly::divide_integer(const mpz_class& g) {
  if (g == 1) return;
  std::map<Monomial, mpz_class> out;
  for (const auto& [m, c] : terms_) out.emplace(m, c / g);
  terms_ = std::move(out);
}

void LaurentPoly::divide_monomial(const Monomial& m) {
  if (m.is_one()) return;
  Monomial inv = m.inverse();
  std::map<Monomial, mpz_class> out;
  for (const auto& [mm, c] : terms_) out.emplace(mm * inv, c);
  terms_ = std::move(out);
}

int LaurentPoly::lead_sign() const {
  if (terms_.empty()) return 0;
  return sgn(terms_.rbegin()->second);
}

LaurentPoly LaurentPoly::specialized(const Substitution& s) const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_) r.add_term(s.apply(m), c);
  return r;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || m.is_one()) os << a.get_str();
    if (!m.is_one()) {
      if (a != 1) os << " ";
      os << m.str();
    }
  }
  return os.str();
}

nlohmann::json LaurentPoly::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : terms_)
    arr.push_back({{"coef", c.get_str()}, {"exp", m.to_json()}});
  return arr;
}

FieldElement::FieldElement(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  normalize();
}

void FieldElement::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num_.integer_content().get_mpz_t(), den_.integer_content().get_mpz_t());
  if (g > 1) {
    num_.divide_integer(g);
    den_.divide_integer(g);
  }
  Monomial m = den_.monomial_content();
  num_.divide_monomial(m);
  den_.divide_monomial(m);
  if (den_.lead_sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  return FieldElement(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  return FieldElement(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

FieldElement FieldElement::operator-() const { return FieldElement(-num_, den_); }

FieldElement FieldElement::operator*(const FieldElement& o) const {
  return FieldElement(num_ * o.num_, den_ * o.den_);
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero field element");
  return FieldElement(num_ * o.den_, den_ * o.num_);
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return FieldElement(den_, num_);
}

FieldElement FieldElement::specialized(const Substitution& s) const {
  LaurentPoly d = den_.specialized(s);
  if (d.is_zero())
    throw Error(ErrorKind::SpecializationCollapsesDenominator,
                "substitution sends denominator to zero");
  return FieldElement(num_.specialized(s), std::move(d));
}

std::string FieldElement::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

nlohmann::json FieldElement::to_json() const {
  return {{"num", num_.to_json()}, {"den", den_.to_json()}};
}

}  // namespace qtgl2

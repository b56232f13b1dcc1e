#include "qtgl2/rational_z.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qtgl2 {

void FactoredRatZ::cancel() {
  std::sort(zeros_.begin(), zeros_.end());
  std::sort(poles_.begin(), poles_.end());
  std::vector<Monomial> z2, p2;
  size_t i = 0, j = 0;
  while (i < zeros_.size() && j < poles_.size()) {
    if (zeros_[i] == poles_[j]) {
      ++i;
      ++j;
    } else if (zeros_[i] < poles_[j]) {
      z2.push_back(zeros_[i++]);
    } else {
      p2.push_back(poles_[j++]);
    }
  }
  while (i < zeros_.size()) z2.push_back(zeros_[i++]);
  while (j < poles_.size()) p2.push_back(poles_[j++]);
  zeros_ = std::move(z2);
  poles_ = std::move(p2);
}

FactoredRatZ FactoredRatZ::constant(const Monomial& m, int sign) {
  FactoredRatZ f;
  f.lead_ = m;
  f.sign_ = sign;
  return f;
}

FactoredRatZ FactoredRatZ::from_factors(int sign, Monomial lead, std::vector<Monomial> zeros,
                                        std::vector<Monomial> poles) {
  FactoredRatZ f;
  f.sign_ = sign;
  f.lead_ = std::move(lead);
  f.zeros_ = std::move(zeros);
  f.poles_ = std::move(poles);
  f.cancel();
  return f;
}

FactoredRatZ FactoredRatZ::linear(const Monomial& c, const Monomial& r) {
  FactoredRatZ f;
  f.sign_ = 1;
  f.lead_ = c;
  f.zeros_ = {r / c};
  return f;
}

FactoredRatZ FactoredRatZ::operator*(const FactoredRatZ& o) const {
  FactoredRatZ f;
  f.sign_ = sign_ * o.sign_;
  f.lead_ = lead_ * o.lead_;
  f.zeros_ = zeros_;
  f.zeros_.insert(f.zeros_.end(), o.zeros_.begin(), o.zeros_.end());
  f.poles_ = poles_;
  f.poles_.insert(f.poles_.end(), o.poles_.begin(), o.poles_.end());
  f.cancel();
  return f;
}

FactoredRatZ FactoredRatZ::inverse() const {
  FactoredRatZ f;
  f.sign_ = sign_;
  f.lead_ = lead_.inverse();
  f.zeros_ = poles_;
  f.poles_ = zeros_;
  return f;
}

bool FactoredRatZ::regular_at(const Monomial& p) const {
  return !std::binary_search(poles_.begin(), poles_.end(), p);
}

int FactoredRatZ::pole_multiplicity(const Monomial& p) const {
  auto [lo, hi] = std::equal_range(poles_.begin(), poles_.end(), p);
  return int(hi - lo);
}

FactoredValue FactoredRatZ::eval_factored(const Monomial& p) const {
  if (!regular_at(p))
    throw Error(ErrorKind::EvaluationAtPole, "evaluation at pole " + p.str());
  FactoredValue v = FactoredValue::from_monomial(lead_, sign_);
  for (const auto& z : zeros_) v *= FactoredValue::difference(p, z);
  for (const auto& q : poles_) v = v / FactoredValue::difference(p, q);
  return v;
}

FactoredValue FactoredRatZ::residue_factored(const Monomial& p) const {
  int mult = pole_multiplicity(p);
  if (mult == 0) throw Error(ErrorKind::NotAPole, p.str() + " is not a pole");
  if (mult > 1) throw Error(ErrorKind::PoleNotSimple, "pole " + p.str() + " is not simple");
  // res_{z=p} f dz/z = (f with (z-p) dropped)(p) / p
  FactoredValue v = FactoredValue::from_monomial(lead_ * p.inverse(), sign_);
  for (const auto& z : zeros_) v *= FactoredValue::difference(p, z);
  for (const auto& q : poles_) {
    if (q == p) continue;
    v = v / FactoredValue::difference(p, q);
  }
  return v;
}

FactoredValue FactoredRatZ::value_at_infinity() const {
  return FactoredValue::from_monomial(lead_, sign_);
}

FactoredValue FactoredRatZ::value_at_zero() const {
  // f(0) = sign*lead * prod(-z_i)/prod(-p_j)
  FactoredValue v = FactoredValue::from_monomial(lead_, sign_);
  int parity = int(zeros_.size() + poles_.size()) % 2;
  if (parity) v = v.negated();
  for (const auto& z : zeros_) v *= FactoredValue::from_monomial(z);
  for (const auto& q : poles_) v = v / FactoredValue::from_monomial(q);
  return v;
}

FactoredRatZ::Properties FactoredRatZ::properties() const {
  Properties pr;
  pr.poles = poles_;
  bool sizes = zeros_.size() == poles_.size();
  bool prod_one = false;
  if (sizes) {
    // f(0) f(inf) = lead^2 * prod z_i / prod p_j  (signs cancel when balanced-sized)
    Monomial m = lead_ * lead_;
    for (const auto& z : zeros_) m *= z;
    for (const auto& q : poles_) m *= q.inverse();
    prod_one = m.is_one();
  }
  pr.balanced = sizes && prod_one;
  pr.simple_poles_only = true;
  for (size_t i = 1; i < poles_.size(); ++i)
    if (poles_[i] == poles_[i - 1]) pr.simple_poles_only = false;
  return pr;
}

FactoredRatZ FactoredRatZ::scaled(const Monomial& a) const {
  FactoredRatZ f = *this;
  for (auto& z : f.zeros_) z *= a;
  for (auto& p : f.poles_) p *= a;
  // f(z/a) = a^{|poles|-|zeros|} * sign*lead * prod(z - a z_i)/prod(z - a p_j)
  int64_t delta = int64_t(f.poles_.size()) - int64_t(f.zeros_.size());
  if (delta != 0) f.lead_ = f.lead_ * a.pow(delta);
  f.cancel();
  return f;
}

FactoredRatZ FactoredRatZ::specialized(const Substitution& s) const {
  FactoredRatZ f;
  f.sign_ = sign_;
  f.lead_ = s.apply(lead_);
  f.zeros_.reserve(zeros_.size());
  for (const auto& z : zeros_) f.zeros_.push_back(s.apply(z));
  for (const auto& p : poles_) f.poles_.push_back(s.apply(p));
  f.cancel();
  return f;
}

std::string FactoredRatZ::str() const {
  std::ostringstream os;
  if (sign_ < 0) os << "-";
  if (!lead_.is_one() || (zeros_.empty() && poles_.empty())) os << lead_.str() << " ";
  for (const auto& z : zeros_) os << "(z - " << z.str() << ")";
  if (!poles_.empty()) {
    os << " / ";
    for (const auto& p : poles_) os << "(z - " << p.str() << ")";
  }
  std::string s = os.str();
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

nlohmann::json FactoredRatZ::to_json() const {
  nlohmann::json zs = nlohmann::json::array(), ps = nlohmann::json::array();
  for (const auto& z : zeros_) zs.push_back(z.to_json());
  for (const auto& p : poles_) ps.push_back(p.to_json());
  return {{"sign", sign_}, {"lead", lead_.to_json()}, {"zeros", zs}, {"poles", ps}};
}

std::string LWeightPair::str() const {
  return "( " + c0.str() + " ,  " + c1.str() + " )";
}

nlohmann::json LWeightPair::to_json() const {
  return {{"comp0", c0.to_json()}, {"comp1", c1.to_json()}};
}

LWeightPair weight_0(const Monomial& a) {
  // (qz - a)/(z - aq)
  LWeightPair w;
  w.c0 = FactoredRatZ::linear(Monomial::q(), a) *
         FactoredRatZ::from_factors(1, Monomial::one(), {}, {a * Monomial::q()});
  return w;
}

LWeightPair weight_1(const Monomial& a) {
  LWeightPair w;
  w.c1 = FactoredRatZ::linear(Monomial::q(), a) *
         FactoredRatZ::from_factors(1, Monomial::one(), {}, {a * Monomial::q()});
  return w;
}

}  // namespace qtgl2

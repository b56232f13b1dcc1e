#pragma once
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qtgl2/factored.hpp"

namespace qtgl2 {

/// Rational function of z in fully factored form,
///   sign * lead * prod_i (z - zeros_i) / prod_j (z - poles_j),
/// with Monomial roots. Canonical: common zero/pole entries are cancelled.
/// The value at z = infinity of a balanced function is sign*lead.
class FactoredRatZ {
 public:
  FactoredRatZ() : sign_(1) {}  // the constant 1

  static FactoredRatZ one() { return FactoredRatZ(); }
  static FactoredRatZ constant(const Monomial& m, int sign = 1);
  static FactoredRatZ from_factors(int sign, Monomial lead, std::vector<Monomial> zeros,
                                   std::vector<Monomial> poles);
  /// (c*z - r) = c * (z - r/c), a linear numerator factor.
  static FactoredRatZ linear(const Monomial& c, const Monomial& r);

  int sign() const { return sign_; }
  const Monomial& lead() const { return lead_; }
  const std::vector<Monomial>& zeros() const { return zeros_; }
  const std::vector<Monomial>& poles() const { return poles_; }

  FactoredRatZ operator*(const FactoredRatZ&) const;
  FactoredRatZ inverse() const;
  FactoredRatZ& operator*=(const FactoredRatZ& o) { return *this = *this * o; }
  bool operator==(const FactoredRatZ&) const = default;

  bool regular_at(const Monomial& p) const;
  int pole_multiplicity(const Monomial& p) const;

  FactoredValue eval_factored(const Monomial& p) const;  // throws EvaluationAtPole
  FieldElement eval(const Monomial& p) const { return eval_factored(p).to_field(); }
  /// res_{z=p} f(z) dz/z at a simple pole p. Throws NotAPole / PoleNotSimple.
  FactoredValue residue_factored(const Monomial& p) const;
  FieldElement residue(const Monomial& p) const { return residue_factored(p).to_field(); }

  struct Properties {
    bool balanced;
    bool simple_poles_only;
    std::vector<Monomial> poles;
  };
  Properties properties() const;
  /// value at infinity (balanced functions only): sign*lead as FactoredValue.
  FactoredValue value_at_infinity() const;
  FactoredValue value_at_zero() const;

  /// z -> z/a: roots and poles multiply by a; lead unchanged for balanced f.
  FactoredRatZ scaled(const Monomial& a) const;
  FactoredRatZ specialized(const Substitution& s) const;

  std::string str() const;
  nlohmann::json to_json() const;

 private:
  void cancel();
  int sign_;
  Monomial lead_;
  std::vector<Monomial> zeros_, poles_;  // sorted
};

/// Pair of rational functions indexed by color: an l-weight.
struct LWeightPair {
  FactoredRatZ c0, c1;

  static LWeightPair one() { return {}; }
  const FactoredRatZ& component(int i) const { return i == 0 ? c0 : c1; }
  FactoredRatZ& component(int i) { return i == 0 ? c0 : c1; }

  LWeightPair operator*(const LWeightPair& o) const { return {c0 * o.c0, c1 * o.c1}; }
  LWeightPair inverse() const { return {c0.inverse(), c1.inverse()}; }
  LWeightPair& operator*=(const LWeightPair& o) { return *this = *this * o; }
  bool operator==(const LWeightPair&) const = default;

  LWeightPair swapped() const { return {c1, c0}; }
  LWeightPair scaled(const Monomial& a) const { return {c0.scaled(a), c1.scaled(a)}; }
  LWeightPair specialized(const Substitution& s) const {
    return {c0.specialized(s), c1.specialized(s)};
  }

  std::string str() const;
  nlohmann::json to_json() const;
};

/// 0_a = ((qz-a)/(z-aq), 1) and 1_a = (1, (qz-a)/(z-aq)).
LWeightPair weight_0(const Monomial& a);
LWeightPair weight_1(const Monomial& a);

}  // namespace qtgl2

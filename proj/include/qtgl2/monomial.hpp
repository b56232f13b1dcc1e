#pragma once
#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "qtgl2/errors.hpp"

namespace qtgl2 {

/// A point of the exponent lattice over the formal generators
/// (q, d, u, v, k) where u = q^{-mu}, v = q^{-nu}, k = kappa.
/// Derived constants: q1 = q^{-1}d, q2 = q^2, q3 = q^{-1}d^{-1},
/// so q1*q2*q3 = 1 and q2^{-mu} = u^2, q2^{-nu} = v^2.
class Monomial {
 public:
  static constexpr int kGens = 5;
  using Exponents = std::array<int64_t, kGens>;

  Monomial() : e_{} {}
  explicit Monomial(const Exponents& e) : e_(e) {}

  static Monomial one() { return Monomial(); }
  static Monomial q(int64_t e = 1) { return gen(0, e); }
  static Monomial d(int64_t e = 1) { return gen(1, e); }
  static Monomial u(int64_t e = 1) { return gen(2, e); }
  static Monomial v(int64_t e = 1) { return gen(3, e); }
  static Monomial kappa(int64_t e = 1) { return gen(4, e); }
  static Monomial q1(int64_t e = 1) { return q(-e) * d(e); }
  static Monomial q2(int64_t e = 1) { return q(2 * e); }
  static Monomial q3(int64_t e = 1) { return q(-e) * d(-e); }

  Monomial operator*(const Monomial& o) const {
    Exponents r;
    for (int i = 0; i < kGens; ++i) r[i] = e_[i] + o.e_[i];
    return Monomial(r);
  }
  Monomial& operator*=(const Monomial& o) { return *this = *this * o; }
  Monomial inverse() const {
    Exponents r;
    for (int i = 0; i < kGens; ++i) r[i] = -e_[i];
    return Monomial(r);
  }
  Monomial operator/(const Monomial& o) const { return *this * o.inverse(); }
  Monomial pow(int64_t n) const {
    Exponents r;
    for (int i = 0; i < kGens; ++i) r[i] = n * e_[i];
    return Monomial(r);
  }

  bool is_one() const {
    for (auto e : e_)
      if (e != 0) return false;
    return true;
  }
  int64_t exp(int i) const { return e_[i]; }
  const Exponents& exponents() const { return e_; }

  auto operator<=>(const Monomial&) const = default;

  std::string str() const;
  nlohmann::json to_json() const;
  static Monomial from_json(const nlohmann::json& j);

  /// Parses products like "q^-2", "q3", "q1*kappa^2", "1".
  static Monomial parse(const std::string& text);

 private:
  static Monomial gen(int i, int64_t e) {
    Monomial m;
    m.e_[i] = e;
    return m;
  }
  Exponents e_;
};

/// A substitution sending each generator to a Monomial (identity where unset).
/// Linear on exponents, hence a ring homomorphism on everything built above.
struct Substitution {
  std::array<std::optional<Monomial>, Monomial::kGens> images;

  bool empty() const {
    for (const auto& im : images)
      if (im) return false;
    return true;
  }
  Monomial apply(const Monomial& m) const {
    Monomial r;
    for (int i = 0; i < Monomial::kGens; ++i) {
      int64_t e = m.exp(i);
      if (e == 0) continue;
      if (images[i])
        r *= images[i]->pow(e);
      else {
        Monomial::Exponents g{};
        g[i] = e;
        r *= Monomial(g);
      }
    }
    return r;
  }
  /// Composition: (this then later).
  Substitution then(const Substitution& later) const;

  /// Parses "d=q^-2;kappa=q3" (also accepts ',' as separator).
  static Substitution parse(const std::string& text);
};

}  // namespace qtgl2

#pragma once
#include <compare>
#include <tuple>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qtgl2/monomial.hpp"

namespace qtgl2 {

/// Integer shifted by multiples of the generic parameters mu, nu:
/// value = n + mu_mult * mu + nu_mult * nu. Steps of +-1 act on n.
struct ShiftedInt {
  int64_t n = 0;
  int32_t mu_mult = 0;
  int32_t nu_mult = 0;

  auto operator<=>(const ShiftedInt&) const = default;
  ShiftedInt offset(int64_t delta) const { return {n + delta, mu_mult, nu_mult}; }
  bool same_shift(const ShiftedInt& o) const {
    return mu_mult == o.mu_mult && nu_mult == o.nu_mult;
  }
  std::string str() const;
};

struct Coord {
  ShiftedInt x, y, z;
  auto operator<=>(const Coord&) const = default;
  std::string str() const;
};

enum class BoxSign : uint8_t { positive, negative };

/// A colored box at a (possibly mu/nu-shifted) lattice point. `group` tags
/// which ordered group of the family's box universe it belongs to.
struct Box {
  int8_t color = 0;
  BoxSign sign = BoxSign::positive;
  Coord coord;
  int8_t group = 0;

  bool negative() const { return sign == BoxSign::negative; }
  /// structural (storage) order: coordinate-major, independent of families
  auto operator<=>(const Box& o) const {
    return std::tie(group, coord, color, sign) <=> std::tie(o.group, o.coord, o.color, o.sign);
  }
  bool operator==(const Box& o) const {
    return group == o.group && coord == o.coord && color == o.color && sign == o.sign;
  }
  std::string str() const;
  nlohmann::json to_json() const;
};

/// position p = q1^{-x} q2^{-y} q3^{-z}; mu/nu multiplicities of y go to u, v
/// (q2^{-mu} = u^2). x and z must be plain integers.
Monomial position(const Box& b);

/// A finite set of added positive boxes and removed negative boxes.
/// Both lists are kept sorted by the structural key (operator<).
struct State {
  std::vector<Box> plus, minus;

  bool empty() const { return plus.empty() && minus.empty(); }
  size_t box_count() const { return plus.size() + minus.size(); }
  bool contains_plus(const Box& b) const;
  bool contains_minus(const Box& b) const;
  void insert_plus(const Box& b);
  void insert_minus(const Box& b);
  void erase_plus(const Box& b);
  void erase_minus(const Box& b);

  auto operator<=>(const State&) const = default;
  /// canonical text encoding, usable as a map key
  std::string key() const;
  nlohmann::json to_json() const;
};

/// Strict total order used for l-weight splits:
/// negative boxes < (reference marker) < positive boxes; within a sign class,
/// family group rank decides, then lexicographic (y, z, x).
/// Boxes of groups with equal rank but different mu/nu shifts are
/// incomparable unless the lexicographic rule applies.
int compare_boxes(const Box& a, const Box& b, const std::vector<int>& group_rank);

/// concave move: add positive box / remove negative box
State with_box_added(const State& s, const Box& b);
/// convex move: remove positive box / add negative box
State with_box_removed(const State& s, const Box& b);

/// per-color (deg0, deg1): positive boxes count +1, negative -1.
std::pair<int64_t, int64_t> state_degree(const State& s);

}  // namespace qtgl2

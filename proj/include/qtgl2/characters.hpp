#pragma once
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qtgl2/family.hpp"

namespace qtgl2 {

using Cell = std::pair<int64_t, int64_t>;

/// Bigraded state counts over a rectangular window. Counts are exact and
/// complete per cell (states are generated directly per family), so every
/// cell of the window is comparable; absent cells are zero.
struct CharWindow {
  WindowBounds window;
  std::map<Cell, int64_t> counts;

  int64_t at(int64_t d0, int64_t d1) const {
    auto it = counts.find({d0, d1});
    return it == counts.end() ? 0 : it->second;
  }
  nlohmann::json to_json() const;
  std::string csv() const;  // long format: deg0,deg1,count
};

CharWindow character(const Family& f, const WindowBounds& w);

/// counts by total degree 0..maxdeg (families with positive boxes only)
std::vector<int64_t> character_diag(const Family& f, int maxdeg);

enum class CharKind {
  FockDiag,         // 1/prod (1-z^i)
  MacmahonDiag,     // 1/prod (1-z^i)^i
  MacmahonBicolor,  // 1/prod (1-t^i)^{2i} (1-z0 t^{i-1})^i (1-z1 t^{i-1})^{i-1}
  ChiBar0,          // 1/prod (1-t^j)(1-z0 t^{j-1})
  ChiBar1,
  VermaProduct,     // ChiBar0 * ChiBar1
  QuarticEta,       // 1/prod (1-t^j)^4
  RelaxedDelta,     // QuarticEta(t) * delta(z0)
  SlantedDelta,     // QuarticEta(t) * delta(z0 t^m)
  VectorDelta,      // (1+z_i) delta(z0 z1)
};

struct ClosedForm {
  CharKind kind;
  int m = 0;      // slope for SlantedDelta
  int color = 0;  // for VectorDelta
};
ClosedForm closed_form_for(const Family& f);  // throws UnknownKind
ClosedForm closed_form_by_name(const std::string& name, int m = 0, int color = 0);

/// window expansion of the closed form (delta factors expanded as the
/// indicated support lines)
CharWindow closed_form_coeffs(const ClosedForm& cf, const WindowBounds& w);
std::vector<int64_t> closed_form_diag(const ClosedForm& cf, int maxdeg);

struct CharCompare {
  bool pass = true;
  nlohmann::json cells;  // per-cell {d0, d1, enumerated, closed, match}
  nlohmann::json to_json() const;
};
CharCompare compare_character(const Family& f, const ClosedForm& cf, const WindowBounds& w);
CharCompare compare_diag(const Family& f, const ClosedForm& cf, int maxdeg);

// ---------------------------------------------------------------------------
// staircase bijection for the slanted tower character

struct Tower {
  std::vector<int64_t> a;  // m+1 white column heights
  std::vector<int64_t> b;  // m black column heights
  bool operator==(const Tower&) const = default;
};

struct StaircaseCoords {
  int64_t a0_tilde = 0;
  std::vector<int64_t> c, d;  // both of length m
  bool operator==(const StaircaseCoords&) const = default;
};

/// c_i = b_i - a_i, d_i = b_i - a_{i+1}, a0~ = a0 - sum d. Requires the tower
/// constraints b_s >= a_s, a_{s+1} (throws ConstraintViolated otherwise).
StaircaseCoords staircase_forward(const Tower& t);
Tower staircase_inverse(int m, const StaircaseCoords& s);

/// shape actions on towers: R_i bumps a_j, b_j for j < i; Rbar_i bumps b_{m-i}
Tower add_shape_R(const Tower& t, int i);
Tower add_shape_Rbar(const Tower& t, int m, int i);

}  // namespace qtgl2

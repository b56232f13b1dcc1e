#include "qtgl2/characters.hpp"

#include <algorithm>
#include <sstream>

namespace qtgl2 {

nlohmann::json CharWindow::to_json() const {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& [cell, n] : counts)
    cells.push_back({{"deg0", cell.first}, {"deg1", cell.second}, {"count", n}});
  return {{"window", {window.d0min, window.d0max, window.d1min, window.d1max}},
          {"cells", cells}};
}

std::string CharWindow::csv() const {
  std::ostringstream os;
  os << "deg0,deg1,count\n";
  for (const auto& [cell, n] : counts)
    os << cell.first << "," << cell.second << "," << n << "\n";
  return os.str();
}

CharWindow character(const Family& f, const WindowBounds& w) {
  CharWindow cw;
  cw.window = w;
  cw.counts = f.window_counts(w);
  return cw;
}

std::vector<int64_t> character_diag(const Family& f, int maxdeg) {
  // families with positive boxes only: total degree == number of boxes ==
  // move distance, so the BFS closure at `maxdeg` is complete per degree
  std::vector<int64_t> out(size_t(maxdeg) + 1, 0);
  for (const auto& s : enumerate_states(f, maxdeg)) {
    auto [d0, d1] = state_degree(s);
    int64_t total = d0 + d1;
    if (total >= 0 && total <= maxdeg) out[size_t(total)] += 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// closed forms

namespace {

/// multiply the truncated series c (indexed by degree) by 1/(1-z^step)^e
void mul_inv_one_minus(std::vector<int64_t>& c, int64_t step, int64_t e) {
  for (int64_t r = 0; r < e; ++r)
    for (size_t n = size_t(step); n < c.size(); ++n) c[n] += c[n - size_t(step)];
}

std::vector<int64_t> euler_series(int maxdeg, int64_t exponent_of_i) {
  // 1 / prod_{i>=1} (1 - z^i)^{f(i)} with f(i) = 1 or i
  std::vector<int64_t> c(size_t(maxdeg) + 1, 0);
  c[0] = 1;
  for (int64_t i = 1; i <= maxdeg; ++i) mul_inv_one_minus(c, i, exponent_of_i ? i : 1);
  return c;
}

std::vector<int64_t> quartic_eta_series(int maxdeg) {
  std::vector<int64_t> c(size_t(maxdeg) + 1, 0);
  c[0] = 1;
  for (int64_t i = 1; i <= maxdeg; ++i) mul_inv_one_minus(c, i, 4);
  return c;
}

/// first-quadrant bivariate truncation on [0..d0max] x [0..d1max]
class BiSeries {
 public:
  BiSeries(int64_t d0max, int64_t d1max) : n0_(d0max + 1), n1_(d1max + 1) {
    c_.assign(size_t(n0_ * n1_), 0);
    c_[0] = 1;
  }
  /// multiply by 1/(1 - z0^a z1^b)^e, (a,b) >= 0 and not both zero
  void mul_inv(int64_t a, int64_t b, int64_t e) {
    if (a >= n0_ && b >= n1_) return;
    for (int64_t r = 0; r < e; ++r)
      for (int64_t i = a; i < n0_; ++i)
        for (int64_t j = b; j < n1_; ++j) at(i, j) += at(i - a, j - b);
  }
  int64_t& at(int64_t i, int64_t j) { return c_[size_t(i * n1_ + j)]; }
  int64_t get(int64_t i, int64_t j) const {
    if (i < 0 || j < 0 || i >= n0_ || j >= n1_) return 0;
    return c_[size_t(i * n1_ + j)];
  }

 private:
  int64_t n0_, n1_;
  std::vector<int64_t> c_;
};

CharWindow from_biseries(const BiSeries& s, const WindowBounds& w) {
  CharWindow cw;
  cw.window = w;
  for (int64_t i = w.d0min; i <= w.d0max; ++i)
    for (int64_t j = w.d1min; j <= w.d1max; ++j)
      if (int64_t v = s.get(i, j)) cw.counts[{i, j}] = v;
  return cw;
}

}  // namespace

ClosedForm closed_form_for(const Family& f) {
  std::string n = f.name();
  if (n == "vector0") return {CharKind::VectorDelta, 0, 0};
  if (n == "vector1") return {CharKind::VectorDelta, 0, 1};
  if (n == "fock0" || n == "fock1" || n == "fock-restricted") return {CharKind::FockDiag};
  if (n == "macmahon0" || n == "macmahon1") return {CharKind::MacmahonDiag};
  if (n == "verma0" || n == "verma1") return {CharKind::VermaProduct};
  if (n == "relaxed") return {CharKind::RelaxedDelta};
  if (n == "slanted") {
    int m = int(f.params_json().value("m", 1));
    return {CharKind::SlantedDelta, m, 0};
  }
  throw Error(ErrorKind::UnknownKind, "no closed character form for family " + n);
}

ClosedForm closed_form_by_name(const std::string& name, int m, int color) {
  if (name == "fock-diag") return {CharKind::FockDiag};
  if (name == "macmahon-diag") return {CharKind::MacmahonDiag};
  if (name == "macmahon-bicolor") return {CharKind::MacmahonBicolor};
  if (name == "chibar0") return {CharKind::ChiBar0};
  if (name == "chibar1") return {CharKind::ChiBar1};
  if (name == "verma-product") return {CharKind::VermaProduct};
  if (name == "quartic-eta") return {CharKind::QuarticEta};
  if (name == "relaxed-delta") return {CharKind::RelaxedDelta};
  if (name == "slanted-delta") return {CharKind::SlantedDelta, m, 0};
  if (name == "vector-delta") return {CharKind::VectorDelta, 0, color};
  throw Error(ErrorKind::UnknownKind, "unknown closed form '" + name + "'");
}

CharWindow closed_form_coeffs(const ClosedForm& cf, const WindowBounds& w) {
  switch (cf.kind) {
    case CharKind::RelaxedDelta:
    case CharKind::SlantedDelta: {
      int m = cf.kind == CharKind::RelaxedDelta ? 0 : cf.m;
      int64_t jmax = 0;
      for (int64_t d0 = w.d0min; d0 <= w.d0max; ++d0)
        for (int64_t d1 = w.d1min; d1 <= w.d1max; ++d1)
          jmax = std::max(jmax, d1 - m * (d0 - d1));
      auto pt = quartic_eta_series(int(std::max<int64_t>(0, jmax)));
      CharWindow cw;
      cw.window = w;
      for (int64_t d0 = w.d0min; d0 <= w.d0max; ++d0)
        for (int64_t d1 = w.d1min; d1 <= w.d1max; ++d1) {
          int64_t j = d1 - m * (d0 - d1);
          if (j >= 0 && j < int64_t(pt.size()) && pt[size_t(j)])
            cw.counts[{d0, d1}] = pt[size_t(j)];
        }
      return cw;
    }
    case CharKind::VectorDelta: {
      CharWindow cw;
      cw.window = w;
      for (int64_t d0 = w.d0min; d0 <= w.d0max; ++d0)
        for (int64_t d1 = w.d1min; d1 <= w.d1max; ++d1) {
          int64_t diff = cf.color == 0 ? d0 - d1 : d1 - d0;
          if (diff == 0 || diff == 1) cw.counts[{d0, d1}] = 1;
        }
      return cw;
    }
    case CharKind::MacmahonBicolor: {
      BiSeries s(std::max<int64_t>(0, w.d0max), std::max<int64_t>(0, w.d1max));
      int64_t lim = std::max(w.d0max, w.d1max) + 1;
      for (int64_t i = 1; i <= lim; ++i) {
        s.mul_inv(i, i, 2 * i);            // (1 - t^i)^{2i}
        s.mul_inv(i, i - 1, i);            // (1 - z0 t^{i-1})^i
        if (i >= 2) s.mul_inv(i - 1, i, i - 1);  // (1 - z1 t^{i-1})^{i-1}
      }
      return from_biseries(s, w);
    }
    case CharKind::ChiBar0:
    case CharKind::ChiBar1:
    case CharKind::VermaProduct: {
      BiSeries s(std::max<int64_t>(0, w.d0max), std::max<int64_t>(0, w.d1max));
      int64_t lim = std::max(w.d0max, w.d1max) + 1;
      for (int64_t j = 1; j <= lim; ++j) {
        if (cf.kind != CharKind::ChiBar1) {
          s.mul_inv(j, j, 1);
          s.mul_inv(j, j - 1, 1);  // z0 t^{j-1}
        }
        if (cf.kind != CharKind::ChiBar0) {
          s.mul_inv(j, j, 1);
          s.mul_inv(j - 1, j, 1);  // z1 t^{j-1}
        }
      }
      return from_biseries(s, w);
    }
    case CharKind::FockDiag:
    case CharKind::MacmahonDiag:
    case CharKind::QuarticEta:
      throw Error(ErrorKind::UnknownKind, "closed form is one-variable; use closed_form_diag");
  }
  throw Error(ErrorKind::UnknownKind, "unhandled closed form");
}

std::vector<int64_t> closed_form_diag(const ClosedForm& cf, int maxdeg) {
  switch (cf.kind) {
    case CharKind::FockDiag:
      return euler_series(maxdeg, 0);
    case CharKind::MacmahonDiag:
      return euler_series(maxdeg, 1);
    case CharKind::QuarticEta:
      return quartic_eta_series(maxdeg);
    default: {
      CharWindow cw = closed_form_coeffs(cf, {0, maxdeg, 0, maxdeg});
      std::vector<int64_t> out(size_t(maxdeg) + 1, 0);
      for (const auto& [cell, n] : cw.counts) {
        int64_t total = cell.first + cell.second;
        if (total >= 0 && total <= maxdeg) out[size_t(total)] += n;
      }
      return out;
    }
  }
}

nlohmann::json CharCompare::to_json() const { return {{"pass", pass}, {"cells", cells}}; }

CharCompare compare_character(const Family& f, const ClosedForm& cf, const WindowBounds& w) {
  CharWindow enumerated = character(f, w);
  CharWindow closed = closed_form_coeffs(cf, w);
  CharCompare rep;
  rep.cells = nlohmann::json::array();
  for (int64_t d0 = w.d0min; d0 <= w.d0max; ++d0)
    for (int64_t d1 = w.d1min; d1 <= w.d1max; ++d1) {
      int64_t a = enumerated.at(d0, d1), b = closed.at(d0, d1);
      bool ok = a == b;
      if (!ok) rep.pass = false;
      if (a || b || !ok)
        rep.cells.push_back(
            {{"deg0", d0}, {"deg1", d1}, {"enumerated", a}, {"closed", b}, {"match", ok}});
    }
  return rep;
}

CharCompare compare_diag(const Family& f, const ClosedForm& cf, int maxdeg) {
  auto a = character_diag(f, maxdeg);
  auto b = closed_form_diag(cf, maxdeg);
  CharCompare rep;
  rep.cells = nlohmann::json::array();
  for (int n = 0; n <= maxdeg; ++n) {
    bool ok = a[size_t(n)] == b[size_t(n)];
    if (!ok) rep.pass = false;
    rep.cells.push_back(
        {{"degree", n}, {"enumerated", a[size_t(n)]}, {"closed", b[size_t(n)]}, {"match", ok}});
  }
  return rep;
}

// ---------------------------------------------------------------------------
// staircase bijection

StaircaseCoords staircase_forward(const Tower& t) {
  int m = int(t.b.size());
  if (int(t.a.size()) != m + 1)
    throw Error(ErrorKind::ConstraintViolated, "tower needs m+1 white and m black entries");
  StaircaseCoords s;
  int64_t dsum = 0;
  for (int i = 0; i < m; ++i) {
    if (t.b[size_t(i)] < t.a[size_t(i)] || t.b[size_t(i)] < t.a[size_t(i) + 1])
      throw Error(ErrorKind::ConstraintViolated, "tower violates b_s >= a_s, a_{s+1}");
    s.c.push_back(t.b[size_t(i)] - t.a[size_t(i)]);
    s.d.push_back(t.b[size_t(i)] - t.a[size_t(i) + 1]);
    dsum += s.d.back();
  }
  s.a0_tilde = t.a[0] - dsum;
  return s;
}

Tower staircase_inverse(int m, const StaircaseCoords& s) {
  if (int(s.c.size()) != m || int(s.d.size()) != m)
    throw Error(ErrorKind::ConstraintViolated, "coords need m entries of c and d");
  Tower t;
  int64_t dsum = 0;
  for (int64_t v : s.d) dsum += v;
  t.a.push_back(s.a0_tilde + dsum);
  for (int i = 0; i < m; ++i) {
    t.b.push_back(t.a.back() + s.c[size_t(i)]);
    t.a.push_back(t.b.back() - s.d[size_t(i)]);
  }
  return t;
}

Tower add_shape_R(const Tower& t, int i) {
  Tower r = t;
  for (int j = 0; j < i; ++j) {
    r.a[size_t(j)] += 1;
    r.b[size_t(j)] += 1;
  }
  return r;
}

Tower add_shape_Rbar(const Tower& t, int m, int i) {
  // bumps c_{m-i}: the black column m-i and everything above it in the
  // staircase reading, i.e. b_j and a_{j+1} for j > m-i stay, b_{m-i} += 1
  Tower r = t;
  r.b[size_t(m - i)] += 1;
  for (int j = m - i + 1; j < m; ++j) {
    r.a[size_t(j)] += 1;
    r.b[size_t(j)] += 1;
  }
  r.a[size_t(m)] += 1;
  return r;
}

}  // namespace qtgl2

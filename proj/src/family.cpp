#include "qtgl2/family.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qtgl2 {

namespace {

ShiftedInt si(int64_t n, int32_t mu = 0, int32_t nu = 0) { return {n, mu, nu}; }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace((unsigned char)c)) {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<int64_t> parse_int_list(const std::string& text) {
  std::vector<int64_t> out;
  if (text.empty() || text == "-") return out;
  for (const auto& item : split(text, ','))
    if (!item.empty()) out.push_back(std::stoll(item));
  return out;
}

std::string int_list_str(const std::vector<int64_t>& v) {
  if (v.empty()) return "-";
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

bool weakly_decreasing_positive(const std::vector<int64_t>& parts) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) return false;
    if (i && parts[i] > parts[i - 1]) return false;
  }
  return true;
}

/// All partitions (weakly decreasing positive parts) with total size <= n.
void partitions_up_to(int64_t n, std::vector<std::vector<int64_t>>& out) {
  std::vector<int64_t> cur;
  auto rec = [&](auto&& self, int64_t remaining, int64_t maxpart) -> void {
    out.push_back(cur);
    for (int64_t p = std::min(remaining, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
}

/// Decodes a column group: boxes with x in [0,C), column x holding y-integer
/// parts {0..h_x-1}, heights weakly decreasing. Returns heights or nullopt.
std::optional<std::vector<int64_t>> decode_columns(const std::map<int64_t, std::set<int64_t>>& cols) {
  std::vector<int64_t> heights;
  if (cols.empty()) return heights;
  int64_t maxx = cols.rbegin()->first;
  if (cols.begin()->first < 0) return std::nullopt;
  for (int64_t x = 0; x <= maxx; ++x) {
    auto it = cols.find(x);
    int64_t h = 0;
    if (it != cols.end()) {
      h = int64_t(it->second.size());
      if (*it->second.begin() != 0 || *it->second.rbegin() != h - 1) return std::nullopt;
    }
    heights.push_back(h);
  }
  while (!heights.empty() && heights.back() == 0) heights.pop_back();
  for (size_t i = 1; i < heights.size(); ++i)
    if (heights[i] > heights[i - 1]) return std::nullopt;
  for (int64_t h : heights)
    if (h == 0) return std::nullopt;
  return heights;
}

/// bidegree of a vertical partition whose columns alternate colors starting
/// with color 1: (c0, c1) = (h1+h3+..., h0+h2+...)
std::pair<int64_t, int64_t> alternating_column_bidegree(const std::vector<int64_t>& heights) {
  int64_t c0 = 0, c1 = 0;
  for (size_t i = 0; i < heights.size(); ++i) (i % 2 ? c0 : c1) += heights[i];
  return {c0, c1};
}

/// Signed contiguous column: plus parts {0..a-1} or minus parts {-a..-1}.
std::optional<int64_t> decode_signed_column(const std::set<int64_t>& plus,
                                            const std::set<int64_t>& minus) {
  if (!plus.empty() && !minus.empty()) return std::nullopt;
  if (!plus.empty()) {
    int64_t a = int64_t(plus.size());
    if (*plus.begin() != 0 || *plus.rbegin() != a - 1) return std::nullopt;
    return a;
  }
  if (!minus.empty()) {
    int64_t a = int64_t(minus.size());
    if (*minus.begin() != -a || *minus.rbegin() != -1) return std::nullopt;
    return -a;
  }
  return 0;
}

}  // namespace

nlohmann::json Family::params_json() const { return nlohmann::json::object(); }

std::shared_ptr<Family> Family::with_shift(const Monomial& a) const {
  auto c = clone();
  c->shift_ = c->shift_ * a;
  return c;
}

std::shared_ptr<Family> Family::with_substitution(const Substitution& s) const {
  auto c = clone();
  c->subst_ = c->subst_.then(s);
  return c;
}

State Family::parse_state(const std::string&) const {
  throw Error(ErrorKind::ConfigError, "family '" + name() + "' has no state text format");
}

std::string Family::state_str(const State& s) const { return s.key(); }

std::vector<State> Family::window_states(const WindowBounds& w) const {
  // default for families with positive boxes only: a state in cell (d0,d1)
  // has exactly d0+d1 boxes
  int bound = int(std::max<int64_t>(0, w.d0max) + std::max<int64_t>(0, w.d1max));
  std::vector<State> all = enumerate_states(*this, bound);
  std::vector<State> out;
  for (auto& s : all) {
    auto [d0, d1] = state_degree(s);
    if (w.contains(d0, d1)) out.push_back(std::move(s));
  }
  return out;
}

std::map<std::pair<int64_t, int64_t>, int64_t> Family::window_counts(
    const WindowBounds& w) const {
  std::map<std::pair<int64_t, int64_t>, int64_t> counts;
  for (const auto& s : window_states(w)) {
    auto [d0, d1] = state_degree(s);
    ++counts[{d0, d1}];
  }
  return counts;
}

// ---------------------------------------------------------------------------
// vector family U_c: boxes (i,0,0), color i+c mod 2, negative iff i<0

class VectorFamily final : public Family {
 public:
  explicit VectorFamily(int color) : c0_(color & 1) {}

  std::string name() const override { return c0_ ? "vector1" : "vector0"; }
  nlohmann::json params_json() const override { return {{"color", c0_}}; }

  Box box_at(int64_t i) const {
    Box b;
    b.color = int8_t((((i % 2) + 2) % 2 + c0_) % 2);
    b.sign = i < 0 ? BoxSign::negative : BoxSign::positive;
    b.coord = {si(i), si(0), si(0)};
    b.group = 0;
    return b;
  }

  std::optional<int64_t> decode(const State& s) const {
    if (!s.plus.empty() && !s.minus.empty()) return std::nullopt;
    if (!s.minus.empty()) {
      int64_t k = int64_t(s.minus.size());
      for (int64_t t = 0; t < k; ++t)
        if (s.minus[t] != box_at(-k + t)) return std::nullopt;
      return -k;
    }
    int64_t k = int64_t(s.plus.size());
    for (int64_t t = 0; t < k; ++t)
      if (s.plus[t] != box_at(t)) return std::nullopt;
    return k;
  }

  State state_at(int64_t k) const {
    State s;
    if (k >= 0)
      for (int64_t i = 0; i < k; ++i) s.insert_plus(box_at(i));
    else
      for (int64_t i = -1; i >= k; --i) s.insert_minus(box_at(i));
    return s;
  }

  bool is_valid(const State& s) const override { return decode(s).has_value(); }

  std::vector<Box> move_candidates(const State& s) const override {
    auto k = decode(s);
    if (!k) throw Error(ErrorKind::InvalidState, "not a vector-family state");
    return {box_at(*k), box_at(*k - 1)};
  }

  std::vector<State> window_states(const WindowBounds& w) const override {
    int64_t r = 0;
    for (int64_t v : {std::llabs(w.d0min), std::llabs(w.d0max), std::llabs(w.d1min),
                      std::llabs(w.d1max)})
      r = std::max(r, v);
    std::vector<State> out;
    for (int64_t k = -2 * r - 2; k <= 2 * r + 2; ++k) {
      State s = state_at(k);
      auto [d0, d1] = state_degree(s);
      if (w.contains(d0, d1)) out.push_back(std::move(s));
    }
    return out;
  }

  State parse_state(const std::string& text) const override { return state_at(std::stoll(text)); }
  std::string state_str(const State& s) const override {
    auto k = decode(s);
    if (!k) throw Error(ErrorKind::InvalidState, "not a vector-family state");
    return std::to_string(*k);
  }

 protected:
  LWeightPair raw_psi() const override {
    LWeightPair w =
        weight_0(Monomial::q(-1)) * weight_1(Monomial::q() * Monomial::q1()).inverse();
    return c0_ ? w.swapped() : w;
  }
  std::shared_ptr<Family> clone() const override { return std::make_shared<VectorFamily>(*this); }

 private:
  int c0_;
};

// ---------------------------------------------------------------------------
// Fock family F_c: boxes (i,0,j), i,j >= 0, color i+j+c mod 2, all positive

class FockFamily final : public Family {
 public:
  explicit FockFamily(int color) : c0_(color & 1) {}

  std::string name() const override { return c0_ ? "fock1" : "fock0"; }
  nlohmann::json params_json() const override { return {{"color", c0_}}; }

  Box box_at(int64_t i, int64_t j) const {
    Box b;
    b.color = int8_t((i + j + c0_) % 2);
    b.coord = {si(i), si(0), si(j)};
    return b;
  }

  std::optional<std::vector<int64_t>> decode(const State& s) const {
    if (!s.minus.empty()) return std::nullopt;
    std::map<int64_t, std::set<int64_t>> rows;  // z -> xs
    for (const auto& b : s.plus) {
      int64_t i = b.coord.x.n, j = b.coord.z.n;
      if (i < 0 || j < 0 || b != box_at(i, j)) return std::nullopt;
      rows[j].insert(i);
    }
    // reuse the column decoder with (row index, member set)
    return decode_columns(rows);
  }

  State state_from_partition(const std::vector<int64_t>& parts) const {
    if (!weakly_decreasing_positive(parts))
      throw Error(ErrorKind::InvalidState, "not a partition");
    State s;
    for (size_t j = 0; j < parts.size(); ++j)
      for (int64_t i = 0; i < parts[j]; ++i) s.insert_plus(box_at(i, int64_t(j)));
    return s;
  }

  bool is_valid(const State& s) const override { return decode(s).has_value(); }

  std::vector<Box> move_candidates(const State& s) const override {
    auto parts = decode(s);
    if (!parts) throw Error(ErrorKind::InvalidState, "not a Fock state");
    std::vector<Box> out;
    for (size_t j = 0; j <= parts->size(); ++j) {
      int64_t len = j < parts->size() ? (*parts)[j] : 0;
      out.push_back(box_at(len, int64_t(j)));
      if (len > 0) out.push_back(box_at(len - 1, int64_t(j)));
    }
    return out;
  }

  State parse_state(const std::string& text) const override {
    return state_from_partition(parse_int_list(text));
  }
  std::string state_str(const State& s) const override {
    auto parts = decode(s);
    if (!parts) throw Error(ErrorKind::InvalidState, "not a Fock state");
    return int_list_str(*parts);
  }

 protected:
  LWeightPair raw_psi() const override {
    LWeightPair w = weight_0(Monomial::q(-1));
    return c0_ ? w.swapped() : w;
  }
  std::shared_ptr<Family> clone() const override { return std::make_shared<FockFamily>(*this); }

 private:
  int c0_;
};

// ---------------------------------------------------------------------------
// Macmahon family M_c^kappa: boxes (i,j,k) >= 0, color i+k+c mod 2

class MacmahonFamily : public Family {
 public:
  explicit MacmahonFamily(int color) : c0_(color & 1) {}

  std::string name() const override { return c0_ ? "macmahon1" : "macmahon0"; }
  nlohmann::json params_json() const override { return {{"color", c0_}}; }

  Box box_at(int64_t i, int64_t j, int64_t k) const {
    Box b;
    b.color = int8_t((i + k + c0_) % 2);
    b.coord = {si(i), si(j), si(k)};
    return b;
  }

  /// layers[j] = partition of layer j (row lengths along z)
  std::optional<std::vector<std::vector<int64_t>>> decode(const State& s) const {
    if (!s.minus.empty()) return std::nullopt;
    std::map<int64_t, std::map<int64_t, std::set<int64_t>>> layers;  // y -> z -> xs
    for (const auto& b : s.plus) {
      int64_t i = b.coord.x.n, j = b.coord.y.n, k = b.coord.z.n;
      if (i < 0 || j < 0 || k < 0 || b != box_at(i, j, k)) return std::nullopt;
      layers[j][k].insert(i);
    }
    std::vector<std::vector<int64_t>> out;
    if (layers.empty()) return out;
    int64_t maxj = layers.rbegin()->first;
    for (int64_t j = 0; j <= maxj; ++j) {
      auto it = layers.find(j);
      if (it == layers.end()) return std::nullopt;  // gap between layers
      auto rows = decode_columns(it->second);
      if (!rows || rows->empty()) return std::nullopt;
      out.push_back(std::move(*rows));
    }
    // containment of consecutive layers
    for (size_t j = 1; j < out.size(); ++j) {
      if (out[j].size() > out[j - 1].size()) return std::nullopt;
      for (size_t k = 0; k < out[j].size(); ++k)
        if (out[j][k] > out[j - 1][k]) return std::nullopt;
    }
    return out;
  }

  State state_from_layers(const std::vector<std::vector<int64_t>>& layers) const {
    State s;
    for (size_t j = 0; j < layers.size(); ++j) {
      if (!weakly_decreasing_positive(layers[j]))
        throw Error(ErrorKind::InvalidState, "layer is not a partition");
      for (size_t k = 0; k < layers[j].size(); ++k)
        for (int64_t i = 0; i < layers[j][k]; ++i)
          s.insert_plus(box_at(i, int64_t(j), int64_t(k)));
    }
    if (!is_valid(s)) throw Error(ErrorKind::InvalidState, "layers violate containment");
    return s;
  }

  bool is_valid(const State& s) const override { return decode(s).has_value(); }

  std::vector<Box> move_candidates(const State& s) const override {
    auto layers = decode(s);
    if (!layers) throw Error(ErrorKind::InvalidState, "not a plane partition");
    std::vector<Box> out;
    for (size_t j = 0; j <= layers->size(); ++j) {
      size_t nrows = j < layers->size() ? (*layers)[j].size() : 0;
      for (size_t k = 0; k <= nrows; ++k) {
        int64_t len = (j < layers->size() && k < nrows) ? (*layers)[j][k] : 0;
        out.push_back(box_at(len, int64_t(j), int64_t(k)));
        if (len > 0) out.push_back(box_at(len - 1, int64_t(j), int64_t(k)));
      }
    }
    return out;
  }

  State parse_state(const std::string& text) const override {
    std::vector<std::vector<int64_t>> layers;
    if (!text.empty() && text != "-")
      for (const auto& item : split(text, ';')) layers.push_back(parse_int_list(item));
    while (!layers.empty() && layers.back().empty()) layers.pop_back();
    return state_from_layers(layers);
  }
  std::string state_str(const State& s) const override {
    auto layers = decode(s);
    if (!layers) throw Error(ErrorKind::InvalidState, "not a plane partition");
    if (layers->empty()) return "-";
    std::ostringstream os;
    for (size_t j = 0; j < layers->size(); ++j) os << (j ? ";" : "") << int_list_str((*layers)[j]);
    return os.str();
  }

 protected:
  LWeightPair raw_psi() const override {
    // (z kappa - kappa^{-1})/(z - 1) = kappa (z - kappa^{-2})/(z - 1)
    LWeightPair w;
    w.c0 = FactoredRatZ::from_factors(1, Monomial::kappa(), {Monomial::kappa(-2)},
                                      {Monomial::one()});
    return c0_ ? w.swapped() : w;
  }
  std::shared_ptr<Family> clone() const override { return std::make_shared<MacmahonFamily>(*this); }

  int c0_;
};

// ---------------------------------------------------------------------------
// restricted Macmahon: plane partitions avoiding one white box, kappa pinned

class RestrictedMacmahonFamily final : public MacmahonFamily {
 public:
  RestrictedMacmahonFamily(int color, const Coord& prohibited, const Monomial& kappa)
      : MacmahonFamily(color), kappa_(kappa) {
    int64_t i = prohibited.x.n, j = prohibited.y.n, k = prohibited.z.n;
    if (prohibited.x.mu_mult || prohibited.x.nu_mult || prohibited.y.mu_mult ||
        prohibited.y.nu_mult || prohibited.z.mu_mult || prohibited.z.nu_mult || i < 0 || j < 0 ||
        k < 0)
      throw Error(ErrorKind::InvalidProhibitedBox, "prohibited box must have integer coords >= 0");
    prohibited_ = box_at(i, j, k);
    if (prohibited_.color != 0)
      throw Error(ErrorKind::InvalidProhibitedBox, "prohibited box must be white");
    if (std::min({i, j, k}) >= 1)
      throw Error(ErrorKind::InvalidProhibitedBox, "prohibited box needs min{i,j,k} < 1");
    if (!(kappa_.pow(2) * position(prohibited_)).is_one())
      throw Error(ErrorKind::InvalidProhibitedBox, "kappa^2 must equal p(box)^{-1}");
  }

  std::string name() const override { return "restricted-macmahon"; }
  nlohmann::json params_json() const override {
    return {{"color", c0_},
            {"prohibited",
             {prohibited_.coord.x.n, prohibited_.coord.y.n, prohibited_.coord.z.n}},
            {"kappa", kappa_.str()}};
  }

  bool is_valid(const State& s) const override {
    return MacmahonFamily::is_valid(s) && !s.contains_plus(prohibited_);
  }

  const Box& prohibited() const { return prohibited_; }
  const Monomial& kappa() const { return kappa_; }

 protected:
  LWeightPair raw_psi() const override {
    Substitution s;
    s.images[4] = kappa_;
    return MacmahonFamily::raw_psi().specialized(s);
  }
  std::shared_ptr<Family> clone() const override {
    return std::make_shared<RestrictedMacmahonFamily>(*this);
  }

 private:
  Box prohibited_;
  Monomial kappa_;
};

// ---------------------------------------------------------------------------
// evaluation Verma G_0^mu: two vertical partitions, pedestal lifted by mu

class EvalVermaFamily final : public Family {
 public:
  explicit EvalVermaFamily(int color) : c0_(color & 1) {}

  std::string name() const override { return c0_ ? "verma1" : "verma0"; }
  nlohmann::json params_json() const override { return {{"color", c0_}}; }

  // group 0: (i,k,1), color i+1+c; group 1: (i,k+mu,0), color i+c
  Box bottom_box(int64_t i, int64_t k) const {
    Box b;
    b.color = int8_t((i + 1 + c0_) % 2);
    b.coord = {si(i), si(k), si(1)};
    b.group = 0;
    return b;
  }
  Box pedestal_box(int64_t i, int64_t k) const {
    Box b;
    b.color = int8_t((i + c0_) % 2);
    b.coord = {si(i), si(k, 1, 0), si(0)};
    b.group = 1;
    return b;
  }

  std::vector<int> group_ranks() const override { return {1, 0}; }  // z=1 group is larger

  struct Decoded {
    std::vector<int64_t> bottom, pedestal;  // column heights
  };
  std::optional<Decoded> decode(const State& s) const {
    if (!s.minus.empty()) return std::nullopt;
    std::map<int64_t, std::set<int64_t>> cols[2];
    for (const auto& b : s.plus) {
      int64_t i = b.coord.x.n, k = b.coord.y.n;
      if (i < 0 || k < 0) return std::nullopt;
      if (b.group == 0 && b == bottom_box(i, k))
        cols[0][i].insert(k);
      else if (b.group == 1 && b == pedestal_box(i, k))
        cols[1][i].insert(k);
      else
        return std::nullopt;
    }
    auto hb = decode_columns(cols[0]), hp = decode_columns(cols[1]);
    if (!hb || !hp) return std::nullopt;
    return Decoded{*hb, *hp};
  }

  State state_from(const Decoded& d) const {
    State s;
    for (size_t i = 0; i < d.bottom.size(); ++i)
      for (int64_t k = 0; k < d.bottom[i]; ++k) s.insert_plus(bottom_box(int64_t(i), k));
    for (size_t i = 0; i < d.pedestal.size(); ++i)
      for (int64_t k = 0; k < d.pedestal[i]; ++k) s.insert_plus(pedestal_box(int64_t(i), k));
    if (!is_valid(s)) throw Error(ErrorKind::InvalidState, "not vertical partitions");
    return s;
  }

  bool is_valid(const State& s) const override { return decode(s).has_value(); }

  std::vector<Box> move_candidates(const State& s) const override {
    auto d = decode(s);
    if (!d) throw Error(ErrorKind::InvalidState, "not a Verma state");
    std::vector<Box> out;
    for (size_t i = 0; i <= d->bottom.size(); ++i) {
      int64_t h = i < d->bottom.size() ? d->bottom[i] : 0;
      out.push_back(bottom_box(int64_t(i), h));
      if (h > 0) out.push_back(bottom_box(int64_t(i), h - 1));
    }
    for (size_t i = 0; i <= d->pedestal.size(); ++i) {
      int64_t h = i < d->pedestal.size() ? d->pedestal[i] : 0;
      out.push_back(pedestal_box(int64_t(i), h));
      if (h > 0) out.push_back(pedestal_box(int64_t(i), h - 1));
    }
    return out;
  }

  State parse_state(const std::string& text) const override {
    auto parts = split(text, '|');
    if (parts.size() != 2)
      throw Error(ErrorKind::ConfigError, "verma state format: bottom|pedestal");
    Decoded d{parse_int_list(parts[0]), parse_int_list(parts[1])};
    return state_from(d);
  }
  std::string state_str(const State& s) const override {
    auto d = decode(s);
    if (!d) throw Error(ErrorKind::InvalidState, "not a Verma state");
    return int_list_str(d->bottom) + "|" + int_list_str(d->pedestal);
  }

 protected:
  LWeightPair raw_psi() const override {
    // ( q3 q^{-mu} (z - q3^{-2})/(z - q2^{-mu}),
    //   q^{mu} (z - q3^{-1} q2^{-mu})/(z - q3^{-1}) )
    LWeightPair w;
    w.c0 = FactoredRatZ::from_factors(1, Monomial::q3() * Monomial::u(), {Monomial::q3(-2)},
                                      {Monomial::u(2)});
    w.c1 = FactoredRatZ::from_factors(1, Monomial::u(-1), {Monomial::q3(-1) * Monomial::u(2)},
                                      {Monomial::q3(-1)});
    return c0_ ? w.swapped() : w;
  }
  std::shared_ptr<Family> clone() const override { return std::make_shared<EvalVermaFamily>(*this); }

 private:
  int c0_;
};

// ---------------------------------------------------------------------------
// relaxed Verma G_0^{mu,nu}: pedestal shifted right, tower over (0,mu+nu,0)

class RelaxedVermaFamily final : public Family {
 public:
  RelaxedVermaFamily() = default;

  std::string name() const override { return "relaxed"; }

  Box bottom_box(int64_t i, int64_t k) const {
    Box b;
    b.color = int8_t((i + 1) % 2);
    b.coord = {si(i), si(k), si(1)};
    b.group = 0;
    return b;
  }
  Box pedestal_box(int64_t i, int64_t k) const {  // x = i+1
    Box b;
    b.color = int8_t((i + 1) % 2);
    b.coord = {si(i + 1), si(k, 1, 0), si(0)};
    b.group = 1;
    return b;
  }
  Box tower_box(int64_t t) const {  // y = mu + nu + t
    Box b;
    b.color = 0;
    b.sign = t < 0 ? BoxSign::negative : BoxSign::positive;
    b.coord = {si(0), si(t, 1, 1), si(0)};
    b.group = 2;
    return b;
  }

  std::vector<int> group_ranks() const override { return {0, 1, 2}; }  // tower > pedestal > bottom

  struct Decoded {
    std::vector<int64_t> bottom, pedestal;
    int64_t tower = 0;
  };
  std::optional<Decoded> decode(const State& s) const {
    std::map<int64_t, std::set<int64_t>> cols[2];
    std::set<int64_t> tplus, tminus;
    for (const auto& b : s.plus) {
      int64_t x = b.coord.x.n, k = b.coord.y.n;
      if (b.group == 0 && x >= 0 && k >= 0 && b == bottom_box(x, k))
        cols[0][x].insert(k);
      else if (b.group == 1 && x >= 1 && k >= 0 && b == pedestal_box(x - 1, k))
        cols[1][x - 1].insert(k);
      else if (b.group == 2 && k >= 0 && b == tower_box(k))
        tplus.insert(k);
      else
        return std::nullopt;
    }
    for (const auto& b : s.minus) {
      int64_t k = b.coord.y.n;
      if (b.group == 2 && k < 0 && b == tower_box(k))
        tminus.insert(k);
      else
        return std::nullopt;
    }
    auto hb = decode_columns(cols[0]), hp = decode_columns(cols[1]);
    auto t = decode_signed_column(tplus, tminus);
    if (!hb || !hp || !t) return std::nullopt;
    return Decoded{*hb, *hp, *t};
  }

  State state_from(const Decoded& d) const {
    State s;
    for (size_t i = 0; i < d.bottom.size(); ++i)
      for (int64_t k = 0; k < d.bottom[i]; ++k) s.insert_plus(bottom_box(int64_t(i), k));
    for (size_t i = 0; i < d.pedestal.size(); ++i)
      for (int64_t k = 0; k < d.pedestal[i]; ++k) s.insert_plus(pedestal_box(int64_t(i), k));
    for (int64_t t = 0; t < d.tower; ++t) s.insert_plus(tower_box(t));
    for (int64_t t = -1; t >= d.tower; --t) s.insert_minus(tower_box(t));
    if (!is_valid(s)) throw Error(ErrorKind::InvalidState, "bad relaxed state");
    return s;
  }

  bool is_valid(const State& s) const override { return decode(s).has_value(); }

  std::vector<Box> move_candidates(const State& s) const override {
    auto d = decode(s);
    if (!d) throw Error(ErrorKind::InvalidState, "not a relaxed state");
    std::vector<Box> out;
    for (size_t i = 0; i <= d->bottom.size(); ++i) {
      int64_t h = i < d->bottom.size() ? d->bottom[i] : 0;
      out.push_back(bottom_box(int64_t(i), h));
      if (h > 0) out.push_back(bottom_box(int64_t(i), h - 1));
    }
    for (size_t i = 0; i <= d->pedestal.size(); ++i) {
      int64_t h = i < d->pedestal.size() ? d->pedestal[i] : 0;
      out.push_back(pedestal_box(int64_t(i), h));
      if (h > 0) out.push_back(pedestal_box(int64_t(i), h - 1));
    }
    out.push_back(tower_box(d->tower));
    out.push_back(tower_box(d->tower - 1));
    return out;
  }

  std::vector<State> window_states(const WindowBounds& w) const override {
    // colors alternate along columns starting at color 1 in both groups,
    // so each partition has c0 <= c1 and d1 bounds the partition content
    int64_t c1max = std::max<int64_t>(0, w.d1max);
    std::vector<std::vector<int64_t>> parts;
    partitions_up_to(2 * c1max, parts);
    std::vector<State> out;
    for (const auto& pb : parts)
      for (const auto& pp : parts) {
        Decoded d{pb, pp, 0};
        State base = state_from(d);
        auto [b0, b1] = state_degree(base);
        if (b1 > w.d1max || b1 < w.d1min) continue;
        for (int64_t t = w.d0min - b0; t <= w.d0max - b0; ++t) {
          Decoded dt{pb, pp, t};
          State s = state_from(dt);
          auto [d0, d1] = state_degree(s);
          if (w.contains(d0, d1)) out.push_back(std::move(s));
        }
      }
    return out;
  }

  std::map<std::pair<int64_t, int64_t>, int64_t> window_counts(
      const WindowBounds& w) const override {
    // counts factor through partition-pair bidegree bins; the tower value is
    // then determined per cell (exactly one k for each d0)
    int64_t c1max = std::max<int64_t>(0, w.d1max);
    std::vector<std::vector<int64_t>> parts;
    partitions_up_to(2 * c1max, parts);
    std::map<std::pair<int64_t, int64_t>, int64_t> single, pairbin;
    for (const auto& p : parts) {
      auto bd = alternating_column_bidegree(p);
      if (bd.second <= c1max) ++single[bd];
    }
    for (const auto& [ba, ca] : single)
      for (const auto& [bb, cb] : single)
        pairbin[{ba.first + bb.first, ba.second + bb.second}] += ca * cb;
    std::map<std::pair<int64_t, int64_t>, int64_t> counts;
    for (int64_t d0 = w.d0min; d0 <= w.d0max; ++d0)
      for (int64_t d1 = w.d1min; d1 <= w.d1max; ++d1) {
        int64_t n = 0;
        for (const auto& [bd, c] : pairbin)
          if (bd.second == d1) n += c;  // k = d0 - c0 is unique
        if (n) counts[{d0, d1}] = n;
      }
    return counts;
  }

  State parse_state(const std::string& text) const override {
    auto parts = split(text, '|');
    if (parts.size() != 3)
      throw Error(ErrorKind::ConfigError, "relaxed state format: bottom|pedestal|k");
    Decoded d{parse_int_list(parts[0]), parse_int_list(parts[1]), std::stoll(parts[2])};
    return state_from(d);
  }
  std::string state_str(const State& s) const override {
    auto d = decode(s);
    if (!d) throw Error(ErrorKind::InvalidState, "not a relaxed state");
    return int_list_str(d->bottom) + "|" + int_list_str(d->pedestal) + "|" +
           std::to_string(d->tower);
  }

 protected:
  LWeightPair raw_psi() const override {
    // ( q3 q^{-mu-2nu} (z-q3^{-2})(z-q2^{-mu+1}) / ((z-q2^{-mu-nu})(z-q2^{-mu-nu+1})),
    //   q^{mu+2nu} (z-q3^{-1}q2^{-mu-nu})(z-q1^{-1}q2^{-mu-nu}) / ((z-q3^{-1})(z-q1^{-1}q2^{-mu})) )
    Monomial u2 = Monomial::u(2), uv2 = Monomial::u(2) * Monomial::v(2);
    LWeightPair w;
    w.c0 = FactoredRatZ::from_factors(
        1, Monomial::q3() * Monomial::u() * Monomial::v(2),
        {Monomial::q3(-2), Monomial::q2() * u2}, {uv2, Monomial::q2() * uv2});
    w.c1 = FactoredRatZ::from_factors(
        1, Monomial::u(-1) * Monomial::v(-2),
        {Monomial::q3(-1) * uv2, Monomial::q1(-1) * uv2},
        {Monomial::q3(-1), Monomial::q1(-1) * u2});
    return w;
  }
  std::shared_ptr<Family> clone() const override {
    return std::make_shared<RelaxedVermaFamily>(*this);
  }
};

// ---------------------------------------------------------------------------
// slanted relaxed Verma G_{0,m}^{mu,nu}: staircase tower of 2m+1 columns

class SlantedFamily final : public Family {
 public:
  explicit SlantedFamily(int m) : m_(m) {
    if (m < 1) throw Error(ErrorKind::InvalidSlope, "slope m must be >= 1");
  }

  std::string name() const override { return "slanted"; }
  nlohmann::json params_json() const override { return {{"m", m_}}; }
  int slope() const { return m_; }

  Box bottom_box(int64_t i, int64_t k) const {
    Box b;
    b.color = int8_t((i + 1) % 2);
    b.coord = {si(i), si(k), si(1)};
    b.group = 0;
    return b;
  }
  Box pedestal_box(int64_t i, int64_t k) const {
    Box b;
    b.color = int8_t((i + 1) % 2);
    b.coord = {si(i + 1), si(k, 1, 0), si(0)};
    b.group = 1;
    return b;
  }
  Box white_box(int64_t s, int64_t t) const {  // column s of the staircase
    Box b;
    b.color = 0;
    b.sign = t < 0 ? BoxSign::negative : BoxSign::positive;
    b.coord = {si(-s), si(t, 1, 1), si(s)};
    b.group = 2;
    return b;
  }
  Box black_box(int64_t s, int64_t t) const {
    Box b;
    b.color = 1;
    b.sign = t < 0 ? BoxSign::negative : BoxSign::positive;
    b.coord = {si(-1 - s), si(t, 1, 1), si(s)};
    b.group = 2;
    return b;
  }

  std::vector<int> group_ranks() const override { return {0, 1, 2}; }

  struct Decoded {
    std::vector<int64_t> bottom, pedestal;
    std::vector<int64_t> a, b;  // white heights (m+1), black heights (m)
  };

  std::optional<Decoded> decode(const State& s) const {
    std::map<int64_t, std::set<int64_t>> cols[2];
    std::map<int64_t, std::set<int64_t>> wplus, wminus, bplus, bminus;  // keyed by column s
    auto classify = [&](const Box& b, bool neg) -> bool {
      int64_t t = b.coord.y.n;
      if (b.group == 2) {
        int64_t st = b.coord.z.n;
        if (st < 0) return false;
        if ((neg && t >= 0) || (!neg && t < 0)) return false;
        if (st <= m_ && b == white_box(st, t)) {
          (neg ? wminus : wplus)[st].insert(t);
          return true;
        }
        if (st <= m_ - 1 && b == black_box(st, t)) {
          (neg ? bminus : bplus)[st].insert(t);
          return true;
        }
        return false;
      }
      if (neg) return false;
      int64_t x = b.coord.x.n;
      if (b.group == 0 && x >= 0 && t >= 0 && b == bottom_box(x, t)) {
        cols[0][x].insert(t);
        return true;
      }
      if (b.group == 1 && x >= 1 && t >= 0 && b == pedestal_box(x - 1, t)) {
        cols[1][x - 1].insert(t);
        return true;
      }
      return false;
    };
    for (const auto& b : s.plus)
      if (!classify(b, false)) return std::nullopt;
    for (const auto& b : s.minus)
      if (!classify(b, true)) return std::nullopt;
    auto hb = decode_columns(cols[0]), hp = decode_columns(cols[1]);
    if (!hb || !hp) return std::nullopt;
    Decoded d{*hb, *hp, {}, {}};
    for (int64_t st = 0; st <= m_; ++st) {
      auto v = decode_signed_column(wplus[st], wminus[st]);
      if (!v) return std::nullopt;
      d.a.push_back(*v);
    }
    for (int64_t st = 0; st < m_; ++st) {
      auto v = decode_signed_column(bplus[st], bminus[st]);
      if (!v) return std::nullopt;
      d.b.push_back(*v);
    }
    for (int64_t st = 0; st < m_; ++st)
      if (d.b[st] < d.a[st] || d.b[st] < d.a[st + 1]) return std::nullopt;
    return d;
  }

  State state_from(const Decoded& d) const {
    State s;
    for (size_t i = 0; i < d.bottom.size(); ++i)
      for (int64_t k = 0; k < d.bottom[i]; ++k) s.insert_plus(bottom_box(int64_t(i), k));
    for (size_t i = 0; i < d.pedestal.size(); ++i)
      for (int64_t k = 0; k < d.pedestal[i]; ++k) s.insert_plus(pedestal_box(int64_t(i), k));
    auto add_column = [&](bool white, int64_t st, int64_t v) {
      for (int64_t t = 0; t < v; ++t)
        s.insert_plus(white ? white_box(st, t) : black_box(st, t));
      for (int64_t t = -1; t >= v; --t)
        s.insert_minus(white ? white_box(st, t) : black_box(st, t));
    };
    for (int64_t st = 0; st <= m_; ++st) add_column(true, st, d.a[st]);
    for (int64_t st = 0; st < m_; ++st) add_column(false, st, d.b[st]);
    if (!is_valid(s)) throw Error(ErrorKind::ConstraintViolated, "tower violates b_s >= a_s, a_{s+1}");
    return s;
  }

  bool is_valid(const State& s) const override { return decode(s).has_value(); }

  std::vector<Box> move_candidates(const State& s) const override {
    auto d = decode(s);
    if (!d) throw Error(ErrorKind::InvalidState, "not a slanted state");
    std::vector<Box> out;
    for (size_t i = 0; i <= d->bottom.size(); ++i) {
      int64_t h = i < d->bottom.size() ? d->bottom[i] : 0;
      out.push_back(bottom_box(int64_t(i), h));
      if (h > 0) out.push_back(bottom_box(int64_t(i), h - 1));
    }
    for (size_t i = 0; i <= d->pedestal.size(); ++i) {
      int64_t h = i < d->pedestal.size() ? d->pedestal[i] : 0;
      out.push_back(pedestal_box(int64_t(i), h));
      if (h > 0) out.push_back(pedestal_box(int64_t(i), h - 1));
    }
    for (int64_t st = 0; st <= m_; ++st) {
      out.push_back(white_box(st, d->a[st]));
      out.push_back(white_box(st, d->a[st] - 1));
    }
    for (int64_t st = 0; st < m_; ++st) {
      out.push_back(black_box(st, d->b[st]));
      out.push_back(black_box(st, d->b[st] - 1));
    }
    return out;
  }

  /// Towers compatible with the window, flattened to a0..am,b0..bm-1.
  /// Bounds: with D = Sum(b)-Sum(a) one has a_j, b_j >= -D (from the telescoped
  /// constraint sums), D <= d1-d0 since partition pairs have c0 <= c1, and
  /// Sum(a) <= d0, Sum(b) <= d1 since partition contents are nonnegative.
  std::vector<std::vector<int64_t>> window_towers(const WindowBounds& w) const {
    int64_t dplus = std::max<int64_t>(0, w.d1max - w.d0min);
    int64_t lo = -dplus;
    int64_t hi = std::max(std::max<int64_t>(0, w.d0max) + m_ * dplus,
                          std::max<int64_t>(0, w.d1max) + std::max(0, m_ - 1) * dplus);
    std::vector<std::vector<int64_t>> towers;
    std::vector<int64_t> a(m_ + 1), b(m_);
    auto rec = [&](auto&& self, int64_t s) -> void {
      if (s == m_) {
        for (int64_t am = lo; am <= std::min(hi, b[m_ - 1]); ++am) {
          a[m_] = am;
          std::vector<int64_t> flat = a;
          flat.insert(flat.end(), b.begin(), b.end());
          towers.push_back(flat);
        }
        return;
      }
      for (int64_t as = lo; as <= hi; ++as) {
        if (s > 0 && as > b[s - 1]) continue;
        a[s] = as;
        for (int64_t bs = std::max(as, lo); bs <= hi; ++bs) {
          b[s] = bs;
          self(self, s + 1);
        }
      }
    };
    rec(rec, 0);
    return towers;
  }

  std::vector<State> window_states(const WindowBounds& w) const override {
    int64_t dplus = std::max<int64_t>(0, w.d1max - w.d0min);
    int64_t c1max = std::max<int64_t>(0, w.d1max) + m_ * dplus;
    std::vector<std::vector<int64_t>> parts;
    partitions_up_to(2 * c1max, parts);
    std::vector<std::vector<int64_t>> towers = window_towers(w);

    std::vector<State> out;
    for (const auto& pb : parts)
      for (const auto& pp : parts) {
        auto b0 = alternating_column_bidegree(pb), b1 = alternating_column_bidegree(pp);
        int64_t pd0 = b0.first + b1.first, pd1 = b0.second + b1.second;
        for (const auto& tw : towers) {
          int64_t ta = 0, tb = 0;
          for (int i = 0; i <= m_; ++i) ta += tw[i];
          for (int i = 0; i < m_; ++i) tb += tw[m_ + 1 + i];
          int64_t d0 = pd0 + ta, d1 = pd1 + tb;
          if (!w.contains(d0, d1)) continue;
          Decoded d{pb, pp,
                    std::vector<int64_t>(tw.begin(), tw.begin() + m_ + 1),
                    std::vector<int64_t>(tw.begin() + m_ + 1, tw.end())};
          out.push_back(state_from(d));
        }
      }
    return out;
  }

  std::map<std::pair<int64_t, int64_t>, int64_t> window_counts(
      const WindowBounds& w) const override {
    int64_t dplus = std::max<int64_t>(0, w.d1max - w.d0min);
    int64_t c1max = std::max<int64_t>(0, w.d1max) + m_ * dplus;
    std::vector<std::vector<int64_t>> parts;
    partitions_up_to(2 * c1max, parts);
    std::map<std::pair<int64_t, int64_t>, int64_t> single, pairbin, towerbin;
    for (const auto& p : parts) {
      auto bd = alternating_column_bidegree(p);
      if (bd.second <= c1max) ++single[bd];
    }
    for (const auto& [ba, ca] : single)
      for (const auto& [bb, cb] : single)
        pairbin[{ba.first + bb.first, ba.second + bb.second}] += ca * cb;
    for (const auto& tw : window_towers(w)) {
      int64_t ta = 0, tb = 0;
      for (int i = 0; i <= m_; ++i) ta += tw[i];
      for (int i = 0; i < m_; ++i) tb += tw[m_ + 1 + i];
      ++towerbin[{ta, tb}];
    }
    std::map<std::pair<int64_t, int64_t>, int64_t> counts;
    for (const auto& [pd, pc] : pairbin)
      for (const auto& [td, tc] : towerbin) {
        int64_t d0 = pd.first + td.first, d1 = pd.second + td.second;
        if (w.contains(d0, d1)) counts[{d0, d1}] += pc * tc;
      }
    return counts;
  }

  State parse_state(const std::string& text) const override {
    auto parts = split(text, '|');
    if (parts.size() != 4)
      throw Error(ErrorKind::ConfigError, "slanted state format: bottom|pedestal|a0,..,am|b0,..");
    Decoded d{parse_int_list(parts[0]), parse_int_list(parts[1]), parse_int_list(parts[2]),
              parse_int_list(parts[3])};
    if (int64_t(d.a.size()) != m_ + 1 || int64_t(d.b.size()) != m_)
      throw Error(ErrorKind::ConfigError, "tower needs m+1 white and m black entries");
    return state_from(d);
  }
  std::string state_str(const State& s) const override {
    auto d = decode(s);
    if (!d) throw Error(ErrorKind::InvalidState, "not a slanted state");
    return int_list_str(d->bottom) + "|" + int_list_str(d->pedestal) + "|" +
           int_list_str(d->a) + "|" + int_list_str(d->b);
  }

 protected:
  LWeightPair raw_psi() const override {
    Monomial u2 = Monomial::u(2), uv2 = Monomial::u(2) * Monomial::v(2);
    std::vector<Monomial> z0 = {Monomial::q3(-2), Monomial::q1(-1) * Monomial::q3(-1) * u2};
    for (int i = 1; i <= m_ - 1; ++i) z0.push_back(uv2 * Monomial::q1(i) * Monomial::q3(-i));
    std::vector<Monomial> p0;
    for (int i = 0; i <= m_; ++i)
      p0.push_back(uv2 * Monomial::q2() * Monomial::q1(i) * Monomial::q3(-i));
    std::vector<Monomial> z1;
    for (int i = 0; i <= m_ + 1; ++i)
      z1.push_back(Monomial::q1(i - 1) * Monomial::q3(-i) * uv2);
    std::vector<Monomial> p1 = {Monomial::q3(-1), Monomial::q1(-1) * u2};
    for (int i = 0; i <= m_ - 1; ++i)
      p1.push_back(Monomial::q1(i + 1) * Monomial::q3(-i) * uv2);
    LWeightPair w;
    w.c0 = FactoredRatZ::from_factors(
        1, Monomial::u() * Monomial::v(2) * Monomial::q3(-(m_ - 1)), std::move(z0), std::move(p0));
    w.c1 = FactoredRatZ::from_factors(
        1, Monomial::u(-1) * Monomial::v(-2) * Monomial::q3(m_), std::move(z1), std::move(p1));
    return w;
  }
  std::shared_ptr<Family> clone() const override { return std::make_shared<SlantedFamily>(*this); }

 private:
  int m_;
};

// ---------------------------------------------------------------------------
// custom whitelist family (negative tests)

class CustomFamily final : public Family {
 public:
  CustomFamily(std::string name, LWeightPair psi, std::vector<Box> universe)
      : name_(std::move(name)), psi_(std::move(psi)), universe_(std::move(universe)) {
    std::sort(universe_.begin(), universe_.end());
  }

  std::string name() const override { return name_; }

  bool is_valid(const State& s) const override {
    for (const auto& b : s.plus)
      if (b.negative() || !std::binary_search(universe_.begin(), universe_.end(), b)) return false;
    for (const auto& b : s.minus)
      if (!b.negative() || !std::binary_search(universe_.begin(), universe_.end(), b)) return false;
    return true;
  }

  std::vector<Box> move_candidates(const State&) const override { return universe_; }

 protected:
  LWeightPair raw_psi() const override { return psi_; }
  std::shared_ptr<Family> clone() const override { return std::make_shared<CustomFamily>(*this); }

 private:
  std::string name_;
  LWeightPair psi_;
  std::vector<Box> universe_;
};

// ---------------------------------------------------------------------------

FamilySpec make_vector(int color) { return std::make_shared<VectorFamily>(color); }
FamilySpec make_fock(int color) { return std::make_shared<FockFamily>(color); }
FamilySpec make_macmahon(int color) { return std::make_shared<MacmahonFamily>(color); }

FamilySpec make_restricted_macmahon(int color, const Coord& prohibited, const Monomial& kappa) {
  return std::make_shared<RestrictedMacmahonFamily>(color, prohibited, kappa);
}

FamilySpec make_g0() {
  Coord c{si(0), si(0), si(2)};
  return make_restricted_macmahon(0, c, Monomial::q3());
}

FamilySpec make_fock_as_restricted() {
  Coord c{si(0), si(1), si(0)};
  return make_restricted_macmahon(0, c, Monomial::q());
}

FamilySpec make_eval_verma(int color) { return std::make_shared<EvalVermaFamily>(color); }
FamilySpec make_relaxed_verma() { return std::make_shared<RelaxedVermaFamily>(); }
FamilySpec make_slanted(int m) { return std::make_shared<SlantedFamily>(m); }

FamilySpec make_custom(std::string name, LWeightPair psi, std::vector<Box> universe) {
  return std::make_shared<CustomFamily>(std::move(name), std::move(psi), std::move(universe));
}

FamilySpec make_broken_layers() {
  // box (1,0,1) sits with no support; its l-weight doubles the Psi pole at 1
  MacmahonFamily proto(0);
  std::vector<Box> universe = {proto.box_at(0, 0, 0), proto.box_at(1, 0, 1)};
  return make_custom("broken-layers", proto.psi(), std::move(universe));
}

FamilySpec shift_twist(const FamilySpec& f, const Monomial& a) { return f->with_shift(a); }

FamilySpec specialize_family(const FamilySpec& f, const Substitution& s) {
  return f->with_substitution(s);
}

FamilySpec family_by_name(const std::string& name, int color, int m) {
  if (name == "vector") return make_vector(color);
  if (name == "fock") return make_fock(color);
  if (name == "macmahon") return make_macmahon(color);
  if (name == "g0") return make_g0();
  if (name == "fock-restricted") return make_fock_as_restricted();
  if (name == "verma") return make_eval_verma(color);
  if (name == "relaxed") return make_relaxed_verma();
  if (name == "slanted") return make_slanted(m);
  if (name == "broken-layers") return make_broken_layers();
  throw Error(ErrorKind::ConfigError, "unknown family '" + name + "'");
}

int box_order(const Family& f, const Box& a, const Box& b) {
  return compare_boxes(a, b, f.group_ranks());
}

std::vector<Box> Moves::all_concave() const {
  std::vector<Box> out = concave[0];
  out.insert(out.end(), concave[1].begin(), concave[1].end());
  std::sort(out.begin(), out.end());
  return out;
}
std::vector<Box> Moves::all_convex() const {
  std::vector<Box> out = convex[0];
  out.insert(out.end(), convex[1].begin(), convex[1].end());
  std::sort(out.begin(), out.end());
  return out;
}

Moves concave_convex(const Family& f, const State& s) {
  if (!f.is_valid(s)) throw Error(ErrorKind::InvalidState, "invalid state: " + s.key());
  std::vector<Box> cands = f.move_candidates(s);
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  Moves mv;
  for (const auto& b : cands) {
    bool in_state = b.negative() ? s.contains_minus(b) : s.contains_plus(b);
    if (b.negative() ? in_state : !in_state) {
      if (f.is_valid(with_box_added(s, b))) mv.concave[b.color & 1].push_back(b);
    }
    if (b.negative() ? !in_state : in_state) {
      if (f.is_valid(with_box_removed(s, b))) mv.convex[b.color & 1].push_back(b);
    }
  }
  return mv;
}

std::vector<State> enumerate_states(const Family& f, int bound) {
  std::map<std::string, State> seen;
  std::vector<State> frontier = {f.reference()};
  seen.emplace(frontier[0].key(), frontier[0]);
  for (int step = 0; step < bound; ++step) {
    std::vector<State> next;
    for (const auto& s : frontier) {
      Moves mv = concave_convex(f, s);
      auto visit = [&](const State& t) {
        auto [it, fresh] = seen.emplace(t.key(), t);
        if (fresh) next.push_back(t);
      };
      for (int c = 0; c < 2; ++c) {
        for (const auto& b : mv.concave[c]) visit(with_box_added(s, b));
        for (const auto& b : mv.convex[c]) visit(with_box_removed(s, b));
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  std::vector<State> out;
  out.reserve(seen.size());
  for (auto& [k, s] : seen) out.push_back(std::move(s));
  std::sort(out.begin(), out.end(), [](const State& a, const State& b) {
    auto [a0, a1] = state_degree(a);
    auto [b0, b1] = state_degree(b);
    if (a0 + a1 != b0 + b1) return a0 + a1 < b0 + b1;
    if (a0 != b0) return a0 < b0;
    return a.key() < b.key();
  });
  return out;
}

FactoredValue family_level(const Family& f) {
  LWeightPair psi = f.psi();
  return psi.c0.value_at_infinity() * psi.c1.value_at_infinity();
}

}  // namespace qtgl2

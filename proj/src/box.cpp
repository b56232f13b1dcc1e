#include "qtgl2/box.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qtgl2 {

std::string ShiftedInt::str() const {
  std::ostringstream os;
  os << n;
  if (mu_mult) os << (mu_mult > 0 ? "+" : "") << mu_mult << "mu";
  if (nu_mult) os << (nu_mult > 0 ? "+" : "") << nu_mult << "nu";
  return os.str();
}

std::string Coord::str() const {
  return "(" + x.str() + "," + y.str() + "," + z.str() + ")";
}

std::string Box::str() const {
  std::ostringstream os;
  os << (sign == BoxSign::negative ? "-" : "+") << "c" << int(color) << coord.str();
  return os.str();
}

nlohmann::json Box::to_json() const {
  auto si = [](const ShiftedInt& s) {
    return nlohmann::json::array({s.n, s.mu_mult, s.nu_mult});
  };
  return {{"color", int(color)},
          {"sign", sign == BoxSign::negative ? "negative" : "positive"},
          {"x", si(coord.x)},
          {"y", si(coord.y)},
          {"z", si(coord.z)},
          {"group", int(group)}};
}

Monomial position(const Box& b) {
  const Coord& c = b.coord;
  if (c.x.mu_mult || c.x.nu_mult || c.z.mu_mult || c.z.nu_mult)
    throw Error(ErrorKind::InvalidState, "x and z coordinates must be integers");
  Monomial p = Monomial::q1(-c.x.n) * Monomial::q2(-c.y.n) * Monomial::q3(-c.z.n);
  // q2^{-mu} = u^2, q2^{-nu} = v^2
  p *= Monomial::u(2 * c.y.mu_mult) * Monomial::v(2 * c.y.nu_mult);
  return p;
}

bool State::contains_plus(const Box& b) const {
  return std::binary_search(plus.begin(), plus.end(), b);
}
bool State::contains_minus(const Box& b) const {
  return std::binary_search(minus.begin(), minus.end(), b);
}
void State::insert_plus(const Box& b) {
  plus.insert(std::upper_bound(plus.begin(), plus.end(), b), b);
}
void State::insert_minus(const Box& b) {
  minus.insert(std::upper_bound(minus.begin(), minus.end(), b), b);
}
void State::erase_plus(const Box& b) {
  auto it = std::lower_bound(plus.begin(), plus.end(), b);
  if (it != plus.end() && *it == b) plus.erase(it);
}
void State::erase_minus(const Box& b) {
  auto it = std::lower_bound(minus.begin(), minus.end(), b);
  if (it != minus.end() && *it == b) minus.erase(it);
}

std::string State::key() const {
  std::ostringstream os;
  for (const auto& b : plus) os << b.str();
  os << "|";
  for (const auto& b : minus) os << b.str();
  return os.str();
}

nlohmann::json State::to_json() const {
  nlohmann::json p = nlohmann::json::array(), m = nlohmann::json::array();
  for (const auto& b : plus) p.push_back(b.to_json());
  for (const auto& b : minus) m.push_back(b.to_json());
  return {{"plus", p}, {"minus", m}};
}

namespace {
int cmp_shifted(const ShiftedInt& a, const ShiftedInt& b) {
  if (a.mu_mult != b.mu_mult || a.nu_mult != b.nu_mult) {
    // not integer-related; caller resolves via group rank first
    if (a.mu_mult != b.mu_mult) return a.mu_mult < b.mu_mult ? -1 : 1;
    return a.nu_mult < b.nu_mult ? -1 : 1;
  }
  if (a.n != b.n) return a.n < b.n ? -1 : 1;
  return 0;
}
}  // namespace

int compare_boxes(const Box& a, const Box& b, const std::vector<int>& group_rank) {
  if (a == b) return 0;
  bool an = a.negative(), bn = b.negative();
  if (an != bn) return an ? -1 : 1;
  int ra = a.group < int(group_rank.size()) ? group_rank[a.group] : a.group;
  int rb = b.group < int(group_rank.size()) ? group_rank[b.group] : b.group;
  if (ra != rb) return ra < rb ? -1 : 1;
  // lexicographic y > z > x
  if (int c = cmp_shifted(a.coord.y, b.coord.y)) return c;
  if (int c = cmp_shifted(a.coord.z, b.coord.z)) return c;
  if (int c = cmp_shifted(a.coord.x, b.coord.x)) return c;
  if (a.group != b.group)
    throw Error(ErrorKind::IncomparableBoxes,
                "boxes at the same coordinates in distinct groups: " + a.str() + " vs " + b.str());
  return 0;
}

State with_box_added(const State& s, const Box& b) {
  State t = s;
  if (b.negative())
    t.erase_minus(b);
  else
    t.insert_plus(b);
  return t;
}

State with_box_removed(const State& s, const Box& b) {
  State t = s;
  if (b.negative())
    t.insert_minus(b);
  else
    t.erase_plus(b);
  return t;
}

std::pair<int64_t, int64_t> state_degree(const State& s) {
  int64_t d0 = 0, d1 = 0;
  for (const auto& b : s.plus) (b.color == 0 ? d0 : d1) += 1;
  for (const auto& b : s.minus) (b.color == 0 ? d0 : d1) -= 1;
  return {d0, d1};
}

}  // namespace qtgl2

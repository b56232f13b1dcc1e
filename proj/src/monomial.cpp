#include "qtgl2/monomial.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

namespace qtgl2 {

namespace {
const char* kGenNames[Monomial::kGens] = {"q", "d", "u", "v", "k"};
}

std::string Monomial::str() const {
  if (is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < kGens; ++i) {
    if (e_[i] == 0) continue;
    if (!first) os << " ";
    first = false;
    os << kGenNames[i];
    if (e_[i] != 1) os << "^" << e_[i];
  }
  return os.str();
}

nlohmann::json Monomial::to_json() const {
  return nlohmann::json(e_);
}

Monomial Monomial::from_json(const nlohmann::json& j) {
  Exponents e{};
  for (int i = 0; i < kGens; ++i) e[i] = j.at(i).get<int64_t>();
  return Monomial(e);
}

Monomial Monomial::parse(const std::string& text) {
  Monomial result;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace((unsigned char)text[i]) || text[i] == '*')) ++i;
  };
  skip_ws();
  if (i >= text.size()) throw Error(ErrorKind::ConfigError, "empty monomial");
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] == '1') {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < text.size() && (std::isalnum((unsigned char)text[i]))) ++i;
    std::string name = text.substr(start, i - start);
    int64_t e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      size_t es = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
      if (es == i) throw Error(ErrorKind::ConfigError, "bad exponent in monomial: " + text);
      e = std::stoll(text.substr(es, i - es));
    }
    Monomial base;
    if (name == "q") base = Monomial::q();
    else if (name == "d") base = Monomial::d();
    else if (name == "u" || name == "U") base = Monomial::u();
    else if (name == "v" || name == "V") base = Monomial::v();
    else if (name == "k" || name == "kappa") base = Monomial::kappa();
    else if (name == "q1") base = Monomial::q1();
    else if (name == "q2") base = Monomial::q2();
    else if (name == "q3") base = Monomial::q3();
    else throw Error(ErrorKind::ConfigError, "unknown generator '" + name + "' in monomial: " + text);
    result *= base.pow(e);
  }
  return result;
}

Substitution Substitution::then(const Substitution& later) const {
  Substitution r;
  for (int i = 0; i < Monomial::kGens; ++i) {
    if (images[i]) {
      r.images[i] = later.apply(*images[i]);
    } else if (later.images[i]) {
      r.images[i] = later.images[i];
    }
  }
  return r;
}

Substitution Substitution::parse(const std::string& text) {
  Substitution s;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find_first_of(";,", pos);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(pos, end - pos);
    pos = end + 1;
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::ConfigError, "substitution item needs '=': " + item);
    std::string lhs = item.substr(0, eq);
    lhs.erase(0, lhs.find_first_not_of(" \t"));
    lhs.erase(lhs.find_last_not_of(" \t") + 1);
    int idx;
    if (lhs == "q") idx = 0;
    else if (lhs == "d") idx = 1;
    else if (lhs == "u" || lhs == "U") idx = 2;
    else if (lhs == "v" || lhs == "V") idx = 3;
    else if (lhs == "k" || lhs == "kappa") idx = 4;
    else throw Error(ErrorKind::ConfigError, "cannot substitute '" + lhs + "'");
    s.images[idx] = Monomial::parse(item.substr(eq + 1));
  }
  return s;
}

}  // namespace qtgl2

#include "rulinglab/poly.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace rulinglab {

namespace {

// render one exponent-in-half-steps as "z^-2", "z^1/2", "z", "" (for 0)
std::string z_power(int half) {
  if (half == 0) return "";
  if (half == 2) return "z";
  std::ostringstream os;
  os << "z^";
  if (half % 2 == 0) {
    os << half / 2;
  } else {
    os << half << "/2";
  }
  return os.str();
}

void append_term(std::ostringstream& os, bool first, const BigInt& c, const std::string& mono) {
  BigInt ac = c < 0 ? BigInt(-c) : c;
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (ac != 1 || mono.empty()) {
    os << ac;
    if (!mono.empty()) os << "*";
  }
  os << mono;
}

}  // namespace

std::string HalfLaurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    append_term(os, first, c, z_power(e));
    first = false;
  }
  return os.str();
}

HalfLaurent HalfLaurent::parse(const std::string& s) {
  HalfLaurent out;
  // tokenize on +/- kept as signs; terms look like "3", "z", "z^-2", "3*z^1/2"
  size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && isspace((unsigned char)s[i])) ++i; };
  skip_ws();
  if (i == s.size()) throw std::invalid_argument("empty polynomial");
  bool any = false;
  while (i < s.size()) {
    skip_ws();
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
      skip_ws();
    } else if (any) {
      throw std::invalid_argument("expected + or - in polynomial");
    }
    BigInt coeff = 1;
    bool saw_num = false;
    if (i < s.size() && isdigit((unsigned char)s[i])) {
      size_t j = i;
      while (j < s.size() && isdigit((unsigned char)s[j])) ++j;
      coeff = BigInt(s.substr(i, j - i));
      i = j;
      saw_num = true;
      skip_ws();
      if (i < s.size() && s[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    int half = 0;
    if (i < s.size() && s[i] == 'z') {
      ++i;
      half = 2;
      if (i < s.size() && s[i] == '^') {
        ++i;
        size_t j = i;
        if (j < s.size() && s[j] == '-') ++j;
        while (j < s.size() && isdigit((unsigned char)s[j])) ++j;
        if (j == i) throw std::invalid_argument("missing exponent after ^");
        int num = std::stoi(s.substr(i, j - i));
        i = j;
        if (i + 1 < s.size() && s[i] == '/' && s[i + 1] == '2') {
          i += 2;
          half = num;
        } else {
          half = 2 * num;
        }
      }
    } else if (!saw_num) {
      throw std::invalid_argument("expected term in polynomial");
    }
    out.add_term(half, sign * coeff);
    any = true;
    skip_ws();
  }
  if (!any) throw std::invalid_argument("empty polynomial");
  return out;
}

int MultiLaurent::deg_a() const {
  int best = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    (void)c;
    if (first || e[0] > best) best = e[0];
    first = false;
  }
  return best;
}

std::string MultiLaurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    auto add = [&](const std::string& v, int p, bool half_steps) {
      if (p == 0) return;
      if (!mono.empty()) mono += "*";
      if (half_steps) {
        mono += z_power(p);
      } else if (p == 1) {
        mono += v;
      } else {
        mono += v + "^" + std::to_string(p);
      }
    };
    add("a", e[0], false);
    add("z", e[1], true);
    add("A", e[2], false);
    add("B", e[3], false);
    append_term(os, first, c, mono);
    first = false;
  }
  return os.str();
}

MultiLaurent ml_substitute_AB(const MultiLaurent& p) {
  // A -> z - 1, B -> -1
  MultiLaurent zm1 = MultiLaurent::z_half(2) - MultiLaurent::one();
  MultiLaurent out;
  for (const auto& [e, c] : p.terms()) {
    MultiLaurent t = MultiLaurent::monomial(e[0], e[1], 0, 0, c);
    for (int k = 0; k < e[2]; ++k) t *= zm1;
    if (e[3] % 2 != 0) t = t.scaled(-1);
    out += t;
  }
  return out;
}

HalfLaurent ml_coefficient_of_a(const MultiLaurent& p, int e) {
  HalfLaurent out;
  for (const auto& [k, c] : p.terms()) {
    if (k[2] != 0 || k[3] != 0)
      throw std::invalid_argument("ml_coefficient_of_a: A/B not substituted away");
    if (k[0] == e) out.add_term(k[1], c);
  }
  return out;
}

}  // namespace rulinglab

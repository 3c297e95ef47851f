#include "noma/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace noma {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }

  Rational out;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed rational: '" + text + "'");
    if (BigInt(den) == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    out = Rational(BigInt(num), BigInt(den));
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    const std::string whole = s.substr(0, dot);
    const std::string frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      throw std::invalid_argument("malformed decimal: '" + text + "'");
    BigInt scaled = whole.empty() ? BigInt(0) : BigInt(whole);
    BigInt scale(1);
    for (char c : frac) {
      scaled = scaled * 10 + (c - '0');
      scale *= 10;
    }
    out = Rational(scaled, scale);
  } else {
    if (!all_digits(s)) throw std::invalid_argument("malformed number: '" + text + "'");
    out = Rational(BigInt(s));
  }
  out.canonicalize();
  if (negative) out = -out;
  return out;
}

}  // namespace noma

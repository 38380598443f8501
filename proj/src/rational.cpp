#include "repstab/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace repstab {

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto valid_int = [](const std::string& part) {
    std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+'));
    if (start == part.size()) return false;
    for (std::size_t j = start; j < part.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(part[j]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("cannot parse rational: " + std::string(text));
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator");
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

}  // namespace repstab

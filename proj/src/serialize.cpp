#include "repstab/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace repstab {

std::string to_text(const SymmetricFunction& f) {
  SymmetricFunction s = to_schur(f);
  if (s.is_zero()) return "0";
  std::string out;
  // Largest degree first, then lexicographically decreasing keys.
  std::vector<const std::pair<const Partition, Rational>*> order;
  for (const auto& term : s.terms()) order.push_back(&term);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
    if (a->first.size() != b->first.size())
      return a->first.size() > b->first.size();
    return a->first > b->first;
  });
  for (const auto* term : order) {
    Rational c = term->second;
    bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (c != 1) out += c.get_str() + "*";
    out += "s" + to_string(term->first);
  }
  return out;
}

SymmetricFunction parse_text(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty symmetric function text");
  if (s == "0") return SymmetricFunction(Basis::Schur);
  SymmetricFunction out(Basis::Schur);
  bool basis_fixed = false;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw std::invalid_argument("expected '+' or '-' in symmetric function");
    }
    auto letter = s.find_first_of("sp", pos);
    if (letter == std::string::npos)
      throw std::invalid_argument("missing basis letter");
    Rational coeff = 1;
    if (letter != pos) {
      if (s[letter - 1] != '*') throw std::invalid_argument("missing '*'");
      coeff = parse_rational(std::string_view(s).substr(pos, letter - 1 - pos));
    }
    Basis basis = s[letter] == 's' ? Basis::Schur : Basis::Power;
    auto close = s.find(']', letter);
    if (close == std::string::npos || letter + 1 >= s.size() ||
        s[letter + 1] != '[')
      throw std::invalid_argument("malformed basis element");
    Partition key =
        parse_partition(std::string_view(s).substr(letter + 1, close - letter));
    if (!basis_fixed) {
      out = SymmetricFunction(basis);
      basis_fixed = true;
    }
    out += SymmetricFunction::basis_element(basis, key, coeff * sign);
    pos = close + 1;
  }
  return out;
}

nlohmann::json to_json(const SymmetricFunction& f) {
  nlohmann::json j = nlohmann::json::object();
  SymmetricFunction s = to_schur(f);
  for (const auto& [lambda, c] : s.terms())
    j[to_string(lambda)] = to_fraction_string(c);
  return j;
}

SymmetricFunction from_json(const nlohmann::json& j) {
  if (!j.is_object())
    throw std::invalid_argument("symmetric function JSON must be an object");
  SymmetricFunction out(Basis::Schur);
  for (const auto& [key, value] : j.items())
    out.add(parse_partition(key), parse_rational(value.get<std::string>()));
  return out;
}

}  // namespace repstab

#include "starhess/alpha.hpp"

#include <sstream>

namespace starhess {

Rational appell_alpha(int r, long k) {
  if (r < 1) throw UsageError("appell alpha needs r >= 1");
  if (k < 0) return Rational::zero();
  return pochhammer(Rational(k + 1), static_cast<unsigned long>(r)) /
         Rational(r + 1).pow(r);
}

AlphaSpec AlphaSpec::parse(const std::string& text, int r) {
  if (text == "symbolic") return symbolic();
  if (text == "appell") return appell(r);
  std::vector<Rational> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) vals.push_back(Rational::parse(item));
  if (vals.empty()) throw UsageError("empty alpha list");
  return explicit_values(std::move(vals));
}

std::string AlphaSpec::describe() const {
  switch (mode_) {
    case Mode::Symbolic:
      return "symbolic";
    case Mode::Appell:
      return "appell";
    case Mode::Explicit: {
      std::string out;
      for (const auto& v : values_) {
        if (!out.empty()) out += ",";
        out += v.str();
      }
      return out;
    }
  }
  return "";
}

std::map<int, Rational> alpha_assignment(const AlphaSpec& a, const std::set<int>& indices) {
  std::map<int, Rational> out;
  for (int i : indices) out.emplace(i, alpha_value<Rational>(a, i));
  return out;
}

}  // namespace starhess

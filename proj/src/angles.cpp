#include "grover/angles.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

namespace grover {

double canonicalize_angle(double radians) {
  if (!std::isfinite(radians)) throw std::invalid_argument("angle must be finite");
  const double two_pi = 2.0 * k_pi;
  double r = std::fmod(radians, two_pi);  // exact when |radians| < 2 pi
  if (r > k_pi)
    r -= two_pi;
  else if (r <= -k_pi)
    r += two_pi;
  return r;
}

double parse_angle(std::string_view text) {
  std::string_view num = text;
  bool has_pi = false;
  if (num.size() >= 2 && num.substr(num.size() - 2) == "pi") {
    has_pi = true;
    num.remove_suffix(2);
  }
  double factor = 1.0;
  if (num.empty() || num == "+" || num == "-") {
    // bare "pi" / "-pi" / "+pi"
    if (!has_pi) throw std::invalid_argument("empty angle");
    factor = (num == "-") ? -1.0 : 1.0;
  } else {
    const char* first = num.data();
    const char* last = num.data() + num.size();
    if (*first == '+') ++first;  // from_chars rejects a leading '+'
    auto [ptr, ec] = std::from_chars(first, last, factor);
    if (ec != std::errc{} || ptr != last)
      throw std::invalid_argument("bad angle '" + std::string(text) +
                                  "' (want e.g. 0.5pi, -pi, or radians)");
  }
  const double value = has_pi ? factor * k_pi : factor;
  if (!std::isfinite(value))
    throw std::invalid_argument("angle '" + std::string(text) + "' is not finite");
  return value;
}

}  // namespace grover

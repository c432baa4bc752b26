#include "gbm/format.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace gbm {

namespace {

void check_precision(int precision) {
  if (precision < 6 || precision > 17)
    throw std::invalid_argument("precision must lie in [6, 17]");
}

int significant_digits(const std::string& s) {
  int digits = 0;
  bool seen_nonzero = false;
  for (char ch : s) {
    if (ch == 'e' || ch == 'E') break;
    if (ch < '0' || ch > '9') continue;
    if (ch != '0') seen_nonzero = true;
    if (seen_nonzero) ++digits;
  }
  return digits;
}

}

std::string format_double(double v, int precision) {
  check_precision(precision);
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";
  char buf[64];
  const auto shortest = std::to_chars(buf, buf + sizeof buf, v);
  std::string s(buf, shortest.ptr);
  if (significant_digits(s) <= precision) return s;
  const auto capped =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, precision);
  return std::string(buf, capped.ptr);
}

double round_to_precision(double v, int precision) {
  check_precision(precision);
  if (!std::isfinite(v) || precision >= 17) return v;
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, precision);
  double out = v;
  std::from_chars(buf, res.ptr, out);
  return out;
}

}

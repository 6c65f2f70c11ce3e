#include "wfbench/decimal.hpp"

#include <limits>
#include <string>

#include "wfbench/errors.hpp"

namespace wfbench {

namespace {

constexpr Cost kCostMax = std::numeric_limits<Cost>::max();

}  // namespace

Cost pow10(int digits) {
  if (digits < 0 || digits > kMaxFractionDigits) {
    throw PreconditionError("pow10: exponent out of range");
  }
  Cost p = 1;
  for (int i = 0; i < digits; ++i) p *= 10;
  return p;
}

ParsedDecimal parse_decimal(std::string_view text) {
  const std::string quoted = "\"" + std::string(text) + "\"";
  if (text.empty()) throw InputError("empty decimal");
  ParsedDecimal out;
  bool seen_point = false;
  bool seen_digit = false;
  for (char c : text) {
    if (c == '.') {
      if (seen_point) throw InputError("malformed decimal " + quoted);
      seen_point = true;
      continue;
    }
    if (c < '0' || c > '9') {
      throw InputError("malformed decimal " + quoted +
                       " (expected non-negative digits with optional '.')");
    }
    seen_digit = true;
    if (seen_point) {
      if (++out.fraction_digits > kMaxFractionDigits) {
        throw InputError("too many fractional digits in " + quoted);
      }
    }
    const int digit = c - '0';
    if (out.mantissa > (kCostMax - digit) / 10) {
      throw InputError("decimal out of range " + quoted);
    }
    out.mantissa = out.mantissa * 10 + digit;
  }
  if (!seen_digit || text.front() == '.' || text.back() == '.') {
    throw InputError("malformed decimal " + quoted);
  }
  return out;
}

Cost to_scaled(const ParsedDecimal& d, Cost scale) {
  const Cost unit = pow10(d.fraction_digits);
  if (scale % unit != 0) throw PreconditionError("scale too coarse");
  const Cost factor = scale / unit;
  if (d.mantissa > kCostMax / factor) {
    throw InputError("decimal out of range after rescaling");
  }
  return d.mantissa * factor;
}

std::string format_scaled(Cost value, Cost scale) {
  std::string sign;
  // Work in unsigned to survive INT64_MIN.
  unsigned long long magnitude = static_cast<unsigned long long>(value);
  if (value < 0) {
    sign = "-";
    magnitude = 0ULL - magnitude;
  }
  const auto uscale = static_cast<unsigned long long>(scale);
  std::string out = sign + std::to_string(magnitude / uscale);
  unsigned long long frac = magnitude % uscale;
  if (frac == 0) return out;
  std::string digits;
  for (unsigned long long s = uscale / 10; s > 0; s /= 10) {
    digits.push_back(static_cast<char>('0' + (frac / s) % 10));
  }
  while (!digits.empty() && digits.back() == '0') digits.pop_back();
  return out + "." + digits;
}

}  // namespace wfbench

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace wfbench {

// All distances and work-function values are exact integers in units of
// 1/scale, where scale is a power of ten fixed when an instance is loaded.
using Cost = std::int64_t;

inline constexpr int kMaxFractionDigits = 9;

struct ParsedDecimal {
  std::int64_t mantissa = 0;  // value * 10^fraction_digits
  int fraction_digits = 0;
};

// Parses a non-negative plain decimal ("7", "2.5", "0.125"). No sign,
// exponent or whitespace. Throws InputError.
ParsedDecimal parse_decimal(std::string_view text);

// Rescales a parsed decimal to `scale` (a power of ten >= 10^fraction_digits).
Cost to_scaled(const ParsedDecimal& d, Cost scale);

// 10^digits, digits in [0, kMaxFractionDigits].
Cost pow10(int digits);

// Minimal decimal rendering of value/scale: "17", "17.5", "-0.25".
std::string format_scaled(Cost value, Cost scale);

}  // namespace wfbench

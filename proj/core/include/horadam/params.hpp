#pragma once

#include <cstdint>
#include <string>

#include "horadam/exact_scalars.hpp"

namespace horadam {

using Index = std::uint64_t;

/// w_0 = a, w_1 = b, w_n = p w_{n-1} + q w_{n-2}.
struct HoradamParams {
  std::int64_t a = 0;
  std::int64_t b = 1;
  std::int64_t p = 1;
  std::int64_t q = 1;

  friend bool operator==(const HoradamParams&, const HoradamParams&) = default;
  friend auto operator<=>(const HoradamParams&, const HoradamParams&) = default;
};

/// p^2 + 4q as an unchecked integer (may be zero).
Integer discriminant_value(const HoradamParams& params);
bool is_degenerate(const HoradamParams& params);
/// 1 - p - q = 0, i.e. one of the roots equals 1.
bool has_sum_pole(const HoradamParams& params);

std::string to_string(const HoradamParams& params);

}  // namespace horadam

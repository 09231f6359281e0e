#include "horadam/params.hpp"

#include <sstream>

namespace horadam {

Integer discriminant_value(const HoradamParams& params) {
  const Integer p(static_cast<long>(params.p));
  const Integer q(static_cast<long>(params.q));
  return Integer(p * p + 4 * q);
}

bool is_degenerate(const HoradamParams& params) { return discriminant_value(params) == 0; }

bool has_sum_pole(const HoradamParams& params) { return 1 - params.p - params.q == 0; }

std::string to_string(const HoradamParams& params) {
  std::ostringstream out;
  out << "a=" << params.a << " b=" << params.b << " p=" << params.p << " q=" << params.q;
  return out.str();
}

}  // namespace horadam

#pragma once

#include <cstddef>
#include <vector>

#include "horadam/exact_scalars.hpp"
#include "horadam/identity_report.hpp"
#include "horadam/params.hpp"

namespace horadam {

/// alpha, beta and the Binet weights A = b - a beta, B = b - a alpha.
struct BinetConstants {
  QuadExt alpha;
  QuadExt beta;
  QuadExt A;
  QuadExt B;

  /// alpha - beta = sqrt(D).
  QuadExt root_gap() const { return alpha - beta; }
};

/// Throws DegenerateRootError when p^2 + 4q = 0.
BinetConstants binet_constants(const HoradamParams& params);

/// w_n by unfolding the recurrence. Reference oracle for every closed form.
Integer w_term(const HoradamParams& params, Index n);
/// w_0 .. w_{count-1}.
std::vector<Integer> w_terms(const HoradamParams& params, std::size_t count);

/// (A alpha^n - B beta^n) / (alpha - beta), reduced to an integer.
Integer w_binet(const HoradamParams& params, Index n);

/// Power-series coefficients of (n0 + n1 t) / (1 - p t - q t^2):
/// c_0 = n0, c_1 = n1 + p c_0, c_k = p c_{k-1} + q c_{k-2}.
/// `scale(s, x)` multiplies a coefficient by an integer scalar.
template <typename T, typename Scale>
std::vector<T> expand_series(const T& n0, const T& n1, const HoradamParams& params,
                             std::size_t count, Scale scale) {
  std::vector<T> out;
  if (count == 0) return out;
  out.reserve(count);
  const Integer p(static_cast<long>(params.p));
  const Integer q(static_cast<long>(params.q));
  out.push_back(n0);
  if (count > 1) out.push_back(n1 + scale(p, out[0]));
  for (std::size_t k = 2; k < count; ++k) out.push_back(scale(p, out[k - 1]) + scale(q, out[k - 2]));
  return out;
}

/// Numerator (w_0, w_1 - p w_0) of the generating function.
std::pair<Integer, Integer> w_genfun_numerator(const HoradamParams& params);
/// First `count` coefficients of the generating function. `count` >= 1.
std::vector<Integer> w_genfun_coeffs(const HoradamParams& params, std::size_t count);

/// w_{n+1} w_{n-1} - w_n^2 from the recurrence. n >= 1.
Integer w_cassini_lhs(const HoradamParams& params, Index n);
/// (-q)^{n-1} (p w_0 w_1 - w_1^2 + q w_0^2). n >= 1.
Integer w_cassini_rhs(const HoradamParams& params, Index n);

/// sum_{i=0}^{n} w_i by direct summation.
Integer w_sum_direct(const HoradamParams& params, Index n);
/// (w_1 - w_0 (p - 1) - q w_n - w_{n+1}) / (1 - p - q).
/// Throws PoleError when 1 - p - q = 0.
Rational w_sum_closed(const HoradamParams& params, Index n);

IdentityReport w_binet_check(const HoradamParams& params, Index n);
/// Coefficient n of the generating function against w_n.
IdentityReport w_genfun_check(const HoradamParams& params, Index n);
IdentityReport w_cassini_check(const HoradamParams& params, Index n);
IdentityReport w_sum_check(const HoradamParams& params, Index n);

}  // namespace horadam

#include "horadam/horadam_numbers.hpp"

#include <array>

namespace horadam {
namespace {

Integer to_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

Integer scale_int(const Integer& s, const Integer& x) { return Integer(s * x); }

void require_positive(Index n, const char* what) {
  if (n < 1) throw UsageError(std::string(what) + " requires n >= 1");
}

}  // namespace

BinetConstants binet_constants(const HoradamParams& params) {
  auto [alpha, beta] = make_roots(params.p, params.q);
  const Discriminant& d = alpha.disc();
  const QuadExt a = QuadExt::rational(params.a, d);
  const QuadExt b = QuadExt::rational(params.b, d);
  QuadExt A = b - a * beta;
  QuadExt B = b - a * alpha;
  return {std::move(alpha), std::move(beta), std::move(A), std::move(B)};
}

Integer w_term(const HoradamParams& params, Index n) {
  Integer prev = to_integer(params.a);
  if (n == 0) return prev;
  Integer cur = to_integer(params.b);
  const Integer p = to_integer(params.p), q = to_integer(params.q);
  for (Index k = 1; k < n; ++k) {
    Integer next = p * cur + q * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<Integer> w_terms(const HoradamParams& params, std::size_t count) {
  std::vector<Integer> out;
  out.reserve(count);
  const Integer p = to_integer(params.p), q = to_integer(params.q);
  for (std::size_t k = 0; k < count; ++k) {
    if (k == 0) {
      out.push_back(to_integer(params.a));
    } else if (k == 1) {
      out.push_back(to_integer(params.b));
    } else {
      out.push_back(Integer(p * out[k - 1] + q * out[k - 2]));
    }
  }
  return out;
}

Integer w_binet(const HoradamParams& params, Index n) {
  const BinetConstants c = binet_constants(params);
  const QuadExt value = (c.A * c.alpha.pow(n) - c.B * c.beta.pow(n)) / c.root_gap();
  return reduce_to_rational(value).to_integer();
}

std::pair<Integer, Integer> w_genfun_numerator(const HoradamParams& params) {
  const Integer a = to_integer(params.a);
  return {a, Integer(to_integer(params.b) - to_integer(params.p) * a)};
}

std::vector<Integer> w_genfun_coeffs(const HoradamParams& params, std::size_t count) {
  if (count < 1) throw UsageError("generating function needs at least one coefficient");
  const auto [n0, n1] = w_genfun_numerator(params);
  return expand_series(n0, n1, params, count, scale_int);
}

Integer w_cassini_lhs(const HoradamParams& params, Index n) {
  require_positive(n, "Cassini identity");
  const std::vector<Integer> w = w_terms(params, n + 2);
  return Integer(w[n + 1] * w[n - 1] - w[n] * w[n]);
}

Integer w_cassini_rhs(const HoradamParams& params, Index n) {
  require_positive(n, "Cassini identity");
  const Integer a = to_integer(params.a), b = to_integer(params.b);
  const Integer p = to_integer(params.p), q = to_integer(params.q);
  Integer factor;
  mpz_pow_ui(factor.get_mpz_t(), Integer(-q).get_mpz_t(), n - 1);
  return Integer(factor * (p * a * b - b * b + q * a * a));
}

Integer w_sum_direct(const HoradamParams& params, Index n) {
  Integer total = 0;
  for (const Integer& w : w_terms(params, n + 1)) total += w;
  return total;
}

Rational w_sum_closed(const HoradamParams& params, Index n) {
  if (has_sum_pole(params)) throw PoleError("summation formula has a pole at 1 - p - q = 0");
  const std::vector<Integer> w = w_terms(params, n + 2);
  const Integer p = to_integer(params.p), q = to_integer(params.q);
  const Integer num = w[1] - w[0] * (p - 1) - q * w[n] - w[n + 1];
  return Rational(num, Integer(1 - p - q));
}

IdentityReport w_binet_check(const HoradamParams& params, Index n) {
  const std::array<Rational, 1> lhs{Rational(w_term(params, n))};
  const BinetConstants c = binet_constants(params);
  const std::array<QuadExt, 1> rhs{(c.A * c.alpha.pow(n) - c.B * c.beta.pow(n)) / c.root_gap()};
  return compare_sides("w_binet", params, n, lhs, rhs);
}

IdentityReport w_genfun_check(const HoradamParams& params, Index n) {
  const std::array<Rational, 1> lhs{Rational(w_term(params, n))};
  const std::array<Rational, 1> rhs{Rational(w_genfun_coeffs(params, n + 1).back())};
  return compare_sides("w_genfun", params, n, lhs, rhs);
}

IdentityReport w_cassini_check(const HoradamParams& params, Index n) {
  const std::array<Rational, 1> lhs{Rational(w_cassini_lhs(params, n))};
  const std::array<Rational, 1> rhs{Rational(w_cassini_rhs(params, n))};
  return compare_sides("w_cassini", params, n, lhs, rhs);
}

IdentityReport w_sum_check(const HoradamParams& params, Index n) {
  const std::array<Rational, 1> lhs{Rational(w_sum_direct(params, n))};
  const std::array<Rational, 1> rhs{w_sum_closed(params, n)};
  return compare_sides("w_sum", params, n, lhs, rhs);
}

}  // namespace horadam

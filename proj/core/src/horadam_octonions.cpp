#include "horadam/horadam_octonions.hpp"

#include <array>
#include <map>

namespace horadam {
namespace {

Integer to_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

IntOctonion scale_int(const Integer& s, const IntOctonion& x) { return oct_scale(s, x); }

QuadOctonion powers(const QuadExt& root) {
  std::array<QuadExt, kOctonionDim> c{root.one_like(), root,           root.zero_like(),
                                      root.zero_like(), root.zero_like(), root.zero_like(),
                                      root.zero_like(), root.zero_like()};
  for (std::size_t i = 2; i < kOctonionDim; ++i) c[i] = c[i - 1] * root;
  return QuadOctonion(std::move(c));
}

std::array<Rational, kOctonionDim> rational_coeffs(const IntOctonion& x) {
  std::array<Rational, kOctonionDim> out;
  for (std::size_t i = 0; i < kOctonionDim; ++i) out[i] = Rational(x[i]);
  return out;
}

IdentityReport compare_octonions(std::string identity, const HoradamParams& params, Index n,
                                 const IntOctonion& lhs, const QuadOctonion& rhs) {
  const auto l = rational_coeffs(lhs);
  return compare_sides(std::move(identity), params, n, l, rhs.coeffs());
}

}  // namespace

QuadOctonion lift(const IntOctonion& x, const Discriminant& disc) {
  std::array<QuadExt, kOctonionDim> c{
      QuadExt::zero(disc), QuadExt::zero(disc), QuadExt::zero(disc), QuadExt::zero(disc),
      QuadExt::zero(disc), QuadExt::zero(disc), QuadExt::zero(disc), QuadExt::zero(disc)};
  for (std::size_t i = 0; i < kOctonionDim; ++i) c[i] = QuadExt::rational(Rational(x[i]), disc);
  return QuadOctonion(std::move(c));
}

std::vector<Rational> to_rationals(const IntOctonion& x) {
  const auto c = rational_coeffs(x);
  return {c.begin(), c.end()};
}

HoradamOctonion og_term(const HoradamParams& params, Index n) {
  IntOctonion value = IntOctonion::zero();
  value[0] = w_term(params, n);
  value[1] = w_term(params, n + 1);
  const Integer p = to_integer(params.p), q = to_integer(params.q);
  for (std::size_t i = 2; i < kOctonionDim; ++i) value[i] = p * value[i - 1] + q * value[i - 2];
  return {std::move(value), n, params};
}

UnderlinedRoots underlined_roots(const HoradamParams& params) {
  const Roots r = make_roots(params.p, params.q);
  return {powers(r.alpha), powers(r.beta)};
}

QuadOctonion og_binet_unreduced(const HoradamParams& params, Index n) {
  const BinetConstants c = binet_constants(params);
  const UnderlinedRoots u{powers(c.alpha), powers(c.beta)};
  const QuadExt gap = c.root_gap();
  return oct_scale(c.A * c.alpha.pow(n) / gap, u.alpha_u) -
         oct_scale(c.B * c.beta.pow(n) / gap, u.beta_u);
}

IntOctonion og_binet(const HoradamParams& params, Index n) {
  const QuadOctonion value = og_binet_unreduced(params, n);
  IntOctonion out = IntOctonion::zero();
  for (std::size_t i = 0; i < kOctonionDim; ++i) out[i] = reduce_to_rational(value[i]).to_integer();
  return out;
}

std::pair<IntOctonion, IntOctonion> og_genfun_numerator(const HoradamParams& params) {
  IntOctonion og0 = og_term(params, 0).value;
  IntOctonion og1 = og_term(params, 1).value;
  IntOctonion n1 = og1 - oct_scale(to_integer(params.p), og0);
  return {std::move(og0), std::move(n1)};
}

std::vector<IntOctonion> og_genfun_coeffs(const HoradamParams& params, std::size_t count) {
  if (count < 1) throw UsageError("generating function needs at least one coefficient");
  const auto [n0, n1] = og_genfun_numerator(params);
  return expand_series(n0, n1, params, count, scale_int);
}

std::string_view to_string(CassiniOrder order) {
  return order == CassiniOrder::left ? "left" : "right";
}

std::string_view to_string(CassiniForm form) {
  return form == CassiniForm::beta_ab_minus_alpha_ba ? "beta*alpha_u*beta_u-alpha*beta_u*alpha_u"
                                                     : "beta*beta_u*alpha_u-alpha*alpha_u*beta_u";
}

CassiniForm cassini_form_for(CassiniOrder order) {
  return order == CassiniOrder::left ? CassiniForm::beta_ab_minus_alpha_ba
                                     : CassiniForm::beta_ba_minus_alpha_ab;
}

IntOctonion cassini_lhs(const HoradamParams& params, Index n, CassiniOrder order) {
  if (n < 1) throw UsageError("Cassini identity requires n >= 1");
  const IntOctonion prev = og_term(params, n - 1).value;
  const IntOctonion cur = og_term(params, n).value;
  const IntOctonion next = og_term(params, n + 1).value;
  const IntOctonion product = order == CassiniOrder::left ? prev * next : next * prev;
  return product - cur * cur;
}

QuadOctonion cassini_rhs(const HoradamParams& params, Index n, CassiniForm form) {
  if (n < 1) throw UsageError("Cassini identity requires n >= 1");
  const BinetConstants c = binet_constants(params);
  const UnderlinedRoots u{powers(c.alpha), powers(c.beta)};
  const QuadOctonion ab = u.alpha_u * u.beta_u;
  const QuadOctonion ba = u.beta_u * u.alpha_u;
  const QuadOctonion bracket = form == CassiniForm::beta_ab_minus_alpha_ba
                                   ? oct_scale(c.beta, ab) - oct_scale(c.alpha, ba)
                                   : oct_scale(c.beta, ba) - oct_scale(c.alpha, ab);
  const QuadExt factor = c.A * c.B * (c.alpha * c.beta).pow(n - 1) / c.root_gap();
  return oct_scale(factor, bracket);
}

IdentityReport og_cassini(const HoradamParams& params, Index n, CassiniOrder order) {
  const std::string name = std::string("cassini_") + std::string(to_string(order));
  return compare_octonions(name, params, n, cassini_lhs(params, n, order),
                           cassini_rhs(params, n, cassini_form_for(order)));
}

IntOctonion og_sum_direct(const HoradamParams& params, Index n) {
  IntOctonion total = IntOctonion::zero();
  for (Index i = 0; i <= n; ++i) total += og_term(params, i).value;
  return total;
}

QuadOctonion og_sum_constant(const HoradamParams& params) {
  if (has_sum_pole(params)) throw PoleError("summation formula has a pole at 1 - p - q = 0");
  const BinetConstants c = binet_constants(params);
  const UnderlinedRoots u{powers(c.alpha), powers(c.beta)};
  const QuadExt one = c.alpha.one_like();
  const QuadExt denom = c.root_gap() * (one - c.alpha) * (one - c.beta);
  return oct_scale(c.A * (one - c.beta) / denom, u.alpha_u) -
         oct_scale(c.B * (one - c.alpha) / denom, u.beta_u);
}

QuadOctonion og_sum_closed(const HoradamParams& params, Index n) {
  QuadOctonion k = og_sum_constant(params);
  const BinetConstants c = binet_constants(params);
  const UnderlinedRoots u{powers(c.alpha), powers(c.beta)};
  const QuadExt one = c.alpha.one_like();
  const QuadExt gap = c.root_gap();
  const QuadExt beta_w = c.B * c.beta.pow(n + 1) / ((one - c.beta) * gap);
  const QuadExt alpha_w = c.A * c.alpha.pow(n + 1) / ((one - c.alpha) * gap);
  return oct_scale(beta_w, u.beta_u) - oct_scale(alpha_w, u.alpha_u) + k;
}

IdentityReport og_sum(const HoradamParams& params, Index n) {
  return compare_octonions("sum", params, n, og_sum_direct(params, n), og_sum_closed(params, n));
}

QuadExt og_norm_closed(const HoradamParams& params, Index n) {
  const BinetConstants c = binet_constants(params);
  const Discriminant& d = c.alpha.disc();
  const QuadExt alpha2 = c.alpha * c.alpha;
  const QuadExt beta2 = c.beta * c.beta;
  const QuadExt neg_q = QuadExt::rational(-params.q, d);

  QuadExt alpha_geo = QuadExt::zero(d), beta_geo = QuadExt::zero(d), cross_geo = QuadExt::zero(d);
  QuadExt alpha_pow = QuadExt::one(d), beta_pow = QuadExt::one(d), cross_pow = QuadExt::one(d);
  for (std::size_t i = 0; i < kOctonionDim; ++i) {
    alpha_geo += alpha_pow;
    beta_geo += beta_pow;
    cross_geo += cross_pow;
    alpha_pow *= alpha2;
    beta_pow *= beta2;
    cross_pow *= neg_q;
  }

  const QuadExt gap = c.root_gap();
  const QuadExt gap2 = gap * gap;
  const QuadExt main = c.A * c.A * alpha2.pow(n) * alpha_geo + c.B * c.B * beta2.pow(n) * beta_geo;
  const QuadExt cross = QuadExt::rational(2, d) * c.A * c.B * neg_q.pow(n) * cross_geo;
  return (main - cross) / gap2;
}

IdentityReport og_norm(const HoradamParams& params, Index n) {
  const std::array<Rational, 1> lhs{Rational(oct_norm(og_term(params, n).value))};
  const std::array<QuadExt, 1> rhs{og_norm_closed(params, n)};
  return compare_sides("norm", params, n, lhs, rhs);
}

IdentityReport og_binet_check(const HoradamParams& params, Index n) {
  return compare_octonions("binet", params, n, og_term(params, n).value,
                           og_binet_unreduced(params, n));
}

IdentityReport og_genfun_check(const HoradamParams& params, Index n) {
  const auto lhs = rational_coeffs(og_term(params, n).value);
  const auto rhs = rational_coeffs(og_genfun_coeffs(params, n + 1).back());
  return compare_sides("genfun", params, n, lhs, rhs);
}

HoradamParams preset(std::string_view name) {
  static const std::map<std::string, HoradamParams, std::less<>> presets{
      {"fibonacci", {0, 1, 1, 1}},  {"lucas", {2, 1, 1, 1}},
      {"pell", {0, 1, 2, 1}},       {"jacobsthal", {0, 1, 1, 2}},
      {"modified_pell", {1, 1, 2, 1}}, {"pell_lucas", {2, 2, 2, 1}},
  };
  const auto it = presets.find(name);
  if (it == presets.end()) throw UsageError("unknown preset '" + std::string(name) + "'");
  return it->second;
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"fibonacci", "lucas",         "pell",
                                              "jacobsthal", "modified_pell", "pell_lucas"};
  return names;
}

}  // namespace horadam

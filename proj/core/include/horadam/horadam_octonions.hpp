#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "horadam/exact_scalars.hpp"
#include "horadam/horadam_numbers.hpp"
#include "horadam/identity_report.hpp"
#include "horadam/octonion.hpp"
#include "horadam/params.hpp"

namespace horadam {

using IntOctonion = Octonion<Integer>;
using QuadOctonion = Octonion<QuadExt>;

/// OG_n = w_n e0 + w_{n+1} e1 + ... + w_{n+7} e7.
struct HoradamOctonion {
  IntOctonion value;
  Index n = 0;
  HoradamParams params;
};

/// Octonions whose coefficients are alpha^0..alpha^7 and beta^0..beta^7.
struct UnderlinedRoots {
  QuadOctonion alpha_u;
  QuadOctonion beta_u;
};

/// Packs w_n .. w_{n+7}. Reference oracle for every octonion identity.
HoradamOctonion og_term(const HoradamParams& params, Index n);

UnderlinedRoots underlined_roots(const HoradamParams& params);

/// (A alpha_u alpha^n - B beta_u beta^n) / (alpha - beta) over QuadExt.
QuadOctonion og_binet_unreduced(const HoradamParams& params, Index n);
/// og_binet_unreduced with every coefficient reduced to an integer.
/// Throws NotRationalError if any coefficient is not an integer.
IntOctonion og_binet(const HoradamParams& params, Index n);

/// (OG_0, OG_1 - p OG_0): numerator of the generating function.
std::pair<IntOctonion, IntOctonion> og_genfun_numerator(const HoradamParams& params);
std::vector<IntOctonion> og_genfun_coeffs(const HoradamParams& params, std::size_t count);

enum class CassiniOrder {
  left,   // OG_{n-1} OG_{n+1} - OG_n^2
  right,  // OG_{n+1} OG_{n-1} - OG_n^2
};

// The two closed forms for the Cassini difference, both scaled by
// AB (alpha beta)^{n-1} / (alpha - beta). Only pairwise products of the
// underlined roots occur, so no parenthesization choice is involved.
enum class CassiniForm {
  beta_ab_minus_alpha_ba,  // beta (alpha_u beta_u) - alpha (beta_u alpha_u)
  beta_ba_minus_alpha_ab,  // beta (beta_u alpha_u) - alpha (alpha_u beta_u)
};

std::string_view to_string(CassiniOrder order);
std::string_view to_string(CassiniForm form);

/// Which closed form matches which product order; established against the
/// brute-force difference and frozen in tests/fixtures/cassini_pairing.txt.
CassiniForm cassini_form_for(CassiniOrder order);

/// Brute-force difference from og_term. n >= 1.
IntOctonion cassini_lhs(const HoradamParams& params, Index n, CassiniOrder order);
QuadOctonion cassini_rhs(const HoradamParams& params, Index n, CassiniForm form);
IdentityReport og_cassini(const HoradamParams& params, Index n, CassiniOrder order);

IntOctonion og_sum_direct(const HoradamParams& params, Index n);
/// (B beta_u beta^{n+1}/(1-beta) - A alpha_u alpha^{n+1}/(1-alpha)) / (alpha-beta) + K,
/// K = (A alpha_u (1-beta) - B beta_u (1-alpha)) / ((alpha-beta)(1-alpha)(1-beta)).
/// Throws PoleError when 1 - p - q = 0.
QuadOctonion og_sum_closed(const HoradamParams& params, Index n);
/// The constant K of og_sum_closed.
QuadOctonion og_sum_constant(const HoradamParams& params);
IdentityReport og_sum(const HoradamParams& params, Index n);

/// [A^2 alpha^{2n} sum_{i<8} alpha^{2i} + B^2 beta^{2n} sum_{i<8} beta^{2i}
///   - 2AB (-q)^n sum_{i<8} (-q)^i] / (alpha - beta)^2.
QuadExt og_norm_closed(const HoradamParams& params, Index n);
IdentityReport og_norm(const HoradamParams& params, Index n);

IdentityReport og_binet_check(const HoradamParams& params, Index n);
/// Coefficient n of the octonion generating function against OG_n.
IdentityReport og_genfun_check(const HoradamParams& params, Index n);

/// fibonacci, lucas, pell, jacobsthal, modified_pell, pell_lucas.
/// Throws UsageError for an unknown name.
HoradamParams preset(std::string_view name);
const std::vector<std::string>& preset_names();

/// Integer octonion lifted into Q(sqrt D).
QuadOctonion lift(const IntOctonion& x, const Discriminant& disc);
std::vector<Rational> to_rationals(const IntOctonion& x);

}  // namespace horadam

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "horadam/exact_scalars.hpp"
#include "horadam/params.hpp"

namespace horadam {

enum class Verdict { equal, mismatch, skipped_degenerate, skipped_pole };

std::string_view to_string(Verdict verdict);

/// Outcome of one identity check at one (params, n). Both sides are stored
/// in canonical rendering: one entry for scalar identities, eight for
/// octonion identities.
struct IdentityReport {
  std::string identity;
  HoradamParams params;
  Index n = 0;
  std::vector<std::string> lhs;
  std::vector<std::string> rhs;
  Verdict verdict = Verdict::mismatch;

  bool equal() const { return verdict == Verdict::equal; }

  /// identity=NAME a=.. b=.. p=.. q=.. n=.. verdict=.. lhs=c0,c1,.. rhs=c0,c1,..
  std::string to_line() const;
};

IdentityReport compare_sides(std::string identity, const HoradamParams& params, Index n,
                             std::span<const Rational> lhs, std::span<const Rational> rhs);
/// Equal iff every rhs entry has zero sqrt(D) part and matches lhs exactly.
IdentityReport compare_sides(std::string identity, const HoradamParams& params, Index n,
                             std::span<const Rational> lhs, std::span<const QuadExt> rhs);
IdentityReport skipped_report(std::string identity, const HoradamParams& params, Index n,
                              Verdict verdict);

}  // namespace horadam

#include "horadam/identity_report.hpp"

#include <algorithm>
#include <sstream>

namespace horadam {
namespace {

std::string join(const std::vector<std::string>& parts) {
  if (parts.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) out += ',';
    out += parts[i];
  }
  return out;
}

IdentityReport base(std::string identity, const HoradamParams& params, Index n) {
  IdentityReport r;
  r.identity = std::move(identity);
  r.params = params;
  r.n = n;
  return r;
}

}  // namespace

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::equal:
      return "equal";
    case Verdict::mismatch:
      return "mismatch";
    case Verdict::skipped_degenerate:
      return "skipped_degenerate";
    case Verdict::skipped_pole:
      return "skipped_pole";
  }
  return "unknown";
}

std::string IdentityReport::to_line() const {
  std::ostringstream out;
  out << "identity=" << identity << ' ' << to_string(params) << " n=" << n
      << " verdict=" << to_string(verdict) << " lhs=" << join(lhs) << " rhs=" << join(rhs);
  return out.str();
}

IdentityReport compare_sides(std::string identity, const HoradamParams& params, Index n,
                             std::span<const Rational> lhs, std::span<const Rational> rhs) {
  IdentityReport r = base(std::move(identity), params, n);
  for (const auto& x : lhs) r.lhs.push_back(x.to_string());
  for (const auto& x : rhs) r.rhs.push_back(x.to_string());
  const bool same = lhs.size() == rhs.size() && std::equal(lhs.begin(), lhs.end(), rhs.begin());
  r.verdict = same ? Verdict::equal : Verdict::mismatch;
  return r;
}

IdentityReport compare_sides(std::string identity, const HoradamParams& params, Index n,
                             std::span<const Rational> lhs, std::span<const QuadExt> rhs) {
  IdentityReport r = base(std::move(identity), params, n);
  for (const auto& x : lhs) r.lhs.push_back(x.to_string());
  bool same = lhs.size() == rhs.size();
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    r.rhs.push_back(rhs[i].to_string());
    if (same && (!rhs[i].is_rational() || rhs[i].rat() != lhs[i])) same = false;
  }
  r.verdict = same ? Verdict::equal : Verdict::mismatch;
  return r;
}

IdentityReport skipped_report(std::string identity, const HoradamParams& params, Index n,
                              Verdict verdict) {
  IdentityReport r = base(std::move(identity), params, n);
  r.verdict = verdict;
  return r;
}

}  // namespace horadam

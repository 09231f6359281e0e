#include "horadam/verify.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <ostream>
#include <sstream>
#include <thread>

#include "horadam/horadam_numbers.hpp"
#include "horadam/horadam_octonions.hpp"

namespace horadam {
namespace {

struct IdentityName {
  Identity identity;
  std::string_view name;
};

constexpr IdentityName kNames[] = {
    {Identity::binet, "binet"},
    {Identity::cassini_left, "cassini_left"},
    {Identity::cassini_right, "cassini_right"},
    {Identity::genfun, "genfun"},
    {Identity::norm, "norm"},
    {Identity::sum, "sum"},
    {Identity::w_binet, "w_binet"},
    {Identity::w_cassini, "w_cassini"},
    {Identity::w_genfun, "w_genfun"},
    {Identity::w_sum, "w_sum"},
};

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw UsageError("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

IdentityReport evaluate(Identity identity, const HoradamParams& params, Index n) {
  switch (identity) {
    case Identity::binet:
      return og_binet_check(params, n);
    case Identity::cassini_left:
      return og_cassini(params, n, CassiniOrder::left);
    case Identity::cassini_right:
      return og_cassini(params, n, CassiniOrder::right);
    case Identity::genfun:
      return og_genfun_check(params, n);
    case Identity::norm:
      return og_norm(params, n);
    case Identity::sum:
      return og_sum(params, n);
    case Identity::w_binet:
      return w_binet_check(params, n);
    case Identity::w_cassini:
      return w_cassini_check(params, n);
    case Identity::w_genfun:
      return w_genfun_check(params, n);
    case Identity::w_sum:
      return w_sum_check(params, n);
  }
  throw UsageError("unknown identity");
}

std::vector<IdentityReport> evaluate_point(const GridSpec& grid, const HoradamParams& params) {
  std::vector<Identity> ids = grid.identities;
  std::sort(ids.begin(), ids.end(), [](Identity x, Identity y) { return to_string(x) < to_string(y); });
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  std::vector<IdentityReport> out;
  for (Index n = 0; n <= grid.n_max; ++n) {
    for (Identity id : ids) {
      if (n < min_index(id)) continue;
      out.push_back(run_identity(id, params, n));
    }
  }
  return out;
}

}  // namespace

const std::vector<Identity>& all_identities() {
  static const std::vector<Identity> ids = [] {
    std::vector<Identity> v;
    for (const auto& entry : kNames) v.push_back(entry.identity);
    return v;
  }();
  return ids;
}

std::string_view to_string(Identity identity) {
  for (const auto& entry : kNames) {
    if (entry.identity == identity) return entry.name;
  }
  return "unknown";
}

std::optional<Identity> parse_identity(std::string_view name) {
  for (const auto& entry : kNames) {
    if (entry.name == name) return entry.identity;
  }
  return std::nullopt;
}

std::vector<Identity> parse_identity_list(std::string_view list) {
  if (list == "all") return all_identities();
  std::vector<Identity> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t end = std::min(list.find(',', start), list.size());
    const std::string_view name = list.substr(start, end - start);
    const auto id = parse_identity(name);
    if (!id) throw UsageError("unknown identity '" + std::string(name) + "'");
    out.push_back(*id);
    start = end + 1;
  }
  return out;
}

Index min_index(Identity identity) {
  switch (identity) {
    case Identity::cassini_left:
    case Identity::cassini_right:
    case Identity::w_cassini:
      return 1;
    default:
      return 0;
  }
}

IdentityReport run_identity(Identity identity, const HoradamParams& params, Index n) {
  const std::string name(to_string(identity));
  // Checked before root construction so that pole points with D = 0 report as poles.
  if ((identity == Identity::sum || identity == Identity::w_sum) && has_sum_pole(params)) {
    return skipped_report(name, params, n, Verdict::skipped_pole);
  }
  try {
    return evaluate(identity, params, n);
  } catch (const DegenerateRootError&) {
    return skipped_report(name, params, n, Verdict::skipped_degenerate);
  } catch (const PoleError&) {
    return skipped_report(name, params, n, Verdict::skipped_pole);
  }
}

IntRange IntRange::parse(std::string_view text) {
  const std::size_t colon = text.find(':', text.empty() ? 0 : 1);
  if (colon == std::string_view::npos) {
    const std::int64_t v = parse_int(text);
    return {v, v};
  }
  return {parse_int(text.substr(0, colon)), parse_int(text.substr(colon + 1))};
}

void GridSpec::validate() const {
  for (const IntRange* r : {&a, &b, &p, &q}) {
    if (r->lo > r->hi) {
      throw UsageError("empty range " + std::to_string(r->lo) + ":" + std::to_string(r->hi));
    }
  }
  if (identities.empty()) throw UsageError("no identities selected");
}

std::vector<HoradamParams> GridSpec::points() const {
  std::vector<HoradamParams> out;
  for (std::int64_t ia = a.lo; ia <= a.hi; ++ia)
    for (std::int64_t ib = b.lo; ib <= b.hi; ++ib)
      for (std::int64_t ip = p.lo; ip <= p.hi; ++ip)
        for (std::int64_t iq = q.lo; iq <= q.hi; ++iq) out.push_back({ia, ib, ip, iq});
  return out;
}

std::string VerifySummary::to_line() const {
  std::ostringstream out;
  out << "summary points=" << points << " degenerate_points=" << degenerate_points
      << " equal=" << equal << " mismatch=" << mismatch << " skipped=" << skipped()
      << " skipped_degenerate=" << skipped_degenerate << " skipped_pole=" << skipped_pole;
  return out.str();
}

VerifySummary run_verify(const GridSpec& grid, std::ostream& out, unsigned jobs) {
  grid.validate();
  const std::vector<HoradamParams> points = grid.points();
  std::vector<std::vector<IdentityReport>> results(points.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      results[i] = evaluate_point(grid, points[i]);
    }
  };
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(points.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  VerifySummary summary;
  summary.points = points.size();
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (is_degenerate(points[i])) ++summary.degenerate_points;
    for (const IdentityReport& r : results[i]) {
      out << r.to_line() << '\n';
      switch (r.verdict) {
        case Verdict::equal:
          ++summary.equal;
          break;
        case Verdict::mismatch:
          ++summary.mismatch;
          break;
        case Verdict::skipped_degenerate:
          ++summary.skipped_degenerate;
          break;
        case Verdict::skipped_pole:
          ++summary.skipped_pole;
          break;
      }
    }
  }
  out << summary.to_line() << '\n';
  return summary;
}

}  // namespace horadam

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "horadam/identity_report.hpp"
#include "horadam/params.hpp"

namespace horadam {

enum class Identity {
  binet,
  cassini_left,
  cassini_right,
  genfun,
  norm,
  sum,
  w_binet,
  w_cassini,
  w_genfun,
  w_sum,
};

/// All identities, sorted by name.
const std::vector<Identity>& all_identities();
std::string_view to_string(Identity identity);
std::optional<Identity> parse_identity(std::string_view name);
/// Comma-separated names; "all" selects every identity. Throws UsageError.
std::vector<Identity> parse_identity_list(std::string_view list);

/// Smallest n an identity is defined at (Cassini needs OG_{n-1}).
Index min_index(Identity identity);

/// Runs one identity at one point. Degenerate and pole points come back as
/// skipped reports instead of throwing.
IdentityReport run_identity(Identity identity, const HoradamParams& params, Index n);

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  /// "LO:HI" or a single value. Throws UsageError.
  static IntRange parse(std::string_view text);
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

struct GridSpec {
  IntRange a{-2, 2};
  IntRange b{-2, 2};
  IntRange p{-2, 2};
  IntRange q{-2, 2};
  Index n_max = 15;
  std::vector<Identity> identities = all_identities();

  /// Throws UsageError for an empty range or empty identity list.
  void validate() const;
  /// Parameter points in lexicographic (a, b, p, q) order.
  std::vector<HoradamParams> points() const;
};

struct VerifySummary {
  std::size_t equal = 0;
  std::size_t mismatch = 0;
  std::size_t skipped_degenerate = 0;
  std::size_t skipped_pole = 0;
  std::size_t points = 0;
  std::size_t degenerate_points = 0;

  std::size_t skipped() const { return skipped_degenerate + skipped_pole; }
  std::string to_line() const;
};

/// Evaluates the grid with up to `jobs` worker threads and writes one report
/// line per (params, n, identity) in lexicographic order, followed by the
/// summary line. Output does not depend on `jobs`.
VerifySummary run_verify(const GridSpec& grid, std::ostream& out, unsigned jobs = 1);

}  // namespace horadam

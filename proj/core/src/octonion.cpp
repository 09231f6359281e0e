#include "horadam/octonion.hpp"

#include <cstdlib>
#include <span>
#include <sstream>
#include <vector>

namespace horadam {
namespace {

using Vec = std::vector<int>;

Vec conj(std::span<const int> v) {
  Vec out(v.begin(), v.end());
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = -out[i];
  return out;
}

Vec sub(const Vec& x, const Vec& y) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
  return out;
}

Vec add(const Vec& x, const Vec& y) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
  return out;
}

// Cayley-Dickson product on vectors of length 2^k.
Vec cd_mul(std::span<const int> x, std::span<const int> y) {
  if (x.size() == 1) return {x[0] * y[0]};
  const std::size_t h = x.size() / 2;
  const auto a = x.first(h), b = x.subspan(h);
  const auto c = y.first(h), d = y.subspan(h);
  const Vec dc = conj(d), cc = conj(c);
  Vec lo = sub(cd_mul(a, c), cd_mul(dc, b));
  Vec hi = add(cd_mul(d, a), cd_mul(b, cc));
  lo.insert(lo.end(), hi.begin(), hi.end());
  return lo;
}

}  // namespace

MultiplicationTable build_table() {
  MultiplicationTable::Rows rows{};
  for (std::size_t i = 0; i < kOctonionDim; ++i) {
    for (std::size_t j = 0; j < kOctonionDim; ++j) {
      Vec ei(kOctonionDim, 0), ej(kOctonionDim, 0);
      ei[i] = 1;
      ej[j] = 1;
      const Vec prod = cd_mul(ei, ej);
      for (std::size_t k = 0; k < kOctonionDim; ++k) {
        if (prod[k] != 0) rows[i][j] = BasisProduct{prod[k], k};
      }
    }
  }
  return MultiplicationTable(rows);
}

const MultiplicationTable& standard_table() {
  static const MultiplicationTable table = build_table();
  return table;
}

std::string MultiplicationTable::to_fixture() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < kOctonionDim; ++i) {
    for (std::size_t j = 0; j < kOctonionDim; ++j) {
      const BasisProduct& e = rows_[i][j];
      out << i << ' ' << j << ' ' << (e.sign < 0 ? "-1" : "+1") << ' ' << e.index << '\n';
    }
  }
  return out.str();
}

}  // namespace horadam

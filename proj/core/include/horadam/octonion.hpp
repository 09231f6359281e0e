#pragma once

#include <array>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>

namespace horadam {

inline constexpr std::size_t kOctonionDim = 8;

/// e_i * e_j = sign * e_index.
struct BasisProduct {
  int sign = 1;
  std::size_t index = 0;

  friend bool operator==(const BasisProduct&, const BasisProduct&) = default;
};

class MultiplicationTable {
 public:
  using Rows = std::array<std::array<BasisProduct, kOctonionDim>, kOctonionDim>;

  explicit MultiplicationTable(const Rows& rows) : rows_(rows) {}

  const BasisProduct& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }

  /// 64 lines "i j sign k", sign written as +1 or -1, row-major.
  std::string to_fixture() const;

  friend bool operator==(const MultiplicationTable&, const MultiplicationTable&) = default;

 private:
  Rows rows_;
};

// Octonions as pairs of quaternions (a, b), multiplied by the doubling rule
//   (a, b)(c, d) = (ac - conj(d) b, da + b conj(c)),
// applied recursively from the reals; the quaternion level satisfies ij = k.
// Basis order: e0..e3 = (1, i, j, k | 0), e4..e7 = (0 | 1, i, j, k).
MultiplicationTable build_table();

/// The table from build_table(), built once.
const MultiplicationTable& standard_table();

namespace detail {

template <typename R>
R zero_like(const R& sample) {
  if constexpr (requires { sample.zero_like(); }) {
    return sample.zero_like();
  } else {
    return R(0);
  }
}

}  // namespace detail

/// Octonion with coefficients in a commutative ring R (Integer, Rational,
/// QuadExt). Coefficient i belongs to basis element e_i; e_0 = 1.
template <typename R>
class Octonion {
 public:
  using Coeffs = std::array<R, kOctonionDim>;

  explicit Octonion(Coeffs coeffs) : coeffs_(std::move(coeffs)) {}

  /// Zero octonion; R must be constructible from 0.
  static Octonion zero() requires std::constructible_from<R, int> {
    return Octonion(filled(R(0)));
  }
  static Octonion zero_like(const R& sample) { return Octonion(filled(detail::zero_like(sample))); }

  const R& operator[](std::size_t i) const { return coeffs_[i]; }
  R& operator[](std::size_t i) { return coeffs_[i]; }
  const Coeffs& coeffs() const { return coeffs_; }

  Octonion operator-() const {
    Octonion out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }
  Octonion& operator+=(const Octonion& rhs) {
    for (std::size_t i = 0; i < kOctonionDim; ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
  }
  Octonion& operator-=(const Octonion& rhs) {
    for (std::size_t i = 0; i < kOctonionDim; ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
  }

  friend Octonion operator+(Octonion lhs, const Octonion& rhs) { return lhs += rhs; }
  friend Octonion operator-(Octonion lhs, const Octonion& rhs) { return lhs -= rhs; }
  friend Octonion operator*(const Octonion& lhs, const Octonion& rhs) { return multiply(lhs, rhs); }

  friend bool operator==(const Octonion& lhs, const Octonion& rhs) {
    return lhs.coeffs_ == rhs.coeffs_;
  }

  /// Bilinear extension of the multiplication table.
  static Octonion multiply(const Octonion& x, const Octonion& y,
                           const MultiplicationTable& table = standard_table()) {
    Octonion out = zero_like(x.coeffs_[0]);
    for (std::size_t i = 0; i < kOctonionDim; ++i) {
      for (std::size_t j = 0; j < kOctonionDim; ++j) {
        const BasisProduct& e = table(i, j);
        R term = x.coeffs_[i] * y.coeffs_[j];
        if (e.sign < 0) {
          out.coeffs_[e.index] -= term;
        } else {
          out.coeffs_[e.index] += term;
        }
      }
    }
    return out;
  }

 private:
  static Coeffs filled(const R& value) {
    Coeffs c{value, value, value, value, value, value, value, value};
    return c;
  }

  Coeffs coeffs_;
};

template <typename R>
Octonion<R> oct_add(const Octonion<R>& x, const Octonion<R>& y) {
  return x + y;
}

template <typename R>
Octonion<R> oct_mul(const Octonion<R>& x, const Octonion<R>& y) {
  return x * y;
}

/// Fixes coefficient 0, negates 1..7.
template <typename R>
Octonion<R> oct_conj(const Octonion<R>& x) {
  Octonion<R> out = x;
  for (std::size_t i = 1; i < kOctonionDim; ++i) out[i] = -out[i];
  return out;
}

/// Sum of squared coefficients.
template <typename R>
R oct_norm(const Octonion<R>& x) {
  R acc = x[0] * x[0];
  for (std::size_t i = 1; i < kOctonionDim; ++i) acc += x[i] * x[i];
  return acc;
}

template <typename R, typename S>
Octonion<R> oct_scale(const S& s, const Octonion<R>& x) {
  Octonion<R> out = x;
  for (std::size_t i = 0; i < kOctonionDim; ++i) out[i] = R(x[i] * s);
  return out;
}

template <typename R>
std::ostream& operator<<(std::ostream& os, const Octonion<R>& x) {
  for (std::size_t i = 0; i < kOctonionDim; ++i) os << (i == 0 ? "" : " ") << x[i];
  return os;
}

}  // namespace horadam

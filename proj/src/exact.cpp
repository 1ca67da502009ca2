#include "zkframes/exact.hpp"

#include <limits>
#include <utility>

#include "zkframes/error.hpp"

namespace zkf {

namespace {

using BigRational = boost::multiprecision::cpp_rational;

}  // namespace

BigInt determinant(const IntMatrix& m) {
  require(m.rows() == m.cols(), ErrorCode::InvalidArgument, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<BigInt> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
      a[i * n + k] = 0;
    }
    prev = a[k * n + k];
  }
  BigInt d = a[n * n - 1];
  return sign < 0 ? BigInt(-d) : d;
}

ExactInverse::ExactInverse(const IntMatrix& m) : n_(m.rows()) {
  require(m.rows() == m.cols(), ErrorCode::InvalidArgument, "inverse of non-square matrix");
  const std::size_t n = n_;
  std::vector<BigRational> a(n * n), inv(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i * n + j] = m(i, j);
      inv[i * n + j] = i == j ? 1 : 0;
    }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p * n + c] == 0) ++p;
    require(p < n, ErrorCode::InvalidArgument, "singular basis matrix");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a[p * n + j], a[c * n + j]);
        std::swap(inv[p * n + j], inv[c * n + j]);
      }
    const BigRational pivot = a[c * n + c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c * n + j] /= pivot;
      inv[c * n + j] /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i * n + c] == 0) continue;
      const BigRational f = a[i * n + c];
      for (std::size_t j = 0; j < n; ++j) {
        if (a[c * n + j] != 0) a[i * n + j] -= f * a[c * n + j];
        if (inv[c * n + j] != 0) inv[i * n + j] -= f * inv[c * n + j];
      }
    }
  }
  denominator_ = 1;
  for (const auto& x : inv) {
    const BigInt d = boost::multiprecision::denominator(x);
    denominator_ = denominator_ / boost::multiprecision::gcd(denominator_, d) * d;
  }
  numerators_.resize(n * n);
  for (std::size_t i = 0; i < n * n; ++i)
    numerators_[i] = boost::multiprecision::numerator(inv[i]) *
                     (denominator_ / boost::multiprecision::denominator(inv[i]));

  const BigInt limit = BigInt(1) << 31;
  small_ = denominator_ < limit;
  for (const auto& x : numerators_)
    if (abs(x) >= limit) small_ = false;
  if (small_) {
    small_den_ = static_cast<std::int64_t>(denominator_);
    small_num_.reserve(n * n);
    for (const auto& x : numerators_) small_num_.push_back(static_cast<std::int64_t>(x));
  }
}

std::vector<BigInt> ExactInverse::scaled_coordinates(std::span<const std::int64_t> v) const {
  require(v.size() == n_, ErrorCode::InvalidArgument, "vector length does not match basis");
  std::vector<BigInt> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) out[j] += numerators_[i * n_ + j] * v[i];
  }
  return out;
}

bool ExactInverse::in_row_lattice(std::span<const std::int64_t> v) const {
  require(v.size() == n_, ErrorCode::InvalidArgument, "vector length does not match basis");
  if (small_) {
    for (std::size_t j = 0; j < n_; ++j) {
      __int128 acc = 0;
      for (std::size_t i = 0; i < n_; ++i)
        acc += static_cast<__int128>(v[i] % small_den_) * small_num_[i * n_ + j];
      if (acc % small_den_ != 0) return false;
    }
    return true;
  }
  for (const auto& x : scaled_coordinates(v))
    if (x % denominator_ != 0) return false;
  return true;
}

bool solve_mod2(const IntMatrix& a, std::span<const std::int64_t> b, Vec& x) {
  const std::size_t n = a.rows();
  std::vector<std::vector<std::uint8_t>> m(n, std::vector<std::uint8_t>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = static_cast<std::uint8_t>(mod(a(i, j), 2));
    m[i][n] = static_cast<std::uint8_t>(mod(b[i], 2));
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && !m[p][c]) ++p;
    if (p == n) return false;
    std::swap(m[p], m[c]);
    for (std::size_t i = 0; i < n; ++i)
      if (i != c && m[i][c])
        for (std::size_t j = c; j <= n; ++j) m[i][j] ^= m[c][j];
  }
  x.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n];
  return true;
}

}  // namespace zkf

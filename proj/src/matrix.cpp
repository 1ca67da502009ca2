#include "zkframes/matrix.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "zkframes/error.hpp"

namespace zkf {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == m.cols_, ErrorCode::InvalidArgument, "ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<Vec> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v);
}

Vec IntMatrix::row_vec(std::size_t i) const {
  auto r = row(i);
  return {r.begin(), r.end()};
}

std::vector<Vec> IntMatrix::to_rows() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row_vec(i));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  require(cols_ == rhs.rows_, ErrorCode::InvalidArgument, "matrix product shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t l = 0; l < cols_; ++l) {
      const std::int64_t a = (*this)(i, l);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(l, j);
    }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_, ErrorCode::InvalidArgument,
          "matrix sum shape mismatch");
  IntMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const { return *this + (-rhs); }

IntMatrix IntMatrix::operator-() const {
  IntMatrix out = *this;
  for (auto& x : out.data_) x = -x;
  return out;
}

IntMatrix IntMatrix::scaled(std::int64_t factor) const {
  IntMatrix out = *this;
  for (auto& x : out.data_) x *= factor;
  return out;
}

IntMatrix IntMatrix::gram() const {
  IntMatrix g(rows_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < rows_; ++j) {
      const std::int64_t v = dot(row(i), row(j));
      g(i, j) = v;
      g(j, i) = v;
    }
  return g;
}

IntMatrix IntMatrix::reduced_mod(std::int64_t modulus) const {
  IntMatrix out = *this;
  for (auto& x : out.data_) x = mod(x, modulus);
  return out;
}

bool IntMatrix::is_scalar(std::int64_t* value) const {
  if (rows_ != cols_ || rows_ == 0) return false;
  const std::int64_t d = (*this)(0, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? d : 0)) return false;
  if (value) *value = d;
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) os << format_vec(row(i)) << '\n';
  return os.str();
}

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t) {
  std::int64_t old_r = a, r = b, old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * cur_s;
    old_s = cur_s;
    cur_s = tmp;
    tmp = old_t - q * cur_t;
    old_t = cur_t;
    cur_t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

std::int64_t isqrt(std::int64_t n) {
  if (n <= 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  // Compare by division so (r + 1)^2 never overflows near 2^63.
  while (r > 0 && r > n / r) --r;
  while (r + 1 <= n / (r + 1)) ++r;
  return r;
}

std::string format_vec(std::span<const std::int64_t> v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace zkf

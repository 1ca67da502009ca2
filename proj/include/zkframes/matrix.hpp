#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace zkf {

using Vec = std::vector<std::int64_t>;

/// Dense row-major matrix of 64-bit integers. Rows double as lattice or code
/// vectors, so row access returns spans.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<Vec>& rows);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<std::int64_t> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const std::int64_t> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  Vec row_vec(std::size_t i) const;
  std::vector<Vec> to_rows() const;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  IntMatrix operator-() const;
  IntMatrix scaled(std::int64_t factor) const;

  /// Gram matrix of the rows, B * B^T.
  IntMatrix gram() const;

  /// Entry-wise reduction into {0, ..., modulus-1}.
  IntMatrix reduced_mod(std::int64_t modulus) const;

  /// True when the matrix is value*I for some value (written to *value).
  bool is_scalar(std::int64_t* value = nullptr) const;

  void swap_rows(std::size_t a, std::size_t b);

  bool operator==(const IntMatrix& other) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

/// Non-negative residue.
inline std::int64_t mod(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Extended gcd: returns g = gcd(a, b) >= 0 with s*a + t*b = g.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t);

std::int64_t isqrt(std::int64_t n);

std::string format_vec(std::span<const std::int64_t> v, char sep = ' ');

}  // namespace zkf

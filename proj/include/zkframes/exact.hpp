#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "zkframes/matrix.hpp"

namespace zkf {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<std::int64_t>;

/// Exact determinant (fraction-free Bareiss elimination).
BigInt determinant(const IntMatrix& m);

/// Exact inverse of a nonsingular integer matrix written as numerators / denominator,
/// with denominator > 0 the least common denominator of the entries.
class ExactInverse {
 public:
  explicit ExactInverse(const IntMatrix& m);

  const BigInt& denominator() const { return denominator_; }

  /// Coordinates of the row vector v in the row basis of m, scaled by the
  /// denominator: v * m^{-1} * denominator.
  std::vector<BigInt> scaled_coordinates(std::span<const std::int64_t> v) const;

  /// True when v * m^{-1} is an integer vector, i.e. v lies in the row lattice.
  bool in_row_lattice(std::span<const std::int64_t> v) const;

 private:
  std::size_t n_ = 0;
  BigInt denominator_;
  std::vector<BigInt> numerators_;  // row-major n x n
  // Fast path when everything fits in 64 bits.
  bool small_ = false;
  std::int64_t small_den_ = 0;
  std::vector<std::int64_t> small_num_;
};

/// Solution of A x = b over GF(2) for square A (entries taken mod 2).
/// Returns false if A is singular mod 2.
bool solve_mod2(const IntMatrix& a, std::span<const std::int64_t> b, Vec& x);

}  // namespace zkf

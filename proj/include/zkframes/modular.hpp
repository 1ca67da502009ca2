#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "zkframes/exact.hpp"
#include "zkframes/matrix.hpp"

namespace zkf {

/// Strong echelon (Howell) form of a submodule of Z_m^n.
///
/// Every pivot row has zeros left of its pivot column, the pivot entry
/// divides the modulus, and the row set is saturated: any element of the
/// module that vanishes on the first j columns is a combination of the pivot
/// rows with pivot column >= j. That makes membership a single reduction pass
/// and the cardinality the product of modulus / pivot.
class HowellForm {
 public:
  HowellForm(std::span<const Vec> generators, std::int64_t modulus, std::size_t length);

  std::int64_t modulus() const noexcept { return modulus_; }
  std::size_t length() const noexcept { return length_; }
  const std::vector<Vec>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivot_columns() const noexcept { return pivot_cols_; }

  BigInt cardinality() const;
  bool contains(std::span<const std::int64_t> v) const;

  /// Upper-triangular integer basis of {x in Z^n : x mod m in module}:
  /// pivot rows lifted to [0, m), and m*e_j on non-pivot columns.
  IntMatrix lattice_basis() const;

 private:
  std::int64_t modulus_;
  std::size_t length_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivot_cols_;
};

}  // namespace zkf

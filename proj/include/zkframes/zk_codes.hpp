#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "zkframes/exact.hpp"
#include "zkframes/matrix.hpp"
#include "zkframes/modular.hpp"

namespace zkf {

/// A Z_k-submodule of Z_k^n given by generator rows.
///
/// Entries are reduced into {0, ..., k-1} at construction. The generator
/// rows must be independent: the product of their additive orders has to
/// equal the number of codewords, which is checked against a strong
/// echelon form of the module.
class ZkCode {
 public:
  ZkCode(std::int64_t modulus, std::vector<Vec> generators);

  std::int64_t modulus() const noexcept { return modulus_; }
  std::size_t length() const noexcept { return length_; }
  const std::vector<Vec>& generators() const noexcept { return generators_; }
  const std::vector<std::int64_t>& row_orders() const noexcept { return row_orders_; }
  IntMatrix generator_matrix() const { return IntMatrix::from_rows(generators_); }

  BigInt cardinality() const { return echelon_->cardinality(); }
  const HowellForm& echelon() const noexcept { return *echelon_; }

  /// Membership of x (any integer lift) in the code.
  bool contains(std::span<const std::int64_t> x) const { return echelon_->contains(x); }

 private:
  std::int64_t modulus_;
  std::size_t length_;
  std::vector<Vec> generators_;
  std::vector<std::int64_t> row_orders_;
  std::shared_ptr<const HowellForm> echelon_;
};

/// Additive order of v in Z_k^n: k / gcd(k, v_1, ..., v_n).
std::int64_t additive_order(std::span<const std::int64_t> v, std::int64_t modulus);

/// Sum over coordinates of min(x_i, k - x_i)^2.
std::int64_t euclidean_weight(std::span<const std::int64_t> x, std::int64_t modulus);

/// Negacirculant matrix with the given first row: each row is the previous
/// row shifted right, with the wrapped entry negated.
IntMatrix negacirculant(std::span<const std::int64_t> first_row);
IntMatrix circulant(std::span<const std::int64_t> first_row);

/// Generator (I_2m | [[A, B], [-B^T, A^T]]) with A, B negacirculant.
ZkCode build_four_negacirculant(std::int64_t modulus, std::span<const std::int64_t> r_a,
                                std::span<const std::int64_t> r_b);

/// Z_4 code with generator (I_a | top_right ; O | bottom_right), where the
/// bottom rows carry only even entries (typically 2I_b | 2D).
ZkCode build_z4_two_block(std::size_t a, std::size_t b, const IntMatrix& top_right,
                          const IntMatrix& bottom_right);

/// Generator (I_{p+1} | [[0, 1...1], [1...1^T, R]]) with R circulant of order p.
ZkCode build_bordered_circulant(std::int64_t modulus, std::span<const std::int64_t> first_row);

/// G G^T == 0 (mod k) and #C == k^(n/2).
bool is_self_dual(const ZkCode& code);

/// Self-dual code over Z_2k whose Euclidean weights are all divisible by 4k.
bool is_type_ii(const ZkCode& code);

/// Default codeword budget for exhaustive weight computation.
inline constexpr std::uint64_t kDefaultCodewordBudget = std::uint64_t{1} << 31;

/// Exact minimum Euclidean weight over nonzero codewords.
///
/// Depth-first over message coefficients; a coordinate becomes fixed once
/// every remaining generator row vanishes on it, and a branch is cut when the
/// weight of its fixed coordinates already reaches the best weight found.
/// Only one codeword of each pair {c, -c} is visited. Throws BudgetExceeded
/// when the code has more than `budget` codewords.
std::int64_t min_euclidean_weight(const ZkCode& code,
                                  std::uint64_t budget = kDefaultCodewordBudget);

/// Outcome of a search over two information sets; lower <= d_E <= upper.
struct SplitWeightBound {
  std::int64_t t = 0;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  std::uint64_t visited = 0;
  bool exact() const { return lower == upper; }
};

/// True for a self-dual code whose generator is (I | A) with n/2 rows. Then
/// A A^T == -I, so both halves of the coordinates are information sets.
bool has_split_form(const ZkCode& code);

/// Vectors the split search visits for depth t (saturates at 2^64 - 1).
std::uint64_t split_search_size(const ZkCode& code, std::int64_t t);

/// Visits every codeword with a half of Euclidean weight <= t, through
/// u -> (u, uA) and v -> (-v A^T, v) (the second pass is skipped when
/// -A^T == A). A codeword of weight <= 2t + 1 has such a half, so d_E equals
/// the lightest weight seen when that is <= 2t + 1, and d_E >= 2t + 2
/// otherwise. The lower bound is rounded up to a multiple of k (2k for Type
/// II), since A_k(C) is integral. Throws PreconditionViolation unless
/// has_split_form, BudgetExceeded after `budget` visited vectors.
SplitWeightBound split_weight_search(const ZkCode& code, std::int64_t t, std::uint64_t budget);

}  // namespace zkf

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zkframes/lattices.hpp"
#include "zkframes/matrix.hpp"
#include "zkframes/zk_codes.hpp"

namespace zkf {

/// Integer matrix M with M^T = -M and M M^T = m I, together with (k, l)
/// where m + l^2 == -1 (mod k).
struct SkewSeed {
  IntMatrix matrix;
  std::int64_t k = 0;
  std::int64_t m = 0;
  std::int64_t ell = 0;
  /// Non-fatal remarks, e.g. order == 2 (mod 4) with m not a square.
  std::vector<std::string> warnings;

  std::size_t order() const noexcept { return matrix.rows(); }
};

/// Validates all three conditions. SkewViolation for the two matrix
/// identities, CongruenceViolation for m + l^2 == -1 (mod k).
SkewSeed make_skew_seed(IntMatrix matrix, std::int64_t k, std::int64_t m, std::int64_t ell);

/// Bordered quadratic-residue matrix P_{p+1} for a prime p == 3 (mod 4).
IntMatrix build_paley_skew(std::int64_t p);

/// [[A1, A2], [-A2^T, A1^T]] with A1, A2 negacirculant. Throws SkewViolation
/// if the result is not skew or M M^T is not scalar.
IntMatrix build_skew_negacirculant(std::span<const std::int64_t> r_a1,
                                   std::span<const std::int64_t> r_a2);

/// Code with generator (I | M + l I) over Z_k.
ZkCode build_code_from_skew(const SkewSeed& seed);

struct FrameQuadruple {
  std::int64_t a = 0, b = 0, c = 0, d = 0;
  bool operator==(const FrameQuadruple&) const = default;
};

/// b == c - l d and d == a + l b (mod k).
bool satisfies_congruences(std::int64_t k, std::int64_t ell, const FrameQuadruple& q);

/// (a^2 + m b^2 + c^2 + m d^2) / k. Throws CongruenceViolation.
std::int64_t frame_constant(const SkewSeed& seed, const FrameQuadruple& q);

/// Rows of [[aI+bM, cI+dM], [-cI+dM, aI-bM]] at scale k, i.e. the frame in
/// the scaled coordinates of A_k(C(M)). Both the Gram identity and code
/// membership of every row are verified.
Frame build_frame_matrix(const SkewSeed& seed, const FrameQuadruple& q);

/// First (a, b, c, d) with a^2 + m b^2 + c^2 + m d^2 = k * target and the
/// congruences, scanning d, b, a over |x| ascending (positive before
/// negative) and solving for c. The box |a|,|c| <= sqrt(k N),
/// |b|,|d| <= sqrt(k N / m) is exhaustive, so nullopt is a proof.
std::optional<FrameQuadruple> find_quadruple(std::int64_t k, std::int64_t m, std::int64_t ell,
                                             std::int64_t target);

}  // namespace zkf

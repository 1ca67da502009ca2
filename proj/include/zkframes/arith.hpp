#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zkframes/lattices.hpp"
#include "zkframes/skew_frames.hpp"

namespace zkf {

bool is_prime(std::int64_t n);

/// Prime factorisation by trial division, ascending primes with exponents.
/// Throws OutOfRange for n >= 2^62.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

/// One of the eight families p = (a^2 + m b^2 + c^2 + m d^2) / k with
/// b == c - l d, d == a + l b (mod k), and its exceptional primes.
struct RepresentationCase {
  char label;
  std::int64_t k, m, ell;
  std::vector<std::int64_t> excluded_primes;
};

const std::vector<RepresentationCase>& representation_cases();
/// Throws InvalidArgument for labels outside a..h.
const RepresentationCase& representation_case(char label);

/// Exhaustive search for p; nullopt means no representation exists.
std::optional<FrameQuadruple> representation_search(const RepresentationCase& rc, std::int64_t p);

/// a^2 + b^2 + c^2 + d^2 = m, scanning a downwards, then b, then c.
std::array<std::int64_t, 4> four_square_decomposition(std::int64_t m);

/// Replaces each consecutive block of four frame vectors f by Q f with
/// Q = [[a,b,c,d],[-b,a,-d,c],[-c,d,a,-b],[-d,-c,b,a]], Q Q^T = m I.
/// Throws BadDimension unless the frame size is divisible by 4.
Frame scale_frame(const Frame& frame, std::int64_t m);

/// k >= min_k and some prime factor of k lies outside `excluded`.
struct StarCondition {
  std::int64_t min_k;
  std::vector<std::int64_t> excluded;
  char case_label;
};

bool star_condition_check(const StarCondition& row, std::int64_t k);

}  // namespace zkf

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "zkframes/exact.hpp"
#include "zkframes/matrix.hpp"
#include "zkframes/zk_codes.hpp"

namespace zkf {

inline constexpr std::uint64_t kDefaultNodeBudget = 4000000000ULL;

/// A full-rank lattice in R^n stored as an integer basis B together with a
/// scale s: the actual lattice is B / sqrt(s). Inner products of actual
/// vectors are (x . y) / s.
class Lattice {
 public:
  /// `reduce` runs LLL on the basis first. Throws InvalidArgument for a
  /// singular or non-square basis.
  Lattice(IntMatrix basis, std::int64_t scale, bool reduce = true);

  /// Lattice generated by `generators` (scaled coordinates). `modulus` must be
  /// a positive integer D with D*Z^n contained in the lattice; the basis is
  /// read off a strong echelon form mod D.
  static Lattice from_generators(std::span<const Vec> generators, std::int64_t scale,
                                 std::int64_t modulus, bool reduce = true);

  std::size_t dimension() const noexcept { return basis_.rows(); }
  std::int64_t scale() const noexcept { return scale_; }
  const IntMatrix& basis() const noexcept { return basis_; }

  /// B * B^T; divide by scale for the actual Gram matrix.
  const IntMatrix& gram_numerator() const noexcept { return gram_; }
  /// det(B)^2 / scale^n as an exact fraction is det of the actual Gram.
  const BigInt& basis_determinant() const noexcept { return det_; }

  bool is_integral() const;
  bool is_unimodular() const;
  /// Integral with every norm even.
  bool is_even() const;
  bool is_odd() const { return is_integral() && !is_even(); }

  /// Exact membership of a vector given in scaled coordinates.
  bool contains(std::span<const std::int64_t> v) const;

  /// Smallest D > 0 with D*Z^n inside the lattice (in scaled coordinates).
  std::int64_t exponent() const;

  Rational norm(std::span<const std::int64_t> v) const { return {dot(v, v), scale_}; }
  Rational inner(std::span<const std::int64_t> a, std::span<const std::int64_t> b) const {
    return {dot(a, b), scale_};
  }

  /// Same lattice written with scale * factor^2.
  Lattice rescaled(std::int64_t factor) const;
  /// Divide out common factors g of the basis entries with g^2 | scale.
  Lattice simplified() const;

 private:
  struct Cache;

  IntMatrix basis_;
  std::int64_t scale_;
  IntMatrix gram_;
  BigInt det_;
  std::shared_ptr<Cache> cache_;
};

/// n vectors of a lattice (in its scaled coordinates) with pairwise inner
/// products norm * delta_ij in the actual metric.
struct Frame {
  std::int64_t norm = 0;
  std::int64_t scale = 1;
  std::vector<Vec> vectors;
};

/// Gram of the scaled vectors equals norm * scale * I.
bool is_orthogonal_frame(const Frame& frame);

/// Vector counts per norm, up to and including `bound`.
struct ThetaPrefix {
  Rational bound{0};
  std::map<Rational, std::uint64_t> counts;

  std::uint64_t at(const Rational& norm) const {
    auto it = counts.find(norm);
    return it == counts.end() ? 0 : it->second;
  }
};

/// A_k(C) = {x in Z^n : x mod k in C} / sqrt(k), at scale k. Throws
/// NotSelfDual unless C is self-dual.
Lattice construction_a(const ZkCode& code);

Lattice integer_lattice(std::size_t n);
/// E_8 as D_8 plus the all-halves glue, at scale 4.
Lattice e8_lattice();

/// Exact minimum norm over nonzero vectors.
Rational min_norm(const Lattice& lattice, std::uint64_t node_budget = kDefaultNodeBudget);

/// Counts of all lattice vectors (both signs) with norm <= max_norm.
ThetaPrefix theta_prefix(const Lattice& lattice, const Rational& max_norm,
                         std::uint64_t node_budget = kDefaultNodeBudget);

/// Counts for the translate shift + lattice (shift in scaled coordinates).
ThetaPrefix coset_theta_prefix(const Lattice& lattice, std::span<const std::int64_t> shift,
                               const Rational& max_norm,
                               std::uint64_t node_budget = kDefaultNodeBudget);

/// All vectors of exact norm `norm` up to sign (first nonzero entry positive),
/// sorted lexicographically.
std::vector<Vec> vectors_of_norm(const Lattice& lattice, const Rational& norm,
                                 std::uint64_t node_budget = kDefaultNodeBudget);

/// Even sublattice L0 of an odd unimodular L and the four cosets of L0 in
/// its dual. Everything lives at scale 4 * scale(L). cosets[0] is zero,
/// L = L0 + {cosets[0], cosets[2]} and the shadow is L0 + {cosets[1], cosets[3]}.
struct ShadowDecomposition {
  Lattice even_sublattice;
  Lattice dual_of_even;
  std::array<Vec, 4> cosets;
  std::int64_t scale;
  /// Generators of L0 (used to build the neighbours).
  std::vector<Vec> generators;
  std::int64_t modulus;
};

/// Throws NotOdd for an even lattice, PreconditionViolation if L is not
/// unimodular.
ShadowDecomposition even_sublattice_and_shadow(const Lattice& lattice);

/// The two even unimodular neighbours L0 + L1 and L0 + L3. Throws
/// BadDimension unless the dimension is a multiple of 8.
std::pair<Lattice, Lattice> even_neighbors(const Lattice& lattice);

/// Lambda_x = Lambda_x^+ u (x/2 + y + Lambda_x^+), where Lambda_x^+ is the
/// set of v with (x, v) even. x and y are in the scaled coordinates of the
/// input. Throws PreconditionViolation naming the failing condition.
Lattice two_neighbor_at_vector(const Lattice& lattice, std::span<const std::int64_t> x,
                               std::span<const std::int64_t> y);

/// All frame vectors lie in L and form a frame of the right size.
bool contains_frame(const Lattice& lattice, const Frame& frame);

/// Exhaustive search for a k-frame. Returns nullopt only when the search
/// proved that none exists; throws BudgetExceeded when it was cut short.
std::optional<Frame> find_frame(const Lattice& lattice, std::int64_t k,
                                std::uint64_t node_budget = kDefaultNodeBudget);

/// Indices of `size` pairwise orthogonal vectors, chosen by backtracking
/// over the given order; nullopt when no such set exists.
std::optional<std::vector<std::size_t>> orthogonal_clique(const std::vector<Vec>& vectors,
                                                          std::size_t size,
                                                          std::uint64_t node_budget);

}  // namespace zkf

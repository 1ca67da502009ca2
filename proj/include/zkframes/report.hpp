#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zkframes/lattices.hpp"

namespace zkf {

/// Cheap isometry invariants used to match a code's lattice to a named one.
struct Fingerprint {
  std::size_t dimension = 0;
  bool unimodular = false, even = false;
  Rational min{0};
  std::uint64_t min_count = 0;
  bool operator==(const Fingerprint&) const = default;
};

/// Throws BudgetExceeded.
Fingerprint fingerprint(const Lattice& lattice, std::uint64_t node_budget = kDefaultNodeBudget);
std::string fingerprint_text(const Fingerprint& f);

enum class Verdict { Yes, No, Unknown };

const char* verdict_name(Verdict v);

struct FrameReport {
  std::string lattice_id;
  std::int64_t k = 0;
  Verdict verdict = Verdict::Unknown;
  /// One record per step, in the order the argument is read.
  std::vector<std::string> chain;
  /// Why the verdict is "no" or "unknown".
  std::string reason;
  /// For "yes": a verified k-frame, given in the coordinates of
  /// catalog_lattice(frame_lattice). That is lattice_id itself, or a catalog
  /// code whose Construction A is claimed isometric to it.
  std::optional<Frame> frame;
  std::string frame_lattice;
};

inline constexpr std::uint64_t kDefaultReportBudget = 200000000ULL;

/// Decides whether the catalog lattice contains a k-frame. Routes, in order:
/// a frame built from the lattice's skew seed, a catalog code over Z_k whose
/// lattice fingerprint matches, scaling a frame for a proper divisor of k
/// (dimension divisible by 4), and finally an exhaustive search. "no" is
/// returned only with a proof; a search cut off by `budget` gives "unknown".
/// Throws UnknownLattice, InvalidArgument for k < 1.
FrameReport frame_existence_report(const std::string& lattice_id, std::int64_t k,
                                   std::uint64_t budget = kDefaultReportBudget);

}  // namespace zkf

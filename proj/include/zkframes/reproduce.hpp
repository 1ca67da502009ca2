#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zkframes/lattices.hpp"
#include "zkframes/zk_codes.hpp"

namespace zkf {

/// Exact d_E when it could be established, else the interval that was.
struct WeightCertificate {
  std::optional<std::int64_t> exact;
  std::int64_t lower = 0, upper = 0;
  std::string method;
};

/// Enumerates codewords when there are at most `codeword_budget`. Otherwise
/// a code with generator (I | A) gets split_weight_search within
/// `node_budget`, and if that leaves d_E below k^2 undecided, the lattice
/// route min(A_k(C)) = min{k, d_E/k}: d_E = k * min when the minimum is below
/// k, d_E >= k^2 otherwise. Either is exact once it meets the upper bound.
/// Throws BudgetExceeded when no route gives a bound.
WeightCertificate certify_min_euclidean_weight(const ZkCode& code, std::uint64_t codeword_budget,
                                               std::uint64_t node_budget);

/// Minimum norm of l = A_k(C) for a self-dual code C: Fincke-Pohst within
/// `lattice_budget` nodes, else min{k, d_E/k} from
/// certify_min_euclidean_weight(code, codeword_budget, node_budget). value is
/// empty when neither decides.
struct MinNormCertificate {
  std::optional<Rational> value;
  std::string method;
};

MinNormCertificate min_norm_via_code(const Lattice& l, const ZkCode& code, std::uint64_t lattice_budget,
                                     std::uint64_t codeword_budget, std::uint64_t node_budget);

enum class CheckStatus { Pass, Fail, Unknown, Skip };

const char* check_status_name(CheckStatus s);

struct Check {
  CheckStatus status = CheckStatus::Pass;
  std::string subject;
  std::string detail;
};

/// "PASS subject: detail".
std::string format_check(const Check& c);

struct ReproduceOptions {
  /// Run lattice minima above dimension 32 (above 28 for the lattice table)
  /// and the dimension-36 theta.
  bool slow = false;
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::uint64_t codeword_budget = kDefaultCodewordBudget;
};

/// table1 .. table9, figure1 .. figure3, text-codes, representations,
/// theta, frames.
std::vector<std::string> reproduce_targets();

/// Throws InvalidArgument for an unknown target.
std::vector<Check> reproduce(const std::string& target, const ReproduceOptions& options = {});

}  // namespace zkf

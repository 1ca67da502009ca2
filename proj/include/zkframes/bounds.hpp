#pragma once

#include <cstdint>
#include <string>

#include "zkframes/zk_codes.hpp"

namespace zkf {

enum class CodeType { Any, TypeI, TypeII };

struct BoundProfile {
  std::int64_t n = 0;
  std::int64_t k = 0;
  CodeType type = CodeType::Any;
  /// Tightest bound known for (n, k, type) and the clause that gave it.
  std::int64_t bound = 0;
  std::string rule;
  /// The bound used to define extremality (independent of the type).
  std::int64_t definition_bound = 0;
  std::string definition_rule;
};

/// Throws OutOfRange for n > 48, InvalidArgument for n < 1 or k < 2.
BoundProfile d_e_upper_bound(std::int64_t n, std::int64_t k, CodeType type = CodeType::Any);

enum class Extremality { Extremal, NearExtremal, Neither };

struct Classification {
  Extremality label = Extremality::Neither;
  BoundProfile profile;
  /// Near-extremal is only meaningful when no extremal code of that length
  /// exists; that side condition is never checked here.
  bool side_condition_unchecked = false;
};

Classification classify(std::int64_t n, std::int64_t k, std::int64_t d_e,
                        CodeType type = CodeType::Any);
Classification classify(const ZkCode& code, std::int64_t d_e, CodeType type = CodeType::Any);

const char* extremality_name(Extremality e) noexcept;

/// 2 floor(n/24) + 2, or 3 when n = 23.
std::int64_t unimodular_min_norm_bound(std::int64_t n);

}  // namespace zkf

#include "zkframes/bounds.hpp"

#include "zkframes/error.hpp"

namespace zkf {

namespace {

struct Clause {
  std::int64_t value;
  const char* rule;
};

// Ordered: the special lengths take precedence over the generic clause.
Clause definition_clause(std::int64_t n, std::int64_t k) {
  const std::int64_t q = n / 24;
  if (n == 23 && k >= 4) return {3 * k, "n = 23, k >= 4: 3k"};
  if ((n == 22 || n == 46) && k == 2) return {4 * q + 6, "n = 22, 46, k = 2: 4 floor(n/24) + 6"};
  if (n == 47 && k == 4) return {20, "n = 47, k = 4: 20"};
  return {2 * k * q + 2 * k, "2k floor(n/24) + 2k"};
}

}  // namespace

BoundProfile d_e_upper_bound(std::int64_t n, std::int64_t k, CodeType type) {
  require(n >= 1, ErrorCode::InvalidArgument, "length must be positive");
  require(k >= 2, ErrorCode::InvalidArgument, "modulus must be at least 2");
  require(n <= 48, ErrorCode::OutOfRange, "bounds are only tabulated for n <= 48");
  BoundProfile p;
  p.n = n;
  p.k = k;
  p.type = type;
  const Clause def = definition_clause(n, k);
  p.definition_bound = def.value;
  p.definition_rule = def.rule;
  p.bound = def.value;
  p.rule = def.rule;
  auto tighten = [&](std::int64_t value, const char* rule) {
    if (value < p.bound) {
      p.bound = value;
      p.rule = rule;
    }
  };
  const std::int64_t q = n / 24;
  if (k == 2)
    tighten(n % 24 == 22 ? 4 * q + 6 : 4 * q + 4,
            n % 24 == 22 ? "k = 2, n == 22 (mod 24): 4 floor(n/24) + 6"
                         : "k = 2: 4 floor(n/24) + 4");
  if (k == 3) tighten(3 * (n / 12) + 3, "k = 3: 3 floor(n/12) + 3");
  if (k == 4)
    tighten(n % 24 == 23 ? 8 * q + 12 : 8 * q + 8,
            n % 24 == 23 ? "k = 4, n == 23 (mod 24): 8 floor(n/24) + 12"
                         : "k = 4: 8 floor(n/24) + 8");
  if (n == 48) tighten(6 * k, "n = 48: 6k");
  if (type == CodeType::TypeI) {
    if (n == 24) tighten(3 * k, "Type I, n = 24: 3k");
    if (n == 48) tighten(5 * k, "Type I, n = 48: 5k");
    if (n == 28 && k >= 4) tighten(3 * k, "Type I, n = 28, k >= 4: 3k");
  }
  return p;
}

Classification classify(std::int64_t n, std::int64_t k, std::int64_t d_e, CodeType type) {
  Classification c;
  c.profile = d_e_upper_bound(n, k, type);
  const std::int64_t b = c.profile.definition_bound;
  if (d_e == b) {
    c.label = Extremality::Extremal;
  } else if (d_e + k == b) {
    c.label = Extremality::NearExtremal;
    c.side_condition_unchecked = true;
  }
  return c;
}

Classification classify(const ZkCode& code, std::int64_t d_e, CodeType type) {
  return classify(static_cast<std::int64_t>(code.length()), code.modulus(), d_e, type);
}

const char* extremality_name(Extremality e) noexcept {
  switch (e) {
    case Extremality::Extremal: return "extremal";
    case Extremality::NearExtremal: return "near-extremal";
    case Extremality::Neither: return "neither";
  }
  return "neither";
}

std::int64_t unimodular_min_norm_bound(std::int64_t n) {
  require(n >= 1, ErrorCode::InvalidArgument, "dimension must be positive");
  return n == 23 ? 3 : 2 * (n / 24) + 2;
}

}  // namespace zkf

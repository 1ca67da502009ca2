#include <doctest.h>

#include "zkframes/bounds.hpp"
#include "zkframes/error.hpp"

using namespace zkf;

TEST_CASE("d_E bound examples") {
  CHECK(d_e_upper_bound(20, 5).bound == 10);
  CHECK(d_e_upper_bound(22, 2).bound == 6);
  CHECK(d_e_upper_bound(48, 4, CodeType::TypeI).bound == 20);
  CHECK(d_e_upper_bound(47, 4).bound == 20);
  CHECK(d_e_upper_bound(48, 5).bound == 30);
  CHECK(d_e_upper_bound(23, 5).bound == 15);
  CHECK(d_e_upper_bound(24, 5, CodeType::TypeI).bound == 15);
  CHECK(d_e_upper_bound(28, 5, CodeType::TypeI).bound == 15);
  CHECK(d_e_upper_bound(28, 5).bound == 20);
  CHECK(d_e_upper_bound(46, 2).bound == 10);
  CHECK_THROWS_AS(d_e_upper_bound(49, 3), Error);
  try {
    d_e_upper_bound(49, 3);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfRange);
  }
}

TEST_CASE("definition clauses take precedence over the generic one") {
  CHECK(d_e_upper_bound(23, 4).definition_bound == 12);
  CHECK(d_e_upper_bound(23, 3).definition_bound == 6);
  CHECK(d_e_upper_bound(22, 2).definition_bound == 6);
  CHECK(d_e_upper_bound(46, 2).definition_bound == 10);
  CHECK(d_e_upper_bound(47, 4).definition_bound == 20);
  CHECK(d_e_upper_bound(47, 5).definition_bound == 20);
  CHECK(d_e_upper_bound(36, 4).definition_bound == 16);
}

TEST_CASE("bounds are monotone in k where the clauses scale") {
  for (std::int64_t n = 1; n <= 48; ++n)
    for (std::int64_t k = 5; k < 40; ++k)
      for (auto t : {CodeType::Any, CodeType::TypeI, CodeType::TypeII})
        CHECK(d_e_upper_bound(n, k, t).bound <= d_e_upper_bound(n, k + 1, t).bound);
}

TEST_CASE("rule names the clause") {
  CHECK_FALSE(d_e_upper_bound(20, 5).rule.empty());
  CHECK(d_e_upper_bound(48, 4, CodeType::TypeI).rule != d_e_upper_bound(48, 4).rule);
}

TEST_CASE("classification") {
  CHECK(classify(20, 5, 10).label == Extremality::Extremal);
  const auto near = classify(28, 5, 15, CodeType::TypeI);
  CHECK(near.label == Extremality::NearExtremal);
  CHECK(near.side_condition_unchecked);
  CHECK(classify(28, 5, 10).label == Extremality::Neither);
  // Binary repetition code of length 2: 2 + 2 meets the bound 4.
  const auto rep = classify(2, 2, 2);
  CHECK(rep.profile.definition_bound == 4);
  CHECK(rep.label == Extremality::NearExtremal);
  CHECK(rep.side_condition_unchecked);
  CHECK(std::string(extremality_name(Extremality::Neither)) == "neither");
}

TEST_CASE("unimodular minimum norm bound") {
  CHECK(unimodular_min_norm_bound(12) == 2);
  CHECK(unimodular_min_norm_bound(23) == 3);
  CHECK(unimodular_min_norm_bound(36) == 4);
  CHECK(unimodular_min_norm_bound(48) == 6);
  CHECK(unimodular_min_norm_bound(1) == 2);
}

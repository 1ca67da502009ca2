#include <doctest.h>

#include <algorithm>

#include "zkframes/arith.hpp"
#include "zkframes/catalog.hpp"
#include "zkframes/error.hpp"

using namespace zkf;

namespace {

std::vector<bool> sieve(std::size_t n) {
  std::vector<bool> p(n + 1, true);
  p[0] = false;
  if (n >= 1) p[1] = false;
  for (std::size_t i = 2; i * i <= n; ++i)
    if (p[i])
      for (std::size_t j = i * i; j <= n; j += i) p[j] = false;
  return p;
}

Frame standard_frame(std::size_t n) {
  Frame f{1, 1, {}};
  for (std::size_t i = 0; i < n; ++i) {
    Vec v(n, 0);
    v[i] = 1;
    f.vectors.push_back(v);
  }
  return f;
}

}  // namespace

TEST_CASE("primality against a sieve") {
  const auto p = sieve(20000);
  for (std::int64_t n = -3; n <= 20000; ++n) CHECK(is_prime(n) == (n >= 0 && p[n]));
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(2147483647LL * 3));
}

TEST_CASE("factorisation") {
  const auto p = sieve(5000);
  for (std::int64_t n = 2; n <= 5000; ++n) {
    const auto f = factorize(n);
    std::int64_t prod = 1;
    std::int64_t last = 1;
    for (const auto& [q, e] : f) {
      CHECK(p[q]);
      CHECK(q > last);
      CHECK(e >= 1);
      last = q;
      for (int i = 0; i < e; ++i) prod *= q;
    }
    CHECK(prod == n);
  }
  CHECK(factorize(1).empty());
  const auto big = factorize(999999999989);
  REQUIRE(big.size() == 1);
  CHECK(big[0].second == 1);
  CHECK_THROWS_AS(factorize(std::int64_t{1} << 62), Error);
}

TEST_CASE("representation search examples") {
  const auto a3 = representation_search(representation_case('a'), 3);
  REQUIRE(a3);
  CHECK(*a3 == FrameQuadruple{0, 0, 3, 0});
  CHECK_FALSE(representation_search(representation_case('a'), 7));
  const auto b11 = representation_search(representation_case('b'), 11);
  REQUIRE(b11);
  CHECK(*b11 == FrameQuadruple{6, 1, 1, 0});
  CHECK_THROWS_AS(representation_case('z'), Error);
}

TEST_CASE("representation cases: found exactly for the non-excluded primes below 200") {
  const auto p = sieve(200);
  CHECK(representation_cases().size() == 8);
  for (const auto& rc : representation_cases()) {
    for (std::int64_t q = 2; q < 200; ++q) {
      if (!p[q]) continue;
      CAPTURE(rc.label);
      CAPTURE(q);
      const bool excluded =
          std::find(rc.excluded_primes.begin(), rc.excluded_primes.end(), q) != rc.excluded_primes.end();
      const auto r = representation_search(rc, q);
      CHECK(r.has_value() == !excluded);
      if (r) {
        CHECK(satisfies_congruences(rc.k, rc.ell, *r));
        CHECK(r->a * r->a + rc.m * r->b * r->b + r->c * r->c + rc.m * r->d * r->d == rc.k * q);
      }
    }
  }
}

TEST_CASE("four-square decompositions") {
  using A = std::array<std::int64_t, 4>;
  CHECK(four_square_decomposition(1) == A{1, 0, 0, 0});
  CHECK(four_square_decomposition(2) == A{1, 1, 0, 0});
  CHECK(four_square_decomposition(7) == A{2, 1, 1, 1});
  for (std::int64_t m = 1; m <= 3000; ++m) {
    const auto q = four_square_decomposition(m);
    CHECK(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3] == m);
  }
  CHECK_THROWS_AS(four_square_decomposition(0), Error);
}

TEST_CASE("frame scaling") {
  const Lattice z4 = integer_lattice(4);
  const Frame base = standard_frame(4);
  const Frame two = scale_frame(base, 2);
  // Rows of the quaternion matrix for (1, 1, 0, 0).
  CHECK(two.vectors == std::vector<Vec>{{1, 1, 0, 0}, {-1, 1, 0, 0}, {0, 0, 1, -1}, {0, 0, 1, 1}});
  for (std::int64_t m = 1; m <= 25; ++m) {
    const Frame f = scale_frame(base, m);
    CHECK(f.norm == m);
    CHECK(is_orthogonal_frame(f));
    CHECK(contains_frame(z4, f));
  }
  for (std::int64_t m1 = 1; m1 <= 6; ++m1)
    for (std::int64_t m2 = 1; m2 <= 6; ++m2) {
      const Frame f = scale_frame(scale_frame(base, m1), m2);
      CHECK(f.norm == m1 * m2);
      CHECK(is_orthogonal_frame(f));
    }
  const Lattice d12 = construction_a(catalog_code("C_12_3_D6"));
  const auto three = find_frame(d12, 3);
  REQUIRE(three);
  const Frame six = scale_frame(*three, 2);
  CHECK(six.norm == 6);
  CHECK(contains_frame(d12, six));
  CHECK_THROWS_AS(scale_frame(standard_frame(6), 2), Error);
}

TEST_CASE("condition (*)") {
  const StarCondition row1{2, {2, 5, 7, 13, 23}, 'a'};
  CHECK(star_condition_check(row1, 42));
  CHECK_FALSE(star_condition_check(row1, 14));
  CHECK_FALSE(star_condition_check(row1, 2 * 5 * 7 * 13 * 23));
  CHECK(star_condition_check(row1, 3));
  const auto& d16 = catalog_get("D16_seed");
  REQUIRE(d16.star);
  CHECK(d16.star->min_k == 4);
  CHECK_FALSE(star_condition_check(*d16.star, 6));
  CHECK(star_condition_check(*d16.star, 10));
  CHECK_FALSE(star_condition_check(*d16.star, 3));
  CHECK(star_condition_check(*d16.star, 5));
}

#include <doctest.h>

#include <limits>

#include <random>

#include "oracles.hpp"
#include "zkframes/enumeration.hpp"
#include "zkframes/error.hpp"
#include "zkframes/exact.hpp"
#include "zkframes/modular.hpp"

using namespace zkf;

TEST_CASE("integer helpers") {
  CHECK(mod(-7, 5) == 3);
  CHECK(mod(10, 5) == 0);
  CHECK(gcd(-12, 18) == 6);
  std::int64_t s = 0, t = 0;
  CHECK(ext_gcd(240, 46, s, t) == 2);
  CHECK(s * 240 + t * 46 == 2);
  for (std::int64_t n : {0, 1, 2, 3, 4, 15, 16, 17, 99, 100, 101}) {
    const auto r = isqrt(n);
    CHECK(r * r <= n);
    CHECK((r + 1) * (r + 1) > n);
  }
  CHECK(isqrt(std::int64_t{3037000499} * 3037000499) == 3037000499);
  CHECK(isqrt(std::numeric_limits<std::int64_t>::max()) == 3037000499);
  CHECK(format_vec(Vec{1, -2, 3}) == "1 -2 3");
}

TEST_CASE("matrix arithmetic") {
  const auto a = IntMatrix::from_rows({{1, 2}, {3, 4}});
  const auto b = IntMatrix::from_rows({{0, 1}, {1, 0}});
  CHECK(a * b == IntMatrix::from_rows({{2, 1}, {4, 3}}));
  CHECK(a.transpose() == IntMatrix::from_rows({{1, 3}, {2, 4}}));
  CHECK(a.gram() == IntMatrix::from_rows({{5, 11}, {11, 25}}));
  CHECK(IntMatrix::from_rows({{-1, 5}}).reduced_mod(4) == IntMatrix::from_rows({{3, 1}}));
  std::int64_t v = 0;
  CHECK(IntMatrix::identity(3).scaled(7).is_scalar(&v));
  CHECK(v == 7);
  CHECK_FALSE(a.is_scalar());
}

TEST_CASE("determinant agrees with Laplace expansion") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> e(-9, 9);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 6;
    std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n));
    for (auto& r : rows)
      for (auto& x : r) x = e(rng);
    const IntMatrix m = IntMatrix::from_rows(rows);
    CHECK(static_cast<long double>(determinant(m).convert_to<long long>()) ==
          doctest::Approx(static_cast<double>(oracle::laplace_det(rows))));
  }
}

TEST_CASE("exact inverse decides row-lattice membership") {
  const auto m = IntMatrix::from_rows({{2, 0, 0}, {1, 3, 0}, {0, 1, 5}});
  ExactInverse inv(m);
  CHECK(inv.denominator() == 30);
  CHECK(inv.in_row_lattice(Vec{3, 3, 0}));
  CHECK(inv.in_row_lattice(Vec{3, 4, 5}));
  CHECK_FALSE(inv.in_row_lattice(Vec{1, 0, 0}));
  CHECK_FALSE(inv.in_row_lattice(Vec{0, 0, 1}));
  const auto c = inv.scaled_coordinates(Vec{3, 3, 0});
  CHECK(c[0] == 30);
  CHECK(c[1] == 30);
  CHECK(c[2] == 0);
  CHECK_THROWS_AS(ExactInverse(IntMatrix::from_rows({{1, 2}, {2, 4}})), Error);
}

TEST_CASE("solve over GF(2)") {
  const auto a = IntMatrix::from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 0}});
  Vec x;
  REQUIRE(solve_mod2(a, Vec{0, 1, 1}, x));
  for (std::size_t i = 0; i < 3; ++i) CHECK(mod(dot(a.row(i), x), 2) == (i == 0 ? 0 : 1));
  CHECK_FALSE(solve_mod2(IntMatrix::from_rows({{1, 1}, {1, 1}}), Vec{1, 0}, x));
}

TEST_CASE("Howell form: cardinality and membership against the span") {
  std::mt19937_64 rng(5);
  for (std::int64_t m : {4, 6, 8, 9, 12}) {
    std::uniform_int_distribution<std::int64_t> e(0, m - 1);
    for (int trial = 0; trial < 8; ++trial) {
      const std::size_t n = 4, r = 1 + trial % 3;
      std::vector<Vec> gens(r, Vec(n));
      for (auto& g : gens)
        for (auto& x : g) x = e(rng);
      if (trial % 2) gens[0] = Vec{m / 2, 0, m / 2, 0};
      const HowellForm h(gens, m, n);
      const auto span = oracle::codewords(m, gens);
      CHECK(h.cardinality() == span.size());
      for (int probe = 0; probe < 40; ++probe) {
        Vec v(n);
        for (auto& x : v) x = e(rng);
        CHECK(h.contains(v) == (span.count(v) == 1));
      }
      for (const auto& w : span) CHECK(h.contains(w));
      // The lattice basis spans exactly the lifts of the module.
      const IntMatrix b = h.lattice_basis();
      CHECK(b.rows() == n);
      ExactInverse inv(b);
      for (const auto& w : span) {
        Vec lift = w;
        lift[1] += m;
        CHECK(inv.in_row_lattice(lift));
      }
      CHECK(determinant(b) == BigInt(boost::multiprecision::pow(BigInt(m), n)) / h.cardinality());
    }
  }
}

TEST_CASE("LLL keeps the lattice and shortens the basis") {
  auto b = IntMatrix::from_rows({{1, 0, 0, 12345}, {0, 1, 0, 23456}, {0, 0, 1, 34567}, {0, 0, 0, 99991}});
  const BigInt det_before = abs(determinant(b));
  const IntMatrix before = b;
  lll_reduce(b);
  CHECK(abs(determinant(b)) == det_before);
  ExactInverse inv(b);
  for (std::size_t i = 0; i < 4; ++i) CHECK(inv.in_row_lattice(before.row(i)));
  std::int64_t longest = 0;
  for (std::size_t i = 0; i < 4; ++i) longest = std::max(longest, dot(b.row(i), b.row(i)));
  CHECK(longest < 99991LL * 99991LL);
}

TEST_CASE("ball enumeration matches a box count") {
  const auto basis = IntMatrix::from_rows({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  std::map<std::int64_t, std::uint64_t> got;
  BallSearch s;
  s.radius = 40;
  s.halve = false;
  enumerate_ball(basis, s, [&](std::span<const std::int64_t>, std::int64_t n) {
    ++got[n];
    return s.radius;
  });
  const auto want = oracle::box_counts(basis, 12, 40);
  CHECK(got == want);

  // Halving visits one of each +-pair and skips zero.
  std::uint64_t half = 0;
  s.halve = true;
  enumerate_ball(basis, s, [&](std::span<const std::int64_t>, std::int64_t) {
    ++half;
    return s.radius;
  });
  std::uint64_t all = 0;
  for (const auto& [n, c] : want) all += c;
  CHECK(2 * half + 1 == all);

  // A shifted search counts the translate.
  const Vec shift{1, 0, 0};
  std::uint64_t shifted = 0;
  s.shift = shift;
  s.halve = false;
  enumerate_ball(basis, s, [&](std::span<const std::int64_t> y, std::int64_t n) {
    CHECK(dot(y, y) == n);
    ++shifted;
    return s.radius;
  });
  CHECK(shifted > 0);

  s = BallSearch{};
  s.radius = 1000;
  s.node_budget = 10;
  CHECK_THROWS_AS(enumerate_ball(basis, s, [&](auto, auto) { return s.radius; }), Error);
}

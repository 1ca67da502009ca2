#include <doctest.h>

#include <cmath>
#include <random>

#include "zkframes/catalog.hpp"
#include "zkframes/error.hpp"
#include "zkframes/skew_frames.hpp"

using namespace zkf;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

bool is_square(std::int64_t m) {
  const auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(m))));
  return r * r == m;
}

std::int64_t md(std::int64_t x, std::int64_t m) { return ((x % m) + m) % m; }

}  // namespace

TEST_CASE("seed validation errors") {
  const IntMatrix j = IntMatrix::from_rows({{0, 1}, {-1, 0}});
  CHECK_NOTHROW(make_skew_seed(j, 2, 1, 0));
  CHECK(code_of([&] { make_skew_seed(IntMatrix::from_rows({{0, 1}, {1, 0}}), 2, 1, 0); }) ==
        ErrorCode::SkewViolation);
  CHECK(code_of([&] { make_skew_seed(j, 2, 2, 1); }) == ErrorCode::SkewViolation);  // m wrong
  CHECK(code_of([&] { make_skew_seed(j, 3, 1, 0); }) == ErrorCode::CongruenceViolation);
  CHECK(code_of([&] { make_skew_seed(j, 1, 1, 0); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { make_skew_seed(j, 5, 1, 7); }) == ErrorCode::InvalidArgument);
  const IntMatrix not_scalar = IntMatrix::from_rows({{0, 1, 0}, {-1, 0, 2}, {0, -2, 0}});
  CHECK(code_of([&] { make_skew_seed(not_scalar, 2, 1, 0); }) == ErrorCode::SkewViolation);
  CHECK(code_of([] { build_skew_negacirculant(Vec{1, 0}, Vec{0, 1}); }) == ErrorCode::SkewViolation);
  CHECK(code_of([] { build_skew_negacirculant(Vec{0}, Vec{}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("Paley skew matrices") {
  for (std::int64_t p : {3, 7, 11, 19, 23, 31}) {
    const IntMatrix m = build_paley_skew(p);
    CHECK(m.rows() == static_cast<std::size_t>(p + 1));
    CHECK(m.transpose() == -m);
    std::int64_t s = 0;
    CHECK(m.gram().is_scalar(&s));
    CHECK(s == p);
  }
  CHECK(code_of([] { build_paley_skew(5); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { build_paley_skew(15); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("catalog seeds: identities, warnings and self-dual codes") {
  for (const auto& id : catalog_list()) {
    if (catalog_get(id).kind != EntryKind::SkewSeed) continue;
    CAPTURE(id);
    const SkewSeed s = catalog_seed(id);
    CHECK(s.matrix.transpose() == -s.matrix);
    CHECK(md(s.m + s.ell * s.ell + 1, s.k) == 0);
    const bool expect_warning = s.order() % 4 == 2 && !is_square(s.m);
    CHECK(!s.warnings.empty() == expect_warning);
    const ZkCode c = build_code_from_skew(s);
    CHECK(c.length() == 2 * s.order());
    CHECK(is_self_dual(c));
  }
}

TEST_CASE("frame certificates for catalog seeds and random quadruples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> small(-4, 4);
  for (const auto& id : catalog_list()) {
    if (catalog_get(id).kind != EntryKind::SkewSeed) continue;
    CAPTURE(id);
    const SkewSeed s = catalog_seed(id);
    const Lattice l = construction_a(build_code_from_skew(s));
    int built = 0;
    while (built < 5) {
      FrameQuadruple q;
      q.a = small(rng);
      q.b = small(rng);
      q.d = q.a + s.ell * q.b + s.k * small(rng);
      q.c = q.b + s.ell * q.d + s.k * small(rng);
      if (q.a == 0 && q.b == 0 && q.c == 0 && q.d == 0) continue;
      REQUIRE(satisfies_congruences(s.k, s.ell, q));
      const std::int64_t n = frame_constant(s, q);
      CHECK(n * s.k == q.a * q.a + s.m * q.b * q.b + q.c * q.c + s.m * q.d * q.d);
      const Frame f = build_frame_matrix(s, q);
      CHECK(f.vectors.size() == 2 * s.order());
      CHECK(f.norm == n);
      CHECK(f.scale == s.k);
      CHECK(is_orthogonal_frame(f));
      CHECK(contains_frame(l, f));
      ++built;
    }
    FrameQuadruple bad{1, 0, 0, 0};
    if (!satisfies_congruences(s.k, s.ell, bad)) {
      CHECK(code_of([&] { frame_constant(s, bad); }) == ErrorCode::CongruenceViolation);
      CHECK(code_of([&] { build_frame_matrix(s, bad); }) == ErrorCode::CongruenceViolation);
    }
  }
}

TEST_CASE("quadruple search is exhaustive on small targets") {
  const SkewSeed s = catalog_seed("D6_seed");
  for (std::int64_t target = 1; target <= 40; ++target) {
    CAPTURE(target);
    const std::int64_t kn = s.k * target;
    bool exists = false;
    const std::int64_t r = 12;  // 12^2 > 3 * 40
    for (std::int64_t a = -r; a <= r && !exists; ++a)
      for (std::int64_t b = -r; b <= r && !exists; ++b)
        for (std::int64_t c = -r; c <= r && !exists; ++c)
          for (std::int64_t d = -r; d <= r && !exists; ++d) {
            if (a * a + s.m * b * b + c * c + s.m * d * d != kn) continue;
            exists = satisfies_congruences(s.k, s.ell, {a, b, c, d});
          }
    const auto q = find_quadruple(s.k, s.m, s.ell, target);
    CHECK(q.has_value() == exists);
    if (q) {
      CHECK(satisfies_congruences(s.k, s.ell, *q));
      CHECK(q->a * q->a + s.m * q->b * q->b + q->c * q->c + s.m * q->d * q->d == kn);
    }
  }
  CHECK(code_of([] { find_quadruple(1, 1, 0, 3); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { find_quadruple(3, 25, 1, std::int64_t{1} << 40); }) == ErrorCode::OutOfRange);
}

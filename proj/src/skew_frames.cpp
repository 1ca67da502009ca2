#include "zkframes/skew_frames.hpp"

#include "zkframes/arith.hpp"
#include "zkframes/error.hpp"

namespace zkf {

SkewSeed make_skew_seed(IntMatrix matrix, std::int64_t k, std::int64_t m, std::int64_t ell) {
  require(k >= 2, ErrorCode::InvalidArgument, "k must be at least 2");
  require(ell >= 0 && ell < k, ErrorCode::InvalidArgument, "l must satisfy 0 <= l <= k-1");
  require(matrix.rows() >= 1 && matrix.rows() == matrix.cols(), ErrorCode::InvalidArgument,
          "seed matrix must be square");
  require(matrix.transpose() == -matrix, ErrorCode::SkewViolation, "M^T != -M");
  std::int64_t scalar = 0;
  require(matrix.gram().is_scalar(&scalar) && scalar == m, ErrorCode::SkewViolation,
          "M M^T != " + std::to_string(m) + " I");
  require(mod(m + ell * ell + 1, k) == 0, ErrorCode::CongruenceViolation,
          "m + l^2 is not -1 mod k");
  SkewSeed seed{std::move(matrix), k, m, ell, {}};
  const std::int64_t r = isqrt(m);
  if (seed.order() % 4 == 2 && r * r != m)
    seed.warnings.push_back("order is 2 mod 4 but m = " + std::to_string(m) +
                            " is not a square; such a matrix is not expected to exist");
  return seed;
}

IntMatrix build_paley_skew(std::int64_t p) {
  require(is_prime(p) && p % 4 == 3, ErrorCode::InvalidArgument,
          "Paley skew matrix needs a prime p == 3 (mod 4), got " + std::to_string(p));
  std::vector<char> square(p, 0);
  for (std::int64_t x = 1; x <= (p - 1) / 2; ++x) square[x * x % p] = 1;
  const auto n = static_cast<std::size_t>(p + 1);
  IntMatrix m(n, n);
  for (std::size_t j = 1; j < n; ++j) {
    m(0, j) = 1;
    m(j, 0) = -1;
  }
  for (std::int64_t i = 0; i < p; ++i)
    for (std::int64_t j = 0; j < p; ++j) {
      if (i == j) continue;
      m(i + 1, j + 1) = square[mod(j - i, p)] ? -1 : 1;
    }
  return m;
}

IntMatrix build_skew_negacirculant(std::span<const std::int64_t> r_a1,
                                   std::span<const std::int64_t> r_a2) {
  require(r_a1.size() == r_a2.size() && !r_a1.empty(), ErrorCode::InvalidArgument,
          "first rows must have equal positive length");
  const std::size_t h = r_a1.size();
  const IntMatrix a1 = negacirculant(r_a1), a2 = negacirculant(r_a2);
  IntMatrix m(2 * h, 2 * h);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) {
      m(i, j) = a1(i, j);
      m(i, h + j) = a2(i, j);
      m(h + i, j) = -a2(j, i);
      m(h + i, h + j) = a1(j, i);
    }
  require(m.transpose() == -m, ErrorCode::SkewViolation, "A1 is not skew, so M^T != -M");
  require(m.gram().is_scalar(), ErrorCode::SkewViolation, "M M^T is not a scalar matrix");
  return m;
}

ZkCode build_code_from_skew(const SkewSeed& seed) {
  const std::size_t n = seed.order();
  std::vector<Vec> rows(n, Vec(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    rows[i][i] = 1;
    for (std::size_t j = 0; j < n; ++j) rows[i][n + j] = seed.matrix(i, j) + (i == j ? seed.ell : 0);
  }
  return ZkCode(seed.k, std::move(rows));
}

bool satisfies_congruences(std::int64_t k, std::int64_t ell, const FrameQuadruple& q) {
  return mod(q.b - q.c + ell * q.d, k) == 0 && mod(q.d - q.a - ell * q.b, k) == 0;
}

std::int64_t frame_constant(const SkewSeed& seed, const FrameQuadruple& q) {
  require(satisfies_congruences(seed.k, seed.ell, q), ErrorCode::CongruenceViolation,
          "quadruple violates b == c - l d or d == a + l b (mod k)");
  const std::int64_t total = q.a * q.a + seed.m * q.b * q.b + q.c * q.c + seed.m * q.d * q.d;
  require(total % seed.k == 0, ErrorCode::Internal, "frame constant is not integral");
  return total / seed.k;
}

Frame build_frame_matrix(const SkewSeed& seed, const FrameQuadruple& q) {
  const std::int64_t constant = frame_constant(seed, q);
  const std::size_t n = seed.order();
  const IntMatrix& m = seed.matrix;
  Frame f;
  f.norm = constant;
  f.scale = seed.k;
  for (std::size_t i = 0; i < n; ++i) {
    Vec v(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t id = i == j ? 1 : 0;
      v[j] = q.a * id + q.b * m(i, j);
      v[n + j] = q.c * id + q.d * m(i, j);
    }
    f.vectors.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < n; ++i) {
    Vec v(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t id = i == j ? 1 : 0;
      v[j] = -q.c * id + q.d * m(i, j);
      v[n + j] = q.a * id - q.b * m(i, j);
    }
    f.vectors.push_back(std::move(v));
  }
  require(is_orthogonal_frame(f), ErrorCode::Internal, "F F^T is not a scalar matrix");
  const ZkCode code = build_code_from_skew(seed);
  for (std::size_t i = 0; i < f.vectors.size(); ++i)
    require(code.contains(f.vectors[i]), ErrorCode::MembershipViolation,
            "frame row " + std::to_string(i) + " is not a lattice vector");
  return f;
}

namespace {

// 0, 1, -1, 2, -2, ... up to |x| <= bound.
template <typename F>
bool scan_signed(std::int64_t bound, F&& body) {
  for (std::int64_t x = 0; x <= bound; ++x) {
    if (body(x)) return true;
    if (x != 0 && body(-x)) return true;
  }
  return false;
}

}  // namespace

std::optional<FrameQuadruple> find_quadruple(std::int64_t k, std::int64_t m, std::int64_t ell,
                                             std::int64_t target) {
  require(k >= 2 && m >= 1 && target >= 1, ErrorCode::InvalidArgument,
          "quadruple search needs k >= 2, m >= 1, N >= 1");
  require(target <= (std::int64_t{1} << 40) / k, ErrorCode::OutOfRange, "target too large");
  const std::int64_t total = k * target;
  const std::int64_t outer = isqrt(total / m);
  const std::int64_t inner = isqrt(total);
  FrameQuadruple found;
  const bool ok = scan_signed(outer, [&](std::int64_t d) {
    const std::int64_t r1 = total - m * d * d;
    if (r1 < 0) return false;
    return scan_signed(isqrt(r1 / m), [&](std::int64_t b) {
      const std::int64_t r2 = r1 - m * b * b;
      if (r2 < 0) return false;
      return scan_signed(std::min(inner, isqrt(r2)), [&](std::int64_t a) {
        const std::int64_t r3 = r2 - a * a;
        if (r3 < 0) return false;
        const std::int64_t c = isqrt(r3);
        if (c * c != r3) return false;
        for (std::int64_t cc : {c, -c}) {
          const FrameQuadruple q{a, b, cc, d};
          if (satisfies_congruences(k, ell, q)) {
            found = q;
            return true;
          }
          if (c == 0) break;
        }
        return false;
      });
    });
  });
  if (!ok) return std::nullopt;
  return found;
}

}  // namespace zkf

#include "zkframes/arith.hpp"

#include <algorithm>

#include "zkframes/error.hpp"

namespace zkf {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  require(n >= 1, ErrorCode::InvalidArgument, "factorisation needs a positive integer");
  require(n < (std::int64_t{1} << 62), ErrorCode::OutOfRange,
          "integer too large for trial division");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

const std::vector<RepresentationCase>& representation_cases() {
  static const std::vector<RepresentationCase> cases = {
      {'a', 3, 25, 1, {2, 5, 7, 13, 23}},
      {'b', 4, 7, 2, {2, 7}},
      {'c', 5, 49, 0, {2, 3, 7, 11, 19, 29}},
      {'d', 5, 25, 2, {2, 3, 17}},
      {'e', 4, 15, 2, {2, 3}},
      {'f', 6, 49, 2, {2, 3, 5, 7}},
      {'g', 4, 19, 0, {2, 3, 13, 19}},
      {'h', 5, 39, 0, {2, 3, 7, 17}},
  };
  return cases;
}

const RepresentationCase& representation_case(char label) {
  for (const auto& c : representation_cases())
    if (c.label == label) return c;
  fail(ErrorCode::InvalidArgument, std::string("unknown representation case '") + label + "'");
}

std::optional<FrameQuadruple> representation_search(const RepresentationCase& rc, std::int64_t p) {
  require(is_prime(p), ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  return find_quadruple(rc.k, rc.m, rc.ell, p);
}

std::array<std::int64_t, 4> four_square_decomposition(std::int64_t m) {
  require(m >= 1, ErrorCode::InvalidArgument, "four-square decomposition needs m >= 1");
  for (std::int64_t a = isqrt(m); a >= 0; --a) {
    const std::int64_t r1 = m - a * a;
    for (std::int64_t b = isqrt(r1); b >= 0; --b) {
      const std::int64_t r2 = r1 - b * b;
      for (std::int64_t c = isqrt(r2); c >= 0; --c) {
        const std::int64_t r3 = r2 - c * c;
        const std::int64_t d = isqrt(r3);
        if (d * d == r3) return {a, b, c, d};
      }
    }
  }
  fail(ErrorCode::Internal, "no four-square decomposition found");
}

Frame scale_frame(const Frame& frame, std::int64_t m) {
  require(m >= 1, ErrorCode::InvalidArgument, "scale factor must be positive");
  const std::size_t n = frame.vectors.size();
  require(n > 0 && n % 4 == 0, ErrorCode::BadDimension,
          "frame scaling needs dimension divisible by 4, got " + std::to_string(n));
  const auto [a, b, c, d] = four_square_decomposition(m);
  const std::int64_t q[4][4] = {{a, b, c, d}, {-b, a, -d, c}, {-c, d, a, -b}, {-d, -c, b, a}};
  Frame out;
  out.norm = frame.norm * m;
  out.scale = frame.scale;
  for (std::size_t blk = 0; blk < n; blk += 4)
    for (int i = 0; i < 4; ++i) {
      Vec v(frame.vectors[blk].size(), 0);
      for (int j = 0; j < 4; ++j) {
        const Vec& f = frame.vectors[blk + j];
        for (std::size_t t = 0; t < v.size(); ++t) v[t] += q[i][j] * f[t];
      }
      out.vectors.push_back(std::move(v));
    }
  return out;
}

bool star_condition_check(const StarCondition& row, std::int64_t k) {
  require(k >= 1, ErrorCode::InvalidArgument, "k must be positive");
  if (k < row.min_k) return false;
  for (const auto& [p, e] : factorize(k))
    if (std::find(row.excluded.begin(), row.excluded.end(), p) == row.excluded.end()) return true;
  return false;
}

}  // namespace zkf

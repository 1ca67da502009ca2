#include "zkframes/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "zkframes/error.hpp"

namespace zkf {

namespace {

using Real = long double;

Real dotr(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  return static_cast<Real>(dot(a, b));
}

}  // namespace

void lll_reduce(IntMatrix& b, double delta) {
  const std::size_t n = b.rows();
  if (n <= 1) return;
  std::vector<std::vector<Real>> mu(n, std::vector<Real>(n, 0)), r(n, std::vector<Real>(n, 0));

  auto gso_row = [&](std::size_t i) {
    for (std::size_t j = 0; j < i; ++j) {
      Real v = dotr(b.row(i), b.row(j));
      for (std::size_t l = 0; l < j; ++l) v -= mu[j][l] * r[i][l];
      r[i][j] = v;
      mu[i][j] = v / r[j][j];
    }
    Real v = dotr(b.row(i), b.row(i));
    for (std::size_t l = 0; l < i; ++l) v -= mu[i][l] * r[i][l];
    r[i][i] = v;
  };

  auto sub_row = [&](std::size_t dst, std::size_t src, std::int64_t q) {
    auto d = b.row(dst);
    auto s = b.row(src);
    for (std::size_t c = 0; c < d.size(); ++c) d[c] -= q * s[c];
  };

  gso_row(0);
  std::size_t k = 1;
  std::uint64_t guard = 0;
  while (k < n) {
    require(++guard < 100000000ULL, ErrorCode::Internal, "LLL failed to converge");
    for (int pass = 0; pass < 64; ++pass) {
      gso_row(k);
      bool changed = false;
      for (std::size_t jj = k; jj-- > 0;) {
        if (std::fabs(mu[k][jj]) <= (pass == 0 ? 0.5L : 0.51L)) continue;
        const auto q = static_cast<std::int64_t>(std::llround(mu[k][jj]));
        if (q == 0) continue;
        sub_row(k, jj, q);
        mu[k][jj] -= static_cast<Real>(q);
        for (std::size_t l = 0; l < jj; ++l) mu[k][l] -= static_cast<Real>(q) * mu[jj][l];
        changed = true;
      }
      if (!changed) break;
    }
    gso_row(k);
    const Real lhs = r[k][k];
    const Real rhs = (static_cast<Real>(delta) - mu[k][k - 1] * mu[k][k - 1]) * r[k - 1][k - 1];
    if (lhs < rhs) {
      b.swap_rows(k, k - 1);
      gso_row(k - 1);
      k = std::max<std::size_t>(k - 1, 1);
    } else {
      ++k;
    }
  }
}

std::uint64_t enumerate_ball(const IntMatrix& basis, const BallSearch& search,
                             const BallVisitor& visit) {
  const std::size_t n = basis.rows();
  const std::size_t dim = basis.cols();
  require(n >= 1, ErrorCode::InvalidArgument, "empty basis");
  const bool shifted = !search.shift.empty();
  require(!shifted || search.shift.size() == dim, ErrorCode::InvalidArgument,
          "shift vector has wrong length");
  const bool halve = search.halve && !shifted;

  // LDL^T of the Gram matrix: Q(x) = sum_j d_j (x_j + sum_{i>j} L_ij x_i)^2.
  std::vector<std::vector<Real>> g(n, std::vector<Real>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g[i][j] = dotr(basis.row(i), basis.row(j));
  std::vector<std::vector<Real>> low(n, std::vector<Real>(n, 0));
  std::vector<Real> d(n);
  for (std::size_t j = 0; j < n; ++j) {
    Real v = g[j][j];
    for (std::size_t l = 0; l < j; ++l) v -= low[j][l] * low[j][l] * d[l];
    d[j] = v;
    require(v > 0, ErrorCode::InvalidArgument, "basis is singular or not positive definite");
    for (std::size_t i = j + 1; i < n; ++i) {
      Real w = g[i][j];
      for (std::size_t l = 0; l < j; ++l) w -= low[i][l] * low[j][l] * d[l];
      low[i][j] = w / v;
    }
  }

  // Real coordinates of the shift: solve G c = B t.
  std::vector<Real> c(n, 0);
  if (shifted) {
    std::vector<std::vector<Real>> a(n, std::vector<Real>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a[i][j] = g[i][j];
      a[i][n] = dotr(basis.row(i), search.shift);
    }
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t p = col;
      for (std::size_t i = col + 1; i < n; ++i)
        if (std::fabs(a[i][col]) > std::fabs(a[p][col])) p = i;
      std::swap(a[p], a[col]);
      for (std::size_t i = 0; i < n; ++i) {
        if (i == col) continue;
        const Real f = a[i][col] / a[col][col];
        for (std::size_t j = col; j <= n; ++j) a[i][j] -= f * a[col][j];
      }
    }
    for (std::size_t i = 0; i < n; ++i) c[i] = a[i][n] / a[i][i];
  }

  std::int64_t radius = search.radius;
  if (radius < 0) return 0;
  auto slack_radius = [](std::int64_t r) {
    const Real rr = static_cast<Real>(r);
    return rr + 1e-9L * std::max<Real>(1, rr);
  };
  Real bound = slack_radius(radius);

  std::vector<std::int64_t> z(n, 0), hi(n, 0);
  std::vector<Real> centre(n, 0), partial(n + 1, 0);
  std::vector<char> zero_above(n, 1);
  Vec y(dim, 0);
  if (shifted) std::copy(search.shift.begin(), search.shift.end(), y.begin());

  auto add_row = [&](std::size_t j, std::int64_t times) {
    if (times == 0) return;
    auto r = basis.row(j);
    for (std::size_t t = 0; t < dim; ++t) y[t] += times * r[t];
  };

  auto open_level = [&](std::size_t j) {
    Real s = c[j];
    for (std::size_t i = j + 1; i < n; ++i) s += low[i][j] * (static_cast<Real>(z[i]) + c[i]);
    centre[j] = -s;
    zero_above[j] = j + 1 == n ? 1 : (zero_above[j + 1] && z[j + 1] == 0);
    Real room = (bound - partial[j + 1]) / d[j];
    if (room < 0) room = 0;
    const Real w = std::sqrt(room);
    auto lo = static_cast<std::int64_t>(std::ceil(centre[j] - w));
    hi[j] = static_cast<std::int64_t>(std::floor(centre[j] + w));
    if (halve && zero_above[j]) lo = std::max<std::int64_t>(lo, 0);
    z[j] = lo;
    add_row(j, lo);
  };

  std::uint64_t nodes = 0;
  std::size_t j = n - 1;
  open_level(j);
  while (true) {
    if (z[j] > hi[j]) {
      add_row(j, -z[j]);
      z[j] = 0;
      if (++j == n) break;
      ++z[j];
      add_row(j, 1);
      continue;
    }
    if (search.node_budget != 0 && ++nodes > search.node_budget)
      fail(ErrorCode::BudgetExceeded,
           "enumeration exceeded the node budget of " + std::to_string(search.node_budget));
    const Real diff = static_cast<Real>(z[j]) - centre[j];
    const Real p = partial[j + 1] + d[j] * diff * diff;
    if (p > bound) {
      if (static_cast<Real>(z[j]) > centre[j]) hi[j] = z[j] - 1;
      ++z[j];
      add_row(j, 1);
      continue;
    }
    partial[j] = p;
    if (j == 0) {
      const bool is_zero = halve && zero_above[0] && z[0] == 0;
      if (!is_zero) {
        const std::int64_t norm = dot(y, y);
        if (norm <= radius) {
          const std::int64_t next = visit(y, norm);
          if (next < radius) {
            radius = next;
            bound = slack_radius(radius);
          }
        }
      }
      ++z[0];
      add_row(0, 1);
      continue;
    }
    --j;
    open_level(j);
  }
  return nodes;
}

}  // namespace zkf

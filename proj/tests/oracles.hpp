// Brute-force reference implementations used only by the tests. None of
// these call the library's algorithms; they only share its data types.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "zkframes/matrix.hpp"
#include "zkframes/zk_codes.hpp"

namespace oracle {

using zkf::Vec;

inline std::int64_t md(std::int64_t x, std::int64_t m) { return ((x % m) + m) % m; }

// Closure of the generators under addition mod k.
inline std::set<Vec> codewords(std::int64_t k, const std::vector<Vec>& gens, std::size_t cap = 2000000) {
  const std::size_t n = gens.empty() ? 0 : gens[0].size();
  std::set<Vec> seen{Vec(n, 0)};
  std::vector<Vec> frontier{Vec(n, 0)};
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& c : frontier)
      for (const auto& g : gens) {
        Vec s(n);
        for (std::size_t i = 0; i < n; ++i) s[i] = md(c[i] + g[i], k);
        if (seen.insert(s).second) {
          next.push_back(s);
          if (seen.size() > cap) return seen;
        }
      }
    frontier.swap(next);
  }
  return seen;
}

inline std::int64_t lee_square(std::int64_t x, std::int64_t k) {
  x = md(x, k);
  const std::int64_t y = std::min(x, k - x);
  return y * y;
}

inline std::int64_t min_weight(std::int64_t k, const std::set<Vec>& words) {
  std::int64_t best = -1;
  for (const auto& w : words) {
    std::int64_t s = 0;
    bool zero = true;
    for (auto x : w) {
      s += lee_square(x, k);
      zero = zero && x == 0;
    }
    if (!zero && (best < 0 || s < best)) best = s;
  }
  return best;
}

// Counts of A_k(C) vectors by scaled norm y.y (actual norm y.y / k), for all
// y.y <= limit: sum over codewords of the product of per-coordinate lift
// counts, computed by a truncated convolution.
inline std::vector<std::uint64_t> construction_a_counts(std::int64_t k, const std::set<Vec>& words,
                                                        std::int64_t limit) {
  std::vector<std::uint64_t> total(limit + 1, 0);
  for (const auto& w : words) {
    std::vector<std::uint64_t> acc(limit + 1, 0);
    acc[0] = 1;
    for (auto c : w) {
      std::vector<std::uint64_t> next(limit + 1, 0);
      for (std::int64_t t = -limit; t <= limit; ++t) {
        const std::int64_t y = c + k * t;
        const std::int64_t sq = y * y;
        if (sq > limit) continue;
        for (std::int64_t s = 0; s + sq <= limit; ++s) next[s + sq] += acc[s];
      }
      acc.swap(next);
    }
    for (std::int64_t s = 0; s <= limit; ++s) total[s] += acc[s];
  }
  return total;
}

// Lattice points z*B with |z_i| <= box, counted by y.y. Only a true count
// when the box is large enough for the radius, so callers keep bases tiny.
inline std::map<std::int64_t, std::uint64_t> box_counts(const zkf::IntMatrix& basis, int box,
                                                        std::int64_t limit) {
  std::map<std::int64_t, std::uint64_t> out;
  const std::size_t n = basis.rows(), dim = basis.cols();
  std::vector<int> z(n, -box);
  while (true) {
    Vec y(dim, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < dim; ++j) y[j] += z[i] * basis(i, j);
    std::int64_t s = 0;
    for (auto v : y) s += v * v;
    if (s <= limit) ++out[s];
    std::size_t i = 0;
    while (i < n && z[i] == box) z[i++] = -box;
    if (i == n) break;
    ++z[i];
  }
  return out;
}

// Any `size` pairwise orthogonal vectors among `vs`? Plain subset search.
inline bool has_orthogonal_subset(const std::vector<Vec>& vs, std::size_t size) {
  std::vector<std::size_t> pick;
  std::function<bool(std::size_t)> go = [&](std::size_t from) {
    if (pick.size() == size) return true;
    for (std::size_t i = from; i < vs.size(); ++i) {
      bool ok = true;
      for (auto j : pick) ok = ok && zkf::dot(vs[i], vs[j]) == 0;
      if (!ok) continue;
      pick.push_back(i);
      if (go(i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return go(0);
}

// Laplace expansion; fine for n <= 7.
inline long double laplace_det(const std::vector<std::vector<std::int64_t>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return static_cast<long double>(a[0][0]);
  long double s = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(a[r][j]);
      minor.push_back(row);
    }
    s += ((c % 2) ? -1.0L : 1.0L) * static_cast<long double>(a[0][c]) * laplace_det(minor);
  }
  return s;
}

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  for (std::int64_t x = 1; x < p; ++x)
    if (md(a * x, p) == 1) return x;
  return 0;
}

// Random n x n matrix O over Z_p with O O^T = I: a product of random Givens
// rotations [[c, s], [-s, c]] (c^2 + s^2 = 1), sign flips and transpositions.
inline std::vector<Vec> random_orthogonal(std::size_t n, std::int64_t p, std::mt19937_64& rng) {
  std::vector<Vec> o(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) o[i][i] = 1;
  std::vector<std::pair<std::int64_t, std::int64_t>> circle;
  for (std::int64_t c = 0; c < p; ++c)
    for (std::int64_t s = 0; s < p; ++s)
      if (md(c * c + s * s, p) == 1) circle.emplace_back(c, s);
  std::uniform_int_distribution<std::size_t> pick_row(0, n - 1), pick_pt(0, circle.size() - 1);
  for (int step = 0; step < 6 * static_cast<int>(n); ++step) {
    std::size_t i = pick_row(rng), j = pick_row(rng);
    if (i == j) {
      for (auto& x : o[i]) x = md(-x, p);
      continue;
    }
    if (step % 5 == 4) {
      std::swap(o[i], o[j]);
      continue;
    }
    const auto [c, s] = circle[pick_pt(rng)];
    for (std::size_t col = 0; col < n; ++col) {
      const std::int64_t a = o[i][col], b = o[j][col];
      o[i][col] = md(c * a + s * b, p);
      o[j][col] = md(-s * a + c * b, p);
    }
  }
  return o;
}

// Random self-dual code over Z_p (p odd prime) of length 2n, n even:
// generator (I | N O) with N = diag of [[c, d], [-d, c]], c^2 + d^2 = -1,
// so (N O)(N O)^T = -I.
inline std::vector<Vec> random_self_dual(std::size_t n, std::int64_t p, std::mt19937_64& rng) {
  std::int64_t c = -1, d = -1;
  for (std::int64_t a = 0; a < p && c < 0; ++a)
    for (std::int64_t b = 0; b < p; ++b)
      if (md(a * a + b * b + 1, p) == 0) {
        c = a;
        d = b;
        break;
      }
  const auto o = random_orthogonal(n, p, rng);
  std::vector<Vec> g(n, Vec(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    g[i][i] = 1;
    const std::size_t blk = i - i % 2;
    // Row i of N: [c, d] or [-d, c] in the 2x2 block.
    const std::int64_t x = (i % 2 == 0) ? c : -d, y = (i % 2 == 0) ? d : c;
    for (std::size_t col = 0; col < n; ++col)
      g[i][n + col] = md(x * o[blk][col] + y * o[blk + 1][col], p);
  }
  return g;
}

}  // namespace oracle

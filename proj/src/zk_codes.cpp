#include "zkframes/zk_codes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zkframes/error.hpp"

namespace zkf {

ZkCode::ZkCode(std::int64_t modulus, std::vector<Vec> generators)
    : modulus_(modulus), generators_(std::move(generators)) {
  require(modulus >= 2, ErrorCode::InvalidArgument, "modulus must be at least 2");
  require(!generators_.empty(), ErrorCode::InvalidArgument, "code needs at least one generator");
  length_ = generators_.front().size();
  require(length_ >= 1, ErrorCode::InvalidArgument, "code length must be positive");
  for (auto& row : generators_) {
    require(row.size() == length_, ErrorCode::InvalidArgument, "generator rows differ in length");
    for (auto& x : row) x = mod(x, modulus);
    row_orders_.push_back(additive_order(row, modulus));
  }
  echelon_ = std::make_shared<const HowellForm>(generators_, modulus_, length_);
  BigInt product = 1;
  for (auto o : row_orders_) product *= o;
  require(product == echelon_->cardinality(), ErrorCode::InvalidArgument,
          "generator rows are dependent: product of row orders " + product.str() +
              " differs from code size " + echelon_->cardinality().str());
}

std::int64_t additive_order(std::span<const std::int64_t> v, std::int64_t modulus) {
  std::int64_t g = modulus;
  for (auto x : v) g = gcd(g, x);
  return modulus / g;
}

std::int64_t euclidean_weight(std::span<const std::int64_t> x, std::int64_t modulus) {
  std::int64_t w = 0;
  for (auto v : x) {
    const std::int64_t r = mod(v, modulus);
    const std::int64_t a = std::min(r, modulus - r);
    w += a * a;
  }
  return w;
}

IntMatrix negacirculant(std::span<const std::int64_t> first_row) {
  const std::size_t n = first_row.size();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = j >= i ? first_row[j - i] : -first_row[j + n - i];
  return m;
}

IntMatrix circulant(std::span<const std::int64_t> first_row) {
  const std::size_t n = first_row.size();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = first_row[(j + n - i) % n];
  return m;
}

ZkCode build_four_negacirculant(std::int64_t modulus, std::span<const std::int64_t> r_a,
                                std::span<const std::int64_t> r_b) {
  require(r_a.size() == r_b.size() && !r_a.empty(), ErrorCode::InvalidArgument,
          "first rows of A and B must have equal positive length");
  const std::size_t m = r_a.size();
  const IntMatrix a = negacirculant(r_a), b = negacirculant(r_b);
  const IntMatrix bt = b.transpose(), at = a.transpose();
  std::vector<Vec> rows(2 * m, Vec(4 * m, 0));
  for (std::size_t i = 0; i < 2 * m; ++i) rows[i][i] = 1;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      rows[i][2 * m + j] = a(i, j);
      rows[i][3 * m + j] = b(i, j);
      rows[m + i][2 * m + j] = -bt(i, j);
      rows[m + i][3 * m + j] = at(i, j);
    }
  return ZkCode(modulus, std::move(rows));
}

ZkCode build_z4_two_block(std::size_t a, std::size_t b, const IntMatrix& top_right,
                          const IntMatrix& bottom_right) {
  require(top_right.rows() == a && bottom_right.rows() == b, ErrorCode::InvalidArgument,
          "block row counts do not match a and b");
  require(b == 0 || top_right.cols() == bottom_right.cols(), ErrorCode::InvalidArgument,
          "top and bottom blocks differ in width");
  const std::size_t n = a + top_right.cols();
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < a; ++i) {
    Vec r(n, 0);
    r[i] = 1;
    for (std::size_t j = 0; j < top_right.cols(); ++j) r[a + j] = top_right(i, j);
    rows.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < b; ++i) {
    Vec r(n, 0);
    for (std::size_t j = 0; j < bottom_right.cols(); ++j) {
      require(mod(bottom_right(i, j), 2) == 0, ErrorCode::InvalidArgument,
              "bottom block entry is odd at row " + std::to_string(i) + ", column " +
                  std::to_string(j));
      r[a + j] = bottom_right(i, j);
    }
    rows.push_back(std::move(r));
  }
  return ZkCode(4, std::move(rows));
}

ZkCode build_bordered_circulant(std::int64_t modulus, std::span<const std::int64_t> first_row) {
  require(!first_row.empty(), ErrorCode::InvalidArgument, "circulant first row is empty");
  const std::size_t p = first_row.size();
  const IntMatrix r = circulant(first_row);
  const std::size_t half = p + 1;
  std::vector<Vec> rows(half, Vec(2 * half, 0));
  for (std::size_t i = 0; i < half; ++i) rows[i][i] = 1;
  for (std::size_t j = 1; j < half; ++j) rows[0][half + j] = 1;
  for (std::size_t i = 1; i < half; ++i) {
    rows[i][half] = 1;
    for (std::size_t j = 1; j < half; ++j) rows[i][half + j] = r(i - 1, j - 1);
  }
  return ZkCode(modulus, std::move(rows));
}

bool is_self_dual(const ZkCode& code) {
  const std::int64_t k = code.modulus();
  const auto& g = code.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i; j < g.size(); ++j)
      if (mod(dot(g[i], g[j]), k) != 0) return false;
  if (code.length() % 2 != 0) return false;
  return code.cardinality() == boost::multiprecision::pow(BigInt(k), code.length() / 2);
}

bool is_type_ii(const ZkCode& code) {
  const std::int64_t k = code.modulus();
  if (k % 2 != 0 || !is_self_dual(code)) return false;
  // Over Z_2k the Euclidean weight is congruent to the sum of squared lifts
  // mod 4k, and that quadratic form is additive on self-orthogonal codes, so
  // the generators decide.
  for (const auto& row : code.generators()) {
    std::int64_t s = 0;
    for (auto x : row) s += x * x;
    if (mod(s, 2 * k) != 0) return false;
  }
  return true;
}

namespace {

class WeightSearch {
 public:
  explicit WeightSearch(const ZkCode& code)
      : k_(code.modulus()), n_(code.length()), rows_(code.generators()),
        orders_(code.row_orders()) {
    // Column c becomes fixed after the last row that is nonzero on it.
    fixed_after_.assign(rows_.size(), {});
    for (std::size_t c = 0; c < n_; ++c) {
      std::size_t last = 0;
      bool any = false;
      for (std::size_t r = 0; r < rows_.size(); ++r)
        if (rows_[r][c] != 0) {
          last = r;
          any = true;
        }
      if (any) fixed_after_[last].push_back(c);
    }
    square_.resize(k_);
    for (std::int64_t x = 0; x < k_; ++x) {
      const std::int64_t a = std::min(x, k_ - x);
      square_[x] = a * a;
    }
    best_ = std::numeric_limits<std::int64_t>::max();
    for (const auto& r : rows_) best_ = std::min(best_, euclidean_weight(r, k_));
    acc_.assign(rows_.size() + 1, Vec(n_, 0));
  }

  std::int64_t run() {
    descend(0, 0, false);
    return best_;
  }

 private:
  void descend(std::size_t depth, std::int64_t fixed_weight, bool nonzero) {
    if (depth == rows_.size()) {
      if (nonzero && fixed_weight < best_) best_ = fixed_weight;
      return;
    }
    const Vec& row = rows_[depth];
    const std::int64_t order = orders_[depth];
    // Negation maps coefficient c to order - c; before the first nonzero
    // coefficient only c <= order/2 needs visiting.
    const std::int64_t last = nonzero ? order - 1 : order / 2;
    Vec& cur = acc_[depth + 1];
    cur = acc_[depth];
    for (std::int64_t c = 0; c <= last; ++c) {
      if (c > 0)
        for (std::size_t j = 0; j < n_; ++j) {
          std::int64_t v = cur[j] + row[j];
          if (v >= k_) v -= k_;
          cur[j] = v;
        }
      std::int64_t w = fixed_weight;
      for (auto col : fixed_after_[depth]) w += square_[cur[col]];
      if (w >= best_) continue;
      descend(depth + 1, w, nonzero || c != 0);
    }
  }

  std::int64_t k_;
  std::size_t n_;
  const std::vector<Vec>& rows_;
  const std::vector<std::int64_t>& orders_;
  std::vector<std::vector<std::size_t>> fixed_after_;
  std::vector<std::int64_t> square_;
  std::vector<Vec> acc_;
  std::int64_t best_;
};

}  // namespace

std::int64_t min_euclidean_weight(const ZkCode& code, std::uint64_t budget) {
  if (code.cardinality() > BigInt(budget))
    fail(ErrorCode::BudgetExceeded, "code has " + code.cardinality().str() +
                                        " codewords, above the budget of " +
                                        std::to_string(budget));
  return WeightSearch(code).run();
}

bool has_split_form(const ZkCode& code) {
  const std::size_t n = code.length(), h = n / 2;
  const auto& g = code.generators();
  if (n % 2 != 0 || g.size() != h) return false;
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j)
      if (g[i][j] != (i == j ? 1 : 0)) return false;
  return is_self_dual(code);
}

namespace {

std::vector<std::int64_t> lee_squares(std::int64_t k) {
  std::vector<std::int64_t> sq(k);
  for (std::int64_t x = 0; x < k; ++x) sq[x] = std::min(x, k - x) * std::min(x, k - x);
  return sq;
}

// Rows of the map from one half to the other: A, or -A^T for the second half.
std::vector<Vec> half_map(const ZkCode& code, bool second) {
  const std::size_t h = code.length() / 2;
  const std::int64_t k = code.modulus();
  std::vector<Vec> rows(h, Vec(h, 0));
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j)
      rows[i][j] = second ? mod(-code.generators()[j][h + i], k) : code.generators()[i][h + j];
  return rows;
}

class SplitSearch {
 public:
  SplitSearch(std::int64_t k, std::vector<Vec> rows, std::int64_t t, std::uint64_t budget,
              std::uint64_t visited, std::int64_t best)
      : k_(k), h_(rows.size()), t_(t), budget_(budget), visited_(visited), best_(best),
        square_(lee_squares(k)) {
    // multiples_[x][j] = x * row_j mod k
    multiples_.assign(k_, std::vector<Vec>(h_, Vec(h_, 0)));
    for (std::int64_t x = 0; x < k_; ++x)
      for (std::size_t j = 0; j < h_; ++j)
        for (std::size_t c = 0; c < h_; ++c) multiples_[x][j][c] = mod(x * rows[j][c], k_);
    acc_.assign(static_cast<std::size_t>(t_) + 2, Vec(h_, 0));
  }

  void run() { descend(0, 0, 0); }
  std::int64_t best() const { return best_; }
  std::uint64_t visited() const { return visited_; }

 private:
  void descend(std::size_t from, std::size_t depth, std::int64_t weight) {
    const Vec& cur = acc_[depth];
    Vec& next = acc_[depth + 1];
    for (std::size_t j = from; j < h_; ++j) {
      // The first nonzero entry is taken up to sign.
      const std::int64_t last = depth == 0 ? k_ / 2 : k_ - 1;
      for (std::int64_t x = 1; x <= last; ++x) {
        const std::int64_t w = weight + square_[x];
        if (w > t_) continue;
        if (++visited_ > budget_ && budget_ != 0)
          fail(ErrorCode::BudgetExceeded,
               "split weight search exceeded the budget of " + std::to_string(budget_));
        const Vec& add = multiples_[x][j];
        std::int64_t total = w;
        for (std::size_t c = 0; c < h_; ++c) {
          std::int64_t v = cur[c] + add[c];
          if (v >= k_) v -= k_;
          next[c] = v;
          total += square_[v];
        }
        best_ = std::min(best_, total);
        descend(j + 1, depth + 1, w);
      }
    }
  }

  std::int64_t k_;
  std::size_t h_;
  std::int64_t t_;
  std::uint64_t budget_, visited_;
  std::int64_t best_;
  std::vector<std::int64_t> square_;
  std::vector<std::vector<Vec>> multiples_;
  std::vector<Vec> acc_;
};

}  // namespace

std::uint64_t split_search_size(const ZkCode& code, std::int64_t t) {
  require(t >= 0, ErrorCode::InvalidArgument, "depth must be non-negative");
  const std::int64_t k = code.modulus();
  const std::size_t h = code.length() / 2;
  const auto sq = lee_squares(k);
  // count[w]: vectors of Z_k^j with weight exactly w, in long double.
  std::vector<long double> count(static_cast<std::size_t>(t) + 1, 0);
  count[0] = 1;
  for (std::size_t j = 0; j < h; ++j) {
    std::vector<long double> next(count.size(), 0);
    for (std::size_t w = 0; w < count.size(); ++w)
      for (std::int64_t x = 0; x < k; ++x)
        if (w + sq[x] < count.size()) next[w + sq[x]] += count[w];
    count.swap(next);
  }
  long double total = 0;
  for (std::size_t w = 1; w < count.size(); ++w) total += count[w];
  total = std::ceil(total / 2);
  const bool one_pass = has_split_form(code) && half_map(code, true) == half_map(code, false);
  if (!one_pass) total *= 2;
  const long double cap = static_cast<long double>(std::numeric_limits<std::uint64_t>::max());
  return total >= cap ? std::numeric_limits<std::uint64_t>::max() : static_cast<std::uint64_t>(total);
}

SplitWeightBound split_weight_search(const ZkCode& code, std::int64_t t, std::uint64_t budget) {
  require(t >= 0, ErrorCode::InvalidArgument, "depth must be non-negative");
  require(has_split_form(code), ErrorCode::PreconditionViolation,
          "split search needs a self-dual code with generator (I | A)");
  const std::int64_t k = code.modulus();
  const auto first = half_map(code, false), second = half_map(code, true);
  // Rows of the generator are codewords: a finite start for the minimum.
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& r : code.generators()) best = std::min(best, euclidean_weight(r, k));
  SplitSearch a(k, first, t, budget, 0, best);
  a.run();
  std::uint64_t visited = a.visited();
  best = a.best();
  if (second != first) {
    SplitSearch b(k, second, t, budget, visited, best);
    b.run();
    visited = b.visited();
    best = b.best();
  }
  SplitWeightBound r;
  r.t = t;
  r.visited = visited;
  r.upper = best;
  if (best <= 2 * t + 1) {
    r.lower = best;
  } else {
    const std::int64_t grain = is_type_ii(code) ? 2 * k : k;
    const std::int64_t floor_bound = 2 * t + 2;
    r.lower = std::min(best, (floor_bound + grain - 1) / grain * grain);
  }
  return r;
}

}  // namespace zkf

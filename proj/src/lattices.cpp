#include "zkframes/lattices.hpp"

#include <algorithm>
#include <mutex>

#include "zkframes/enumeration.hpp"
#include "zkframes/error.hpp"
#include "zkframes/modular.hpp"

namespace zkf {

struct Lattice::Cache {
  std::once_flag once;
  std::unique_ptr<ExactInverse> inverse;
};

Lattice::Lattice(IntMatrix basis, std::int64_t scale, bool reduce)
    : basis_(std::move(basis)), scale_(scale), cache_(std::make_shared<Cache>()) {
  require(scale_ >= 1, ErrorCode::InvalidArgument, "lattice scale must be positive");
  require(basis_.rows() >= 1 && basis_.rows() == basis_.cols(), ErrorCode::InvalidArgument,
          "lattice basis must be square and non-empty");
  det_ = determinant(basis_);
  require(det_ != 0, ErrorCode::InvalidArgument, "lattice basis is singular");
  if (reduce) lll_reduce(basis_);
  gram_ = basis_.gram();
}

Lattice Lattice::from_generators(std::span<const Vec> generators, std::int64_t scale,
                                 std::int64_t modulus, bool reduce) {
  require(!generators.empty(), ErrorCode::InvalidArgument, "no lattice generators");
  const HowellForm h(generators, modulus, generators.front().size());
  return Lattice(h.lattice_basis(), scale, reduce);
}

bool Lattice::is_integral() const {
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    for (std::size_t j = 0; j < gram_.cols(); ++j)
      if (gram_(i, j) % scale_ != 0) return false;
  return true;
}

bool Lattice::is_unimodular() const {
  return is_integral() &&
         det_ * det_ == boost::multiprecision::pow(BigInt(scale_), static_cast<unsigned>(dimension()));
}

bool Lattice::is_even() const {
  if (!is_integral()) return false;
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    if ((gram_(i, i) / scale_) % 2 != 0) return false;
  return true;
}

bool Lattice::contains(std::span<const std::int64_t> v) const {
  require(v.size() == dimension(), ErrorCode::InvalidArgument, "vector has wrong dimension");
  std::call_once(cache_->once, [&] { cache_->inverse = std::make_unique<ExactInverse>(basis_); });
  return cache_->inverse->in_row_lattice(v);
}

std::int64_t Lattice::exponent() const {
  std::call_once(cache_->once, [&] { cache_->inverse = std::make_unique<ExactInverse>(basis_); });
  const BigInt& d = cache_->inverse->denominator();
  require(d < (BigInt(1) << 40), ErrorCode::OutOfRange, "lattice exponent too large");
  return static_cast<std::int64_t>(d);
}

Lattice Lattice::rescaled(std::int64_t factor) const {
  require(factor >= 1, ErrorCode::InvalidArgument, "rescale factor must be positive");
  return Lattice(basis_.scaled(factor), scale_ * factor * factor, false);
}

Lattice Lattice::simplified() const {
  std::int64_t g = 0;
  for (std::size_t i = 0; i < basis_.rows(); ++i)
    for (auto x : basis_.row(i)) g = gcd(g, x);
  for (std::int64_t t = g; t > 1; --t) {
    if (g % t != 0 || scale_ % (t * t) != 0) continue;
    IntMatrix b = basis_;
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (auto& x : b.row(i)) x /= t;
    return Lattice(std::move(b), scale_ / (t * t), false);
  }
  return *this;
}

bool is_orthogonal_frame(const Frame& frame) {
  if (frame.vectors.empty()) return false;
  const std::int64_t target = frame.norm * frame.scale;
  for (std::size_t i = 0; i < frame.vectors.size(); ++i)
    for (std::size_t j = i; j < frame.vectors.size(); ++j)
      if (dot(frame.vectors[i], frame.vectors[j]) != (i == j ? target : 0)) return false;
  return true;
}

Lattice construction_a(const ZkCode& code) {
  require(is_self_dual(code), ErrorCode::NotSelfDual, "code is not self-dual");
  Lattice l(code.echelon().lattice_basis(), code.modulus());
  require(l.is_unimodular(), ErrorCode::Internal, "Construction A of a self-dual code is not unimodular");
  return l;
}

Lattice integer_lattice(std::size_t n) {
  require(n >= 1, ErrorCode::InvalidArgument, "dimension must be positive");
  return Lattice(IntMatrix::identity(n), 1, false);
}

Lattice e8_lattice() {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i + 1 < 8; ++i) {
    Vec v(8, 0);
    v[i] = 2;
    v[i + 1] = -2;
    gens.push_back(v);
  }
  Vec v(8, 0);
  v[6] = 2;
  v[7] = 2;
  gens.push_back(v);
  gens.push_back(Vec(8, 1));
  return Lattice::from_generators(gens, 4, 4);
}

namespace {

std::int64_t radius_for(const Rational& max_norm, std::int64_t scale) {
  require(max_norm >= 0, ErrorCode::InvalidArgument, "norm bound must be non-negative");
  const __int128 num = static_cast<__int128>(max_norm.numerator()) * scale;
  return static_cast<std::int64_t>(num / max_norm.denominator());
}

void canonical_sign(Vec& v) {
  for (auto x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    return;
  }
}

}  // namespace

Rational min_norm(const Lattice& lattice, std::uint64_t node_budget) {
  const IntMatrix& g = lattice.gram_numerator();
  std::int64_t best = g(0, 0);
  for (std::size_t i = 1; i < g.rows(); ++i) best = std::min(best, g(i, i));
  // Every norm z G z^T is a multiple of gcd(G_ii, 2 G_ij), so the next
  // smaller candidate below `best` is best - step.
  std::int64_t step = 0;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = i; j < g.cols(); ++j) step = gcd(step, i == j ? g(i, i) : 2 * g(i, j));
  BallSearch s;
  s.radius = best - step;
  s.node_budget = node_budget;
  enumerate_ball(lattice.basis(), s, [&](std::span<const std::int64_t>, std::int64_t norm) {
    best = std::min(best, norm);
    return best - step;
  });
  return {best, lattice.scale()};
}

ThetaPrefix theta_prefix(const Lattice& lattice, const Rational& max_norm,
                         std::uint64_t node_budget) {
  ThetaPrefix t;
  t.bound = max_norm;
  t.counts[Rational(0)] = 1;
  std::map<std::int64_t, std::uint64_t> raw;
  BallSearch s;
  s.radius = radius_for(max_norm, lattice.scale());
  s.node_budget = node_budget;
  enumerate_ball(lattice.basis(), s, [&](std::span<const std::int64_t>, std::int64_t norm) {
    raw[norm] += 2;
    return s.radius;
  });
  for (const auto& [n, c] : raw) t.counts[Rational(n, lattice.scale())] += c;
  return t;
}

ThetaPrefix coset_theta_prefix(const Lattice& lattice, std::span<const std::int64_t> shift,
                               const Rational& max_norm, std::uint64_t node_budget) {
  require(shift.size() == lattice.dimension(), ErrorCode::InvalidArgument,
          "coset shift has wrong dimension");
  ThetaPrefix t;
  t.bound = max_norm;
  std::map<std::int64_t, std::uint64_t> raw;
  BallSearch s;
  s.radius = radius_for(max_norm, lattice.scale());
  s.shift = shift;
  s.halve = false;
  s.node_budget = node_budget;
  enumerate_ball(lattice.basis(), s, [&](std::span<const std::int64_t>, std::int64_t norm) {
    raw[norm] += 1;
    return s.radius;
  });
  for (const auto& [n, c] : raw) t.counts[Rational(n, lattice.scale())] += c;
  return t;
}

std::vector<Vec> vectors_of_norm(const Lattice& lattice, const Rational& norm,
                                 std::uint64_t node_budget) {
  std::vector<Vec> out;
  const __int128 num = static_cast<__int128>(norm.numerator()) * lattice.scale();
  if (norm <= 0 || num % norm.denominator() != 0) return out;
  const auto target = static_cast<std::int64_t>(num / norm.denominator());
  BallSearch s;
  s.radius = target;
  s.node_budget = node_budget;
  enumerate_ball(lattice.basis(), s, [&](std::span<const std::int64_t> y, std::int64_t n) {
    if (n == target) {
      Vec v(y.begin(), y.end());
      canonical_sign(v);
      out.push_back(std::move(v));
    }
    return target;
  });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Generators of the kernel of a parity functional f on the basis, written
// at four times the scale (so coordinates double).
std::vector<Vec> parity_kernel(const Lattice& l, const std::vector<int>& f, std::size_t pivot) {
  const IntMatrix& b = l.basis();
  std::vector<Vec> gens;
  const std::size_t n = l.dimension();
  for (std::size_t i = 0; i < n; ++i) {
    Vec v(n);
    if (i == pivot) {
      for (std::size_t j = 0; j < n; ++j) v[j] = 4 * b(i, j);
    } else if (f[i] == 0) {
      for (std::size_t j = 0; j < n; ++j) v[j] = 2 * b(i, j);
    } else {
      for (std::size_t j = 0; j < n; ++j) v[j] = 2 * (b(i, j) + b(pivot, j));
    }
    gens.push_back(std::move(v));
  }
  return gens;
}

Vec add(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Lattice extend(const std::vector<Vec>& gens, const Vec& extra, std::int64_t scale,
               std::int64_t modulus) {
  std::vector<Vec> all = gens;
  all.push_back(extra);
  return Lattice::from_generators(all, scale, modulus).simplified();
}

}  // namespace

ShadowDecomposition even_sublattice_and_shadow(const Lattice& lattice) {
  require(lattice.is_unimodular(), ErrorCode::PreconditionViolation,
          "shadow requires a unimodular lattice");
  const std::size_t n = lattice.dimension();
  const std::int64_t s = lattice.scale();
  const IntMatrix& g = lattice.gram_numerator();
  const IntMatrix& b = lattice.basis();
  std::vector<int> f(n);
  std::size_t odd = n;
  for (std::size_t i = 0; i < n; ++i) {
    f[i] = static_cast<int>(mod(g(i, i) / s, 2));
    if (f[i] && odd == n) odd = i;
  }
  require(odd < n, ErrorCode::NotOdd, "lattice is even: it has no odd vectors and no proper shadow");

  const std::int64_t t = 4 * s;
  const std::int64_t modulus = 4 * lattice.exponent();
  std::vector<Vec> gens = parity_kernel(lattice, f, odd);

  // Characteristic vector w: (w, b_i) == (b_i, b_i) mod 2.
  IntMatrix actual(n, n);
  Vec diag(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) actual(i, j) = g(i, j) / s;
    diag[i] = actual(i, i);
  }
  Vec u;
  require(solve_mod2(actual, diag, u), ErrorCode::Internal, "Gram matrix singular mod 2");
  // s = w/2; at four times the scale its coordinates are those of w.
  Vec half_w(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    if (u[i])
      for (std::size_t j = 0; j < n; ++j) half_w[j] += b(i, j);
  Vec b_odd(n);
  for (std::size_t j = 0; j < n; ++j) b_odd[j] = 2 * b(odd, j);

  std::vector<Vec> dual_gens = gens;
  dual_gens.push_back(half_w);
  dual_gens.push_back(b_odd);

  return ShadowDecomposition{
      Lattice::from_generators(gens, t, modulus),
      Lattice::from_generators(dual_gens, t, modulus),
      {Vec(n, 0), half_w, b_odd, add(half_w, b_odd)},
      t,
      gens,
      modulus,
  };
}

std::pair<Lattice, Lattice> even_neighbors(const Lattice& lattice) {
  require(lattice.dimension() % 8 == 0, ErrorCode::BadDimension,
          "even unimodular neighbours need dimension divisible by 8, got " +
              std::to_string(lattice.dimension()));
  const ShadowDecomposition sh = even_sublattice_and_shadow(lattice);
  return {extend(sh.generators, sh.cosets[1], sh.scale, sh.modulus),
          extend(sh.generators, sh.cosets[3], sh.scale, sh.modulus)};
}

Lattice two_neighbor_at_vector(const Lattice& lattice, std::span<const std::int64_t> x,
                               std::span<const std::int64_t> y) {
  const std::size_t n = lattice.dimension();
  const std::int64_t s = lattice.scale();
  require(x.size() == n && y.size() == n, ErrorCode::InvalidArgument,
          "x and y must have the lattice dimension");
  require(lattice.is_even() && lattice.is_unimodular(), ErrorCode::PreconditionViolation,
          "lattice must be even unimodular");
  require(lattice.contains(x), ErrorCode::PreconditionViolation, "x is not in the lattice");
  require(dot(x, x) == 8 * s, ErrorCode::PreconditionViolation, "(x, x) is not 8");
  bool half_in = std::all_of(x.begin(), x.end(), [](std::int64_t v) { return v % 2 == 0; });
  if (half_in) {
    Vec h(x.begin(), x.end());
    for (auto& v : h) v /= 2;
    half_in = lattice.contains(h);
  }
  require(!half_in, ErrorCode::PreconditionViolation, "x/2 lies in the lattice");
  require(lattice.contains(y), ErrorCode::PreconditionViolation, "y is not in the lattice");
  const std::int64_t xy = dot(x, y);
  require(xy % s == 0 && mod(xy / s, 2) == 1, ErrorCode::PreconditionViolation,
          "(x, y) is not odd");

  const IntMatrix& b = lattice.basis();
  std::vector<int> f(n);
  std::size_t pivot = n;
  for (std::size_t i = 0; i < n; ++i) {
    f[i] = static_cast<int>(mod(dot(x, b.row(i)) / s, 2));
    if (f[i] && pivot == n) pivot = i;
  }
  const std::vector<Vec> gens = parity_kernel(lattice, f, pivot);
  Vec glue(n);
  for (std::size_t j = 0; j < n; ++j) glue[j] = x[j] + 2 * y[j];
  return extend(gens, glue, 4 * s, 4 * lattice.exponent());
}

bool contains_frame(const Lattice& lattice, const Frame& frame) {
  if (frame.vectors.size() != lattice.dimension() || frame.norm <= 0) return false;
  Frame f = frame;
  const std::int64_t ls = lattice.scale();
  if (f.scale != ls) {
    // Bring both to a common scale when the ratio is a square.
    const std::int64_t hi = std::max(f.scale, ls), lo = std::min(f.scale, ls);
    if (hi % lo != 0) return false;
    const std::int64_t r = isqrt(hi / lo);
    if (r * r != hi / lo) return false;
    if (f.scale < ls) {
      for (auto& v : f.vectors)
        for (auto& x : v) x *= r;
      f.scale = ls;
    } else {
      return contains_frame(lattice.rescaled(r), frame);
    }
  }
  for (const auto& v : f.vectors)
    if (v.size() != lattice.dimension()) return false;
  if (!is_orthogonal_frame(f)) return false;
  for (const auto& v : f.vectors)
    if (!lattice.contains(v)) return false;
  return true;
}

namespace {

class CliqueSearch {
 public:
  CliqueSearch(const std::vector<Vec>& vectors, std::size_t size, std::uint64_t budget)
      : vectors_(vectors), size_(size), budget_(budget) {}

  std::optional<std::vector<std::size_t>> run() {
    std::vector<std::uint32_t> all(vectors_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<std::uint32_t>(i);
    if (dfs(all)) return chosen_;
    return std::nullopt;
  }

 private:
  // Greedy colouring of the orthogonality graph on `cand`; a clique uses
  // each colour at most once.
  std::size_t colour_bound(const std::vector<std::uint32_t>& cand) const {
    std::vector<std::vector<std::uint32_t>> classes;
    for (auto v : cand) {
      bool placed = false;
      for (auto& cls : classes) {
        bool ok = true;
        for (auto u : cls)
          if (dot(vectors_[u], vectors_[v]) == 0) {
            ok = false;
            break;
          }
        if (ok) {
          cls.push_back(v);
          placed = true;
          break;
        }
      }
      if (!placed) classes.push_back({v});
    }
    return classes.size();
  }

  bool dfs(const std::vector<std::uint32_t>& cand) {
    const std::size_t need = size_ - chosen_.size();
    if (need == 0) return true;
    if (cand.size() < need) return false;
    if (cand.size() <= 256 && colour_bound(cand) < need) return false;
    std::vector<std::uint32_t> next;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (cand.size() - i < need) return false;
      if (budget_ != 0 && ++nodes_ > budget_)
        fail(ErrorCode::BudgetExceeded,
             "frame search exceeded the node budget of " + std::to_string(budget_));
      const Vec& v = vectors_[cand[i]];
      next.clear();
      for (std::size_t j = i + 1; j < cand.size(); ++j)
        if (dot(v, vectors_[cand[j]]) == 0) next.push_back(cand[j]);
      chosen_.push_back(cand[i]);
      if (dfs(next)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const std::vector<Vec>& vectors_;
  std::size_t size_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> chosen_;
};

}  // namespace

std::optional<std::vector<std::size_t>> orthogonal_clique(const std::vector<Vec>& vectors,
                                                          std::size_t size,
                                                          std::uint64_t node_budget) {
  if (size == 0) return std::vector<std::size_t>{};
  return CliqueSearch(vectors, size, node_budget).run();
}

std::optional<Frame> find_frame(const Lattice& lattice, std::int64_t k, std::uint64_t node_budget) {
  require(k >= 1, ErrorCode::InvalidArgument, "frame norm must be positive");
  const std::vector<Vec> vecs = vectors_of_norm(lattice, Rational(k), node_budget);
  const std::size_t n = lattice.dimension();
  if (vecs.size() < n) return std::nullopt;
  const auto clique = orthogonal_clique(vecs, n, node_budget);
  if (!clique) return std::nullopt;
  Frame f;
  f.norm = k;
  f.scale = lattice.scale();
  for (auto i : *clique) f.vectors.push_back(vecs[i]);
  require(contains_frame(lattice, f), ErrorCode::Internal, "found frame failed verification");
  return f;
}

}  // namespace zkf

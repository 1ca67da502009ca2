#include "zkframes/modular.hpp"

#include <algorithm>

#include "zkframes/error.hpp"

namespace zkf {

namespace {

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

// Unit u mod m with u * a == gcd(a, m) (mod m).
std::int64_t normalizing_unit(std::int64_t a, std::int64_t m) {
  const std::int64_t g = gcd(a, m);
  const std::int64_t a1 = a / g, m1 = m / g;
  std::int64_t s = 0, t = 0;
  ext_gcd(mod(a1, m1), m1, s, t);
  std::int64_t u = mod(s, m1);
  if (m1 == 1) u = 1;
  // Lift u mod m1 to a unit mod m.
  while (gcd(u, m) != 1) u += m1;
  return mod(u, m);
}

}  // namespace

HowellForm::HowellForm(std::span<const Vec> generators, std::int64_t modulus, std::size_t length)
    : modulus_(modulus), length_(length) {
  require(modulus >= 2, ErrorCode::InvalidArgument, "modulus must be at least 2");
  const std::int64_t m = modulus;
  std::vector<Vec> work;
  for (const auto& g : generators) {
    require(g.size() == length, ErrorCode::InvalidArgument, "generator has wrong length");
    Vec r(length);
    for (std::size_t j = 0; j < length; ++j) r[j] = mod(g[j], m);
    if (!is_zero(r)) work.push_back(std::move(r));
  }

  for (std::size_t col = 0; col < length; ++col) {
    Vec pivot;
    std::vector<Vec> rest;
    for (auto& r : work) {
      if (r[col] == 0) {
        rest.push_back(std::move(r));
        continue;
      }
      if (pivot.empty()) {
        pivot = std::move(r);
        continue;
      }
      std::int64_t s = 0, t = 0;
      const std::int64_t g = ext_gcd(pivot[col], r[col], s, t);
      const std::int64_t pr = r[col] / g, pp = pivot[col] / g;
      Vec np(length), nr(length);
      for (std::size_t j = 0; j < length; ++j) {
        np[j] = mod(static_cast<std::int64_t>(
                        (static_cast<__int128>(s) * pivot[j] + static_cast<__int128>(t) * r[j]) % m),
                    m);
        nr[j] = mod(static_cast<std::int64_t>(
                        (static_cast<__int128>(pr) * pivot[j] - static_cast<__int128>(pp) * r[j]) % m),
                    m);
      }
      pivot = std::move(np);
      if (!is_zero(nr)) rest.push_back(std::move(nr));
    }
    work = std::move(rest);
    if (pivot.empty() || pivot[col] == 0) {
      if (!pivot.empty() && !is_zero(pivot)) work.push_back(std::move(pivot));
      continue;
    }
    const std::int64_t u = normalizing_unit(pivot[col], m);
    for (auto& x : pivot) x = mod(static_cast<std::int64_t>(static_cast<__int128>(x) * u % m), m);
    const std::int64_t annihilator = m / pivot[col];
    Vec sat(length);
    for (std::size_t j = 0; j < length; ++j)
      sat[j] = mod(static_cast<std::int64_t>(static_cast<__int128>(pivot[j]) * annihilator % m), m);
    if (!is_zero(sat)) work.push_back(std::move(sat));
    rows_.push_back(std::move(pivot));
    pivot_cols_.push_back(col);
  }
}

BigInt HowellForm::cardinality() const {
  BigInt c = 1;
  for (std::size_t i = 0; i < rows_.size(); ++i) c *= modulus_ / rows_[i][pivot_cols_[i]];
  return c;
}

bool HowellForm::contains(std::span<const std::int64_t> v) const {
  require(v.size() == length_, ErrorCode::InvalidArgument, "vector has wrong length");
  const std::int64_t m = modulus_;
  Vec r(length_);
  for (std::size_t j = 0; j < length_; ++j) r[j] = mod(v[j], m);
  std::size_t next = 0;
  for (std::size_t col = 0; col < length_; ++col) {
    if (next < rows_.size() && pivot_cols_[next] == col) {
      const Vec& p = rows_[next++];
      if (r[col] % p[col] != 0) return false;
      const std::int64_t q = r[col] / p[col];
      if (q != 0)
        for (std::size_t j = col; j < length_; ++j) r[j] = mod(r[j] - q * p[j], m);
    } else if (r[col] != 0) {
      return false;
    }
  }
  return true;
}

IntMatrix HowellForm::lattice_basis() const {
  IntMatrix b(length_, length_);
  std::size_t next = 0;
  for (std::size_t col = 0; col < length_; ++col) {
    if (next < rows_.size() && pivot_cols_[next] == col) {
      for (std::size_t j = 0; j < length_; ++j) b(col, j) = rows_[next][j];
      ++next;
    } else {
      b(col, col) = modulus_;
    }
  }
  return b;
}

}  // namespace zkf

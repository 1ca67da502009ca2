#include "zkframes/report.hpp"

#include <map>

#include "zkframes/arith.hpp"
#include "zkframes/catalog.hpp"
#include "zkframes/error.hpp"
#include "zkframes/skew_frames.hpp"

namespace zkf {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

std::string fingerprint_text(const Fingerprint& f) {
  return "dim=" + std::to_string(f.dimension) + (f.unimodular ? " unimodular" : " non-unimodular") +
         (f.even ? " even" : " odd") + " min=" + std::to_string(f.min.numerator()) +
         (f.min.denominator() == 1 ? "" : "/" + std::to_string(f.min.denominator())) +
         " kissing=" + std::to_string(f.min_count);
}

Fingerprint fingerprint(const Lattice& l, std::uint64_t budget) {
  Fingerprint f;
  f.dimension = l.dimension();
  f.unimodular = l.is_unimodular();
  f.even = l.is_even();
  f.min = min_norm(l, budget);
  f.min_count = theta_prefix(l, f.min, budget).at(f.min);
  return f;
}

namespace {

std::string quad_text(const FrameQuadruple& q) {
  return "(" + std::to_string(q.a) + "," + std::to_string(q.b) + "," + std::to_string(q.c) + "," +
         std::to_string(q.d) + ")";
}

class Reporter {
 public:
  Reporter(std::string id, std::uint64_t budget)
      : id_(std::move(id)), budget_(budget), lattice_(catalog_lattice(id_)) {}

  FrameReport run(std::int64_t k) {
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    FrameReport r = decide(k);
    memo_.emplace(k, r);
    return r;
  }

 private:
  FrameReport base(std::int64_t k) const {
    FrameReport r;
    r.lattice_id = id_;
    r.k = k;
    return r;
  }

  std::optional<FrameReport> via_seed(std::int64_t k) const {
    const std::string seed_id = seed_of_lattice(id_);
    if (seed_id.empty()) return std::nullopt;
    const SkewSeed seed = catalog_seed(seed_id);
    const auto q = find_quadruple(seed.k, seed.m, seed.ell, k);
    if (!q) return std::nullopt;
    FrameReport r = base(k);
    r.verdict = Verdict::Yes;
    r.chain.push_back("prop31 seed=" + seed_id + " (k,m,l)=(" + std::to_string(seed.k) + "," +
                      std::to_string(seed.m) + "," + std::to_string(seed.ell) +
                      ") abcd=" + quad_text(*q) +
                      " frame_constant=" + std::to_string(frame_constant(seed, *q)));
    r.frame = build_frame_matrix(seed, *q);
    r.frame_lattice = id_;
    return r;
  }

  std::optional<FrameReport> via_code(std::int64_t k) {
    for (const auto& code_id : codes_claimed_isomorphic(id_)) {
      if (catalog_get(code_id).modulus != k) continue;
      try {
        if (!own_print_) own_print_ = fingerprint(lattice_, budget_);
        const Fingerprint other = fingerprint(catalog_lattice(code_id), budget_);
        if (!(other == *own_print_)) continue;
        FrameReport r = base(k);
        r.verdict = Verdict::Yes;
        r.chain.push_back("code " + code_id + " claimed A_k(C) isometric to " + id_ +
                          "; fingerprint " + fingerprint_text(other));
        r.chain.push_back("standard frame k*e_i of A_" + std::to_string(k) + "(" + code_id + ")");
        Frame f;
        f.norm = k;
        f.scale = k;
        const std::size_t n = lattice_.dimension();
        for (std::size_t i = 0; i < n; ++i) {
          Vec v(n, 0);
          v[i] = k;
          f.vectors.push_back(std::move(v));
        }
        r.frame = std::move(f);
        r.frame_lattice = code_id;
        return r;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::BudgetExceeded) throw;
      }
    }
    return std::nullopt;
  }

  FrameReport scaled(const FrameReport& sub, std::int64_t k) const {
    const std::int64_t m = k / sub.k;
    const auto q = four_square_decomposition(m);
    FrameReport r = base(k);
    r.verdict = Verdict::Yes;
    r.chain = sub.chain;
    r.chain.push_back("scale " + std::to_string(sub.k) + "-frame by m=" + std::to_string(m) +
                      " quaternion (" + std::to_string(q[0]) + "," + std::to_string(q[1]) + "," +
                      std::to_string(q[2]) + "," + std::to_string(q[3]) + ")");
    r.frame = scale_frame(*sub.frame, m);
    r.frame_lattice = sub.frame_lattice;
    return r;
  }

  // Seed, code and scaling only; no searches.
  std::optional<FrameReport> constructive(std::int64_t k) {
    if (auto it = constructive_memo_.find(k); it != constructive_memo_.end()) return it->second;
    std::optional<FrameReport> r = via_seed(k);
    if (!r) r = via_code(k);
    if (!r && lattice_.dimension() % 4 == 0) {
      for (std::int64_t d = k / 2; d >= 2 && !r; --d) {
        if (k % d != 0) continue;
        if (auto sub = constructive(d)) r = scaled(*sub, k);
      }
    }
    constructive_memo_.emplace(k, r);
    return r;
  }

  std::optional<FrameReport> via_divisor(std::int64_t k) {
    if (lattice_.dimension() % 4 != 0) return std::nullopt;
    for (std::int64_t d = k / 2; d >= 1; --d) {
      if (k % d != 0) continue;
      const FrameReport sub = run(d);
      if (sub.verdict == Verdict::Yes) return scaled(sub, k);
    }
    return std::nullopt;
  }

  FrameReport via_search(std::int64_t k) {
    FrameReport r = base(k);
    try {
      const auto vs = vectors_of_norm(lattice_, Rational(k), budget_);
      const std::size_t n = lattice_.dimension();
      if (vs.size() < n) {
        r.verdict = Verdict::No;
        r.reason = "only " + std::to_string(2 * vs.size()) + " vectors of norm " +
                   std::to_string(k) + ", fewer than 2n=" + std::to_string(2 * n);
        r.chain.push_back("count norm-" + std::to_string(k) + " vectors: " +
                          std::to_string(2 * vs.size()));
        return r;
      }
      auto f = find_frame(lattice_, k, budget_);
      if (!f) {
        r.verdict = Verdict::No;
        r.reason = "exhaustive search over " + std::to_string(2 * vs.size()) + " vectors of norm " +
                   std::to_string(k) + " found no " + std::to_string(n) + " pairwise orthogonal";
        r.chain.push_back("find_frame exhaustive: none");
        return r;
      }
      r.verdict = Verdict::Yes;
      r.chain.push_back("find_frame: found among " + std::to_string(2 * vs.size()) +
                        " vectors of norm " + std::to_string(k));
      r.frame = std::move(f);
      r.frame_lattice = id_;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
      r.verdict = Verdict::Unknown;
      r.reason = "search budget of " + std::to_string(budget_) + " nodes exhausted";
    }
    return r;
  }

  FrameReport decide(std::int64_t k) {
    if (auto r = constructive(k)) return *r;
    if (auto r = via_divisor(k)) return *r;
    return via_search(k);
  }

  std::string id_;
  std::uint64_t budget_;
  Lattice lattice_;
  std::optional<Fingerprint> own_print_;
  std::map<std::int64_t, FrameReport> memo_;
  std::map<std::int64_t, std::optional<FrameReport>> constructive_memo_;
};

}  // namespace

FrameReport frame_existence_report(const std::string& lattice_id, std::int64_t k,
                                   std::uint64_t budget) {
  require(k >= 1, ErrorCode::InvalidArgument, "k must be at least 1");
  Reporter rep(lattice_id, budget);
  FrameReport r = rep.run(k);
  if (r.verdict == Verdict::Yes) {
    const Lattice host = catalog_lattice(r.frame_lattice);
    require(r.frame && r.frame->norm == k && contains_frame(host, *r.frame), ErrorCode::Internal,
            "report produced a frame that does not verify");
    r.chain.push_back("verified_gram " + std::to_string(k) + " in " + r.frame_lattice);
  }
  return r;
}

}  // namespace zkf

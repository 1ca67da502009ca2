// Acceptance run: one line per criterion 1..8.
//   acceptance [--slow] [--node-budget N]
// Exit 0 when every criterion passes, 1 on any failure, 2 when something
// was left undecided by a budget.
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "zkframes/arith.hpp"
#include "zkframes/catalog.hpp"
#include "zkframes/error.hpp"
#include "zkframes/formats.hpp"
#include "zkframes/lattices.hpp"
#include "zkframes/report.hpp"
#include "zkframes/reproduce.hpp"
#include "zkframes/skew_frames.hpp"
#include "zkframes/zk_codes.hpp"

using namespace zkf;

namespace {

// Wall-clock limits per criterion, in seconds.
constexpr double kLimit1 = 10, kLimit2 = 300, kLimit2Slow = 3600, kLimit3 = 900, kLimit4 = 60,
                 kLimit5 = 60, kLimit6 = 120, kLimit6Slow = 1800, kLimit7 = 600, kLimit8 = 300;
// Node budget for the dimension 32..48 minimum norms under --slow. L44
// needs about 5e7 nodes; L48 runs out and falls back to its code.
constexpr std::uint64_t kSlowMinBudget = 500000000ULL;
// Vectors for the split weight search behind that fallback (L48: 1.65e9).
constexpr std::uint64_t kSlowSplitBudget = 4000000000ULL;
// Node budget for the L36 theta prefix under --slow.
constexpr std::uint64_t kSlowThetaBudget = 20000000000ULL;

enum class Status { Pass, Fail, Unknown };

struct Outcome {
  Status status = Status::Pass;
  std::vector<std::string> notes;
  void fail(const std::string& s) {
    status = Status::Fail;
    notes.push_back(s);
  }
  void unknown(const std::string& s) {
    if (status == Status::Pass) status = Status::Unknown;
    notes.push_back(s);
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

struct Options {
  bool slow = false;
  std::uint64_t node_budget = kDefaultNodeBudget;
};

Outcome catalog_validity(const Options&) {
  Outcome o;
  int seeds = 0, codes = 0;
  for (const auto& id : catalog_list()) {
    const auto& e = catalog_get(id);
    if (e.kind == EntryKind::SkewSeed) {
      const SkewSeed s = catalog_seed(id);
      std::int64_t scalar = 0;
      o.expect(s.matrix.transpose() == -s.matrix, id + ": M^T != -M");
      o.expect(s.matrix.gram().is_scalar(&scalar) && scalar == s.m, id + ": M M^T != mI");
      o.expect(oracle::md(s.m + s.ell * s.ell + 1, s.k) == 0, id + ": m + l^2 != -1 mod k");
      ++seeds;
    } else if (e.kind == EntryKind::Code) {
      o.expect(is_self_dual(catalog_code(id)), id + " is not self-dual");
      ++codes;
    }
  }
  o.expect(seeds == 12, "expected 12 seeds, found " + std::to_string(seeds));
  o.notes.push_back(std::to_string(seeds) + " seeds, " + std::to_string(codes) + " codes");
  return o;
}

Outcome table2_minima(const Options& opt) {
  Outcome o;
  struct Row {
    const char* id;
    std::int64_t min;
    bool slow;
  };
  const Row rows[] = {{"D12p", 2, false},   {"D8_2", 2, false},   {"D4_5", 2, false},
                      {"A5_4", 2, false},   {"D20", 2, false},    {"R28_32", 3, false},
                      {"R28_15", 3, false}, {"L32_82", 4, true},  {"L36", 4, true},
                      {"L40", 4, true},     {"L44", 4, true},     {"L48", 5, true}};
  int skipped = 0;
  for (const Row& r : rows) {
    if (r.slow && !opt.slow) {
      ++skipped;
      continue;
    }
    try {
      const Rational got = min_norm(catalog_lattice(r.id), r.slow ? kSlowMinBudget : opt.node_budget);
      o.expect(got == Rational(r.min), std::string(r.id) + " min " + format_rational(got) +
                                           " != " + std::to_string(r.min));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
      // min(A_k(C)) = min{k, d_E/k} for the code behind the lattice.
      std::string code_id;
      for (const auto& id : catalog_list())
        if (catalog_get(id).kind == EntryKind::Code && catalog_get(id).isomorphic_to == r.id) code_id = id;
      if (code_id.empty()) {
        o.unknown(std::string(r.id) + ": node budget exhausted");
        continue;
      }
      // The lattice attempt above already failed, so skip straight to the code.
      const auto m = min_norm_via_code(catalog_lattice(r.id), catalog_code(code_id), 1,
                                       kDefaultCodewordBudget, kSlowSplitBudget);
      if (!m.value) {
        o.unknown(std::string(r.id) + ": node budget exhausted, " + m.method + " on " + code_id);
        continue;
      }
      o.expect(*m.value == Rational(r.min), std::string(r.id) + " min " + format_rational(*m.value) +
                                                " != " + std::to_string(r.min));
      o.notes.push_back(std::string(r.id) + " min " + format_rational(*m.value) + " from " + code_id +
                        ": " + m.method);
    }
  }
  if (skipped) o.notes.push_back(std::to_string(skipped) + " rows of dimension >= 32 skipped (--slow)");
  return o;
}

Outcome extremal_weights(const Options&) {
  Outcome o;
  for (const char* id : {"C_13_12", "C_23_12", "C_7_16", "C_5_20", "C_7_20", "Cp_5_20", "Cp_7_20",
                         "Cpp_7_20"}) {
    const ZkCode c = catalog_code(id);
    const std::int64_t d = min_euclidean_weight(c);
    o.expect(d == 2 * c.modulus(), std::string(id) + " d_E " + std::to_string(d));
  }
  return o;
}

Outcome frame_certificates(const Options&) {
  Outcome o;
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::int64_t> small(-5, 5);
  int frames = 0;
  for (const auto& id : catalog_list()) {
    if (catalog_get(id).kind != EntryKind::SkewSeed) continue;
    const SkewSeed s = catalog_seed(id);
    const Lattice l = construction_a(build_code_from_skew(s));
    for (int drawn = 0; drawn < 5;) {
      FrameQuadruple q{small(rng), small(rng), 0, 0};
      q.d = q.a + s.ell * q.b + s.k * small(rng);
      q.c = q.b + s.ell * q.d + s.k * small(rng);
      if (q.a == 0 && q.b == 0 && q.c == 0 && q.d == 0) continue;
      ++drawn;
      const Frame f = build_frame_matrix(s, q);
      const IntMatrix g = IntMatrix::from_rows(f.vectors).gram();
      std::int64_t scalar = 0;
      o.expect(g.is_scalar(&scalar) && scalar == frame_constant(s, q) * s.k,
               id + ": F F^T is not frame_constant * I");
      o.expect(contains_frame(l, f), id + ": frame rows not in the lattice");
      ++frames;
    }
  }
  o.notes.push_back(std::to_string(frames) + " frames");
  return o;
}

Outcome representations(const Options&) {
  Outcome o;
  std::vector<bool> prime(200, true);
  prime[0] = prime[1] = false;
  for (std::size_t i = 2; i < 200; ++i)
    for (std::size_t j = i * i; j < 200; j += i) prime[j] = false;
  for (const auto& rc : representation_cases()) {
    for (std::int64_t p = 2; p < 200; ++p) {
      if (!prime[p]) continue;
      const bool excluded = std::find(rc.excluded_primes.begin(), rc.excluded_primes.end(), p) !=
                            rc.excluded_primes.end();
      const auto r = representation_search(rc, p);
      const std::string where = std::string("case ") + rc.label + " p=" + std::to_string(p);
      if (excluded) {
        o.expect(!r, where + ": excluded prime has a representation");
        continue;
      }
      if (!r) {
        o.fail(where + ": no representation");
        continue;
      }
      o.expect(r->a * r->a + rc.m * r->b * r->b + r->c * r->c + rc.m * r->d * r->d == rc.k * p &&
                   oracle::md(r->b - (r->c - rc.ell * r->d), rc.k) == 0 &&
                   oracle::md(r->d - (r->a + rc.ell * r->b), rc.k) == 0,
               where + ": representation does not check");
    }
  }
  std::vector<std::int64_t> below30;
  for (std::int64_t p : representation_case('a').excluded_primes)
    if (p < 30) below30.push_back(p);
  o.expect(below30 == std::vector<std::int64_t>{2, 5, 7, 13, 23}, "case a exclusions below 30");
  return o;
}

Outcome theta_series(const Options& opt) {
  Outcome o;
  const auto d20 = theta_prefix(catalog_lattice("D20"), Rational(5), opt.node_budget);
  const std::uint64_t want20[] = {1, 0, 760, 0, 77560, 524288};
  for (int r = 0; r <= 5; ++r)
    o.expect(d20.at(Rational(r)) == want20[r], "D20 norm " + std::to_string(r));
  if (!opt.slow) {
    o.notes.push_back("L36 skipped (--slow)");
    return o;
  }
  try {
    const auto l36 = theta_prefix(catalog_lattice("L36"), Rational(5), kSlowThetaBudget);
    const std::uint64_t want36[] = {1, 0, 0, 0, 42840, 1916928};
    for (int r = 0; r <= 5; ++r)
      o.expect(l36.at(Rational(r)) == want36[r], "L36 norm " + std::to_string(r));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded) throw;
    o.unknown("L36: node budget exhausted");
  }
  return o;
}

Outcome frame_statements(const Options& opt) {
  Outcome o;
  const auto d45 = find_frame(catalog_lattice("D4_5"), 2, opt.node_budget);
  o.expect(d45 && contains_frame(catalog_lattice("D4_5"), *d45), "D4_5 has no 2-frame");
  o.expect(!find_frame(catalog_lattice("A5_4"), 2, opt.node_budget), "A5_4 has a 2-frame");
  o.expect(frame_existence_report("D20", 3).verdict == Verdict::No, "D20, k=3 is not 'no'");
  for (std::int64_t k = 2; k <= 50; ++k) {
    const auto r = frame_existence_report("D12p", k);
    o.expect(r.verdict == Verdict::Yes && r.frame &&
                 contains_frame(catalog_lattice(r.frame_lattice), *r.frame) && r.frame->norm == k,
             "D12p, k=" + std::to_string(k) + " is not a verified 'yes'");
  }
  return o;
}

Outcome properties(const Options& opt) {
  Outcome o;
  // min(A_k(C)) = min{k, d_E / k} on codes small enough to enumerate.
  int pairs = 0;
  for (const auto& id : catalog_list()) {
    const auto& e = catalog_get(id);
    if (e.kind != EntryKind::Code) continue;
    const ZkCode c = catalog_code(id);
    if (c.length() > 28 || c.cardinality() > 10000000) continue;
    const std::int64_t d = min_euclidean_weight(c);
    const Rational want = std::min(Rational(c.modulus()), Rational(d, c.modulus()));
    o.expect(min_norm(construction_a(c), opt.node_budget) == want, id + ": min{k, d_E/k} fails");
    ++pairs;
  }
  o.notes.push_back(std::to_string(pairs) + " min-norm pairs");

  // Shadow coset theta additivity.
  for (const char* id : {"D12p", "D4_5", "A5_4", "D20", "C_7_16", "Z8", "Z12"}) {
    const Lattice l = catalog_lattice(id);
    const auto sd = even_sublattice_and_shadow(l);
    const Rational top(3);
    const auto whole = theta_prefix(l, top, opt.node_budget);
    const auto c0 = coset_theta_prefix(sd.even_sublattice, sd.cosets[0], top, opt.node_budget);
    const auto c2 = coset_theta_prefix(sd.even_sublattice, sd.cosets[2], top, opt.node_budget);
    for (int r = 0; r <= 3; ++r)
      o.expect(whole.at(Rational(r)) == c0.at(Rational(r)) + c2.at(Rational(r)),
               std::string(id) + ": coset thetas do not add up at norm " + std::to_string(r));
  }

  // scale_frame for m <= 25, on Z^4 and on a 3-frame of A_3(C_{12,3}(D_6)).
  Frame z4{1, 1, {}};
  for (int i = 0; i < 4; ++i) {
    Vec v(4, 0);
    v[i] = 1;
    z4.vectors.push_back(v);
  }
  const Lattice d12 = catalog_lattice("C_12_3_D6");
  const auto three = find_frame(d12, 3, opt.node_budget);
  o.expect(three.has_value(), "no 3-frame in A_3(C_12_3_D6)");
  for (std::int64_t m = 1; m <= 25; ++m) {
    const Frame a = scale_frame(z4, m);
    o.expect(a.norm == m && contains_frame(integer_lattice(4), a), "Z4 frame scaled by " + std::to_string(m));
    if (three) {
      const Frame b = scale_frame(*three, m);
      o.expect(b.norm == 3 * m && contains_frame(d12, b), "D12 3-frame scaled by " + std::to_string(m));
    }
  }

  // Pruned vs naive d_E on random self-dual codes.
  std::mt19937_64 rng(99);
  int random_codes = 0;
  for (const auto [half, p] : std::vector<std::pair<std::size_t, std::int64_t>>{
           {4, 3}, {6, 3}, {8, 3}, {10, 3}, {4, 5}, {6, 5}, {4, 7}, {4, 11}, {4, 13}, {4, 17}}) {
    for (int t = 0; t < 4; ++t) {
      const auto gens = oracle::random_self_dual(half, p, rng);
      const auto words = oracle::codewords(p, gens);
      if (words.size() > 100000) continue;
      o.expect(min_euclidean_weight(ZkCode(p, gens)) == oracle::min_weight(p, words),
               "random code over Z_" + std::to_string(p));
      ++random_codes;
    }
  }
  o.notes.push_back(std::to_string(random_codes) + " random codes");

  // Neighbours of Z^8 and of D12p + Z^4 (Z^4 written at scale 3).
  const Lattice d12p = catalog_lattice("D12p");
  const Lattice z4s(IntMatrix::from_rows({{1, 1, 1, 0}, {-1, 1, 0, 1}, {-1, 0, 1, -1}, {0, -1, 1, 1}}), 3);
  o.expect(d12p.scale() == 3, "D12p is not at scale 3");
  IntMatrix sum(16, 16);
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 12; ++j) sum(i, j) = d12p.basis()(i, j);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) sum(12 + i, 12 + j) = z4s.basis()(i, j);
  for (const Lattice& base : {integer_lattice(8), Lattice(sum, 3)}) {
    const auto [a, b] = even_neighbors(base);
    for (const Lattice* n : {&a, &b}) {
      o.expect(n->is_even() && n->is_unimodular(), "neighbour not even unimodular");
      o.expect(min_norm(*n, opt.node_budget) == Rational(2), "neighbour minimum is not 2");
    }
  }
  return o;
}

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "PASS";
    case Status::Fail:
      return "FAIL";
    default:
      return "UNKNOWN";
  }
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--slow") == 0) {
      opt.slow = true;
    } else if (std::strcmp(argv[i], "--node-budget") == 0 && i + 1 < argc) {
      opt.node_budget = std::stoull(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--slow] [--node-budget N]\n";
      return 64;
    }
  }
  struct Criterion {
    int number;
    const char* name;
    double limit, slow_limit;
    std::function<Outcome(const Options&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "catalog validity", kLimit1, kLimit1, catalog_validity},
      {2, "lattice table minimum norms", kLimit2, kLimit2Slow, table2_minima},
      {3, "extremal weights by enumeration", kLimit3, kLimit3, extremal_weights},
      {4, "frame certificates", kLimit4, kLimit4, frame_certificates},
      {5, "prime representations", kLimit5, kLimit5, representations},
      {6, "theta series", kLimit6, kLimit6Slow, theta_series},
      {7, "frame existence statements", kLimit7, kLimit7, frame_statements},
      {8, "property suites", kLimit8, kLimit8, properties},
  };
  bool failed = false, unknown = false;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(opt);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const double limit = opt.slow ? c.slow_limit : c.limit;
    if (secs > limit) o.fail("over the time limit");
    std::ostringstream line;
    line << "criterion " << c.number << " " << status_name(o.status) << " " << c.name << " ("
         << std::fixed;
    line.precision(2);
    line << secs << " s, limit " << limit << " s)";
    for (const auto& n : o.notes) line << "; " << n;
    std::cout << line.str() << std::endl;
    failed = failed || o.status == Status::Fail;
    unknown = unknown || o.status == Status::Unknown;
  }
  return failed ? 1 : unknown ? 2 : 0;
}

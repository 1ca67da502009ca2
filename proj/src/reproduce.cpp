#include "zkframes/reproduce.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "zkframes/arith.hpp"
#include "zkframes/bounds.hpp"
#include "zkframes/catalog.hpp"
#include "zkframes/error.hpp"
#include "zkframes/formats.hpp"
#include "zkframes/report.hpp"

namespace zkf {

WeightCertificate certify_min_euclidean_weight(const ZkCode& code, std::uint64_t codeword_budget,
                                               std::uint64_t node_budget) {
  WeightCertificate w;
  const std::int64_t k = code.modulus();
  const auto n = static_cast<std::int64_t>(code.length());
  if (code.cardinality() <= BigInt(codeword_budget)) {
    const std::int64_t d = min_euclidean_weight(code, codeword_budget);
    w.exact = d;
    w.lower = w.upper = d;
    w.method = "codeword enumeration";
    return w;
  }
  std::optional<std::int64_t> bound;
  if (n <= 48)
    bound = d_e_upper_bound(n, k, is_type_ii(code) ? CodeType::TypeII : CodeType::TypeI).bound;

  if (has_split_form(code)) {
    // Smallest depth whose lower bound reaches k^2 (or the upper bound),
    // else the deepest the budget allows.
    const std::int64_t grain = is_type_ii(code) ? 2 * k : k;
    const std::int64_t goal = bound ? std::min(*bound, k * k) : k * k;
    std::int64_t t = 0;
    for (std::int64_t d = 1; split_search_size(code, d) <= node_budget; ++d) {
      t = d;
      if ((2 * d + 2 + grain - 1) / grain * grain >= goal) break;
    }
    if (t > 0) {
      const SplitWeightBound s = split_weight_search(code, t, node_budget);
      w.lower = s.lower;
      w.upper = bound ? std::min(*bound, s.upper) : s.upper;
      w.method = "two information sets, half weight <= " + std::to_string(t);
      if (w.lower >= w.upper) {
        w.lower = w.upper;
        w.exact = w.upper;
        return w;
      }
      if (w.lower >= k * k) return w;
    }
  }

  require(bound.has_value(), ErrorCode::BudgetExceeded,
          "too many codewords and no weight bound beyond length 48");
  Rational mu;
  try {
    mu = min_norm(construction_a(code), node_budget);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded || w.method.empty()) throw;
    return w;
  }
  w.upper = std::min(w.method.empty() ? *bound : w.upper, *bound);
  if (mu < Rational(k)) {
    require(mu.denominator() == 1, ErrorCode::Internal, "non-integral minimum for a self-dual code");
    w.exact = k * mu.numerator();
    w.lower = w.upper = *w.exact;
    w.method = "lattice minimum " + format_rational(mu) + " < k";
    return w;
  }
  w.lower = std::max(w.lower, k * k);
  if (w.lower >= w.upper) {
    w.exact = w.upper;
    w.lower = w.upper;
    w.method = "lattice minimum k gives d_E >= k^2 = upper bound";
  } else {
    w.method = "lattice minimum k gives d_E >= k^2";
  }
  return w;
}

MinNormCertificate min_norm_via_code(const Lattice& l, const ZkCode& code, std::uint64_t lattice_budget,
                                     std::uint64_t codeword_budget, std::uint64_t node_budget) {
  MinNormCertificate c;
  try {
    c.value = min_norm(l, lattice_budget);
    c.method = "Fincke-Pohst";
    return c;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded) throw;
  }
  const std::int64_t k = code.modulus();
  const WeightCertificate w = certify_min_euclidean_weight(code, codeword_budget, node_budget);
  if (w.lower >= k * k) {
    c.value = Rational(k);
    c.method = "d_E >= " + std::to_string(w.lower) + " = k^2 or more, by " + w.method;
  } else if (w.exact) {
    c.value = Rational(*w.exact, k);
    c.method = "d_E = " + std::to_string(*w.exact) + " by " + w.method;
  } else {
    c.method = std::to_string(w.lower) + " <= d_E <= " + std::to_string(w.upper) + " by " + w.method;
  }
  return c;
}

const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Unknown: return "UNKNOWN";
    case CheckStatus::Skip: return "SKIP";
  }
  return "?";
}

std::string format_check(const Check& c) {
  return std::string(check_status_name(c.status)) + " " + c.subject + ": " + c.detail;
}

namespace {

using Checks = std::vector<Check>;

void add(Checks& out, bool ok, std::string subject, std::string detail) {
  out.push_back({ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(subject), std::move(detail)});
}

// Runs `body`, turning a budget overrun into UNKNOWN and other errors into FAIL.
void guarded(Checks& out, const std::string& subject, const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    out.push_back({e.code() == ErrorCode::BudgetExceeded ? CheckStatus::Unknown : CheckStatus::Fail,
                   subject, e.what()});
  }
}

std::vector<std::string> ids_where(const std::function<bool(const CatalogEntry&)>& pred) {
  std::vector<std::string> out;
  for (const auto& id : catalog_list())
    if (pred(catalog_get(id))) out.push_back(id);
  return out;
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

void check_verify(Checks& out, const std::string& id) {
  const VerifyResult v = verify_entry(id);
  std::string detail;
  for (const auto& l : v.lines) detail += (detail.empty() ? "" : "; ") + l;
  add(out, v.ok, id, "verify " + detail);
}

void check_code(Checks& out, const std::string& id, const ReproduceOptions& opt) {
  const CatalogEntry& e = catalog_get(id);
  check_verify(out, id);
  const ZkCode code = catalog_code(id);
  const auto n = static_cast<std::int64_t>(code.length());
  add(out, !is_type_ii(code), id,
      is_type_ii(code) ? "claimed Type I, but every generator has Euclidean weight 0 mod " +
                             std::to_string(2 * code.modulus()) + ", so the code is Type II"
                       : "Type I as claimed");
  if (!e.claimed_d_e) return;
  const std::int64_t claimed = *e.claimed_d_e;

  const Classification cls = classify(code, claimed, CodeType::TypeI);
  add(out, extremality_name(cls.label) == e.claimed_class, id,
      "claimed d_E=" + std::to_string(claimed) + " classifies as " + extremality_name(cls.label) +
          " (bound " + std::to_string(cls.profile.definition_bound) + ")");

  const bool enumerable = code.cardinality() <= BigInt(opt.codeword_budget);
  if (!enumerable && n > 32 && !opt.slow) {
    out.push_back({CheckStatus::Skip, id, "d_E needs a dimension-" + std::to_string(n) +
                                              " lattice minimum; run with --slow"});
    return;
  }
  guarded(out, id, [&] {
    const WeightCertificate w =
        certify_min_euclidean_weight(code, opt.codeword_budget, opt.node_budget);
    if (w.exact) {
      add(out, *w.exact == claimed, id,
          "d_E=" + std::to_string(*w.exact) + " by " + w.method + ", claimed " +
              std::to_string(claimed));
    } else {
      const bool consistent = w.lower <= claimed && claimed <= w.upper;
      out.push_back({consistent ? CheckStatus::Unknown : CheckStatus::Fail, id,
                     std::to_string(w.lower) + " <= d_E <= " + std::to_string(w.upper) + " by " +
                         w.method + ", claimed " + std::to_string(claimed)});
    }
  });

  if (!e.isomorphic_to.empty() && (n <= 32 || opt.slow)) {
    guarded(out, id, [&] {
      const Fingerprint a = fingerprint(catalog_lattice(id), opt.node_budget);
      const Fingerprint b = fingerprint(catalog_lattice(e.isomorphic_to), opt.node_budget);
      add(out, a == b, id,
          "A_k(C) " + fingerprint_text(a) + " vs " + e.isomorphic_to + " " + fingerprint_text(b));
    });
  }
}

Checks codes_check(const std::vector<std::string>& ids, const ReproduceOptions& opt) {
  Checks out;
  for (const auto& id : ids) check_code(out, id, opt);
  return out;
}

Checks table1(const ReproduceOptions&) {
  Checks out;
  for (const auto& id : ids_where([](const CatalogEntry& e) { return e.kind == EntryKind::SkewSeed; })) {
    check_verify(out, id);
    guarded(out, id, [&] {
      const SkewSeed seed = catalog_seed(id);
      for (std::int64_t target = 1; target <= 200; ++target) {
        const auto q = find_quadruple(seed.k, seed.m, seed.ell, target);
        if (!q || (q->b == 0 && q->d == 0)) continue;
        const Frame f = build_frame_matrix(seed, *q);
        const bool ok = is_orthogonal_frame(f) &&
                        contains_frame(construction_a(build_code_from_skew(seed)), f);
        add(out, ok, id,
            "frame from (a,b,c,d)=(" + std::to_string(q->a) + "," + std::to_string(q->b) + "," +
                std::to_string(q->c) + "," + std::to_string(q->d) + ") is a " +
                std::to_string(target) + "-frame of size " + std::to_string(f.vectors.size()));
        return;
      }
      out.push_back({CheckStatus::Unknown, id, "no quadruple with b or d nonzero up to 200"});
    });
  }
  return out;
}

// Fincke-Pohst nodes tried before a lattice table minimum falls back to its
// code; L44 needs about 5e7.
constexpr std::uint64_t kLatticeFirstBudget = 500000000ULL;

std::string code_of_lattice(const std::string& lattice_id) {
  for (const auto& id : catalog_list()) {
    const CatalogEntry& e = catalog_get(id);
    if (e.kind == EntryKind::Code && e.form == CodeForm::FromSeed && e.isomorphic_to == lattice_id) return id;
  }
  return "";
}

Checks table2(const ReproduceOptions& opt) {
  Checks out;
  for (const auto& id :
       ids_where([](const CatalogEntry& e) { return e.kind == EntryKind::LatticeAlias; })) {
    const CatalogEntry& e = catalog_get(id);
    guarded(out, id, [&] {
      const Lattice l = catalog_lattice(id);
      add(out, l.is_unimodular() && l.is_odd(), id, "odd unimodular of dimension " +
                                                        std::to_string(l.dimension()));
      if (l.dimension() > 28 && !opt.slow) {
        out.push_back({CheckStatus::Skip, id, "minimum norm in dimension " +
                                                  std::to_string(l.dimension()) +
                                                  " runs with --slow"});
        return;
      }
      const std::string claim = e.claimed_min_norm ? std::to_string(*e.claimed_min_norm) : "-";
      const std::string code_id = code_of_lattice(id);
      if (code_id.empty()) {
        const Rational mu = min_norm(l, opt.node_budget);
        add(out, e.claimed_min_norm && mu == Rational(*e.claimed_min_norm), id,
            "min=" + format_rational(mu) + " claimed " + claim);
        return;
      }
      const MinNormCertificate m =
          min_norm_via_code(l, catalog_code(code_id), std::min(opt.node_budget, kLatticeFirstBudget),
                            opt.codeword_budget, opt.node_budget);
      if (!m.value) {
        out.push_back({CheckStatus::Unknown, id, "minimum undecided: " + m.method + " on " + code_id});
        return;
      }
      add(out, e.claimed_min_norm && *m.value == Rational(*e.claimed_min_norm), id,
          "min=" + format_rational(*m.value) + " by " + m.method + " claimed " + claim);
    });
    const std::string seed_id = seed_of_lattice(id);
    if (seed_id.empty()) continue;
    const auto& star = catalog_get(seed_id).star;
    if (!star) continue;
    guarded(out, id, [&] {
      std::string failed;
      int checked = 0;
      for (std::int64_t k = 2; k <= 30; ++k) {
        if (!star_condition_check(*star, k)) continue;
        ++checked;
        const FrameReport r = frame_existence_report(id, k, opt.node_budget);
        if (r.verdict != Verdict::Yes) failed += " " + std::to_string(k);
      }
      add(out, failed.empty(), id,
          std::to_string(checked) + " values k <= 30 meeting the star condition all give a k-frame" +
              (failed.empty() ? "" : ", failing:" + failed));
    });
  }
  return out;
}

Checks representations(const ReproduceOptions&) {
  Checks out;
  for (const auto& rc : representation_cases()) {
    int found = 0, none = 0;
    std::string bad;
    for (std::int64_t p = 2; p < 200; ++p) {
      if (!is_prime(p)) continue;
      const bool excluded =
          std::find(rc.excluded_primes.begin(), rc.excluded_primes.end(), p) != rc.excluded_primes.end();
      const auto q = representation_search(rc, p);
      if (q.has_value() == excluded) bad += " " + std::to_string(p);
      (q ? found : none)++;
    }
    add(out, bad.empty(), std::string("case ") + rc.label,
        std::to_string(found) + " primes < 200 represented, " + std::to_string(none) +
            " proved unrepresentable" + (bad.empty() ? "" : ", mismatches:" + bad));
  }
  return out;
}

Checks theta(const ReproduceOptions& opt) {
  Checks out;
  auto one = [&](const std::string& id) {
    const CatalogEntry& e = catalog_get(id);
    guarded(out, id, [&] {
      const Rational top = e.claimed_theta.back().first;
      const ThetaPrefix t = theta_prefix(catalog_lattice(id), top, opt.node_budget);
      std::string got;
      bool ok = true;
      for (const auto& [norm, count] : e.claimed_theta) {
        ok = ok && t.at(norm) == count;
        got += " " + format_rational(norm) + ":" + std::to_string(t.at(norm));
      }
      add(out, ok, id, "theta prefix" + got);
    });
  };
  one("D20");
  if (opt.slow)
    one("L36");
  else
    out.push_back({CheckStatus::Skip, "L36", "dimension-36 theta runs with --slow"});
  return out;
}

Checks frames(const ReproduceOptions& opt) {
  Checks out;
  auto expect = [&](const std::string& id, std::int64_t k, Verdict want) {
    guarded(out, id, [&] {
      const FrameReport r = frame_existence_report(id, k, opt.node_budget);
      std::string steps;
      for (const auto& c : r.chain) steps += (steps.empty() ? "" : " | ") + c;
      if (r.verdict == Verdict::Unknown)
        out.push_back({CheckStatus::Unknown, id, "k=" + std::to_string(k) + " " + r.reason});
      else
        add(out, r.verdict == want, id,
            "k=" + std::to_string(k) + " " + verdict_name(r.verdict) + " " +
                (r.verdict == Verdict::Yes ? steps : r.reason));
    });
  };
  expect("D4_5", 2, Verdict::Yes);
  expect("A5_4", 2, Verdict::No);
  expect("A5_4", 3, Verdict::Yes);
  expect("D20", 2, Verdict::Yes);
  expect("D20", 3, Verdict::No);
  expect("D20", 4, Verdict::Yes);
  guarded(out, "D12p", [&] {
    std::string failed;
    for (std::int64_t k = 2; k <= 50; ++k)
      if (frame_existence_report("D12p", k, opt.node_budget).verdict != Verdict::Yes)
        failed += " " + std::to_string(k);
    add(out, failed.empty(), "D12p",
        "k-frame for every 2 <= k <= 50" + (failed.empty() ? "" : std::string(", failing:") + failed));
  });
  return out;
}

std::vector<std::string> by_provenance(const std::string& prefix) {
  return ids_where([&](const CatalogEntry& e) {
    return e.kind == EntryKind::Code && starts_with(e.provenance, prefix);
  });
}

using Runner = std::function<Checks(const ReproduceOptions&)>;

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> m = [] {
    std::map<std::string, Runner> r;
    auto codes = [](std::string prefix) {
      return [prefix](const ReproduceOptions& o) { return codes_check(by_provenance(prefix), o); };
    };
    r["table1"] = table1;
    r["table2"] = table2;
    r["table3"] = codes("extremal length-20");
    r["table4"] = codes("near-extremal length-28");
    r["table5"] = codes("extremal length-32");
    r["table6"] = codes("extremal length-36");
    r["table7"] = codes("extremal length-40");
    r["table8"] = codes("extremal length-44");
    r["table9"] = codes("near-extremal length-48");
    r["figure1"] = codes("generator matrix figure of C'_{4,20}");
    r["figure2"] = [](const ReproduceOptions& o) {
      auto ids = by_provenance("generator matrix figure of C_{4,28}");
      for (auto& id : by_provenance("generator matrix figure of C'_{4,28}")) ids.push_back(id);
      return codes_check(ids, o);
    };
    r["figure3"] = codes("generator matrix figure of C_{4,36}");
    r["text-codes"] = [](const ReproduceOptions& o) {
      auto ids = by_provenance("length-12");
      for (auto& id : by_provenance("length-16")) ids.push_back(id);
      for (auto& id : by_provenance("bordered")) ids.push_back(id);
      return codes_check(ids, o);
    };
    r["representations"] = representations;
    r["theta"] = theta;
    r["frames"] = frames;
    return r;
  }();
  return m;
}

}  // namespace

std::vector<std::string> reproduce_targets() {
  std::vector<std::string> out;
  for (int i = 1; i <= 9; ++i) out.push_back("table" + std::to_string(i));
  for (int i = 1; i <= 3; ++i) out.push_back("figure" + std::to_string(i));
  for (const char* t : {"text-codes", "representations", "theta", "frames"}) out.emplace_back(t);
  return out;
}

std::vector<Check> reproduce(const std::string& target, const ReproduceOptions& options) {
  const auto& r = runners();
  const auto it = r.find(target);
  require(it != r.end(), ErrorCode::InvalidArgument, "unknown reproduce target '" + target + "'");
  return it->second(options);
}

}  // namespace zkf

#include "zkframes.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "zkframes/arith.hpp"
#include "zkframes/bounds.hpp"
#include "zkframes/catalog.hpp"
#include "zkframes/error.hpp"
#include "zkframes/formats.hpp"
#include "zkframes/report.hpp"
#include "zkframes/reproduce.hpp"

struct zkf_code {
  zkf::ZkCode value;
};
struct zkf_lattice {
  zkf::Lattice value;
};
struct zkf_seed {
  zkf::SkewSeed value;
};
struct zkf_frame {
  zkf::Frame value;
};

namespace {

thread_local std::string g_last_error;

struct NullArgument {
  const char* name;
};

zkf_status to_status(zkf::ErrorCode c) { return static_cast<zkf_status>(static_cast<int>(c)); }

template <class F>
zkf_status guard(F&& body) {
  g_last_error.clear();
  try {
    body();
    return ZKF_OK;
  } catch (const NullArgument& n) {
    g_last_error = std::string("null pointer argument: ") + n.name;
    return ZKF_ERR_NULL_POINTER;
  } catch (const zkf::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return ZKF_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ZKF_ERR_INTERNAL;
  }
}

void need(const void* p, const char* name) {
  if (!p) throw NullArgument{name};
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const std::string& s) {
  if (out) *out = dup(s);
}

std::uint64_t node_budget_or_default(std::uint64_t b) { return b ? b : zkf::kDefaultNodeBudget; }
std::uint64_t codeword_budget_or_default(std::uint64_t b) {
  return b ? b : zkf::kDefaultCodewordBudget;
}

zkf::CodeType to_type(zkf_code_type t) {
  switch (t) {
    case ZKF_TYPE_I: return zkf::CodeType::TypeI;
    case ZKF_TYPE_II: return zkf::CodeType::TypeII;
    default: return zkf::CodeType::Any;
  }
}

zkf::Rational bound_of(std::int64_t num, std::int64_t den) {
  if (den <= 0) zkf::fail(zkf::ErrorCode::InvalidArgument, "norm bound denominator must be positive");
  return zkf::Rational(num, den);
}

}  // namespace

extern "C" {

const char* zkf_last_error(void) { return g_last_error.c_str(); }

const char* zkf_status_name(zkf_status status) {
  if (status == ZKF_OK) return "Ok";
  if (status == ZKF_ERR_NULL_POINTER) return "NullPointer";
  if (status >= ZKF_ERR_INVALID_ARGUMENT && status <= ZKF_ERR_INTERNAL)
    return zkf::error_code_name(static_cast<zkf::ErrorCode>(static_cast<int>(status)));
  return "Unknown";
}

void zkf_string_free(char* s) { std::free(s); }

const char* zkf_version(void) { return "1.0.0"; }

zkf_status zkf_code_from_catalog(const char* id, zkf_code** out) {
  return guard([&] {
    need(id, "id");
    need(out, "out");
    *out = new zkf_code{zkf::catalog_code(id)};
  });
}

zkf_status zkf_code_from_rows(int64_t modulus, const int64_t* rows, size_t nrows, size_t length,
                              zkf_code** out) {
  return guard([&] {
    need(rows, "rows");
    need(out, "out");
    std::vector<zkf::Vec> g(nrows);
    for (size_t i = 0; i < nrows; ++i) g[i].assign(rows + i * length, rows + (i + 1) * length);
    *out = new zkf_code{zkf::ZkCode(modulus, std::move(g))};
  });
}

zkf_status zkf_code_parse(const char* text, zkf_code** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new zkf_code{zkf::parse_code(text)};
  });
}

zkf_status zkf_code_format(const zkf_code* code, char** out) {
  return guard([&] {
    need(code, "code");
    need(out, "out");
    put(out, zkf::format_code(code->value));
  });
}

void zkf_code_free(zkf_code* code) { delete code; }

zkf_status zkf_code_info(const zkf_code* code, int64_t* modulus, size_t* length) {
  return guard([&] {
    need(code, "code");
    if (modulus) *modulus = code->value.modulus();
    if (length) *length = code->value.length();
  });
}

zkf_status zkf_code_is_self_dual(const zkf_code* code, int* out) {
  return guard([&] {
    need(code, "code");
    need(out, "out");
    *out = zkf::is_self_dual(code->value) ? 1 : 0;
  });
}

zkf_status zkf_code_is_type_ii(const zkf_code* code, int* out) {
  return guard([&] {
    need(code, "code");
    need(out, "out");
    *out = zkf::is_type_ii(code->value) ? 1 : 0;
  });
}

zkf_status zkf_code_min_euclidean_weight(const zkf_code* code, uint64_t codeword_budget,
                                         int64_t* out) {
  return guard([&] {
    need(code, "code");
    need(out, "out");
    *out = zkf::min_euclidean_weight(code->value, codeword_budget_or_default(codeword_budget));
  });
}

zkf_status zkf_code_certify_weight(const zkf_code* code, uint64_t codeword_budget,
                                   uint64_t node_budget, int64_t* lower, int64_t* upper,
                                   int* exact, char** method) {
  return guard([&] {
    need(code, "code");
    const auto w = zkf::certify_min_euclidean_weight(
        code->value, codeword_budget_or_default(codeword_budget), node_budget_or_default(node_budget));
    if (lower) *lower = w.lower;
    if (upper) *upper = w.upper;
    if (exact) *exact = w.exact ? 1 : 0;
    put(method, w.method);
  });
}

zkf_status zkf_lattice_from_catalog(const char* id, zkf_lattice** out) {
  return guard([&] {
    need(id, "id");
    need(out, "out");
    *out = new zkf_lattice{zkf::catalog_lattice(id)};
  });
}

zkf_status zkf_lattice_construction_a(const zkf_code* code, zkf_lattice** out) {
  return guard([&] {
    need(code, "code");
    need(out, "out");
    *out = new zkf_lattice{zkf::construction_a(code->value)};
  });
}

zkf_status zkf_lattice_parse(const char* text, zkf_lattice** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new zkf_lattice{zkf::parse_lattice(text)};
  });
}

zkf_status zkf_lattice_format(const zkf_lattice* lattice, char** out) {
  return guard([&] {
    need(lattice, "lattice");
    need(out, "out");
    put(out, zkf::format_lattice(lattice->value));
  });
}

void zkf_lattice_free(zkf_lattice* lattice) { delete lattice; }

zkf_status zkf_lattice_info(const zkf_lattice* lattice, size_t* dimension, int64_t* scale,
                            int* unimodular, int* even) {
  return guard([&] {
    need(lattice, "lattice");
    const auto& l = lattice->value;
    if (dimension) *dimension = l.dimension();
    if (scale) *scale = l.scale();
    if (unimodular) *unimodular = l.is_unimodular() ? 1 : 0;
    if (even) *even = l.is_even() ? 1 : 0;
  });
}

zkf_status zkf_lattice_min_norm(const zkf_lattice* lattice, uint64_t node_budget, int64_t* num,
                                int64_t* den) {
  return guard([&] {
    need(lattice, "lattice");
    const zkf::Rational m = zkf::min_norm(lattice->value, node_budget_or_default(node_budget));
    if (num) *num = m.numerator();
    if (den) *den = m.denominator();
  });
}

zkf_status zkf_lattice_theta(const zkf_lattice* lattice, int64_t max_num, int64_t max_den,
                             uint64_t node_budget, char** out) {
  return guard([&] {
    need(lattice, "lattice");
    need(out, "out");
    const auto t = zkf::theta_prefix(lattice->value, bound_of(max_num, max_den),
                                     node_budget_or_default(node_budget));
    put(out, zkf::format_theta(t));
  });
}

zkf_status zkf_lattice_shadow(const zkf_lattice* lattice, int64_t max_num, int64_t max_den,
                              uint64_t node_budget, char** out) {
  return guard([&] {
    need(lattice, "lattice");
    need(out, "out");
    const auto bound = bound_of(max_num, max_den);
    const auto sd = zkf::even_sublattice_and_shadow(lattice->value);
    std::string text = "shadow " + std::to_string(sd.even_sublattice.dimension()) + " " +
                       std::to_string(sd.scale) + "\n";
    for (std::size_t i = 0; i < 4; ++i)
      text += "coset " + std::to_string(i) + " " + zkf::format_vec(sd.cosets[i]) + "\n";
    for (std::size_t i = 0; i < 4; ++i) {
      const auto t = zkf::coset_theta_prefix(sd.even_sublattice, sd.cosets[i], bound,
                                             node_budget_or_default(node_budget));
      for (const auto& [norm, count] : t.counts)
        text += "theta " + std::to_string(i) + " " + zkf::format_rational(norm) + " " +
                std::to_string(count) + "\n";
    }
    put(out, text);
  });
}

zkf_status zkf_lattice_neighbors(const zkf_lattice* lattice, zkf_lattice** first,
                                 zkf_lattice** second) {
  return guard([&] {
    need(lattice, "lattice");
    need(first, "first");
    need(second, "second");
    auto [a, b] = zkf::even_neighbors(lattice->value);
    auto* pa = new zkf_lattice{std::move(a)};
    try {
      *second = new zkf_lattice{std::move(b)};
    } catch (...) {
      delete pa;
      throw;
    }
    *first = pa;
  });
}

zkf_status zkf_lattice_two_neighbor(const zkf_lattice* lattice, const int64_t* x, const int64_t* y,
                                    size_t n, zkf_lattice** out) {
  return guard([&] {
    need(lattice, "lattice");
    need(x, "x");
    need(y, "y");
    need(out, "out");
    zkf::require(n == lattice->value.dimension(), zkf::ErrorCode::InvalidArgument,
                 "vector length does not match the lattice dimension");
    *out = new zkf_lattice{zkf::two_neighbor_at_vector(lattice->value, {x, n}, {y, n})};
  });
}

zkf_status zkf_lattice_find_frame(const zkf_lattice* lattice, int64_t k, uint64_t node_budget,
                                  zkf_frame** out) {
  return guard([&] {
    need(lattice, "lattice");
    need(out, "out");
    auto f = zkf::find_frame(lattice->value, k, node_budget_or_default(node_budget));
    *out = f ? new zkf_frame{std::move(*f)} : nullptr;
  });
}

zkf_status zkf_lattice_contains_frame(const zkf_lattice* lattice, const zkf_frame* frame,
                                      int* out) {
  return guard([&] {
    need(lattice, "lattice");
    need(frame, "frame");
    need(out, "out");
    *out = zkf::contains_frame(lattice->value, frame->value) ? 1 : 0;
  });
}

zkf_status zkf_seed_from_catalog(const char* id, zkf_seed** out) {
  return guard([&] {
    need(id, "id");
    need(out, "out");
    *out = new zkf_seed{zkf::catalog_seed(id)};
  });
}

zkf_status zkf_seed_parse(const char* text, zkf_seed** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new zkf_seed{zkf::parse_seed(text)};
  });
}

zkf_status zkf_seed_format(const zkf_seed* seed, char** out) {
  return guard([&] {
    need(seed, "seed");
    need(out, "out");
    put(out, zkf::format_seed(seed->value));
  });
}

void zkf_seed_free(zkf_seed* seed) { delete seed; }

zkf_status zkf_seed_info(const zkf_seed* seed, int64_t* k, int64_t* m, int64_t* ell,
                         size_t* order) {
  return guard([&] {
    need(seed, "seed");
    if (k) *k = seed->value.k;
    if (m) *m = seed->value.m;
    if (ell) *ell = seed->value.ell;
    if (order) *order = seed->value.order();
  });
}

zkf_status zkf_seed_code(const zkf_seed* seed, zkf_code** out) {
  return guard([&] {
    need(seed, "seed");
    need(out, "out");
    *out = new zkf_code{zkf::build_code_from_skew(seed->value)};
  });
}

zkf_status zkf_seed_find_quadruple(const zkf_seed* seed, int64_t target, int* found,
                                   int64_t abcd[4]) {
  return guard([&] {
    need(seed, "seed");
    need(found, "found");
    need(abcd, "abcd");
    const auto& s = seed->value;
    const auto q = zkf::find_quadruple(s.k, s.m, s.ell, target);
    *found = q ? 1 : 0;
    if (q) {
      abcd[0] = q->a;
      abcd[1] = q->b;
      abcd[2] = q->c;
      abcd[3] = q->d;
    }
  });
}

zkf_status zkf_seed_frame(const zkf_seed* seed, const int64_t abcd[4], zkf_frame** out) {
  return guard([&] {
    need(seed, "seed");
    need(abcd, "abcd");
    need(out, "out");
    const zkf::FrameQuadruple q{abcd[0], abcd[1], abcd[2], abcd[3]};
    *out = new zkf_frame{zkf::build_frame_matrix(seed->value, q)};
  });
}

zkf_status zkf_frame_parse(const char* text, zkf_frame** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new zkf_frame{zkf::parse_frame(text)};
  });
}

zkf_status zkf_frame_format(const zkf_frame* frame, int verified, char** out) {
  return guard([&] {
    need(frame, "frame");
    need(out, "out");
    put(out, zkf::format_frame(frame->value, verified != 0));
  });
}

void zkf_frame_free(zkf_frame* frame) { delete frame; }

zkf_status zkf_frame_info(const zkf_frame* frame, size_t* size, int64_t* norm, int64_t* scale) {
  return guard([&] {
    need(frame, "frame");
    if (size) *size = frame->value.vectors.size();
    if (norm) *norm = frame->value.norm;
    if (scale) *scale = frame->value.scale;
  });
}

zkf_status zkf_frame_is_orthogonal(const zkf_frame* frame, int* out) {
  return guard([&] {
    need(frame, "frame");
    need(out, "out");
    *out = zkf::is_orthogonal_frame(frame->value) ? 1 : 0;
  });
}

zkf_status zkf_frame_scale(const zkf_frame* frame, int64_t m, zkf_frame** out) {
  return guard([&] {
    need(frame, "frame");
    need(out, "out");
    *out = new zkf_frame{zkf::scale_frame(frame->value, m)};
  });
}

zkf_status zkf_representation_search(char case_label, int64_t p, int* found, int64_t abcd[4]) {
  return guard([&] {
    need(found, "found");
    need(abcd, "abcd");
    const auto q = zkf::representation_search(zkf::representation_case(case_label), p);
    *found = q ? 1 : 0;
    if (q) {
      abcd[0] = q->a;
      abcd[1] = q->b;
      abcd[2] = q->c;
      abcd[3] = q->d;
    }
  });
}

zkf_status zkf_four_square(int64_t m, int64_t out[4]) {
  return guard([&] {
    need(out, "out");
    const auto q = zkf::four_square_decomposition(m);
    for (int i = 0; i < 4; ++i) out[i] = q[i];
  });
}

zkf_status zkf_star_check(const char* id, int64_t k, int* out) {
  return guard([&] {
    need(id, "id");
    need(out, "out");
    std::string seed_id = id;
    if (zkf::catalog_has(seed_id) && zkf::catalog_get(seed_id).kind == zkf::EntryKind::LatticeAlias)
      seed_id = zkf::seed_of_lattice(seed_id);
    const auto& e = zkf::catalog_get(seed_id);
    zkf::require(e.star.has_value(), zkf::ErrorCode::InvalidArgument,
                 "'" + std::string(id) + "' has no star condition");
    *out = zkf::star_condition_check(*e.star, k) ? 1 : 0;
  });
}

zkf_status zkf_bound(int64_t n, int64_t k, zkf_code_type type, int64_t* bound, char** rule) {
  return guard([&] {
    need(bound, "bound");
    const auto p = zkf::d_e_upper_bound(n, k, to_type(type));
    *bound = p.bound;
    put(rule, p.rule);
  });
}

zkf_status zkf_classify(int64_t n, int64_t k, int64_t d_e, zkf_code_type type,
                        zkf_extremality* label, int* side_condition_unchecked) {
  return guard([&] {
    need(label, "label");
    const auto c = zkf::classify(n, k, d_e, to_type(type));
    switch (c.label) {
      case zkf::Extremality::Extremal: *label = ZKF_EXTREMAL; break;
      case zkf::Extremality::NearExtremal: *label = ZKF_NEAR_EXTREMAL; break;
      case zkf::Extremality::Neither: *label = ZKF_NEITHER; break;
    }
    if (side_condition_unchecked) *side_condition_unchecked = c.side_condition_unchecked ? 1 : 0;
  });
}

zkf_status zkf_unimodular_min_norm_bound(int64_t n, int64_t* out) {
  return guard([&] {
    need(out, "out");
    *out = zkf::unimodular_min_norm_bound(n);
  });
}

zkf_status zkf_catalog_list(char** out) {
  return guard([&] {
    need(out, "out");
    std::string text;
    for (const auto& id : zkf::catalog_list()) text += id + "\n";
    put(out, text);
  });
}

zkf_status zkf_catalog_verify(const char* id, int* ok, char** out) {
  return guard([&] {
    need(id, "id");
    need(ok, "ok");
    const auto r = zkf::verify_entry(id);
    *ok = r.ok ? 1 : 0;
    std::string text;
    for (const auto& l : r.lines) text += l + "\n";
    put(out, text);
  });
}

zkf_status zkf_report(const char* lattice_id, int64_t k, uint64_t node_budget,
                      zkf_verdict* verdict, char** text, zkf_frame** frame, char** frame_lattice) {
  return guard([&] {
    need(lattice_id, "lattice_id");
    need(verdict, "verdict");
    const auto r = zkf::frame_existence_report(
        lattice_id, k, node_budget ? node_budget : zkf::kDefaultReportBudget);
    switch (r.verdict) {
      case zkf::Verdict::Yes: *verdict = ZKF_YES; break;
      case zkf::Verdict::No: *verdict = ZKF_NO; break;
      case zkf::Verdict::Unknown: *verdict = ZKF_UNKNOWN; break;
    }
    std::string body;
    for (const auto& c : r.chain) body += "step " + c + "\n";
    if (!r.reason.empty()) body += "reason " + r.reason + "\n";
    zkf_frame* f = r.frame ? new zkf_frame{*r.frame} : nullptr;
    try {
      put(text, body);
      put(frame_lattice, r.frame_lattice);
    } catch (...) {
      delete f;
      throw;
    }
    if (frame)
      *frame = f;
    else
      delete f;
  });
}

zkf_status zkf_reproduce_targets(char** out) {
  return guard([&] {
    need(out, "out");
    std::string text;
    for (const auto& t : zkf::reproduce_targets()) text += t + "\n";
    put(out, text);
  });
}

zkf_status zkf_reproduce(const char* target, int slow, uint64_t node_budget,
                         uint64_t codeword_budget, int* failures, int* unknowns, char** out) {
  return guard([&] {
    need(target, "target");
    zkf::ReproduceOptions opt;
    opt.slow = slow != 0;
    opt.node_budget = node_budget_or_default(node_budget);
    opt.codeword_budget = codeword_budget_or_default(codeword_budget);
    const auto checks = zkf::reproduce(target, opt);
    int fails = 0, unk = 0;
    std::string text;
    for (const auto& c : checks) {
      if (c.status == zkf::CheckStatus::Fail) ++fails;
      if (c.status == zkf::CheckStatus::Unknown) ++unk;
      text += zkf::format_check(c) + "\n";
    }
    if (failures) *failures = fails;
    if (unknowns) *unknowns = unk;
    put(out, text);
  });
}

}  // extern "C"

// Command-line front end. Talks to the library only through zkframes.h.
#include <zkframes.h>

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kVerified = 0;
constexpr int kRefuted = 1;
constexpr int kUnknown = 2;
constexpr int kUsage = 64;
constexpr int kSoftware = 70;

struct Exit {
  int code;
  std::string message;
};

int exit_code_for(zkf_status s) {
  switch (s) {
    case ZKF_OK: return kVerified;
    case ZKF_ERR_BUDGET_EXCEEDED: return kUnknown;
    case ZKF_ERR_INVALID_ARGUMENT:
    case ZKF_ERR_PARSE:
    case ZKF_ERR_UNKNOWN_ID:
    case ZKF_ERR_UNKNOWN_LATTICE:
    case ZKF_ERR_NULL_POINTER: return kUsage;
    case ZKF_ERR_INTERNAL: return kSoftware;
    default: return kRefuted;
  }
}

void check(zkf_status s) {
  if (s == ZKF_OK) return;
  throw Exit{exit_code_for(s), std::string(zkf_status_name(s)) + ": " + zkf_last_error()};
}

struct Freer {
  void operator()(zkf_code* p) const { zkf_code_free(p); }
  void operator()(zkf_lattice* p) const { zkf_lattice_free(p); }
  void operator()(zkf_seed* p) const { zkf_seed_free(p); }
  void operator()(zkf_frame* p) const { zkf_frame_free(p); }
  void operator()(char* p) const { zkf_string_free(p); }
};
using Code = std::unique_ptr<zkf_code, Freer>;
using LatticeH = std::unique_ptr<zkf_lattice, Freer>;
using Seed = std::unique_ptr<zkf_seed, Freer>;
using FrameH = std::unique_ptr<zkf_frame, Freer>;

std::string take(char* s) {
  std::unique_ptr<char, Freer> guard(s);
  return s ? std::string(s) : std::string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Exit{kUsage, "cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Exit{kUsage, "cannot write '" + path + "'"};
  out << text;
}

bool is_file(const std::string& s) { return std::filesystem::is_regular_file(s); }

std::string first_word(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string w;
    if ((ls >> w) && w[0] != '#') return w;
  }
  return "";
}

Code load_code(const std::string& ref) {
  zkf_code* c = nullptr;
  if (is_file(ref))
    check(zkf_code_parse(read_file(ref).c_str(), &c));
  else
    check(zkf_code_from_catalog(ref.c_str(), &c));
  return Code(c);
}

// A catalog lattice, a lattice file, or a code file (Construction A).
LatticeH load_lattice(const std::string& ref) {
  zkf_lattice* l = nullptr;
  if (is_file(ref)) {
    const std::string text = read_file(ref);
    if (first_word(text) == "zkcode") {
      Code c = load_code(ref);
      check(zkf_lattice_construction_a(c.get(), &l));
    } else {
      check(zkf_lattice_parse(text.c_str(), &l));
    }
  } else {
    check(zkf_lattice_from_catalog(ref.c_str(), &l));
  }
  return LatticeH(l);
}

Seed load_seed(const std::string& ref) {
  zkf_seed* s = nullptr;
  if (is_file(ref))
    check(zkf_seed_parse(read_file(ref).c_str(), &s));
  else
    check(zkf_seed_from_catalog(ref.c_str(), &s));
  return Seed(s);
}

std::vector<std::int64_t> parse_list(const std::string& s, const std::string& flag) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stoll(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Exit{kUsage, flag + ": not an integer list: '" + s + "'"};
    }
  }
  return out;
}

// "p" or "p/q".
std::pair<std::int64_t, std::int64_t> parse_norm(const std::string& s) {
  const auto slash = s.find('/');
  const auto num = parse_list(s.substr(0, slash), "--max-norm");
  std::int64_t den = 1;
  if (slash != std::string::npos) den = parse_list(s.substr(slash + 1), "--max-norm").at(0);
  if (num.size() != 1 || den <= 0) throw Exit{kUsage, "--max-norm: expected p or p/q"};
  return {num[0], den};
}

std::string lattice_summary(const zkf_lattice* l) {
  size_t dim = 0;
  int64_t scale = 0;
  int uni = 0, even = 0;
  check(zkf_lattice_info(l, &dim, &scale, &uni, &even));
  return "dimension " + std::to_string(dim) + "\nscale " + std::to_string(scale) +
         "\nunimodular " + (uni ? "yes" : "no") + "\nparity " + (even ? "even" : "odd") + "\n";
}

struct Options {
  std::uint64_t budget = 0;
  unsigned threads = 1;
  std::string out;
};

void certificate(const Options& o, const std::string& text) {
  if (!o.out.empty()) write_file(o.out, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frames in unimodular lattices and self-dual codes over Z_k"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--budget", opt.budget,
                 "Search budget: enumeration nodes, or codewords for dmin (0 = default)");
  app.add_option("--threads", opt.threads, "Worker threads (computations run on one thread)");
  app.add_option("--out", opt.out, "Write the certificate to this file");
  int code = kVerified;

  std::string id, ref, max_norm = "2", xs, ys, abcd, frame_file, lattice_ref;
  std::int64_t k = 0, m = 0, p = 0, n = 0, node_budget = 0;
  char case_label = 'a';
  bool slow = false, type1 = false, type2 = false;

  auto* list = app.add_subcommand("list", "List catalog ids");
  list->callback([&] {
    char* s = nullptr;
    check(zkf_catalog_list(&s));
    std::cout << take(s);
  });

  auto* verify = app.add_subcommand("verify", "Validity checks for a catalog entry");
  verify->add_option("id", id, "Catalog id")->required();
  verify->callback([&] {
    int ok = 0;
    char* s = nullptr;
    check(zkf_catalog_verify(id.c_str(), &ok, &s));
    std::cout << take(s) << "result " << (ok ? "verified" : "refuted") << "\n";
    code = ok ? kVerified : kRefuted;
  });

  auto* dmin = app.add_subcommand("dmin", "Minimum Euclidean weight of a code");
  dmin->add_option("code", ref, "Catalog id or code file")->required();
  dmin->add_option("--node-budget", node_budget, "Node budget for the lattice route");
  dmin->callback([&] {
    Code c = load_code(ref);
    int64_t lo = 0, hi = 0;
    int exact = 0;
    char* method = nullptr;
    check(zkf_code_certify_weight(c.get(), opt.budget, static_cast<uint64_t>(node_budget), &lo, &hi,
                                  &exact, &method));
    const std::string how = take(method);
    std::string text;
    if (exact)
      text = "d_E " + std::to_string(lo) + "\n";
    else
      text = "d_E_lower " + std::to_string(lo) + "\nd_E_upper " + std::to_string(hi) + "\n";
    text += "method " + how + "\n";
    std::cout << text;
    certificate(opt, text);
    code = exact ? kVerified : kUnknown;
  });

  auto* lattice = app.add_subcommand("lattice", "Construction A and unimodularity");
  lattice->add_option("id", ref, "Catalog code/lattice id, or a code or lattice file")->required();
  lattice->callback([&] {
    LatticeH l = load_lattice(ref);
    std::cout << lattice_summary(l.get());
    char* s = nullptr;
    check(zkf_lattice_format(l.get(), &s));
    certificate(opt, take(s));
    int uni = 0;
    check(zkf_lattice_info(l.get(), nullptr, nullptr, &uni, nullptr));
    code = uni ? kVerified : kRefuted;
  });

  auto* minnorm = app.add_subcommand("minnorm", "Exact minimum norm");
  minnorm->add_option("id", ref, "Catalog lattice/code id or file")->required();
  minnorm->callback([&] {
    LatticeH l = load_lattice(ref);
    int64_t num = 0, den = 1;
    check(zkf_lattice_min_norm(l.get(), opt.budget, &num, &den));
    const std::string text =
        "min " + std::to_string(num) + (den == 1 ? "" : "/" + std::to_string(den)) + "\n";
    std::cout << text;
    certificate(opt, text);
  });

  auto* theta = app.add_subcommand("theta", "Theta series prefix");
  theta->add_option("id", ref, "Catalog lattice/code id or file")->required();
  theta->add_option("--max-norm", max_norm, "Largest norm, p or p/q")->required();
  theta->callback([&] {
    LatticeH l = load_lattice(ref);
    const auto [num, den] = parse_norm(max_norm);
    char* s = nullptr;
    check(zkf_lattice_theta(l.get(), num, den, opt.budget, &s));
    const std::string text = take(s);
    std::cout << text;
    certificate(opt, text);
  });

  auto* shadow = app.add_subcommand("shadow", "Even sublattice cosets and their theta prefixes");
  shadow->add_option("id", ref, "Odd unimodular lattice: catalog id or file")->required();
  shadow->add_option("--max-norm", max_norm, "Largest norm for the coset counts")
      ->capture_default_str();
  shadow->callback([&] {
    LatticeH l = load_lattice(ref);
    const auto [num, den] = parse_norm(max_norm);
    char* s = nullptr;
    check(zkf_lattice_shadow(l.get(), num, den, opt.budget, &s));
    const std::string text = take(s);
    std::cout << text;
    certificate(opt, text);
  });

  auto* neighbors = app.add_subcommand("neighbors", "The two even unimodular neighbours");
  neighbors->add_option("id", ref, "Odd unimodular lattice of dimension 8t")->required();
  neighbors->callback([&] {
    LatticeH l = load_lattice(ref);
    zkf_lattice *a = nullptr, *b = nullptr;
    check(zkf_lattice_neighbors(l.get(), &a, &b));
    LatticeH la(a), lb(b);
    std::string cert;
    int i = 0;
    for (const auto* x : {la.get(), lb.get()}) {
      std::cout << "neighbor " << ++i << "\n" << lattice_summary(x);
      char* s = nullptr;
      check(zkf_lattice_format(x, &s));
      cert += take(s);
    }
    if (!opt.out.empty()) {
      char *s1 = nullptr, *s2 = nullptr;
      check(zkf_lattice_format(la.get(), &s1));
      check(zkf_lattice_format(lb.get(), &s2));
      write_file(opt.out + ".1", take(s1));
      write_file(opt.out + ".2", take(s2));
    }
  });

  auto* two = app.add_subcommand("two-neighbor", "Neighbour of an even unimodular lattice at x");
  two->add_option("id", ref, "Even unimodular lattice: catalog id or file")->required();
  two->add_option("--x", xs, "x in scaled coordinates, comma separated")->required();
  two->add_option("--y", ys, "y in scaled coordinates, comma separated")->required();
  two->callback([&] {
    LatticeH l = load_lattice(ref);
    const auto x = parse_list(xs, "--x"), y = parse_list(ys, "--y");
    if (x.size() != y.size()) throw Exit{kUsage, "--x and --y differ in length"};
    zkf_lattice* r = nullptr;
    check(zkf_lattice_two_neighbor(l.get(), x.data(), y.data(), x.size(), &r));
    LatticeH res(r);
    std::cout << lattice_summary(res.get());
    char* s = nullptr;
    check(zkf_lattice_format(res.get(), &s));
    certificate(opt, take(s));
  });

  auto* fbuild = app.add_subcommand("frame-build", "Frame from a skew seed and (a,b,c,d)");
  fbuild->add_option("seed", ref, "Catalog seed id or seed file")->required();
  fbuild->add_option("--abcd", abcd, "a,b,c,d")->required();
  fbuild->callback([&] {
    Seed s = load_seed(ref);
    const auto q = parse_list(abcd, "--abcd");
    if (q.size() != 4) throw Exit{kUsage, "--abcd needs four integers"};
    zkf_frame* f = nullptr;
    check(zkf_seed_frame(s.get(), q.data(), &f));
    FrameH frame(f);
    char* txt = nullptr;
    check(zkf_frame_format(frame.get(), 1, &txt));
    const std::string text = take(txt);
    std::cout << text;
    certificate(opt, text);
  });

  auto* ffind = app.add_subcommand("frame-find", "Exhaustive k-frame search");
  ffind->add_option("id", ref, "Catalog lattice/code id or file")->required();
  ffind->add_option("--k", k, "Frame norm")->required();
  ffind->callback([&] {
    LatticeH l = load_lattice(ref);
    zkf_frame* f = nullptr;
    check(zkf_lattice_find_frame(l.get(), k, opt.budget, &f));
    if (!f) {
      std::cout << "frame none (exhaustive)\n";
      code = kRefuted;
      return;
    }
    FrameH frame(f);
    char* txt = nullptr;
    check(zkf_frame_format(frame.get(), 1, &txt));
    const std::string text = take(txt);
    std::cout << text;
    certificate(opt, text);
  });

  auto* fscale = app.add_subcommand("frame-scale", "Multiply a frame by m (frame size 4t)");
  fscale->add_option("frame", frame_file, "Frame certificate file")->required();
  fscale->add_option("--m", m, "Multiplier")->required();
  fscale->add_option("--lattice", lattice_ref, "Also check membership in this lattice");
  fscale->callback([&] {
    zkf_frame* f = nullptr;
    check(zkf_frame_parse(read_file(frame_file).c_str(), &f));
    FrameH in(f);
    zkf_frame* g = nullptr;
    check(zkf_frame_scale(in.get(), m, &g));
    FrameH outf(g);
    int ok = 0;
    check(zkf_frame_is_orthogonal(outf.get(), &ok));
    if (ok && !lattice_ref.empty()) {
      LatticeH l = load_lattice(lattice_ref);
      check(zkf_lattice_contains_frame(l.get(), outf.get(), &ok));
    }
    char* txt = nullptr;
    check(zkf_frame_format(outf.get(), ok, &txt));
    const std::string text = take(txt);
    std::cout << text;
    certificate(opt, text);
    code = ok ? kVerified : kRefuted;
  });

  auto* rep = app.add_subcommand("rep-search", "Representation search for one case and prime");
  rep->add_option("--case", case_label, "Case label a..h")->required();
  rep->add_option("--p", p, "Prime")->required();
  rep->callback([&] {
    int found = 0;
    int64_t q[4] = {0, 0, 0, 0};
    check(zkf_representation_search(case_label, p, &found, q));
    std::string text;
    if (found)
      text = "abcd " + std::to_string(q[0]) + "," + std::to_string(q[1]) + "," +
             std::to_string(q[2]) + "," + std::to_string(q[3]) + "\n";
    else
      text = "none (exhaustive)\n";
    std::cout << text;
    certificate(opt, text);
    code = found ? kVerified : kRefuted;
  });

  auto* star = app.add_subcommand("star", "Star condition of a lattice row for k");
  star->add_option("--row", id, "Lattice alias or seed id")->required();
  star->add_option("--k", k, "Integer k")->required();
  star->callback([&] {
    int ok = 0;
    check(zkf_star_check(id.c_str(), k, &ok));
    std::cout << "star " << (ok ? "true" : "false") << "\n";
    code = ok ? kVerified : kRefuted;
  });

  auto* report = app.add_subcommand("report", "Does the lattice contain a k-frame?");
  report->add_option("lattice", id, "Catalog lattice id")->required();
  report->add_option("--k", k, "Frame norm")->required();
  report->callback([&] {
    zkf_verdict v = ZKF_UNKNOWN;
    char *text = nullptr, *host = nullptr;
    zkf_frame* f = nullptr;
    check(zkf_report(id.c_str(), k, opt.budget, &v, &text, &f, &host));
    FrameH frame(f);
    const std::string body = take(text), where = take(host);
    static const char* names[] = {"yes", "no", "unknown"};
    std::string out = "lattice " + id + "\nk " + std::to_string(k) + "\nverdict " + names[v] + "\n" + body;
    if (frame) {
      char* ft = nullptr;
      check(zkf_frame_format(frame.get(), 1, &ft));
      out += "frame_lattice " + where + "\n" + take(ft);
    }
    std::cout << out;
    certificate(opt, out);
    code = v == ZKF_YES ? kVerified : v == ZKF_NO ? kRefuted : kUnknown;
  });

  auto* bound = app.add_subcommand("bound", "Upper bound on d_E for length n over Z_k");
  bound->add_option("--n", n, "Length")->required();
  bound->add_option("--k", k, "Modulus")->required();
  bound->add_flag("--type1", type1, "Type I code");
  bound->add_flag("--type2", type2, "Type II code");
  bound->callback([&] {
    if (type1 && type2) throw Exit{kUsage, "--type1 and --type2 are exclusive"};
    int64_t b = 0;
    char* rule = nullptr;
    check(zkf_bound(n, k, type1 ? ZKF_TYPE_I : type2 ? ZKF_TYPE_II : ZKF_TYPE_ANY, &b, &rule));
    std::cout << "bound " << b << "\nrule " << take(rule) << "\n";
  });

  auto* repro = app.add_subcommand("reproduce", "Re-check one table, figure or result family");
  repro->add_option("target", id, "table1..table9, figure1..figure3, text-codes, "
                                  "representations, theta, frames, or all")
      ->required();
  repro->add_flag("--slow", slow, "Include the large-dimension computations");
  repro->callback([&] {
    std::vector<std::string> targets;
    if (id == "all") {
      char* s = nullptr;
      check(zkf_reproduce_targets(&s));
      std::istringstream in(take(s));
      for (std::string t; std::getline(in, t);) targets.push_back(t);
    } else {
      targets.push_back(id);
    }
    int fails = 0, unknowns = 0;
    std::string all;
    for (const auto& t : targets) {
      int f = 0, u = 0;
      char* s = nullptr;
      check(zkf_reproduce(t.c_str(), slow ? 1 : 0, opt.budget, 0, &f, &u, &s));
      const std::string text = "# " + t + "\n" + take(s);
      std::cout << text << std::flush;
      all += text;
      fails += f;
      unknowns += u;
    }
    std::cout << "summary failures " << fails << " unknown " << unknowns << "\n";
    certificate(opt, all);
    code = fails ? kRefuted : unknowns ? kUnknown : kVerified;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const Exit& e) {
    std::cerr << "error: " << e.message << "\n";
    if (e.code == kUnknown) std::cout << "result unknown\n";
    return e.code;
  }
  return code;
}

#include "zkframes/formats.hpp"

#include <fstream>
#include <sstream>

#include "zkframes/error.hpp"

namespace zkf {

namespace {

std::vector<std::vector<std::string>> tokenize(const std::string& text) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    lines.push_back(std::move(toks));
  }
  return lines;
}

std::int64_t to_int(const std::string& s) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError, "not an integer: '" + s + "'");
  }
}

Vec to_row(const std::vector<std::string>& toks, std::size_t expected, std::size_t line_no) {
  require(toks.size() == expected, ErrorCode::ParseError,
          "row " + std::to_string(line_no) + " has " + std::to_string(toks.size()) +
              " entries, expected " + std::to_string(expected));
  Vec v;
  v.reserve(toks.size());
  for (const auto& t : toks) v.push_back(to_int(t));
  return v;
}

const std::vector<std::string>& header(const std::vector<std::vector<std::string>>& lines,
                                       const std::string& keyword, std::size_t fields) {
  require(!lines.empty(), ErrorCode::ParseError, "empty input, expected '" + keyword + "' header");
  const auto& h = lines.front();
  require(h.size() == fields + 1 && h[0] == keyword, ErrorCode::ParseError,
          "expected header '" + keyword + "' with " + std::to_string(fields) + " fields");
  return h;
}

std::string rows_text(const std::vector<Vec>& rows) {
  std::string out;
  for (const auto& r : rows) out += format_vec(r) + "\n";
  return out;
}

}  // namespace

std::string format_code(const ZkCode& code) {
  return "zkcode " + std::to_string(code.modulus()) + " " + std::to_string(code.length()) + "\n" +
         rows_text(code.generators());
}

ZkCode parse_code(const std::string& text) {
  const auto lines = tokenize(text);
  const auto& h = header(lines, "zkcode", 2);
  const std::int64_t k = to_int(h[1]), n = to_int(h[2]);
  require(k >= 2 && n >= 1, ErrorCode::ParseError, "bad zkcode header values");
  std::vector<Vec> rows;
  for (std::size_t i = 1; i < lines.size(); ++i)
    rows.push_back(to_row(lines[i], static_cast<std::size_t>(n), i));
  require(!rows.empty(), ErrorCode::ParseError, "code has no generator rows");
  return ZkCode(k, std::move(rows));
}

std::string format_lattice(const Lattice& lattice) {
  return "lattice " + std::to_string(lattice.dimension()) + " " + std::to_string(lattice.scale()) +
         "\n" + rows_text(lattice.basis().to_rows());
}

Lattice parse_lattice(const std::string& text) {
  const auto lines = tokenize(text);
  const auto& h = header(lines, "lattice", 2);
  const std::int64_t n = to_int(h[1]), s = to_int(h[2]);
  require(n >= 1 && s >= 1, ErrorCode::ParseError, "bad lattice header values");
  require(lines.size() == static_cast<std::size_t>(n) + 1, ErrorCode::ParseError,
          "lattice needs exactly n basis rows");
  std::vector<Vec> rows;
  for (std::size_t i = 1; i < lines.size(); ++i)
    rows.push_back(to_row(lines[i], static_cast<std::size_t>(n), i));
  return Lattice(IntMatrix::from_rows(rows), s, false);
}

std::string format_seed(const SkewSeed& seed) {
  return "skewseed " + std::to_string(seed.k) + " " + std::to_string(seed.m) + " " +
         std::to_string(seed.ell) + " " + std::to_string(seed.order()) + "\n" +
         rows_text(seed.matrix.to_rows());
}

SkewSeed parse_seed(const std::string& text) {
  const auto lines = tokenize(text);
  const auto& h = header(lines, "skewseed", 4);
  const std::int64_t k = to_int(h[1]), m = to_int(h[2]), ell = to_int(h[3]), n = to_int(h[4]);
  require(n >= 1, ErrorCode::ParseError, "bad skewseed order");
  require(lines.size() == static_cast<std::size_t>(n) + 1, ErrorCode::ParseError,
          "skew seed needs exactly 'order' rows");
  std::vector<Vec> rows;
  for (std::size_t i = 1; i < lines.size(); ++i)
    rows.push_back(to_row(lines[i], static_cast<std::size_t>(n), i));
  return make_skew_seed(IntMatrix::from_rows(rows), k, m, ell);
}

std::string format_frame(const Frame& frame, bool verified) {
  const std::size_t n = frame.vectors.size();
  std::string out = "frame " + std::to_string(n) + " " + std::to_string(frame.norm) + " " +
                    std::to_string(frame.scale) + "\n" + rows_text(frame.vectors);
  if (verified) out += "verified_gram " + std::to_string(frame.norm) + "\n";
  return out;
}

Frame parse_frame(const std::string& text) {
  const auto lines = tokenize(text);
  const auto& h = header(lines, "frame", 3);
  const std::int64_t n = to_int(h[1]);
  Frame f;
  f.norm = to_int(h[2]);
  f.scale = to_int(h[3]);
  require(n >= 1 && f.norm >= 1 && f.scale >= 1, ErrorCode::ParseError, "bad frame header values");
  std::size_t i = 1;
  for (; i < lines.size() && lines[i][0] != "verified_gram"; ++i)
    f.vectors.push_back(to_row(lines[i], lines[1].size(), i));
  require(f.vectors.size() == static_cast<std::size_t>(n), ErrorCode::ParseError,
          "frame needs exactly n rows");
  return f;
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(to_int(s));
  const std::int64_t den = to_int(s.substr(slash + 1));
  require(den > 0, ErrorCode::ParseError, "denominator must be positive in '" + s + "'");
  return Rational(to_int(s.substr(0, slash)), den);
}

std::string format_theta(const ThetaPrefix& theta) {
  std::string out;
  for (const auto& [norm, count] : theta.counts)
    out += format_rational(norm) + " " + std::to_string(count) + "\n";
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  require(static_cast<bool>(out), ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  out << text;
}

}  // namespace zkf

#pragma once

#include <string>

#include "zkframes/lattices.hpp"
#include "zkframes/skew_frames.hpp"
#include "zkframes/zk_codes.hpp"

namespace zkf {

// Plain-text formats. Blank lines and lines starting with '#' are ignored.
//   zkcode k n            then one generator row per line
//   lattice n s           then n basis rows (scaled coordinates)
//   skewseed k m ell order then the matrix rows
//   frame n k scale       then n rows, then "verified_gram k" when checked
// All parsers throw ParseError on malformed input.

std::string format_code(const ZkCode& code);
ZkCode parse_code(const std::string& text);

std::string format_lattice(const Lattice& lattice);
/// The basis is kept as written (no reduction).
Lattice parse_lattice(const std::string& text);

std::string format_seed(const SkewSeed& seed);
SkewSeed parse_seed(const std::string& text);

std::string format_frame(const Frame& frame, bool verified);
Frame parse_frame(const std::string& text);

/// "norm count" lines, ascending; norms printed as p or p/q.
std::string format_theta(const ThetaPrefix& theta);

std::string format_rational(const Rational& r);
/// Accepts "p" or "p/q". Throws ParseError.
Rational parse_rational(const std::string& s);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace zkf

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zkframes/arith.hpp"
#include "zkframes/exact.hpp"
#include "zkframes/lattices.hpp"
#include "zkframes/skew_frames.hpp"
#include "zkframes/zk_codes.hpp"

namespace zkf {

enum class EntryKind { Code, SkewSeed, LatticeAlias };

enum class CodeForm { FourNegacirculant, Z4TwoBlock, BorderedCirculant, FromSeed };

struct CatalogEntry {
  std::string id;
  EntryKind kind = EntryKind::Code;
  /// Where the data comes from, in words (table or figure caption and row).
  std::string provenance;

  // Codes.
  std::int64_t modulus = 0;
  CodeForm form = CodeForm::FourNegacirculant;
  Vec r_a, r_b;                  // four-negacirculant first rows
  std::size_t block_a = 0, block_b = 0;
  std::vector<Vec> top_right;    // Z_4 two-block data
  std::vector<Vec> bottom_right;
  Vec first_row;                 // bordered circulant
  std::string seed_id;           // code built from a skew seed

  // Skew seeds.
  std::int64_t paley_p = 0;      // nonzero for Paley seeds
  Vec r_a1, r_a2;
  std::int64_t seed_k = 0, seed_m = 0, seed_ell = 0;
  std::optional<StarCondition> star;

  // Lattice aliases: the code whose Construction A is the lattice.
  std::string code_id;

  // Claimed facts.
  std::optional<std::int64_t> claimed_d_e;
  std::optional<std::int64_t> claimed_min_norm;
  std::vector<std::pair<Rational, std::uint64_t>> claimed_theta;
  /// Lattice alias that A_k(C) is claimed to be isometric to.
  std::string isomorphic_to;
  /// "extremal" or "near-extremal" for codes.
  std::string claimed_class;
};

/// All ids, in catalog order.
std::vector<std::string> catalog_list();
/// Throws UnknownId.
const CatalogEntry& catalog_get(const std::string& id);
bool catalog_has(const std::string& id);

/// Builders; each throws UnknownId, or InvalidArgument for a wrong kind.
ZkCode catalog_code(const std::string& id);
SkewSeed catalog_seed(const std::string& id);

/// Lattice by alias ("D12p"), by code id (Construction A), or builtin
/// ("E8", "Z<n>"). Throws UnknownLattice.
Lattice catalog_lattice(const std::string& id);
bool catalog_lattice_exists(const std::string& id);

/// Code ids whose Construction A is claimed isometric to the alias.
std::vector<std::string> codes_claimed_isomorphic(const std::string& lattice_alias);

/// Seed id of a lattice alias built from a skew seed ("" if none).
std::string seed_of_lattice(const std::string& lattice_alias);

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> lines;
};

/// Validity checks for one entry: skew identities and congruence for seeds,
/// self-duality (and A A^T + B B^T == -I for the two-circulant form) for
/// codes, unimodularity for lattice aliases.
VerifyResult verify_entry(const std::string& id);

}  // namespace zkf

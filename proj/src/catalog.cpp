#include "zkframes/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "zkframes/error.hpp"

namespace zkf {

namespace {

Vec digits(const std::string& s) {
  Vec v;
  for (char c : s)
    if (c >= '0' && c <= '9') v.push_back(c - '0');
  return v;
}

CatalogEntry negacirculant_code(std::string id, std::int64_t k, Vec ra, Vec rb, std::string prov,
                                std::string iso, std::int64_t d_e, std::string cls) {
  CatalogEntry e;
  e.id = std::move(id);
  e.kind = EntryKind::Code;
  e.modulus = k;
  e.form = CodeForm::FourNegacirculant;
  e.r_a = std::move(ra);
  e.r_b = std::move(rb);
  e.provenance = std::move(prov);
  e.isomorphic_to = std::move(iso);
  e.claimed_d_e = d_e;
  e.claimed_class = std::move(cls);
  return e;
}

// Rows given as "<A digits> <B digits>"; bottom rows as "<2I digits> <2D digits>".
CatalogEntry z4_code(std::string id, std::size_t a, std::size_t b,
                     const std::vector<std::string>& top, const std::vector<std::string>& bottom,
                     std::string prov, std::string iso, std::int64_t d_e, std::string cls) {
  CatalogEntry e;
  e.id = std::move(id);
  e.kind = EntryKind::Code;
  e.modulus = 4;
  e.form = CodeForm::Z4TwoBlock;
  e.block_a = a;
  e.block_b = b;
  for (const auto& r : top) e.top_right.push_back(digits(r));
  for (const auto& r : bottom) e.bottom_right.push_back(digits(r));
  e.provenance = std::move(prov);
  e.isomorphic_to = std::move(iso);
  e.claimed_d_e = d_e;
  e.claimed_class = std::move(cls);
  return e;
}

CatalogEntry seed_entry(std::string id, std::int64_t k, std::int64_t m, std::int64_t ell,
                        std::int64_t paley_p, Vec ra1, Vec ra2, StarCondition star,
                        std::string prov) {
  CatalogEntry e;
  e.id = std::move(id);
  e.kind = EntryKind::SkewSeed;
  e.seed_k = k;
  e.seed_m = m;
  e.seed_ell = ell;
  e.paley_p = paley_p;
  e.r_a1 = std::move(ra1);
  e.r_a2 = std::move(ra2);
  e.star = std::move(star);
  e.provenance = std::move(prov);
  return e;
}

struct SeedRow {
  const char* name;       // D6, P8, ...
  const char* alias;      // lattice alias
  std::int64_t min_norm;
};

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  const std::string seed_table = "skew seed table";
  const std::string lattice_table = "lattice table (Construction A of seed codes)";

  // Skew seeds with their (k, m, l), first rows and condition (*).
  out.push_back(seed_entry("D6_seed", 3, 25, 1, 0, {0, 2, 2}, {0, 1, -4},
                           {2, {2, 5, 7, 13, 23}, 'a'}, seed_table + ", row D_6"));
  out.push_back(seed_entry("P8_seed", 4, 7, 2, 7, {}, {}, {2, {2, 7}, 'b'},
                           seed_table + ", row P_8"));
  out.push_back(seed_entry("D10_seed", 3, 25, 1, 0, {0, 0, 2, 2, 0}, {1, 2, 2, -2, 2},
                           {2, {2, 5, 7, 13, 23}, 'a'}, seed_table + ", row D_10"));
  out.push_back(seed_entry("Dp10_seed", 3, 25, 1, 0, {0, 0, 0, 0, 0}, {-3, -2, 2, -2, 2},
                           {2, {2, 5, 7, 13, 23}, 'a'}, seed_table + ", row D'_10"));
  out.push_back(seed_entry("Dpp10_seed", 5, 49, 0, 0, {0, 0, 3, 3, 0}, {-2, -3, 4, -1, 1},
                           {2, {2, 3, 7, 11, 19, 29}, 'c'}, seed_table + ", row D''_10"));
  out.push_back(seed_entry("D14_seed", 3, 25, 1, 0, {0, 2, 1, 0, 0, 1, 2},
                           {-1, -2, 1, -2, 2, 1, 0}, {3, {2, 5, 7, 13, 23}, 'a'},
                           seed_table + ", row D_14"));
  out.push_back(seed_entry("Dp14_seed", 5, 25, 2, 0, {0, 0, 2, -1, -1, 2, 0},
                           {-2, -1, -2, 0, -1, -1, -2}, {3, {2, 3, 17}, 'd'},
                           seed_table + ", row D'_14"));
  out.push_back(seed_entry("D16_seed", 4, 15, 2, 0, {0, 1, 1, 0, 1, 0, 1, 1},
                           {1, 1, 1, -1, -1, 2, -1, 0}, {4, {2, 3}, 'e'},
                           seed_table + ", row D_16"));
  out.push_back(seed_entry("D18_seed", 6, 49, 2, 0, {0, 1, -3, 0, 2, 2, 0, -3, 1},
                           {-2, 2, -1, 2, 1, 2, 1, 1, 1}, {4, {2, 3, 5, 7}, 'f'},
                           seed_table + ", row D_18"));
  out.push_back(seed_entry("P20_seed", 4, 19, 0, 19, {}, {}, {4, {2, 3, 13, 19}, 'g'},
                           seed_table + ", row P_20"));
  out.push_back(seed_entry("D22_seed", 5, 25, 2, 0, {0, 0, -1, 1, 0, 0, 0, 0, 1, -1, 0},
                           {1, 0, -2, 1, 1, 1, 2, 1, 0, 2, -2}, {4, {2, 3, 17}, 'd'},
                           seed_table + ", row D_22"));
  out.push_back(seed_entry("D24_seed", 5, 39, 0, 0, {0, 1, 1, 1, 2, -1, 1, -1, 2, 1, 1, 1},
                           {-2, -1, 2, -1, -1, -2, 0, 1, 0, 2, -1, -1}, {5, {2, 3, 7, 17}, 'h'},
                           seed_table + ", row D_24"));

  // Codes C_{2n,k}(M) and their lattices.
  const SeedRow seed_rows[] = {
      {"D6", "D12p", 2},   {"P8", "D8_2", 2},     {"D10", "D4_5", 2},   {"Dp10", "A5_4", 2},
      {"Dpp10", "D20", 2}, {"D14", "R28_32", 3},  {"Dp14", "R28_15", 3}, {"D16", "L32_82", 4},
      {"D18", "L36", 4},   {"P20", "L40", 4},     {"D22", "L44", 4},    {"D24", "L48", 5},
  };
  std::vector<CatalogEntry> aliases;
  for (const auto& row : seed_rows) {
    const std::string seed_id = std::string(row.name) + "_seed";
    const CatalogEntry* s = nullptr;
    for (const auto& e : out)
      if (e.id == seed_id) s = &e;
    const std::size_t order = s->paley_p ? static_cast<std::size_t>(s->paley_p + 1)
                                         : 2 * s->r_a1.size();
    CatalogEntry c;
    c.id = "C_" + std::to_string(2 * order) + "_" + std::to_string(s->seed_k) + "_" + row.name;
    c.kind = EntryKind::Code;
    c.modulus = s->seed_k;
    c.form = CodeForm::FromSeed;
    c.seed_id = seed_id;
    c.provenance = "code (I | M + l I) of " + s->provenance;
    c.isomorphic_to = row.alias;
    out.push_back(c);

    CatalogEntry a;
    a.id = row.alias;
    a.kind = EntryKind::LatticeAlias;
    a.code_id = c.id;
    a.claimed_min_norm = row.min_norm;
    a.provenance = lattice_table + ", row A_" + std::to_string(s->seed_k) + "(C_{" +
                   std::to_string(2 * order) + "," + std::to_string(s->seed_k) + "}(" + row.name +
                   "))";
    aliases.push_back(a);
  }
  for (auto& a : aliases) {
    if (a.id == "D20")
      a.claimed_theta = {{Rational(0), 1}, {Rational(1), 0}, {Rational(2), 760},
                         {Rational(3), 0}, {Rational(4), 77560}, {Rational(5), 524288}};
    if (a.id == "L36")
      a.claimed_theta = {{Rational(0), 1}, {Rational(1), 0}, {Rational(2), 0},
                         {Rational(3), 0}, {Rational(4), 42840}, {Rational(5), 1916928}};
    out.push_back(a);
  }

  const std::string ext = "extremal", near = "near-extremal";
  const std::string t20 = "extremal length-20 code table", t28 = "near-extremal length-28 code table",
                    t32 = "extremal length-32 code table", t36 = "extremal length-36 code table",
                    t40 = "extremal length-40 code table", t44 = "extremal length-44 code table",
                    t48 = "near-extremal length-48 code table",
                    l12 = "length-12 codes C_{13,12}, C_{23,12}", l16 = "length-16 code C_{7,16}";

  out.push_back(negacirculant_code("C_13_12", 13, {0, 1, 6}, {2, 3, 1}, l12, "D12p", 26, ext));
  out.push_back(negacirculant_code("C_23_12", 23, {0, 1, 18}, {7, 4, 0}, l12, "D12p", 46, ext));
  out.push_back(negacirculant_code("C_7_16", 7, {0, 0, 1, 1}, {1, 3, 1, 0}, l16, "D8_2", 14, ext));

  struct Row {
    const char* id;
    std::int64_t k;
    Vec ra, rb;
    const char* iso;
  };
  const std::vector<Row> len20 = {
      {"C_5_20", 5, {0, 0, 0, 1, 1}, {1, 4, 2, 1, 0}, "D4_5"},
      {"C_7_20", 7, {0, 0, 0, 1, 6}, {3, 0, 1, 1, 0}, "D4_5"},
      {"C_13_20", 13, {0, 0, 0, 1, 1}, {10, 3, 2, 1, 0}, "D4_5"},
      {"C_23_20", 23, {0, 0, 0, 1, 18}, {7, 4, 0, 0, 0}, "D4_5"},
      {"Cp_5_20", 5, {0, 0, 0, 1, 4}, {3, 1, 4, 1, 0}, "A5_4"},
      {"Cp_7_20", 7, {0, 0, 0, 1, 5}, {1, 5, 3, 1, 0}, "A5_4"},
      {"Cp_13_20", 13, {0, 0, 0, 1, 4}, {4, 0, 3, 3, 0}, "A5_4"},
      {"Cp_23_20", 23, {0, 0, 0, 1, 12}, {3, 5, 7, 1, 0}, "A5_4"},
      {"Cpp_7_20", 7, {0, 0, 0, 1, 4}, {1, 3, 2, 3, 1}, "D20"},
      {"Cpp_9_20", 9, {0, 0, 0, 1, 3}, {1, 2, 4, 2, 6}, "D20"},
      {"Cpp_11_20", 11, {0, 0, 0, 1, 8}, {5, 6, 6, 3, 2}, "D20"},
      {"Cpp_19_20", 19, {0, 0, 0, 1, 12}, {14, 12, 11, 1, 0}, "D20"},
      {"Cpp_29_20", 29, {0, 0, 0, 1, 21}, {7, 11, 16, 1, 0}, "D20"},
  };
  for (const auto& r : len20)
    out.push_back(negacirculant_code(r.id, r.k, r.ra, r.rb, t20 + ", row " + r.id, r.iso,
                                     2 * r.k, ext));
  out.push_back(z4_code("Cp_4_20", 9, 2,
                        {"11 220113303", "00 021012300", "10 222120030", "01 031321330",
                         "01 232220201", "11 231021312", "00 023031002", "10 230133321",
                         "11 333130022"},
                        {"20 202202200", "02 220022200"},
                        "generator matrix figure of C'_{4,20}", "A5_4", 8, ext));

  const std::vector<Row> len28 = {
      {"C_5_28", 5, {0, 0, 0, 1, 3, 4, 2}, {3, 1, 2, 0, 3, 4, 0}, "R28_32"},
      {"C_7_28", 7, {0, 1, 2, 2, 4, 2, 3}, {2, 2, 4, 0, 4, 1, 2}, "R28_32"},
      {"C_13_28", 13, {0, 0, 0, 1, 0, 9, 1}, {5, 1, 3, 7, 7, 1, 4}, "R28_32"},
      {"C_23_28", 23, {0, 0, 0, 1, 12, 1, 1}, {3, 19, 7, 5, 14, 21, 17}, "R28_32"},
      {"Cp_17_28", 17, {0, 0, 0, 1, 13, 14, 2}, {10, 1, 1, 9, 16, 11, 15}, "R28_15"},
  };
  for (const auto& r : len28)
    out.push_back(negacirculant_code(r.id, r.k, r.ra, r.rb, t28 + ", row " + r.id, r.iso,
                                     3 * r.k, near));
  out.push_back(z4_code(
      "C_4_28", 13, 2,
      {"00 3221032113010", "00 2312302202000", "01 1011113132031", "01 2021011201031",
       "10 3033332032202", "00 2220031132311", "00 1130232110223", "11 2213122020013",
       "01 3200201111201", "01 3133230220230", "10 3111000202123", "10 3011332120200",
       "10 3331011112112"},
      {"20 2220022000000", "02 0022222000000"}, "generator matrix figure of C_{4,28}", "R28_32",
      12, near));
  out.push_back(z4_code(
      "Cp_4_28", 13, 2,
      {"01 1023301203302", "01 1022200000021", "01 1130203022312", "11 1202303012212",
       "00 2321232113032", "01 0002112332213", "11 1113323310300", "00 3321000023111",
       "00 1210231221321", "11 2012013002211", "11 1010001123020", "11 2203101320001",
       "00 3302011030033"},
      {"20 0002202020200", "02 2220222202200"}, "generator matrix figure of C'_{4,28}",
      "R28_15", 12, near));

  out.push_back(negacirculant_code("C_6_32", 6, {0, 0, 1, 2, 2, 2, 1, 2}, {1, 0, 5, 5, 1, 1, 3, 3},
                                   t32 + ", row C_{6,32}", "L32_82", 24, ext));
  out.push_back(negacirculant_code("C_9_32", 9, {0, 0, 1, 5, 0, 6, 0, 1}, {0, 6, 2, 2, 7, 6, 1, 7},
                                   t32 + ", row C_{9,32}", "L32_82", 36, ext));

  out.push_back(negacirculant_code("C_5_36", 5, {0, 1, 1, 2, 3, 2, 0, 2, 3},
                                   {1, 1, 0, 2, 0, 3, 4, 0, 4}, t36 + ", row C_{5,36}", "L36", 20,
                                   ext));
  out.push_back(negacirculant_code("C_7_36", 7, {0, 1, 6, 2, 3, 3, 6, 4, 5},
                                   {4, 3, 3, 6, 2, 4, 3, 0, 3}, t36 + ", row C_{7,36}", "L36", 28,
                                   ext));
  out.push_back(negacirculant_code("C_9_36", 9, {0, 1, 0, 5, 5, 0, 0, 0, 3},
                                   {0, 2, 3, 3, 4, 5, 5, 7, 3}, t36 + ", row C_{9,36}", "L36", 36,
                                   ext));
  out.push_back(z4_code(
      "C_4_36", 16, 4,
      {"0100 1203131221301121", "1011 1011202100200000", "1010 2020221222311322",
       "0101 1311223022101123", "1110 0022223222133220", "0110 0102101300313130",
       "0100 1003131232103103", "0001 0212210231101002", "1101 3311103322131110",
       "0101 3033123233020103", "0101 1320133200323130", "0100 2002221022321133",
       "0101 3211333002312322", "0101 1031113220233320", "0101 0103111200301112",
       "1110 2222020200331300"},
      {"2000 0020020000222022", "0200 0200202000000220", "0020 2222220000020000",
       "0002 2022000000000000"},
      "generator matrix figure of C_{4,36}", "L36", 16, ext));

  out.push_back(negacirculant_code("C_9_40", 9, {0, 0, 1, 0, 5, 8, 3, 0, 4, 4},
                                   {0, 5, 0, 0, 5, 6, 7, 2, 5, 8}, t40 + ", row C_{9,40}", "", 36,
                                   ext));
  out.push_back(negacirculant_code("C_13_40", 13, {0, 0, 1, 4, 10, 5, 1, 10, 11, 4},
                                   {11, 4, 4, 6, 7, 12, 11, 7, 2, 8}, t40 + ", row C_{13,40}", "",
                                   52, ext));
  out.push_back(negacirculant_code("C_19_40", 19, {0, 0, 1, 2, 14, 16, 17, 1, 0, 13},
                                   {10, 2, 15, 2, 18, 16, 9, 15, 12, 0}, t40 + ", row C_{19,40}",
                                   "", 76, ext));

  out.push_back(negacirculant_code("C_9_44", 9, {0, 0, 0, 0, 1, 0, 1, 4, 0, 8, 0},
                                   {7, 0, 7, 1, 8, 8, 2, 8, 1, 5, 1}, t44 + ", row C_{9,44}", "",
                                   36, ext));
  out.push_back(negacirculant_code("C_17_44", 17, {0, 0, 0, 0, 1, 13, 7, 13, 11, 16, 13},
                                   {12, 14, 8, 14, 7, 12, 14, 7, 14, 14, 7},
                                   t44 + ", row C_{17,44}", "", 68, ext));

  out.push_back(negacirculant_code("C_7_48", 7, {0, 1, 6, 3, 0, 2, 0, 2, 4, 2, 5, 3},
                                   {3, 6, 1, 5, 4, 6, 0, 5, 0, 5, 1, 5}, t48 + ", row C_{7,48}",
                                   "", 35, near));
  out.push_back(negacirculant_code("C_9_48", 9, {0, 1, 2, 4, 6, 1, 6, 2, 2, 0, 3, 0},
                                   {7, 2, 5, 1, 6, 8, 4, 1, 2, 2, 8, 4}, t48 + ", row C_{9,48}",
                                   "", 45, near));
  CatalogEntry c448;
  c448.id = "C_4_48";
  c448.kind = EntryKind::Code;
  c448.modulus = 4;
  c448.form = CodeForm::BorderedCirculant;
  c448.first_row = {1, 1, 3, 0, 3, 3, 1, 2, 0, 1, 3, 2, 3, 0, 0, 3, 3, 2, 1, 2, 1, 1, 0};
  c448.provenance = "bordered double circulant code C_{4,48}";
  c448.claimed_d_e = 20;
  c448.claimed_class = near;
  out.push_back(c448);
  return out;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* find_entry(const std::string& id) {
  for (const auto& e : catalog())
    if (e.id == id) return &e;
  return nullptr;
}

IntMatrix seed_matrix(const CatalogEntry& e) {
  if (e.paley_p) return build_paley_skew(e.paley_p);
  return build_skew_negacirculant(e.r_a1, e.r_a2);
}

}  // namespace

std::vector<std::string> catalog_list() {
  std::vector<std::string> ids;
  for (const auto& e : catalog()) ids.push_back(e.id);
  return ids;
}

const CatalogEntry& catalog_get(const std::string& id) {
  const CatalogEntry* e = find_entry(id);
  if (!e) fail(ErrorCode::UnknownId, "unknown catalog id '" + id + "'");
  return *e;
}

bool catalog_has(const std::string& id) { return find_entry(id) != nullptr; }

SkewSeed catalog_seed(const std::string& id) {
  const CatalogEntry& e = catalog_get(id);
  require(e.kind == EntryKind::SkewSeed, ErrorCode::InvalidArgument, id + " is not a skew seed");
  return make_skew_seed(seed_matrix(e), e.seed_k, e.seed_m, e.seed_ell);
}

ZkCode catalog_code(const std::string& id) {
  const CatalogEntry& e = catalog_get(id);
  require(e.kind == EntryKind::Code, ErrorCode::InvalidArgument, id + " is not a code");
  switch (e.form) {
    case CodeForm::FourNegacirculant:
      return build_four_negacirculant(e.modulus, e.r_a, e.r_b);
    case CodeForm::Z4TwoBlock:
      return build_z4_two_block(e.block_a, e.block_b, IntMatrix::from_rows(e.top_right),
                                IntMatrix::from_rows(e.bottom_right));
    case CodeForm::BorderedCirculant:
      return build_bordered_circulant(e.modulus, e.first_row);
    case CodeForm::FromSeed:
      return build_code_from_skew(catalog_seed(e.seed_id));
  }
  fail(ErrorCode::Internal, "unhandled code form");
}

bool catalog_lattice_exists(const std::string& id) {
  if (id == "E8") return true;
  if (id.size() >= 2 && id[0] == 'Z' &&
      std::all_of(id.begin() + 1, id.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return true;
  const CatalogEntry* e = find_entry(id);
  return e && (e->kind == EntryKind::LatticeAlias || e->kind == EntryKind::Code);
}

Lattice catalog_lattice(const std::string& id) {
  if (id == "E8") return e8_lattice();
  if (id.size() >= 2 && id[0] == 'Z' &&
      std::all_of(id.begin() + 1, id.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    const long n = std::stol(id.substr(1));
    require(n >= 1 && n <= 256, ErrorCode::UnknownLattice, "bad dimension in " + id);
    return integer_lattice(static_cast<std::size_t>(n));
  }
  const CatalogEntry* e = find_entry(id);
  if (!e || e->kind == EntryKind::SkewSeed)
    fail(ErrorCode::UnknownLattice, "unknown lattice '" + id + "'");
  // LLL on the Construction A basis dominates repeated lookups, so keep them.
  static std::mutex lock;
  static std::map<std::string, Lattice> built;
  {
    std::lock_guard guard(lock);
    if (auto it = built.find(id); it != built.end()) return it->second;
  }
  Lattice l = construction_a(catalog_code(e->kind == EntryKind::LatticeAlias ? e->code_id : id));
  std::lock_guard guard(lock);
  return built.emplace(id, std::move(l)).first->second;
}

std::vector<std::string> codes_claimed_isomorphic(const std::string& lattice_alias) {
  std::vector<std::string> out;
  for (const auto& e : catalog())
    if (e.kind == EntryKind::Code && e.isomorphic_to == lattice_alias) out.push_back(e.id);
  return out;
}

std::string seed_of_lattice(const std::string& lattice_alias) {
  const CatalogEntry* e = find_entry(lattice_alias);
  if (!e || e->kind != EntryKind::LatticeAlias) return "";
  const CatalogEntry& c = catalog_get(e->code_id);
  return c.form == CodeForm::FromSeed ? c.seed_id : "";
}

VerifyResult verify_entry(const std::string& id) {
  const CatalogEntry& e = catalog_get(id);
  VerifyResult r;
  auto line = [&](bool ok, const std::string& what) {
    r.lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    if (!ok) r.ok = false;
  };
  try {
    switch (e.kind) {
      case EntryKind::SkewSeed: {
        const SkewSeed s = catalog_seed(id);
        line(true, "M^T = -M");
        line(true, "M M^T = " + std::to_string(s.m) + " I_" + std::to_string(s.order()));
        line(true, "m + l^2 = " + std::to_string(s.m + s.ell * s.ell) + " == -1 (mod " +
                       std::to_string(s.k) + ")");
        for (const auto& w : s.warnings) r.lines.push_back("warn " + w);
        break;
      }
      case EntryKind::Code: {
        const ZkCode c = catalog_code(id);
        if (e.form == CodeForm::FourNegacirculant) {
          const IntMatrix a = negacirculant(e.r_a), b = negacirculant(e.r_b);
          const IntMatrix s = (a * a.transpose() + b * b.transpose()).reduced_mod(e.modulus);
          line(s == IntMatrix::identity(a.rows()).scaled(e.modulus - 1).reduced_mod(e.modulus),
               "A A^T + B B^T == -I (mod " + std::to_string(e.modulus) + ")");
        }
        line(is_self_dual(c), "self-dual over Z_" + std::to_string(c.modulus()) + ", length " +
                                  std::to_string(c.length()) + ", #C = " + c.cardinality().str());
        if (c.modulus() % 2 == 0)
          r.lines.push_back(std::string("info ") + (is_type_ii(c) ? "Type II" : "Type I"));
        break;
      }
      case EntryKind::LatticeAlias: {
        const Lattice l = catalog_lattice(id);
        line(l.is_unimodular(), "unimodular, dimension " + std::to_string(l.dimension()));
        r.lines.push_back(std::string("info ") + (l.is_even() ? "even" : "odd"));
        break;
      }
    }
  } catch (const Error& err) {
    line(false, std::string(error_code_name(err.code())) + ": " + err.what());
  }
  return r;
}

}  // namespace zkf

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linadd/report.hpp"

namespace linadd {

// A finite group of order <= 64 given by its multiplication table.
// Associativity, the identity and inverses are verified exhaustively at
// construction. Subsets are bitsets over element indices.
class GroupTable {
 public:
  static constexpr std::uint32_t kMaxOrder = 64;

  // Grammar: cyclic:<n>, dihedral:<n> (order 2n), sym:<n> (n <= 4),
  // prod:<d1>,<d2> (d1 comma-free), table:<file>.
  static GroupTable parse(const std::string& descriptor);
  static GroupTable cyclic(std::uint32_t n);
  static GroupTable dihedral(std::uint32_t n);
  static GroupTable symmetric(std::uint32_t n);
  static GroupTable product(const GroupTable& g1, const GroupTable& g2);
  static GroupTable from_table(std::uint32_t order,
                               std::vector<std::uint8_t> table,
                               std::string descriptor);

  std::uint32_t order() const { return order_; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const {
    return table_[a * order_ + b];
  }
  std::uint8_t inv(std::uint8_t a) const { return inv_[a]; }
  std::uint8_t identity() const { return id_; }
  bool abelian() const { return abelian_; }
  const std::string& descriptor() const { return descriptor_; }

 private:
  GroupTable() = default;
  void finalize();  // identity, inverses, associativity, abelian flag

  std::uint32_t order_ = 0;
  std::vector<std::uint8_t> table_;
  std::vector<std::uint8_t> inv_;
  std::uint8_t id_ = 0;
  bool abelian_ = false;
  std::string descriptor_;
};

// A subset of a group, as a bitset over element indices.
struct GSet {
  const GroupTable* g = nullptr;
  std::uint64_t bits = 0;

  int size() const { return __builtin_popcountll(bits); }
  bool empty() const { return bits == 0; }
  bool test(std::uint8_t i) const { return (bits >> i) & 1; }
};

GSet make_gset(const GroupTable& g, std::uint64_t bits);
GSet gset_parse(const GroupTable& g, const std::string& text);
std::string gset_to_string(const GSet& s);

GSet product_set(const GSet& a, const GSet& b);
GSet set_inverse(const GSet& a);
GSet power_set(const GSet& b, int n);  // B^n, with B^0 = {1}

enum class SetTransformVariant { up_a, up_b };

// (A union Ax, B intersect x^-1 B), or (A intersect Ax^-1, B union xB).
std::pair<GSet, GSet> set_kemperman_transform(const GSet& a, const GSet& b,
                                              std::uint8_t x,
                                              SetTransformVariant variant);

// The complete subgroup lattice: cyclic subgroups closed under pairwise
// join, ordered by size then by bitset value.
std::vector<GSet> subgroups(const GroupTable& g);

struct OlsonSetCertificate {
  GSet s, h;
  bool left;  // HS = S when true, SH = S when false
};

// First subgroup H (lattice order) and side whose maximal coset union
// inside AB meets the |A|+|B|-|H| bound; exhaustion is a hard failure.
OlsonSetCertificate olson_find(const GSet& a, const GSet& b);

TheoremReport check_basic(const GSet& a, const GSet& b);
TheoremReport check_kemperman_unique(const GSet& a, const GSet& b);
TheoremReport olson_find_report(const GSet& a, const GSet& b);
TheoremReport check_thol2(const GSet& a, const GSet& b);
TheoremReport check_thol3(const GSet& b, int n);
TheoremReport check_abc_sets(const GSet& a, const GSet& b, const GSet& c);
TheoremReport check_abc_abelian(const GSet& a, const GSet& b, const GSet& c);
TheoremReport kneser_check(const GSet& a, const GSet& b);

}  // namespace linadd

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linadd/ambient.hpp"

namespace linadd {

// Hard ceiling on q^dim for element enumeration.
inline constexpr std::uint64_t kEnumerationCap = std::uint64_t{1} << 20;

// A finite-dimensional K-subspace of L in canonical form: basis rows in
// reduced row echelon form, pivot columns ordered by ascending coordinate
// index (power of t, or power of x after denominator embedding). Rational
// ambients additionally carry the minimal monic common denominator; basis
// rows then hold numerator coefficient vectors, trimmed of trailing zeros.
// Equal subspaces have bit-identical representations.
struct Subspace {
  const Ambient* amb = nullptr;
  std::vector<std::vector<coeff_t>> rows;
  Poly den = poly_one();  // rational ambients; 1 otherwise

  int dim() const { return static_cast<int>(rows.size()); }
  bool is_zero() const { return rows.empty(); }
};

// In-place reduced row echelon form over the base field. Rows of differing
// lengths are treated as zero-padded. Zero rows are dropped; when
// fixed_width > 0 every surviving row keeps exactly that width, otherwise
// rows are trimmed.
void rref_rows(const Gf& k, std::vector<std::vector<coeff_t>>& rows,
               std::size_t fixed_width = 0);

// Kernel basis of the linear map x -> M x (rows of m over K^n), canonical
// free-variable construction.
std::vector<std::vector<coeff_t>> kernel_basis(
    const Gf& k, std::vector<std::vector<coeff_t>> m, std::size_t n);

Subspace zero_subspace(const Ambient& amb);
Subspace unit_subspace(const Ambient& amb);  // K = span{1}
Subspace full_space(const Ambient& amb);     // L, finite extensions only

// The unique subfield GF(q^d) of GF(q^n) for d | n, computed as the kernel
// of x -> x^(q^d) - x. Rational ambients only admit d = 1 (K itself).
Subspace subfield(const Ambient& amb, std::uint32_t d);

Subspace span(const Ambient& amb, const std::vector<Element>& gens);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
Subspace scale(const Element& x, const Subspace& a);
Subspace product_span(const Subspace& a, const Subspace& b);

bool contains(const Subspace& s, const Element& v);
bool subspace_leq(const Subspace& inner, const Subspace& outer);
bool equals(const Subspace& a, const Subspace& b);

Element row_element(const Subspace& s, std::size_t i);
std::vector<Element> basis_elements(const Subspace& s);

// Number of nonzero elements, q^dim - 1; throws when q^dim exceeds the
// enumeration cap.
std::uint64_t nonzero_count(const Subspace& s);

// Streams the q^dim - 1 nonzero elements exactly once, in lexicographic
// coefficient order: combination counters over the basis rows, first row's
// coefficient least significant.
class SubspaceEnumerator {
 public:
  explicit SubspaceEnumerator(const Subspace& s);
  std::optional<Element> next();
  void restart();

 private:
  const Subspace* s_;
  std::vector<coeff_t> digits_;
  bool done_ = false;
};

Element first_nonzero(const Subspace& s);

// Multi-line text serialization; round-trips bit-exactly.
std::string subspace_to_text(const Subspace& s);
Subspace subspace_from_text(const Ambient& amb, const std::string& text);

// Single-line form for CLI arguments and reports: "0" for the zero
// subspace, otherwise "[den=<poly>|]row;row;...".
std::string subspace_to_compact(const Subspace& s);
Subspace subspace_from_compact(const Ambient& amb, const std::string& text);

}  // namespace linadd

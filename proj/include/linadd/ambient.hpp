#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linadd/gf.hpp"
#include "linadd/poly.hpp"

namespace linadd {

enum class AmbientKind { finite_extension, rational_function_field };

class Ambient;

// One element of the extension field L in ambient coordinates: a length-n
// coordinate vector over K for finite extensions, a reduced fraction with
// monic denominator for rational function fields. Elements do not own their
// ambient; the ambient must outlive them.
struct Element {
  const Ambient* amb = nullptr;
  std::vector<coeff_t> coeffs;
  Poly num, den;
};

// A field extension context: L = GF(q^n) over K = GF(q) with the canonical
// modulus, or L = GF(q)(x) over K = GF(q) with a degree cap. Construction is
// deterministic: the same descriptor always yields a bit-identical ambient.
class Ambient {
 public:
  static constexpr std::uint32_t kDefaultDegreeCap = 256;

  // Descriptor grammar: "gf:<q>:<n>" or "ratfun:<q>:<maxdeg>".
  static Ambient parse(const std::string& descriptor);
  static Ambient finite_extension(std::uint32_t q, std::uint32_t n);
  static Ambient rational_function_field(
      std::uint32_t q, std::uint32_t max_degree = kDefaultDegreeCap);

  Ambient(const Ambient&) = delete;
  Ambient& operator=(const Ambient&) = delete;
  Ambient(Ambient&&) = default;
  Ambient& operator=(Ambient&&) = default;

  AmbientKind kind() const { return kind_; }
  const Gf& base() const { return base_; }
  std::uint32_t ext_degree() const;
  const Poly& modulus() const;
  std::uint32_t max_degree() const;
  const std::string& descriptor() const { return descriptor_; }
  char var() const {
    return kind_ == AmbientKind::finite_extension ? 't' : 'x';
  }

  Element zero() const;
  Element one() const;
  Element scalar(coeff_t v) const;
  Element gen() const;                          // t, or x
  Element coordinate_basis(std::size_t i) const;  // t^i (finite extension)
  Element from_coeffs(std::vector<coeff_t> coeffs) const;
  Element from_fraction(Poly num, Poly den) const;  // reduces, monic den

 private:
  Ambient(AmbientKind kind, Gf base) : kind_(kind), base_(std::move(base)) {}

  AmbientKind kind_;
  Gf base_;
  std::uint32_t degree_ = 0;      // finite extension
  Poly modulus_;                  // finite extension
  std::uint32_t max_degree_ = 0;  // rational function field
  std::string descriptor_;
};

bool same_ambient(const Ambient& a, const Ambient& b);
void ensure_same_ambient(const Element& a, const Element& b);

Element elem_add(const Element& a, const Element& b);
Element elem_sub(const Element& a, const Element& b);
Element elem_neg(const Element& a);
Element elem_mul(const Element& a, const Element& b);
Element elem_inv(const Element& a);
Element elem_div(const Element& a, const Element& b);
Element elem_pow(const Element& a, std::uint64_t e);
Element elem_scale(coeff_t s, const Element& a);

bool elem_is_zero(const Element& a);
bool elem_is_one(const Element& a);
bool elem_is_scalar(const Element& a);  // lies in K
bool elem_equal(const Element& a, const Element& b);

// Text form: comma-separated coordinates, or "num/den" with '^' exponents.
std::string elem_to_string(const Element& a);
Element elem_parse(const Ambient& amb, const std::string& text);

// Canonical byte key for hash sets; equal elements get equal keys.
std::string elem_key(const Element& a);

}  // namespace linadd

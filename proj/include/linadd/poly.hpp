#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "linadd/gf.hpp"

namespace linadd {

// Dense univariate polynomial over the base field, coefficients ascending.
// Normalized: the zero polynomial is the empty vector, otherwise the top
// coefficient is nonzero.
struct Poly {
  std::vector<coeff_t> c;

  bool is_zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  coeff_t lead() const { return c.empty() ? coeff_t{0} : c.back(); }
  coeff_t at(std::size_t i) const { return i < c.size() ? c[i] : coeff_t{0}; }
  bool operator==(const Poly&) const = default;
};

Poly poly_trim(std::vector<coeff_t> cs);
Poly poly_const(coeff_t v);
Poly poly_one();
Poly poly_x();
Poly poly_monomial(coeff_t v, std::size_t degree);

Poly poly_add(const Gf& k, const Poly& a, const Poly& b);
Poly poly_sub(const Gf& k, const Poly& a, const Poly& b);
Poly poly_neg(const Gf& k, const Poly& a);
Poly poly_scale(const Gf& k, coeff_t s, const Poly& a);
Poly poly_mul(const Gf& k, const Poly& a, const Poly& b);

// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Gf& k, const Poly& a, const Poly& b);
Poly poly_rem(const Gf& k, const Poly& a, const Poly& b);
// Division known to be exact; throws std::logic_error on a nonzero remainder.
Poly poly_exact_div(const Gf& k, const Poly& a, const Poly& b);

Poly poly_make_monic(const Gf& k, const Poly& a);
Poly poly_gcd(const Gf& k, Poly a, Poly b);                // monic, or zero
Poly poly_lcm(const Gf& k, const Poly& a, const Poly& b);  // monic, or zero

// g = s*a + t*b with g the monic gcd.
struct PolyEgcd {
  Poly g, s, t;
};
PolyEgcd poly_egcd(const Gf& k, const Poly& a, const Poly& b);

Poly poly_powmod(const Gf& k, Poly base, std::uint64_t e, const Poly& mod);

// Degree >= 1 required. Uses the factor-degree sieve: f is irreducible iff
// gcd(f, x^(q^d) - x) is constant for every d <= deg(f)/2.
bool poly_is_irreducible(const Gf& k, const Poly& f);

// The monic irreducible of degree n whose coefficient vector, read as a
// base-q integer with the constant term least significant, is smallest.
Poly canonical_irreducible(const Gf& k, std::uint32_t n);

std::string poly_to_string(const Poly& a, char var);
Poly poly_parse(const Gf& k, const std::string& text, char var);

}  // namespace linadd

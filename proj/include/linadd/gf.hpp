#pragma once

#include <cstdint>
#include <vector>

namespace linadd {

using coeff_t = std::uint16_t;

// Arithmetic in the base field K = GF(q), q = p^m <= 2^16.
//
// Elements are encoded as integers in [0, q): the base-p digit expansion of
// the GF(p)-coordinate vector, constant coordinate least significant. For
// m >= 2 the field is GF(p)[u]/(g) with g the canonical irreducible of
// degree m over GF(p). Multiplication, inversion and division run on
// discrete-log tables built once at construction.
class Gf {
 public:
  explicit Gf(std::uint32_t q);

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t q() const { return q_; }

  coeff_t add(coeff_t a, coeff_t b) const;
  coeff_t sub(coeff_t a, coeff_t b) const;
  coeff_t neg(coeff_t a) const;
  coeff_t mul(coeff_t a, coeff_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  coeff_t inv(coeff_t a) const;
  coeff_t div(coeff_t a, coeff_t b) const;

  // Modulus of the GF(p)[u] step, ascending coefficients; empty when m == 1.
  const std::vector<coeff_t>& tower_modulus() const { return tower_mod_; }

  static bool is_prime_power(std::uint32_t q, std::uint32_t* p_out,
                             std::uint32_t* m_out);

 private:
  std::uint32_t p_ = 0, m_ = 0, q_ = 0;
  std::vector<coeff_t> tower_mod_;
  std::vector<coeff_t> exp_;        // exp_[i] = g^i, i in [0, 2(q-1))
  std::vector<std::uint32_t> log_;  // log_[g^i] = i, defined for nonzero
};

}  // namespace linadd

#include "linadd/gf.hpp"

#include <optional>
#include <stdexcept>
#include <string>

#include "linadd/poly.hpp"

namespace linadd {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<coeff_t> digits_base_p(std::uint32_t v, std::uint32_t p,
                                   std::uint32_t m) {
  std::vector<coeff_t> d(m, 0);
  for (std::uint32_t i = 0; i < m && v != 0; ++i) {
    d[i] = static_cast<coeff_t>(v % p);
    v /= p;
  }
  return d;
}

std::uint32_t undigits_base_p(const std::vector<coeff_t>& d, std::uint32_t p) {
  std::uint32_t v = 0, mult = 1;
  for (coeff_t c : d) {
    v += c * mult;
    mult *= p;
  }
  return v;
}

}  // namespace

bool Gf::is_prime_power(std::uint32_t q, std::uint32_t* p_out,
                        std::uint32_t* m_out) {
  if (q < 2) return false;
  std::uint32_t p = 0;
  for (std::uint32_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;  // q itself prime
  std::uint32_t m = 0, v = q;
  while (v % p == 0) {
    v /= p;
    ++m;
  }
  if (v != 1) return false;
  if (p_out) *p_out = p;
  if (m_out) *m_out = m;
  return true;
}

Gf::Gf(std::uint32_t q) {
  if (q > (1u << 16))
    throw std::invalid_argument("base field order exceeds 2^16: " +
                                std::to_string(q));
  if (!is_prime_power(q, &p_, &m_))
    throw std::invalid_argument("base field order is not a prime power: " +
                                std::to_string(q));
  if (!is_prime(p_)) throw std::logic_error("prime factoring failed");
  q_ = q;

  // Raw multiplication, usable before the log tables exist.
  std::optional<Gf> subfield_storage;
  const Gf* sub = nullptr;
  Poly mod;
  if (m_ >= 2) {
    subfield_storage.emplace(p_);
    sub = &*subfield_storage;
    mod = canonical_irreducible(*sub, m_);
    tower_mod_ = mod.c;
  }
  auto raw_mul = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
    if (m_ == 1) return static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a) * b) % p_);
    Poly pa = poly_trim(digits_base_p(a, p_, m_));
    Poly pb = poly_trim(digits_base_p(b, p_, m_));
    Poly r = poly_rem(*sub, poly_mul(*sub, pa, pb), mod);
    std::vector<coeff_t> cs = r.c;
    cs.resize(m_, 0);
    return undigits_base_p(cs, p_);
  };

  // Smallest generator of the multiplicative group, then log tables.
  std::uint32_t gen = 0;
  for (std::uint32_t c = 1; c < q_ && gen == 0; ++c) {
    std::uint32_t x = c, ord = 1;
    while (x != 1) {
      x = raw_mul(x, c);
      ++ord;
      if (ord > q_) throw std::logic_error("generator order overflow");
    }
    if (ord == q_ - 1) gen = c;
  }
  if (gen == 0) throw std::logic_error("no multiplicative generator found");

  exp_.assign(2 * (q_ - 1), 0);
  log_.assign(q_, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = static_cast<coeff_t>(x);
    exp_[i + (q_ - 1)] = static_cast<coeff_t>(x);
    log_[x] = i;
    x = raw_mul(x, gen);
  }
}

coeff_t Gf::add(coeff_t a, coeff_t b) const {
  if (m_ == 1) {
    std::uint32_t s = static_cast<std::uint32_t>(a) + b;
    if (s >= p_) s -= p_;
    return static_cast<coeff_t>(s);
  }
  std::uint32_t r = 0, mult = 1, x = a, y = b;
  for (std::uint32_t i = 0; i < m_; ++i) {
    std::uint32_t d = x % p_ + y % p_;
    if (d >= p_) d -= p_;
    r += d * mult;
    mult *= p_;
    x /= p_;
    y /= p_;
  }
  return static_cast<coeff_t>(r);
}

coeff_t Gf::sub(coeff_t a, coeff_t b) const { return add(a, neg(b)); }

coeff_t Gf::neg(coeff_t a) const {
  if (m_ == 1) return static_cast<coeff_t>(a == 0 ? 0 : p_ - a);
  std::uint32_t r = 0, mult = 1, x = a;
  for (std::uint32_t i = 0; i < m_; ++i) {
    std::uint32_t d = x % p_;
    r += (d == 0 ? 0 : p_ - d) * mult;
    mult *= p_;
    x /= p_;
  }
  return static_cast<coeff_t>(r);
}

coeff_t Gf::inv(coeff_t a) const {
  if (a == 0) throw std::domain_error("division by zero in GF(q)");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

coeff_t Gf::div(coeff_t a, coeff_t b) const {
  if (b == 0) throw std::domain_error("division by zero in GF(q)");
  if (a == 0) return 0;
  return exp_[log_[a] + (q_ - 1) - log_[b]];
}

}  // namespace linadd

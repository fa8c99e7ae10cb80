#include "linadd/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace linadd {

Poly poly_trim(std::vector<coeff_t> cs) {
  while (!cs.empty() && cs.back() == 0) cs.pop_back();
  return Poly{std::move(cs)};
}

Poly poly_const(coeff_t v) { return v == 0 ? Poly{} : Poly{{v}}; }

Poly poly_one() { return Poly{{1}}; }

Poly poly_x() { return Poly{{0, 1}}; }

Poly poly_monomial(coeff_t v, std::size_t degree) {
  if (v == 0) return Poly{};
  std::vector<coeff_t> cs(degree + 1, 0);
  cs[degree] = v;
  return Poly{std::move(cs)};
}

Poly poly_add(const Gf& k, const Poly& a, const Poly& b) {
  std::vector<coeff_t> cs(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = k.add(a.at(i), b.at(i));
  return poly_trim(std::move(cs));
}

Poly poly_sub(const Gf& k, const Poly& a, const Poly& b) {
  std::vector<coeff_t> cs(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = k.sub(a.at(i), b.at(i));
  return poly_trim(std::move(cs));
}

Poly poly_neg(const Gf& k, const Poly& a) {
  std::vector<coeff_t> cs(a.c);
  for (auto& v : cs) v = k.neg(v);
  return Poly{std::move(cs)};
}

Poly poly_scale(const Gf& k, coeff_t s, const Poly& a) {
  if (s == 0) return Poly{};
  std::vector<coeff_t> cs(a.c);
  for (auto& v : cs) v = k.mul(s, v);
  return Poly{std::move(cs)};
}

Poly poly_mul(const Gf& k, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  std::vector<coeff_t> cs(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      cs[i + j] = k.add(cs[i + j], k.mul(a.c[i], b.c[j]));
  }
  return poly_trim(std::move(cs));
}

std::pair<Poly, Poly> poly_divmod(const Gf& k, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.deg() < b.deg()) return {Poly{}, a};
  std::vector<coeff_t> rem = a.c;
  std::vector<coeff_t> quo(a.c.size() - b.c.size() + 1, 0);
  coeff_t lb_inv = k.inv(b.lead());
  for (int i = static_cast<int>(rem.size()) - 1;
       i >= static_cast<int>(b.c.size()) - 1; --i) {
    coeff_t c = rem[i];
    if (c == 0) continue;
    coeff_t f = k.mul(c, lb_inv);
    std::size_t shift = i - (b.c.size() - 1);
    quo[shift] = f;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      rem[shift + j] = k.sub(rem[shift + j], k.mul(f, b.c[j]));
  }
  return {poly_trim(std::move(quo)), poly_trim(std::move(rem))};
}

Poly poly_rem(const Gf& k, const Poly& a, const Poly& b) {
  return poly_divmod(k, a, b).second;
}

Poly poly_exact_div(const Gf& k, const Poly& a, const Poly& b) {
  auto [q, r] = poly_divmod(k, a, b);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

Poly poly_make_monic(const Gf& k, const Poly& a) {
  if (a.is_zero() || a.lead() == 1) return a;
  return poly_scale(k, k.inv(a.lead()), a);
}

Poly poly_gcd(const Gf& k, Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_rem(k, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_make_monic(k, a);
}

Poly poly_lcm(const Gf& k, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  Poly g = poly_gcd(k, a, b);
  return poly_make_monic(k, poly_mul(k, poly_exact_div(k, a, g), b));
}

PolyEgcd poly_egcd(const Gf& k, const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly s0 = poly_one(), s1 = Poly{};
  Poly t0 = Poly{}, t1 = poly_one();
  while (!r1.is_zero()) {
    auto [q, r] = poly_divmod(k, r0, r1);
    Poly s2 = poly_sub(k, s0, poly_mul(k, q, s1));
    Poly t2 = poly_sub(k, t0, poly_mul(k, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {Poly{}, Poly{}, Poly{}};
  coeff_t c = k.inv(r0.lead());
  return {poly_scale(k, c, r0), poly_scale(k, c, s0), poly_scale(k, c, t0)};
}

Poly poly_powmod(const Gf& k, Poly base, std::uint64_t e, const Poly& mod) {
  if (mod.deg() < 1) throw std::domain_error("powmod modulus must have degree >= 1");
  Poly result = poly_rem(k, poly_one(), mod);
  base = poly_rem(k, base, mod);
  while (e > 0) {
    if (e & 1) result = poly_rem(k, poly_mul(k, result, base), mod);
    base = poly_rem(k, poly_mul(k, base, base), mod);
    e >>= 1;
  }
  return result;
}

bool poly_is_irreducible(const Gf& k, const Poly& f) {
  int n = f.deg();
  if (n < 1) return false;
  if (n == 1) return true;
  Poly x = poly_x();
  Poly xq = x;
  for (int d = 1; d <= n / 2; ++d) {
    xq = poly_powmod(k, xq, k.q(), f);  // x^(q^d) mod f
    Poly g = poly_gcd(k, f, poly_sub(k, xq, x));
    if (g.deg() > 0) return false;
  }
  return true;
}

Poly canonical_irreducible(const Gf& k, std::uint32_t n) {
  if (n < 1) throw std::invalid_argument("extension degree must be >= 1");
  std::uint64_t limit = 1;
  bool capped = false;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (limit > (std::uint64_t{1} << 40) / k.q()) {
      capped = true;
      break;
    }
    limit *= k.q();
  }
  if (capped) limit = std::uint64_t{1} << 40;
  for (std::uint64_t enc = 0; enc < limit; ++enc) {
    std::vector<coeff_t> cs(n + 1, 0);
    std::uint64_t v = enc;
    for (std::uint32_t i = 0; i < n && v != 0; ++i) {
      cs[i] = static_cast<coeff_t>(v % k.q());
      v /= k.q();
    }
    cs[n] = 1;
    Poly f{std::move(cs)};
    if (poly_is_irreducible(k, f)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

std::string poly_to_string(const Poly& a, char var) {
  if (a.is_zero()) return "0";
  std::string out;
  for (int i = a.deg(); i >= 0; --i) {
    coeff_t c = a.c[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c);
      out += var;
      if (i > 1) {
        out += '^';
        out += std::to_string(i);
      }
    }
  }
  return out;
}

Poly poly_parse(const Gf& k, const std::string& text, char var) {
  std::vector<coeff_t> cs;
  auto bump = [&](std::size_t degree, std::uint64_t coeff) {
    if (coeff >= k.q())
      throw std::invalid_argument("coefficient out of range: " +
                                  std::to_string(coeff));
    if (cs.size() <= degree) cs.resize(degree + 1, 0);
    cs[degree] = k.add(cs[degree], static_cast<coeff_t>(coeff));
  };
  std::size_t pos = 0;
  const std::string s = text;
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  while (pos < s.size()) {
    std::uint64_t coeff = 1;
    bool saw_digits = false;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos > start) {
      coeff = std::strtoull(s.substr(start, pos - start).c_str(), nullptr, 10);
      saw_digits = true;
    }
    std::size_t degree = 0;
    if (pos < s.size() && s[pos] == var) {
      ++pos;
      degree = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::size_t dstart = pos;
        while (pos < s.size() &&
               std::isdigit(static_cast<unsigned char>(s[pos])))
          ++pos;
        if (pos == dstart) throw std::invalid_argument("missing exponent");
        degree = std::strtoull(s.substr(dstart, pos - dstart).c_str(), nullptr, 10);
      }
    } else if (!saw_digits) {
      throw std::invalid_argument("malformed polynomial term in '" + s + "'");
    }
    bump(degree, coeff);
    if (pos < s.size()) {
      if (s[pos] != '+')
        throw std::invalid_argument("expected '+' in polynomial '" + s + "'");
      ++pos;
      if (pos == s.size()) throw std::invalid_argument("trailing '+'");
    }
  }
  return poly_trim(std::move(cs));
}

}  // namespace linadd

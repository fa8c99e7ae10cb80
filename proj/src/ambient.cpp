#include "linadd/ambient.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace linadd {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(s.substr(start));
      break;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return parts;
}

std::uint32_t parse_u32(const std::string& s, const char* what) {
  if (s.empty()) throw std::invalid_argument(std::string("missing ") + what);
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument(std::string("malformed ") + what + ": " + s);
  unsigned long long v = std::stoull(s);
  if (v > 0xffffffffull)
    throw std::invalid_argument(std::string(what) + " out of range: " + s);
  return static_cast<std::uint32_t>(v);
}

void check_degree_cap(const Ambient& amb, const Poly& p, const char* what) {
  if (p.deg() > static_cast<int>(amb.max_degree()))
    throw std::overflow_error(std::string("degree cap exceeded in ") + what +
                              ": degree " + std::to_string(p.deg()) + " > " +
                              std::to_string(amb.max_degree()));
}

}  // namespace

Ambient Ambient::finite_extension(std::uint32_t q, std::uint32_t n) {
  if (n < 1) throw std::invalid_argument("extension degree must be >= 1");
  Ambient amb(AmbientKind::finite_extension, Gf(q));
  amb.degree_ = n;
  amb.modulus_ = canonical_irreducible(amb.base_, n);
  amb.descriptor_ = "gf:" + std::to_string(q) + ":" + std::to_string(n);
  return amb;
}

Ambient Ambient::rational_function_field(std::uint32_t q,
                                         std::uint32_t max_degree) {
  if (max_degree < 1) throw std::invalid_argument("degree cap must be >= 1");
  Ambient amb(AmbientKind::rational_function_field, Gf(q));
  amb.max_degree_ = max_degree;
  amb.descriptor_ =
      "ratfun:" + std::to_string(q) + ":" + std::to_string(max_degree);
  return amb;
}

Ambient Ambient::parse(const std::string& descriptor) {
  auto parts = split(descriptor, ':');
  if (parts.size() != 3)
    throw std::invalid_argument("malformed ambient descriptor: " + descriptor);
  std::uint32_t q = parse_u32(parts[1], "field order");
  if (parts[0] == "gf")
    return finite_extension(q, parse_u32(parts[2], "extension degree"));
  if (parts[0] == "ratfun")
    return rational_function_field(q, parse_u32(parts[2], "degree cap"));
  throw std::invalid_argument("unknown ambient kind: " + parts[0]);
}

std::uint32_t Ambient::ext_degree() const {
  if (kind_ != AmbientKind::finite_extension)
    throw std::invalid_argument("ext_degree: not a finite extension");
  return degree_;
}

const Poly& Ambient::modulus() const {
  if (kind_ != AmbientKind::finite_extension)
    throw std::invalid_argument("modulus: not a finite extension");
  return modulus_;
}

std::uint32_t Ambient::max_degree() const {
  if (kind_ != AmbientKind::rational_function_field)
    throw std::invalid_argument("max_degree: not a rational function field");
  return max_degree_;
}

Element Ambient::zero() const { return scalar(0); }

Element Ambient::one() const { return scalar(1); }

Element Ambient::scalar(coeff_t v) const {
  if (v >= base_.q()) throw std::invalid_argument("scalar out of range");
  Element e;
  e.amb = this;
  if (kind_ == AmbientKind::finite_extension) {
    e.coeffs.assign(degree_, 0);
    e.coeffs[0] = v;
  } else {
    e.num = poly_const(v);
    e.den = poly_one();
  }
  return e;
}

Element Ambient::gen() const {
  if (kind_ == AmbientKind::finite_extension) {
    if (degree_ == 1)
      throw std::invalid_argument("trivial extension has no generator t");
    return coordinate_basis(1);
  }
  return from_fraction(poly_x(), poly_one());
}

Element Ambient::coordinate_basis(std::size_t i) const {
  if (kind_ != AmbientKind::finite_extension)
    throw std::invalid_argument("coordinate_basis: not a finite extension");
  if (i >= degree_) throw std::invalid_argument("coordinate index out of range");
  Element e;
  e.amb = this;
  e.coeffs.assign(degree_, 0);
  e.coeffs[i] = 1;
  return e;
}

Element Ambient::from_coeffs(std::vector<coeff_t> coeffs) const {
  if (kind_ != AmbientKind::finite_extension)
    throw std::invalid_argument("from_coeffs: not a finite extension");
  if (coeffs.size() != degree_)
    throw std::invalid_argument("coordinate vector length must equal n");
  for (coeff_t c : coeffs)
    if (c >= base_.q()) throw std::invalid_argument("coordinate out of range");
  Element e;
  e.amb = this;
  e.coeffs = std::move(coeffs);
  return e;
}

Element Ambient::from_fraction(Poly num, Poly den) const {
  if (kind_ != AmbientKind::rational_function_field)
    throw std::invalid_argument("from_fraction: not a rational function field");
  if (den.is_zero()) throw std::domain_error("zero denominator");
  Element e;
  e.amb = this;
  if (num.is_zero()) {
    e.num = Poly{};
    e.den = poly_one();
    return e;
  }
  Poly g = poly_gcd(base_, num, den);
  if (g.deg() > 0) {
    num = poly_exact_div(base_, num, g);
    den = poly_exact_div(base_, den, g);
  }
  coeff_t lc = den.lead();
  if (lc != 1) {
    coeff_t c = base_.inv(lc);
    num = poly_scale(base_, c, num);
    den = poly_scale(base_, c, den);
  }
  check_degree_cap(*this, num, "fraction numerator");
  check_degree_cap(*this, den, "fraction denominator");
  e.num = std::move(num);
  e.den = std::move(den);
  return e;
}

bool same_ambient(const Ambient& a, const Ambient& b) {
  return &a == &b || a.descriptor() == b.descriptor();
}

void ensure_same_ambient(const Element& a, const Element& b) {
  if (a.amb == nullptr || b.amb == nullptr)
    throw std::invalid_argument("element without ambient");
  if (!same_ambient(*a.amb, *b.amb))
    throw std::invalid_argument("mixed ambients: " + a.amb->descriptor() +
                                " vs " + b.amb->descriptor());
}

Element elem_add(const Element& a, const Element& b) {
  ensure_same_ambient(a, b);
  const Ambient& amb = *a.amb;
  const Gf& k = amb.base();
  if (amb.kind() == AmbientKind::finite_extension) {
    Element e = a;
    for (std::size_t i = 0; i < e.coeffs.size(); ++i)
      e.coeffs[i] = k.add(e.coeffs[i], b.coeffs[i]);
    return e;
  }
  Poly num = poly_add(k, poly_mul(k, a.num, b.den), poly_mul(k, b.num, a.den));
  return amb.from_fraction(std::move(num), poly_mul(k, a.den, b.den));
}

Element elem_sub(const Element& a, const Element& b) {
  return elem_add(a, elem_neg(b));
}

Element elem_neg(const Element& a) {
  const Ambient& amb = *a.amb;
  const Gf& k = amb.base();
  Element e = a;
  if (amb.kind() == AmbientKind::finite_extension) {
    for (auto& c : e.coeffs) c = k.neg(c);
    return e;
  }
  e.num = poly_neg(k, e.num);
  return e;
}

Element elem_mul(const Element& a, const Element& b) {
  ensure_same_ambient(a, b);
  const Ambient& amb = *a.amb;
  const Gf& k = amb.base();
  if (amb.kind() == AmbientKind::finite_extension) {
    Poly pa = poly_trim(a.coeffs);
    Poly pb = poly_trim(b.coeffs);
    Poly r = poly_rem(k, poly_mul(k, pa, pb), amb.modulus());
    std::vector<coeff_t> cs = r.c;
    cs.resize(amb.ext_degree(), 0);
    Element e;
    e.amb = a.amb;
    e.coeffs = std::move(cs);
    return e;
  }
  return amb.from_fraction(poly_mul(k, a.num, b.num),
                           poly_mul(k, a.den, b.den));
}

Element elem_inv(const Element& a) {
  if (elem_is_zero(a)) throw std::domain_error("division by zero in L");
  const Ambient& amb = *a.amb;
  const Gf& k = amb.base();
  if (amb.kind() == AmbientKind::finite_extension) {
    PolyEgcd eg = poly_egcd(k, poly_trim(a.coeffs), amb.modulus());
    if (eg.g.deg() != 0) throw std::logic_error("modulus is not irreducible");
    Poly r = poly_rem(k, eg.s, amb.modulus());
    std::vector<coeff_t> cs = r.c;
    cs.resize(amb.ext_degree(), 0);
    Element e;
    e.amb = a.amb;
    e.coeffs = std::move(cs);
    return e;
  }
  return amb.from_fraction(a.den, a.num);
}

Element elem_div(const Element& a, const Element& b) {
  return elem_mul(a, elem_inv(b));
}

Element elem_pow(const Element& a, std::uint64_t e) {
  Element result = a.amb->one();
  Element base = a;
  while (e > 0) {
    if (e & 1) result = elem_mul(result, base);
    base = elem_mul(base, base);
    e >>= 1;
  }
  return result;
}

Element elem_scale(coeff_t s, const Element& a) {
  return elem_mul(a.amb->scalar(s), a);
}

bool elem_is_zero(const Element& a) {
  if (a.amb->kind() == AmbientKind::finite_extension) {
    for (coeff_t c : a.coeffs)
      if (c != 0) return false;
    return true;
  }
  return a.num.is_zero();
}

bool elem_is_one(const Element& a) { return elem_equal(a, a.amb->one()); }

bool elem_is_scalar(const Element& a) {
  if (a.amb->kind() == AmbientKind::finite_extension) {
    for (std::size_t i = 1; i < a.coeffs.size(); ++i)
      if (a.coeffs[i] != 0) return false;
    return true;
  }
  return a.num.deg() <= 0 && a.den.deg() <= 0;
}

bool elem_equal(const Element& a, const Element& b) {
  ensure_same_ambient(a, b);
  if (a.amb->kind() == AmbientKind::finite_extension)
    return a.coeffs == b.coeffs;
  return a.num == b.num && a.den == b.den;
}

std::string elem_to_string(const Element& a) {
  if (a.amb->kind() == AmbientKind::finite_extension) {
    std::string out;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(a.coeffs[i]);
    }
    return out;
  }
  return poly_to_string(a.num, 'x') + "/" + poly_to_string(a.den, 'x');
}

Element elem_parse(const Ambient& amb, const std::string& text) {
  if (amb.kind() == AmbientKind::finite_extension) {
    auto parts = split(text, ',');
    std::vector<coeff_t> cs;
    cs.reserve(parts.size());
    for (const auto& p : parts)
      cs.push_back(static_cast<coeff_t>(parse_u32(p, "coordinate")));
    return amb.from_coeffs(std::move(cs));
  }
  auto parts = split(text, '/');
  if (parts.size() > 2)
    throw std::invalid_argument("malformed fraction: " + text);
  Poly num = poly_parse(amb.base(), parts[0], 'x');
  Poly den = parts.size() == 2 ? poly_parse(amb.base(), parts[1], 'x')
                               : poly_one();
  return amb.from_fraction(std::move(num), std::move(den));
}

std::string elem_key(const Element& a) {
  std::string key;
  auto push = [&key](const std::vector<coeff_t>& cs) {
    for (coeff_t c : cs) {
      key += static_cast<char>(c & 0xff);
      key += static_cast<char>(c >> 8);
    }
  };
  if (a.amb->kind() == AmbientKind::finite_extension) {
    push(a.coeffs);
    return key;
  }
  push(a.num.c);
  key += '/';
  push(a.den.c);
  return key;
}

}  // namespace linadd

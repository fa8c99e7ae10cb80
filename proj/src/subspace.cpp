#include "linadd/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace linadd {

namespace {

void ensure_subspace_ambient(const Subspace& a, const Subspace& b) {
  if (a.amb == nullptr || b.amb == nullptr)
    throw std::invalid_argument("subspace without ambient");
  if (!same_ambient(*a.amb, *b.amb))
    throw std::invalid_argument("mixed ambients: " + a.amb->descriptor() +
                                " vs " + b.amb->descriptor());
}

bool rational(const Ambient& amb) {
  return amb.kind() == AmbientKind::rational_function_field;
}

std::vector<coeff_t> trimmed(std::vector<coeff_t> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

// gcd of the denominator with every numerator row; used to keep the common
// denominator minimal.
Poly rows_den_gcd(const Gf& k, const std::vector<std::vector<coeff_t>>& rows,
                  const Poly& den) {
  Poly g = den;
  for (const auto& r : rows) {
    g = poly_gcd(k, g, poly_trim(r));
    if (g.deg() == 0) break;
  }
  return g;
}

void check_row_degrees(const Ambient& amb,
                       const std::vector<std::vector<coeff_t>>& rows,
                       const Poly& den) {
  std::size_t cap = amb.max_degree();
  if (den.deg() > static_cast<int>(cap))
    throw std::overflow_error("denominator degree cap exceeded: " +
                              std::to_string(den.deg()));
  for (const auto& r : rows)
    if (r.size() > cap + 1)
      throw std::overflow_error("numerator degree cap exceeded: " +
                                std::to_string(r.size() - 1));
}

// Canonicalizes raw numerator rows over a common denominator: RREF, then
// divide out the common polynomial factor shared with the denominator,
// then RREF again (exact division can break the echelon structure).
Subspace canonical_rational(const Ambient& amb,
                            std::vector<std::vector<coeff_t>> rows, Poly den) {
  const Gf& k = amb.base();
  rref_rows(k, rows);
  if (rows.empty()) return Subspace{&amb, {}, poly_one()};
  Poly g = rows_den_gcd(k, rows, den);
  if (g.deg() > 0) {
    den = poly_exact_div(k, den, g);
    for (auto& r : rows) r = poly_exact_div(k, poly_trim(std::move(r)), g).c;
    rref_rows(k, rows);
  }
  check_row_degrees(amb, rows, den);
  return Subspace{&amb, std::move(rows), std::move(den)};
}

}  // namespace

void rref_rows(const Gf& k, std::vector<std::vector<coeff_t>>& rows,
               std::size_t fixed_width) {
  std::size_t width = fixed_width;
  for (const auto& r : rows) width = std::max(width, r.size());
  for (auto& r : rows) r.resize(width, 0);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    coeff_t inv = k.inv(rows[rank][col]);
    if (inv != 1)
      for (auto& v : rows[rank]) v = k.mul(inv, v);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      coeff_t f = rows[i][col];
      for (std::size_t j = col; j < width; ++j)
        rows[i][j] = k.sub(rows[i][j], k.mul(f, rows[rank][j]));
    }
    ++rank;
  }
  rows.resize(rank);
  if (fixed_width == 0)
    for (auto& r : rows) r = trimmed(std::move(r));
}

std::vector<std::vector<coeff_t>> kernel_basis(
    const Gf& k, std::vector<std::vector<coeff_t>> m, std::size_t n) {
  rref_rows(k, m, n);
  std::vector<int> pivot_of_col(n, -1);
  for (std::size_t r = 0; r < m.size(); ++r) {
    std::size_t col = 0;
    while (col < n && m[r][col] == 0) ++col;
    pivot_of_col[col] = static_cast<int>(r);
  }
  std::vector<std::vector<coeff_t>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (pivot_of_col[f] >= 0) continue;
    std::vector<coeff_t> x(n, 0);
    x[f] = 1;
    for (std::size_t c = 0; c < n; ++c) {
      int r = pivot_of_col[c];
      if (r >= 0) x[c] = k.neg(m[r][f]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

Subspace zero_subspace(const Ambient& amb) {
  return Subspace{&amb, {}, poly_one()};
}

Subspace unit_subspace(const Ambient& amb) {
  return span(amb, {amb.one()});
}

Subspace full_space(const Ambient& amb) {
  if (amb.kind() != AmbientKind::finite_extension)
    throw std::invalid_argument("full_space: ambient is infinite-dimensional");
  std::vector<Element> gens;
  for (std::size_t i = 0; i < amb.ext_degree(); ++i)
    gens.push_back(amb.coordinate_basis(i));
  return span(amb, gens);
}

Subspace subfield(const Ambient& amb, std::uint32_t d) {
  if (amb.kind() == AmbientKind::rational_function_field) {
    if (d == 1) return unit_subspace(amb);
    throw std::invalid_argument(
        "K is the only finite-dimensional subfield of K(x)");
  }
  const std::uint32_t n = amb.ext_degree();
  if (d < 1 || n % d != 0)
    throw std::invalid_argument("subfield degree " + std::to_string(d) +
                                " does not divide " + std::to_string(n));
  const Gf& k = amb.base();
  // rows of the matrix of x -> x^(q^d) - x, acting on coordinates
  std::vector<std::vector<coeff_t>> m(n, std::vector<coeff_t>(n, 0));
  for (std::uint32_t i = 0; i < n; ++i) {
    Element img = amb.coordinate_basis(i);
    for (std::uint32_t rep = 0; rep < d; ++rep) img = elem_pow(img, k.q());
    for (std::uint32_t c = 0; c < n; ++c) {
      coeff_t v = img.coeffs[c];
      if (c == i) v = k.sub(v, 1);
      m[c][i] = v;  // column i = image of t^i
    }
  }
  auto basis = kernel_basis(k, std::move(m), n);
  std::vector<Element> gens;
  for (auto& x : basis) gens.push_back(amb.from_coeffs(std::move(x)));
  Subspace h = span(amb, gens);
  if (h.dim() != static_cast<int>(d))
    throw std::logic_error("Frobenius fixed field has wrong dimension");
  return h;
}

Subspace span(const Ambient& amb, const std::vector<Element>& gens) {
  const Gf& k = amb.base();
  for (const auto& g : gens)
    if (g.amb == nullptr || !same_ambient(*g.amb, amb))
      throw std::invalid_argument("span: generator from a different ambient");
  if (amb.kind() == AmbientKind::finite_extension) {
    std::vector<std::vector<coeff_t>> rows;
    rows.reserve(gens.size());
    for (const auto& g : gens) rows.push_back(g.coeffs);
    rref_rows(k, rows, amb.ext_degree());
    return Subspace{&amb, std::move(rows), poly_one()};
  }
  Poly den = poly_one();
  for (const auto& g : gens)
    if (!elem_is_zero(g)) den = poly_lcm(k, den, g.den);
  std::vector<std::vector<coeff_t>> rows;
  for (const auto& g : gens) {
    if (elem_is_zero(g)) continue;
    Poly cof = poly_exact_div(k, den, g.den);
    rows.push_back(poly_mul(k, g.num, cof).c);
  }
  return canonical_rational(amb, std::move(rows), std::move(den));
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  ensure_subspace_ambient(a, b);
  std::vector<Element> gens = basis_elements(a);
  for (auto& e : basis_elements(b)) gens.push_back(std::move(e));
  return span(*a.amb, gens);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  ensure_subspace_ambient(a, b);
  const Ambient& amb = *a.amb;
  const Gf& k = amb.base();
  if (a.is_zero() || b.is_zero()) return zero_subspace(amb);

  // Zassenhaus: stack [u|u] for u in A, [v|0] for v in B; rows of the
  // echelon form with zero left half carry an intersection basis on the
  // right.
  std::size_t width;
  std::vector<std::vector<coeff_t>> arows, brows;
  Poly den = poly_one();
  if (amb.kind() == AmbientKind::finite_extension) {
    width = amb.ext_degree();
    arows = a.rows;
    brows = b.rows;
  } else {
    den = poly_lcm(k, a.den, b.den);
    Poly ca = poly_exact_div(k, den, a.den);
    Poly cb = poly_exact_div(k, den, b.den);
    width = 0;
    for (const auto& r : a.rows)
      arows.push_back(poly_mul(k, poly_trim(r), ca).c);
    for (const auto& r : b.rows)
      brows.push_back(poly_mul(k, poly_trim(r), cb).c);
    for (const auto& r : arows) width = std::max(width, r.size());
    for (const auto& r : brows) width = std::max(width, r.size());
  }
  std::vector<std::vector<coeff_t>> stacked;
  for (auto& r : arows) {
    r.resize(width, 0);
    std::vector<coeff_t> row(2 * width, 0);
    std::copy(r.begin(), r.end(), row.begin());
    std::copy(r.begin(), r.end(), row.begin() + width);
    stacked.push_back(std::move(row));
  }
  for (auto& r : brows) {
    r.resize(width, 0);
    std::vector<coeff_t> row(2 * width, 0);
    std::copy(r.begin(), r.end(), row.begin());
    stacked.push_back(std::move(row));
  }
  rref_rows(k, stacked, 2 * width);
  std::vector<std::vector<coeff_t>> meet;
  for (const auto& r : stacked) {
    bool left_zero = true;
    for (std::size_t j = 0; j < width; ++j)
      if (r[j] != 0) {
        left_zero = false;
        break;
      }
    if (left_zero)
      meet.emplace_back(r.begin() + width, r.end());
  }
  if (amb.kind() == AmbientKind::finite_extension) {
    rref_rows(k, meet, width);
    return Subspace{&amb, std::move(meet), poly_one()};
  }
  return canonical_rational(amb, std::move(meet), std::move(den));
}

Subspace scale(const Element& x, const Subspace& a) {
  if (x.amb == nullptr || a.amb == nullptr ||
      !same_ambient(*x.amb, *a.amb))
    throw std::invalid_argument("scale: mixed ambients");
  if (elem_is_zero(x)) throw std::domain_error("scale by zero element");
  std::vector<Element> gens;
  gens.reserve(a.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i)
    gens.push_back(elem_mul(x, row_element(a, i)));
  return span(*a.amb, gens);
}

Subspace product_span(const Subspace& a, const Subspace& b) {
  ensure_subspace_ambient(a, b);
  std::vector<Element> gens;
  gens.reserve(a.rows.size() * b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    Element ai = row_element(a, i);
    for (std::size_t j = 0; j < b.rows.size(); ++j)
      gens.push_back(elem_mul(ai, row_element(b, j)));
  }
  return span(*a.amb, gens);
}

bool contains(const Subspace& s, const Element& v) {
  if (s.amb == nullptr || v.amb == nullptr || !same_ambient(*s.amb, *v.amb))
    throw std::invalid_argument("contains: mixed ambients");
  const Gf& k = s.amb->base();
  if (elem_is_zero(v)) return true;
  if (s.is_zero()) return false;
  std::vector<coeff_t> w;
  if (s.amb->kind() == AmbientKind::finite_extension) {
    w = v.coeffs;
  } else {
    // v = nv/dv lies in rows/den iff dv divides den and nv*(den/dv) reduces
    // to zero against the echelon rows.
    auto [cof, r] = poly_divmod(k, s.den, v.den);
    if (!r.is_zero()) return false;
    w = poly_mul(k, v.num, cof).c;
  }
  std::size_t width = w.size();
  for (const auto& row : s.rows) width = std::max(width, row.size());
  w.resize(width, 0);
  for (const auto& row : s.rows) {
    std::size_t p = 0;
    while (p < row.size() && row[p] == 0) ++p;
    if (p == row.size() || w[p] == 0) continue;
    coeff_t f = w[p];
    for (std::size_t j = p; j < row.size(); ++j)
      w[j] = k.sub(w[j], k.mul(f, row[j]));
  }
  for (coeff_t c : w)
    if (c != 0) return false;
  return true;
}

bool subspace_leq(const Subspace& inner, const Subspace& outer) {
  ensure_subspace_ambient(inner, outer);
  for (std::size_t i = 0; i < inner.rows.size(); ++i)
    if (!contains(outer, row_element(inner, i))) return false;
  return true;
}

bool equals(const Subspace& a, const Subspace& b) {
  ensure_subspace_ambient(a, b);
  return a.rows == b.rows && a.den == b.den;
}

Element row_element(const Subspace& s, std::size_t i) {
  if (i >= s.rows.size()) throw std::out_of_range("basis row index");
  if (s.amb->kind() == AmbientKind::finite_extension)
    return s.amb->from_coeffs(s.rows[i]);
  return s.amb->from_fraction(poly_trim(s.rows[i]), s.den);
}

std::vector<Element> basis_elements(const Subspace& s) {
  std::vector<Element> out;
  out.reserve(s.rows.size());
  for (std::size_t i = 0; i < s.rows.size(); ++i)
    out.push_back(row_element(s, i));
  return out;
}

std::uint64_t nonzero_count(const Subspace& s) {
  std::uint64_t total = 1;
  for (int i = 0; i < s.dim(); ++i) {
    total *= s.amb->base().q();
    if (total > kEnumerationCap)
      throw std::overflow_error(
          "enumeration cap exceeded: q^dim > 2^20 for dim " +
          std::to_string(s.dim()));
  }
  return total - 1;
}

SubspaceEnumerator::SubspaceEnumerator(const Subspace& s) : s_(&s) {
  nonzero_count(s);  // cap check
  digits_.assign(s.rows.size(), 0);
  done_ = s.rows.empty();
}

void SubspaceEnumerator::restart() {
  std::fill(digits_.begin(), digits_.end(), 0);
  done_ = digits_.empty();
}

std::optional<Element> SubspaceEnumerator::next() {
  if (done_) return std::nullopt;
  const Gf& k = s_->amb->base();
  // increment the base-q counter, least significant digit first
  std::size_t i = 0;
  while (i < digits_.size()) {
    if (++digits_[i] < k.q()) break;
    digits_[i] = 0;
    ++i;
  }
  if (i == digits_.size()) {
    done_ = true;
    return std::nullopt;
  }
  if (s_->amb->kind() == AmbientKind::finite_extension) {
    std::vector<coeff_t> cs(s_->amb->ext_degree(), 0);
    for (std::size_t r = 0; r < digits_.size(); ++r) {
      if (digits_[r] == 0) continue;
      for (std::size_t j = 0; j < cs.size(); ++j)
        cs[j] = k.add(cs[j], k.mul(digits_[r], s_->rows[r][j]));
    }
    return s_->amb->from_coeffs(std::move(cs));
  }
  Poly num;
  for (std::size_t r = 0; r < digits_.size(); ++r) {
    if (digits_[r] == 0) continue;
    num = poly_add(k, num, poly_scale(k, digits_[r], poly_trim(s_->rows[r])));
  }
  return s_->amb->from_fraction(std::move(num), s_->den);
}

Element first_nonzero(const Subspace& s) {
  if (s.is_zero()) throw std::invalid_argument("zero subspace has no nonzero element");
  return row_element(s, 0);
}

std::string subspace_to_text(const Subspace& s) {
  std::string out = s.amb->descriptor();
  if (s.amb->kind() == AmbientKind::rational_function_field)
    out += " den=" + poly_to_string(s.den, 'x');
  out += '\n';
  for (const auto& r : s.rows) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(r[j]);
    }
    out += '\n';
  }
  return out;
}

namespace {

Subspace rebuild_from_rows(const Ambient& amb,
                           const std::vector<std::vector<coeff_t>>& rows,
                           const Poly& den) {
  std::vector<Element> gens;
  for (const auto& r : rows) {
    if (amb.kind() == AmbientKind::finite_extension) {
      std::vector<coeff_t> cs = r;
      cs.resize(amb.ext_degree(), 0);
      gens.push_back(amb.from_coeffs(std::move(cs)));
    } else {
      gens.push_back(amb.from_fraction(poly_trim(r), den));
    }
  }
  return span(amb, gens);
}

std::vector<coeff_t> parse_row(const std::string& line) {
  std::vector<coeff_t> row;
  std::size_t start = 0;
  while (start <= line.size()) {
    std::size_t pos = line.find(',', start);
    std::string tok = line.substr(
        start, pos == std::string::npos ? std::string::npos : pos - start);
    if (tok.empty()) throw std::invalid_argument("empty row entry");
    row.push_back(static_cast<coeff_t>(std::stoul(tok)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return row;
}

}  // namespace

Subspace subspace_from_text(const Ambient& amb, const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t pos = text.find('\n', start);
    if (pos == std::string::npos) pos = text.size();
    if (pos > start) lines.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  if (lines.empty()) throw std::invalid_argument("empty subspace text");
  std::string header = lines[0];
  Poly den = poly_one();
  std::size_t sp = header.find(' ');
  std::string desc = header.substr(0, sp);
  if (desc != amb.descriptor())
    throw std::invalid_argument("subspace ambient mismatch: " + desc);
  if (sp != std::string::npos) {
    std::string rest = header.substr(sp + 1);
    if (rest.rfind("den=", 0) != 0)
      throw std::invalid_argument("malformed subspace header: " + header);
    den = poly_parse(amb.base(), rest.substr(4), 'x');
  }
  std::vector<std::vector<coeff_t>> rows;
  for (std::size_t i = 1; i < lines.size(); ++i)
    rows.push_back(parse_row(lines[i]));
  return rebuild_from_rows(amb, rows, den);
}

std::string subspace_to_compact(const Subspace& s) {
  if (s.is_zero()) return "0";
  std::string out;
  if (s.amb->kind() == AmbientKind::rational_function_field)
    out += "den=" + poly_to_string(s.den, 'x') + "|";
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    if (i) out += ';';
    const auto& r = s.rows[i];
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(r[j]);
    }
  }
  return out;
}

Subspace subspace_from_compact(const Ambient& amb, const std::string& text) {
  if (text == "0") return zero_subspace(amb);
  std::string body = text;
  Poly den = poly_one();
  if (body.rfind("den=", 0) == 0) {
    std::size_t bar = body.find('|');
    if (bar == std::string::npos)
      throw std::invalid_argument("malformed compact subspace: " + text);
    den = poly_parse(amb.base(), body.substr(4, bar - 4), 'x');
    body = body.substr(bar + 1);
  }
  std::vector<std::vector<coeff_t>> rows;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t pos = body.find(';', start);
    std::string tok = body.substr(
        start, pos == std::string::npos ? std::string::npos : pos - start);
    if (!tok.empty()) rows.push_back(parse_row(tok));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return rebuild_from_rows(amb, rows, den);
}

}  // namespace linadd

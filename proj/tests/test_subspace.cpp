#include <set>

#include <stdexcept>

#include "doctest.h"
#include "linadd/random.hpp"
#include "linadd/subspace.hpp"
#include "linadd/subspace_enum.hpp"

using namespace linadd;

namespace {

Element E(const Ambient& amb, const char* text) {
  return elem_parse(amb, text);
}

// Brute span oracle: all K-combinations of the generators, as a set of
// canonical element keys.
std::set<std::string> brute_span_keys(const Ambient& amb,
                                      const std::vector<Element>& gens) {
  std::set<std::string> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) total *= amb.base().q();
  for (std::uint64_t enc = 0; enc < total; ++enc) {
    Element acc = amb.zero();
    std::uint64_t v = enc;
    for (const Element& g : gens) {
      coeff_t c = static_cast<coeff_t>(v % amb.base().q());
      v /= amb.base().q();
      if (c != 0) acc = elem_add(acc, elem_scale(c, g));
    }
    out.insert(elem_key(acc));
  }
  return out;
}

}  // namespace

TEST_CASE("span canonicalizes, finite extension") {
  Ambient gf16 = Ambient::parse("gf:2:4");
  CHECK(span(gf16, {}).is_zero());
  CHECK(span(gf16, {}).dim() == 0);

  Element one = gf16.one(), t = gf16.gen();
  Subspace s = span(gf16, {one, t, elem_add(one, t)});
  CHECK(s.dim() == 2);
  CHECK(s.rows == std::vector<std::vector<coeff_t>>{{1, 0, 0, 0},
                                                    {0, 1, 0, 0}});
}

TEST_CASE("span embeds fractions at the minimal common denominator") {
  Ambient rat = Ambient::parse("ratfun:2:64");
  Element x = rat.gen();
  Subspace s = span(rat, {elem_inv(x), rat.one()});
  CHECK(s.dim() == 2);
  CHECK(poly_to_string(s.den, 'x') == "x");
  CHECK(s.rows == std::vector<std::vector<coeff_t>>{{1}, {0, 1}});

  // construction path does not matter
  Subspace s2 = span(rat, {rat.from_fraction(poly_parse(rat.base(), "x+1", 'x'),
                                             poly_parse(rat.base(), "x", 'x')),
                           elem_inv(x)});
  CHECK(equals(s, s2));
}

TEST_CASE("span agrees with brute-force enumeration") {
  Ambient gf16 = Ambient::parse("gf:3:2");
  SplitRng rng(7, 0);
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<Element> gens;
    for (int i = 0; i < 2; ++i) {
      std::vector<coeff_t> cs(2);
      for (auto& c : cs) c = static_cast<coeff_t>(rng.below(3));
      gens.push_back(gf16.from_coeffs(std::move(cs)));
    }
    Subspace s = span(gf16, gens);
    auto keys = brute_span_keys(gf16, gens);
    CHECK(keys.size() == nonzero_count(s) + 1);
    SubspaceEnumerator en(s);
    while (auto e = en.next()) CHECK(keys.count(elem_key(*e)) == 1);
  }
}

TEST_CASE("sum and intersection satisfy the dimension formula") {
  for (const char* desc : {"gf:2:4", "gf:3:3", "ratfun:2:64"}) {
    Ambient amb = Ambient::parse(desc);
    SplitRng rng(13, 1);
    for (int iter = 0; iter < 200; ++iter) {
      Subspace a, b;
      if (amb.kind() == AmbientKind::finite_extension) {
        a = random_subspace(amb, rng.below(amb.ext_degree() + 1), rng);
        b = random_subspace(amb, rng.below(amb.ext_degree() + 1), rng);
      } else {
        a = random_rational_subspace(amb, rng.below(4), 4, rng);
        b = random_rational_subspace(amb, rng.below(4), 4, rng);
      }
      Subspace sum = subspace_sum(a, b);
      Subspace meet = subspace_intersect(a, b);
      CHECK(sum.dim() + meet.dim() == a.dim() + b.dim());
      CHECK(subspace_leq(meet, a));
      CHECK(subspace_leq(meet, b));
      CHECK(subspace_leq(a, sum));
      CHECK(subspace_leq(b, sum));
      CHECK(equals(subspace_sum(a, a), a));
      CHECK(equals(subspace_intersect(a, a), a));
    }
  }
}

TEST_CASE("named sum and intersection values") {
  Ambient gf16 = Ambient::parse("gf:2:4");
  Element one = gf16.one(), t = gf16.gen();
  Element t2 = elem_mul(t, t);
  Subspace a = span(gf16, {one, t});
  Subspace b = span(gf16, {t, t2});
  CHECK(subspace_sum(a, b).dim() == 3);
  CHECK(equals(subspace_sum(a, zero_subspace(gf16)), a));
  Subspace meet = subspace_intersect(a, b);
  CHECK(meet.dim() == 1);
  CHECK(equals(meet, span(gf16, {t})));
  CHECK(subspace_intersect(a, zero_subspace(gf16)).is_zero());
}

TEST_CASE("scale preserves dimension") {
  Ambient gf16 = Ambient::parse("gf:2:4");
  Element one = gf16.one(), t = gf16.gen();
  Subspace a = span(gf16, {one, t});
  CHECK(equals(scale(one, a), a));
  CHECK(equals(scale(t, a), span(gf16, {t, elem_mul(t, t)})));
  CHECK_THROWS_AS(scale(gf16.zero(), a), std::domain_error);

  Ambient rat = Ambient::parse("ratfun:2:64");
  Element x = rat.gen();
  Subspace s = span(rat, {elem_inv(x), rat.one()});
  CHECK(equals(scale(x, s), span(rat, {rat.one(), x})));
}

TEST_CASE("product spans") {
  Ambient gf16 = Ambient::parse("gf:2:4");
  Element one = gf16.one(), t = gf16.gen();
  Subspace a = span(gf16, {one, t});
  CHECK(equals(product_span(unit_subspace(gf16), a), a));
  Subspace sq = product_span(a, a);
  CHECK(sq.dim() == 3);
  CHECK(equals(sq, span(gf16, {one, t, elem_mul(t, t)})));

  Ambient rat = Ambient::parse("ratfun:2:64");
  Element x = rat.gen();
  Element x2 = elem_mul(x, x);
  Subspace ra = span(rat, {rat.one(), x});
  Subspace rb = span(rat, {rat.one(), x, x2});
  CHECK(product_span(ra, rb).dim() == 4);
}

TEST_CASE("product span properties on random inputs") {
  Ambient amb = Ambient::parse("gf:2:4");
  SplitRng rng(99, 3);
  for (int iter = 0; iter < 100; ++iter) {
    Subspace a = random_subspace(amb, 1 + rng.below(3), rng);
    Subspace b = random_subspace(amb, 1 + rng.below(3), rng);
    Subspace c = random_subspace(amb, 1 + rng.below(2), rng);
    Subspace ab = product_span(a, b);
    CHECK(ab.dim() <= a.dim() * b.dim());
    // associativity of the span product
    CHECK(equals(product_span(ab, c), product_span(a, product_span(b, c))));
    // monotone in the first argument
    Subspace a2 = subspace_sum(a, c);
    CHECK(subspace_leq(ab, product_span(a2, b)));
    // span of generator products equals product of spans
    std::vector<Element> prods;
    for (std::size_t i = 0; i < a.rows.size(); ++i)
      for (std::size_t j = 0; j < b.rows.size(); ++j)
        prods.push_back(elem_mul(row_element(a, i), row_element(b, j)));
    CHECK(equals(span(amb, prods), ab));
  }
}

TEST_CASE("product of spans equals span of generator products") {
  // generators are arbitrary (dependent, with zeros), not a basis
  for (const char* desc : {"gf:2:4", "ratfun:2:64"}) {
    Ambient amb = Ambient::parse(desc);
    SplitRng rng(610, 2);
    auto random_gens = [&](int count) {
      std::vector<Element> gens;
      for (int i = 0; i < count; ++i) {
        if (amb.kind() == AmbientKind::finite_extension) {
          std::vector<coeff_t> cs(amb.ext_degree());
          for (auto& c : cs)
            c = static_cast<coeff_t>(rng.below(amb.base().q()));
          gens.push_back(amb.from_coeffs(std::move(cs)));
        } else {
          std::vector<coeff_t> num(rng.below(3) + 1), den(rng.below(2) + 1);
          for (auto& c : num)
            c = static_cast<coeff_t>(rng.below(amb.base().q()));
          for (auto& c : den)
            c = static_cast<coeff_t>(rng.below(amb.base().q()));
          Poly d = poly_trim(std::move(den));
          if (d.is_zero()) d = poly_one();
          gens.push_back(amb.from_fraction(poly_trim(std::move(num)), d));
        }
      }
      return gens;
    };
    for (int iter = 0; iter < 60; ++iter) {
      std::vector<Element> s1 = random_gens(3), s2 = random_gens(3);
      std::vector<Element> prods;
      for (const auto& u : s1)
        for (const auto& v : s2) prods.push_back(elem_mul(u, v));
      CHECK(equals(product_span(span(amb, s1), span(amb, s2)),
                   span(amb, prods)));
    }
  }
}

TEST_CASE("canonical form is independent of the generating set") {
  for (const char* desc : {"gf:2:4", "gf:3:3", "ratfun:3:64"}) {
    Ambient amb = Ambient::parse(desc);
    SplitRng rng(21, 4);
    for (int iter = 0; iter < 100; ++iter) {
      Subspace s;
      if (amb.kind() == AmbientKind::finite_extension)
        s = random_subspace(amb, 1 + rng.below(3), rng);
      else
        s = random_rational_subspace(amb, 1 + rng.below(3), 4, rng);
      // random invertible recombination of the basis
      std::vector<Element> gens = basis_elements(s);
      for (int pass = 0; pass < 4; ++pass) {
        std::size_t i = rng.below(gens.size());
        std::size_t j = rng.below(gens.size());
        coeff_t c = static_cast<coeff_t>(rng.below(amb.base().q()));
        if (i != j)
          gens[i] = elem_add(gens[i], elem_scale(c, gens[j]));
        else if (c != 0)
          gens[i] = elem_scale(c, gens[i]);
      }
      Subspace s2 = span(amb, gens);
      CHECK(s2.rows == s.rows);
      CHECK(s2.den == s.den);
      if (amb.kind() == AmbientKind::rational_function_field && !s.is_zero()) {
        // minimal denominator: no nonconstant divisor shared with every row
        CHECK(s.den.lead() == 1);
        Poly g = s.den;
        for (const auto& r : s.rows) g = poly_gcd(amb.base(), g, poly_trim(r));
        CHECK(g.deg() == 0);
      }
    }
  }
}

TEST_CASE("membership and equality") {
  Ambient gf16 = Ambient::parse("gf:2:4");
  Element one = gf16.one(), t = gf16.gen();
  Subspace a = span(gf16, {one, t});
  CHECK(contains(a, elem_add(one, t)));
  CHECK(contains(a, gf16.zero()));
  CHECK_FALSE(contains(a, elem_mul(t, t)));
  CHECK(equals(span(gf16, {elem_add(one, t), t}), a));

  Ambient rat = Ambient::parse("ratfun:2:64");
  Element x = rat.gen();
  Subspace s = span(rat, {elem_inv(x), rat.one()});
  CHECK(contains(s, elem_inv(x)));
  CHECK(contains(s, rat.from_fraction(poly_parse(rat.base(), "x+1", 'x'),
                                      poly_parse(rat.base(), "x", 'x'))));
  CHECK_FALSE(contains(s, x));
  CHECK_FALSE(contains(s, rat.from_fraction(
                              poly_one(), poly_parse(rat.base(), "x^2", 'x'))));
}

TEST_CASE("nonzero element enumeration") {
  Ambient gf2 = Ambient::parse("gf:2:2");
  Subspace k = unit_subspace(gf2);
  SubspaceEnumerator ek(k);
  auto e1 = ek.next();
  REQUIRE(e1.has_value());
  CHECK(elem_is_one(*e1));
  CHECK_FALSE(ek.next().has_value());

  Subspace l = full_space(gf2);
  std::vector<std::string> order;
  SubspaceEnumerator el(l);
  while (auto e = el.next()) order.push_back(elem_to_string(*e));
  CHECK(order == std::vector<std::string>{"1,0", "0,1", "1,1"});

  SubspaceEnumerator ez(zero_subspace(gf2));
  CHECK_FALSE(ez.next().has_value());

  // distinctness and membership at a bigger size
  Ambient gf27 = Ambient::parse("gf:3:3");
  Subspace s = span(gf27, {gf27.one(), gf27.gen()});
  std::set<std::string> seen;
  SubspaceEnumerator es(s);
  while (auto e = es.next()) {
    CHECK(contains(s, *e));
    CHECK(seen.insert(elem_key(*e)).second);
  }
  CHECK(seen.size() == nonzero_count(s));
}

TEST_CASE("serialization round-trips bit-exactly") {
  for (const char* desc : {"gf:2:4", "gf:3:3", "ratfun:2:64"}) {
    Ambient amb = Ambient::parse(desc);
    SplitRng rng(31, 9);
    for (int iter = 0; iter < 50; ++iter) {
      Subspace s;
      if (amb.kind() == AmbientKind::finite_extension)
        s = random_subspace(amb, rng.below(amb.ext_degree() + 1), rng);
      else
        s = random_rational_subspace(amb, rng.below(4), 5, rng);
      Subspace t1 = subspace_from_text(amb, subspace_to_text(s));
      CHECK(equals(t1, s));
      Subspace t2 = subspace_from_compact(amb, subspace_to_compact(s));
      CHECK(equals(t2, s));
    }
  }
}

TEST_CASE("exhaustive subspace enumeration matches Gaussian binomials") {
  Ambient gf16 = Ambient::parse("gf:2:4");
  auto all = all_subspaces(gf16);
  CHECK(all.size() == 67);
  std::set<std::string> keys;
  std::vector<std::uint64_t> per_dim(5, 0);
  for (const auto& s : all) {
    CHECK(keys.insert(subspace_to_compact(s)).second);
    ++per_dim[s.dim()];
  }
  for (std::uint32_t k = 0; k <= 4; ++k)
    CHECK(per_dim[k] == gaussian_binomial(4, k, 2));
  CHECK(all_subspaces_containing_one(gf16).size() == 16);

  CHECK(all_subspaces(Ambient::parse("gf:3:3")).size() == 28);
  CHECK(all_subspaces(Ambient::parse("gf:2:5")).size() == 374);
  Ambient gf64 = Ambient::parse("gf:2:6");
  CHECK(all_subspaces(gf64).size() == 2825);
  CHECK(all_subspaces_containing_one(gf64).size() == 374);
}

TEST_CASE("enumeration cap trips loudly") {
  Ambient big = Ambient::parse("gf:2:25");
  Subspace l = full_space(big);
  CHECK_THROWS_AS(nonzero_count(l), std::overflow_error);
  CHECK_THROWS_AS(SubspaceEnumerator{l}, std::overflow_error);
}

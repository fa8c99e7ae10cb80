#include <stdexcept>

#include "doctest.h"

#include "linadd/gf.hpp"
#include "linadd/poly.hpp"
#include "linadd/random.hpp"

using namespace linadd;

namespace {

Poly P(std::vector<coeff_t> c) { return poly_trim(std::move(c)); }

// Independent irreducibility oracle: trial division by every monic
// polynomial of degree 1..deg/2.
bool brute_irreducible(const Gf& k, const Poly& f) {
  int n = f.deg();
  if (n < 1) return false;
  for (int d = 1; d <= n / 2; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= k.q();
    for (std::uint64_t enc = 0; enc < count; ++enc) {
      std::vector<coeff_t> cs(d + 1, 0);
      std::uint64_t v = enc;
      for (int i = 0; i < d; ++i) {
        cs[i] = static_cast<coeff_t>(v % k.q());
        v /= k.q();
      }
      cs[d] = 1;
      if (poly_rem(k, f, Poly{cs}).is_zero()) return false;
    }
  }
  return true;
}

Poly random_poly(const Gf& k, SplitRng& rng, int max_deg) {
  std::vector<coeff_t> cs(rng.below(max_deg + 1) + 1);
  for (auto& c : cs) c = static_cast<coeff_t>(rng.below(k.q()));
  return poly_trim(std::move(cs));
}

}  // namespace

TEST_CASE("prime power recognition") {
  std::uint32_t p = 0, m = 0;
  CHECK(Gf::is_prime_power(2, &p, &m));
  CHECK(p == 2);
  CHECK(m == 1);
  CHECK(Gf::is_prime_power(8, &p, &m));
  CHECK(p == 2);
  CHECK(m == 3);
  CHECK(Gf::is_prime_power(49, &p, &m));
  CHECK(p == 7);
  CHECK(m == 2);
  CHECK_FALSE(Gf::is_prime_power(1, nullptr, nullptr));
  CHECK_FALSE(Gf::is_prime_power(6, nullptr, nullptr));
  CHECK_FALSE(Gf::is_prime_power(12, nullptr, nullptr));
  CHECK_THROWS_AS(Gf(6), std::invalid_argument);
}

TEST_CASE("base field axioms, exhaustive for small orders") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 9u, 8u}) {
    Gf k(q);
    CHECK(k.q() == q);
    for (std::uint32_t a = 0; a < q; ++a) {
      CHECK(k.add(static_cast<coeff_t>(a), 0) == a);
      CHECK(k.mul(static_cast<coeff_t>(a), 1) == a);
      CHECK(k.add(static_cast<coeff_t>(a), k.neg(static_cast<coeff_t>(a))) ==
            0);
      if (a != 0)
        CHECK(k.mul(static_cast<coeff_t>(a), k.inv(static_cast<coeff_t>(a))) ==
              1);
      for (std::uint32_t b = 0; b < q; ++b) {
        CHECK(k.add(a, b) == k.add(b, a));
        CHECK(k.mul(a, b) == k.mul(b, a));
        for (std::uint32_t c = 0; c < q; ++c) {
          CHECK(k.add(k.add(a, b), c) == k.add(a, k.add(b, c)));
          CHECK(k.mul(k.mul(a, b), c) == k.mul(a, k.mul(b, c)));
          CHECK(k.mul(a, k.add(b, c)) == k.add(k.mul(a, b), k.mul(a, c)));
        }
      }
    }
    CHECK_THROWS_AS(k.inv(0), std::domain_error);
  }
}

TEST_CASE("polynomial division and gcd identities") {
  for (std::uint32_t q : {2u, 3u, 5u}) {
    Gf k(q);
    SplitRng rng(11, q);
    for (int iter = 0; iter < 500; ++iter) {
      Poly a = random_poly(k, rng, 8);
      Poly b = random_poly(k, rng, 6);
      if (b.is_zero()) continue;
      auto [quo, rem] = poly_divmod(k, a, b);
      CHECK(poly_add(k, poly_mul(k, quo, b), rem) == a);
      CHECK(rem.deg() < b.deg());
      Poly g = poly_gcd(k, a, b);
      if (!g.is_zero()) {
        CHECK(g.lead() == 1);
        CHECK(poly_rem(k, a, g).is_zero());
        CHECK(poly_rem(k, b, g).is_zero());
      }
      PolyEgcd eg = poly_egcd(k, a, b);
      CHECK(poly_add(k, poly_mul(k, eg.s, a), poly_mul(k, eg.t, b)) == eg.g);
      if (!a.is_zero() && !b.is_zero()) {
        Poly l = poly_lcm(k, a, b);
        CHECK(poly_rem(k, l, a).is_zero());
        CHECK(poly_rem(k, l, b).is_zero());
      }
    }
  }
}

TEST_CASE("irreducibility test against trial division") {
  for (std::uint32_t q : {2u, 3u}) {
    Gf k(q);
    for (int n = 1; n <= 4; ++n) {
      std::uint64_t count = 1;
      for (int i = 0; i < n; ++i) count *= q;
      for (std::uint64_t enc = 0; enc < count; ++enc) {
        std::vector<coeff_t> cs(n + 1, 0);
        std::uint64_t v = enc;
        for (int i = 0; i < n; ++i) {
          cs[i] = static_cast<coeff_t>(v % q);
          v /= q;
        }
        cs[n] = 1;
        Poly f{cs};
        CHECK(poly_is_irreducible(k, f) == brute_irreducible(k, f));
      }
    }
  }
}

TEST_CASE("canonical modulus choices are the smallest irreducibles") {
  Gf k2(2), k3(3);
  CHECK(canonical_irreducible(k2, 1) == P({0, 1}));           // t
  CHECK(canonical_irreducible(k2, 2) == P({1, 1, 1}));        // t^2+t+1
  CHECK(canonical_irreducible(k2, 4) == P({1, 1, 0, 0, 1}));  // t^4+t+1
  CHECK(canonical_irreducible(k2, 5) == P({1, 0, 1, 0, 0, 1}));
  CHECK(canonical_irreducible(k2, 6) == P({1, 1, 0, 0, 0, 0, 1}));
  CHECK(canonical_irreducible(k3, 3) == P({1, 2, 0, 1}));  // t^3+2t+1
}

TEST_CASE("polynomial text form round-trips") {
  Gf k(3);
  for (Poly f :
       {P({}), P({1}), P({2}), P({0, 1}), P({1, 2, 0, 1}), P({0, 0, 2})}) {
    std::string s = poly_to_string(f, 'x');
    CHECK(poly_parse(k, s, 'x') == f);
  }
  CHECK(poly_to_string(P({1, 1, 0, 0, 1}), 't') == "t^4+t+1");
  CHECK(poly_parse(k, "x^3+2x+1", 'x') == P({1, 2, 0, 1}));
  CHECK_THROWS_AS(poly_parse(k, "x^3+5", 'x'), std::invalid_argument);
  CHECK_THROWS_AS(poly_parse(k, "", 'x'), std::invalid_argument);
}

TEST_CASE("non-prime base fields flatten to GF(p) towers") {
  Gf k4(4);
  CHECK(k4.p() == 2);
  CHECK(k4.m() == 2);
  CHECK(k4.tower_modulus() == std::vector<coeff_t>{1, 1, 1});
  // u * u = u + 1 in GF(4) = GF(2)[u]/(u^2+u+1); u encodes as 2
  CHECK(k4.mul(2, 2) == 3);
  CHECK(k4.add(2, 3) == 1);
  Gf k9(9);
  CHECK(k9.p() == 3);
  CHECK(k9.m() == 2);
  for (coeff_t a = 1; a < 9; ++a) CHECK(k9.mul(a, k9.inv(a)) == 1);
}

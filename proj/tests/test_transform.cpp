#include <stdexcept>

#include "doctest.h"

#include "linadd/random.hpp"
#include "linadd/transform.hpp"

using namespace linadd;

namespace {

struct Gf16Fixture {
  Ambient amb = Ambient::parse("gf:2:4");
  Element one = amb.one();
  Element t = amb.gen();
  Subspace a = span(amb, {one, t});
};

}  // namespace

TEST_CASE("quotient-set membership") {
  Gf16Fixture f;
  CHECK(in_left_quotient(f.one, f.a));  // 1 is always a quotient
  CHECK(in_left_quotient(f.t, f.a));    // t = 1^-1 * t
  CHECK(in_right_quotient(f.t, f.a));
  Subspace k = unit_subspace(f.amb);
  CHECK_FALSE(in_left_quotient(f.t, k));  // tK meets K only in 0
  CHECK_THROWS_AS(in_left_quotient(f.amb.zero(), f.a), std::domain_error);
  CHECK_THROWS_AS(in_left_quotient(f.one, zero_subspace(f.amb)),
                  std::invalid_argument);
}

TEST_CASE("transform pair, both variants") {
  Gf16Fixture f;
  // x = 1 fixes everything
  auto [a1, b1] = transform_pair(f.a, f.a, f.one, TransformVariant::up_a);
  CHECK(equals(a1, f.a));
  CHECK(equals(b1, f.a));

  Element t2 = elem_mul(f.t, f.t);
  auto [a2, b2] = transform_pair(f.a, f.a, f.t, TransformVariant::up_a);
  CHECK(equals(a2, span(f.amb, {f.one, f.t, t2})));
  CHECK(equals(b2, unit_subspace(f.amb)));
  // t^-1 B = span{t^3+1, 1}
  CHECK(equals(scale(elem_inv(f.t), f.a),
               span(f.amb, {elem_parse(f.amb, "1,0,0,1"), f.one})));

  auto [a3, b3] = transform_pair(f.a, f.a, f.t, TransformVariant::up_b);
  CHECK(equals(a3, unit_subspace(f.amb)));
  CHECK(equals(b3, span(f.amb, {f.one, f.t, t2})));

  CHECK_THROWS_AS(
      transform_pair(f.a, f.a, f.amb.zero(), TransformVariant::up_a),
      std::domain_error);
}

TEST_CASE("pivot search") {
  Gf16Fixture f;
  auto d = find_pivot(f.a, f.a);
  REQUIRE(d.has_value());
  CHECK(elem_equal(*d, f.t));  // first non-fixing quotient in counter order

  Subspace gf4 = subfield(f.amb, 2);
  CHECK_FALSE(find_pivot(gf4, gf4).has_value());
  Subspace k = unit_subspace(f.amb);
  CHECK_FALSE(find_pivot(k, k).has_value());
}

TEST_CASE("reduction driver on the worked examples") {
  Gf16Fixture f;
  Subspace k = unit_subspace(f.amb);

  ReduceResult r0 = reduce_pair(k, k);
  CHECK(r0.trace.steps.empty());
  CHECK(equals(r0.e, k));
  CHECK(equals(r0.f, k));

  ReduceResult r1 = reduce_pair(f.a, f.a);
  REQUIRE(r1.trace.steps.size() == 1);
  CHECK(elem_equal(r1.trace.steps[0].pivot, f.t));
  CHECK(r1.trace.steps[0].variant == TransformVariant::up_a);
  CHECK(r1.e.dim() == 3);
  CHECK(r1.f.dim() == 1);
  CHECK(r1.e.dim() + r1.f.dim() >= 4);
  verify_trace(r1.trace);

  Subspace gf4 = subfield(f.amb, 2);
  ReduceResult r2 = reduce_pair(gf4, gf4);
  CHECK(r2.trace.steps.empty());
  CHECK(equals(r2.e, gf4));
  CHECK(equals(r2.f, gf4));
  CHECK(stable_under_quotients(r2.e, r2.f));
}

TEST_CASE("reduction driver on random pairs") {
  for (const char* desc : {"gf:2:4", "gf:3:3"}) {
    Ambient amb = Ambient::parse(desc);
    SplitRng rng(404, 0);
    for (int iter = 0; iter < 200; ++iter) {
      Subspace a = random_subspace(amb, 1 + rng.below(3), rng);
      Subspace b = random_subspace(amb, 1 + rng.below(3), rng);
      Subspace ab = product_span(a, b);
      ReduceResult r = reduce_pair(a, b);
      verify_trace(r.trace);
      CHECK(r.trace.steps.size() <=
            2u * static_cast<unsigned>(ab.dim()) * ab.dim());
      CHECK(subspace_leq(product_span(r.e, r.f), ab));
      CHECK(r.e.dim() + r.f.dim() >= a.dim() + b.dim());
      CHECK(stable_under_quotients(r.e, r.f));
    }
  }
}

TEST_CASE("reduction works over the rational function field") {
  Ambient rat = Ambient::parse("ratfun:2:64");
  Element x = rat.gen();
  Subspace a = span(rat, {rat.one(), x});
  ReduceResult r = reduce_pair(a, a);
  verify_trace(r.trace);
  CHECK(r.e.dim() + r.f.dim() >= 4);
  CHECK(stable_under_quotients(r.e, r.f));
}

TEST_CASE("trace serialization shape") {
  Gf16Fixture f;
  ReduceResult r = reduce_pair(f.a, f.a);
  auto j = trace_to_json(r.trace);
  REQUIRE(j.contains("steps"));
  REQUIRE(j["steps"].size() == 1);
  const auto& s = j["steps"][0];
  CHECK(s["pivot"] == "0,1,0,0");
  CHECK(s["variant"] == "up-a");
  CHECK(s["rise_a"] == 1);
  CHECK(s["rise_b"] == 1);
  CHECK(s["dims_before"] == nlohmann::ordered_json({2, 2}));
  CHECK(s["dims_after"] == nlohmann::ordered_json({3, 1}));
  CHECK(j["initial"]["A"] == "1,0,0,0;0,1,0,0");
  CHECK(j["final"]["F"] == "1,0,0,0");
}

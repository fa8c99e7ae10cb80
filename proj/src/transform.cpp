#include "linadd/transform.hpp"

#include <stdexcept>
#include <unordered_set>

namespace linadd {

namespace {

void ensure_nonzero(const Subspace& s, const char* what) {
  if (s.is_zero())
    throw std::invalid_argument(std::string(what) + " must be nonzero");
}

void ensure_nonzero(const Element& e, const char* what) {
  if (elem_is_zero(e))
    throw std::domain_error(std::string(what) + " must be nonzero");
}

}  // namespace

const char* variant_name(TransformVariant v) {
  return v == TransformVariant::up_a ? "up-a" : "up-b";
}

bool in_left_quotient(const Element& d, const Subspace& a) {
  ensure_nonzero(d, "quotient candidate");
  ensure_nonzero(a, "subspace");
  return !subspace_intersect(scale(d, a), a).is_zero();
}

bool in_right_quotient(const Element& d, const Subspace& b) {
  ensure_nonzero(d, "quotient candidate");
  ensure_nonzero(b, "subspace");
  return !subspace_intersect(scale(d, b), b).is_zero();
}

std::pair<Subspace, Subspace> transform_pair(const Subspace& a,
                                             const Subspace& b,
                                             const Element& x,
                                             TransformVariant variant) {
  ensure_nonzero(x, "pivot");
  ensure_nonzero(a, "A");
  ensure_nonzero(b, "B");
  Element xinv = elem_inv(x);
  if (variant == TransformVariant::up_a)
    return {subspace_sum(a, scale(x, a)), subspace_intersect(b, scale(xinv, b))};
  return {subspace_intersect(a, scale(xinv, a)), subspace_sum(b, scale(x, b))};
}

std::optional<Element> find_pivot(const Subspace& a, const Subspace& b) {
  ensure_nonzero(a, "A");
  ensure_nonzero(b, "B");
  // Enumerate the smaller quotient set; membership in the other one is a
  // single intersection test per candidate.
  const bool a_side = a.dim() <= b.dim();
  const Subspace& side = a_side ? a : b;
  const Subspace& other = a_side ? b : a;
  std::unordered_set<std::string> seen;
  SubspaceEnumerator outer(side);
  while (auto u = outer.next()) {
    Element u_inv = elem_inv(*u);
    SubspaceEnumerator inner(side);
    while (auto w = inner.next()) {
      // a^-1 a' on the A side, b' b^-1 on the B side
      Element d = a_side ? elem_mul(u_inv, *w) : elem_mul(*w, u_inv);
      if (!seen.insert(elem_key(d)).second) continue;
      if (elem_is_scalar(d)) continue;  // K_* fixes every subspace
      bool in_other =
          a_side ? in_right_quotient(d, other) : in_left_quotient(d, other);
      if (!in_other) continue;
      if (!equals(scale(d, a), a) || !equals(scale(d, b), b)) return d;
    }
  }
  return std::nullopt;
}

bool stable_under_quotients(const Subspace& e, const Subspace& f) {
  const bool e_side = e.dim() <= f.dim();
  const Subspace& side = e_side ? e : f;
  const Subspace& other = e_side ? f : e;
  std::unordered_set<std::string> seen;
  SubspaceEnumerator outer(side);
  while (auto u = outer.next()) {
    Element u_inv = elem_inv(*u);
    SubspaceEnumerator inner(side);
    while (auto w = inner.next()) {
      Element d = e_side ? elem_mul(u_inv, *w) : elem_mul(*w, u_inv);
      if (!seen.insert(elem_key(d)).second) continue;
      if (elem_is_scalar(d)) continue;
      bool in_other =
          e_side ? in_right_quotient(d, other) : in_left_quotient(d, other);
      if (!in_other) continue;
      if (!equals(scale(d, e), e) || !equals(scale(d, f), f)) return false;
    }
  }
  return true;
}

ReduceResult reduce_pair(const Subspace& a, const Subspace& b) {
  ensure_nonzero(a, "A");
  ensure_nonzero(b, "B");
  Subspace ab = product_span(a, b);
  const std::uint64_t step_cap =
      2ull * static_cast<std::uint64_t>(ab.dim()) * ab.dim();
  TransformTrace trace;
  trace.initial_a = a;
  trace.initial_b = b;
  Subspace e = a, f = b;
  while (auto d = find_pivot(e, f)) {
    int rise_a = subspace_sum(e, scale(*d, e)).dim() - e.dim();
    int rise_b = subspace_sum(f, scale(*d, f)).dim() - f.dim();
    TransformVariant variant = rise_a >= rise_b ? TransformVariant::up_a
                                                : TransformVariant::up_b;
    TransformStep step;
    step.pivot = *d;
    step.variant = variant;
    step.rise_a = rise_a;
    step.rise_b = rise_b;
    step.dims_before = {e.dim(), f.dim()};
    auto [e2, f2] = transform_pair(e, f, *d, variant);
    e = std::move(e2);
    f = std::move(f2);
    step.dims_after = {e.dim(), f.dim()};
    // strict lexicographic increase of (dim A + dim B, dim A)
    auto measure = [](std::pair<int, int> d) {
      return std::pair<int, int>{d.first + d.second, d.first};
    };
    if (!(measure(step.dims_after) > measure(step.dims_before)))
      throw std::logic_error("transform step did not increase the measure");
    trace.steps.push_back(std::move(step));
    if (trace.steps.size() > step_cap)
      throw std::logic_error("transform safety bound exceeded");
  }
  trace.final_a = e;
  trace.final_b = f;
  if (e.is_zero() || f.is_zero())
    throw std::logic_error("reduction produced a zero subspace");
  if (!subspace_leq(product_span(e, f), ab))
    throw std::logic_error("reduction enlarged the product span");
  if (e.dim() + f.dim() < a.dim() + b.dim())
    throw std::logic_error("reduction lost total dimension");
  if (!stable_under_quotients(e, f))
    throw std::logic_error("reduced pair is not stable under its quotient set");
  return ReduceResult{std::move(e), std::move(f), std::move(trace)};
}

void verify_trace(const TransformTrace& trace) {
  Subspace e = trace.initial_a, f = trace.initial_b;
  Subspace prod = product_span(e, f);
  for (const auto& step : trace.steps) {
    if (step.dims_before != std::pair<int, int>{e.dim(), f.dim()})
      throw std::logic_error("trace dims_before mismatch");
    int rise_a = subspace_sum(e, scale(step.pivot, e)).dim() - e.dim();
    int rise_b = subspace_sum(f, scale(step.pivot, f)).dim() - f.dim();
    if (rise_a != step.rise_a || rise_b != step.rise_b)
      throw std::logic_error("trace rise mismatch");
    TransformVariant expect = rise_a >= rise_b ? TransformVariant::up_a
                                               : TransformVariant::up_b;
    if (expect != step.variant) throw std::logic_error("trace variant mismatch");
    if (!in_left_quotient(step.pivot, e) || !in_right_quotient(step.pivot, f))
      throw std::logic_error("trace pivot outside the quotient set");
    auto [e2, f2] = transform_pair(e, f, step.pivot, step.variant);
    e = std::move(e2);
    f = std::move(f2);
    std::pair<int, int> expect_dims =
        step.variant == TransformVariant::up_a
            ? std::pair<int, int>{step.dims_before.first + rise_a,
                                  step.dims_before.second - rise_b}
            : std::pair<int, int>{step.dims_before.first - rise_a,
                                  step.dims_before.second + rise_b};
    if (std::pair<int, int>{e.dim(), f.dim()} != expect_dims ||
        step.dims_after != expect_dims)
      throw std::logic_error("trace dimension accounting mismatch");
    Subspace next_prod = product_span(e, f);
    if (!subspace_leq(next_prod, prod))
      throw std::logic_error("trace product-span chain is not descending");
    if (std::max(e.dim(), f.dim()) > prod.dim())
      throw std::logic_error("trace dimension exceeds the product-span bound");
    prod = std::move(next_prod);
  }
  if (!equals(e, trace.final_a) || !equals(f, trace.final_b))
    throw std::logic_error("trace final pair mismatch");
}

nlohmann::ordered_json trace_to_json(const TransformTrace& trace) {
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const auto& s : trace.steps) {
    steps.push_back({{"pivot", elem_to_string(s.pivot)},
                     {"variant", variant_name(s.variant)},
                     {"rise_a", s.rise_a},
                     {"rise_b", s.rise_b},
                     {"dims_before", {s.dims_before.first, s.dims_before.second}},
                     {"dims_after", {s.dims_after.first, s.dims_after.second}}});
  }
  return {{"steps", std::move(steps)},
          {"initial", {{"A", subspace_to_compact(trace.initial_a)},
                       {"B", subspace_to_compact(trace.initial_b)}}},
          {"final", {{"E", subspace_to_compact(trace.final_a)},
                     {"F", subspace_to_compact(trace.final_b)}}}};
}

}  // namespace linadd

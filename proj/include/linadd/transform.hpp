#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "json.hpp"
#include "linadd/subspace.hpp"

namespace linadd {

// The two linear Kemperman transforms of a pair (A, B) with respect to a
// nonzero pivot x:
//   up_a: (A + Ax, B intersect x^-1 B)
//   up_b: (A intersect Ax^-1, B + xB)
enum class TransformVariant { up_a, up_b };

const char* variant_name(TransformVariant v);

struct TransformStep {
  Element pivot;
  TransformVariant variant;
  int rise_a = 0;  // dim(A + Ad) - dim A
  int rise_b = 0;  // dim(B + dB) - dim B
  std::pair<int, int> dims_before;
  std::pair<int, int> dims_after;
};

struct TransformTrace {
  std::vector<TransformStep> steps;
  Subspace initial_a, initial_b;
  Subspace final_a, final_b;
};

// d in A_*^-1 A, equivalently Ad intersect A != {0}.
bool in_left_quotient(const Element& d, const Subspace& a);
// d in B B_*^-1, equivalently dB intersect B != {0}.
bool in_right_quotient(const Element& d, const Subspace& b);

std::pair<Subspace, Subspace> transform_pair(const Subspace& a,
                                             const Subspace& b,
                                             const Element& x,
                                             TransformVariant variant);

// First d (in the canonical enumeration order: pairs over the smaller of the
// two quotient sets, counter order, duplicates skipped) lying in
// A_*^-1 A intersect B B_*^-1 with Ad != A or dB != B. Returns nothing iff
// every such d fixes both sides.
std::optional<Element> find_pivot(const Subspace& a, const Subspace& b);

struct ReduceResult {
  Subspace e, f;
  TransformTrace trace;
};

// Iterates find_pivot + transform_pair (up_a when rise_a >= rise_b) until no
// pivot moves either side. The result is re-verified exhaustively:
// Eu = E and uF = F for every u in E_*^-1 E intersect F F_*^-1.
ReduceResult reduce_pair(const Subspace& a, const Subspace& b);

// The exhaustive stability check above, exposed for tests and reports.
bool stable_under_quotients(const Subspace& e, const Subspace& f);

// Replays a trace from its initial pair, checking the per-step dimension
// accounting, the strict lexicographic increase of
// (dim A + dim B, dim A), the product-span chain, and the final pair.
void verify_trace(const TransformTrace& trace);

nlohmann::ordered_json trace_to_json(const TransformTrace& trace);

}  // namespace linadd

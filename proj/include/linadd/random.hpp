#pragma once

#include <cstdint>

#include "linadd/subspace.hpp"

namespace linadd {

// Deterministic splittable generator keyed by (seed, stream). Instances in a
// campaign draw from stream = instance index, so parallel and serial runs
// generate identical values. Pure 64-bit mixing, no platform dependence.
class SplitRng {
 public:
  SplitRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();
  std::uint32_t below(std::uint32_t bound);  // in [0, bound)
  SplitRng fork(std::uint64_t slot) const;

 private:
  std::uint64_t state_;
};

// Uniform over the dim-dimensional subspaces of a finite extension: a random
// full-rank matrix, rejected and redrawn until full rank, then canonicalized.
Subspace random_subspace(const Ambient& amb, int dim, SplitRng& rng);

// Same, but with the subspace forced to contain 1 (not uniform; the first
// generator is pinned to 1).
Subspace random_subspace_containing_one(const Ambient& amb, int dim,
                                        SplitRng& rng);

// Rational ambients: a span of `dim` random polynomials of degree at most
// max_gen_degree, redrawn until independent. Generator-based and therefore
// not uniform over subspaces; documented as such.
Subspace random_rational_subspace(const Ambient& amb, int dim,
                                  std::uint32_t max_gen_degree, SplitRng& rng,
                                  bool force_one = false,
                                  bool zero_constant_term = false);

}  // namespace linadd

#pragma once

#include <cstdint>
#include <vector>

#include "linadd/subspace.hpp"

namespace linadd {

// Number of k-dimensional subspaces of an n-dimensional space over GF(q).
std::uint64_t gaussian_binomial(std::uint32_t n, std::uint32_t k,
                                std::uint64_t q);

// Every K-subspace of a finite extension, in a fixed deterministic order:
// dimension ascending, pivot-column set lexicographic, then free entries in
// counter order. Generated directly in reduced row echelon form.
std::vector<Subspace> all_subspaces(const Ambient& amb);

// The subspaces whose echelon basis starts with the row (1,0,...,0), i.e.
// exactly those containing 1.
std::vector<Subspace> all_subspaces_containing_one(const Ambient& amb);

}  // namespace linadd

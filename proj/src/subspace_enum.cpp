#include "linadd/subspace_enum.hpp"

#include <stdexcept>

namespace linadd {

std::uint64_t gaussian_binomial(std::uint32_t n, std::uint32_t k,
                                std::uint64_t q) {
  if (k > n) return 0;
  // prod_{i=0}^{k-1} (q^(n-i) - 1) / (q^(i+1) - 1), computed exactly
  std::uint64_t num = 1, den = 1;
  auto qpow = [&](std::uint32_t e) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < e; ++i) r *= q;
    return r;
  };
  std::uint64_t result = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    num = qpow(n - i) - 1;
    den = qpow(i + 1) - 1;
    result = result * num / den;  // exact at each step for the Gaussian product
  }
  return result;
}

std::vector<Subspace> all_subspaces(const Ambient& amb) {
  if (amb.kind() != AmbientKind::finite_extension)
    throw std::invalid_argument(
        "all_subspaces: exhaustive enumeration needs a finite extension");
  const std::uint32_t n = amb.ext_degree();
  const std::uint32_t q = amb.base().q();
  std::vector<Subspace> out;
  out.push_back(zero_subspace(amb));
  for (std::uint32_t k = 1; k <= n; ++k) {
    // pivot column combinations, lexicographic
    std::vector<std::uint32_t> piv(k);
    for (std::uint32_t i = 0; i < k; ++i) piv[i] = i;
    while (true) {
      std::vector<bool> is_pivot(n, false);
      for (auto p : piv) is_pivot[p] = true;
      // free positions: (row i, col j) with j > piv[i] and j not a pivot
      std::vector<std::pair<std::uint32_t, std::uint32_t>> free_pos;
      for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = piv[i] + 1; j < n; ++j)
          if (!is_pivot[j]) free_pos.emplace_back(i, j);
      std::vector<coeff_t> digits(free_pos.size(), 0);
      while (true) {
        std::vector<std::vector<coeff_t>> rows(
            k, std::vector<coeff_t>(n, 0));
        for (std::uint32_t i = 0; i < k; ++i) rows[i][piv[i]] = 1;
        for (std::size_t f = 0; f < free_pos.size(); ++f)
          rows[free_pos[f].first][free_pos[f].second] = digits[f];
        out.push_back(Subspace{&amb, std::move(rows), poly_one()});
        // bump the free-entry counter
        std::size_t d = 0;
        while (d < digits.size()) {
          if (++digits[d] < q) break;
          digits[d] = 0;
          ++d;
        }
        if (d == digits.size()) break;
      }
      // next pivot combination
      int i = static_cast<int>(k) - 1;
      while (i >= 0 && piv[i] == n - k + i) --i;
      if (i < 0) break;
      ++piv[i];
      for (std::uint32_t j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
  return out;
}

std::vector<Subspace> all_subspaces_containing_one(const Ambient& amb) {
  std::vector<Subspace> out;
  Element one = amb.one();
  for (auto& s : all_subspaces(amb))
    if (!s.is_zero() && contains(s, one)) out.push_back(std::move(s));
  return out;
}

}  // namespace linadd

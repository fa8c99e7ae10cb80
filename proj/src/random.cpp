#include "linadd/random.hpp"

#include <stdexcept>

namespace linadd {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

constexpr int kMaxDraws = 4096;

}  // namespace

SplitRng::SplitRng(std::uint64_t seed, std::uint64_t stream) {
  state_ = mix64(mix64(seed) ^ mix64(stream ^ 0x6a09e667f3bcc909ull));
}

std::uint64_t SplitRng::next_u64() {
  state_ += 0x9e3779b97f4a7c15ull;
  return mix64(state_);
}

std::uint32_t SplitRng::below(std::uint32_t bound) {
  if (bound == 0) throw std::invalid_argument("below(0)");
  return static_cast<std::uint32_t>(next_u64() % bound);
}

SplitRng SplitRng::fork(std::uint64_t slot) const {
  return SplitRng(state_, slot ^ 0x3c6ef372fe94f82bull);
}

Subspace random_subspace(const Ambient& amb, int dim, SplitRng& rng) {
  if (amb.kind() != AmbientKind::finite_extension)
    throw std::invalid_argument("random_subspace: finite extensions only");
  const std::uint32_t n = amb.ext_degree();
  const std::uint32_t q = amb.base().q();
  if (dim < 0 || dim > static_cast<int>(n))
    throw std::invalid_argument("impossible dimension " + std::to_string(dim));
  if (dim == 0) return zero_subspace(amb);
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    std::vector<std::vector<coeff_t>> rows(dim, std::vector<coeff_t>(n));
    for (auto& r : rows)
      for (auto& c : r) c = static_cast<coeff_t>(rng.below(q));
    rref_rows(amb.base(), rows, n);
    if (static_cast<int>(rows.size()) == dim)
      return Subspace{&amb, std::move(rows), poly_one()};
  }
  throw std::logic_error("random_subspace: rejection sampling stalled");
}

Subspace random_subspace_containing_one(const Ambient& amb, int dim,
                                        SplitRng& rng) {
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1 to contain 1");
  const std::uint32_t n = amb.ext_degree();
  const std::uint32_t q = amb.base().q();
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    std::vector<std::vector<coeff_t>> rows(dim, std::vector<coeff_t>(n, 0));
    rows[0][0] = 1;
    for (int i = 1; i < dim; ++i)
      for (auto& c : rows[i]) c = static_cast<coeff_t>(rng.below(q));
    rref_rows(amb.base(), rows, n);
    if (static_cast<int>(rows.size()) == dim)
      return Subspace{&amb, std::move(rows), poly_one()};
  }
  throw std::logic_error("random_subspace: rejection sampling stalled");
}

Subspace random_rational_subspace(const Ambient& amb, int dim,
                                  std::uint32_t max_gen_degree, SplitRng& rng,
                                  bool force_one, bool zero_constant_term) {
  if (amb.kind() != AmbientKind::rational_function_field)
    throw std::invalid_argument("random_rational_subspace: rational only");
  const std::uint32_t q = amb.base().q();
  if (dim < 0) throw std::invalid_argument("impossible dimension");
  if (dim == 0) return zero_subspace(amb);
  if (zero_constant_term && max_gen_degree < 1)
    throw std::invalid_argument("zero-constant generators need degree >= 1");
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    std::vector<Element> gens;
    if (force_one) gens.push_back(amb.one());
    int draws = 0;
    while (gens.size() < static_cast<std::size_t>(dim) &&
           ++draws < kMaxDraws) {
      std::uint32_t deg = zero_constant_term
                              ? 1 + rng.below(max_gen_degree)
                              : rng.below(max_gen_degree + 1);
      std::vector<coeff_t> cs(deg + 1, 0);
      for (auto& c : cs) c = static_cast<coeff_t>(rng.below(q));
      if (zero_constant_term) cs[0] = 0;
      Poly p = poly_trim(std::move(cs));
      if (p.is_zero()) continue;
      gens.push_back(amb.from_fraction(std::move(p), poly_one()));
    }
    if (gens.size() < static_cast<std::size_t>(dim)) continue;
    Subspace s = span(amb, gens);
    if (s.dim() == dim) return s;
  }
  throw std::logic_error("random_rational_subspace: rejection sampling stalled");
}

}  // namespace linadd

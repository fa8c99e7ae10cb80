#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "linadd/groupsets.hpp"
#include "linadd/random.hpp"
#include "linadd/report.hpp"
#include "linadd/subspace_enum.hpp"
#include "linadd/theorems.hpp"

namespace linadd {

struct CampaignResult {
  std::uint64_t instances = 0;
  std::uint64_t holds = 0;
  std::uint64_t degenerate = 0;
  std::uint64_t not_applicable = 0;
  std::uint64_t violated = 0;

  bool any_violated() const { return violated > 0; }
  std::string summary_line(const std::string& theorem,
                           const std::string& where) const;
};

struct CampaignOptions {
  bool exhaustive = false;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  // explicit instance source: one instance per line, whitespace-separated
  // fields in theorem order (compact subspaces, group sets, or B alone)
  std::vector<std::string> instance_lines;
  std::vector<int> dims;  // exact dims per side; empty = per-instance random
  bool contains_one = false;
  int jobs = 1;
  std::uint64_t ceiling = 10'000'000;  // exhaustive instance ceiling
  std::ostream* jsonl = nullptr;
};

// Runs fn over indices 0..count-1, accumulating verdict counts and writing
// one JSON line per instance in index order. The report stream is
// byte-identical for any job count: workers fill per-block slots, a single
// writer emits them in order.
CampaignResult run_indexed(
    std::uint64_t count, int jobs,
    const std::function<TheoremReport(std::uint64_t)>& fn,
    std::ostream* jsonl);

// Linear theorems over one ambient. Selectors: kneser-linear, olson-linear,
// prime-remark, full-product, torsion-free, abc, cor3, unique-rep.
CampaignResult run_linear_campaign(const Ambient& amb,
                                   const std::string& theorem,
                                   const CampaignOptions& opt);

// Set theorems over one group. Selectors: basic, kemperman-unique, olson,
// thol2, thol3, abc, abc-abelian, kneser.
CampaignResult run_group_campaign(const GroupTable& g,
                                  const std::string& theorem,
                                  const CampaignOptions& opt);

// Power chains <B^i>; exhaustive mode walks every subspace containing 1.
CampaignResult run_powers_campaign(const Ambient& amb, int stop,
                                   const CampaignOptions& opt);

// Witnesses achieving equality in a sharp bound. Selectors: torsion-free
// (monomial spans, r and s up to `limit`), power-chain-bound (every subspace
// whose stabilization exponent meets floor(2 dim L / dim B)).
std::vector<TheoremReport> sharpness_search(const std::string& theorem,
                                            const Ambient& amb, int limit);

// A reproducible (Cond)-valid instance; rejection-sampled from rng.
UniqueRepInstance random_unique_rep_instance(const Ambient& amb,
                                             SplitRng& rng);

}  // namespace linadd

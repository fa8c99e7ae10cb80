#include "linadd/campaign.hpp"

#include <atomic>
#include <cctype>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace linadd {

namespace {

constexpr int kInstanceAttempts = 4096;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > ~std::uint64_t{0} / b)
    throw std::overflow_error("instance count overflow");
  return a * b;
}

void check_ceiling(std::uint64_t count, const CampaignOptions& opt) {
  if (count > opt.ceiling)
    throw std::invalid_argument(
        "exhaustive instance count " + std::to_string(count) +
        " exceeds the ceiling " + std::to_string(opt.ceiling) +
        "; use random mode (--trials/--seed)");
}

std::vector<Subspace> filtered_subspaces(const Ambient& amb, int dim_filter,
                                         bool contains_one) {
  std::vector<Subspace> all = all_subspaces(amb);
  std::vector<Subspace> out;
  Element one = amb.one();
  for (auto& s : all) {
    if (dim_filter >= 0 && s.dim() != dim_filter) continue;
    if (contains_one && (s.is_zero() || !contains(s, one))) continue;
    out.push_back(std::move(s));
  }
  return out;
}

int pick_dim(const CampaignOptions& opt, std::size_t slot, SplitRng& rng,
             int max_dim) {
  if (slot < opt.dims.size()) return opt.dims[slot];
  return 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(max_dim)));
}

Subspace random_side(const Ambient& amb, const CampaignOptions& opt,
                     std::size_t slot, SplitRng& rng) {
  if (amb.kind() == AmbientKind::finite_extension) {
    int dim = pick_dim(opt, slot, rng, static_cast<int>(amb.ext_degree()));
    return opt.contains_one ? random_subspace_containing_one(amb, dim, rng)
                            : random_subspace(amb, dim, rng);
  }
  int dim = pick_dim(opt, slot, rng, 3);
  return random_rational_subspace(amb, dim, 5, rng, opt.contains_one);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos])))
      ++pos;
    std::size_t start = pos;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos])))
      ++pos;
    if (pos > start) fields.push_back(line.substr(start, pos - start));
  }
  return fields;
}

std::vector<std::string> fields_or_throw(const std::string& line,
                                         std::size_t arity) {
  auto fields = split_fields(line);
  if (fields.size() != arity)
    throw std::invalid_argument("instance line needs " + std::to_string(arity) +
                                " fields: " + line);
  return fields;
}

using PairCheck = TheoremReport (*)(const Subspace&, const Subspace&);

PairCheck pair_checker(const std::string& theorem) {
  if (theorem == "kneser-linear") return &check_kneser_linear;
  if (theorem == "olson-linear") return &olson_linear_report;
  if (theorem == "prime-remark") return &check_prime_remark;
  if (theorem == "full-product") return &check_full_product_with_duality;
  if (theorem == "torsion-free") return &check_torsion_free;
  if (theorem == "cor3") return &check_cor3;
  return nullptr;
}

}  // namespace

std::string CampaignResult::summary_line(const std::string& theorem,
                                         const std::string& where) const {
  return "theorem=" + theorem + " where=" + where +
         " instances=" + std::to_string(instances) +
         " holds=" + std::to_string(holds) +
         " degenerate=" + std::to_string(degenerate) +
         " not_applicable=" + std::to_string(not_applicable) +
         " violated=" + std::to_string(violated);
}

CampaignResult run_indexed(
    std::uint64_t count, int jobs,
    const std::function<TheoremReport(std::uint64_t)>& fn,
    std::ostream* jsonl) {
  CampaignResult res;
  res.instances = count;
  const std::uint64_t block = 4096;
  const int workers = std::max(1, jobs);
  for (std::uint64_t base = 0; base < count; base += block) {
    const std::uint64_t n = std::min(block, count - base);
    std::vector<Verdict> verdicts(n);
    std::vector<std::string> lines(jsonl ? n : 0);
    auto work_one = [&](std::uint64_t i) {
      TheoremReport rep = fn(base + i);
      verdicts[i] = rep.verdict;
      if (jsonl) lines[i] = rep.to_json_line();
    };
    if (workers == 1 || n == 1) {
      for (std::uint64_t i = 0; i < n; ++i) work_one(i);
    } else {
      std::atomic<std::uint64_t> cursor{0};
      std::exception_ptr err;
      std::mutex err_mu;
      auto body = [&]() {
        while (true) {
          std::uint64_t i = cursor.fetch_add(1);
          if (i >= n) return;
          try {
            work_one(i);
          } catch (...) {
            std::lock_guard<std::mutex> lock(err_mu);
            if (!err) err = std::current_exception();
            cursor.store(n);
            return;
          }
        }
      };
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(body);
      for (auto& t : pool) t.join();
      if (err) std::rethrow_exception(err);
    }
    for (std::uint64_t i = 0; i < n; ++i) {
      switch (verdicts[i]) {
        case Verdict::holds: ++res.holds; break;
        case Verdict::degenerate_branch: ++res.degenerate; break;
        case Verdict::not_applicable: ++res.not_applicable; break;
        case Verdict::violated: ++res.violated; break;
      }
    }
    if (jsonl)
      for (auto& line : lines) (*jsonl) << line << '\n';
  }
  return res;
}

UniqueRepInstance random_unique_rep_instance(const Ambient& amb,
                                             SplitRng& rng) {
  Element one = amb.one();
  for (int attempt = 0; attempt < kInstanceAttempts; ++attempt) {
    int da = static_cast<int>(rng.below(3));
    int db = static_cast<int>(rng.below(3));
    try {
      Subspace abar, bbar;
      if (amb.kind() == AmbientKind::finite_extension) {
        abar = random_subspace(amb, da, rng);
        bbar = random_subspace(amb, db, rng);
        if ((!abar.is_zero() && contains(abar, one)) ||
            (!bbar.is_zero() && contains(bbar, one)))
          continue;
      } else {
        abar = random_rational_subspace(amb, da, 4, rng, false, true);
        bbar = random_rational_subspace(amb, db, 4, rng, false, true);
      }
      return UniqueRepInstance::make(abar, bbar);
    } catch (const CondViolation&) {
      continue;
    }
  }
  throw std::logic_error("could not sample an admissible unique-rep instance");
}

CampaignResult run_linear_campaign(const Ambient& amb,
                                   const std::string& theorem,
                                   const CampaignOptions& opt) {
  const bool is_abc = theorem == "abc";
  const bool is_unique = theorem == "unique-rep";
  PairCheck pc = pair_checker(theorem);
  if (!pc && !is_abc && !is_unique)
    throw std::invalid_argument("unknown theorem selector: " + theorem);

  if (!opt.instance_lines.empty()) {
    const auto& lines = opt.instance_lines;
    return run_indexed(
        lines.size(), opt.jobs,
        [&](std::uint64_t idx) {
          if (is_unique) {
            auto f = fields_or_throw(lines[idx], 2);
            UniqueRepInstance inst = UniqueRepInstance::make(
                subspace_from_compact(amb, f[0]),
                subspace_from_compact(amb, f[1]));
            TheoremReport rep = check_unique_rep(inst);
            auto [fin, steps] = unique_rep_reduce(inst);
            rep.certificate = {{"reduce_steps", steps},
                               {"final_dims", {fin.a.dim(), fin.b.dim()}}};
            return rep;
          }
          if (is_abc) {
            auto f = fields_or_throw(lines[idx], 3);
            return check_abc_linear(subspace_from_compact(amb, f[0]),
                                    subspace_from_compact(amb, f[1]),
                                    subspace_from_compact(amb, f[2]));
          }
          auto f = fields_or_throw(lines[idx], 2);
          return pc(subspace_from_compact(amb, f[0]),
                    subspace_from_compact(amb, f[1]));
        },
        opt.jsonl);
  }

  if (opt.exhaustive) {
    if (is_unique)
      throw std::invalid_argument(
          "unique-rep has no exhaustive mode; use --trials/--seed");
    if (amb.kind() != AmbientKind::finite_extension)
      throw std::invalid_argument(
          "exhaustive campaigns need a finite extension; use --trials");
    int da = opt.dims.size() > 0 ? opt.dims[0] : -1;
    int db = opt.dims.size() > 1 ? opt.dims[1] : -1;
    std::vector<Subspace> sa = filtered_subspaces(amb, da, opt.contains_one);
    std::vector<Subspace> sb = filtered_subspaces(amb, db, opt.contains_one);
    if (!is_abc) {
      std::uint64_t count = checked_mul(sa.size(), sb.size());
      check_ceiling(count, opt);
      return run_indexed(
          count, opt.jobs,
          [&](std::uint64_t idx) {
            return pc(sa[idx / sb.size()], sb[idx % sb.size()]);
          },
          opt.jsonl);
    }
    int dc = opt.dims.size() > 2 ? opt.dims[2] : -1;
    std::vector<Subspace> sc;
    for (auto& s : all_subspaces_containing_one(amb)) {
      if (dc >= 0 && s.dim() != dc) continue;
      sc.push_back(std::move(s));
    }
    std::uint64_t count =
        checked_mul(checked_mul(sa.size(), sb.size()), sc.size());
    check_ceiling(count, opt);
    return run_indexed(
        count, opt.jobs,
        [&](std::uint64_t idx) {
          std::uint64_t ci = idx % sc.size();
          std::uint64_t rest = idx / sc.size();
          return check_abc_linear(sa[rest / sb.size()], sb[rest % sb.size()],
                                  sc[ci]);
        },
        opt.jsonl);
  }

  if (opt.trials == 0)
    throw std::invalid_argument("random campaigns need --trials");
  return run_indexed(
      opt.trials, opt.jobs,
      [&](std::uint64_t idx) {
        SplitRng rng(opt.seed, idx);
        if (is_unique) {
          UniqueRepInstance inst = random_unique_rep_instance(amb, rng);
          TheoremReport rep = check_unique_rep(inst);
          auto [fin, steps] = unique_rep_reduce(inst);
          rep.certificate = {{"reduce_steps", steps},
                             {"final_dims", {fin.a.dim(), fin.b.dim()}}};
          return rep;
        }
        Subspace a = random_side(amb, opt, 0, rng);
        Subspace b = random_side(amb, opt, 1, rng);
        if (is_abc) {
          Subspace c;
          if (amb.kind() == AmbientKind::finite_extension) {
            int dim = pick_dim(opt, 2, rng,
                               static_cast<int>(amb.ext_degree()));
            c = random_subspace_containing_one(amb, dim, rng);
          } else {
            int dim = pick_dim(opt, 2, rng, 3);
            c = random_rational_subspace(amb, dim, 5, rng, true);
          }
          return check_abc_linear(a, b, c);
        }
        return pc(a, b);
      },
      opt.jsonl);
}

CampaignResult run_group_campaign(const GroupTable& g,
                                  const std::string& theorem,
                                  const CampaignOptions& opt) {
  const std::uint32_t order = g.order();
  const std::uint64_t nonempty = (std::uint64_t{1} << order) - 1;
  const std::uint8_t id = g.identity();

  auto mask_with_id = [&](std::uint64_t rank) {
    // insert a set bit at position id
    std::uint64_t low = rank & ((std::uint64_t{1} << id) - 1);
    std::uint64_t high = rank >> id;
    return (high << (id + 1)) | (std::uint64_t{1} << id) | low;
  };

  enum class Kind { pair, triple, triple_subset, powers } kind;
  TheoremReport (*pair_fn)(const GSet&, const GSet&) = nullptr;
  if (theorem == "basic") { kind = Kind::pair; pair_fn = &check_basic; }
  else if (theorem == "kemperman-unique") { kind = Kind::pair; pair_fn = &check_kemperman_unique; }
  else if (theorem == "olson") { kind = Kind::pair; pair_fn = &olson_find_report; }
  else if (theorem == "thol2") { kind = Kind::pair; pair_fn = &check_thol2; }
  else if (theorem == "kneser") { kind = Kind::pair; pair_fn = &kneser_check; }
  else if (theorem == "thol3") { kind = Kind::powers; }
  else if (theorem == "abc") { kind = Kind::triple_subset; }
  else if (theorem == "abc-abelian") { kind = Kind::triple; }
  else throw std::invalid_argument("unknown theorem selector: " + theorem);

  auto thol3_all = [&](const GSet& b) {
    TheoremReport rep;
    rep.theorem = "thol3";
    rep.ambient = g.descriptor();
    rep.inputs["B"] = gset_to_string(b);
    rep.dims["B"] = b.size();
    nlohmann::ordered_json sizes = nlohmann::ordered_json::array();
    Verdict v = Verdict::degenerate_branch;
    for (int n = 1; n <= static_cast<int>(order); ++n) {
      TheoremReport one = check_thol3(b, n);
      sizes.push_back(one.dims["Bn"]);
      if (one.verdict == Verdict::violated) v = Verdict::violated;
      else if (one.verdict == Verdict::holds && v != Verdict::violated)
        v = Verdict::holds;
    }
    rep.verdict = v;
    rep.certificate = {{"power_sizes", std::move(sizes)}};
    return rep;
  };

  auto abc_fn = [&](const GSet& a, const GSet& b, const GSet& c) {
    if (kind == Kind::triple_subset) {
      if ((b.bits & ~c.bits) != 0) {
        TheoremReport rep;
        rep.theorem = theorem;
        rep.ambient = g.descriptor();
        rep.inputs["A"] = gset_to_string(a);
        rep.inputs["B"] = gset_to_string(b);
        rep.inputs["C"] = gset_to_string(c);
        rep.verdict = Verdict::not_applicable;
        return rep;
      }
      return check_abc_sets(a, b, c);
    }
    return check_abc_abelian(a, b, c);
  };

  if (!opt.instance_lines.empty()) {
    const auto& lines = opt.instance_lines;
    return run_indexed(
        lines.size(), opt.jobs,
        [&](std::uint64_t idx) {
          switch (kind) {
            case Kind::pair: {
              auto f = fields_or_throw(lines[idx], 2);
              return pair_fn(gset_parse(g, f[0]), gset_parse(g, f[1]));
            }
            case Kind::powers: {
              auto f = fields_or_throw(lines[idx], 1);
              return thol3_all(gset_parse(g, f[0]));
            }
            case Kind::triple:
            case Kind::triple_subset: {
              auto f = fields_or_throw(lines[idx], 3);
              return abc_fn(gset_parse(g, f[0]), gset_parse(g, f[1]),
                            gset_parse(g, f[2]));
            }
          }
          throw std::logic_error("unreachable");
        },
        opt.jsonl);
  }

  if (opt.exhaustive) {
    switch (kind) {
      case Kind::pair: {
        std::uint64_t count = checked_mul(nonempty, nonempty);
        check_ceiling(count, opt);
        return run_indexed(
            count, opt.jobs,
            [&](std::uint64_t idx) {
              GSet a{&g, idx / nonempty + 1};
              GSet b{&g, idx % nonempty + 1};
              return pair_fn(a, b);
            },
            opt.jsonl);
      }
      case Kind::powers: {
        check_ceiling(nonempty, opt);
        return run_indexed(
            nonempty, opt.jobs,
            [&](std::uint64_t idx) { return thol3_all(GSet{&g, idx + 1}); },
            opt.jsonl);
      }
      case Kind::triple:
      case Kind::triple_subset: {
        std::uint64_t csets = std::uint64_t{1} << (order - 1);  // contain id
        std::uint64_t count =
            checked_mul(checked_mul(nonempty, nonempty), csets);
        check_ceiling(count, opt);
        return run_indexed(
            count, opt.jobs,
            [&](std::uint64_t idx) {
              std::uint64_t ci = idx % csets;
              std::uint64_t rest = idx / csets;
              GSet a{&g, rest / nonempty + 1};
              GSet b{&g, rest % nonempty + 1};
              GSet c{&g, mask_with_id(ci)};
              return abc_fn(a, b, c);
            },
            opt.jsonl);
      }
    }
    throw std::logic_error("unreachable");
  }

  if (opt.trials == 0)
    throw std::invalid_argument("random campaigns need --trials");
  auto random_mask = [&](SplitRng& rng) {
    return rng.next_u64() % nonempty + 1;
  };
  return run_indexed(
      opt.trials, opt.jobs,
      [&](std::uint64_t idx) {
        SplitRng rng(opt.seed, idx);
        GSet a{&g, random_mask(rng)};
        GSet b{&g, random_mask(rng)};
        switch (kind) {
          case Kind::pair: return pair_fn(a, b);
          case Kind::powers: return thol3_all(b);
          case Kind::triple:
          case Kind::triple_subset: {
            GSet c{&g,
                   mask_with_id(rng.next_u64() %
                                (std::uint64_t{1} << (order - 1)))};
            if (kind == Kind::triple_subset) {
              // force B inside C so random instances stay applicable
              GSet b2{&g, b.bits & c.bits};
              if (b2.empty()) b2.bits = std::uint64_t{1} << g.identity();
              return abc_fn(a, b2, c);
            }
            return abc_fn(a, b, c);
          }
        }
        throw std::logic_error("unreachable");
      },
      opt.jsonl);
}

CampaignResult run_powers_campaign(const Ambient& amb, int stop,
                                   const CampaignOptions& opt) {
  if (!opt.instance_lines.empty()) {
    const auto& lines = opt.instance_lines;
    return run_indexed(
        lines.size(), opt.jobs,
        [&](std::uint64_t idx) {
          auto f = fields_or_throw(lines[idx], 1);
          return power_chain_report(subspace_from_compact(amb, f[0]), stop);
        },
        opt.jsonl);
  }
  if (opt.exhaustive) {
    if (amb.kind() != AmbientKind::finite_extension)
      throw std::invalid_argument("exhaustive power chains need gf:<q>:<n>");
    std::vector<Subspace> list = all_subspaces_containing_one(amb);
    if (!opt.dims.empty()) {
      std::vector<Subspace> f;
      for (auto& s : list)
        if (s.dim() == opt.dims[0]) f.push_back(std::move(s));
      list = std::move(f);
    }
    check_ceiling(list.size(), opt);
    return run_indexed(
        list.size(), opt.jobs,
        [&](std::uint64_t idx) { return power_chain_report(list[idx], stop); },
        opt.jsonl);
  }
  if (opt.trials == 0)
    throw std::invalid_argument("random campaigns need --trials");
  return run_indexed(
      opt.trials, opt.jobs,
      [&](std::uint64_t idx) {
        SplitRng rng(opt.seed, idx);
        Subspace b;
        if (amb.kind() == AmbientKind::finite_extension) {
          int dim = pick_dim(opt, 0, rng, static_cast<int>(amb.ext_degree()));
          b = random_subspace_containing_one(amb, dim, rng);
        } else {
          int dim = pick_dim(opt, 0, rng, 3);
          b = random_rational_subspace(amb, dim, 4, rng, true);
        }
        return power_chain_report(b, stop);
      },
      opt.jsonl);
}

std::vector<TheoremReport> sharpness_search(const std::string& theorem,
                                            const Ambient& amb, int limit) {
  std::vector<TheoremReport> witnesses;
  if (theorem == "torsion-free") {
    if (amb.kind() != AmbientKind::rational_function_field)
      throw std::invalid_argument("torsion-free sharpness needs ratfun:<q>:<d>");
    if (limit < 1) throw std::invalid_argument("limit must be >= 1");
    for (int r = 1; r <= limit; ++r)
      for (int s = 1; s <= limit; ++s) {
        std::vector<Element> ga, gb;
        for (int i = 0; i < r; ++i)
          ga.push_back(amb.from_fraction(poly_monomial(1, i), poly_one()));
        for (int i = 0; i < s; ++i)
          gb.push_back(amb.from_fraction(poly_monomial(1, i), poly_one()));
        Subspace a = span(amb, ga), b = span(amb, gb);
        Subspace ab = product_span(a, b);
        if (ab.dim() != r + s - 1) continue;  // not a witness
        TheoremReport rep;
        rep.theorem = "torsion-free-sharp";
        rep.ambient = amb.descriptor();
        rep.inputs["A"] = subspace_to_compact(a);
        rep.inputs["B"] = subspace_to_compact(b);
        rep.dims = {{"A", r}, {"B", s}, {"AB", ab.dim()}};
        rep.bound = r + s - 1;
        rep.verdict = Verdict::holds;
        rep.certificate = {{"family", "monomial-span"}};
        witnesses.push_back(std::move(rep));
      }
    return witnesses;
  }
  if (theorem == "power-chain-bound") {
    if (amb.kind() != AmbientKind::finite_extension)
      throw std::invalid_argument("power-chain sharpness needs gf:<q>:<n>");
    for (const Subspace& b : all_subspaces(amb)) {
      if (b.is_zero()) continue;
      PowerChainReport rep = power_chain(b);
      if (!rep.stabilization_n || !rep.bound ||
          *rep.stabilization_n != *rep.bound)
        continue;
      TheoremReport w;
      w.theorem = "power-chain-sharp";
      w.ambient = amb.descriptor();
      w.inputs["B"] = subspace_to_compact(b);
      w.dims = {{"B", b.dim()}, {"n", *rep.stabilization_n}};
      w.bound = *rep.bound;
      w.verdict = Verdict::holds;
      w.certificate = {{"normalized", rep.normalized},
                       {"chain", rep.dims}};
      witnesses.push_back(std::move(w));
    }
    return witnesses;
  }
  throw std::invalid_argument("unknown sharpness selector: " + theorem);
}

}  // namespace linadd

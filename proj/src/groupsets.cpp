#include "linadd/groupsets.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace linadd {

namespace {

void ensure_same_group(const GSet& a, const GSet& b) {
  if (a.g == nullptr || b.g == nullptr)
    throw std::invalid_argument("set without group");
  if (a.g != b.g && a.g->descriptor() != b.g->descriptor())
    throw std::invalid_argument("mixed groups");
}

std::uint64_t full_mask(std::uint32_t order) {
  return order == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order) - 1;
}

TheoremReport set_report(const char* theorem, const GSet& a) {
  TheoremReport r;
  r.theorem = theorem;
  r.ambient = a.g->descriptor();
  return r;
}

// lexicographic rank helpers for the symmetric group
std::vector<std::vector<std::uint8_t>> all_permutations(std::uint32_t n) {
  std::vector<std::uint8_t> p(n);
  for (std::uint32_t i = 0; i < n; ++i) p[i] = static_cast<std::uint8_t>(i);
  std::vector<std::vector<std::uint8_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

void GroupTable::finalize() {
  if (order_ == 0 || order_ > kMaxOrder)
    throw std::invalid_argument("group order must be in 1..64");
  if (table_.size() != static_cast<std::size_t>(order_) * order_)
    throw std::invalid_argument("multiplication table has wrong size");
  for (std::uint8_t v : table_)
    if (v >= order_) throw std::invalid_argument("table entry out of range");
  // identity
  bool found = false;
  for (std::uint32_t e = 0; e < order_ && !found; ++e) {
    bool ok = true;
    for (std::uint32_t x = 0; x < order_; ++x)
      ok &= mul(static_cast<std::uint8_t>(e), static_cast<std::uint8_t>(x)) == x &&
            mul(static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(e)) == x;
    if (ok) {
      id_ = static_cast<std::uint8_t>(e);
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("table has no identity");
  // inverses
  inv_.assign(order_, 0);
  for (std::uint32_t x = 0; x < order_; ++x) {
    bool ok = false;
    for (std::uint32_t y = 0; y < order_; ++y) {
      if (mul(static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(y)) == id_ &&
          mul(static_cast<std::uint8_t>(y), static_cast<std::uint8_t>(x)) == id_) {
        inv_[x] = static_cast<std::uint8_t>(y);
        ok = true;
        break;
      }
    }
    if (!ok) throw std::invalid_argument("table element has no inverse");
  }
  // full associativity sweep, at most 64^3 products
  for (std::uint32_t a = 0; a < order_; ++a)
    for (std::uint32_t b = 0; b < order_; ++b)
      for (std::uint32_t c = 0; c < order_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw std::invalid_argument("table is not associative");
  abelian_ = true;
  for (std::uint32_t a = 0; a < order_ && abelian_; ++a)
    for (std::uint32_t b = 0; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) {
        abelian_ = false;
        break;
      }
}

GroupTable GroupTable::cyclic(std::uint32_t n) {
  GroupTable g;
  g.order_ = n;
  g.table_.resize(n * n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      g.table_[a * n + b] = static_cast<std::uint8_t>((a + b) % n);
  g.descriptor_ = "cyclic:" + std::to_string(n);
  g.finalize();
  return g;
}

GroupTable GroupTable::dihedral(std::uint32_t n) {
  if (n < 1) throw std::invalid_argument("dihedral index must be >= 1");
  std::uint32_t order = 2 * n;
  GroupTable g;
  g.order_ = order;
  g.table_.resize(order * order);
  // indices 0..n-1: rotations; n..2n-1: reflections
  auto idx = [n](bool refl, std::uint32_t a) {
    return static_cast<std::uint8_t>(a % n + (refl ? n : 0));
  };
  for (std::uint32_t i = 0; i < order; ++i) {
    bool ri = i >= n;
    std::uint32_t ai = ri ? i - n : i;
    for (std::uint32_t j = 0; j < order; ++j) {
      bool rj = j >= n;
      std::uint32_t aj = rj ? j - n : j;
      std::uint8_t prod;
      if (!ri && !rj) prod = idx(false, ai + aj);
      else if (!ri && rj) prod = idx(true, ai + aj);
      else if (ri && !rj) prod = idx(true, ai + n - aj % n);
      else prod = idx(false, ai + n - aj % n);
      g.table_[i * order + j] = prod;
    }
  }
  g.descriptor_ = "dihedral:" + std::to_string(n);
  g.finalize();
  return g;
}

GroupTable GroupTable::symmetric(std::uint32_t n) {
  if (n < 1 || n > 4)
    throw std::invalid_argument("symmetric groups supported for n <= 4");
  auto perms = all_permutations(n);
  std::uint32_t order = static_cast<std::uint32_t>(perms.size());
  auto rank = [&](const std::vector<std::uint8_t>& p) {
    for (std::uint32_t i = 0; i < order; ++i)
      if (perms[i] == p) return static_cast<std::uint8_t>(i);
    throw std::logic_error("permutation rank failure");
  };
  GroupTable g;
  g.order_ = order;
  g.table_.resize(order * order);
  for (std::uint32_t i = 0; i < order; ++i)
    for (std::uint32_t j = 0; j < order; ++j) {
      std::vector<std::uint8_t> comp(n);
      for (std::uint32_t x = 0; x < n; ++x) comp[x] = perms[i][perms[j][x]];
      g.table_[i * order + j] = rank(comp);
    }
  g.descriptor_ = "sym:" + std::to_string(n);
  g.finalize();
  return g;
}

GroupTable GroupTable::product(const GroupTable& g1, const GroupTable& g2) {
  std::uint32_t order = g1.order() * g2.order();
  GroupTable g;
  g.order_ = order;
  g.table_.resize(order * order);
  std::uint32_t o2 = g2.order();
  for (std::uint32_t i = 0; i < order; ++i)
    for (std::uint32_t j = 0; j < order; ++j) {
      std::uint8_t a = g1.mul(static_cast<std::uint8_t>(i / o2),
                              static_cast<std::uint8_t>(j / o2));
      std::uint8_t b = g2.mul(static_cast<std::uint8_t>(i % o2),
                              static_cast<std::uint8_t>(j % o2));
      g.table_[i * order + j] = static_cast<std::uint8_t>(a * o2 + b);
    }
  g.descriptor_ = "prod:" + g1.descriptor() + "," + g2.descriptor();
  g.finalize();
  return g;
}

GroupTable GroupTable::from_table(std::uint32_t order,
                                  std::vector<std::uint8_t> table,
                                  std::string descriptor) {
  GroupTable g;
  g.order_ = order;
  g.table_ = std::move(table);
  g.descriptor_ = std::move(descriptor);
  g.finalize();
  return g;
}

GroupTable GroupTable::parse(const std::string& descriptor) {
  auto bad = [&]() -> GroupTable {
    throw std::invalid_argument("malformed group descriptor: " + descriptor);
  };
  std::size_t colon = descriptor.find(':');
  if (colon == std::string::npos) return bad();
  std::string kind = descriptor.substr(0, colon);
  std::string rest = descriptor.substr(colon + 1);
  if (kind == "cyclic") return cyclic(std::stoul(rest));
  if (kind == "dihedral") return dihedral(std::stoul(rest));
  if (kind == "sym") return symmetric(std::stoul(rest));
  if (kind == "prod") {
    std::size_t comma = rest.find(',');
    if (comma == std::string::npos) return bad();
    return product(parse(rest.substr(0, comma)), parse(rest.substr(comma + 1)));
  }
  if (kind == "table") {
    std::ifstream in(rest);
    if (!in) throw std::invalid_argument("cannot open table file: " + rest);
    std::uint32_t order = 0;
    in >> order;
    std::vector<std::uint8_t> table;
    table.reserve(static_cast<std::size_t>(order) * order);
    std::uint32_t v;
    while (in >> v) table.push_back(static_cast<std::uint8_t>(v));
    return from_table(order, std::move(table), "table:" + rest);
  }
  return bad();
}

GSet make_gset(const GroupTable& g, std::uint64_t bits) {
  if (bits & ~full_mask(g.order()))
    throw std::invalid_argument("set bits outside the group");
  return GSet{&g, bits};
}

GSet gset_parse(const GroupTable& g, const std::string& text) {
  std::uint64_t bits = 0;
  if (!text.empty()) {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      std::uint32_t i = std::stoul(tok);
      if (i >= g.order()) throw std::invalid_argument("element out of range");
      bits |= std::uint64_t{1} << i;
    }
  }
  return GSet{&g, bits};
}

std::string gset_to_string(const GSet& s) {
  std::string out;
  for (std::uint32_t i = 0; i < s.g->order(); ++i) {
    if (!s.test(static_cast<std::uint8_t>(i))) continue;
    if (!out.empty()) out += ',';
    out += std::to_string(i);
  }
  return out;
}

GSet product_set(const GSet& a, const GSet& b) {
  ensure_same_group(a, b);
  std::uint64_t bits = 0;
  for (std::uint64_t x = a.bits; x; x &= x - 1) {
    std::uint8_t i = static_cast<std::uint8_t>(__builtin_ctzll(x));
    for (std::uint64_t y = b.bits; y; y &= y - 1) {
      std::uint8_t j = static_cast<std::uint8_t>(__builtin_ctzll(y));
      bits |= std::uint64_t{1} << a.g->mul(i, j);
    }
  }
  return GSet{a.g, bits};
}

GSet set_inverse(const GSet& a) {
  std::uint64_t bits = 0;
  for (std::uint64_t x = a.bits; x; x &= x - 1)
    bits |= std::uint64_t{1}
            << a.g->inv(static_cast<std::uint8_t>(__builtin_ctzll(x)));
  return GSet{a.g, bits};
}

GSet power_set(const GSet& b, int n) {
  if (n < 0) throw std::invalid_argument("negative set power");
  GSet acc{b.g, std::uint64_t{1} << b.g->identity()};
  for (int i = 0; i < n; ++i) acc = product_set(acc, b);
  return acc;
}

std::pair<GSet, GSet> set_kemperman_transform(const GSet& a, const GSet& b,
                                              std::uint8_t x,
                                              SetTransformVariant variant) {
  ensure_same_group(a, b);
  if (a.empty() || b.empty())
    throw std::invalid_argument("transform needs nonempty sets");
  const GroupTable& g = *a.g;
  GSet xs{&g, std::uint64_t{1} << x};
  GSet xinv{&g, std::uint64_t{1} << g.inv(x)};
  if (variant == SetTransformVariant::up_a) {
    GSet ax = product_set(a, xs);
    GSet xinv_b = product_set(xinv, b);
    return {GSet{&g, a.bits | ax.bits}, GSet{&g, b.bits & xinv_b.bits}};
  }
  GSet axinv = product_set(a, xinv);
  GSet xb = product_set(xs, b);
  return {GSet{&g, a.bits & axinv.bits}, GSet{&g, b.bits | xb.bits}};
}

std::vector<GSet> subgroups(const GroupTable& g) {
  std::set<std::uint64_t> found;
  auto closure = [&g](std::uint64_t seed) {
    std::uint64_t bits = seed | (std::uint64_t{1} << g.identity());
    while (true) {
      std::uint64_t next = bits;
      for (std::uint64_t x = bits; x; x &= x - 1) {
        std::uint8_t i = static_cast<std::uint8_t>(__builtin_ctzll(x));
        for (std::uint64_t y = bits; y; y &= y - 1) {
          std::uint8_t j = static_cast<std::uint8_t>(__builtin_ctzll(y));
          next |= std::uint64_t{1} << g.mul(i, j);
        }
      }
      if (next == bits) return bits;
      bits = next;
    }
  };
  for (std::uint32_t x = 0; x < g.order(); ++x)
    found.insert(closure(std::uint64_t{1} << x));
  while (true) {
    std::vector<std::uint64_t> cur(found.begin(), found.end());
    bool grew = false;
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j)
        grew |= found.insert(closure(cur[i] | cur[j])).second;
    if (!grew) break;
  }
  std::vector<GSet> out;
  for (std::uint64_t bits : found) out.push_back(GSet{&g, bits});
  std::sort(out.begin(), out.end(), [](const GSet& a, const GSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits < b.bits;
  });
  return out;
}

OlsonSetCertificate olson_find(const GSet& a, const GSet& b) {
  ensure_same_group(a, b);
  if (a.empty() || b.empty())
    throw std::invalid_argument("olson_find needs nonempty sets");
  const GroupTable& g = *a.g;
  GSet ab = product_set(a, b);
  for (const GSet& h : subgroups(g)) {
    for (int side = 0; side < 2; ++side) {
      bool left = side == 0;
      std::uint64_t s = 0;
      for (std::uint32_t x = 0; x < g.order(); ++x) {
        GSet xs{&g, std::uint64_t{1} << x};
        GSet coset = left ? product_set(h, xs) : product_set(xs, h);
        if ((coset.bits & ~ab.bits) == 0) s |= coset.bits;
      }
      GSet sset{&g, s};
      if (s != 0 && sset.size() >= a.size() + b.size() - h.size())
        return OlsonSetCertificate{sset, h, left};
    }
  }
  throw std::logic_error("olson_find exhausted the subgroup lattice");
}

TheoremReport check_basic(const GSet& a, const GSet& b) {
  ensure_same_group(a, b);
  TheoremReport r = set_report("basic", a);
  r.inputs["A"] = gset_to_string(a);
  r.inputs["B"] = gset_to_string(b);
  r.dims["A"] = a.size();
  r.dims["B"] = b.size();
  int order = static_cast<int>(a.g->order());
  r.bound = order;
  if (a.empty() || b.empty() || a.size() + b.size() <= order) {
    r.verdict = Verdict::not_applicable;
    return r;
  }
  GSet ab = product_set(a, b);
  r.dims["AB"] = ab.size();
  r.verdict = ab.bits == full_mask(a.g->order()) ? Verdict::holds
                                                 : Verdict::violated;
  return r;
}

TheoremReport check_kemperman_unique(const GSet& a, const GSet& b) {
  ensure_same_group(a, b);
  TheoremReport r = set_report("kemperman-unique", a);
  r.inputs["A"] = gset_to_string(a);
  r.inputs["B"] = gset_to_string(b);
  r.dims["A"] = a.size();
  r.dims["B"] = b.size();
  if (a.empty() || b.empty()) {
    r.verdict = Verdict::not_applicable;
    return r;
  }
  std::vector<int> reps(a.g->order(), 0);
  for (std::uint64_t x = a.bits; x; x &= x - 1) {
    std::uint8_t i = static_cast<std::uint8_t>(__builtin_ctzll(x));
    for (std::uint64_t y = b.bits; y; y &= y - 1)
      ++reps[a.g->mul(i, static_cast<std::uint8_t>(__builtin_ctzll(y)))];
  }
  int unique_c = -1;
  for (std::size_t c = 0; c < reps.size(); ++c)
    if (reps[c] == 1) {
      unique_c = static_cast<int>(c);
      break;
    }
  GSet ab = product_set(a, b);
  r.dims["AB"] = ab.size();
  r.bound = a.size() + b.size() - 1;
  if (unique_c < 0) {
    r.verdict = Verdict::not_applicable;
    return r;
  }
  r.certificate = {{"unique_product", unique_c}};
  r.verdict = ab.size() >= r.bound ? Verdict::holds : Verdict::violated;
  return r;
}

TheoremReport olson_find_report(const GSet& a, const GSet& b) {
  TheoremReport r = set_report("olson", a);
  r.inputs["A"] = gset_to_string(a);
  r.inputs["B"] = gset_to_string(b);
  r.dims["A"] = a.size();
  r.dims["B"] = b.size();
  if (a.empty() || b.empty()) {
    r.verdict = Verdict::not_applicable;
    return r;
  }
  OlsonSetCertificate cert = olson_find(a, b);
  GSet ab = product_set(a, b);
  r.dims["AB"] = ab.size();
  r.dims["S"] = cert.s.size();
  r.dims["H"] = cert.h.size();
  r.bound = a.size() + b.size() - cert.h.size();
  bool stable = cert.left
                    ? product_set(cert.h, cert.s).bits == cert.s.bits
                    : product_set(cert.s, cert.h).bits == cert.s.bits;
  bool inside = (cert.s.bits & ~ab.bits) == 0;
  r.verdict = (stable && inside && ab.size() >= cert.s.size() &&
               cert.s.size() >= r.bound)
                  ? Verdict::holds
                  : Verdict::violated;
  r.certificate = {{"S", gset_to_string(cert.s)},
                   {"H", gset_to_string(cert.h)},
                   {"side", cert.left ? "left" : "right"}};
  return r;
}

TheoremReport check_thol2(const GSet& a, const GSet& b) {
  ensure_same_group(a, b);
  TheoremReport r = set_report("thol2", a);
  r.inputs["A"] = gset_to_string(a);
  r.inputs["B"] = gset_to_string(b);
  r.dims["A"] = a.size();
  r.dims["B"] = b.size();
  if (a.empty() || b.empty() || !b.test(a.g->identity())) {
    r.verdict = Verdict::not_applicable;
    return r;
  }
  GSet ab = product_set(a, b);
  GSet ab2 = product_set(ab, b);
  r.dims["AB"] = ab.size();
  r.dims["AB2"] = ab2.size();
  if (ab2.bits == ab.bits) {
    r.verdict = Verdict::degenerate_branch;
    return r;
  }
  // |AB| >= |A| + |B|/2, compared exactly via doubled integers
  r.verdict = 2 * ab.size() >= 2 * a.size() + b.size() ? Verdict::holds
                                                       : Verdict::violated;
  return r;
}

TheoremReport check_thol3(const GSet& b, int n) {
  TheoremReport r = set_report("thol3", b);
  r.inputs["B"] = gset_to_string(b);
  r.inputs["n"] = n;
  r.dims["B"] = b.size();
  if (b.empty() || n < 1) {
    r.verdict = Verdict::not_applicable;
    return r;
  }
  GSet bn1 = power_set(b, n - 1);
  GSet bn = product_set(bn1, b);
  GSet bn_next = product_set(bn, b);
  r.dims["Bn_minus_1"] = bn1.size();
  r.dims["Bn"] = bn.size();
  r.dims["Bn_plus_1"] = bn_next.size();
  if (bn.size() == bn_next.size()) {
    r.verdict = Verdict::degenerate_branch;
    return r;
  }
  r.verdict = 2 * bn.size() >= 2 * bn1.size() + b.size() ? Verdict::holds
                                                         : Verdict::violated;
  return r;
}

namespace {

TheoremReport abc_report(const char* theorem, const GSet& a, const GSet& b,
                         const GSet& c) {
  TheoremReport r = set_report(theorem, a);
  r.inputs["A"] = gset_to_string(a);
  r.inputs["B"] = gset_to_string(b);
  r.inputs["C"] = gset_to_string(c);
  r.dims["A"] = a.size();
  r.dims["B"] = b.size();
  r.dims["C"] = c.size();
  GSet ab = product_set(a, b);
  GSet abc = product_set(ab, c);
  r.dims["AB"] = ab.size();
  r.dims["ABC"] = abc.size();
  r.bound = a.size() + b.size();
  if (abc.bits == ab.bits)
    r.verdict = Verdict::degenerate_branch;
  else
    r.verdict = abc.size() >= r.bound ? Verdict::holds : Verdict::violated;
  return r;
}

}  // namespace

TheoremReport check_abc_sets(const GSet& a, const GSet& b, const GSet& c) {
  ensure_same_group(a, b);
  ensure_same_group(b, c);
  if (a.empty() || b.empty())
    throw std::invalid_argument("abc needs nonempty A, B");
  if ((b.bits & ~c.bits) != 0)
    throw std::invalid_argument("abc needs B inside C");
  if (!c.test(a.g->identity()))
    throw std::invalid_argument("abc needs 1 in C");
  return abc_report("abc", a, b, c);
}

TheoremReport check_abc_abelian(const GSet& a, const GSet& b, const GSet& c) {
  ensure_same_group(a, b);
  ensure_same_group(b, c);
  if (!a.g->abelian())
    throw std::invalid_argument("abc-abelian needs an abelian group");
  if (a.empty() || b.empty())
    throw std::invalid_argument("abc-abelian needs nonempty A, B");
  if (!c.test(a.g->identity()))
    throw std::invalid_argument("abc-abelian needs 1 in C");
  return abc_report("abc-abelian", a, b, c);
}

TheoremReport kneser_check(const GSet& a, const GSet& b) {
  ensure_same_group(a, b);
  if (!a.g->abelian())
    throw std::invalid_argument("kneser needs an abelian group");
  TheoremReport r = set_report("kneser", a);
  r.inputs["A"] = gset_to_string(a);
  r.inputs["B"] = gset_to_string(b);
  r.dims["A"] = a.size();
  r.dims["B"] = b.size();
  if (a.empty() || b.empty()) {
    r.verdict = Verdict::not_applicable;
    return r;
  }
  const GroupTable& g = *a.g;
  GSet ab = product_set(a, b);
  std::uint64_t h = 0;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    GSet xs{&g, std::uint64_t{1} << x};
    if (product_set(xs, ab).bits == ab.bits) h |= std::uint64_t{1} << x;
  }
  GSet hs{&g, h};
  GSet ah = product_set(a, hs);
  GSet bh = product_set(b, hs);
  r.dims["AB"] = ab.size();
  r.dims["H"] = hs.size();
  r.dims["AH"] = ah.size();
  r.dims["BH"] = bh.size();
  r.bound = ah.size() + bh.size() - hs.size();
  r.verdict = ab.size() >= r.bound ? Verdict::holds : Verdict::violated;
  r.certificate = {{"H", gset_to_string(hs)}};
  return r;
}

}  // namespace linadd

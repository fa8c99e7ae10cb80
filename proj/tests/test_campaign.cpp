#include <sstream>

#include <stdexcept>

#include "doctest.h"
#include "linadd/campaign.hpp"

using namespace linadd;

TEST_CASE("splittable rng is deterministic and stream-keyed") {
  SplitRng a(42, 7), b(42, 7), c(42, 8);
  for (int i = 0; i < 100; ++i) {
    std::uint64_t v = a.next_u64();
    CHECK(v == b.next_u64());
  }
  bool differs = false;
  SplitRng a2(42, 7);
  for (int i = 0; i < 10; ++i) differs |= a2.next_u64() != c.next_u64();
  CHECK(differs);
}

TEST_CASE("random subspaces hit the requested dimension") {
  Ambient amb = Ambient::parse("gf:2:4");
  SplitRng rng(9, 0);
  CHECK(random_subspace(amb, 0, rng).is_zero());
  CHECK(equals(random_subspace(amb, 4, rng), full_space(amb)));
  for (int iter = 0; iter < 50; ++iter) {
    int dim = 1 + static_cast<int>(rng.below(4));
    CHECK(random_subspace(amb, dim, rng).dim() == dim);
    Subspace s1 = random_subspace_containing_one(amb, dim, rng);
    CHECK(s1.dim() == dim);
    CHECK(contains(s1, amb.one()));
  }
  CHECK_THROWS_AS(random_subspace(amb, 5, rng), std::invalid_argument);

  // same (seed, stream) reproduces the same subspace
  SplitRng r1(123, 5), r2(123, 5);
  CHECK(equals(random_subspace(amb, 2, r1), random_subspace(amb, 2, r2)));
}

TEST_CASE("exhaustive campaign counts") {
  Ambient amb = Ambient::parse("gf:2:2");
  CampaignOptions opt;
  opt.exhaustive = true;
  CampaignResult res = run_linear_campaign(amb, "kneser-linear", opt);
  CHECK(res.instances == 25);  // (1 + 3 + 1)^2 subspace pairs
  CHECK(res.violated == 0);
  CHECK(res.holds == 16);
  CHECK(res.not_applicable == 9);

  CampaignOptions dimmed = opt;
  dimmed.dims = {1, 1};
  CHECK(run_linear_campaign(amb, "kneser-linear", dimmed).instances == 9);
}

TEST_CASE("exhaustive ceiling trips") {
  Ambient amb = Ambient::parse("gf:2:6");
  CampaignOptions opt;
  opt.exhaustive = true;
  opt.ceiling = 1000;  // 2825^2 pairs exceed this
  CHECK_THROWS_AS(run_linear_campaign(amb, "kneser-linear", opt),
                  std::invalid_argument);
}

TEST_CASE("random campaigns are byte-identical across runs and jobs") {
  Ambient amb = Ambient::parse("gf:2:4");
  auto run = [&](int jobs) {
    std::ostringstream out;
    CampaignOptions opt;
    opt.trials = 60;
    opt.seed = 7;
    opt.jobs = jobs;
    opt.jsonl = &out;
    CampaignResult res = run_linear_campaign(amb, "olson-linear", opt);
    CHECK(res.violated == 0);
    return out.str();
  };
  std::string first = run(1);
  CHECK(first == run(1));
  CHECK(first == run(4));
  CHECK(first.find("\"theorem\":\"olson-linear\"") != std::string::npos);

  GroupTable g = GroupTable::parse("cyclic:6");
  auto grun = [&](int jobs) {
    std::ostringstream out;
    CampaignOptions opt;
    opt.trials = 120;
    opt.seed = 3;
    opt.jobs = jobs;
    opt.jsonl = &out;
    CampaignResult res = run_group_campaign(g, "olson", opt);
    CHECK(res.violated == 0);
    return out.str();
  };
  std::string gfirst = grun(1);
  CHECK(gfirst == grun(3));
}

TEST_CASE("report json carries the fixed field order") {
  Ambient amb = Ambient::parse("gf:2:2");
  Subspace k = unit_subspace(amb);
  TheoremReport rep = check_kneser_linear(k, k);
  std::string line = rep.to_json_line();
  CHECK(line.rfind("{\"theorem\":", 0) == 0);
  auto j = nlohmann::ordered_json::parse(line);
  std::vector<std::string> fields;
  for (auto it = j.begin(); it != j.end(); ++it) fields.push_back(it.key());
  CHECK(fields == std::vector<std::string>{"theorem", "ambient", "inputs",
                                           "dims", "bound", "verdict",
                                           "certificate"});
}

TEST_CASE("group campaigns, exhaustive smoke") {
  GroupTable z5 = GroupTable::parse("cyclic:5");
  CampaignOptions opt;
  opt.exhaustive = true;
  for (const char* theorem :
       {"basic", "kemperman-unique", "olson", "thol2", "thol3", "kneser"}) {
    CampaignResult res = run_group_campaign(z5, theorem, opt);
    CHECK(res.violated == 0);
  }
  CampaignResult abc = run_group_campaign(z5, "abc", opt);
  CHECK(abc.instances == 31ull * 31 * 16);
  CHECK(abc.violated == 0);
}

TEST_CASE("powers campaign over subspaces containing one") {
  Ambient amb = Ambient::parse("gf:2:4");
  CampaignOptions opt;
  opt.exhaustive = true;
  CampaignResult res = run_powers_campaign(amb, -1, opt);
  CHECK(res.instances == 16);
  CHECK(res.holds == 16);
  CHECK(res.violated == 0);
}

TEST_CASE("unique-rep random campaign") {
  Ambient amb = Ambient::parse("gf:2:4");
  CampaignOptions opt;
  opt.trials = 40;
  opt.seed = 11;
  CampaignResult res = run_linear_campaign(amb, "unique-rep", opt);
  CHECK(res.instances == 40);
  CHECK(res.holds == 40);
}

TEST_CASE("explicit instance files drive campaigns") {
  Ambient amb = Ambient::parse("gf:2:4");
  CampaignOptions opt;
  opt.instance_lines = {"1,0,0,0;0,1,0,0 1,0,0,0;0,1,0,0",
                        "1,0,0,0 0,1,0,0;0,0,1,0"};
  CampaignResult res = run_linear_campaign(amb, "kneser-linear", opt);
  CHECK(res.instances == 2);
  CHECK(res.holds == 2);

  CampaignOptions gopt;
  gopt.instance_lines = {"0,1 0,1", "0 0,1,2"};
  GroupTable z6 = GroupTable::parse("cyclic:6");
  CampaignResult gres = run_group_campaign(z6, "olson", gopt);
  CHECK(gres.instances == 2);
  CHECK(gres.violated == 0);

  CampaignOptions popt;
  popt.instance_lines = {"1,0,0,0;0,1,0,0"};
  CampaignResult pres = run_powers_campaign(amb, -1, popt);
  CHECK(pres.instances == 1);
  CHECK(pres.holds == 1);

  CampaignOptions bad;
  bad.instance_lines = {"1,0,0,0"};
  CHECK_THROWS_AS(run_linear_campaign(amb, "kneser-linear", bad),
                  std::invalid_argument);
}

TEST_CASE("sharpness searches find the expected families") {
  Ambient rat = Ambient::parse("ratfun:2:64");
  auto tf = sharpness_search("torsion-free", rat, 4);
  CHECK(tf.size() == 16);  // every monomial pair up to the limit is sharp

  Ambient gf16 = Ambient::parse("gf:2:4");
  auto pc = sharpness_search("power-chain-bound", gf16, 0);
  CHECK(!pc.empty());
  bool complement_witness = false;
  for (const auto& w : pc)
    if (w.dims["B"] == 3) complement_witness = true;
  CHECK(complement_witness);

  CHECK_THROWS_AS(sharpness_search("nope", gf16, 1), std::invalid_argument);
}

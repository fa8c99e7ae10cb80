#include <fstream>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "linadd/campaign.hpp"
#include "linadd/transform.hpp"

namespace {

using namespace linadd;

struct CommonFlags {
  std::string ambient;
  std::string theorem;
  bool exhaustive = false;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<int> dims;
  bool contains_one = false;
  int jobs = 1;
  std::string json_path;
  std::string instances_path;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool with_theorem = true) {
  if (with_theorem)
    cmd->add_option("--theorem", f.theorem, "theorem selector")->required();
  cmd->add_flag("--exhaustive", f.exhaustive, "walk the whole instance space");
  cmd->add_option("--trials", f.trials, "random instance count");
  cmd->add_option("--seed", f.seed, "random seed");
  cmd->add_option("--dims", f.dims, "exact dimensions per side")
      ->delimiter(',');
  cmd->add_flag("--contains-one", f.contains_one, "force 1 into each subspace");
  cmd->add_option("--jobs", f.jobs, "worker threads");
  cmd->add_option("--json", f.json_path, "JSON-lines report path");
  cmd->add_option("--instances", f.instances_path,
                  "file with one explicit instance per line");
}

CampaignOptions to_options(const CommonFlags& f, std::ofstream& json_out) {
  CampaignOptions opt;
  opt.exhaustive = f.exhaustive;
  opt.trials = f.trials;
  opt.seed = f.seed;
  opt.dims = f.dims;
  opt.contains_one = f.contains_one;
  opt.jobs = f.jobs;
  if (!f.instances_path.empty()) {
    std::ifstream in(f.instances_path);
    if (!in) throw std::invalid_argument("cannot open " + f.instances_path);
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) opt.instance_lines.push_back(line);
  }
  if (!f.json_path.empty()) {
    json_out.open(f.json_path, std::ios::binary | std::ios::trunc);
    if (!json_out)
      throw std::invalid_argument("cannot open " + f.json_path);
    opt.jsonl = &json_out;
  }
  return opt;
}

int finish(const CampaignResult& res, const std::string& theorem,
           const std::string& where) {
  std::cout << res.summary_line(theorem, where) << "\n";
  return res.any_violated() ? 1 : 0;
}

int run_demo() {
  Ambient amb = Ambient::finite_extension(2, 4);
  std::cout << "ambient gf:2:4, modulus " << poly_to_string(amb.modulus(), 't')
            << "\n\n";

  Subspace a = span(amb, {amb.one(), amb.gen()});
  std::cout << "reduce A = B = span{1,t}:\n";
  ReduceResult rr = reduce_pair(a, a);
  std::cout << trace_to_json(rr.trace).dump(2) << "\n\n";

  std::cout << "coset-union certificate for the same pair:\n";
  std::cout << olson_linear_report(a, a).to_json().dump(2) << "\n\n";

  std::cout << "power chain for span{1,t}:\n";
  std::cout << power_chain_report(a).to_json().dump(2) << "\n\n";

  GroupTable g = GroupTable::cyclic(6);
  GSet ga = gset_parse(g, "0,1");
  std::cout << "group-side certificate, Z6 with A = B = {0,1}:\n";
  std::cout << olson_find_report(ga, ga).to_json().dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of dimension bounds for products of "
               "subspaces in field extensions, with finite-group oracles"};
  app.require_subcommand(1);

  CommonFlags vf, gf, pf, sf;
  std::string group_type;
  int stop = -1;
  int limit = 8;
  std::string reduce_ambient, reduce_a, reduce_b;

  CLI::App* verify = app.add_subcommand("verify", "linear theorems over one ambient");
  verify->add_option("--ambient", vf.ambient, "gf:<q>:<n> or ratfun:<q>:<maxdeg>")
      ->required();
  add_common(verify, vf);

  CLI::App* group = app.add_subcommand("group", "set theorems over one finite group");
  group->add_option("--type", group_type, "cyclic:<n>, dihedral:<n>, sym:<n>, prod:<d1>,<d2>, table:<file>")
      ->required();
  add_common(group, gf);

  CLI::App* powers = app.add_subcommand("powers", "power chains <B^i>");
  powers->add_option("--ambient", pf.ambient)->required();
  powers->add_option("--stop", stop, "chain length cap (required for ratfun)");
  add_common(powers, pf, false);

  CLI::App* sharp = app.add_subcommand("sharp", "sharpness witnesses");
  sharp->add_option("--theorem", sf.theorem, "torsion-free or power-chain-bound")
      ->required();
  sharp->add_option("--ambient", sf.ambient)->required();
  sharp->add_option("--limit", limit, "family size bound");
  sharp->add_option("--json", sf.json_path, "JSON-lines witness path");

  CLI::App* reduce = app.add_subcommand("reduce", "dump one transform trace");
  reduce->add_option("--ambient", reduce_ambient)->required();
  reduce->add_option("--a", reduce_a, "compact subspace, rows ';'-separated")
      ->required();
  reduce->add_option("--b", reduce_b)->required();

  app.add_subcommand("demo", "showcase run on small instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      Ambient amb = Ambient::parse(vf.ambient);
      std::ofstream json_out;
      CampaignOptions opt = to_options(vf, json_out);
      return finish(run_linear_campaign(amb, vf.theorem, opt), vf.theorem,
                    amb.descriptor());
    }
    if (group->parsed()) {
      GroupTable g = GroupTable::parse(group_type);
      std::ofstream json_out;
      CampaignOptions opt = to_options(gf, json_out);
      return finish(run_group_campaign(g, gf.theorem, opt), gf.theorem,
                    g.descriptor());
    }
    if (powers->parsed()) {
      Ambient amb = Ambient::parse(pf.ambient);
      std::ofstream json_out;
      CampaignOptions opt = to_options(pf, json_out);
      return finish(run_powers_campaign(amb, stop, opt), "power-chain",
                    amb.descriptor());
    }
    if (sharp->parsed()) {
      Ambient amb = Ambient::parse(sf.ambient);
      auto witnesses = sharpness_search(sf.theorem, amb, limit);
      std::ofstream json_out;
      std::ostream* out = &std::cout;
      if (!sf.json_path.empty()) {
        json_out.open(sf.json_path, std::ios::binary | std::ios::trunc);
        if (!json_out)
          throw std::invalid_argument("cannot open " + sf.json_path);
        out = &json_out;
      }
      for (const auto& w : witnesses) (*out) << w.to_json_line() << "\n";
      std::cout << "witnesses=" << witnesses.size() << "\n";
      return witnesses.empty() ? 1 : 0;
    }
    if (reduce->parsed()) {
      Ambient amb = Ambient::parse(reduce_ambient);
      Subspace a = subspace_from_compact(amb, reduce_a);
      Subspace b = subspace_from_compact(amb, reduce_b);
      ReduceResult rr = reduce_pair(a, b);
      std::cout << trace_to_json(rr.trace).dump(2) << "\n";
      return 0;
    }
    return run_demo();
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

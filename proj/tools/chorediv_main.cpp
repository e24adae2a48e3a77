// Command-line front end: solve instances, check fairness properties,
// print minimax shares, cross-verify the solvers against the enumeration
// oracles, and generate instance files.
//
// Exit codes: 0 success (or property holds), 1 property fails (or a verify
// check fails), 2 usage or validation errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chorediv/chorediv.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw chorediv::Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw chorediv::Error("cannot write '" + path + "'");
  out << text;
}

// Instances are addressable as a file path or as builtin:NAME.
chorediv::Instance load_instance(const std::string& ref) {
  constexpr std::string_view prefix = "builtin:";
  if (ref.rfind(prefix, 0) == 0) {
    return chorediv::builtin_instance(ref.substr(prefix.size()));
  }
  return chorediv::parse_instance(read_file(ref));
}

chorediv::Rational parse_beta(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return {std::stoll(text), 1};
    }
    return {std::stoll(text.substr(0, slash)),
            std::stoll(text.substr(slash + 1))};
  } catch (const std::exception&) {
    throw chorediv::InvalidParameter("cannot parse beta '" + text +
                                     "', expected NUM or NUM/DEN");
  }
}

json witness_json(const chorediv::FairnessWitness& w) {
  json out;
  out["verdict"] = w.verdict;
  if (w.violation) {
    json subset = json::array();
    for (int t : w.violation->subset) subset.push_back(t);
    out["violator"] = {{"envier", w.violation->envier},
                       {"envied", w.violation->envied},
                       {"subset", subset}};
  }
  return out;
}

int run_solve(const std::string& instance_ref, const std::string& algo) {
  const chorediv::Instance inst = load_instance(instance_ref);
  chorediv::Allocation alloc;
  if (algo == "scm") {
    alloc = chorediv::social_cost_min(inst);
  } else if (algo == "ef1po") {
    alloc = chorediv::ef1_and_efficient(inst);
  } else if (algo == "mmspo") {
    alloc = chorediv::mms_and_efficient(inst);
  } else if (algo == "lorenz") {
    alloc = chorediv::lorenz_dominating(inst);
  } else if (algo == "efx-identical") {
    chorediv::AddAndFixStats stats;
    alloc = chorediv::add_and_fix(inst, &stats);
    if (!stats.binary_marginals_certified) {
      std::cerr << "warning: costs lack a binary-marginals certificate; "
                   "termination is only pseudo-polynomial\n";
    }
  } else {
    throw chorediv::InvalidParameter("unknown algorithm '" + algo + "'");
  }
  std::cout << chorediv::serialize_allocation(inst, alloc);
  return 0;
}

int run_check(const std::string& instance_ref, const std::string& alloc_path,
              const std::string& property, const std::string& beta_text,
              int k, std::uint64_t bound) {
  const chorediv::Instance inst = load_instance(instance_ref);
  const chorediv::Allocation alloc =
      chorediv::parse_allocation(read_file(alloc_path), inst);

  json out;
  out["property"] = property;
  bool verdict = false;
  if (property == "ef1") {
    const auto w = chorediv::is_ef1(inst, alloc);
    out = witness_json(w);
    verdict = w.verdict;
  } else if (property == "efx") {
    const auto w = chorediv::is_efx(inst, alloc);
    out = witness_json(w);
    verdict = w.verdict;
  } else if (property == "befkx") {
    const auto w =
        chorediv::is_beta_efkx(inst, alloc, parse_beta(beta_text), k);
    out = witness_json(w);
    verdict = w.verdict;
  } else if (property == "mms") {
    const auto shares = chorediv::minimax_shares(inst);
    const auto w = chorediv::is_mms_fair(inst, alloc, shares);
    out = witness_json(w);
    out["shares"] = shares;
    verdict = w.verdict;
  } else if (property == "po") {
    verdict = chorediv::brute_is_pareto_efficient(inst, alloc, bound);
    out["verdict"] = verdict;
  } else if (property.rfind("lorenz-vs(", 0) == 0 && property.back() == ')') {
    const std::string other_path =
        property.substr(10, property.size() - 11);
    const chorediv::Allocation other =
        chorediv::parse_allocation(read_file(other_path), inst);
    const auto mine = chorediv::sorted_cost_profile(inst, alloc);
    const auto theirs = chorediv::sorted_cost_profile(inst, other);
    const auto order = chorediv::lorenz_compare(mine, theirs);
    const char* names[] = {"dominates", "dominated-by", "equal",
                           "incomparable"};
    out = json{{"property", "lorenz-vs"},
               {"relation", names[static_cast<int>(order)]},
               {"profile", mine.values},
               {"other_profile", theirs.values}};
    verdict = order == chorediv::LorenzOrder::Dominates ||
              order == chorediv::LorenzOrder::Equal;
    out["verdict"] = verdict;
  } else {
    throw chorediv::InvalidParameter("unknown property '" + property + "'");
  }
  out["property"] = property;
  std::cout << out.dump(2) << "\n";
  return verdict ? 0 : 1;
}

int run_shares(const std::string& instance_ref) {
  const chorediv::Instance inst = load_instance(instance_ref);
  std::cout << json(chorediv::minimax_shares(inst)).dump() << "\n";
  return 0;
}

struct Report {
  bool all_passed = true;

  void record(const std::string& name, bool ok, const std::string& detail = "") {
    all_passed = all_passed && ok;
    std::cout << (ok ? "PASS " : "FAIL ") << name;
    if (!ok && !detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << "\n";
  }
};

// Cross-checks one instance: the rank-formula cost against enumeration, the
// share formula against its definition, the share-sum bound, and every
// solver's postconditions.
void verify_instance(const chorediv::Instance& inst, std::uint64_t bound,
                     Report& report) {
  using namespace chorediv;

  const bool certified = inst.all_supermodular_certified();
  report.record("certified-binary-supermodular", certified);
  if (!certified) return;

  const int n = inst.agent_count();
  const int m = inst.chore_count();
  const BruteMinSocialCost brute = brute_min_social_cost(inst, bound);

  const Allocation partial = cost_min_partial_alloc(inst);
  bool zero_cost = true;
  for (int i = 0; i < n; ++i) {
    zero_cost = zero_cost && inst.eval(i, partial.bundles[i]) == 0;
  }
  const int unassigned = m - partial.assigned().size();
  report.record("partial-allocation-zero-cost-and-sized",
                zero_cost && unassigned == brute.cost,
                "unassigned " + std::to_string(unassigned) + " vs c* " +
                    std::to_string(brute.cost));

  const Allocation scm = social_cost_min(inst);
  report.record("min-social-cost-matches-enumeration",
                social_cost(inst, scm) == brute.cost);

  bool shares_ok = true;
  int share_sum = 0;
  for (int i = 0; i < n; ++i) {
    const int fast = minimax_share(inst, i);
    shares_ok = shares_ok && fast == brute_minimax_share(inst, i, bound);
    share_sum += fast;
  }
  report.record("minimax-share-matches-enumeration", shares_ok);
  report.record("share-sum-covers-min-cost", share_sum >= brute.cost);

  const Allocation ef1 = ef1_and_efficient(inst);
  report.record("ef1-solver-postconditions",
                ef1.complete(m) && is_ef1(inst, ef1).verdict &&
                    social_cost(inst, ef1) == brute.cost);

  const Allocation mms = mms_and_efficient(inst);
  report.record("mms-solver-postconditions",
                mms.complete(m) &&
                    is_mms_fair(inst, mms, minimax_shares(inst)).verdict &&
                    social_cost(inst, mms) == brute.cost);

  const Allocation lorenz = lorenz_dominating(inst);
  const SortedCostProfile profile = sorted_cost_profile(inst, lorenz);
  std::vector<int> expected;
  const int h = brute.cost % n;
  for (int i = 0; i < n; ++i) {
    expected.push_back(i < h ? (brute.cost + n - 1) / n : brute.cost / n);
  }
  bool dominates_all = true;
  for_each_allocation(
      n, m,
      [&](const Allocation& other) {
        const auto order =
            lorenz_compare(profile, sorted_cost_profile(inst, other));
        if (order != LorenzOrder::Dominates && order != LorenzOrder::Equal) {
          dominates_all = false;
        }
        return !dominates_all;
      },
      bound);
  report.record("lorenz-solver-postconditions",
                lorenz.complete(m) && profile.values == expected &&
                    dominates_all);
}

int run_verify(const std::string& instance_ref, std::uint64_t bound,
               std::optional<std::uint64_t> seed) {
  Report report;
  if (!instance_ref.empty()) {
    verify_instance(load_instance(instance_ref), bound, report);
  } else if (seed) {
    // Fuzz mode: a fixed batch of random certified instances.
    std::mt19937_64 rng(*seed);
    constexpr int kFuzzRuns = 25;
    for (int run = 0; run < kFuzzRuns; ++run) {
      std::uniform_int_distribution<int> n_dist(2, 3);
      std::uniform_int_distribution<int> m_dist(2, 8);
      const int n = n_dist(rng);
      const int m = m_dist(rng);
      std::cout << "# run " << run << ": n=" << n << " m=" << m << "\n";
      verify_instance(chorediv::random_supermodular_instance(rng, n, m),
                      bound, report);
    }
  } else {
    throw chorediv::InvalidParameter(
        "verify needs an instance, or --seed for fuzz mode");
  }
  std::cout << (report.all_passed ? "all checks passed\n"
                                  : "some checks failed\n");
  return report.all_passed ? 0 : 1;
}

int run_gen(const std::string& spec, const std::string& output,
            std::uint64_t seed) {
  constexpr std::string_view builtin = "builtin:";
  constexpr std::string_view random = "random:";
  chorediv::Instance inst = [&] {
    if (spec.rfind(builtin, 0) == 0) {
      return chorediv::builtin_instance(spec.substr(builtin.size()));
    }
    if (spec.rfind(random, 0) == 0) {
      const std::string dims = spec.substr(random.size());
      const auto x = dims.find('x');
      if (x == std::string::npos) {
        throw chorediv::InvalidParameter("expected random:NxM");
      }
      int n = 0;
      int m = 0;
      try {
        n = std::stoi(dims.substr(0, x));
        m = std::stoi(dims.substr(x + 1));
      } catch (const std::exception&) {
        throw chorediv::InvalidParameter("expected random:NxM");
      }
      std::mt19937_64 rng(seed);
      return chorediv::random_supermodular_instance(rng, n, m);
    }
    throw chorediv::InvalidParameter(
        "expected builtin:NAME or random:NxM, got '" + spec + "'");
  }();
  write_file(output, chorediv::serialize_instance(inst));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fair division of indivisible chores under binary "
               "supermodular costs"};
  app.require_subcommand(1);

  std::string instance_ref;
  std::string alloc_path;
  std::string algo;
  std::string property;
  std::string beta_text = "1/1";
  std::string gen_spec;
  std::string output_path;
  int k = 1;
  std::uint64_t bound = chorediv::kDefaultEnumerationBound;
  std::uint64_t seed = 0;
  bool seed_given = false;

  CLI::App* solve = app.add_subcommand("solve", "compute an allocation");
  solve->add_option("instance", instance_ref, "instance path or builtin:NAME")
      ->required();
  solve->add_option("--algo", algo,
                    "scm | ef1po | mmspo | lorenz | efx-identical")
      ->required();

  CLI::App* check = app.add_subcommand("check", "check a fairness property");
  check->add_option("instance", instance_ref, "instance path or builtin:NAME")
      ->required();
  check->add_option("allocation", alloc_path, "allocation document path")
      ->required();
  check->add_option("--property", property,
                    "ef1 | efx | befkx | mms | po | lorenz-vs(PATH)")
      ->required();
  check->add_option("--beta", beta_text, "scaling factor NUM/DEN for befkx");
  check->add_option("--k", k, "removal count for befkx");
  check->add_option("--bound", bound, "enumeration bound for po");

  CLI::App* shares = app.add_subcommand("shares", "print the minimax shares");
  shares->add_option("instance", instance_ref, "instance path or builtin:NAME")
      ->required();

  CLI::App* verify =
      app.add_subcommand("verify", "cross-check solvers against enumeration");
  verify->add_option("instance", instance_ref,
                     "instance path or builtin:NAME");
  verify->add_option("--bound", bound, "enumeration bound");
  verify->add_option("--seed", seed, "fuzz over random instances")
      ->each([&](const std::string&) { seed_given = true; });

  CLI::App* gen = app.add_subcommand("gen", "write an instance file");
  gen->add_option("spec", gen_spec, "builtin:NAME or random:NxM")->required();
  gen->add_option("output", output_path, "output path")->required();
  gen->add_option("--seed", seed, "generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) return run_solve(instance_ref, algo);
    if (check->parsed()) {
      return run_check(instance_ref, alloc_path, property, beta_text, k,
                       bound);
    }
    if (shares->parsed()) return run_shares(instance_ref);
    if (verify->parsed()) {
      return run_verify(instance_ref, bound,
                        seed_given ? std::optional<std::uint64_t>(seed)
                                   : std::nullopt);
    }
    if (gen->parsed()) return run_gen(gen_spec, output_path, seed);
  } catch (const chorediv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

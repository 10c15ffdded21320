#include <chrono>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "ordco/commands.hpp"

using namespace ordco;
using namespace ordco::cli;

namespace {

struct Globals {
  bool json = false;
  bool timing = true;
  std::uint64_t seed = FactorOptions{}.seed;

  FactorOptions factor_options() const {
    FactorOptions o;
    o.seed = seed;
    return o;
  }
};

int emit(const Globals& g, const std::function<CommandResult()>& run) {
  const auto start = std::chrono::steady_clock::now();
  CommandResult r;
  try {
    r = run();
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (g.json) {
    std::cout << r.to_json(g.timing ? std::optional<double>(ms) : std::nullopt).dump(2) << '\n';
  } else {
    for (const auto& line : r.text) std::cout << line << '\n';
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordco: orders of finite split semisimple groups and their coincidences"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Emit JSON {command, inputs, results, elapsed_ms}");
  app.add_option("--seed", g.seed, "Seed for randomized factorization");
  app.add_flag("!--no-timing", g.timing, "Report elapsed_ms as null")->group("");

  std::function<int()> action;

  std::string group, q;
  auto* order = app.add_subcommand("order", "Order of H(F_q)");
  order->add_option("--group", group, "Group, e.g. A1*B2")->required();
  order->add_option("--q", q, "Field size (a prime power)")->required();
  order->callback([&] { action = [&] { return emit(g, [&] { return cmd_order(group, q); }); }; });

  auto* degrees = app.add_subcommand("degrees", "Fundamental degrees of a group");
  degrees->add_option("--group", group, "Group")->required();
  degrees->callback([&] { action = [&] { return emit(g, [&] { return cmd_degrees(group); }); }; });

  auto* factor = app.add_subcommand("factor", "Prime factorization of |H(F_q)|");
  factor->add_option("--group", group, "Group")->required();
  factor->add_option("--q", q, "Field size")->required();
  factor->callback([&] { action = [&] { return emit(g, [&] { return cmd_factor(group, q, g.factor_options()); }); }; });

  std::string order_text;
  int rank_max = 4;
  std::optional<std::string> q_max_text;
  std::optional<std::string> atlas_path;
  bool no_atlas = false;
  auto* recover = app.add_subcommand("recover", "All (H, q) with |H(F_q)| = N");
  recover->add_option("--order", order_text, "N as a decimal string")->required();
  recover->add_option("--rank-max", rank_max, "Largest rank considered")->capture_default_str();
  recover->add_option("--q-max", q_max_text, "Largest field size considered");
  recover->add_option("--atlas", atlas_path, std::string("Atlas file (default: $") + kAtlasEnv + ")");
  recover->add_flag("--no-atlas", no_atlas, "Ignore any atlas");
  recover->callback([&] {
    action = [&] {
      std::optional<std::filesystem::path> path;
      if (atlas_path) {
        path = *atlas_path;
      } else {
        path = default_atlas_path();
      }
      if (no_atlas) path.reset();
      return emit(g, [&] { return cmd_recover(order_text, rank_max, q_max_text, path, g.factor_options()); });
    };
  });

  std::optional<unsigned> c_rank, c_degree, c_factors;
  auto* coincide = app.add_subcommand("coincide", "Search order coincidences");
  coincide->add_option("--rank-max", c_rank, "Rank bound on each side");
  coincide->add_option("--degree-max", c_degree, "Degree bound (two-factor pairs)");
  coincide->add_option("--factors", c_factors, "Simple-factor bound on each side");
  coincide->callback([&] { action = [&] { return emit(g, [&] { return cmd_coincide(c_rank, c_degree, c_factors); }); }; });

  std::string pair;
  auto* reduce = app.add_subcommand("reduce", "Write a coincidence class in the generators");
  reduce->add_option("--pair", pair, "Class, e.g. \"B3*B3|D4*G2\"")->required();
  reduce->callback([&] { action = [&] { return emit(g, [&] { return cmd_reduce(pair); }); }; });

  unsigned b_max = 15, d_max = 16;
  auto* generators = app.add_subcommand("generators", "List the bounded generator set");
  generators->add_option("--b-max", b_max, "Largest B index")->capture_default_str();
  generators->add_option("--d-max", d_max, "Largest D index")->capture_default_str();
  generators->callback([&] { action = [&] { return emit(g, [&] { return cmd_generators(b_max, d_max); }); }; });

  std::string target;
  VerifyBounds vb;
  auto* verify = app.add_subcommand("verify", "Run a verifier");
  verify->add_option("target", target, "Verifier")->required()->check(CLI::IsMember(verify_targets()));
  verify->add_option("--rank-max", vb.rank_max, "Rank bound");
  verify->add_option("--q-max", vb.q_max, "Field size bound");
  verify->add_option("--n-max", vb.n_max, "Parameter bound");
  verify->add_option("--degree-max", vb.degree_max, "Degree bound");
  verify->add_option("--a-max", vb.a_max, "Base bound");
  verify->add_option("--p-max", vb.p_max, "Prime bound");
  verify->callback([&] { action = [&] { return emit(g, [&] { return cmd_verify(target, vb, g.factor_options()); }); }; });

  unsigned at_n = 6;
  unsigned long at_q = 9;
  auto* artin = app.add_subcommand("artin-tits", "Equal orders of distinct simple groups");
  artin->add_option("--n-max", at_n, "Largest n")->capture_default_str();
  artin->add_option("--q-max", at_q, "Largest odd q")->capture_default_str();
  artin->callback([&] { action = [&] { return emit(g, [&] { return cmd_artin_tits(at_n, at_q); }); }; });

  std::string kind = "triples";
  unsigned bound = 8;
  auto* catalog = app.add_subcommand("catalog", "Export a static catalog");
  catalog->add_option("kind", kind, "triples or pairs")->check(CLI::IsMember({"triples", "pairs"}))->capture_default_str();
  catalog->add_option("--bound", bound, "n_max for triples, degree_max for pairs")->capture_default_str();
  catalog->callback([&] { action = [&] { return emit(g, [&] { return cmd_catalog(kind, bound); }); }; });

  unsigned cc_rank = 4;
  unsigned long cc_q = 16;
  auto* cross = app.add_subcommand("cross-char", "Orders shared across characteristics");
  cross->add_option("--rank-max", cc_rank, "Rank bound")->capture_default_str();
  cross->add_option("--q-max", cc_q, "Field size bound")->capture_default_str();
  cross->callback([&] { action = [&] { return emit(g, [&] { return cmd_cross_char(cc_rank, cc_q); }); }; });

  unsigned ab_rank = 4;
  std::vector<unsigned long> ab_q = {2, 3, 4, 5, 7, 8, 9};
  std::optional<std::string> ab_path;
  auto* atlas = app.add_subcommand("atlas", "Order atlas maintenance");
  atlas->require_subcommand(1);
  auto* build = atlas->add_subcommand("build", "Build and write an atlas");
  build->add_option("--rank-max", ab_rank, "Rank bound")->capture_default_str();
  build->add_option("--q", ab_q, "Comma-separated field sizes")->delimiter(',')->capture_default_str();
  build->add_option("--path", ab_path, std::string("Output file (default: $") + kAtlasEnv + ")");
  build->callback([&] {
    action = [&] {
      std::optional<std::filesystem::path> path = ab_path ? std::optional<std::filesystem::path>(*ab_path) : default_atlas_path();
      if (!path) {
        std::cerr << "error: atlas build needs --path or $" << kAtlasEnv << '\n';
        return static_cast<int>(kUsage);
      }
      return emit(g, [&] { return cmd_atlas_build(ab_rank, ab_q, *path); });
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  return action ? action() : static_cast<int>(kUsage);
}

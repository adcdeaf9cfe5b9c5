#include <cstdio>

#include "CLI11.hpp"
#include "nilmult/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "2-nilpotent multipliers of finite p-groups: compute the invariant, "
      "classify the defect, audit the bounds"};
  app.require_subcommand(1);

  nilmult::RunConfig cfg;

  auto add_input = [&cfg](CLI::App* cmd) {
    cmd->add_option("--catalog", cfg.catalog_spec,
                    "catalog spec string, e.g. d8 or "
                    "extraspecial:p=3,m=1,kind=exp_p");
    cmd->add_option("--file", cfg.file, "presentation file (.grp)");
    cmd->add_option("--class-hint", cfg.class_hint,
                    "upper bound on the nilpotency class; without it "
                    "probing needs at most 4 generators");
    cmd->add_flag("--json", cfg.json, "machine readable output");
  };

  CLI::App* compute = app.add_subcommand(
      "compute", "multiplier invariants of one group");
  add_input(compute);
  compute->add_option("--cnil", cfg.c_nil,
                      "1 for the classical multiplier, 2 for the "
                      "2-nilpotent one")
      ->check(CLI::Range(1, 2));

  CLI::App* classify = app.add_subcommand(
      "classify", "defect classification of one non-abelian group");
  add_input(classify);

  CLI::App* catalog =
      app.add_subcommand("catalog", "list the built-in group constructions");
  catalog->add_option("--primes", cfg.primes, "primes to enumerate")
      ->delimiter(',');
  catalog->add_option("--max-n", cfg.max_n, "largest order exponent");
  catalog->add_flag("--json", cfg.json, "machine readable output");

  CLI::App* verify =
      app.add_subcommand("verify", "run the expected-value check table");
  verify->add_option("--only", cfg.only, "run a single check group");
  verify->add_flag("--json", cfg.json, "machine readable output");

  CLI::App* bounds = app.add_subcommand(
      "bounds", "multiplier exponent bounds for order p^n, derived p^m");
  bounds->add_option("n", cfg.bound_n, "order exponent")->required();
  bounds->add_option("m", cfg.bound_m, "derived subgroup exponent")
      ->required();
  bounds->add_flag("--json", cfg.json, "machine readable output");

  CLI::App* table = app.add_subcommand(
      "table", "defect against family map for order p^n");
  table->add_option("--p", cfg.table_p, "prime")->required();
  table->add_option("--n", cfg.table_n, "order exponent")->required();
  table->add_flag("--json", cfg.json, "machine readable output");

  CLI11_PARSE(app, argc, argv);

  for (CLI::App* sub : {compute, classify, catalog, verify, bounds, table})
    if (sub->parsed()) cfg.command = sub->get_name();

  nilmult::RunResult res = nilmult::run_command(cfg);
  std::fputs(res.output.c_str(), stdout);
  return res.exit_code;
}

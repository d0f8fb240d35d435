#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "nacent/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact centralizer census and isoclinism engine for finite permutation groups"};
  app.require_subcommand(1);

  nacent::CommandOptions opts;
  bool seedless = false;
  app.add_flag("--json", opts.json, "Line-oriented JSON records instead of text");
  app.add_option("--cap-group", opts.caps.group, "Largest group order for censuses and tables")
      ->capture_default_str();
  app.add_option("--cap-lattice", opts.caps.lattice, "Largest group order for subgroup lattices")
      ->capture_default_str();
  app.add_option("--cap-isoclinism", opts.caps.isoclinism, "Largest central quotient / derived subgroup searched")
      ->capture_default_str();
  app.add_flag("--seedless", seedless, "Accepted for compatibility; every computation is deterministic");

  std::string a, b;
  auto* census = app.add_subcommand("census", "Centralizer census of a group");
  census->add_option("spec", a, "Group spec, e.g. \"A(5)\" or \"D(4) x H(3)\"")->required();

  auto* iso = app.add_subcommand("isoclinic", "Search for an isoclinism between two groups");
  iso->add_option("a", a, "First group spec")->required();
  iso->add_option("b", b, "Second group spec")->required();

  auto* bound = app.add_subcommand("bound", "Derived-length bound report for a non-abelian nilpotent group");
  bound->add_option("spec", a, "Group spec")->required();

  auto* scan = app.add_subcommand("subgroup-scan", "Run the subgroup, maximal-subgroup and small-n checks");
  scan->add_option("spec", a, "Group spec")->required();

  auto* verify = app.add_subcommand("verify-paper", "Recompute every tabulated claim and print the verdict table");

  auto* conj = app.add_subcommand("conjecture-scan", "Group corpus groups by (|cent|, |G'|) and test isoclinism");
  conj->add_option("--max-order", opts.max_order, "Largest group order in the corpus (at most 400)")
      ->capture_default_str()
      ->check(CLI::Range(1, 400));

  // Global flags are accepted after the verb too.
  for (auto* sub : {census, iso, bound, scan, verify, conj}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);
  (void)seedless;

  if (*census) return nacent::cmd_census(a, opts, std::cout, std::cerr);
  if (*iso) return nacent::cmd_isoclinic(a, b, opts, std::cout, std::cerr);
  if (*bound) return nacent::cmd_bound(a, opts, std::cout, std::cerr);
  if (*scan) return nacent::cmd_subgroup_scan(a, opts, std::cout, std::cerr);
  if (*verify) return nacent::cmd_verify_paper(opts, std::cout, std::cerr);
  if (*conj) return nacent::cmd_conjecture_scan(opts, std::cout, std::cerr);
  return nacent::kExitInputError;
}

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "regcycle/cli.hpp"

namespace rc = regcycle::cli;

int main(int argc, char** argv) {
  CLI::App app{"regcycle: regular cycles of permutations in induced actions"};
  app.require_subcommand(1);

  rc::RunConfig cfg;
  std::string group, element, action, m_range, suite;
  regcycle::u64 k = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output", cfg.output, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "seed for sampled checks");
    sub->add_option("--cap", cfg.domain_cap, "largest induced domain enumerated");
  };

  auto* decide = app.add_subcommand("decide", "decide whether an element has a regular cycle");
  decide->add_option("--group", group, "group spec, e.g. sym:6, gl:2,3, wreath:sym:5^2")->required();
  decide->add_option("--element", element, "element in the group's syntax")->required();
  decide->add_option("--action", action, "natural, ksets:K, partitions:AxB, cosets:SUB, vectors, affine, product, diagonal");
  decide->add_option("--k", k, "shorthand for --action ksets:K");
  add_common(decide);

  auto* scan = app.add_subcommand("scan", "list cycle types without a regular cycle");
  scan->add_option("--action", action, "ksets:K or partitions:AxB")->required();
  scan->add_option("--m", m_range, "degree or range a..b");
  add_common(scan);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suites = "all";
  for (const auto& s : regcycle::suite_names()) suites += ", " + s;
  verify->add_option("--suite", suite, suites)->required();
  verify->add_option("--m", m_range, "degree range a..b");
  add_common(verify);

  auto* bounds = app.add_subcommand("bounds", "tabulate the alpha-beta product");
  bounds->add_option("--m", m_range, "degree range a..b, default 47..100");
  add_common(bounds);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : rc::kExitUsage;
  }

  const rc::CommandResult r = rc::run_guarded([&]() -> rc::CommandResult {
    if (decide->parsed()) {
      if (k != 0) {
        if (!action.empty()) throw regcycle::ParseError("give either --k or --action");
        action = "ksets:" + std::to_string(k);
      }
      return rc::cmd_decide(group, element, action, cfg);
    }
    if (scan->parsed()) return rc::cmd_scan(action, m_range, cfg);
    if (verify->parsed()) return rc::cmd_verify(suite, m_range, cfg);
    return rc::cmd_bounds(m_range, cfg);
  });
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}

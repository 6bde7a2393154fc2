// asphere: command line front end for the presentation toolkit.

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "asphere/commands.hpp"

namespace {

  struct Invocation {
    std::string command;
    std::string input;
  };

  CLI::App* add_command(CLI::App& app, Invocation& inv, std::string const& name,
                        std::string const& description) {
    auto* sub = app.add_subcommand(name, description);
    sub->add_option("input", inv.input,
                    "presentation (.pres text or JSON), or fuzz:<n>")
        ->required();
    sub->callback([&inv, name] { inv.command = name; });
    return sub;
  }

}  // namespace

int main(int argc, char** argv) {
  using namespace asphere::cli;

  CLI::App app{"Presentation complexes, normal forms and ribbon sublinks"};
  app.set_version_flag("--version", std::string(tool_name) + " " + tool_version);
  app.require_subcommand(1);

  Options    opts;
  Invocation inv;
  app.add_flag("--json", opts.json_output, "emit the JSON report");
  app.add_option("--window", opts.window, "truncate to generators x_1..x_N");
  app.add_option("--seed", opts.seed, "seed for fuzz:<n> inputs");

  add_command(app, inv, "check", "balance, unimodularity and homology");

  auto* normalize = add_command(app, inv, "normalize",
                                "Nielsen base change to exponent matrix I");
  normalize->add_option("--out", opts.out, "write the normalized presentation");
  normalize->add_option("--log", opts.log,
                        "base change log path (default <out>.basechange.json)");

  auto* ribbon = add_command(app, inv, "ribbon", "symbolic surgery code");
  ribbon->add_flag("--normalize", opts.normalize_first, "normalize first");
  ribbon->add_option("--out", opts.out, "write the surgery code JSON");

  auto* sublinks = add_command(app, inv, "sublinks", "sublink exteriors");
  sublinks->add_option("--fill", opts.fill, "components to fill, e.g. 1,3");
  sublinks->add_flag("--enumerate", opts.enumerate, "all 2^m sublinks");
  sublinks->add_option("--cap", opts.cap, "refuse --enumerate above 2^cap");
  sublinks->add_flag("--force", opts.force, "ignore --cap");
  sublinks->add_flag("--normalize", opts.normalize_first, "normalize first");
  sublinks->add_flag("--probe", opts.probe, "run pi2probe on each exterior");
  sublinks->add_option("--limit", opts.limit, "coset limit for --probe");

  add_command(app, inv, "homology", "cellular homology");

  auto* tele = add_command(app, inv, "telescope", "telescope of a filtration");
  tele->add_option("--stage", opts.stages,
                   "stage as <gens>:<rels>, '*' for all; repeatable");
  tele->add_flag("--emit-complex", opts.emit_complex, "include the cells");

  auto* probe = add_command(app, inv, "pi2probe",
                            "pi_2 via the universal cover of a finite group");
  probe->add_option("--limit", opts.limit, "maximum cosets defined");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? ExitCode::ok : ExitCode::usage_error;
  }

  try {
    RunReport const report = run_command(inv.command, inv.input, opts);
    if (opts.json_output) {
      std::cout << report.to_json().dump(2) << "\n";
    } else {
      std::cout << report.to_text();
    }
    return report.exit_code;
  } catch (std::exception const& e) {
    std::cerr << tool_name << ": internal error: " << e.what() << "\n";
    return ExitCode::internal_error;
  }
}

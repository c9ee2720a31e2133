// Command-line front end: pga <command> --input <file> [--format text|json|tsv] [--max-size N]

#include <iostream>

#include <CLI11.hpp>

#include "pga/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Finite partial group actions: validation, partial orbits and globalization"};
  app.require_subcommand(1);

  pga::cli::CommandOptions options;
  std::string format = "text";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input,-i", options.input, "Partial action input file (JSON)")->required();
    sub->add_option("--format,-f", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "tsv"}));
    sub->add_option("--max-size", options.max_size, "Cap on |G|*|X| for globalization");
  };

  add_common(app.add_subcommand("validate", "Check the partial action axioms"));
  add_common(app.add_subcommand("orbits", "Partial orbits, stabilizers, G^x and coset spaces"));
  add_common(app.add_subcommand("globalize", "Construct the enveloping global action"));
  auto* verify = app.add_subcommand("verify", "Check a globalization against the partial action");
  add_common(verify);
  verify->add_option("--global", options.global,
                     "Global action JSON to check (default: the constructed globalization)");
  add_common(app.add_subcommand("burnside", "Orbit count of the globalization by fixed points"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : pga::cli::kInputError;
  }
  options.command = app.get_subcommands().front()->get_name();
  options.format = pga::cli::parse_format(format);
  return pga::cli::run_command(options, std::cout, std::cerr);
}

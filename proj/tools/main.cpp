#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "helmfd/cli.hpp"

namespace {

int parse_and_run(int argc, char** argv) {
  using helmfd::cli::Command;
  using helmfd::cli::Format;
  using helmfd::cli::Refine;
  using helmfd::cli::RunConfig;

  CLI::App app{"1D Dirichlet Helmholtz finite differences: solvers, symbol "
               "errors, certified bounds and convergence experiments"};
  app.require_subcommand(0, 1);

  RunConfig cfg;
  std::vector<std::string> scheme_names;
  std::string refine_name, format_name = "csv";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--scheme", scheme_names,
                    "scheme name: classical, kmod, lmod, lfmod (repeatable)");
    sub->add_option("--k", cfg.ks, "wavenumber (repeatable)");
    sub->add_option("--N", cfg.ns, "number of grid intervals (repeatable)");
    sub->add_option("--source", cfg.source_spec,
                    "sine source as comma-separated n:coeff pairs");
    sub->add_option("--g0", cfg.g0, "left boundary value");
    sub->add_option("--g1", cfg.g1, "right boundary value");
    sub->add_option("--p", cfg.p, "nominal source smoothness");
    sub->add_option("--c", cfg.c, "wavenumber-shift smallness parameter");
    sub->add_option("--refine", refine_name, "refinement mode: h, kh, khfix")
        ->check(CLI::IsMember({"h", "kh", "khfix"}));
    sub->add_option("--steps", cfg.refine_steps, "refinement steps");
    sub->add_option("--preset", cfg.preset,
                    "preset: fig1, fig2, fig4, fig5, fig6")
        ->check(CLI::IsMember({"fig1", "fig2", "fig4", "fig5", "fig6"}));
    sub->add_option("--out", cfg.out_path, "output path (default: stdout)");
    sub->add_option("--format", format_name, "output format: csv, json, svg")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
    sub->add_flag("--strict", cfg.strict,
                  "nonzero exit on bound failures or hypothesis violations");
    sub->add_option("--nmax", cfg.n_max, "mesh scan limit for wellposed");
  };

  add_common(&app);  // a bare --preset selects its own command
  std::map<std::string, Command> commands = {
      {"solve", Command::Solve},         {"symbols", Command::Symbols},
      {"bounds", Command::Bounds},       {"converge", Command::Converge},
      {"wellposed", Command::Wellposed}, {"zerosource", Command::ZeroSource}};
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, cmd] : commands) {
    CLI::App* sub = app.add_subcommand(name);
    add_common(sub);
    subs[name] = sub;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  bool have_command = false;
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) {
      cfg.command = commands.at(name);
      have_command = true;
    }
  if (!have_command && cfg.preset.empty()) {
    std::cerr << app.help();
    return 2;
  }

  for (const std::string& name : scheme_names) {
    auto s = helmfd::scheme_from_name(name);
    if (!s) {
      std::cerr << "invalid config: unknown scheme '" << name << "'\n";
      return 2;
    }
    cfg.schemes.push_back(*s);
  }
  if (refine_name == "h") cfg.refine = Refine::H;
  if (refine_name == "kh") cfg.refine = Refine::KH;
  if (refine_name == "khfix") cfg.refine = Refine::KHFix;
  if (format_name == "json") cfg.format = Format::Json;
  if (format_name == "svg") cfg.format = Format::Svg;

  if (!helmfd::cli::apply_preset(cfg)) {
    std::cerr << "invalid config: unknown preset '" << cfg.preset << "'\n";
    return 2;
  }
  return helmfd::cli::run(cfg, std::cerr);
}

}  // namespace

int main(int argc, char** argv) { return parse_and_run(argc, argv); }

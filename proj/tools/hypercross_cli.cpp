// Command-line front end. Exit codes: 0 pass, 1 check failed, 2 usage,
// 3 degenerate input.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "hypercross/commands.hpp"
#include "hypercross/config_io.hpp"
#include "hypercross/error.hpp"

namespace {

struct Options {
  hypercross::RunSpec spec;
  std::string out_path;
  std::string format = "json";
};

void add_config_flags(CLI::App* app, Options& o) {
  app->add_option("--in", o.spec.input_path, "PointConfig JSON file");
  app->add_option("--dim", o.spec.dim, "dimension d (moment curve input)");
  app->add_option("--n", o.spec.n, "number of moment-curve points (t = 1..n)");
  app->add_option("--ts", o.spec.ts, "moment parameters, e.g. 1,3/2,4");
}

void add_common_flags(CLI::App* app, Options& o) {
  app->add_option("--out", o.out_path, "write output here instead of stdout");
  app->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app->add_option("--threads", o.spec.threads, "OpenMP worker count (0 = default)");
}

}  // namespace

int main(int argc, char** argv) {
  using hypercross::Command;
  Options o;
  CLI::App app{"Crossing pairs of hyperedges in rectilinear drawings of complete d-uniform hypergraphs"};
  app.require_subcommand(1);

  std::map<CLI::App*, Command> commands;
  auto sub = [&](const char* name, const char* help, Command c) {
    CLI::App* s = app.add_subcommand(name, help);
    add_common_flags(s, o);
    commands[s] = c;
    return s;
  };

  auto* gen = sub("gen-moment", "points on the moment curve as PointConfig JSON", Command::kGenMoment);
  add_config_flags(gen, o);

  auto* gale = sub("gale", "Gale transform of a configuration", Command::kGale);
  add_config_flags(gale, o);
  gale->add_flag("--closed-form", o.spec.closed_form, "use the moment-curve closed form");

  auto* seps = sub("separations", "linear separations of a planar Gale diagram", Command::kSeparations);
  add_config_flags(seps, o);

  auto* cross = sub("cross", "decide whether two simplices cross", Command::kCross);
  add_config_flags(cross, o);
  cross->add_option("--left", o.spec.left, "1-based vertex list, e.g. 1,3,5")->required();
  cross->add_option("--right", o.spec.right, "1-based vertex list")->required();

  auto* count = sub("count", "count crossing pairs of hyperedges", Command::kCount);
  add_config_flags(count, o);
  count->add_flag("--witnesses", o.spec.witnesses, "list crossing pairs");

  auto* bounds = sub("bounds", "table of exact values and bounds", Command::kBounds);
  bounds->add_option("--d-max", o.spec.d_max, "largest d (<= 64)");

  auto* verify = sub("verify", "run the invariant suite", Command::kVerify);
  verify->add_option("--d-min", o.spec.d_min, "smallest d");
  verify->add_option("--d-max", o.spec.d_max, "largest d");
  verify->add_option("--trials", o.spec.trials, "random configurations per check");
  verify->add_option("--seed", o.spec.seed, "random seed");
  verify->add_option("--in", o.spec.input_path, "also validate this configuration");

  auto* search = sub("search-min", "search for configurations with few crossings", Command::kSearchMin);
  search->add_option("--dim", o.spec.dim, "dimension d")->required();
  search->add_option("--n", o.spec.n, "number of points")->required();
  search->add_option("--trials", o.spec.trials, "evaluation budget");
  search->add_option("--seed", o.spec.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? hypercross::kExitOk : hypercross::kExitUsage;
  }

  for (const auto& [s, c] : commands)
    if (s->parsed()) o.spec.command = c;
  o.spec.format = o.format == "csv" ? hypercross::Format::kCsv : hypercross::Format::kJson;

  const hypercross::CommandResult r = hypercross::execute(o.spec);
  std::cerr << r.error;
  if (!o.out_path.empty()) {
    try {
      hypercross::write_text_file(o.out_path, r.output);
    } catch (const hypercross::Error& e) {
      std::cerr << e.what() << "\n";
      return hypercross::kExitUsage;
    }
  } else {
    std::cout << r.output;
  }
  return r.exit_code;
}

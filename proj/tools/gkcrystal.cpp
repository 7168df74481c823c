#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "gk/cli.hpp"

int main(int argc, char** argv) {
  using namespace gk::cli;
  using gk::Strategy;

  CLI::App app{"Marginally large tableaux, BZL paths and the Gindikin-Karpelevich identity in type A"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string output;
  int rank = 0;
  int depth = -1;

  const std::map<std::string, Format> formats{{"json", Format::json}, {"tsv", Format::tsv}, {"dot", Format::dot}};
  const std::map<std::string, Strategy> strategies{{"bfs", Strategy::bfs}, {"direct", Strategy::direct}};
  const std::map<std::string, DatumKind> kinds{{"lusztig", DatumKind::lusztig}, {"string", DatumKind::string}};

  struct Sub {
    const char* name;
    const char* help;
    Command command;
  };
  const Sub subs[] = {
      {"enumerate", "Tabulate every element up to the given depth", Command::enumerate},
      {"verify", "Compare the root product with the crystal sum", Command::verify},
      {"graph", "Emit the crystal graph as DOT", Command::graph},
      {"param", "Show all parametrizations of one tableau", Command::param},
      {"convert", "Convert a Lusztig datum or string parametrization", Command::convert},
  };
  Format format = Format::tsv;
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("-r,--rank", rank, "Rank r of sl_{r+1}");
    sub->add_option("-d,--depth", depth, "Height cap D");
    sub->add_option("--format", format, "json, tsv or dot")->transform(CLI::CheckedTransformer(formats));
    sub->add_option("--strategy", cfg.strategy, "bfs or direct")->transform(CLI::CheckedTransformer(strategies));
    sub->add_option("-o,--output", output, "Write to a file instead of standard output");
    sub->add_option("--max-rank", cfg.max_rank, "Safety limit on the rank")->capture_default_str();
    if (s.command == Command::graph) sub->add_flag("--coefficients", cfg.coefficients, "Label nodes with (1-t^-1)^seg");
    if (s.command == Command::param) sub->add_option("tableau", cfg.input, "Tableau, e.g. 2,3/3")->required();
    if (s.command == Command::convert) {
      sub->add_option("datum", cfg.input, "Datum, e.g. (1;1,1)")->required();
      sub->add_option("--from", cfg.from, "lusztig or string")->transform(CLI::CheckedTransformer(kinds));
    }
    sub->callback([&cfg, &s] { cfg.command = s.command; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_code::ok : exit_code::usage;
  }

  for (CLI::App* sub : app.get_subcommands()) {
    if (sub->count("--rank")) cfg.rank = rank;
    if (sub->count("--depth")) cfg.depth = depth;
    if (sub->count("--format")) cfg.format = format;
  }

  const CommandResult result = run(cfg);
  std::cerr << result.err;
  if (!output.empty() && result.exit_code != exit_code::usage && result.exit_code != exit_code::parse) {
    std::ofstream file(output, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open " << output << "\n";
      return exit_code::usage;
    }
    file << result.out;
  } else {
    std::cout << result.out;
  }
  return result.exit_code;
}

// hvff: run a named verification suite and print a text or JSON report.
// Exit 0 when every check passes, 1 when one fails, 2 on usage errors.

#include <CLI11.hpp>
#include <iostream>

#include "hvff/suites.hpp"

namespace {

std::string usage() {
  std::string s = "usage: hvff <command> [flags]\ncommands:";
  for (const auto& n : hvff::suite_names()) s += " " + n;
  return s + "\nrun hvff --help for flags\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suites for the Heisenberg-Virasoro algebra at level zero"};
  app.set_help_flag("--help", "print usage");
  hvff::RunConfig cfg;
  std::string p_range, q_range, mode = "symbolic", format = "text";
  std::map<std::string, std::string> values;
  app.add_option("command", cfg.command, "singular | screening | kernel | tensor | fusion | w22 | chars")->required();
  app.add_option("--p", cfg.p, "p (h_I/c_LI - 1 up to sign, or the grade)");
  app.add_option("--q", cfg.q, "q");
  app.add_option("--N", cfg.N, "truncation grade");
  for (const char* key : {"cL", "cLI", "h", "hI", "hp", "F", "a", "b"}) {
    app.add_option(std::string("--") + key, values[key], "scalar literal or parameter name");
  }
  app.add_option("--p-range", p_range, "fusion table rows, a..b");
  app.add_option("--q-range", q_range, "fusion table columns, a..b");
  app.add_option("--mode", mode, "symbolic or numeric")->check(CLI::IsMember({"symbolic", "numeric"}));
  app.add_option("--seed", cfg.seed, "seed for random specializations");
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n' << usage();
    return 2;
  }

  for (const auto& [k, v] : values) {
    if (!v.empty()) cfg.bindings[k] = v;
  }
  cfg.numeric = mode == "numeric";
  try {
    if (!p_range.empty()) cfg.p_range = hvff::parse_range(p_range);
    if (!q_range.empty()) cfg.q_range = hvff::parse_range(q_range);
    const hvff::Report rep = hvff::run_suite(cfg);
    std::cout << (format == "json" ? rep.to_json() + "\n" : rep.to_text());
    if (!rep.ok()) {
      for (const auto& it : rep.items) {
        if (!it.pass) std::cerr << "failed: " << it.id << " [" << it.anchor << "]\n";
      }
      return 1;
    }
    return 0;
  } catch (const hvff::UnknownCommand& e) {
    std::cerr << e.what() << '\n' << usage();
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

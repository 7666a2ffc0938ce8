// csext command-line driver.
//
//   csext verify kk|central|psi|counterexample|all [flags]
//   csext info FILE
//   csext green FILE
//   csext congruences FILE
//
// Exit status: 0 all checks pass, 1 some check fails, 2 usage error,
// 3 parse or validation error.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "csext/suites.hpp"

namespace {

  std::vector<csext::element_id> parse_ids(std::string const& text) {
    std::vector<csext::element_id> out;
    std::stringstream              ss(text);
    std::string                    item;
    while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      unsigned long v  = 0;
      try {
        v = std::stoul(item, &used);
      } catch (std::exception const&) {
        used = 0;
      }
      if (used == 0 || used != item.size()) {
        throw csext::UsageError("--normal: '" + item + "' is not an element id");
      }
      out.push_back(static_cast<csext::element_id>(v));
    }
    return out;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Embeddings of completely simple semigroup extensions"};
  app.require_subcommand(1);

  csext::SuiteOptions opts;
  std::string         suite;
  std::string         normal;
  std::size_t         jobs = 1;

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "kk, central, psi, counterexample or all")
      ->required();
  verify->add_option("--group", opts.group, "group file");
  verify->add_option("--rms", opts.rms, "Rees matrix semigroup file");
  verify->add_option("--normal", normal, "comma-separated normal subgroup ids");
  verify->add_option("--jobs", jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  verify->add_option("--cert", opts.cert, "write the certificate here");

  std::string file;
  std::pair<char const*, char const*> const inspect[] = {
      {"info", "sizes, centrality, Green counts and subgroup summary"},
      {"green", "Green classes against Rees coordinates"},
      {"congruences", "group congruences of a Rees matrix semigroup"}};
  for (auto const& [name, about] : inspect) {
    auto* sub = app.add_subcommand(name, about);
    sub->add_option("FILE", file, "group or Rees matrix semigroup file")
        ->required();
    sub->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    opts.jobs = jobs;
    if (!normal.empty()) {
      opts.normal = parse_ids(normal);
    }
    if (verify->parsed()) {
      if (opts.rms && opts.group) {
        throw csext::UsageError("--group and --rms are exclusive");
      }
    } else {
      opts.file = file;
      suite     = app.get_subcommands().front()->get_name();
    }
    csext::Report const report = csext::run_suite(suite, opts);
    std::cout << report.text();
    return report.pass() ? 0 : 1;
  } catch (csext::UsageError const& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (csext::Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == csext::ErrorCode::UnknownSuite ? 2 : 3;
  }
}

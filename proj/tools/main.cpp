// braidquot: build presentations, enumerate, abelianize, identify, and run
// the reproduction battery.
//
// Exit codes: 0 success, 1 usage or input error (and failed suite records),
// 2 when the only problem is an enumeration that hit its coset cap.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "braidquot/abelianizer.hpp"
#include "braidquot/catalog.hpp"
#include "braidquot/enumerator.hpp"
#include "braidquot/identify.hpp"
#include "braidquot/presentation_json.hpp"
#include "braidquot/suite.hpp"

namespace {

using namespace braidquot;

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_inconclusive = 2;

std::size_t default_cap()
{
  if (char const *env = std::getenv("BRAIDQUOT_MAX_COSETS")) {
    try {
      std::size_t pos = 0;
      auto v = std::stoull(env, &pos);
      if (pos == std::string(env).size() && v > 0)
        return static_cast<std::size_t>(v);
    } catch (std::exception const &) {
    }
    throw std::invalid_argument("BRAIDQUOT_MAX_COSETS must be a positive integer");
  }
  return default_max_cosets;
}

std::string read_source(std::string const &path)
{
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::map<std::string, int> parse_params(std::vector<std::string> const &args)
{
  std::map<std::string, int> params;
  for (auto const &a : args) {
    auto eq = a.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument("parameter must look like key=value: " + a);
    auto key = a.substr(0, eq);
    auto text = a.substr(eq + 1);
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(text, &pos);
    } catch (std::exception const &) {
      pos = 0;
    }
    if (text.empty() || pos != text.size())
      throw std::invalid_argument("parameter value must be an integer: " + a);
    if (!params.emplace(key, value).second)
      throw std::invalid_argument("parameter given twice: " + key);
  }
  return params;
}

struct EnumerationFlags {
  std::size_t max_cosets = 0;
  std::string strategy = "hlt";

  void attach(CLI::App *cmd)
  {
    cmd->add_option("--max-cosets", max_cosets,
                    "coset table cap (default 5000000 or $BRAIDQUOT_MAX_COSETS)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--strategy", strategy, "hlt or felsch")
        ->check(CLI::IsMember({"hlt", "felsch"}));
  }

  EnumerationOptions options() const
  {
    EnumerationOptions o;
    o.max_cosets = max_cosets ? max_cosets : default_cap();
    o.strategy = strategy_from_string(strategy);
    return o;
  }
};

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Coset enumeration and abelianization for braid group quotients"};
  app.require_subcommand(1);

  // build
  auto *build = app.add_subcommand("build", "print a catalog presentation as JSON");
  std::string builder;
  std::vector<std::string> build_args;
  bool list = false;
  build->add_flag("--list", list, "list builders and their parameters");
  build->add_option("builder", builder, "builder name");
  build->add_option("params", build_args, "key=value integer parameters");

  // order
  auto *order = app.add_subcommand("order", "enumerate the group order");
  std::string order_src;
  bool order_json = false;
  EnumerationFlags order_flags;
  order->add_option("presentation", order_src, "presentation JSON file, - for stdin");
  order->add_flag("--json", order_json, "print the enumeration result as JSON");
  order_flags.attach(order);

  // abelian
  auto *abelian = app.add_subcommand("abelian", "abelian invariants as JSON");
  std::string abelian_src;
  abelian->add_option("presentation", abelian_src, "presentation JSON file, - for stdin");

  // identify
  auto *ident = app.add_subcommand("identify", "structure report as JSON");
  std::string ident_src;
  EnumerationFlags ident_flags;
  ident->add_option("presentation", ident_src, "presentation JSON file, - for stdin");
  ident_flags.attach(ident);

  // paper-suite
  auto *suite_cmd = app.add_subcommand("paper-suite", "run the reproduction battery");
  std::string format = "json";
  bool timings = false;
  EnumerationFlags suite_flags;
  suite_cmd->add_option("--format", format, "json or markdown")
      ->check(CLI::IsMember({"json", "markdown"}));
  suite_cmd->add_flag("--timings", timings, "include per-record runtimes");
  suite_flags.attach(suite_cmd);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e);
  } catch (CLI::ParseError const &e) {
    app.exit(e);
    return exit_error;
  }

  try {
    if (*build) {
      if (list) {
        for (auto const &b : catalog::builders()) {
          std::cout << b.name;
          for (auto const &p : b.required)
            std::cout << ' ' << p << "=<int>";
          for (auto const &p : b.optional)
            std::cout << " [" << p << "=<int>]";
          std::cout << "  " << b.summary << '\n';
        }
        return exit_ok;
      }
      if (builder.empty())
        throw std::invalid_argument("build needs a builder name (see build --list)");
      std::cout << to_json(catalog::build(builder, parse_params(build_args))) << '\n';
      return exit_ok;
    }

    if (*order) {
      auto p = presentation_from_json(read_source(order_src));
      auto r = enumerate(p, {}, order_flags.options());
      if (order_json)
        std::cout << to_json(r) << '\n';
      else if (r.finite())
        std::cout << r.index << '\n';
      else
        std::cout << "INCONCLUSIVE\n";
      return r.finite() ? exit_ok : exit_inconclusive;
    }

    if (*abelian) {
      auto p = presentation_from_json(read_source(abelian_src));
      std::cout << to_json(abelian_invariants(p)) << '\n';
      return exit_ok;
    }

    if (*ident) {
      auto p = presentation_from_json(read_source(ident_src));
      auto report = analyze(p, ident_flags.options());
      std::cout << to_json(report) << '\n';
      return report.order ? exit_ok : exit_inconclusive;
    }

    if (*suite_cmd) {
      auto opts = suite_flags.options();
      auto report = suite::run({opts.max_cosets, opts.strategy});
      if (format == "markdown")
        std::cout << suite::to_markdown(report, timings);
      else
        std::cout << suite::to_json(report, timings) << '\n';
      return report.exit_code();
    }
  } catch (std::exception const &e) {
    std::cerr << "braidquot: " << e.what() << '\n';
    return exit_error;
  }
  return exit_error;
}

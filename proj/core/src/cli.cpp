#include "valdim/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "valdim/dot.hpp"
#include "valdim/dsl.hpp"
#include "valdim/dsl_eval.hpp"
#include "valdim/errors.hpp"
#include "valdim/scenarios.hpp"

namespace valdim {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void selftest_pass(std::ostream& out) {
  for (const std::string& name : builtin_scenarios()) {
    if (scenario_transcript(name).empty()) throw Error("empty transcript for " + name);
  }
  if (scenario_transcript("wigner").find("incompatibility detected after observation: true") ==
      std::string::npos) {
    throw Error("wigner transcript lost its incompatibility verdict");
  }
  if (fossowamba_lrv()->dimension("V7").poset.size() != 16) {
    throw Error("catalogue dimension V7 drifted from 16 elements");
  }
  const std::string snippet =
      "dim D = base{b, a} order{a < b}\nstate K = { D: b }\ncompare K K\n";
  const ParseOutcome first = parse(snippet);
  if (!first.ok()) throw Error("inline snippet failed to parse");
  const std::string canon = serialize(*first.doc);
  const ParseOutcome second = parse(canon);
  if (!second.ok() || serialize(*second.doc) != canon) {
    throw Error("canonical form is not a parse fixed point");
  }
  const BuiltDocument built = build_document(*first.doc);
  if (run_queries(*first.doc, built) != "compare K K: equal\n") {
    throw Error("trivial comparison gave a non-equal answer");
  }
  out << "selftest: ok\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"value-dimension documents: check, evaluate, and export", "vdl"};
  std::size_t max_carrier = kDefaultMaxCarrier;
  app.add_option("--max-carrier", max_carrier, "carrier size cap per dimension")
      ->capture_default_str();
  app.require_subcommand(1);

  std::string file;
  std::string dim;
  std::string name;
  CLI::App* check = app.add_subcommand("check", "parse a document and print its canonical form");
  check->add_option("file", file, "document path")->required();
  CLI::App* eval = app.add_subcommand("eval", "evaluate a document and run its queries");
  eval->add_option("file", file, "document path")->required();
  CLI::App* dot = app.add_subcommand("dot", "export one dimension's cover diagram as Graphviz");
  dot->add_option("file", file, "document path")->required();
  dot->add_option("dim", dim, "dimension name")->required();
  CLI::App* scenario = app.add_subcommand("scenario", "print a built-in scenario transcript");
  scenario->add_option("name", name, "one of: ellsberg, fossowamba, wigner")->required();
  CLI::App* selftest = app.add_subcommand("selftest", "run a quick internal consistency pass");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 64;
  }

  try {
    const EvalOptions options{max_carrier};
    if (app.got_subcommand(check) || app.got_subcommand(eval) || app.got_subcommand(dot)) {
      const ParseOutcome parsed = parse(read_file(file));
      if (!parsed.ok()) {
        err << file << ": " << parsed.error->to_string() << "\n";
        return 2;
      }
      if (app.got_subcommand(check)) {
        out << serialize(*parsed.doc);
        return 0;
      }
      const BuiltDocument built = build_document(*parsed.doc, options);
      if (app.got_subcommand(eval)) {
        out << run_queries(*parsed.doc, built);
        return 0;
      }
      out << export_dot(built.lrv->dimension(dim).poset, dim);
      return 0;
    }
    if (app.got_subcommand(scenario)) {
      out << scenario_transcript(name);
      return 0;
    }
    if (app.got_subcommand(selftest)) {
      selftest_pass(out);
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 64;
}

}  // namespace valdim

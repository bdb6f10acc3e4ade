#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cluster/commands.hpp"
#include "cluster/error.hpp"
#include "cluster/io.hpp"
#include "cluster/reptheory.hpp"

namespace cluster::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  out << text;
}

std::string join(const json& arr) {
  std::string s;
  for (const auto& v : arr) {
    if (!s.empty()) s += ',';
    s += v.dump();
  }
  return s;
}

struct Options {
  std::string quiver_file;
  std::string seed_file;
  std::string rep_file;
  std::string type;
  std::string at;
  std::string dot_file;
  std::size_t limit = 0;
  int shifted = 0;
  bool json_out = false;
  bool show_new = false;
  bool pretty = false;
  bool stats = false;
  bool count = false;
  bool no_early_exit = false;
  bool quiver_only = false;
};

Quiver load_quiver(const Options& o) { return quiver_from_json(read_json(o.quiver_file)); }

int finish(const json& result, std::ostream& out, bool json_out, const std::string& text) {
  if (json_out) out << result.dump() << '\n';
  else out << text;
  return result.value("truncated", false) ? kTruncated : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with quivers, seeds and cluster variables", "clusterq"};
  app.require_subcommand(1);
  Options o;

  auto add_quiver = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--quiver", o.quiver_file, "Quiver JSON file");
    if (required) opt->required();
  };
  auto add_limit = [&](CLI::App* sub, std::size_t fallback) {
    o.limit = fallback;
    sub->add_option("--limit", o.limit, "Exploration cap (exit status 3 when hit)")->check(CLI::PositiveNumber);
  };

  auto* mutate = app.add_subcommand("mutate", "Mutate a seed along a sequence of vertices");
  add_quiver(mutate, false);
  mutate->add_option("--seed", o.seed_file, "Seed JSON file (quiver plus cluster)");
  mutate->add_option("--at", o.at, "Comma-separated 1-based vertices")->required();
  mutate->add_flag("--show-new", o.show_new, "Print only the variable created by each step");
  mutate->add_flag("--pretty", o.pretty, "Print variables as fractions");
  mutate->add_flag("--quiver-only", o.quiver_only, "Mutate the quiver alone");
  mutate->add_flag("--json", o.json_out, "JSON output");
  mutate->add_option("--dot", o.dot_file, "Write the final quiver as DOT");

  auto* explore = app.add_subcommand("explore", "Enumerate the exchange graph");
  add_quiver(explore, true);
  explore->add_option("--limit", o.limit, "Maximum number of seeds")->check(CLI::PositiveNumber);
  explore->add_flag("--count", o.count, "Print only seed and variable counts");
  explore->add_flag("--json", o.json_out, "JSON output with the full graph");
  explore->add_option("--dot", o.dot_file, "Write the exchange graph as DOT");

  auto* klass = app.add_subcommand("class", "Enumerate the mutation class up to isomorphism");
  add_quiver(klass, true);
  klass->add_option("--limit", o.limit, "Maximum number of quivers")->check(CLI::PositiveNumber);
  klass->add_flag("--stats", o.stats, "Print only the census line");
  klass->add_flag("--json", o.json_out, "JSON output");
  klass->add_option("--dot", o.dot_file, "Write the mutation graph as DOT");

  auto* classify = app.add_subcommand("classify", "Decide finite or infinite cluster type");
  add_quiver(classify, true);
  classify->add_option("--limit", o.limit, "Maximum number of quivers")->check(CLI::PositiveNumber);
  classify->add_flag("--no-early-exit", o.no_early_exit, "Decide only by reaching a Dynkin orientation");
  classify->add_flag("--json", o.json_out, "JSON output");

  auto* vars = app.add_subcommand("variables", "List all cluster variables");
  add_quiver(vars, true);
  vars->add_option("--limit", o.limit, "Maximum number of seeds")->check(CLI::PositiveNumber);
  vars->add_flag("--pretty", o.pretty, "Print variables as fractions");
  vars->add_flag("--json", o.json_out, "JSON output");

  auto* roots = app.add_subcommand("roots", "Positive roots of a Dynkin type or orientation");
  add_quiver(roots, false);
  roots->add_option("--type", o.type, "Dynkin type such as A3, D4, E6");
  roots->add_flag("--json", o.json_out, "JSON output");

  auto* cc = app.add_subcommand("cc", "Caldero-Chapoton value of a representation or shifted projective");
  add_quiver(cc, false);
  cc->add_option("--rep", o.rep_file, "Representation JSON file");
  cc->add_option("--shifted", o.shifted, "1-based vertex i of the shifted projective");
  cc->add_flag("--pretty", o.pretty, "Print as a fraction");
  cc->add_flag("--json", o.json_out, "JSON output");

  auto* verify = app.add_subcommand("verify", "Check exchange relations, root and CC bijections");
  add_quiver(verify, true);
  verify->add_option("--limit", o.limit, "Maximum number of seeds")->check(CLI::PositiveNumber);
  verify->add_flag("--json", o.json_out, "JSON output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kUsageError;
  }

  const std::size_t seed_limit = o.limit ? o.limit : 100'000;
  const std::size_t class_limit = o.limit ? o.limit : 1'000'000;

  try {
    if (mutate->parsed()) {
      if (o.quiver_file.empty() == o.seed_file.empty()) {
        err << "usage error: mutate needs exactly one of --quiver and --seed\n";
        return kUsageError;
      }
      Seed seed = o.seed_file.empty() ? Seed::initial(load_quiver(o)) : seed_from_json(read_json(o.seed_file));
      const json r = commands::mutate(seed, commands::parse_sequence(o.at), o.quiver_only);
      if (!o.dot_file.empty()) write_file(o.dot_file, quiver_to_dot(quiver_from_json(r.at("quiver"))));
      std::ostringstream text;
      if (o.show_new && !o.quiver_only) {
        for (const auto& s : r.at("steps"))
          text << "u" << s.at("vertex").get<int>() << "' = "
               << (o.pretty ? s.at("fraction") : s.at("text")).get<std::string>() << '\n';
      } else {
        text << "quiver " << r.at("quiver").dump() << '\n';
        if (!o.quiver_only) {
          const auto& list = r.at(o.pretty ? "fractions" : "cluster");
          for (std::size_t i = 0; i < list.size(); ++i)
            text << "u" << i + 1 << " = " << list[i].get<std::string>() << '\n';
        }
      }
      return finish(r, out, o.json_out, text.str());
    }
    if (explore->parsed()) {
      const Quiver q = load_quiver(o);
      const json r = commands::explore(q, seed_limit, o.json_out);
      if (!o.dot_file.empty()) write_file(o.dot_file, exchange_graph_to_dot(exchange_graph(q, {seed_limit})));
      std::ostringstream text;
      if (o.count) text << "seeds=" << r.at("seeds") << " variables=" << r.at("variables") << '\n';
      else
        text << "seeds=" << r.at("seeds") << " edges=" << r.at("edges") << " variables=" << r.at("variables")
             << " truncated=" << r.at("truncated") << '\n';
      return finish(r, out, o.json_out, text.str());
    }
    if (klass->parsed()) {
      const Quiver q = load_quiver(o);
      const json r = commands::mutation_class(q, class_limit, o.json_out && !o.stats);
      if (!o.dot_file.empty()) write_file(o.dot_file, mutation_class_to_dot(cluster::mutation_class(q, {class_limit})));
      std::ostringstream text;
      text << "size=" << r.at("size") << " double_arrows=" << r.at("double_arrows") << " max_mult=" << r.at("max_mult");
      if (!o.stats) text << " truncated=" << r.at("truncated");
      text << '\n';
      return finish(r, out, o.json_out, text.str());
    }
    if (classify->parsed()) {
      const json r = commands::classify(load_quiver(o), class_limit, !o.no_early_exit);
      std::ostringstream text;
      text << r.at("verdict").get<std::string>();
      if (r.contains("type")) text << ' ' << r.at("type").get<std::string>();
      text << " witness=" << join(r.at("witness")) << " explored=" << r.at("explored") << '\n';
      return finish(r, out, o.json_out, text.str());
    }
    if (vars->parsed()) {
      const json r = commands::variables(load_quiver(o), seed_limit);
      std::ostringstream text;
      for (const auto& v : r.at(o.pretty ? "fractions" : "variables")) text << v.get<std::string>() << '\n';
      return finish(r, out, o.json_out, text.str());
    }
    if (roots->parsed()) {
      if (o.type.empty() == o.quiver_file.empty()) {
        err << "usage error: roots needs exactly one of --type and --quiver\n";
        return kUsageError;
      }
      const json r = o.type.empty() ? commands::roots(load_quiver(o)) : commands::roots(parse_dynkin_type(o.type));
      std::ostringstream text;
      text << r.at("type").get<std::string>() << ' ' << r.at("count") << " positive roots\n";
      for (const auto& root : r.at("roots")) text << '(' << join(root) << ")\n";
      return finish(r, out, o.json_out, text.str());
    }
    if (cc->parsed()) {
      json request;
      if (!o.rep_file.empty()) {
        request = {{"representation", read_json(o.rep_file)}};
      } else if (!o.quiver_file.empty() && o.shifted > 0) {
        request = {{"quiver", read_json(o.quiver_file)}, {"shifted", o.shifted}};
      } else {
        err << "usage error: cc needs --rep, or --quiver with --shifted\n";
        return kUsageError;
      }
      const json r = commands::cc(request);
      return finish(r, out, o.json_out, (o.pretty ? r.at("fraction") : r.at("text")).get<std::string>() + "\n");
    }
    if (verify->parsed()) {
      const json r = commands::verify(load_quiver(o), seed_limit);
      std::ostringstream text;
      for (const char* part : {"edges", "roots", "cc"})
        if (r.contains(part)) text << part << ": " << (r.at(part).at("ok").get<bool>() ? "ok" : "FAIL") << ' ' << r.at(part).dump() << '\n';
      text << (r.at("ok").get<bool>() ? "ok" : "FAIL") << '\n';
      const int code = finish(r, out, o.json_out, text.str());
      return code == kOk && !r.at("ok").get<bool>() ? kDomainError : code;
    }
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.detail() << '\n';
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace cluster::cli

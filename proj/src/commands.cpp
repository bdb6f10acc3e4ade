#include "cluster/commands.hpp"

#include <sstream>

#include "cluster/error.hpp"
#include "cluster/io.hpp"
#include "cluster/reptheory.hpp"
#include "cluster/roots.hpp"

namespace cluster::commands {

namespace {

json texts(const std::vector<LaurentPoly>& polys) {
  json out = json::array();
  for (const auto& p : polys) out.push_back(p.text());
  return out;
}

json fractions(const std::vector<LaurentPoly>& polys) {
  json out = json::array();
  for (const auto& p : polys) out.push_back(p.fraction());
  return out;
}

int to_vertex(const Quiver& q, int one_based) {
  if (one_based < 1 || one_based > q.size())
    throw Error(ErrorKind::InvalidArgument,
                "vertex " + std::to_string(one_based) + " out of range 1.." + std::to_string(q.size()));
  return one_based - 1;
}

}  // namespace

std::vector<int> parse_sequence(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw Error(ErrorKind::ParseError, "bad vertex '" + item + "'");
    out.push_back(v);
  }
  return out;
}

json mutate(const Seed& seed, const std::vector<int>& at, bool quiver_only) {
  json steps = json::array();
  if (quiver_only) {
    Quiver q = seed.quiver;
    for (int v : at) {
      q = mutate_quiver(q, to_vertex(q, v));
      steps.push_back({{"vertex", v}});
    }
    return {{"quiver", quiver_to_json(q)}, {"steps", std::move(steps)}};
  }
  Seed s = seed;
  for (int v : at) {
    const int k = to_vertex(s.quiver, v);
    s = mutate_seed(s, k);
    const LaurentPoly& fresh = s.cluster[static_cast<std::size_t>(k)];
    steps.push_back({{"vertex", v}, {"text", fresh.text()}, {"fraction", fresh.fraction()}});
  }
  return {{"quiver", quiver_to_json(s.quiver)},
          {"cluster", texts(s.cluster)},
          {"fractions", fractions(s.cluster)},
          {"steps", std::move(steps)}};
}

json explore(const Quiver& q, std::size_t limit, bool full) {
  ExchangeGraph g = exchange_graph(q, {limit});
  const auto vars = collect_cluster_variables(g);
  json out = {{"seeds", g.seeds.size()},
              {"edges", g.edges.size()},
              {"variables", vars.size()},
              {"truncated", g.truncated}};
  if (full) out["graph"] = exchange_graph_to_json(g);
  return out;
}

json variables(const Quiver& q, std::size_t limit) {
  ExchangeGraph g = exchange_graph(q, {limit});
  const auto vars = collect_cluster_variables(g);
  return {{"variables", texts(vars)}, {"fractions", fractions(vars)}, {"truncated", g.truncated}};
}

json mutation_class(const Quiver& q, std::size_t limit, bool full) {
  MutationClass mc = cluster::mutation_class(q, {limit});
  json out = {{"size", mc.size()},
              {"double_arrows", mc.double_arrows},
              {"max_mult", mc.max_multiplicity},
              {"truncated", mc.truncated}};
  if (full) out["graph"] = mutation_class_to_json(mc);
  return out;
}

json classify(const Quiver& q, std::size_t limit, bool early_exit) {
  ClassifyOptions options;
  options.max_quivers = limit;
  options.early_exit = early_exit;
  const ClassificationResult r = cluster::classify(q, options);
  json witness = json::array();
  for (int k : r.witness) witness.push_back(k + 1);
  json out = {{"verdict", to_string(r.verdict)},
              {"witness", std::move(witness)},
              {"explored", r.explored},
              {"class_exhausted", r.class_exhausted},
              {"truncated", r.verdict == Verdict::DepthExhausted}};
  if (r.type) out["type"] = to_string(*r.type);
  if (r.witness_quiver) out["quiver"] = quiver_to_json(*r.witness_quiver);
  return out;
}

json roots(const DynkinType& t) {
  const auto rs = positive_roots(t);
  return {{"type", to_string(t)}, {"count", rs.size()}, {"roots", rs}};
}

json roots(const Quiver& q) {
  auto t = dynkin_type(q);
  if (!t) throw Error(ErrorKind::PreconditionViolated, "quiver is not a Dynkin orientation");
  const auto rs = positive_roots(q);
  return {{"type", to_string(*t)}, {"count", rs.size()}, {"roots", rs}};
}

namespace {

CCObject object_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "object expected");
  if (j.contains("representation")) return CCObject(representation_from_json(j.at("representation")));
  if (j.contains("shifted")) {
    if (!j.contains("quiver")) throw Error(ErrorKind::ParseError, "shifted projective needs a \"quiver\"");
    Quiver q = quiver_from_json(j.at("quiver"));
    const auto& v = j.at("shifted");
    if (!v.is_number_integer()) throw Error(ErrorKind::ParseError, "\"shifted\" must be a vertex number");
    return CCObject(q, ShiftedProjective{to_vertex(q, v.get<int>())});
  }
  if (j.contains("dims")) return CCObject(representation_from_json(j));
  throw Error(ErrorKind::ParseError, "expected \"representation\" or \"shifted\"");
}

}  // namespace

json cc(const json& request) {
  LaurentPoly value(1);
  if (request.is_object() && request.contains("summands")) {
    const auto& list = request.at("summands");
    if (!list.is_array() || list.empty()) throw Error(ErrorKind::ParseError, "\"summands\" must be a nonempty array");
    std::vector<CCObject> objs;
    for (const auto& s : list) objs.push_back(object_from_json(s));
    for (const auto& o : objs)
      if (o.quiver() != objs.front().quiver()) throw Error(ErrorKind::InvalidArgument, "summands use different quivers");
    value = cc_value(objs);
  } else {
    value = cc_value(object_from_json(request));
  }
  return {{"text", value.text()}, {"fraction", value.fraction()}};
}

json verify(const Quiver& q, std::size_t limit) {
  json out = json::object();
  bool ok = true;
  const ExchangeGraph g = exchange_graph(q, {limit});
  out["truncated"] = g.truncated;
  if (!g.truncated) {
    const EdgeReport edges = verify_exchange_edges(g);
    json violations = json::array();
    for (const auto& v : edges.violations) violations.push_back(v.detail);
    out["edges"] = {{"checked", edges.checked}, {"violations", std::move(violations)}, {"ok", edges.ok()}};
    ok = ok && edges.ok();
  }
  if (auto t = dynkin_type(q)) {
    const RootBijectionReport r = verify_root_bijection(q, {limit});
    out["roots"] = {{"type", to_string(r.type)},
                    {"variables", r.variables},
                    {"roots", r.roots},
                    {"count_matches", r.count_matches},
                    {"bijective", r.bijective},
                    {"ok", r.ok()}};
    ok = ok && r.ok();
    if (t->family == DynkinFamily::A && q.size() <= 5) {
      const CCBijectionReport c = verify_cc_bijection(q);
      out["cc"] = {{"objects", c.objects.size()},
                   {"all_rigid", c.all_rigid},
                   {"values_match", c.values_match},
                   {"tilting_subsets", c.tilting_subsets},
                   {"seeds", c.seeds},
                   {"ok", c.ok()}};
      ok = ok && c.ok();
    }
  }
  out["ok"] = ok && !g.truncated;
  return out;
}

}  // namespace cluster::commands

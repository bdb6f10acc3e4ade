#include "cluster/io.hpp"

#include <set>
#include <sstream>

#include "cluster/error.hpp"

namespace cluster {

using nlohmann::json;

json seed_to_json(const Seed& s) {
  json cluster = json::array();
  for (const auto& u : s.cluster) cluster.push_back(u.text());
  return {{"quiver", quiver_to_json(s.quiver)}, {"cluster", std::move(cluster)}};
}

Seed seed_from_json(const json& j) {
  if (!j.is_object() || !j.contains("quiver")) throw Error(ErrorKind::ParseError, "seed needs a \"quiver\"");
  Quiver q = quiver_from_json(j.at("quiver"));
  if (!j.contains("cluster") || j.at("cluster").is_null()) return Seed::initial(q);
  const auto& c = j.at("cluster");
  if (!c.is_array() || static_cast<int>(c.size()) != q.size())
    throw Error(ErrorKind::ParseError, "cluster must list one variable per vertex");
  Seed s{q, {}};
  std::set<std::string> seen;
  for (const auto& entry : c) {
    if (!entry.is_string()) throw Error(ErrorKind::ParseError, "cluster entries are strings");
    LaurentPoly u = parse_laurent(entry.get<std::string>(), q.size());
    if (u.is_zero()) throw Error(ErrorKind::InvalidArgument, "cluster variable is zero");
    if (!seen.insert(u.text()).second) throw Error(ErrorKind::InvalidArgument, "repeated cluster variable");
    s.cluster.push_back(std::move(u));
  }
  return s;
}

namespace {

mpq_class parse_entry(const json& x) {
  try {
    if (x.is_number_integer()) return mpq_class(mpz_class(std::to_string(x.get<long long>())));
    if (x.is_string()) {
      mpq_class v(x.get<std::string>());
      if (v.get_den() == 0) throw Error(ErrorKind::ParseError, "zero denominator");
      v.canonicalize();
      return v;
    }
  } catch (const std::invalid_argument&) {
  }
  throw Error(ErrorKind::ParseError, "matrix entry must be an integer or a \"p/q\" string: " + x.dump());
}

}  // namespace

json representation_to_json(const Representation& v) {
  json maps = json::object();
  for (std::size_t a = 0; a < v.maps().size(); ++a) {
    const auto& m = v.maps()[a];
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
      rows.push_back(std::move(row));
    }
    maps[std::to_string(a + 1)] = std::move(rows);
  }
  return {{"quiver", quiver_to_json(v.quiver())}, {"dims", v.dims()}, {"maps", std::move(maps)}};
}

Representation representation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("quiver") || !j.contains("dims"))
    throw Error(ErrorKind::ParseError, "representation needs \"quiver\" and \"dims\"");
  Quiver q = quiver_from_json(j.at("quiver"));
  const auto& d = j.at("dims");
  if (!d.is_array()) throw Error(ErrorKind::ParseError, "\"dims\" must be an array");
  std::vector<int> dims;
  for (const auto& x : d) {
    if (!x.is_number_integer() || x.get<long long>() < 0 || x.get<long long>() > 64)
      throw Error(ErrorKind::InvalidArgument, "bad dimension " + x.dump());
    dims.push_back(x.get<int>());
  }
  Representation zero = Representation::zero_maps(q, dims);
  std::vector<QMatrix> maps = zero.maps();
  if (j.contains("maps")) {
    const auto& m = j.at("maps");
    if (!m.is_object()) throw Error(ErrorKind::ParseError, "\"maps\" must be an object");
    for (const auto& [key, rows] : m.items()) {
      std::size_t a = 0;
      try {
        std::size_t used = 0;
        a = std::stoul(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "bad arrow index \"" + key + "\"");
      }
      if (a < 1 || a > maps.size()) throw Error(ErrorKind::InvalidArgument, "arrow index " + key + " out of range");
      QMatrix& target = maps[a - 1];
      if (!rows.is_array() || static_cast<int>(rows.size()) != target.rows())
        throw Error(ErrorKind::InvalidArgument, "map of arrow " + key + " has wrong shape");
      for (int r = 0; r < target.rows(); ++r) {
        const auto& row = rows[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != target.cols())
          throw Error(ErrorKind::InvalidArgument, "map of arrow " + key + " has wrong shape");
        for (int c = 0; c < target.cols(); ++c) target(r, c) = parse_entry(row[static_cast<std::size_t>(c)]);
      }
    }
  }
  return Representation(std::move(q), std::move(dims), std::move(maps));
}

json exchange_graph_to_json(const ExchangeGraph& g) {
  json vertices = json::array();
  for (std::size_t i = 0; i < g.seeds.size(); ++i) {
    json cluster = json::array();
    for (const auto& u : g.seeds[i].cluster) cluster.push_back(u.text());
    vertices.push_back({{"key", g.keys[i].str()}, {"quiver", quiver_to_json(g.seeds[i].quiver)}, {"cluster", cluster}});
  }
  json edges = json::array();
  for (const auto& e : g.edges) edges.push_back({g.keys[e.a].str(), g.keys[e.b].str(), e.direction + 1});
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

std::string exchange_graph_to_dot(const ExchangeGraph& g) {
  std::ostringstream out;
  out << "graph exchange {\n";
  for (std::size_t i = 0; i < g.seeds.size(); ++i) {
    out << "  s" << i << " [label=\"";
    for (std::size_t k = 0; k < g.seeds[i].cluster.size(); ++k) out << (k ? "\\n" : "") << g.seeds[i].cluster[k].fraction();
    out << "\"];\n";
  }
  for (const auto& e : g.edges) out << "  s" << e.a << " -- s" << e.b << " [label=\"" << e.direction + 1 << "\"];\n";
  out << "}\n";
  return out.str();
}

json mutation_class_to_json(const MutationClass& mc) {
  json vertices = json::array();
  std::vector<std::string> keys;
  for (const auto& m : mc.members) {
    keys.push_back(quiver_key(m));
    vertices.push_back({{"key", keys.back()}, {"quiver", quiver_to_json(m)}});
  }
  json edges = json::array();
  for (const auto& e : mc.edges) edges.push_back({keys[e.a], keys[e.b], e.direction + 1});
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

std::string mutation_class_to_dot(const MutationClass& mc) {
  std::ostringstream out;
  out << "digraph mutation_class {\n";
  for (std::size_t i = 0; i < mc.members.size(); ++i)
    out << "  q" << i << " [label=\"" << quiver_key(mc.members[i]) << "\"];\n";
  for (const auto& e : mc.edges) out << "  q" << e.a << " -> q" << e.b << " [label=\"" << e.direction + 1 << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace cluster

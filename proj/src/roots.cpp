#include "cluster/roots.hpp"

#include <algorithm>
#include <set>

#include "cluster/error.hpp"

namespace cluster {

std::vector<Root> positive_roots(const Quiver& q) {
  const int n = q.size();
  if (q.max_multiplicity() > 1) throw Error(ErrorKind::InvalidArgument, "graph is not simply laced");
  // Root system of finite type has at most 120 positive roots at rank <= 8;
  // anything beyond a generous cap means the graph is not Dynkin.
  const std::size_t cap = 4096;
  std::set<Root> roots;
  std::vector<Root> work;
  for (int i = 0; i < n; ++i) {
    Root a(static_cast<std::size_t>(n), 0);
    a[static_cast<std::size_t>(i)] = 1;
    roots.insert(a);
    work.push_back(a);
  }
  while (!work.empty()) {
    Root beta = std::move(work.back());
    work.pop_back();
    for (int i = 0; i < n; ++i) {
      // <beta, alpha_i^vee> from the Cartan matrix 2 - adjacency.
      int pairing = 2 * beta[static_cast<std::size_t>(i)];
      for (int j = 0; j < n; ++j)
        if (q(i, j) != 0) pairing -= beta[static_cast<std::size_t>(j)];
      if (pairing == 0) continue;
      Root r = beta;
      r[static_cast<std::size_t>(i)] -= pairing;
      if (r[static_cast<std::size_t>(i)] < 0) continue;
      if (roots.insert(r).second) {
        if (roots.size() > cap) throw Error(ErrorKind::InvalidArgument, "root system is not of finite type");
        work.push_back(std::move(r));
      }
    }
  }
  return {roots.begin(), roots.end()};
}

std::vector<Root> positive_roots(const DynkinType& t) { return positive_roots(dynkin_quiver(t)); }

RootBijectionReport verify_root_bijection(const Quiver& q, const ExploreLimits& limits) {
  auto type = dynkin_type(q);
  if (!type) throw Error(ErrorKind::PreconditionViolated, "quiver is not a Dynkin orientation");
  RootBijectionReport report;
  report.type = *type;
  ExchangeGraph g = exchange_graph(q, limits);
  report.truncated = g.truncated;
  const auto variables = collect_cluster_variables(g);
  const auto roots = positive_roots(q);
  report.variables = variables.size();
  report.roots = roots.size();
  report.count_matches = variables.size() == static_cast<std::size_t>(q.size()) + roots.size();

  const Seed initial = Seed::initial(q);
  for (const auto& v : variables) {
    if (std::find(initial.cluster.begin(), initial.cluster.end(), v) != initial.cluster.end()) continue;
    report.denominators.push_back(denominator_vector(v));
  }
  std::sort(report.denominators.begin(), report.denominators.end());
  report.bijective = report.denominators == roots;
  return report;
}

std::string root_text(const Root& r) {
  std::string out = "(";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(r[i]);
  }
  return out + ")";
}

}  // namespace cluster

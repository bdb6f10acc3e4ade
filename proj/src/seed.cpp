#include "cluster/seed.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>
#include <unordered_map>

#include "cluster/error.hpp"

namespace cluster {

namespace {

struct MatrixHash {
  std::size_t operator()(const std::vector<int>& m) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int v : m) {
      h ^= static_cast<std::size_t>(static_cast<unsigned>(v));
      h *= 1099511628211ULL;
    }
    return h;
  }
};

void check_vertex(const Seed& s, int k) {
  if (k < 0 || k >= s.quiver.size())
    throw Error(ErrorKind::InvalidArgument,
                "vertex " + std::to_string(k + 1) + " out of range 1.." + std::to_string(s.quiver.size()));
}

}  // namespace

Seed Seed::initial(const Quiver& q) {
  Seed s{q, {}};
  for (int i = 0; i < q.size(); ++i) s.cluster.push_back(LaurentPoly::variable(q.size(), i));
  return s;
}

Seed Seed::relabeled(std::span<const int> perm) const {
  Seed s{quiver.relabeled(perm), {}};
  s.cluster.reserve(cluster.size());
  for (int old : perm) s.cluster.push_back(cluster[static_cast<std::size_t>(old)]);
  return s;
}

std::pair<LaurentPoly, LaurentPoly> exchange_monomials(const Seed& s, int k) {
  check_vertex(s, k);
  const int n = s.quiver.size();
  Exponents in(static_cast<std::size_t>(n), 0), out(static_cast<std::size_t>(n), 0);
  LaurentPoly in_product = LaurentPoly::constant(n, 1);
  LaurentPoly out_product = LaurentPoly::constant(n, 1);
  for (int i = 0; i < n; ++i) {
    const int to_k = s.quiver.arrows(i, k);
    const int from_k = s.quiver.arrows(k, i);
    if (to_k > 0) in_product *= s.cluster[static_cast<std::size_t>(i)].pow(static_cast<unsigned>(to_k));
    if (from_k > 0) out_product *= s.cluster[static_cast<std::size_t>(i)].pow(static_cast<unsigned>(from_k));
  }
  return {std::move(in_product), std::move(out_product)};
}

Seed mutate_seed(const Seed& s, int k) {
  check_vertex(s, k);
  auto [in_product, out_product] = exchange_monomials(s, k);
  Seed r{mutate_quiver(s.quiver, k), s.cluster};
  r.cluster[static_cast<std::size_t>(k)] =
      exact_divide(in_product + out_product, s.cluster[static_cast<std::size_t>(k)]);
  return r;
}

Seed mutate_seed(const Seed& s, std::span<const int> sequence) {
  Seed r = s;
  for (int k : sequence) r = mutate_seed(r, k);
  return r;
}

std::string SeedKey::str() const {
  std::string out;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(matrix[i]);
  }
  out += '|';
  for (std::size_t i = 0; i < cluster.size(); ++i) {
    if (i) out += ';';
    out += cluster[i];
  }
  return out;
}

std::size_t SeedKeyHash::operator()(const SeedKey& k) const noexcept {
  std::size_t h = MatrixHash{}(k.matrix);
  for (const auto& s : k.cluster) h = h * 31 + std::hash<std::string>{}(s);
  return h;
}

CanonicalSeed canonical_seed(const Seed& s) {
  const int n = s.quiver.size();
  std::vector<std::string> texts;
  texts.reserve(s.cluster.size());
  for (const auto& u : s.cluster) texts.push_back(u.text());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    return texts[static_cast<std::size_t>(a)] < texts[static_cast<std::size_t>(b)];
  });
  for (std::size_t i = 1; i < perm.size(); ++i)
    if (texts[static_cast<std::size_t>(perm[i])] == texts[static_cast<std::size_t>(perm[i - 1])])
      throw Error(ErrorKind::InvalidArgument, "cluster contains a repeated variable");
  CanonicalSeed c{s.relabeled(perm), {}};
  c.key.matrix = c.seed.quiver.matrix();
  c.key.cluster.reserve(texts.size());
  for (int old : perm) c.key.cluster.push_back(std::move(texts[static_cast<std::size_t>(old)]));
  return c;
}

SeedKey canonical_seed_key(const Seed& s) { return canonical_seed(s).key; }

std::vector<std::size_t> ExchangeGraph::degrees() const {
  std::vector<std::size_t> deg(seeds.size(), 0);
  for (const auto& e : edges) {
    ++deg[e.a];
    ++deg[e.b];
  }
  return deg;
}

ExchangeGraph exchange_graph(const Quiver& q, const ExploreLimits& limits) {
  if (limits.max_seeds < 1) throw Error(ErrorKind::InvalidArgument, "seed limit must be at least 1");
  const int n = q.size();
  ExchangeGraph g;
  g.n = n;
  std::unordered_map<SeedKey, std::size_t, SeedKeyHash> index;
  {
    CanonicalSeed root = canonical_seed(Seed::initial(q));
    index.emplace(root.key, 0);
    g.seeds.push_back(std::move(root.seed));
    g.keys.push_back(std::move(root.key));
  }
  // An edge is the unordered pair of seeds together with the two variables
  // exchanged along it.
  std::set<std::tuple<std::size_t, std::size_t, std::string, std::string>> edge_ids;

  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const std::size_t tasks = frontier.size() * static_cast<std::size_t>(n);
    std::vector<std::optional<CanonicalSeed>> results(tasks);
    parallel_for(tasks, limits.threads, [&](std::size_t t) {
      const Seed& s = g.seeds[frontier[t / static_cast<std::size_t>(n)]];
      const int k = static_cast<int>(t % static_cast<std::size_t>(n));
      Seed m = mutate_seed(s, k);
      const LaurentPoly& fresh = m.cluster[static_cast<std::size_t>(k)];
      if (!is_nonnegative(fresh))
        throw Error(ErrorKind::PositivityViolation, "cluster variable " + fresh.text());
      results[t] = canonical_seed(m);
    });

    std::vector<std::size_t> next;
    for (std::size_t t = 0; t < tasks; ++t) {
      const std::size_t a = frontier[t / static_cast<std::size_t>(n)];
      const int k = static_cast<int>(t % static_cast<std::size_t>(n));
      CanonicalSeed& c = *results[t];
      std::size_t b;
      if (auto it = index.find(c.key); it != index.end()) {
        b = it->second;
      } else {
        if (g.seeds.size() >= limits.max_seeds) {
          g.truncated = true;
          continue;
        }
        b = g.seeds.size();
        index.emplace(c.key, b);
        g.seeds.push_back(std::move(c.seed));
        g.keys.push_back(std::move(c.key));
        next.push_back(b);
      }
      std::string removed = g.seeds[a].cluster[static_cast<std::size_t>(k)].text();
      std::string added;
      for (const auto& text : g.keys[b].cluster)
        if (!std::binary_search(g.keys[a].cluster.begin(), g.keys[a].cluster.end(), text)) added = text;
      if (removed > added) std::swap(removed, added);
      if (edge_ids.emplace(std::min(a, b), std::max(a, b), removed, added).second)
        g.edges.push_back({a, b, k});
    }
    frontier = std::move(next);
  }
  return g;
}

std::vector<LaurentPoly> collect_cluster_variables(const ExchangeGraph& g) {
  std::vector<std::pair<std::string, const LaurentPoly*>> all;
  for (const auto& s : g.seeds)
    for (const auto& u : s.cluster) all.emplace_back(u.text(), &u);
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<LaurentPoly> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (i == 0 || all[i].first != all[i - 1].first) out.push_back(*all[i].second);
  return out;
}

std::vector<LaurentPoly> collect_cluster_variables(const Quiver& q, const ExploreLimits& limits) {
  return collect_cluster_variables(exchange_graph(q, limits));
}

EdgeReport verify_exchange_edges(const ExchangeGraph& g) {
  EdgeReport report;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& edge = g.edges[e];
    const Seed& s = g.seeds[edge.a];
    const Seed& t = g.seeds[edge.b];
    const LaurentPoly& old_var = s.cluster[static_cast<std::size_t>(edge.direction)];
    const LaurentPoly* new_var = nullptr;
    for (const auto& v : t.cluster)
      if (std::find(s.cluster.begin(), s.cluster.end(), v) == s.cluster.end()) new_var = &v;
    ++report.checked;
    if (!new_var) {
      report.violations.push_back({e, "endpoints share the whole cluster"});
      continue;
    }
    auto [in_product, out_product] = exchange_monomials(s, edge.direction);
    if (old_var * *new_var != in_product + out_product)
      report.violations.push_back({e, "(" + old_var.text() + ") * (" + new_var->text() + ") != " +
                                          (in_product + out_product).text()});
  }
  return report;
}

std::string quiver_key(const Quiver& canonical) {
  std::string out = std::to_string(canonical.size()) + ":";
  const int n = canonical.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (i != 0 || j != 1) out += ',';
      out += std::to_string(canonical(i, j));
    }
  return out;
}

MutationClass mutation_class(const Quiver& q, const ClassLimits& limits) {
  if (limits.max_quivers < 1) throw Error(ErrorKind::InvalidArgument, "class limit must be at least 1");
  const int n = q.size();
  MutationClass mc;
  std::unordered_map<std::vector<int>, std::size_t, MatrixHash> index;
  mc.members.push_back(canonical_form(q).quiver);
  index.emplace(mc.members.front().matrix(), 0);

  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const std::size_t tasks = frontier.size() * static_cast<std::size_t>(n);
    std::vector<std::optional<Quiver>> results(tasks);
    parallel_for(tasks, limits.threads, [&](std::size_t t) {
      const Quiver& m = mc.members[frontier[t / static_cast<std::size_t>(n)]];
      results[t] = canonical_form(mutate_quiver(m, static_cast<int>(t % static_cast<std::size_t>(n)))).quiver;
    });
    std::vector<std::size_t> next;
    for (std::size_t t = 0; t < tasks; ++t) {
      const std::size_t a = frontier[t / static_cast<std::size_t>(n)];
      const int k = static_cast<int>(t % static_cast<std::size_t>(n));
      std::size_t b;
      if (auto it = index.find(results[t]->matrix()); it != index.end()) {
        b = it->second;
      } else {
        if (mc.members.size() >= limits.max_quivers) {
          mc.truncated = true;
          continue;
        }
        b = mc.members.size();
        index.emplace(results[t]->matrix(), b);
        mc.members.push_back(std::move(*results[t]));
        next.push_back(b);
      }
      mc.edges.push_back({a, b, k});
    }
    frontier = std::move(next);
  }
  for (const auto& m : mc.members) {
    const int mult = m.max_multiplicity();
    if (mult >= 2) ++mc.double_arrows;
    mc.max_multiplicity = std::max(mc.max_multiplicity, mult);
  }
  return mc;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Finite: return "Finite";
    case Verdict::Infinite: return "Infinite";
    case Verdict::DepthExhausted: return "DepthExhausted";
  }
  return "?";
}

ClassificationResult classify(const Quiver& q, const ClassifyOptions& options) {
  if (!q.is_connected()) throw Error(ErrorKind::PreconditionViolated, "quiver is not connected");
  if (options.max_quivers < 1) throw Error(ErrorKind::InvalidArgument, "class limit must be at least 1");
  const int n = q.size();

  struct Node {
    Quiver quiver;  // in the input's labeling
    std::size_t parent;
    int via;
  };
  std::vector<Node> nodes{{q, 0, -1}};
  std::unordered_map<std::vector<int>, std::size_t, MatrixHash> index;
  index.emplace(canonical_form(q).quiver.matrix(), 0);

  ClassificationResult result;
  auto decide = [&](std::size_t i) -> bool {
    const Quiver& m = nodes[i].quiver;
    std::optional<Verdict> verdict;
    if (auto t = dynkin_type(m)) {
      verdict = Verdict::Finite;
      result.type = t;
    } else if (options.early_exit && m.max_multiplicity() >= 2) {
      verdict = Verdict::Infinite;
    }
    if (!verdict) return false;
    result.verdict = *verdict;
    result.witness_quiver = m;
    for (std::size_t j = i; j != 0; j = nodes[j].parent) result.witness.push_back(nodes[j].via);
    std::reverse(result.witness.begin(), result.witness.end());
    result.explored = nodes.size();
    return true;
  };
  if (decide(0)) return result;

  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const std::size_t tasks = frontier.size() * static_cast<std::size_t>(n);
    std::vector<std::optional<CanonicalForm>> canon(tasks);
    std::vector<std::optional<Quiver>> mutated(tasks);
    parallel_for(tasks, options.threads, [&](std::size_t t) {
      const Node& node = nodes[frontier[t / static_cast<std::size_t>(n)]];
      const int k = static_cast<int>(t % static_cast<std::size_t>(n));
      if (k == node.via) return;  // mutating back leads to the parent
      mutated[t] = mutate_quiver(node.quiver, k);
      canon[t] = canonical_form(*mutated[t]);
    });
    std::vector<std::size_t> next;
    for (std::size_t t = 0; t < tasks; ++t) {
      if (!mutated[t]) continue;
      if (index.count(canon[t]->quiver.matrix())) continue;
      if (nodes.size() >= options.max_quivers) {
        result.verdict = Verdict::DepthExhausted;
        result.explored = nodes.size();
        return result;
      }
      const std::size_t id = nodes.size();
      index.emplace(canon[t]->quiver.matrix(), id);
      nodes.push_back({std::move(*mutated[t]), frontier[t / static_cast<std::size_t>(n)],
                       static_cast<int>(t % static_cast<std::size_t>(n))});
      if (decide(id)) return result;
      next.push_back(id);
    }
    frontier = std::move(next);
  }
  result.verdict = Verdict::Infinite;
  result.class_exhausted = true;
  result.explored = nodes.size();
  return result;
}

}  // namespace cluster

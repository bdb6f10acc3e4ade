#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cluster/laurent.hpp"
#include "cluster/parallel.hpp"
#include "cluster/quiver.hpp"

namespace cluster {

struct Seed {
  Quiver quiver;
  /// cluster[i] is the variable attached to vertex i.
  std::vector<LaurentPoly> cluster;

  /// (q, (x1, ..., xn)).
  static Seed initial(const Quiver& q);

  Seed relabeled(std::span<const int> perm) const;

  friend bool operator==(const Seed&, const Seed&) = default;
};

/// Mutation at vertex k (0-based): quiver mutation plus the exchange relation
/// u_k * u'_k = prod_{i->k} u_i + prod_{k->j} u_j, an arrow of multiplicity m
/// contributing the m-th power. NotDivisible here means a bug.
Seed mutate_seed(const Seed& s, int k);
Seed mutate_seed(const Seed& s, std::span<const int> sequence);

/// The two monomials of the exchange relation at k.
std::pair<LaurentPoly, LaurentPoly> exchange_monomials(const Seed& s, int k);

/// Identifies a seed up to simultaneous renumbering of vertices and cluster
/// variables. Cluster entries of a seed are pairwise distinct, so sorting the
/// vertices by the canonical text of their variables fixes the relabeling.
struct SeedKey {
  std::vector<int> matrix;
  std::vector<std::string> cluster;

  friend bool operator==(const SeedKey&, const SeedKey&) = default;
  friend auto operator<=>(const SeedKey&, const SeedKey&) = default;

  std::string str() const;
};

struct SeedKeyHash {
  std::size_t operator()(const SeedKey& k) const noexcept;
};

/// Seed in the labeling used by its key, together with that key.
struct CanonicalSeed {
  Seed seed;
  SeedKey key;
};

CanonicalSeed canonical_seed(const Seed& s);
SeedKey canonical_seed_key(const Seed& s);

struct ExploreLimits {
  std::size_t max_seeds = 100'000;
  unsigned threads = default_thread_count();
};

struct ExchangeGraph {
  struct Edge {
    std::size_t a;
    std::size_t b;
    /// Mutated vertex of seeds[a] (0-based).
    int direction;
  };

  int n = 0;
  /// seeds[0] is the initial seed; every seed is stored in its key labeling.
  std::vector<Seed> seeds;
  std::vector<SeedKey> keys;
  std::vector<Edge> edges;
  bool truncated = false;

  /// Number of incident edges of every vertex.
  std::vector<std::size_t> degrees() const;
};

/// Breadth-first closure of the initial seed under all mutations.
ExchangeGraph exchange_graph(const Quiver& q, const ExploreLimits& limits = {});

/// All cluster entries of the graph's seeds, deduplicated, sorted by text.
std::vector<LaurentPoly> collect_cluster_variables(const ExchangeGraph& g);
std::vector<LaurentPoly> collect_cluster_variables(const Quiver& q, const ExploreLimits& limits = {});

struct EdgeViolation {
  std::size_t edge;
  std::string detail;
};

struct EdgeReport {
  std::size_t checked = 0;
  std::vector<EdgeViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks u_k * u'_k = in-monomial + out-monomial on every edge.
EdgeReport verify_exchange_edges(const ExchangeGraph& g);

struct ClassLimits {
  std::size_t max_quivers = 1'000'000;
  unsigned threads = default_thread_count();
};

struct MutationClass {
  /// Canonical quivers; members[0] is the canonical form of the input.
  std::vector<Quiver> members;
  /// Directed mutation edges between member indices.
  std::vector<ExchangeGraph::Edge> edges;
  std::size_t double_arrows = 0;
  int max_multiplicity = 0;
  bool truncated = false;

  std::size_t size() const { return members.size(); }
};

MutationClass mutation_class(const Quiver& q, const ClassLimits& limits = {});

/// Compact text of a quiver's canonical matrix, used as a vertex key in
/// exports.
std::string quiver_key(const Quiver& canonical);

enum class Verdict { Finite, Infinite, DepthExhausted };

std::string to_string(Verdict v);

struct ClassifyOptions {
  std::size_t max_quivers = 1'000'000;
  /// Stop at the first arrow of multiplicity >= 2, which already rules out
  /// finite type. Without it, only reaching a Dynkin orientation or
  /// exhausting the class decides.
  bool early_exit = true;
  unsigned threads = default_thread_count();
};

struct ClassificationResult {
  Verdict verdict = Verdict::DepthExhausted;
  std::optional<DynkinType> type;
  /// Mutation sequence (0-based) from the input to witness_quiver. Empty
  /// when the class was exhausted or the search was cut off.
  std::vector<int> witness;
  std::optional<Quiver> witness_quiver;
  /// Quivers visited (up to isomorphism).
  std::size_t explored = 0;
  bool class_exhausted = false;
};

ClassificationResult classify(const Quiver& q, const ClassifyOptions& options = {});

}  // namespace cluster

#pragma once

// JSON and DOT bridges for the library's value types. Kept apart from the
// core headers so that only code speaking JSON pulls in nlohmann.

#include <string>

#include <json.hpp>

#include "cluster/quiver.hpp"
#include "cluster/reptheory.hpp"
#include "cluster/seed.hpp"

namespace cluster {

/// {"n": <int>, "arrows": [[source, target, multiplicity], ...]}, 1-based.
nlohmann::json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const nlohmann::json& j);

/// {"quiver": ..., "cluster": ["<canonical text>", ...]}; a missing cluster
/// means the initial one.
nlohmann::json seed_to_json(const Seed& s);
Seed seed_from_json(const nlohmann::json& j);

/// {"quiver": ..., "dims": [...], "maps": {"<arrow>": [[row], ...]}} with
/// 1-based arrow indices into arrow_list and entries as "p/q" strings or
/// integers. Absent maps are zero.
nlohmann::json representation_to_json(const Representation& v);
Representation representation_from_json(const nlohmann::json& j);

/// {"vertices": [{key, quiver, cluster}], "edges": [[keyA, keyB, k]]}.
nlohmann::json exchange_graph_to_json(const ExchangeGraph& g);
std::string exchange_graph_to_dot(const ExchangeGraph& g);

/// Same layout without clusters.
nlohmann::json mutation_class_to_json(const MutationClass& mc);
std::string mutation_class_to_dot(const MutationClass& mc);

}  // namespace cluster

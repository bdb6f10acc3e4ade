#pragma once

// Operation pipelines shared by the command-line tool and the HTTP service.
// Each takes validated inputs and returns the JSON document both front ends
// emit, so a CLI run with --json and the matching endpoint agree byte for
// byte.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cluster/quiver.hpp"
#include "cluster/seed.hpp"

namespace cluster::commands {

using nlohmann::json;

/// Applies 1-based mutations to a seed (or a bare quiver when quiver_only).
json mutate(const Seed& seed, const std::vector<int>& at, bool quiver_only = false);

json explore(const Quiver& q, std::size_t limit, bool full = false);

json variables(const Quiver& q, std::size_t limit);

json mutation_class(const Quiver& q, std::size_t limit, bool full = false);

json classify(const Quiver& q, std::size_t limit, bool early_exit);

json roots(const DynkinType& t);
json roots(const Quiver& q);

/// {"representation": {...}} or {"quiver": {...}, "shifted": i}, or a list
/// of such objects under "summands" for a direct sum.
json cc(const json& request);

/// Runs the root-bijection, exchange-edge and (type A) CC-bijection checks
/// that apply to q.
json verify(const Quiver& q, std::size_t limit);

/// Parses "5,3,1,6" into {5, 3, 1, 6}.
std::vector<int> parse_sequence(const std::string& text);

}  // namespace cluster::commands

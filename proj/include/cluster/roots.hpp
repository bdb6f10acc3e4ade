#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cluster/quiver.hpp"
#include "cluster/seed.hpp"

namespace cluster {

using Root = std::vector<int>;

/// Positive roots in the simple-root basis, for the standard labeling of the
/// diagram (see dynkin_quiver). Sorted ascending.
std::vector<Root> positive_roots(const DynkinType& t);

/// Positive roots of the root system whose Dynkin diagram is the underlying
/// graph of q, in q's vertex labeling. Closure of the simple roots under the
/// simple reflections; the graph must be simply laced and of finite type
/// (the closure would not terminate otherwise, so it is capped).
std::vector<Root> positive_roots(const Quiver& q);

struct RootBijectionReport {
  DynkinType type{DynkinFamily::A, 1};
  std::size_t variables = 0;
  std::size_t roots = 0;
  /// Denominator vectors of the non-initial variables, sorted.
  std::vector<Root> denominators;
  bool count_matches = false;  // variables == n + roots
  bool bijective = false;
  bool truncated = false;
  bool ok() const { return count_matches && bijective && !truncated; }
};

/// For a Dynkin orientation: compares denominator vectors of the non-initial
/// cluster variables with the positive roots.
RootBijectionReport verify_root_bijection(const Quiver& q, const ExploreLimits& limits = {});

std::string root_text(const Root& r);

}  // namespace cluster

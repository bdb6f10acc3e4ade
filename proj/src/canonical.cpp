// Canonical labeling of quivers by individualization and refinement.
//
// Vertices are first split into an ordered partition by iterated colour
// refinement on the weighted adjacency; the ordering of cells depends only on
// isomorphism invariants. Remaining ties are broken by branching over every
// vertex of the first non-trivial cell. The canonical quiver is the
// lexicographically least matrix among the leaves of that search tree.
// Twin vertices (identical rows, no arrows between them) are swapped by an
// automorphism, so only one of them is tried per cell.

#include <algorithm>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "cluster/quiver.hpp"

namespace cluster {

namespace {

using Colouring = std::vector<int>;

class Canonicaliser {
 public:
  explicit Canonicaliser(const Quiver& q) : q_(q), n_(q.size()) {}

  CanonicalForm run() {
    search(Colouring(static_cast<std::size_t>(n_), 0));
    return {std::move(*best_), std::move(best_perm_)};
  }

 private:
  int cell_count(const Colouring& c) const { return *std::max_element(c.begin(), c.end()) + 1; }

  void refine(Colouring& colour) const {
    using Signature = std::pair<int, std::vector<std::pair<int, int>>>;
    std::vector<int> values = colour;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (int& c : colour) c = static_cast<int>(std::lower_bound(values.begin(), values.end(), c) - values.begin());
    int cells = static_cast<int>(values.size());
    std::vector<Signature> sig(static_cast<std::size_t>(n_));
    for (;;) {
      for (int v = 0; v < n_; ++v) {
        auto& s = sig[static_cast<std::size_t>(v)];
        s.first = colour[static_cast<std::size_t>(v)];
        s.second.clear();
        for (int u = 0; u < n_; ++u)
          if (q_(v, u) != 0) s.second.emplace_back(colour[static_cast<std::size_t>(u)], q_(v, u));
        std::sort(s.second.begin(), s.second.end());
      }
      std::vector<Signature> sorted = sig;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      for (int v = 0; v < n_; ++v) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), sig[static_cast<std::size_t>(v)]);
        colour[static_cast<std::size_t>(v)] = static_cast<int>(it - sorted.begin());
      }
      const int next = static_cast<int>(sorted.size());
      if (next == cells) return;
      cells = next;
    }
  }

  bool twins(int v, int w) const {
    if (q_(v, w) != 0) return false;
    for (int u = 0; u < n_; ++u)
      if (u != v && u != w && q_(v, u) != q_(w, u)) return false;
    return true;
  }

  void leaf(const Colouring& colour) {
    std::vector<int> perm(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) perm[static_cast<std::size_t>(colour[static_cast<std::size_t>(v)])] = v;
    Quiver candidate = q_.relabeled(perm);
    if (!best_ || candidate.matrix() < best_->matrix()) {
      best_ = std::move(candidate);
      best_perm_ = std::move(perm);
    }
  }

  void search(Colouring colour) {
    refine(colour);
    const int cells = cell_count(colour);
    if (cells == n_) {
      leaf(colour);
      return;
    }
    std::vector<int> size(static_cast<std::size_t>(cells), 0);
    for (int c : colour) ++size[static_cast<std::size_t>(c)];
    int target = 0;
    while (size[static_cast<std::size_t>(target)] < 2) ++target;

    std::vector<int> tried;
    for (int v = 0; v < n_; ++v) {
      if (colour[static_cast<std::size_t>(v)] != target) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](int w) { return twins(v, w); })) continue;
      tried.push_back(v);
      Colouring next(colour.size());
      for (int u = 0; u < n_; ++u) {
        const int c = colour[static_cast<std::size_t>(u)];
        next[static_cast<std::size_t>(u)] = 2 * c + (c == target && u != v ? 1 : 0);
      }
      search(std::move(next));
    }
  }

  const Quiver& q_;
  int n_;
  std::optional<Quiver> best_;
  std::vector<int> best_perm_;
};

}  // namespace

CanonicalForm canonical_form(const Quiver& q) { return Canonicaliser(q).run(); }

}  // namespace cluster

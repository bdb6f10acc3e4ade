#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cluster {

/// A finite quiver without loops or 2-cycles, stored as its skew-symmetric
/// exchange matrix. Entry (i, j) > 0 means that many arrows i -> j.
/// Vertices are 0-based in this API; the JSON and DOT forms are 1-based.
class Quiver {
 public:
  explicit Quiver(int n = 1);

  /// Builds a quiver from a row-major n*n matrix; throws unless it is
  /// skew-symmetric.
  static Quiver from_matrix(int n, std::vector<int> b);

  int size() const noexcept { return n_; }
  int operator()(int i, int j) const { return b_[static_cast<std::size_t>(i * n_ + j)]; }
  const std::vector<int>& matrix() const noexcept { return b_; }

  /// Adds m arrows i -> j. Throws if that would create a loop or a 2-cycle.
  void add_arrows(int i, int j, int m = 1);

  /// Number of arrows i -> j (0 when the arrows point the other way).
  int arrows(int i, int j) const;
  int arrow_count() const;
  int max_multiplicity() const;
  bool is_acyclic() const;
  bool is_connected() const;

  /// Relabels vertices: result(a, b) = (*this)(perm[a], perm[b]).
  Quiver relabeled(std::span<const int> perm) const;

  friend bool operator==(const Quiver&, const Quiver&) = default;
  friend std::strong_ordering operator<=>(const Quiver& a, const Quiver& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.b_ <=> b.b_;
  }

 private:
  int n_;
  std::vector<int> b_;
};

/// Mutation at vertex k (0-based). An involution.
Quiver mutate_quiver(const Quiver& q, int k);

/// Applies mutations in order.
Quiver mutate_quiver(const Quiver& q, std::span<const int> sequence);

struct CanonicalForm {
  Quiver quiver;
  /// canonical == original.relabeled(perm)
  std::vector<int> perm;
};

/// Canonical representative of the isomorphism class of q under vertex
/// relabeling.
CanonicalForm canonical_form(const Quiver& q);

enum class DynkinFamily { A, D, E };

struct DynkinType {
  DynkinFamily family;
  int rank;

  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

/// Throws on ranks that do not name a simply laced Dynkin diagram.
DynkinType make_dynkin_type(DynkinFamily family, int rank);
std::string to_string(const DynkinType& t);
/// Parses "A3", "D4", "E6", ...
DynkinType parse_dynkin_type(const std::string& text);

/// The type when q is an orientation of a simply laced Dynkin diagram.
std::optional<DynkinType> dynkin_type(const Quiver& q);

/// Standard orientation-free adjacency of a Dynkin diagram as a quiver with
/// arrows i -> j for i < j.
Quiver dynkin_quiver(const DynkinType& t);

/// Vertex order along the path of a type-A quiver, starting from the end
/// point with the smaller label. Throws if q is not of type A.
std::vector<int> type_a_path_order(const Quiver& q);

Quiver parse_quiver(const std::string& json_text);
std::string serialize_quiver(const Quiver& q);
std::string quiver_to_dot(const Quiver& q);

}  // namespace cluster

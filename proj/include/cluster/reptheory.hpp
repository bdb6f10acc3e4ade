#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "cluster/laurent.hpp"
#include "cluster/quiver.hpp"

namespace cluster {

/// Dense rational matrix, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols);
  static QMatrix identity(int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  mpq_class& operator()(int r, int c) { return data_[index(r, c)]; }
  const mpq_class& operator()(int r, int c) const { return data_[index(r, c)]; }

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpq_class> data_;
};

int rank(QMatrix m);

struct Arrow {
  int source;
  int target;
};

/// Arrows of q one by one, ordered by (source, target), multiple arrows
/// consecutive. Index in this list is the arrow index of Representation.
std::vector<Arrow> arrow_list(const Quiver& q);

/// Representation of an acyclic quiver over the rationals. maps[a] is a
/// dims[target] x dims[source] matrix for arrow a of arrow_list(quiver).
class Representation {
 public:
  Representation(Quiver quiver, std::vector<int> dims, std::vector<QMatrix> maps);
  /// All maps zero.
  static Representation zero_maps(Quiver quiver, std::vector<int> dims);

  const Quiver& quiver() const noexcept { return quiver_; }
  const std::vector<int>& dims() const noexcept { return dims_; }
  const std::vector<QMatrix>& maps() const noexcept { return maps_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  int total_dim() const;

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.quiver_ == b.quiver_ && a.dims_ == b.dims_ && a.maps_ == b.maps_;
  }

 private:
  Quiver quiver_;
  std::vector<int> dims_;
  std::vector<QMatrix> maps_;
  std::vector<Arrow> arrows_;
};

Representation direct_sum(const Representation& a, const Representation& b);

/// Indecomposable supported on positions [first, last] (0-based, inclusive)
/// of type_a_path_order(q), identity maps inside the interval.
Representation interval_module(const Quiver& q, int first, int last);

/// Simple module at vertex i.
Representation simple_module(const Quiver& q, int i);
/// P_i: basis of (P_i)_v is the set of paths i ~> v.
Representation projective_module(const Quiver& q, int i);
/// I_i: basis of (I_i)_v is dual to the set of paths v ~> i.
Representation injective_module(const Quiver& q, int i);

/// dim Hom(M, N): kernel of phi -> (phi_t M_a - N_a phi_s)_a.
int hom_dim(const Representation& m, const Representation& n);
/// <d, e> = sum_i d_i e_i - sum_{a: i->j} d_i e_j.
int euler_form(const Quiver& q, std::span<const int> d, std::span<const int> e);
/// dim Ext^1(M, N) = hom - <dim M, dim N> over a hereditary path algebra.
int ext1_module_dim(const Representation& m, const Representation& n);

struct ShiftedProjective {
  int vertex;
  friend bool operator==(const ShiftedProjective&, const ShiftedProjective&) = default;
};

/// Indecomposable-or-not object of the cluster category as seen through its
/// module-level shadow: a representation or a shifted projective.
class CCObject {
 public:
  CCObject(Representation module);
  CCObject(const Quiver& q, ShiftedProjective p);

  const Quiver& quiver() const;
  bool is_module() const noexcept { return std::holds_alternative<Representation>(value_); }
  const Representation& module() const { return std::get<Representation>(value_); }
  int shifted_vertex() const { return std::get<ShiftedProjective>(value_).vertex; }
  std::string label() const;

  friend bool operator==(const CCObject&, const CCObject&) = default;

 private:
  std::variant<Representation, ShiftedProjective> value_;
  std::optional<Quiver> shifted_quiver_;
};

/// Ext^1 in the cluster category by the module-level case formula.
int ext1_cluster_dim(const CCObject& x, const CCObject& y);
bool is_rigid(const CCObject& x);
/// Requires exactly n objects; true iff all pairwise Ext^1 vanish.
bool is_cluster_tilting(std::span<const CCObject> objects);

/// Representation over the prime field F_p.
struct ModRepresentation {
  Quiver quiver;
  std::uint32_t p;
  std::vector<int> dims;
  /// maps[a] row-major, dims[target] x dims[source], entries in [0, p).
  std::vector<std::vector<std::uint32_t>> maps;
};

/// Reduction modulo p. Throws PrimeCollision if p divides a denominator.
ModRepresentation reduce_mod(const Representation& v, std::uint32_t p);

/// Number of F_p-points of the quiver Grassmannian Gr_e(V).
std::uint64_t count_subreps(const ModRepresentation& v, std::span<const int> e);

/// Euler characteristic of Gr_e(V) from point counts at D + 2 primes
/// interpolated at q = 1, D = sum e_i (d_i - e_i). Throws
/// InterpolationInconsistent when the counts are not polynomial.
long long grassmannian_euler_char(const Representation& v, std::span<const int> e);
/// Same, at caller-chosen primes (at least D + 2 of them).
long long grassmannian_euler_char(const Representation& v, std::span<const int> e,
                                  std::span<const std::uint32_t> primes);

/// Caldero-Chapoton value. x_i for the shifted projective at i.
LaurentPoly cc_value(const CCObject& x);
/// Direct sum: product of the values.
LaurentPoly cc_value(std::span<const CCObject> summands);

struct CCBijectionReport {
  std::vector<CCObject> objects;
  std::vector<LaurentPoly> values;
  bool all_rigid = false;
  bool values_match = false;
  std::size_t tilting_subsets = 0;
  std::size_t seeds = 0;
  bool ok() const { return all_rigid && values_match && tilting_subsets == seeds; }
};

/// For a type-A orientation: CC values of interval modules and shifted
/// projectives against the cluster variables, and cluster-tilting subsets
/// against the seeds of the exchange graph.
CCBijectionReport verify_cc_bijection(const Quiver& q);

/// Checks X_L X_M = prod X_B + prod X_B' for caller-supplied middle terms.
/// Requires dim Ext^1(L, M) = 1.
bool verify_gen_exchange_instance(const CCObject& l, const CCObject& m, std::span<const CCObject> b,
                                  std::span<const CCObject> b_prime);

}  // namespace cluster

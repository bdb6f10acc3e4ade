#include <algorithm>
#include <functional>

#include "cluster/error.hpp"
#include "cluster/reptheory.hpp"

namespace cluster {

QMatrix::QMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw Error(ErrorKind::InvalidArgument, "negative matrix shape");
  data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), mpq_class(0));
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

int rank(QMatrix m) {
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = c; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
    for (int i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const mpq_class f = m(i, c) / m(r, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

std::vector<Arrow> arrow_list(const Quiver& q) {
  std::vector<Arrow> arrows;
  for (int i = 0; i < q.size(); ++i)
    for (int j = 0; j < q.size(); ++j)
      for (int m = 0; m < q.arrows(i, j); ++m) arrows.push_back({i, j});
  return arrows;
}

Representation::Representation(Quiver quiver, std::vector<int> dims, std::vector<QMatrix> maps)
    : quiver_(std::move(quiver)), dims_(std::move(dims)), maps_(std::move(maps)), arrows_(arrow_list(quiver_)) {
  if (!quiver_.is_acyclic()) throw Error(ErrorKind::PreconditionViolated, "representations need an acyclic quiver");
  if (static_cast<int>(dims_.size()) != quiver_.size())
    throw Error(ErrorKind::InvalidArgument, "dimension vector has wrong length");
  for (int d : dims_)
    if (d < 0) throw Error(ErrorKind::InvalidArgument, "negative dimension");
  if (maps_.size() != arrows_.size()) throw Error(ErrorKind::InvalidArgument, "one map per arrow required");
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    const auto& m = maps_[a];
    if (m.rows() != dims_[static_cast<std::size_t>(arrows_[a].target)] ||
        m.cols() != dims_[static_cast<std::size_t>(arrows_[a].source)])
      throw Error(ErrorKind::InvalidArgument, "map of arrow " + std::to_string(a + 1) + " has wrong shape");
  }
}

Representation Representation::zero_maps(Quiver quiver, std::vector<int> dims) {
  std::vector<QMatrix> maps;
  if (static_cast<int>(dims.size()) != quiver.size())
    throw Error(ErrorKind::InvalidArgument, "dimension vector has wrong length");
  for (const auto& a : arrow_list(quiver))
    maps.emplace_back(dims[static_cast<std::size_t>(a.target)], dims[static_cast<std::size_t>(a.source)]);
  return Representation(std::move(quiver), std::move(dims), std::move(maps));
}

int Representation::total_dim() const {
  int s = 0;
  for (int d : dims_) s += d;
  return s;
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (a.quiver() != b.quiver()) throw Error(ErrorKind::InvalidArgument, "quiver mismatch");
  std::vector<int> dims(a.dims().size());
  for (std::size_t i = 0; i < dims.size(); ++i) dims[i] = a.dims()[i] + b.dims()[i];
  std::vector<QMatrix> maps;
  for (std::size_t k = 0; k < a.arrows().size(); ++k) {
    const auto& ma = a.maps()[k];
    const auto& mb = b.maps()[k];
    QMatrix m(ma.rows() + mb.rows(), ma.cols() + mb.cols());
    for (int r = 0; r < ma.rows(); ++r)
      for (int c = 0; c < ma.cols(); ++c) m(r, c) = ma(r, c);
    for (int r = 0; r < mb.rows(); ++r)
      for (int c = 0; c < mb.cols(); ++c) m(ma.rows() + r, ma.cols() + c) = mb(r, c);
    maps.push_back(std::move(m));
  }
  return Representation(a.quiver(), std::move(dims), std::move(maps));
}

Representation interval_module(const Quiver& q, int first, int last) {
  const auto order = type_a_path_order(q);
  const int n = q.size();
  if (first < 0 || first > last || last >= n)
    throw Error(ErrorKind::InvalidArgument,
                "bad interval [" + std::to_string(first + 1) + "," + std::to_string(last + 1) + "]");
  std::vector<int> dims(static_cast<std::size_t>(n), 0);
  for (int p = first; p <= last; ++p) dims[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] = 1;
  Representation zero = Representation::zero_maps(q, dims);
  std::vector<QMatrix> maps = zero.maps();
  const auto arrows = arrow_list(q);
  for (std::size_t a = 0; a < arrows.size(); ++a)
    if (dims[static_cast<std::size_t>(arrows[a].source)] && dims[static_cast<std::size_t>(arrows[a].target)])
      maps[a] = QMatrix::identity(1);
  return Representation(q, std::move(dims), std::move(maps));
}

Representation simple_module(const Quiver& q, int i) {
  if (i < 0 || i >= q.size()) throw Error(ErrorKind::InvalidArgument, "vertex out of range");
  std::vector<int> dims(static_cast<std::size_t>(q.size()), 0);
  dims[static_cast<std::size_t>(i)] = 1;
  return Representation::zero_maps(q, std::move(dims));
}

namespace {

using Path = std::vector<int>;  // arrow indices in order of traversal

// Every path of q (including the trivial ones), grouped by start vertex.
std::vector<std::vector<Path>> all_paths(const Quiver& q, const std::vector<Arrow>& arrows) {
  if (!q.is_acyclic()) throw Error(ErrorKind::PreconditionViolated, "paths need an acyclic quiver");
  std::vector<std::vector<Path>> from(static_cast<std::size_t>(q.size()));
  std::function<void(int, int, Path&)> walk = [&](int start, int at, Path& p) {
    from[static_cast<std::size_t>(start)].push_back(p);
    for (std::size_t a = 0; a < arrows.size(); ++a) {
      if (arrows[a].source != at) continue;
      p.push_back(static_cast<int>(a));
      walk(start, arrows[a].target, p);
      p.pop_back();
    }
  };
  for (int v = 0; v < q.size(); ++v) {
    Path p;
    walk(v, v, p);
  }
  return from;
}

int path_end(int start, const Path& p, const std::vector<Arrow>& arrows) {
  return p.empty() ? start : arrows[static_cast<std::size_t>(p.back())].target;
}

std::size_t position(const std::vector<Path>& basis, const Path& p) {
  return static_cast<std::size_t>(std::find(basis.begin(), basis.end(), p) - basis.begin());
}

}  // namespace

Representation projective_module(const Quiver& q, int i) {
  if (i < 0 || i >= q.size()) throw Error(ErrorKind::InvalidArgument, "vertex out of range");
  const auto arrows = arrow_list(q);
  const auto paths = all_paths(q, arrows)[static_cast<std::size_t>(i)];
  std::vector<std::vector<Path>> basis(static_cast<std::size_t>(q.size()));
  for (const auto& p : paths) basis[static_cast<std::size_t>(path_end(i, p, arrows))].push_back(p);
  std::vector<int> dims;
  for (const auto& b : basis) dims.push_back(static_cast<int>(b.size()));
  std::vector<QMatrix> maps;
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const auto& src = basis[static_cast<std::size_t>(arrows[a].source)];
    const auto& tgt = basis[static_cast<std::size_t>(arrows[a].target)];
    QMatrix m(static_cast<int>(tgt.size()), static_cast<int>(src.size()));
    for (std::size_t c = 0; c < src.size(); ++c) {
      Path longer = src[c];
      longer.push_back(static_cast<int>(a));
      m(static_cast<int>(position(tgt, longer)), static_cast<int>(c)) = 1;
    }
    maps.push_back(std::move(m));
  }
  return Representation(q, std::move(dims), std::move(maps));
}

Representation injective_module(const Quiver& q, int i) {
  if (i < 0 || i >= q.size()) throw Error(ErrorKind::InvalidArgument, "vertex out of range");
  const auto arrows = arrow_list(q);
  const auto paths = all_paths(q, arrows);
  std::vector<std::vector<Path>> basis(static_cast<std::size_t>(q.size()));
  for (int v = 0; v < q.size(); ++v)
    for (const auto& p : paths[static_cast<std::size_t>(v)])
      if (path_end(v, p, arrows) == i) basis[static_cast<std::size_t>(v)].push_back(p);
  std::vector<int> dims;
  for (const auto& b : basis) dims.push_back(static_cast<int>(b.size()));
  std::vector<QMatrix> maps;
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const auto& src = basis[static_cast<std::size_t>(arrows[a].source)];
    const auto& tgt = basis[static_cast<std::size_t>(arrows[a].target)];
    QMatrix m(static_cast<int>(tgt.size()), static_cast<int>(src.size()));
    for (std::size_t c = 0; c < src.size(); ++c) {
      const Path& p = src[c];
      if (p.empty() || p.front() != static_cast<int>(a)) continue;
      Path rest(p.begin() + 1, p.end());
      m(static_cast<int>(position(tgt, rest)), static_cast<int>(c)) = 1;
    }
    maps.push_back(std::move(m));
  }
  return Representation(q, std::move(dims), std::move(maps));
}

int hom_dim(const Representation& m, const Representation& n) {
  if (m.quiver() != n.quiver()) throw Error(ErrorKind::InvalidArgument, "quiver mismatch");
  const auto& dm = m.dims();
  const auto& dn = n.dims();
  const std::size_t verts = dm.size();
  // phi_v is a dn[v] x dm[v] block of unknowns starting at offset[v].
  std::vector<int> offset(verts + 1, 0);
  for (std::size_t v = 0; v < verts; ++v) offset[v + 1] = offset[v] + dn[v] * dm[v];
  const int unknowns = offset[verts];
  if (unknowns == 0) return 0;
  int equations = 0;
  for (const auto& a : m.arrows())
    equations += dn[static_cast<std::size_t>(a.target)] * dm[static_cast<std::size_t>(a.source)];
  QMatrix system(equations, unknowns);
  auto var = [&](int v, int r, int c) { return offset[static_cast<std::size_t>(v)] + r * dm[static_cast<std::size_t>(v)] + c; };
  int row = 0;
  for (std::size_t k = 0; k < m.arrows().size(); ++k) {
    const int s = m.arrows()[k].source, t = m.arrows()[k].target;
    const QMatrix& ma = m.maps()[k];
    const QMatrix& na = n.maps()[k];
    for (int r = 0; r < dn[static_cast<std::size_t>(t)]; ++r) {
      for (int c = 0; c < dm[static_cast<std::size_t>(s)]; ++c, ++row) {
        // (phi_t M_a)[r][c] - (N_a phi_s)[r][c] = 0
        for (int x = 0; x < dm[static_cast<std::size_t>(t)]; ++x) system(row, var(t, r, x)) += ma(x, c);
        for (int x = 0; x < dn[static_cast<std::size_t>(s)]; ++x) system(row, var(s, x, c)) -= na(r, x);
      }
    }
  }
  return unknowns - rank(std::move(system));
}

int euler_form(const Quiver& q, std::span<const int> d, std::span<const int> e) {
  if (static_cast<int>(d.size()) != q.size() || static_cast<int>(e.size()) != q.size())
    throw Error(ErrorKind::InvalidArgument, "dimension vectors have wrong length");
  int value = 0;
  for (int i = 0; i < q.size(); ++i) value += d[static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(i)];
  for (int i = 0; i < q.size(); ++i)
    for (int j = 0; j < q.size(); ++j)
      value -= q.arrows(i, j) * d[static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(j)];
  return value;
}

int ext1_module_dim(const Representation& m, const Representation& n) {
  const int ext = hom_dim(m, n) - euler_form(m.quiver(), m.dims(), n.dims());
  if (ext < 0) throw Error(ErrorKind::InternalError, "negative Ext^1 dimension");
  return ext;
}

CCObject::CCObject(Representation module) : value_(std::move(module)) {}

CCObject::CCObject(const Quiver& q, ShiftedProjective p) : value_(p), shifted_quiver_(q) {
  if (p.vertex < 0 || p.vertex >= q.size()) throw Error(ErrorKind::InvalidArgument, "vertex out of range");
}

const Quiver& CCObject::quiver() const { return is_module() ? module().quiver() : *shifted_quiver_; }

std::string CCObject::label() const {
  if (!is_module()) return "SP" + std::to_string(shifted_vertex() + 1);
  std::string out = "M(";
  for (std::size_t i = 0; i < module().dims().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(module().dims()[i]);
  }
  return out + ")";
}

int ext1_cluster_dim(const CCObject& x, const CCObject& y) {
  if (x.quiver() != y.quiver()) throw Error(ErrorKind::InvalidArgument, "quiver mismatch");
  if (x.is_module() && y.is_module())
    return ext1_module_dim(x.module(), y.module()) + ext1_module_dim(y.module(), x.module());
  if (x.is_module()) return x.module().dims()[static_cast<std::size_t>(y.shifted_vertex())];
  if (y.is_module()) return y.module().dims()[static_cast<std::size_t>(x.shifted_vertex())];
  return 0;
}

bool is_rigid(const CCObject& x) { return ext1_cluster_dim(x, x) == 0; }

bool is_cluster_tilting(std::span<const CCObject> objects) {
  if (objects.empty()) throw Error(ErrorKind::InvalidArgument, "empty object set");
  const int n = objects.front().quiver().size();
  if (static_cast<int>(objects.size()) != n)
    throw Error(ErrorKind::InvalidArgument, "a cluster-tilting set has exactly " + std::to_string(n) + " objects");
  for (std::size_t i = 0; i < objects.size(); ++i)
    for (std::size_t j = i; j < objects.size(); ++j) {
      if (i != j && objects[i] == objects[j]) throw Error(ErrorKind::InvalidArgument, "repeated object");
      if (ext1_cluster_dim(objects[i], objects[j]) != 0) return false;
    }
  return true;
}

}  // namespace cluster

#include "cluster/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cluster/error.hpp"
#include "cluster/io.hpp"

namespace cluster {

namespace {

void check_vertex(const Quiver& q, int k) {
  if (k < 0 || k >= q.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "vertex " + std::to_string(k + 1) + " out of range 1.." + std::to_string(q.size()));
  }
}

std::vector<std::vector<int>> undirected_neighbours(const Quiver& q) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(q.size()));
  for (int i = 0; i < q.size(); ++i)
    for (int j = 0; j < q.size(); ++j)
      if (q(i, j) != 0) adj[static_cast<std::size_t>(i)].push_back(j);
  return adj;
}

}  // namespace

Quiver::Quiver(int n) : n_(n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "quiver needs at least one vertex");
  b_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

Quiver Quiver::from_matrix(int n, std::vector<int> b) {
  Quiver q(n);
  if (b.size() != q.b_.size()) throw Error(ErrorKind::InvalidArgument, "matrix has wrong size");
  for (int i = 0; i < n; ++i) {
    if (b[static_cast<std::size_t>(i * n + i)] != 0)
      throw Error(ErrorKind::InvalidArgument, "loop at vertex " + std::to_string(i + 1));
    for (int j = 0; j < n; ++j)
      if (b[static_cast<std::size_t>(i * n + j)] != -b[static_cast<std::size_t>(j * n + i)])
        throw Error(ErrorKind::InvalidArgument, "matrix is not skew-symmetric");
  }
  q.b_ = std::move(b);
  return q;
}

void Quiver::add_arrows(int i, int j, int m) {
  check_vertex(*this, i);
  check_vertex(*this, j);
  if (i == j) throw Error(ErrorKind::InvalidArgument, "loop at vertex " + std::to_string(i + 1));
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "arrow multiplicity must be positive");
  auto& ij = b_[static_cast<std::size_t>(i * n_ + j)];
  if (ij < 0) {
    throw Error(ErrorKind::InvalidArgument, "2-cycle between vertices " + std::to_string(i + 1) +
                                                " and " + std::to_string(j + 1));
  }
  ij += m;
  b_[static_cast<std::size_t>(j * n_ + i)] = -ij;
}

int Quiver::arrows(int i, int j) const { return std::max(0, (*this)(i, j)); }

int Quiver::arrow_count() const {
  int total = 0;
  for (int v : b_)
    if (v > 0) total += v;
  return total;
}

int Quiver::max_multiplicity() const {
  int m = 0;
  for (int v : b_) m = std::max(m, v);
  return m;
}

bool Quiver::is_acyclic() const {
  // Kahn's algorithm.
  std::vector<int> indeg(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if ((*this)(i, j) > 0) ++indeg[static_cast<std::size_t>(j)];
  std::vector<int> ready;
  for (int i = 0; i < n_; ++i)
    if (indeg[static_cast<std::size_t>(i)] == 0) ready.push_back(i);
  int seen = 0;
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    ++seen;
    for (int j = 0; j < n_; ++j)
      if ((*this)(v, j) > 0 && --indeg[static_cast<std::size_t>(j)] == 0) ready.push_back(j);
  }
  return seen == n_;
}

bool Quiver::is_connected() const {
  auto adj = undirected_neighbours(*this);
  std::vector<bool> seen(static_cast<std::size_t>(n_), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n_;
}

Quiver Quiver::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw Error(ErrorKind::InvalidArgument, "permutation has wrong size");
  Quiver r(n_);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      r.b_[static_cast<std::size_t>(a * n_ + b)] = (*this)(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
  return r;
}

Quiver mutate_quiver(const Quiver& q, int k) {
  check_vertex(q, k);
  const int n = q.size();
  std::vector<int> b(q.matrix().size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int v;
      if (i == k || j == k) {
        v = -q(i, j);
      } else {
        v = q(i, j) + std::max(0, q(i, k)) * std::max(0, q(k, j)) -
            std::max(0, q(j, k)) * std::max(0, q(k, i));
      }
      b[static_cast<std::size_t>(i * n + j)] = v;
    }
  }
  return Quiver::from_matrix(n, std::move(b));
}

Quiver mutate_quiver(const Quiver& q, std::span<const int> sequence) {
  Quiver r = q;
  for (int k : sequence) r = mutate_quiver(r, k);
  return r;
}

DynkinType make_dynkin_type(DynkinFamily family, int rank) {
  bool ok = false;
  switch (family) {
    case DynkinFamily::A: ok = rank >= 1; break;
    case DynkinFamily::D: ok = rank >= 4; break;
    case DynkinFamily::E: ok = rank >= 6 && rank <= 8; break;
  }
  DynkinType t{family, rank};
  if (!ok) throw Error(ErrorKind::InvalidArgument, "no Dynkin diagram " + to_string(t));
  return t;
}

std::string to_string(const DynkinType& t) {
  const char letter = t.family == DynkinFamily::A ? 'A' : t.family == DynkinFamily::D ? 'D' : 'E';
  return std::string(1, letter) + std::to_string(t.rank);
}

DynkinType parse_dynkin_type(const std::string& text) {
  if (text.size() < 2) throw Error(ErrorKind::ParseError, "bad Dynkin type '" + text + "'");
  DynkinFamily family;
  switch (text[0]) {
    case 'A': case 'a': family = DynkinFamily::A; break;
    case 'D': case 'd': family = DynkinFamily::D; break;
    case 'E': case 'e': family = DynkinFamily::E; break;
    default: throw Error(ErrorKind::ParseError, "bad Dynkin type '" + text + "'");
  }
  int rank = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9' || rank > 1000)
      throw Error(ErrorKind::ParseError, "bad Dynkin type '" + text + "'");
    rank = rank * 10 + (text[i] - '0');
  }
  return make_dynkin_type(family, rank);
}

std::optional<DynkinType> dynkin_type(const Quiver& q) {
  const int n = q.size();
  if (q.max_multiplicity() > 1 || !q.is_connected() || !q.is_acyclic()) return std::nullopt;
  auto adj = undirected_neighbours(q);
  std::size_t edges = 0;
  for (const auto& a : adj) edges += a.size();
  if (edges / 2 != static_cast<std::size_t>(n - 1)) return std::nullopt;  // not a tree

  std::vector<int> branch;
  for (int v = 0; v < n; ++v) {
    auto deg = adj[static_cast<std::size_t>(v)].size();
    if (deg > 3) return std::nullopt;
    if (deg == 3) branch.push_back(v);
  }
  if (branch.empty()) return make_dynkin_type(DynkinFamily::A, n);
  if (branch.size() > 1) return std::nullopt;

  // Arm lengths from the branch point.
  const int centre = branch.front();
  std::vector<int> arms;
  for (int start : adj[static_cast<std::size_t>(centre)]) {
    int prev = centre, cur = start, len = 1;
    while (adj[static_cast<std::size_t>(cur)].size() == 2) {
      const auto& nb = adj[static_cast<std::size_t>(cur)];
      int next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return make_dynkin_type(DynkinFamily::D, n);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
    return make_dynkin_type(DynkinFamily::E, n);
  return std::nullopt;
}

Quiver dynkin_quiver(const DynkinType& t) {
  const int n = t.rank;
  Quiver q(n);
  switch (t.family) {
    case DynkinFamily::A:
      for (int i = 0; i + 1 < n; ++i) q.add_arrows(i, i + 1);
      break;
    case DynkinFamily::D:
      for (int i = 0; i + 2 < n; ++i) q.add_arrows(i, i + 1);
      q.add_arrows(n - 3, n - 1);
      break;
    case DynkinFamily::E:
      for (int i = 0; i + 2 < n; ++i) q.add_arrows(i, i + 1);
      q.add_arrows(2, n - 1);
      break;
  }
  return q;
}

std::vector<int> type_a_path_order(const Quiver& q) {
  auto t = dynkin_type(q);
  if (!t || t->family != DynkinFamily::A)
    throw Error(ErrorKind::PreconditionViolated, "quiver is not an orientation of A_n");
  const int n = q.size();
  if (n == 1) return {0};
  auto adj = undirected_neighbours(q);
  int start = -1;
  for (int v = 0; v < n && start < 0; ++v)
    if (adj[static_cast<std::size_t>(v)].size() == 1) start = v;
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (static_cast<int>(order.size()) < n) {
    for (int w : adj[static_cast<std::size_t>(cur)]) {
      if (w != prev) {
        prev = cur;
        cur = w;
        break;
      }
    }
    order.push_back(cur);
  }
  return order;
}

nlohmann::json quiver_to_json(const Quiver& q) {
  nlohmann::json arrows = nlohmann::json::array();
  for (int i = 0; i < q.size(); ++i)
    for (int j = 0; j < q.size(); ++j)
      if (q(i, j) > 0) arrows.push_back({i + 1, j + 1, q(i, j)});
  return {{"n", q.size()}, {"arrows", std::move(arrows)}};
}

Quiver quiver_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer())
    throw Error(ErrorKind::ParseError, "quiver needs an integer field \"n\"");
  const auto n = j.at("n").get<long long>();
  if (n < 1 || n > 64) throw Error(ErrorKind::InvalidArgument, "vertex count out of range");
  Quiver q(static_cast<int>(n));
  if (!j.contains("arrows")) return q;
  const auto& arrows = j.at("arrows");
  if (!arrows.is_array()) throw Error(ErrorKind::ParseError, "\"arrows\" must be an array");
  std::set<std::pair<long long, long long>> seen;
  for (const auto& a : arrows) {
    if (!a.is_array() || a.size() != 3 || !a[0].is_number_integer() || !a[1].is_number_integer() ||
        !a[2].is_number_integer())
      throw Error(ErrorKind::ParseError, "arrow must be [source, target, multiplicity]");
    const auto s = a[0].get<long long>(), t = a[1].get<long long>(), m = a[2].get<long long>();
    if (s < 1 || s > n || t < 1 || t > n)
      throw Error(ErrorKind::InvalidArgument, "arrow endpoint out of range in " + a.dump());
    if (m < 1 || m > 1'000'000) throw Error(ErrorKind::InvalidArgument, "bad multiplicity in " + a.dump());
    if (!seen.emplace(s, t).second) throw Error(ErrorKind::InvalidArgument, "duplicate arrow " + a.dump());
    q.add_arrows(static_cast<int>(s - 1), static_cast<int>(t - 1), static_cast<int>(m));
  }
  return q;
}

Quiver parse_quiver(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return quiver_from_json(j);
}

std::string serialize_quiver(const Quiver& q) { return quiver_to_json(q).dump(); }

std::string quiver_to_dot(const Quiver& q) {
  std::ostringstream out;
  out << "digraph Q {\n";
  for (int i = 0; i < q.size(); ++i) out << "  " << i + 1 << ";\n";
  for (int i = 0; i < q.size(); ++i)
    for (int j = 0; j < q.size(); ++j)
      for (int m = 0; m < q(i, j); ++m) out << "  " << i + 1 << " -> " << j + 1 << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace cluster

#pragma once

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cluster/quiver.hpp"

namespace testing_support {

inline std::string data_path(const std::string& name) { return std::string(CLUSTER_TEST_DATA) + "/" + name; }

inline std::string read_data(const std::string& name) {
  std::ifstream in(data_path(name));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline cluster::Quiver load_quiver(const std::string& name) { return cluster::parse_quiver(read_data(name)); }

/// Random quiver with n vertices and multiplicities up to max_mult. Every
/// unordered pair gets an arrow with probability density.
inline cluster::Quiver random_quiver(std::mt19937_64& rng, int n, int max_mult, double density = 0.5) {
  cluster::Quiver q(n);
  std::bernoulli_distribution edge(density);
  std::uniform_int_distribution<int> mult(1, max_mult);
  std::bernoulli_distribution flip(0.5);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (edge(rng)) {
        if (flip(rng)) q.add_arrows(i, j, mult(rng));
        else q.add_arrows(j, i, mult(rng));
      }
  return q;
}

inline std::vector<int> random_perm(std::mt19937_64& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace testing_support

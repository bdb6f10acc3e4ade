// Point counts of quiver Grassmannians over prime fields and the Euler
// characteristic obtained by interpolating them at q = 1.

#include <algorithm>
#include <functional>

#include "cluster/error.hpp"
#include "cluster/parallel.hpp"
#include "cluster/reptheory.hpp"

namespace cluster {

namespace {

using Vec = std::vector<std::uint32_t>;

struct Subspace {
  std::vector<Vec> rows;  // reduced row echelon form
  std::vector<int> pivots;
};

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t pow_mod(std::uint32_t a, std::uint32_t e, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  while (e) {
    if (e & 1U) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1U;
  }
  return r;
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Every e-dimensional subspace of F_p^d, each given by its unique RREF basis.
std::vector<Subspace> subspaces(int d, int e, std::uint32_t p) {
  std::vector<Subspace> out;
  std::vector<int> pivots;
  std::function<void(int)> choose = [&](int from) {
    if (static_cast<int>(pivots.size()) == e) {
      // Free entries: row r, column c > pivot r, c not a pivot column.
      std::vector<std::pair<int, int>> free;
      for (int r = 0; r < e; ++r)
        for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < d; ++c)
          if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(r, c);
      std::vector<std::uint32_t> digits(free.size(), 0);
      for (;;) {
        Subspace s{std::vector<Vec>(static_cast<std::size_t>(e), Vec(static_cast<std::size_t>(d), 0)), pivots};
        for (int r = 0; r < e; ++r)
          s.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)])] = 1;
        for (std::size_t f = 0; f < free.size(); ++f)
          s.rows[static_cast<std::size_t>(free[f].first)][static_cast<std::size_t>(free[f].second)] = digits[f];
        out.push_back(std::move(s));
        std::size_t k = 0;
        while (k < digits.size() && ++digits[k] == p) digits[k++] = 0;
        if (k == digits.size()) break;
      }
      return;
    }
    for (int c = from; c < d; ++c) {
      pivots.push_back(c);
      choose(c + 1);
      pivots.pop_back();
    }
  };
  choose(0);
  return out;
}

bool contains(const Subspace& s, Vec w, std::uint32_t p) {
  for (std::size_t r = 0; r < s.rows.size(); ++r) {
    const std::uint32_t coef = w[static_cast<std::size_t>(s.pivots[r])];
    if (coef == 0) continue;
    for (std::size_t c = 0; c < w.size(); ++c)
      w[c] = (w[c] + p - mul_mod(coef, s.rows[r][c], p)) % p;
  }
  return std::all_of(w.begin(), w.end(), [](std::uint32_t x) { return x == 0; });
}

std::vector<std::uint32_t> primes_avoiding(const Representation& v, std::size_t count) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 2; out.size() < count; ++p) {
    if (!is_prime(p)) continue;
    bool collides = false;
    for (const auto& m : v.maps())
      for (int r = 0; r < m.rows() && !collides; ++r)
        for (int c = 0; c < m.cols() && !collides; ++c)
          collides = mpz_divisible_ui_p(m(r, c).get_den_mpz_t(), p) != 0;
    if (!collides) out.push_back(p);
  }
  return out;
}

void check_profile(const std::vector<int>& dims, std::span<const int> e) {
  if (e.size() != dims.size()) throw Error(ErrorKind::InvalidArgument, "profile has wrong length");
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] < 0 || e[i] > dims[i]) throw Error(ErrorKind::InvalidArgument, "profile out of range");
}

}  // namespace

ModRepresentation reduce_mod(const Representation& v, std::uint32_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  ModRepresentation r{v.quiver(), p, v.dims(), {}};
  for (const auto& m : v.maps()) {
    std::vector<std::uint32_t> entries;
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) {
        const mpq_class& x = m(i, j);
        const unsigned long den = mpz_fdiv_ui(x.get_den_mpz_t(), p);
        if (den == 0)
          throw Error(ErrorKind::PrimeCollision, "prime " + std::to_string(p) + " divides a denominator");
        const unsigned long num = mpz_fdiv_ui(x.get_num_mpz_t(), p);
        entries.push_back(mul_mod(static_cast<std::uint32_t>(num),
                                  pow_mod(static_cast<std::uint32_t>(den), p - 2, p), p));
      }
    r.maps.push_back(std::move(entries));
  }
  return r;
}

std::uint64_t count_subreps(const ModRepresentation& v, std::span<const int> e) {
  check_profile(v.dims, e);
  const int n = v.quiver.size();
  const auto arrows = arrow_list(v.quiver);
  std::vector<std::vector<Subspace>> spaces;
  for (int i = 0; i < n; ++i)
    spaces.push_back(subspaces(v.dims[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i)], v.p));

  // Arrows are checked as soon as both endpoints have been assigned.
  std::vector<std::vector<std::size_t>> due(static_cast<std::size_t>(n));
  for (std::size_t a = 0; a < arrows.size(); ++a)
    due[static_cast<std::size_t>(std::max(arrows[a].source, arrows[a].target))].push_back(a);

  std::vector<const Subspace*> chosen(static_cast<std::size_t>(n), nullptr);
  auto image_ok = [&](std::size_t a) {
    const Subspace& src = *chosen[static_cast<std::size_t>(arrows[a].source)];
    const Subspace& tgt = *chosen[static_cast<std::size_t>(arrows[a].target)];
    const int rows = v.dims[static_cast<std::size_t>(arrows[a].target)];
    const int cols = v.dims[static_cast<std::size_t>(arrows[a].source)];
    const auto& m = v.maps[a];
    for (const Vec& u : src.rows) {
      Vec w(static_cast<std::size_t>(rows), 0);
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
          w[static_cast<std::size_t>(r)] =
              (w[static_cast<std::size_t>(r)] +
               mul_mod(m[static_cast<std::size_t>(r * cols + c)], u[static_cast<std::size_t>(c)], v.p)) % v.p;
      if (!contains(tgt, std::move(w), v.p)) return false;
    }
    return true;
  };

  std::uint64_t count = 0;
  std::function<void(int)> assign = [&](int vertex) {
    if (vertex == n) {
      ++count;
      return;
    }
    for (const auto& s : spaces[static_cast<std::size_t>(vertex)]) {
      chosen[static_cast<std::size_t>(vertex)] = &s;
      bool ok = true;
      for (std::size_t a : due[static_cast<std::size_t>(vertex)])
        if (!image_ok(a)) {
          ok = false;
          break;
        }
      if (ok) assign(vertex + 1);
    }
  };
  assign(0);
  return count;
}

long long grassmannian_euler_char(const Representation& v, std::span<const int> e,
                                  std::span<const std::uint32_t> primes) {
  check_profile(v.dims(), e);
  int degree = 0;
  for (std::size_t i = 0; i < e.size(); ++i) degree += e[i] * (v.dims()[i] - e[i]);
  const std::size_t needed = static_cast<std::size_t>(degree) + 2;
  if (primes.size() < needed)
    throw Error(ErrorKind::InvalidArgument, "need " + std::to_string(needed) + " primes for this profile");
  std::vector<std::uint32_t> sample(primes.begin(), primes.begin() + static_cast<std::ptrdiff_t>(needed));
  for (std::size_t i = 1; i < sample.size(); ++i)
    if (std::find(sample.begin(), sample.begin() + static_cast<std::ptrdiff_t>(i), sample[i]) !=
        sample.begin() + static_cast<std::ptrdiff_t>(i))
      throw Error(ErrorKind::InvalidArgument, "sample primes must be distinct");

  std::vector<std::uint64_t> counts(sample.size());
  parallel_for(sample.size(), default_thread_count(),
               [&](std::size_t k) { counts[k] = count_subreps(reduce_mod(v, sample[k]), e); });

  // Lagrange interpolation through the first degree + 1 samples.
  auto interpolate = [&](const mpq_class& at) {
    mpq_class total = 0;
    for (std::size_t i = 0; i + 1 < sample.size(); ++i) {
      mpq_class term = mpz_class(std::to_string(counts[i]));
      for (std::size_t j = 0; j + 1 < sample.size(); ++j) {
        if (i == j) continue;
        term *= (at - sample[j]);
        term /= (mpq_class(sample[i]) - sample[j]);
      }
      total += term;
    }
    return total;
  };
  const mpq_class check = interpolate(mpq_class(sample.back()));
  if (check != mpq_class(mpz_class(std::to_string(counts.back()))))
    throw Error(ErrorKind::InterpolationInconsistent,
                "count " + std::to_string(counts.back()) + " at q=" + std::to_string(sample.back()) +
                    " disagrees with the interpolated value " + check.get_str());
  const mpq_class chi = interpolate(mpq_class(1));
  if (chi.get_den() != 1 || !chi.get_num().fits_slong_p())
    throw Error(ErrorKind::InterpolationInconsistent, "non-integral Euler characteristic " + chi.get_str());
  return chi.get_num().get_si();
}

long long grassmannian_euler_char(const Representation& v, std::span<const int> e) {
  check_profile(v.dims(), e);
  int degree = 0;
  for (std::size_t i = 0; i < e.size(); ++i) degree += e[i] * (v.dims()[i] - e[i]);
  const auto primes = primes_avoiding(v, static_cast<std::size_t>(degree) + 2);
  return grassmannian_euler_char(v, e, primes);
}

}  // namespace cluster

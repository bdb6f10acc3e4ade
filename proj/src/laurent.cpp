#include "cluster/laurent.hpp"

#include <algorithm>
#include <map>

#include "cluster/error.hpp"

namespace cluster {

namespace {

using TermMap = std::map<Exponents, mpz_class>;

void accumulate(TermMap& acc, const Exponents& e, const mpz_class& c) {
  auto [it, inserted] = acc.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

std::vector<Term> to_terms(TermMap&& acc) {
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) terms.push_back({e, std::move(c)});
  return terms;
}

// Renders the variable part of a monomial, "" for the unit monomial.
std::string monomial_factors(const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (e[i] != 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

std::string render_term(const Exponents& e, const mpz_class& c) {
  std::string vars = monomial_factors(e);
  if (vars.empty()) return c.get_str();
  if (c == 1) return vars;
  if (c == -1) return "-" + vars;
  return c.get_str() + "*" + vars;
}

Exponents shifted(const Exponents& e, const Exponents& by, int sign) {
  Exponents r = e;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += sign * by[i];
  return r;
}

Exponents min_exponents(const LaurentPoly& f) {
  Exponents m = f.terms().front().exponents;
  for (const auto& t : f.terms())
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], t.exponents[i]);
  return m;
}

LaurentPoly shift(const LaurentPoly& f, const Exponents& by, int sign) {
  std::vector<Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) terms.push_back({shifted(t.exponents, by, sign), t.coefficient});
  return LaurentPoly::from_terms(f.nvars(), std::move(terms));
}

}  // namespace

LaurentPoly::LaurentPoly(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw Error(ErrorKind::InvalidArgument, "need at least one variable");
}

LaurentPoly LaurentPoly::constant(int nvars, const mpz_class& c) {
  return monomial(nvars, Exponents(static_cast<std::size_t>(nvars), 0), c);
}

LaurentPoly LaurentPoly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return monomial(nvars, std::move(e));
}

LaurentPoly LaurentPoly::monomial(int nvars, Exponents exponents, const mpz_class& c) {
  if (static_cast<int>(exponents.size()) != nvars)
    throw Error(ErrorKind::InvalidArgument, "exponent vector has wrong length");
  LaurentPoly f(nvars);
  if (c != 0) f.terms_.push_back({std::move(exponents), c});
  return f;
}

LaurentPoly LaurentPoly::from_terms(int nvars, std::vector<Term> terms) {
  LaurentPoly f(nvars);
  for (const auto& t : terms)
    if (static_cast<int>(t.exponents.size()) != nvars)
      throw Error(ErrorKind::InvalidArgument, "exponent vector has wrong length");
  f.terms_ = std::move(terms);
  f.normalise();
  return f;
}

void LaurentPoly::normalise() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.exponents < b.exponents; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().exponents == t.exponents) {
      merged.back().coefficient += t.coefficient;
    } else {
      if (!merged.empty() && merged.back().coefficient == 0) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coefficient == 0) merged.pop_back();
  terms_ = std::move(merged);
}

void LaurentPoly::check_compatible(const LaurentPoly& g) const {
  if (nvars_ != g.nvars_)
    throw Error(ErrorKind::InvalidArgument, "variable counts differ (" + std::to_string(nvars_) + " vs " +
                                                std::to_string(g.nvars_) + ")");
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& g) {
  check_compatible(g);
  terms_.insert(terms_.end(), g.terms_.begin(), g.terms_.end());
  normalise();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& g) { return *this += -g; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& g) {
  check_compatible(g);
  TermMap acc;
  Exponents e(static_cast<std::size_t>(nvars_));
  for (const auto& a : terms_) {
    for (const auto& b : g.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exponents[i] + b.exponents[i];
      accumulate(acc, e, a.coefficient * b.coefficient);
    }
  }
  terms_ = to_terms(std::move(acc));
  return *this;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result = constant(nvars_, 1);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

std::string LaurentPoly::text() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    out += render_term(t.exponents, t.coefficient);
  }
  return out;
}

std::string LaurentPoly::fraction() const {
  if (terms_.empty()) return "0";
  Exponents den = min_exponents(*this);
  for (int& d : den) d = std::max(0, -d);

  std::vector<Term> numerator;
  for (const auto& t : terms_) numerator.push_back({shifted(t.exponents, den, +1), t.coefficient});
  auto degree = [](const Exponents& e) {
    int s = 0;
    for (int v : e) s += v;
    return s;
  };
  std::sort(numerator.begin(), numerator.end(), [&](const Term& a, const Term& b) {
    const int da = degree(a.exponents), db = degree(b.exponents);
    if (da != db) return da < db;
    return a.exponents > b.exponents;
  });

  std::string num;
  for (const auto& t : numerator) {
    std::string s = render_term(t.exponents, t.coefficient);
    if (!num.empty() && s.front() != '-') num += '+';
    num += s;
  }
  const std::string den_text = monomial_factors(den);
  if (den_text.empty()) return num;
  if (numerator.size() > 1) num = "(" + num + ")";
  const bool compound = den_text.find('*') != std::string::npos;
  return num + "/" + (compound ? "(" + den_text + ")" : den_text);
}

LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g) { return f + g; }
LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g) { return f * g; }

LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den) {
  if (num.nvars() != den.nvars()) throw Error(ErrorKind::InvalidArgument, "variable counts differ");
  if (den.is_zero()) throw Error(ErrorKind::ZeroDivisor, "division by the zero polynomial");
  const int n = num.nvars();
  if (num.is_zero()) return LaurentPoly(n);

  // Strip the monomial content of the divisor and move the dividend into the
  // polynomial ring; both shifts are units of the Laurent ring.
  const Exponents den_shift = min_exponents(den);
  const LaurentPoly divisor = shift(den, den_shift, -1);
  const Exponents num_shift = min_exponents(num);
  const LaurentPoly dividend = shift(num, num_shift, -1);

  const Term& lead = divisor.terms().back();
  TermMap rem;
  for (const auto& t : dividend.terms()) rem.emplace(t.exponents, t.coefficient);

  std::vector<Term> quotient;
  Exponents e(static_cast<std::size_t>(n));
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    const Exponents& re = top->first;
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = re[i] - lead.exponents[i];
      if (e[i] < 0) throw Error(ErrorKind::NotDivisible, "(" + num.text() + ") / (" + den.text() + ")");
    }
    if (!mpz_divisible_p(top->second.get_mpz_t(), lead.coefficient.get_mpz_t()))
      throw Error(ErrorKind::NotDivisible, "(" + num.text() + ") / (" + den.text() + ")");
    const mpz_class c = top->second / lead.coefficient;
    quotient.push_back({e, c});
    const Exponents qe = e;
    for (const auto& t : divisor.terms()) {
      Exponents pe(static_cast<std::size_t>(n));
      for (std::size_t i = 0; i < pe.size(); ++i) pe[i] = qe[i] + t.exponents[i];
      accumulate(rem, pe, -c * t.coefficient);
    }
  }
  LaurentPoly q = LaurentPoly::from_terms(n, std::move(quotient));
  return shift(shift(q, num_shift, +1), den_shift, -1);
}

std::vector<int> denominator_vector(const LaurentPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero has no denominator vector");
  Exponents d = min_exponents(f);
  for (int& v : d) v = std::max(0, -v);
  return d;
}

bool is_nonnegative(const LaurentPoly& f) {
  return std::all_of(f.terms().begin(), f.terms().end(), [](const Term& t) { return t.coefficient > 0; });
}

mpq_class substitute(const LaurentPoly& f, std::span<const mpq_class> values) {
  if (static_cast<int>(values.size()) != f.nvars())
    throw Error(ErrorKind::InvalidArgument, "wrong number of substitution values");
  for (const auto& v : values)
    if (v == 0) throw Error(ErrorKind::ZeroDivisor, "substitution at zero");
  mpq_class total = 0;
  for (const auto& t : f.terms()) {
    mpq_class m = t.coefficient;
    for (std::size_t i = 0; i < values.size(); ++i) {
      const int a = t.exponents[i];
      for (int k = 0; k < std::abs(a); ++k) {
        if (a > 0) m *= values[i];
        else m /= values[i];
      }
    }
    total += m;
  }
  return total;
}

}  // namespace cluster

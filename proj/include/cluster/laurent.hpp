#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace cluster {

using Exponents = std::vector<int>;

struct Term {
  Exponents exponents;
  mpz_class coefficient;

  friend bool operator==(const Term& a, const Term& b) {
    return a.exponents == b.exponents && a.coefficient == b.coefficient;
  }
};

/// Laurent polynomial in x1..xn with integer coefficients.
///
/// Normal form: no zero coefficients, terms sorted by exponent vector in
/// ascending lexicographic order. Two values are equal iff their normal forms
/// coincide, so equality, ordering and hashing all work on the term list.
class LaurentPoly {
 public:
  explicit LaurentPoly(int nvars = 1);

  static LaurentPoly constant(int nvars, const mpz_class& c);
  /// x_i, with i 0-based.
  static LaurentPoly variable(int nvars, int i);
  static LaurentPoly monomial(int nvars, Exponents exponents, const mpz_class& c = 1);
  /// Collects like terms and drops zeros.
  static LaurentPoly from_terms(int nvars, std::vector<Term> terms);

  int nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& g);
  LaurentPoly& operator-=(const LaurentPoly& g);
  LaurentPoly& operator*=(const LaurentPoly& g);
  LaurentPoly pow(unsigned e) const;

  friend LaurentPoly operator+(LaurentPoly f, const LaurentPoly& g) { return f += g; }
  friend LaurentPoly operator-(LaurentPoly f, const LaurentPoly& g) { return f -= g; }
  friend LaurentPoly operator*(LaurentPoly f, const LaurentPoly& g) { return f *= g; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Bit-exact canonical text: terms in normal-form order rendered as
  /// `c*x1^a1*...*xn^an` without unit factors, joined by " + ".
  std::string text() const;

  /// Human-oriented fraction: numerator polynomial over the monomial
  /// denominator, e.g. "(x2+x3)/x1".
  std::string fraction() const;

 private:
  void check_compatible(const LaurentPoly& g) const;
  void normalise();

  int nvars_;
  std::vector<Term> terms_;
};

LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g);

/// Returns h with h * den == num. Throws ZeroDivisor for den == 0 and
/// NotDivisible when the quotient is not a Laurent polynomial.
LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den);

/// d_i = max(0, -min exponent of x_i). Throws on the zero polynomial.
std::vector<int> denominator_vector(const LaurentPoly& f);

/// True iff every stored coefficient is positive.
bool is_nonnegative(const LaurentPoly& f);

/// Exact evaluation at nonzero rational values.
mpq_class substitute(const LaurentPoly& f, std::span<const mpq_class> values);

/// Parses an expression in x1..xn built from integers, + - * / ^ and
/// parentheses. Division must be exact in the Laurent ring. Accepts both the
/// canonical text and the fraction form.
LaurentPoly parse_laurent(std::string_view text, int nvars);

/// Orders by canonical text, the order used for every sorted export.
struct TextLess {
  bool operator()(const LaurentPoly& a, const LaurentPoly& b) const { return a.text() < b.text(); }
};

}  // namespace cluster

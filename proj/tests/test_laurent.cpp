#include <gtest/gtest.h>

#include <random>

#include "cluster/error.hpp"
#include "cluster/laurent.hpp"

using namespace cluster;

namespace {

LaurentPoly x(int n, int i) { return LaurentPoly::variable(n, i - 1); }
LaurentPoly c(int n, long v) { return LaurentPoly::constant(n, v); }

LaurentPoly random_poly(std::mt19937_64& rng, int n, int terms, int lo, int hi) {
  std::uniform_int_distribution<int> exp(lo, hi);
  std::uniform_int_distribution<int> coef(-5, 5);
  std::vector<Term> ts;
  for (int t = 0; t < terms; ++t) {
    Exponents e(static_cast<std::size_t>(n));
    for (auto& v : e) v = exp(rng);
    ts.push_back({e, coef(rng)});
  }
  return LaurentPoly::from_terms(n, std::move(ts));
}

std::vector<mpq_class> random_point(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> num(1, 9);
  std::bernoulli_distribution neg(0.3);
  std::vector<mpq_class> pt;
  for (int i = 0; i < n; ++i) {
    mpq_class v(num(rng) * (neg(rng) ? -1 : 1), num(rng));
    v.canonicalize();
    pt.push_back(v);
  }
  return pt;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalError;
}

}  // namespace

TEST(Laurent, Goldens) {
  const int n = 3;
  EXPECT_EQ((x(n, 2) + x(n, 3)).text(), "x3 + x2");
  const LaurentPoly inv = LaurentPoly::monomial(n, {-1, 0, 0});
  const LaurentPoly u1 = inv * (x(n, 2) + x(n, 3));
  EXPECT_EQ(u1.text(), "x1^-1*x3 + x1^-1*x2");
  EXPECT_EQ(u1.fraction(), "(x2+x3)/x1");
  EXPECT_EQ(LaurentPoly(n).text(), "0");
  EXPECT_EQ(c(n, 1).text(), "1");
  EXPECT_EQ((-x(n, 1)).text(), "-x1");
  EXPECT_EQ((x(n, 1) - c(n, 2) * x(n, 2)).text(), "-2*x2 + x1");
  EXPECT_EQ((x(n, 1) * x(n, 1) * c(n, 3)).text(), "3*x1^2");
  EXPECT_EQ((c(n, 1) + x(n, 2)).fraction(), "1+x2");
}

TEST(Laurent, ExactDivisionExamples) {
  const int n = 3;
  EXPECT_EQ(exact_divide(x(n, 1) * x(n, 2) + x(n, 2), x(n, 2)), x(n, 1) + c(n, 1));
  EXPECT_EQ(exact_divide(x(n, 2) + x(n, 3), x(n, 1)).text(), "x1^-1*x3 + x1^-1*x2");
  EXPECT_EQ(kind_of([&] { exact_divide(x(n, 1) + x(n, 2), x(n, 1) + c(n, 1)); }), ErrorKind::NotDivisible);
  EXPECT_EQ(kind_of([&] { exact_divide(x(n, 1), LaurentPoly(n)); }), ErrorKind::ZeroDivisor);
  // (x1^2 - x2^2) / (x1 - x2) = x1 + x2 needs real multivariate division.
  EXPECT_EQ(exact_divide(x(n, 1) * x(n, 1) - x(n, 2) * x(n, 2), x(n, 1) - x(n, 2)), x(n, 1) + x(n, 2));
  EXPECT_TRUE(exact_divide(LaurentPoly(n), x(n, 1)).is_zero());
}

TEST(Laurent, DenominatorVectorAndSign) {
  const int n = 3;
  const LaurentPoly v = parse_laurent("(x1+x3+x2*x3)/(x1*x2)", n);
  EXPECT_EQ(denominator_vector(v), (std::vector<int>{1, 1, 0}));
  EXPECT_EQ(denominator_vector(x(n, 1)), (std::vector<int>{0, 0, 0}));
  EXPECT_TRUE(is_nonnegative(v));
  EXPECT_FALSE(is_nonnegative(x(n, 1) - x(n, 2)));
  EXPECT_THROW(denominator_vector(LaurentPoly(n)), Error);
}

TEST(Laurent, Substitute) {
  const std::vector<mpq_class> ones(3, mpq_class(1));
  EXPECT_EQ(substitute(parse_laurent("(x2+x3)/x1", 3), ones), 2);
  const std::vector<mpq_class> bad{0, 1, 1};
  EXPECT_THROW(substitute(parse_laurent("(x2+x3)/x1", 3), bad), Error);
  const std::vector<mpq_class> half{mpq_class(1, 2), 3, 1};
  EXPECT_EQ(substitute(parse_laurent("x1^-2*x2 - 1", 3), half), 11);
}

TEST(Laurent, Parser) {
  const int n = 3;
  EXPECT_EQ(parse_laurent("x1^-1*x3 + x1^-1*x2", n), parse_laurent("(x2+x3)/x1", n));
  EXPECT_EQ(parse_laurent("(x1+1)^2", n), x(n, 1) * x(n, 1) + c(n, 2) * x(n, 1) + c(n, 1));
  EXPECT_EQ(parse_laurent("-2*x2 + x1", n), x(n, 1) - c(n, 2) * x(n, 2));
  EXPECT_EQ(parse_laurent("2 - -x1", n), c(n, 2) + x(n, 1));
  EXPECT_EQ(parse_laurent("0", n), LaurentPoly(n));
  EXPECT_EQ(kind_of([&] { parse_laurent("x4", n); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([&] { parse_laurent("x1 +", n); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([&] { parse_laurent("(x1", n); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([&] { parse_laurent("x1/(x1+1)", n); }), ErrorKind::NotDivisible);
  EXPECT_EQ(kind_of([&] { parse_laurent("1/0", n); }), ErrorKind::ZeroDivisor);
}

TEST(LaurentProperty, TextAndFractionRoundTrip) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const LaurentPoly f = random_poly(rng, n, 1 + static_cast<int>(rng() % 6), -3, 3);
    ASSERT_EQ(parse_laurent(f.text(), n), f) << f.text();
    ASSERT_EQ(parse_laurent(f.fraction(), n), f) << f.fraction();
  }
}

TEST(LaurentProperty, RingAxiomsAgainstEvaluation) {
  // Evaluation at a rational point is a ring homomorphism; it is an
  // independent check of addition and multiplication.
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const LaurentPoly f = random_poly(rng, n, 4, -2, 2);
    const LaurentPoly g = random_poly(rng, n, 4, -2, 2);
    const LaurentPoly h = random_poly(rng, n, 3, -2, 2);
    const auto pt = random_point(rng, n);
    ASSERT_EQ(substitute(f + g, pt), substitute(f, pt) + substitute(g, pt));
    ASSERT_EQ(substitute(f * g, pt), substitute(f, pt) * substitute(g, pt));
    ASSERT_EQ(f * (g + h), f * g + f * h);
    ASSERT_EQ((f * g) * h, f * (g * h));
    ASSERT_EQ(f * g, g * f);
    ASSERT_TRUE((f - f).is_zero());
    ASSERT_EQ(f.pow(3), f * f * f);
  }
}

TEST(LaurentProperty, ExactDivideRoundTrip) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const LaurentPoly f = random_poly(rng, n, 1 + static_cast<int>(rng() % 5), -3, 3);
    LaurentPoly g = random_poly(rng, n, 1 + static_cast<int>(rng() % 4), -2, 2);
    if (g.is_zero()) g = c(n, 1);
    ASSERT_EQ(exact_divide(f * g, g), f) << f.text() << " / " << g.text();
  }
}

TEST(LaurentProperty, NonDivisibleDetected) {
  // f * g + 1 over g is not a Laurent polynomial whenever g is not a unit
  // (a monomial times a unit), since the remainder 1 is nonzero mod g.
  std::mt19937_64 rng(31);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const LaurentPoly f = random_poly(rng, n, 3, 0, 2);
    const LaurentPoly g = random_poly(rng, n, 2 + static_cast<int>(rng() % 2), 0, 2);
    if (g.terms().size() < 2) continue;
    ++checked;
    ASSERT_EQ(kind_of([&] { exact_divide(f * g + c(n, 1), g); }), ErrorKind::NotDivisible) << g.text();
  }
  EXPECT_GT(checked, 500);
}

TEST(Laurent, IncompatibleVariableCounts) {
  EXPECT_THROW(x(2, 1) + x(3, 1), Error);
}

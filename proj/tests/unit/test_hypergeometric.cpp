#include "hyperverify/errors.hpp"
#include "hyperverify/hypergeometric.hpp"
#include "test_util.hpp"

using namespace hyperverify;

// Reference values: mpmath (hyp2f1, hyper) at 40 digits.

TEST(PfqAtOne, MatchesReference) {
  EXPECT_REL(pfq_at_1({{1, 0.3, 1.4}, {2.1, 1.7}}).value, 1.2502911531680095924, 1e-13);
  EXPECT_REL(pfq_at_1({{0.5, 0.7, 0.9}, {2.0, 2.5}}).value, 1.0890896351650807218, 1e-13);
  EXPECT_REL(pfq_at_1({{1, 0.6, 1.4, 2.1}, {1.7, 2.5, 1.3}}).value, 2.6872446365075727635, 1e-12);
}

TEST(PfqAtOne, SmallMarginUsesExtrapolation) {
  // 3F2(0.9, 0.2, 1.3; 1.15, 1.3; 1) reduces to a Gauss sum; margin 0.05.
  const EvalResult r = pfq_at_1({{0.9, 0.2, 1.3}, {1.15, 1.3}});
  EXPECT_REL(r.value, 4.8577806267317646161, 1e-11);
  EXPECT_LE(std::fabs(r.value - 4.8577806267317646161), std::max(r.abs_error, 1e-14 * r.value) * 10);
}

TEST(PfqAtOne, TerminatingSeries) {
  const PfqParams p{{2, 1, -1}, {3, 2}};
  EXPECT_EQ(terminating_order(p), std::optional<std::size_t>(1));
  EXPECT_REL(pfq_at_1(p).value, 2.0 / 3.0, 1e-15);
}

TEST(PfqAtOne, ErrorsAndMargin) {
  EXPECT_DOUBLE_EQ(convergence_margin({{1, 2, 3}, {4, 5}}), 3.0);
  EXPECT_THROW(pfq_at_1({{1, 1, 1}, {1.5, 1.5}}), NoConvergence);
  EXPECT_THROW(pfq_at_1({{1, 1, 1, 1}, {2, 2}}), InvalidParams);
}

TEST(PfqAtOne, AbsErrorCoversTrueError) {
  const double want = 1.2502911531680095924;
  const EvalResult r = pfq_at_1({{1, 0.3, 1.4}, {2.1, 1.7}}, {1e-10, 1'000'000});
  EXPECT_LE(std::fabs(r.value - want), r.abs_error + 1e-15);
}

TEST(Gauss2F1Test, MatchesReferenceAcrossTheRealLine) {
  struct Case {
    double a, b, c, z, want, tol;
  };
  const Case cases[] = {
      {1, 0.7, 1.3, 0.99, 8.9519775285539615411, 1e-13},
      {0.5, 0.5, 1, 0.9, 1.6412644143423707333, 1e-13},  // integer c-a-b
      {1, 0.5, 2, -3, 0.66666666666666666667, 1e-14},
      {0.3, 0.7, 2.4, 0.999999, 1.1590675493021052591, 1e-13},
      {1, 0.65, 1.35, 0.3, 1.1845557474330204745, 1e-14},
      {1, 0.65, 1.35, -0.8, 0.74871002877712745361, 1e-14},
      {1, 0.5, 1.5, 0.75, 1.5206919926018926951, 1e-14},
      {0.25, 1.25, 1.5, 0.95, 1.7131716409401784866, 1e-13},
      {1, 0.3, 1.7, -20, 0.50225209939383762629, 1e-13},
  };
  for (const Case& c : cases) {
    EXPECT_REL(gauss_2f1(c.a, c.b, c.c, c.z).value, c.want, c.tol) << c.a << ' ' << c.b << ' ' << c.c << ' ' << c.z;
    EXPECT_REL(Gauss2F1(c.a, c.b, c.c)(c.z).value, c.want, c.tol);
  }
}

TEST(Gauss2F1Test, ComplementKeepsPrecisionNearOne) {
  EXPECT_REL(gauss_2f1_complement(1, 0.65, 1.35, 1e-8).value, 482.40964596618858799, 1e-12);
  EXPECT_REL(Gauss2F1(1, 0.3, 1.7).complement(1e-12).value, 1.7499820781442351969, 1e-12);
}

TEST(Gauss2F1Test, SeriesAndDomain) {
  EXPECT_REL(gauss_2f1_series(1, 0.65, 1.35, 0.3).value, 1.1845557474330204745, 1e-14);
  EXPECT_THROW(gauss_2f1_series(1, 0.65, 1.35, 1.2), DomainError);
  EXPECT_THROW(gauss_2f1(1, 0.5, 1.5, 1.0), DomainError);
  EXPECT_THROW(gauss_2f1(1, 0.5, -2.0, 0.3), InvalidParams);
}

TEST(Gauss2F1Test, TerminatingPolynomialAtAnyArgument) {
  // F(-2, b; c; z) = 1 - 2bz/c + b(b+1)z^2/(c(c+1))
  const double b = 0.4, c = 1.7, z = 3.0;
  const double want = 1 - 2 * b * z / c + b * (b + 1) * z * z / (c * (c + 1));
  EXPECT_REL(gauss_2f1_series(-2, b, c, z).value, want, 1e-15);
  EXPECT_REL(Gauss2F1(-2, b, c).complement(1.0 - z).value, want, 1e-14);
  EXPECT_DOUBLE_EQ(Gauss2F1(1, 0, 2).complement(1e-300).value, 1.0);
}

TEST(Gauss2F1Test, ElementaryForms) {
  // F(1,1;2;z) = -log(1-z)/z
  for (double z : {-5.0, -0.5, 0.2, 0.7, 0.999}) {
    EXPECT_REL(gauss_2f1(1, 1, 2, z).value, -std::log1p(-z) / z, 1e-13) << z;
  }
  // F(a,b;b;z) = (1-z)^-a
  EXPECT_REL(gauss_2f1(0.3, 1.1, 1.1, -2.0).value, std::pow(3.0, -0.3), 1e-14);
}

TEST(GaussSum, MatchesGammaRatioAndPfq) {
  EXPECT_REL(gauss_sum(0.9, 0.2, 1.15).value, 4.8577806267317646161, 1e-13);
  EXPECT_THROW(gauss_sum(1, 1, 1.5), DomainError);
  // 2F1 at z -> 1 approaches the Gauss sum when c - a - b > 0
  EXPECT_REL(gauss_2f1_complement(0.3, 0.7, 2.4, 1e-14).value, gauss_sum(0.3, 0.7, 2.4).value, 1e-11);
}

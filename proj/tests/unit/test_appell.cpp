#include <random>

#include "hyperverify/appell.hpp"
#include "hyperverify/errors.hpp"
#include "hyperverify/hypergeometric.hpp"
#include "test_util.hpp"

using namespace hyperverify;

// Reference values: mpmath appellf1 at 40 digits.

TEST(AppellF1, SeriesMatchesReference) {
  EXPECT_REL(f1_series({1, 0.4, 0.6, 2.3, 0.5, 0.25}).value, 1.2002785528475928778, 1e-14);
  EXPECT_REL(f1_series({1.5, -0.3, 0.8, 3.1, -0.6, 0.7}).value, 1.5989779388446544019, 1e-14);
  EXPECT_REL(f1_series({0.7, 0.2, 0.9, 1.9, 0.9, 0.3}).value, 1.2585020859161072599, 1e-12);
}

TEST(AppellF1, IntegralMatchesReference) {
  EXPECT_REL(f1_integral({1, 0.4, 0.6, 2.3, 0.5, 0.25}).value, 1.2002785528475928778, 1e-12);
  EXPECT_REL(f1_integral({0.7, 0.2, 0.9, 1.9, 0.9, 0.3}).value, 1.2585020859161072599, 1e-11);
}

TEST(AppellF1, SeriesAgreesWithIntegralOnRandomParameters) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int i = 0; i < 25; ++i) {
    const double alpha = 0.2 + 1.5 * u01(rng);
    const double gamma = alpha + 0.3 + 2.0 * u01(rng);
    const AppellParams p{alpha, -0.8 + 2.0 * u01(rng), -0.8 + 2.0 * u01(rng), gamma,
                         -0.7 + 1.4 * u01(rng), -0.7 + 1.4 * u01(rng)};
    const EvalResult s = f1_series(p);
    const EvalResult q = f1_integral(p);
    EXPECT_REL(s.value, q.value, 1e-10) << "case " << i;
  }
}

TEST(AppellF1, EqualArgumentsReduceTo2F1) {
  // F1(a; b, b'; c; x, x) = 2F1(a, b+b'; c; x)
  for (double x : {-0.6, 0.2, 0.55}) {
    const EvalResult f = f1_series({0.8, 0.3, 0.45, 1.9, x, x});
    EXPECT_REL(f.value, gauss_2f1(0.8, 0.75, 1.9, x).value, 1e-13) << x;
  }
}

TEST(AppellF1, ZeroSecondArgumentReducesTo2F1) {
  EXPECT_REL(f1_series({1.2, 0.4, 0.9, 2.5, 0.6, 0.0}).value, gauss_2f1(1.2, 0.4, 2.5, 0.6).value, 1e-13);
}

TEST(AppellF1, Domains) {
  EXPECT_THROW(f1_series({1, 0.4, 0.6, 2.3, 1.0, 0.2}), DomainError);
  EXPECT_THROW(f1_series({1, 0.4, 0.6, -1.0, 0.1, 0.2}), InvalidParams);
  EXPECT_THROW(f1_integral({2.5, 0.4, 0.6, 2.3, 0.5, 0.2}), DomainError);
}

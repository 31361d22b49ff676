#include <algorithm>
#include <cstring>
#include <set>

#include "hyperverify/errors.hpp"
#include "hyperverify/identity_harness.hpp"
#include "test_util.hpp"

using namespace hyperverify;

// rhs_main and J1 closed-form references: mpmath at 40 digits, independent summation.

TEST(ClosedForms, RhsMainMatchesReference) {
  const std::pair<double, double> cases[] = {
      {0.1, 0.17635668330908839936}, {0.25, 0.31531567828305035911}, {0.3, 0.39170774771054435216},
      {0.5, 1.1303885391070043843},  {0.65, 3.7958066758656416012},  {0.9, -25.494391630236225233},
  };
  for (auto [d, want] : cases) {
    const EvalResult r = rhs_main(d);
    EXPECT_REL(r.value, want, 1e-12) << d;
    EXPECT_LE(std::fabs(r.value - want), r.abs_error + 1e-13 * std::fabs(want)) << d;
  }
}

TEST(ClosedForms, RhsMainAtZero) {
  // d = 0: int int x^3 y = 1/8
  EXPECT_REL(rhs_main(0.0).value, 0.125, 1e-14);
  EXPECT_REL(lhs_main(0.0).value, 0.125, 1e-12);
}

TEST(ClosedForms, J1Pieces) {
  EXPECT_REL(j1a_closed(0.3).value, 0.92484496588564692175, 1e-12);
  EXPECT_REL(j1b_closed(0.3).value, 0.37056173770828697255, 1e-12);
  EXPECT_REL(j1a_closed(0.65).value, 42.801013216699194295, 1e-12);
  EXPECT_REL(j1b_closed(0.65).value, 20.091213094617797482, 1e-12);
}

TEST(ClosedForms, AssemblyReproducesMain) {
  for (double d : {0.3, 0.6, 0.65, 0.75}) {
    EXPECT_REL(assembly_rhs(d).value, rhs_main(d).value, 1e-10) << d;
  }
}

TEST(ClosedForms, DivergentAtFourFifths) {
  EXPECT_THROW(rhs_main(0.8), Error);
  EXPECT_THROW(lhs_main(0.8), DomainError);
}

TEST(Judge, RelativeAndAbsoluteFloors) {
  EXPECT_EQ(judge(1.0, 0, 1.0 + 5e-10, 0, 1e-9), Verdict::pass);
  EXPECT_EQ(judge(1.0, 0, 1.0 + 5e-9, 0, 1e-9), Verdict::fail);
  // reported errors widen the band
  EXPECT_EQ(judge(1.0, 3e-9, 1.0 + 5e-9, 3e-9, 1e-9), Verdict::pass);
  // both sides near zero: the absolute floor applies
  EXPECT_EQ(judge(0.0, 0, 5e-15, 0, 1e-9), Verdict::pass);
  EXPECT_EQ(judge(NAN, 0, 1.0, 0, 1e-9), Verdict::divergent);
}

TEST(ValidityTest, IntervalsAndExclusions) {
  Validity v{{{0.0, 0.5, false, true}, {0.6, 1.0, true, false}}, {0.25}};
  EXPECT_TRUE(v.contains(0.0));
  EXPECT_FALSE(v.contains(0.5));
  EXPECT_FALSE(v.contains(0.6));
  EXPECT_TRUE(v.contains(1.0));
  EXPECT_FALSE(v.contains(0.25));
  EXPECT_FALSE(v.contains(0.55));
}

TEST(Registry, IdsAreUniqueAndFindable) {
  std::set<std::string> ids;
  for (const IdentityCheck& c : registry()) {
    EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    EXPECT_EQ(&find_check(c.id), &c);
    EXPECT_FALSE(c.description.empty());
  }
  for (const char* id : {"main", "A.0", "A.1", "A.2", "A.3", "3.00", "A.4", "A.5", "A.51", "A.6", "A.7", "assembly"}) {
    EXPECT_TRUE(ids.count(id)) << id;
  }
  EXPECT_THROW(find_check("no-such-id"), UnknownIdentity);
}

TEST(Check, OutOfDomainIsSkippedWithoutEvaluation) {
  const CheckReport r = check("I1", 0.3);
  EXPECT_EQ(r.verdict, Verdict::skipped_out_of_domain);
  EXPECT_TRUE(std::isnan(r.lhs_value));
  EXPECT_EQ(check("main", 0.8).verdict, Verdict::skipped_out_of_domain);
}

TEST(Check, MainPassesAcrossTheGrid) {
  for (double d : {0.0, 0.25, 0.5, 0.7}) {
    const CheckReport r = check("main", d);
    EXPECT_EQ(r.verdict, Verdict::pass) << d << " rel " << r.rel_diff;
    EXPECT_LE(r.rel_diff, 1e-6);
  }
}

TEST(Check, MainWidensToleranceNearTheDivergence) {
  EXPECT_DOUBLE_EQ(check("main", 0.9).tol, 1e-4);
  EXPECT_DOUBLE_EQ(check("main", 0.3).tol, 1e-6);
  EXPECT_DOUBLE_EQ(check("main", 0.3, 1e-3).tol, 1e-3);
}

TEST(Check, ErrataFail) {
  EXPECT_EQ(check("A.5", 0.3).verdict, Verdict::fail);
  EXPECT_EQ(check("A.1-printed", 0.5).verdict, Verdict::fail);
}

TEST(Check, ThomaeRegistryEntriesHold) {
  for (double d : {0.1, 0.3, 0.6, 0.75}) {
    EXPECT_EQ(check("A.4", d).verdict, Verdict::pass) << d;
    EXPECT_EQ(check("A.51", d).verdict, Verdict::pass) << d;
  }
}

TEST(Check, TightToleranceFails) {
  // A quadrature check with an impossible tolerance must not pass by accident.
  const CheckReport r = check("J2", 0.3, 1e-30);
  EXPECT_EQ(r.verdict, r.abs_diff <= r.lhs_err + r.rhs_err + kTolAbsFloor ? Verdict::pass : Verdict::fail);
}

TEST(Sweep, DefaultGridHasNoFailures) {
  const auto reports = sweep(default_grid());
  ASSERT_FALSE(reports.empty());
  std::size_t passes = 0;
  for (const CheckReport& r : reports) {
    EXPECT_NE(r.verdict, Verdict::fail) << r.id << " d=" << r.d << " rel=" << r.rel_diff;
    EXPECT_NE(r.verdict, Verdict::divergent) << r.id << " d=" << r.d << " " << r.note;
    if (r.verdict == Verdict::pass) ++passes;
    EXPECT_NE(find_check(r.id).kind, CheckKind::exploratory);
    EXPECT_NE(find_check(r.id).kind, CheckKind::slow);
  }
  EXPECT_GT(passes, reports.size() / 2);
}

TEST(Sweep, OrderedByIdThenD) {
  const std::vector<double> grid{0.7, 0.3, 0.6};
  const auto reports = sweep(grid);
  for (std::size_t i = 1; i < reports.size(); ++i) {
    if (reports[i].id == reports[i - 1].id) EXPECT_LT(reports[i - 1].d, reports[i].d);
  }
  EXPECT_TRUE(std::is_sorted(reports.begin(), reports.end(), [](const CheckReport& a, const CheckReport& b) {
    return a.id < b.id;
  }));
}

TEST(Sweep, DeterministicAcrossRuns) {
  const std::vector<double> grid{0.3, 0.65};
  const auto a = sweep(grid), b = sweep(grid);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(std::memcmp(&a[i].lhs_value, &b[i].lhs_value, sizeof(double)), 0) << a[i].id;
    EXPECT_EQ(std::memcmp(&a[i].rhs_value, &b[i].rhs_value, sizeof(double)), 0) << a[i].id;
    EXPECT_EQ(a[i].verdict, b[i].verdict) << a[i].id;
  }
}

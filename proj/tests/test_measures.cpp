#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <utility>
#include <vector>

#include "laminations/measures.hpp"

using namespace laminations;

namespace {

RatMatrix skew2(long v) {
  RatMatrix m(2, 2);
  m.at(0, 1) = Rational(v);
  m.at(1, 0) = Rational(-v);
  return m;
}

IntegralLattice lattice_of(int ambient, IntMatrix basis) {
  IntegralLattice l;
  l.ambient_dim = ambient;
  l.basis = std::move(basis);
  return l;
}

}  // namespace

TEST_CASE("expected_ratio: closed form and the hyperbolicity guard") {
  CHECK(expected_ratio(0, 5) == Rational(4));
  CHECK(expected_ratio(1, 2) == Rational(2));
  CHECK(expected_ratio(2, 0) == Rational(2));
  CHECK(expected_ratio(2, 1) == Rational(4));
  CHECK(expected_ratio(3, 0) == Rational(8));
  CHECK(expected_ratio(0, 7) == Rational(16));
  // Hyperbolic but outside the chart family: the formula still evaluates.
  CHECK(expected_ratio(0, 3) == Rational(1));
  CHECK(expected_ratio(1, 1) == Rational(1));
  CHECK(expected_ratio(0, 4) == Rational(2));

  CHECK_THROWS_AS(expected_ratio(0, 0), NonHyperbolic);
  CHECK_THROWS_AS(expected_ratio(0, 2), NonHyperbolic);
  CHECK_THROWS_AS(expected_ratio(1, 0), NonHyperbolic);
}

TEST_CASE("ratio_of: pinned values and failure modes") {
  CHECK(ratio_of(skew2(-2), lattice_of(2, IntMatrix::identity(2))) ==
        Rational(2));
  // Doubling the basis scales the ratio by det = 4.
  IntMatrix twice = IntMatrix::identity(2);
  twice.at(0, 0) = 2;
  twice.at(1, 1) = 2;
  CHECK(ratio_of(skew2(-2), lattice_of(2, twice)) == Rational(8));
  // Rank-zero lattice: empty product, ratio 1.
  CHECK(ratio_of(skew2(5), lattice_of(2, IntMatrix(2, 0))) == Rational(1));

  CHECK_THROWS_AS(ratio_of(skew2(1), lattice_of(3, IntMatrix::identity(3))),
                  DimensionMismatch);
  IntMatrix one_col(2, 1);
  one_col.at(0, 0) = 1;
  CHECK_THROWS_AS(ratio_of(skew2(1), lattice_of(2, one_col)), OddDimension);
  CHECK_THROWS_AS(ratio_of(RatMatrix(2, 2), lattice_of(2, IntMatrix::identity(2))),
                  DegenerateForm);
}

TEST_CASE("render: exact line grammar") {
  RatioReport r;
  r.source = "tau05";
  r.g = 0;
  r.n = 5;
  r.dim = 4;
  r.pfaffian = Rational(4);
  r.ratio = Rational(4);
  r.expected = Rational(4);
  r.verdict = Verdict::OK;
  CHECK(render(r) == "source=tau05 g=0 n=5 dim=4 pf=4 ratio=4 expected=4 verdict=OK");

  RatioReport family;
  family.g = 2;
  family.n = 1;
  family.dim = 8;
  family.pfaffian = Rational(-4);
  family.ratio = Rational(4);
  family.expected = Rational(4);
  family.verdict = Verdict::OK;
  CHECK(render(family) == "g=2 n=1 dim=8 pf=-4 ratio=4 expected=4 verdict=OK");

  RatioReport bare;
  bare.source = "x";
  bare.dim = 2;
  bare.pfaffian = Rational(-2);
  bare.ratio = Rational(2);
  CHECK(render(bare) == "source=x dim=2 pf=-2 ratio=2 expected=? verdict=N/A");

  RatioReport wrong = family;
  wrong.expected = Rational(8);
  wrong.verdict = Verdict::Mismatch;
  CHECK(render(wrong) == "g=2 n=1 dim=8 pf=-4 ratio=4 expected=8 verdict=MISMATCH");
}

TEST_CASE("builtin reports: all six chart values") {
  CHECK(render(builtin_report("tau05")) ==
        "source=tau05 g=0 n=5 dim=4 pf=4 ratio=4 expected=4 verdict=OK");
  CHECK(render(builtin_report("tau12")) ==
        "source=tau12 g=1 n=2 dim=4 pf=2 ratio=2 expected=2 verdict=OK");
  CHECK(render(builtin_report("tau20")) ==
        "source=tau20 g=2 n=0 dim=6 pf=-2 ratio=2 expected=2 verdict=OK");
  CHECK(render(builtin_report("tau21")) ==
        "source=tau21 g=2 n=1 dim=8 pf=-4 ratio=4 expected=4 verdict=OK");
  CHECK(render(builtin_report("sigma04-tau")) ==
        "source=sigma04-tau g=0 n=4 dim=2 pf=-2 ratio=2 expected=2 verdict=OK");
  CHECK(render(builtin_report("sigma04-tauprime")) ==
        "source=sigma04-tauprime g=0 n=4 dim=2 pf=2 ratio=2 expected=2 verdict=OK");
  CHECK_THROWS_AS(builtin_report("tau99"), Error);

  CHECK(builtin_names() ==
        (std::vector<std::string>{"tau05", "tau12", "tau20", "tau21",
                                  "sigma04-tau", "sigma04-tauprime"}));
  CHECK(is_builtin("tau12"));
  CHECK_FALSE(is_builtin("sigma05-tau"));
}

TEST_CASE("track_report without metadata: no expectation, N/A verdict") {
  TrainTrack bare = builtin_track("sigma04-tau");
  bare.genus.reset();
  bare.punctures.reset();
  RatioReport r = track_report(bare, "bare");
  CHECK_FALSE(r.expected.has_value());
  CHECK(r.verdict == Verdict::NA);
  CHECK(r.ratio == Rational(2));
  CHECK(render(r) == "source=bare dim=2 pf=-2 ratio=2 expected=? verdict=N/A");
}

TEST_CASE("deeper family charts keep the closed form") {
  RatioReport r07 = model_report(build(0, 7));
  CHECK(render(r07) == "g=0 n=7 dim=8 pf=16 ratio=16 expected=16 verdict=OK");
  RatioReport r40 = model_report(build(4, 0));
  CHECK(render(r40) == "g=4 n=0 dim=18 pf=-32 ratio=32 expected=32 verdict=OK");
}

TEST_CASE("euclidean covolume demo: chart-dependent lattice, stable ratio") {
  EuclidDemo d = euclid_demo();
  CHECK(d.tau == 12);
  CHECK(d.tauprime == 75);
  CHECK(d.distinct);

  std::vector<std::string> lines = euclid_demo_lines();
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "tau: 12  tau': 75  distinct: true");
  CHECK(lines[1] == "sqrt(tau) ~ 3.464101615137");   // truncated, not rounded
  CHECK(lines[2] == "sqrt(tau') ~ 8.660254037844");

  // The punchline: different Euclidean normalizations, identical ratio.
  CHECK(builtin_report("sigma04-tau").ratio ==
        builtin_report("sigma04-tauprime").ratio);
}

TEST_CASE("sweep: pinned small run") {
  SweepResult s = sweep(2);
  REQUIRE(s.reports.size() == 2);
  CHECK(render(s.reports[0]) == "g=0 n=5 dim=4 pf=4 ratio=4 expected=4 verdict=OK");
  CHECK(render(s.reports[1]) == "g=1 n=2 dim=4 pf=2 ratio=2 expected=2 verdict=OK");
  CHECK(s.skipped ==
        (std::vector<std::pair<int, int>>{{0, 3}, {0, 4}, {1, 1}}));
}

TEST_CASE("sweep: every supported type up to complexity 6 hits 2^(2g+n-3)") {
  SweepResult s = sweep(6);
  CHECK(s.reports.size() == 15);
  CHECK(s.skipped.size() == 3);
  std::pair<int, int> prev{-1, -1};
  for (const RatioReport& r : s.reports) {
    REQUIRE(r.g.has_value());
    REQUIRE(r.n.has_value());
    std::pair<int, int> cur{*r.g, *r.n};
    CHECK(prev < cur);  // lexicographic (g, n) order
    prev = cur;
    CHECK(r.dim == 6 * *r.g - 6 + 2 * *r.n);
    CHECK(r.verdict == Verdict::OK);
    CHECK(r.ratio == expected_ratio(*r.g, *r.n));
    CHECK(abs(r.pfaffian) == r.ratio);
  }
  // Byte-for-byte determinism across runs.
  SweepResult again = sweep(6);
  REQUIRE(again.reports.size() == s.reports.size());
  for (size_t i = 0; i < s.reports.size(); ++i)
    CHECK(render(s.reports[i]) == render(again.reports[i]));
}

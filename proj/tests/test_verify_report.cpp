#include <catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "bintail/verify.hpp"

using namespace bintail;
using Catch::Approx;

TEST_CASE("grid points") {
  CHECK(grid_points({0.005, 0.495, 0.005}).size() == 99);
  CHECK(grid_points({0.25, 0.25, 0.1}).size() == 1);
  CHECK_THROWS(grid_points({0.1, 0.2, 0.0}));
  CHECK_THROWS(grid_points({0.0, 0.2, 0.1}));
  CHECK_THROWS(grid_points({0.3, 0.2, 0.1}));
}

TEST_CASE("identity suite on small n") {
  const CheckOutcome trivial = run_identity_suite(1);
  CHECK(trivial.passed());
  CHECK(trivial.cases > 0);
  const CheckOutcome five = run_identity_suite(5);
  CHECK(five.failures == 0);
  CHECK(five.cases > trivial.cases);
  CHECK_THROWS(run_identity_suite(0));
}

TEST_CASE("sandwich suite") {
  SweepSpec spec;
  spec.n_values = {1, 3, 9};
  spec.kinds.assign(all_bound_kinds.begin(), all_bound_kinds.end());
  const CheckOutcome o = run_sandwich_suite(spec);
  CHECK(o.passed());
  CHECK(o.cases > 0);

  spec.kinds.clear();
  CHECK(run_sandwich_suite(spec).cases == 0);

  SweepSpec edge;
  edge.n_values = {99};
  edge.p_grid = {0.495, 0.495, 0.005};
  edge.kinds.assign(all_bound_kinds.begin(), all_bound_kinds.end());
  CHECK(run_sandwich_suite(edge).passed());
}

TEST_CASE("sweep rows and CSV") {
  SweepSpec spec;
  spec.n_values = {3, 2};
  spec.p_grid = {0.25, 0.3, 0.05};
  spec.kinds = {BoundKind::HOEFFDING, BoundKind::CHERNLIKE_UB, BoundKind::ELEM_LB};
  const auto rows = run_sweep(spec);
  // n = 2 gets HOEFFDING only; n = 3 gets the two odd kinds; two p values each
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].n == 2);
  CHECK(rows[2].n == 3);
  CHECK(rows[2].kind == "CHERNLIKE_UB");
  CHECK(rows[3].kind == "ELEM_LB");
  CHECK(rows[2].p == rows[3].p);

  std::ostringstream a, b;
  write_sweep_csv(rows, a);
  write_sweep_csv(run_sweep(spec), b);
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("n,p,kind,side,value,exact,applicable,violation\n", 0) == 0);
  CHECK(a.str().find("2,0.25,HOEFFDING,upper,") != std::string::npos);

  spec.include_exact = false;
  std::ostringstream c;
  write_sweep_csv(run_sweep(spec), c);
  CHECK(c.str().find(",,true,false") != std::string::npos);
}

TEST_CASE("Fig-1 default sweep has 99 rows per odd kind") {
  SweepSpec spec;
  spec.n_values = {9};
  spec.kinds.assign(all_bound_kinds.begin(), all_bound_kinds.end());
  CHECK(run_sweep(spec).size() == 99 * kinds_for(Parity::odd).size());
}

TEST_CASE("real formatting keeps 17 digits") {
  CHECK(format_real(0.5) == "0.5");
  CHECK(format_real(0.1) == "0.10000000000000001");
  CHECK(std::stod(format_real(1.0 / 3)) == 1.0 / 3);
}

TEST_CASE("Riemann checker") {
  CHECK(riemann_right_sum(RiemannFunction::inv_x, 1.0, 2.0, 4) == Approx(0.63452380952380952).epsilon(1e-14));
  CHECK(riemann_right_sum(RiemannFunction::inv_x, 1.0, 2.0, 8) == Approx(0.66287185037185037).epsilon(1e-14));
  CHECK(riemann_monotone_check(RiemannFunction::inv_x, 1.0, 2.0, 4, 8).passed());
  CHECK(riemann_monotone_check(RiemannFunction::inv_sqrt_x, 1.0, 4.0, 3, 6).passed());
  const CheckOutcome same = riemann_monotone_check(RiemannFunction::inv_x, 1.0, 2.0, 5, 5);
  CHECK(same.passed());
  CHECK(same.worst_slack == 0.0);
  CHECK(riemann_monotone_check(RiemannFunction::inv_sqrt_semicircle, -1.0, 0.0, 7, 13).passed());
  CHECK_THROWS(riemann_monotone_check(RiemannFunction::inv_x, 1.0, 2.0, 8, 4));
  CHECK_THROWS(riemann_monotone_check(RiemannFunction::inv_sqrt_semicircle, -0.5, 0.5, 2, 4));
  CHECK_THROWS(riemann_monotone_check(RiemannFunction::inv_x, -1.0, 2.0, 2, 4));
}

TEST_CASE("conjecture scan") {
  CHECK(conjecture_rhs(TrialCount(2), Bias(0.3)) == Approx(0.4785469892213208).epsilon(1e-13));
  CHECK(conjecture_rhs(TrialCount(2), Bias(1e-6)) < 1e-5);
  const CheckOutcome o = conjecture_scan(20);
  CHECK(o.report_only);
  CHECK(o.cases == 10 * 99);
  CHECK_THROWS(conjecture_scan(7));
}

TEST_CASE("Slud region scan") {
  const auto rows = slud_region_scan({1, 99}, 1e-3);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].empirical_threshold >= 0.9254);
  CHECK(rows[0].consistent);
  CHECK(rows[1].consistent);
  CHECK(rows[1].empirical_threshold < rows[0].empirical_threshold);
  CHECK_THROWS(slud_region_scan({1}, 0.0));
}

TEST_CASE("check outcome bookkeeping") {
  CheckOutcome o{"x"};
  o.record(0.5, 0.0, {});
  o.record(-1e-13, 1e-12, {});
  o.record(-1.0, 1e-12, {});
  CHECK(o.cases == 3);
  CHECK(o.failures == 1);
  CHECK(o.worst_slack == -1.0);
  REQUIRE(o.details.size() == 1);
  CHECK(o.details[0].violation);
}

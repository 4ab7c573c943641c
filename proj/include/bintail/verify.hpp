#pragma once

// Grid sweeps, property suites and exploratory scans over the tail
// representations and bounds, plus long-format CSV output of sweeps.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bintail/bound_result.hpp"
#include "bintail/bound_table.hpp"
#include "bintail/classical_bounds.hpp"
#include "bintail/closed_bounds.hpp"
#include "bintail/core_tail.hpp"
#include "bintail/normal.hpp"
#include "bintail/normal_bounds.hpp"
#include "bintail/rational.hpp"
#include "bintail/stirling_psi.hpp"
#include "bintail/types.hpp"

namespace bintail {

// ---------------------------------------------------------------------------
// Records

struct PGrid {
  double start = 0.005;
  double stop = 0.495;
  double step = 0.005;
};

/// Points start, start+step, ... up to stop (inclusive, with a 1e-9 step tolerance).
inline std::vector<double> grid_points(const PGrid& g) {
  if (!(g.step > 0.0)) throw std::invalid_argument("grid step must be positive");
  if (!(g.start > 0.0 && g.start <= g.stop && g.stop < 1.0)) {
    throw std::invalid_argument("grid needs 0 < start <= stop < 1");
  }
  std::vector<double> out;
  for (long i = 0;; ++i) {
    const double p = g.start + double(i) * g.step;
    if (p > g.stop + 1e-9 * g.step) break;
    out.push_back(std::min(p, g.stop));
  }
  return out;
}

struct SweepSpec {
  std::vector<long> n_values;
  PGrid p_grid;
  std::vector<BoundKind> kinds;
  bool include_exact = true;
  std::string output_path = "-";
};

struct SweepRow {
  long n;
  double p;
  std::string kind;
  std::string side;
  double value;
  std::optional<double> exact;
  bool applicable;
  bool violation;
};

struct CheckOutcome {
  std::string suite;
  long cases = 0;
  long failures = 0;
  // Smallest margin seen; negative means the worst case was on the wrong side.
  double worst_slack = std::numeric_limits<double>::infinity();
  std::vector<SweepRow> details;
  bool report_only = false;

  static constexpr std::size_t max_details = 200;

  bool passed() const { return failures == 0; }

  // margin >= -slack counts as a pass
  void record(double margin, double slack, SweepRow row) {
    ++cases;
    worst_slack = std::min(worst_slack, margin);
    if (!(margin >= -slack)) {
      ++failures;
      row.violation = true;
      if (details.size() < max_details) details.push_back(std::move(row));
    }
  }

  void merge(const CheckOutcome& other) {
    cases += other.cases;
    failures += other.failures;
    worst_slack = std::min(worst_slack, other.worst_slack);
    for (const auto& r : other.details) {
      if (details.size() < max_details) details.push_back(r);
    }
  }
};

namespace detail {

inline SweepRow row(long n, double p, std::string kind, std::string side, double value,
                    std::optional<double> exact, bool applicable = true) {
  return {n, p, std::move(kind), std::move(side), value, exact, applicable, false};
}

// Rationals {1/den, ..., (den-1)/den}.
inline std::vector<Rational> rational_grid(long den) {
  std::vector<Rational> out;
  for (long i = 1; i < den; ++i) out.push_back(make_rational(i, den));
  return out;
}

inline double exact_identity_margin(const Rational& lhs, const Rational& rhs) {
  return lhs == rhs ? 0.0 : -std::fabs(Rational(lhs - rhs).get_d()) - std::numeric_limits<double>::min();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Identity suites

/// Exact checks of the random-walk identities against the rational classical
/// sum, on p in {1/100, ..., 99/100}:
///   finite series (odd n <= max_n), two-step telescope (odd n <= max_n - 2),
///   even-from-odd step (even m <= max_n), general offsets (odd n <= min(max_n, 31), all k).
inline CheckOutcome run_identity_suite(long max_n, long general_max_n = 31) {
  if (max_n < 1) throw std::invalid_argument("identity suite needs max_n >= 1");
  CheckOutcome out{"identity"};
  const auto grid = detail::rational_grid(100);
  for (const Rational& p : grid) {
    const double pd = p.get_d();
    std::vector<Rational> central(static_cast<std::size_t>(max_n + 3));
    for (long n = 1; n <= max_n + 2; ++n) central[n] = exact_tail_rational(n, 0, p).value();

    for (long n = 1; n <= max_n; n += 2) {
      const Rational series = central_tail_finite_series(TrialCount(n), p);
      out.record(detail::exact_identity_margin(series, central[n]), 0.0,
                 detail::row(n, pd, "FINITE_SERIES", "identity", series.get_d(), central[n].get_d()));
    }
    for (long n = 1; n + 2 <= max_n; n += 2) {
      const Rational step = step_delta_odd(TrialCount(n), p);
      const Rational diff = central[n + 2] - central[n];
      out.record(detail::exact_identity_margin(step, diff), 0.0,
                 detail::row(n, pd, "TELESCOPE", "identity", step.get_d(), diff.get_d()));
    }
    for (long m = 2; m <= max_n; m += 2) {
      const Rational even = even_from_odd(TrialCount(m), p);
      out.record(detail::exact_identity_margin(even, central[m]), 0.0,
                 detail::row(m, pd, "EVEN_STEP", "identity", even.get_d(), central[m].get_d()));
    }
    for (long n = 1; n <= std::min(max_n, general_max_n); n += 2) {
      for (long k = 0; 2 * k < n; ++k) {
        const Rational general = general_tail_exact(TrialCount(n), k, p);
        const Rational exact = exact_tail_rational(n, k, p).value();
        out.record(detail::exact_identity_margin(general, exact), 0.0,
                   detail::row(n, pd, "GENERAL_FINITE_K" + std::to_string(k), "identity", general.get_d(),
                               exact.get_d()));
      }
    }
  }
  return out;
}

/// Truncated infinite series (central and offset forms) against the exact
/// classical sum: odd n <= max_n, p in {0.01, ..., p_max}, truncation tol,
/// acceptance |series - exact| <= accept.
inline CheckOutcome run_series_suite(long max_n = 51, double p_max = 0.49, double tol = 1e-12,
                                     double accept = 1e-10) {
  CheckOutcome out{"series"};
  for (long i = 1; i <= std::lround(p_max * 100); ++i) {
    const Rational pr = make_rational(i, 100);
    const Bias b(pr.get_d());
    for (long n = 1; n <= max_n; n += 2) {
      for (long k = 0; 2 * k < n; ++k) {
        const double exact = exact_tail_rational(n, k, pr).to_double();
        const double series = k == 0 ? central_tail_infinite_series(TrialCount(n), b, tol)
                                     : general_tail_infinite(TrialCount(n), k, b, tol).value;
        out.record(accept - std::fabs(series - exact), 0.0,
                   detail::row(n, b.p(), k == 0 ? "INFINITE_SERIES" : "GENERAL_INFINITE_K" + std::to_string(k),
                               "identity", series, exact));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bound sweeps

inline std::vector<BoundKind> sorted_kinds(std::vector<BoundKind> kinds) {
  std::sort(kinds.begin(), kinds.end(), [](BoundKind a, BoundKind b) { return to_string(a) < to_string(b); });
  kinds.erase(std::unique(kinds.begin(), kinds.end()), kinds.end());
  return kinds;
}

/// Evaluates every requested kind (restricted to those defined for each n's
/// parity) at every grid point. Rows come out ordered by n, p, then kind name.
inline std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  std::vector<long> ns = spec.n_values;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  const auto kinds = sorted_kinds(spec.kinds);
  const auto ps = grid_points(spec.p_grid);

  std::vector<SweepRow> rows;
  for (long nv : ns) {
    const TrialCount n(nv);
    for (double p : ps) {
      const Bias b(p);
      std::optional<double> exact;
      if (spec.include_exact) exact = central_tail_classical(n, b);
      for (BoundKind kind : kinds) {
        if (!kind_supports(kind, n.parity())) continue;
        const BoundResult r = eval_bound(kind, n, b);
        const bool bad = exact && violates(r, *exact);
        rows.push_back({nv, p, std::string(to_string(kind)), std::string(to_string(r.side)), r.value, exact,
                        r.applicable, bad});
      }
    }
  }
  return rows;
}

inline SweepSpec default_sandwich_spec() {
  SweepSpec spec;
  for (long n = 1; n <= 99; n += 2) spec.n_values.push_back(n);
  spec.kinds.assign(all_bound_kinds.begin(), all_bound_kinds.end());
  return spec;
}

/// Every applicable bound on the correct side of the exact tail (slack 1e-12),
/// and, for odd n with p in (0, 1/2), cont_upper - cont_lower <= 2/(5(n+1)) + 1e-12.
inline CheckOutcome run_sandwich_suite(const SweepSpec& spec) {
  CheckOutcome out{"sandwich"};
  SweepSpec with_exact = spec;
  with_exact.include_exact = true;
  const auto rows = run_sweep(with_exact);
  for (const SweepRow& r : rows) {
    if (!r.applicable) continue;
    const double margin = r.side == "lower" ? *r.exact - r.value : r.value - *r.exact;
    out.record(margin, violation_slack, r);
  }

  const bool want_cont = std::find(spec.kinds.begin(), spec.kinds.end(), BoundKind::CONT_LB) != spec.kinds.end() &&
                         std::find(spec.kinds.begin(), spec.kinds.end(), BoundKind::CONT_UB) != spec.kinds.end();
  if (want_cont) {
    for (long nv : spec.n_values) {
      const TrialCount n(nv);
      if (!n.odd()) continue;
      for (double p : grid_points(spec.p_grid)) {
        if (!(p > 0.0 && p < 0.5)) continue;
        const Bias b(p);
        const double gap = cont_upper(n, b).value - cont_lower(n, b).value;
        out.record(cont_gap_bound(n) - gap, violation_slack, detail::row(nv, p, "CONT_GAP", "upper", gap, std::nullopt));
      }
    }
  }
  return out;
}

/// Report-only: grid points where cont_upper exceeds some other applicable
/// upper bound by more than 1e-9.
inline CheckOutcome cont_tightness_scan(const SweepSpec& spec) {
  CheckOutcome out{"cont-tightness"};
  out.report_only = true;
  for (long nv : spec.n_values) {
    const TrialCount n(nv);
    if (!n.odd()) continue;
    for (double p : grid_points(spec.p_grid)) {
      if (!(p > 0.0 && p < 0.5)) continue;
      const Bias b(p);
      const double cont = cont_upper(n, b).value;
      for (BoundKind kind : kinds_for(Parity::odd)) {
        if (side_of(kind) != Side::upper || kind == BoundKind::CONT_UB) continue;
        const BoundResult other = eval_bound(kind, n, b);
        if (!other.applicable) continue;
        out.record(other.value - cont, 1e-9, detail::row(nv, p, std::string(to_string(kind)), "upper", other.value, cont));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Classical bound relations

/// Chernoff/Hoeffding/Bernstein ordering for even m <= max_m on p = i/200:
/// p in [0,1/4]: chernoff <= bernstein <= hoeffding;
/// p in [1/4,1/2]: chernoff <= hoeffding <= bernstein; equality of
/// hoeffding and bernstein at p = 1/4.
inline CheckOutcome run_ordering_suite(long max_m = 200, double slack = 1e-12) {
  CheckOutcome out{"ordering"};
  for (long mv = 2; mv <= max_m; mv += 2) {
    const TrialCount m(mv);
    for (long i = 0; i <= 100; ++i) {
      const double p = double(i) / 200.0;
      const Bias b(p);
      const double c = chernoff_even(m, b).value;
      const double h = hoeffding_central(m, b).value;
      const double be = bernstein_central(m, b).value;
      if (i <= 50) {
        out.record(be - c, slack, detail::row(mv, p, "CHERNOFF<=BERNSTEIN", "upper", c, be));
        out.record(h - be, slack, detail::row(mv, p, "BERNSTEIN<=HOEFFDING", "upper", be, h));
      }
      if (i >= 50) {
        out.record(h - c, slack, detail::row(mv, p, "CHERNOFF<=HOEFFDING", "upper", c, h));
        out.record(be - h, slack, detail::row(mv, p, "HOEFFDING<=BERNSTEIN", "upper", h, be));
      }
      if (i == 50) {
        out.record(slack - std::fabs(h - be), 0.0, detail::row(mv, p, "HOEFFDING==BERNSTEIN", "upper", h, be));
      }
    }
  }
  return out;
}

/// Multiplicative-error envelope (even m <= max_m) and the odd-n Chernoff
/// ratio regimes (odd 3 <= n <= max_odd), on p = i/200 in (0, 1/2).
inline CheckOutcome run_chernoff_suite(long max_m = 200, long max_odd = 99) {
  CheckOutcome out{"chernoff"};
  for (long mv = 2; mv <= max_m; mv += 2) {
    const TrialCount m(mv);
    for (long i = 1; i <= 100; ++i) {
      const Bias b(double(i) / 200.0);
      const double exact = central_tail_classical(m, b);
      const double env = chernoff_mult_envelope(m, b);
      out.record(env - exact, violation_slack, detail::row(mv, b.p(), "CHERNOFF_MULT_ENVELOPE", "upper", env, exact));
    }
  }
  for (long nv = 3; nv <= max_odd; nv += 2) {
    const TrialCount n(nv);
    for (long i = 1; i < 100; ++i) {
      const Bias b(double(i) / 200.0);
      if (i >= 50) {
        const double r = chernoff_ratio(n, b, ChernoffRegime::over_quarter);
        out.record(r - 1.0, violation_slack, detail::row(nv, b.p(), "RATIO_OVER_QUARTER", "upper", r, 1.0));
      }
      if (i <= 50) {
        const double r = chernoff_ratio(n, b, ChernoffRegime::under_quarter);
        out.record(r - 1.0, violation_slack, detail::row(nv, b.p(), "RATIO_UNDER_QUARTER", "upper", r, 1.0));
      }
      const double exact = central_tail_classical(n, b);
      const double combined = std::min(chernoff_odd(n, b).value,
                                       i >= 50 ? chernlike_upper(n, b).value : elem_upper(n, b).value);
      out.record(combined - exact, violation_slack, detail::row(nv, b.p(), "MIN_COMBINED", "upper", combined, exact));
    }
  }
  return out;
}

/// Central Slud bound below the exact tail for odd n <= max_odd and even
/// m <= max_even, on p = step, 2 step, ... up to one step below the extended
/// threshold; and cont_lower >= Slud on odd n, p in (0, 1/2).
inline CheckOutcome run_slud_suite(long max_odd = 99, long max_even = 100, double step = 0.005) {
  CheckOutcome out{"slud"};
  auto check_trials = [&](long nv) {
    const TrialCount n(nv);
    const double limit = slud_extended_threshold(n) - step;
    for (long i = 1;; ++i) {
      const double p = double(i) * step;
      if (p > limit) break;
      const Bias b(p);
      const double exact = central_tail_classical(n, b);
      const BoundResult s = slud_central(n, b);
      out.record(exact - s.value, violation_slack, detail::row(nv, p, "SLUD_EXTENDED", "lower", s.value, exact));
    }
  };
  for (long n = 1; n <= max_odd; n += 2) check_trials(n);
  for (long m = 2; m <= max_even; m += 2) check_trials(m);

  for (long nv = 1; nv <= max_odd; nv += 2) {
    const TrialCount n(nv);
    for (long i = 1; double(i) * step < 0.5 - 1e-12; ++i) {
      const Bias b(double(i) * step);
      const double cont = cont_lower(n, b).value;
      const double slud = slud_central(n, b).value;
      out.record(cont - slud, violation_slack, detail::row(nv, b.p(), "CONT_LB>=SLUD", "lower", slud, cont));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Stirling, psi, integral

inline CheckOutcome run_stirling_suite(long max_j = 500, long max_n = 10000) {
  CheckOutcome out{"stirling"};
  for (long j = 1; j <= max_j; ++j) {
    const StirlingEnvelope env = central_binom_envelope(j);
    const BigInt c = central_binom(j);
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, c.get_mpz_t());
    const double log_c = std::log(mant) + double(exp2) * std::numbers::ln2;
    out.record(log_c - env.log_lower, 0.0, detail::row(j, 0.0, "ENVELOPE_LOWER", "lower", env.log_lower, log_c));
    out.record(env.log_upper - log_c, 0.0, detail::row(j, 0.0, "ENVELOPE_UPPER", "upper", env.log_upper, log_c));
    // strictness
    if (!(env.log_lower < log_c && log_c < env.log_upper)) {
      out.record(-1.0, 0.0, detail::row(j, 0.0, "ENVELOPE_STRICT", "identity", env.log_lower, log_c));
    }
  }
  for (long n = 1; n <= max_n; ++n) {
    const double x = double(n);
    const double l = stirling_l(n);
    const double u = stirling_u(n);
    const double chain[] = {-1.0 / (5.0 * x), u, -1.0 / (4.0 * x), l, -1.0 / (3.0 * x)};
    double margin = std::numeric_limits<double>::infinity();
    for (int i = 0; i + 1 < 5; ++i) margin = std::min(margin, chain[i] - chain[i + 1]);
    if (n > 1) margin = std::min({margin, l - stirling_l(n - 1), u - stirling_u(n - 1)});
    if (!(margin > 0.0)) margin = std::min(margin, -std::numeric_limits<double>::min());
    out.record(margin, 0.0, detail::row(n, 0.0, "STIRLING_ORDER", "identity", l, u));
  }
  return out;
}

/// psi_eta(k) <= psi_eta(k+1) <= pi for eta <= max_eta, 2 eta <= k <= max_k;
/// psi_{(n+1)/2}(n+1) == 2/(n+1) within 1e-12; psi_1(k) >= 1.
inline CheckOutcome run_psi_suite(long max_eta = 50, long max_k = 2000) {
  CheckOutcome out{"psi"};
  for (long eta = 1; eta <= max_eta; ++eta) {
    double prev = psi(eta, 2 * eta);
    for (long k = 2 * eta; k <= max_k; ++k) {
      const double next = psi(eta, k + 1);
      out.record(next - prev, 0.0, detail::row(eta, double(k), "PSI_MONOTONE", "upper", prev, next));
      out.record(std::numbers::pi - next, 1e-12, detail::row(eta, double(k + 1), "PSI_LE_PI", "upper", next, std::numbers::pi));
      prev = next;
    }
  }
  for (long n = 1; n + 1 <= max_k; n += 2) {
    const double v = psi((n + 1) / 2, n + 1);
    const double target = 2.0 / double(n + 1);
    out.record(1e-12 - std::fabs(v - target), 0.0, detail::row(n, 0.0, "PSI_DIAGONAL", "identity", v, target));
  }
  for (long k = 2; k <= max_k; ++k) {
    const double v = psi(1, k);
    out.record(v - 1.0, 0.0, detail::row(1, double(k), "PSI_FLOOR", "lower", 1.0, v));
  }
  return out;
}

/// Quadrature of (2 sigma)^{2j}/sqrt(pi j) against Upsilon on a 20-point
/// grid, n in {1, 3, 9, 25, 99} x p in {0.05, 0.2, 0.35, 0.45}.
inline CheckOutcome run_integral_suite(double accept = 1e-8) {
  CheckOutcome out{"integral"};
  for (long nv : {1L, 3L, 9L, 25L, 99L}) {
    for (double p : {0.05, 0.2, 0.35, 0.45}) {
      const IntegralCheck c = integral_upsilon_check(TrialCount(nv), Bias(p));
      const double margin = c.converged ? accept - std::fabs(c.lhs - c.rhs) : -1.0;
      out.record(margin, 0.0, detail::row(nv, p, "UPSILON_INTEGRAL", "identity", c.lhs, c.rhs));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Riemann sums of convex decreasing functions

enum class RiemannFunction { inv_sqrt_x, inv_x, inv_sqrt_semicircle };

inline std::string_view to_string(RiemannFunction f) {
  switch (f) {
    case RiemannFunction::inv_sqrt_x: return "inv_sqrt_x";
    case RiemannFunction::inv_x: return "inv_x";
    case RiemannFunction::inv_sqrt_semicircle: return "inv_sqrt_semicircle";
  }
  return "?";
}

namespace detail {

inline double riemann_eval(RiemannFunction f, double x) {
  switch (f) {
    case RiemannFunction::inv_sqrt_x: return 1.0 / std::sqrt(x);
    case RiemannFunction::inv_x: return 1.0 / x;
    case RiemannFunction::inv_sqrt_semicircle: return 1.0 / std::sqrt(1.0 - x * x);
  }
  return 0.0;
}

inline double riemann_integral(RiemannFunction f, double a, double b) {
  switch (f) {
    case RiemannFunction::inv_sqrt_x: return 2.0 * (std::sqrt(b) - std::sqrt(a));
    case RiemannFunction::inv_x: return std::log(b / a);
    case RiemannFunction::inv_sqrt_semicircle: return std::asin(b) - std::asin(a);
  }
  return 0.0;
}

}  // namespace detail

/// Right-endpoint Riemann sum of f over (a, b] with `pieces` equal pieces.
inline double riemann_right_sum(RiemannFunction f, double a, double b, long pieces) {
  if (pieces < 1) throw std::invalid_argument("riemann sum needs at least one piece");
  const double width = (b - a) / double(pieces);
  detail::CompensatedSum sum;
  for (long i = 1; i <= pieces; ++i) sum.add(detail::riemann_eval(f, a + double(i) * width));
  return width * sum.value();
}

/// R(f; coarse) <= R(f; fine) <= integral of f over (a, b].
inline CheckOutcome riemann_monotone_check(RiemannFunction f, double a, double b, long n_coarse, long m_fine) {
  if (!(a < b)) throw std::invalid_argument("riemann check needs a < b");
  if (m_fine < n_coarse || n_coarse < 1) throw std::invalid_argument("riemann check needs 1 <= n_coarse <= m_fine");
  const bool convex_decreasing = f == RiemannFunction::inv_sqrt_semicircle ? (a >= -1.0 && b <= 0.0) : a >= 0.0;
  if (!convex_decreasing) {
    throw std::invalid_argument(std::string(to_string(f)) + " is not convex and decreasing on the interval");
  }
  CheckOutcome out{"riemann"};
  const double coarse = riemann_right_sum(f, a, b, n_coarse);
  const double fine = riemann_right_sum(f, a, b, m_fine);
  const double integral = detail::riemann_integral(f, a, b);
  const double slack = 1e-14 * std::max(1.0, std::fabs(integral));
  const std::string name(to_string(f));
  out.record(fine - coarse, slack, detail::row(n_coarse, double(m_fine), name + ":COARSE<=FINE", "lower", coarse, fine));
  out.record(integral - fine, slack, detail::row(n_coarse, double(m_fine), name + ":FINE<=INTEGRAL", "lower", fine, integral));
  return out;
}

/// Sample intervals for the three functions, every pair n < m <= 40.
inline CheckOutcome run_riemann_suite(long max_pieces = 40) {
  CheckOutcome out{"riemann"};
  struct Case {
    RiemannFunction f;
    double a, b;
  };
  const Case cases[] = {
      {RiemannFunction::inv_x, 1.0, 2.0},
      {RiemannFunction::inv_x, 0.5, 3.0},
      {RiemannFunction::inv_sqrt_x, 1.0, 4.0},
      {RiemannFunction::inv_sqrt_x, 0.0, 1.0},
      {RiemannFunction::inv_sqrt_semicircle, -1.0, 0.0},
  };
  for (const Case& c : cases) {
    for (long n = 1; n <= max_pieces; ++n) {
      for (long m = n + 1; m <= max_pieces; ++m) out.merge(riemann_monotone_check(c.f, c.a, c.b, n, m));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exploration (report-only)

/// Conjectured even-m refinement of Slud:
/// P[B(p,m) >= m/2] >= 1 - Phi((1/2 - p) sqrt(m) / sigma) + C(m, m/2) sigma^m / 2.
inline double conjecture_rhs(TrialCount m, Bias b) {
  require_even(m, "conjecture_rhs");
  const double mv = double(m.value());
  const double z = (0.5 - b.p()) * std::sqrt(mv) / b.sigma();
  const double half_central = 0.5 * std::exp(detail::log_choose(m.value(), m.value() / 2) + 0.5 * mv * b.log_sigma2());
  return phi_sf(z) + half_central;
}

inline CheckOutcome conjecture_scan(long m_max, const PGrid& grid = {}) {
  if (m_max < 2 || m_max % 2 != 0) throw std::invalid_argument("conjecture scan needs an even m_max >= 2");
  CheckOutcome out{"conjecture"};
  out.report_only = true;
  const auto ps = grid_points(grid);
  for (long mv = 2; mv <= m_max; mv += 2) {
    const TrialCount m(mv);
    for (double p : ps) {
      if (!(p > 0.0 && p < 0.5)) continue;
      const Bias b(p);
      const double exact = central_tail_classical(m, b);
      const double rhs = conjecture_rhs(m, b);
      out.record(exact - rhs, 0.0, detail::row(mv, p, "CONJECTURE", "lower", rhs, exact));
    }
  }
  return out;
}

struct SludRegionRow {
  long n;
  double analytic_threshold;
  double empirical_threshold;  // largest p (to resolution) with Slud <= exact on [res, p]
  bool consistent;             // empirical >= analytic - resolution
};

/// Per trial count, walks p upward from `resolution` until the central Slud
/// bound first exceeds the exact tail, then bisects the crossing. Reports 1
/// when no crossing exists below 1.
inline std::vector<SludRegionRow> slud_region_scan(const std::vector<long>& n_values, double resolution = 1e-3) {
  if (!(resolution > 0.0)) throw std::invalid_argument("resolution must be positive");
  auto holds = [](TrialCount n, double p) {
    const Bias b(p);
    return slud_central(n, b).value <= central_tail_classical(n, b) + violation_slack;
  };
  std::vector<SludRegionRow> out;
  for (long nv : n_values) {
    const TrialCount n(nv);
    double good = 0.0;
    double empirical = 1.0;
    for (long i = 1;; ++i) {
      const double p = double(i) * resolution;
      if (p >= 1.0) break;
      if (holds(n, p)) {
        good = p;
        continue;
      }
      double lo = good, hi = p;
      for (int it = 0; it < 30; ++it) {
        const double mid = 0.5 * (lo + hi);
        (holds(n, mid) ? lo : hi) = mid;
      }
      empirical = lo;
      break;
    }
    const double analytic = slud_extended_threshold(n);
    out.push_back({nv, analytic, empirical, empirical >= analytic - resolution});
  }
  return out;
}

// ---------------------------------------------------------------------------
// CSV

inline std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline constexpr const char* csv_header = "n,p,kind,side,value,exact,applicable,violation";

inline void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& os) {
  os << csv_header << '\n';
  for (const SweepRow& r : rows) {
    os << r.n << ',' << format_real(r.p) << ',' << r.kind << ',' << r.side << ',' << format_real(r.value) << ','
       << (r.exact ? format_real(*r.exact) : std::string()) << ',' << (r.applicable ? "true" : "false") << ','
       << (r.violation ? "true" : "false") << '\n';
  }
}

/// Runs the sweep and writes it to spec.output_path ("-" for stdout).
inline std::vector<SweepRow> sweep_csv(const SweepSpec& spec) {
  auto rows = run_sweep(spec);
  if (spec.output_path == "-") {
    write_sweep_csv(rows, std::cout);
    return rows;
  }
  std::ofstream file(spec.output_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + spec.output_path + " for writing");
  write_sweep_csv(rows, file);
  if (!file) throw std::runtime_error("write failed: " + spec.output_path);
  return rows;
}

}  // namespace bintail

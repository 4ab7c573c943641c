// Command-line front end: tail evaluation, bound tables, CSV sweeps,
// verification suites and the exploratory scans.

#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bintail/bintail.hpp"

using namespace bintail;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<BoundKind> parse_kinds(const std::string& text) {
  if (text == "all") return {all_bound_kinds.begin(), all_bound_kinds.end()};
  std::vector<BoundKind> kinds;
  for (const std::string& name : split(text, ',')) {
    const auto kind = parse_bound_kind(name);
    if (!kind) throw UsageError("unknown bound kind: " + name);
    kinds.push_back(*kind);
  }
  if (kinds.empty()) throw UsageError("kind list is empty");
  return kinds;
}

PGrid parse_grid(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw UsageError("--p-grid expects START:STOP:STEP");
  try {
    PGrid g{std::stod(parts[0]), std::stod(parts[1]), std::stod(parts[2])};
    grid_points(g);
    return g;
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad --p-grid: ") + e.what());
  }
}

// --- tail -------------------------------------------------------------------

struct TailArgs {
  long n = 1;
  long k = 0;
  std::string p = "0.5";
  bool exact = false;
  std::string method = "classical";
  double tol = 1e-12;
};

// Brings an odd-n query into 0 <= k < n/2, reflecting through p -> 1-p when needed.
NormalizedQuery series_query(const TailQuery& q) {
  auto in_range = [](const TailQuery& t) { return t.offset_k >= 0 && 2 * t.offset_k < t.trials.value(); };
  if (in_range(q)) return {q, {}};
  const long n = q.trials.value();
  const long t = n + 1 - q.threshold();
  const TailQuery flipped(q.trials, t - (n + 1) / 2, Bias(1.0 - q.bias.p()));
  if (!in_range(flipped)) throw std::invalid_argument("series forms need 0 <= k < n/2 (or its reflection)");
  return {flipped, {true}};
}

int run_tail(const TailArgs& a) {
  const TrialCount n(a.n);
  if (a.exact) {
    const Rational p = parse_rational(a.p);
    Rational value;
    if (a.method == "classical") {
      value = exact_tail_rational(a.n, a.k, p).value();
    } else if (a.method == "finite") {
      if (n.even()) {
        if (a.k != 0) throw std::invalid_argument("even trial counts support only k = 0 with the finite method");
        value = even_from_odd(n, p);
      } else {
        value = general_tail_exact(n, a.k, p);
      }
    } else {
      throw std::invalid_argument("the infinite method has no exact form");
    }
    std::cout << value.get_str() << '\n';
    return 0;
  }

  const Bias b(std::stod(a.p));
  const TailQuery q(n, a.k, b);
  double value = 0.0;
  if (a.method == "classical") {
    value = tail_classical(q);
  } else if (n.even()) {
    if (a.method != "finite" || a.k != 0) {
      throw std::invalid_argument("even trial counts support only k = 0 with the finite method");
    }
    value = even_from_odd(n, b);
  } else if (a.method == "finite") {
    const NormalizedQuery nq = series_query(q);
    value = nq.transform.apply(general_tail(nq.query, SeriesForm::finite));
  } else {
    const NormalizedQuery nq = b.p() > 0.5 ? normalize_query(q) : NormalizedQuery{q, {}};
    value = nq.transform.apply(general_tail(series_query(nq.query).query, SeriesForm::infinite, a.tol));
  }
  std::cout << format_real(value) << '\n';
  return 0;
}

// --- bounds -----------------------------------------------------------------

int run_bounds(long nv, double p, const std::string& kinds_text) {
  const TrialCount n(nv);
  const Bias b(p);
  const auto requested = parse_kinds(kinds_text);
  const double exact = central_tail_classical(n, b);
  std::printf("%-13s %-6s %-24s %-11s %s\n", "kind", "side", "value", "applicable", "note");
  for (BoundKind kind : sorted_kinds(requested)) {
    if (!kind_supports(kind, n.parity())) continue;
    const BoundResult r = eval_bound(kind, n, b);
    const char* note = r.vacuous ? "vacuous" : (r.applicable && violates(r, exact) ? "VIOLATION" : "");
    std::printf("%-13s %-6s %-24s %-11s %s\n", std::string(to_string(kind)).c_str(),
                std::string(to_string(r.side)).c_str(), format_real(r.value).c_str(), r.applicable ? "true" : "false",
                note);
  }
  std::printf("%-13s %-6s %s\n", "exact", "-", format_real(exact).c_str());
  return 0;
}

// --- verify -----------------------------------------------------------------

void print_outcome(const CheckOutcome& o) {
  const char* status = o.report_only ? "report" : (o.passed() ? "pass" : "FAIL");
  std::printf("%-14s %10ld %9ld %14.6g  %s\n", o.suite.c_str(), o.cases, o.failures, o.worst_slack, status);
}

void print_details(const CheckOutcome& o, std::size_t limit) {
  for (std::size_t i = 0; i < o.details.size() && i < limit; ++i) {
    const SweepRow& r = o.details[i];
    std::printf("  %s n=%ld p=%s value=%s exact=%s\n", r.kind.c_str(), r.n, format_real(r.p).c_str(),
                format_real(r.value).c_str(), r.exact ? format_real(*r.exact).c_str() : "-");
  }
}

int run_verify(const std::string& suite, long max_n) {
  std::vector<std::pair<std::string, std::function<CheckOutcome()>>> suites = {
      {"identity", [&] { return run_identity_suite(max_n); }},
      {"series", [&] { return run_series_suite(max_n); }},
      {"sandwich", [] { return run_sandwich_suite(default_sandwich_spec()); }},
      {"psi", [] { return run_psi_suite(); }},
      {"stirling", [] { return run_stirling_suite(); }},
      {"ordering", [] { return run_ordering_suite(); }},
      {"chernoff", [] { return run_chernoff_suite(); }},
      {"slud", [] { return run_slud_suite(); }},
      {"integral", [] { return run_integral_suite(); }},
      {"riemann", [] { return run_riemann_suite(); }},
      {"conjecture", [] { return conjecture_scan(200); }},
  };
  std::printf("%-14s %10s %9s %14s  %s\n", "suite", "cases", "failures", "worst_slack", "status");
  bool ok = true;
  bool matched = false;
  for (auto& [name, run] : suites) {
    if (suite != "all" && suite != name) continue;
    matched = true;
    const CheckOutcome o = run();
    print_outcome(o);
    if (!o.details.empty() && (o.report_only || !o.passed())) print_details(o, 10);
    if (!o.report_only && !o.passed()) ok = false;
  }
  if (!matched) throw UsageError("unknown suite: " + suite);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Central binomial tail probabilities and bounds"};
  app.require_subcommand(1);

  TailArgs tail_args;
  auto* tail = app.add_subcommand("tail", "P[B(p,n) >= n/2 + k]");
  tail->add_option("--n", tail_args.n, "number of trials")->required();
  tail->add_option("--k", tail_args.k, "offset from n/2")->default_val(0);
  tail->add_option("--p", tail_args.p, "bias (decimal or a/b)")->required();
  tail->add_flag("--exact-rational", tail_args.exact, "exact fraction output");
  tail->add_option("--method", tail_args.method, "evaluation route")
      ->check(CLI::IsMember({"classical", "finite", "infinite"}))
      ->default_val("classical");
  tail->add_option("--tol", tail_args.tol, "truncation tolerance for the infinite series")->default_val(1e-12);

  long bounds_n = 1;
  double bounds_p = 0.25;
  std::string bounds_kinds = "all";
  auto* bounds = app.add_subcommand("bounds", "all bounds at one (n, p) next to the exact tail");
  bounds->add_option("--n", bounds_n)->required();
  bounds->add_option("--p", bounds_p)->required();
  bounds->add_option("--kinds", bounds_kinds, "comma list or 'all'")->default_val("all");

  std::string sweep_n = "9";
  std::string sweep_grid = "0.005:0.495:0.005";
  std::string sweep_kinds = "all";
  std::string sweep_out = "-";
  bool sweep_no_exact = false;
  auto* sweep = app.add_subcommand("sweep", "long-format CSV over an (n, p) grid");
  sweep->add_option("--n", sweep_n, "comma list of trial counts")->default_val("9");
  sweep->add_option("--p-grid", sweep_grid, "START:STOP:STEP")->default_val("0.005:0.495:0.005");
  sweep->add_option("--kinds", sweep_kinds, "comma list or 'all'")->default_val("all");
  sweep->add_option("--out", sweep_out, "output path, '-' for stdout")->default_val("-");
  sweep->add_flag("--no-exact", sweep_no_exact, "leave the exact column empty");

  std::string suite = "all";
  long max_n = 51;
  auto* verify = app.add_subcommand("verify", "run property suites");
  verify->add_option("--suite", suite,
                     "identity|series|sandwich|psi|stirling|ordering|chernoff|slud|integral|riemann|conjecture|all")
      ->default_val("all");
  verify->add_option("--max-n", max_n, "largest n for the identity and series suites")->default_val(51);

  auto* explore = app.add_subcommand("explore", "report-only scans");
  explore->require_subcommand(1);
  long m_max = 200;
  auto* conjecture = explore->add_subcommand("conjecture", "scan the even-m Slud refinement");
  conjecture->add_option("--m-max", m_max)->default_val(200);
  std::string region_n = "1,3,5,9,15,25,49,99,2,4,10,50,100";
  double resolution = 1e-3;
  auto* region = explore->add_subcommand("slud-region", "empirical range of the central Slud bound");
  region->add_option("--n", region_n, "comma list of trial counts");
  region->add_option("--resolution", resolution)->default_val(1e-3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*tail) return run_tail(tail_args);
    if (*bounds) return run_bounds(bounds_n, bounds_p, bounds_kinds);
    if (*sweep) {
      SweepSpec spec;
      for (const std::string& s : split(sweep_n, ',')) spec.n_values.push_back(std::stol(s));
      if (spec.n_values.empty()) throw UsageError("--n list is empty");
      for (long n : spec.n_values) TrialCount{n};
      spec.p_grid = parse_grid(sweep_grid);
      spec.kinds = parse_kinds(sweep_kinds);
      spec.include_exact = !sweep_no_exact;
      spec.output_path = sweep_out;
      const auto rows = sweep_csv(spec);
      if (sweep_out != "-") std::fprintf(stderr, "wrote %zu rows to %s\n", rows.size(), sweep_out.c_str());
      return 0;
    }
    if (*verify) return run_verify(suite, max_n);
    if (*conjecture) {
      const CheckOutcome o = conjecture_scan(m_max);
      std::printf("conjecture: %ld cases, %ld violations, smallest margin %.6g\n", o.cases, o.failures,
                  o.worst_slack);
      print_details(o, o.details.size());
      return 0;
    }
    if (*region) {
      std::vector<long> ns;
      for (const std::string& s : split(region_n, ',')) ns.push_back(std::stol(s));
      std::printf("%6s %12s %12s %s\n", "n", "analytic", "empirical", "consistent");
      for (const SludRegionRow& r : slud_region_scan(ns, resolution)) {
        std::printf("%6ld %12.6f %12.6f %s\n", r.n, r.analytic_threshold, r.empirical_threshold,
                    r.consistent ? "yes" : "NO");
      }
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

// ttmeasure — exact normalization ratios for measured-lamination charts.
//
// Subcommands:
//   ratio [FILE | --builtin NAME]   ratio report for one chart
//   family --g G --n N [--dump-form]  report for a model surface
//   sweep --max N                   every supported type with 3g-3+n <= N
//   euclid-demo                     the two sigma04 lattice covolumes
//   check FILE                      structural checks for a track file
//   identities [--max N]            the induction identities, cross-checked
//
// Exit codes: 0 success, 1 verdict/computation failure, 2 input error,
// 3 unsupported surface.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "laminations/builtins.hpp"
#include "laminations/errors.hpp"
#include "laminations/measures.hpp"

namespace {

using namespace laminations;

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;
constexpr int kExitInput = 2;
constexpr int kExitUnsupported = 3;

int exit_code_for(const RatioReport& r) {
  return r.verdict == Verdict::Mismatch ? kExitVerdict : kExitOk;
}

int cmd_ratio(const std::string& file, const std::string& builtin) {
  if (file.empty() == builtin.empty()) {
    std::cerr << "ratio: need exactly one of FILE or --builtin\n";
    return kExitInput;
  }
  RatioReport r;
  if (!builtin.empty()) {
    if (!is_builtin(builtin)) {
      std::cerr << "ratio: unknown built-in \"" << builtin << "\" (have:";
      for (const std::string& name : builtin_names()) std::cerr << ' ' << name;
      std::cerr << ")\n";
      return kExitInput;
    }
    r = builtin_report(builtin);
  } else {
    TrainTrack t = parse_track_file(file);
    r = track_report(t, t.name);
  }
  std::cout << render(r) << '\n';
  return exit_code_for(r);
}

std::string covector_string(const CoordModel& m,
                            const std::vector<Rational>& u) {
  std::string s;
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    Rational c = u[i];
    if (s.empty()) {
      if (c.sign() < 0) { s += '-'; c = -c; }
    } else {
      s += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) c = -c;
    }
    if (c != Rational(1)) s += c.to_string() + "*";
    s += m.coords[i];
  }
  return s.empty() ? "0" : s;
}

int cmd_family(int g, int n, bool dump_form) {
  CoordModel m = build(g, n);
  if (dump_form) {
    for (const TwoForm::Term& t : m.form.terms)
      std::cout << "term " << t.coeff << " d(" << covector_string(m, t.u)
                << ") ^ d(" << covector_string(m, t.v) << ")\n";
  }
  RatioReport r = model_report(m);
  std::cout << render(r) << '\n';
  return exit_code_for(r);
}

int cmd_sweep(int max_complexity) {
  SweepResult s = sweep(max_complexity);
  // Reports and skips interleaved in (g, n) order.
  size_t ri = 0, si = 0;
  int mismatches = 0;
  auto report_key = [&](size_t i) {
    return std::make_pair(*s.reports[i].g, *s.reports[i].n);
  };
  while (ri < s.reports.size() || si < s.skipped.size()) {
    const bool take_skip =
        si < s.skipped.size() &&
        (ri >= s.reports.size() || s.skipped[si] < report_key(ri));
    if (take_skip) {
      std::cout << "g=" << s.skipped[si].first << " n=" << s.skipped[si].second
                << " verdict=SKIP\n";
      ++si;
    } else {
      if (s.reports[ri].verdict == Verdict::Mismatch) ++mismatches;
      std::cout << render(s.reports[ri]) << '\n';
      ++ri;
    }
  }
  std::cout << "summary cases=" << s.reports.size()
            << " ok=" << (s.reports.size() - mismatches)
            << " mismatch=" << mismatches << " skipped=" << s.skipped.size()
            << '\n';
  return mismatches ? kExitVerdict : kExitOk;
}

int cmd_euclid_demo() {
  for (const std::string& line : euclid_demo_lines()) std::cout << line << '\n';
  return euclid_demo().distinct ? kExitOk : kExitVerdict;
}

int cmd_check(const std::string& file) {
  TrainTrack t = parse_track_file(file);
  bool failed = false;

  const IntMatrix sm = switch_matrix(t);
  const int dim =
      static_cast<int>(t.branches.size()) - rational_rank(to_rational(sm));
  if (t.genus && t.punctures) {
    const int expected = 6 * *t.genus - 6 + 2 * *t.punctures;
    const bool ok = dim == expected;
    failed |= !ok;
    std::cout << "check=dimension dim=" << dim << " expected=" << expected
              << " verdict=" << (ok ? "OK" : "FAIL") << '\n';
  } else {
    std::cout << "check=dimension dim=" << dim << " expected=? verdict=N/A\n";
  }

  const IntegralLattice l = integral_lattice(t);
  bool trivial = true;
  for (const Integer& d : invariant_factors(l.basis))
    if (d != 1) trivial = false;
  failed |= !trivial;
  std::cout << "check=saturation trivial-factors=" << (trivial ? "true" : "false")
            << " verdict=" << (trivial ? "OK" : "FAIL") << '\n';

  if (dim % 2 != 0) {
    failed = true;
    std::cout << "check=nondegenerate verdict=FAIL reason=odd-dimension\n";
  } else {
    RatMatrix b = to_rational(l.basis);
    Rational pf =
        pfaffian(b.transposed() * to_skew_matrix(thurston_form(t)) * b);
    const bool ok = l.rank() == 0 || !pf.is_zero();
    failed |= !ok;
    std::cout << "check=nondegenerate pf=" << pf
              << " verdict=" << (ok ? "OK" : "FAIL") << '\n';
  }

  const bool positive = has_positive_point(t);
  failed |= !positive;
  std::cout << "check=positivity positive-point=" << (positive ? "true" : "false")
            << " verdict=" << (positive ? "OK" : "FAIL") << '\n';

  return failed ? kExitVerdict : kExitOk;
}

int cmd_identities(int max_complexity) {
  int passed = 0, failed = 0;
  auto line = [&](const std::string& what, bool ok) {
    std::cout << what << " verdict=" << (ok ? "PASS" : "FAIL") << '\n';
    (ok ? passed : failed) += 1;
  };

  // The cube identity behind the genus step, on both genus chains.
  for (int i = 1; i <= 3; ++i) {
    line("identity=box-cube chain=closed i=" + std::to_string(i),
         box_cube_check(i, build(2 + i, 0)));
    line("identity=box-cube chain=punctured i=" + std::to_string(i),
         box_cube_check(i, build(2 + i, 1)));
  }

  // Induction steps, cross-checked against the exterior oracle. The oracle
  // is capped at post-step dimension 14, i.e. post-step complexity 7.
  const int cap = std::min(max_complexity, 7);
  for (int g = 0; 3 * g - 3 <= cap; ++g) {
    for (int n = 0; 3 * g - 3 + n <= cap; ++n) {
      const bool supported =
          (g == 0 && n >= 5) || (g == 1 && n >= 2) || (g >= 2 && n >= 0);
      if (!supported) continue;
      const int complexity = 3 * g - 3 + n;
      const std::string from = " g=" + std::to_string(g) +
                               " n=" + std::to_string(n);
      if (g >= 2 && n <= 1 && complexity + 3 <= cap) {
        CoordModel m = build(g, n);
        line("identity=step kind=genus" + from,
             induction_step_check(m, StepKind::Genus));
      }
      if (g <= 1 || n >= 1) {
        if (complexity + 1 <= cap) {
          CoordModel m = build(g, n);
          line("identity=step kind=puncture" + from,
               induction_step_check(m, StepKind::Puncture));
        }
      }
    }
  }
  std::cout << "summary total=" << (passed + failed) << " passed=" << passed
            << " failed=" << failed << '\n';
  return failed ? kExitVerdict : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact normalization ratios on train-track charts"};
  app.require_subcommand(1);

  std::string ratio_file, ratio_builtin;
  CLI::App* ratio = app.add_subcommand("ratio", "Ratio report for one chart");
  ratio->add_option("file", ratio_file, "track file (JSON)");
  ratio->add_option("--builtin", ratio_builtin, "built-in chart name");

  int fam_g = 0, fam_n = 0;
  bool fam_dump = false;
  CLI::App* family =
      app.add_subcommand("family", "Ratio report for a model surface");
  family->add_option("--g", fam_g, "genus")->required();
  family->add_option("--n", fam_n, "punctures")->required();
  family->add_flag("--dump-form", fam_dump, "print the form's wedge terms");

  int sweep_max = 0;
  CLI::App* sweepc =
      app.add_subcommand("sweep", "Reports for all types with 3g-3+n <= max");
  sweepc->add_option("--max", sweep_max, "complexity bound")->required();

  app.add_subcommand("euclid-demo",
                     "Covolumes of the two sigma04 track lattices");

  std::string check_file;
  CLI::App* check =
      app.add_subcommand("check", "Structural checks for a track file");
  check->add_option("file", check_file, "track file (JSON)")->required();

  int ident_max = 6;
  CLI::App* ident = app.add_subcommand(
      "identities", "Verify the induction identities (default --max 6)");
  ident->add_option("--max", ident_max, "post-step complexity bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (ratio->parsed()) return cmd_ratio(ratio_file, ratio_builtin);
    if (family->parsed()) return cmd_family(fam_g, fam_n, fam_dump);
    if (sweepc->parsed()) return cmd_sweep(sweep_max);
    if (check->parsed()) return cmd_check(check_file);
    if (ident->parsed()) return cmd_identities(ident_max);
    return cmd_euclid_demo();
  } catch (const UnsupportedSurface& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const NonHyperbolic& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const SyntaxError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const UnknownBranch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const NonTrivalentSwitch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const EndpointCountViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    // Mathematical failure on well-formed input (degenerate, odd-dimensional,
    // metadata mismatch, ...).
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerdict;
  }
}

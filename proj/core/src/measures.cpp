#include "laminations/measures.hpp"

#include <cassert>

#include "laminations/errors.hpp"

namespace laminations {

namespace {

// Signed Pfaffian of the form on the lattice basis.
Rational signed_pfaffian(const RatMatrix& skew, const IntMatrix& basis) {
  RatMatrix b = to_rational(basis);
  return pfaffian(b.transposed() * skew * b);
}

std::string verdict_token(Verdict v) {
  switch (v) {
    case Verdict::OK: return "OK";
    case Verdict::Mismatch: return "MISMATCH";
    case Verdict::NA: return "N/A";
  }
  return "N/A";
}

void finish_report(RatioReport& r) {
  r.ratio = abs(r.pfaffian);
  if (r.g && r.n) {
    r.expected = expected_ratio(*r.g, *r.n);
    r.verdict = (r.ratio == *r.expected) ? Verdict::OK : Verdict::Mismatch;
  } else {
    r.verdict = Verdict::NA;
  }
}

// floor(sqrt(v) * 10^digits) rendered as a decimal string, exactly.
std::string truncated_sqrt(const Integer& v, int digits) {
  Integer scaled = v;
  for (int i = 0; i < 2 * digits; ++i) scaled *= 10;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  Integer pow = 1;
  for (int i = 0; i < digits; ++i) pow *= 10;
  Integer whole = root / pow;
  Integer frac = root % pow;
  std::string f = frac.get_str();
  return whole.get_str() + "." +
         std::string(static_cast<size_t>(digits) - f.size(), '0') + f;
}

}  // namespace

Rational ratio_of(const RatMatrix& skew, const IntegralLattice& lattice) {
  if (skew.rows != lattice.ambient_dim || skew.cols != lattice.ambient_dim)
    throw DimensionMismatch("ratio_of: form is " + std::to_string(skew.rows) +
                            "x" + std::to_string(skew.cols) +
                            ", lattice ambient dim is " +
                            std::to_string(lattice.ambient_dim));
  Rational pf = signed_pfaffian(skew, lattice.basis);
  if (lattice.rank() > 0 && pf.is_zero())
    throw DegenerateForm("ratio_of: form is singular on the lattice");
  return abs(pf);
}

Rational expected_ratio(int g, int n) {
  if (2 * g - 2 + n <= 0)
    throw NonHyperbolic("expected_ratio: (g=" + std::to_string(g) +
                        ", n=" + std::to_string(n) + ") is not hyperbolic");
  return Rational::pow2(static_cast<unsigned long>(2 * g + n - 3));
}

std::string render(const RatioReport& r) {
  std::string line;
  if (!r.source.empty()) line += "source=" + r.source + " ";
  if (r.g && r.n)
    line += "g=" + std::to_string(*r.g) + " n=" + std::to_string(*r.n) + " ";
  line += "dim=" + std::to_string(r.dim);
  line += " pf=" + r.pfaffian.to_string();
  line += " ratio=" + r.ratio.to_string();
  line += " expected=" + (r.expected ? r.expected->to_string() : "?");
  line += " verdict=" + verdict_token(r.verdict);
  return line;
}

RatioReport model_report(const CoordModel& m, const std::string& source) {
  RatioReport r;
  r.source = source;
  r.g = m.g;
  r.n = m.n;
  r.dim = m.dim();
  r.pfaffian = signed_pfaffian(to_skew_matrix(m.form), model_lattice(m).basis);
  finish_report(r);
  return r;
}

RatioReport track_report(const TrainTrack& t, const std::string& source) {
  RatioReport r;
  r.source = source;
  r.g = t.genus;
  r.n = t.punctures;
  const IntegralLattice l = integral_lattice(t);
  // weight_space validates metadata against the kernel dimension
  r.dim = weight_space(t).dim();
  if (r.dim % 2 != 0)
    throw OddDimension("track_report: weight space dim " +
                       std::to_string(r.dim) + " is odd");
  r.pfaffian = signed_pfaffian(to_skew_matrix(thurston_form(t)), l.basis);
  if (r.dim > 0 && r.pfaffian.is_zero())
    throw DegenerateForm("track_report: form is singular on the weight space");
  finish_report(r);
  return r;
}

RatioReport builtin_report(const std::string& name) {
  if (!is_builtin(name))
    throw Error("builtin_report: unknown built-in \"" + name + "\"");
  if (builtin_is_track(name)) return track_report(builtin_track(name), name);
  return model_report(builtin_model(name), name);
}

EuclidDemo euclid_demo() {
  EuclidDemo d;
  d.tau = gram_det(integral_lattice(builtin_track("sigma04-tau")).basis);
  d.tauprime =
      gram_det(integral_lattice(builtin_track("sigma04-tauprime")).basis);
  d.distinct = d.tau != d.tauprime;
  return d;
}

std::vector<std::string> euclid_demo_lines() {
  const EuclidDemo d = euclid_demo();
  std::vector<std::string> lines;
  lines.push_back("tau: " + d.tau.get_str() + "  tau': " + d.tauprime.get_str() +
                  "  distinct: " + (d.distinct ? "true" : "false"));
  lines.push_back("sqrt(tau) ~ " + truncated_sqrt(d.tau, 12));
  lines.push_back("sqrt(tau') ~ " + truncated_sqrt(d.tauprime, 12));
  return lines;
}

SweepResult sweep(int max_complexity) {
  SweepResult out;
  for (int g = 0; 3 * g - 3 <= max_complexity; ++g) {
    for (int n = 0; 3 * g - 3 + n <= max_complexity; ++n) {
      if (2 * g - 2 + n <= 0) continue;  // not hyperbolic: not listed
      const bool supported =
          (g == 0 && n >= 5) || (g == 1 && n >= 2) || g >= 2;
      if (!supported) {
        out.skipped.emplace_back(g, n);
        continue;
      }
      out.reports.push_back(model_report(build(g, n)));
    }
  }
  return out;
}

}  // namespace laminations

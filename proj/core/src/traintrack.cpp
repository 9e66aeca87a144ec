#include "laminations/traintrack.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "laminations/errors.hpp"

namespace laminations {

namespace {

using nlohmann::json;

int require_int(const json& j, const char* key) {
  if (!j.is_number_integer())
    throw SyntaxError(std::string("track: \"") + key + "\" must be an integer");
  return j.get<int>();
}

int resolve_branch(const TrainTrack& t, const json& j, const char* slot) {
  if (!j.is_string())
    throw SyntaxError(std::string("track: switch ") + slot +
                      " entries must be branch names");
  const std::string name = j.get<std::string>();
  int idx = t.branch_index(name);
  if (idx < 0) throw UnknownBranch("track: unknown branch \"" + name + "\"");
  return idx;
}

}  // namespace

int TrainTrack::branch_index(const std::string& name) const {
  for (size_t i = 0; i < branches.size(); ++i)
    if (branches[i] == name) return static_cast<int>(i);
  return -1;
}

TrainTrack parse_track(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SyntaxError("track: malformed JSON at byte " +
                      std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw SyntaxError("track: top level must be an object");

  static const std::set<std::string> known_keys = {"name", "genus", "punctures",
                                                   "branches", "switches"};
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (!known_keys.count(key))
      throw SyntaxError("track: unknown key \"" + key + "\"");
  }
  for (const char* key : {"name", "branches", "switches"})
    if (!doc.contains(key))
      throw SyntaxError(std::string("track: missing key \"") + key + "\"");

  TrainTrack t;
  if (!doc["name"].is_string())
    throw SyntaxError("track: \"name\" must be a string");
  t.name = doc["name"].get<std::string>();
  if (doc.contains("genus")) t.genus = require_int(doc["genus"], "genus");
  if (doc.contains("punctures"))
    t.punctures = require_int(doc["punctures"], "punctures");
  if ((t.genus && *t.genus < 0) || (t.punctures && *t.punctures < 0))
    throw SyntaxError("track: genus/punctures must be nonnegative");

  if (!doc["branches"].is_array())
    throw SyntaxError("track: \"branches\" must be an array");
  for (const json& b : doc["branches"]) {
    if (!b.is_string() || b.get<std::string>().empty())
      throw SyntaxError("track: branch names must be nonempty strings");
    if (t.branch_index(b.get<std::string>()) >= 0)
      throw SyntaxError("track: duplicate branch \"" + b.get<std::string>() +
                        "\"");
    t.branches.push_back(b.get<std::string>());
  }

  if (!doc["switches"].is_array())
    throw SyntaxError("track: \"switches\" must be an array");
  for (const json& s : doc["switches"]) {
    if (!s.is_object())
      throw SyntaxError("track: each switch must be an object");
    for (const auto& [key, value] : s.items()) {
      (void)value;
      if (key != "pair" && key != "single")
        throw SyntaxError("track: unknown switch key \"" + key + "\"");
    }
    if (!s.contains("pair") || !s.contains("single"))
      throw SyntaxError("track: switch needs \"pair\" and \"single\"");
    if (!s["pair"].is_array())
      throw SyntaxError("track: switch \"pair\" must be an array");
    if (s["pair"].size() != 2)
      throw NonTrivalentSwitch("track: switch pair side has " +
                               std::to_string(s["pair"].size()) +
                               " branches, want 2");
    Switch sw;
    sw.s1 = resolve_branch(t, s["pair"][0], "pair");
    sw.s2 = resolve_branch(t, s["pair"][1], "pair");
    sw.single = resolve_branch(t, s["single"], "single");
    t.switches.push_back(sw);
  }

  // Each branch must fill exactly two slots over all switches.
  std::vector<int> ends(t.branches.size(), 0);
  for (const Switch& sw : t.switches) {
    ++ends[sw.s1];
    ++ends[sw.s2];
    ++ends[sw.single];
  }
  for (size_t i = 0; i < ends.size(); ++i)
    if (ends[i] != 2)
      throw EndpointCountViolation("track: branch \"" + t.branches[i] +
                                   "\" has " + std::to_string(ends[i]) +
                                   " endpoints, want 2");
  return t;
}

TrainTrack parse_track_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SyntaxError("track: cannot read \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_track(buf.str());
}

IntMatrix switch_matrix(const TrainTrack& t) {
  IntMatrix m(static_cast<int>(t.switches.size()),
              static_cast<int>(t.branches.size()));
  for (size_t i = 0; i < t.switches.size(); ++i) {
    const Switch& sw = t.switches[i];
    m.at(static_cast<int>(i), sw.s1) += 1;
    m.at(static_cast<int>(i), sw.s2) += 1;
    m.at(static_cast<int>(i), sw.single) -= 1;
  }
  return m;
}

WeightSpace weight_space(const TrainTrack& t) {
  WeightSpace w;
  w.ambient_dim = static_cast<int>(t.branches.size());
  w.basis = rational_kernel(to_rational(switch_matrix(t)));
  if (t.genus && t.punctures) {
    int expected = 6 * *t.genus - 6 + 2 * *t.punctures;
    if (w.dim() != expected)
      throw DimensionMismatch(
          "weight space dim " + std::to_string(w.dim()) + " but genus " +
          std::to_string(*t.genus) + ", punctures " +
          std::to_string(*t.punctures) + " need " + std::to_string(expected));
  }
  return w;
}

IntegralLattice integral_lattice(const TrainTrack& t) {
  IntegralLattice l;
  l.ambient_dim = static_cast<int>(t.branches.size());
  l.basis = integer_kernel(switch_matrix(t));
  return l;
}

TwoForm thurston_form(const TrainTrack& t) {
  TwoForm f;
  f.dim = static_cast<int>(t.branches.size());
  const Rational half(Integer(1), Integer(2));
  for (const Switch& sw : t.switches) {
    TwoForm::Term term;
    term.coeff = half;
    term.u.assign(f.dim, Rational(0));
    term.v.assign(f.dim, Rational(0));
    term.u[sw.s1] = 1;
    term.v[sw.s2] = 1;
    f.terms.push_back(std::move(term));
  }
  return f;
}

RatMatrix restricted_form(const TrainTrack& t) {
  const IntegralLattice l = integral_lattice(t);
  if (l.rank() % 2 != 0)
    throw OddDimension("restricted_form: weight space dim " +
                       std::to_string(l.rank()) + " is odd");
  RatMatrix b = to_rational(l.basis);
  RatMatrix restricted = b.transposed() * to_skew_matrix(thurston_form(t)) * b;
  if (pfaffian(restricted).is_zero())
    throw DegenerateForm("restricted_form: form is singular on the weight space");
  return restricted;
}

bool positive_point_in_span(const RatMatrix& basis) {
  if (basis.cols == 0) return false;  // only the origin: never positive
  // Constraints: row_i(basis) . t > 0 for every coordinate i. Eliminate the
  // t variables one by one; the system is infeasible iff an all-zero
  // constraint (0 > 0) ever appears.
  std::vector<std::vector<Rational>> cons;
  cons.reserve(basis.rows);
  for (int i = 0; i < basis.rows; ++i) {
    std::vector<Rational> row(basis.cols);
    for (int j = 0; j < basis.cols; ++j) row[j] = basis.at(i, j);
    cons.push_back(std::move(row));
  }
  for (int var = basis.cols - 1; var >= 0; --var) {
    std::vector<std::vector<Rational>> pos, neg, rest;
    for (auto& c : cons) {
      int s = c[var].sign();
      if (s > 0)
        pos.push_back(std::move(c));
      else if (s < 0)
        neg.push_back(std::move(c));
      else {
        c.pop_back();
        rest.push_back(std::move(c));
      }
    }
    // A variable bounded on one side only satisfies those constraints alone;
    // only opposing pairs survive elimination.
    for (const auto& p : pos)
      for (const auto& n : neg) {
        std::vector<Rational> c(var);
        for (int j = 0; j < var; ++j)
          c[j] = p[j] * (-n[var]) + n[j] * p[var];
        rest.push_back(std::move(c));
      }
    cons = std::move(rest);
    for (const auto& c : cons) {
      bool all_zero = true;
      for (const Rational& x : c)
        if (!x.is_zero()) { all_zero = false; break; }
      if (all_zero) return false;  // derived 0 > 0
    }
  }
  return true;
}

bool has_positive_point(const TrainTrack& t) {
  return positive_point_in_span(weight_space(t).basis);
}

}  // namespace laminations

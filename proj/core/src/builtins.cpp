#include "laminations/builtins.hpp"

#include <algorithm>

#include "laminations/errors.hpp"

namespace laminations {

namespace {

// Both tracks live on the 4-punctured sphere and share the branch alphabet.
const std::vector<std::string> kSigmaBranches = {"a", "b",  "c",
                                                 "a'", "b'", "c'"};
enum { A = 0, B = 1, C = 2, Ap = 3, Bp = 4, Cp = 5 };

TrainTrack sigma04_tau() {
  TrainTrack t;
  t.name = "sigma04-tau";
  t.genus = 0;
  t.punctures = 4;
  t.branches = kSigmaBranches;
  t.switches = {
      {B, Cp, A},   // b + c' = a
      {Bp, C, A},   // b' + c = a
      {B, C, Ap},   // b + c  = a'
      {Bp, Cp, Ap}, // b' + c' = a'
  };
  return t;
}

TrainTrack sigma04_tauprime() {
  TrainTrack t;
  t.name = "sigma04-tauprime";
  t.genus = 0;
  t.punctures = 4;
  t.branches = kSigmaBranches;
  t.switches = {
      {Ap, Ap, A},  // each primed branch doubles onto its partner
      {Bp, Bp, B},
      {Cp, Cp, C},
      {A, B, C},    // a + b = c
  };
  return t;
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"tau05", "tau12", "tau20", "tau21", "sigma04-tau",
          "sigma04-tauprime"};
}

bool is_builtin(const std::string& name) {
  const auto names = builtin_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

bool builtin_is_track(const std::string& name) {
  return name == "sigma04-tau" || name == "sigma04-tauprime";
}

CoordModel builtin_model(const std::string& name) {
  if (name == "tau05") return base_model(BaseModel::S05);
  if (name == "tau12") return base_model(BaseModel::S12);
  if (name == "tau20") return base_model(BaseModel::S20);
  if (name == "tau21") return base_model(BaseModel::S21);
  throw Error("builtin_model: \"" + name + "\" is not a model built-in");
}

TrainTrack builtin_track(const std::string& name) {
  if (name == "sigma04-tau") return sigma04_tau();
  if (name == "sigma04-tauprime") return sigma04_tauprime();
  throw Error("builtin_track: \"" + name + "\" is not a track built-in");
}

}  // namespace laminations

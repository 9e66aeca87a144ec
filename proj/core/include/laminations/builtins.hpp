#pragma once

#include <string>
#include <vector>

#include "laminations/family.hpp"
#include "laminations/traintrack.hpp"

namespace laminations {

// Built-in charts, by name:
//   tau05, tau12, tau20, tau21      — family coordinate models (base charts)
//   sigma04-tau, sigma04-tauprime   — the two 4-punctured-sphere train tracks
//
// The two tracks are constructed directly here; the same tracks also ship as
// JSON files, and tests pin both construction paths to identical results.

std::vector<std::string> builtin_names();
bool is_builtin(const std::string& name);

// Whether the named built-in is a combinatorial track (sigma04-*) as opposed
// to a coordinate model (tau*).
bool builtin_is_track(const std::string& name);

// Throws Error for names of the other kind (or unknown names).
CoordModel builtin_model(const std::string& name);
TrainTrack builtin_track(const std::string& name);

}  // namespace laminations

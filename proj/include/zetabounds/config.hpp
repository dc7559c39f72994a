#pragma once

#include "zetabounds/regions.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

// Flat key = value configuration ('#' comments, comma-separated lists) and
// the built-in parameter profiles row1..row5.

namespace zetabounds::config {

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Settings {
    regions::BoundParams params;
    double quad_tol = 1e-9;
};

std::vector<std::string> profile_names();
bool has_profile(const std::string& name);
Settings profile(const std::string& name);  // throws config_error if unknown

// Parse a config file and overlay it onto base; unknown keys are errors.
Settings load_file(const std::string& path, Settings base);

// Key/value map form, for tests and for string-sourced overrides.
Settings apply(const std::map<std::string, std::string>& kv, Settings base);

} // namespace zetabounds::config

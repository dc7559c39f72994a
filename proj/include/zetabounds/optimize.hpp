#pragma once

#include "zetabounds/constants.hpp"
#include "zetabounds/regions.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Derivative-free search over (c, r, eta) minimizing a weighted combination
// of the assembled constants, with infeasible points rejected outright.

namespace zetabounds::optimize {

struct Weights {
    double C1 = 0, C2 = 0, C2p = 0, C3 = 0, C3p = 0;
    bool any() const { return C1 > 0 || C2 > 0 || C2p > 0 || C3 > 0 || C3p > 0; }
};

struct Objective {
    Weights weights;
    std::optional<double> fixed_c;
    std::optional<double> fixed_r;
    std::optional<double> fixed_eta;
};

struct ConstraintReport {
    bool ok = false;
    std::vector<std::string> violations;
};

ConstraintReport check_constraints(double c, double r, double eta, int n);

struct SearchResult {
    regions::BoundParams params;
    constants::ConstantSet constants;
    double objective_value = 0;
    long evaluations = 0;
};

struct infeasible_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OptimizeOptions {
    int restarts = 12;
    int threads = 0;       // 0 = hardware concurrency
    double quad_tol = 1e-9;
};

// Nelder-Mead with constraint rejection, restarted from deterministic
// seed-derived feasible simplices; deterministic for fixed inputs.
SearchResult run(const Objective& obj, const regions::BoundParams& base,
                 std::uint64_t seed, long budget, const OptimizeOptions& opt = {});

} // namespace zetabounds::optimize

#pragma once

#include "zetabounds/regions.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>

// Quadrature of the region integrals and assembly of the zero-counting
// constants, the argument-variation correction E(T,d), the corollary
// constants, and bound evaluation/crossover helpers.

namespace zetabounds::constants {

struct QuadratureSpec {
    double abs_tol = 1e-9;
    int max_subdivisions = 4000;
};

struct quadrature_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RegionIntegrals {
    double cbar1 = 0;
    double cbar2 = 0;
    double d3 = 0;
    double kappa1 = 0;
    double kappa2 = 0;
    double kappa3 = 0;
    double m1 = 0;
    double m2 = 0;
    // diagnostic: integral of F_{c,r}(theta, T0) over each region panel
    std::map<std::string, double> per_region;
};

struct ConstantSet {
    double C1 = 0, C2 = 0, C2p = 0, C3 = 0, C3p = 0, C3tilde = 0, C3ptilde = 0;
};

// Presentation rounding: up at the 5th decimal, preserving upper-bound
// validity.
double round_up5(double x);

// Height above which the 1/(b log T) lower bound (and hence the primed
// constants) applies.
constexpr double kPrimedTmin = 30610046000.0;

// |S(T)| <= 2.5167 for T <= kPrimedTmin.
constexpr double kSmallTArgBound = 2.5167;

// The argument-variation correction of Backlund's trick, T >= 5/7,
// 0 <= d < 9/2, and its closed-form majorant for d in [1/4, 5/8].
double E_of(double T, double d);
double E_bound(double T, double d);

// Adaptive composite 15-point Gauss-Legendre; deterministic panel order.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& q);

RegionIntegrals integrate_regions(const regions::BoundParams& p,
                                  const QuadratureSpec& q,
                                  bool with_diagnostics = true);

ConstantSet assemble(const regions::BoundParams& p, const RegionIntegrals& ri);

// Internal-consistency residual of the tilde constants (should be ~0).
double tilde_consistency(const regions::BoundParams& p, const ConstantSet& cs);

struct CorollarySet {
    double script_C3 = 0, script_C3p = 0;
    double script_D3 = 0, script_D3p = 0;
    double script_E = 0, script_Ep = 0;
};
CorollarySet corollary_constants(const ConstantSet& cs);

enum class BoundMode { NT, ST, SmallT };

// The fixed bound used on e <= T <= kPrimedTmin.
double small_T_bound();

double eval_bound(double T, const ConstantSet& cs, BoundMode mode);

// A bound of the shape c1 log T + c2 log log T + c3.
struct LinLogBound {
    double c1 = 0, c2 = 0, c3 = 0;
    double value(double T) const;
};

struct no_crossing_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The unique T >= e where the two bounds cross, by bisection in log T to
// relative error 1e-6.
double crossover(const LinLogBound& b1, const LinLogBound& b2);

} // namespace zetabounds::constants

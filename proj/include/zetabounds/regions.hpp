#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

// Geometry of the contour bound: the angle map theta_y, the sigma_k lines,
// the L/M/L* majorants and the piecewise bounding function F_{c,r}(theta)
// over the eight sigma-ranges of the critical-strip estimate.

namespace zetabounds::regions {

// One explicit line estimate |zeta(sigma0+it)| <= coeff * t^t_power * (log t)^log_power
// valid for t >= t_min.
struct LineBound {
    double coeff = 1.0;
    double t_power = 0.0;
    double log_power = 1.0;
    double t_min = 3.0;
};

struct BoundParams {
    double c = 1.000225;
    double r = 1.000605;
    double eta = 0.000158;
    int n = 5;                      // number of interior sub-bands on [1/2, 1]
    std::array<double, 12> Q = {1, 1.18, 1.18, 3.9, 1, 1, 1, 1, 1, 1, 2.3, 3.9};
    int J1 = 64;
    int J2 = 39;
    double T0 = 30610046000.0;
    LineBound line1 = {1.0, 0.0, 1.0, 3.0};              // on Re s = 1
    LineBound line_half = {66.7, 27.0 / 164.0, 0.0, 3.0};  // on Re s = 1/2
    double b = 24.302;              // lower-bound constant |zeta| > 1/(b log T)
    double B = 2.00204;             // log(b log T) <= B log log T for T >= T0

    double sigma1() const { return c + (c - 0.5) * (c - 0.5) / r; }
    double delta() const { return 2.0 * c - sigma1() - 0.5; }
};

struct constraint_error : std::runtime_error {
    std::vector<std::string> violations;
    explicit constraint_error(std::vector<std::string> v);
};

enum class RegionKind {
    AboveOnePlusEta,
    OneToOnePlusEta,
    SigmaNp4ToOne,
    YangBand,
    HalfToSigma4,
    ZeroToHalf,
    MinusEtaToZero,
    BelowMinusEta,
};

struct RegionId {
    RegionKind kind = RegionKind::AboveOnePlusEta;
    int yang = 0;  // band index h in 0..n-1, meaningful for YangBand only

    bool operator==(const RegionId&) const = default;
};

std::string region_name(RegionId id);

// Violations of the parameter constraint chain; empty means admissible.
std::vector<std::string> check_params(const BoundParams& p);
void require_valid(const BoundParams& p);  // throws constraint_error

double theta_y(double y, const BoundParams& p);
double sigma_index(int k);  // 1 - k/(2^k - 2), k >= 4

double sigma_of(double theta, const BoundParams& p);

// L_j(theta) = log[((j+sigma)^2 + (|r sin theta|+T)^2) / T^2] and the
// matching log-log increment; L* is the T0-frozen majorant.
double L_j(double j, double theta, double T, const BoundParams& p);
double M_j(double j, double theta, double T, const BoundParams& p);
double L_star(double j, double theta, const BoundParams& p);

// Paired shift constants.
double Q_0n4(const BoundParams& p);
double Q_yang(const BoundParams& p, int h);
double Q_2(const BoundParams& p);
double Q_11(const BoundParams& p);

// Region breakpoints in increasing theta order, and the region for each
// panel: region(i) covers (theta[i-1], theta[i]], ties resolving to the
// lower-theta (higher-sigma) side.
struct RegionLayout {
    std::vector<double> breaks;     // theta_{1+eta}, theta_1, ..., theta_{-eta}
    std::vector<RegionId> regions;  // size breaks.size() + 1
};
RegionLayout region_layout(const BoundParams& p);

RegionId region_of(double theta, const BoundParams& p);

double F_cr(double theta, double T, const BoundParams& p);

constexpr double kPhragmenLog = 1.00212;   // |log(Q+s)| <= 1.00212 log|Q+s|
constexpr double kSigmaLineCoeff = 1.546;  // coefficient of the sigma_k-line bounds

} // namespace zetabounds::regions

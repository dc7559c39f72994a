#include "zetabounds/regions.hpp"

#include "zetabounds/specfun.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace zetabounds::regions {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
} // namespace

constraint_error::constraint_error(std::vector<std::string> v)
    : std::runtime_error([&v] {
          std::ostringstream os;
          os << "parameter constraints violated:";
          for (const auto& s : v) os << " [" << s << "]";
          return os.str();
      }()),
      violations(std::move(v)) {}

std::string region_name(RegionId id) {
    switch (id.kind) {
        case RegionKind::AboveOnePlusEta: return "sigma>=1+eta";
        case RegionKind::OneToOnePlusEta: return "1..1+eta";
        case RegionKind::SigmaNp4ToOne: return "sigma_{n+4}..1";
        case RegionKind::YangBand: return "band" + std::to_string(id.yang);
        case RegionKind::HalfToSigma4: return "1/2..sigma_4";
        case RegionKind::ZeroToHalf: return "0..1/2";
        case RegionKind::MinusEtaToZero: return "-eta..0";
        case RegionKind::BelowMinusEta: return "sigma<=-eta";
    }
    return "?";
}

double sigma_index(int k) {
    if (k < 4) throw std::domain_error("sigma_index: requires k >= 4");
    return 1.0 - (double)k / (std::pow(2.0, k) - 2.0);
}

double theta_y(double y, const BoundParams& p) {
    if (y >= p.c + p.r) return 0.0;
    if (y <= p.c - p.r) return kPi;
    return std::acos((y - p.c) / p.r);
}

double sigma_of(double theta, const BoundParams& p) {
    return p.c + p.r * std::cos(theta);
}

std::vector<std::string> check_params(const BoundParams& p) {
    std::vector<std::string> v;
    auto need = [&](bool ok, const char* what) {
        if (!ok) v.emplace_back(what);
    };
    need(p.c > 0 && p.r > 0 && p.eta > 0, "c, r, eta > 0");
    need(p.eta <= 0.5, "eta <= 1/2");
    need(-0.5 < p.c - p.r, "-1/2 < c-r");
    need(p.c - p.r < 1.0 - p.c, "c-r < 1-c");
    need(1.0 - p.c < -p.eta, "1-c < -eta");
    const double s1 = p.sigma1();
    const double d = p.delta();
    need(0.25 <= d, "1/4 <= delta");
    need(d < 0.5, "delta < 1/2");
    need(1.0 + p.eta < s1, "1+eta < sigma1");
    need(s1 < p.c + p.r, "sigma1 < c+r");
    need(theta_y(1.0 + p.eta, p) <= 2.1, "theta_{1+eta} <= 2.1");
    need(p.n >= 1 && p.n <= 5, "1 <= n <= 5 (the 12-entry Q layout ends at the k=9 line)");
    need(p.J1 >= 1 && p.J2 >= 1, "J1, J2 >= 1");
    need(p.T0 >= std::numbers::e, "T0 >= e");
    for (int i = 0; i < 12; ++i)
        if (!(p.Q[i] > 0)) { v.emplace_back("Q entries > 0"); break; }
    need(p.line1.coeff > 0 && p.line_half.coeff > 0, "line coefficients > 0");
    need(p.line1.t_power >= 0 && p.line1.log_power >= 0 &&
             p.line_half.t_power >= 0 && p.line_half.log_power >= 0,
         "line exponents >= 0");
    return v;
}

void require_valid(const BoundParams& p) {
    auto v = check_params(p);
    if (!v.empty()) throw constraint_error(std::move(v));
}

double L_j(double j, double theta, double T, const BoundParams& p) {
    const double x = j + sigma_of(theta, p);
    const double tt = std::abs(p.r * std::sin(theta));
    // log((x^2 + (tt+T)^2)/T^2) without forming T^2 + small
    return std::log1p((x * x + tt * tt + 2.0 * tt * T) / (T * T));
}

double M_j(double j, double theta, double T, const BoundParams& p) {
    return std::log1p(L_j(j, theta, T, p) / (2.0 * std::log(T)));
}

double L_star(double j, double theta, const BoundParams& p) {
    const double x = j + sigma_of(theta, p);
    const double s = p.r * std::sin(theta);
    return (x * x + s * s) / p.T0 + 2.0 * s;
}

double Q_0n4(const BoundParams& p) { return std::max(p.Q[0], p.Q[p.n + 4]); }

double Q_yang(const BoundParams& p, int h) {
    return std::max(p.Q[4 + h], p.Q[5 + h]);
}

double Q_2(const BoundParams& p) { return std::max(p.Q[1], p.Q[4]); }

double Q_11(const BoundParams& p) { return std::max(p.Q[3], p.Q[10]); }

RegionLayout region_layout(const BoundParams& p) {
    RegionLayout lay;
    lay.breaks.push_back(theta_y(1.0 + p.eta, p));
    lay.regions.push_back({RegionKind::AboveOnePlusEta, 0});
    lay.breaks.push_back(theta_y(1.0, p));
    lay.regions.push_back({RegionKind::OneToOnePlusEta, 0});
    lay.breaks.push_back(theta_y(sigma_index(p.n + 4), p));
    lay.regions.push_back({RegionKind::SigmaNp4ToOne, 0});
    for (int h = p.n - 1; h >= 0; --h) {
        lay.breaks.push_back(theta_y(sigma_index(4 + h), p));
        lay.regions.push_back({RegionKind::YangBand, h});
    }
    lay.breaks.push_back(theta_y(0.5, p));
    lay.regions.push_back({RegionKind::HalfToSigma4, 0});
    lay.breaks.push_back(theta_y(0.0, p));
    lay.regions.push_back({RegionKind::ZeroToHalf, 0});
    lay.breaks.push_back(theta_y(-p.eta, p));
    lay.regions.push_back({RegionKind::MinusEtaToZero, 0});
    lay.regions.push_back({RegionKind::BelowMinusEta, 0});
    return lay;
}

RegionId region_of(double theta, const BoundParams& p) {
    const auto lay = region_layout(p);
    for (std::size_t i = 0; i < lay.breaks.size(); ++i)
        if (theta <= lay.breaks[i]) return lay.regions[i];
    return lay.regions.back();
}

double F_cr(double theta, double T, const BoundParams& p) {
    require_valid(p);
    if (!(T >= p.T0)) throw std::domain_error("F_cr: requires T >= T0");
    using specfun::zeta_real;
    const double sg = sigma_of(theta, p);
    const double c1 = p.line1.coeff, c2 = p.line1.log_power;
    const double k1 = p.line_half.coeff, k2 = p.line_half.t_power,
                 k3 = p.line_half.log_power;
    const double eta = p.eta;
    const double logT = std::log(T), loglogT = std::log(logT);
    const double PL = kPhragmenLog, Y = kSigmaLineCoeff;
    const RegionId id = region_of(theta, p);
    switch (id.kind) {
        case RegionKind::AboveOnePlusEta: {
            return 0.5 * L_j(-1.0, theta, T, p) + logT + std::log(zeta_real(sg, {}));
        }
        case RegionKind::OneToOnePlusEta: {
            const double q = p.Q[0];
            return (1.0 + eta - sg) / eta * std::log(c1 * std::pow(PL, c2)) +
                   (sg - 1.0) / eta * std::log(zeta_real(1.0 + eta, {})) +
                   0.5 * L_j(q, theta, T, p) + logT +
                   c2 * (1.0 + eta - sg) / eta * (M_j(q, theta, T, p) + loglogT);
        }
        case RegionKind::SigmaNp4ToOne: {
            const double sN = sigma_index(p.n + 4);
            const double P = std::pow(2.0, p.n + 4);
            const double a = (1.0 - sg) / (1.0 - sN);
            const double b = (sg - sN) / (1.0 - sN);
            const double q = Q_0n4(p);
            return a * std::log(Y * PL) + b * std::log(c1 * std::pow(PL, c2)) +
                   ((P - 1.0) / (P - 2.0) * a + b) *
                       (0.5 * L_j(q, theta, T, p) + logT) +
                   (a + c2 * b) * (M_j(q, theta, T, p) + loglogT);
        }
        case RegionKind::YangBand: {
            const int h = id.yang;
            const double slo = sigma_index(4 + h), shi = sigma_index(5 + h);
            const double P4 = std::pow(2.0, h + 4), P5 = std::pow(2.0, h + 5);
            const double wlo = (shi - sg) / (shi - slo);
            const double whi = (sg - slo) / (shi - slo);
            const double q = Q_yang(p, h);
            return std::log(Y * PL) + M_j(q, theta, T, p) + loglogT +
                   ((P4 - 1.0) / (P4 - 2.0) * wlo + (P5 - 1.0) / (P5 - 2.0) * whi) *
                       (0.5 * L_j(q, theta, T, p) + logT);
        }
        case RegionKind::HalfToSigma4: {
            const double s4 = sigma_index(4);
            const double a = (s4 - sg) / (s4 - 0.5);
            const double b = (sg - 0.5) / (s4 - 0.5);
            const double q = Q_2(p);
            return a * std::log(k1 * std::pow(PL, k3)) + b * std::log(Y * PL) +
                   ((k2 + 1.0) * a + 15.0 / 14.0 * b) *
                       (0.5 * L_j(q, theta, T, p) + logT) +
                   (k3 * a + b) * (M_j(q, theta, T, p) + loglogT);
        }
        case RegionKind::ZeroToHalf: {
            const double q = Q_11(p);
            return (1.0 - 2.0 * sg) * std::log(c1 * std::pow(PL, c2) / std::sqrt(kTwoPi)) +
                   2.0 * sg * std::log(k1 * std::pow(PL, k3)) +
                   0.5 * L_j(-1.0, theta, T, p) + logT +
                   0.5 * (1.0 - 2.0 * sg + 4.0 * k2 * sg) *
                       (0.5 * L_j(q, theta, T, p) + logT) +
                   (c2 * (1.0 - 2.0 * sg) + 2.0 * k3 * sg) *
                       (M_j(q, theta, T, p) + loglogT);
        }
        case RegionKind::MinusEtaToZero: {
            const double q = p.Q[10];
            return -sg / eta * std::log((1.0 + eta) / (c1 * std::pow(kTwoPi, eta))) +
                   std::log(c1 * std::pow(PL, c2) / std::sqrt(kTwoPi)) +
                   0.5 * L_j(-1.0, theta, T, p) + logT +
                   (-sg * (1.0 + 2.0 * eta) + sg + eta) / (2.0 * eta) *
                       (0.5 * L_j(q, theta, T, p) + logT) +
                   (sg + eta) / eta * c2 * (M_j(q, theta, T, p) + loglogT);
        }
        case RegionKind::BelowMinusEta: {
            const double fl = std::floor(sg);
            double sum = 0.0;
            for (int j = 1; j <= (int)(-fl); ++j)
                sum += L_j(j - 1.0, theta, T, p);
            return std::log(zeta_real(1.0 - sg, {})) + 0.5 * L_j(-1.0, theta, T, p) +
                   (1.0 + 0.5 * (1.0 - 2.0 * sg)) * logT -
                   0.5 * (1.0 - 2.0 * sg) * std::log(kTwoPi) +
                   0.25 * (1.0 - 2.0 * sg + 2.0 * fl) * L_j(1.0 - fl, theta, T, p) +
                   0.5 * sum;
        }
    }
    throw std::logic_error("F_cr: unreachable");
}

} // namespace zetabounds::regions

#include "zetabounds/constants.hpp"

#include "zetabounds/specfun.hpp"

#include <cmath>
#include <numbers>

namespace zetabounds::constants {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kE = std::numbers::e;

// 15-point Gauss-Legendre nodes/weights on [-1, 1]
constexpr double kGlx[8] = {
    0.0,
    0.2011940939974345, 0.3941513470775634, 0.5709721726085388,
    0.7244177313601700, 0.8482065834104272, 0.9372733924007059,
    0.9879925180204854};
constexpr double kGlw[8] = {
    0.2025782419255613,
    0.1984314853271116, 0.1861610000155622, 0.1662692058169939,
    0.1395706779261543, 0.1071592204671719, 0.0703660474881081,
    0.0307532419961173};

double gl15(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = kGlw[0] * f(mid);
    for (int i = 1; i < 8; ++i)
        s += kGlw[i] * (f(mid - half * kGlx[i]) + f(mid + half * kGlx[i]));
    return s * half;
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double tol, int depth, int& used, int max_sub) {
    const double whole = gl15(f, a, b);
    const double m = 0.5 * (a + b);
    const double L = gl15(f, a, m), R = gl15(f, m, b);
    if (std::abs(L + R - whole) <= tol || (b - a) < 1e-14) return L + R;
    if (depth > 48 || ++used > max_sub)
        throw quadrature_error("adaptive quadrature: subdivision budget exhausted");
    return adapt(f, a, m, 0.5 * tol, depth + 1, used, max_sub) +
           adapt(f, m, b, 0.5 * tol, depth + 1, used, max_sub);
}

double lz(double sigma) { return std::log(specfun::zeta_real(sigma)); }

} // namespace

double round_up5(double x) { return std::ceil(x * 1e5 - 1e-9) / 1e5; }

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& q) {
    if (a == b) return 0.0;
    int used = 0;
    return adapt(f, a, b, q.abs_tol, 0, used, q.max_subdivisions);
}

double E_of(double T, double d) {
    if (!(T >= 5.0 / 7.0)) throw std::domain_error("E_of: requires T >= 5/7");
    if (!(d >= 0.0 && d < 4.5)) throw std::domain_error("E_of: requires 0 <= d < 9/2");
    const double a = 2.0 * d + 17.0, b = -2.0 * d + 17.0;
    const double T2 = 4.0 * T * T;
    double e = (2.0 * T / 3.0) / (a * a + T2) + (2.0 * T / 3.0) / (b * b + T2) -
               (4.0 * T / 3.0) / (289.0 + T2);
    e += 0.5 * T * std::log1p(289.0 / T2) - 0.25 * T * std::log1p(a * a / T2) -
         0.25 * T * std::log1p(b * b / T2);
    const double K = (8.0 + 6.0 * kPi) / 45.0;
    e += K / std::pow(a * a + T2, 1.5) + K / std::pow(b * b + T2, 1.5) +
         2.0 * K / std::pow(289.0 + T2, 1.5);
    for (int k = 0; k <= 3; ++k) {
        const double u = 1.0 + 4.0 * k;
        e += 2.0 * std::atan(u / (2.0 * T)) -
             std::atan((2.0 * d + u) / (2.0 * T)) -
             std::atan((-2.0 * d + u) / (2.0 * T));
    }
    e += 0.25 * (2.0 * d + 15.0) * std::atan(a / (2.0 * T)) +
         0.25 * (-2.0 * d + 15.0) * std::atan(b / (2.0 * T)) -
         7.5 * std::atan(17.0 / (2.0 * T));
    return e;
}

double E_bound(double T, double d) {
    if (!(d >= 0.25 && d <= 0.625))
        throw std::domain_error("E_bound: requires d in [1/4, 5/8]");
    if (!(T >= 5.0 / 7.0)) throw std::domain_error("E_bound: requires T >= 5/7");
    return (640.0 * d - 112.0) / (1536.0 * (3.0 * T - 1.0)) + 1.0 / 1024.0;
}

RegionIntegrals integrate_regions(const regions::BoundParams& p,
                                  const QuadratureSpec& q,
                                  bool with_diagnostics) {
    using namespace regions;
    require_valid(p);
    RegionIntegrals ri;

    const double c = p.c, r = p.r, eta = p.eta;
    const double c1 = p.line1.coeff, c2 = p.line1.log_power;
    const double k1 = p.line_half.coeff, k2 = p.line_half.t_power,
                 k3 = p.line_half.log_power;
    const double PL = kPhragmenLog, Y = kSigmaLineCoeff;
    const int n = p.n;
    const double s4 = sigma_index(4), sN = sigma_index(n + 4);

    const double th_1pe = theta_y(1.0 + eta, p);
    const double th_1 = theta_y(1.0, p);
    const double th_sN = theta_y(sN, p);
    const double th_s4 = theta_y(s4, p);
    const double th_half = theta_y(0.5, p);
    const double th_0 = theta_y(0.0, p);
    const double th_me = theta_y(-eta, p);
    const double th_1mc = theta_y(1.0 - c, p);

    auto sg = [&](double th) { return sigma_of(th, p); };
    auto Ls = [&](double j, double th) { return L_star(j, th, p); };
    auto I = [&](auto f, double a, double b) {
        return integrate(f, a, b, q);
    };

    const double PN = std::pow(2.0, n + 4);
    const double q0n4 = Q_0n4(p), q2 = Q_2(p), q11 = Q_11(p);
    const double q0 = p.Q[0], q10 = p.Q[10];

    // weight of the (L/2 + log T) multiplier on sigma_{n+4}..1
    auto top_w = [&](double th) {
        const double s = sg(th);
        return ((PN - 1.0) * (1.0 - s) + (PN - 2.0) * (s - sN)) /
               ((PN - 2.0) * (1.0 - sN));
    };
    // same on band h
    auto yang_w = [&](int h, double th) {
        const double slo = sigma_index(4 + h), shi = sigma_index(5 + h);
        const double P4 = std::pow(2.0, h + 4), P5 = std::pow(2.0, h + 5);
        const double s = sg(th);
        return ((P5 - 2.0) * (P4 - 1.0) * (shi - s) +
                (P4 - 2.0) * (P5 - 1.0) * (s - slo)) /
               ((P4 - 2.0) * (P5 - 2.0) * (shi - slo));
    };
    // same on 1/2..sigma_4
    auto s4_w = [&](double th) {
        const double s = sg(th);
        return (14.0 * (k2 + 1.0) * (s4 - s) + 15.0 * (s - 0.5)) /
               (14.0 * (s4 - 0.5));
    };

    // ---- C-bar-1: the log T coefficient ---------------------------------
    double cbar1 = I([&](double th) { return top_w(th); }, th_1, th_sN);
    for (int h = 0; h < n; ++h) {
        const double a = theta_y(sigma_index(5 + h), p);
        const double b = theta_y(sigma_index(4 + h), p);
        cbar1 += I([&](double th) { return yang_w(h, th); }, a, b);
    }
    cbar1 += I([&](double th) { return s4_w(th); }, th_s4, th_half);
    cbar1 += 0.5 * I([&](double th) {
        const double s = sg(th);
        return 1.0 - 2.0 * s + 4.0 * k2 * s;
    }, th_half, th_0);
    cbar1 += I([&](double th) { return 0.5 * (1.0 - 2.0 * sg(th)); }, th_me, kPi);
    cbar1 += th_1 - th_half;
    cbar1 += I([&](double th) {
        const double s = sg(th);
        return (-s * (1.0 + 2.0 * eta) + s + eta) / (2.0 * eta);
    }, th_0, th_me);
    ri.cbar1 = cbar1;

    // ---- C-bar-2: the log log T coefficient -----------------------------
    double cbar2 = I([&](double th) {
        const double s = sg(th);
        return ((1.0 - s) + c2 * (s - sN)) / (1.0 - sN);
    }, th_1, th_sN);
    cbar2 += th_s4 - th_sN;
    cbar2 += I([&](double th) {
        const double s = sg(th);
        return (k3 * (s4 - s) + (s - 0.5)) / (s4 - 0.5);
    }, th_s4, th_half);
    cbar2 += c2 / eta * I([&](double th) { return 1.0 + eta - sg(th); }, th_1pe, th_1);
    cbar2 += I([&](double th) {
        const double s = sg(th);
        return c2 * (1.0 - 2.0 * s) + 2.0 * k3 * s;
    }, th_half, th_0);
    cbar2 += I([&](double th) { return (sg(th) + eta) / eta * c2; }, th_0, th_me);
    ri.cbar2 = cbar2;

    // ---- D3: the T-free additive terms ----------------------------------
    const double lc1 = std::log(c1 * std::pow(PL, c2));
    const double lY = std::log(Y * PL);
    const double lk1 = std::log(k1 * std::pow(PL, k3));
    const double lc1s = std::log(c1 * std::pow(PL, c2) / std::sqrt(kTwoPi));
    const double lz1pe = lz(1.0 + eta);
    const double lzc = lz(c);

    double d3 = lc1 / eta * I([&](double th) { return 1.0 + eta - sg(th); }, th_1pe, th_1);
    d3 += lz1pe / eta * I([&](double th) { return sg(th) - 1.0; }, th_1pe, th_1);
    d3 += lY / (1.0 - sN) * I([&](double th) { return 1.0 - sg(th); }, th_1, th_sN);
    d3 += lc1 / (1.0 - sN) * I([&](double th) { return sg(th) - sN; }, th_1, th_sN);
    d3 += lY * (th_s4 - th_sN);
    d3 += lk1 / (s4 - 0.5) * I([&](double th) { return s4 - sg(th); }, th_s4, th_half);
    d3 += lY / (s4 - 0.5) * I([&](double th) { return sg(th) - 0.5; }, th_s4, th_half);
    d3 += lc1s * I([&](double th) { return 1.0 - 2.0 * sg(th); }, th_half, th_0);
    d3 += 2.0 * lk1 * I([&](double th) { return sg(th); }, th_half, th_0);
    d3 += I([&](double th) {
        const double s = sg(th);
        return -s / eta * std::log((1.0 + eta) / (c1 * std::pow(kTwoPi, eta))) + lc1s;
    }, th_0, th_me);
    d3 -= std::log(kTwoPi) * I([&](double th) { return 0.5 * (1.0 - 2.0 * sg(th)); },
                               th_me, kPi);
    d3 += 0.5 * (lz1pe + lzc) * (th_1pe - 0.5 * kPi);
    d3 += kPi / (4.0 * p.J1) * lzc;
    d3 += 0.5 * (lz1pe + lzc) * (th_1mc - th_me);
    d3 += (kPi - th_1mc) / (2.0 * p.J2) * lzc;
    ri.d3 = d3;

    // ---- kappa_1, kappa_2: discrete circle sums --------------------------
    double kap1 = lz(c + r);
    for (int j = 1; j < p.J1; ++j)
        kap1 += 2.0 * lz(c + r * std::cos(kPi * j / (2.0 * p.J1)));
    kap1 *= kPi / (4.0 * p.J1);
    ri.kappa1 = kap1;

    double kap2 = lz(1.0 - c + r);
    for (int j = 1; j < p.J2; ++j) {
        const double phi = kPi * j / p.J2 + (1.0 - (double)j / p.J2) * th_1mc;
        kap2 += 2.0 * lz(1.0 - c - r * std::cos(phi));
    }
    kap2 *= (kPi - th_1mc) / (2.0 * p.J2);
    ri.kappa2 = kap2;

    // ---- M1, M2: the L* residual integrals -------------------------------
    double m1 = I([&](double th) { return Ls(-1.0, th); }, 0.0, th_1pe);
    m1 += I([&](double th) { return Ls(q0, th); }, th_1pe, th_1);
    m1 += I([&](double th) {
        const double s = sg(th);
        return Ls(-1.0, th) + 0.5 * (1.0 - 2.0 * s + 4.0 * k2 * s) * Ls(q11, th);
    }, th_half, th_0);
    m1 += I([&](double th) { return top_w(th) * Ls(q0n4, th); }, th_1, th_sN);
    for (int h = 0; h < n; ++h) {
        const double a = theta_y(sigma_index(5 + h), p);
        const double b = theta_y(sigma_index(4 + h), p);
        const double qy = Q_yang(p, h);
        m1 += I([&](double th) { return yang_w(h, th) * Ls(qy, th); }, a, b);
    }
    m1 += I([&](double th) { return s4_w(th) * Ls(q2, th); }, th_s4, th_half);
    m1 += I([&](double th) {
        return Ls(-1.0, th) + (0.5 - sg(th)) * Ls(q10, th);
    }, th_0, th_me);
    m1 += I([&](double th) {
        return Ls(-1.0, th) + 0.5 * (1.0 - 2.0 * sg(th)) * Ls(1.0, th);
    }, th_me, kPi);
    ri.m1 = m1;

    double m2 = I([&](double th) {
        return c2 / eta * (1.0 + eta - sg(th)) * Ls(q0, th);
    }, th_1pe, th_1);
    m2 += I([&](double th) {
        const double s = sg(th);
        return ((1.0 - s) + c2 * (s - sN)) / (1.0 - sN) * Ls(q0n4, th);
    }, th_1, th_sN);
    for (int h = 0; h < n; ++h) {
        const double a = theta_y(sigma_index(5 + h), p);
        const double b = theta_y(sigma_index(4 + h), p);
        const double qy = Q_yang(p, h);
        m2 += I([&](double th) { return Ls(qy, th); }, a, b);
    }
    m2 += I([&](double th) {
        const double s = sg(th);
        return (k3 * (s4 - s) + (s - 0.5)) / (s4 - 0.5) * Ls(q2, th);
    }, th_s4, th_half);
    m2 += I([&](double th) {
        const double s = sg(th);
        return (c2 * (1.0 - 2.0 * s) + 2.0 * k3 * s) * Ls(q11, th);
    }, th_half, th_0);
    m2 += I([&](double th) {
        return (sg(th) + eta) / eta * c2 * Ls(q10, th);
    }, th_0, th_me);
    ri.m2 = m2;

    ri.kappa3 = std::max(0.0, m1) / (2.0 * p.T0) +
                std::max(0.0, m2) / (2.0 * p.T0 * std::log(std::log(p.T0)));

    // ---- diagnostic: integral of F over each region panel ----------------
    if (with_diagnostics) {
        const auto lay = region_layout(p);
        auto F = [&](double th) { return F_cr(th, p.T0, p); };
        double lo = 0.0;
        for (std::size_t i = 0; i <= lay.breaks.size(); ++i) {
            const double hi = (i < lay.breaks.size()) ? lay.breaks[i] : kPi;
            double val = 0.0;
            const double w = std::min(1e-3, 0.25 * (hi - lo));
            if (lay.regions[i].kind == RegionKind::AboveOnePlusEta && w > 0) {
                // log zeta(sigma) steepens toward sigma = 1+eta
                val = integrate(F, lo, hi - w, q) + integrate(F, hi - w, hi, q);
            } else if (lay.regions[i].kind == RegionKind::BelowMinusEta && w > 0) {
                val = integrate(F, lo, lo + w, q) + integrate(F, lo + w, hi, q);
            } else {
                val = integrate(F, lo, hi, q);
            }
            ri.per_region[region_name(lay.regions[i])] = val;
            lo = hi;
        }
    }
    return ri;
}

ConstantSet assemble(const regions::BoundParams& p, const RegionIntegrals& ri) {
    regions::require_valid(p);
    const double lg = std::log(p.r / (p.c - 0.5));
    const double s1 = p.sigma1();
    const double d = p.delta();

    ConstantSet cs;
    cs.C1 = ri.cbar1 / (2.0 * kPi * lg);
    cs.C2 = ri.cbar2 / (2.0 * kPi * lg);
    cs.C2p = cs.C2 + p.B / (2.0 * lg);

    const double sums = (ri.d3 + ri.kappa1 + ri.kappa2 + ri.kappa3) / (2.0 * kPi * lg);
    const double base = 0.25 + lz(s1) / kPi + 0.5 * E_bound(p.T0, d) + sums;
    const double inv50 = 1.0 / (50.0 * p.T0);
    const double zratio = std::log(specfun::zeta_real(p.c) / specfun::zeta_real(2.0 * p.c)) /
                          (2.0 * lg);
    cs.C3 = 7.0 / 8.0 + base + inv50 + zratio;
    cs.C3p = 7.0 / 8.0 + base + inv50;
    const double arct = (std::atan((s1 - 1.0) / p.T0) + std::atan(0.5 / p.T0)) / kPi;
    cs.C3tilde = base + zratio + arct;   // the 7/8 and 1/(50 T0) cancel exactly
    cs.C3ptilde = base + arct;
    return cs;
}

double tilde_consistency(const regions::BoundParams& p, const ConstantSet& cs) {
    const double arct =
        (std::atan((p.sigma1() - 1.0) / p.T0) + std::atan(0.5 / p.T0)) / kPi;
    const double r1 = cs.C3tilde - (cs.C3 - 7.0 / 8.0 - 1.0 / (50.0 * p.T0) + arct);
    const double r2 = cs.C3ptilde - (cs.C3p - 7.0 / 8.0 - 1.0 / (50.0 * p.T0) + arct);
    return std::max(std::abs(r1), std::abs(r2));
}

CorollarySet corollary_constants(const ConstantSet& cs) {
    const double l2pe = std::log(kTwoPi * kE);
    CorollarySet k;
    k.script_C3 = 2.0 * cs.C3tilde + 3.0 / (4.0 * kPi) - l2pe / (2.0 * kPi);
    k.script_C3p = 2.0 * cs.C3ptilde + 3.0 / (4.0 * kPi) - l2pe / (2.0 * kPi);
    k.script_D3 = 2.0 * cs.C3tilde + (std::log(3.0) - l2pe) / kPi;
    k.script_D3p = 2.0 * cs.C3ptilde + (std::log(3.0) - l2pe) / kPi;
    k.script_E = 2.0 * cs.C3tilde + 1.0 / kPi + std::log(0.75) / (2.0 * kPi) - l2pe / kPi;
    k.script_Ep = 2.0 * cs.C3ptilde + 1.0 / kPi + std::log(0.75) / (2.0 * kPi) - l2pe / kPi;
    return k;
}

double small_T_bound() { return kSmallTArgBound + 1.0 / (50.0 * kE) + 7.0 / 8.0; }

double eval_bound(double T, const ConstantSet& cs, BoundMode mode) {
    if (mode == BoundMode::SmallT) {
        if (!(T >= kE && T <= kPrimedTmin))
            throw std::domain_error("eval_bound: small_T branch needs e <= T <= 30610046000");
        return small_T_bound();
    }
    if (!(T >= kE)) throw std::domain_error("eval_bound: requires T >= e");
    const double x = std::log(T), y = std::log(x);
    double a3, a3p;
    if (mode == BoundMode::NT) {
        a3 = cs.C3;
        a3p = cs.C3p;
    } else {
        a3 = cs.C3tilde;
        a3p = cs.C3ptilde;
    }
    const double v1 = cs.C2 * y + a3;
    const double v2 = cs.C2p * y + a3p;
    // the primed pair rests on the 1/(b log T) lower bound, valid above kPrimedTmin
    return cs.C1 * x + (T >= kPrimedTmin ? std::min(v1, v2) : v1);
}

double LinLogBound::value(double T) const {
    const double x = std::log(T);
    return c1 * x + c2 * std::log(x) + c3;
}

double crossover(const LinLogBound& b1, const LinLogBound& b2) {
    auto diff = [&](double x) {
        return (b1.c1 - b2.c1) * x + (b1.c2 - b2.c2) * std::log(x) +
               (b1.c3 - b2.c3);
    };
    // bracket on a log-spaced grid of x = log T
    double lo = 1.0 + 1e-9, hi = 0.0;
    double prev = diff(lo);
    const int kGrid = 400;
    for (int i = 1; i <= kGrid; ++i) {
        const double x = (1.0 + 1e-9) * std::pow(1e7 / (1.0 + 1e-9), (double)i / kGrid);
        const double d = diff(x);
        if ((prev <= 0.0 && d >= 0.0) || (prev >= 0.0 && d <= 0.0)) {
            hi = x;
            break;
        }
        lo = x;
        prev = d;
    }
    if (hi == 0.0) throw no_crossing_error("crossover: no sign change for T >= e");
    while (hi - lo > 1e-6) {  // absolute in log T = relative in T
        const double m = 0.5 * (lo + hi);
        if ((diff(lo) <= 0.0) == (diff(m) <= 0.0))
            lo = m;
        else
            hi = m;
    }
    return std::exp(0.5 * (lo + hi));
}

} // namespace zetabounds::constants

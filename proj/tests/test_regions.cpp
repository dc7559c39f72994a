#include "zetabounds/regions.hpp"

#include "oracles.hpp"
#include "zetabounds/specfun.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace zetabounds;
using regions::BoundParams;

namespace {
constexpr double kPi = std::numbers::pi;

BoundParams row1() { return BoundParams{}; }

BoundParams row5() {
    BoundParams p;
    p.c = 1.499159;
    p.r = 1.998357;
    p.eta = 0.499050;
    return p;
}
} // namespace

TEST_CASE("theta_y branches") {
    const auto p = row1();
    CHECK(regions::theta_y(p.c + p.r + 1.0, p) == 0.0);
    CHECK(regions::theta_y(p.c, p) == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(regions::theta_y(-0.5, p) == kPi);  // c - r > -1/2
    // weakly decreasing in y
    double prev = kPi;
    for (double y = -1.0; y <= 3.0; y += 0.01) {
        const double th = regions::theta_y(y, p);
        CHECK(th <= prev + 1e-15);
        prev = th;
    }
}

TEST_CASE("sigma_index values and monotonicity") {
    CHECK(regions::sigma_index(4) == doctest::Approx(5.0 / 7.0).epsilon(1e-16));
    CHECK(regions::sigma_index(5) == doctest::Approx(5.0 / 6.0).epsilon(1e-16));
    double prev = 0.0;
    for (int k = 4; k <= 40; ++k) {
        const double s = regions::sigma_index(k);
        CHECK(s > prev);
        CHECK(s < 1.0);
        prev = s;
    }
    CHECK_THROWS_AS(regions::sigma_index(3), std::domain_error);
}

TEST_CASE("L_star closed forms") {
    const auto p = row1();
    for (double j : {-1.0, 0.0, 2.3}) {
        const double a0 = regions::L_star(j, 0.0, p);
        CHECK(a0 == doctest::Approx((j + p.c + p.r) * (j + p.c + p.r) / p.T0)
                        .epsilon(1e-12));
        const double a90 = regions::L_star(j, kPi / 2, p);
        CHECK(a90 == doctest::Approx((j + p.c) * (j + p.c) / p.T0 +
                                     p.r * p.r / p.T0 + 2.0 * p.r)
                         .epsilon(1e-12));
    }
    // long-double re-evaluation at an interior angle
    const long double c = 1.000225L, r = 1.000605L, T0 = 30610046000.0L;
    const long double x = -1.0L + c + r * std::cos((long double)kPi / 4);
    const long double s = r * std::sin((long double)kPi / 4);
    const long double ref = (x * x + s * s) / T0 + 2.0L * s;
    CHECK(regions::L_star(-1.0, kPi / 4, p) ==
          doctest::Approx((double)ref).epsilon(1e-14));
    CHECK((double)ref == doctest::Approx(1.4150691616110497).epsilon(1e-14));
}

TEST_CASE("region_of maps breakpoints and interiors") {
    const auto p = row1();
    CHECK(regions::region_of(0.0, p).kind == regions::RegionKind::AboveOnePlusEta);
    CHECK(regions::region_of(kPi, p).kind == regions::RegionKind::BelowMinusEta);
    const double a = regions::theta_y(regions::sigma_index(4), p);
    const double b = regions::theta_y(0.5, p);
    CHECK(regions::region_of(0.5 * (a + b), p).kind ==
          regions::RegionKind::HalfToSigma4);
    // ties resolve to the higher-sigma side
    CHECK(regions::region_of(a, p).kind == regions::RegionKind::YangBand);
    CHECK(regions::region_of(a, p).yang == 0);
    CHECK(regions::region_of(std::nextafter(a, 4.0), p).kind ==
          regions::RegionKind::HalfToSigma4);
    // every angle lands in the region containing its sigma
    const auto lay = regions::region_layout(p);
    for (double th = 0.0; th <= kPi; th += 0.003) {
        const auto id = regions::region_of(th, p);
        std::size_t idx = 0;
        while (idx < lay.breaks.size() && th > lay.breaks[idx]) ++idx;
        CHECK(id == lay.regions[idx]);
    }
}

TEST_CASE("F matches the hand-expanded endpoint formulas") {
    const auto p = row1();
    const double T = p.T0;
    const double f0 = regions::F_cr(0.0, T, p);
    const double want0 = 0.5 * regions::L_j(-1.0, 0.0, T, p) + std::log(T) +
                         std::log(specfun::zeta_real(p.c + p.r));
    CHECK(f0 == doctest::Approx(want0).epsilon(1e-14));

    // theta = pi: sigma = c - r in (-1/2, -eta), floor = -1, one leftover term
    const double sg = p.c - p.r;
    const double fpi = regions::F_cr(kPi, T, p);
    const double want_pi =
        std::log(specfun::zeta_real(1.0 - sg)) +
        0.5 * regions::L_j(-1.0, kPi, T, p) +
        (1.0 + 0.5 * (1.0 - 2.0 * sg)) * std::log(T) -
        0.5 * (1.0 - 2.0 * sg) * std::log(2.0 * kPi) +
        0.25 * (1.0 - 2.0 * sg - 2.0) * regions::L_j(2.0, kPi, T, p) +
        0.5 * regions::L_j(0.0, kPi, T, p);
    CHECK(fpi == doctest::Approx(want_pi).epsilon(1e-14));
    CHECK(std::isfinite(fpi));
}

TEST_CASE("F jump at a band edge is bounded by the shift-constant mismatch") {
    const auto p = row1();
    const double th = regions::theta_y(regions::sigma_index(4), p);
    const double lo = regions::F_cr(th - 1e-9, p.T0, p);
    const double hi = regions::F_cr(th + 1e-9, p.T0, p);
    CHECK(std::isfinite(lo));
    CHECK(std::isfinite(hi));
    CHECK(std::abs(hi - lo) < 1e-3);
}

TEST_CASE("L and M are dominated by the frozen majorant") {
    for (const auto& p : {row1(), row5()}) {
        for (double j : {-1.0, 0.0, 1.0, 2.3, 3.9}) {
            for (double th = 0.0; th <= kPi; th += kPi / 37) {
                for (double mult : {1.0, 2.0, 10.0, 1e3}) {
                    const double T = p.T0 * mult;
                    const double ls = regions::L_star(j, th, p);
                    CHECK(regions::L_j(j, th, T, p) <= ls / T + 1e-15);
                    CHECK(regions::M_j(j, th, T, p) <=
                          ls / (2.0 * T * std::log(T)) + 1e-15);
                }
            }
        }
    }
}

TEST_CASE("empty tail intervals below -1/2") {
    // theta_{-1/2} = pi, so the j >= 1 intervals of the far tail are empty
    const auto p = row1();
    CHECK(regions::theta_y(-0.5, p) == kPi);
    CHECK(regions::theta_y(-1.5, p) == kPi);
}

TEST_CASE("invalid parameters are rejected with the failed inequality") {
    BoundParams p = row1();
    p.r = p.c;  // c - r = 0 >= 1 - c
    const auto v = regions::check_params(p);
    CHECK(!v.empty());
    bool found = false;
    for (const auto& s : v)
        if (s.find("c-r < 1-c") != std::string::npos) found = true;
    CHECK(found);
    CHECK_THROWS_AS(regions::F_cr(1.0, p.T0, p), regions::constraint_error);
}

#include "zetabounds/study.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace zetabounds;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

const zeros::ZeroList& zeros2500() {
    static const zeros::ZeroList z = zeros::find_zeros(2500.0, {500.0, 0, 1e-10});
    return z;
}

double main_term(double t) {
    return t / kTwoPi * std::log(t / (kTwoPi * std::numbers::e));
}

} // namespace

TEST_CASE("eps definitions at the first ordinate") {
    const auto& z = zeros2500();
    const double t1 = z.ordinates[0];
    const double base = 1.0 - main_term(t1) - 11.0 / 8.0;
    const double q = std::sqrt(std::log(t1) * std::log(std::log(t1))) /
                     (std::sqrt(2.0) * std::numbers::pi);
    CHECK(study::eps_at(1, z, study::Sign::plus) ==
          doctest::Approx(base - q).epsilon(1e-12));
    CHECK(study::eps_at(1, z, study::Sign::minus) ==
          doctest::Approx(base + q).epsilon(1e-12));
    // identity: eps+ - eps- = -sqrt(2)/pi * sqrt(log t log log t)
    for (long n : {1L, 100L, 1000L}) {
        const double t = z.ordinates[n - 1];
        const double gap = study::eps_at(n, z, study::Sign::plus) -
                           study::eps_at(n, z, study::Sign::minus);
        const double want = -std::sqrt(2.0) / std::numbers::pi *
                            std::sqrt(std::log(t) * std::log(std::log(t)));
        CHECK(gap == doctest::Approx(want).epsilon(1e-12));
    }
    CHECK_THROWS_AS(study::eps_at(0, z, study::Sign::plus), std::out_of_range);
    CHECK_THROWS_AS(study::eps_at((long)z.ordinates.size() + 1, z, study::Sign::plus),
                    std::out_of_range);
}

TEST_CASE("no eps exceptions below t = 2500") {
    CHECK(study::scan_extremes(zeros2500()).empty());
}

TEST_CASE("interval averages") {
    const auto& z = zeros2500();
    const auto one = study::interval_averages(z, 1);
    REQUIRE(one.size() == 1);
    CHECK(std::abs(one[0].second - 11.0 / 8.0) < 0.02);

    // single-zero chunks reproduce the pointwise values
    zeros::ZeroList four;
    four.ordinates = {z.ordinates[0], z.ordinates[1], z.ordinates[2], z.ordinates[3]};
    four.t_max_verified = z.ordinates[3];
    const auto single = study::interval_averages(four, 4);
    REQUIRE(single.size() == 4);
    for (int i = 0; i < 4; ++i)
        CHECK(single[i].second ==
              doctest::Approx((i + 1) - main_term(four.ordinates[i])).epsilon(1e-12));

    const auto halves = study::interval_averages(four, 2);
    REQUIRE(halves.size() == 2);
    CHECK(halves[0].second ==
          doctest::Approx(0.5 * (single[0].second + single[1].second)).epsilon(1e-12));
    CHECK(halves[1].second ==
          doctest::Approx(0.5 * (single[2].second + single[3].second)).epsilon(1e-12));
}

TEST_CASE("first window-cluster occurrences match the reference list") {
    const auto& z = zeros2500();
    const auto scan = study::cluster_first(4, z);
    REQUIRE(scan.rows.size() == 4);
    CHECK(scan.rows[0].t_first ==
          doctest::Approx(13.1347251417346938).epsilon(1e-10));
    CHECK(scan.rows[1].t_first ==
          doctest::Approx(48.7738324776723022).epsilon(1e-10));
    CHECK(scan.rows[2].t_first ==
          doctest::Approx(356.952685101632274).epsilon(1e-10));
    CHECK(scan.rows[3].t_first ==
          doctest::Approx(2261.87830538116111).epsilon(1e-10));
    for (int i = 1; i < 4; ++i)
        CHECK(scan.rows[i].t_first > scan.rows[i - 1].t_first);
    // a window count never attained in range raises a coverage error
    CHECK_THROWS_AS(study::cluster_first(5, z), zeros::coverage_error);
}

TEST_CASE("two-sided deviation bound holds; a corrupted list fails it") {
    const auto& z = zeros2500();
    CHECK(study::deviation_band_check(z));
    zeros::ZeroList bad = z;
    bad.ordinates.back() += 10.0;  // still increasing, badly placed
    bad.t_max_verified = bad.ordinates.back();
    CHECK(!study::deviation_band_check(bad));
}

TEST_CASE("eps+ decreases between consecutive ordinates") {
    const auto& z = zeros2500();
    for (long n : {10L, 500L, 1500L}) {
        const double a = z.ordinates[n - 1], b = z.ordinates[n];
        const double left = study::eps_at(n, z, study::Sign::plus);
        double maxv = -1e300;
        for (int i = 0; i <= 64; ++i) {
            const double t = a + (b - a) * i / 64.0 * (1.0 - 1e-9);
            const double q = std::sqrt(std::log(t) * std::log(std::log(t))) /
                             (std::sqrt(2.0) * std::numbers::pi);
            maxv = std::max(maxv, (double)n - main_term(t) - 11.0 / 8.0 - q);
        }
        CHECK(maxv <= left + 1e-9);
        // infimum relation for the lower deviation
        const double inf_grid = (double)n - main_term(b) - 11.0 / 8.0 +
                                std::sqrt(std::log(b) * std::log(std::log(b))) /
                                    (std::sqrt(2.0) * std::numbers::pi);
        CHECK(inf_grid == doctest::Approx(study::eps_at(n + 1, z, study::Sign::minus) - 1.0)
                              .epsilon(1e-9));
    }
}

TEST_CASE("extremes summary reports the infimum variant") {
    const auto& z = zeros2500();
    const auto s = study::extremes_summary(z);
    CHECK(s.max_eps_plus < 0.0);       // no exceptions at these heights
    CHECK(s.min_eps_minus > 0.0);
    CHECK(s.min_eps_minus_inf < 0.0);  // the dip just before the next zero
    CHECK(s.argmin_minus_inf >= 1);
}

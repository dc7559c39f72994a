#include "zetabounds/zeros.hpp"

#include "zetabounds/config.hpp"
#include "zetabounds/specfun.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <numbers>

using namespace zetabounds;

namespace {

const zeros::ZeroList& zeros2500() {
    static const zeros::ZeroList z = zeros::find_zeros(2500.0, {500.0, 0, 1e-10});
    return z;
}

std::string temp_path(const char* name) {
    return std::string("/tmp/zb_test_") + name;
}

} // namespace

TEST_CASE("first ordinate and low-range count") {
    const auto z = zeros::find_zeros(100.0, {50.0, 0, 1e-10});
    REQUIRE(!z.ordinates.empty());
    CHECK(z.ordinates.front() == doctest::Approx(14.1347251417).epsilon(1e-11));
    long upto100 = 0;
    for (double g : z.ordinates)
        if (g <= 100.0) ++upto100;
    CHECK(upto100 == 29);
}

TEST_CASE("scan to 2500: simple zeros, verified coverage") {
    const auto& z = zeros2500();
    CHECK(z.source == zeros::Source::computed);
    CHECK(z.t_max_verified > 2499.0);
    // the known count to 2500
    CHECK(z.ordinates.size() == (std::size_t)zeros::N_exact(z.t_max_verified, z));
    for (std::size_t i = 1; i < z.ordinates.size(); ++i)
        CHECK(z.ordinates[i] - z.ordinates[i - 1] > 1e-6);
}

TEST_CASE("find_zeros argument checks") {
    CHECK_THROWS_AS(zeros::find_zeros(10.0), std::invalid_argument);
    CHECK_THROWS_AS(zeros::find_zeros(2e6), std::range_error);
}

TEST_CASE("the close pair near t = 7005 survives the scan") {
    // gap ~0.0377, narrower than the base scan step there; the count check
    // must trigger a rescan if the first pass stepped over both
    const auto z = zeros::find_zeros(7010.0, {1000.0, 0, 1e-10});
    std::vector<double> nearby;
    for (double g : z.ordinates)
        if (g > 7005.0 && g < 7005.2) nearby.push_back(g);
    REQUIRE(nearby.size() == 2);
    CHECK(nearby[0] == doctest::Approx(7005.0629).epsilon(1e-6));
    CHECK(nearby[1] == doctest::Approx(7005.1006).epsilon(1e-6));
    CHECK(nearby[1] - nearby[0] == doctest::Approx(0.0377).epsilon(0.01));
}

TEST_CASE("ingest: format, comments, errors") {
    const auto p1 = temp_path("ok.txt");
    {
        std::ofstream f(p1);
        f << "# comment\n14.134725\n21.022040\n\n25.010858\n";
    }
    const auto z = zeros::ingest_zeros(p1);
    CHECK(z.ordinates.size() == 3);
    CHECK(z.source == zeros::Source::ingested);
    CHECK(z.t_max_verified == doctest::Approx(25.010858));

    const auto p2 = temp_path("empty.txt");
    { std::ofstream f(p2); }
    CHECK(zeros::ingest_zeros(p2).ordinates.empty());

    const auto p3 = temp_path("bad_order.txt");
    {
        std::ofstream f(p3);
        f << "14.1\n13.9\n25.0\n";
    }
    try {
        zeros::ingest_zeros(p3);
        FAIL("expected monotonicity error");
    } catch (const zeros::monotonicity_error& e) {
        CHECK(e.index == 2);
    }

    const auto p4 = temp_path("garbage.txt");
    {
        std::ofstream f(p4);
        f << "14.1\nnot-a-number\n";
    }
    try {
        zeros::ingest_zeros(p4);
        FAIL("expected parse error");
    } catch (const zeros::parse_error& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("write/ingest round-trip is bit exact") {
    const auto& z = zeros2500();
    const auto p = temp_path("roundtrip.txt");
    zeros::write_zeros(p, z);
    const auto back = zeros::ingest_zeros(p);
    REQUIRE(back.ordinates.size() == z.ordinates.size());
    for (std::size_t i = 0; i < z.ordinates.size(); ++i)
        CHECK(back.ordinates[i] == z.ordinates[i]);
}

TEST_CASE("N is a step function; S jumps by one at ordinates") {
    const auto& z = zeros2500();
    CHECK(zeros::N_exact(z.ordinates.front() + 1e-9, z) == 1);
    CHECK(zeros::N_exact(z.ordinates.front() - 1e-9, z) == 0);
    long prev = 0;
    for (double t = 14.0; t < 300.0; t += 1.7) {
        const long n = zeros::N_exact(t, z);
        CHECK(n >= prev);
        prev = n;
    }
    for (std::size_t i = 0; i < 40; ++i) {
        const double g = z.ordinates[i * 7];
        const double jump = zeros::S_exact(g + 1e-8, z) - zeros::S_exact(g - 1e-8, z);
        CHECK(jump == doctest::Approx(1.0).epsilon(1e-6));
    }
    CHECK_THROWS_AS(zeros::N_exact(3000.0, z), zeros::coverage_error);
}

TEST_CASE("S stays within the verified band and matches tracking") {
    const auto& z = zeros2500();
    for (double t = 15.0; t < 2499.0; t += 13.7)
        CHECK(std::abs(zeros::S_exact(t, z)) <= 2.5167);
    // independent continuous-variation evaluation at a quiet point
    CHECK(zeros::S_exact(50.0, z) ==
          doctest::Approx(zeros::s_tracked(50.0)).epsilon(1e-8));
}

TEST_CASE("counting bound holds at and between ordinates") {
    const auto& z = zeros2500();
    const auto s = config::profile("row1");
    const auto ri = constants::integrate_regions(s.params, {1e-9, 4000}, false);
    const auto cs = constants::assemble(s.params, ri);
    CHECK(zeros::bound_sandwich(std::numbers::e, cs, z));
    for (std::size_t i = 0; i < z.ordinates.size(); i += 13) {
        CHECK(zeros::bound_sandwich(z.ordinates[i], cs, z));
        if (i + 1 < z.ordinates.size())
            CHECK(zeros::bound_sandwich(
                0.5 * (z.ordinates[i] + z.ordinates[i + 1]), cs, z));
    }
}

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oscatom/spectra.hpp"

using namespace oscatom;

namespace {
const PhysicalConstants kUnit{};
}

TEST_CASE("oscillator energies") {
    CHECK(oscillator_energy(0, 2, kUnit) == doctest::Approx(2.0));
    CHECK(oscillator_energy(0, 4, kUnit) == doctest::Approx(8.0));
    CHECK(oscillator_energy(3, 1, kUnit) == doctest::Approx(4.0));
    CHECK_THROWS_AS(oscillator_energy(-1, 2, kUnit), std::domain_error);
}

TEST_CASE("hydrogen-like energies") {
    CHECK(hydrogen_energy(0, 2, kUnit) == doctest::Approx(-0.5));
    CHECK(hydrogen_energy(0, 4, kUnit) == doctest::Approx(-0.03125));
    CHECK(hydrogen_energy(2, 2, kUnit) == doctest::Approx(-0.125));
    CHECK_THROWS_AS(hydrogen_energy(-2, 3, kUnit), std::domain_error);
}

TEST_CASE("dual parameters") {
    const DualParameters p = dual_parameters(-0.5, kUnit);
    CHECK(p.omega == doctest::Approx(2.0));
    CHECK(p.epsilon == doctest::Approx(4.0));
    CHECK(dual_parameters(-0.125, kUnit).omega == doctest::Approx(1.0));
    CHECK_THROWS_AS(dual_parameters(0.0, kUnit), std::domain_error);
    CHECK_THROWS_AS(dual_parameters(1.0, kUnit), std::domain_error);
}

TEST_CASE("consistency loop at N=0, m=2") {
    const DualParameters p = dual_parameters(hydrogen_energy(0, 2, kUnit), kUnit);
    PhysicalConstants c = kUnit;
    c.omega = p.omega;
    CHECK(std::abs(oscillator_energy(0, 2, c) - 4.0 * kUnit.e * kUnit.e) < 1e-12);
}

TEST_CASE("duality closure: round trip exact to 1e-12 for even N <= 20") {
    for (int m = 1; m <= 4; ++m) {
        for (int N = 0; N <= 20; N += 2) {
            const double E = hydrogen_energy(N, m, kUnit);
            const DualParameters p = dual_parameters(E, kUnit);
            PhysicalConstants c = kUnit;
            c.omega = p.omega;
            const double eps = oscillator_energy(N, m, c);
            CAPTURE(m);
            CAPTURE(N);
            CHECK(std::abs(eps - p.epsilon) <= 1e-12 * p.epsilon);
        }
    }
}

TEST_CASE("textbook D-dimensional Coulomb form agreement") {
    // E(N=2n-2) = -mu e^4 / (2 hbar^2 (n + 2^(m-2) - 1)^2)
    for (int m = 2; m <= 4; ++m) {
        const double zp = std::pow(2.0, m - 2);
        for (int n = 1; n <= 6; ++n) {
            const double lhs = hydrogen_energy(2 * n - 2, m, kUnit);
            const double k = n + zp - 1.0;
            const double rhs = -1.0 / (2.0 * k * k);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-14));
        }
    }
}

TEST_CASE("monotonicity in N") {
    for (int m = 1; m <= 4; ++m) {
        for (int N = 0; N < 10; ++N) {
            CHECK(hydrogen_energy(N + 1, m, kUnit) > hydrogen_energy(N, m, kUnit));
            CHECK(oscillator_energy(N + 1, m, kUnit) > oscillator_energy(N, m, kUnit));
            CHECK(hydrogen_energy(N, m, kUnit) < 0.0);
        }
    }
}

TEST_CASE("scaling in the constants") {
    PhysicalConstants c = kUnit;
    c.e = 2.0;
    CHECK(hydrogen_energy(0, 2, c) == doctest::Approx(16.0 * hydrogen_energy(0, 2, kUnit)));
    c = kUnit;
    c.hbar = 2.0;
    CHECK(hydrogen_energy(0, 2, c) == doctest::Approx(0.25 * hydrogen_energy(0, 2, kUnit)));
    c = kUnit;
    c.omega = 2.0;
    CHECK(oscillator_energy(3, 2, c) == doctest::Approx(2.0 * oscillator_energy(3, 2, kUnit)));
}

TEST_CASE("spectrum table rows and flags") {
    const auto rows = spectrum_table(2, 2, kUnit);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].N == 0);
    CHECK(rows[0].epsilon == doctest::Approx(2.0));
    CHECK(rows[0].E == doctest::Approx(-0.5));
    CHECK(rows[0].physical_dual);
    CHECK(rows[1].epsilon == doctest::Approx(3.0));
    CHECK(rows[1].E == doctest::Approx(-2.0 / 9.0));
    CHECK(!rows[1].physical_dual);
    CHECK(rows[2].E == doctest::Approx(-0.125));
    CHECK(rows[2].physical_dual);

    const auto lc = spectrum_table(1, 0, kUnit);
    REQUIRE(lc.size() == 1);
    CHECK(lc[0].epsilon == doctest::Approx(1.0));
    CHECK(lc[0].E == doctest::Approx(-2.0));

    const auto h16 = spectrum_table(4, 0, kUnit);
    CHECK(h16[0].epsilon == doctest::Approx(8.0));
    CHECK(h16[0].E == doctest::Approx(-0.03125));
}

TEST_CASE("E (N + 2^(m-1))^2 is constant across rows") {
    for (int m = 1; m <= 4; ++m) {
        const auto rows = spectrum_table(m, 8, kUnit);
        const double zp = std::pow(2.0, m - 1);
        const double c0 = rows[0].E * zp * zp;
        for (const auto& r : rows) {
            const double k = r.N + zp;
            CHECK(r.E * k * k == doctest::Approx(c0).epsilon(1e-13));
        }
    }
}

TEST_CASE("CSV serialization") {
    const std::string csv = spectrum_csv(spectrum_table(2, 1, kUnit));
    CHECK(csv.substr(0, 25) == "N,epsilon,E,physical_dual");
    CHECK(csv.find("0,2,-0.5,true") != std::string::npos);
    CHECK(csv.find("false") != std::string::npos);
}

#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "oscatom/rng.hpp"
#include "oscatom/signed_matrix.hpp"
#include "oscatom/transforms.hpp"

using namespace oscatom;

namespace {

std::string data_path(const char* rel) { return std::string(OSCATOM_DATA_DIR "/") + rel; }

// Entry shorthand for expected rows: +k / -k as in the golden format.
void check_row(const SignedIndexMatrix& t, int row, const std::vector<int>& expect) {
    for (std::size_t j = 0; j < expect.size(); ++j) {
        const SignedEntry& e = t.at(row, static_cast<int>(j));
        CAPTURE(row);
        CAPTURE(j);
        REQUIRE(e.sign != 0);
        CHECK(e.sign * (e.src + 1) == expect[j]);
    }
}

}  // namespace

TEST_CASE("Levi-Civita template is the complex-squaring convention") {
    const SignedIndexMatrix t = build_matrix(family_params(1));
    check_row(t, 0, {+1, -2});  // x1 = u1^2 - u2^2
    check_row(t, 1, {+2, +1});  // x2 = 2 u1 u2
}

TEST_CASE("Kustaanheimo-Stiefel template matches the conventional matrix") {
    const SignedIndexMatrix t = build_matrix(family_params(2));
    check_row(t, 0, {+1, -2, -3, +4});
    check_row(t, 1, {+2, +1, -4, -3});
    check_row(t, 2, {+3, +4, +1, +2});
    // phi row: u4 d1 - u3 d2 + u2 d3 - u1 d4
    check_row(t, 3, {+4, -3, +2, -1});
}

TEST_CASE("golden files pin every constructed template") {
    for (int m = 1; m <= 4; ++m) {
        const SignedIndexMatrix t = build_matrix(family_params(m));
        std::ifstream in(data_path((std::string("golden/") + family_name(m) + ".txt").c_str()));
        REQUIRE(in.good());
        std::stringstream frozen;
        frozen << in.rdbuf();
        CHECK(to_golden(t) == frozen.str());
    }
}

TEST_CASE("golden format round-trips") {
    const SignedIndexMatrix t = build_matrix(family_params(3));
    std::istringstream in(to_golden(t));
    const SignedIndexMatrix back = from_golden(in);
    CHECK(to_golden(back) == to_golden(t));
}

TEST_CASE("matrix file parse errors") {
    std::istringstream bad1("+1 -2\n+2\n");
    CHECK_THROWS(from_golden(bad1));
    std::istringstream bad2("+1 -9\n+2 +1\n");
    CHECK_THROWS(from_golden(bad2));
    std::istringstream bad3("");
    CHECK_THROWS(from_golden(bad3));
}

TEST_CASE("rows are signed permutations for every family") {
    for (int m = 1; m <= 4; ++m)
        CHECK(build_matrix(family_params(m)).rows_are_signed_permutations());
}

TEST_CASE("exact orthogonality for m=1..3, map sector clean for m=4") {
    for (int m = 1; m <= 3; ++m) {
        const OrthogonalityReport rep = check_orthogonality(build_matrix(family_params(m)));
        CAPTURE(m);
        CHECK(rep.pass());
    }
    const FamilyDescriptor h16 = family_params(4);
    const OrthogonalityReport rep = check_orthogonality(build_matrix(h16));
    // No 16-dim system of 16 mutually u^2-orthogonal signed-permutation rows
    // exists (the Hurwitz-Radon bound is 9), so the phi sector must fail;
    // the failures have to stay confined to product-row x phi-row pairs.
    CHECK(rep.failures.size() == 42);
    for (const auto& f : rep.failures) {
        CHECK(f.row_i >= 2);       // never the plain-dot row x1
        CHECK(f.row_i <= h16.D - 1);  // a product row, never the norm row x9
        CHECK(f.row_k > h16.D);    // always against a phi row
    }
}

TEST_CASE("misprinted KS variant fails orthogonality (typo regression)") {
    const SignedIndexMatrix lit = load_golden_file(data_path("ks_misprint.txt"));
    const OrthogonalityReport rep = check_orthogonality(lit);
    CHECK(!rep.pass());
    bool row1_row3 = false;
    for (const auto& f : rep.failures)
        if (f.row_i == 1 && f.row_k == 3) row1_row3 = true;
    CHECK(row1_row3);
}

TEST_CASE("exact zero divergence for every family") {
    for (int m = 1; m <= 4; ++m) {
        const DivergenceReport rep = check_divergence(build_matrix(family_params(m)));
        CAPTURE(m);
        CHECK(rep.pass());
        for (int s : rep.row_sums) CHECK(s == 0);
    }
}

TEST_CASE("map_point examples") {
    const FamilyDescriptor ks = family_params(2);
    const std::vector<double> u1{1, 0, 0, 0};
    const std::vector<double> x1 = map_point(ks, u1);
    CHECK(x1[0] == doctest::Approx(1.0));
    CHECK(x1[1] == doctest::Approx(0.0));
    CHECK(x1[2] == doctest::Approx(0.0));

    // hand evaluation: x1 = 1-1 = 0, x2 = 2*1*1 = 2, x3 = 0
    const std::vector<double> x2 = map_point(ks, std::vector<double>{1, 1, 0, 0});
    CHECK(x2[0] == doctest::Approx(0.0));
    CHECK(x2[1] == doctest::Approx(2.0));
    CHECK(x2[2] == doctest::Approx(0.0));

    const std::vector<double> xlc = map_point(family_params(1), std::vector<double>{1, 1});
    CHECK(xlc[0] == doctest::Approx(0.0));
    CHECK(xlc[1] == doctest::Approx(2.0));

    CHECK_THROWS(map_point(ks, std::vector<double>{1, 2, 3}));
}

TEST_CASE("typed points validate lengths") {
    const FamilyDescriptor ks = family_params(2);
    CHECK_THROWS(OscPoint::checked(ks, {1, 2, 3}));
    CHECK_THROWS(AtomPoint::checked(ks, {1, 2}));
    const AtomPoint x = map_point(ks, OscPoint::checked(ks, {1, 0, 0, 0}));
    CHECK(x.coords.size() == 3);
}

TEST_CASE("euler identity on random points, every family") {
    for (int m = 1; m <= 4; ++m) {
        const FamilyDescriptor fam = family_params(m);
        std::vector<double> u(fam.d);
        double worst = 0.0;
        for (int s = 0; s < 500; ++s) {
            sample_cube(11, s, u, -2.0, 2.0);
            double u2 = 0.0;
            for (double v : u) u2 += v * v;
            const std::vector<double> x = map_point(fam, u);
            double x2 = 0.0;
            for (double v : x) x2 += v * v;
            worst = std::max(worst, std::abs(std::sqrt(x2) - u2) / u2);
        }
        CAPTURE(m);
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("map is exactly even: x(u) == x(-u) bitwise") {
    for (int m = 1; m <= 4; ++m) {
        const FamilyDescriptor fam = family_params(m);
        std::vector<double> u(fam.d), neg(fam.d);
        for (int s = 0; s < 200; ++s) {
            sample_cube(13, s, u, -2.0, 2.0);
            for (int j = 0; j < fam.d; ++j) neg[j] = -u[j];
            const std::vector<double> a = map_point(fam, u);
            const std::vector<double> b = map_point(fam, neg);
            for (int i = 0; i < fam.D; ++i) CHECK(a[i] == b[i]);
        }
    }
}

TEST_CASE("phi rows annihilate u itself, symbolically checkable numerically") {
    for (int m = 2; m <= 4; ++m) {
        const FamilyDescriptor fam = family_params(m);
        const SignedIndexMatrix t = build_matrix(fam);
        std::vector<double> u(fam.d);
        for (int s = 0; s < 100; ++s) {
            sample_cube(17, s, u, -3.0, 3.0);
            for (int i = fam.D; i < fam.d; ++i)
                CHECK(t.row_apply(i, u, u) == doctest::Approx(0.0).epsilon(1e-14));
        }
    }
}


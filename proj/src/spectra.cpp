#include "oscatom/spectra.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace oscatom {

namespace {
void require_family(int m) {
    if (m < 1 || m > 4) throw std::invalid_argument("unsupported family: m must be in 1..4");
}
double zero_point(int m) { return static_cast<double>(1 << (m - 1)); }
}  // namespace

double oscillator_energy(int N, int m, const PhysicalConstants& c) {
    require_family(m);
    if (N < 0) throw std::domain_error("oscillator_energy: N must be nonnegative");
    return c.hbar * c.omega * (N + zero_point(m));
}

double hydrogen_energy(int N, int m, const PhysicalConstants& c) {
    require_family(m);
    if (N < 0) throw std::domain_error("hydrogen_energy: N must be nonnegative");
    const double k = N + zero_point(m);
    const double e2 = c.e * c.e;
    return -2.0 * c.mu * e2 * e2 / (c.hbar * c.hbar * k * k);
}

DualParameters dual_parameters(double atom_energy, const PhysicalConstants& c) {
    if (atom_energy >= 0.0)
        throw std::domain_error("dual_parameters: the duality maps bound states only (E < 0)");
    return DualParameters{std::sqrt(-8.0 * atom_energy / c.mu), 4.0 * c.e * c.e};
}

std::vector<SpectrumRow> spectrum_table(int m, int n_max, const PhysicalConstants& c) {
    require_family(m);
    if (n_max < 0) throw std::domain_error("spectrum_table: N_max must be nonnegative");
    std::vector<SpectrumRow> rows;
    rows.reserve(n_max + 1);
    for (int N = 0; N <= n_max; ++N)
        rows.push_back({N, oscillator_energy(N, m, c), hydrogen_energy(N, m, c), N % 2 == 0});
    return rows;
}

std::string spectrum_csv(const std::vector<SpectrumRow>& rows) {
    std::string out = "N,epsilon,E,physical_dual\n";
    char buf[96];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%d,%.12g,%.12g,%s\n", r.N, r.epsilon, r.E,
                      r.physical_dual ? "true" : "false");
        out += buf;
    }
    return out;
}

}  // namespace oscatom

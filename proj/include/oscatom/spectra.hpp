#pragma once

#include <string>
#include <vector>

namespace oscatom {

/// Gaussian-convention constants; the Coulomb potential is -e^2/r.
/// Defaults are the atomic-like choice hbar = mu = e = omega = 1.
struct PhysicalConstants {
    double hbar = 1.0;
    double mu = 1.0;
    double e = 1.0;
    double omega = 1.0;
};

/// epsilon = hbar omega (N + 2^(m-1)).  2^(m-1) = d/2 is the d-dimensional
/// zero-point constant.  Throws std::domain_error for N < 0.
double oscillator_energy(int N, int m, const PhysicalConstants& c);

/// E = -2 mu e^4 / (hbar^2 (N + 2^(m-1))^2).
double hydrogen_energy(int N, int m, const PhysicalConstants& c);

struct DualParameters {
    double omega;    // sqrt(-8E/mu)
    double epsilon;  // 4 e^2
};

/// Solves (1/2) mu omega^2 = -4E and epsilon = 4 e^2.  Throws
/// std::domain_error for E >= 0: the duality maps bound states only.
DualParameters dual_parameters(double atom_energy, const PhysicalConstants& c);

struct SpectrumRow {
    int N;
    double epsilon;
    double E;
    bool physical_dual;  // true iff N even: only even oscillator solutions
                         // enter the atom wave-function expansion
};

std::vector<SpectrumRow> spectrum_table(int m, int n_max, const PhysicalConstants& c);

/// CSV with header "N,epsilon,E,physical_dual".
std::string spectrum_csv(const std::vector<SpectrumRow>& rows);

}  // namespace oscatom

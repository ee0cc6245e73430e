#pragma once

#include <optional>
#include <vector>

#include "oscatom/spectra.hpp"

namespace oscatom {

enum class ExecPolicy { Serial, Parallel };

enum class RadialSystem { Oscillator, Coulomb };

/// Radial problem in `dim` spatial dimensions reduced to one dimension via
/// R(r) = r^(-(dim-1)/2) chi(r); the centrifugal constant is nu^2 - 1/4 with
/// nu = l + (dim-2)/2.
struct RadialProblem {
    RadialSystem system;
    int dim;  // >= 2
    int l;    // >= 0
    PhysicalConstants constants;
};

/// Uniform grid r_i = i h, h = r_max/points, Dirichlet at both ends.
/// points < 100 is rejected as a configuration error.
struct GridConfig {
    double r_max;
    int points;
};

/// V(r) + (hbar^2/2mu)(nu^2 - 1/4)/r^2.  Throws std::domain_error for r <= 0.
double effective_potential(const RadialProblem& p, double r);

/// Symmetric tridiagonal operator on the points-1 interior nodes:
/// diag_i = hbar^2/(mu h^2) + V_eff(r_i), off = -hbar^2/(2 mu h^2).
struct Tridiagonal {
    std::vector<double> diag;
    double off;
    double h;
};

Tridiagonal discretize(const RadialProblem& p, const GridConfig& g);

struct EigenResult {
    std::vector<double> eigenvalues;  // strictly ascending
    GridConfig grid;
    double residual_estimate;  // final bisection interval width
};

/// k smallest eigenvalues by bisection on the Sturm sequence count.
/// Deterministic given identical inputs; eigenvalue searches run in
/// parallel under ExecPolicy::Parallel with bit-identical results.
EigenResult lowest_eigenvalues(const Tridiagonal& op, int k,
                               ExecPolicy policy = ExecPolicy::Parallel);
EigenResult lowest_eigenvalues(const RadialProblem& p, const GridConfig& g, int k,
                               ExecPolicy policy = ExecPolicy::Parallel);

/// Textbook oracles: oscillator hbar omega (2 n_r + l + dim/2), Coulomb
/// -mu e^4 / (2 hbar^2 (n_r + l + (dim-1)/2)^2).
double closed_form(const RadialProblem& p, int n_r);

/// Default grids: oscillator r_max = 12 sqrt(hbar/(mu omega)), Coulomb
/// r_max = 40 hbar^2/(mu e^2), 8000 points.
GridConfig default_grid(const RadialProblem& p);

struct DualityRow {
    int m;
    int level;  // Coulomb s-state index n_r; dual oscillator N = 2*level
    double E_numeric;
    double E_closed_form;
    double omega_dual;
    double epsilon_numeric;
    double epsilon_closed_form;
    double rel_err_atom;
    double rel_err_osc;
};

/// One oscillator level N with its best match against 4e^2 over the
/// Coulomb-derived frequencies; odd N must stay unmatched.
struct OscillatorLevelAudit {
    int N;
    double epsilon;      // at the frequency dual to Coulomb level N/2 (even)
                         // or the nearest candidate (odd)
    double best_rel_dev;
    bool matched;
};

struct DualityReport {
    int m;
    double tolerance;
    std::vector<DualityRow> rows;
    std::vector<OscillatorLevelAudit> audit;
    bool flagged;  // any deviation above tolerance (grid insufficiency)
};

struct DualityOptions {
    int levels = 1;
    std::optional<double> r_max;  // override for both systems
    std::optional<int> points;
    double tolerance = 1e-3;      // widened to 1e-2 internally for dim=2 l=0
    ExecPolicy policy = ExecPolicy::Parallel;
};

/// End-to-end check: solves the D-dim Coulomb problem numerically, derives
/// omega for each level, solves the d-dim oscillator at that omega, and
/// verifies epsilon = 4e^2 at the predicted even N (plus the odd-N audit).
DualityReport duality_check(int m, const DualityOptions& opt, const PhysicalConstants& c);

}  // namespace oscatom

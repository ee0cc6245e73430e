#include "oscatom/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "oscatom/family.hpp"

namespace oscatom {

double effective_potential(const RadialProblem& p, double r) {
    if (r <= 0.0) throw std::domain_error("effective_potential: r must be positive");
    if (p.dim < 2) throw std::invalid_argument("radial problem needs dim >= 2");
    if (p.l < 0) throw std::invalid_argument("radial problem needs l >= 0");
    const PhysicalConstants& c = p.constants;
    const double nu = p.l + 0.5 * (p.dim - 2);
    const double centrifugal = (c.hbar * c.hbar) / (2.0 * c.mu) * (nu * nu - 0.25) / (r * r);
    const double v = p.system == RadialSystem::Oscillator
                         ? 0.5 * c.mu * c.omega * c.omega * r * r
                         : -c.e * c.e / r;
    return v + centrifugal;
}

Tridiagonal discretize(const RadialProblem& p, const GridConfig& g) {
    if (g.points < 100)
        throw std::invalid_argument("grid too coarse: need at least 100 points");
    if (g.r_max <= 0.0) throw std::invalid_argument("r_max must be positive");
    const double h = g.r_max / g.points;
    const PhysicalConstants& c = p.constants;
    const double kinetic = c.hbar * c.hbar / (c.mu * h * h);
    const double nu = p.l + 0.5 * (p.dim - 2);
    Tridiagonal op;
    op.h = h;
    op.off = -0.5 * kinetic;
    op.diag.resize(g.points - 1);
    for (int i = 1; i < g.points; ++i)
        op.diag[i - 1] = kinetic + effective_potential(p, i * h);
    if (nu == 0.0) {
        // Critical coupling (dim=2, l=0): the -1/(4r^2) term makes the plain
        // stencil converge only logarithmically.  Use the centrifugal
        // coefficient that annihilates the exact sqrt(r) indicial mode on
        // the discrete grid; it tends to -1/4 away from the origin.
        const double scale = 0.5 * c.hbar * c.hbar / c.mu;
        for (int i = 1; i < g.points; ++i) {
            const double di = static_cast<double>(i);
            const double ci = std::pow(di, 1.5) *
                              (std::sqrt(di + 1.0) - 2.0 * std::sqrt(di) + std::sqrt(di - 1.0));
            const double r = di * h;
            op.diag[i - 1] += scale * (ci + 0.25) / (r * r);
        }
    }
    return op;
}

namespace {

// Number of eigenvalues strictly below lambda, via the Sturm sequence of
// LDL^T pivots.
int count_below(const Tridiagonal& op, double lambda) {
    const double b2 = op.off * op.off;
    const double tiny = std::numeric_limits<double>::min();
    int count = 0;
    double d = op.diag[0] - lambda;
    if (d == 0.0) d = tiny;
    if (d < 0.0) ++count;
    for (std::size_t i = 1; i < op.diag.size(); ++i) {
        d = (op.diag[i] - lambda) - b2 / d;
        if (d == 0.0) d = tiny;
        if (d < 0.0) ++count;
    }
    return count;
}

double bisect_kth(const Tridiagonal& op, int k, double lo, double hi, double* width_out) {
    // invariant: count_below(lo) <= k < count_below(hi)
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (count_below(op, mid) > k)
            hi = mid;
        else
            lo = mid;
        if (hi - lo <= 1e-13 * std::max(1.0, std::abs(lo) + std::abs(hi))) break;
    }
    if (width_out) *width_out = hi - lo;
    return 0.5 * (lo + hi);
}

}  // namespace

EigenResult lowest_eigenvalues(const Tridiagonal& op, int k, ExecPolicy policy) {
    const int n = static_cast<int>(op.diag.size());
    if (k < 1 || k > n)
        throw std::domain_error("lowest_eigenvalues: k must be in 1..operator size");
    const auto [dmin, dmax] = std::minmax_element(op.diag.begin(), op.diag.end());
    const double lo0 = *dmin - 2.0 * std::abs(op.off);
    const double hi0 = *dmax + 2.0 * std::abs(op.off);

    EigenResult res;
    res.eigenvalues.assign(k, 0.0);
    std::vector<double> widths(k, 0.0);
    if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int j = 0; j < k; ++j)
            res.eigenvalues[j] = bisect_kth(op, j, lo0, hi0, &widths[j]);
    } else {
        for (int j = 0; j < k; ++j)
            res.eigenvalues[j] = bisect_kth(op, j, lo0, hi0, &widths[j]);
    }
    res.residual_estimate = *std::max_element(widths.begin(), widths.end());
    res.grid = GridConfig{0.0, n + 1};
    return res;
}

EigenResult lowest_eigenvalues(const RadialProblem& p, const GridConfig& g, int k,
                               ExecPolicy policy) {
    EigenResult res = lowest_eigenvalues(discretize(p, g), k, policy);
    res.grid = g;
    return res;
}

double closed_form(const RadialProblem& p, int n_r) {
    if (n_r < 0) throw std::domain_error("closed_form: n_r must be nonnegative");
    const PhysicalConstants& c = p.constants;
    if (p.system == RadialSystem::Oscillator)
        return c.hbar * c.omega * (2.0 * n_r + p.l + 0.5 * p.dim);
    const double k = n_r + p.l + 0.5 * (p.dim - 1);
    const double e2 = c.e * c.e;
    return -c.mu * e2 * e2 / (2.0 * c.hbar * c.hbar * k * k);
}

GridConfig default_grid(const RadialProblem& p) {
    const PhysicalConstants& c = p.constants;
    if (p.system == RadialSystem::Oscillator)
        return GridConfig{12.0 * std::sqrt(c.hbar / (c.mu * c.omega)), 8000};
    // Low Coulomb states reach out to ~2K^2 Bohr-like radii with
    // K = n_r + l + (dim-1)/2, so the box and the mesh both scale with the
    // dimension and l to hold the dim=3 accuracy of the (40, 8000) default
    // for the first few levels.
    const double a0 = c.hbar * c.hbar / (c.mu * c.e * c.e);
    const double k_max = 0.5 * (p.dim - 1) + p.l + 2.0;
    const double s = std::max(1.0, k_max * k_max / 9.0);
    const double r_max = 40.0 * s * a0;
    int points = 8000;
    if (p.dim == 2)
        points = 64000;  // critical-coupling case converges only ~O(h)
    else if (s > 1.0)
        points = static_cast<int>(16000.0 * s);
    return GridConfig{r_max, points};
}

DualityReport duality_check(int m, const DualityOptions& opt, const PhysicalConstants& c) {
    const FamilyDescriptor fam = family_params(m);
    if (opt.levels < 1) throw std::invalid_argument("duality_check: levels must be >= 1");

    DualityReport rep;
    rep.m = m;
    rep.flagged = false;

    RadialProblem coulomb{RadialSystem::Coulomb, fam.D, 0, c};
    // dim=2 l=0 has the attractive -1/(4r^2) centrifugal term; the scheme
    // converges more slowly there.
    const bool delicate = fam.D == 2;
    rep.tolerance = delicate ? std::max(opt.tolerance, 1e-2) : opt.tolerance;

    GridConfig cg = default_grid(coulomb);
    if (opt.r_max) cg.r_max = *opt.r_max;
    if (opt.points) cg.points = *opt.points;
    const EigenResult atom = lowest_eigenvalues(coulomb, cg, opt.levels, opt.policy);

    const double eps_target = 4.0 * c.e * c.e;
    std::vector<double> omegas(opt.levels);

    for (int level = 0; level < opt.levels; ++level) {
        DualityRow row;
        row.m = m;
        row.level = level;
        row.E_numeric = atom.eigenvalues[level];
        row.E_closed_form = hydrogen_energy(2 * level, m, c);
        const DualParameters dual = dual_parameters(row.E_numeric, c);
        row.omega_dual = dual.omega;
        omegas[level] = dual.omega;

        PhysicalConstants oc = c;
        oc.omega = dual.omega;
        RadialProblem osc{RadialSystem::Oscillator, fam.d, 0, oc};
        GridConfig og = default_grid(osc);
        if (opt.r_max) og.r_max = *opt.r_max;
        if (opt.points) og.points = *opt.points;
        const EigenResult osc_res = lowest_eigenvalues(osc, og, level + 1, opt.policy);

        row.epsilon_numeric = osc_res.eigenvalues[level];
        row.epsilon_closed_form = oscillator_energy(2 * level, m, oc);
        row.rel_err_atom =
            std::abs(row.E_numeric - row.E_closed_form) / std::abs(row.E_closed_form);
        row.rel_err_osc = std::abs(row.epsilon_numeric - eps_target) / eps_target;
        if (row.rel_err_atom > rep.tolerance || row.rel_err_osc > rep.tolerance)
            rep.flagged = true;
        rep.rows.push_back(row);
    }

    // Even/odd audit: oscillator levels N = 0..2*levels-1.  N = 2 n_r + l
    // with l = N mod 2; even N must match 4e^2 at the frequency dual to
    // Coulomb level N/2, odd N must match nothing.
    for (int N = 0; N < 2 * opt.levels; ++N) {
        const int n_r = N / 2;
        const int l = N % 2;
        OscillatorLevelAudit audit{N, 0.0, std::numeric_limits<double>::infinity(), false};
        for (int cand = 0; cand < opt.levels; ++cand) {
            PhysicalConstants oc = c;
            oc.omega = omegas[cand];
            RadialProblem osc{RadialSystem::Oscillator, fam.d, l, oc};
            GridConfig og = default_grid(osc);
            if (opt.r_max) og.r_max = *opt.r_max;
            if (opt.points) og.points = *opt.points;
            const EigenResult r = lowest_eigenvalues(osc, og, n_r + 1, opt.policy);
            const double eps = r.eigenvalues[n_r];
            const double dev = std::abs(eps - eps_target) / eps_target;
            if (dev < audit.best_rel_dev) {
                audit.best_rel_dev = dev;
                audit.epsilon = eps;
            }
        }
        audit.matched = audit.best_rel_dev < rep.tolerance;
        rep.audit.push_back(audit);
    }
    return rep;
}

}  // namespace oscatom

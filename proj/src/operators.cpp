#include "oscatom/operators.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "oscatom/rng.hpp"
#include "oscatom/transforms.hpp"

namespace oscatom {

ScalarField pullback(const FamilyDescriptor& fam, const ScalarField& f_atom) {
    if (f_atom.arity != fam.D)
        throw std::invalid_argument("pullback: field arity " + std::to_string(f_atom.arity) +
                                    " does not match atom dimension " + std::to_string(fam.D));
    auto t = std::make_shared<SignedIndexMatrix>(build_matrix(fam));
    const int D = fam.D;
    auto eval = f_atom.eval;
    return ScalarField{fam.d, [t, D, eval](std::span<const double> u) {
                           const std::vector<double> x = map_point_with(*t, D, u);
                           return eval(x);
                       }};
}

std::vector<NamedField> standard_atom_fields(int D) {
    std::vector<NamedField> out;
    out.push_back({"x1",
                   {D, [](std::span<const double> x) { return x[0]; }},
                   true});
    out.push_back({"|x|^2",
                   {D,
                    [](std::span<const double> x) {
                        double s = 0.0;
                        for (double v : x) s += v * v;
                        return s;
                    }},
                   true});
    out.push_back({"x1*x2",
                   {D, [](std::span<const double> x) { return x[0] * x[1]; }},
                   true});
    out.push_back({"exp(-|x|^2)",
                   {D,
                    [](std::span<const double> x) {
                        double s = 0.0;
                        for (double v : x) s += v * v;
                        return std::exp(-s);
                    }},
                   false});
    return out;
}

namespace {

double central_partial(const ScalarField& f, std::span<const double> p, int j, double h,
                       std::vector<double>& work) {
    work.assign(p.begin(), p.end());
    work[j] = p[j] + h;
    const double fp = f.eval(work);
    work[j] = p[j] - h;
    const double fm = f.eval(work);
    if (!std::isfinite(fp) || !std::isfinite(fm))
        throw std::runtime_error("field evaluation produced a non-finite value");
    return (fp - fm) / (2.0 * h);
}

double central_second(const ScalarField& f, std::span<const double> p, int j, double h,
                      double f0, std::vector<double>& work) {
    work.assign(p.begin(), p.end());
    work[j] = p[j] + h;
    const double fp = f.eval(work);
    work[j] = p[j] - h;
    const double fm = f.eval(work);
    if (!std::isfinite(fp) || !std::isfinite(fm))
        throw std::runtime_error("field evaluation produced a non-finite value");
    return (fp - 2.0 * f0 + fm) / (h * h);
}

// Romberg on an even-power error expansion (both central stencils have
// error series in h^2, h^4, ...).
template <typename Estimate>
double richardson(Estimate est, double h, const DiffScheme& scheme) {
    std::vector<double> row{est(h)};
    if (scheme.kind == DiffKind::Central) return row[0];
    double step = h;
    for (int lvl = 1; lvl <= scheme.extrapolation_levels; ++lvl) {
        step *= 0.5;
        std::vector<double> next(lvl + 1);
        next[0] = est(step);
        double pow4 = 1.0;
        for (int k = 1; k <= lvl; ++k) {
            pow4 *= 4.0;
            next[k] = (pow4 * next[k - 1] - row[k - 1]) / (pow4 - 1.0);
        }
        row = std::move(next);
    }
    return row.back();
}

}  // namespace

double partial_derivative(const ScalarField& f, std::span<const double> p, int j,
                          const DiffScheme& scheme) {
    if (j < 0 || j >= f.arity) throw std::out_of_range("partial_derivative: bad coordinate");
    const double h = scheme.scaled_step(p);
    std::vector<double> work;
    return richardson([&](double s) { return central_partial(f, p, j, s, work); }, h, scheme);
}

std::vector<std::vector<double>> jacobian(const FamilyDescriptor& fam,
                                          std::span<const double> u,
                                          const DiffScheme& scheme) {
    if (static_cast<int>(u.size()) != fam.d)
        throw std::invalid_argument("jacobian: point has wrong dimension");
    std::vector<std::vector<double>> jac(fam.D, std::vector<double>(fam.d));
    for (int i = 0; i < fam.D; ++i) {
        ScalarField xi{fam.d, [fam, i](std::span<const double> v) {
                           return map_point(fam, v)[i];
                       }};
        for (int j = 0; j < fam.d; ++j) jac[i][j] = partial_derivative(xi, u, j, scheme);
    }
    return jac;
}

double phi_apply_with(const SignedIndexMatrix& t, int op_index, const ScalarField& f,
                      std::span<const double> u, const DiffScheme& scheme) {
    const int row = op_index - 1;
    if (row < 0 || row >= t.dim()) throw std::out_of_range("phi_apply: row out of range");
    double acc = 0.0;
    for (int j = 0; j < t.dim(); ++j) {
        const double c = t.value(row, j, u);
        if (c != 0.0) acc += c * partial_derivative(f, u, j, scheme);
    }
    return 0.5 * acc;
}

double phi_apply(const FamilyDescriptor& fam, int op_index, const ScalarField& f,
                 std::span<const double> u, const DiffScheme& scheme) {
    if (op_index <= fam.D || op_index > fam.d)
        throw std::out_of_range("phi_apply: operator index " + std::to_string(op_index) +
                                " outside phi range " + std::to_string(fam.D + 1) + ".." +
                                std::to_string(fam.d));
    if (f.arity != fam.d) throw std::invalid_argument("phi_apply: field arity mismatch");
    const SignedIndexMatrix t = build_matrix(fam);
    return phi_apply_with(t, op_index, f, u, scheme);
}

double phi_squared_apply(const FamilyDescriptor& fam, const ScalarField& f,
                         std::span<const double> u, const DiffScheme& scheme) {
    if (f.arity != fam.d) throw std::invalid_argument("phi_squared_apply: arity mismatch");
    auto t = std::make_shared<SignedIndexMatrix>(build_matrix(fam));
    double acc = 0.0;
    for (int i = fam.D + 1; i <= fam.d; ++i) {
        ScalarField inner{fam.d, [t, i, &f, &scheme](std::span<const double> v) {
                              return phi_apply_with(*t, i, f, v, scheme);
                          }};
        acc += phi_apply_with(*t, i, inner, u, scheme);
    }
    return -acc;  // phi^2 = -(sum of squared real generators)
}

double laplacian(const ScalarField& f, std::span<const double> p, const DiffScheme& scheme) {
    const double h = scheme.scaled_step(p);
    std::vector<double> work;
    const double f0 = f.eval(p);
    if (!std::isfinite(f0)) throw std::runtime_error("field evaluation produced a non-finite value");
    double acc = 0.0;
    for (int j = 0; j < f.arity; ++j)
        acc += richardson([&](double s) { return central_second(f, p, j, s, f0, work); }, h,
                          scheme);
    return acc;
}

LaplacianResidual verify_laplacian_identity(const FamilyDescriptor& fam,
                                            const ScalarField& f_atom,
                                            std::span<const double> u,
                                            const DiffScheme& scheme,
                                            double origin_floor) {
    double u2 = 0.0;
    for (double v : u) u2 += v * v;
    if (u2 < origin_floor)
        throw std::domain_error("verify_laplacian_identity: |u|^2 below the origin floor");

    const std::vector<double> x = map_point(fam, u);
    const double lhs = laplacian(f_atom, x, scheme);

    const ScalarField f_osc = pullback(fam, f_atom);
    const double lap_u = laplacian(f_osc, u, scheme);
    const double phi2 = phi_squared_apply(fam, f_osc, u, scheme);
    const double rhs = lap_u / (4.0 * u2) + phi2 / (u2 * u2);

    const double residual = std::abs(lhs - rhs) / std::max(std::abs(lhs), 1.0);
    return LaplacianResidual{lhs, rhs, residual};
}

ParityReport verify_parity(const ScalarField& f, int samples, std::uint64_t seed,
                           double lo, double hi) {
    ParityReport rep;
    rep.samples = samples;
    std::vector<double> u(f.arity), neg(f.arity);
    for (int s = 0; s < samples; ++s) {
        sample_cube(seed, static_cast<std::uint64_t>(s), u, lo, hi);
        for (int j = 0; j < f.arity; ++j) neg[j] = -u[j];
        const double diff = std::abs(f.eval(u) - f.eval(neg));
        if (diff != 0.0) ++rep.violations;
        rep.max_abs_diff = std::max(rep.max_abs_diff, diff);
    }
    return rep;
}

}  // namespace oscatom

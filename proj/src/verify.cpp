#include "oscatom/verify.hpp"

#include <cmath>

#include "oscatom/rng.hpp"
#include "oscatom/transforms.hpp"

namespace oscatom {

// Every sweep reduces with max over independent per-sample work, so the
// OpenMP path and the serial reference produce bit-identical results.

SweepResult euler_sweep(const FamilyDescriptor& fam, const SignedIndexMatrix& t,
                        int samples, std::uint64_t seed, double lo, double hi,
                        ExecPolicy policy) {
    const int d = fam.d;
    const int D = fam.D;
    double worst = 0.0;
    if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for reduction(max : worst) schedule(static)
        for (int s = 0; s < samples; ++s) {
            std::vector<double> u(d);
            sample_cube(seed, static_cast<std::uint64_t>(s), u, lo, hi);
            double u2 = 0.0;
            for (double v : u) u2 += v * v;
            const std::vector<double> x = map_point_with(t, D, u);
            double x2 = 0.0;
            for (double v : x) x2 += v * v;
            const double dev = std::abs(std::sqrt(x2) - u2) / std::max(u2, 1e-300);
            worst = std::max(worst, dev);
        }
    } else {
        std::vector<double> u(d);
        for (int s = 0; s < samples; ++s) {
            sample_cube(seed, static_cast<std::uint64_t>(s), u, lo, hi);
            double u2 = 0.0;
            for (double v : u) u2 += v * v;
            const std::vector<double> x = map_point_with(t, D, u);
            double x2 = 0.0;
            for (double v : x) x2 += v * v;
            const double dev = std::abs(std::sqrt(x2) - u2) / std::max(u2, 1e-300);
            worst = std::max(worst, dev);
        }
    }
    return SweepResult{worst, samples};
}

SweepResult jacobian_sweep(const FamilyDescriptor& fam, int samples, std::uint64_t seed,
                           const DiffScheme& scheme, ExecPolicy policy) {
    const SignedIndexMatrix t = build_matrix(fam);
    const int d = fam.d;
    const int D = fam.D;
    auto sample_dev = [&](int s) {
        std::vector<double> u(d);
        sample_cube(seed, static_cast<std::uint64_t>(s), u, -2.0, 2.0);
        const auto jac = jacobian(fam, u, scheme);
        double dev = 0.0;
        for (int i = 0; i < D; ++i)
            for (int j = 0; j < d; ++j)
                dev = std::max(dev, std::abs(jac[i][j] - 2.0 * t.value(i, j, u)));
        return dev;
    };
    double worst = 0.0;
    if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for reduction(max : worst) schedule(dynamic)
        for (int s = 0; s < samples; ++s) worst = std::max(worst, sample_dev(s));
    } else {
        for (int s = 0; s < samples; ++s) worst = std::max(worst, sample_dev(s));
    }
    return SweepResult{worst, samples};
}

std::vector<FieldSweepResult> annihilation_sweep(const FamilyDescriptor& fam,
                                                 const SignedIndexMatrix& t, int samples,
                                                 std::uint64_t seed, const DiffScheme& scheme,
                                                 ExecPolicy policy) {
    const auto fields = standard_atom_fields(fam.D);
    std::vector<FieldSweepResult> out;
    for (const auto& nf : fields) {
        const ScalarField f = pullback(fam, nf.field);
        auto sample_dev = [&](int s) {
            std::vector<double> u(fam.d);
            sample_shell(seed, static_cast<std::uint64_t>(s), u, 0.5, 2.0);
            double dev = 0.0;
            for (int i = fam.D + 1; i <= fam.d; ++i)
                dev = std::max(dev, std::abs(phi_apply_with(t, i, f, u, scheme)));
            return dev;
        };
        double worst = 0.0;
        if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for reduction(max : worst) schedule(dynamic)
            for (int s = 0; s < samples; ++s) worst = std::max(worst, sample_dev(s));
        } else {
            for (int s = 0; s < samples; ++s) worst = std::max(worst, sample_dev(s));
        }
        out.push_back({nf.name, worst});
    }
    return out;
}

LaplacianSweepResult laplacian_sweep(const FamilyDescriptor& fam, int samples,
                                     std::uint64_t seed, const DiffScheme& scheme,
                                     ExecPolicy policy) {
    const auto fields = standard_atom_fields(fam.D);
    LaplacianSweepResult out;
    for (const auto& nf : fields) {
        auto sample_res = [&](int s) {
            std::vector<double> u(fam.d);
            sample_shell(seed, static_cast<std::uint64_t>(s), u, 0.5, 2.0);
            return verify_laplacian_identity(fam, nf.field, u, scheme);
        };
        double worst = -1.0;
        int worst_s = 0;
        if (policy == ExecPolicy::Parallel) {
#pragma omp parallel
            {
                double local = -1.0;
                int local_s = 0;
#pragma omp for schedule(dynamic) nowait
                for (int s = 0; s < samples; ++s) {
                    const double r = sample_res(s).residual;
                    if (r > local || (r == local && s < local_s)) {
                        local = r;
                        local_s = s;
                    }
                }
#pragma omp critical
                {
                    if (local > worst || (local == worst && local_s < worst_s)) {
                        worst = local;
                        worst_s = local_s;
                    }
                }
            }
        } else {
            for (int s = 0; s < samples; ++s) {
                const double r = sample_res(s).residual;
                if (r > worst) {
                    worst = r;
                    worst_s = s;
                }
            }
        }
        std::vector<double> u(fam.d);
        sample_shell(seed, static_cast<std::uint64_t>(worst_s), u, 0.5, 2.0);
        const LaplacianResidual rec = verify_laplacian_identity(fam, nf.field, u, scheme);
        out.per_field.push_back({nf.name, worst});
        out.worst.push_back({nf.name, u, rec.lhs, rec.rhs, rec.residual});
    }
    return out;
}

SweepResult parity_sweep(const FamilyDescriptor& fam, int samples, std::uint64_t seed,
                         ExecPolicy policy) {
    const auto fields = standard_atom_fields(fam.D);
    double worst = 0.0;
    for (const auto& nf : fields) {
        const ScalarField f = pullback(fam, nf.field);
        auto sample_dev = [&](int s) {
            std::vector<double> u(fam.d), neg(fam.d);
            sample_cube(seed, static_cast<std::uint64_t>(s), u, -2.0, 2.0);
            for (int j = 0; j < fam.d; ++j) neg[j] = -u[j];
            return std::abs(f.eval(u) - f.eval(neg));
        };
        if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for reduction(max : worst) schedule(static)
            for (int s = 0; s < samples; ++s) worst = std::max(worst, sample_dev(s));
        } else {
            for (int s = 0; s < samples; ++s) worst = std::max(worst, sample_dev(s));
        }
    }
    return SweepResult{worst, samples};
}

}  // namespace oscatom

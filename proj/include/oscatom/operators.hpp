#pragma once

#include <span>
#include <vector>

#include "oscatom/family.hpp"
#include "oscatom/fields.hpp"
#include "oscatom/signed_matrix.hpp"

namespace oscatom {

/// d/dp_j of f at p by central differences (Richardson-extrapolated when
/// the scheme asks for it).  Throws std::runtime_error on non-finite field
/// values.
double partial_derivative(const ScalarField& f, std::span<const double> p, int j,
                          const DiffScheme& scheme);

/// Numerical Jacobian of the coordinate map, D x d.  Contract: equals
/// 2 T_ij(u) entrywise to scheme accuracy.
std::vector<std::vector<double>> jacobian(const FamilyDescriptor& fam,
                                          std::span<const double> u,
                                          const DiffScheme& scheme);

/// The real first-order operator behind phi_i:
///   L_i f(u) = (1/2) sum_j T_ij(u) df/du_j,   i in D+1..d (1-based rows).
/// Throws std::out_of_range for an index outside the phi range.
double phi_apply(const FamilyDescriptor& fam, int op_index, const ScalarField& f,
                 std::span<const double> u, const DiffScheme& scheme);

/// Same, against an explicit template row (loaded matrices).
double phi_apply_with(const SignedIndexMatrix& t, int op_index, const ScalarField& f,
                      std::span<const double> u, const DiffScheme& scheme);

/// phi^2 = -(L_{D+1}^2 + ... + L_d^2); the empty sum (m=1) is 0.
double phi_squared_apply(const FamilyDescriptor& fam, const ScalarField& f,
                         std::span<const double> u, const DiffScheme& scheme);

/// Plain second-difference Laplacian sum_k d^2 f / dp_k^2.
double laplacian(const ScalarField& f, std::span<const double> p, const DiffScheme& scheme);

struct LaplacianResidual {
    double lhs;       // Delta_x F at x(u)
    double rhs;       // (1/4u^2) Delta_u (F o x) + (1/u^4) phi^2 (F o x)
    double residual;  // |lhs - rhs| / max(|lhs|, 1)
};

/// Checks Delta_x = (1/4u^2) Delta_u + (1/u^4) phi^2 on the pullback of F.
/// Throws std::domain_error when |u|^2 falls below origin_floor (the
/// identity degenerates at the origin).
LaplacianResidual verify_laplacian_identity(const FamilyDescriptor& fam,
                                            const ScalarField& f_atom,
                                            std::span<const double> u,
                                            const DiffScheme& scheme,
                                            double origin_floor = 1e-6);

struct ParityReport {
    int samples = 0;
    int violations = 0;
    double max_abs_diff = 0.0;

    bool pass() const { return violations == 0; }
};

/// Checks f(u) == f(-u) over seeded samples; pullbacks must pass exactly.
ParityReport verify_parity(const ScalarField& f, int samples, std::uint64_t seed,
                           double lo = -2.0, double hi = 2.0);

}  // namespace oscatom

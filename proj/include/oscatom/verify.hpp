#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oscatom/family.hpp"
#include "oscatom/fields.hpp"
#include "oscatom/operators.hpp"
#include "oscatom/signed_matrix.hpp"
#include "oscatom/solver.hpp"

namespace oscatom {

/// Sampling sweeps behind `oscatom verify` and the acceptance suite.  Each
/// kernel has an OpenMP path and a serial reference; results are
/// order-independent max reductions, so both paths agree bit for bit.

struct SweepResult {
    double max_dev = 0.0;
    int samples = 0;
};

/// max over samples of | |x| - |u|^2 | / |u|^2, coordinates in [lo, hi].
SweepResult euler_sweep(const FamilyDescriptor& fam, const SignedIndexMatrix& t,
                        int samples, std::uint64_t seed, double lo, double hi,
                        ExecPolicy policy);

/// max-norm deviation of the numerical Jacobian from 2 T(u).
SweepResult jacobian_sweep(const FamilyDescriptor& fam, int samples, std::uint64_t seed,
                           const DiffScheme& scheme, ExecPolicy policy);

struct FieldSweepResult {
    std::string field;
    double max_dev = 0.0;
};

/// max |L_i (F o x)(u)| per field over samples with |u| in [0.5, 2],
/// all phi indices.
std::vector<FieldSweepResult> annihilation_sweep(const FamilyDescriptor& fam,
                                                 const SignedIndexMatrix& t, int samples,
                                                 std::uint64_t seed, const DiffScheme& scheme,
                                                 ExecPolicy policy);

struct LaplacianRecord {
    std::string field;
    std::vector<double> point;
    double lhs;
    double rhs;
    double residual;
};

struct LaplacianSweepResult {
    std::vector<FieldSweepResult> per_field;
    std::vector<LaplacianRecord> worst;  // one record per field (max residual)
};

LaplacianSweepResult laplacian_sweep(const FamilyDescriptor& fam, int samples,
                                     std::uint64_t seed, const DiffScheme& scheme,
                                     ExecPolicy policy);

/// Exact evenness of pullbacks: max |f(u) - f(-u)| over the suite fields.
SweepResult parity_sweep(const FamilyDescriptor& fam, int samples, std::uint64_t seed,
                         ExecPolicy policy);

}  // namespace oscatom

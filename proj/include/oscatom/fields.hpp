#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "oscatom/family.hpp"

namespace oscatom {

/// A smooth real-valued function of a fixed-arity coordinate vector.
/// Evaluation must be deterministic; differentiation is supplied by the
/// operators module.
struct ScalarField {
    int arity = 0;
    std::function<double(std::span<const double>)> eval;
};

enum class DiffKind { Central, CentralExtrapolated };

/// Central differences with optional Richardson extrapolation.  The step is
/// scaled by max(1, |p|) at the evaluation point.
struct DiffScheme {
    DiffKind kind = DiffKind::CentralExtrapolated;
    double step = 1e-4;
    int extrapolation_levels = 1;

    double scaled_step(std::span<const double> p) const {
        double n2 = 0.0;
        for (double v : p) n2 += v * v;
        return step * std::max(1.0, std::sqrt(n2));
    }
};

/// F on atom space composed with the quadratic map: (F o x)(u).
ScalarField pullback(const FamilyDescriptor& fam, const ScalarField& f_atom);

/// The standard verification suite on R^D: x1, |x|^2, x1*x2, exp(-|x|^2).
struct NamedField {
    std::string name;
    ScalarField field;
    bool polynomial;
};
std::vector<NamedField> standard_atom_fields(int D);

}  // namespace oscatom

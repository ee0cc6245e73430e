#pragma once

#include <string>
#include <string_view>

namespace oscatom {

/// One member of the quadratic transformation family R^d -> R^D.
///
/// d = 2^m is the oscillator dimension, D = 2^(m-1)+1 the atom dimension
/// (D = 2 for the planar m=1 case).  d - D equals the number of phi
/// generators carried by the extra rows of the transformation matrix.
struct FamilyDescriptor {
    int m;
    int d;
    int D;

    int phi_count() const { return d - D; }
};

/// Supported families: m=1 (Levi-Civita, 2->2), m=2 (Kustaanheimo-Stiefel,
/// 4->3), m=3 (Hurwitz, 8->5), m=4 (Hurwitz, 16->9).
/// Throws std::invalid_argument for m outside 1..4.
FamilyDescriptor family_params(int m);

/// CLI spelling of a family: "lc", "ks", "hurwitz8", "hurwitz16".
const char* family_name(int m);

/// Inverse of family_name; throws std::invalid_argument on unknown names.
FamilyDescriptor family_by_name(std::string_view name);

}  // namespace oscatom

#pragma once

#include <span>
#include <vector>

#include "oscatom/family.hpp"
#include "oscatom/signed_matrix.hpp"

namespace oscatom {

/// Dimension-tagged coordinate vectors.  Construction validates length
/// against the family, after that they are plain data.
struct OscPoint {
    std::vector<double> coords;

    static OscPoint checked(const FamilyDescriptor& fam, std::vector<double> c);
};

struct AtomPoint {
    std::vector<double> coords;

    static AtomPoint checked(const FamilyDescriptor& fam, std::vector<double> c);
};

/// Full d x d template for the family, rows 1..D realizing the coordinate
/// map and rows D+1..d the phi generators.
///
/// Built by Cayley-Dickson doubling: u = (a, b) over the dim-(d/2) algebra,
/// map rows [L_k b | L_k^T a] (k-th product component of 2 a b~) plus the
/// norm row [a | -b], phi rows [R_k a | R_k b] from the right multiplications
/// by the imaginary units.  A fixed per-family presentation (row order, row
/// signs, and for m=2 a coordinate relabelling) pins the conventional form
/// of the Levi-Civita and Kustaanheimo-Stiefel matrices; the result is
/// frozen in the golden files under data/golden/.
SignedIndexMatrix build_matrix(const FamilyDescriptor& fam);

/// x_i = sum_j T_ij(u) u_j for i = 1..D.  Throws std::invalid_argument on a
/// length mismatch.
std::vector<double> map_point(const FamilyDescriptor& fam, std::span<const double> u);
AtomPoint map_point(const FamilyDescriptor& fam, const OscPoint& u);

/// Same map through an explicit template (used for loaded matrix files).
std::vector<double> map_point_with(const SignedIndexMatrix& t, int map_rows,
                                   std::span<const double> u);

}  // namespace oscatom

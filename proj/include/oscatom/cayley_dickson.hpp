#pragma once

#include <vector>

namespace oscatom {

/// Product of two basis elements: e_i * e_j = sign * e_index.
struct BasisProduct {
    int sign;
    int index;
};

/// Multiplication table of the dim-h Cayley-Dickson algebra over R
/// (h in {1,2,4,8}: reals, complex, quaternions, octonions), generated by
/// doubling with (a,b)(c,d) = (ac - d~b, da + bc~).
///
/// Basis products always land on a single signed basis element, which is
/// what makes the transformation templates signed permutations.
class CayleyDicksonTable {
  public:
    explicit CayleyDicksonTable(int h);

    int dim() const { return h_; }
    BasisProduct mul(int i, int j) const { return table_[i * h_ + j]; }

    /// Column-action matrix of left multiplication by e_k (entries -1,0,+1).
    std::vector<int> left_mul_matrix(int k) const;
    /// Column-action matrix of right multiplication by e_k.
    std::vector<int> right_mul_matrix(int k) const;

  private:
    int h_;
    std::vector<BasisProduct> table_;
};

}  // namespace oscatom

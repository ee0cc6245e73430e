#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace oscatom {

/// One template entry: T_ij(u) = sign * u[src].  sign == 0 marks an empty
/// entry (src is then meaningless).
struct SignedEntry {
    std::int8_t sign = 0;
    std::int16_t src = 0;  // 0-based source coordinate
};

/// A d x d matrix whose entries are signed references to coordinates of u.
/// Row i evaluated at u is the coefficient vector of the linear form
/// sum_j T_ij(u) v_j; the first D rows realize the quadratic map
/// x_i = sum_j T_ij(u) u_j.
///
/// Entries are exact (sign, index) pairs, so the orthogonality and
/// divergence axioms are verified as identities rather than numerically.
class SignedIndexMatrix {
  public:
    explicit SignedIndexMatrix(int dim);

    int dim() const { return dim_; }

    const SignedEntry& at(int row, int col) const { return e_[row * dim_ + col]; }
    void set(int row, int col, int sign, int src);

    /// T_{row,col}(u).
    double value(int row, int col, std::span<const double> u) const {
        const SignedEntry& t = at(row, col);
        return t.sign == 0 ? 0.0 : static_cast<double>(t.sign) * u[t.src];
    }

    /// row_i(u) . v  (for v == u this is the quadratic form of row i).
    double row_apply(int row, std::span<const double> u, std::span<const double> v) const;

    /// Structural invariant: every row references each source coordinate at
    /// most once and holds at most one entry per column slot.
    bool rows_are_signed_permutations() const;

  private:
    int dim_;
    std::vector<SignedEntry> e_;
};

/// A row pair violating sum_j T_ij T_kj = u^2 delta_ik, with the leftover
/// polynomial rendered for the report ("2 u2 u4" and the like).
struct PairFailure {
    int row_i;  // 1-based
    int row_k;
    std::string residual;
};

struct OrthogonalityReport {
    int dim = 0;
    std::vector<PairFailure> failures;

    bool pass() const { return failures.empty(); }
};

/// Exact symbolic check of sum_j T_ij T_kj = u^2 delta_ik over every row
/// pair, including diagonals.  Failures are report content, not errors.
OrthogonalityReport check_orthogonality(const SignedIndexMatrix& t);

struct DivergenceReport {
    std::vector<int> row_sums;    // sum_j dT_ij/du_j, exact integer per row
    std::vector<int> failing_rows;  // 1-based rows with nonzero sum

    bool pass() const { return failing_rows.empty(); }
};

/// Exact divergence check: entry (i,j) contributes its sign iff src == j.
DivergenceReport check_divergence(const SignedIndexMatrix& t);

/// Golden-file format: one line per row, entries as signed 1-based source
/// indices, e.g. "+1 -2 -3 +4" for the row (u1, -u2, -u3, u4).
std::string to_golden(const SignedIndexMatrix& t);
SignedIndexMatrix from_golden(std::istream& in);
SignedIndexMatrix load_golden_file(const std::string& path);

}  // namespace oscatom

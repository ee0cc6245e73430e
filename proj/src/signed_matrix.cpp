#include "oscatom/signed_matrix.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace oscatom {

SignedIndexMatrix::SignedIndexMatrix(int dim) : dim_(dim), e_(dim * dim) {
    if (dim < 1) throw std::invalid_argument("matrix dimension must be positive");
}

void SignedIndexMatrix::set(int row, int col, int sign, int src) {
    if (sign < -1 || sign > 1) throw std::invalid_argument("entry sign must be -1, 0 or +1");
    if (sign != 0 && (src < 0 || src >= dim_))
        throw std::invalid_argument("entry source index out of range");
    e_[row * dim_ + col] = SignedEntry{static_cast<std::int8_t>(sign),
                                       static_cast<std::int16_t>(src)};
}

double SignedIndexMatrix::row_apply(int row, std::span<const double> u,
                                    std::span<const double> v) const {
    double acc = 0.0;
    for (int j = 0; j < dim_; ++j) {
        const SignedEntry& t = at(row, j);
        if (t.sign != 0) acc += static_cast<double>(t.sign) * u[t.src] * v[j];
    }
    return acc;
}

bool SignedIndexMatrix::rows_are_signed_permutations() const {
    for (int i = 0; i < dim_; ++i) {
        std::vector<int> used(dim_, 0);
        for (int j = 0; j < dim_; ++j) {
            const SignedEntry& t = at(i, j);
            if (t.sign != 0 && ++used[t.src] > 1) return false;
        }
    }
    return true;
}

namespace {

std::string render_residual(const std::vector<int>& coeff, int dim) {
    // coeff indexed by a*dim+b, a <= b, monomial u_{a+1} u_{b+1}
    std::ostringstream os;
    bool first = true;
    for (int a = 0; a < dim; ++a) {
        for (int b = a; b < dim; ++b) {
            const int c = coeff[a * dim + b];
            if (c == 0) continue;
            if (!first) os << ' ';
            os << (c > 0 ? '+' : '-') << std::abs(c) << " u" << a + 1 << " u" << b + 1;
            first = false;
        }
    }
    return os.str();
}

}  // namespace

OrthogonalityReport check_orthogonality(const SignedIndexMatrix& t) {
    const int d = t.dim();
    OrthogonalityReport rep;
    rep.dim = d;
    std::vector<int> coeff(d * d);
    for (int i = 0; i < d; ++i) {
        for (int k = i; k < d; ++k) {
            std::fill(coeff.begin(), coeff.end(), 0);
            for (int j = 0; j < d; ++j) {
                const SignedEntry& a = t.at(i, j);
                const SignedEntry& b = t.at(k, j);
                if (a.sign == 0 || b.sign == 0) continue;
                const int lo = std::min(a.src, b.src);
                const int hi = std::max(a.src, b.src);
                coeff[lo * d + hi] += a.sign * b.sign;
            }
            if (i == k) {
                // diagonal must be exactly u^2: coefficient 1 on every u_a^2
                for (int a = 0; a < d; ++a) coeff[a * d + a] -= 1;
            }
            bool clean = true;
            for (int v : coeff)
                if (v != 0) { clean = false; break; }
            if (!clean) {
                if (i == k)  // undo the subtraction for readable output
                    for (int a = 0; a < d; ++a) coeff[a * d + a] += 1;
                rep.failures.push_back({i + 1, k + 1, render_residual(coeff, d)});
            }
        }
    }
    return rep;
}

DivergenceReport check_divergence(const SignedIndexMatrix& t) {
    const int d = t.dim();
    DivergenceReport rep;
    rep.row_sums.resize(d, 0);
    for (int i = 0; i < d; ++i) {
        int s = 0;
        for (int j = 0; j < d; ++j) {
            const SignedEntry& e = t.at(i, j);
            if (e.sign != 0 && e.src == j) s += e.sign;
        }
        rep.row_sums[i] = s;
        if (s != 0) rep.failing_rows.push_back(i + 1);
    }
    return rep;
}

std::string to_golden(const SignedIndexMatrix& t) {
    std::ostringstream os;
    for (int i = 0; i < t.dim(); ++i) {
        for (int j = 0; j < t.dim(); ++j) {
            const SignedEntry& e = t.at(i, j);
            if (j) os << ' ';
            if (e.sign == 0)
                os << " 0";
            else
                os << (e.sign > 0 ? '+' : '-') << e.src + 1;
        }
        os << '\n';
    }
    return os.str();
}

SignedIndexMatrix from_golden(std::istream& in) {
    std::vector<std::vector<int>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::vector<int> row;
        int v;
        while (ls >> v) row.push_back(v);
        if (!ls.eof()) throw std::runtime_error("matrix file: malformed entry in '" + line + "'");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error("matrix file: no rows");
    const int d = static_cast<int>(rows.size());
    SignedIndexMatrix t(d);
    for (int i = 0; i < d; ++i) {
        if (static_cast<int>(rows[i].size()) != d)
            throw std::runtime_error("matrix file: row " + std::to_string(i + 1) +
                                     " has " + std::to_string(rows[i].size()) +
                                     " entries, expected " + std::to_string(d));
        for (int j = 0; j < d; ++j) {
            const int v = rows[i][j];
            if (v == 0) continue;
            if (std::abs(v) > d)
                throw std::runtime_error("matrix file: source index out of range");
            t.set(i, j, v > 0 ? 1 : -1, std::abs(v) - 1);
        }
    }
    return t;
}

SignedIndexMatrix load_golden_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file '" + path + "'");
    return from_golden(in);
}

}  // namespace oscatom

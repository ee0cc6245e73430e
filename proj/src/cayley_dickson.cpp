#include "oscatom/cayley_dickson.hpp"

#include <stdexcept>

namespace oscatom {

namespace {
int conj_sign(int j) { return j == 0 ? 1 : -1; }
}  // namespace

CayleyDicksonTable::CayleyDicksonTable(int h) : h_(h) {
    if (h != 1 && h != 2 && h != 4 && h != 8)
        throw std::invalid_argument("Cayley-Dickson table dimension must be 1, 2, 4 or 8");
    std::vector<BasisProduct> t{{1, 0}};
    int n = 1;
    while (n < h) {
        std::vector<BasisProduct> nt(4 * n * n);
        auto old = [&](int i, int j) { return t[i * n + j]; };
        auto put = [&](int i, int j, BasisProduct p) { nt[i * 2 * n + j] = p; };
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                // (a,0)(c,0) = (ac, 0)
                put(i, j, old(i, j));
                // (a,0)(0,d) = (0, da)
                put(i, n + j, {old(j, i).sign, n + old(j, i).index});
                // (0,b)(c,0) = (0, b c~)
                put(n + i, j, {conj_sign(j) * old(i, j).sign, n + old(i, j).index});
                // (0,b)(0,d) = (-d~ b, 0)
                put(n + i, n + j, {-conj_sign(j) * old(j, i).sign, old(j, i).index});
            }
        }
        t = std::move(nt);
        n *= 2;
    }
    table_ = std::move(t);
}

std::vector<int> CayleyDicksonTable::left_mul_matrix(int k) const {
    std::vector<int> mat(h_ * h_, 0);
    for (int j = 0; j < h_; ++j) {
        const BasisProduct p = mul(k, j);  // e_k e_j = sign e_r
        mat[p.index * h_ + j] = p.sign;
    }
    return mat;
}

std::vector<int> CayleyDicksonTable::right_mul_matrix(int k) const {
    std::vector<int> mat(h_ * h_, 0);
    for (int j = 0; j < h_; ++j) {
        const BasisProduct p = mul(j, k);  // e_j e_k = sign e_r
        mat[p.index * h_ + j] = p.sign;
    }
    return mat;
}

}  // namespace oscatom

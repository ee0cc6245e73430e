#include "oscatom/transforms.hpp"

#include <stdexcept>

#include "oscatom/cayley_dickson.hpp"

namespace oscatom {

OscPoint OscPoint::checked(const FamilyDescriptor& fam, std::vector<double> c) {
    if (static_cast<int>(c.size()) != fam.d)
        throw std::invalid_argument("oscillator point needs " + std::to_string(fam.d) +
                                    " coordinates, got " + std::to_string(c.size()));
    return OscPoint{std::move(c)};
}

AtomPoint AtomPoint::checked(const FamilyDescriptor& fam, std::vector<double> c) {
    if (static_cast<int>(c.size()) != fam.D)
        throw std::invalid_argument("atom point needs " + std::to_string(fam.D) +
                                    " coordinates, got " + std::to_string(c.size()));
    return AtomPoint{std::move(c)};
}

namespace {

// Canonical rows over the split u = (a, b), a = u[0..h), b = u[h..2h).
// Order: product rows A_0..A_{h-1}, norm row N, phi rows P_1..P_{h-1}.
struct RowSpec {
    // entry per column: (sign, src), sign 0 = empty
    std::vector<SignedEntry> cols;
};

std::vector<RowSpec> canonical_rows(int m) {
    const int d = 1 << m;
    const int h = d / 2;
    const CayleyDicksonTable alg(h);
    std::vector<RowSpec> rows;
    rows.reserve(d);
    auto entry = [](int sign, int src) {
        return SignedEntry{static_cast<std::int8_t>(sign), static_cast<std::int16_t>(src)};
    };
    // A_k = [ L_k b | L_k^T a ]: column j<h holds (L_k b)_j, column h+i holds
    // (L_k^T a)_i.  L_k rows/cols are signed unit vectors, so each column is
    // one signed coordinate.
    for (int k = 0; k < h; ++k) {
        const std::vector<int> L = alg.left_mul_matrix(k);
        RowSpec r;
        r.cols.resize(d);
        for (int j = 0; j < h; ++j) {
            for (int s = 0; s < h; ++s)
                if (L[j * h + s] != 0) r.cols[j] = entry(L[j * h + s], h + s);
        }
        for (int i = 0; i < h; ++i) {
            for (int s = 0; s < h; ++s)
                if (L[s * h + i] != 0) r.cols[h + i] = entry(L[s * h + i], s);
        }
        rows.push_back(std::move(r));
    }
    // N = [ a | -b ]
    {
        RowSpec r;
        r.cols.resize(d);
        for (int j = 0; j < h; ++j) r.cols[j] = entry(1, j);
        for (int j = 0; j < h; ++j) r.cols[h + j] = entry(-1, h + j);
        rows.push_back(std::move(r));
    }
    // P_l = [ R_l a | R_l b ], l = 1..h-1
    for (int l = 1; l < h; ++l) {
        const std::vector<int> R = alg.right_mul_matrix(l);
        RowSpec r;
        r.cols.resize(d);
        for (int j = 0; j < h; ++j) {
            for (int s = 0; s < h; ++s) {
                if (R[j * h + s] != 0) {
                    r.cols[j] = entry(R[j * h + s], s);
                    r.cols[h + j] = entry(R[j * h + s], h + s);
                }
            }
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

// Presentation data: ordering (with signs) of the canonical rows, plus a
// coordinate relabelling u_canonical[j] = relabel_sign[j] * u[relabel[j]].
struct Presentation {
    std::vector<int> row_order;   // canonical row index per output row
    std::vector<int> row_sign;
    std::vector<int> relabel;     // identity when empty
    std::vector<int> relabel_sign;
};

Presentation presentation_for(int m) {
    const int d = 1 << m;
    const int h = d / 2;
    Presentation p;
    if (m == 1) {
        p.row_order = {1, 0};  // N, A0: x1 = u1^2 - u2^2, x2 = 2 u1 u2
        p.row_sign = {1, 1};
    } else if (m == 2) {
        // Conventional Kustaanheimo-Stiefel form: norm-type row first, the
        // phi row matching u4 d1 - u3 d2 + u2 d3 - u1 d4.
        p.row_order = {2, 0, 1, 3};  // N, A0, A1, P1
        p.row_sign = {1, 1, 1, -1};
        // u_c = (u1, u4, u2, -u3)
        p.relabel = {0, 3, 1, 2};
        p.relabel_sign = {1, 1, 1, -1};
    } else {
        p.row_order.resize(d);
        p.row_sign.assign(d, 1);
        for (int k = 0; k < h; ++k) p.row_order[k] = k;        // products
        p.row_order[h] = h;                                    // norm row = x_D
        for (int l = 1; l < h; ++l) p.row_order[h + l] = h + l;  // phi rows
    }
    return p;
}

}  // namespace

SignedIndexMatrix build_matrix(const FamilyDescriptor& fam) {
    const int d = fam.d;
    const std::vector<RowSpec> canon = canonical_rows(fam.m);
    const Presentation pres = presentation_for(fam.m);

    SignedIndexMatrix t(d);
    const bool relabel = !pres.relabel.empty();
    for (int out = 0; out < d; ++out) {
        const RowSpec& src_row = canon[pres.row_order[out]];
        const int rs = pres.row_sign[out];
        for (int cj = 0; cj < d; ++cj) {
            const SignedEntry& e = src_row.cols[cj];
            if (e.sign == 0) continue;
            int col = cj, src = e.src, sign = rs * e.sign;
            if (relabel) {
                // canonical column cj corresponds to u[relabel[cj]] with
                // sign relabel_sign[cj]; same for the source coordinate.
                sign *= pres.relabel_sign[cj] * pres.relabel_sign[e.src];
                col = pres.relabel[cj];
                src = pres.relabel[e.src];
            }
            t.set(out, col, sign, src);
        }
    }
    return t;
}

std::vector<double> map_point_with(const SignedIndexMatrix& t, int map_rows,
                                   std::span<const double> u) {
    if (static_cast<int>(u.size()) != t.dim())
        throw std::invalid_argument("map_point: expected " + std::to_string(t.dim()) +
                                    " coordinates, got " + std::to_string(u.size()));
    std::vector<double> x(map_rows);
    for (int i = 0; i < map_rows; ++i) x[i] = t.row_apply(i, u, u);
    return x;
}

std::vector<double> map_point(const FamilyDescriptor& fam, std::span<const double> u) {
    static thread_local int cached_m = 0;
    static thread_local SignedIndexMatrix cached(1);
    if (cached_m != fam.m) {
        cached = build_matrix(fam);
        cached_m = fam.m;
    }
    return map_point_with(cached, fam.D, u);
}

AtomPoint map_point(const FamilyDescriptor& fam, const OscPoint& u) {
    return AtomPoint{map_point(fam, std::span<const double>(u.coords))};
}

}  // namespace oscatom

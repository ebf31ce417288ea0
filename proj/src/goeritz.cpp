#include "pretzel/goeritz.hpp"

#include <vector>

#include "pretzel/errors.hpp"

namespace pretzel {

SymIntMatrix goeritz_matrix(const PretzelParams& params) {
    if (!is_knot(params))
        throw NotAKnot(params.str() + " is a link, not a knot");
    SymIntMatrix m(2);
    m.set(0, 0, params.p + params.q);
    m.set(0, 1, -params.q);
    m.set(1, 1, params.q + params.r);
    return m;
}

int matrix_signature(const SymIntMatrix& m) {
    const int n = m.n;
    std::vector<Rational> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = Rational::of(m.at(i, j));

    auto at = [&](int i, int j) -> Rational& { return a[static_cast<size_t>(i) * n + j]; };
    auto swap_sym = [&](int i, int j) {
        for (int k = 0; k < n; ++k) std::swap(at(i, k), at(j, k));
        for (int k = 0; k < n; ++k) std::swap(at(k, i), at(k, j));
    };
    auto add_row_col = [&](int dst, int src) {
        for (int k = 0; k < n; ++k) at(dst, k) = at(dst, k) + at(src, k);
        for (int k = 0; k < n; ++k) at(k, dst) = at(k, dst) + at(k, src);
    };

    int sig = 0;
    std::vector<Rational> pivot_row(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        if (at(k, k).is_zero()) {
            for (int j = k + 1; j < n; ++j) {
                if (!at(j, j).is_zero()) {
                    swap_sym(k, j);
                    break;
                }
            }
        }
        if (at(k, k).is_zero()) {
            int j = -1;
            for (int c = k + 1; c < n; ++c) {
                if (!at(k, c).is_zero()) {
                    j = c;
                    break;
                }
            }
            if (j < 0) continue; // row k of the trailing block is zero
            // Congruence by (row k += row j, then col k += col j): the
            // diagonal entry becomes 2*A[k][j] != 0, signature unchanged.
            add_row_col(k, j);
        }
        const Rational pivot = at(k, k);
        sig += pivot.sign();
        // Schur complement w.r.t. the pivot; symmetric because the input is.
        for (int j = k; j < n; ++j) pivot_row[j] = at(k, j);
        for (int i = k + 1; i < n; ++i) {
            if (at(i, k).is_zero()) continue;
            const Rational f = at(i, k) / pivot;
            for (int j = k + 1; j < n; ++j) at(i, j) = at(i, j) - f * pivot_row[j];
            at(i, k) = Rational::of(0);
            at(k, i) = Rational::of(0);
        }
    }
    return sig;
}

long long matrix_determinant(const SymIntMatrix& m) {
    const int n = m.n;
    if (n == 0) return 1;
    std::vector<int128> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = m.at(i, j);
    auto at = [&](int i, int j) -> int128& { return a[static_cast<size_t>(i) * n + j]; };

    int sign_flips = 0;
    int128 prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(piv, j));
            ++sign_flips;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                int128 num = checked_mul(at(i, j), at(k, k));
                num = checked_add(num, -checked_mul(at(i, k), at(k, j)));
                at(i, j) = num / prev; // Bareiss: division is exact
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    int128 det = at(n - 1, n - 1);
    if (sign_flips % 2) det = -det;
    return checked_narrow(det, "matrix determinant");
}

namespace {

// Standard diagram trace. Band endpoints: TL, TR (top) and BL, BR (bottom).
// Top arcs join TR(i) to TL(i+1); bottom arcs join BR(i) to BL(i+1); indices
// mod 3. A strand entering at the top runs down through the band, one
// entering at the bottom runs up; an odd twist count swaps left and right.
enum Corner { TL, TR, BL, BR };

struct Transit {
    int band;
    bool down;
};

Corner exit_corner(Corner entry, bool odd) {
    switch (entry) {
        case TL: return odd ? BR : BL;
        case TR: return odd ? BL : BR;
        case BL: return odd ? TR : TL;
        case BR: return odd ? TL : TR;
    }
    return TL;
}

} // namespace

long long gordon_litherland_mu(const PretzelParams& params) {
    if (!is_knot(params))
        throw NotAKnot(params.str() + " is a link, not a knot");
    const long long t[3] = {params.p, params.q, params.r};
    const bool odd[3] = {t[0] % 2 != 0, t[1] % 2 != 0, t[2] % 2 != 0};

    // Walk the knot, recording the vertical direction of each band transit.
    std::vector<Transit> transits[3];
    int band = 0;
    Corner entry = TL;
    for (int step = 0; step < 6; ++step) {
        bool down = (entry == TL || entry == TR);
        transits[band].push_back({band, down});
        Corner exit = exit_corner(entry, odd[band]);
        switch (exit) {
            case TR: band = (band + 1) % 3; entry = TL; break;
            case TL: band = (band + 2) % 3; entry = TR; break;
            case BR: band = (band + 1) % 3; entry = BL; break;
            case BL: band = (band + 2) % 3; entry = BR; break;
        }
    }
    if (!(band == 0 && entry == TL))
        throw InvariantViolation("diagram trace of " + params.str() + " did not close");

    // Crossings in a band whose strands run the same way are the type-b
    // crossings of the white surface; each carries sign(t_i).
    long long mu = 0;
    for (int i = 0; i < 3; ++i) {
        if (transits[i].size() != 2)
            throw InvariantViolation("band visited " + std::to_string(transits[i].size()) +
                                     " times tracing " + params.str());
        if (transits[i][0].down == transits[i][1].down) mu += t[i];
    }
    return mu;
}

long long signature_oracle(const PretzelParams& params) {
    return matrix_signature(goeritz_matrix(params)) - gordon_litherland_mu(params);
}

} // namespace pretzel

#pragma once

// Independent oracles for the test suite. Everything here recomputes results
// by a different algorithm than the library (permutation sums, minor
// enumeration) so agreement is meaningful evidence, not a tautology.

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "cesym/lie_algebra.hpp"

namespace oracle {

using cesym::DualBasis;
using cesym::ExteriorForm;
using cesym::IndexTuple;
using cesym::LieAlgebra;
using cesym::Matrix;
using cesym::Rational;
using cesym::Vector;

/// Determinant by the Leibniz permutation sum; practical for n <= 5.
inline Rational perm_det(const Matrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    Rational det = 0;
    do {
        long inv = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        Rational term = (inv % 2 == 0) ? 1 : -1;
        for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

/// Rank as the size of the largest invertible square submatrix, checked by
/// permutation-sum determinants over all row/column subsets. Exponential;
/// keep inputs at 5x5 or less.
inline std::size_t minor_rank(const Matrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    for (std::size_t k = std::min(R, C); k >= 1; --k) {
        std::vector<bool> pick_rows(R, false), pick_cols(C, false);
        std::fill(pick_rows.begin(), pick_rows.begin() + static_cast<long>(k), true);
        std::sort(pick_rows.begin(), pick_rows.end());
        do {
            std::vector<std::size_t> rows;
            for (std::size_t i = 0; i < R; ++i)
                if (pick_rows[i]) rows.push_back(i);
            std::fill(pick_cols.begin(), pick_cols.end(), false);
            std::fill(pick_cols.begin(), pick_cols.begin() + static_cast<long>(k), true);
            std::sort(pick_cols.begin(), pick_cols.end());
            do {
                std::vector<std::size_t> cols;
                for (std::size_t j = 0; j < C; ++j)
                    if (pick_cols[j]) cols.push_back(j);
                Matrix sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
                if (perm_det(sub) != 0) return k;
            } while (std::next_permutation(pick_cols.begin(), pick_cols.end()));
        } while (std::next_permutation(pick_rows.begin(), pick_rows.end()));
    }
    return 0;
}

/// Wedge by the raw definition: concatenate index tuples, discard repeats,
/// sort with a bubble count for the sign. No merge logic shared with the
/// library implementation.
inline ExteriorForm brute_wedge(const ExteriorForm& f, const ExteriorForm& g) {
    ExteriorForm out(f.basis(), f.degree() + g.degree());
    for (const auto& [ta, ca] : f.terms()) {
        for (const auto& [tb, cb] : g.terms()) {
            IndexTuple cat = ta;
            cat.insert(cat.end(), tb.begin(), tb.end());
            long swaps = 0;
            bool repeat = false;
            for (std::size_t i = 0; i + 1 < cat.size() && !repeat; ++i)
                for (std::size_t j = 0; j + 1 < cat.size() - i; ++j) {
                    if (cat[j] == cat[j + 1]) { repeat = true; break; }
                    if (cat[j] > cat[j + 1]) {
                        std::swap(cat[j], cat[j + 1]);
                        ++swaps;
                    }
                }
            if (repeat) continue;
            Rational prod = ca * cb;
            if (swaps % 2 != 0) prod = -prod;
            out.add_term(cat, prod);
        }
    }
    return out;
}

/// Random rational with small numerator and denominator.
inline Rational random_rational(std::mt19937_64& rng, int num_range = 9, int den_range = 5) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return Rational(num(rng), den(rng));
}

/// Random homogeneous form of the given degree over the basis.
inline ExteriorForm random_form(const DualBasis& basis, std::size_t degree,
                                std::mt19937_64& rng) {
    ExteriorForm f(basis, static_cast<int>(degree));
    for (const auto& t : cesym::degree_tuples(basis.dimension(), degree))
        f.add_term(t, random_rational(rng));
    return f;
}

inline DualBasis numbered_basis(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return DualBasis(names);
}

/// Two-step nilpotent algebra: dim = v + z, brackets of the first v basis
/// vectors land in the central last z coordinates at random. Jacobi holds
/// for free: every double bracket hits the center and dies.
inline LieAlgebra random_two_step(std::size_t v, std::size_t z, std::mt19937_64& rng) {
    const std::size_t n = v + z;
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::map<std::pair<int, int>, Vector> brackets;
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = i + 1; j < v; ++j) {
            Vector val(n);
            for (std::size_t k = v; k < n; ++k) val[k] = coeff(rng);
            brackets[{static_cast<int>(i), static_cast<int>(j)}] = std::move(val);
        }
    return LieAlgebra(numbered_basis(n), std::move(brackets));
}

/// Filiform algebra [x1, xi] = x(i+1) for 2 <= i < n: maximal-class nilpotent.
inline LieAlgebra filiform(std::size_t n) {
    std::map<std::pair<int, int>, Vector> brackets;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        Vector val(n);
        val[i + 1] = 1;
        brackets[{0, static_cast<int>(i)}] = std::move(val);
    }
    return LieAlgebra(numbered_basis(n), std::move(brackets));
}

/// Random unimodular integer matrix built from shears and swaps.
inline Matrix random_unimodular(std::size_t n, std::mt19937_64& rng) {
    Matrix u = Matrix::identity(n);
    if (n < 2) return u;
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> mult(-2, 2);
    for (int step = 0; step < 12; ++step) {
        std::size_t i = idx(rng), j = idx(rng);
        if (i == j) continue;
        const int c = mult(rng);
        for (std::size_t k = 0; k < n; ++k) u(i, k) += Rational(c) * u(j, k);
    }
    return u;
}

/// Transport the bracket along the basis change given by the columns of p:
/// [y_i, y_j] = p^{-1} [p e_i, p e_j]. Jacobi validity is preserved.
inline LieAlgebra change_basis(const LieAlgebra& L, const Matrix& p) {
    const std::size_t n = L.dimension();
    std::map<std::pair<int, int>, Vector> brackets;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vector w = L.bracket(p.column(i), p.column(j));
            const auto coords = cesym::solve_in_span(p, w);
            if (!coords) throw std::logic_error("change_basis: matrix not invertible");
            brackets[{static_cast<int>(i), static_cast<int>(j)}] = *coords;
        }
    return LieAlgebra(L.basis(), std::move(brackets));
}

} // namespace oracle

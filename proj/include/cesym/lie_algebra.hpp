#pragma once

#include <iterator>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cesym/exterior.hpp"

namespace cesym {

/// Lie algebra presented by structure constants over a fixed dual basis:
/// [X_i, X_j] = sum_k c^k_ij X_k, stored for i < j only (antisymmetry is
/// built in). The Jacobi identity is NOT enforced at construction; it is a
/// separate, exactly testable property (jacobi_check).
class LieAlgebra {
public:
    explicit LieAlgebra(DualBasis basis,
                        std::map<std::pair<int, int>, Vector> brackets = {})
        : basis_(std::move(basis)), brackets_(std::move(brackets)) {
        const int n = static_cast<int>(basis_.dimension());
        for (auto it = brackets_.begin(); it != brackets_.end();) {
            const auto& [ij, v] = *it;
            if (ij.first < 0 || ij.second <= ij.first || ij.second >= n)
                throw std::invalid_argument("LieAlgebra: bracket indices must satisfy 0 <= i < j < n");
            if (v.size() != basis_.dimension())
                throw std::invalid_argument("LieAlgebra: bracket value has wrong length");
            bool zero = true;
            for (const auto& c : v)
                if (c != 0) { zero = false; break; }
            it = zero ? brackets_.erase(it) : std::next(it);
        }
    }

    const DualBasis& basis() const { return basis_; }
    std::size_t dimension() const { return basis_.dimension(); }

    /// [X_i, X_j] as a coefficient vector over the basis; antisymmetric in (i, j).
    Vector bracket(int i, int j) const {
        Vector out(dimension());
        if (i == j) return out;
        const bool flip = i > j;
        if (flip) std::swap(i, j);
        auto it = brackets_.find({i, j});
        if (it == brackets_.end()) return out;
        for (std::size_t k = 0; k < out.size(); ++k)
            out[k] = flip ? -it->second[k] : it->second[k];
        return out;
    }

    Rational structure_constant(int i, int j, int k) const {
        return bracket(i, j)[static_cast<std::size_t>(k)];
    }

    /// Bracket extended bilinearly to coefficient vectors.
    Vector bracket(const Vector& x, const Vector& y) const {
        const std::size_t n = dimension();
        Vector out(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (y[j] == 0) continue;
                const Vector b = bracket(static_cast<int>(i), static_cast<int>(j));
                for (std::size_t k = 0; k < n; ++k)
                    if (b[k] != 0) out[k] += x[i] * y[j] * b[k];
            }
        }
        return out;
    }

    bool operator==(const LieAlgebra&) const = default;

private:
    DualBasis basis_;
    std::map<std::pair<int, int>, Vector> brackets_; // keys i < j, values nonzero
};

struct JacobiViolation {
    int i, j, k;
    Vector residual; // [X_i,[X_j,X_k]] + [X_j,[X_k,X_i]] + [X_k,[X_i,X_j]]
};

/// Exact Jacobi test over all index triples. Violations are data, not errors.
inline std::vector<JacobiViolation> jacobi_check(const LieAlgebra& L) {
    const int n = static_cast<int>(L.dimension());
    std::vector<JacobiViolation> violations;
    auto unit = [&](int i) {
        Vector v(static_cast<std::size_t>(n));
        v[static_cast<std::size_t>(i)] = 1;
        return v;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Vector r = L.bracket(unit(i), L.bracket(j, k));
                const Vector s = L.bracket(unit(j), L.bracket(k, i));
                const Vector t = L.bracket(unit(k), L.bracket(i, j));
                bool zero = true;
                for (std::size_t m = 0; m < r.size(); ++m) {
                    r[m] += s[m] + t[m];
                    if (r[m] != 0) zero = false;
                }
                if (!zero) violations.push_back({i, j, k, std::move(r)});
            }
    return violations;
}

/// Differential of a form under the convention d xi(X, Y) = -xi([X, Y]),
/// extended to all degrees by the graded Leibniz rule. This is the direct
/// term-by-term path; CEDifferential holds the same map as matrices.
inline ExteriorForm differential_form(const LieAlgebra& L, const ExteriorForm& f) {
    const DualBasis& basis = L.basis();
    const int n = static_cast<int>(L.dimension());

    // d on generators: d xi^k = - sum_{i<j} c^k_ij xi^i ^ xi^j
    std::vector<ExteriorForm> d1;
    d1.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        ExteriorForm dk(basis, 2);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const Rational c = L.structure_constant(i, j, k);
                if (c != 0) dk.add_term(IndexTuple{i, j}, -c);
            }
        d1.push_back(std::move(dk));
    }

    ExteriorForm out(basis, f.degree() + 1);
    for (const auto& [tuple, coeff] : f.terms()) {
        for (std::size_t p = 0; p < tuple.size(); ++p) {
            // prefix of degree p slides past d, contributing (-1)^p
            ExteriorForm piece = d1[static_cast<std::size_t>(tuple[p])];
            if (piece.is_zero()) continue;
            IndexTuple prefix(tuple.begin(), tuple.begin() + static_cast<long>(p));
            IndexTuple suffix(tuple.begin() + static_cast<long>(p) + 1, tuple.end());
            ExteriorForm term = wedge(ExteriorForm::term(basis, prefix, 1),
                                      wedge(piece, ExteriorForm::term(basis, suffix, 1)));
            Rational c = coeff;
            if (p % 2 == 1) c = -c;
            for (const auto& [t, tc] : term.terms()) out.add_term(t, tc * c);
        }
    }
    return out;
}

/// The Chevalley-Eilenberg differential as one exact matrix per degree,
/// d_k : Lambda^k -> Lambda^(k+1) in lexicographic tuple coordinates.
struct CEDifferential {
    DualBasis basis;
    std::vector<Matrix> d; // index k = 0..n; d[n] has zero rows

    std::size_t top_degree() const { return d.empty() ? 0 : d.size() - 1; }

    const Matrix& matrix(std::size_t k) const { return d.at(k); }

    ExteriorForm apply(const ExteriorForm& f) const {
        const std::size_t n = basis.dimension();
        const auto k = static_cast<std::size_t>(f.degree());
        if (k >= n) return ExteriorForm(basis, f.degree() + 1);
        return form_from_vector(basis, k + 1, d[k].apply(to_vector(f)));
    }
};

/// Builds the per-degree matrices of d from the structure constants and
/// verifies d_{k+1} d_k = 0 exactly. Requires the Jacobi identity.
inline CEDifferential ce_differential(const LieAlgebra& L) {
    if (!jacobi_check(L).empty())
        throw JacobiError("structure constants violate the Jacobi identity "
                          "(run jacobi_check for the failing triples)");

    const std::size_t n = L.dimension();
    CEDifferential ce{L.basis(), {}};
    ce.d.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        const auto tuples = degree_tuples(n, k);
        const std::size_t out_dim =
            (k + 1 <= n) ? degree_tuples(n, k + 1).size() : 0;
        Matrix m(out_dim, tuples.size());
        for (std::size_t col = 0; col < tuples.size(); ++col) {
            if (k + 1 > n) continue;
            const ExteriorForm img =
                differential_form(L, ExteriorForm::term(L.basis(), tuples[col], 1));
            const Vector v = to_vector(img);
            for (std::size_t row = 0; row < out_dim; ++row) m(row, col) = v[row];
        }
        ce.d.push_back(std::move(m));
    }

    // d^2 = 0 checked per basis form; the matrix product of two dense
    // differentials is far more expensive than applying d twice to each
    // (sparse) generator image.
    for (std::size_t k = 0; k + 1 <= n; ++k)
        for (const auto& t : degree_tuples(n, k)) {
            const ExteriorForm img =
                differential_form(L, ExteriorForm::term(L.basis(), t, 1));
            if (!differential_form(L, img).is_zero())
                throw std::logic_error("ce_differential: d^2 != 0 despite Jacobi");
        }
    return ce;
}

/// Recovers structure constants from the differentials of the degree-1
/// generators: c^k_ij = -(coefficient of xi^i ^ xi^j in d xi^k). The induced
/// d must square to zero on every generator, otherwise the data does not
/// present a Lie algebra and the failing generator is reported.
inline LieAlgebra from_dual_presentation(const DualBasis& basis,
                                         const std::map<std::string, ExteriorForm>& diffs) {
    const int n = static_cast<int>(basis.dimension());
    std::map<std::pair<int, int>, Vector> brackets;
    for (const auto& [name, form] : diffs) {
        const auto k = basis.index_of(name);
        if (!k) throw std::invalid_argument("from_dual_presentation: unknown generator '" + name + "'");
        if (form.degree() != 2)
            throw std::invalid_argument("from_dual_presentation: differential of '" + name +
                                        "' is not a 2-form");
        if (form.basis() != basis)
            throw std::invalid_argument("from_dual_presentation: differential of '" + name +
                                        "' uses a different basis");
        for (const auto& [t, c] : form.terms()) {
            auto& v = brackets.try_emplace({t[0], t[1]}, Vector(static_cast<std::size_t>(n)))
                          .first->second;
            v[*k] = -c;
        }
    }
    LieAlgebra L(basis, std::move(brackets));

    for (int k = 0; k < n; ++k) {
        const ExteriorForm dxk =
            differential_form(L, ExteriorForm::generator(basis, static_cast<std::size_t>(k)));
        if (!differential_form(L, dxk).is_zero())
            throw NotLiePresentationError(basis.names[static_cast<std::size_t>(k)]);
    }
    return L;
}

} // namespace cesym

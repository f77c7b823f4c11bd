#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cesym/lie_algebra.hpp"

namespace cesym {

/// Generators of a group acting on u* in the fixed basis. Only the generator
/// matrices are stored; every fixed-point computation below uses common
/// kernels of (g - I), never group averaging, so the group itself may be
/// infinite as long as its fixed points agree with those of the generators.
struct ActionGenerators {
    std::vector<Matrix> generators;

    explicit ActionGenerators(std::vector<Matrix> gens, std::size_t n)
        : generators(std::move(gens)) {
        for (const Matrix& g : generators) {
            if (g.rows() != n || g.cols() != n)
                throw ActionError("action generator is not " + std::to_string(n) + "x" +
                                  std::to_string(n));
            if (determinant(g) == 0)
                throw ActionError("action generator is singular");
        }
    }

    bool empty() const { return generators.empty(); }
};

/// Multiplicative extension of g to Lambda^k: the image of a basis monomial
/// is the wedge of the images of its factors. k = 0 gives the 1x1 identity.
inline Matrix extend_action(const Matrix& g, const DualBasis& basis, std::size_t k) {
    const std::size_t n = basis.dimension();
    if (g.rows() != n || g.cols() != n)
        throw ActionError("extend_action: generator shape does not match basis");
    const auto tuples = degree_tuples(n, k);
    Matrix out(tuples.size(), tuples.size());
    for (std::size_t col = 0; col < tuples.size(); ++col) {
        ExteriorForm img = ExteriorForm::unit(basis);
        for (int idx : tuples[col]) {
            ExteriorForm gi(basis, 1);
            for (std::size_t r = 0; r < n; ++r)
                gi.add_term(IndexTuple{static_cast<int>(r)}, g(r, static_cast<std::size_t>(idx)));
            img = wedge(img, gi);
        }
        const Vector v = to_vector(img);
        for (std::size_t row = 0; row < tuples.size(); ++row) out(row, col) = v[row];
    }
    return out;
}

struct EquivarianceFailure {
    std::size_t generator_index;
    Matrix residual; // (Lambda^2 g) d_1 - d_1 g, nonzero
};

/// A generator acts by Lie algebra automorphisms iff it commutes with d in
/// degree 1; higher degrees follow by the Leibniz rule but are re-checked
/// anyway as a redundancy guard. nullopt means every generator passes.
inline std::optional<EquivarianceFailure> check_equivariance(const CEDifferential& ce,
                                                             const ActionGenerators& action) {
    const std::size_t n = ce.basis.dimension();
    if (n == 0) return std::nullopt;
    for (std::size_t gi = 0; gi < action.generators.size(); ++gi) {
        const Matrix& g = action.generators[gi];
        const Matrix residual = extend_action(g, ce.basis, 2) * ce.d[1] - ce.d[1] * g;
        if (!residual.is_zero()) return EquivarianceFailure{gi, residual};
        for (std::size_t k = 2; k < n; ++k) {
            const Matrix gk = extend_action(g, ce.basis, k);
            const Matrix gk1 = extend_action(g, ce.basis, k + 1);
            if (!(gk1 * ce.d[k] - ce.d[k] * gk).is_zero())
                throw std::logic_error("check_equivariance: degree-1 commutation holds but a "
                                       "higher degree fails (Leibniz extension broken)");
        }
    }
    return std::nullopt;
}

/// A d-closed subspace of the ambient complex, one inclusion matrix per
/// degree (columns = subspace basis in lexicographic tuple coordinates) plus
/// the differentials rewritten in subspace coordinates. The defining
/// certificate d_k B_k = B_{k+1} dbar_k is checked exactly at construction.
struct Subcomplex {
    CEDifferential ambient;
    std::vector<Matrix> inclusion; // B_k, k = 0..n
    std::vector<Matrix> d;         // dbar_k : dim_k -> dim_{k+1}; dbar_n has zero rows

    std::size_t top_degree() const { return ambient.basis.dimension(); }
    std::size_t dimension(std::size_t k) const {
        return k < inclusion.size() ? inclusion[k].cols() : 0;
    }

    std::vector<std::size_t> dimensions() const {
        std::vector<std::size_t> out;
        out.reserve(inclusion.size());
        for (const Matrix& b : inclusion) out.push_back(b.cols());
        return out;
    }

    /// Subspace coordinates -> ambient exterior form.
    ExteriorForm ambient_form(std::size_t k, const Vector& coords) const {
        return form_from_vector(ambient.basis, k, inclusion[k].apply(coords));
    }

    /// Ambient form -> subspace coordinates; nullopt when f lies outside.
    std::optional<Vector> coords_of(const ExteriorForm& f) const {
        const auto k = static_cast<std::size_t>(f.degree());
        if (k > top_degree()) return Vector{};
        return solve_in_span(inclusion[k], to_vector(f));
    }

    bool contains(const ExteriorForm& f) const { return coords_of(f).has_value(); }
};

namespace detail {

/// Assembles restricted differentials for the span of the given inclusion
/// columns and certifies d-closedness.
inline Subcomplex make_subcomplex(CEDifferential ce, std::vector<Matrix> inclusion) {
    const std::size_t n = ce.basis.dimension();
    std::vector<Matrix> d;
    d.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        const std::size_t sub_dim = inclusion[k].cols();
        const std::size_t next_dim = (k + 1 <= n) ? inclusion[k + 1].cols() : 0;
        Matrix dbar(next_dim, sub_dim);
        for (std::size_t j = 0; j < sub_dim; ++j) {
            if (k + 1 > n) break;
            const Vector image = ce.d[k].apply(inclusion[k].column(j));
            const auto coords = solve_in_span(inclusion[k + 1], image);
            if (!coords)
                throw std::logic_error("make_subcomplex: subspace is not d-closed");
            for (std::size_t i = 0; i < next_dim; ++i) dbar(i, j) = (*coords)[i];
        }
        d.push_back(std::move(dbar));
    }
    // the certificate, exact in every degree
    for (std::size_t k = 0; k + 1 <= n; ++k)
        if (!(ce.d[k] * inclusion[k] == inclusion[k + 1] * d[k]))
            throw std::logic_error("make_subcomplex: certificate d B != B dbar");
    return Subcomplex{std::move(ce), std::move(inclusion), std::move(d)};
}

} // namespace detail

/// The whole complex viewed as a Subcomplex with identity inclusions.
inline Subcomplex full_complex(CEDifferential ce) {
    const std::size_t n = ce.basis.dimension();
    std::vector<Matrix> inclusion;
    inclusion.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        inclusion.push_back(Matrix::identity(degree_tuples(n, k).size()));
    // under the identity inclusion dbar is d itself and the certificate
    // d B = B dbar holds literally; routing this through make_subcomplex
    // would solve a dense linear system per basis column for nothing
    std::vector<Matrix> d = ce.d;
    return Subcomplex{std::move(ce), std::move(inclusion), std::move(d)};
}

/// Fixed subcomplex of the action: per degree the common kernel of
/// (Lambda^k g - I) over all generators. Throws EquivarianceError when some
/// generator does not act by automorphisms.
inline Subcomplex fixed_subcomplex(const CEDifferential& ce, const ActionGenerators& action) {
    if (const auto failure = check_equivariance(ce, action))
        throw EquivarianceError("action generator " + std::to_string(failure->generator_index) +
                                " does not commute with the differential");

    const std::size_t n = ce.basis.dimension();
    std::vector<Matrix> inclusion;
    inclusion.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        const std::size_t dim_k = degree_tuples(n, k).size();
        if (action.empty()) {
            inclusion.push_back(Matrix::identity(dim_k));
            continue;
        }
        Matrix stacked(0, dim_k);
        for (const Matrix& g : action.generators) {
            const Matrix gk = extend_action(g, ce.basis, k) - Matrix::identity(dim_k);
            stacked = stacked.rows() == 0 ? gk : vstack(stacked, gk);
        }
        inclusion.push_back(Matrix::from_columns(dim_k, kernel_basis(stacked)));
    }
    return detail::make_subcomplex(ce, std::move(inclusion));
}

} // namespace cesym

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cesym/action.hpp"

namespace cesym {

/// Cohomology of a Subcomplex with exact Betti numbers and deterministic
/// representatives. Per degree k the columns of representatives[k] are closed
/// forms (in subcomplex coordinates) spanning a complement of the exact forms
/// inside ker d_k; exact_echelon[k] is the canonical echelon basis of
/// im d_{k-1}, so ker d_k = span(exact_echelon[k]) + span(representatives[k]).
struct CohomologyResult {
    Subcomplex complex;
    std::vector<std::size_t> betti;
    std::vector<Matrix> representatives; // R_k: dim_k x betti_k
    std::vector<Matrix> exact_echelon;   // E_k: dim_k x rank d_{k-1}

    std::size_t top_degree() const { return complex.top_degree(); }
};

/// Exact cohomology of the complex. Representatives are chosen by extending
/// the echelon basis of im d_{k-1} to an echelon basis of ker d_k; the added
/// vectors are the representatives, so output is reproducible across runs.
inline CohomologyResult cohomology(Subcomplex complex) {
    const std::size_t n = complex.top_degree();
    for (std::size_t k = 0; k + 1 <= n; ++k)
        if (!(complex.d[k + 1] * complex.d[k]).is_zero())
            throw JacobiError("cohomology: differentials do not satisfy d^2 = 0");

    CohomologyResult res{std::move(complex), {}, {}, {}};
    long euler_betti = 0, euler_dims = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        const std::size_t dim_k = res.complex.dimension(k);

        // echelon basis of the kernel: canonical among all spanning sets
        const Matrix kernel =
            column_space_echelon(Matrix::from_columns(dim_k, kernel_basis(res.complex.d[k])));
        const Matrix exact =
            (k == 0) ? Matrix(dim_k, 0) : column_space_echelon(res.complex.d[k - 1]);

        const std::size_t b = kernel.cols() - exact.cols();

        // extend the exact echelon basis through the kernel, greedily keeping
        // the kernel vectors that raise the rank
        Matrix span = exact;
        std::size_t span_rank = rank_of(span);
        std::vector<Vector> reps;
        for (std::size_t j = 0; j < kernel.cols(); ++j) {
            const Matrix trial = hstack(span, Matrix::from_columns(dim_k, {kernel.column(j)}));
            const std::size_t r = rank_of(trial);
            if (r > span_rank) {
                reps.push_back(kernel.column(j));
                span = trial;
                span_rank = r;
            }
        }
        if (reps.size() != b)
            throw std::logic_error("cohomology: representative count disagrees with rank-nullity");

        res.betti.push_back(b);
        res.representatives.push_back(Matrix::from_columns(dim_k, reps));
        res.exact_echelon.push_back(exact);

        const long sign = (k % 2 == 0) ? 1 : -1;
        euler_betti += sign * static_cast<long>(b);
        euler_dims += sign * static_cast<long>(dim_k);
    }
    if (euler_betti != euler_dims)
        throw std::logic_error("cohomology: Euler characteristic mismatch");
    return res;
}

/// Exactness test for a closed form of the complex. Returns a preimage g
/// with dg = f when f is exact, nullopt otherwise. Raises Error when f is
/// not closed or does not lie in the complex.
inline std::optional<ExteriorForm> is_exact(const Subcomplex& complex, const ExteriorForm& f) {
    const auto k = static_cast<std::size_t>(f.degree());
    const auto coords = complex.coords_of(f);
    if (!coords) throw Error("is_exact: form does not lie in the complex");
    if (k <= complex.top_degree())
        for (const Rational& e : complex.d[k].apply(*coords))
            if (e != 0) throw Error("is_exact: form is not closed");

    if (f.is_zero()) return ExteriorForm(complex.ambient.basis, f.degree() == 0 ? 0 : f.degree() - 1);
    if (k == 0) return std::nullopt; // nonzero degree-0 forms are never exact

    const auto pre = solve_in_span(complex.d[k - 1], *coords);
    if (!pre) return std::nullopt;
    return complex.ambient_form(k - 1, *pre);
}

/// A cohomology class, stored as coordinates over the representative columns
/// of its degree.
struct CohomologyClass {
    std::size_t degree = 0;
    Vector coords; // over representatives[degree]

    bool is_zero() const {
        for (const auto& c : coords)
            if (c != 0) return false;
        return true;
    }

    bool operator==(const CohomologyClass&) const = default;
};

/// Reduces a closed form of the complex to its class. ker d_k decomposes as
/// span(E_k) + span(R_k); the R-part of the solution is the class.
inline CohomologyClass class_of(const CohomologyResult& H, const ExteriorForm& f) {
    const auto k = static_cast<std::size_t>(f.degree());
    if (k > H.top_degree()) return CohomologyClass{k, {}};
    const auto coords = H.complex.coords_of(f);
    if (!coords) throw Error("class_of: form does not lie in the complex");
    for (const Rational& e : H.complex.d[k].apply(*coords))
        if (e != 0) throw Error("class_of: form is not closed");

    const auto sol = solve_in_span(hstack(H.representatives[k], H.exact_echelon[k]), *coords);
    if (!sol) throw std::logic_error("class_of: closed form outside ker-basis span");
    CohomologyClass cls{k, Vector(H.betti[k])};
    for (std::size_t i = 0; i < H.betti[k]; ++i) cls.coords[i] = (*sol)[i];
    return cls;
}

/// The distinguished representative of a class (ambient form).
inline ExteriorForm representative_form(const CohomologyResult& H, const CohomologyClass& cls) {
    if (cls.degree > H.top_degree())
        return ExteriorForm(H.complex.ambient.basis, static_cast<int>(cls.degree));
    if (cls.coords.size() != H.betti[cls.degree])
        throw std::invalid_argument("representative_form: coordinate count mismatch");
    return H.complex.ambient_form(cls.degree, H.representatives[cls.degree].apply(cls.coords));
}

/// Cup product on classes: wedge the representatives, reduce modulo exact
/// forms. Degrees beyond the top give the zero class.
inline CohomologyClass cup(const CohomologyResult& H, const CohomologyClass& a,
                           const CohomologyClass& b) {
    const std::size_t k = a.degree + b.degree;
    if (k > H.top_degree()) return CohomologyClass{k, {}};
    const ExteriorForm product = wedge(representative_form(H, a), representative_form(H, b));
    return class_of(H, product);
}

} // namespace cesym

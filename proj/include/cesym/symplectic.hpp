#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "cesym/cohomology.hpp"

namespace cesym {

/// Hard cap on the symbolic monomial count C(b+n-1, n); expansions that could
/// exceed it are refused up front instead of thrashing.
inline constexpr std::uint64_t kExpansionLimit = 2'000'000;

/// Homogeneous degree-n polynomial in variables c_1..c_b indexed by a basis
/// of closed 2-forms: P(c) = coefficient of the volume form in (sum c_i w_i)^n.
/// Only nonzero coefficients are stored; exponent keys are length-b vectors
/// summing to n, ordered lexicographically.
struct TopPowerPolynomial {
    std::size_t variables = 0;
    std::size_t degree = 0;
    std::map<std::vector<unsigned>, Rational> coefficients;

    bool is_zero() const { return coefficients.empty(); }

    Rational evaluate(const Vector& c) const {
        if (c.size() != variables)
            throw std::invalid_argument("TopPowerPolynomial::evaluate: wrong arity");
        Rational total = 0;
        for (const auto& [exps, coeff] : coefficients) {
            Rational term = coeff;
            for (std::size_t i = 0; i < variables && term != 0; ++i)
                for (unsigned e = 0; e < exps[i]; ++e) term *= c[i];
            total += term;
        }
        return total;
    }
};

namespace detail {

inline Integer multinomial(std::size_t n, const std::vector<unsigned>& parts) {
    Integer num = 1;
    for (std::size_t i = 2; i <= n; ++i) num *= Integer(i);
    for (unsigned p : parts)
        for (unsigned i = 2; i <= p; ++i) num /= Integer(i);
    return num;
}

/// Shared expansion driver: walks all multisets (k_1..k_b) with sum n,
/// wedging incrementally so a vanishing partial product prunes the whole
/// subtree, and hands every surviving full product to `emit`.
template <typename Emit>
void expand_products(const std::vector<ExteriorForm>& forms, std::size_t n, Emit&& emit) {
    const std::size_t b = forms.size();
    if (b == 0 && n > 0) return;

    const Integer bound = binomial(b + n - 1, n);
    if (bound > kExpansionLimit)
        throw ExpansionLimitError("top-power expansion would need " + bound.str() +
                                  " monomials (limit " + std::to_string(kExpansionLimit) + ")");

    std::vector<unsigned> exps(b, 0);
    const ExteriorForm unit =
        b > 0 ? ExteriorForm::unit(forms[0].basis()) : ExteriorForm();

    auto rec = [&](auto&& self, std::size_t i, std::size_t remaining,
                   const ExteriorForm& partial) -> void {
        if (remaining == 0) {
            emit(exps, partial);
            return;
        }
        if (i == b) return;
        // k_i = 0 first, then wedge one more copy per step
        self(self, i + 1, remaining, partial);
        ExteriorForm acc = partial;
        for (unsigned k = 1; k <= remaining; ++k) {
            acc = wedge(acc, forms[i]);
            if (acc.is_zero()) break; // further copies stay zero
            exps[i] = k;
            self(self, i + 1, remaining - k, acc);
        }
        exps[i] = 0;
    };
    if (n == 0)
        emit(exps, unit);
    else
        rec(rec, 0, n, unit);
}

} // namespace detail

/// Basis of the closed 2-forms of the complex (exact kernel of d_2), as
/// ambient forms, in the deterministic order of the kernel construction.
inline std::vector<ExteriorForm> closed_two_forms(const Subcomplex& complex) {
    std::vector<ExteriorForm> out;
    if (complex.top_degree() < 2) return out;
    for (const Vector& v : kernel_basis(complex.d[2])) out.push_back(complex.ambient_form(2, v));
    return out;
}

/// Symbolic expansion of the volume coefficient of (sum c_i w_i)^n. Each
/// monomial coefficient is multinomial(n; k) times the volume coefficient of
/// the corresponding wedge product, computed exactly.
inline TopPowerPolynomial top_power_polynomial(const std::vector<ExteriorForm>& basis,
                                               std::size_t n) {
    TopPowerPolynomial P{basis.size(), n, {}};
    if (basis.empty() && n > 0) return P;

    std::optional<IndexTuple> volume;
    if (!basis.empty()) {
        const std::size_t dim = basis[0].basis().dimension();
        if (dim != 2 * n) throw OddDimensionError();
        volume.emplace(dim);
        for (std::size_t i = 0; i < dim; ++i) (*volume)[i] = static_cast<int>(i);
        for (const ExteriorForm& w : basis)
            if (w.degree() != 2 || w.basis() != basis[0].basis())
                throw std::invalid_argument("top_power_polynomial: basis entry is not a 2-form "
                                            "over the common dual basis");
    }

    detail::expand_products(basis, n, [&](const std::vector<unsigned>& exps,
                                          const ExteriorForm& product) {
        const Rational vol = volume ? product.coefficient(*volume) : Rational(1);
        if (vol == 0) return;
        P.coefficients[exps] = Rational(detail::multinomial(n, exps)) * vol;
    });
    return P;
}

namespace detail {

/// Restriction of P to the first `keep` variables obtained by extracting the
/// coefficient of x_keep^e .. (a slice, not an evaluation).
inline TopPowerPolynomial slice_last(const TopPowerPolynomial& P, unsigned e) {
    TopPowerPolynomial Q{P.variables - 1, P.degree, {}};
    for (const auto& [exps, c] : P.coefficients) {
        if (exps.back() != e) continue;
        Q.coefficients[{exps.begin(), exps.end() - 1}] = c;
    }
    return Q;
}

/// Point with P(point) != 0 by iterated univariate specialization: fix the
/// last variable's exponent slice that is nonzero, recurse on the rest, then
/// pick the last coordinate among 0..degree (a nonzero univariate of degree
/// <= n cannot vanish on n+1 points). Unconditional given P != 0.
inline Vector specialize_nonzero(const TopPowerPolynomial& P) {
    if (P.is_zero()) throw std::logic_error("specialize_nonzero: zero polynomial");
    if (P.variables == 0) return {};

    unsigned pick = 0;
    for (const auto& [exps, c] : P.coefficients) pick = std::max(pick, exps.back());
    const Vector head = specialize_nonzero(slice_last(P, pick));

    for (unsigned x = 0; x <= P.degree; ++x) {
        Vector c = head;
        c.push_back(Rational(x));
        if (P.evaluate(c) != 0) return c;
    }
    throw std::logic_error("specialize_nonzero: no root-free point found");
}

/// Deterministic scan of the integer points with max-norm exactly `box`,
/// each coordinate running through 0, 1, -1, ..., box, -box with the last
/// coordinate moving fastest. Returns the first point where P is nonzero.
inline std::optional<Vector> scan_box(const TopPowerPolynomial& P, int box,
                                      std::uint64_t& budget) {
    const std::size_t b = P.variables;
    std::vector<int> digit(b, 0); // index into the 0,1,-1,... sequence
    const int radix = 2 * box + 1;
    auto value = [](int d) { return (d % 2 == 1) ? (d + 1) / 2 : -d / 2; };

    while (true) {
        if (budget == 0) return std::nullopt;
        --budget;
        int norm = 0;
        for (int d : digit) norm = std::max(norm, std::abs(value(d)));
        if (norm == box) { // inner points were scanned with the smaller boxes
            Vector c(b);
            for (std::size_t i = 0; i < b; ++i) c[i] = value(digit[i]);
            if (P.evaluate(c) != 0) return c;
        }
        // odometer, last coordinate fastest
        std::size_t i = b;
        while (i > 0) {
            if (++digit[i - 1] < radix) break;
            digit[i - 1] = 0;
            --i;
        }
        if (i == 0) return std::nullopt;
    }
}

/// P with every variable outside `support` set to zero, reindexed to the
/// support. Keeps exactly the monomials whose exponents live inside it.
inline TopPowerPolynomial restrict_to(const TopPowerPolynomial& P,
                                      const std::vector<std::size_t>& support) {
    TopPowerPolynomial Q{support.size(), P.degree, {}};
    for (const auto& [exps, c] : P.coefficients) {
        unsigned total = 0;
        for (unsigned e : exps) total += e;
        std::vector<unsigned> small(support.size());
        unsigned kept = 0;
        for (std::size_t s = 0; s < support.size(); ++s) {
            small[s] = exps[support[s]];
            kept += small[s];
        }
        if (kept == total) Q.coefficients[std::move(small)] = c;
    }
    return Q;
}

inline Vector find_nonzero_point(const TopPowerPolynomial& P, std::uint64_t seed) {
    if (P.variables == 0) return {};

    // Scan monomial supports instead of the full coordinate box: restricting
    // P to the support of one of its own monomials keeps that monomial, so
    // the restriction is again nonzero, and it has at most `degree` variables.
    // A nonzero polynomial with per-variable degree <= n cannot vanish on all
    // of {-3..3}^k once n < 7, and the origin is a root of any homogeneous
    // P anyway, so for n <= 6 the very first support already yields a point.
    std::uint64_t budget = 250'000;
    std::set<std::vector<std::size_t>> seen;
    for (const auto& [exps, coeff] : P.coefficients) {
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > 0) support.push_back(i);
        if (!seen.insert(support).second) continue;

        const TopPowerPolynomial Q = restrict_to(P, support);
        for (int box = 1; box <= 3 && budget > 0; ++box) {
            if (auto q = scan_box(Q, box, budget)) {
                Vector c(P.variables, Rational(0));
                for (std::size_t s = 0; s < support.size(); ++s)
                    c[support[s]] = (*q)[s];
                return c;
            }
        }
        if (budget == 0) break;
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-99, 99);
    std::uniform_int_distribution<int> den(1, 9);
    for (int t = 0; t < 200; ++t) {
        Vector c(P.variables);
        for (auto& x : c) x = Rational(num(rng), den(rng));
        if (P.evaluate(c) != 0) return c;
    }

    return specialize_nonzero(P);
}

} // namespace detail

/// Separate exact verification of a single candidate: closedness of w and
/// the volume coefficient of w^n, computed by repeated wedging (independent
/// of the symbolic expansion path). Failures are data, not errors.
struct FormCheck {
    bool closed = false;
    bool nondegenerate = false;
    Rational certificate; // volume coefficient of w^n (0 unless nondegenerate)
    ExteriorForm d_omega; // exact residual witnessing a closedness failure
};

inline FormCheck check_symplectic_form(const Subcomplex& complex, const ExteriorForm& omega) {
    const std::size_t dim = complex.top_degree();
    if (dim > 0 && omega.degree() != 2)
        throw std::invalid_argument("check_symplectic_form: candidate must be a 2-form");
    FormCheck out;
    out.d_omega = complex.ambient.apply(omega);
    out.closed = out.d_omega.is_zero();

    if (dim % 2 == 0 && dim > 0) {
        const ExteriorForm top = power(omega, dim / 2);
        IndexTuple volume(dim);
        for (std::size_t i = 0; i < dim; ++i) volume[i] = static_cast<int>(i);
        out.certificate = top.coefficient(volume);
    } else if (dim == 0) {
        out.certificate = 1; // the empty wedge is the unit volume of a point
    }
    out.nondegenerate = out.certificate != 0;
    return out;
}

/// Verdict of the decision procedure, with its exact evidence either way.
struct SymplecticVerdict {
    enum class Kind { Symplectic, NotSymplectic };

    Kind kind = Kind::NotSymplectic;
    std::vector<ExteriorForm> closed_basis; // basis the polynomial is written in
    TopPowerPolynomial polynomial;          // identically zero iff NotSymplectic

    // populated for Symplectic verdicts:
    ExteriorForm witness;        // sum of witness_coefficients . closed_basis
    Vector witness_coefficients; // rational point with polynomial != 0
    Rational certificate;        // volume coefficient of witness^n, nonzero

    bool symplectic() const { return kind == Kind::Symplectic; }
};

/// Decides whether the complex carries a closed 2-form w with w^n a nonzero
/// volume form, n = dim/2. The symbolic polynomial is always computed, so
/// the verdict is unconditional: identically zero proves non-existence, any
/// nonzero coefficient guarantees the witness search terminates. Witnesses
/// are re-verified through the independent repeated-wedge path; NotSymplectic
/// verdicts are cross-checked against direct wedge powers at random points.
inline SymplecticVerdict decide(const Subcomplex& complex, std::uint64_t seed = 20250816) {
    const std::size_t dim = complex.top_degree();
    if (dim % 2 != 0) throw OddDimensionError();
    const std::size_t n = dim / 2;

    SymplecticVerdict v;
    v.closed_basis = closed_two_forms(complex);
    v.polynomial = top_power_polynomial(v.closed_basis, n);
    const std::size_t b = v.closed_basis.size();

    if (v.polynomial.is_zero()) {
        // corroborate the symbolic zero against the direct wedge path
        std::mt19937_64 rng(0x5eedc0de);
        std::uniform_int_distribution<int> num(-20, 20);
        for (int t = 0; t < 100; ++t) {
            ExteriorForm w(complex.ambient.basis, 2);
            for (const ExteriorForm& base : v.closed_basis)
                w = w + base.scaled(Rational(num(rng)));
            if (check_symplectic_form(complex, w).certificate != 0)
                throw std::logic_error("decide: zero polynomial contradicted by direct wedging");
        }
        v.kind = SymplecticVerdict::Kind::NotSymplectic;
        return v;
    }

    v.kind = SymplecticVerdict::Kind::Symplectic;
    v.witness_coefficients = detail::find_nonzero_point(v.polynomial, seed);
    v.witness = ExteriorForm(complex.ambient.basis, 2);
    for (std::size_t i = 0; i < b; ++i)
        v.witness = v.witness + v.closed_basis[i].scaled(v.witness_coefficients[i]);
    v.certificate = v.polynomial.evaluate(v.witness_coefficients);

    const FormCheck check = check_symplectic_form(complex, v.witness);
    if (!check.closed || !check.nondegenerate || check.certificate != v.certificate)
        throw std::logic_error("decide: witness failed independent re-verification");
    return v;
}

/// Cohomology-level analogue: is there a degree-2 class with nonzero n-th
/// cup power in the top degree? Runs the same polynomial machinery over the
/// H^2 representatives, reducing each wedge product modulo exact forms.
struct CSymplecticResult {
    bool csymplectic = false;
    TopPowerPolynomial class_polynomial; // over the H^2 representative basis
    std::optional<CohomologyClass> witness_class;
};

inline CSymplecticResult csymplectic_cohomology_check(const CohomologyResult& H,
                                                      std::uint64_t seed = 20250816) {
    const std::size_t dim = H.top_degree();
    if (dim % 2 != 0) throw OddDimensionError();
    const std::size_t n = dim / 2;

    CSymplecticResult out;
    if (dim == 0) { // a point: the unit class has [1]^0 = [1] != 0
        out.csymplectic = true;
        out.witness_class = CohomologyClass{0, {}};
        out.class_polynomial = TopPowerPolynomial{0, 0, {{{}, Rational(1)}}};
        return out;
    }

    std::vector<ExteriorForm> reps;
    if (dim >= 2)
        for (std::size_t j = 0; j < H.betti[2]; ++j)
            reps.push_back(H.complex.ambient_form(2, H.representatives[2].column(j)));

    TopPowerPolynomial P{reps.size(), n, {}};
    const std::size_t top_betti = H.betti[dim];
    if (top_betti > 0 && !reps.empty()) {
        detail::expand_products(reps, n, [&](const std::vector<unsigned>& exps,
                                             const ExteriorForm& product) {
            // class-level coefficient: reduce the product modulo exact forms
            const CohomologyClass cls = class_of(H, product);
            if (cls.is_zero()) return;
            P.coefficients[exps] = Rational(detail::multinomial(n, exps)) * cls.coords[0];
        });
    }
    out.class_polynomial = P;
    out.csymplectic = !P.is_zero();
    if (out.csymplectic) {
        const Vector c = detail::find_nonzero_point(P, seed);
        out.witness_class = CohomologyClass{2, c};
    }
    return out;
}

} // namespace cesym

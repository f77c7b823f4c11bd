#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cesym/builtin.hpp"
#include "cesym/symplectic.hpp"
#include "oracles.hpp"

using namespace cesym;

namespace {

Subcomplex full_sub(const std::string& name) {
    return full_complex(ce_differential(builtin_file(name).to_lie_algebra()));
}

Subcomplex invariant_sub(const std::string& name) {
    const auto file = builtin_file(name);
    const auto ce = ce_differential(file.to_lie_algebra());
    return fixed_subcomplex(ce, file.to_action());
}

// 2-dim solvable algebra with d beta = -alpha^beta; not unimodular
LieAlgebra aff2() {
    return LieAlgebra(DualBasis({"alpha", "beta"}), {{{0, 1}, Vector{0, 1}}});
}

ExteriorForm combine(const std::vector<ExteriorForm>& basis, const Vector& c) {
    ExteriorForm w(basis.at(0).basis(), 2);
    for (std::size_t i = 0; i < basis.size(); ++i) w = w + basis[i].scaled(c[i]);
    return w;
}

} // namespace

TEST_CASE("closed 2-forms of the Kodaira-Thurston complexes") {
    const auto full = closed_two_forms(full_sub("kt"));
    const DualBasis& b = full.at(0).basis();
    REQUIRE(full.size() == 5);
    CHECK(full[0] == ExteriorForm::term(b, {0, 1}, 1));
    CHECK(full[1] == ExteriorForm::term(b, {0, 2}, 1));
    CHECK(full[2] == ExteriorForm::term(b, {0, 3}, 1));
    CHECK(full[3] == ExteriorForm::term(b, {1, 2}, 1));
    CHECK(full[4] == ExteriorForm::term(b, {1, 3}, 1));

    const auto invariant = closed_two_forms(invariant_sub("paper-gamma"));
    REQUIRE(invariant.size() == 1);
    CHECK(invariant[0] == ExteriorForm::term(b, {0, 1}, 1));
}

TEST_CASE("top power polynomial of the Kodaira-Thurston algebra") {
    const auto P = top_power_polynomial(closed_two_forms(full_sub("kt")), 2);
    CHECK(P.variables == 5);
    CHECK(P.degree == 2);
    // (c1 ab + c2 ag + c3 ad + c4 bg + c5 bd)^2 = 2(c3 c4 - c2 c5) vol
    const std::map<std::vector<unsigned>, Rational> expected{
        {{0, 0, 1, 1, 0}, 2},
        {{0, 1, 0, 0, 1}, -2},
    };
    CHECK(P.coefficients == expected);
    CHECK(P.evaluate(Vector{0, 0, 1, 1, 0}) == 2);
    CHECK(P.evaluate(Vector{3, 1, 2, 5, 7}) == 2 * (2 * 5 - 1 * 7));
    CHECK_THROWS_AS(P.evaluate(Vector{1, 2}), std::invalid_argument);

    // the invariant complex retains only alpha^beta, whose square vanishes
    CHECK(top_power_polynomial(closed_two_forms(invariant_sub("paper-gamma")), 2).is_zero());
}

TEST_CASE("polynomial evaluation agrees with direct wedge powers") {
    std::mt19937_64 rng(53);
    for (const auto& name : builtin_names()) {
        const auto sub = full_sub(name);
        const std::size_t dim = sub.top_degree();
        if (dim % 2 != 0) continue;
        const auto basis = closed_two_forms(sub);
        const auto P = top_power_polynomial(basis, dim / 2);
        for (int t = 0; t < 12; ++t) {
            Vector c(basis.size());
            for (auto& x : c) x = oracle::random_rational(rng, 6, 3);
            const auto check = check_symplectic_form(sub, combine(basis, c));
            CHECK(P.evaluate(c) == check.certificate);
        }
    }
}

TEST_CASE("check_symplectic_form reports closedness and the volume certificate") {
    const auto kt = full_sub("kt");
    const DualBasis& b = kt.ambient.basis;

    const auto good = check_symplectic_form(
        kt, ExteriorForm::term(b, {0, 3}, 1) + ExteriorForm::term(b, {1, 2}, 1));
    CHECK(good.closed);
    CHECK(good.nondegenerate);
    CHECK(good.certificate == 2);

    const auto degenerate = check_symplectic_form(kt, ExteriorForm::term(b, {0, 1}, 1));
    CHECK(degenerate.closed);
    CHECK_FALSE(degenerate.nondegenerate);
    CHECK(degenerate.certificate == 0);

    const auto unclosed = check_symplectic_form(kt, ExteriorForm::term(b, {2, 3}, 1));
    CHECK_FALSE(unclosed.closed);
    CHECK(unclosed.d_omega == ExteriorForm::term(b, {0, 1, 3}, -1));
    CHECK(unclosed.certificate == 0);

    CHECK_THROWS_AS(check_symplectic_form(kt, ExteriorForm::generator(b, 0)),
                    std::invalid_argument);

    // odd-dimensional complexes never produce a volume certificate
    const auto odd = full_sub("heis3");
    const auto flat = check_symplectic_form(
        odd, ExteriorForm::term(odd.ambient.basis, {0, 1}, 1));
    CHECK(flat.closed);
    CHECK_FALSE(flat.nondegenerate);
}

TEST_CASE("hand-built symplectic form on the 6-dim nilpotent complex") {
    const auto sub = full_sub("iwasawa");
    const DualBasis& b = sub.ambient.basis;
    // zeta1^theta1 - zeta2^theta2 + eta1^eta2
    ExteriorForm omega(b, 2);
    omega.set_coefficient({0, 4}, 1);
    omega.set_coefficient({1, 5}, -1);
    omega.set_coefficient({2, 3}, 1);

    const auto check = check_symplectic_form(sub, omega);
    CHECK(check.closed);
    CHECK(check.nondegenerate);
    CHECK(check.certificate == 6);
}

TEST_CASE("decide finds the canonical witness on the Kodaira-Thurston algebra") {
    const auto verdict = decide(full_sub("kt"));
    REQUIRE(verdict.symplectic());
    CHECK(verdict.witness_coefficients == Vector{0, 0, 1, 1, 0});
    CHECK(verdict.witness == ExteriorForm::term(verdict.witness.basis(), {0, 3}, 1) +
                                 ExteriorForm::term(verdict.witness.basis(), {1, 2}, 1));
    CHECK(verdict.certificate == 2);
    CHECK(format_form(verdict.witness) == "alpha^delta + beta^gamma");

    // the box scan fires before any seeded randomness: seed-independent here
    CHECK(decide(full_sub("kt"), 1).witness_coefficients == verdict.witness_coefficients);
    CHECK(decide(full_sub("kt"), 999).witness_coefficients == verdict.witness_coefficients);
}

TEST_CASE("decide across the built-in algebras") {
    CHECK(decide(full_sub("torus-2")).symplectic());
    CHECK(decide(full_sub("torus-4")).symplectic());
    CHECK(decide(full_sub("torus-6")).symplectic());
    CHECK(decide(full_sub("iwasawa")).symplectic());
    CHECK(decide(full_sub("h-product")).symplectic());
    CHECK(decide(full_sub("paper-gamma")).symplectic()); // full complex ignores the action

    const auto twisted = decide(full_sub("h-twisted"));
    CHECK_FALSE(twisted.symplectic());
    CHECK(twisted.polynomial.is_zero());

    const auto invariant = decide(invariant_sub("paper-gamma"));
    CHECK_FALSE(invariant.symplectic());
    CHECK(invariant.polynomial.is_zero());

    CHECK_THROWS_AS(decide(full_sub("heis3")), OddDimensionError);
}

TEST_CASE("every Symplectic verdict carries an exactly verified witness") {
    for (const auto& name : builtin_names()) {
        const auto sub = full_sub(name);
        if (sub.top_degree() % 2 != 0) continue;
        const auto verdict = decide(sub);
        if (!verdict.symplectic()) continue;
        const auto check = check_symplectic_form(sub, verdict.witness);
        CHECK(check.closed);
        CHECK(check.nondegenerate);
        CHECK(check.certificate == verdict.certificate);
        CHECK(verdict.certificate != 0);
        CHECK(verdict.polynomial.evaluate(verdict.witness_coefficients) == verdict.certificate);
    }
}

TEST_CASE("expansion guardrail refuses astronomically large symbolic powers") {
    // 12-dim abelian: 66 closed 2-forms, C(71,6) monomial bound
    const LieAlgebra big(oracle::numbered_basis(12));
    CHECK_THROWS_AS(decide(full_complex(ce_differential(big))), ExpansionLimitError);
}

TEST_CASE("cohomology-level check on complexes with and without classes") {
    const auto kt = csymplectic_cohomology_check(cohomology(full_sub("kt")));
    CHECK(kt.csymplectic);
    REQUIRE(kt.witness_class.has_value());
    CHECK_FALSE(kt.witness_class->is_zero());

    const auto torus = csymplectic_cohomology_check(cohomology(full_sub("torus-4")));
    CHECK(torus.csymplectic);

    const auto invariant = csymplectic_cohomology_check(cohomology(invariant_sub("paper-gamma")));
    CHECK_FALSE(invariant.csymplectic);
    CHECK(invariant.class_polynomial.is_zero());
    CHECK_FALSE(invariant.witness_class.has_value());

    CHECK_THROWS_AS(csymplectic_cohomology_check(cohomology(full_sub("heis3"))),
                    OddDimensionError);
}

TEST_CASE("class polynomial matches cup powers computed through class_of") {
    std::mt19937_64 rng(59);
    for (const std::string name : {"kt", "torus-4"}) {
        const auto H = cohomology(full_sub(name));
        const auto result = csymplectic_cohomology_check(H);
        std::vector<ExteriorForm> reps;
        for (std::size_t j = 0; j < H.betti[2]; ++j)
            reps.push_back(H.complex.ambient_form(2, H.representatives[2].column(j)));
        for (int t = 0; t < 10; ++t) {
            Vector c(reps.size());
            for (auto& x : c) x = oracle::random_rational(rng, 4, 2);
            const auto cls = class_of(H, power(combine(reps, c), H.top_degree() / 2));
            REQUIRE(cls.coords.size() == 1);
            CHECK(cls.coords[0] == result.class_polynomial.evaluate(c));
        }
    }
}

TEST_CASE("a cochain-level witness does not imply one at the cohomology level") {
    const auto sub = full_complex(ce_differential(aff2()));
    const auto verdict = decide(sub);
    REQUIRE(verdict.symplectic());
    CHECK(verdict.certificate == 1); // alpha^beta itself is the volume

    const auto H = cohomology(sub);
    CHECK(H.betti == std::vector<std::size_t>{1, 1, 0});
    CHECK_FALSE(csymplectic_cohomology_check(H).csymplectic);
}

TEST_CASE("cohomology yes always forces a cochain yes on the built-ins") {
    for (const auto& name : builtin_names()) {
        const auto sub = full_sub(name);
        if (sub.top_degree() % 2 != 0) continue;
        const auto coh = csymplectic_cohomology_check(cohomology(sub));
        if (coh.csymplectic) CHECK(decide(sub).symplectic());
    }
}

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cesym/algebra_file.hpp"

namespace cesym {

namespace detail {

inline DifferentialTerm term(const char* coeff, const char* left, const char* right) {
    return DifferentialTerm{parse_rational(coeff), left, right};
}

inline json meta(const char* description, bool hull, const char* notes = nullptr) {
    json m = json::object();
    m["description"] = description;
    m["algebraic_hull"] = hull;
    if (notes) m["notes"] = notes;
    return m;
}

} // namespace detail

/// The example library. Every algebra is given by its dual presentation;
/// "algebraic_hull": true in the metadata marks inputs whose (invariant)
/// complex computes the cohomology of a compact manifold, so symplectic
/// verdicts carry over to that manifold.
inline std::vector<std::string> builtin_names() {
    return {"torus-2", "torus-3", "torus-4", "torus-5", "torus-6", "heis3",
            "kt",      "paper-gamma", "iwasawa", "h-twisted", "h-product"};
}

inline AlgebraFile builtin_file(std::string_view name) {
    using detail::term;
    AlgebraFile f;
    f.name = std::string(name);

    if (name.substr(0, 6) == "torus-" && name.size() == 7 && name[6] >= '2' && name[6] <= '6') {
        const int n = name[6] - '0';
        for (int i = 1; i <= n; ++i) f.generators.push_back("e" + std::to_string(i));
        f.metadata = detail::meta("abelian algebra of the n-torus; every form is closed", true);
        return f;
    }

    if (name == "heis3") {
        f.generators = {"alpha", "beta", "gamma"};
        f.differential = {{"gamma", {term("-1", "alpha", "beta")}}};
        f.metadata = detail::meta("3-dim Heisenberg algebra (odd-dimensional: no symplectic "
                                  "question)", true);
        return f;
    }

    if (name == "kt" || name == "paper-gamma") {
        f.generators = {"alpha", "beta", "gamma", "delta"};
        f.differential = {{"gamma", {term("-1", "alpha", "beta")}}};
        if (name == "kt") {
            f.metadata = detail::meta(
                "heis3 + R, the nilpotent algebra of the Kodaira-Thurston manifold", true);
        } else {
            Matrix g = Matrix::identity(4);
            g(0, 0) = -1;
            g(1, 1) = -1;
            f.action_generators = {g};
            f.metadata = detail::meta(
                "kt with the order-2 action negating alpha, beta and fixing gamma, delta; "
                "the invariant complex computes the cohomology of a 4-dim solvmanifold",
                true,
                "the full complex carries a symplectic form while the invariant complex does "
                "not: the modeled solvmanifold is not symplectic");
        }
        return f;
    }

    if (name == "iwasawa") {
        f.generators = {"zeta1", "zeta2", "eta1", "eta2", "theta1", "theta2"};
        f.differential = {
            {"theta1", {term("-1", "zeta1", "eta1"), term("1", "zeta2", "eta2")}},
            {"theta2", {term("-1", "zeta1", "eta2"), term("-1", "zeta2", "eta1")}},
        };
        f.metadata = detail::meta(
            "complex Heisenberg algebra underlying the Iwasawa manifold", true);
        return f;
    }

    if (name == "h-twisted" || name == "h-product") {
        f.generators = {"sigma", "tau", "zeta1", "zeta2", "eta1", "eta2", "theta1", "theta2"};
        const bool twisted = (name == "h-twisted");
        if (twisted) {
            f.differential = {
                {"zeta1", {term("1", "tau", "zeta2")}},
                {"zeta2", {term("-1", "tau", "zeta1")}},
                {"eta1", {term("-1", "tau", "eta2")}},
                {"eta2", {term("1", "tau", "eta1")}},
                {"theta1", {term("-1", "zeta1", "eta1"), term("1", "zeta2", "eta2")}},
                {"theta2", {term("-1", "zeta1", "eta2"), term("-1", "zeta2", "eta1")}},
            };
            f.metadata = detail::meta(
                "8-dim solvable algebra: R acting on R x (complex Heisenberg) by opposite "
                "rotations on the zeta and eta planes; no closed 2-form has nonzero 4th power",
                false,
                "not an algebraic-hull datum: the verdict is about invariant forms of this "
                "algebra only. The lattice quotient it models is finitely covered by the "
                "h-product nilmanifold, which IS symplectic.");
        } else {
            f.differential = {
                {"theta1", {term("-1", "zeta1", "eta1"), term("1", "zeta2", "eta2")}},
                {"theta2", {term("-1", "zeta1", "eta2"), term("-1", "zeta2", "eta1")}},
            };
            f.metadata = detail::meta(
                "R^2 x (complex Heisenberg), the nilpotent algebra of a product nilmanifold",
                true);
        }
        return f;
    }

    throw ParseError("unknown built-in '" + std::string(name) + "' (see `examples list`)");
}

inline bool is_builtin(std::string_view name) {
    for (const auto& n : builtin_names())
        if (n == name) return true;
    return false;
}

} // namespace cesym

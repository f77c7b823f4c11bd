// Decide a built-in algebra from C++, without the CLI: load, validate,
// compute Betti numbers and the symplectic verdict on the requested mode.
#include <iostream>

#include "cesym/report.hpp"

int main(int argc, char** argv) {
    const std::string name = argc > 1 ? argv[1] : "kt";
    const bool invariant = argc > 2 && std::string(argv[2]) == "--invariant";

    const cesym::AlgebraFile file = cesym::builtin_file(name);
    const cesym::LieAlgebra L = file.to_lie_algebra();
    const cesym::CEDifferential ce = cesym::ce_differential(L);
    const cesym::Subcomplex complex =
        invariant && file.has_action() ? cesym::fixed_subcomplex(ce, file.to_action())
                                       : cesym::full_complex(ce);

    const cesym::CohomologyResult H = cesym::cohomology(complex);
    std::cout << name << (invariant ? " (invariant)" : " (full)") << "\n  betti:";
    for (std::size_t b : H.betti) std::cout << " " << b;
    std::cout << "\n";

    if (complex.top_degree() % 2 != 0) {
        std::cout << "  symplectic: no question in odd dimension\n";
        return 0;
    }
    const cesym::SymplecticVerdict v = cesym::decide(complex);
    if (v.symplectic())
        std::cout << "  symplectic: yes, witness " << cesym::format_form(v.witness)
                  << ", certificate " << cesym::format_rational(v.certificate) << "\n";
    else
        std::cout << "  symplectic: no, top-power polynomial vanishes over "
                  << v.closed_basis.size() << " closed 2-form(s)\n";
    return 0;
}

// Build an algebra in code: a 6-dim two-step nilpotent example with
// d f1 = -e1^e2 and d f2 = -e3^e4, then ask the usual questions.
#include <iostream>

#include "cesym/symplectic.hpp"

using namespace cesym;

int main() {
    const DualBasis basis({"e1", "e2", "e3", "e4", "f1", "f2"});
    std::map<std::string, ExteriorForm> diffs;
    diffs.emplace("f1", ExteriorForm::term(basis, {0, 1}, -1));
    diffs.emplace("f2", ExteriorForm::term(basis, {2, 3}, -1));

    const LieAlgebra L = from_dual_presentation(basis, diffs);
    std::cout << "jacobi violations: " << jacobi_check(L).size() << "\n";

    const Subcomplex complex = full_complex(ce_differential(L));
    const CohomologyResult H = cohomology(complex);
    std::cout << "betti:";
    for (std::size_t b : H.betti) std::cout << " " << b;
    std::cout << "\n";

    const SymplecticVerdict v = decide(complex);
    std::cout << "verdict: " << (v.symplectic() ? "Symplectic" : "NotSymplectic") << "\n";
    if (v.symplectic())
        std::cout << "witness: " << format_form(v.witness) << "  (certificate "
                  << format_rational(v.certificate) << ")\n";

    const ExteriorForm omega =
        ExteriorForm::term(basis, {0, 1}, 1) + ExteriorForm::term(basis, {2, 3}, 1) +
        ExteriorForm::term(basis, {4, 5}, 1);
    const FormCheck check = check_symplectic_form(complex, omega);
    std::cout << "hand candidate e1^e2 + e3^e4 + f1^f2: closed=" << check.closed
              << " nondegenerate=" << check.nondegenerate << "\n";
    return 0;
}

// Parafermi grand canonical series from the determinant ratio, next to the
// restricted Schur sum it should reproduce.

#include <iostream>

#include <pstat/pstat.hpp>

int main() {
    const pstat::EvalPoint point({2, 3, 5});
    for (int p = 1; p <= 3; ++p) {
        const auto det = pstat::gpf_parafermi_det(p, point, 6);
        const auto sum = pstat::gpf_definition(pstat::StatisticsKind::parafermi(p), point, 6);
        std::cout << "p=" << p << "\n  det ratio : ";
        for (const auto& c : det.coeffs()) std::cout << c << " ";
        std::cout << "\n  schur sum : ";
        for (const auto& c : sum.coeffs()) std::cout << c << " ";
        std::cout << "\n";
    }
}

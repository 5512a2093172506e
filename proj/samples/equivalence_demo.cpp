// Prints the Bose and conjugate-even coefficient tables side by side for a
// small truncation and the level-by-level multiplicity audit.

#include <iostream>

#include <pstat/pstat.hpp>

int main() {
    const int qmax = 8;
    const auto report = pstat::check_equivalence(qmax);

    std::cout << "coefficient of alpha^j q^t (Bose on the 2-D spectrum | pairs on the 1-D spectrum)\n";
    for (std::size_t j = 0; j <= report.bose.amax(); ++j) {
        std::cout << "j=" << j << ":";
        for (std::size_t t = 0; t <= report.bose.qmax(); ++t)
            std::cout << " " << report.bose.at(j, t) << "|" << report.evencols.at(j, t);
        std::cout << "\n";
    }
    for (const auto& a : report.multiplicity_audit)
        std::cout << "q^" << a.t << ": degeneracy " << a.bose << ", pairs " << a.pairs << "\n";
    std::cout << (report.equal ? "identical" : "different") << "\n";
    return report.equal ? 0 : 1;
}

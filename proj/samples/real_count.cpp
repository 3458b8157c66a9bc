// Four lines in P^3: the problem n=4, m=2, alpha=31, beta=21, a=b=c=1 has
// d=2 real solutions at the degenerate configuration. Prints both planes.
#include "pieri/enumerative.hpp"

#include <iostream>

int main() {
    using namespace pieri;
    const QuintupleProblem p{4, 2, DecSeq(4, {3, 1}), DecSeq(4, {2, 1}), 1, 1, 1};
    std::cout << p.str() << "\n";
    std::cout << "d = " << count_pairs_d(p) << ", cohomology = " << cohomology_oracle(p)
              << ", iterated Pieri = " << pieri_pairing_oracle(p) << "\n";
    const QuintupleReport rep = quintuple_witnesses(p);
    for (const auto& w : rep.witnesses) {
        std::cout << "H_" << w.alpha.str() << "," << w.beta.str() << ":\n";
        for (const auto& row : w.h.basis()) {
            std::cout << "  ";
            for (const auto& x : row) std::cout << to_string(x) << " ";
            std::cout << "\n";
        }
    }
    std::cout << (rep.passed() ? "all witnesses verified\n" : "verification failed\n");
    return rep.passed() ? 0 : 1;
}

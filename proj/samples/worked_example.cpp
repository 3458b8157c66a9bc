// Runs the worked n=9, alpha=741 family and prints the verified clauses.
#include "pieri/worked_example.hpp"

#include <iostream>

int main() {
    const pieri::WorkedExampleReport rep = pieri::worked_example_run();
    std::cout << rep.table();
    std::cout << (rep.passed() ? "all clauses verified\n" : "some clauses failed\n");
    return rep.passed() ? 0 : 1;
}

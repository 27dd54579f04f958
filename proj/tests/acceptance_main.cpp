// Acceptance gate: runs every criterion of the acceptance suite and prints
// one PASS/FAIL line per criterion.  Exits nonzero when any criterion fails,
// so `ctest` treats the suite as a single gate.

#include <iostream>

#include <blowup7/verify.hpp>

int main()
{
    const auto results = blowup7::verify::run_acceptance_suite();
    int failed = 0;
    for (const auto& c : results) {
        std::cout << "AC-" << (c.id < 10 ? "0" : "") << c.id << " "
                  << (c.pass ? "[PASS]" : "[FAIL]") << " " << c.name << " (" << c.detail << ")\n";
        if (!c.pass)
            ++failed;
    }
    std::cout << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size()
              << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}

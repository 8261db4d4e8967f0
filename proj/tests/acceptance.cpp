// Runs every acceptance criterion once and prints one line per criterion.
// Exit status is 0 when every failure carries a documented deviation.
#include <iostream>

#include "p1p1/cli/claims.hpp"

int main()
{
    using namespace p1p1::cli;
    const auto results = run_claims(ClaimOptions{});
    bool undocumented_failure = false;
    for (const auto& r : results) {
        std::cout << "criterion " << r.criterion << " [" << r.id << "]: " << (r.passed ? "PASS" : "FAIL") << "  expected "
                  << r.expected << "; computed " << r.computed;
        if (r.partial_evidence) std::cout << " (finite window)";
        std::cout << " (" << r.seconds << " s)\n";
        if (!r.passed) {
            if (r.known_deviation.empty())
                undocumented_failure = true;
            else
                std::cout << "  known deviation: " << r.known_deviation << "\n";
        }
    }
    return undocumented_failure ? 1 : 0;
}

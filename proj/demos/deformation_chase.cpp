// Walks the deformation-obstruction sequence for small g and shows what the
// rank constraints force, in both the g^2 and the displayed-2g variants.

#include <iostream>

#include "abvar/dimensions.hpp"
#include "abvar/exact_sequence.hpp"

int main() {
    using namespace abvar;
    for (std::int64_t g = 1; g <= 4; ++g) {
        for (bool display : {false, true}) {
            const auto spec = dims::graph_les(g, display);
            const auto sol = les::solve_ranks(spec);
            std::cout << "g = " << g << (display ? " (displayed 2g)" : " (g^2)")
                      << "  dims:";
            for (int d : spec.dims) std::cout << " " << d;
            std::cout << "\n";
            const auto labels = les::map_labels(spec);
            for (const auto& m : sol.maps) {
                std::cout << "  " << labels[static_cast<std::size_t>(m.index)]
                          << ": forced " << les::to_cstring(m.forced) << "\n";
            }
            for (const auto& n : sol.notes) std::cout << "  note: " << n << "\n";
        }
    }
    return 0;
}

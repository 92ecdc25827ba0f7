// Sweeps every curve over a few small prime fields and tabulates p-rank by
// j-invariant class, illustrating that curves sharing a j-invariant (hence
// derived equivalent over the closure) share their p-rank.

#include <iostream>
#include <map>
#include <set>

#include "abvar/elliptic.hpp"

int main() {
    using namespace abvar::ec;
    for (std::int64_t p : {5, 7, 11, 13}) {
        std::map<std::uint64_t, std::set<int>> ranks_by_j;
        int curves = 0, supersingular = 0;
        for (std::int64_t a = 0; a < p; ++a) {
            for (std::int64_t b = 0; b < p; ++b) {
                CurveSpec c;
                try {
                    c = parse_curve(p, a, b);
                } catch (const abvar::SingularCurveError&) {
                    continue;
                }
                const auto r = analyze(c);
                ranks_by_j[r.j].insert(r.p_rank);
                ++curves;
                supersingular += r.p_rank == 0;
            }
        }
        int mixed = 0;
        for (const auto& [j, ranks] : ranks_by_j) mixed += ranks.size() > 1;
        std::cout << "p = " << p << ": " << curves << " curves, "
                  << ranks_by_j.size() << " j-classes, " << supersingular
                  << " supersingular, " << mixed
                  << " j-classes with mixed p-rank\n";
    }
    return 0;
}

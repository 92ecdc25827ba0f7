#pragma once

// 2x2 matrices over an endomorphism-ring model of End(A x Ahat), the
// hat/tilde companions built from conjugated entries, the isometry test
// tilde(f) = f^{-1}, bounded enumeration of the isometric group, and the
// counting data of the autoequivalence kernel.

#include <cstdint>
#include <string>
#include <vector>

#include "abvar/elliptic.hpp"
#include "abvar/errors.hpp"
#include "abvar/quadratic_order.hpp"

namespace abvar::isom {

struct EndMatrix {
    EndRing ring;
    OrderElement a, b, c, d; // (a b; c d)

    bool operator==(const EndMatrix&) const = default;

    static EndMatrix identity(const EndRing& ring) {
        return {ring, ring.one(), ring.zero(), ring.zero(), ring.one()};
    }

    static EndMatrix over_integers(std::int64_t a, std::int64_t b,
                                   std::int64_t c, std::int64_t d) {
        return {EndRing::integers(), {a, 0}, {b, 0}, {c, 0}, {d, 0}};
    }

    bool is_identity() const {
        return a == ring.one() && b == ring.zero() && c == ring.zero() &&
               d == ring.one();
    }
};

inline void require_same_ring(const EndMatrix& f, const EndMatrix& g) {
    if (!(f.ring == g.ring)) {
        throw RingMismatchError("matrices over different endomorphism rings");
    }
}

// hat(f) = (dbar bbar; cbar abar)
inline EndMatrix hat(const EndMatrix& f) {
    const EndRing& R = f.ring;
    return {R, R.conj(f.d), R.conj(f.b), R.conj(f.c), R.conj(f.a)};
}

// tilde(f) = (dbar -bbar; -cbar abar); an involution, and anti-multiplicative
inline EndMatrix tilde(const EndMatrix& f) {
    const EndRing& R = f.ring;
    return {R, R.conj(f.d), R.negate(R.conj(f.b)), R.negate(R.conj(f.c)),
            R.conj(f.a)};
}

inline EndMatrix multiply(const EndMatrix& f, const EndMatrix& g) {
    require_same_ring(f, g);
    const EndRing& R = f.ring;
    return {R,
            R.add(R.mul(f.a, g.a), R.mul(f.b, g.c)),
            R.add(R.mul(f.a, g.b), R.mul(f.b, g.d)),
            R.add(R.mul(f.c, g.a), R.mul(f.d, g.c)),
            R.add(R.mul(f.c, g.b), R.mul(f.d, g.d))};
}

inline EndMatrix operator*(const EndMatrix& f, const EndMatrix& g) {
    return multiply(f, g);
}

// f is isometric when tilde(f) is a two-sided inverse. Over the integers
// this reduces to det f = 1; over a quadratic order both products matter.
inline bool is_isometric(const EndMatrix& f) {
    return multiply(tilde(f), f).is_identity() &&
           multiply(f, tilde(f)).is_identity();
}

// All isometric matrices whose integer coordinates (u and v separately) lie
// in [-height, height], in lexicographic coordinate order.
inline std::vector<EndMatrix> enumerate_isometric(const EndRing& ring,
                                                  int height) {
    if (height < 0) throw InputError("height must be nonnegative");
    const int coords = (ring.kind == EndRing::Kind::integers) ? 1 : 2;
    const std::uint64_t side = 2 * static_cast<std::uint64_t>(height) + 1;
    std::uint64_t space = 1;
    for (int i = 0; i < 4 * coords; ++i) {
        space *= side;
        if (space > 100'000'000ULL) {
            throw SearchSpaceTooLargeError(
                "(2*height+1)^(4*coords) exceeds 10^8 at height " +
                std::to_string(height));
        }
    }

    const std::int64_t h = height;
    std::vector<EndMatrix> out;
    EndMatrix m{ring, {}, {}, {}, {}};
    OrderElement* entries[4] = {&m.a, &m.b, &m.c, &m.d};

    // Odometer over the 4*coords coordinates; loop order makes the output
    // lexicographic in (a.u, a.v, b.u, b.v, c.u, c.v, d.u, d.v).
    std::vector<std::int64_t> x(4 * coords, -h);
    auto load = [&] {
        for (int e = 0; e < 4; ++e) {
            entries[e]->u = x[static_cast<std::size_t>(e) * coords];
            entries[e]->v = (coords == 2) ? x[static_cast<std::size_t>(e) * coords + 1] : 0;
        }
    };
    while (true) {
        load();
        if (is_isometric(m)) out.push_back(m);
        int pos = static_cast<int>(x.size()) - 1;
        while (pos >= 0 && x[pos] == h) {
            x[pos] = -h;
            --pos;
        }
        if (pos < 0) break;
        ++x[pos];
    }
    return out;
}

// Counting data for the kernel of Aut(D^b(E)) -> U(E x Ehat): a free rank-1
// part (the shifts) and the finite group E(F_p) x Ehat(F_p), of order N^2
// by elliptic self-duality.
struct AutoequivKernelReport {
    int free_rank = 1;
    std::uint64_t point_count = 0;
    std::uint64_t finite_order = 0;
};

inline AutoequivKernelReport kernel_report(const ec::CurveSpec& curve) {
    AutoequivKernelReport r;
    r.point_count = ec::count_points(curve);
    r.finite_order = r.point_count * r.point_count;
    return r;
}

} // namespace abvar::isom

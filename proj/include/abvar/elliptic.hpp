#pragma once

// Exact invariants of short Weierstrass curves y^2 = x^3 + ax + b over
// prime fields F_p, p > 3: naive point counting, Frobenius trace, p-rank,
// j-invariant, automorphism group orders, and the j-equality test for
// derived equivalence over the algebraic closure.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "abvar/errors.hpp"
#include "abvar/int128.hpp"

namespace abvar::ec {

inline constexpr std::uint64_t kMaxFieldSize = 1'000'000;

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % p);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp,
                            std::uint64_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) r = mulmod(r, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return r;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    return powmod(a, p - 2, p); // p prime, a != 0
}

inline std::uint64_t reduce(std::int64_t v, std::uint64_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(r);
}

} // namespace detail

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ULL, 3ULL, 5ULL}) {
        if (n % d == 0) return n == d;
    }
    // wheel over 6k +- 1
    for (std::uint64_t d = 7; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 4) == 0) return false;
    }
    return true;
}

struct CurveSpec {
    std::uint64_t p = 0;
    std::uint64_t a = 0; // reduced mod p
    std::uint64_t b = 0;

    bool operator==(const CurveSpec&) const = default;
};

// 4a^3 + 27b^2 mod p
inline std::uint64_t discriminant_term(const CurveSpec& c) {
    using detail::mulmod;
    const std::uint64_t a3 = mulmod(mulmod(c.a, c.a, c.p), c.a, c.p);
    const std::uint64_t b2 = mulmod(c.b, c.b, c.p);
    return (mulmod(4 % c.p, a3, c.p) + mulmod(27 % c.p, b2, c.p)) % c.p;
}

inline CurveSpec parse_curve(std::int64_t p, std::int64_t a, std::int64_t b) {
    if (p >= 2 && p <= 3) {
        throw SmallCharacteristicError(
            "p = " + std::to_string(p) +
            ": characteristics 2 and 3 are not supported");
    }
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
        throw NotPrimeError("p = " + std::to_string(p) + " is not prime");
    }
    CurveSpec c;
    c.p = static_cast<std::uint64_t>(p);
    c.a = detail::reduce(a, c.p);
    c.b = detail::reduce(b, c.p);
    if (discriminant_term(c) == 0) {
        throw SingularCurveError("4a^3 + 27b^2 = 0 mod " + std::to_string(p) +
                                 ": curve is singular");
    }
    return c;
}

// #E(F_p) = 1 + sum_x (1 + chi(x^3 + ax + b)), chi the quadratic character
// with chi(0) = 0. Computed with a table of squares; O(p) time and memory.
inline std::uint64_t count_points(const CurveSpec& c) {
    if (c.p > kMaxFieldSize) {
        throw FieldTooLargeError("p = " + std::to_string(c.p) +
                                 " exceeds the naive counting cap " +
                                 std::to_string(kMaxFieldSize));
    }
    const std::uint64_t p = c.p;
    std::vector<bool> is_square(p, false);
    for (std::uint64_t y = 0; y < p; ++y) {
        is_square[detail::mulmod(y, y, p)] = true;
    }
    std::uint64_t n = 1; // point at infinity
    for (std::uint64_t x = 0; x < p; ++x) {
        const std::uint64_t rhs =
            (detail::mulmod(detail::mulmod(x, x, p), x, p) +
             detail::mulmod(c.a, x, p) + c.b) % p;
        if (rhs == 0) {
            n += 1;
        } else if (is_square[rhs]) {
            n += 2;
        }
    }
    return n;
}

// j = 1728 * 4a^3 / (4a^3 + 27b^2), as a canonical residue in [0, p).
inline std::uint64_t j_invariant(const CurveSpec& c) {
    using detail::mulmod;
    const std::uint64_t a3 = mulmod(mulmod(c.a, c.a, c.p), c.a, c.p);
    const std::uint64_t num = mulmod(mulmod(1728 % c.p, 4 % c.p, c.p), a3, c.p);
    return mulmod(num, detail::invmod(discriminant_term(c), c.p), c.p);
}

struct CurveAnalysis {
    CurveSpec curve;
    std::uint64_t point_count = 0;
    std::int64_t trace = 0;
    int p_rank = 0; // 0 or 1
    bool ordinary = false;
    std::uint64_t j = 0;
    // Automorphism group order over the algebraic closure (p > 3): 2, 4 at
    // j = 1728, 6 at j = 0. The F_p-rational subgroup has order
    // gcd(geometric order, p - 1).
    int aut_order_geometric = 2;
    int aut_order_rational = 2;
};

inline CurveAnalysis analyze(const CurveSpec& c) {
    CurveAnalysis r;
    r.curve = c;
    r.point_count = count_points(c);
    r.trace = static_cast<std::int64_t>(c.p) + 1 -
              static_cast<std::int64_t>(r.point_count);
    r.ordinary = (detail::reduce(r.trace, c.p) != 0);
    r.p_rank = r.ordinary ? 1 : 0;
    r.j = j_invariant(c);
    if (r.j == 0) {
        r.aut_order_geometric = 6;
    } else if (r.j == 1728 % c.p) {
        r.aut_order_geometric = 4;
    } else {
        r.aut_order_geometric = 2;
    }
    r.aut_order_rational = static_cast<int>(
        std::gcd(static_cast<std::uint64_t>(r.aut_order_geometric), c.p - 1));
    return r;
}

// Derived equivalence of elliptic curves reduces to isomorphism, tested
// geometrically: equal j-invariants over the algebraic closure. Twists over
// F_p itself are deliberately identified.
inline bool derived_equivalent(const CurveSpec& e, const CurveSpec& f) {
    if (e.p != f.p) {
        throw MixedCharacteristicError(
            "curves live over different prime fields (" + std::to_string(e.p) +
            " vs " + std::to_string(f.p) + ")");
    }
    return j_invariant(e) == j_invariant(f);
}

// p-rank of a product of elliptic curves: sum of the factors' p-ranks.
inline int product_p_rank(const std::vector<CurveSpec>& curves) {
    if (curves.empty()) {
        throw EmptyListError("product of zero curves has no p-rank here");
    }
    for (const auto& c : curves) {
        if (c.p != curves.front().p) {
            throw MixedCharacteristicError(
                "all factors must share one prime field");
        }
    }
    int total = 0;
    for (const auto& c : curves) total += analyze(c).p_rank;
    return total;
}

} // namespace abvar::ec

#pragma once

// Model of End(A) for the isometry calculus: either the integers or an
// imaginary quadratic order Z[w] with w^2 + bw + c = 0, b^2 - 4c < 0.
// Conjugation wbar = -b - w plays the role of the dual isogeny.

#include <cstdint>
#include <string>

#include "abvar/errors.hpp"
#include "abvar/int128.hpp"

namespace abvar::isom {

struct OrderElement {
    std::int64_t u = 0; // coefficient of 1
    std::int64_t v = 0; // coefficient of w (always 0 over the integers)

    bool operator==(const OrderElement&) const = default;
    // coordinatewise lexicographic order, used for deterministic listings
    auto operator<=>(const OrderElement&) const = default;
};

struct EndRing {
    enum class Kind { integers, quadratic };

    Kind kind = Kind::integers;
    std::int64_t b = 0; // w^2 + bw + c = 0
    std::int64_t c = 0;

    static EndRing integers() { return EndRing{}; }

    static EndRing quadratic_order(std::int64_t b, std::int64_t c) {
        const int128 disc = static_cast<int128>(b) * b - 4 * static_cast<int128>(c);
        if (disc >= 0) {
            throw InvalidRingError(
                "w^2 + " + std::to_string(b) + "w + " + std::to_string(c) +
                " has nonnegative discriminant; the order must be imaginary");
        }
        return EndRing{Kind::quadratic, b, c};
    }

    bool operator==(const EndRing&) const = default;

    OrderElement zero() const { return {0, 0}; }
    OrderElement one() const { return {1, 0}; }

    OrderElement add(OrderElement x, OrderElement y) const {
        return {checked_i64(static_cast<int128>(x.u) + y.u, "order add"),
                checked_i64(static_cast<int128>(x.v) + y.v, "order add")};
    }

    OrderElement negate(OrderElement x) const { return {-x.u, -x.v}; }

    // (u1 + v1 w)(u2 + v2 w) with w^2 = -bw - c
    OrderElement mul(OrderElement x, OrderElement y) const {
        const int128 vv = static_cast<int128>(x.v) * y.v;
        const int128 real = static_cast<int128>(x.u) * y.u - static_cast<int128>(c) * vv;
        const int128 omega = static_cast<int128>(x.u) * y.v +
                             static_cast<int128>(x.v) * y.u -
                             static_cast<int128>(b) * vv;
        return {checked_i64(real, "order mul"), checked_i64(omega, "order mul")};
    }

    // u + v*wbar = (u - bv) - v*w; the identity on the integers
    OrderElement conj(OrderElement x) const {
        return {checked_i64(static_cast<int128>(x.u) -
                                static_cast<int128>(b) * x.v,
                            "order conj"),
                -x.v};
    }

    // x * conj(x) = u^2 - b uv + c v^2, nonnegative since the order is
    // imaginary
    std::int64_t norm(OrderElement x) const {
        const int128 n = static_cast<int128>(x.u) * x.u -
                         static_cast<int128>(b) * x.u * x.v +
                         static_cast<int128>(c) * x.v * x.v;
        return checked_i64(n, "order norm");
    }

    std::string describe() const {
        if (kind == Kind::integers) return "Z";
        return "Z[w], w^2 + " + std::to_string(b) + "w + " + std::to_string(c) +
               " = 0";
    }
};

inline std::string format(const EndRing& ring, OrderElement x) {
    if (ring.kind == EndRing::Kind::integers || x.v == 0) {
        return std::to_string(x.u);
    }
    if (x.u == 0) return std::to_string(x.v) + "w";
    std::string s = std::to_string(x.u);
    s += (x.v < 0) ? " - " : " + ";
    s += std::to_string(x.v < 0 ? -x.v : x.v) + "w";
    return s;
}

} // namespace abvar::isom

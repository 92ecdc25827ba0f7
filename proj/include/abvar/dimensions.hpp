#pragma once

// Closed-form dimension calculators for a g-dimensional abelian variety:
// Hodge numbers h^{p,q} = C(g,p)C(g,q), Hochschild cohomology through the
// HKR decomposition, deformation/obstruction space dimensions, and the
// deformation-obstruction long exact sequence parametrized by g.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abvar/errors.hpp"
#include "abvar/exact_sequence.hpp"
#include "abvar/int128.hpp"

namespace abvar::dims {

// Binomials up to C(120,60) fit comfortably in 128 bits; this bound keeps
// every value exact.
inline constexpr int kMaxG = 60;

namespace detail {

inline void check_g(std::int64_t g) {
    if (g < 1) {
        throw NonpositiveGError("g must be positive (got " + std::to_string(g) +
                                ")");
    }
    if (g > kMaxG) {
        throw GTooLargeError("g = " + std::to_string(g) + " exceeds the cap " +
                             std::to_string(kMaxG) +
                             " (128-bit exact binomial range)");
    }
}

// Multiplicative formula; every intermediate product stays within 128 bits
// for n <= 120.
inline uint128 binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    uint128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<uint128>(n - k + i) / static_cast<uint128>(i);
    }
    return r;
}

} // namespace detail

// dim H^q(A, Omega^p) = C(g,p) * C(g,q); zero outside 0 <= p,q <= g.
inline uint128 hodge_dim(std::int64_t g, int p, int q) {
    detail::check_g(g);
    const int gi = static_cast<int>(g);
    return detail::binomial(gi, p) * detail::binomial(gi, q);
}

// dim HH^n(A) via HKR: sum over p+q=n of C(g,p)C(g,q); equals C(2g,n).
inline uint128 hochschild_dim(std::int64_t g, int n) {
    detail::check_g(g);
    if (n < 0) throw InputError("Hochschild degree must be nonnegative");
    const int gi = static_cast<int>(g);
    uint128 total = 0;
    for (int p = 0; p <= n; ++p) {
        total += detail::binomial(gi, p) * detail::binomial(gi, n - p);
    }
    return total;
}

struct DeformationDims {
    std::int64_t formal_def_dim = 0;     // dim H^1(A, T_A) = g^2
    std::int64_t polarized_def_dim = 0;  // g(g+1)/2
    std::int64_t aut_tangent_dim = 0;    // dim H^0(N) = g
    std::int64_t aut_obstruction_dim = 0; // dim H^1(N) = g^2

    bool operator==(const DeformationDims&) const = default;
};

inline DeformationDims deformation_dims(std::int64_t g) {
    detail::check_g(g);
    return DeformationDims{g * g, g * (g + 1) / 2, g, g * g};
}

// Lifts of the graph structure sheaf to a fixed base lift form a torsor
// under Ext^1, which contains the g-dimensional H^1(A, O_A).
inline std::int64_t extra_lift_tangent_dim(std::int64_t g) {
    detail::check_g(g);
    return g;
}

// The deformation-obstruction sequence 0 -> H^0(N) -> Ext^1 -> H^1(O) ->
// H^1(N) -> Ext^2 -> ... as dimensions. The general-g display writes the
// fourth term as 2g while the normal-bundle computation gives g^2;
// use_paper_display selects the former for g >= 2. At g = 1 the displayed
// sequence is the elliptic one, so both variants agree.
inline les::ExactSequenceSpec graph_les(std::int64_t g, bool use_paper_display) {
    detail::check_g(g);
    const int gi = static_cast<int>(g);
    const int fourth = (use_paper_display && gi >= 2) ? 2 * gi : gi * gi;
    return les::build_sequence({gi, 2 * gi, gi, fourth, 2 * gi * gi - gi},
                               /*left_closed=*/true, /*right_open=*/true);
}

// HKR decomposition hypothesis: characteristic zero or p > g.
inline bool hkr_valid(std::int64_t g, std::int64_t characteristic) {
    detail::check_g(g);
    if (characteristic < 0) throw InputError("characteristic must be >= 0");
    return characteristic == 0 || characteristic > g;
}

struct DimReport {
    std::int64_t g = 0;
    std::vector<std::vector<uint128>> hodge; // hodge[p][q], 0 <= p,q <= g
    std::vector<uint128> hochschild;         // HH^0 .. HH^{2g}
    DeformationDims deformation;
    std::int64_t extra_lift_tangent = 0;
    std::optional<bool> hkr_ok; // only set when a characteristic was supplied
};

inline DimReport dim_report(std::int64_t g,
                            std::optional<std::int64_t> characteristic = {}) {
    detail::check_g(g);
    const int gi = static_cast<int>(g);
    DimReport r;
    r.g = g;
    r.hodge.assign(gi + 1, std::vector<uint128>(gi + 1, 0));
    for (int p = 0; p <= gi; ++p) {
        for (int q = 0; q <= gi; ++q) {
            r.hodge[p][q] = detail::binomial(gi, p) * detail::binomial(gi, q);
        }
    }
    r.hochschild.resize(2 * gi + 1);
    for (int n = 0; n <= 2 * gi; ++n) r.hochschild[n] = hochschild_dim(g, n);
    r.deformation = deformation_dims(g);
    r.extra_lift_tangent = extra_lift_tangent_dim(g);
    if (characteristic) r.hkr_ok = hkr_valid(g, *characteristic);
    return r;
}

} // namespace abvar::dims

#pragma once

// Machine-readable records for every operation's result. One JSON object per
// result with a dedicated "notes" list; integers that do not fit in 64 bits
// are emitted as decimal strings.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "abvar/dimensions.hpp"
#include "abvar/elliptic.hpp"
#include "abvar/exact_sequence.hpp"
#include "abvar/int128.hpp"
#include "abvar/isometry.hpp"
#include "abvar/quadratic_order.hpp"

namespace abvar::report {

inline constexpr int kSchemaVersion = 1;

using nlohmann::json;

inline json big_value(uint128 v) {
    if (fits_u64(v)) return static_cast<std::uint64_t>(v);
    return to_string(v);
}

inline json envelope(const std::string& command, json results) {
    return json{{"schema_version", kSchemaVersion},
                {"tool", "abvar"},
                {"command", command},
                {"results", std::move(results)}};
}

// --- exact sequences -------------------------------------------------------

inline json les_record(const les::ExactSequenceSpec& spec,
                       const les::RankSolution& sol) {
    json maps = json::array();
    const auto labels = les::map_labels(spec);
    for (const auto& m : sol.maps) {
        maps.push_back(json{{"index", m.index},
                            {"label", labels[static_cast<std::size_t>(m.index)]},
                            {"from_dim", m.from_dim},
                            {"to_dim", m.to_dim},
                            {"injective", les::to_cstring(m.injective)},
                            {"surjective", les::to_cstring(m.surjective)},
                            {"zero", les::to_cstring(m.zero)},
                            {"forced", les::to_cstring(m.forced)}});
    }
    return json{{"input",
                 {{"dims", spec.dims},
                  {"left_closed", spec.left_closed},
                  {"right_open", spec.right_open}}},
                {"feasible", sol.feasible()},
                {"profiles", sol.profiles},
                {"maps", std::move(maps)},
                {"notes", sol.notes}};
}

// --- dimension reports ------------------------------------------------------

inline json dims_record(const dims::DimReport& r,
                        std::optional<std::int64_t> characteristic,
                        const std::vector<std::string>& notes) {
    json hodge = json::array();
    for (const auto& row : r.hodge) {
        json jrow = json::array();
        for (uint128 v : row) jrow.push_back(big_value(v));
        hodge.push_back(std::move(jrow));
    }
    json hochschild = json::array();
    for (uint128 v : r.hochschild) hochschild.push_back(big_value(v));

    json input{{"g", r.g}};
    input["characteristic"] =
        characteristic ? json(*characteristic) : json(nullptr);

    return json{{"input", std::move(input)},
                {"g", r.g},
                {"hodge", std::move(hodge)},
                {"hochschild", std::move(hochschild)},
                {"formal_def_dim", r.deformation.formal_def_dim},
                {"polarized_def_dim", r.deformation.polarized_def_dim},
                {"aut_tangent_dim", r.deformation.aut_tangent_dim},
                {"aut_obstruction_dim", r.deformation.aut_obstruction_dim},
                {"extra_lift_tangent_dim", r.extra_lift_tangent},
                {"hkr_valid", r.hkr_ok ? json(*r.hkr_ok) : json(nullptr)},
                {"notes", notes}};
}

// --- elliptic curves --------------------------------------------------------

inline json curve_json(const ec::CurveSpec& c) {
    return json{{"p", c.p}, {"a", c.a}, {"b", c.b}};
}

inline json curve_record(const ec::CurveAnalysis& r,
                         const std::vector<std::string>& notes = {}) {
    return json{{"input", curve_json(r.curve)},
                {"point_count", r.point_count},
                {"trace", r.trace},
                {"p_rank", r.p_rank},
                {"ordinary", r.ordinary},
                {"supersingular", !r.ordinary},
                {"j", r.j},
                {"j_is_0", r.j == 0},
                {"j_is_1728", r.j == 1728 % r.curve.p},
                {"aut_order_geometric", r.aut_order_geometric},
                {"aut_order_rational", r.aut_order_rational},
                {"notes", notes}};
}

inline json derived_eq_record(const ec::CurveSpec& e, const ec::CurveSpec& f,
                              bool equivalent) {
    return json{
        {"input", {{"curve_e", curve_json(e)}, {"curve_f", curve_json(f)}}},
        {"j_e", ec::j_invariant(e)},
        {"j_f", ec::j_invariant(f)},
        {"derived_equivalent", equivalent},
        {"notes",
         {"j-equality is tested over the algebraic closure; quadratic twists "
          "over F_p itself are identified"}}};
}

// --- isometry calculus ------------------------------------------------------

inline json ring_json(const isom::EndRing& ring) {
    if (ring.kind == isom::EndRing::Kind::integers) {
        return json{{"kind", "integers"}};
    }
    return json{{"kind", "quadratic"}, {"omega_b", ring.b}, {"omega_c", ring.c}};
}

inline json matrix_json(const isom::EndMatrix& m) {
    auto entry = [&m](const isom::OrderElement& e) -> json {
        if (m.ring.kind == isom::EndRing::Kind::integers) return e.u;
        return json::array({e.u, e.v});
    };
    return json::array({json::array({entry(m.a), entry(m.b)}),
                        json::array({entry(m.c), entry(m.d)})});
}

inline json isom_check_record(const isom::EndMatrix& m, bool isometric) {
    return json{{"input", {{"ring", ring_json(m.ring)}, {"matrix", matrix_json(m)}}},
                {"isometric", isometric},
                {"hat", matrix_json(isom::hat(m))},
                {"tilde", matrix_json(isom::tilde(m))},
                {"notes", json::array()}};
}

inline json isom_enumerate_record(const isom::EndRing& ring, int height,
                                  const std::vector<isom::EndMatrix>& found) {
    json matrices = json::array();
    for (const auto& m : found) matrices.push_back(matrix_json(m));
    return json{{"input", {{"ring", ring_json(ring)}, {"height", height}}},
                {"count", found.size()},
                {"matrices", std::move(matrices)},
                {"notes", json::array()}};
}

inline json kernel_record(const ec::CurveSpec& curve,
                          const isom::AutoequivKernelReport& r) {
    return json{{"input", curve_json(curve)},
                {"free_rank", r.free_rank},
                {"point_count", r.point_count},
                {"finite_order", r.finite_order},
                {"notes", json::array()}};
}

} // namespace abvar::report

// abvar: a desk-scale workbench for the checkable side of lifting
// automorphisms of abelian varieties. Subcommands cover exact-sequence rank
// forcing, dimension formulas, elliptic-curve invariants over prime fields,
// and the isometric 2x2 matrix calculus.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "abvar/dimensions.hpp"
#include "abvar/elliptic.hpp"
#include "abvar/errors.hpp"
#include "abvar/exact_sequence.hpp"
#include "abvar/isometry.hpp"
#include "abvar/quadratic_order.hpp"
#include "abvar/report.hpp"

namespace {

using abvar::InputError;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitResourceCap = 4;

// ---------------------------------------------------------------------------
// input parsing

std::int64_t parse_int(const std::string& token, const std::string& where) {
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(token, &pos);
    } catch (const std::exception&) {
        throw InputError(where + ": '" + token + "' is not an integer");
    }
    if (pos != token.size()) {
        throw InputError(where + ": '" + token + "' is not an integer");
    }
    return v;
}

std::vector<std::string> split(const std::string& s, char delim) {
    std::vector<std::string> out;
    std::string token;
    std::istringstream in(s);
    while (std::getline(in, token, delim)) out.push_back(token);
    return out;
}

std::vector<std::string> fields_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

// Batch files are line oriented; blank lines and '#' comments are skipped.
std::vector<std::pair<int, std::string>> read_batch(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("input file '" + path + "' cannot be opened");
    std::vector<std::pair<int, std::string>> lines;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (fields_of(line).empty()) continue;
        lines.emplace_back(lineno, line);
    }
    if (lines.empty()) throw InputError("input file '" + path + "' has no data lines");
    return lines;
}

abvar::ec::CurveSpec parse_curve_arg(const std::string& text,
                                     const std::string& where) {
    const auto parts = split(text, ',');
    if (parts.size() != 3) {
        throw InputError(where + ": expected 'p,a,b' (got '" + text + "')");
    }
    return abvar::ec::parse_curve(parse_int(parts[0], where + " field p"),
                                  parse_int(parts[1], where + " field a"),
                                  parse_int(parts[2], where + " field b"));
}

// Ring descriptors: "Z" for the integers, "quad:<b>:<c>" for Z[w] with
// w^2 + bw + c = 0.
abvar::isom::EndRing parse_ring_arg(const std::string& text,
                                    const std::string& where) {
    if (text == "Z") return abvar::isom::EndRing::integers();
    const auto parts = split(text, ':');
    if (parts.size() == 3 && parts[0] == "quad") {
        return abvar::isom::EndRing::quadratic_order(
            parse_int(parts[1], where + " field b"),
            parse_int(parts[2], where + " field c"));
    }
    throw InputError(where + ": ring must be 'Z' or 'quad:<b>:<c>' (got '" +
                     text + "')");
}

abvar::isom::EndMatrix parse_matrix_arg(const abvar::isom::EndRing& ring,
                                        const std::string& text,
                                        const std::string& where) {
    const auto parts = split(text, ',');
    const bool integers = ring.kind == abvar::isom::EndRing::Kind::integers;
    const std::size_t expect = integers ? 4 : 8;
    if (parts.size() != expect) {
        throw InputError(where + ": expected " + std::to_string(expect) +
                         " comma-separated integers for this ring");
    }
    std::vector<std::int64_t> v;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        v.push_back(parse_int(parts[i], where + " entry " + std::to_string(i)));
    }
    if (integers) {
        return abvar::isom::EndMatrix::over_integers(v[0], v[1], v[2], v[3]);
    }
    return abvar::isom::EndMatrix{
        ring, {v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}, {v[6], v[7]}};
}

bool parse_end_marker(const std::string& tok, const std::string& where) {
    if (tok == "closed") return true;
    if (tok == "open") return false;
    throw InputError(where + ": expected 'closed' or 'open' (got '" + tok + "')");
}

// ---------------------------------------------------------------------------
// table rendering

std::string sequence_display(const abvar::les::ExactSequenceSpec& spec) {
    std::ostringstream out;
    out << (spec.left_closed ? "0 -> " : "... -> ");
    for (std::size_t i = 0; i < spec.dims.size(); ++i) {
        if (i) out << " -> ";
        out << "k^" << spec.dims[i];
    }
    out << (spec.right_open ? " -> ..." : " -> 0");
    return out.str();
}

std::string profile_display(const abvar::les::RankProfile& p) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out << ", ";
        out << p[i];
    }
    out << ")";
    return out.str();
}

void print_notes(std::ostream& out, const std::vector<std::string>& notes) {
    if (notes.empty()) return;
    out << "notes:\n";
    for (const auto& n : notes) out << "  - " << n << "\n";
}

void print_les_table(std::ostream& out, const abvar::les::ExactSequenceSpec& spec,
                     const abvar::les::RankSolution& sol) {
    out << "sequence: " << sequence_display(spec) << "\n";
    out << "feasible: " << (sol.feasible() ? "yes" : "no") << "\n";
    if (sol.feasible()) {
        out << "rank profiles (" << sol.profiles.size() << "):\n";
        for (const auto& p : sol.profiles) {
            out << "  " << profile_display(p) << "\n";
        }
        const auto labels = abvar::les::map_labels(spec);
        for (const auto& m : sol.maps) {
            out << "map " << m.index << "  " << std::setw(6) << std::left
                << labels[static_cast<std::size_t>(m.index)] << std::right
                << " k^" << m.from_dim << " -> k^" << m.to_dim
                << "   injective: " << std::setw(6) << to_cstring(m.injective)
                << "  surjective: " << std::setw(6) << to_cstring(m.surjective)
                << "  zero: " << std::setw(6) << to_cstring(m.zero)
                << "  forced: " << to_cstring(m.forced) << "\n";
        }
    }
    print_notes(out, sol.notes);
}

void print_dims_table(std::ostream& out, const abvar::dims::DimReport& r,
                      const std::vector<std::string>& notes) {
    out << "g = " << r.g << "\n";
    out << "hodge numbers h^{p,q} = dim H^q(A, Omega^p):\n";
    out << "      ";
    for (std::size_t q = 0; q < r.hodge.size(); ++q) {
        out << std::setw(12) << ("q=" + std::to_string(q));
    }
    out << "\n";
    for (std::size_t p = 0; p < r.hodge.size(); ++p) {
        out << "  p=" << std::setw(2) << p;
        for (std::size_t q = 0; q < r.hodge[p].size(); ++q) {
            out << std::setw(12) << abvar::to_string(r.hodge[p][q]);
        }
        out << "\n";
    }
    out << "hochschild dimensions HH^n:\n";
    for (std::size_t n = 0; n < r.hochschild.size(); ++n) {
        out << "  n=" << std::setw(3) << n << "  " << abvar::to_string(r.hochschild[n])
            << "\n";
    }
    out << "formal deformation dim:     " << r.deformation.formal_def_dim << "\n";
    out << "polarized deformation dim:  " << r.deformation.polarized_def_dim << "\n";
    out << "aut tangent dim:            " << r.deformation.aut_tangent_dim << "\n";
    out << "aut obstruction dim:        " << r.deformation.aut_obstruction_dim << "\n";
    out << "extra lift tangent dim:     " << r.extra_lift_tangent << "\n";
    out << "hkr valid:                  ";
    if (r.hkr_ok) {
        out << (*r.hkr_ok ? "yes" : "no");
    } else {
        out << "(no characteristic supplied)";
    }
    out << "\n";
    print_notes(out, notes);
}

void print_curve_table(std::ostream& out, const abvar::ec::CurveAnalysis& r) {
    out << "curve: y^2 = x^3 + " << r.curve.a << "x + " << r.curve.b
        << " over F_" << r.curve.p << "\n";
    out << "  point count N:      " << r.point_count << "\n";
    out << "  frobenius trace t:  " << r.trace << "\n";
    out << "  p-rank:             " << r.p_rank << " ("
        << (r.ordinary ? "ordinary" : "supersingular") << ")\n";
    out << "  j-invariant:        " << r.j;
    if (r.j == 0) out << "  (= 0)";
    if (r.j == 1728 % r.curve.p) out << "  (= 1728 mod p)";
    out << "\n";
    out << "  aut order (geom):   " << r.aut_order_geometric << "\n";
    out << "  aut order (F_p):    " << r.aut_order_rational << "\n";
}

std::string matrix_display(const abvar::isom::EndMatrix& m) {
    using abvar::isom::format;
    std::ostringstream out;
    out << "(" << format(m.ring, m.a) << "  " << format(m.ring, m.b) << "; "
        << format(m.ring, m.c) << "  " << format(m.ring, m.d) << ")";
    return out.str();
}

// ---------------------------------------------------------------------------
// subcommand drivers; each returns the list of result records plus table text

struct RunOutput {
    json results = json::array();
    std::string table;
    int exit_code = kExitOk;
};

struct LesOptions {
    std::vector<int> dims;
    bool left_open = false;
    bool right_closed = false;
    std::optional<std::int64_t> g;
    bool paper_display = false;
    std::string input_path;
};

void run_les_one(const abvar::les::ExactSequenceSpec& spec, RunOutput& out) {
    const auto sol = abvar::les::solve_ranks(spec);
    out.results.push_back(abvar::report::les_record(spec, sol));
    std::ostringstream table;
    print_les_table(table, spec, sol);
    out.table += table.str();
    if (!sol.feasible()) out.exit_code = kExitInfeasible;
}

RunOutput run_les(const LesOptions& opt) {
    RunOutput out;
    if (opt.g) {
        run_les_one(abvar::dims::graph_les(*opt.g, opt.paper_display), out);
    } else if (!opt.input_path.empty()) {
        for (const auto& [lineno, line] : read_batch(opt.input_path)) {
            const std::string where = "line " + std::to_string(lineno);
            auto f = fields_of(line);
            if (f.size() < 4) {
                throw InputError(where +
                                 ": expected '<closed|open> <closed|open> "
                                 "dim0 dim1 ...'");
            }
            const bool left_closed = parse_end_marker(f[0], where + " field 1");
            const bool right_closed = parse_end_marker(f[1], where + " field 2");
            std::vector<int> dims;
            for (std::size_t i = 2; i < f.size(); ++i) {
                dims.push_back(static_cast<int>(parse_int(
                    f[i], where + " field " + std::to_string(i + 1))));
            }
            run_les_one(abvar::les::build_sequence(dims, left_closed, !right_closed),
                        out);
            out.table += "\n";
        }
    } else {
        if (opt.dims.empty()) {
            throw InputError("les-solve needs --dims, --g, or --input");
        }
        run_les_one(abvar::les::build_sequence(opt.dims, !opt.left_open,
                                               !opt.right_closed),
                    out);
    }
    return out;
}

RunOutput run_dims(std::int64_t g, std::optional<std::int64_t> characteristic) {
    if (characteristic && *characteristic != 0 &&
        !abvar::ec::is_prime(static_cast<std::uint64_t>(
            std::max<std::int64_t>(*characteristic, 0)))) {
        throw InputError("--char must be 0 or a prime (got " +
                         std::to_string(*characteristic) + ")");
    }
    const auto r = abvar::dims::dim_report(g, characteristic);
    std::vector<std::string> notes;
    if (r.hkr_ok && !*r.hkr_ok) {
        notes.push_back(
            "characteristic " + std::to_string(*characteristic) +
            " <= g: the HKR hypothesis fails, hochschild values are the "
            "large-characteristic formulas (hkr_valid = false)");
    }
    RunOutput out;
    out.results.push_back(abvar::report::dims_record(r, characteristic, notes));
    std::ostringstream table;
    print_dims_table(table, r, notes);
    out.table = table.str();
    return out;
}

RunOutput run_ec_analyze(const std::string& curve_arg,
                         const std::string& input_path) {
    RunOutput out;
    std::vector<abvar::ec::CurveSpec> curves;
    if (!input_path.empty()) {
        for (const auto& [lineno, line] : read_batch(input_path)) {
            const std::string where = "line " + std::to_string(lineno);
            const auto f = fields_of(line);
            if (f.size() != 3) throw InputError(where + ": expected 'p a b'");
            curves.push_back(abvar::ec::parse_curve(
                parse_int(f[0], where + " field p"),
                parse_int(f[1], where + " field a"),
                parse_int(f[2], where + " field b")));
        }
    } else if (!curve_arg.empty()) {
        curves.push_back(parse_curve_arg(curve_arg, "--curve"));
    } else {
        throw InputError("ec-analyze needs --curve or --input");
    }
    std::ostringstream table;
    for (const auto& c : curves) {
        const auto r = abvar::ec::analyze(c);
        out.results.push_back(abvar::report::curve_record(r));
        print_curve_table(table, r);
    }
    out.table = table.str();
    return out;
}

RunOutput run_ec_derived_eq(const std::string& curve_arg,
                            const std::string& curve2_arg,
                            const std::string& input_path) {
    RunOutput out;
    std::vector<std::pair<abvar::ec::CurveSpec, abvar::ec::CurveSpec>> pairs;
    if (!input_path.empty()) {
        for (const auto& [lineno, line] : read_batch(input_path)) {
            const std::string where = "line " + std::to_string(lineno);
            const auto f = fields_of(line);
            if (f.size() != 5) {
                throw InputError(where + ": expected 'p aE bE aF bF'");
            }
            const std::int64_t p = parse_int(f[0], where + " field p");
            pairs.emplace_back(
                abvar::ec::parse_curve(p, parse_int(f[1], where + " field aE"),
                                       parse_int(f[2], where + " field bE")),
                abvar::ec::parse_curve(p, parse_int(f[3], where + " field aF"),
                                       parse_int(f[4], where + " field bF")));
        }
    } else {
        if (curve_arg.empty() || curve2_arg.empty()) {
            throw InputError("ec-derived-eq needs --curve and --curve2, or --input");
        }
        pairs.emplace_back(parse_curve_arg(curve_arg, "--curve"),
                           parse_curve_arg(curve2_arg, "--curve2"));
    }
    std::ostringstream table;
    for (const auto& [e, f] : pairs) {
        const bool eq = abvar::ec::derived_equivalent(e, f);
        out.results.push_back(abvar::report::derived_eq_record(e, f, eq));
        table << "E: y^2 = x^3 + " << e.a << "x + " << e.b << ", F: y^2 = x^3 + "
              << f.a << "x + " << f.b << " over F_" << e.p << "\n";
        table << "  j(E) = " << abvar::ec::j_invariant(e)
              << ", j(F) = " << abvar::ec::j_invariant(f) << "\n";
        table << "  derived equivalent: " << (eq ? "yes" : "no") << "\n";
    }
    out.table = table.str();
    return out;
}

RunOutput run_isom_check(const std::string& ring_arg, const std::string& matrix_arg,
                         const std::string& input_path) {
    RunOutput out;
    std::vector<abvar::isom::EndMatrix> matrices;
    if (!input_path.empty()) {
        for (const auto& [lineno, line] : read_batch(input_path)) {
            const std::string where = "line " + std::to_string(lineno);
            const auto f = fields_of(line);
            if (f.empty()) continue;
            if (f[0] == "Z" && f.size() == 5) {
                matrices.push_back(abvar::isom::EndMatrix::over_integers(
                    parse_int(f[1], where + " entry a"),
                    parse_int(f[2], where + " entry b"),
                    parse_int(f[3], where + " entry c"),
                    parse_int(f[4], where + " entry d")));
            } else if (f[0] == "quad" && f.size() == 11) {
                const auto ring = abvar::isom::EndRing::quadratic_order(
                    parse_int(f[1], where + " field b"),
                    parse_int(f[2], where + " field c"));
                std::vector<std::int64_t> v;
                for (std::size_t i = 3; i < 11; ++i) {
                    v.push_back(parse_int(f[i], where + " entry " +
                                                  std::to_string(i - 3)));
                }
                matrices.push_back(abvar::isom::EndMatrix{
                    ring, {v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}, {v[6], v[7]}});
            } else {
                throw InputError(where +
                                 ": expected 'Z a b c d' or 'quad b c u v u v "
                                 "u v u v'");
            }
        }
    } else {
        if (matrix_arg.empty()) {
            throw InputError("isom-check needs --matrix or --input");
        }
        const auto ring = parse_ring_arg(ring_arg, "--ring");
        matrices.push_back(parse_matrix_arg(ring, matrix_arg, "--matrix"));
    }
    std::ostringstream table;
    for (const auto& m : matrices) {
        const bool ok = abvar::isom::is_isometric(m);
        out.results.push_back(abvar::report::isom_check_record(m, ok));
        table << "ring: " << m.ring.describe() << "\n";
        table << "f       = " << matrix_display(m) << "\n";
        table << "tilde f = " << matrix_display(abvar::isom::tilde(m)) << "\n";
        table << "isometric: " << (ok ? "yes" : "no") << "\n";
    }
    out.table = table.str();
    return out;
}

RunOutput run_isom_enumerate(const std::string& ring_arg, int height) {
    const auto ring = parse_ring_arg(ring_arg, "--ring");
    const auto found = abvar::isom::enumerate_isometric(ring, height);
    RunOutput out;
    out.results.push_back(
        abvar::report::isom_enumerate_record(ring, height, found));
    std::ostringstream table;
    table << "ring: " << ring.describe() << ", height " << height << "\n";
    table << "isometric matrices: " << found.size() << "\n";
    for (const auto& m : found) table << "  " << matrix_display(m) << "\n";
    out.table = table.str();
    return out;
}

RunOutput run_kernel_report(const std::string& curve_arg,
                            const std::string& input_path) {
    RunOutput out;
    std::vector<abvar::ec::CurveSpec> curves;
    if (!input_path.empty()) {
        for (const auto& [lineno, line] : read_batch(input_path)) {
            const std::string where = "line " + std::to_string(lineno);
            const auto f = fields_of(line);
            if (f.size() != 3) throw InputError(where + ": expected 'p a b'");
            curves.push_back(abvar::ec::parse_curve(
                parse_int(f[0], where + " field p"),
                parse_int(f[1], where + " field a"),
                parse_int(f[2], where + " field b")));
        }
    } else if (!curve_arg.empty()) {
        curves.push_back(parse_curve_arg(curve_arg, "--curve"));
    } else {
        throw InputError("kernel-report needs --curve or --input");
    }
    std::ostringstream table;
    for (const auto& c : curves) {
        const auto r = abvar::isom::kernel_report(c);
        out.results.push_back(abvar::report::kernel_record(c, r));
        table << "curve: y^2 = x^3 + " << c.a << "x + " << c.b << " over F_"
              << c.p << "\n";
        table << "  kernel free rank (shifts):        " << r.free_rank << "\n";
        table << "  E(F_p) order N:                   " << r.point_count << "\n";
        table << "  finite kernel order N^2:          " << r.finite_order << "\n";
    }
    out.table = table.str();
    return out;
}

void emit(const RunOutput& out, const std::string& command,
          const std::string& format) {
    if (format == "record") {
        std::cout << abvar::report::envelope(command, out.results).dump(2)
                  << "\n";
    } else {
        std::cout << out.table;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"abelian-variety automorphism lifting workbench"};
    app.require_subcommand(1);

    std::string format = "table";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "record"}))
        ->capture_default_str();

    // les-solve
    auto* les = app.add_subcommand(
        "les-solve", "deduce forced map properties of an exact sequence");
    LesOptions les_opt;
    auto* les_dims_opt =
        les->add_option("--dims", les_opt.dims,
                        "comma-separated dimensions of V_0..V_n")
            ->delimiter(',');
    les->add_flag("--left-open", les_opt.left_open,
                  "do not impose exactness at V_0 (default: sequence starts 0 -> V_0)");
    les->add_flag("--right-closed", les_opt.right_closed,
                  "impose exactness at V_n (default: sequence trails off)");
    std::int64_t les_g = 0;
    auto* les_g_opt = les->add_option(
        "--g", les_g, "build the deformation-obstruction sequence for this g");
    les->add_flag("--paper-display", les_opt.paper_display,
                  "use 2g (as displayed) instead of g^2 for the fourth term");
    auto* les_input_opt =
        les->add_option("--input", les_opt.input_path, "batch file of sequence specs");
    les_g_opt->excludes(les_dims_opt)->excludes(les_input_opt);
    les_dims_opt->excludes(les_input_opt);

    // dims
    auto* dims_cmd = app.add_subcommand(
        "dims", "dimension report: hodge, hochschild, deformation spaces");
    std::int64_t dims_g = 0;
    dims_cmd->add_option("--g", dims_g, "dimension of the abelian variety")
        ->required();
    std::optional<std::int64_t> dims_char;
    dims_cmd->add_option("--char", dims_char,
                         "field characteristic for the HKR validity flag");

    // ec-analyze
    auto* ec_an = app.add_subcommand("ec-analyze",
                                     "invariants of y^2 = x^3 + ax + b over F_p");
    std::string ec_curve, ec_input;
    ec_an->add_option("--curve", ec_curve, "curve as 'p,a,b'");
    ec_an->add_option("--input", ec_input, "batch file of 'p a b' lines");

    // ec-derived-eq
    auto* ec_eq = app.add_subcommand("ec-derived-eq",
                                     "derived equivalence test for two curves");
    std::string eq_curve, eq_curve2, eq_input;
    ec_eq->add_option("--curve", eq_curve, "first curve as 'p,a,b'");
    ec_eq->add_option("--curve2", eq_curve2, "second curve as 'p,a,b'");
    ec_eq->add_option("--input", eq_input, "batch file of 'p aE bE aF bF' lines");

    // isom-check
    auto* isom_check = app.add_subcommand(
        "isom-check", "test a 2x2 endomorphism matrix for isometry");
    std::string ic_ring = "Z", ic_matrix, ic_input;
    isom_check->add_option("--ring", ic_ring, "'Z' or 'quad:<b>:<c>'")
        ->capture_default_str();
    isom_check->add_option("--matrix", ic_matrix,
                           "4 integers (Z) or 8 (quadratic: u,v per entry), "
                           "row major");
    isom_check->add_option("--input", ic_input, "batch file of matrices");

    // isom-enumerate
    auto* isom_enum = app.add_subcommand(
        "isom-enumerate", "enumerate isometric matrices up to a height");
    std::string ie_ring = "Z";
    int ie_height = 1;
    isom_enum->add_option("--ring", ie_ring, "'Z' or 'quad:<b>:<c>'")
        ->capture_default_str();
    isom_enum->add_option("--height", ie_height,
                          "max |coordinate| of the entries")
        ->required();

    // kernel-report
    auto* kernel = app.add_subcommand(
        "kernel-report", "autoequivalence kernel counting data for a curve");
    std::string kr_curve, kr_input;
    kernel->add_option("--curve", kr_curve, "curve as 'p,a,b'");
    kernel->add_option("--input", kr_input, "batch file of 'p a b' lines");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }

    try {
        RunOutput out;
        std::string command;
        if (les->parsed()) {
            command = "les-solve";
            if (*les_g_opt) les_opt.g = les_g;
            out = run_les(les_opt);
        } else if (dims_cmd->parsed()) {
            command = "dims";
            out = run_dims(dims_g, dims_char);
        } else if (ec_an->parsed()) {
            command = "ec-analyze";
            out = run_ec_analyze(ec_curve, ec_input);
        } else if (ec_eq->parsed()) {
            command = "ec-derived-eq";
            out = run_ec_derived_eq(eq_curve, eq_curve2, eq_input);
        } else if (isom_check->parsed()) {
            command = "isom-check";
            out = run_isom_check(ic_ring, ic_matrix, ic_input);
        } else if (isom_enum->parsed()) {
            command = "isom-enumerate";
            out = run_isom_enumerate(ie_ring, ie_height);
        } else if (kernel->parsed()) {
            command = "kernel-report";
            out = run_kernel_report(kr_curve, kr_input);
        }
        emit(out, command, format);
        return out.exit_code;
    } catch (const abvar::ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const abvar::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}

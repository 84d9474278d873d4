// Command-line front end: solve angle systems, build and verify the catalog,
// run the exhaustive classification, and export renderings.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "sphtile/classify.hpp"
#include "sphtile/embed.hpp"

using namespace sphtile;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 2;
constexpr int kExitDomain = 3;
constexpr int kExitBudget = 4;

struct CaseAngles {
    AngleSet angles;
    std::string note;  // extra context, e.g. the curve parameterization
};

CaseAngles solve_case(const std::string& name, const Tolerances& tol) {
    CaseAngles out;
    if (name == "beta3") {
        out.angles = angles_for_family(FamilyCase::QuadSubdivision, 0, tol).points.at(0);
    } else if (name == "fusion") {
        out.angles = angles_for_family(FamilyCase::Fusion, 0, tol).points.at(0);
    } else if (name == "sporadic") {
        out.angles = angles_for_family(FamilyCase::Sporadic, 0, tol).points.at(0);
    } else if (name == "cube") {
        out.angles = catalog_angles(FamilyId{FamilyId::Tag::Cube, 0}, tol);
        out.note = "one-parameter family; printed at the sample gamma = 0.550000 pi";
    } else if (name.rfind("earth-map:", 0) == 0) {
        int c = 0;
        try {
            c = std::stoi(name.substr(10));
        } catch (const std::exception&) {
            throw DomainError("bad earth-map case: " + name);
        }
        out.angles = earth_map_angles(c);
    } else {
        throw DomainError("unknown case '" + name +
                          "' (expected beta3|fusion|sporadic|earth-map:<c>|cube)");
    }
    return out;
}

void print_tolerances(std::ostream& os, const Tolerances& tol) {
    os << "# tolerances: compat=" << tol.compat << " vertex=" << tol.vertex
       << " root=" << tol.root << " embed=" << tol.embed << " area=" << tol.area << "\n";
}

void print_angles(std::ostream& os, const AngleSet& a) {
    char line[96];
    std::snprintf(line, sizeof line, "alpha = %.6f pi\n", a.alpha / kPi);
    os << line;
    std::snprintf(line, sizeof line, "beta  = %.6f pi\n", a.beta / kPi);
    os << line;
    std::snprintf(line, sizeof line, "gamma = %.6f pi\n", a.gamma / kPi);
    os << line;
    std::snprintf(line, sizeof line, "x     = %.6f pi\n", a.edge / kPi);
    os << line;
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot open for writing: " + path);
    out << content;
}

void add_tolerance_flags(CLI::App* cmd, Tolerances& tol) {
    cmd->add_option("--tol-compat", tol.compat, "compatibility residual tolerance");
    cmd->add_option("--tol-vertex", tol.vertex, "vertex angle-sum tolerance (radians)");
    cmd->add_option("--tol-root", tol.root, "root-finder residual tolerance");
    cmd->add_option("--tol-embed", tol.embed, "embedding closure tolerance");
    cmd->add_option("--tol-area", tol.area, "total area tolerance");
}

std::uint64_t default_node_cap() {
    if (const char* env = std::getenv("SPHTILE_NODE_CAP")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw DomainError("SPHTILE_NODE_CAP is not a number");
        }
    }
    return 100'000'000;
}

int error_json(const char* type, const std::string& message, int code) {
    nlohmann::ordered_json doc;
    doc["error"]["type"] = type;
    doc["error"]["message"] = message;
    std::cerr << doc.dump() << std::endl;
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge-to-edge dihedral spherical tilings by a square and a rhombus"};
    app.require_subcommand(1);
    Tolerances tol;

    std::string case_name, family_text, out_path, in_path, svg_path, csv_path, report_path;
    int max_tiles = 14, jobs = 1, steps = 1000, max_degree = 0;
    double from_gamma = 0.005, to_gamma = 0.4995;
    std::uint64_t node_cap = default_node_cap();

    CLI::App* angles_cmd = app.add_subcommand("angles", "solve a classified angle system");
    angles_cmd->add_option("--case", case_name, "beta3|fusion|sporadic|earth-map:<c>|cube")
        ->required();
    add_tolerance_flags(angles_cmd, tol);

    CLI::App* avc_cmd = app.add_subcommand("avc", "enumerate admissible vertices for a case");
    avc_cmd->add_option("--case", case_name)->required();
    avc_cmd->add_option("--max-degree", max_degree, "vertex degree cap (default 2 pi / gamma)");
    add_tolerance_flags(avc_cmd, tol);

    CLI::App* build_cmd = app.add_subcommand("build", "construct a catalog tiling");
    build_cmd->add_option("family", family_text,
                          "cube|earth-map:<c>|fusion:1|fusion:2|quad-subdivision|sporadic:1|sporadic:2")
        ->required();
    build_cmd->add_option("--out", out_path, "output tiling JSON path")->required();

    CLI::App* verify_cmd = app.add_subcommand("verify", "check a tiling file against a case");
    verify_cmd->add_option("tiling", in_path, "tiling JSON path")->required();
    verify_cmd->add_option("--angles", case_name, "angle case")->required();
    add_tolerance_flags(verify_cmd, tol);

    CLI::App* classify_cmd = app.add_subcommand("classify", "exhaustive search up to a tile budget");
    classify_cmd->add_option("--max-f", max_tiles, "tile budget")->required();
    classify_cmd->add_option("--jobs", jobs, "worker threads");
    classify_cmd->add_option("--node-cap", node_cap, "search node cap");
    classify_cmd->add_option("--report", report_path, "write the JSON run report here");
    add_tolerance_flags(classify_cmd, tol);

    CLI::App* render_cmd = app.add_subcommand("render", "stereographic SVG of a tiling file");
    render_cmd->add_option("tiling", in_path)->required();
    render_cmd->add_option("--angles", case_name)->required();
    render_cmd->add_option("--svg", svg_path)->required();
    add_tolerance_flags(render_cmd, tol);

    CLI::App* plot_cmd = app.add_subcommand("plot-c", "existence curve c(gamma) as CSV");
    plot_cmd->add_option("--from", from_gamma, "start, in units of pi");
    plot_cmd->add_option("--to", to_gamma, "end, in units of pi");
    plot_cmd->add_option("--steps", steps, "row count");
    plot_cmd->add_option("--csv", csv_path, "output path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*angles_cmd) {
            const CaseAngles solved = solve_case(case_name, tol);
            std::cout << "# sphtile angles case=" << case_name << "\n";
            print_tolerances(std::cout, tol);
            if (!solved.note.empty()) std::cout << "# " << solved.note << "\n";
            print_angles(std::cout, solved.angles);
        } else if (*avc_cmd) {
            const CaseAngles solved = solve_case(case_name, tol);
            const Avc avc = enumerate_vertices(solved.angles, max_degree, tol);
            std::cout << "# sphtile avc case=" << case_name << "\n";
            print_tolerances(std::cout, tol);
            for (const VertexType& v : avc.entries)
                std::cout << to_string(v) << "  degree=" << v.degree() << "\n";
        } else if (*build_cmd) {
            const FamilyId id = FamilyId::parse(family_text);
            const Tiling t = build(id);
            write_tiling(t, out_path);
            const TilingStats s = t.stats();
            std::cout << "wrote " << out_path << ": f=" << s.tiles << " squares=" << s.squares
                      << " rhombi=" << s.rhombi << "\n";
        } else if (*verify_cmd) {
            const Tiling t = read_tiling(in_path);
            const CaseAngles solved = solve_case(case_name, tol);
            const VerificationReport report = verify(t, solved.angles, tol);
            std::cout << "# sphtile verify " << in_path << " case=" << case_name << "\n";
            print_tolerances(std::cout, tol);
            std::cout << to_string(report);
            if (!report.all_passed()) return kExitVerification;
        } else if (*classify_cmd) {
            ClassifyOptions opts;
            opts.workers = jobs;
            opts.node_cap = node_cap;
            opts.tol = tol;
            const ClassifyResult result = classify_all(max_tiles, opts);
            std::cout << "# sphtile classify max-f=" << max_tiles << " node-cap=" << node_cap
                      << "\n";
            print_tolerances(std::cout, tol);
            std::cout << "found " << result.tilings.size() << " tilings\n";
            int index = 1;
            for (const FoundTiling& ft : result.tilings) {
                const TilingStats s = ft.tiling.stats();
                std::cout << "tiling " << index++ << ": f=" << s.tiles
                          << " squares=" << s.squares << " rhombi=" << s.rhombi
                          << " avc=" << to_string(ft.tiling.realized_avc())
                          << " source=" << ft.source << "\n  code=" << ft.code << "\n";
            }
            std::cout << "monohedral discarded: " << result.report.monohedral_discarded << "\n";
            if (!report_path.empty()) write_text(report_path, result.report.to_json());
        } else if (*render_cmd) {
            const Tiling t = read_tiling(in_path);
            const CaseAngles solved = solve_case(case_name, tol);
            const VerificationReport report = verify(t, solved.angles, tol);
            if (!report.all_passed()) {
                std::cout << to_string(report);
                return kExitVerification;
            }
            const Embedding e = embed(t, solved.angles, tol);
            write_text(svg_path, export_svg(e, t));
            std::cout << "wrote " << svg_path << " (closure residual " << e.closure_residual
                      << ")\n";
        } else if (*plot_cmd) {
            write_text(csv_path, export_csv_cgamma(from_gamma * kPi, to_gamma * kPi, steps));
            std::cout << "wrote " << csv_path << " (" << steps << " rows)\n";
        }
    } catch (const DomainError& e) {
        return error_json("DomainError", e.what(), kExitDomain);
    } catch (const ParseError& e) {
        return error_json("ParseError", e.what(), kExitDomain);
    } catch (const StructuralError& e) {
        return error_json("StructuralError", e.what(), kExitVerification);
    } catch (const ClosureFailure& e) {
        return error_json("ClosureFailure", e.what(), kExitVerification);
    } catch (const BudgetExceeded& e) {
        return error_json("BudgetExceeded", e.what(), kExitBudget);
    } catch (const IllConditioned& e) {
        return error_json("IllConditioned", e.what(), kExitDomain);
    }
    return kExitOk;
}

// fc — exact verification of skeletal fusion-category data.
//
// Exit codes: 0 all checks pass, 1 a mathematical violation was found,
// 2 usage or input error.

#include "fc/braiding.hpp"
#include "fc/category_io.hpp"
#include "fc/fixtures.hpp"
#include "fc/pentagon_solver.hpp"
#include "fc/pivotal.hpp"
#include "fc/rigidity.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

namespace {

using namespace fc;

enum : int { EXIT_PASS = 0, EXIT_VIOLATION = 1, EXIT_USAGE = 2 };

struct Output {
    bool json = false;
    std::vector<std::pair<std::string, std::string>> fields;  // emitted in insertion order
    std::vector<std::string> lines;

    void field(const std::string& k, const std::string& v) { fields.emplace_back(k, v); }
    void line(const std::string& s) { lines.push_back(s); }

    void flush(std::ostream& os) const {
        if (!json) {
            for (const auto& [k, v] : fields) os << k << ": " << v << "\n";
            for (const auto& l : lines) os << l << "\n";
            return;
        }
        os << "{\n";
        bool first = true;
        for (const auto& [k, v] : fields) {
            os << (first ? "" : ",\n") << "  \"" << k << "\": \"";
            for (char c : v) {
                if (c == '"' || c == '\\') os << '\\';
                os << c;
            }
            os << "\"";
            first = false;
        }
        if (!lines.empty()) {
            os << (first ? "" : ",\n") << "  \"report\": [";
            for (size_t i = 0; i < lines.size(); ++i) {
                os << (i ? ", " : "") << "\"";
                for (char c : lines[i]) {
                    if (c == '"' || c == '\\') os << '\\';
                    os << c;
                }
                os << "\"";
            }
            os << "]";
        }
        os << "\n}\n";
    }
};

std::string cyc_str(const Cyclotomic& c) { return c.to_string(); }

CategoryFile load_or_exit(const std::string& path) {
    try {
        return load_file(path);
    } catch (const ParseError& e) {
        std::cerr << path << ": " << e.what() << "\n";
        std::exit(EXIT_USAGE);
    } catch (const std::exception& e) {
        std::cerr << path << ": " << e.what() << "\n";
        std::exit(EXIT_USAGE);
    }
}

int cmd_validate_ring(const std::string& path, Output& out) {
    CategoryFile f = load_or_exit(path);
    auto rep = validate(f.ring());
    out.field("check", "validate-ring");
    out.field("rank", std::to_string(f.ring().rank()));
    out.field("result", rep.ok() ? "pass" : "fail");
    for (const auto& v : rep.violations) out.line(v.identity);
    return rep.ok() ? EXIT_PASS : EXIT_VIOLATION;
}

int cmd_check_triangle(const std::string& path, Output& out) {
    CategoryFile f = load_or_exit(path);
    auto rep = triangle_check(f.assoc);
    out.field("check", "check-triangle");
    out.field("result", rep.ok() ? "pass" : "fail");
    for (const auto& v : rep.violations)
        out.line("non-identity unit associator " + assoc_name(f.ring(), v.key));
    return rep.ok() ? EXIT_PASS : EXIT_VIOLATION;
}

int cmd_check_pentagon(const std::string& path, int jobs, Output& out) {
    CategoryFile f = load_or_exit(path);
    try {
        f.assoc.check_well_formed();
    } catch (const std::exception& e) {
        std::cerr << path << ": " << e.what() << "\n";
        return EXIT_USAGE;
    }
    auto rep = pentagon_check(f.assoc, jobs);
    out.field("check", "check-pentagon");
    out.field("instances", std::to_string(rep.instances_checked));
    std::string census;
    for (const auto& [dim, count] : rep.census.nontrivial_by_dim) {
        if (!census.empty()) census += ", ";
        census += std::to_string(count) + " of dimension " + std::to_string(dim);
    }
    out.field("nontrivial_census", census);
    out.field("one_dim_raw", std::to_string(rep.census.onedim_raw));
    out.field("one_dim_distinct", std::to_string(rep.census.onedim_distinct));
    out.field("result", rep.ok() ? "pass" : "fail");
    for (const auto& v : rep.violations)
        out.line("violated " + pentagon_name(f.ring(), v.x, v.y, v.z, v.w, v.u) + " (dimension " +
                 std::to_string(v.dim) + ")");
    return rep.ok() ? EXIT_PASS : EXIT_VIOLATION;
}

int cmd_solve_pentagon(const std::string& outdir, Output& out) {
    auto sols = solve_pentagon();
    out.field("check", "solve-pentagon");
    out.field("solutions", std::to_string(sols.size()));
    for (size_t i = 0; i < sols.size(); ++i) {
        const auto& s = sols[i];
        out.line("solution " + std::to_string(i + 1) + ": b = " + cyc_str(s.b) +
                 ", phi = " + cyc_str(s.phi) + ", d = " + cyc_str(s.d) + ", w = " + cyc_str(s.w) +
                 ", y = " + cyc_str(s.y) + ", z = " + cyc_str(s.z));
        if (!outdir.empty()) {
            CategoryFile f;
            f.assoc = s.F;
            std::filesystem::create_directories(outdir);
            save_file(outdir + "/solution_" + std::to_string(i + 1) + ".fc", f);
        }
    }
    if (!outdir.empty()) out.field("written", outdir);
    return EXIT_PASS;
}

int cmd_galois_orbit(const std::string& path, int k, const std::string& outfile, Output& out) {
    CategoryFile f = load_or_exit(path);
    AssociatorSet img = f.assoc.galois(k);
    out.field("check", "galois-orbit");
    out.field("k", std::to_string(k));
    bool ok = pentagon_check(img).ok();
    out.field("image_pentagon", ok ? "pass" : "fail");
    CategoryFile g;
    g.assoc = img;
    if (!outfile.empty()) {
        save_file(outfile, g);
        out.field("written", outfile);
    } else if (!out.json) {
        out.line(serialize(g));
    }
    return ok ? EXIT_PASS : EXIT_VIOLATION;
}

int cmd_check_hexagon(const std::string& path, Output& out) {
    CategoryFile f = load_or_exit(path);
    out.field("check", "check-hexagon");
    if (!f.r_symbols) {
        std::cerr << path << ": no r_symbols section to check\n";
        return EXIT_USAGE;
    }
    RSymbolSet R;
    R.blocks = *f.r_symbols;
    bool ok = true;
    size_t checked = 0;
    for (const auto& id : all_hexagon_instances(f.ring())) {
        auto resid = hexagon_residual(f.assoc, R, id.dir, id.x, id.y, id.z, id.t);
        ++checked;
        if (!resid.is_zero()) {
            ok = false;
            out.line("violated " + hexagon_name(f.ring(), id.dir, id.x, id.y, id.z, id.t));
        }
    }
    out.field("instances", std::to_string(checked));
    out.field("result", ok ? "pass" : "fail");
    return ok ? EXIT_PASS : EXIT_VIOLATION;
}

int cmd_prove_no_braiding(const std::string& path, Output& out) {
    CategoryFile f = load_or_exit(path);
    out.field("check", "prove-no-braiding");
    try {
        auto cert = prove_no_braiding(f.assoc);
        out.field("result", "no braiding exists");
        for (const auto& s : cert.steps) out.line("[" + s.source + "] " + s.constraint);
        out.line("contradiction: " + cert.contradiction);
        auto sb = search_braidings(f.assoc);
        out.field("exhaustive_search_agrees", sb.empty() ? "yes" : "no");
        return sb.empty() ? EXIT_PASS : EXIT_VIOLATION;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return EXIT_USAGE;
    }
}

int cmd_pivotal(const std::string& path, Output& out) {
    CategoryFile f = load_or_exit(path);
    auto R = build_rigidity(f.assoc);
    auto piv = pivotal_structures(f.assoc, R);
    out.field("check", "pivotal");
    out.field("result", piv.pivotal ? "pivotal" : "not pivotal");
    if (!piv.pivotal) {
        out.line(piv.obstruction);
        return EXIT_VIOLATION;
    }
    out.field("structures", std::to_string(piv.structures.size()));
    out.field("b_cubed_identity", piv.b_cubed.is_identity() ? "yes" : "no");
    for (size_t i = 0; i < piv.structures.size(); ++i) {
        std::string ts;
        for (size_t s = 0; s < f.ring().rank(); ++s) {
            if (s) ts += ", ";
            ts += "t_" + f.ring().label(s) + " = " + cyc_str(piv.structures[i].t[s]);
        }
        out.line("structure " + std::to_string(i + 1) + ": " + ts);
    }
    return EXIT_PASS;
}

int cmd_traces(const std::string& path, Output& out) {
    CategoryFile f = load_or_exit(path);
    auto R = build_rigidity(f.assoc);
    auto piv = pivotal_structures(f.assoc, R);
    out.field("check", "traces");
    if (!piv.pivotal || piv.structures.empty()) {
        std::cerr << "no pivotal structure; traces undefined\n";
        return EXIT_VIOLATION;
    }
    const auto& P = piv.structures.front();
    auto rep = spherical_check(f.assoc, R, P);
    for (size_t s = 0; s < f.ring().rank(); ++s)
        out.line("strand " + f.ring().label(s) + ": tr_r(Id) = " +
                 cyc_str(rep.strand_traces[s].first) + ", tr_l(Id) = " +
                 cyc_str(rep.strand_traces[s].second));
    out.field("spherical", rep.spherical ? "yes" : "no");
    return rep.spherical ? EXIT_PASS : EXIT_VIOLATION;
}

int cmd_snake_check(const std::string& path, Output& out) {
    CategoryFile f = load_or_exit(path);
    RigidityStructure R;
    if (f.birth && f.death) {
        R.birth = *f.birth;
        R.death = *f.death;
    } else {
        R = build_rigidity(f.assoc);
    }
    auto snakes = snake_check(f.assoc, R);
    out.field("check", "snake-check");
    bool ok = true;
    for (size_t s = 0; s < f.ring().rank(); ++s) {
        out.line("strand " + f.ring().label(s) + ": right = " + cyc_str(snakes[s].first) +
                 ", left = " + cyc_str(snakes[s].second));
        if (snakes[s].first != Cyclotomic(1) || snakes[s].second != Cyclotomic(1)) ok = false;
    }
    out.field("result", ok ? "pass" : "fail");
    return ok ? EXIT_PASS : EXIT_VIOLATION;
}

int cmd_enumerate_rings(size_t rank, int max_entry, Output& out) {
    EnumerationOptions opt;
    opt.rank = rank;
    opt.max_entry = max_entry;
    auto rings = enumerate_rings(opt);
    out.field("check", "enumerate-rings");
    out.field("rank", std::to_string(rank));
    out.field("max_entry", std::to_string(max_entry));
    out.field("count", std::to_string(rings.size()));
    for (size_t i = 0; i < rings.size(); ++i) {
        std::ostringstream ss;
        ss << "ring " << i + 1 << ":";
        const auto& r = rings[i];
        for (size_t a = 0; a < r.rank(); ++a)
            for (size_t b = 0; b < r.rank(); ++b) {
                if (a == r.unit() || b == r.unit()) continue;
                ss << " " << r.label(a) << "*" << r.label(b) << "=";
                bool any = false;
                for (size_t c = 0; c < r.rank(); ++c)
                    for (int m = 0; m < r.n(a, b, c); ++m) {
                        if (any) ss << "+";
                        ss << r.label(c);
                        any = true;
                    }
                if (!any) ss << "0";
            }
        out.line(ss.str());
    }
    return EXIT_PASS;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact fusion-category verification"};
    app.require_subcommand(1);
    app.fallthrough();  // accept the global flags after the subcommand too

    std::string emit = "text";
    int jobs = 1;
    app.add_option("--emit", emit, "report format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", jobs, "worker threads for instance checks")->check(CLI::Range(1, 64));

    std::string path, outfile, outdir;
    int k = 1;
    size_t rank = 2;
    int max_entry = 1;

    auto* validate_ring = app.add_subcommand("validate-ring", "check fusion ring axioms");
    validate_ring->add_option("file", path)->required();
    auto* tri = app.add_subcommand("check-triangle", "check unit coherence");
    tri->add_option("file", path)->required();
    auto* pent = app.add_subcommand("check-pentagon", "check every pentagon instance exactly");
    pent->add_option("file", path)->required();
    auto* solve = app.add_subcommand("solve-pentagon", "classify the rank-3 solutions");
    solve->add_option("-o,--outdir", outdir, "write the solutions as .fc files");
    auto* orbit = app.add_subcommand("galois-orbit", "apply a Galois automorphism");
    orbit->add_option("file", path)->required();
    orbit->add_option("--k", k, "automorphism exponent")->required()->check(CLI::IsMember({1, 5, 7, 11}));
    orbit->add_option("-o,--out", outfile, "output file");
    auto* hex = app.add_subcommand("check-hexagon", "check hexagon instances of stored R-symbols");
    hex->add_option("file", path)->required();
    auto* nobraid = app.add_subcommand("prove-no-braiding", "derive the hexagon contradiction");
    nobraid->add_option("file", path)->required();
    auto* piv = app.add_subcommand("pivotal", "compute pivotal structures via the bending map");
    piv->add_option("file", path)->required();
    auto* tr = app.add_subcommand("traces", "left/right traces and quantum dimensions");
    tr->add_option("file", path)->required();
    auto* snake = app.add_subcommand("snake-check", "verify the zig-zag identities");
    snake->add_option("file", path)->required();
    auto* enu = app.add_subcommand("enumerate-rings", "enumerate small fusion rings");
    enu->add_option("--rank", rank, "ring rank (1..4)")->required();
    enu->add_option("--max-entry", max_entry, "largest multiplicity");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : EXIT_USAGE;
    }

    Output out;
    out.json = emit == "json";
    int code = EXIT_USAGE;
    try {
        if (*validate_ring) code = cmd_validate_ring(path, out);
        else if (*tri) code = cmd_check_triangle(path, out);
        else if (*pent) code = cmd_check_pentagon(path, jobs, out);
        else if (*solve) code = cmd_solve_pentagon(outdir, out);
        else if (*orbit) code = cmd_galois_orbit(path, k, outfile, out);
        else if (*hex) code = cmd_check_hexagon(path, out);
        else if (*nobraid) code = cmd_prove_no_braiding(path, out);
        else if (*piv) code = cmd_pivotal(path, out);
        else if (*tr) code = cmd_traces(path, out);
        else if (*snake) code = cmd_snake_check(path, out);
        else if (*enu) code = cmd_enumerate_rings(rank, max_entry, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    }
    out.flush(std::cout);
    return code;
}

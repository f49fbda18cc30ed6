#include "fjl/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <map>

#include <CLI11.hpp>

#include "fjl/dynamics.hpp"
#include "fjl/render.hpp"
#include "fjl/tree.hpp"
#include "fjl/verifier.hpp"

namespace fjl {

namespace {

int report_precision() {
    const char* env = std::getenv("FJL_REPORT_PRECISION");
    if (!env) return 12;
    int v = std::atoi(env);
    return v >= 1 && v <= 64 ? v : 12;
}

std::string family_of(const std::string& id) {
    auto b = id.find('[');
    return b == std::string::npos ? id : id.substr(0, b);
}

int cmd_verify(int jmax, int lattice, const std::string& report_path, std::ostream& out) {
    VerifyConfig cfg;
    cfg.j_max = jmax;
    cfg.lattice = lattice;
    std::vector<CheckReport> reports = run_all(Construction{}, cfg);

    int sig = report_precision();
    struct FamilyStats {
        long long pass = 0, fail = 0;
        std::optional<Rat> min_margin;
        std::vector<std::string> failed_ids;
    };
    std::map<std::string, FamilyStats> families;
    std::vector<std::string> order;
    for (const CheckReport& r : reports) {
        std::string fam = family_of(r.id);
        if (!families.count(fam)) order.push_back(fam);
        FamilyStats& st = families[fam];
        (r.passed() ? st.pass : st.fail) += 1;
        if (!r.passed()) st.failed_ids.push_back(r.id);
        Rat m = r.margin();
        if (!st.min_margin || m < *st.min_margin) st.min_margin = m;
    }

    long long total_pass = 0, total_fail = 0;
    for (const std::string& fam : order) {
        const FamilyStats& st = families[fam];
        total_pass += st.pass;
        total_fail += st.fail;
        out << fam << ": " << st.pass << "/" << (st.pass + st.fail)
            << " pass, min margin " << st.min_margin->decimal(sig) << "\n";
        for (const std::string& id : st.failed_ids) out << "  FAIL " << id << "\n";
    }
    out << "summary: " << (total_pass + total_fail) << " checks, " << total_pass
        << " pass, " << total_fail << " fail\n";

    if (!report_path.empty()) {
        std::ofstream f(report_path);
        if (!f) throw std::runtime_error("cannot write report to " + report_path);
        f << report_to_json(reports).dump(2) << "\n";
    }
    return total_fail == 0 ? 0 : 1;
}

int cmd_measure_complement(int n, std::ostream& out) {
    SeriesResult s = measure_complement(n);
    int sig = report_precision();
    out << "partial_sum  " << s.partial_sum.str() << "  ~ " << s.partial_sum.decimal(sig)
        << "\n"
        << "tail_bound   " << s.tail_bound.str() << "  ~ " << s.tail_bound.decimal(sig)
        << "\n"
        << "closed_form  " << s.closed_form.str() << "  ~ " << s.closed_form.decimal(sig)
        << "\n";
    return 0;
}

int cmd_tree(int depth, std::ostream& out) {
    Construction c;
    for (int j = 1; j <= depth; ++j) {
        LevelSummary s = level_summary(c, j);
        out << level_to_json(s, measure_lower_bound(c, j)).dump() << "\n";
    }
    return 0;
}

int cmd_orbit(const std::string& xs, const std::string& ys, int steps,
              const std::string& out_path, std::ostream& out) {
    Construction c;
    QPoint seed{Rat::from_string(xs), Rat::from_string(ys)};
    OrbitRecord rec = orbit(c, seed, steps);
    std::string jsonl = orbit_to_jsonl(c, rec);
    if (out_path.empty()) {
        out << jsonl;
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot write orbit to " + out_path);
        f << jsonl;
    }
    return 0;
}

QBox parse_viewport(const std::string& spec) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : spec) {
        if (ch == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 4)
        throw std::invalid_argument("viewport must be x_lo:x_hi:y_lo:y_hi");
    return QBox(Rat::from_string(parts[0]), Rat::from_string(parts[1]),
                Rat::from_string(parts[2]), Rat::from_string(parts[3]));
}

int write_scene(const Scene& scene, const std::string& out_path, const std::string& format,
                int width) {
    std::string payload;
    if (format == "svg") {
        payload = scene_to_svg(scene, report_precision(), width > 0 ? width : 720);
    } else if (format == "ppm") {
        payload = scene_to_ppm(scene, width > 0 ? width : 256);
    } else {
        throw std::invalid_argument("format must be svg or ppm");
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write figure to " + out_path);
    f.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact construction, dynamics, and proof-ledger toolkit"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run the full proof ledger");
    int jmax = 32, lattice = 16;
    std::string report_path;
    verify->add_option("--jmax", jmax, "level sweep bound")->check(CLI::PositiveNumber);
    verify->add_option("--lattice", lattice, "lattice index bound")
        ->check(CLI::PositiveNumber);
    verify->add_option("--report", report_path, "write the JSON report here");

    // measure complement
    auto* measure = app.add_subcommand("measure", "measure computations");
    measure->require_subcommand(1);
    auto* complement = measure->add_subcommand("complement", "complement-measure series");
    int series_n = 64;
    complement->add_option("--n", series_n, "truncation index")
        ->check(CLI::NonNegativeNumber);

    // tree
    auto* tree = app.add_subcommand("tree", "per-level tree summaries as JSON lines");
    int tree_depth = 6;
    tree->add_option("--depth", tree_depth, "deepest level to print")
        ->check(CLI::PositiveNumber);

    // orbit
    auto* orb = app.add_subcommand("orbit", "iterate the exact model map");
    std::string orbit_x, orbit_y, orbit_out;
    int orbit_steps = 8;
    orb->add_option("--x", orbit_x, "seed real part, e.g. 29/32")->required();
    orb->add_option("--y", orbit_y, "seed imaginary part")->required();
    orb->add_option("--steps", orbit_steps, "maximum steps")->check(CLI::NonNegativeNumber);
    orb->add_option("--out", orbit_out, "write JSON lines here instead of stdout");

    // render
    auto* render = app.add_subcommand("render", "figure generation");
    render->require_subcommand(1);
    std::string render_out, render_format = "svg", viewport_spec = "-3:9:-3:5";
    std::string exaggerate = "1";
    int render_width = 0, zoom_j = 1, render_depth = 3;
    long long render_cap = 1000000;

    auto* overview = render->add_subcommand("overview", "P and Q^3 squares");
    overview->add_option("--out", render_out, "output path")->required();
    overview->add_option("--viewport", viewport_spec, "x_lo:x_hi:y_lo:y_hi (rationals)");
    overview->add_option("--format", render_format, "svg or ppm");
    overview->add_option("--width", render_width, "pixel width");

    auto* zoom = render->add_subcommand("zoom", "one Q square with its R grid");
    zoom->add_option("--j", zoom_j, "Q index")->check(CLI::PositiveNumber);
    zoom->add_option("--out", render_out, "output path")->required();
    zoom->add_option("--exaggerate", exaggerate, "inset exaggeration factor (rational)");
    zoom->add_option("--format", render_format, "svg or ppm");
    zoom->add_option("--width", render_width, "pixel width");

    auto* rtree = render->add_subcommand("tree", "tree level fills");
    rtree->add_option("--depth", render_depth, "level to draw")->check(CLI::PositiveNumber);
    rtree->add_option("--out", render_out, "output path")->required();
    rtree->add_option("--cap", render_cap, "node enumeration cap");
    rtree->add_option("--format", render_format, "svg or ppm");
    rtree->add_option("--width", render_width, "pixel width");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        Construction c;
        if (*verify) return cmd_verify(jmax, lattice, report_path, out);
        if (*complement) return cmd_measure_complement(series_n, out);
        if (*tree) return cmd_tree(tree_depth, out);
        if (*orb) return cmd_orbit(orbit_x, orbit_y, orbit_steps, orbit_out, out);
        if (*overview)
            return write_scene(render_overview(c, parse_viewport(viewport_spec)),
                               render_out, render_format, render_width);
        if (*zoom)
            return write_scene(render_q_zoom(c, zoom_j, Rat::from_string(exaggerate)),
                               render_out, render_format, render_width);
        if (*rtree)
            return write_scene(render_tree(c, render_depth, render_cap), render_out,
                               render_format, render_width);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace fjl

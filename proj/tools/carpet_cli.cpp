// carpet: command-line front end.
//
// Exit codes: 0 certified / found / ok, 1 refuted / none, 2 unknown, 3 error.

#include "carpet/certifier.hpp"
#include "carpet/digitsets.hpp"
#include "carpet/dimension.hpp"
#include "carpet/dimension_lab.hpp"
#include "carpet/errors.hpp"
#include "carpet/hull.hpp"
#include "carpet/render.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace carpet;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kRefuted = 1, kUnknown = 2, kError = 3 };

struct Globals {
    unsigned precision = 30;
    std::optional<unsigned> depth;
    std::size_t budget = kDefaultStateBudget;
    std::string out;
    bool json = false;
    bool flip_y = false;
    bool allow_full = false;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string real_str(const HighReal& v, unsigned digits) { return v.str(static_cast<std::streamsize>(digits)); }

std::string bool_str(bool b) { return b ? "true" : "false"; }

json point_json(const Point2& z) { return json::array({z.x.str(), z.y.str()}); }

json digit_json(const Digit& d) { return json::array({d.i, d.j}); }

void emit(const Globals& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + g.out);
    f << text;
    if (!f) throw std::runtime_error("write to " + g.out + " failed");
}

std::string dump(json j) { return j.dump(2) + "\n"; }

Point2 parse_point(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError("expected <x>,<y>, got '" + text + "'");
    return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

// "(01)" style words in base m, or a rational whose first admissible
// expansion is taken.
EventuallyPeriodicDigits parse_slice_y(const CarpetPattern& p, const std::string& text) {
    if (text.find('(') != std::string::npos) return EventuallyPeriodicDigits::parse(p.m(), text);
    const auto options = slice_digits(p, parse_rational(text));
    if (options.empty()) throw DomainError("y = " + text + " has no expansion with digits in the occupied rows");
    return options.front();
}

// ---------------------------------------------------------------------------

int cmd_render(const Globals& g, const CarpetPattern& p, const std::string& format, std::uint64_t width,
               std::uint64_t height, bool hull, const std::string& slice_y, const std::vector<std::string>& markers) {
    RenderOptions opt;
    opt.level = g.depth.value_or(3);
    opt.width = width;
    opt.height = height;
    opt.flip_y = g.flip_y;
    if (format == "pbm") {
        if (hull || !slice_y.empty() || !markers.empty()) throw UsageError("overlays need --format svg");
        emit(g, render_pbm(p, opt));
        return kOk;
    }
    SvgOverlays ov;
    ov.hull = hull;
    if (!slice_y.empty()) ov.slice_y = parse_rational(slice_y);
    for (const auto& m : markers) ov.markers.push_back(parse_point(m));
    emit(g, render_svg(p, opt, ov));
    return kOk;
}

json hull_json(const CarpetPattern& p, std::string& text) {
    std::ostringstream os;
    json j;
    try {
        const HullPolygon h = convex_hull(p);
        const auto alpha = interior_angles(h);
        json verts = json::array();
        os << "hull.vertices=" << h.vertices.size() << "\n";
        os << "hull.equalsCarpetHull=" << bool_str(h.equals_carpet_hull) << "\n";
        for (std::size_t t = 0; t < h.vertices.size(); ++t) {
            const auto tan = alpha[t].tangent();
            const std::string tan_s = tan ? tan->str() : "inf";
            os << "vertex " << (t + 1) << " " << to_string(h.vertices[t]) << " digit " << to_string(h.source_digits[t])
               << " angle " << alpha[t].str() << " tan " << tan_s << "\n";
            verts.push_back({{"point", point_json(h.vertices[t])},
                             {"digit", digit_json(h.source_digits[t])},
                             {"angle", json::array({alpha[t].dot().str(), alpha[t].cross().str()})},
                             {"tangent", tan_s}});
        }
        json sums = json::array();
        for (const AngleRep& a : angle_sums(h)) {
            const auto tan = a.tangent();
            const std::string tan_s = tan ? tan->str() : "inf";
            const std::string verdict = to_string(niven_admissible(a));
            os << "angle-sum " << a.str() << " tan " << tan_s << " " << verdict << "\n";
            sums.push_back({{"angle", json::array({a.dot().str(), a.cross().str()})},
                            {"tangent", tan_s},
                            {"niven", verdict}});
        }
        j = {{"degenerate", false},
             {"equalsCarpetHull", h.equals_carpet_hull},
             {"vertices", verts},
             {"angleSums", sums}};
    } catch (const DegenerateError& e) {
        os << "hull=degenerate (" << e.what() << ")\n";
        j = {{"degenerate", true}, {"reason", e.what()}};
    }
    text = os.str();
    return j;
}

int cmd_hull(const Globals& g, const CarpetPattern& p, const std::string& svg) {
    std::string text;
    json j = hull_json(p, text);
    if (!svg.empty()) {
        RenderOptions opt;
        opt.level = g.depth.value_or(3);
        opt.flip_y = g.flip_y;
        SvgOverlays ov;
        ov.hull = !j["degenerate"].get<bool>();
        std::ofstream f(svg);
        if (!f) throw std::runtime_error("cannot write " + svg);
        f << render_svg(p, opt, ov);
    }
    if (g.json) {
        json top{{"schema", 1}};
        top.update(j);
        emit(g, dump(top));
    } else {
        emit(g, text);
    }
    return kOk;
}

int cmd_report(const Globals& g, const CarpetPattern& p) {
    const auto c = classify(p);
    const HighReal dim = hausdorff_dimension(p, g.precision);
    const auto mr = marstrand_report(p, g.precision);
    std::string hull_text;
    json hull = hull_json(p, hull_text);
    if (g.json) {
        json j{{"schema", 1},
               {"n", p.n()},
               {"m", p.m()},
               {"digits", json::array()},
               {"dimension", real_str(dim, g.precision)},
               {"selfSimilar", c.self_similar},
               {"independent", !c.log_ratio_rational},
               {"lineSupported", c.line_supported},
               {"vacantRow", c.has_vacant_row},
               {"fullRow", c.has_full_row},
               {"maxRowCount", c.max_row_count},
               {"hull", hull},
               {"marstrand",
                {{"dimMinusOne", real_str(mr.dim_minus_one, g.precision)},
                 {"rowBound", real_str(mr.row_bound, g.precision)},
                 {"nonUniform", mr.non_uniform},
                 {"strict", mr.strict_holds},
                 {"note", mr.note}}}};
        for (const Digit& d : p.digits()) j["digits"].push_back(digit_json(d));
        emit(g, dump(j));
        return kOk;
    }
    std::ostringstream os;
    os << "n=" << p.n() << " m=" << p.m() << " digits=" << p.digits().size() << "\n";
    os << "dim=" << real_str(dim, g.precision) << "\n";
    os << "selfSimilar=" << bool_str(c.self_similar) << "\n";
    os << "independent=" << bool_str(!c.log_ratio_rational) << "\n";
    os << "lineSupported=" << bool_str(c.line_supported) << "\n";
    os << "vacantRow=" << bool_str(c.has_vacant_row) << " fullRow=" << bool_str(c.has_full_row)
       << " N=" << c.max_row_count << "\n";
    os << hull_text;
    os << "marstrand: dim-1=" << real_str(mr.dim_minus_one, 12) << " logN/logn=" << real_str(mr.row_bound, 12);
    if (mr.non_uniform) os << (mr.strict_holds ? " strict inequality holds" : " STRICT INEQUALITY FAILED");
    os << " (" << mr.note << ")\n";
    emit(g, os.str());
    return kOk;
}

int cmd_slice(const Globals& g, const CarpetPattern& p, const std::string& y_text, unsigned p_prime,
              const std::string& side) {
    const auto y = parse_slice_y(p, y_text);
    const unsigned level = g.depth.value_or(2);
    if (p_prime == 0) p_prime = level + 2;
    const auto approx = slice_approx(p, y, level);
    const auto gaps = slice_gaps(p, y, level, p_prime);
    const auto dim = slice_lower_box_dim(p, y);
    std::optional<std::vector<IsolatedPoint>> iso;
    if (!side.empty()) iso = isolated_points(p, y, side == "left" ? Side::left : Side::right, level);

    const Rational scale = rpow(Rational(p.n()), -static_cast<int>(level));
    if (g.json) {
        json endpoints = json::array();
        for (auto e : approx.left_endpoints) endpoints.push_back((Rational(static_cast<long>(e)) * scale).str());
        json gj = json::array();
        for (const auto& gap : gaps.gaps) gj.push_back(json::array({gap.lo.str(), gap.hi.str()}));
        json args = json::array();
        for (std::size_t k = 1; k <= dim.period_length; ++k) {
            args.push_back(p.row_count(y.digit_at(y.preperiod().size() + k)));
        }
        json j{{"schema", 1},
               {"y", y.str()},
               {"level", level},
               {"certificationLevel", p_prime},
               {"endpoints", endpoints},
               {"gaps", gj},
               {"maxScaledGap", gaps.max_scaled_gap.str()},
               {"dim", dim.str()},
               {"dim_log_numerator_args", args},
               {"dim_log_denominator", {{"periodLength", dim.period_length}, {"base", dim.base}}},
               {"attainsBound", dim.attains_bound}};
        if (iso) {
            json pts = json::array();
            for (const auto& ip : *iso) pts.push_back({{"point", ip.point.str()}, {"radius", ip.radius.str()}});
            j["isolated"] = {{"side", side}, {"points", pts}};
        }
        emit(g, dump(j));
        return kOk;
    }
    std::ostringstream os;
    os << "level=" << level << " count=" << approx.left_endpoints.size() << " maxgap=" << numerator(gaps.max_scaled_gap)
       << "/" << denominator(gaps.max_scaled_gap) << " dim=" << dim.str() << "\n";
    for (const auto& gap : gaps.gaps) os << "gap " << gap.lo.str() << " " << gap.hi.str() << "\n";
    if (iso) {
        for (const auto& ip : *iso) os << "isolated-" << side << " " << ip.point.str() << " radius " << ip.radius.str() << "\n";
    }
    emit(g, os.str());
    return kOk;
}

json witness_json(const Witness& w) { return {{"source", point_json(w.source)}, {"image", point_json(w.image)}}; }

json certificate_json(const SymmetryCertificate& c) {
    json perm = json::array();
    for (const auto& [a, b] : c.permutation) perm.push_back(json::array({digit_json(a), digit_json(b)}));
    return {{"orthogonal",
             {{"a", c.orthogonal.a().str()},
              {"b", c.orthogonal.b().str()},
              {"kind", c.orthogonal.is_rotation() ? "rotation" : "reflection"}}},
            {"perDigitOffset", point_json(c.per_digit_offset)},
            {"globalTranslation", point_json(c.global_translation)},
            {"permutation", perm}};
}

int cmd_verify(const Globals& g, const CarpetPattern& p, const std::string& literal) {
    const RationalSimilitude f = parse_similitude(literal);
    const PrefilterReport pre = embedding_prefilter(p, f);
    json j{{"schema", 1}, {"map", f.str()}};
    json checks = json::array();
    for (const auto& c : pre.checks) {
        checks.push_back({{"name", c.name}, {"applicable", c.applicable}, {"ruledOut", c.ruled_out}, {"detail", c.detail}});
    }
    j["prefilter"] = {{"checks", checks}, {"isometry", pre.isometry}, {"verdict", pre.verdict}};
    std::ostringstream os;
    os << "map: " << f.str() << "\n" << format_prefilter(pre);

    auto finish = [&](const std::string& verdict, int code) {
        j["verdict"] = verdict;
        os << "result: " << verdict << "\n";
        emit(g, g.json ? dump(j) : os.str());
        return code;
    };
    if (pre.ruled_out) return finish(pre.verdict, kRefuted);

    if (p.self_similar() && f.is_similitude() && f.scale().is_one()) {
        const Rational k(p.n() - 1);
        const Point2& t = f.translation();
        if (auto cert = digit_symmetry_check(p, f.orthogonal(), {t.x * k, t.y * k})) {
            j["certificate"] = certificate_json(*cert);
            os << format_certificate(*cert);
            return finish("certified symmetry", kOk);
        }
    }
    try {
        const auto v = grid_containment_certify(p, f, g.budget);
        j["containment"] = {{"status", to_string(v.status)}, {"depth", v.depth}, {"states", v.state_count}, {"note", v.note}};
        os << "containment: " << to_string(v.status) << " depth=" << v.depth << " states=" << v.state_count;
        if (!v.note.empty()) os << " (" << v.note << ")";
        os << "\n";
        if (v.witness) {
            j["witness"] = witness_json(*v.witness);
            os << "witness: source=" << to_string(v.witness->source) << " image=" << to_string(v.witness->image) << "\n";
        }
        switch (v.status) {
            case ContainmentStatus::certified: return finish("certified containment", kOk);
            case ContainmentStatus::refuted: return finish("refuted", kRefuted);
            case ContainmentStatus::unknown: return finish("unknown", kUnknown);
        }
    } catch (const PreconditionError& e) {
        os << "containment: not grid-aligned, sampling fixed points\n";
    }
    const unsigned depth = g.depth.value_or(4);
    if (auto w = refute_embedding(p, f, depth)) {
        j["witness"] = witness_json(*w);
        os << "witness: source=" << to_string(w->source) << " image=" << to_string(w->image) << "\n";
        return finish("refuted", kRefuted);
    }
    return finish("unknown (no witness up to depth " + std::to_string(depth) + ")", kUnknown);
}

int cmd_search(const Globals& g, const CarpetPattern& p, int max_hyp) {
    if (!p.self_similar()) throw UsageError("search needs n == m");
    const auto certs = symmetry_search(p, max_hyp);
    bool nontrivial = false;
    for (const auto& c : certs) nontrivial = nontrivial || !c.orthogonal.is_identity();
    if (g.json) {
        json list = json::array();
        for (const auto& c : certs) list.push_back(certificate_json(c));
        emit(g, dump({{"schema", 1}, {"maxHypotenuse", max_hyp}, {"count", certs.size()}, {"certificates", list}}));
    } else {
        std::ostringstream os;
        os << "certificates=" << certs.size() << "\n";
        for (std::size_t k = 0; k < certs.size(); ++k) os << "--- " << (k + 1) << "\n" << format_certificate(certs[k]);
        emit(g, os.str());
    }
    return nontrivial ? kOk : kRefuted;
}

int cmd_project(const Globals& g, const CarpetPattern& p, const std::string& dir, unsigned k_min, unsigned k_max,
                std::optional<unsigned> growth, const std::string& csv) {
    const Point2 u = parse_point(dir);
    if (growth) {
        const auto r = projection_growth_check(p, u, *growth);
        if (g.json) {
            emit(g, dump({{"schema", 1},
                          {"p", r.p},
                          {"k", r.k},
                          {"count", r.count},
                          {"digitsPow", r.digits_pow},
                          {"passed", r.passed}}));
        } else {
            emit(g, "p=" + std::to_string(r.p) + " k=" + std::to_string(r.k) + " count=" + std::to_string(r.count) +
                        " required=" + std::to_string(r.digits_pow) + "/2 " + (r.passed ? "passed" : "FAILED") + "\n");
        }
        return r.passed ? kOk : kRefuted;
    }
    const auto est = box_count_projection(p, u, k_min, k_max);
    std::ostringstream table;
    table << "level,boxCount\n";
    for (const auto& [k, c] : est.levels) table << k << "," << c << "\n";
    if (!csv.empty()) {
        std::ofstream f(csv);
        if (!f) throw std::runtime_error("cannot write " + csv);
        f << table.str();
    }
    if (g.json) {
        json levels = json::array();
        for (const auto& [k, c] : est.levels) levels.push_back({{"level", k}, {"boxCount", c}});
        emit(g, dump({{"schema", 1},
                      {"direction", est.descriptor},
                      {"estimate", est.value},
                      {"stderr", est.stderr_},
                      {"expected", est.expected},
                      {"difference", est.value - est.expected},
                      {"theoremApplies", est.theorem_applies},
                      {"note", est.note},
                      {"levels", levels}}));
    } else {
        std::ostringstream os;
        if (csv.empty()) os << table.str();
        os << "estimate=" << est.value << " stderr=" << est.stderr_ << " expected=min(dim,1)=" << est.expected;
        if (!est.note.empty()) os << " (" << est.note << ")";
        os << "\n";
        emit(g, os.str());
    }
    return kOk;
}

int cmd_marstrand(const Globals& g, const CarpetPattern& p) {
    const auto r = marstrand_report(p, g.precision);
    if (g.json) {
        emit(g, dump({{"schema", 1},
                      {"dim", real_str(r.dim, g.precision)},
                      {"dimMinusOne", real_str(r.dim_minus_one, g.precision)},
                      {"rowBound", real_str(r.row_bound, g.precision)},
                      {"margin", real_str(r.margin, g.precision)},
                      {"nonUniform", r.non_uniform},
                      {"strict", r.strict_holds},
                      {"typicalSliceBound", real_str(r.dim_minus_one, g.precision)},
                      {"note", r.note}}));
    } else {
        std::ostringstream os;
        os << "dim=" << real_str(r.dim, g.precision) << "\n";
        os << "max(dim-1,0)=" << real_str(r.dim_minus_one, g.precision) << "\n";
        os << "logN/logn=" << real_str(r.row_bound, g.precision) << "\n";
        if (r.non_uniform) {
            os << real_str(r.dim_minus_one, 6) << (r.strict_holds ? " < " : " !< ") << real_str(r.row_bound, 6) << "\n";
        }
        os << r.note << "\n";
        emit(g, os.str());
    }
    return r.non_uniform && !r.strict_holds ? kRefuted : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tools for Bedford-McMullen and Sierpinski carpets"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--precision", g.precision, "significant digits for real outputs")->check(CLI::Range(5u, 2000u));
    app.add_option("--depth", g.depth, "level k (render, hull svg, slice p, refutation depth)");
    app.add_option("--budget", g.budget, "state budget for containment certification");
    app.add_option("--out", g.out, "write the main output to this path");
    app.add_flag("--json", g.json, "machine-readable output");
    app.add_flag("--flip-y", g.flip_y, "row 0 at y = 0 instead of the top");
    app.add_flag("--allow-full", g.allow_full, "accept the full n x m grid");

    std::string pattern_path;
    auto add_cmd = [&](const char* name, const char* help) {
        auto* c = app.add_subcommand(name, help);
        c->add_option("pattern", pattern_path, "pattern file")->required();
        return c;
    };

    std::string format = "pbm", slice_y;
    std::uint64_t width = 0, height = 0;
    bool hull_overlay = false;
    std::vector<std::string> markers;
    auto* render = add_cmd("render", "PBM or SVG image of the level-k approximation");
    render->add_option("--format", format)->check(CLI::IsMember({"pbm", "svg"}));
    render->add_option("--width", width);
    render->add_option("--height", height);
    render->add_flag("--hull", hull_overlay, "SVG: draw the convex hull");
    render->add_option("--slice-y", slice_y, "SVG: draw the horizontal line at this y");
    render->add_option("--marker", markers, "SVG: mark the point x,y");

    auto* report = add_cmd("report", "dimension, classification, hull and Marstrand summary");

    std::string y_text, side;
    unsigned p_prime = 0;
    auto* slice = add_cmd("slice", "horizontal slice: intervals, gaps, dimension");
    slice->add_option("--y", y_text, "base-m word like 1(01), or a rational")->required();
    slice->add_option("--cert-level", p_prime, "level used to certify gaps (default depth + 2)");
    slice->add_option("--isolated", side, "list one-sided isolated points")->check(CLI::IsMember({"left", "right"}));

    std::string svg_out;
    auto* hull = add_cmd("hull", "convex hull, angles, angle sums and Niven verdicts");
    hull->add_option("--svg", svg_out, "also write an SVG with the hull overlay");

    std::string literal;
    auto* verify = add_cmd("verify", "certify or refute f(K) inside K");
    verify->add_option("similitude", literal, "e.g. \"refl=3/5,-4/5 t=3/5,6/5 scale=1\"")->required();

    int max_hyp = 5;
    auto* search = add_cmd("search", "all digit symmetries with rational orthogonal part");
    search->add_option("--max-hyp", max_hyp, "largest Pythagorean hypotenuse")->check(CLI::Range(1, 100000));

    std::string dir = "1,1", csv;
    unsigned k_min = 6, k_max = 12;
    std::optional<unsigned> growth;
    auto* project = add_cmd("project", "box counting of an oblique projection");
    project->add_option("--dir", dir, "direction u1,u2");
    project->add_option("--kmin", k_min);
    project->add_option("--kmax", k_max);
    project->add_option("--growth", growth, "run the distinct-projection count for this p instead");
    project->add_option("--csv", csv, "write level,boxCount rows here");

    auto* marstrand = add_cmd("marstrand", "compare dim K - 1 with log N / log n");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kError;
    }

    try {
        const CarpetPattern p = load_pattern(pattern_path, g.allow_full);
        if (render->parsed()) return cmd_render(g, p, format, width, height, hull_overlay, slice_y, markers);
        if (report->parsed()) return cmd_report(g, p);
        if (slice->parsed()) return cmd_slice(g, p, y_text, p_prime, side);
        if (hull->parsed()) return cmd_hull(g, p, svg_out);
        if (verify->parsed()) return cmd_verify(g, p, literal);
        if (search->parsed()) return cmd_search(g, p, max_hyp);
        if (project->parsed()) return cmd_project(g, p, dir, k_min, k_max, growth, csv);
        if (marstrand->parsed()) return cmd_marstrand(g, p);
    } catch (const ParseError& e) {
        std::cerr << "error: " << pattern_path << ":" << e.line() << ": " << e.what() << "\n";
        return kError;
    } catch (const ValidationError& e) {
        std::cerr << "error: invalid pattern (" << e.invariant() << "): " << e.what() << "\n";
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}

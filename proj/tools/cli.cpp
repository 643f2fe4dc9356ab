#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>

#include "cayley/figures.hpp"
#include "cayley/klein.hpp"
#include "cayley/metric.hpp"
#include "check_suite.hpp"
#include "render.hpp"

namespace cayley::cli {

using Json = nlohmann::ordered_json;

// ─── Literal parsing ────────────────────────────────────────────────────────

double parse_real(std::string_view text) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    const auto res = std::from_chars(first, last, v);
    if (text.empty() || res.ec != std::errc{} || res.ptr != last || !std::isfinite(v)) {
        throw UsageError("not a finite number: '" + std::string(text) + "'");
    }
    return v;
}

Vec2 parse_point(std::string_view text) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
        throw UsageError("point literal must be x,y: '" + std::string(text) + "'");
    }
    return {parse_real(text.substr(0, comma)), parse_real(text.substr(comma + 1))};
}

namespace {

struct TransformPart {
    std::string_view name;
    std::string_view arg;
};

// '+' separates components only when a component name follows, so literals
// like 1e+5 stay intact.
std::vector<TransformPart> split_transform(std::string_view spec) {
    std::vector<std::string_view> pieces;
    std::size_t start = 0;
    for (std::size_t i = 0; i < spec.size(); ++i) {
        if (spec[i] == '+' && i + 1 < spec.size() && std::isalpha(static_cast<unsigned char>(spec[i + 1]))) {
            pieces.push_back(spec.substr(start, i - start));
            start = i + 1;
        }
    }
    pieces.push_back(spec.substr(start));

    std::vector<TransformPart> parts;
    for (std::string_view piece : pieces) {
        const auto colon = piece.find(':');
        if (colon == std::string_view::npos || colon == 0 || colon + 1 == piece.size()) {
            throw UsageError("transform component must be name:value, got '" + std::string(piece) + "'");
        }
        parts.push_back({piece.substr(0, colon), piece.substr(colon + 1)});
    }
    return parts;
}

std::optional<GeometryKind> component_kind(std::string_view name) {
    if (name == "rot") return GeometryKind::Euclidean;
    if (name == "gal") return GeometryKind::Galilean;
    if (name == "lor" || name == "rap") return GeometryKind::Minkowski;
    if (name == "trans") return std::nullopt;
    throw UsageError("unknown transform '" + std::string(name) + "' (expected rot, gal, lor, rap or trans)");
}

}  // namespace

Isometry parse_transform(std::string_view spec, GeometryKind fallback) {
    const auto parts = split_transform(spec);
    std::optional<GeometryKind> chain_kind;
    for (const auto& part : parts) {
        if (const auto k = component_kind(part.name); k && !chain_kind) chain_kind = k;
    }
    const GeometryKind kind = chain_kind.value_or(fallback);

    Isometry result = identity(kind);
    for (const auto& part : parts) {
        std::optional<Isometry> g;
        if (part.name == "rot") g = rotation(parse_real(part.arg));
        if (part.name == "gal") g = galilean_boost(parse_real(part.arg));
        if (part.name == "lor") g = lorentz_boost_velocity(parse_real(part.arg));
        if (part.name == "rap") g = lorentz_boost_rapidity(Rapidity{parse_real(part.arg)});
        if (part.name == "trans") g = translate(parse_point(part.arg), kind);
        result = compose(result, *g);
    }
    return result;
}

// ─── Commands ───────────────────────────────────────────────────────────────

namespace {

void require_format(const CliConfig& cfg, std::initializer_list<OutputFormat> allowed, std::string_view cmd) {
    if (std::find(allowed.begin(), allowed.end(), cfg.format) == allowed.end()) {
        throw UsageError("output format not supported by '" + std::string(cmd) + "'");
    }
}

Json points_json(const std::vector<Vec2>& pts) {
    Json arr = Json::array();
    for (const Vec2& p : pts) arr.push_back({p.x(), p.y()});
    return arr;
}

int cmd_distance(const CliConfig& cfg, const std::vector<std::string>& args, std::ostream& out) {
    require_format(cfg, {OutputFormat::Text, OutputFormat::Json}, "distance");
    const Vec2 a = parse_point(args.at(0));
    const Vec2 b = parse_point(args.at(1));
    const double d = distance(cfg.geometry, a, b);
    std::optional<double> special;
    if (cfg.geometry == GeometryKind::Galilean && approx_eq(a.x(), b.x(), cfg.tolerance)) {
        special = special_distance(a, b, cfg.tolerance);
    }
    if (cfg.format == OutputFormat::Json) {
        Json j{{"geometry", to_string(cfg.geometry)}, {"result", d}};
        if (special) j["special_distance"] = *special;
        out << j.dump() << '\n';
    } else {
        out << format_number(d) << '\n';
        if (special) out << "special distance: " << format_number(*special) << '\n';
    }
    return kSuccess;
}

int cmd_angle(const CliConfig& cfg, const std::vector<std::string>& args, std::ostream& out) {
    require_format(cfg, {OutputFormat::Text, OutputFormat::Json}, "angle");
    Angle phi;
    if (cfg.geometry == GeometryKind::Galilean) {
        // Galilean angles are between lines, given by their slopes
        phi = angle_lines_galilean(parse_real(args.at(0)), parse_real(args.at(1)));
    } else {
        phi = angle_vectors(cfg.geometry, parse_point(args.at(0)), parse_point(args.at(1)), cfg.tolerance);
    }
    if (cfg.format == OutputFormat::Json) {
        out << Json{{"geometry", to_string(cfg.geometry)}, {"result", phi.value}}.dump() << '\n';
    } else {
        out << format_number(phi.value) << '\n';
    }
    return kSuccess;
}

int cmd_classify(const CliConfig& cfg, const std::string& arg, std::ostream& out) {
    require_format(cfg, {OutputFormat::Text, OutputFormat::Json}, "classify");
    const CausalClass cls = classify(parse_point(arg), cfg.tolerance);
    if (cfg.format == OutputFormat::Json) {
        out << Json{{"geometry", "minkowski"}, {"result", to_string(cls)}}.dump() << '\n';
    } else {
        out << to_string(cls) << '\n';
    }
    return kSuccess;
}

int cmd_transform(const CliConfig& cfg, const std::string& spec, const std::vector<std::string>& args,
                  std::ostream& out) {
    require_format(cfg, {OutputFormat::Text, OutputFormat::Csv, OutputFormat::Json}, "transform");
    const Isometry g = parse_transform(spec, cfg.geometry);
    std::vector<Vec2> images;
    for (const auto& a : args) images.push_back(apply(g, parse_point(a)));
    if (cfg.format == OutputFormat::Json) {
        out << Json{{"geometry", to_string(g.kind())}, {"points", points_json(images)}}.dump() << '\n';
    } else if (cfg.format == OutputFormat::Csv) {
        out << render_csv(images);
    } else {
        for (const Vec2& p : images) out << format_point(p) << '\n';
    }
    return kSuccess;
}

int cmd_check(const CliConfig& cfg, std::ostream& out) {
    require_format(cfg, {OutputFormat::Text, OutputFormat::Json}, "check");
    const auto results = run_check_suite(cfg.samples, cfg.seed, cfg.tolerance);
    const auto passed = static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [](const PropertyResult& r) { return r.pass; }));

    if (cfg.format == OutputFormat::Json) {
        Json rows = Json::array();
        for (const auto& r : results) {
            rows.push_back({{"geometry", to_string(r.geometry)},
                            {"property", r.name},
                            {"max_error", r.max_error},
                            {"pass", r.pass}});
        }
        out << Json{{"geometry", "all"}, {"result", rows}, {"seed", cfg.seed}, {"samples", cfg.samples}}.dump()
            << '\n';
    } else {
        std::size_t name_width = 0;
        for (const auto& r : results) name_width = std::max(name_width, r.name.size());
        for (const auto& r : results) {
            char err_buf[32];
            std::snprintf(err_buf, sizeof(err_buf), "%.3e", r.max_error);
            const std::string kind(to_string(r.geometry));
            out << (r.pass ? "PASS  " : "FAIL  ") << kind << std::string(11 - kind.size(), ' ') << r.name
                << std::string(name_width - r.name.size() + 2, ' ') << "max_err=" << err_buf << '\n';
        }
        char tol_buf[32];
        std::snprintf(tol_buf, sizeof(tol_buf), "%.3g", cfg.tolerance.rel);
        out << passed << '/' << results.size() << " properties passed (seed=" << cfg.seed
            << ", samples=" << cfg.samples << ", tol=" << tol_buf << ")\n";
    }
    return passed == results.size() ? kSuccess : kPropertyFailure;
}

int cmd_circle(const CliConfig& cfg, const std::string& center, const std::string& radius, std::ostream& out) {
    const Circle c{cfg.geometry, parse_point(center), parse_real(radius)};
    const auto branches = circle_branches(c, cfg.samples);
    std::vector<Vec2> points;
    for (const auto& b : branches) points.insert(points.end(), b.begin(), b.end());

    switch (cfg.format) {
        case OutputFormat::Text:
        case OutputFormat::Csv: out << render_csv(points); break;
        case OutputFormat::Svg: out << render_svg(branches, cfg.geometry == GeometryKind::Euclidean); break;
        case OutputFormat::Json: {
            Json bs = Json::array();
            for (const auto& b : branches) bs.push_back(points_json(b));
            out << Json{{"geometry", to_string(cfg.geometry)}, {"points", points_json(points)}, {"branches", bs}}
                       .dump()
                << '\n';
            break;
        }
    }
    return kSuccess;
}

int cmd_table(const CliConfig& cfg, std::ostream& out) {
    require_format(cfg, {OutputFormat::Text, OutputFormat::Json}, "table");
    const auto& table = cayley_klein_table();
    if (cfg.format == OutputFormat::Json) {
        Json english = Json::array(), greek = Json::array();
        for (const auto& row : table) {
            Json en = Json::array(), el = Json::array();
            for (const auto& cell : row) {
                en.push_back(cell.english);
                el.push_back(cell.greek);
            }
            english.push_back(en);
            greek.push_back(el);
        }
        out << Json{{"geometry", "cayley-klein"},
                    {"rows", "angle: elliptic, parabolic, hyperbolic"},
                    {"columns", "length: elliptic, parabolic, hyperbolic"},
                    {"table", english},
                    {"table_greek", greek}}
                   .dump()
            << '\n';
    } else {
        out << render_table_text(table);
    }
    return kSuccess;
}

OutputFormat parse_format(const std::string& s) {
    if (s == "text") return OutputFormat::Text;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "svg") return OutputFormat::Svg;
    return OutputFormat::Json;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Plane Cayley-Klein geometry kernel: Euclidean, Galilean and Minkowski metrics,\n"
                 "isometries, invariance checks and circle loci.\n\n"
                 "Point literals are x,y with no spaces; put `--` before literals starting with '-'.\n"
                 "Exit codes: 0 success, 1 property failure, 2 usage error, 3 domain error.",
                 "cayley"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    std::string geometry = "euclidean";
    double tol_rel = 1e-9;
    std::size_t samples = 256;
    std::uint64_t seed = 0;
    std::string format = "text";
    app.add_option("--geometry", geometry, "Geometry: euclidean, galilean or minkowski")
        ->check(CLI::IsMember({"euclidean", "galilean", "minkowski"}))
        ->capture_default_str();
    app.add_option("--tol", tol_rel, "Relative tolerance (absolute floor stays 1e-12)")
        ->envname("CAYLEY_TOL")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--samples", samples, "Random instances per property for `check`; locus points for `circle`")
        ->check(CLI::Range(std::size_t{2}, std::size_t{100000000}))
        ->capture_default_str();
    app.add_option("--seed", seed, "Seed of the `check` generator")->envname("CAYLEY_SEED")->capture_default_str();
    app.add_option("--format", format, "Output format: text, csv, svg or json")
        ->check(CLI::IsMember({"text", "csv", "svg", "json"}))
        ->capture_default_str();

    std::vector<std::string> distance_args, angle_args, transform_points;
    std::string classify_arg, transform_spec, circle_center, circle_radius;

    auto* distance_cmd = app.add_subcommand("distance", "Distance between two points (Galilean: signed, plus the "
                                                        "special distance for points on a vertical line)");
    distance_cmd->add_option("points", distance_args, "A B")->expected(2)->required();

    auto* angle_cmd = app.add_subcommand("angle", "Angle between two vectors (euclidean, minkowski) or between two "
                                                  "lines given by their slopes (galilean)");
    angle_cmd->add_option("operands", angle_args, "a b")->expected(2)->required();

    auto* classify_cmd = app.add_subcommand("classify", "Causal class of a nonzero Minkowski vector");
    classify_cmd->add_option("vector", classify_arg, "x,y")->required();

    auto* transform_cmd = app.add_subcommand(
        "transform", "Apply a transform chain rot:THETA | gal:U | lor:U | rap:THETA | trans:TX,TY joined by '+' "
                     "(leftmost applied last)");
    transform_cmd->add_option("spec", transform_spec, "transform chain")->required();
    transform_cmd->add_option("points", transform_points, "points to map")->required();

    auto* check_cmd = app.add_subcommand("check", "Run the seeded randomized invariance suite");

    auto* circle_cmd = app.add_subcommand(
        "circle", "Sample the circle locus {P : |distance(center, P)| = r}. Minkowski branches are sampled over "
                  "the hyperbolic parameter window [-2, 2]");
    circle_cmd->add_option("center", circle_center, "x,y")->required();
    circle_cmd->add_option("radius", circle_radius, "r")->required();

    auto* table_cmd = app.add_subcommand("table", "Print the nine Cayley-Klein plane geometries");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        CliConfig cfg;
        cfg.geometry = parse_geometry_kind(geometry);
        cfg.tolerance = Tolerance{tol_rel, 1e-12};
        cfg.samples = samples;
        cfg.seed = seed;
        cfg.format = parse_format(format);

        if (*distance_cmd) return cmd_distance(cfg, distance_args, out);
        if (*angle_cmd) return cmd_angle(cfg, angle_args, out);
        if (*classify_cmd) return cmd_classify(cfg, classify_arg, out);
        if (*transform_cmd) return cmd_transform(cfg, transform_spec, transform_points, out);
        if (*check_cmd) return cmd_check(cfg, out);
        if (*circle_cmd) return cmd_circle(cfg, circle_center, circle_radius, out);
        if (*table_cmd) return cmd_table(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const GeometryError& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }
    return kUsageError;
}

}  // namespace cayley::cli

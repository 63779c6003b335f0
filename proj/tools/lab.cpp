// Command-line front end: generators, exact counters, incidence and dual-space
// checks, the circle cutter, and the exponent optimizer. All artifacts are
// JSON/CSV with rationals as strings; identical configs and seeds reproduce
// identical bytes.

#include "udlab/counting.hpp"
#include "udlab/dual6.hpp"
#include "udlab/errors.hpp"
#include "udlab/exponents.hpp"
#include "udlab/families.hpp"
#include "udlab/json_io.hpp"
#include "udlab/kernels.hpp"
#include "udlab/liftcut.hpp"
#include "udlab/reports.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace udlab;

namespace {

Rational parse_rational_flag(const std::string& text, const std::string& flag) {
    auto q = rat_from_string(text);
    if (!q) throw ConfigError("/" + flag, "malformed rational '" + text + "'");
    return *q;
}

Metric parse_metric(const std::string& name) {
    if (name == "euclid") return Metric::Euclid;
    if (name == "dstar") return Metric::DStar;
    throw ConfigError("/metric", "unknown metric '" + name + "'");
}

json count_report(const std::vector<Point3>& points, Metric metric, const std::string& engine) {
    std::uint64_t count;
    if (engine == "brute")
        count = count_unit_pairs_bruteforce(points, metric);
    else if (engine == "grid")
        count = count_unit_pairs_grid(points, metric);
    else
        throw ConfigError("/engine", "unknown engine '" + engine + "'");
    return json{{"n", points.size()},
                {"metric", metric == Metric::Euclid ? "euclid" : "dstar"},
                {"engine", engine},
                {"unit_pairs", count},
                {"unit_pairs_ordered", 2 * count},
                {"threads", effective_thread_count()},
                {"kernel", active_kernel_backend() == KernelBackend::Avx2 ? "avx2" : "scalar"}};
}

json certificate_json(const OptimumCertificate& cert) {
    return json{{"alpha", rat_to_json(cert.alpha)},
                {"beta", rat_to_json(cert.beta)},
                {"delta", rat_to_json(cert.delta)},
                {"value", rat_to_json(cert.value)},
                {"tight", cert.tight_labels}};
}

json scan_json(const ScanResult& scan) {
    json curve = json::array();
    for (const ScanPoint& p : scan.curve)
        curve.push_back(json{{"alpha", rat_to_json(p.alpha)},
                             {"beta", rat_to_json(p.beta)},
                             {"delta", rat_to_json(p.delta)},
                             {"value", rat_to_json(p.value)},
                             {"value_float", rat_to_double(p.value)}});
    return json{{"curve", std::move(curve)},
                {"best_index", scan.best_index},
                {"reference", json{{"alpha", rat_to_json(scan.reference.alpha)},
                                   {"value", rat_to_json(scan.reference.value)}}},
                {"reference_at_most_grid", scan.reference_at_most_grid}};
}

json dual_check_report(std::uint64_t trials, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::uint64_t duality_failures = 0, span6_failures = 0, parity_failures = 0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        auto coord = [&rng]() { return Rational(rng.range(-8, 8), rng.range(1, 5)); };
        for (;;) {
            const Point3 a{coord(), coord(), coord()};
            const Point3 b = a + Point3{Rational(rng.range(-3, 3), 2),
                                        Rational(rng.range(-3, 3), 2),
                                        Rational(rng.range(-3, 3), 2)};
            const Rational d2 = norm2(b - a);
            if (!(d2 > 0 && d2 < 4)) continue;
            const Point3 probe{coord(), coord(), coord()};
            duality_failures += !duality_check(probe, a, b);
            break;
        }
        const WitnessConfig config = random_witness_config(rng, 3);
        std::vector<TangentBasis> bases;
        for (const Point3& q : config.centers) bases.push_back(tangent_basis(q, config.w));
        span6_failures += (span_rank(bases) != 6);
        for (std::size_t i = 0; i < bases.size(); ++i)
            for (std::size_t j = i + 1; j < bases.size(); ++j)
                parity_failures += (pair_intersection_dim(bases[i], bases[j]) % 2 != 0);
    }
    return json{{"trials", trials},
                {"duality_failures", duality_failures},
                {"span6_failures", span6_failures},
                {"parity_failures", parity_failures}};
}

struct CutArtifacts {
    json arcs;
    std::string csv;
    bool verified = false;
};

CutArtifacts run_cut(std::vector<AnalyticCircle> circles, std::uint64_t rotate_seed) {
    bool rotated = false;
    bool vertical = false;
    for (const AnalyticCircle& c : circles) vertical = vertical || (c.normal.x3 == 0);
    if (vertical) {
        SplitMix64 rng(rotate_seed);
        const Rotation rot = find_generic_rotation(circles, rng);
        circles = apply_rotation(rot, circles);
        rotated = true;
    }
    const std::size_t degeneracy = max_circles_common_plane_or_sphere(circles);
    const CuttingResult result = cut_to_pseudosegments(circles);
    const VerifyResult verdict = verify_pseudosegments(result.cutset);

    CutArtifacts out;
    out.verified = verdict.ok;
    out.arcs = cutset_to_json(result.cutset);
    out.arcs["cut_count"] = result.cut_count;
    out.arcs["total_arcs"] = result.cutset.total_arcs();
    out.arcs["rotated"] = rotated;
    out.arcs["verified"] = verdict.ok;
    out.csv = "n,B,cut_count,verified\n" + std::to_string(circles.size()) + "," +
              std::to_string(degeneracy) + "," + std::to_string(result.cut_count) + "," +
              (verdict.ok ? "true" : "false") + "\n";
    return out;
}

json slope_from_series(const ScalingSeries& series) {
    json entries = json::array();
    for (const auto& [n, count] : series.entries)
        entries.push_back(json{{"n", n}, {"count", count}});
    return json{{"series", std::move(entries)},
                {"slope", estimate_exponent(series)},
                {"approximate", true}};
}

// ---------------------------------------------------------------------------
// Config runner: a named sequence of steps, each mirroring a subcommand, with
// simple assertion steps. Exit code 0 only when every assertion holds.

int run_config(const std::string& config_path, const std::string& outdir_flag) {
    const json config = load_json_file(config_path);
    if (!config.is_object()) throw ConfigError("/", "config must be an object");
    if (!config.contains("steps") || !config.at("steps").is_array())
        throw ConfigError("/steps", "missing steps array");
    const std::filesystem::path outdir =
        outdir_flag.empty() ? std::filesystem::path(".") : std::filesystem::path(outdir_flag);
    std::filesystem::create_directories(outdir);
    const std::uint64_t seed = config.value("seed", 0ULL);

    auto path_of = [&outdir](const std::string& name) { return (outdir / name).string(); };
    auto get_string = [](const json& step, const char* key, const std::string& where) {
        if (!step.contains(key) || !step.at(key).is_string())
            throw ConfigError(where + "/" + key, "expected a string");
        return step.at(key).get<std::string>();
    };

    bool all_assertions_passed = true;
    json failures = json::array();
    const json& steps = config.at("steps");
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const std::string where = "/steps/" + std::to_string(i);
        const json& step = steps.at(i);
        if (!step.is_object()) throw ConfigError(where, "step must be an object");
        const std::string cmd = get_string(step, "cmd", where);
        if (cmd == "gen") {
            const std::string family = get_string(step, "family", where);
            if (family == "example1") {
                const auto pts = gen_example1(step.value("b", 1u));
                save_json_file(path_of(get_string(step, "out", where)), points_file(pts));
            } else if (family == "pencil") {
                const auto fam = gen_pencil(
                    parse_rational_flag(step.value("h", std::string("3/5")), "h"),
                    step.value("k", 4u), step.value("seed", seed));
                std::vector<AnalyticCircle> circles;
                for (const Circle& c : fam.circles) circles.push_back(to_analytic(c));
                save_json_file(path_of(get_string(step, "out", where)), circles_file(circles));
            } else if (family == "coplanar") {
                save_json_file(path_of(get_string(step, "out", where)),
                               circles_file(gen_coplanar_family(step.value("n", 4u),
                                                                step.value("seed", seed))));
            } else if (family == "random") {
                const auto cfg = gen_random_config(step.value("n", 10u), step.value("m", 10u),
                                                   step.value("seed", seed),
                                                   step.value("denominator_bound", 1000L));
                if (step.contains("out"))
                    save_json_file(path_of(get_string(step, "out", where)),
                                   circles_file(cfg.circles));
                if (step.contains("points_out"))
                    save_json_file(path_of(get_string(step, "points_out", where)),
                                   points_file(cfg.points));
            } else if (family == "grid") {
                save_json_file(path_of(get_string(step, "out", where)),
                               points_file(gen_grid_points(step.value("per_axis", 4u))));
            } else {
                throw ConfigError(where + "/family", "unknown family '" + family + "'");
            }
        } else if (cmd == "count") {
            const auto points =
                points_from_file(load_json_file(path_of(get_string(step, "in", where))));
            const json report = count_report(points, parse_metric(step.value("metric",
                                                                             std::string("euclid"))),
                                             step.value("engine", std::string("grid")));
            save_json_file(path_of(get_string(step, "out", where)), report);
        } else if (cmd == "incidence") {
            const auto points =
                points_from_file(load_json_file(path_of(get_string(step, "points", where))));
            const auto circles =
                circles_from_file(load_json_file(path_of(get_string(step, "circles", where))));
            const IncidenceReport report = incidences_points_circles(points, circles);
            save_json_file(path_of(get_string(step, "out", where)),
                           json{{"count", report.count}, {"per_circle", report.per_circle}});
        } else if (cmd == "dual-check") {
            save_json_file(path_of(get_string(step, "out", where)),
                           dual_check_report(step.value("trials", 100ULL),
                                             step.value("seed", seed)));
        } else if (cmd == "cut") {
            const auto circles =
                circles_from_file(load_json_file(path_of(get_string(step, "in", where))));
            const CutArtifacts art = run_cut(circles, step.value("seed", seed));
            save_json_file(path_of(get_string(step, "out", where)), art.arcs);
            if (step.contains("report")) {
                std::ofstream csv(path_of(get_string(step, "report", where)));
                csv << art.csv;
            }
        } else if (cmd == "optimize") {
            const OptimumCertificate cert =
                certify_alpha(parse_rational_flag(get_string(step, "alpha", where), "alpha"));
            save_json_file(path_of(get_string(step, "out", where)), certificate_json(cert));
        } else if (cmd == "assert-equal-counts") {
            const json a = load_json_file(path_of(get_string(step, "a", where)));
            const json b = load_json_file(path_of(get_string(step, "b", where)));
            if (a.at("unit_pairs") != b.at("unit_pairs")) {
                all_assertions_passed = false;
                failures.push_back(json{{"step", i},
                                        {"kind", "count-mismatch"},
                                        {"a", a.at("unit_pairs")},
                                        {"b", b.at("unit_pairs")}});
            }
        } else if (cmd == "assert-value") {
            const json doc = load_json_file(path_of(get_string(step, "file", where)));
            const json::json_pointer ptr(get_string(step, "pointer", where));
            if (!doc.contains(ptr) || doc.at(ptr) != step.at("equals")) {
                all_assertions_passed = false;
                failures.push_back(json{{"step", i},
                                        {"kind", "value-mismatch"},
                                        {"pointer", get_string(step, "pointer", where)},
                                        {"got", doc.contains(ptr) ? doc.at(ptr) : json(nullptr)},
                                        {"expected", step.at("equals")}});
            }
        } else {
            throw ConfigError(where + "/cmd", "unknown step '" + cmd + "'");
        }
    }
    if (!all_assertions_passed) {
        save_json_file((outdir / "failure.json").string(), json{{"failures", failures}});
        std::cerr << json{{"failures", failures}}.dump() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic laboratory for unit distances and circle geometry in R^3"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a point/circle family");
    std::string family, gen_out, gen_points_out, pencil_h = "3/5";
    unsigned gen_b = 2, gen_k = 5, gen_n = 10, gen_m = 10, gen_per_axis = 4;
    long denominator_bound = 1000;
    std::uint64_t gen_seed = 1;
    gen->add_option("--family", family, "example1|pencil|coplanar|random|grid")->required();
    gen->add_option("--out", gen_out, "output JSON (points or circles)");
    gen->add_option("--points-out", gen_points_out, "secondary output for point data");
    gen->add_option("--b", gen_b, "example1 lattice parameter");
    gen->add_option("--height", pencil_h, "pencil height (rational)");
    gen->add_option("--k", gen_k, "pencil circle count");
    gen->add_option("--n", gen_n, "circle count");
    gen->add_option("--m", gen_m, "point count");
    gen->add_option("--per-axis", gen_per_axis, "grid points per axis");
    gen->add_option("--seed", gen_seed, "PRNG seed");
    gen->add_option("--denominator-bound", denominator_bound, "max coordinate denominator");

    // count
    auto* count = app.add_subcommand("count", "count exact unit-distance pairs");
    std::string count_metric = "euclid", count_engine = "grid", count_in, count_out;
    count->add_option("--metric", count_metric, "euclid|dstar");
    count->add_option("--engine", count_engine, "brute|grid");
    count->add_option("--in", count_in, "points JSON")->required();
    count->add_option("--out", count_out, "report JSON");

    // incidence
    auto* incidence = app.add_subcommand("incidence", "count point-circle incidences");
    std::string inc_points, inc_circles, inc_out;
    bool inc_pairs = false;
    incidence->add_option("--points", inc_points, "points JSON")->required();
    incidence->add_option("--circles", inc_circles, "circles JSON")->required();
    incidence->add_option("--out", inc_out, "report JSON");
    incidence->add_flag("--pairs", inc_pairs, "retain the incidence pairs");

    // dual-check
    auto* dual = app.add_subcommand("dual-check", "duality and tangent-space property run");
    std::uint64_t dual_trials = 1000, dual_seed = 7;
    std::string dual_out;
    dual->add_option("--trials", dual_trials, "number of seeded trials");
    dual->add_option("--seed", dual_seed, "PRNG seed");
    dual->add_option("--out", dual_out, "report JSON");

    // lift
    auto* lift = app.add_subcommand("lift", "implicitize projections and find extremal points");
    std::string lift_in, lift_out;
    lift->add_option("--in", lift_in, "circles JSON")->required();
    lift->add_option("--out", lift_out, "lift JSON");

    // cut
    auto* cut = app.add_subcommand("cut", "cut circles into pseudo-segments");
    std::string cut_in, cut_out, cut_report;
    std::uint64_t cut_seed = 7;
    cut->add_option("--in", cut_in, "circles JSON")->required();
    cut->add_option("--out", cut_out, "arcs JSON");
    cut->add_option("--report", cut_report, "CSV report (n,B,cut_count,verified)");
    cut->add_option("--rotate-seed", cut_seed, "seed for the pre-rotation, when needed");

    // optimize / scan
    auto* optimize = app.add_subcommand("optimize", "exact min-max exponent certificate");
    std::string opt_alpha, opt_scan, opt_out;
    optimize->add_option("--alpha", opt_alpha, "fixed alpha (rational)");
    optimize->add_option("--scan", opt_scan, "grid step for an alpha scan (rational)");
    optimize->add_option("--out", opt_out, "output JSON");

    auto* scan = app.add_subcommand("scan", "alpha scan of the exponent optimum");
    std::string scan_step = "1/100", scan_out;
    scan->add_option("--step", scan_step, "grid step (rational)");
    scan->add_option("--out", scan_out, "output JSON");

    // slope
    auto* slope = app.add_subcommand("slope", "least-squares exponent of a scaling series");
    std::string slope_in, slope_out, slope_metric = "dstar", slope_engine = "grid";
    unsigned slope_bmin = 0, slope_bmax = 0;
    slope->add_option("--in", slope_in, "series JSON {series:[{n,count}...]}");
    slope->add_option("--example1-bmin", slope_bmin, "generate the series from example1");
    slope->add_option("--example1-bmax", slope_bmax, "generate the series from example1");
    slope->add_option("--metric", slope_metric, "euclid|dstar");
    slope->add_option("--engine", slope_engine, "brute|grid");
    slope->add_option("--out", slope_out, "output JSON");

    // run
    auto* run = app.add_subcommand("run", "execute a JSON experiment config");
    std::string run_config_path, run_outdir;
    run->add_option("--config", run_config_path, "config JSON")->required();
    run->add_option("--outdir", run_outdir, "artifact directory");

    CLI11_PARSE(app, argc, argv);

    auto emit = [](const json& doc, const std::string& path) {
        if (path.empty())
            std::cout << doc.dump(2) << "\n";
        else
            save_json_file(path, doc);
    };

    try {
        if (gen->parsed()) {
            if (family == "example1") {
                emit(points_file(gen_example1(gen_b)), gen_out);
            } else if (family == "pencil") {
                const auto fam =
                    gen_pencil(parse_rational_flag(pencil_h, "h"), gen_k, gen_seed);
                std::vector<AnalyticCircle> circles;
                for (const Circle& c : fam.circles) circles.push_back(to_analytic(c));
                emit(circles_file(circles), gen_out);
                if (!gen_points_out.empty())
                    save_json_file(gen_points_out,
                                   points_file({fam.base_plus, fam.base_minus}));
            } else if (family == "coplanar") {
                emit(circles_file(gen_coplanar_family(gen_n, gen_seed)), gen_out);
            } else if (family == "random") {
                const auto cfg =
                    gen_random_config(gen_n, gen_m, gen_seed, denominator_bound);
                emit(circles_file(cfg.circles), gen_out);
                if (!gen_points_out.empty())
                    save_json_file(gen_points_out, points_file(cfg.points));
            } else if (family == "grid") {
                emit(points_file(gen_grid_points(gen_per_axis)), gen_out);
            } else {
                throw ConfigError("/family", "unknown family '" + family + "'");
            }
        } else if (count->parsed()) {
            const auto points = points_from_file(load_json_file(count_in));
            emit(count_report(points, parse_metric(count_metric), count_engine), count_out);
        } else if (incidence->parsed()) {
            const auto points = points_from_file(load_json_file(inc_points));
            const auto circles = circles_from_file(load_json_file(inc_circles));
            const IncidenceReport report =
                incidences_points_circles(points, circles, inc_pairs);
            json doc{{"count", report.count}, {"per_circle", report.per_circle}};
            if (inc_pairs) {
                json pairs = json::array();
                for (const auto& [p, c] : report.pairs)
                    pairs.push_back(json{{"point", p}, {"circle", c}});
                doc["pairs"] = std::move(pairs);
            }
            emit(doc, inc_out);
        } else if (dual->parsed()) {
            const json report = dual_check_report(dual_trials, dual_seed);
            emit(report, dual_out);
            const bool clean = report.at("duality_failures") == 0 &&
                               report.at("span6_failures") == 0 &&
                               report.at("parity_failures") == 0;
            return clean ? 0 : 1;
        } else if (lift->parsed()) {
            const auto circles = circles_from_file(load_json_file(lift_in));
            json arr = json::array();
            for (const AnalyticCircle& c : circles) {
                const PlaneQuadratic f = project_implicitize(c);
                json extremal = json::array();
                for (const AlgebraicPoint3& p : x2_extremal_points(f, c))
                    extremal.push_back(alg_point_to_json(p));
                arr.push_back(json{{"conic",
                                    json{{"a", rat_to_json(f.a)}, {"b", rat_to_json(f.b)},
                                         {"c", rat_to_json(f.c)}, {"d", rat_to_json(f.d)},
                                         {"e", rat_to_json(f.e)}, {"f", rat_to_json(f.f)}}},
                                   {"x2_extremal", std::move(extremal)}});
            }
            emit(json{{"lifts", std::move(arr)}}, lift_out);
        } else if (cut->parsed()) {
            const auto circles = circles_from_file(load_json_file(cut_in));
            const CutArtifacts art = run_cut(circles, cut_seed);
            emit(art.arcs, cut_out);
            if (!cut_report.empty()) {
                std::ofstream csv(cut_report);
                csv << art.csv;
            }
            return art.verified ? 0 : 1;
        } else if (optimize->parsed()) {
            if (!opt_alpha.empty()) {
                const OptimumCertificate cert =
                    certify_alpha(parse_rational_flag(opt_alpha, "alpha"));
                emit(certificate_json(cert), opt_out);
            } else if (!opt_scan.empty()) {
                emit(scan_json(scan_alpha(parse_rational_flag(opt_scan, "scan"))), opt_out);
            } else {
                throw ConfigError("/", "optimize needs --alpha or --scan");
            }
        } else if (scan->parsed()) {
            emit(scan_json(scan_alpha(parse_rational_flag(scan_step, "step"))), scan_out);
        } else if (slope->parsed()) {
            ScalingSeries series;
            if (slope_bmin >= 1 && slope_bmax >= slope_bmin) {
                for (unsigned b = slope_bmin; b <= slope_bmax; ++b) {
                    const auto pts = gen_example1(b);
                    const Metric metric = parse_metric(slope_metric);
                    const std::uint64_t c = slope_engine == "brute"
                                                ? count_unit_pairs_bruteforce(pts, metric)
                                                : count_unit_pairs_grid(pts, metric);
                    series.entries.emplace_back(pts.size(), c);
                }
            } else if (!slope_in.empty()) {
                const json doc = load_json_file(slope_in);
                if (!doc.contains("series") || !doc.at("series").is_array())
                    throw ConfigError("/series", "expected a series array");
                for (const json& e : doc.at("series"))
                    series.entries.emplace_back(e.at("n").get<std::uint64_t>(),
                                                e.at("count").get<std::uint64_t>());
            } else {
                throw ConfigError("/", "slope needs --in or --example1-bmin/--example1-bmax");
            }
            emit(slope_from_series(series), slope_out);
        } else if (run->parsed()) {
            return run_config(run_config_path, run_outdir);
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error at " << e.where << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

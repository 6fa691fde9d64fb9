#include "centerkit/report.hpp"

#include "centerkit/io.hpp"
#include "centerkit/local_model.hpp"
#include "centerkit/orbit.hpp"
#include "centerkit/random.hpp"
#include "centerkit/svg.hpp"
#include "centerkit/tangent.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <thread>

namespace centerkit {

using nlohmann::ordered_json;

std::string tool_version() { return "0.1.0"; }

unsigned threads_from_environment() {
    const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
    const char* env = std::getenv("CENTERKIT_THREADS");
    if (!env || !*env) return 1;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1) return 1;
    return std::min(static_cast<unsigned>(v), hw);
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

CommandResult error_result(const std::string& message, int code = kExitInput) {
    ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["error"] = message;
    return {dump(j), code};
}

ordered_json strings(const std::vector<Rational>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& q : v) a.push_back(to_string(q));
    return a;
}

ordered_json validation_json(const ValidationReport& r) {
    ordered_json j;
    j["ok"] = r.ok();
    j["kind"] = to_string(r.kind);
    if (!r.ok()) {
        j["message"] = r.message;
        j["witness"] = r.witness;
    }
    return j;
}

/// Parses and validates; throws InputError with the validation message.
LineArrangement load_valid(const std::string& text) {
    auto arr = parse_arrangement(text);
    const auto report = validate(arr);
    if (!report.ok()) throw InputError("invalid arrangement (" + to_string(report.kind) + "): " + report.message);
    return arr;
}

struct CaseOutcome {
    ordered_json report;
    int exit_code = kExitOk;
};

CaseOutcome analyze_case(const LineArrangement& arr, const RunOptions& opts) {
    CaseOutcome out;
    ordered_json& j = out.report;
    ordered_json timings;
    const std::string canonical = arrangement_to_json(arr);
    j["schema_version"] = kReportSchemaVersion;
    j["tool"] = "centerkit";
    j["tool_version"] = tool_version();
    j["input_hash"] = hex64(fnv1a(canonical));
    j["arrangement"] = ordered_json::parse(canonical);

    const auto validation = validate(arr);
    j["validation"] = validation_json(validation);
    if (!validation.ok()) {
        j["status"] = "input_error";
        out.exit_code = kExitInput;
        return out;
    }
    j["d"] = arr.d();
    j["n"] = arr.total_multiplicity();
    j["pairwise_coprime"] = arr.pairwise_coprime();

    std::vector<std::string> failures;
    auto t0 = Clock::now();
    try {
        const auto g = build_graph(arr);
        const auto gc = build_real_graph(arr);
        const long formula = (static_cast<long>(arr.d()) - 1) * arr.total_multiplicity() + 1;
        ordered_json fiber;
        fiber["h1_formula"] = formula;
        fiber["b1_G"] = g.betti1();
        fiber["b1_Gcheck"] = gc.betti1();
        fiber["h1"] = formula;
        if (static_cast<long>(g.betti1()) != formula || static_cast<long>(gc.betti1()) != formula)
            failures.push_back("graph Betti number differs from the rank formula");
        fiber["genus_numerator"] = genus_numerator(arr);
        fiber["genus"] = genus(arr);
        long saddles = 0;
        for (const auto& p : gc.points()) saddles += p.e;
        fiber["saddle_points"] = gc.points().size();
        fiber["saddle_cylinders"] = saddles;
        fiber["graph_G"] = {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"loops", g.loop_count()}};
        fiber["graph_Gcheck"] = {{"vertices", gc.vertex_count()}, {"edges", gc.edge_count()}, {"loops", gc.loop_count()}};
        const auto w = winding_matrix(gc);
        fiber["winding_rank"] = rank(w.W);
        j["fiber"] = fiber;
        timings["fiber"] = ms_since(t0);

        t0 = Clock::now();
        const auto faces = bounded_faces(arr);
        ordered_json fj = ordered_json::array();
        const auto cps = center_critical_points(arr);
        for (std::size_t f = 0; f < faces.size(); ++f) {
            const auto& cp = cps.points[f];
            fj.push_back({{"face", f},
                          {"sides", faces[f].corner_count()},
                          {"side_multiplicities", faces[f].side_multiplicities()},
                          {"critical_point", {cp.x, cp.y}},
                          {"critical_value", cp.value}});
        }
        j["faces"] = fj;
        j["face_count"] = faces.size();
        if (faces.size() != arr.d() * (arr.d() - 1) / 2) failures.push_back("bounded face count differs from d(d-1)/2");
        timings["faces"] = ms_since(t0);

        t0 = Clock::now();
        if (arr.pairwise_coprime()) {
            const auto r = verify_orbit_theorem(arr);
            j["orbit"] = {{"b1", r.b1},
                          {"d", r.d},
                          {"orbit_dim", r.orbit_dim},
                          {"annihilator_dim", r.annihilator_dim},
                          {"codimension", r.codimension},
                          {"contained", r.contained},
                          {"equal", r.equal},
                          {"genus", r.genus},
                          {"surjective_by_dimension", r.surjective_by_dimension},
                          {"delta_sum_zero", r.delta_sum_zero},
                          {"delta_independent", r.delta_independent},
                          {"delta_basis_with_polygons", r.delta_basis},
                          {"direct_sum", r.direct_sum},
                          {"holds", r.holds()}};
            if (!r.holds()) failures.push_back("orbit statement failed");
        } else {
            j["orbit"] = {{"skipped", "multiplicities are not pairwise coprime"}};
        }
        timings["orbit"] = ms_since(t0);

        t0 = Clock::now();
        const auto dims = tangent_dimensions(log_params(arr));
        j["tangent"] = {{"parameter_dim", dims.parameter_dim},
                        {"form_dim", dims.form_dim},
                        {"kernel_dim", dims.kernel_dim},
                        {"image_dim", dims.image_dim},
                        {"expected", dims.expected()}};
        if (!dims.expected()) failures.push_back("tangent dimensions differ from d+1 / 3(d+1)");
        timings["tangent"] = ms_since(t0);
    } catch (const std::exception& e) {
        failures.push_back(e.what());
    }
    j["failures"] = failures;
    j["status"] = failures.empty() ? "ok" : "theorem_failure";
    out.exit_code = failures.empty() ? kExitOk : kExitTheorem;
    j["report_hash"] = hex64(fnv1a(j.dump()));
    if (opts.timings) j["timings_ms"] = timings;
    return out;
}

}  // namespace

CommandResult analyze_command(const std::string& text, const RunOptions& opts) {
    LineArrangement arr;
    try {
        arr = parse_arrangement(text);
    } catch (const InputError& e) {
        return error_result(e.what());
    }
    auto outcome = analyze_case(arr, opts);
    return {dump(outcome.report), outcome.exit_code};
}

CommandResult orbit_command(const std::string& text) {
    try {
        const auto arr = load_valid(text);
        require_pairwise_coprime(arr);
        const auto r = verify_orbit_theorem(arr);
        ordered_json j;
        j["b1"] = r.b1;
        j["d"] = r.d;
        j["orbit_dim"] = r.orbit_dim;
        j["annihilator_dim"] = r.annihilator_dim;
        j["codimension"] = r.codimension;
        j["equal"] = r.equal;
        j["genus"] = r.genus;
        j["delta_sum_zero"] = r.delta_sum_zero;
        j["delta_independent"] = r.delta_independent;
        j["direct_sum"] = r.direct_sum;
        j["surjective_by_dimension"] = r.surjective_by_dimension;
        return {dump(j), r.holds() ? kExitOk : kExitTheorem};
    } catch (const InputError& e) {
        return error_result(e.what());
    } catch (const OrbitError& e) {
        return error_result(e.what());
    } catch (const std::exception& e) {
        return error_result(e.what(), kExitTheorem);
    }
}

CommandResult tangent_command(const std::string& text, const std::optional<std::string>& form_json) {
    try {
        const auto arr = load_valid(text);
        const auto base = log_params(arr);
        const auto dims = tangent_dimensions(base);
        ordered_json j;
        j["d"] = dims.d;
        j["parameter_dim"] = dims.parameter_dim;
        j["form_dim"] = dims.form_dim;
        j["kernel_dim"] = dims.kernel_dim;
        j["image_dim"] = dims.image_dim;
        j["expected"] = dims.expected();
        if (form_json) {
            const auto omega = parse_form(*form_json, arr.d());
            const auto m = tangent_membership(base, omega);
            j["member"] = m.member;
            if (m.certificate) j["certificate"] = strings(m.certificate->flatten());
            j["residual"] = strings(m.residual);
        }
        return {dump(j), dims.expected() ? kExitOk : kExitTheorem};
    } catch (const InputError& e) {
        return error_result(e.what());
    } catch (const std::exception& e) {
        return error_result(e.what(), kExitTheorem);
    }
}

CommandResult melnikov_command(const std::string& text, const MelnikovRequest& req, const RunOptions& opts) {
    try {
        const auto arr = load_valid(text);
        const auto omega = parse_form(req.form_json, arr.d());
        const double cv = face_critical_value(arr, req.face);
        const double t = req.t.value_or(cv / 2);
        const auto oval = trace_oval(arr, req.face, t);
        const auto r = melnikov1(arr, oval, omega, opts.thresholds);
        ordered_json j;
        j["face"] = req.face;
        j["t"] = t;
        j["critical_value"] = cv;
        j["M1"] = r.value;
        j["error_estimate"] = r.error_estimate;
        j["scale"] = r.scale;
        j["relative"] = r.relative;
        j["verdict"] = to_string(r.verdict);
        j["thresholds"] = {{"accept", opts.thresholds.accept}, {"reject", opts.thresholds.reject}};
        j["oval"] = {{"points", oval.points.size()},
                     {"max_residual", oval.max_residual},
                     {"closure_gap", oval.closure_gap},
                     {"diameter", oval.diameter}};
        return {dump(j), kExitOk};
    } catch (const InputError& e) {
        return error_result(e.what());
    } catch (const MelnikovError& e) {
        return error_result(e.what());
    } catch (const std::exception& e) {
        return error_result(e.what(), kExitTheorem);
    }
}

CommandResult quadratic_point_command(const std::array<std::string, 6>& values) {
    std::array<Rational, 6> v;
    try {
        for (std::size_t k = 0; k < 6; ++k) v[k] = parse_rational(values[k]);
    } catch (const std::exception& e) {
        return error_result(std::string("quadratic point: ") + e.what());
    }
    const auto p = QuadraticParams::from(v);
    const auto g = bautin_generators(p);
    const auto m = component_membership(p);
    ordered_json j;
    j["point"] = strings({v.begin(), v.end()});
    j["g2"] = to_string(g.g2);
    j["g3"] = to_string(g.g3);
    j["g4"] = to_string(g.g4);
    j["components"] = {{"lotka_volterra", m.lotka_volterra},
                       {"hamiltonian", m.hamiltonian},
                       {"reversible", m.reversible},
                       {"exceptional", m.exceptional}};
    j["exceptional_literal_reading"] = m.exceptional_literal;
    j["singular_locus"] = m.singular_locus;
    return {dump(j), kExitOk};
}

CommandResult quadratic_verify_command(std::uint64_t seed) {
    const auto r = verify_component_containments(seed, 100);
    const auto s = singular_locus_checks();
    ordered_json j;
    j["seed"] = seed;
    ordered_json comps = ordered_json::array();
    for (const auto& c : r.components)
        comps.push_back({{"component", to_string(c.component)},
                         {"samples", c.samples},
                         {"vanishing", c.vanishing},
                         {"satisfying", c.satisfying},
                         {"symbolic_zero", c.symbolic_zero},
                         {"ok", c.ok()}});
    j["components"] = comps;
    j["degrees"] = r.degrees;
    j["degrees_ok"] = r.degrees_ok;
    j["witness_g2"] = to_string(r.witness_values.g2);
    j["witness_nonzero"] = r.witness_nonzero;
    j["exceptional_literal_reading"] = {{"samples", r.literal_samples}, {"nonvanishing", r.literal_nonvanishing}};
    j["singular_locus"] = {{"reversible", s.reversible_identically},
                           {"hamiltonian", s.hamiltonian_identically},
                           {"lotka_volterra", s.lotka_volterra_identically},
                           {"tau_collision", s.tau_collision},
                           {"sqrt3_fixture_factors", s.fixture_factors},
                           {"sqrt3_fixture_proportional", s.fixture_proportional}};
    const bool ok = r.ok() && s.ok();
    j["ok"] = ok;
    return {dump(j), ok ? kExitOk : kExitTheorem};
}

CommandResult local_model_command(long m, long n) {
    LocalFibrationModel model;
    try {
        model = build_local_model(m, n);
    } catch (const std::exception& e) {
        return error_result(e.what());
    }
    ordered_json j;
    j["model"] = {{"m", model.m}, {"n", model.n}, {"e", model.e}, {"p", model.p},
                  {"q", model.q}, {"a", model.a}, {"b", model.b}, {"lcm", model.lcm()}};
    j["relative_rank"] = relative_rank(m, n);
    const auto [wx, wy] = loop_log_weights(model);
    j["loop_log_weights"] = {to_string(wx), to_string(wy)};
    ordered_json table = ordered_json::array();
    StraightPathState st;
    for (long step = 0; step <= model.lcm(); ++step) {
        table.push_back({{"step", step}, {"k", st.k}, {"l", st.l}, {"h", st.h}, {"s", st.s}});
        st = monodromy_step(model, st);
    }
    j["steps"] = table;
    bool law = true;
    for (long k = 0; k < model.q; ++k)
        for (long l = 0; l < model.p; ++l)
            for (long h = 0; h < model.e; ++h) {
                const StraightPathState s0{k, l, h, 0};
                const auto s1 = iterate(model, s0, model.lcm());
                law = law && s1 == StraightPathState{k, l, h, 1};
            }
    j["iterate_adds_one_turn"] = law;
    return {dump(j), law ? kExitOk : kExitTheorem};
}

CommandResult render_graph_command(const std::string& text, GraphModel model) {
    try {
        const auto arr = load_valid(text);
        const auto g = model == GraphModel::G ? build_graph(arr) : build_real_graph(arr);
        return {render_graph_svg(g), kExitOk};
    } catch (const InputError& e) {
        return error_result(e.what());
    } catch (const std::exception& e) {
        return error_result(e.what(), kExitTheorem);
    }
}

CommandResult corpus_command(const CorpusOptions& corpus, const RunOptions& opts) {
    struct Case {
        std::string id;
        std::optional<LineArrangement> arr;
        std::string load_error;
    };
    std::vector<Case> cases;
    if (corpus.directory) {
        std::vector<std::filesystem::path> files;
        std::error_code ec;
        for (const auto& entry : std::filesystem::directory_iterator(*corpus.directory, ec))
            if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
        if (ec) return error_result("cannot read corpus directory " + corpus.directory->string());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) {
            Case c{f.filename().string(), std::nullopt, {}};
            try {
                c.arr = read_arrangement(f);
            } catch (const std::exception& e) {
                c.load_error = e.what();
            }
            cases.push_back(std::move(c));
        }
    } else {
        Rng rng(opts.seed);
        const std::size_t span = std::max<std::size_t>(corpus.max_lines, 3) - 2;
        for (std::size_t k = 0; k < corpus.count; ++k) {
            ArrangementSampling s;
            s.lines = 3 + k % span;
            s.max_multiplicity = corpus.max_multiplicity;
            s.pairwise_coprime = k % 2 == 0;
            cases.push_back({"case-" + std::to_string(k), random_arrangement(rng, s), {}});
        }
    }

    std::vector<CaseOutcome> outcomes(cases.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < cases.size(); k = next++) {
            if (!cases[k].arr) {
                outcomes[k].report = {{"error", cases[k].load_error}};
                outcomes[k].exit_code = kExitInput;
                continue;
            }
            try {
                outcomes[k] = analyze_case(*cases[k].arr, RunOptions{opts.thresholds, opts.seed, 1, false});
            } catch (const std::exception& e) {
                outcomes[k].report = {{"error", e.what()}};
                outcomes[k].exit_code = kExitTheorem;
            }
        }
    };
    const unsigned workers = std::max(1U, std::min<unsigned>(opts.threads, static_cast<unsigned>(cases.size())));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["tool_version"] = tool_version();
    if (corpus.directory)
        j["directory"] = corpus.directory->filename().string();
    else
        j["seed"] = opts.seed;
    ordered_json rows = ordered_json::array();
    std::size_t passed = 0;
    int exit_code = kExitOk;
    for (std::size_t k = 0; k < cases.size(); ++k) {
        const auto& r = outcomes[k].report;
        ordered_json row;
        row["id"] = cases[k].id;
        row["exit_code"] = outcomes[k].exit_code;
        if (r.contains("input_hash")) row["input_hash"] = r["input_hash"];
        if (r.contains("arrangement")) row["multiplicities"] = r["arrangement"]["multiplicities"];
        if (r.contains("fiber")) {
            row["h1"] = r["fiber"]["h1"];
            row["genus"] = r["fiber"]["genus"];
        }
        if (r.contains("orbit") && r["orbit"].contains("equal")) {
            row["orbit_equal"] = r["orbit"]["equal"];
            row["orbit_codimension"] = r["orbit"]["codimension"];
        }
        if (r.contains("tangent")) row["tangent_expected"] = r["tangent"]["expected"];
        if (r.contains("status")) row["status"] = r["status"];
        if (r.contains("error")) row["error"] = r["error"];
        if (r.contains("failures") && !r["failures"].empty()) row["failures"] = r["failures"];
        if (r.contains("report_hash")) row["report_hash"] = r["report_hash"];
        rows.push_back(row);
        if (outcomes[k].exit_code == kExitOk) ++passed;
        exit_code = std::max(exit_code, outcomes[k].exit_code);
    }
    j["cases"] = rows;
    j["total"] = cases.size();
    j["passed"] = passed;
    j["failed"] = cases.size() - passed;
    return {dump(j), exit_code};
}

}  // namespace centerkit

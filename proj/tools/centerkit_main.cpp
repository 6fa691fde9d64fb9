// centerkit: command-line front end. Reports go to stdout or --output.

#include "centerkit/io.hpp"
#include "centerkit/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace centerkit;

namespace {

int emit(const CommandResult& r, const std::string& output) {
    if (output.empty()) {
        std::cout << r.output;
    } else {
        std::ofstream out(output, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << output << "\n";
            return kExitInput;
        }
        out << r.output;
    }
    if (r.exit_code != kExitOk && !output.empty()) std::cerr << r.output;
    return r.exit_code;
}

std::string slurp(const std::string& path) {
    return read_text_file(path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fiber topology, monodromy orbits and tangent spaces of line-arrangement first integrals"};
    app.require_subcommand(1);
    app.fallthrough();

    RunOptions opts;
    opts.threads = threads_from_environment();
    std::string output;
    app.add_option("--tolerance-accept", opts.thresholds.accept, "Relative |M1| at or below which M1 vanishes")
        ->capture_default_str();
    app.add_option("--tolerance-reject", opts.thresholds.reject, "Relative |M1| at or above which M1 is nonzero")
        ->capture_default_str();
    app.add_option("--seed", opts.seed, "Seed for sampling and generated corpora")->capture_default_str();
    app.add_option("--output,-o", output, "Write the report to this file");
    app.add_flag("--timings", opts.timings, "Include wall-clock timings in reports");

    std::string input, omega;
    auto* analyze = app.add_subcommand("analyze", "Full pipeline report for one arrangement");
    analyze->add_option("input", input, "Arrangement JSON")->required();

    auto* orbit = app.add_subcommand("orbit", "Orbit span versus winding annihilator");
    orbit->add_option("input", input, "Arrangement JSON")->required();

    auto* tangent = app.add_subcommand("tangent", "Kernel/image dimensions and tangent membership");
    tangent->add_option("input", input, "Arrangement JSON")->required();
    tangent->add_option("--omega1", omega, "One-form coefficient JSON");

    MelnikovRequest mreq;
    double t_value = 0;
    auto* melnikov = app.add_subcommand("melnikov", "First Melnikov integral along a traced oval");
    melnikov->add_option("input", input, "Arrangement JSON")->required();
    melnikov->add_option("--face", mreq.face, "Bounded face index")->capture_default_str();
    auto* t_opt = melnikov->add_option("--t", t_value, "Level value (default: half the critical value)");
    melnikov->add_option("--omega1", omega, "One-form coefficient JSON")->required();

    std::vector<std::string> point;
    bool verify = false;
    auto* quadratic = app.add_subcommand("quadratic", "Bautin generators and quadratic center components");
    auto* point_opt = quadratic->add_option("--point", point, "A B C A' B' C'")->expected(6);
    auto* verify_opt = quadratic->add_flag("--verify", verify, "Run the containment and singular-locus checks");
    point_opt->excludes(verify_opt);

    long m = 1, n = 1;
    auto* local = app.add_subcommand("local-model", "Monodromy of x^m y^n with a step table");
    local->add_option("m", m)->required()->check(CLI::PositiveNumber);
    local->add_option("n", n)->required()->check(CLI::PositiveNumber);

    std::string model = "Gcheck";
    auto* render = app.add_subcommand("render-graph", "SVG drawing of a fiber graph");
    render->add_option("input", input, "Arrangement JSON")->required();
    render->add_option("--model", model, "G or Gcheck")->check(CLI::IsMember({"G", "Gcheck"}))->capture_default_str();

    CorpusOptions corpus;
    std::string directory;
    auto* corpus_cmd = app.add_subcommand("corpus", "Batch analysis of a directory or a seeded random corpus");
    corpus_cmd->add_option("directory", directory, "Directory of arrangement JSON files");
    corpus_cmd->add_option("--count", corpus.count, "Generated cases")->capture_default_str();
    corpus_cmd->add_option("--max-lines", corpus.max_lines, "Largest d+1 in generated cases")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return emit(analyze_command(slurp(input), opts), output);
        if (*orbit) return emit(orbit_command(slurp(input)), output);
        if (*tangent) {
            std::optional<std::string> form;
            if (!omega.empty()) form = slurp(omega);
            return emit(tangent_command(slurp(input), form), output);
        }
        if (*melnikov) {
            if (*t_opt) mreq.t = t_value;
            mreq.form_json = slurp(omega);
            return emit(melnikov_command(slurp(input), mreq, opts), output);
        }
        if (*quadratic) {
            if (verify) return emit(quadratic_verify_command(opts.seed), output);
            if (point.size() != 6) {
                std::cerr << "quadratic: pass --point with six values or --verify\n";
                return kExitInput;
            }
            return emit(quadratic_point_command({point[0], point[1], point[2], point[3], point[4], point[5]}), output);
        }
        if (*local) return emit(local_model_command(m, n), output);
        if (*render) return emit(render_graph_command(slurp(input), model == "G" ? GraphModel::G : GraphModel::Gcheck), output);
        if (*corpus_cmd) {
            if (!directory.empty()) corpus.directory = directory;
            return emit(corpus_command(corpus, opts), output);
        }
    } catch (const InputError& e) {
        std::cerr << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}

#pragma once

// Command implementations behind the centerkit CLI. Every command returns its
// output text and an exit code: 0 success, 1 input error, 2 a verified
// statement failed.

#include "centerkit/arrangement.hpp"
#include "centerkit/fiber_graph.hpp"
#include "centerkit/melnikov.hpp"
#include "centerkit/quadratic_bautin.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace centerkit {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitTheorem = 2;
inline constexpr int kReportSchemaVersion = 1;

std::string tool_version();

struct RunOptions {
    MelnikovThresholds thresholds;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    bool timings = false;  // timings are excluded from reproducible output unless requested
};

/// Worker count from CENTERKIT_THREADS (default 1, capped by the hardware concurrency).
unsigned threads_from_environment();

struct CommandResult {
    std::string output;
    int exit_code = kExitOk;
};

CommandResult analyze_command(const std::string& arrangement_json, const RunOptions& opts);
CommandResult orbit_command(const std::string& arrangement_json);
CommandResult tangent_command(const std::string& arrangement_json, const std::optional<std::string>& form_json);

struct MelnikovRequest {
    std::size_t face = 0;
    std::optional<double> t;  // default: half the face's critical value
    std::string form_json;
};
CommandResult melnikov_command(const std::string& arrangement_json, const MelnikovRequest& req, const RunOptions& opts);

CommandResult quadratic_point_command(const std::array<std::string, 6>& values);
CommandResult quadratic_verify_command(std::uint64_t seed);
CommandResult local_model_command(long m, long n);
CommandResult render_graph_command(const std::string& arrangement_json, GraphModel model);

struct CorpusOptions {
    std::optional<std::filesystem::path> directory;  // *.json files, sorted by name
    std::size_t count = 60;                          // generated cases when no directory is given
    std::size_t max_lines = 5;                       // generated cases cycle d+1 = 3..max_lines
    long max_multiplicity = 6;
};
CommandResult corpus_command(const CorpusOptions& corpus, const RunOptions& opts);

}  // namespace centerkit

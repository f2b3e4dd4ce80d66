#pragma once

// Run configuration, run records and the drivers behind the command-line
// tool. Every stochastic phase draws from its own stream derived from the
// run seed, the phase and the replication index.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace graybox::cli {

enum class ProblemKind { Lop, Smtwtp, Pb };

ProblemKind parse_problem_kind(const std::string& text);
std::string to_string(ProblemKind kind);

enum class OutputFormat { Json, Csv };

struct RunConfig {
    std::string command;
    ProblemKind problem = ProblemKind::Lop;
    std::string instance;
    std::optional<std::uint64_t> seed;
    std::vector<int> widths{2, 3};
    bool px = true;
    double alpha = 0.1;
    std::uint64_t budget = UINT64_MAX;  // total accepted moves
    std::uint64_t iterations = 100;     // ILS perturbation rounds
    bool first_improving = false;
    int replications = 1;
    bool parallel = false;
    OutputFormat format = OutputFormat::Json;
    bool timing = true;
};

/// Throws ContractError on an inconsistent configuration.
void validate(const RunConfig& config);

nlohmann::json config_to_json(const RunConfig& config);

struct TrajectoryPoint {
    std::uint64_t move = 0;
    double fitness = 0.0;
    std::uint64_t segment = 0;  // hill-climb segment the move belongs to
};

struct PhaseTime {
    std::string phase;
    double seconds = 0.0;
};

struct RunRecord {
    std::string command;
    RunConfig config;
    int replication = 0;
    std::uint64_t seed = 0;
    double initial_fitness = 0.0;
    double best_fitness = 0.0;
    std::string best_solution;
    std::uint64_t moves = 0;
    bool budget_exhausted = false;
    std::vector<TrajectoryPoint> trajectory;
    std::vector<double> best_per_iteration;
    std::vector<std::size_t> px_components;
    std::vector<PhaseTime> wall_clock;
};

/// One JSON object; wall_clock omitted when include_timing is false.
nlohmann::json to_json(const RunRecord& record, bool include_timing = true);
std::string csv_header();
std::string to_csv_row(const RunRecord& record);
void write_records(std::ostream& out, const std::vector<RunRecord>& records, OutputFormat format, bool include_timing);

RunRecord run_hillclimb(const RunConfig& config, int replication);
RunRecord run_ils(const RunConfig& config, int replication);
/// Runs replications 0..R-1, concurrently when config.parallel; results in
/// replication order.
std::vector<RunRecord> run_replications(const RunConfig& config);

/// Fitness of a solution given as a literal or a file holding one. An empty
/// solution means the identity permutation or the all-zeros string.
double evaluate_solution(const RunConfig& config, const std::string& solution);

/// Partition crossover report for two parents (literals or files).
nlohmann::json px_report(const RunConfig& config, const std::string& parent1, const std::string& parent2);

/// Pseudo-Boolean: splits a move by the instance's Walsh expansion.
/// Permutations: windows of the map between two parents.
nlohmann::json decompose_report(const RunConfig& config, const std::string& first, const std::string& second);

/// Certificate table for the move pairs listed in moves_text, over the
/// function given in the JSON description (see README for the format).
nlohmann::json fourier_check(const nlohmann::json& description, const std::string& moves_text,
                             const std::string& moves_source = "<moves>");

/// Writes a random instance: n elements (variables), k the arity for pb.
void generate_instance(std::ostream& out, ProblemKind kind, int n, int k, std::uint64_t seed);

/// Reads a literal, or the contents of the file it names if one exists.
std::string literal_or_file(const std::string& text);

}  // namespace graybox::cli

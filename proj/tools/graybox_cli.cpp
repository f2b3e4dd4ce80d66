// graybox: command-line front end for the gray-box operators.
//
// Exit codes: 0 success, 2 usage error, 3 parse error, 4 capacity error.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "graybox/errors.hpp"
#include "graybox/harness.hpp"

namespace {

using graybox::cli::RunConfig;

constexpr int kUsage = 2;
constexpr int kParse = 3;
constexpr int kCapacity = 4;

std::vector<int> parse_widths(const std::string& text) {
    std::vector<int> widths;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item == "2")
            widths.push_back(2);
        else if (item == "3")
            widths.push_back(3);
        else
            throw graybox::ContractError("--widths expects 2 or 2,3");
    }
    return widths;
}

// Writes to --out when given, stdout otherwise.
template <typename Writer>
void emit(const std::string& path, Writer&& writer) {
    if (path.empty()) {
        writer(std::cout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw graybox::ContractError("cannot write " + path);
    writer(out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gray-box local search, partition crossover and Fourier certificates"};
    app.require_subcommand(1);

    RunConfig config;
    std::string problem = "lop";
    std::string widths = "2,3";
    std::string format = "json";
    std::string out;
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    std::string solution, parent1, parent2, move, moves_file;
    int size = 0;
    int arity = 3;
    bool no_px = false;
    bool no_timing = false;
    bool first_improving = false;

    auto common = [&](CLI::App* sub, bool stochastic) {
        sub->add_option("--problem", problem, "lop, smtwtp or pb")->check(CLI::IsMember({"lop", "smtwtp", "pb"}));
        sub->add_option("--instance", config.instance, "Instance file");
        sub->add_option("--out", out, "Output file (default stdout)");
        sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        if (!stochastic) return;
        sub->add_option("--seed", seed, "Run seed")->required();
        sub->add_option("--widths", widths, "Window widths: 2 or 2,3");
        sub->add_option("--budget", budget, "Maximum number of accepted moves");
        sub->add_option("--replications", config.replications, "Independent seeded runs");
        sub->add_flag("--parallel", config.parallel, "Run replications concurrently");
        sub->add_flag("--first-improving", first_improving, "Take the lowest-index improving move");
        sub->add_flag("--no-timing", no_timing, "Omit wall-clock fields");
    };

    auto* eval = app.add_subcommand("eval", "Evaluate a solution");
    common(eval, false);
    eval->add_option("--solution", solution, "Solution literal or file (default identity or all zeros)");

    auto* hillclimb = app.add_subcommand("hillclimb", "Score-vector hill climber from a seeded random start");
    common(hillclimb, true);

    auto* ils = app.add_subcommand("ils", "Iterated local search with partition crossover");
    common(ils, true);
    ils->add_option("--alpha", config.alpha, "Perturbation strength in (0, 1]");
    ils->add_option("--iterations", config.iterations, "Perturbation rounds");
    ils->add_flag("--no-px", no_px, "Disable partition crossover");

    auto* px = app.add_subcommand("px", "Partition crossover of two parents");
    common(px, false);
    px->add_option("--parent1", parent1, "First parent (literal or file)")->required();
    px->add_option("--parent2", parent2, "Second parent (literal or file)")->required();

    auto* decompose = app.add_subcommand("decompose", "Split a move (pb) or the map between two parents");
    common(decompose, false);
    decompose->add_option("--move", move, "pb: bit-string move");
    decompose->add_option("--parent1", parent1, "Permutations: first parent");
    decompose->add_option("--parent2", parent2, "Permutations: second parent");

    auto* fourier = app.add_subcommand("fourier-check", "Non-interaction certificate for listed move pairs");
    fourier->add_option("--instance", config.instance, "Function description (JSON)")->required();
    fourier->add_option("--moves", moves_file, "Move pairs, one per line")->required();
    fourier->add_option("--out", out, "Output file (default stdout)");

    auto* generate = app.add_subcommand("generate", "Write a random instance");
    generate->add_option("--problem", problem, "lop, smtwtp or pb")->check(CLI::IsMember({"lop", "smtwtp", "pb"}));
    generate->add_option("--n", size, "Number of elements or variables")->required();
    generate->add_option("--k", arity, "Subfunction arity (pb)");
    generate->add_option("--seed", seed, "Generator seed")->required();
    generate->add_option("--out", out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        config.problem = graybox::cli::parse_problem_kind(problem);
        config.widths = parse_widths(widths);
        config.format = format == "csv" ? graybox::cli::OutputFormat::Csv : graybox::cli::OutputFormat::Json;
        config.px = !no_px;
        config.timing = !no_timing;
        config.first_improving = first_improving;
        if (budget > 0) config.budget = budget;

        if (eval->parsed()) {
            config.command = "eval";
            const double fitness = graybox::cli::evaluate_solution(config, solution);
            emit(out, [&](std::ostream& os) {
                const bool integral = fitness == std::floor(fitness) && std::fabs(fitness) < 9e15;
                const auto value = integral ? nlohmann::json(static_cast<std::int64_t>(fitness)) : nlohmann::json(fitness);
                if (config.format == graybox::cli::OutputFormat::Csv)
                    os << "fitness\n" << value.dump() << '\n';
                else
                    os << nlohmann::json{{"fitness", value}}.dump() << '\n';
            });
        } else if (hillclimb->parsed() || ils->parsed()) {
            config.command = hillclimb->parsed() ? "hillclimb" : "ils";
            config.seed = seed;
            const auto records = graybox::cli::run_replications(config);
            emit(out, [&](std::ostream& os) { graybox::cli::write_records(os, records, config.format, config.timing); });
        } else if (px->parsed()) {
            config.command = "px";
            const auto report = graybox::cli::px_report(config, parent1, parent2);
            emit(out, [&](std::ostream& os) { os << report.dump() << '\n'; });
        } else if (decompose->parsed()) {
            config.command = "decompose";
            const bool binary = config.problem == graybox::cli::ProblemKind::Pb;
            if (binary && move.empty()) throw graybox::ContractError("decompose --problem pb needs --move");
            if (!binary && (parent1.empty() || parent2.empty()))
                throw graybox::ContractError("decompose needs --parent1 and --parent2 for permutations");
            const auto report = binary ? graybox::cli::decompose_report(config, move, "")
                                       : graybox::cli::decompose_report(config, parent1, parent2);
            emit(out, [&](std::ostream& os) { os << report.dump() << '\n'; });
        } else if (fourier->parsed()) {
            nlohmann::json description;
            try {
                description = nlohmann::json::parse(graybox::cli::literal_or_file(config.instance));
            } catch (const nlohmann::json::parse_error& e) {
                throw graybox::ParseError(config.instance, 0, e.what());
            }
            const auto report =
                graybox::cli::fourier_check(description, graybox::cli::literal_or_file(moves_file), moves_file);
            emit(out, [&](std::ostream& os) { os << report.dump() << '\n'; });
        } else if (generate->parsed()) {
            emit(out, [&](std::ostream& os) { graybox::cli::generate_instance(os, config.problem, size, arity, seed); });
        }
    } catch (const graybox::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const graybox::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << '\n';
        return kCapacity;
    } catch (const graybox::ContractError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    }
    return 0;
}

#include "graybox/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "graybox/bitstring.hpp"
#include "graybox/errors.hpp"
#include "graybox/group_fourier.hpp"
#include "graybox/move_algebra.hpp"
#include "graybox/perm_operators.hpp"
#include "graybox/perm_problems.hpp"
#include "graybox/permutation.hpp"
#include "graybox/pseudo_boolean.hpp"
#include "graybox/rng.hpp"
#include "text_io.hpp"

namespace graybox::cli {

using nlohmann::json;

namespace {

enum Phase : std::uint64_t { kInit = 1, kClimb = 2, kPerturb = 3 };

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void add_time(std::vector<PhaseTime>& times, const std::string& phase, double seconds) {
    for (auto& t : times)
        if (t.phase == phase) {
            t.seconds += seconds;
            return;
        }
    times.push_back({phase, seconds});
}

std::string trim(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = text.find_last_not_of(" \t\r\n");
    return text.substr(first, last - first + 1);
}

// Any supported instance, with solutions exchanged as text.
struct Loaded {
    ProblemKind kind;
    std::unique_ptr<perm::PermutationProblem> perm_problem;
    pb::KBoundedFunction function;

    int size() const { return kind == ProblemKind::Pb ? function.size() : perm_problem->size(); }
};

Loaded load(const RunConfig& config) {
    if (config.instance.empty()) throw ContractError("--instance is required");
    Loaded out{config.problem, nullptr, {}};
    if (config.problem == ProblemKind::Pb)
        out.function = pb::load_instance(config.instance);
    else
        out.perm_problem = perm::load_problem(to_string(config.problem), config.instance);
    return out;
}

Permutation parse_permutation(const std::string& text, int n, const std::string& source) {
    Permutation p;
    try {
        p = Permutation::parse_one_line(trim(text));
    } catch (const ContractError& e) {
        throw ParseError(source, 1, e.what());
    }
    if (p.size() != n)
        throw ParseError(source, 1, "permutation has " + std::to_string(p.size()) + " entries, instance has " +
                                        std::to_string(n));
    return p;
}

BitString parse_bits(const std::string& text, int n, const std::string& source) {
    BitString x;
    try {
        x = BitString::from_string(trim(text));
    } catch (const ContractError& e) {
        throw ParseError(source, 1, e.what());
    }
    if (x.size() != n)
        throw ParseError(source, 1, "bit string has " + std::to_string(x.size()) + " bits, instance has " +
                                        std::to_string(n));
    return x;
}

std::string source_name(const std::string& text) {
    return std::filesystem::is_regular_file(text) ? text : std::string("<argument>");
}

Permutation random_permutation(int n, Rng& rng) {
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i;
    shuffle(rng, std::span<int>(image));
    return Permutation(std::move(image));
}

BitString random_bits(int n, Rng& rng) {
    BitString x(n);
    for (int i = 0; i < n; ++i)
        if (uniform_below(rng, 2) == 1) x.set(i);
    return x;
}

int perturbation_size(double alpha, int n) {
    return static_cast<int>(std::ceil(alpha * static_cast<double>(n)));
}

// Shuffles one random window of width ceil(alpha n), at least 2.
void perturb(Permutation& sigma, double alpha, Rng& rng) {
    const int n = sigma.size();
    if (n < 2) return;
    const int width = std::clamp(perturbation_size(alpha, n), 2, n);
    const int start = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n - width + 1)));
    std::vector<int> pattern(static_cast<std::size_t>(width));
    for (int k = 0; k < width; ++k) pattern[static_cast<std::size_t>(k)] = k;
    shuffle(rng, std::span<int>(pattern));
    sigma.apply_window(start, pattern);
}

// Flips ceil(alpha n) distinct random bits, at least 1.
void perturb(BitString& x, double alpha, Rng& rng) {
    const int n = x.size();
    if (n < 1) return;
    const int count = std::clamp(perturbation_size(alpha, n), 1, n);
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    for (int k = 0; k < count; ++k) {
        const auto j = static_cast<std::size_t>(k) + uniform_below(rng, static_cast<std::uint64_t>(n - k));
        std::swap(order[static_cast<std::size_t>(k)], order[j]);
        x.flip(order[static_cast<std::size_t>(k)]);
    }
}

// Uniform hill-climb interface over both solution kinds.
struct ClimbOutcome {
    double fitness = 0.0;
    std::uint64_t moves = 0;
    bool budget_exhausted = false;
};

template <typename Solution>
struct Driver;

template <>
struct Driver<Permutation> {
    const perm::PermutationProblem& problem;
    const RunConfig& config;

    Permutation random(Rng& rng) const { return random_permutation(problem.size(), rng); }
    double evaluate(const Permutation& s) const { return problem.evaluate(s); }
    std::string text(const Permutation& s) const { return s.to_one_line(); }

    ClimbOutcome climb(Permutation& s, std::uint64_t seed, std::uint64_t budget, std::uint64_t move_base,
                       std::uint64_t segment, std::vector<TrajectoryPoint>& trajectory) const {
        perm::WindowClimbOptions options;
        options.widths = config.widths;
        options.seed = seed;
        options.selection = config.first_improving ? perm::MoveSelection::FirstImproving : perm::MoveSelection::Random;
        options.budget = budget;
        auto result = perm::hill_climb(problem, s, options);
        for (std::size_t m = 0; m < result.trace.size(); ++m)
            trajectory.push_back({move_base + m + 1, result.trace[m].fitness, segment});
        s = std::move(result.solution);
        return {result.fitness, result.moves, result.budget_exhausted};
    }

    std::pair<Permutation, std::size_t> crossover(const Permutation& a, const Permutation& b) const {
        auto result = perm::px_perm(problem, a, b);
        return {std::move(result.offspring), result.decomposition.nontrivial_count()};
    }
};

template <>
struct Driver<BitString> {
    const pb::KBoundedFunction& function;
    const RunConfig& config;
    pb::VariableInteractionGraph vig = pb::build_vig(pb::walsh_decompose(function));

    BitString random(Rng& rng) const { return random_bits(function.size(), rng); }
    double evaluate(const BitString& s) const { return function.evaluate(s); }
    std::string text(const BitString& s) const { return s.to_string(); }

    ClimbOutcome climb(BitString& s, std::uint64_t seed, std::uint64_t budget, std::uint64_t move_base,
                       std::uint64_t segment, std::vector<TrajectoryPoint>& trajectory) const {
        pb::ClimbOptions options;
        options.seed = seed;
        options.selection = config.first_improving ? pb::Selection::FirstImproving : pb::Selection::Random;
        options.budget = budget;
        auto result = pb::bitflip_hill_climb(function, s, options);
        for (std::size_t m = 0; m < result.trace.size(); ++m)
            trajectory.push_back({move_base + m + 1, result.trace[m].fitness, segment});
        s = std::move(result.solution);
        return {result.fitness, result.moves, result.budget_exhausted};
    }

    std::pair<BitString, std::size_t> crossover(const BitString& a, const BitString& b) const {
        auto result = pb::px_binary(function, vig, a, b);
        return {std::move(result.offspring), result.components.size()};
    }
};

template <typename Solution>
RunRecord drive(const Driver<Solution>& driver, const RunConfig& config, int replication, bool iterate) {
    RunRecord record;
    record.command = config.command;
    record.config = config;
    record.replication = replication;
    record.seed = *config.seed;
    const auto rep = static_cast<std::uint64_t>(replication);

    auto started = Clock::now();
    auto init_rng = derive_rng(record.seed, kInit, rep);
    auto climb_rng = derive_rng(record.seed, kClimb, rep);
    auto perturb_rng = derive_rng(record.seed, kPerturb, rep);
    Solution current = driver.random(init_rng);
    record.initial_fitness = driver.evaluate(current);
    add_time(record.wall_clock, "init", seconds_since(started));

    std::uint64_t segment = 0;
    auto climb = [&](Solution& s) {
        const auto t = Clock::now();
        const auto remaining = config.budget - record.moves;
        const auto outcome = driver.climb(s, climb_rng(), remaining, record.moves, segment++, record.trajectory);
        record.moves += outcome.moves;
        record.budget_exhausted = record.budget_exhausted || outcome.budget_exhausted;
        add_time(record.wall_clock, "hillclimb", seconds_since(t));
        return outcome.fitness;
    };

    double best_fitness = climb(current);
    Solution best = current;
    record.best_per_iteration.push_back(best_fitness);

    if (iterate) {
        for (std::uint64_t it = 0; it < config.iterations && !record.budget_exhausted; ++it) {
            auto t = Clock::now();
            Solution candidate = best;
            perturb(candidate, config.alpha, perturb_rng);
            add_time(record.wall_clock, "perturb", seconds_since(t));
            double candidate_fitness = climb(candidate);
            if (config.px) {
                t = Clock::now();
                auto [child, q] = driver.crossover(candidate, best);
                record.px_components.push_back(q);
                const double child_fitness = driver.evaluate(child);
                if (child_fitness < candidate_fitness) {
                    candidate = std::move(child);
                    candidate_fitness = child_fitness;
                }
                add_time(record.wall_clock, "px", seconds_since(t));
            }
            if (candidate_fitness < best_fitness) {
                best = std::move(candidate);
                best_fitness = candidate_fitness;
            }
            record.best_per_iteration.push_back(best_fitness);
        }
    }
    record.best_fitness = best_fitness;
    record.best_solution = driver.text(best);
    return record;
}

RunRecord run(const RunConfig& config, int replication, bool iterate) {
    validate(config);
    if (!config.seed) throw ContractError("--seed is required for " + config.command);
    const auto instance = load(config);
    if (instance.kind == ProblemKind::Pb) return drive(Driver<BitString>{instance.function, config}, config, replication, iterate);
    return drive(Driver<Permutation>{*instance.perm_problem, config}, config, replication, iterate);
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

json number(double value) {
    // Integral fitness values print without a fractional part.
    if (std::isfinite(value) && value == std::floor(value) && std::fabs(value) < 9e15)
        return static_cast<std::int64_t>(value);
    return value;
}

}  // namespace

ProblemKind parse_problem_kind(const std::string& text) {
    if (text == "lop") return ProblemKind::Lop;
    if (text == "smtwtp") return ProblemKind::Smtwtp;
    if (text == "pb") return ProblemKind::Pb;
    throw ContractError("unknown problem kind '" + text + "' (expected lop, smtwtp or pb)");
}

std::string to_string(ProblemKind kind) {
    switch (kind) {
        case ProblemKind::Lop: return "lop";
        case ProblemKind::Smtwtp: return "smtwtp";
        case ProblemKind::Pb: return "pb";
    }
    return "";
}

void validate(const RunConfig& config) {
    if (!(config.alpha > 0.0 && config.alpha <= 1.0)) throw ContractError("--alpha must lie in (0, 1]");
    if (config.widths.empty()) throw ContractError("--widths must not be empty");
    for (int w : config.widths)
        if (w != 2 && w != 3) throw ContractError("--widths accepts 2 and 3 only");
    if (config.replications < 1) throw ContractError("--replications must be at least 1");
}

json config_to_json(const RunConfig& config) {
    json j;
    j["problem"] = to_string(config.problem);
    j["instance"] = config.instance;
    j["seed"] = config.seed ? json(*config.seed) : json(nullptr);
    j["widths"] = config.widths;
    j["px"] = config.px;
    j["alpha"] = config.alpha;
    j["budget"] = config.budget == UINT64_MAX ? json(nullptr) : json(config.budget);
    j["iterations"] = config.iterations;
    j["selection"] = config.first_improving ? "first" : "random";
    return j;
}

json to_json(const RunRecord& record, bool include_timing) {
    json j;
    j["command"] = record.command;
    j["config"] = config_to_json(record.config);
    j["replication"] = record.replication;
    j["seed"] = record.seed;
    j["initial_fitness"] = number(record.initial_fitness);
    j["best_fitness"] = number(record.best_fitness);
    j["best_solution"] = record.best_solution;
    j["moves"] = record.moves;
    j["budget_exhausted"] = record.budget_exhausted;
    json trajectory = json::array();
    for (const auto& p : record.trajectory) trajectory.push_back({p.move, number(p.fitness), p.segment});
    j["trajectory"] = std::move(trajectory);
    json best = json::array();
    for (double f : record.best_per_iteration) best.push_back(number(f));
    j["best_per_iteration"] = std::move(best);
    j["px_components"] = record.px_components;
    if (include_timing) {
        json times = json::object();
        for (const auto& t : record.wall_clock) times[t.phase] = t.seconds;
        j["wall_clock"] = std::move(times);
    }
    return j;
}

std::string csv_header() {
    return "command,problem,instance,seed,replication,initial_fitness,best_fitness,moves,budget_exhausted,"
           "iterations,px_calls,px_components_total,best_solution,wall_clock_seconds";
}

std::string to_csv_row(const RunRecord& record) {
    std::size_t components = 0;
    for (auto q : record.px_components) components += q;
    double total = 0.0;
    for (const auto& t : record.wall_clock) total += t.seconds;
    std::ostringstream row;
    row << csv_escape(record.command) << ',' << to_string(record.config.problem) << ','
        << csv_escape(record.config.instance) << ',' << record.seed << ',' << record.replication << ','
        << detail::format_number(record.initial_fitness) << ',' << detail::format_number(record.best_fitness) << ','
        << record.moves << ',' << (record.budget_exhausted ? "true" : "false") << ','
        << (record.best_per_iteration.empty() ? 0 : record.best_per_iteration.size() - 1) << ','
        << record.px_components.size() << ',' << components << ',' << csv_escape(record.best_solution) << ','
        << detail::format_number(total);
    return row.str();
}

void write_records(std::ostream& out, const std::vector<RunRecord>& records, OutputFormat format, bool include_timing) {
    if (format == OutputFormat::Csv) {
        out << csv_header() << '\n';
        for (const auto& r : records) out << to_csv_row(r) << '\n';
        return;
    }
    for (const auto& r : records) out << to_json(r, include_timing).dump() << '\n';
}

RunRecord run_hillclimb(const RunConfig& config, int replication) { return run(config, replication, false); }

RunRecord run_ils(const RunConfig& config, int replication) { return run(config, replication, true); }

std::vector<RunRecord> run_replications(const RunConfig& config) {
    validate(config);
    const bool iterate = config.command == "ils";
    std::vector<RunRecord> records(static_cast<std::size_t>(config.replications));
    if (!config.parallel || config.replications == 1) {
        for (int r = 0; r < config.replications; ++r) records[static_cast<std::size_t>(r)] = run(config, r, iterate);
        return records;
    }
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (int r = next++; r < config.replications; r = next++) {
            try {
                records[static_cast<std::size_t>(r)] = run(config, r, iterate);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const auto threads = std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                                            static_cast<unsigned>(config.replications));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return records;
}

std::string literal_or_file(const std::string& text) {
    if (!std::filesystem::is_regular_file(text)) return text;
    std::ifstream in(text, std::ios::binary);
    if (!in) throw ParseError(text, 0, "cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

double evaluate_solution(const RunConfig& config, const std::string& solution) {
    const auto instance = load(config);
    const auto source = source_name(solution);
    const auto text = literal_or_file(solution);
    if (trim(text).empty()) {
        if (instance.kind == ProblemKind::Pb) return instance.function.evaluate(BitString(instance.size()));
        return instance.perm_problem->evaluate(Permutation(instance.size()));
    }
    if (instance.kind == ProblemKind::Pb) return instance.function.evaluate(parse_bits(text, instance.size(), source));
    return instance.perm_problem->evaluate(parse_permutation(text, instance.size(), source));
}

json px_report(const RunConfig& config, const std::string& parent1, const std::string& parent2) {
    const auto instance = load(config);
    json report;
    report["problem"] = to_string(config.problem);
    report["instance"] = config.instance;
    const auto t1 = literal_or_file(parent1), t2 = literal_or_file(parent2);
    if (instance.kind == ProblemKind::Pb) {
        const auto p1 = parse_bits(t1, instance.size(), source_name(parent1));
        const auto p2 = parse_bits(t2, instance.size(), source_name(parent2));
        const auto result = pb::px_binary(instance.function, p1, p2);
        report["parent1_fitness"] = number(instance.function.evaluate(p1));
        report["parent2_fitness"] = number(instance.function.evaluate(p2));
        report["offspring"] = result.offspring.to_string();
        report["offspring_fitness"] = number(result.fitness);
        report["q"] = result.components.size();
        json components = json::array();
        for (const auto& c : result.components) {
            std::vector<int> variables;
            for (int v : c.mask.ones()) variables.push_back(v + 1);
            components.push_back({{"variables", variables}, {"delta", number(c.delta)}, {"applied", c.applied}});
        }
        report["components"] = std::move(components);
        return report;
    }
    const auto& problem = *instance.perm_problem;
    const auto p1 = parse_permutation(t1, instance.size(), source_name(parent1));
    const auto p2 = parse_permutation(t2, instance.size(), source_name(parent2));
    const auto result = perm::px_perm(problem, p1, p2);
    report["parent1_fitness"] = number(problem.evaluate(p1));
    report["parent2_fitness"] = number(problem.evaluate(p2));
    report["offspring"] = result.offspring.to_one_line();
    report["offspring_fitness"] = number(result.fitness);
    report["q"] = result.decomposition.nontrivial_count();
    json components = json::array();
    for (std::size_t i = 0; i < result.decomposition.components.size(); ++i) {
        const auto& c = result.decomposition.components[i];
        if (c.trivial()) continue;
        std::vector<int> pattern;
        for (int v : c.pattern) pattern.push_back(v + 1);
        components.push_back({{"first", c.first + 1},
                              {"last", c.last + 1},
                              {"pattern", pattern},
                              {"delta", number(c.delta)},
                              {"applied", static_cast<bool>(result.applied[i])}});
    }
    report["components"] = std::move(components);
    return report;
}

json decompose_report(const RunConfig& config, const std::string& first, const std::string& second) {
    const auto instance = load(config);
    json report;
    report["problem"] = to_string(config.problem);
    if (instance.kind == ProblemKind::Pb) {
        const auto move = parse_bits(literal_or_file(first), instance.size(), source_name(first));
        const auto split = pb::decompose_move(move, pb::walsh_decompose(instance.function));
        report["move"] = move.to_string();
        report["split"] = split ? json::array({split->first.to_string(), split->second.to_string()}) : json(nullptr);
        return report;
    }
    const auto p1 = parse_permutation(literal_or_file(first), instance.size(), source_name(first));
    const auto p2 = parse_permutation(literal_or_file(second), instance.size(), source_name(second));
    const auto decomposition = perm::decompose_parents(*instance.perm_problem, p1, p2);
    report["q"] = decomposition.nontrivial_count();
    json components = json::array();
    for (const auto& c : decomposition.components) {
        std::vector<int> pattern;
        for (int v : c.pattern) pattern.push_back(v + 1);
        components.push_back({{"first", c.first + 1},
                              {"last", c.last + 1},
                              {"pattern", pattern},
                              {"delta", number(c.delta)},
                              {"trivial", c.trivial()}});
    }
    report["components"] = std::move(components);
    return report;
}

namespace {

struct MovePair {
    std::string first, second;
    std::size_t line;
};

std::vector<MovePair> parse_move_pairs(const std::string& text, const std::string& source) {
    std::vector<MovePair> pairs;
    std::istringstream in(text);
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        std::string a, b;
        if (const auto semi = line.find(';'); semi != std::string::npos) {
            a = trim(line.substr(0, semi));
            b = trim(line.substr(semi + 1));
        } else {
            std::istringstream fields(line);
            std::string extra;
            fields >> a >> b;
            if (fields >> extra) throw ParseError(source, number, "expected two moves, separate cycle notation with ';'");
        }
        if (a.empty() || b.empty()) throw ParseError(source, number, "expected two moves");
        pairs.push_back({a, b, number});
    }
    return pairs;
}

Permutation parse_group_element(const std::string& text, int n, const std::string& source, std::size_t line) {
    try {
        if (text.find('(') != std::string::npos) return Permutation::parse_cycles(text, n);
        auto p = Permutation::parse_one_line(text);
        if (p.size() != n) throw ContractError("permutation '" + text + "' has the wrong size");
        return p;
    } catch (const ContractError& e) {
        throw ParseError(source, line, e.what());
    }
}

BitString parse_mask(const std::string& text, int n, const std::string& source, std::size_t line) {
    try {
        auto x = BitString::from_string(text);
        if (x.size() != n) throw ContractError("bit string '" + text + "' has the wrong length");
        return x;
    } catch (const ContractError& e) {
        throw ParseError(source, line, e.what());
    }
}

std::vector<double> read_table(const json& description, std::size_t expected) {
    const auto& table = description.at("table");
    if (!table.is_array() || table.size() != expected)
        throw ParseError("<function>", 0, "table must be an array of " + std::to_string(expected) + " numbers");
    std::vector<double> out;
    for (const auto& v : table) out.push_back(v.get<double>());
    return out;
}

}  // namespace

json fourier_check(const json& description, const std::string& moves_text, const std::string& moves_source) {
    json report;
    json rows = json::array();
    std::string group;
    int n = 0;
    try {
        group = description.at("group").get<std::string>();
        n = description.at("n").get<int>();
    } catch (const json::exception& e) {
        throw ParseError("<function>", 0, e.what());
    }
    if (n < 1) throw ParseError("<function>", 0, "n must be positive");
    report["group"] = group;
    report["n"] = n;
    const auto pairs = parse_move_pairs(moves_text, moves_source);

    if (group == "z2") {
        std::vector<fourier::WalshCoefficient> coeffs;
        std::vector<double> table;
        const bool enumerable = n <= 20;
        if (description.contains("walsh")) {
            pb::WalshExpansion expansion(n);
            for (const auto& [mask, value] : description.at("walsh").items())
                expansion.add(parse_mask(mask, n, "<function>", 0), value.get<double>());
            for (const auto& [mask, value] : expansion.terms()) coeffs.push_back({mask, value});
            if (enumerable) {
                table.resize(std::size_t{1} << n);
                for (std::size_t i = 0; i < table.size(); ++i)
                    table[i] = expansion.evaluate(BitString::from_index(n, i));
            }
        } else {
            if (n > 24) throw CapacityError("explicit tables over Z_2^n are limited to n <= 24");
            table = read_table(description, std::size_t{1} << n);
            coeffs = fourier::sparse_spectrum(fourier::walsh_spectrum(table), n, 1e-12);
        }
        const auto space = fourier::hypercube_space(n, table);
        const auto ys = enumerable ? moves::all_solutions(space) : std::vector<moves::SolutionId>{};
        for (const auto& pair : pairs) {
            const auto h1 = parse_mask(pair.first, n, moves_source, pair.line);
            const auto h2 = parse_mask(pair.second, n, moves_source, pair.line);
            json row{{"h1", h1.to_string()}, {"h2", h2.to_string()}, {"commute", true}};
            row["certificate"] = fourier::non_interaction_certificate(coeffs, h1, h2);
            row["definitional"] = enumerable ? json(moves::non_interacting(space, fourier::xor_move(h1),
                                                                           fourier::xor_move(h2), ys))
                                             : json(nullptr);
            rows.push_back(std::move(row));
        }
    } else if (group == "sym") {
        const fourier::SymmetricGroup sn(n);
        const auto irreps = fourier::yor_irreps(n);
        const auto table = read_table(description, sn.order());
        const auto coeffs = fourier::fourier_transform(table, irreps);
        const auto space = fourier::symmetric_space(sn, table);
        const auto ys = moves::all_solutions(space);
        for (const auto& pair : pairs) {
            const auto h1 = parse_group_element(pair.first, n, moves_source, pair.line);
            const auto h2 = parse_group_element(pair.second, n, moves_source, pair.line);
            json row{{"h1", h1.to_cycles()}, {"h2", h2.to_cycles()}};
            const bool commute = h1 * h2 == h2 * h1;
            row["commute"] = commute;
            if (commute) {
                row["certificate"] = fourier::non_interaction_certificate(coeffs, h1, h2);
                row["definitional"] =
                    moves::non_interacting(space, fourier::left_move(sn, h1), fourier::left_move(sn, h2), ys);
            } else {
                row["certificate"] = nullptr;
                row["definitional"] = nullptr;
            }
            rows.push_back(std::move(row));
        }
    } else {
        throw ParseError("<function>", 0, "group must be \"z2\" or \"sym\"");
    }
    report["pairs"] = std::move(rows);
    return report;
}

void generate_instance(std::ostream& out, ProblemKind kind, int n, int k, std::uint64_t seed) {
    if (n < 1) throw ContractError("--n must be positive");
    switch (kind) {
        case ProblemKind::Lop: perm::write_lop(out, perm::generate_lop(n, seed)); break;
        case ProblemKind::Smtwtp: perm::write_smtwtp(out, perm::generate_smtwtp(n, seed)); break;
        case ProblemKind::Pb: pb::write_instance(out, pb::generate_nk(n, k, seed)); break;
    }
}

}  // namespace graybox::cli

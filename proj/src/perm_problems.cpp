#include "graybox/perm_problems.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <map>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "graybox/errors.hpp"
#include "graybox/rng.hpp"
#include "text_io.hpp"

namespace graybox::perm {

namespace {

void require_size(const PermutationProblem& problem, const Permutation& sigma) {
    if (sigma.size() != problem.size())
        throw ContractError(problem.kind() + ": permutation of size " + std::to_string(sigma.size()) +
                            " for instance of size " + std::to_string(problem.size()));
}

bool looks_numeric(const std::string& line) {
    std::istringstream in(line);
    std::string token;
    if (!(in >> token)) return false;
    double v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    return ec == std::errc{} && ptr == token.data() + token.size();
}

}  // namespace

LopProblem::LopProblem(LopInstance instance) : instance_(std::move(instance)) {
    if (instance_.n < 0 || instance_.matrix.size() != static_cast<std::size_t>(instance_.n) * instance_.n)
        throw ContractError("LopInstance: matrix must be n x n");
}

double LopProblem::evaluate(const Permutation& sigma) const {
    require_size(*this, sigma);
    double sum = 0.0;
    for (int i = 0; i < instance_.n; ++i)
        for (int j = i + 1; j < instance_.n; ++j) sum += instance_.at(sigma[i], sigma[j]);
    return sum;
}

double LopProblem::window_delta(std::span<const int> window, std::span<const int> pattern, double) const {
    // Only pairs inside the window change their relative order.
    double delta = 0.0;
    const std::size_t w = window.size();
    for (std::size_t a = 0; a < w; ++a)
        for (std::size_t b = a + 1; b < w; ++b)
            delta += instance_.at(window[static_cast<std::size_t>(pattern[a])], window[static_cast<std::size_t>(pattern[b])]) -
                     instance_.at(window[a], window[b]);
    return delta;
}

SmtwtpProblem::SmtwtpProblem(SmtwtpInstance instance) : instance_(std::move(instance)) {
    const auto n = static_cast<std::size_t>(instance_.n);
    if (instance_.processing.size() != n || instance_.weight.size() != n || instance_.due.size() != n)
        throw ContractError("SmtwtpInstance: all job arrays must have length n");
}

double SmtwtpProblem::evaluate(const Permutation& sigma) const {
    require_size(*this, sigma);
    double completion = 0.0, sum = 0.0;
    for (int p = 0; p < instance_.n; ++p) {
        const auto job = static_cast<std::size_t>(sigma[p]);
        completion += instance_.processing[job];
        sum += instance_.weight[job] * std::max(0.0, completion - instance_.due[job]);
    }
    return sum;
}

double SmtwtpProblem::window_delta(std::span<const int> window, std::span<const int> pattern, double offset) const {
    double before = 0.0, after = 0.0;
    double c_old = offset, c_new = offset;
    for (std::size_t k = 0; k < window.size(); ++k) {
        const auto old_job = static_cast<std::size_t>(window[k]);
        const auto new_job = static_cast<std::size_t>(window[static_cast<std::size_t>(pattern[k])]);
        c_old += instance_.processing[old_job];
        c_new += instance_.processing[new_job];
        before += instance_.weight[old_job] * std::max(0.0, c_old - instance_.due[old_job]);
        after += instance_.weight[new_job] * std::max(0.0, c_new - instance_.due[new_job]);
    }
    return after - before;
}

double offset_before(const PermutationProblem& problem, const Permutation& sigma, int position) {
    double offset = 0.0;
    for (int p = 0; p < position; ++p) offset += problem.length(sigma[p]);
    return offset;
}

double window_delta(const PermutationProblem& problem, const Permutation& sigma, int first,
                    std::span<const int> pattern) {
    require_size(problem, sigma);
    const int w = static_cast<int>(pattern.size());
    if (first < 0 || first + w > sigma.size()) throw ContractError("window_delta: window outside permutation");
    std::vector<char> seen(pattern.size(), 0);
    for (int v : pattern) {
        if (v < 0 || v >= w || seen[static_cast<std::size_t>(v)])
            throw ContractError("window_delta: pattern is not a permutation of the window");
        seen[static_cast<std::size_t>(v)] = 1;
    }
    const auto window = std::span<const int>(sigma.image()).subspan(static_cast<std::size_t>(first), pattern.size());
    return problem.window_delta(window, pattern, offset_before(problem, sigma, first));
}

double window_delta(const PermutationProblem& problem, const Permutation& sigma, int first, int last,
                    const Permutation& move) {
    if (move.size() != sigma.size()) throw ContractError("window_delta: move size mismatch");
    if (first < 0 || last < first || last >= sigma.size()) throw ContractError("window_delta: invalid window");
    for (int p = 0; p < move.size(); ++p)
        if ((p < first || p > last) && move[p] != p)
            throw ContractError("window_delta: move touches position " + std::to_string(p + 1) + " outside window [" +
                                std::to_string(first + 1) + ", " + std::to_string(last + 1) + "]");
    std::vector<int> pattern;
    for (int p = first; p <= last; ++p) pattern.push_back(move[p] - first);
    return window_delta(problem, sigma, first, pattern);
}

TourArcs::TourArcs(std::vector<int> cities) : cities_(std::move(cities)) {
    auto sorted = cities_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ContractError("TourArcs: cities must be distinct");
}

std::set<Arc> TourArcs::arcs() const {
    std::set<Arc> out;
    for (std::size_t i = 0; i < cities_.size(); ++i) out.emplace(cities_[i], cities_[(i + 1) % cities_.size()]);
    return out;
}

TourArcs TourArcs::insert_before(int city, int before) const {
    if (city == before) throw ContractError("insertion move: city and target must differ");
    auto seq = cities_;
    const auto it = std::find(seq.begin(), seq.end(), city);
    if (it == seq.end() || std::find(seq.begin(), seq.end(), before) == seq.end())
        throw ContractError("insertion move: city not in tour");
    seq.erase(it);
    seq.insert(std::find(seq.begin(), seq.end(), before), city);
    return TourArcs(std::move(seq));
}

bool TourArcs::is_hamiltonian_cycle_of(const std::set<Arc>& arcs) const {
    if (arcs.size() != cities_.size() || cities_.empty()) return false;
    std::map<int, int> next;
    for (const auto& [from, to] : arcs) {
        if (next.count(from)) return false;
        next[from] = to;
    }
    int city = cities_.front();
    for (std::size_t step = 0; step < cities_.size(); ++step) {
        const auto it = next.find(city);
        if (it == next.end()) return false;
        city = it->second;
        if (city == cities_.front() && step + 1 < cities_.size()) return false;
    }
    return city == cities_.front() && next.size() == cities_.size() &&
           std::all_of(cities_.begin(), cities_.end(), [&](int c) { return next.count(c) == 1; });
}

ArcDiff insertion_move_edges(const TourArcs& tour, int i, int j) {
    const std::pair<int, int> single[] = {{i, j}};
    return insertion_move_edges(tour, single);
}

ArcDiff insertion_move_edges(const TourArcs& tour, std::span<const std::pair<int, int>> moves) {
    TourArcs current = tour;
    for (const auto& [i, j] : moves) current = current.insert_before(i, j);
    const auto before = tour.arcs();
    const auto after = current.arcs();
    ArcDiff diff;
    std::set_difference(before.begin(), before.end(), after.begin(), after.end(),
                        std::inserter(diff.removed, diff.removed.end()));
    std::set_difference(after.begin(), after.end(), before.begin(), before.end(),
                        std::inserter(diff.added, diff.added.end()));
    return diff;
}

LopInstance parse_lop(std::istream& in, const std::string& source) {
    detail::TokenReader reader(in, source);
    // An optional name line precedes the size.
    if (!reader.done()) {
        const auto& lines = reader.lines();
        if (!looks_numeric(lines[reader.line() - 1])) reader.skip_line();
    }
    const auto line = reader.line();
    const auto n = reader.read_int("n");
    if (n <= 0) reader.fail(line, "n must be positive");
    LopInstance instance;
    instance.n = static_cast<int>(n);
    instance.matrix.reserve(static_cast<std::size_t>(n * n));
    for (long long k = 0; k < n * n; ++k) instance.matrix.push_back(reader.read_double("matrix entry"));
    reader.expect_end();
    return instance;
}

SmtwtpInstance parse_smtwtp(std::istream& in, const std::string& source) {
    detail::TokenReader reader(in, source);
    const auto line = reader.line();
    const auto n = reader.read_int("n");
    if (n <= 0) reader.fail(line, "n must be positive");
    SmtwtpInstance instance;
    instance.n = static_cast<int>(n);
    auto read_row = [&](std::vector<double>& row, const char* field) {
        for (long long j = 0; j < n; ++j) {
            const auto l = reader.line();
            const double v = reader.read_double(field);
            if (v < 0) reader.fail(l, std::string(field) + " must be non-negative");
            row.push_back(v);
        }
    };
    read_row(instance.processing, "processing time");
    read_row(instance.weight, "weight");
    read_row(instance.due, "due date");
    reader.expect_end();
    return instance;
}

LopInstance load_lop(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path, 0, "cannot open file");
    return parse_lop(in, path);
}

SmtwtpInstance load_smtwtp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path, 0, "cannot open file");
    return parse_smtwtp(in, path);
}

void write_lop(std::ostream& out, const LopInstance& instance) {
    out << instance.n << '\n';
    for (int i = 0; i < instance.n; ++i) {
        for (int j = 0; j < instance.n; ++j) out << (j ? " " : "") << detail::format_number(instance.at(i, j));
        out << '\n';
    }
}

void write_smtwtp(std::ostream& out, const SmtwtpInstance& instance) {
    out << instance.n << '\n';
    for (const auto* row : {&instance.processing, &instance.weight, &instance.due}) {
        for (std::size_t j = 0; j < row->size(); ++j) out << (j ? " " : "") << detail::format_number((*row)[j]);
        out << '\n';
    }
}

LopInstance generate_lop(int n, std::uint64_t seed) {
    if (n <= 0) throw ContractError("generate_lop: n must be positive");
    Rng rng(seed);
    LopInstance instance;
    instance.n = n;
    instance.matrix.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) instance.matrix[static_cast<std::size_t>(i * n + j)] = static_cast<double>(uniform_below(rng, 100));
    return instance;
}

SmtwtpInstance generate_smtwtp(int n, std::uint64_t seed, double tardiness_factor, double due_date_range) {
    if (n <= 0) throw ContractError("generate_smtwtp: n must be positive");
    Rng rng(seed);
    SmtwtpInstance instance;
    instance.n = n;
    double total = 0.0;
    for (int j = 0; j < n; ++j) {
        instance.processing.push_back(static_cast<double>(1 + uniform_below(rng, 100)));
        total += instance.processing.back();
    }
    for (int j = 0; j < n; ++j) instance.weight.push_back(static_cast<double>(1 + uniform_below(rng, 10)));
    const auto lo = static_cast<std::int64_t>(std::max(0.0, std::floor(total * (1 - tardiness_factor - due_date_range / 2))));
    const auto hi = std::max(lo, static_cast<std::int64_t>(std::max(0.0, std::floor(total * (1 - tardiness_factor + due_date_range / 2)))));
    for (int j = 0; j < n; ++j)
        instance.due.push_back(static_cast<double>(lo + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)))));
    return instance;
}

std::unique_ptr<PermutationProblem> load_problem(const std::string& kind, const std::string& path) {
    if (kind == "lop") return std::make_unique<LopProblem>(load_lop(path));
    if (kind == "smtwtp") return std::make_unique<SmtwtpProblem>(load_smtwtp(path));
    throw ContractError("unknown permutation problem kind '" + kind + "'");
}

}  // namespace graybox::perm

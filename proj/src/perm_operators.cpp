#include "graybox/perm_operators.hpp"

#include <algorithm>
#include <array>

#include "graybox/errors.hpp"

namespace graybox::perm {

namespace {

constexpr std::array<int, 2> kWidth2[] = {{1, 0}};
constexpr std::array<int, 3> kWidth3[] = {{0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
constexpr int kSwapFirstPair = 1;   // {1, 0, 2}
constexpr int kSwapSecondPair = 0;  // {0, 2, 1}

std::vector<int> normalized_widths(std::span<const int> widths) {
    std::vector<int> out(widths.begin(), widths.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.empty()) throw ContractError("window widths must not be empty");
    for (int w : out)
        if (w != 2 && w != 3) throw ContractError("window widths must be a subset of {2, 3}");
    return out;
}

// Positions of the window actually moved by the pattern, as [lo, hi] offsets.
std::pair<int, int> changed_span(std::span<const int> pattern) {
    int lo = static_cast<int>(pattern.size()), hi = -1;
    for (int k = 0; k < static_cast<int>(pattern.size()); ++k)
        if (pattern[static_cast<std::size_t>(k)] != k) {
            lo = std::min(lo, k);
            hi = std::max(hi, k);
        }
    return {lo, hi};
}

}  // namespace

int pattern_count(int width) {
    switch (width) {
        case 2: return 1;
        case 3: return 5;
        default: throw ContractError("window width must be 2 or 3");
    }
}

std::span<const int> window_pattern(int width, int index) {
    if (index < 0 || index >= pattern_count(width)) throw ContractError("window pattern index out of range");
    if (width == 2) return kWidth2[index];
    return kWidth3[index];
}

ScoreVector::ScoreVector(int n, std::span<const int> widths) : n_(n), widths_(normalized_widths(widths)) {
    for (int w : widths_) {
        base_.push_back(moves_.size());
        for (int s = 0; s + w <= n; ++s)
            for (int p = 0; p < pattern_count(w); ++p) moves_.push_back({s, w, p});
    }
    canonical_.resize(moves_.size());
    const bool alias_swaps = widths_.size() == 2 && n >= 3;
    for (std::size_t e = 0; e < moves_.size(); ++e) {
        canonical_[e] = e;
        if (!alias_swaps || moves_[e].width != 2) continue;
        const int s = moves_[e].start;
        const std::size_t width3 = base_[1];
        canonical_[e] = s + 2 < n ? width3 + static_cast<std::size_t>(s) * 5 + kSwapFirstPair
                                  : width3 + static_cast<std::size_t>(s - 1) * 5 + kSwapSecondPair;
    }
    values_.assign(moves_.size(), 0.0);
    improving_ = IndexedSet(moves_.size());
}

void ScoreVector::set(std::size_t entry, double value) {
    values_[entry] = value;
    improving_.assign(entry, value < 0.0);
}

void ScoreVector::overlapping(int first, int last, std::vector<std::size_t>& out) const {
    out.clear();
    for (std::size_t b = 0; b < widths_.size(); ++b) {
        const int w = widths_[b];
        const int pc = pattern_count(w);
        const int lo = std::max(0, first - w + 1);
        const int hi = std::min(n_ - w, last);
        for (int s = lo; s <= hi; ++s)
            for (int p = 0; p < pc; ++p) out.push_back(base_[b] + static_cast<std::size_t>(s * pc + p));
    }
}

ScoreVector init_scores(const PermutationProblem& problem, const Permutation& sigma, std::span<const int> widths) {
    ScoreVector scores(sigma.size(), widths);
    for (std::size_t e = 0; e < scores.size(); ++e) {
        const auto& m = scores.move(e);
        scores.set(e, window_delta(problem, sigma, m.start, m.local()));
    }
    return scores;
}

WindowClimber::WindowClimber(const PermutationProblem& problem, Permutation start, WindowClimbOptions options)
    : problem_(problem), sigma_(std::move(start)), options_(std::move(options)), rng_(options_.seed) {
    if (sigma_.size() != problem_.size()) throw ContractError("WindowClimber: start size does not match instance");
    const int n = sigma_.size();
    offsets_.assign(static_cast<std::size_t>(n) + 1, 0.0);
    for (int p = 0; p < n; ++p) offsets_[static_cast<std::size_t>(p + 1)] = offsets_[static_cast<std::size_t>(p)] + problem_.length(sigma_[p]);
    scores_ = ScoreVector(n, options_.widths);
    for (std::size_t e = 0; e < scores_.size(); ++e)
        if (scores_.canonical(e) == e) scores_.set(e, price(scores_.move(e)));
    for (std::size_t e = 0; e < scores_.size(); ++e)
        if (scores_.canonical(e) != e) scores_.set(e, scores_[scores_.canonical(e)]);
    fitness_ = problem_.evaluate(sigma_);
}

double WindowClimber::price(const WindowMove& move) const {
    const auto window =
        std::span<const int>(sigma_.image()).subspan(static_cast<std::size_t>(move.start), static_cast<std::size_t>(move.width));
    return problem_.window_delta(window, move.local(), offsets_[static_cast<std::size_t>(move.start)]);
}

bool WindowClimber::step() {
    const auto& improving = scores_.improving();
    if (improving.empty()) return false;
    const std::size_t chosen = options_.selection == MoveSelection::Random
                                   ? improving.at(static_cast<std::size_t>(uniform_below(rng_, improving.size())))
                                   : improving.min();
    const WindowMove move = scores_.move(chosen);
    fitness_ += scores_[chosen];
    sigma_.apply_window(move.start, move.local());

    const auto [lo, hi] = changed_span(move.local());
    const int first = move.start + lo;
    const int last = move.start + hi;
    for (int p = first; p <= last; ++p)
        offsets_[static_cast<std::size_t>(p + 1)] = offsets_[static_cast<std::size_t>(p)] + problem_.length(sigma_[p]);

    scores_.overlapping(first, last, scratch_);
    std::size_t evaluations = 0;
    for (auto e : scratch_)
        if (scores_.canonical(e) == e) {
            scores_.set(e, price(scores_.move(e)));
            ++evaluations;
        }
    for (auto e : scratch_)
        if (scores_.canonical(e) != e) scores_.set(e, scores_[scores_.canonical(e)]);

    last_move_ = move;
    last_evaluations_ = evaluations;
    last_refreshed_ = scratch_.size();
    ++moves_;
    return true;
}

WindowClimbResult WindowClimber::run() {
    WindowClimbResult result;
    while (moves_ < options_.budget && step()) {
        result.trace.push_back({last_move_, fitness_});
        result.max_evaluations = std::max(result.max_evaluations, last_evaluations_);
        result.max_refreshed = std::max(result.max_refreshed, last_refreshed_);
    }
    result.solution = sigma_;
    result.fitness = fitness_;
    result.moves = moves_;
    result.budget_exhausted = !scores_.improving().empty();
    return result;
}

WindowClimbResult hill_climb(const PermutationProblem& problem, const Permutation& start,
                             const WindowClimbOptions& options) {
    WindowClimber climber(problem, start, options);
    return climber.run();
}

std::size_t ComponentDecomposition::nontrivial_count() const {
    return static_cast<std::size_t>(
        std::count_if(components.begin(), components.end(), [](const Component& c) { return !c.trivial(); }));
}

ComponentDecomposition decompose_parents(const Permutation& sigma1, const Permutation& sigma2) {
    if (sigma1.size() != sigma2.size()) throw ContractError("decompose_parents: parents of different size");
    // map(p): position in sigma1 of the element sigma2 holds at p, so that
    // sigma2 = map * sigma1.
    const auto map = sigma2 * sigma1.inverse();
    const int n = sigma1.size();
    ComponentDecomposition out;
    int i = 0;
    while (i < n) {
        int l = i;
        int j = map[l];
        while (l < j) {
            ++l;
            j = std::max(j, map[l]);
        }
        Component c;
        c.first = i;
        c.last = j;
        for (int p = i; p <= j; ++p) c.pattern.push_back(map[p] - i);
        out.components.push_back(std::move(c));
        i = j + 1;
    }
    return out;
}

ComponentDecomposition decompose_parents(const PermutationProblem& problem, const Permutation& sigma1,
                                         const Permutation& sigma2) {
    auto out = decompose_parents(sigma1, sigma2);
    if (sigma1.size() != problem.size()) throw ContractError("decompose_parents: parent size does not match instance");
    double offset = 0.0;
    int position = 0;
    for (auto& c : out.components) {
        for (; position < c.first; ++position) offset += problem.length(sigma1[position]);
        if (!c.trivial()) {
            const auto window = std::span<const int>(sigma1.image())
                                    .subspan(static_cast<std::size_t>(c.first), c.pattern.size());
            c.delta = problem.window_delta(window, c.pattern, offset);
        }
    }
    return out;
}

Permutation apply_components(const Permutation& sigma, const ComponentDecomposition& decomposition,
                             std::span<const std::size_t> chosen) {
    Permutation out = sigma;
    for (auto index : chosen) {
        const auto& c = decomposition.components.at(index);
        out.apply_window(c.first, c.pattern);
    }
    return out;
}

PermPxResult px_perm(const PermutationProblem& problem, const Permutation& sigma1, const Permutation& sigma2) {
    PermPxResult result;
    result.decomposition = decompose_parents(problem, sigma1, sigma2);
    result.offspring = sigma1;
    for (const auto& c : result.decomposition.components) {
        const bool take = !c.trivial() && c.delta < 0.0;
        if (take) result.offspring.apply_window(c.first, c.pattern);
        result.applied.push_back(take);
    }
    result.fitness = problem.evaluate(result.offspring);
    return result;
}

}  // namespace graybox::perm

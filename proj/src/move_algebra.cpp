#include "graybox/move_algebra.hpp"

#include <cmath>
#include <numeric>

#include "graybox/errors.hpp"

namespace graybox::moves {

namespace {

bool close(double a, double b, double tolerance) {
    return tolerance == 0.0 ? a == b : std::abs(a - b) <= tolerance;
}

void require_enumerable(const SearchSpace& space, std::size_t cap) {
    if (space.size > cap)
        throw CapacityError("search space of " + std::to_string(space.size) +
                            " solutions exceeds enumeration cap " + std::to_string(cap));
}

void require_commuting(std::span<const MoveHandle> moves, const SearchSpace& space, std::size_t cap) {
    for (std::size_t i = 0; i < moves.size(); ++i)
        for (std::size_t j = i + 1; j < moves.size(); ++j)
            if (!commute(moves[i], moves[j], space, cap))
                throw ContractError("moves '" + moves[i].label + "' and '" + moves[j].label + "' do not commute");
}

}  // namespace

MoveHandle identity_move() {
    return {[](SolutionId x) { return x; }, "id"};
}

MoveHandle compose(const MoveHandle& outer, const MoveHandle& inner) {
    return {[outer = outer.apply, inner = inner.apply](SolutionId x) { return outer(inner(x)); },
            outer.label + "∘" + inner.label};
}

double delta(const SearchSpace& f, const MoveHandle& h, SolutionId x) {
    return f.evaluate(h(x)) - f.evaluate(x);
}

bool commute(const MoveHandle& h1, const MoveHandle& h2, const SearchSpace& space, std::size_t enumeration_cap) {
    require_enumerable(space, enumeration_cap);
    for (SolutionId x = 0; x < space.size; ++x)
        if (h1(h2(x)) != h2(h1(x))) return false;
    return true;
}

std::vector<SolutionId> all_solutions(const SearchSpace& space, std::size_t enumeration_cap) {
    require_enumerable(space, enumeration_cap);
    std::vector<SolutionId> ys(space.size);
    std::iota(ys.begin(), ys.end(), SolutionId{0});
    return ys;
}

bool non_interacting(const SearchSpace& f, const MoveHandle& h1, const MoveHandle& h2,
                     std::span<const SolutionId> ys, const CheckOptions& options) {
    if (options.check_commute && !commute(h1, h2, f, options.enumeration_cap))
        throw ContractError("non_interacting: moves '" + h1.label + "' and '" + h2.label + "' do not commute");
    for (SolutionId x : ys) {
        const SolutionId moved = h1(x);
        if (!close(delta(f, h2, moved), delta(f, h2, x), options.tolerance)) return false;
    }
    return true;
}

bool additive_pair(const SearchSpace& f, const MoveHandle& h1, const MoveHandle& h2,
                   std::span<const SolutionId> ys, double tolerance) {
    const auto both = compose(h1, h2);
    for (SolutionId x : ys)
        if (!close(delta(f, both, x), delta(f, h1, x) + delta(f, h2, x), tolerance)) return false;
    return true;
}

bool check_decomposition(const SearchSpace& f, std::span<const MoveHandle> moves, std::span<const SolutionId> ys,
                         const CheckOptions& options) {
    if (options.check_commute) require_commuting(moves, f, options.enumeration_cap);

    std::vector<std::size_t> all(moves.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    const auto composed = compose_subset(moves, all);
    for (SolutionId x : ys) {
        double sum = 0.0;
        for (const auto& h : moves) sum += delta(f, h, x);
        if (!close(delta(f, composed, x), sum, options.tolerance)) return false;
    }
    if (!options.check_orbits) return true;

    // Hypothesis: each pair (i, j) is non-interacting on H(Y) for every
    // composition H of the other moves, including the empty one.
    const std::size_t m = moves.size();
    if (m > 20) throw CapacityError("orbit check over more than 20 moves");
    CheckOptions pair_options = options;
    pair_options.check_commute = false;
    std::vector<SolutionId> orbit(ys.size());
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            std::vector<std::size_t> others;
            for (std::size_t k = 0; k < m; ++k)
                if (k != i && k != j) others.push_back(k);
            for (std::size_t mask = 0; mask < (std::size_t{1} << others.size()); ++mask) {
                std::vector<std::size_t> subset;
                for (std::size_t b = 0; b < others.size(); ++b)
                    if (mask >> b & 1u) subset.push_back(others[b]);
                const auto outer = compose_subset(moves, subset);
                for (std::size_t y = 0; y < ys.size(); ++y) orbit[y] = outer(ys[y]);
                if (!non_interacting(f, moves[i], moves[j], orbit, pair_options)) return false;
            }
        }
    }
    return true;
}

MoveHandle compose_subset(std::span<const MoveHandle> moves, std::span<const std::size_t> subset) {
    MoveHandle result = identity_move();
    std::string label;
    for (std::size_t index : subset) {
        if (index >= moves.size()) throw ContractError("compose_subset: index out of range");
        label += label.empty() ? moves[index].label : "∘" + moves[index].label;
    }
    if (subset.size() == 1) return moves[subset.front()];
    std::vector<std::function<SolutionId(SolutionId)>> chain;
    for (std::size_t index : subset) chain.push_back(moves[index].apply);
    result.apply = [chain = std::move(chain)](SolutionId x) {
        for (const auto& h : chain) x = h(x);
        return x;
    };
    if (!label.empty()) result.label = label;
    return result;
}

}  // namespace graybox::moves

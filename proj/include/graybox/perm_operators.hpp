#pragma once

// Gray-box operators for window-separable permutation problems.
//
// A window move reorders 2 or 3 consecutive positions. Moves on disjoint
// windows do not interact, so the climber stores one delta per window move
// and after a move refreshes only the entries whose windows overlap the
// positions that changed. Partition crossover splits the parent-to-parent
// move into its minimal closed windows and applies each independently.

#include <cstdint>
#include <span>
#include <vector>

#include "graybox/indexed_set.hpp"
#include "graybox/perm_problems.hpp"
#include "graybox/permutation.hpp"
#include "graybox/rng.hpp"

namespace graybox::perm {

/// Number of non-identity patterns of a window: 1 for width 2, 5 for width 3.
int pattern_count(int width);
/// Local one-line form of the index-th non-identity pattern (lexicographic).
std::span<const int> window_pattern(int width, int index);

struct WindowMove {
    int start = 0;  // 0-based first position
    int width = 2;
    int pattern = 0;

    std::span<const int> local() const { return window_pattern(width, pattern); }
};

/// Stored delta per window move of the enabled widths, plus the set of
/// entries with negative delta.
///
/// With both widths enabled every adjacent swap is also a width-3 move; the
/// swap entry then aliases the width-3 entry for the same move and is copied
/// rather than re-priced.
class ScoreVector {
public:
    ScoreVector() = default;
    ScoreVector(int n, std::span<const int> widths);

    std::size_t size() const noexcept { return moves_.size(); }
    const WindowMove& move(std::size_t entry) const { return moves_[entry]; }
    double operator[](std::size_t entry) const { return values_[entry]; }
    const std::vector<double>& values() const noexcept { return values_; }
    const IndexedSet& improving() const noexcept { return improving_; }
    /// Entry holding the authoritative value for this entry's move.
    std::size_t canonical(std::size_t entry) const { return canonical_[entry]; }
    const std::vector<int>& widths() const noexcept { return widths_; }

    void set(std::size_t entry, double value);
    /// Entries whose window intersects positions [first, last].
    void overlapping(int first, int last, std::vector<std::size_t>& out) const;

private:
    int n_ = 0;
    std::vector<int> widths_;
    std::vector<std::size_t> base_;  // first entry of each width block
    std::vector<WindowMove> moves_;
    std::vector<std::size_t> canonical_;
    std::vector<double> values_;
    IndexedSet improving_;
};

/// Fresh score vector for sigma (each entry priced by window_delta).
ScoreVector init_scores(const PermutationProblem& problem, const Permutation& sigma, std::span<const int> widths);

enum class MoveSelection { Random, FirstImproving };

struct WindowClimbOptions {
    std::vector<int> widths{2, 3};
    std::uint64_t seed = 0;
    MoveSelection selection = MoveSelection::Random;
    std::uint64_t budget = UINT64_MAX;
};

struct WindowClimbStep {
    WindowMove move;
    double fitness = 0.0;
};

struct WindowClimbResult {
    Permutation solution;
    double fitness = 0.0;
    std::uint64_t moves = 0;
    bool budget_exhausted = false;
    std::vector<WindowClimbStep> trace;
    /// Largest number of window_delta evaluations after one move.
    std::size_t max_evaluations = 0;
    /// Largest number of score entries rewritten after one move (aliases included).
    std::size_t max_refreshed = 0;
};

class WindowClimber {
public:
    WindowClimber(const PermutationProblem& problem, Permutation start, WindowClimbOptions options = {});

    const Permutation& solution() const noexcept { return sigma_; }
    double fitness() const noexcept { return fitness_; }
    const ScoreVector& scores() const noexcept { return scores_; }
    std::uint64_t moves() const noexcept { return moves_; }
    const WindowMove& last_move() const noexcept { return last_move_; }
    std::size_t last_evaluations() const noexcept { return last_evaluations_; }
    std::size_t last_refreshed() const noexcept { return last_refreshed_; }

    /// Applies one improving move; false when none is stored.
    bool step();
    WindowClimbResult run();

private:
    double price(const WindowMove& move) const;

    const PermutationProblem& problem_;
    Permutation sigma_;
    WindowClimbOptions options_;
    Rng rng_;
    std::vector<double> offsets_;  // offsets_[p]: total length before position p
    ScoreVector scores_;
    double fitness_ = 0.0;
    std::uint64_t moves_ = 0;
    WindowMove last_move_;
    std::size_t last_evaluations_ = 0;
    std::size_t last_refreshed_ = 0;
    std::vector<std::size_t> scratch_;
};

WindowClimbResult hill_climb(const PermutationProblem& problem, const Permutation& start,
                             const WindowClimbOptions& options = {});

struct Component {
    int first = 0;  // 0-based inclusive window
    int last = 0;
    std::vector<int> pattern;  // local one-line form
    double delta = 0.0;

    bool trivial() const noexcept { return first == last; }
};

struct ComponentDecomposition {
    std::vector<Component> components;

    std::size_t nontrivial_count() const;
};

/// Minimal closed windows of the position map taking sigma1 to sigma2.
/// Deltas are left at zero.
ComponentDecomposition decompose_parents(const Permutation& sigma1, const Permutation& sigma2);
/// Same, with each component priced at sigma1.
ComponentDecomposition decompose_parents(const PermutationProblem& problem, const Permutation& sigma1,
                                         const Permutation& sigma2);

/// Applies to sigma the components selected by `chosen` (indices into
/// decomposition.components).
Permutation apply_components(const Permutation& sigma, const ComponentDecomposition& decomposition,
                             std::span<const std::size_t> chosen);

struct PermPxResult {
    Permutation offspring;
    double fitness = 0.0;
    ComponentDecomposition decomposition;
    std::vector<bool> applied;  // parallel to decomposition.components
};

PermPxResult px_perm(const PermutationProblem& problem, const Permutation& sigma1, const Permutation& sigma2);

}  // namespace graybox::perm

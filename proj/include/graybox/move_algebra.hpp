#pragma once

// Representation-agnostic move algebra over a finite search space.
//
// Solutions are opaque indices in [0, size). A move is any total function
// on those indices. Everything here is brute force by construction: these
// routines are the certificates the structured operators are checked against,
// so they enumerate instead of sampling and refuse spaces above the cap.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace graybox::moves {

using SolutionId = std::size_t;

struct SearchSpace {
    std::size_t size = 0;
    std::function<double(SolutionId)> evaluate;
};

struct MoveHandle {
    std::function<SolutionId(SolutionId)> apply;
    std::string label;

    SolutionId operator()(SolutionId x) const { return apply(x); }
};

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

struct CheckOptions {
    /// Absolute tolerance on delta comparisons; 0 demands exact equality.
    double tolerance = 1e-9;
    std::size_t enumeration_cap = kDefaultEnumerationCap;
    /// Verify the commutation precondition by enumeration before checking.
    bool check_commute = true;
    /// check_decomposition only: also require pairwise non-interaction on
    /// every orbit set H(Y), H a composition of the remaining moves.
    bool check_orbits = false;
};

MoveHandle identity_move();

/// outer ∘ inner: applies inner first.
MoveHandle compose(const MoveHandle& outer, const MoveHandle& inner);

/// f(h(x)) - f(x).
double delta(const SearchSpace& f, const MoveHandle& h, SolutionId x);

/// Exhaustive check that h1(h2(x)) == h2(h1(x)) for every x.
/// Throws CapacityError when space.size exceeds the cap.
bool commute(const MoveHandle& h1, const MoveHandle& h2, const SearchSpace& space,
             std::size_t enumeration_cap = kDefaultEnumerationCap);

/// Every solution of the space, as a Y-set.
std::vector<SolutionId> all_solutions(const SearchSpace& space,
                                      std::size_t enumeration_cap = kDefaultEnumerationCap);

/// (Δ_{h2} f)(h1(x)) == (Δ_{h2} f)(x) for all x in Y.
/// Throws ContractError when the moves do not commute.
bool non_interacting(const SearchSpace& f, const MoveHandle& h1, const MoveHandle& h2,
                     std::span<const SolutionId> ys, const CheckOptions& options = {});

/// Additive form: (Δ_{h1∘h2} f)(x) == (Δ_{h1} f)(x) + (Δ_{h2} f)(x) for all x in Y.
bool additive_pair(const SearchSpace& f, const MoveHandle& h1, const MoveHandle& h2,
                   std::span<const SolutionId> ys, double tolerance = 1e-9);

/// Delta of the full composition equals the sum of member deltas on Y.
/// With options.check_orbits the hypothesis on the H(Y) orbits must hold as
/// well; without it only the conclusion is checked on Y.
bool check_decomposition(const SearchSpace& f, std::span<const MoveHandle> moves,
                         std::span<const SolutionId> ys, const CheckOptions& options = {});

/// H_W: composition of moves[i] for i in subset (in index order). Empty
/// subset yields the identity.
MoveHandle compose_subset(std::span<const MoveHandle> moves, std::span<const std::size_t> subset);

}  // namespace graybox::moves

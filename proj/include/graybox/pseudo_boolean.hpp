#pragma once

// k-bounded pseudo-Boolean functions: Walsh expansion, variable interaction
// graph, move decomposition, the score-vector bit-flip hill climber and
// partition crossover. Everything minimizes.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graybox/bitstring.hpp"
#include "graybox/indexed_set.hpp"
#include "graybox/rng.hpp"

namespace graybox::pb {

inline constexpr int kMaxArity = 16;
inline constexpr int kMaxDecomposeSupport = 12;

struct Subfunction {
    /// 0-based variable indices; variables[0] is the least significant bit of
    /// the table index.
    std::vector<int> variables;
    std::vector<double> table;

    std::size_t index_of(const BitString& x) const;
    double evaluate(const BitString& x) const { return table[index_of(x)]; }
};

class KBoundedFunction {
public:
    KBoundedFunction() = default;
    KBoundedFunction(int n, std::vector<Subfunction> subfunctions);

    int size() const noexcept { return n_; }
    int arity_bound() const noexcept { return k_; }
    const std::vector<Subfunction>& subfunctions() const noexcept { return subfunctions_; }
    /// Indices of the subfunctions that read variable i.
    const std::vector<int>& touching(int i) const { return touching_[static_cast<std::size_t>(i)]; }
    /// Variables sharing at least one subfunction with i, i included, sorted.
    const std::vector<int>& co_occurring(int i) const { return co_occurring_[static_cast<std::size_t>(i)]; }

    double evaluate(const BitString& x) const;
    /// f(x with bit i flipped) - f(x), from the subfunctions touching i only.
    double flip_delta(const BitString& x, int i) const;
    /// f(x XOR move) - f(x), from the subfunctions touching the move only.
    double move_delta(const BitString& x, const BitString& move) const;

private:
    int n_ = 0;
    int k_ = 0;
    std::vector<Subfunction> subfunctions_;
    std::vector<std::vector<int>> touching_;
    std::vector<std::vector<int>> co_occurring_;
};

/// Sparse Walsh expansion, normalized so that f(x) = sum_l w_l phi_l(x).
class WalshExpansion {
public:
    WalshExpansion() = default;
    explicit WalshExpansion(int n) : n_(n) {}

    int size() const noexcept { return n_; }
    const std::map<BitString, double>& terms() const noexcept { return terms_; }
    void add(const BitString& mask, double coefficient);
    /// Drops terms whose magnitude is at most tolerance.
    void prune(double tolerance);
    double evaluate(const BitString& x) const;

private:
    int n_ = 0;
    std::map<BitString, double> terms_;
};

/// Coefficients below this magnitude after transforming a subfunction are
/// treated as exact cancellation.
inline constexpr double kWalshZeroTolerance = 1e-12;

WalshExpansion walsh_decompose(const KBoundedFunction& f);

class VariableInteractionGraph {
public:
    VariableInteractionGraph() = default;
    explicit VariableInteractionGraph(int n) : adjacency_(static_cast<std::size_t>(n)) {}

    int size() const noexcept { return static_cast<int>(adjacency_.size()); }
    void add_edge(int a, int b);
    bool has_edge(int a, int b) const;
    const std::vector<int>& neighbours(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    std::vector<std::pair<int, int>> edges() const;

    /// Connected components of the subgraph induced by the set bits of mask,
    /// as masks, ordered by lowest member.
    std::vector<BitString> components(const BitString& mask) const;

private:
    std::vector<std::vector<int>> adjacency_;
};

VariableInteractionGraph build_vig(const WalshExpansion& w);

/// Structural test: some VIG edge joins ones(g) and ones(h). Supports must
/// be disjoint (ContractError otherwise).
bool moves_interact_vig(const BitString& g, const BitString& h, const VariableInteractionGraph& vig);

/// Parity test: some nonzero term l has phi_l(g) = phi_l(h) = -1.
bool moves_interact_walsh(const BitString& g, const BitString& h, const WalshExpansion& w);

/// Splits g into two disjoint non-interacting nonzero moves (h1 holds the
/// lowest set bit of g), or nullopt if none exists.
std::optional<std::pair<BitString, BitString>> decompose_move(const BitString& g, const WalshExpansion& w);

enum class Selection { Random, FirstImproving };

struct ClimbOptions {
    std::uint64_t seed = 0;
    Selection selection = Selection::Random;
    std::uint64_t budget = UINT64_MAX;
};

struct ClimbStep {
    int variable = 0;
    double fitness = 0.0;
};

struct ClimbResult {
    BitString solution;
    double fitness = 0.0;
    std::uint64_t moves = 0;
    bool budget_exhausted = false;
    std::vector<ClimbStep> trace;
    /// Largest number of scores refreshed after a single flip.
    std::size_t max_updates = 0;
};

/// Single-bit-flip hill climber with an incrementally maintained score vector.
class BitFlipClimber {
public:
    BitFlipClimber(const KBoundedFunction& f, BitString start, ClimbOptions options = {});

    const BitString& solution() const noexcept { return x_; }
    double fitness() const noexcept { return fitness_; }
    const std::vector<double>& scores() const noexcept { return scores_; }
    const IndexedSet& improving() const noexcept { return improving_; }
    std::size_t last_updates() const noexcept { return last_updates_; }
    int last_variable() const noexcept { return last_variable_; }
    std::uint64_t moves() const noexcept { return moves_; }

    /// Applies one improving flip; false at a local optimum.
    bool step();
    ClimbResult run();

private:
    void refresh(int i);

    const KBoundedFunction& f_;
    BitString x_;
    ClimbOptions options_;
    Rng rng_;
    double fitness_ = 0.0;
    std::vector<double> scores_;
    IndexedSet improving_;
    std::size_t last_updates_ = 0;
    int last_variable_ = -1;
    std::uint64_t moves_ = 0;
};

ClimbResult bitflip_hill_climb(const KBoundedFunction& f, const BitString& start, const ClimbOptions& options = {});

struct BinaryComponent {
    BitString mask;
    double delta = 0.0;
    bool applied = false;
};

struct BinaryPxResult {
    BitString offspring;
    double fitness = 0.0;
    std::vector<BinaryComponent> components;
};

/// Partition crossover: components are the VIG components of the bits where
/// the parents differ; each is taken from p2 iff its delta at p1 is negative.
BinaryPxResult px_binary(const KBoundedFunction& f, const VariableInteractionGraph& vig, const BitString& p1,
                         const BitString& p2);
BinaryPxResult px_binary(const KBoundedFunction& f, const BitString& p1, const BitString& p2);

// Instance I/O. Text format: "n m k", then m blocks "a i1 .. ia" followed by
// 2^a table values (1-based indices, i1 least significant).
KBoundedFunction parse_instance(std::istream& in, const std::string& source = "<stream>");
KBoundedFunction load_instance(const std::string& path);
void write_instance(std::ostream& out, const KBoundedFunction& f);

/// NK-style instance: n subfunctions, subfunction i reads variable i plus
/// k-1 distinct random others; integer table values in [0, 100).
KBoundedFunction generate_nk(int n, int k, std::uint64_t seed);

}  // namespace graybox::pb

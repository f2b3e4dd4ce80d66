#pragma once

// Permutation problems: the linear ordering problem (minimize the sum of the
// upper triangle of the reordered matrix) and single machine total weighted
// tardiness. Both share the property that reordering a block of consecutive
// positions leaves the contribution of every element outside the block
// unchanged, so a window move is priced from the window alone.
//
// Note the LOP sign: the classical problem maximizes the upper triangle;
// here it is minimized. Negate the matrix to solve the classical variant.

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "graybox/permutation.hpp"

namespace graybox::perm {

class PermutationProblem {
public:
    virtual ~PermutationProblem() = default;

    virtual int size() const = 0;
    virtual std::string kind() const = 0;
    virtual double evaluate(const Permutation& sigma) const = 0;

    /// Delta of reordering a window of consecutive elements by pattern
    /// (new window[k] = old window[pattern[k]]). offset is the total length
    /// of the elements scheduled before the window.
    virtual double window_delta(std::span<const int> window, std::span<const int> pattern, double offset) const = 0;

    /// Length an element contributes to the offset of later positions
    /// (processing time for scheduling, 0 for ordering problems).
    virtual double length(int /*element*/) const { return 0.0; }
};

struct LopInstance {
    int n = 0;
    std::vector<double> matrix;  // row-major n x n

    double at(int i, int j) const { return matrix[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; }
};

class LopProblem final : public PermutationProblem {
public:
    explicit LopProblem(LopInstance instance);

    const LopInstance& instance() const noexcept { return instance_; }
    int size() const override { return instance_.n; }
    std::string kind() const override { return "lop"; }
    double evaluate(const Permutation& sigma) const override;
    double window_delta(std::span<const int> window, std::span<const int> pattern, double offset) const override;

private:
    LopInstance instance_;
};

struct SmtwtpInstance {
    int n = 0;
    std::vector<double> processing;
    std::vector<double> weight;
    std::vector<double> due;
};

class SmtwtpProblem final : public PermutationProblem {
public:
    explicit SmtwtpProblem(SmtwtpInstance instance);

    const SmtwtpInstance& instance() const noexcept { return instance_; }
    int size() const override { return instance_.n; }
    std::string kind() const override { return "smtwtp"; }
    double evaluate(const Permutation& sigma) const override;
    double window_delta(std::span<const int> window, std::span<const int> pattern, double offset) const override;
    double length(int element) const override { return instance_.processing[static_cast<std::size_t>(element)]; }

private:
    SmtwtpInstance instance_;
};

/// Sum of lengths of the elements at positions [0, position).
double offset_before(const PermutationProblem& problem, const Permutation& sigma, int position);

/// Delta of applying pattern to positions [first, first + pattern.size()),
/// priced from the window only.
double window_delta(const PermutationProblem& problem, const Permutation& sigma, int first,
                    std::span<const int> pattern);

/// Same, with the move given as a full-size permutation that must fix every
/// position outside [first, last] (0-based, inclusive).
double window_delta(const PermutationProblem& problem, const Permutation& sigma, int first, int last,
                    const Permutation& move);

/// Directed arc (from, to) between 1-based city labels.
using Arc = std::pair<int, int>;

struct ArcDiff {
    std::set<Arc> removed;
    std::set<Arc> added;
};

/// Tour as a cyclic sequence of city labels.
class TourArcs {
public:
    explicit TourArcs(std::vector<int> cities);

    const std::vector<int>& cities() const noexcept { return cities_; }
    std::set<Arc> arcs() const;
    /// Removes city from its position and reinserts it just before `before`.
    TourArcs insert_before(int city, int before) const;
    bool is_hamiltonian_cycle_of(const std::set<Arc>& arcs) const;

private:
    std::vector<int> cities_;
};

/// Arcs removed and added by the insertion of city i before city j. With
/// several moves, they are replayed in order and the net difference returned.
ArcDiff insertion_move_edges(const TourArcs& tour, int i, int j);
ArcDiff insertion_move_edges(const TourArcs& tour, std::span<const std::pair<int, int>> moves);

// File formats. LOP: optional name line, n, then n rows of n values.
// SMTWTP: n, then one line each of processing times, weights, due dates.
LopInstance parse_lop(std::istream& in, const std::string& source = "<stream>");
SmtwtpInstance parse_smtwtp(std::istream& in, const std::string& source = "<stream>");
LopInstance load_lop(const std::string& path);
SmtwtpInstance load_smtwtp(const std::string& path);
void write_lop(std::ostream& out, const LopInstance& instance);
void write_smtwtp(std::ostream& out, const SmtwtpInstance& instance);

/// Integer entries in [0, 100), zero diagonal.
LopInstance generate_lop(int n, std::uint64_t seed);

/// Processing times in [1, 100], weights in [1, 10], due dates uniform in
/// [P(1 - tf - rdd/2), P(1 - tf + rdd/2)] (clamped at 0), P the total
/// processing time.
SmtwtpInstance generate_smtwtp(int n, std::uint64_t seed, double tardiness_factor = 0.6,
                               double due_date_range = 0.4);

std::unique_ptr<PermutationProblem> load_problem(const std::string& kind, const std::string& path);

}  // namespace graybox::perm

#pragma once

// Fourier analysis on the two groups the operators live on: Z_2^n (Walsh
// functions) and S_n (Young orthogonal representation).
//
// Function tables over S_n are indexed by Permutation::rank(); tables over
// Z_2^n are indexed by BitString::to_index() (variable 1 least significant).
// Moves act on the left: a move h sends g to h * g.

#include <Eigen/Dense>
#include <span>
#include <string>
#include <vector>

#include "graybox/bitstring.hpp"
#include "graybox/move_algebra.hpp"
#include "graybox/permutation.hpp"

namespace graybox::fourier {

inline constexpr int kMaxSymmetricDegree = 7;
inline constexpr double kCertificateTolerance = 1e-9;

/// (-1)^(lambda . x).
int walsh(const BitString& lambda, const BitString& x);

/// Integer partition in non-increasing order, e.g. {2, 1}.
using Partition = std::vector<int>;

/// All partitions of n, in reverse lexicographic order starting from {n}.
std::vector<Partition> partitions(int n);
std::string partition_label(const Partition& shape);

/// One irrep of S_n in Young's orthogonal form. The basis is the set of
/// standard tableaux of the shape, ordered lexicographically by the row
/// index of 1, 2, ..., n.
class YoungIrrep {
public:
    explicit YoungIrrep(Partition shape);

    const Partition& shape() const noexcept { return shape_; }
    int degree() const noexcept { return degree_; }
    int dimension() const noexcept { return static_cast<int>(contents_.size()); }
    std::string label() const { return partition_label(shape_); }

    /// Matrix of the adjacent transposition exchanging k and k+1 (0-based k).
    const Eigen::MatrixXd& adjacent(int k) const { return adjacent_[static_cast<std::size_t>(k)]; }

    Eigen::MatrixXd operator()(const Permutation& g) const;

private:
    Partition shape_;
    int degree_ = 0;
    // contents_[t][v]: column minus row of element v in tableau t.
    std::vector<std::vector<int>> contents_;
    std::vector<Eigen::MatrixXd> adjacent_;
};

/// One irrep per partition of n, 1 <= n <= 7.
std::vector<YoungIrrep> yor_irreps(int n);

/// S_n with its elements in rank order.
class SymmetricGroup {
public:
    explicit SymmetricGroup(int n);

    int degree() const noexcept { return n_; }
    std::size_t order() const noexcept { return elements_.size(); }
    const Permutation& element(std::size_t index) const { return elements_[index]; }
    const std::vector<Permutation>& elements() const noexcept { return elements_; }
    std::size_t index_of(const Permutation& g) const { return static_cast<std::size_t>(g.rank()); }

private:
    int n_;
    std::vector<Permutation> elements_;
};

struct FourierCoefficient {
    Partition shape;
    Eigen::MatrixXd value;
};

struct WalshCoefficient {
    BitString mask;
    double value = 0.0;
};

/// sum_g f(g) rho(g), with f given as a rank-indexed table over S_n.
FourierCoefficient fourier_transform(std::span<const double> table, const YoungIrrep& rho);
std::vector<FourierCoefficient> fourier_transform(std::span<const double> table, std::span<const YoungIrrep> irreps);

/// (1/|G|) sum_rho d_rho Tr(fhat(rho) rho(g)^-1). Requires one coefficient
/// for every partition of g.size().
double inverse_fourier(std::span<const FourierCoefficient> coeffs, const Permutation& g);

/// sum_x f(x) phi_lambda(x) for a single lambda.
double fourier_transform(std::span<const double> table, const BitString& lambda);
/// Full spectrum via the fast Walsh-Hadamard transform; table.size() = 2^n.
std::vector<double> walsh_spectrum(std::span<const double> table);
/// Reconstruction from the full spectrum (size 2^n).
double inverse_fourier(std::span<const double> spectrum, const BitString& x);
/// Nonzero entries of a full spectrum as sparse coefficients.
std::vector<WalshCoefficient> sparse_spectrum(std::span<const double> spectrum, int n, double zero_tolerance = 0.0);

/// (rho(h1^-1) - I)(rho(h2^-1) - I) fhat(rho) == 0 for every supplied
/// coefficient. Throws ContractError when h1 and h2 do not commute.
bool non_interaction_certificate(std::span<const FourierCoefficient> coeffs, const Permutation& h1,
                                 const Permutation& h2, double tolerance = kCertificateTolerance);
bool non_interaction_certificate(std::span<const WalshCoefficient> coeffs, const BitString& h1,
                                 const BitString& h2, double tolerance = kCertificateTolerance);

// Adapters onto the move algebra, for definitional cross-checks.
moves::SearchSpace symmetric_space(const SymmetricGroup& group, std::span<const double> table);
moves::MoveHandle left_move(const SymmetricGroup& group, const Permutation& h);
moves::SearchSpace hypercube_space(int n, std::span<const double> table);
moves::MoveHandle xor_move(const BitString& h);

}  // namespace graybox::fourier

#include "graybox/group_fourier.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "graybox/errors.hpp"

namespace graybox::fourier {

namespace {

void partitions_rec(int remaining, int max_part, Partition& current, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        partitions_rec(remaining - part, part, current, out);
        current.pop_back();
    }
}

// Fills 0..n-1 into the shape; rows[v] records the row of element v.
void tableaux_rec(const Partition& shape, int next, std::vector<int>& row_fill, std::vector<int>& rows,
                  std::vector<std::vector<int>>& out_contents) {
    const int n = static_cast<int>(rows.size());
    if (next == n) {
        std::vector<int> fill(shape.size(), 0);
        std::vector<int> contents(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            const int r = rows[static_cast<std::size_t>(v)];
            contents[static_cast<std::size_t>(v)] = fill[static_cast<std::size_t>(r)]++ - r;
        }
        out_contents.push_back(std::move(contents));
        return;
    }
    for (std::size_t r = 0; r < shape.size(); ++r) {
        if (row_fill[r] >= shape[r]) continue;
        if (r > 0 && row_fill[r - 1] <= row_fill[r]) continue;
        ++row_fill[r];
        rows[static_cast<std::size_t>(next)] = static_cast<int>(r);
        tableaux_rec(shape, next + 1, row_fill, rows, out_contents);
        --row_fill[r];
    }
}

void require_commuting(const Permutation& h1, const Permutation& h2) {
    if (h1.size() != h2.size()) throw ContractError("certificate: moves of different degree");
    if (h1 * h2 != h2 * h1)
        throw ContractError("certificate: moves " + h1.to_cycles() + " and " + h2.to_cycles() + " do not commute");
}

int log2_exact(std::size_t size) {
    if (size == 0 || (size & (size - 1)) != 0) throw ContractError("table size must be a power of two");
    return std::countr_zero(size);
}

}  // namespace

int walsh(const BitString& lambda, const BitString& x) {
    if (lambda.size() != x.size()) throw ContractError("walsh: length mismatch");
    return lambda.dot(x) ? -1 : 1;
}

std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    Partition current;
    partitions_rec(n, n, current, out);
    return out;
}

std::string partition_label(const Partition& shape) {
    std::string s = "(";
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(shape[i]);
    }
    return s + ")";
}

YoungIrrep::YoungIrrep(Partition shape) : shape_(std::move(shape)) {
    for (std::size_t i = 0; i < shape_.size(); ++i) {
        if (shape_[i] <= 0 || (i > 0 && shape_[i] > shape_[i - 1]))
            throw ContractError("not a partition: " + partition_label(shape_));
        degree_ += shape_[i];
    }
    std::vector<int> row_fill(shape_.size(), 0);
    std::vector<int> rows(static_cast<std::size_t>(degree_), 0);
    tableaux_rec(shape_, 0, row_fill, rows, contents_);

    const int d = dimension();
    // Index of the tableau obtained by swapping k and k+1, found by content
    // vector lookup.
    auto find = [this](const std::vector<int>& contents) {
        const auto it = std::find(contents_.begin(), contents_.end(), contents);
        return it == contents_.end() ? -1 : static_cast<int>(it - contents_.begin());
    };
    for (int k = 0; k + 1 < degree_; ++k) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
        for (int t = 0; t < d; ++t) {
            const auto& c = contents_[static_cast<std::size_t>(t)];
            const int axial = c[static_cast<std::size_t>(k + 1)] - c[static_cast<std::size_t>(k)];
            const double inv = 1.0 / axial;
            m(t, t) = inv;
            if (axial == 1 || axial == -1) continue;
            auto swapped = c;
            std::swap(swapped[static_cast<std::size_t>(k)], swapped[static_cast<std::size_t>(k + 1)]);
            const int other = find(swapped);
            if (other >= 0) m(other, t) = std::sqrt(1.0 - inv * inv);
        }
        adjacent_.push_back(std::move(m));
    }
}

Eigen::MatrixXd YoungIrrep::operator()(const Permutation& g) const {
    if (g.size() != degree_) throw ContractError("irrep degree does not match permutation size");
    // Peel adjacent transpositions off the left: if g has a descent at p then
    // g = s_p * g' with g' one inversion shorter.
    std::vector<int> image = g.image();
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(dimension(), dimension());
    bool changed = true;
    while (changed) {
        changed = false;
        for (int p = 0; p + 1 < degree_; ++p) {
            if (image[static_cast<std::size_t>(p)] > image[static_cast<std::size_t>(p + 1)]) {
                m = m * adjacent_[static_cast<std::size_t>(p)];
                std::swap(image[static_cast<std::size_t>(p)], image[static_cast<std::size_t>(p + 1)]);
                changed = true;
            }
        }
    }
    return m;
}

std::vector<YoungIrrep> yor_irreps(int n) {
    if (n < 1) throw ContractError("yor_irreps: n must be positive");
    if (n > kMaxSymmetricDegree)
        throw CapacityError("yor_irreps: n = " + std::to_string(n) + " exceeds cap " +
                            std::to_string(kMaxSymmetricDegree));
    std::vector<YoungIrrep> out;
    for (auto& shape : partitions(n)) out.emplace_back(std::move(shape));
    return out;
}

SymmetricGroup::SymmetricGroup(int n) : n_(n) {
    if (n < 1) throw ContractError("SymmetricGroup: n must be positive");
    if (factorial(n) > moves::kDefaultEnumerationCap)
        throw CapacityError("S_" + std::to_string(n) + " exceeds the enumeration cap");
    const auto order = factorial(n);
    elements_.reserve(order);
    for (std::uint64_t r = 0; r < order; ++r) elements_.push_back(Permutation::unrank(n, r));
}

FourierCoefficient fourier_transform(std::span<const double> table, const YoungIrrep& rho) {
    const int n = rho.degree();
    if (table.size() != factorial(n))
        throw ContractError("fourier_transform: table must have one value per element of S_" + std::to_string(n));
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(rho.dimension(), rho.dimension());
    for (std::uint64_t r = 0; r < table.size(); ++r) {
        if (table[r] == 0.0) continue;
        sum += table[r] * rho(Permutation::unrank(n, r));
    }
    return {rho.shape(), std::move(sum)};
}

std::vector<FourierCoefficient> fourier_transform(std::span<const double> table, std::span<const YoungIrrep> irreps) {
    std::vector<FourierCoefficient> out;
    if (irreps.empty()) return out;
    const int n = irreps.front().degree();
    if (table.size() != factorial(n))
        throw ContractError("fourier_transform: table must have one value per element of S_" + std::to_string(n));
    for (const auto& rho : irreps) out.push_back({rho.shape(), Eigen::MatrixXd::Zero(rho.dimension(), rho.dimension())});
    for (std::uint64_t r = 0; r < table.size(); ++r) {
        if (table[r] == 0.0) continue;
        const auto g = Permutation::unrank(n, r);
        for (std::size_t i = 0; i < irreps.size(); ++i) out[i].value += table[r] * irreps[i](g);
    }
    return out;
}

double inverse_fourier(std::span<const FourierCoefficient> coeffs, const Permutation& g) {
    const int n = g.size();
    const auto shapes = partitions(n);
    if (coeffs.size() != shapes.size()) throw ContractError("inverse_fourier: incomplete irrep set");
    for (const auto& shape : shapes) {
        const bool present =
            std::any_of(coeffs.begin(), coeffs.end(), [&](const FourierCoefficient& c) { return c.shape == shape; });
        if (!present) throw ContractError("inverse_fourier: missing irrep " + partition_label(shape));
    }
    const auto g_inv = g.inverse();
    double sum = 0.0;
    for (const auto& c : coeffs) {
        const YoungIrrep rho(c.shape);
        sum += rho.dimension() * (c.value * rho(g_inv)).trace();
    }
    return sum / static_cast<double>(factorial(n));
}

double fourier_transform(std::span<const double> table, const BitString& lambda) {
    const int n = log2_exact(table.size());
    if (lambda.size() != n) throw ContractError("fourier_transform: mask length does not match table");
    double sum = 0.0;
    for (std::uint64_t x = 0; x < table.size(); ++x) sum += walsh(lambda, BitString::from_index(n, x)) * table[x];
    return sum;
}

std::vector<double> walsh_spectrum(std::span<const double> table) {
    log2_exact(table.size());
    std::vector<double> a(table.begin(), table.end());
    for (std::size_t len = 1; len < a.size(); len <<= 1)
        for (std::size_t i = 0; i < a.size(); i += len << 1)
            for (std::size_t j = i; j < i + len; ++j) {
                const double u = a[j], v = a[j + len];
                a[j] = u + v;
                a[j + len] = u - v;
            }
    return a;
}

double inverse_fourier(std::span<const double> spectrum, const BitString& x) {
    const int n = log2_exact(spectrum.size());
    if (x.size() != n) throw ContractError("inverse_fourier: incomplete irrep set for Z_2^" + std::to_string(x.size()));
    double sum = 0.0;
    for (std::uint64_t l = 0; l < spectrum.size(); ++l) sum += spectrum[l] * walsh(BitString::from_index(n, l), x);
    return sum / static_cast<double>(spectrum.size());
}

std::vector<WalshCoefficient> sparse_spectrum(std::span<const double> spectrum, int n, double zero_tolerance) {
    std::vector<WalshCoefficient> out;
    for (std::uint64_t l = 0; l < spectrum.size(); ++l)
        if (std::abs(spectrum[l]) > zero_tolerance) out.push_back({BitString::from_index(n, l), spectrum[l]});
    return out;
}

bool non_interaction_certificate(std::span<const FourierCoefficient> coeffs, const Permutation& h1,
                                 const Permutation& h2, double tolerance) {
    require_commuting(h1, h2);
    const auto inv1 = h1.inverse();
    const auto inv2 = h2.inverse();
    for (const auto& c : coeffs) {
        const YoungIrrep rho(c.shape);
        if (rho.degree() != h1.size()) throw ContractError("certificate: coefficient degree does not match moves");
        const auto eye = Eigen::MatrixXd::Identity(rho.dimension(), rho.dimension());
        const Eigen::MatrixXd bracket = (rho(inv1) - eye) * (rho(inv2) - eye) * c.value;
        if (bracket.cwiseAbs().maxCoeff() > tolerance) return false;
    }
    return true;
}

bool non_interaction_certificate(std::span<const WalshCoefficient> coeffs, const BitString& h1, const BitString& h2,
                                 double tolerance) {
    if (h1.size() != h2.size()) throw ContractError("certificate: moves of different length");
    for (const auto& c : coeffs) {
        // Walsh irreps are self-inverse scalars.
        const double bracket = (walsh(c.mask, h1) - 1) * (walsh(c.mask, h2) - 1) * c.value;
        if (std::abs(bracket) > tolerance) return false;
    }
    return true;
}

moves::SearchSpace symmetric_space(const SymmetricGroup& group, std::span<const double> table) {
    if (table.size() != group.order()) throw ContractError("symmetric_space: table size mismatch");
    auto values = std::make_shared<const std::vector<double>>(table.begin(), table.end());
    return {group.order(), [values](moves::SolutionId x) { return (*values)[x]; }};
}

moves::MoveHandle left_move(const SymmetricGroup& group, const Permutation& h) {
    auto target = std::make_shared<std::vector<moves::SolutionId>>(group.order());
    for (std::size_t x = 0; x < group.order(); ++x) (*target)[x] = group.index_of(h * group.element(x));
    return {[target](moves::SolutionId x) { return (*target)[x]; }, h.to_cycles()};
}

moves::SearchSpace hypercube_space(int n, std::span<const double> table) {
    if (n > 30 || table.size() != (std::size_t{1} << n)) throw ContractError("hypercube_space: table size mismatch");
    auto values = std::make_shared<const std::vector<double>>(table.begin(), table.end());
    return {table.size(), [values](moves::SolutionId x) { return (*values)[x]; }};
}

moves::MoveHandle xor_move(const BitString& h) {
    const auto mask = static_cast<moves::SolutionId>(h.to_index());
    return {[mask](moves::SolutionId x) { return x ^ mask; }, h.to_string()};
}

}  // namespace graybox::fourier

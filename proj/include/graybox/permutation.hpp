#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace graybox {

/// Bijection on {0..n-1}. For a solution, image(p) is the element placed at
/// position p. For a move, image(p) is the position whose element lands at p.
///
/// The group product follows the left-to-right convention: (a * b)(i) = b(a(i)),
/// i.e. a is applied first. Under this product a move h acts on a solution
/// sigma as h * sigma, which rearranges positions, and the Young orthogonal
/// representation is a homomorphism.
///
/// Text I/O is 1-based, both in one-line form ("2 1 3") and in cycle form
/// ("(1 2)", identity "(1)").
class Permutation {
public:
    Permutation() = default;
    /// Identity on n elements.
    explicit Permutation(int n);
    /// 0-based one-line form; throws ContractError if not a bijection.
    explicit Permutation(std::vector<int> image);

    static Permutation identity(int n) { return Permutation(n); }
    static Permutation from_one_based(std::span<const int> image);
    static Permutation parse_one_line(std::string_view text);
    static Permutation parse_cycles(std::string_view text, int n);
    static Permutation transposition(int n, int a, int b);

    int size() const noexcept { return static_cast<int>(image_.size()); }
    int operator()(int i) const noexcept { return image_[static_cast<std::size_t>(i)]; }
    int operator[](int i) const noexcept { return image_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& image() const noexcept { return image_; }

    Permutation inverse() const;
    bool is_identity() const noexcept;

    /// Rearranges positions [first, first + pattern.size()) so that the element
    /// previously at first + pattern[k] moves to first + k.
    void apply_window(int first, std::span<const int> pattern);

    std::string to_one_line() const;
    std::string to_cycles() const;

    /// Lehmer rank in lexicographic order; n <= 20.
    std::uint64_t rank() const;
    static Permutation unrank(int n, std::uint64_t rank);

    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> image_;
};

std::uint64_t factorial(int n);

}  // namespace graybox

#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace graybox {

/// Element of Z_2^n. Used both as a solution and as a move (x -> x XOR g).
///
/// Text form lists variable 1 first: "110" has bits 1 and 2 set. The integer
/// form used for table indexing puts variable 1 in the least significant bit.
class BitString {
public:
    BitString() = default;
    explicit BitString(int n);

    static BitString from_string(std::string_view text);
    static BitString from_index(int n, std::uint64_t index);
    static BitString single(int n, int bit);

    int size() const noexcept { return n_; }

    bool test(int i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i, bool value = true) noexcept;
    void flip(int i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    int count() const noexcept;
    bool none() const noexcept;
    bool intersects(const BitString& other) const noexcept;

    /// Parity of the dot product over Z_2, i.e. popcount(this & other) mod 2.
    int dot(const BitString& other) const noexcept;

    std::vector<int> ones() const;

    /// Requires size() <= 63.
    std::uint64_t to_index() const noexcept { return words_.empty() ? 0 : words_[0]; }

    std::string to_string() const;

    BitString& operator^=(const BitString& other) noexcept;
    BitString& operator&=(const BitString& other) noexcept;
    BitString& operator|=(const BitString& other) noexcept;

    friend BitString operator^(BitString a, const BitString& b) noexcept { return a ^= b; }
    friend BitString operator&(BitString a, const BitString& b) noexcept { return a &= b; }
    friend BitString operator|(BitString a, const BitString& b) noexcept { return a |= b; }

    friend bool operator==(const BitString&, const BitString&) = default;
    /// Orders by length, then by text form (variable 1 most significant).
    friend std::strong_ordering operator<=>(const BitString& a, const BitString& b) noexcept;

    std::size_t hash() const noexcept;

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace graybox

template <>
struct std::hash<graybox::BitString> {
    std::size_t operator()(const graybox::BitString& b) const noexcept { return b.hash(); }
};

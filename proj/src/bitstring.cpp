#include "graybox/bitstring.hpp"

#include "graybox/errors.hpp"

namespace graybox {

namespace {
std::size_t word_count(int n) { return static_cast<std::size_t>((n + 63) / 64); }
}  // namespace

BitString::BitString(int n) : n_(n), words_(word_count(n), 0) {
    if (n < 0) throw ContractError("BitString length must be non-negative");
}

BitString BitString::from_string(std::string_view text) {
    BitString b(static_cast<int>(text.size()));
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1')
            b.set(static_cast<int>(i));
        else if (text[i] != '0')
            throw ContractError("bit string may only contain '0' and '1': " + std::string(text));
    }
    return b;
}

BitString BitString::from_index(int n, std::uint64_t index) {
    if (n > 63) throw ContractError("from_index supports at most 63 bits");
    BitString b(n);
    if (n > 0) b.words_[0] = index & ((std::uint64_t{1} << n) - 1);
    return b;
}

BitString BitString::single(int n, int bit) {
    BitString b(n);
    b.set(bit);
    return b;
}

void BitString::set(int i, bool value) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value)
        words_[i >> 6] |= mask;
    else
        words_[i >> 6] &= ~mask;
}

int BitString::count() const noexcept {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

bool BitString::none() const noexcept {
    for (auto w : words_)
        if (w) return false;
    return true;
}

bool BitString::intersects(const BitString& other) const noexcept {
    for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

int BitString::dot(const BitString& other) const noexcept {
    int c = 0;
    for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i)
        c += std::popcount(words_[i] & other.words_[i]);
    return c & 1;
}

std::vector<int> BitString::ones() const {
    std::vector<int> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        auto word = words_[w];
        while (word) {
            out.push_back(static_cast<int>(w * 64) + std::countr_zero(word));
            word &= word - 1;
        }
    }
    return out;
}

std::string BitString::to_string() const {
    std::string s(static_cast<std::size_t>(n_), '0');
    for (int i = 0; i < n_; ++i)
        if (test(i)) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

BitString& BitString::operator^=(const BitString& other) noexcept {
    for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

BitString& BitString::operator&=(const BitString& other) noexcept {
    for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

BitString& BitString::operator|=(const BitString& other) noexcept {
    for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

std::strong_ordering operator<=>(const BitString& a, const BitString& b) noexcept {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
        const auto diff = a.words_[i] ^ b.words_[i];
        if (diff == 0) continue;
        const auto low = diff & (~diff + 1);
        return (a.words_[i] & low) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

std::size_t BitString::hash() const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(n_);
    for (auto w : words_) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

}  // namespace graybox
